#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodge/engine.hpp"
#include "support/naive_poly.hpp"

#include <vector>

using hodge::Engine;
using hodge::EngineConfig;
using hodge::Family;
using hodge::Rational;
using hodge::Series;
using hodge::make_rational;

namespace {

Rational Q(long num, long den = 1)
{
    return make_rational(num, den);
}

Series from_oracle(const oracle::Poly& p)
{
    return Series(std::vector<Rational>(p.begin(), p.end()));
}

} // namespace

TEST_CASE("configuration is validated")
{
    CHECK_THROWS_AS(Engine({1, 5}), std::invalid_argument);
    CHECK_THROWS_AS(Engine({0, 5}), std::invalid_argument);
    CHECK_THROWS_AS(Engine({2, 0}), std::invalid_argument);
    const Engine engine({2, 3});
    CHECK(engine.order() == 8);
    CHECK(engine.degree() == 2);
    CHECK(engine.max_genus() == 3);
}

TEST_CASE("d1 series")
{
    SUBCASE("d = 2 equals -ln cos(u/2)") {
        const Engine engine({2, 9}); // order 20
        const Series& d1 = engine.d1();
        CHECK(d1.coeff(0) == 0);
        CHECK(d1.coeff(1) == 0);
        CHECK(d1.coeff(2) == Q(1, 8));
        CHECK(d1.coeff(4) == Q(1, 192));
        CHECK(d1.coeff(6) == Q(1, 2880));
        CHECK(d1.is_even());
        CHECK(d1 == from_oracle(oracle::scale_argument(oracle::neg_log_cos(20), oracle::q(1, 2))));
        CHECK(d1 == from_oracle(oracle::d1_oracle(2, 20)));
    }

    SUBCASE("d = 3 matches the ln sinc difference") {
        const Engine engine({3, 8});
        const Series& d1 = engine.d1();
        CHECK(d1.coeff(2) == Q(1, 3));
        CHECK(d1.coeff(4) == Q(1, 36));
        CHECK(d1 == from_oracle(oracle::d1_oracle(3, engine.order())));
    }

    SUBCASE("vanishing low terms and evenness for several degrees") {
        for (int d = 2; d <= 7; ++d) {
            const Engine engine({d, 4});
            CHECK(engine.d1().coeff(0) == 0);
            CHECK(engine.d1().coeff(1) == 0);
            CHECK(engine.d1().is_even());
            CHECK(engine.d1() == from_oracle(oracle::d1_oracle(d, engine.order())));
        }
    }
}

TEST_CASE("upsilon table")
{
    for (int d = 2; d <= 10; ++d) {
        const Engine engine({d, 3});
        CHECK(engine.upsilon().at(0) == Q(d * d - 1, 24));
    }
    const Engine engine({2, 4});
    CHECK(engine.upsilon().size() == 4);
    CHECK(engine.upsilon().at(1) == Q(1, 192));
    CHECK_THROWS_AS(engine.upsilon().at(4), std::out_of_range);
    CHECK_THROWS_AS(engine.upsilon().at(-1), std::out_of_range);
}

TEST_CASE("di closed form")
{
    const Engine engine({2, 6});
    CHECK(engine.d_raw(1, 1) == Q(1, 4));
    CHECK(engine.d_raw(1, 2) == Q(1, 8));
    CHECK(engine.d_raw(1, 3) == Q(1, 4));
    CHECK(engine.d_raw(2, 2) == Q(3, 8));
    CHECK(engine.d_raw(2, 3) == Q(15, 16));
    CHECK(engine.d_raw(3, 3) == Q(15, 16));

    for (int i = 1; i <= 6; ++i) {
        const Series series = engine.di_closed(i);
        CHECK(series.valuation() == 2 * i);
        CHECK(series.is_even());
        for (int g = 0; g < i; ++g)
            CHECK(engine.d_raw(i, g) == 0);
    }

    // D_2^2 = d (d^2-1)^2 / 48, cross-checked against the recursion.
    for (int d = 2; d <= 5; ++d) {
        const Engine by_degree({d, 4});
        const Rational expected = Q(d) * Q((d * d - 1)) * Q(d * d - 1) / Q(48);
        CHECK(by_degree.d_raw(2, 2) == expected);
        CHECK(hodge::raw_from_egf(by_degree.di_recursive(2).coeff(4), 4) == expected);
    }

    CHECK_THROWS_AS(engine.di_closed(0), std::invalid_argument);
    CHECK_THROWS_AS(engine.di_closed(7), std::invalid_argument);
}

TEST_CASE("di recursion agrees with the closed form")
{
    for (int d = 2; d <= 5; ++d) {
        const Engine engine({d, 7});
        for (int i = 2; i <= 6; ++i)
            CHECK(engine.di_closed(i) == engine.di_recursive(i));
    }
    const Engine engine({2, 4});
    CHECK_THROWS_AS(engine.di_recursive(1), std::invalid_argument);
    CHECK_THROWS_AS(engine.di_recursive(5), std::invalid_argument);
}

TEST_CASE("total series")
{
    SUBCASE("constant term 1/d") {
        for (int d = 2; d <= 6; ++d) {
            const Engine engine({d, 3});
            CHECK(engine.t_total().coeff(0) == Q(1, d));
        }
    }

    SUBCASE("d = 2 is sec^2(u/2)/2") {
        const Engine engine({2, 8});
        const oracle::Poly sec = oracle::scale_argument(oracle::sec_series(engine.order()), oracle::q(1, 2));
        const Series expected = from_oracle(oracle::scale(oracle::mul(sec, sec), oracle::q(1, 2)));
        CHECK(engine.t_total() == expected);
        CHECK(engine.t_raw(0) == Q(1, 2));
        CHECK(engine.t_raw(1) == Q(1, 4));
        CHECK(engine.t_raw(2) == Q(1, 2));
        CHECK(engine.t_raw(3) == Q(17, 8));
    }

    SUBCASE("exponential and product forms agree to order 20") {
        for (int d = 2; d <= 6; ++d) {
            const hodge::Series exp_form = hodge::total_exp_form(d, 20);
            CHECK(exp_form == hodge::total_product_form(d, 20));
            CHECK(exp_form.is_even());
        }
    }

    SUBCASE("row sums") {
        for (int d = 2; d <= 4; ++d) {
            const Engine engine({d, 6});
            CHECK(engine.t_raw(0) == Q(1, d));
            for (int g = 1; g <= 6; ++g) {
                Rational row(0);
                for (int i = 1; i <= g; ++i)
                    row += engine.d_raw(i, g);
                CHECK(engine.t_raw(g) == row);
            }
        }
    }
}

TEST_CASE("vi closed form")
{
    const Engine engine({2, 6});

    SUBCASE("i = 0 is (1/2) e^{u^2/4}") {
        const Series v0 = engine.vi_closed(0);
        CHECK(v0 == from_oracle(oracle::scale(oracle::exp_monomial(oracle::q(1, 4), 2, engine.order()),
                                              oracle::q(1, 2))));
        CHECK(engine.v_raw(0, 0) == Q(1, 2));
        CHECK(engine.v_raw(0, 1) == Q(1, 4));
        CHECK(engine.v_raw(0, 2) == Q(3, 8));
    }

    SUBCASE("i = 1 spot values") {
        CHECK(engine.v_raw(1, 2) == Q(1, 8));
        CHECK(engine.v_raw(1, 3) == Q(15, 16));
        // The same numbers grouped diagonally: D_1^2 and D_2^3.
        CHECK(engine.v_raw(1, 2) == engine.d_raw(1, 2));
        CHECK(engine.v_raw(1, 3) == engine.d_raw(2, 3));
    }

    SUBCASE("i = 1 is Upsilon_1 u^4 e^{u^2/4}") {
        oracle::Poly expected = oracle::scale(oracle::exp_monomial(oracle::q(1, 4), 2, engine.order()),
                                              oracle::q(1, 192));
        oracle::Poly shift = oracle::zero(engine.order());
        shift[4] = 1;
        CHECK(engine.vi_closed(1) == from_oracle(oracle::mul(expected, shift)));
    }

    SUBCASE("vanishing below the triangle") {
        for (int i = 0; i <= 5; ++i) {
            const Series series = engine.vi_closed(i);
            CHECK(series.is_even());
            for (int g = 1; g <= i; ++g)
                CHECK(series.coeff(2 * g) == 0);
            if (i > 0)
                CHECK(series.coeff(0) == 0);
        }
        CHECK(engine.vi_closed(0).coeff(0) == Q(1, 2));
    }

    CHECK_THROWS_AS(engine.vi_closed(-1), std::invalid_argument);
    CHECK_THROWS_AS(engine.vi_closed(6), std::invalid_argument);
}

TEST_CASE("vi recursion agrees with the closed form")
{
    for (int d = 2; d <= 5; ++d) {
        const Engine engine({d, 7});
        CHECK(engine.v_raw(0, 1) == Q(d * d - 1, 12)); // raw seed 2 Upsilon_0
        for (int i = 0; i <= 5; ++i)
            CHECK(engine.vi_closed(i) == engine.vi_recursive(i));
    }
    const Engine engine({2, 4});
    CHECK_THROWS_AS(engine.vi_recursive(4), std::invalid_argument);
}

TEST_CASE("identity residuals")
{
    const Engine engine({2, 6});

    SUBCASE("diagonal identity vanishes for i >= 2") {
        for (int i = 2; i <= 6; ++i)
            CHECK(engine.d_identity_residual(i).is_zero());
    }

    SUBCASE("at i = 1 the diagonal sum is D1'/d, not zero") {
        const Series residual = engine.d_identity_residual(1);
        CHECK_FALSE(residual.is_zero());
        CHECK(residual == hodge::derivative(engine.d1()) / Q(2));
    }

    SUBCASE("vertical identity vanishes for 0 <= i <= G-1") {
        for (int d = 2; d <= 4; ++d) {
            const Engine by_degree({d, 6});
            for (int i = 0; i <= 5; ++i)
                CHECK(by_degree.v_identity_residual(i).is_zero());
        }
    }

    // The closed forms satisfy both identities for arbitrary initial data,
    // so a meaningful negative control perturbs one series against the rest
    // of the family rather than rebuilding everything from the bad seed.
    SUBCASE("negative control: corrupted D1 coefficient") {
        const Series bad_d1 = engine.d1().with_coeff(4, engine.d1().coeff(4) + Q(1, 7));
        std::vector<Series> diag;
        diag.push_back(Series::constant(Q(1, 2), engine.order()));
        diag.push_back(bad_d1);
        diag.push_back(engine.di_closed(2));
        diag.push_back(engine.di_closed(3));
        CHECK_FALSE(hodge::diagonal_identity_residual(diag, 2).is_zero());
        CHECK_FALSE(hodge::diagonal_identity_residual(diag, 3).is_zero());
    }

    SUBCASE("negative control: corrupted Upsilon_1 inside V_1 only") {
        hodge::UpsilonTable bad = engine.upsilon();
        bad.values[1] += Q(1, 5);
        std::vector<Series> vert;
        vert.push_back(engine.vi_closed(0));
        vert.push_back(hodge::vertical_series_from_upsilon(2, bad, 1, engine.order()));
        CHECK_FALSE(hodge::vertical_identity_residual(vert, engine.upsilon().at(1), 2, 1).is_zero());
    }

    CHECK_THROWS_AS(engine.d_identity_residual(0), std::invalid_argument);
    CHECK_THROWS_AS(engine.v_identity_residual(6), std::invalid_argument);
}

TEST_CASE("repackaging ties the two families together")
{
    for (int d = 2; d <= 4; ++d) {
        const Engine engine({d, 6});
        for (int g = 1; g <= 6; ++g)
            for (int i = 1; i <= g; ++i)
                CHECK(engine.d_raw(i, g) == engine.v_raw(g - i, g));
    }
    const Engine engine({2, 3});
    CHECK(engine.d_raw(2, 3) == Q(15, 16));
    CHECK(engine.v_raw(1, 3) == Q(15, 16));
}

TEST_CASE("cross check report")
{
    SUBCASE("d=2 G=6 imax=4 passes") {
        const Engine engine({2, 6});
        const auto report = engine.cross_check(4);
        CHECK(report.all_passed());
        // 3 D comparisons + 5 V comparisons + repackaging + row sums + 2 residual groups.
        CHECK(report.checks.size() == 12);
        for (const auto& check : report.checks) {
            CAPTURE(check.name);
            CAPTURE(check.detail);
            CHECK(check.passed);
        }
    }

    SUBCASE("d=5 G=5 imax=3 passes") {
        const Engine engine({5, 5});
        CHECK(engine.cross_check(3).all_passed());
    }

    SUBCASE("deeper sweep") {
        for (int d = 2; d <= 3; ++d) {
            const Engine engine({d, 10});
            const auto report = engine.cross_check(6);
            for (const auto& check : report.checks) {
                CAPTURE(check.name);
                CAPTURE(check.detail);
                CHECK(check.passed);
            }
        }
    }

    SUBCASE("all_passed reflects entries") {
        hodge::CrossCheckReport report;
        CHECK(report.all_passed());
        report.checks.push_back({"ok", true, ""});
        CHECK(report.all_passed());
        report.checks.push_back({"bad", false, "detail"});
        CHECK_FALSE(report.all_passed());
    }

    SUBCASE("imax out of range") {
        const Engine engine({2, 3});
        CHECK_THROWS_AS(engine.cross_check(4), std::invalid_argument);
    }
}

TEST_CASE("integral table and verification")
{
    const Engine engine({2, 3});

    SUBCASE("D table") {
        const auto table = engine.build_table(Family::D);
        CHECK(table.size() == 6); // (i,g) with 1 <= i <= g <= 3
        const auto* entry = table.find({Family::D, 2, 3});
        REQUIRE(entry != nullptr);
        CHECK(entry->value == Q(15, 16));
        CHECK(entry->provenance == hodge::Provenance::ClosedForm);
        CHECK(table.find({Family::D, 3, 2}) == nullptr);
    }

    SUBCASE("V table includes the unstable term") {
        const auto table = engine.build_table(Family::V);
        const auto* unstable = table.find({Family::V, 0, 0});
        REQUIRE(unstable != nullptr);
        CHECK(unstable->value == Q(1, 2));
        CHECK(table.size() == 7); // V_0^0 plus V_0^{1..3}, V_1^{2,3}, V_2^3
        const auto* top = table.find({Family::V, 2, 3});
        REQUIRE(top != nullptr);
        CHECK(top->value == hodge::raw_from_egf(engine.upsilon().at(2), 6));
    }

    SUBCASE("T table") {
        const auto table = engine.build_table(Family::T);
        CHECK(table.size() == 4);
        const auto* t0 = table.find({Family::T, -1, 0});
        REQUIRE(t0 != nullptr);
        CHECK(t0->value == Q(1, 2));
    }

    SUBCASE("verification certifies all three families") {
        CHECK_FALSE(engine.verify_family(Family::D).has_value());
        CHECK_FALSE(engine.verify_family(Family::V).has_value());
        CHECK_FALSE(engine.verify_family(Family::T).has_value());
    }
}

TEST_CASE("positivity monitor for d = 2")
{
    // Sanity monitor, not an asserted identity: every raw value of the
    // d = 2 table in the computed range has been positive so far.
    const Engine engine({2, 8});
    for (int g = 1; g <= 8; ++g)
        for (int i = 1; i <= g; ++i)
            WARN(engine.d_raw(i, g) > 0);
    for (int g = 0; g <= 8; ++g)
        WARN(engine.t_raw(g) > 0);
}
