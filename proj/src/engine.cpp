#include "hodge/engine.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace hodge {

const Rational& UpsilonTable::at(int i) const
{
    if (i < 0 || i >= size())
        throw std::out_of_range("UpsilonTable: index out of range");
    return values[static_cast<size_t>(i)];
}

char family_letter(Family family)
{
    switch (family) {
    case Family::D: return 'D';
    case Family::V: return 'V';
    case Family::T: return 'T';
    }
    throw std::logic_error("family_letter: bad family");
}

std::optional<Family> family_from_letter(std::string_view text)
{
    if (text == "D") return Family::D;
    if (text == "V") return Family::V;
    if (text == "T") return Family::T;
    return std::nullopt;
}

std::string_view provenance_label(Provenance p)
{
    return p == Provenance::ClosedForm ? "closed-form" : "recursion";
}

void IntegralTable::insert(const Key& key, Rational value, Provenance provenance)
{
    entries_.insert_or_assign(key, Entry{std::move(value), provenance});
}

const IntegralTable::Entry* IntegralTable::find(const Key& key) const
{
    const auto it = entries_.find(key);
    return it == entries_.end() ? nullptr : &it->second;
}

bool CrossCheckReport::all_passed() const
{
    for (const CheckResult& c : checks)
        if (!c.passed)
            return false;
    return true;
}

Series d1_series(int degree, int order)
{
    // Both sines have valuation 1, so they are expanded one order beyond the
    // target; the quotient then lands exactly on `order`.
    const Series numer = sin_scaled(make_rational(1, 2), order + 1) * Rational(degree);
    const Series denom = sin_scaled(make_rational(degree, 2), order + 1);
    return log(divide(numer, denom));
}

Series total_exp_form(int degree, int order)
{
    return exp(d1_series(degree, order) * Rational(degree)) / Rational(degree);
}

Series total_product_form(int degree, int order)
{
    const Series numer = sin_scaled(make_rational(1, 2), order + 1);
    const Series denom = sin_scaled(make_rational(degree, 2), order + 1);
    const Series ratio = divide(numer, denom); // constant term 1/d
    return pow(ratio, degree) * Rational(rational_pow(Rational(degree), degree - 1));
}

Series vertical_series_from_upsilon(int degree, const UpsilonTable& upsilon,
                                    int i, int order)
{
    if (i < 0)
        throw std::invalid_argument("vertical_series_from_upsilon: negative index");
    const Rational d(degree);
    Series polynomial(order);
    for (const Partition& eta : enumerate_partitions(i)) {
        Rational coefficient = rational_pow(d, eta.length() - 1) / Rational(eta.aut());
        for (const PartGroup& group : eta.groups())
            coefficient *= rational_pow(upsilon.at(group.value), group.multiplicity);
        polynomial = polynomial
            + Series::monomial(coefficient, 2 * i + 2 * eta.length(), order);
    }
    const Series growth = exp(Series::monomial(d * upsilon.at(0), 2, order));
    return growth * polynomial;
}

Series diagonal_identity_residual(const std::vector<Series>& diag, int i)
{
    if (i < 0 || i >= static_cast<int>(diag.size()))
        throw std::invalid_argument("diagonal_identity_residual: index out of range");
    const int out_order = std::max(diag[0].order() - 1, 0);
    Series residual(out_order);
    for (int k = 0; k <= i; ++k) {
        const Rational sign(k % 2 == 0 ? 1 : -1);
        residual = residual
            + sign * (derivative(diag[static_cast<size_t>(i - k)]) * diag[static_cast<size_t>(k)]);
    }
    return residual;
}

Series vertical_identity_residual(const std::vector<Series>& vert,
                                  const Rational& upsilon_i, int degree, int i)
{
    if (i < 0 || i >= static_cast<int>(vert.size()))
        throw std::invalid_argument("vertical_identity_residual: index out of range");
    const int out_order = std::max(vert[0].order() - 1, 0);
    Series residual(out_order);
    for (int k = 0; k <= i; ++k) {
        const Rational sign((i - k) % 2 == 0 ? 1 : -1);
        residual = residual
            + sign * (derivative(vert[static_cast<size_t>(k)])
                      * substitute_iu(vert[static_cast<size_t>(i - k)]));
    }
    const Rational rhs = Rational(2 * i + 2) * upsilon_i / Rational(degree);
    return residual - Series::monomial(rhs, 2 * i + 1, out_order);
}

Engine::Engine(EngineConfig cfg) : cfg_(cfg)
{
    if (cfg_.degree < 2)
        throw std::invalid_argument("Engine: degree must be >= 2");
    if (cfg_.max_genus < 1)
        throw std::invalid_argument("Engine: max_genus must be >= 1");
    order_ = 2 * cfg_.max_genus + 2;
    d1_ = d1_series(cfg_.degree, order_);
    upsilon_.values.reserve(static_cast<size_t>(cfg_.max_genus));
    for (int i = 0; i < cfg_.max_genus; ++i)
        upsilon_.values.push_back(d1_.coeff(2 * i + 2));
}

Series Engine::di_closed(int i) const
{
    if (i < 1 || i > cfg_.max_genus)
        throw std::invalid_argument("di_closed: index must satisfy 1 <= i <= max_genus");
    const Rational scale =
        rational_pow(Rational(cfg_.degree), i - 1) / Rational(factorial(i));
    return pow(d1_, i) * scale;
}

Series Engine::series_from_raw(const std::vector<Rational>& raw_by_genus) const
{
    Series s(order_);
    for (size_t g = 0; g < raw_by_genus.size(); ++g) {
        if (2 * g > static_cast<size_t>(order_))
            break;
        s = s + Series::monomial(egf_from_raw(raw_by_genus[g], static_cast<int>(2 * g)),
                                 static_cast<int>(2 * g), order_);
    }
    return s;
}

std::vector<std::vector<Rational>> Engine::d_raw_recursion_table(int i_max) const
{
    const int g_max = order_ / 2;
    std::vector<std::vector<Rational>> raw(
        static_cast<size_t>(i_max) + 1,
        std::vector<Rational>(static_cast<size_t>(g_max) + 1, Rational(0)));
    // Family 0 stays zero: D_0^g = 0 for g > 0, and the g = 0 slot is never
    // read because the genus split below keeps g1, g2 >= 1.
    for (int g = 0; g <= g_max; ++g)
        raw[1][static_cast<size_t>(g)] = raw_from_egf(d1_.coeff(2 * g), 2 * g);
    const Rational d(cfg_.degree);
    for (int i = 2; i <= i_max; ++i) {
        for (int g = i; g <= g_max; ++g) {
            Rational acc(0);
            for (int g1 = 1; g1 <= g - 1; ++g1) {
                const int g2 = g - g1;
                Rational inner(0);
                for (int k = 1; k <= i; ++k) {
                    const Rational sign(k % 2 == 0 ? 1 : -1);
                    inner += sign * raw[static_cast<size_t>(i - k)][static_cast<size_t>(g1)]
                                  * raw[static_cast<size_t>(k)][static_cast<size_t>(g2)];
                }
                acc += Rational(binomial(2 * g - 1, 2 * g1 - 1)) * inner;
            }
            raw[static_cast<size_t>(i)][static_cast<size_t>(g)] = -d * acc;
        }
    }
    return raw;
}

Series Engine::di_recursive(int i) const
{
    if (i < 2 || i > cfg_.max_genus)
        throw std::invalid_argument("di_recursive: index must satisfy 2 <= i <= max_genus");
    return series_from_raw(d_raw_recursion_table(i)[static_cast<size_t>(i)]);
}

Series Engine::vi_closed(int i) const
{
    if (i < 0 || i > cfg_.max_genus - 1)
        throw std::invalid_argument("vi_closed: index must satisfy 0 <= i <= max_genus - 1");
    return vertical_series_from_upsilon(cfg_.degree, upsilon_, i, order_);
}

std::vector<std::vector<Rational>> Engine::v_raw_recursion_table(int i_max) const
{
    const int g_max = order_ / 2;
    std::vector<std::vector<Rational>> raw(
        static_cast<size_t>(i_max) + 1,
        std::vector<Rational>(static_cast<size_t>(g_max) + 1, Rational(0)));
    const Rational d(cfg_.degree);
    raw[0][0] = Rational(1) / d; // unstable term, excluded from the sums below
    for (int k = 0; k <= i_max; ++k)
        if (k + 1 <= g_max)
            raw[static_cast<size_t>(k)][static_cast<size_t>(k + 1)] =
                raw_from_egf(upsilon_.at(k), 2 * k + 2);
    // Fill by genus so every (family, smaller genus) value is ready.
    for (int g = 1; g <= g_max; ++g) {
        for (int i = 0; i <= i_max; ++i) {
            if (g <= i + 1)
                continue; // zero below the triangle, seed at g = i + 1
            Rational acc(0);
            for (int g1 = 1; g1 <= g - 1; ++g1) {
                const int g2 = g - g1;
                Rational inner(0);
                for (int k = 0; k <= i; ++k) {
                    // Sign exponent g2 - (i-k): it tracks the family index
                    // of the genus-g2 factor.
                    const Rational sign((g2 + i - k) % 2 == 0 ? 1 : -1);
                    inner += sign * raw[static_cast<size_t>(k)][static_cast<size_t>(g1)]
                                  * raw[static_cast<size_t>(i - k)][static_cast<size_t>(g2)];
                }
                acc += Rational(binomial(2 * g - 1, 2 * g1 - 1)) * inner;
            }
            raw[static_cast<size_t>(i)][static_cast<size_t>(g)] = -d * acc;
        }
    }
    return raw;
}

Series Engine::vi_recursive(int i) const
{
    if (i < 0 || i > cfg_.max_genus - 1)
        throw std::invalid_argument("vi_recursive: index must satisfy 0 <= i <= max_genus - 1");
    return series_from_raw(v_raw_recursion_table(i)[static_cast<size_t>(i)]);
}

Series Engine::t_total() const
{
    return total_exp_form(cfg_.degree, order_);
}

Series Engine::t_total_product() const
{
    return total_product_form(cfg_.degree, order_);
}

Rational Engine::d_raw(int i, int g) const
{
    if (i < 1 || g < i)
        return Rational(0);
    if (i > cfg_.max_genus || 2 * g > order_)
        throw std::out_of_range("d_raw: (i, g) outside the computed range");
    return raw_from_egf(di_closed(i).coeff(2 * g), 2 * g);
}

Rational Engine::v_raw(int i, int g) const
{
    if (i == 0 && g == 0)
        return Rational(1) / Rational(cfg_.degree);
    if (i < 0 || g < i + 1)
        return Rational(0);
    if (i > cfg_.max_genus - 1 || 2 * g > order_)
        throw std::out_of_range("v_raw: (i, g) outside the computed range");
    return raw_from_egf(vi_closed(i).coeff(2 * g), 2 * g);
}

Rational Engine::t_raw(int g) const
{
    if (g < 0 || 2 * g > order_)
        throw std::out_of_range("t_raw: genus outside the computed range");
    return raw_from_egf(t_total().coeff(2 * g), 2 * g);
}

Series Engine::d_identity_residual(int i) const
{
    if (i < 1 || i > cfg_.max_genus)
        throw std::invalid_argument("d_identity_residual: index must satisfy 1 <= i <= max_genus");
    std::vector<Series> diag;
    diag.reserve(static_cast<size_t>(i) + 1);
    diag.push_back(Series::constant(Rational(1) / Rational(cfg_.degree), order_));
    for (int j = 1; j <= i; ++j)
        diag.push_back(di_closed(j));
    return diagonal_identity_residual(diag, i);
}

Series Engine::v_identity_residual(int i) const
{
    if (i < 0 || i > cfg_.max_genus - 1)
        throw std::invalid_argument("v_identity_residual: index must satisfy 0 <= i <= max_genus - 1");
    std::vector<Series> vert;
    vert.reserve(static_cast<size_t>(i) + 1);
    for (int j = 0; j <= i; ++j)
        vert.push_back(vi_closed(j));
    return vertical_identity_residual(vert, upsilon_.at(i), cfg_.degree, i);
}

namespace {

// First index where two series disagree, or nullopt when equal up to the
// smaller order.
std::optional<int> first_mismatch_index(const Series& a, const Series& b)
{
    const int n = std::min(a.order(), b.order());
    for (int j = 0; j <= n; ++j)
        if (a.coeff(j) != b.coeff(j))
            return j;
    return std::nullopt;
}

std::string describe_mismatch(const Series& a, const Series& b)
{
    if (const auto j = first_mismatch_index(a, b)) {
        std::ostringstream out;
        out << "first mismatch at u^" << *j << ": " << to_string(a.coeff(*j))
            << " vs " << to_string(b.coeff(*j));
        return out.str();
    }
    return "orders disagree";
}

std::string first_nonzero(const Series& a)
{
    const int v = a.valuation();
    std::ostringstream out;
    out << "first nonzero coefficient at u^" << v << ": " << to_string(a.coeff(v));
    return out.str();
}

} // namespace

CrossCheckReport Engine::cross_check(int i_max) const
{
    if (i_max < 0 || i_max > cfg_.max_genus)
        throw std::invalid_argument("cross_check: i_max must satisfy 0 <= i_max <= max_genus");
    const int G = cfg_.max_genus;
    CrossCheckReport report;
    const auto add = [&report](std::string name, bool passed, std::string detail = {}) {
        report.checks.push_back({std::move(name), passed, passed ? std::string{} : std::move(detail)});
    };

    std::vector<Series> d_closed; // index i, 0 unused
    d_closed.push_back(Series::constant(Rational(1) / Rational(cfg_.degree), order_));
    for (int i = 1; i <= G; ++i)
        d_closed.push_back(di_closed(i));
    std::vector<Series> v_closed; // index i = 0 .. G-1
    for (int i = 0; i <= G - 1; ++i)
        v_closed.push_back(vi_closed(i));
    const Series t_series = t_total();

    for (int i = 2; i <= i_max; ++i) {
        const Series recursive = di_recursive(i);
        const bool passed = d_closed[static_cast<size_t>(i)] == recursive;
        std::ostringstream name;
        name << "D[" << i << "]: closed form equals recursion";
        add(name.str(), passed,
            passed ? std::string{} : describe_mismatch(d_closed[static_cast<size_t>(i)], recursive));
    }

    const int v_top = std::min(i_max, G - 1);
    for (int i = 0; i <= v_top; ++i) {
        const Series recursive = vi_recursive(i);
        const bool passed = v_closed[static_cast<size_t>(i)] == recursive;
        std::ostringstream name;
        name << "V[" << i << "]: closed form equals recursion";
        add(name.str(), passed,
            passed ? std::string{} : describe_mismatch(v_closed[static_cast<size_t>(i)], recursive));
    }

    {
        bool passed = true;
        std::string detail;
        for (int g = 1; g <= G && passed; ++g)
            for (int i = 1; i <= g && passed; ++i) {
                const Rational diag = raw_from_egf(d_closed[static_cast<size_t>(i)].coeff(2 * g), 2 * g);
                const Rational vert = raw_from_egf(v_closed[static_cast<size_t>(g - i)].coeff(2 * g), 2 * g);
                if (diag != vert) {
                    passed = false;
                    std::ostringstream out;
                    out << "D_" << i << "^" << g << " = " << to_string(diag)
                        << " but V_" << g - i << "^" << g << " = " << to_string(vert);
                    detail = out.str();
                }
            }
        std::ostringstream name;
        name << "repackaging: D_i^g = V_{g-i}^g for 1 <= i <= g <= " << G;
        add(name.str(), passed, detail);
    }

    {
        bool passed = true;
        std::string detail;
        if (t_series.coeff(0) != Rational(1) / Rational(cfg_.degree)) {
            passed = false;
            detail = "T_0 != 1/d";
        }
        for (int g = 1; g <= G && passed; ++g) {
            Rational row(0);
            for (int i = 1; i <= g; ++i)
                row += raw_from_egf(d_closed[static_cast<size_t>(i)].coeff(2 * g), 2 * g);
            const Rational total = raw_from_egf(t_series.coeff(2 * g), 2 * g);
            if (row != total) {
                passed = false;
                std::ostringstream out;
                out << "T_" << g << " = " << to_string(total)
                    << " but row sum = " << to_string(row);
                detail = out.str();
            }
        }
        std::ostringstream name;
        name << "row sums: T_g = sum_{i=1}^{g} D_i^g for g <= " << G << ", T_0 = 1/d";
        add(name.str(), passed, detail);
    }

    {
        bool passed = true;
        std::string detail;
        for (int i = 2; i <= i_max && passed; ++i) {
            const Series residual =
                diagonal_identity_residual({d_closed.begin(), d_closed.begin() + i + 1}, i);
            if (!residual.is_zero()) {
                passed = false;
                std::ostringstream out;
                out << "i = " << i << ", " << first_nonzero(residual);
                detail = out.str();
            }
        }
        std::ostringstream name;
        name << "D identity residual: zero for 2 <= i <= " << i_max;
        add(name.str(), passed, detail);
    }

    {
        bool passed = true;
        std::string detail;
        for (int i = 0; i <= v_top && passed; ++i) {
            const Series residual = vertical_identity_residual(
                {v_closed.begin(), v_closed.begin() + i + 1}, upsilon_.at(i), cfg_.degree, i);
            if (!residual.is_zero()) {
                passed = false;
                std::ostringstream out;
                out << "i = " << i << ", " << first_nonzero(residual);
                detail = out.str();
            }
        }
        std::ostringstream name;
        name << "V identity residual: zero for 0 <= i <= " << v_top;
        add(name.str(), passed, detail);
    }

    return report;
}

IntegralTable Engine::build_table(Family family) const
{
    const int G = cfg_.max_genus;
    IntegralTable table;
    switch (family) {
    case Family::D:
        for (int i = 1; i <= G; ++i) {
            const Series series = di_closed(i);
            for (int g = i; g <= G; ++g)
                table.insert({Family::D, i, g}, raw_from_egf(series.coeff(2 * g), 2 * g),
                             Provenance::ClosedForm);
        }
        break;
    case Family::V:
        table.insert({Family::V, 0, 0}, Rational(1) / Rational(cfg_.degree),
                     Provenance::ClosedForm);
        for (int i = 0; i <= G - 1; ++i) {
            const Series series = vi_closed(i);
            for (int g = i + 1; g <= G; ++g)
                table.insert({Family::V, i, g}, raw_from_egf(series.coeff(2 * g), 2 * g),
                             Provenance::ClosedForm);
        }
        break;
    case Family::T: {
        const Series series = t_total();
        for (int g = 0; g <= G; ++g)
            table.insert({Family::T, -1, g}, raw_from_egf(series.coeff(2 * g), 2 * g),
                         Provenance::ClosedForm);
        break;
    }
    }
    return table;
}

std::optional<std::string> Engine::verify_family(Family family) const
{
    const int G = cfg_.max_genus;
    switch (family) {
    case Family::D:
        for (int i = 2; i <= G; ++i)
            if (const auto n = first_mismatch_index(di_closed(i), di_recursive(i))) {
                std::ostringstream out;
                out << "family D mismatch at (i, g) = (" << i << ", " << *n / 2 << ")";
                return out.str();
            }
        return std::nullopt;
    case Family::V:
        for (int i = 0; i <= G - 1; ++i)
            if (const auto n = first_mismatch_index(vi_closed(i), vi_recursive(i))) {
                std::ostringstream out;
                out << "family V mismatch at (i, g) = (" << i << ", " << *n / 2 << ")";
                return out.str();
            }
        return std::nullopt;
    case Family::T:
        if (const auto n = first_mismatch_index(t_total(), t_total_product())) {
            std::ostringstream out;
            out << "family T mismatch at g = " << *n / 2;
            return out.str();
        }
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace hodge
