#pragma once

#include "hodge/partition.hpp"
#include "hodge/rational.hpp"
#include "hodge/series.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hodge {

// Degree-d covers, all genera up to G; every series is carried to order
// u^{2G+2}. d = 1 is rejected: it degenerates every generating function to
// the trivial series.
struct EngineConfig {
    int degree;    // d >= 2
    int max_genus; // G >= 1
};

// Normalized initial-condition coefficients: Upsilon_i is the coefficient of
// u^{2i+2} in the D1 series, i.e. the raw value D_1^{i+1} / (2i+2)!.
// Upsilon_0 = (d^2 - 1)/24 for every d.
struct UpsilonTable {
    std::vector<Rational> values; // Upsilon_0 .. Upsilon_{G-1}

    int size() const { return static_cast<int>(values.size()); }
    const Rational& at(int i) const;
};

enum class Family { D, V, T };

char family_letter(Family family);
std::optional<Family> family_from_letter(std::string_view text);

enum class Provenance { ClosedForm, Recursion };

std::string_view provenance_label(Provenance p);

// Raw integral values keyed by (family, i, g). Family T carries no i index;
// it is stored as -1. Values are raw integrals (series coefficient times
// (2g)!). Ordered map so iteration is deterministic. Concurrent readers are
// fine; extending the table requires exclusive access.
class IntegralTable {
public:
    struct Key {
        Family family;
        int i; // -1 for family T
        int g;
        friend auto operator<=>(const Key&, const Key&) = default;
    };
    struct Entry {
        Rational value;
        Provenance provenance;
    };

    void insert(const Key& key, Rational value, Provenance provenance);
    const Entry* find(const Key& key) const;
    int size() const { return static_cast<int>(entries_.size()); }
    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

private:
    std::map<Key, Entry> entries_;
};

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // first counterexample when failed, empty otherwise
};

struct CrossCheckReport {
    std::vector<CheckResult> checks;
    bool all_passed() const;
};

// --- closed forms, usable without an Engine ---

// D1(u) = ln(d sin(u/2) / sin(du/2)), even with zero constant term.
Series d1_series(int degree, int order);

// (1/d) e^{d D1(u)}.
Series total_exp_form(int degree, int order);

// d^{d-1} sin^d(u/2) / sin^d(du/2).
Series total_product_form(int degree, int order);

// V_i(u) = u^{2i} e^{d Y0 u^2} sum_{eta |- i} u^{2 l(eta)} d^{l(eta)-1}
//          Y^eta / Aut(eta),  with Y^eta = prod Y_{n_k}^{m_k}.
// Requires upsilon.at(n) for every part value n <= i.
Series vertical_series_from_upsilon(int degree, const UpsilonTable& upsilon,
                                    int i, int order);

// sum_{k=0}^{i} (-1)^k (d/du D_{i-k}) D_k over the supplied family
// diag[0..i], where diag[0] is the constant 1/d. Identically zero for i >= 2;
// for i = 1 it equals D1'/d (there is no genus relation at i = 1).
Series diagonal_identity_residual(const std::vector<Series>& diag, int i);

// sum_{k=0}^{i} (-1)^{i-k} (d/du V_k)(u) V_{i-k}(iu)
//   - ((2i+2)/d) Upsilon_i u^{2i+1}  over vert[0..i]. Identically zero.
Series vertical_identity_residual(const std::vector<Series>& vert,
                                  const Rational& upsilon_i, int degree, int i);

// --- the engine ---

class Engine {
public:
    // Validates the configuration; throws std::invalid_argument when
    // degree < 2 or max_genus < 1. Computes D1 and the Upsilon table.
    explicit Engine(EngineConfig cfg);

    const EngineConfig& config() const { return cfg_; }
    int degree() const { return cfg_.degree; }
    int max_genus() const { return cfg_.max_genus; }
    int order() const { return order_; } // 2G + 2

    const Series& d1() const { return d1_; }
    const UpsilonTable& upsilon() const { return upsilon_; }

    // D_i(u) = d^{i-1}/i! D1^i(u), 1 <= i <= G.
    Series di_closed(int i) const;

    // D_i(u) rebuilt coefficient-by-coefficient from the genus recursion
    //   D_i^g = -d sum_{g1+g2=g} C(2g-1, 2g1-1)
    //              sum_{k=1}^{i} (-1)^k D_{i-k}^{g1} D_k^{g2},
    // seeded only by the D1 raw values. 2 <= i <= G (i = 1 is the initial
    // condition, not derivable).
    Series di_recursive(int i) const;

    // V_i(u) from the partition closed form, 0 <= i <= G-1.
    Series vi_closed(int i) const;

    // V_i(u) from the genus recursion (g1, g2 >= 1)
    //   V_i^g = -d sum_{g1+g2=g} C(2g-1, 2g1-1)
    //              sum_{k=0}^{i} (-1)^{g2-(i-k)} V_k^{g1} V_{i-k}^{g2},
    // seeded by V_k^{k+1} = Upsilon_k (2k+2)! and including the unstable
    // V_0^0 = 1/d. 0 <= i <= G-1.
    Series vi_recursive(int i) const;

    // sum_g T_g(u), exponential form; constant term 1/d.
    Series t_total() const;

    // Same sum via the sine product form.
    Series t_total_product() const;

    // Raw values through the closed-form path; zero outside the triangle.
    Rational d_raw(int i, int g) const;
    Rational v_raw(int i, int g) const; // includes the unstable V_0^0 = 1/d
    Rational t_raw(int g) const;

    // Residual of the diagonal generating-function identity, order 2G+1.
    // Zero contract holds for i >= 2.
    Series d_identity_residual(int i) const;

    // Residual of the vertical identity, order 2G+1; zero for 0 <= i <= G-1.
    Series v_identity_residual(int i) const;

    // Certification: closed forms against recursions for both families,
    // the repackaging identity D_i^g = V_{g-i}^g, row sums against T, and
    // both identity residuals. Failures become report entries, not faults.
    CrossCheckReport cross_check(int i_max) const;

    // All in-range raw values of one family, tagged with the path that
    // produced them.
    IntegralTable build_table(Family family) const;

    // Recomputes the family through its second path and compares. Returns
    // a description of the first mismatching (i, g) or nullopt when the
    // family certifies.
    std::optional<std::string> verify_family(Family family) const;

private:
    EngineConfig cfg_;
    int order_;
    Series d1_;
    UpsilonTable upsilon_;

    // Raw-value triangles indexed [family][genus], genus 0 .. G+1.
    std::vector<std::vector<Rational>> d_raw_recursion_table(int i_max) const;
    std::vector<std::vector<Rational>> v_raw_recursion_table(int i_max) const;
    Series series_from_raw(const std::vector<Rational>& raw_by_genus) const;
};

} // namespace hodge
