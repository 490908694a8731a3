#pragma once

#include "hodge/rational.hpp"

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace hodge {

// One distinct part value with its multiplicity, n^m with n, m >= 1.
struct PartGroup {
    int value;
    int multiplicity;
    friend auto operator<=>(const PartGroup&, const PartGroup&) = default;
};

// Integer partition stored by multiplicity, eta = n_1^{m_1} ... n_r^{m_r}
// with the part values strictly increasing. The empty partition is valid.
class Partition {
public:
    Partition() = default;

    // Builds from a list of parts, e.g. {3, 1, 1}; all parts must be >= 1.
    static Partition from_parts(const std::vector<int>& parts);

    // Validated groups: values >= 1 and pairwise distinct, multiplicities >= 1.
    static Partition from_groups(std::vector<PartGroup> groups);

    // Text format "1^2 3^1": space-separated n^m tokens. Rejects duplicated
    // part values and zero multiplicities. Whitespace-only text parses to the
    // empty partition. Throws std::invalid_argument on malformed input.
    static Partition parse(std::string_view text);

    const std::vector<PartGroup>& groups() const { return groups_; }
    bool empty() const { return groups_.empty(); }

    int size() const;       // |eta| = sum m_k n_k
    int length() const;     // l(eta) = sum m_k
    Integer aut() const;    // prod m_k!

    // Centralizer order z(eta) = prod m_k! n_k^{m_k}, as an exact
    // integer-valued rational.
    Rational zeta() const;

    // "1^2 3^1"; the empty partition renders as "".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<PartGroup> groups_;
};

// Ordered pair of sub-partitions whose multiset union is the parent.
struct SplitPair {
    Partition first;
    Partition second;
};

// All partitions of n, each exactly once, in decreasing-lexicographic order
// by part list: enumerate_partitions(4) = 4, 31, 22, 211, 1111.
std::vector<Partition> enumerate_partitions(int n);

// All ordered pairs (eta1, eta2) with eta1 + eta2 = eta; there are
// prod (m_k + 1) of them. Enumeration walks the sub-multiplicity vectors
// (k_1, ..., k_r), 0 <= k_j <= m_j, in lexicographic order.
std::vector<SplitPair> splits(const Partition& eta);

// sum over splits of (-1)^{l(eta2)} / (Aut(eta1) Aut(eta2)).
// Equals 1 on the empty partition and 0 on every other partition.
Rational alternating_split_sum(const Partition& eta);

// sum over splits of (-1)^{l(eta2)} (|eta1| + l(eta1)) / (Aut(eta1) Aut(eta2)).
// Equals |eta| + 1 when eta is a single part and 0 otherwise. Requires a
// nonempty partition; throws std::domain_error on the empty one.
Rational weighted_split_sum(const Partition& eta);

// sum_{k=0}^{m} (-1)^{m-k} k / (k! (m-k)!) -- the binomial expansion of
// d/dx (x-1)^m at x = 1, scaled by 1/m!. Vanishes for every m >= 2.
Rational alternating_derivative_sum(int m);

} // namespace hodge
