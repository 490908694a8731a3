#include "hodge/partition.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hodge {

namespace {

void validate_groups(const std::vector<PartGroup>& groups)
{
    for (size_t k = 0; k < groups.size(); ++k) {
        if (groups[k].value < 1)
            throw std::invalid_argument("Partition: part values must be >= 1");
        if (groups[k].multiplicity < 1)
            throw std::invalid_argument("Partition: multiplicities must be >= 1");
        if (k > 0 && groups[k - 1].value >= groups[k].value)
            throw std::invalid_argument("Partition: duplicated part value");
    }
}

} // namespace

Partition Partition::from_parts(const std::vector<int>& parts)
{
    std::vector<int> sorted = parts;
    std::sort(sorted.begin(), sorted.end());
    std::vector<PartGroup> groups;
    for (int p : sorted) {
        if (p < 1)
            throw std::invalid_argument("Partition: part values must be >= 1");
        if (!groups.empty() && groups.back().value == p)
            ++groups.back().multiplicity;
        else
            groups.push_back({p, 1});
    }
    Partition eta;
    eta.groups_ = std::move(groups);
    return eta;
}

Partition Partition::from_groups(std::vector<PartGroup> groups)
{
    std::sort(groups.begin(), groups.end(),
              [](const PartGroup& a, const PartGroup& b) { return a.value < b.value; });
    validate_groups(groups);
    Partition eta;
    eta.groups_ = std::move(groups);
    return eta;
}

Partition Partition::parse(std::string_view text)
{
    std::vector<PartGroup> groups;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
        const auto caret = token.find('^');
        if (caret == std::string::npos || caret == 0 || caret + 1 == token.size())
            throw std::invalid_argument("Partition::parse: token '" + token + "' is not of the form n^m");
        const auto number = [&](const std::string& s) {
            if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("Partition::parse: token '" + token + "' is not of the form n^m");
            try {
                return std::stoi(s);
            } catch (const std::exception&) {
                throw std::invalid_argument("Partition::parse: value out of range in '" + token + "'");
            }
        };
        const int value = number(token.substr(0, caret));
        const int mult = number(token.substr(caret + 1));
        if (value < 1)
            throw std::invalid_argument("Partition::parse: part value must be >= 1");
        if (mult < 1)
            throw std::invalid_argument("Partition::parse: zero multiplicity");
        for (const PartGroup& existing : groups)
            if (existing.value == value)
                throw std::invalid_argument("Partition::parse: duplicated part value");
        groups.push_back({value, mult});
    }
    return from_groups(std::move(groups));
}

int Partition::size() const
{
    int total = 0;
    for (const PartGroup& g : groups_)
        total += g.value * g.multiplicity;
    return total;
}

int Partition::length() const
{
    int total = 0;
    for (const PartGroup& g : groups_)
        total += g.multiplicity;
    return total;
}

Integer Partition::aut() const
{
    Integer result(1);
    for (const PartGroup& g : groups_)
        result *= factorial(g.multiplicity);
    return result;
}

Rational Partition::zeta() const
{
    Integer result(1);
    for (const PartGroup& g : groups_) {
        result *= factorial(g.multiplicity);
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(g.value),
                      static_cast<unsigned long>(g.multiplicity));
        result *= power;
    }
    return Rational(result);
}

std::string Partition::to_string() const
{
    std::ostringstream out;
    for (size_t k = 0; k < groups_.size(); ++k) {
        if (k > 0)
            out << ' ';
        out << groups_[k].value << '^' << groups_[k].multiplicity;
    }
    return out.str();
}

std::vector<Partition> enumerate_partitions(int n)
{
    if (n < 0)
        throw std::invalid_argument("enumerate_partitions: negative n");
    std::vector<Partition> out;
    std::vector<int> stack;
    // Parts chosen in non-increasing order, largest candidates first, which
    // yields decreasing-lexicographic output.
    auto recurse = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(Partition::from_parts(stack));
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            stack.push_back(p);
            self(self, remaining - p, p);
            stack.pop_back();
        }
    };
    recurse(recurse, n, n);
    return out;
}

std::vector<SplitPair> splits(const Partition& eta)
{
    const auto& groups = eta.groups();
    const size_t r = groups.size();
    std::vector<int> k(r, 0);
    std::vector<SplitPair> out;
    for (;;) {
        std::vector<PartGroup> first, second;
        for (size_t j = 0; j < r; ++j) {
            if (k[j] > 0)
                first.push_back({groups[j].value, k[j]});
            if (groups[j].multiplicity - k[j] > 0)
                second.push_back({groups[j].value, groups[j].multiplicity - k[j]});
        }
        out.push_back({Partition::from_groups(std::move(first)),
                       Partition::from_groups(std::move(second))});
        // Advance the sub-multiplicity odometer, rightmost digit fastest,
        // so pairs come out in lexicographic (k_1, ..., k_r) order.
        size_t j = r;
        while (j > 0) {
            --j;
            if (k[j] < groups[j].multiplicity) {
                ++k[j];
                std::fill(k.begin() + static_cast<long>(j) + 1, k.end(), 0);
                break;
            }
            if (j == 0)
                return out;
        }
        if (r == 0)
            return out;
    }
}

Rational alternating_split_sum(const Partition& eta)
{
    Rational total(0);
    for (const SplitPair& split : splits(eta)) {
        const Rational sign(split.second.length() % 2 == 0 ? 1 : -1);
        total += sign / Rational(split.first.aut() * split.second.aut());
    }
    return total;
}

Rational weighted_split_sum(const Partition& eta)
{
    if (eta.empty())
        throw std::domain_error("weighted_split_sum: empty partition");
    Rational total(0);
    for (const SplitPair& split : splits(eta)) {
        const Rational sign(split.second.length() % 2 == 0 ? 1 : -1);
        const Rational weight(split.first.size() + split.first.length());
        total += sign * weight / Rational(split.first.aut() * split.second.aut());
    }
    return total;
}

Rational alternating_derivative_sum(int m)
{
    if (m < 0)
        throw std::invalid_argument("alternating_derivative_sum: negative m");
    Rational total(0);
    for (int k = 0; k <= m; ++k) {
        const Rational sign((m - k) % 2 == 0 ? 1 : -1);
        total += sign * Rational(k) / Rational(factorial(k) * factorial(m - k));
    }
    return total;
}

} // namespace hodge
