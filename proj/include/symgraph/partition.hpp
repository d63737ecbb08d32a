#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "symgraph/rational.hpp"

namespace symgraph {

/// Integer partition: positive parts kept in weakly decreasing order.
///
/// Values are immutable; the weight is cached because partitions serve as
/// series keys and are compared constantly.
class Partition {
public:
    Partition() = default;
    /// Accepts parts in any order and sorts them. Throws DomainError on a
    /// part below 1.
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const noexcept { return parts_; }
    int weight() const noexcept { return weight_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

    /// Multiset union of the parts (the index of p_lambda * p_mu).
    Partition merged(const Partition& other) const;
    /// Every part multiplied by `factor`.
    Partition scaled(int factor) const;

    std::string str() const;

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    struct Sorted {};
    Partition(Sorted, std::vector<int> parts);

    std::vector<int> parts_;
    int weight_ = 0;
};

/// Lexicographic descending comparison of the part lists, e.g.
/// (4) < (3,1) < (2,2) < (2,1,1) in "comes first" sense.
bool lex_descending_before(const Partition& a, const Partition& b);

/// Canonical iteration order for series keys: by weight ascending, then
/// lexicographic descending within a weight.
struct CanonicalOrder {
    bool operator()(const Partition& a, const Partition& b) const {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return lex_descending_before(a, b);
    }
};

/// Ordered sequence of positive parts; order is significant.
struct Composition {
    std::vector<int> parts;
    int weight() const;
    friend bool operator==(const Composition&, const Composition&) = default;
};

/// Power notation 1^{n_1} 2^{n_2} ...: part value -> multiplicity.
using PowerNotation = std::map<int, int>;

PowerNotation to_power_notation(const Partition& lambda);
Partition from_power_notation(const PowerNotation& powers);

/// All partitions of n in lexicographic descending order.
std::vector<Partition> partitions_of(int n);

/// Partitions of n whose parts all lie in `allowed`. Throws on empty set.
std::vector<Partition> partitions_with_parts_in(int n, const std::set<int>& allowed);

/// Partitions of every weight 0..max_weight, in canonical order.
std::vector<Partition> partitions_up_to(int max_weight);

/// Ordered compositions of n with parts in `allowed`. Throws on empty set or n < 1.
std::vector<Composition> compositions_with_parts_in(int n, const std::set<int>& allowed);

/// Streams the same compositions as compositions_with_parts_in without
/// materializing the list. Branches that cannot complete are pruned using
/// a memoized existence table.
void for_each_composition(int n, const std::set<int>& allowed,
                          const std::function<void(const Composition&)>& visit);

/// counts[n][k] = number of compositions of n into exactly k parts from
/// `allowed`, for 0 <= n, k <= max_n.
std::vector<std::vector<Integer>> composition_counts_by_length(int max_n,
                                                               const std::set<int>& allowed);

/// z_lambda = prod_i i^{n_i} n_i!.
Integer z_of(const Partition& lambda);

}  // namespace symgraph
