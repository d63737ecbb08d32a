#pragma once

#include <set>
#include <vector>

#include "symgraph/graph_series.hpp"
#include "symgraph/symseries.hpp"

namespace symgraph {

/// Hall scalar product in the power basis: sum_lambda a_lambda b_lambda z_lambda,
/// over terms of weight <= min(max_degree).
Rational scalar_product(const SymSeries& a, const SymSeries& b);

/// m_lambda in the power basis, obtained by inverting the p -> m transition
/// matrix on partitions of |lambda|.
SymSeries m_in_p(const Partition& lambda);

/// <m_lambda, h_mu>, computed entirely through power-basis expansions.
Rational m_h_duality_check(const Partition& lambda, const Partition& mu);

/// Number of graphs in the profile's class on vertices 1..len(d) where
/// vertex i has weighted degree d[i].
Integer count_degree_sequence(const WeightProfile& profile, const std::vector<int>& degrees);

/// How the degree constraint is turned into an h-series at z^n.
enum class Extractor {
    /// (sum_{k in K} h_k)^n: one factor per labelled vertex. Counts every
    /// graph on n vertices whose degrees all lie in K.
    Sequences,
    /// sum over multisets {k_1..k_n} of K of h_{k_1} ... h_{k_n}, e.g.
    /// sum_i h_3^i h_2^{n-i} for K = {2,3}. Counts, for each multiset of
    /// degrees, the graphs realizing it in one fixed vertex order.
    Multisets,
};

/// counts[n] for n = 0..n_max, with counts[0] = 1 (the empty graph).
struct CountTable {
    std::vector<Integer> counts;
    int n_max() const { return static_cast<int>(counts.size()) - 1; }
};

/// <G_J, extractor_n> for each n; with Extractor::Sequences this is the
/// number of graphs on n labelled vertices with every weighted degree in K.
CountTable count_table(const WeightProfile& profile, const std::set<int>& K, int n_max,
                       Extractor extractor = Extractor::Sequences);

}  // namespace symgraph
