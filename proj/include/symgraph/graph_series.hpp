#pragma once

#include <set>
#include <vector>

#include "symgraph/plethysm.hpp"
#include "symgraph/symseries.hpp"

namespace symgraph {

enum class LoopPolicy { NoLoops, WeightedLoops };

/// Edge-weight set J together with the loop policy; loops, when allowed,
/// draw their weights from J as well.
struct WeightProfile {
    std::set<int> edge_weights;
    LoopPolicy loops = LoopPolicy::NoLoops;

    void validate() const;
};

/// a_1..a_N with F_J = exp(sum_n a_n p_n). values[n-1] holds a_n.
struct ACoeffs {
    std::vector<Rational> values;

    const Rational& at(int n) const { return values.at(static_cast<std::size_t>(n - 1)); }
    friend bool operator==(const ACoeffs&, const ACoeffs&) = default;
};

/// a_n = -sum_alpha (-1)^{len(alpha)} / len(alpha) over compositions alpha of
/// n with parts in J.
ACoeffs a_coeffs_compositions(const std::set<int>& J, int N);

/// Coefficients of t^1..t^N in log(1 + sum_{s in J} t^s).
ACoeffs a_coeffs_log(const std::set<int>& J, int N);

/// F_J = prod_i (1 + sum_{s in J} x_i^s) in the power basis, through degree D.
SymSeries build_F(const std::set<int>& J, int D);

/// G_J through degree D via the closed form
/// exp(sum_{n <= D/2} (a_n / 2)(p_{n,n} -+ p_{2n})), minus for NoLoops.
SymSeries build_G(const WeightProfile& profile, int D);

/// Same series computed as F_J[e_2] (or F_J[h_2] with loops).
SymSeries build_G_plethysm(const WeightProfile& profile, int D);

}  // namespace symgraph
