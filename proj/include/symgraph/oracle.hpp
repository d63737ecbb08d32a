#pragma once

#include <set>
#include <variant>
#include <vector>

#include "symgraph/rational.hpp"

namespace symgraph {

inline constexpr int kDefaultOracleBound = 6;

/// Constraints on a symmetric n x n matrix of non-negative integers.
///
/// Row i's sum counts the diagonal entry twice: sum_{j != i} M_ij + 2 M_ii.
struct OracleConfig {
    std::set<int> off_diagonal{0};
    std::set<int> diagonal{0};
    /// Either a set of admissible row sums or one exact target per row.
    std::variant<std::set<int>, std::vector<int>> row_sums;
    int n = 0;
    int bound = kDefaultOracleBound;
    /// Must be set to enumerate with n above kDefaultOracleBound.
    bool allow_slow = false;

    void validate() const;
};

/// Brute-force count of matrices satisfying the configuration, by
/// depth-first search over the upper triangle with row-sum pruning.
Integer count_matrices(const OracleConfig& cfg);

/// Matrices with off-diagonal entries in J u {0}, zero diagonal and row
/// sums exactly d: the number of loopless graphs with degree sequence d.
Integer oracle_m_coefficient(const std::set<int>& J, const std::vector<int>& degrees,
                             int bound = kDefaultOracleBound, bool allow_slow = false);

}  // namespace symgraph
