#include "symgraph/oracle.hpp"

#include <algorithm>
#include <cstdint>

#include "symgraph/errors.hpp"

namespace symgraph {

void OracleConfig::validate() const {
    if (n < 0) throw DomainError("oracle dimension must be non-negative");
    if (bound > kDefaultOracleBound && !allow_slow) {
        throw DomainError("oracle bound above " + std::to_string(kDefaultOracleBound) +
                          " requires explicit acknowledgment");
    }
    if (n > bound) {
        throw DomainError("oracle dimension " + std::to_string(n) + " exceeds desk-scale bound " +
                          std::to_string(bound));
    }
    if (!off_diagonal.contains(0)) throw DomainError("off-diagonal set must contain 0");
    if (diagonal.empty()) throw DomainError("diagonal set must be non-empty");
    if (*off_diagonal.begin() < 0 || *diagonal.begin() < 0) {
        throw DomainError("matrix entries must be non-negative");
    }
    if (const auto* d = std::get_if<std::vector<int>>(&row_sums)) {
        if (static_cast<int>(d->size()) != n) throw DomainError("row-sum vector length must equal n");
    }
}

namespace {

class MatrixCounter {
public:
    explicit MatrixCounter(const OracleConfig& cfg)
        : n_(static_cast<std::size_t>(cfg.n)),
          off_(cfg.off_diagonal.begin(), cfg.off_diagonal.end()),
          diag_(cfg.diagonal.begin(), cfg.diagonal.end()),
          sums_(n_, 0) {
        if (const auto* K = std::get_if<std::set<int>>(&cfg.row_sums)) {
            targets_ = K;
            max_target_.assign(n_, K->empty() ? -1 : *K->rbegin());
        } else {
            exact_ = &std::get<std::vector<int>>(cfg.row_sums);
            max_target_ = *exact_;
        }
    }

    std::uint64_t run() {
        count_ = 0;
        if (n_ == 0) return 1;
        place(0, 0);
        return count_;
    }

private:
    bool row_ok(std::size_t i) const {
        return exact_ ? sums_[i] == (*exact_)[i] : targets_->contains(sums_[i]);
    }

    // Cell (i, j) with j >= i; j == i is the diagonal entry.
    void place(std::size_t i, std::size_t j) {
        if (j == n_) {
            // Row i has received every entry.
            if (!row_ok(i)) return;
            if (i + 1 == n_) {
                ++count_;
                return;
            }
            place(i + 1, i + 1);
            return;
        }
        const auto& values = i == j ? diag_ : off_;
        const int mult = i == j ? 2 : 1;
        for (int v : values) {
            const int add_i = mult * v;
            const int add_j = i == j ? 0 : v;
            if (sums_[i] + add_i > max_target_[i]) break;
            if (sums_[j] + add_j > max_target_[j]) break;
            sums_[i] += add_i;
            sums_[j] += add_j;
            place(i, j + 1);
            sums_[i] -= add_i;
            sums_[j] -= add_j;
        }
    }

    std::size_t n_;
    std::vector<int> off_;
    std::vector<int> diag_;
    std::vector<int> sums_;
    std::vector<int> max_target_;
    const std::set<int>* targets_ = nullptr;
    const std::vector<int>* exact_ = nullptr;
    std::uint64_t count_ = 0;
};

}  // namespace

Integer count_matrices(const OracleConfig& cfg) {
    cfg.validate();
    MatrixCounter counter(cfg);
    const std::uint64_t c = counter.run();
    return Integer(std::to_string(c));
}

Integer oracle_m_coefficient(const std::set<int>& J, const std::vector<int>& degrees, int bound,
                             bool allow_slow) {
    if (J.empty()) throw DomainError("edge weight set J must be non-empty");
    OracleConfig cfg;
    cfg.off_diagonal = J;
    cfg.off_diagonal.insert(0);
    cfg.diagonal = {0};
    cfg.row_sums = degrees;
    cfg.n = static_cast<int>(degrees.size());
    cfg.bound = bound;
    cfg.allow_slow = allow_slow;
    return count_matrices(cfg);
}

}  // namespace symgraph
