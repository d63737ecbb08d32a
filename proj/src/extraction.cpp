#include "symgraph/extraction.hpp"

#include <algorithm>
#include <numeric>

#include "symgraph/errors.hpp"

namespace symgraph {

Rational scalar_product(const SymSeries& a, const SymSeries& b) {
    if (a.basis() != Basis::Power || b.basis() != Basis::Power) {
        throw DomainError("scalar_product requires power-basis series");
    }
    const int bound = std::min(a.max_degree(), b.max_degree());
    const auto& small = a.size() <= b.size() ? a.terms() : b.terms();
    const auto& large = a.size() <= b.size() ? b.terms() : a.terms();
    Rational total = 0;
    for (const auto& [lambda, c] : small) {
        if (lambda.weight() > bound) break;
        auto it = large.find(lambda);
        if (it != large.end()) total += c * it->second * Rational(z_of(lambda));
    }
    return total;
}

namespace {

// Solves x M = e_target for x, where M[i][j] is the m_{basis[j]}
// coefficient of p_{basis[i]}, by Gauss-Jordan over Q.
std::vector<Rational> solve_row(std::vector<std::vector<Rational>> M, std::size_t target) {
    const std::size_t n = M.size();
    // Work on the transpose: M^T x = e_target.
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(n + 1, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) A[j][i] = M[i][j];
    }
    A[target][n] = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(A[pivot][col]) == 0) ++pivot;
        if (pivot == n) throw ConsistencyError("p -> m transition matrix is singular");
        std::swap(A[pivot], A[col]);
        const Rational inv = 1 / A[col][col];
        for (auto& v : A[col]) v *= inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(A[r][col]) == 0) continue;
            const Rational f = A[r][col];
            for (std::size_t c = col; c <= n; ++c) A[r][c] -= f * A[col][c];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = A[i][n];
    return x;
}

void require_graph_count(const Rational& value, const char* what) {
    if (!is_integer(value) || sgn(value) < 0) {
        throw ConsistencyError(std::string(what) + " produced " + value.get_str() +
                               ", not a non-negative integer");
    }
}

void validate_degrees(const std::vector<int>& degrees) {
    for (int d : degrees) {
        if (d < 1) throw DomainError("degrees must be positive integers");
    }
}

}  // namespace

SymSeries m_in_p(const Partition& lambda) {
    const int n = lambda.weight();
    const auto basis = partitions_of(n);
    std::vector<std::vector<Rational>> M(basis.size(), std::vector<Rational>(basis.size(), 0));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const SymSeries m = p_to_m(SymSeries::monomial(Basis::Power, n, basis[i]));
        for (std::size_t j = 0; j < basis.size(); ++j) M[i][j] = m.coefficient(basis[j]);
    }
    const auto target = static_cast<std::size_t>(
        std::find(basis.begin(), basis.end(), lambda) - basis.begin());
    const auto x = solve_row(std::move(M), target);
    SymSeries out(Basis::Power, n);
    for (std::size_t i = 0; i < basis.size(); ++i) out.accumulate(basis[i], x[i]);
    return out;
}

Rational m_h_duality_check(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) throw DomainError("duality check requires equal weights");
    const int n = lambda.weight();
    SymSeries h = SymSeries::one(Basis::Power, n);
    for (int part : mu.parts()) h = multiply(h, h_in_p(part, n));
    return scalar_product(m_in_p(lambda), h);
}

Integer count_degree_sequence(const WeightProfile& profile, const std::vector<int>& degrees) {
    profile.validate();
    validate_degrees(degrees);
    const int total = std::accumulate(degrees.begin(), degrees.end(), 0);
    if (profile.loops == LoopPolicy::NoLoops && total % 2 != 0) return 0;
    const int max_part = degrees.empty() ? 0 : *std::max_element(degrees.begin(), degrees.end());

    SymSeries extractor = SymSeries::one(Basis::Power, total);
    for (int d : degrees) extractor = multiply(extractor, h_in_p(d, total));
    // The extractor only involves p_k with k <= max(d).
    const SymSeries G = build_G(profile, total).restricted_parts(max_part);
    const Rational value = scalar_product(G, extractor);
    require_graph_count(value, "count_degree_sequence");
    return value.get_num();
}

namespace {

// Terms of the extractor series at z^0..z^n_max.
std::vector<SymSeries> extractor_terms(const std::set<int>& K, int n_max, int D, Extractor extractor) {
    std::vector<SymSeries> terms;
    terms.reserve(static_cast<std::size_t>(n_max) + 1);
    terms.push_back(SymSeries::one(Basis::Power, D));
    if (extractor == Extractor::Sequences) {
        SymSeries step(Basis::Power, D);
        for (int k : K) step = add(step, h_in_p(k, D));
        for (int n = 1; n <= n_max; ++n) terms.push_back(multiply(terms.back(), step));
        return terms;
    }
    // prod_{k in K} 1 / (1 - h_k z), one factor at a time.
    terms.resize(static_cast<std::size_t>(n_max) + 1, SymSeries(Basis::Power, D));
    bool first = true;
    for (int k : K) {
        std::vector<SymSeries> powers{SymSeries::one(Basis::Power, D)};
        const SymSeries hk = h_in_p(k, D);
        for (int j = 1; j <= n_max; ++j) powers.push_back(multiply(powers.back(), hk));
        if (first) {
            terms = powers;
            first = false;
            continue;
        }
        std::vector<SymSeries> next(terms.size(), SymSeries(Basis::Power, D));
        for (std::size_t n = 0; n < terms.size(); ++n) {
            for (std::size_t j = 0; j <= n; ++j) next[n] = add(next[n], multiply(powers[j], terms[n - j]));
        }
        terms = std::move(next);
    }
    return terms;
}

}  // namespace

CountTable count_table(const WeightProfile& profile, const std::set<int>& K, int n_max, Extractor extractor) {
    profile.validate();
    if (K.empty()) throw DomainError("degree set K must be non-empty");
    if (*K.begin() < 1) throw DomainError("degrees must be positive integers");
    if (n_max < 0) throw DomainError("n_max must be non-negative");
    const int max_k = *K.rbegin();
    const int D = n_max * max_k;

    // Extractors only involve p_k with k <= max(K).
    const SymSeries G = build_G(profile, D).restricted_parts(max_k);
    const auto terms = extractor_terms(K, n_max, D, extractor);

    CountTable table;
    table.counts.reserve(terms.size());
    for (const auto& term : terms) {
        const Rational value = scalar_product(G, term);
        require_graph_count(value, "count_table");
        table.counts.push_back(value.get_num());
    }
    return table;
}

}  // namespace symgraph
