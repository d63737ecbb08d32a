#include "symgraph/graph_series.hpp"

#include "symgraph/errors.hpp"

namespace symgraph {

void WeightProfile::validate() const {
    if (edge_weights.empty()) throw DomainError("edge weight set J must be non-empty");
    if (*edge_weights.begin() < 1) throw DomainError("edge weights must be positive");
}

namespace {

void check_args(const std::set<int>& J, int N) {
    WeightProfile{J}.validate();
    if (N < 1) throw DomainError("coefficient count N must be at least 1");
}

}  // namespace

ACoeffs a_coeffs_compositions(const std::set<int>& J, int N) {
    check_args(J, N);
    // Each composition contributes -(-1)^k / k with k its length, so only
    // the number of compositions per length matters.
    const auto counts = composition_counts_by_length(N, J);
    ACoeffs out;
    out.values.reserve(static_cast<std::size_t>(N));
    for (int n = 1; n <= N; ++n) {
        Rational a = 0;
        for (int k = 1; k <= n; ++k) {
            const Integer& c = counts[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
            if (c == 0) continue;
            Rational term(c, k);
            term.canonicalize();
            // -(-1)^k = +1 for odd k.
            a += (k % 2 == 1) ? term : Rational(-term);
        }
        out.values.push_back(a);
    }
    return out;
}

ACoeffs a_coeffs_log(const std::set<int>& J, int N) {
    check_args(J, N);
    const auto size = static_cast<std::size_t>(N) + 1;
    std::vector<Rational> u(size, 0);
    for (int s : J) {
        if (s <= N) u[static_cast<std::size_t>(s)] = 1;
    }
    // L = log(1 + U) satisfies L' (1 + U) = U', i.e.
    // n L_n = n U_n - sum_{k=1}^{n-1} k L_k U_{n-k}.
    std::vector<Rational> log_coeffs(size, 0);
    for (std::size_t n = 1; n < size; ++n) {
        Rational acc = Rational(static_cast<long>(n)) * u[n];
        for (std::size_t k = 1; k < n; ++k) {
            if (sgn(u[n - k]) == 0) continue;
            acc -= Rational(static_cast<long>(k)) * log_coeffs[k] * u[n - k];
        }
        log_coeffs[n] = acc / Rational(static_cast<long>(n));
    }
    return ACoeffs{{log_coeffs.begin() + 1, log_coeffs.end()}};
}

SymSeries build_F(const std::set<int>& J, int D) {
    WeightProfile{J}.validate();
    SymSeries exponent(Basis::Power, D);
    if (D >= 1) {
        const auto a = a_coeffs_compositions(J, D);
        for (int n = 1; n <= D; ++n) exponent.accumulate(Partition{n}, a.at(n));
    }
    return exp_series(exponent);
}

SymSeries build_G(const WeightProfile& profile, int D) {
    profile.validate();
    SymSeries exponent(Basis::Power, D);
    const int half = D / 2;
    if (half >= 1) {
        const auto a = a_coeffs_compositions(profile.edge_weights, half);
        const Rational sign = profile.loops == LoopPolicy::NoLoops ? -1 : 1;
        for (int n = 1; n <= half; ++n) {
            const Rational c = a.at(n) / 2;
            exponent.accumulate(Partition{n, n}, c);
            exponent.accumulate(Partition{2 * n}, c * sign);
        }
    }
    return exp_series(exponent);
}

SymSeries build_G_plethysm(const WeightProfile& profile, int D) {
    profile.validate();
    // F through degree floor(D/2) is enough: its missing terms start at
    // degree floor(D/2)+1 and land at twice that, beyond D.
    const SymSeries F = build_F(profile.edge_weights, D / 2);
    const InnerFunction inner = profile.loops == LoopPolicy::NoLoops ? e2_inner() : h2_inner();
    SymSeries G = pleth_p(F, inner, D);
    if (G.max_degree() < D) {
        // D odd: the top odd degree has no contribution; re-home the terms.
        SymSeries widened(Basis::Power, D);
        for (const auto& [lambda, c] : G.terms()) widened.accumulate(lambda, c);
        return widened;
    }
    return G;
}

}  // namespace symgraph
