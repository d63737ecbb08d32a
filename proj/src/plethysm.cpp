#include "symgraph/plethysm.hpp"

#include <algorithm>
#include <map>

#include "symgraph/errors.hpp"

namespace symgraph {

InnerFunction::InnerFunction(SymSeries poly) : poly_(std::move(poly)) {
    if (poly_.basis() != Basis::Power) throw DomainError("plethysm inner function must be in the power basis");
    if (poly_.is_zero()) throw DomainError("plethysm inner function must be nonzero");
    if (sgn(poly_.coefficient(Partition{})) != 0) {
        throw DomainError("plethysm inner function must have zero constant term");
    }
}

SymSeries power_sum_plethysm(int n, const InnerFunction& inner, int max_degree) {
    SymSeries out(Basis::Power, max_degree);
    for (const auto& [lambda, c] : inner.series().terms()) {
        if (static_cast<long>(lambda.weight()) * n > max_degree) break;
        out.accumulate(lambda.scaled(n), c);
    }
    return out;
}

SymSeries pleth_p(const SymSeries& outer, const InnerFunction& inner, int max_degree) {
    if (outer.basis() != Basis::Power) throw DomainError("pleth_p requires a power-basis outer series");
    const int dmin = inner.min_degree();
    int bound = outer.max_degree() * dmin;
    if (max_degree >= 0) bound = std::min(bound, max_degree);

    // p_n[inner] is shared by every outer term containing part n.
    std::map<int, SymSeries> renamed;
    auto renamed_for = [&](int n) -> const SymSeries& {
        auto it = renamed.find(n);
        if (it == renamed.end()) it = renamed.emplace(n, power_sum_plethysm(n, inner, bound)).first;
        return it->second;
    };

    SymSeries out(Basis::Power, bound);
    for (const auto& [lambda, c] : outer.terms()) {
        if (static_cast<long>(lambda.weight()) * dmin > bound) break;
        SymSeries product = SymSeries::one(Basis::Power, bound);
        // Truncating inside the product keeps intermediates small.
        for (int part : lambda.parts()) {
            product = multiply(product, renamed_for(part));
            if (product.is_zero()) break;
        }
        for (const auto& [mu, d] : product.terms()) out.accumulate(mu, c * d);
    }
    return out;
}

InnerFunction e2_inner() { return InnerFunction(e_in_p(2)); }
InnerFunction h2_inner() { return InnerFunction(h_in_p(2)); }

}  // namespace symgraph
