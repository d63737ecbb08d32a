#pragma once

#include "symgraph/symseries.hpp"

namespace symgraph {

/// Power-basis polynomial with no constant term, used as the inner argument
/// of a plethysm.
class InnerFunction {
public:
    /// Throws DomainError unless `poly` is in the power basis with a zero
    /// constant term and at least one nonzero term.
    explicit InnerFunction(SymSeries poly);

    const SymSeries& series() const noexcept { return poly_; }
    int min_degree() const noexcept { return poly_.min_degree(); }

private:
    SymSeries poly_;
};

/// p_n[w]: every p_k in w renamed to p_{kn}, truncated at max_degree.
SymSeries power_sum_plethysm(int n, const InnerFunction& inner, int max_degree);

/// outer[inner] for a power-basis outer series.
///
/// A term of outer degree g lands in degrees >= g * inner.min_degree(), so
/// the result is exact through outer.max_degree() * inner.min_degree(); that
/// is the default truncation. A non-negative `max_degree` lowers it further.
SymSeries pleth_p(const SymSeries& outer, const InnerFunction& inner, int max_degree = -1);

/// e_2 = (p_{1,1} - p_2) / 2.
InnerFunction e2_inner();
/// h_2 = (p_{1,1} + p_2) / 2.
InnerFunction h2_inner();

}  // namespace symgraph
