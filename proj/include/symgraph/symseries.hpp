#pragma once

#include <map>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "symgraph/partition.hpp"
#include "symgraph/rational.hpp"

namespace symgraph {

enum class Basis { Power, Monomial, Complete, Elementary };

std::string_view basis_symbol(Basis basis);  // "p", "m", "h", "e"
Basis basis_from_symbol(std::string_view symbol);

/// Truncated symmetric series sum_lambda c_lambda b_lambda over one basis b.
///
/// Only nonzero coefficients are stored and every key has weight at most
/// max_degree; both hold after every public operation, so two series are
/// equal exactly when their term maps are.
class SymSeries {
public:
    using Terms = std::map<Partition, Rational, CanonicalOrder>;

    SymSeries(Basis basis, int max_degree);

    /// Single term c * b_lambda; dropped if weight exceeds max_degree.
    static SymSeries monomial(Basis basis, int max_degree, const Partition& lambda,
                              const Rational& coeff = 1);
    static SymSeries one(Basis basis, int max_degree) {
        return monomial(basis, max_degree, Partition{});
    }

    Basis basis() const noexcept { return basis_; }
    int max_degree() const noexcept { return max_degree_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    /// Stored coefficient, zero if absent. Throws DomainError when
    /// weight(lambda) > max_degree because such a term would have been dropped.
    Rational coefficient(const Partition& lambda) const;

    /// Adds c to the coefficient of lambda, erasing it on cancellation.
    /// Terms above max_degree are ignored.
    void accumulate(const Partition& lambda, const Rational& c);

    /// Homogeneous component of the given degree.
    SymSeries degree_part(int degree) const;
    /// Same series re-truncated at a lower bound.
    SymSeries truncated(int max_degree) const;
    /// Drops every term containing a part larger than max_part.
    ///
    /// In the power basis this is the ring map p_k -> 0 for k > max_part, so
    /// it commutes with multiply and exp_series.
    SymSeries restricted_parts(int max_part) const;
    /// Lowest degree carrying a nonzero coefficient, or -1 for zero.
    int min_degree() const;

    friend bool operator==(const SymSeries&, const SymSeries&) = default;

private:
    Basis basis_;
    int max_degree_;
    Terms terms_;
};

SymSeries add(const SymSeries& a, const SymSeries& b);
SymSeries subtract(const SymSeries& a, const SymSeries& b);
SymSeries scale(const SymSeries& a, const Rational& c);

/// Power-basis product: p_lambda * p_mu = p_{lambda u mu}.
SymSeries multiply(const SymSeries& a, const SymSeries& b);

/// exp(a) = sum_j a^j / j!, truncated at a.max_degree. Requires the power
/// basis and a zero constant term.
SymSeries exp_series(const SymSeries& a);

/// h_k = sum_{lambda |- k} p_lambda / z_lambda.
SymSeries h_in_p(int k, int max_degree = -1);
/// e_k = sum_{lambda |- k} (-1)^{k - len(lambda)} p_lambda / z_lambda.
SymSeries e_in_p(int k, int max_degree = -1);

/// Rewrites a power-basis series in the monomial basis.
SymSeries p_to_m(const SymSeries& a);

/// Coefficient of x^mu (mu read as an exponent vector) in p_lambda: the
/// number of ways to drop the parts of lambda into the bins of mu so that
/// every bin fills exactly.
Integer power_to_monomial_coefficient(const Partition& lambda, const Partition& mu);

/// Human-readable rendering, e.g. "1/2 p[1,1] - 1/2 p[2]".
std::string to_string(const SymSeries& a, bool include_constant = true);

nlohmann::json to_json(const SymSeries& a);
SymSeries series_from_json(const nlohmann::json& j);

}  // namespace symgraph
