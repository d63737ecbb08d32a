#include "symgraph/symseries.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "symgraph/errors.hpp"

namespace symgraph {

std::string_view basis_symbol(Basis basis) {
    switch (basis) {
        case Basis::Power: return "p";
        case Basis::Monomial: return "m";
        case Basis::Complete: return "h";
        case Basis::Elementary: return "e";
    }
    return "?";
}

Basis basis_from_symbol(std::string_view symbol) {
    if (symbol == "p") return Basis::Power;
    if (symbol == "m") return Basis::Monomial;
    if (symbol == "h") return Basis::Complete;
    if (symbol == "e") return Basis::Elementary;
    throw DomainError("unknown basis symbol '" + std::string(symbol) + "'");
}

SymSeries::SymSeries(Basis basis, int max_degree) : basis_(basis), max_degree_(max_degree) {
    if (max_degree < 0) throw DomainError("max_degree must be non-negative");
}

SymSeries SymSeries::monomial(Basis basis, int max_degree, const Partition& lambda,
                              const Rational& coeff) {
    SymSeries s(basis, max_degree);
    s.accumulate(lambda, coeff);
    return s;
}

Rational SymSeries::coefficient(const Partition& lambda) const {
    if (lambda.weight() > max_degree_) {
        throw DomainError("coefficient of " + lambda.str() + " requested above truncation degree " +
                          std::to_string(max_degree_));
    }
    auto it = terms_.find(lambda);
    return it == terms_.end() ? Rational(0) : it->second;
}

void SymSeries::accumulate(const Partition& lambda, const Rational& c) {
    if (lambda.weight() > max_degree_ || sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(lambda, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

SymSeries SymSeries::degree_part(int degree) const {
    SymSeries out(basis_, max_degree_);
    for (const auto& [lambda, c] : terms_) {
        if (lambda.weight() == degree) out.terms_.emplace_hint(out.terms_.end(), lambda, c);
    }
    return out;
}

SymSeries SymSeries::truncated(int max_degree) const {
    SymSeries out(basis_, std::min(max_degree, max_degree_));
    for (const auto& [lambda, c] : terms_) {
        if (lambda.weight() > out.max_degree_) break;
        out.terms_.emplace_hint(out.terms_.end(), lambda, c);
    }
    return out;
}

SymSeries SymSeries::restricted_parts(int max_part) const {
    SymSeries out(basis_, max_degree_);
    for (const auto& [lambda, c] : terms_) {
        if (lambda.largest() <= max_part) out.terms_.emplace_hint(out.terms_.end(), lambda, c);
    }
    return out;
}

int SymSeries::min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.weight(); }

namespace {

void require_same_basis(const SymSeries& a, const SymSeries& b, const char* op) {
    if (a.basis() != b.basis()) {
        throw DomainError(std::string(op) + ": basis mismatch (" + std::string(basis_symbol(a.basis())) +
                          " vs " + std::string(basis_symbol(b.basis())) + ")");
    }
}

void require_power(const SymSeries& a, const char* op) {
    if (a.basis() != Basis::Power) {
        throw DomainError(std::string(op) + " requires the power-sum basis");
    }
}

using TermList = std::vector<std::pair<Partition, Rational>>;

// Splits a series into homogeneous components indexed by degree.
std::vector<TermList> by_degree(const SymSeries& a) {
    std::vector<TermList> out(static_cast<std::size_t>(a.max_degree()) + 1);
    for (const auto& [lambda, c] : a.terms()) {
        out[static_cast<std::size_t>(lambda.weight())].emplace_back(lambda, c);
    }
    return out;
}

}  // namespace

SymSeries add(const SymSeries& a, const SymSeries& b) {
    require_same_basis(a, b, "add");
    SymSeries out = a.truncated(std::min(a.max_degree(), b.max_degree()));
    for (const auto& [lambda, c] : b.terms()) out.accumulate(lambda, c);
    return out;
}

SymSeries subtract(const SymSeries& a, const SymSeries& b) { return add(a, scale(b, -1)); }

SymSeries scale(const SymSeries& a, const Rational& c) {
    SymSeries out(a.basis(), a.max_degree());
    if (sgn(c) == 0) return out;
    for (const auto& [lambda, coeff] : a.terms()) out.accumulate(lambda, coeff * c);
    return out;
}

SymSeries multiply(const SymSeries& a, const SymSeries& b) {
    require_power(a, "multiply");
    require_power(b, "multiply");
    const int bound = std::min(a.max_degree(), b.max_degree());
    SymSeries out(Basis::Power, bound);
    for (const auto& [la, ca] : a.terms()) {
        if (la.weight() > bound) break;
        for (const auto& [lb, cb] : b.terms()) {
            if (la.weight() + lb.weight() > bound) break;
            out.accumulate(la.merged(lb), ca * cb);
        }
    }
    return out;
}

// Graded recursion from the degree operator N (multiply the degree-n part
// by n): N is a derivation, so N(exp a) = N(a) exp(a), giving
//   F_n = (1/n) sum_{k=1..n} k A_k F_{n-k},  F_0 = 1.
SymSeries exp_series(const SymSeries& a) {
    require_power(a, "exp_series");
    if (sgn(a.coefficient(Partition{})) != 0) {
        throw DomainError("exp_series requires a zero constant term");
    }
    const int bound = a.max_degree();
    const auto gens = by_degree(a);
    std::vector<TermList> result(static_cast<std::size_t>(bound) + 1);
    result[0].emplace_back(Partition{}, Rational(1));

    for (int n = 1; n <= bound; ++n) {
        SymSeries level(Basis::Power, bound);
        for (int k = 1; k <= n; ++k) {
            const auto& gk = gens[static_cast<std::size_t>(k)];
            const auto& prev = result[static_cast<std::size_t>(n - k)];
            if (gk.empty() || prev.empty()) continue;
            for (const auto& [lg, cg] : gk) {
                const Rational weighted = cg * k;
                for (const auto& [lf, cf] : prev) level.accumulate(lg.merged(lf), weighted * cf);
            }
        }
        const Rational inv_n(1, n);
        auto& dest = result[static_cast<std::size_t>(n)];
        dest.reserve(level.size());
        for (const auto& [lambda, c] : level.terms()) dest.emplace_back(lambda, c * inv_n);
    }

    SymSeries out(Basis::Power, bound);
    for (const auto& level : result) {
        for (const auto& [lambda, c] : level) out.accumulate(lambda, c);
    }
    return out;
}

namespace {

SymSeries waring(int k, int max_degree, bool signed_terms) {
    if (k < 1) throw DomainError("h/e index must be at least 1");
    if (max_degree < 0) max_degree = k;
    SymSeries out(Basis::Power, max_degree);
    for (const auto& lambda : partitions_of(k)) {
        Rational c(1);
        c /= Rational(z_of(lambda));
        if (signed_terms && (k - static_cast<int>(lambda.length())) % 2 != 0) c = -c;
        out.accumulate(lambda, c);
    }
    return out;
}

}  // namespace

SymSeries h_in_p(int k, int max_degree) { return waring(k, max_degree, false); }
SymSeries e_in_p(int k, int max_degree) { return waring(k, max_degree, true); }

namespace {

// Bins are interchangeable once only their remaining capacities matter, so
// the state is (next part, sorted capacities) and equal capacities are
// counted once with their multiplicity.
class BinFiller {
public:
    explicit BinFiller(const Partition& lambda) : parts_(lambda.parts()) {}

    Integer count(std::size_t idx, const std::vector<int>& capacities) {
        if (idx == parts_.size()) return capacities.empty() ? Integer(1) : Integer(0);
        auto key = std::make_pair(idx, capacities);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        const int part = parts_[idx];
        Integer total = 0;
        std::size_t j = 0;
        while (j < capacities.size()) {
            const int cap = capacities[j];
            std::size_t run = j;
            while (run < capacities.size() && capacities[run] == cap) ++run;
            if (cap >= part) {
                std::vector<int> next(capacities);
                next[j] = cap - part;
                if (next[j] == 0) {
                    next.erase(next.begin() + static_cast<std::ptrdiff_t>(j));
                } else {
                    std::sort(next.begin(), next.end(), std::greater<>());
                }
                total += Integer(static_cast<unsigned long>(run - j)) * count(idx + 1, next);
            }
            j = run;
        }
        memo_.emplace(std::move(key), total);
        return total;
    }

private:
    const std::vector<int>& parts_;
    std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo_;
};

}  // namespace

Integer power_to_monomial_coefficient(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) return 0;
    if (lambda.length() < mu.length() || lambda.largest() > mu.largest()) return 0;
    BinFiller filler(lambda);
    return filler.count(0, mu.parts());
}

SymSeries p_to_m(const SymSeries& a) {
    require_power(a, "p_to_m");
    SymSeries out(Basis::Monomial, a.max_degree());
    const auto levels = by_degree(a);
    for (int g = 0; g <= a.max_degree(); ++g) {
        const auto& level = levels[static_cast<std::size_t>(g)];
        if (level.empty()) continue;
        for (const auto& mu : partitions_of(g)) {
            Rational c = 0;
            for (const auto& [lambda, coeff] : level) {
                Integer n = power_to_monomial_coefficient(lambda, mu);
                if (n != 0) c += coeff * Rational(n);
            }
            out.accumulate(mu, c);
        }
    }
    return out;
}

std::string to_string(const SymSeries& a, bool include_constant) {
    std::string out;
    const auto sym = std::string(basis_symbol(a.basis()));
    for (const auto& [lambda, c] : a.terms()) {
        if (lambda.empty() && !include_constant) continue;
        Rational mag = abs(c);
        const bool negative = sgn(c) < 0;
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string label;
        if (!lambda.empty()) {
            label = sym + "[";
            for (std::size_t i = 0; i < lambda.length(); ++i) {
                if (i) label += ",";
                label += std::to_string(lambda.parts()[i]);
            }
            label += "]";
        }
        if (label.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += label;
        } else {
            out += mag.get_str() + " " + label;
        }
    }
    return out.empty() ? "0" : out;
}

nlohmann::json to_json(const SymSeries& a) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [lambda, c] : a.terms()) {
        terms.push_back({{"partition", lambda.parts()},
                         {"num", c.get_num().get_str()},
                         {"den", c.get_den().get_str()}});
    }
    return {{"basis", std::string(basis_symbol(a.basis()))},
            {"max_degree", a.max_degree()},
            {"terms", std::move(terms)}};
}

SymSeries series_from_json(const nlohmann::json& j) {
    try {
        SymSeries out(basis_from_symbol(j.at("basis").get<std::string>()), j.at("max_degree").get<int>());
        for (const auto& t : j.at("terms")) {
            Partition lambda(t.at("partition").get<std::vector<int>>());
            Integer num, den;
            if (num.set_str(t.at("num").get<std::string>(), 10) != 0 ||
                den.set_str(t.at("den").get<std::string>(), 10) != 0) {
                throw DomainError("malformed rational in series JSON");
            }
            if (sgn(den) <= 0) throw DomainError("rational denominator must be positive");
            if (lambda.weight() > out.max_degree()) {
                throw DomainError("term " + lambda.str() + " exceeds max_degree");
            }
            out.accumulate(lambda, make_rational(num, den));
        }
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("invalid series JSON: ") + e.what());
    }
}

}  // namespace symgraph
