#include "symgraph/partition.hpp"

#include <algorithm>
#include <numeric>

#include "symgraph/errors.hpp"

namespace symgraph {

Integer factorial(unsigned n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (int p : parts_) {
        if (p < 1) throw DomainError("partition parts must be positive, got " + std::to_string(p));
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition::Partition(Sorted, std::vector<int> parts) : parts_(std::move(parts)) {
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::merged(const Partition& other) const {
    std::vector<int> out;
    out.reserve(parts_.size() + other.parts_.size());
    std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
               std::back_inserter(out), std::greater<>());
    return Partition(Sorted{}, std::move(out));
}

Partition Partition::scaled(int factor) const {
    if (factor < 1) throw DomainError("partition scale factor must be positive");
    std::vector<int> out(parts_);
    for (int& p : out) p *= factor;
    return Partition(Sorted{}, std::move(out));
}

std::string Partition::str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

bool lex_descending_before(const Partition& a, const Partition& b) {
    // Larger sequence first; a proper prefix sorts after its extensions.
    return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                        a.parts().begin(), a.parts().end());
}

int Composition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

PowerNotation to_power_notation(const Partition& lambda) {
    PowerNotation powers;
    for (int p : lambda.parts()) ++powers[p];
    return powers;
}

Partition from_power_notation(const PowerNotation& powers) {
    std::vector<int> parts;
    for (const auto& [value, count] : powers) {
        if (count < 0) throw DomainError("negative multiplicity in power notation");
        parts.insert(parts.end(), static_cast<std::size_t>(count), value);
    }
    return Partition(std::move(parts));
}

namespace {

void check_allowed(const std::set<int>& allowed) {
    if (allowed.empty()) throw DomainError("part set must be non-empty");
    if (*allowed.begin() < 1) throw DomainError("allowed parts must be positive");
}

// Descending recursion over allowed parts (given largest-first) bounded by
// the previous part; emits in lexicographic descending order.
void gen_partitions(int remaining, std::size_t first_idx, const std::vector<int>& desc_parts,
                    std::vector<int>& current, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (std::size_t i = first_idx; i < desc_parts.size(); ++i) {
        int part = desc_parts[i];
        if (part > remaining) continue;
        current.push_back(part);
        gen_partitions(remaining - part, i, desc_parts, current, out);
        current.pop_back();
    }
}

std::vector<Partition> generate(int n, std::vector<int> desc_parts) {
    if (n < 0) throw DomainError("cannot partition a negative integer");
    std::vector<Partition> out;
    std::vector<int> current;
    gen_partitions(n, 0, desc_parts, current, out);
    return out;
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    std::vector<int> parts;
    for (int p = n; p >= 1; --p) parts.push_back(p);
    return generate(n, std::move(parts));
}

std::vector<Partition> partitions_with_parts_in(int n, const std::set<int>& allowed) {
    check_allowed(allowed);
    return generate(n, std::vector<int>(allowed.rbegin(), allowed.rend()));
}

std::vector<Partition> partitions_up_to(int max_weight) {
    std::vector<Partition> out;
    for (int n = 0; n <= max_weight; ++n) {
        auto level = partitions_of(n);
        out.insert(out.end(), std::make_move_iterator(level.begin()),
                   std::make_move_iterator(level.end()));
    }
    return out;
}

void for_each_composition(int n, const std::set<int>& allowed,
                          const std::function<void(const Composition&)>& visit) {
    check_allowed(allowed);
    if (n < 1) throw DomainError("compositions require n >= 1");
    // reachable[r]: some composition of r exists.
    std::vector<char> reachable(static_cast<std::size_t>(n) + 1, 0);
    reachable[0] = 1;
    for (int r = 1; r <= n; ++r) {
        for (int s : allowed) {
            if (s <= r && reachable[static_cast<std::size_t>(r - s)]) {
                reachable[static_cast<std::size_t>(r)] = 1;
                break;
            }
        }
    }
    Composition current;
    std::function<void(int)> rec = [&](int remaining) {
        if (remaining == 0) {
            visit(current);
            return;
        }
        for (int s : allowed) {
            if (s > remaining) break;
            if (!reachable[static_cast<std::size_t>(remaining - s)]) continue;
            current.parts.push_back(s);
            rec(remaining - s);
            current.parts.pop_back();
        }
    };
    if (reachable[static_cast<std::size_t>(n)]) rec(n);
}

std::vector<Composition> compositions_with_parts_in(int n, const std::set<int>& allowed) {
    std::vector<Composition> out;
    for_each_composition(n, allowed, [&](const Composition& c) { out.push_back(c); });
    return out;
}

std::vector<std::vector<Integer>> composition_counts_by_length(int max_n,
                                                               const std::set<int>& allowed) {
    check_allowed(allowed);
    if (max_n < 0) throw DomainError("max_n must be non-negative");
    const auto size = static_cast<std::size_t>(max_n) + 1;
    std::vector<std::vector<Integer>> counts(size, std::vector<Integer>(size, 0));
    counts[0][0] = 1;
    for (std::size_t n = 1; n < size; ++n) {
        for (std::size_t k = 1; k <= n; ++k) {
            Integer total = 0;
            for (int s : allowed) {
                const auto step = static_cast<std::size_t>(s);
                if (step > n) break;
                total += counts[n - step][k - 1];
            }
            counts[n][k] = total;
        }
    }
    return counts;
}

Integer z_of(const Partition& lambda) {
    Integer z = 1;
    for (const auto& [value, count] : to_power_notation(lambda)) {
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(value),
                      static_cast<unsigned long>(count));
        z *= power * factorial(static_cast<unsigned>(count));
    }
    return z;
}

}  // namespace symgraph
