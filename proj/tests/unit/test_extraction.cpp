#include <doctest.h>

#include <algorithm>
#include <random>

#include "support/oracles.hpp"
#include "symgraph/errors.hpp"
#include "symgraph/extraction.hpp"
#include "symgraph/oracle.hpp"

using namespace symgraph;

namespace {

SymSeries p(const Partition& lambda, int max_degree = 8) {
    return SymSeries::monomial(Basis::Power, max_degree, lambda);
}

const WeightProfile kJ23{{2, 3}};

}  // namespace

TEST_CASE("scalar_product examples") {
    CHECK(scalar_product(p({2}), p({2})) == 2);
    CHECK(scalar_product(p({1, 1}), p({2})) == 0);
    CHECK(scalar_product(h_in_p(2), h_in_p(2)) == 1);
    CHECK_THROWS_AS(scalar_product(p({1}), SymSeries::monomial(Basis::Monomial, 2, {1})), DomainError);
}

TEST_CASE("power sums are orthogonal with norm z") {
    const auto all = partitions_up_to(8);
    for (const auto& lambda : all) {
        for (const auto& mu : all) {
            const Rational expected = lambda == mu ? Rational(z_of(lambda)) : Rational(0);
            CHECK(scalar_product(p(lambda), p(mu)) == expected);
        }
    }
}

TEST_CASE("m and h are dual") {
    CHECK(m_h_duality_check({2, 1}, {2, 1}) == 1);
    CHECK(m_h_duality_check({2, 1}, {1, 1, 1}) == 0);
    CHECK(m_h_duality_check({3}, {3}) == 1);
    CHECK_THROWS_AS(m_h_duality_check({3}, {2}), DomainError);
    for (int n = 1; n <= 7; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (const auto& mu : partitions_of(n)) {
                CHECK(m_h_duality_check(lambda, mu) == (lambda == mu ? 1 : 0));
            }
        }
    }
}

TEST_CASE("m_in_p inverts p_to_m") {
    for (const auto& lambda : partitions_of(5)) {
        CHECK(p_to_m(m_in_p(lambda)) == SymSeries::monomial(Basis::Monomial, 5, lambda));
    }
}

TEST_CASE("count_degree_sequence examples") {
    CHECK(count_degree_sequence(kJ23, {2, 2}) == 1);
    CHECK(count_degree_sequence(kJ23, {2, 2, 2, 2}) == 3);
    CHECK(count_degree_sequence(kJ23, {5, 3, 2}) == 1);
    CHECK(count_degree_sequence(kJ23, {6, 3, 3}) == 1);
    CHECK(count_degree_sequence({{1}}, {1, 1, 1}) == 0);
    CHECK(count_degree_sequence({{1}}, {2, 2, 2}) == 1);
    CHECK_THROWS_AS(count_degree_sequence({{1}}, {2, 0}), DomainError);
    CHECK_THROWS_AS(count_degree_sequence(WeightProfile{std::set<int>{}}, {2, 2}), DomainError);
}

TEST_CASE("count_degree_sequence is invariant under reordering") {
    std::vector<int> d{3, 2, 2, 1, 2};
    const WeightProfile prof{{1, 2}};
    const Integer base = count_degree_sequence(prof, d);
    CHECK(base > 0);
    std::sort(d.begin(), d.end());
    do {
        CHECK(count_degree_sequence(prof, d) == base);
    } while (std::next_permutation(d.begin(), d.end()));
}

TEST_CASE("count_degree_sequence equals the m-coefficient of G") {
    for (const auto& J : std::vector<std::set<int>>{{1}, {1, 2}, {2, 3}}) {
        for (auto loops : {LoopPolicy::NoLoops, LoopPolicy::WeightedLoops}) {
            const WeightProfile prof{J, loops};
            const auto G = p_to_m(build_G(prof, 8));
            for (const auto& mu : partitions_up_to(8)) {
                if (mu.empty()) continue;
                CHECK(Rational(count_degree_sequence(prof, mu.parts())) == G.coefficient(mu));
            }
        }
    }
}

TEST_CASE("count_table examples") {
    CHECK(count_table(kJ23, {2}, 8).counts == std::vector<Integer>{1, 0, 1, 0, 3, 0, 15, 0, 105});
    // J = K = {2,3}: every vertex has exactly one edge, so the graphs are
    // perfect matchings with a free choice of weight per edge:
    // (n-1)!! * 2^{n/2}.
    CHECK(count_table(kJ23, {2, 3}, 8).counts == std::vector<Integer>{1, 0, 2, 0, 12, 0, 120, 0, 1680});
    CHECK(count_table({{1}}, {2}, 6).counts == std::vector<Integer>{1, 0, 0, 1, 3, 12, 70});
    CHECK(count_table(kJ23, {2}, 0).counts == std::vector<Integer>{1});
    CHECK_THROWS_AS(count_table(kJ23, {}, 3), DomainError);
}

TEST_CASE("multiset extractor") {
    // sum_i h_3^i h_2^{n-i}: for each i, matchings of the i degree-3
    // vertices times matchings of the rest, i.e. sum_i (i-1)!! (n-i-1)!!.
    CHECK(count_table(kJ23, {2, 3}, 8, Extractor::Multisets).counts ==
          std::vector<Integer>{1, 0, 2, 0, 7, 0, 36, 0, 249});
    // A single degree leaves nothing to choose.
    CHECK(count_table(kJ23, {2}, 8, Extractor::Multisets).counts == count_table(kJ23, {2}, 8).counts);
}

TEST_CASE("multiset extractor sums sorted degree sequences") {
    const WeightProfile prof{{1, 2}};
    const std::set<int> K{1, 2, 4};
    const auto table = count_table(prof, K, 4, Extractor::Multisets);
    const std::vector<int> ks(K.begin(), K.end());
    for (int n = 1; n <= 4; ++n) {
        Integer total = 0;
        // Weakly increasing index vectors enumerate multisets.
        std::vector<int> idx(static_cast<std::size_t>(n), 0);
        while (true) {
            std::vector<int> d;
            for (int i : idx) d.push_back(ks[static_cast<std::size_t>(i)]);
            total += count_degree_sequence(prof, d);
            int pos = n - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == static_cast<int>(ks.size()) - 1) --pos;
            if (pos < 0) break;
            const int v = ++idx[static_cast<std::size_t>(pos)];
            for (int r = pos + 1; r < n; ++r) idx[static_cast<std::size_t>(r)] = v;
        }
        CHECK(table.counts[static_cast<std::size_t>(n)] == total);
    }
}

TEST_CASE("count_table is the sum of per-sequence counts") {
    for (const auto& J : std::vector<std::set<int>>{{1}, {1, 2}}) {
        const std::set<int> K{1, 2, 3};
        const WeightProfile prof{J};
        const auto table = count_table(prof, K, 4);
        for (int n = 1; n <= 4; ++n) {
            // Every sequence in K^n, enumerated as an odometer.
            Integer total = 0;
            std::vector<int> idx(static_cast<std::size_t>(n), 0);
            const std::vector<int> ks(K.begin(), K.end());
            while (true) {
                std::vector<int> d;
                for (int i : idx) d.push_back(ks[static_cast<std::size_t>(i)]);
                total += count_degree_sequence(prof, d);
                std::size_t pos = 0;
                while (pos < idx.size() && ++idx[pos] == static_cast<int>(ks.size())) idx[pos++] = 0;
                if (pos == idx.size()) break;
            }
            CHECK(table.counts[static_cast<std::size_t>(n)] == total);
        }
    }
}

TEST_CASE("odd-forced parity gives zero counts") {
    const auto t = count_table({{1, 2}}, {1, 3}, 5).counts;
    CHECK(t[1] == 0);
    CHECK(t[3] == 0);
    CHECK(t[5] == 0);
}

TEST_CASE("count_table matches brute force on a small grid") {
    for (const auto& J : std::vector<std::set<int>>{{1}, {2}, {1, 2}, {1, 3}}) {
        for (const auto& K : std::vector<std::set<int>>{{1}, {2}, {1, 2}, {3, 4}}) {
            const auto table = count_table({J}, K, 4);
            for (int n = 0; n <= 4; ++n) {
                OracleConfig cfg;
                cfg.off_diagonal = J;
                cfg.off_diagonal.insert(0);
                cfg.row_sums = K;
                cfg.n = n;
                CHECK(table.counts[static_cast<std::size_t>(n)] == count_matrices(cfg));
            }
        }
    }
}
