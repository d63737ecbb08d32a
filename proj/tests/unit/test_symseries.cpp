#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "symgraph/errors.hpp"
#include "symgraph/symseries.hpp"

using namespace symgraph;

namespace {

SymSeries p(const Partition& lambda, const Rational& c = 1, int max_degree = 8) {
    return SymSeries::monomial(Basis::Power, max_degree, lambda, c);
}

Rational q(long num, long den) { return make_rational(num, den); }

}  // namespace

TEST_CASE("add") {
    CHECK(add(p({1}), p({1}, -1)).is_zero());
    const auto s = add(p({2}), p({1}));
    CHECK(s.size() == 2);
    CHECK(s.coefficient({1}) == 1);
    CHECK(s.coefficient({2}) == 1);
    CHECK(add(p({2}, q(1, 2)), p({2}, q(1, 2))) == p({2}));
    CHECK(add(p({1}, 1, 8), p({1}, 1, 3)).max_degree() == 3);
    CHECK_THROWS_AS(add(p({1}), SymSeries::monomial(Basis::Monomial, 8, {1})), DomainError);
}

TEST_CASE("multiply") {
    CHECK(multiply(p({1}), p({1})) == p({1, 1}));
    CHECK(multiply(p({2}), p({2, 1})) == p({2, 2, 1}));
    const auto trunc = multiply(add(p({1}, 1, 2), p({2}, 1, 2)), p({1}, 1, 2));
    CHECK(trunc == p({1, 1}, 1, 2));
    CHECK_THROWS_AS(multiply(p({1}), SymSeries::monomial(Basis::Monomial, 8, {1})), DomainError);
}

TEST_CASE("exp_series small cases") {
    const Rational c = q(3, 7);
    const auto e = exp_series(p({1}, c, 2));
    SymSeries expected = SymSeries::one(Basis::Power, 2);
    expected.accumulate({1}, c);
    expected.accumulate({1, 1}, c * c / 2);
    CHECK(e == expected);
    CHECK_THROWS_AS(exp_series(add(p({1}), SymSeries::one(Basis::Power, 8))), DomainError);
    CHECK(exp_series(SymSeries(Basis::Power, 5)) == SymSeries::one(Basis::Power, 5));
}

TEST_CASE("Waring exponentials give sum of h_n and e_n") {
    const int D = 10;
    SymSeries hsum(Basis::Power, D), esum(Basis::Power, D);
    for (int k = 1; k <= D; ++k) {
        hsum.accumulate({k}, q(1, k));
        esum.accumulate({k}, q(k % 2 == 1 ? 1 : -1, k));
    }
    const auto H = exp_series(hsum);
    const auto E = exp_series(esum);
    for (const auto& lambda : partitions_up_to(D)) {
        const Rational inv_z = Rational(1) / Rational(z_of(lambda));
        const bool odd = (lambda.weight() - static_cast<int>(lambda.length())) % 2 != 0;
        CHECK(H.coefficient(lambda) == inv_z);
        CHECK(E.coefficient(lambda) == (odd ? Rational(-inv_z) : inv_z));
    }
}

TEST_CASE("h_in_p and e_in_p") {
    CHECK(h_in_p(1) == p({1}, 1, 1));
    SymSeries h2(Basis::Power, 2);
    h2.accumulate({1, 1}, q(1, 2));
    h2.accumulate({2}, q(1, 2));
    CHECK(h_in_p(2) == h2);
    const auto h3 = h_in_p(3);
    CHECK(h3.coefficient({1, 1, 1}) == q(1, 6));
    CHECK(h3.coefficient({2, 1}) == q(1, 2));
    CHECK(h3.coefficient({3}) == q(1, 3));

    CHECK(e_in_p(1) == p({1}, 1, 1));
    const auto e2 = e_in_p(2);
    CHECK(e2.coefficient({1, 1}) == q(1, 2));
    CHECK(e2.coefficient({2}) == q(-1, 2));
    const auto e3 = e_in_p(3);
    CHECK(e3.coefficient({1, 1, 1}) == q(1, 6));
    CHECK(e3.coefficient({2, 1}) == q(-1, 2));
    CHECK(e3.coefficient({3}) == q(1, 3));
    CHECK_THROWS_AS(h_in_p(0), DomainError);
}

TEST_CASE("p_to_m examples") {
    CHECK(p_to_m(p({1}, 1, 1)) == SymSeries::monomial(Basis::Monomial, 1, {1}));
    const auto m11 = p_to_m(p({1, 1}, 1, 2));
    CHECK(m11.coefficient({2}) == 1);
    CHECK(m11.coefficient({1, 1}) == 2);
    CHECK(m11.size() == 2);
    CHECK(p_to_m(p({2}, 1, 2)) == SymSeries::monomial(Basis::Monomial, 2, {2}));
}

TEST_CASE("p_to_m agrees with literal expansion in max_degree variables") {
    std::mt19937 rng(1234);
    for (int trial = 0; trial < 20; ++trial) {
        const int D = 1 + trial % 6;
        const auto a = testing::random_p_series(rng, D, 6, trial % 2 == 0);
        CHECK(p_to_m(a) == testing::literal_p_to_m(a, D));
    }
}

TEST_CASE("h_n and e_n in the monomial basis") {
    for (int n = 1; n <= 8; ++n) {
        const auto hm = p_to_m(h_in_p(n));
        const auto parts = partitions_of(n);
        CHECK(hm.size() == parts.size());
        for (const auto& lambda : parts) CHECK(hm.coefficient(lambda) == 1);
        const auto em = p_to_m(e_in_p(n));
        CHECK(em == SymSeries::monomial(Basis::Monomial, n, Partition(std::vector<int>(n, 1))));
    }
}

TEST_CASE("coefficient") {
    const auto s = add(p({1}, 1, 4), p({2}, 3, 4));
    CHECK(s.coefficient({2}) == 3);
    CHECK(p({1}, 1, 4).coefficient({3}) == 0);
    CHECK(h_in_p(2).coefficient({1, 1}) == q(1, 2));
    CHECK_THROWS_AS(p({1}, 1, 4).coefficient({5}), DomainError);
}

TEST_CASE("exp_series matches the Taylor sum and is a homomorphism") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 15; ++trial) {
        const int D = 6;
        const auto a = testing::random_p_series(rng, D, 4, false);
        const auto b = testing::random_p_series(rng, D, 4, false);
        CHECK(exp_series(a) == testing::naive_exp(a));
        CHECK(exp_series(add(a, b)) == multiply(exp_series(a), exp_series(b)));
    }
}

TEST_CASE("multiply is commutative and associative") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        const auto a = testing::random_p_series(rng, 8, 5, true);
        const auto b = testing::random_p_series(rng, 8, 5, true);
        const auto c = testing::random_p_series(rng, 8, 5, true);
        CHECK(multiply(a, b) == multiply(b, a));
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}

TEST_CASE("truncation coherence") {
    std::mt19937 rng(31);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = testing::random_p_series(rng, 9, 6, false);
        const auto b = testing::random_p_series(rng, 9, 6, true);
        for (int d = 1; d < 9; ++d) {
            CHECK(exp_series(a).truncated(d) == exp_series(a.truncated(d)));
            CHECK(multiply(a, b).truncated(d) == multiply(a.truncated(d), b.truncated(d)));
            CHECK(p_to_m(b).truncated(d) == p_to_m(b.truncated(d)));
        }
    }
}

TEST_CASE("restricted_parts commutes with exp") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = testing::random_p_series(rng, 8, 6, false);
        CHECK(exp_series(a).restricted_parts(3) == exp_series(a.restricted_parts(3)));
    }
}

TEST_CASE("json serialization") {
    const auto h3 = h_in_p(3);
    const auto j = to_json(h3);
    CHECK(j["basis"] == "p");
    CHECK(j["max_degree"] == 3);
    // Canonical order: (3), (2,1), (1,1,1).
    CHECK(j["terms"][0]["partition"] == std::vector<int>{3});
    CHECK(j["terms"][0]["num"] == "1");
    CHECK(j["terms"][0]["den"] == "3");
    CHECK(j["terms"][2]["partition"] == std::vector<int>{1, 1, 1});

    std::mt19937 rng(11);
    for (int trial = 0; trial < 10; ++trial) {
        const auto a = testing::random_p_series(rng, 7, 8, true);
        CHECK(series_from_json(nlohmann::json::parse(to_json(a).dump())) == a);
    }
    CHECK_THROWS_AS(series_from_json(nlohmann::json{{"basis", "x"}, {"max_degree", 1}, {"terms", {}}}),
                    DomainError);
    CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(
                        R"({"basis":"p","max_degree":1,"terms":[{"partition":[2],"num":"1","den":"1"}]})")),
                    DomainError);
    CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(
                        R"({"basis":"p","max_degree":3,"terms":[{"partition":[2],"num":"1","den":"0"}]})")),
                    DomainError);
}

TEST_CASE("text rendering") {
    CHECK(to_string(e_in_p(2)) == "-1/2 p[2] + 1/2 p[1,1]");
    CHECK(to_string(SymSeries(Basis::Power, 3)) == "0");
    CHECK(to_string(add(SymSeries::one(Basis::Monomial, 2), SymSeries::monomial(Basis::Monomial, 2, {1, 1})),
                    false) == "m[1,1]");
}
