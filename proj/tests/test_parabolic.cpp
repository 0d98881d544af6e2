/*
   Copyright 2026 The gwvi Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include "gwvi/parabolic.hpp"
#include "oracles.hpp"

using namespace gwvi;
using gwvi::testing::random_rational;
using gwvi::testing::rng;

namespace {

Rational q(long a, long b = 1) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

MarkedPoint random_point(int rank) {
    // split rank into random multiplicities with increasing weights in [0, 1)
    MarkedPoint p;
    int left = rank;
    long num = 0;
    const long den = 16;
    while (left > 0) {
        std::uniform_int_distribution<int> take(1, left);
        std::uniform_int_distribution<long> step(1, 3);
        const int m = take(rng());
        p.push_back({q(num, den), m});
        num += step(rng());
        left -= m;
        if (num >= den) break;
    }
    if (left > 0) p.back().multiplicity += left;
    return p;
}

}  // namespace

TEST_CASE("parabolic degree examples") {
    CHECK(parabolic_degree({3, 5, {}}) == 5);
    CHECK(parabolic_degree({2, 1, {{{q(1, 2), 2}}}}) == 2);
    const MarkedPoint third{{q(1, 3), 1}, {q(2, 3), 1}};
    CHECK(parabolic_degree({2, 0, {third, third}}) == 2);
}

TEST_CASE("parabolic data validation") {
    CHECK_THROWS_AS(parabolic_degree({2, 0, {{{q(1, 2), 1}}}}), std::invalid_argument);
    CHECK_THROWS_AS(parabolic_degree({2, 0, {{{q(1, 2), 1}, {q(1, 3), 1}}}}), std::invalid_argument);
    CHECK_THROWS_AS(parabolic_degree({1, 0, {{{q(1), 1}}}}), std::invalid_argument);
    CHECK_THROWS_AS(parabolic_degree({1, 0, {{{q(-1, 2), 1}}}}), std::invalid_argument);
    CHECK_THROWS_AS(parabolic_degree({0, 0, {}}), std::invalid_argument);
}

TEST_CASE("parabolic degree is additive and reduces to the plain degree") {
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> rank_dist(1, 5);
        std::uniform_int_distribution<long> deg_dist(-10, 10);
        const int r = rank_dist(rng());
        const long d = deg_dist(rng());
        ParabolicData a{r, d, {random_point(r), random_point(r)}};
        ParabolicData b{r, 0, {random_point(r)}};
        ParabolicData both{r, d, a.points};
        both.points.push_back(b.points[0]);
        CHECK(parabolic_degree(both) == parabolic_degree(a) + parabolic_degree(b));
        ParabolicData zero{r, d, {{{q(0), r}}, {{q(0), r}}}};
        CHECK(parabolic_degree(zero) == d);
    }
}

TEST_CASE("slope comparison") {
    const ParabolicData whole{2, 2, {}};
    CHECK(slope_compare({1, 1, {}}, whole) == SlopeOrder::boundary);
    CHECK(slope_compare({2, 1, {}}, {4, 4, {}}) == SlopeOrder::strict_pass);
    CHECK(slope_compare({1, 2, {}}, whole) == SlopeOrder::fail);
    CHECK_THROWS_AS(slope_compare({2, 0, {}}, whole), std::invalid_argument);
    CHECK_THROWS_AS(slope_compare({3, 0, {}}, whole), std::invalid_argument);
    CHECK(to_string(SlopeOrder::boundary) == "boundary");
}

TEST_CASE("slope trichotomy on random inputs") {
    for (int trial = 0; trial < 300; ++trial) {
        std::uniform_int_distribution<int> rank_dist(2, 6);
        std::uniform_int_distribution<long> deg_dist(-6, 6);
        const int r = rank_dist(rng());
        std::uniform_int_distribution<int> sub_dist(1, r - 1);
        const int s = sub_dist(rng());
        const ParabolicData whole{r, deg_dist(rng()), {random_point(r)}};
        const ParabolicData sub{s, deg_dist(rng()), {random_point(s)}};
        const Rational ls = parabolic_degree(sub) / s;
        const Rational lw = parabolic_degree(whole) / r;
        const int truths = (ls < lw) + (ls == lw) + (ls > lw);
        CHECK(truths == 1);
        const auto order = slope_compare(sub, whole);
        CHECK((order == SlopeOrder::strict_pass) == (ls < lw));
        CHECK((order == SlopeOrder::boundary) == (ls == lw));
        CHECK((order == SlopeOrder::fail) == (ls > lw));
    }
}

TEST_CASE("s-invariant examples") {
    CHECK(s_invariant(2, 1, 2, 1) == 2);
    CHECK(s_invariant(3, 1, 2, 2, 2, {q(1, 2)}) == 5);
    CHECK(s_invariant_node(1, 3) == 3);
    CHECK_THROWS_AS(s_invariant(3, 1, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(s_invariant(3, 1, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(s_invariant(3, 1, 2, 1, -1), std::invalid_argument);
}

TEST_CASE("s-invariant refinement properties") {
    for (int trial = 0; trial < 200; ++trial) {
        std::uniform_int_distribution<int> n_dist(2, 8);
        const int n = n_dist(rng());
        std::uniform_int_distribution<int> k_dist(1, n - 1);
        std::uniform_int_distribution<int> g_dist(0, 4);
        std::uniform_int_distribution<long> N_dist(0, 6);
        const int k = k_dist(rng());
        const int g = g_dist(rng());
        const int eps = k_dist(rng());
        const long N = N_dist(rng());
        CHECK(s_invariant(n, k, g, eps) == static_cast<long>(k) * (n - k) * (g - 1) + eps);
        CHECK(s_invariant(n, k, g, eps, 0, {q(1, 3), q(1, 2)}) == s_invariant(n, k, g, eps));
        std::vector<Rational> mu{q(1, 5), q(2, 7), q(0)};
        const Rational base = s_invariant(n, k, g, eps, N, mu);
        for (std::size_t i = 0; i < mu.size(); ++i) {
            auto bumped = mu;
            bumped[i] += q(1, 9);
            CHECK(s_invariant(n, k, g, eps, N, bumped) >= base);
        }
    }
}

TEST_CASE("moduli dimension") {
    CHECK(moduli_dimension(2, 4, 0) == 2);
    CHECK(moduli_dimension(1, 1, 1) == 2);
    CHECK(moduli_dimension(2, 1, 2) == 12);
    for (int r = 1; r <= 6; ++r)
        for (int n = 0; n <= 6; ++n)
            for (int g = 0; g <= 4; ++g)
                if ((static_cast<long>(n) * r * (r - 1)) % 2 == 0) CHECK(moduli_dimension(r, n, g) % 2 == 0);
}

TEST_CASE("residue degree check") {
    CHECK(residue_degree_check({2, 2, {{q(0), q(0)}, {q(0), q(0)}}, 0}));
    CHECK(residue_degree_check({1, 2, {{q(-3, 2), q(-1, 2)}}, 2}));
    CHECK_FALSE(residue_degree_check({1, 1, {{q(0)}}, 1}));
    CHECK_THROWS_AS(residue_degree_check({2, 1, {{q(0)}}, 0}), std::invalid_argument);
    CHECK_THROWS_AS(residue_degree_check({1, 2, {{q(0)}}, 0}), std::invalid_argument);
}

TEST_CASE("weights from equivariant exponents") {
    const auto a = weights_from_equivariant(4, {0, 1, 3});
    REQUIRE(a.size() == 3);
    CHECK(a[0] == ParabolicWeight{q(0), 1});
    CHECK(a[1] == ParabolicWeight{q(1, 4), 1});
    CHECK(a[2] == ParabolicWeight{q(3, 4), 1});
    const auto b = weights_from_equivariant(2, {0, 0});
    REQUIRE(b.size() == 1);
    CHECK(b[0] == ParabolicWeight{q(0), 2});
    CHECK_THROWS_AS(weights_from_equivariant(3, {5}), std::invalid_argument);
    CHECK_THROWS_AS(weights_from_equivariant(3, {-1}), std::invalid_argument);
    CHECK_THROWS_AS(weights_from_equivariant(0, {}), std::invalid_argument);
    const auto c = weights_from_equivariant(6, {4, 2, 4, 3});
    CHECK(c[0].weight == q(1, 3));
    CHECK(c[1].weight == q(1, 2));
    CHECK(c[2] == ParabolicWeight{q(2, 3), 2});
    CHECK_NOTHROW(validate(ParabolicData{4, 0, {c}}));
}

TEST_CASE("parabolic invariant gates on the shifted s-invariant") {
    ParabolicQuery pq;
    pq.base.n = 4;
    pq.base.k = 2;
    pq.base.g = 1;
    pq.epsilon = 1;
    const auto plain = parabolic_invariant(pq);
    CHECK(plain.threshold == 1);
    CHECK(plain.s_value == 0);
    CHECK_FALSE(plain.in_range);
    CHECK_FALSE(plain.invariant);

    pq.base.e_prime = -1;
    pq.base.monomial = {2, 2};
    REQUIRE(check_admissible(pq.base));
    const auto shifted = parabolic_invariant(pq);
    CHECK(shifted.s_value == 4);
    CHECK(shifted.in_range);
    REQUIRE(shifted.invariant);
    CHECK(shifted.invariant->value == vi_invariant(pq.base).value);

    pq.group_order = 6;
    pq.mu = {q(1, 2)};
    const auto edge = parabolic_invariant(pq);
    CHECK(edge.threshold == 4);
    CHECK(edge.in_range);
    pq.mu = {q(2, 3)};
    CHECK_FALSE(parabolic_invariant(pq).in_range);
}
