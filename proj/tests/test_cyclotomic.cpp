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

#include <numeric>

#include "gwvi/cyclotomic.hpp"
#include "gwvi/rational.hpp"
#include "oracles.hpp"

using namespace gwvi;
using gwvi::testing::random_rational;

namespace {

CyclotomicNumber random_element(int n) {
    std::vector<Rational> c;
    for (int i = 0; i < euler_phi(n); ++i) c.push_back(random_rational());
    return CyclotomicNumber::from_power_basis(n, c);
}

CyclotomicNumber one(int n) { return CyclotomicNumber(n, 1); }

}  // namespace

TEST_CASE("rational scalars") {
    Rational r(-14, 6);
    r.canonicalize();
    CHECK(to_string(r) == "-7/3");
    CHECK(parse_rational("-7/3") == r);
    CHECK(parse_rational(" +4 ") == 4);
    CHECK(parse_rational("0/5").get_den() == 1);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK(is_integer(Rational(6, 3)));
    CHECK_FALSE(is_integer(Rational(1, 2)));
    CHECK(power(2, -3) == Rational(1, 8));
    CHECK(power(-3, 3) == -27);
    CHECK_THROWS_AS(power(0, -1), std::domain_error);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(20) == 8);
    CHECK(cyclotomic_polynomial(1) == std::vector<long>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<long>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<long>{1, 0, -1, 0, 1});
    for (int n = 1; n <= 40; ++n) CHECK(static_cast<int>(cyclotomic_polynomial(n).size()) == euler_phi(n) + 1);
}

TEST_CASE("multiplication examples") {
    CHECK(CyclotomicNumber::zeta(4) * CyclotomicNumber::zeta(4) == CyclotomicNumber(4, -1));
    for (int n = 1; n <= 12; ++n) CHECK(CyclotomicNumber::zeta(n) * one(n) == CyclotomicNumber::zeta(n));
    CHECK(CyclotomicNumber::zeta(3) * CyclotomicNumber::zeta(3, 2) == one(3));
    CHECK_THROWS_WITH_AS(CyclotomicNumber::zeta(3) * CyclotomicNumber::zeta(4), "incompatible cyclotomic orders",
                         std::invalid_argument);
    for (int n = 1; n <= 24; ++n) {
        CHECK(CyclotomicNumber::zeta(n).pow(n) == one(n));
        CHECK(CyclotomicNumber::zeta(n, n + 3) == CyclotomicNumber::zeta(n, 3));
        CHECK(static_cast<int>(CyclotomicNumber::zeta(n).coefficients().size()) == euler_phi(n));
    }
}

TEST_CASE("inverse examples") {
    for (int n = 2; n <= 12; ++n) CHECK(CyclotomicNumber::zeta(n).inverse() == CyclotomicNumber::zeta(n, n - 1));
    CHECK(CyclotomicNumber(7, 2).inverse() == CyclotomicNumber(7, Rational(1, 2)));
    const auto i = CyclotomicNumber::zeta(4);
    CHECK((one(4) - i).inverse() == (one(4) + i) * Rational(1, 2));
    CHECK_THROWS_WITH_AS(CyclotomicNumber(5).inverse(), "division by zero", std::domain_error);
}

TEST_CASE("rational extraction") {
    for (int n = 2; n <= 24; ++n) {
        CyclotomicNumber s(n);
        for (int j = 0; j < n; ++j) s += CyclotomicNumber::zeta(n, j);
        CHECK(s.to_rational() == 0);
    }
    CHECK(CyclotomicNumber(9, 7).to_rational() == 7);
    try {
        (void)CyclotomicNumber::zeta(5).to_rational();
        FAIL("expected NonRationalValue");
    } catch (const NonRationalValue& e) {
        CHECK(std::string(e.what()).find("non-rational cyclotomic value") != std::string::npos);
        CHECK(e.order() == 5);
        CHECK(e.coefficients()[1] == 1);
    }
}

TEST_CASE("root_power_sum examples") {
    CHECK(root_power_sum(4, 8) == 4);
    CHECK(root_power_sum(4, 2) == 0);
    CHECK(root_power_sum(1, -3) == 1);
}

TEST_CASE("root_power_sum equals the explicit sum") {
    for (int n = 1; n <= 12; ++n)
        for (int t = -30; t <= 30; ++t) {
            CyclotomicNumber s(n);
            for (int j = 0; j < n; ++j) s += CyclotomicNumber::zeta(n, static_cast<long>(j) * t);
            CHECK(s.to_rational() == root_power_sum(n, t));
        }
}

TEST_CASE("field axioms on random samples") {
    for (int n = 1; n <= 24; ++n) {
        for (int trial = 0; trial < 200; ++trial) {
            const auto a = random_element(n);
            const auto b = random_element(n);
            const auto c = random_element(n);
            REQUIRE(a * b == b * a);
            REQUIRE(a + b == b + a);
            REQUIRE((a * b) * c == a * (b * c));
            REQUIRE((a + b) + c == a + (b + c));
            REQUIRE(a * (b + c) == a * b + a * c);
            REQUIRE(a - a == CyclotomicNumber(n));
            if (!a.is_zero()) REQUIRE(a * a.inverse() == one(n));
        }
    }
}

TEST_CASE("powers agree with repeated multiplication") {
    for (int n : {5, 8, 12}) {
        const auto a = random_element(n);
        if (a.is_zero()) continue;
        CyclotomicNumber p = one(n);
        for (int e = 0; e <= 6; ++e) {
            CHECK(a.pow(e) == p);
            CHECK(a.pow(-e) * p == one(n));
            p *= a;
        }
    }
}

TEST_CASE("galois action") {
    for (int n = 2; n <= 18; ++n) {
        for (int j = 1; j < n; ++j) {
            if (std::gcd(j, n) != 1) {
                CHECK_THROWS_AS((void)CyclotomicNumber::zeta(n).galois(j), std::invalid_argument);
                continue;
            }
            const auto a = random_element(n);
            const auto b = random_element(n);
            CHECK((a * b).galois(j) == a.galois(j) * b.galois(j));
            CHECK((a + b).galois(j) == a.galois(j) + b.galois(j));
            CHECK(CyclotomicNumber::zeta(n).galois(j) == CyclotomicNumber::zeta(n, j));
            // a rational value built from non-rational pieces stays fixed
            const auto z = CyclotomicNumber::zeta(n);
            const auto norm_like = z * z.inverse() + z.pow(n) + CyclotomicNumber(n, random_rational());
            REQUIRE(norm_like.is_rational());
            CHECK(norm_like.galois(j) == norm_like);
            CyclotomicNumber trace(n);
            for (int t = 1; t < n; ++t)
                if (std::gcd(t, n) == 1) trace += a.galois(t);
            REQUIRE(trace.is_rational());
            CHECK(trace.galois(j) == trace);
        }
    }
}

TEST_CASE("from_cyclic reduces x^n - 1 representatives") {
    for (int n = 1; n <= 15; ++n) {
        std::vector<Integer> c(static_cast<std::size_t>(2 * n + 3));
        CyclotomicNumber expect(n);
        for (std::size_t j = 0; j < c.size(); ++j) {
            c[j] = static_cast<long>(j % 5) - 2;
            expect += CyclotomicNumber::zeta(n, static_cast<long>(j)) * Rational(c[j]);
        }
        CHECK(CyclotomicNumber::from_cyclic(n, c) == expect);
    }
}
