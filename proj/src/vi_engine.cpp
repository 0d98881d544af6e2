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

#include "gwvi/vi_engine.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <thread>

#include "gwvi/symfunc.hpp"
#include "root_sum.hpp"

namespace gwvi {

using detail::CyclicPoly;

std::string_view to_string(Convention convention) { return convention == Convention::paper ? "paper" : "dual"; }

Convention parse_convention(std::string_view text) {
    if (text == "paper") return Convention::paper;
    if (text == "dual") return Convention::dual;
    throw std::invalid_argument("unknown convention '" + std::string(text) + "' (expected paper or dual)");
}

void validate(const InvariantQuery& q) {
    if (q.n < 2 || q.k < 1 || q.k >= q.n)
        throw std::invalid_argument("need 1 <= k < n (got n=" + std::to_string(q.n) + ", k=" + std::to_string(q.k) + ")");
    if (q.g < 0) throw std::invalid_argument("genus must be nonnegative");
    for (int a : q.monomial)
        if (a < 1 || a > q.k)
            throw std::invalid_argument("monomial exponent " + std::to_string(a) + " outside 1.." + std::to_string(q.k));
}

InadmissibleQuery::InadmissibleQuery(const std::string& context, DegreeTally tally)
    : std::domain_error(context + "degree condition violated: monomial weighted degree " +
                        std::to_string(tally.monomial_degree) + " != required degree " +
                        std::to_string(tally.required_degree)),
      tally_(tally) {}

ConventionMiscalibration::ConventionMiscalibration(const NonRationalValue& cause)
    : std::runtime_error(std::string("convention miscalibration: ") + cause.what()),
      coefficients_(cause.coefficients()) {}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

unsigned resolve_workers(unsigned requested) {
    if (requested > 0) return requested;
    return std::max(1u, std::thread::hardware_concurrency());
}

int symmetric_index(int exponent, int k, Convention convention) {
    return convention == Convention::paper ? k - exponent + 1 : exponent;
}

DegreeTally degree_tally(const InvariantQuery& q) {
    DegreeTally t;
    for (int a : q.monomial) t.monomial_degree += symmetric_index(a, q.k, q.convention);
    const long n = q.n, k = q.k, g = q.g;
    t.required_degree = q.d * k - n * q.e_prime + k * (n - k) * (1 - g);
    return t;
}

bool check_admissible(const InvariantQuery& q) {
    validate(q);
    return degree_tally(q).balanced();
}

namespace {

std::vector<int> symmetric_indices(const InvariantQuery& q) {
    std::vector<int> idx;
    idx.reserve(q.monomial.size());
    for (int a : q.monomial) idx.push_back(symmetric_index(a, q.k, q.convention));
    return idx;
}

// prod_l sigma_{j_l}(rho_S), multiplying equal factors by repeated squaring.
CyclicPoly delta_cyclic(int n, std::span<const int> exponents, std::span<const int> indices) {
    const auto sigma = detail::elementary_symmetric_cyclic(n, exponents);
    std::vector<unsigned> multiplicity(exponents.size() + 1, 0);
    for (int j : indices) ++multiplicity[static_cast<std::size_t>(j)];
    CyclicPoly out = CyclicPoly::monomial(n, 0);
    for (std::size_t j = 0; j < multiplicity.size(); ++j) {
        if (multiplicity[j] == 0) continue;
        if (j == exponents.size()) {
            // sigma_k is the single monomial rho_1 ... rho_k
            long total = std::accumulate(exponents.begin(), exponents.end(), 0L);
            CyclicPoly shifted(n);
            shifted.add_rotated(out, total * static_cast<long>(multiplicity[j]));
            out = std::move(shifted);
        } else {
            out = out * sigma[j].pow(multiplicity[j]);
        }
    }
    return out;
}

// prod rho_i * prod_{i != j} (rho_i - rho_j)
CyclicPoly vi_denominator_base(int n, std::span<const int> exponents) {
    CyclicPoly v = detail::ordered_vandermonde(n, exponents);
    CyclicPoly out(n);
    out.add_rotated(v, std::accumulate(exponents.begin(), exponents.end(), 0L));
    return out;
}

Rational sign_of(long exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

Rational extract_rational(const CyclotomicNumber& value) {
    try {
        return value.to_rational();
    } catch (const NonRationalValue& e) {
        throw ConventionMiscalibration(e);
    }
}

}  // namespace

CyclotomicNumber vi_summand(const InvariantQuery& q, std::span<const int> root_exponents) {
    validate(q);
    if (static_cast<int>(root_exponents.size()) != q.k) throw std::invalid_argument("vi_summand needs exactly k roots");
    std::vector<CyclotomicNumber> rho;
    rho.reserve(root_exponents.size());
    for (int e : root_exponents) rho.push_back(CyclotomicNumber::zeta(q.n, e));

    CyclotomicNumber delta(q.n, 1);
    for (int j : symmetric_indices(q)) delta *= elementary_symmetric(j, rho);

    CyclotomicNumber base(q.n, 1);
    for (const auto& r : rho) base *= r;
    for (std::size_t i = 0; i < rho.size(); ++i)
        for (std::size_t j = 0; j < rho.size(); ++j)
            if (i != j) base *= rho[i] - rho[j];
    return delta * base.pow(1 - q.g);
}

CyclotomicNumber vi_subset_sum(const InvariantQuery& q, unsigned workers) {
    validate(q);
    const int n = q.n;
    const int g = q.g;
    const auto indices = symmetric_indices(q);

    detail::RootSumPlan plan;
    plan.n = n;
    plan.k = q.k;
    if (g == 0) {
        plan.numerator = [=](std::span<const int> s) { return delta_cyclic(n, s, indices) * vi_denominator_base(n, s); };
    } else {
        plan.numerator = [=](std::span<const int> s) { return delta_cyclic(n, s, indices); };
    }
    if (g >= 2) {
        plan.denominator = [=](std::span<const int> s) {
            return vi_denominator_base(n, s).pow(static_cast<unsigned>(g - 1));
        };
        plan.denominator_degree = static_cast<long>(g - 1) * q.k * q.k;
    }
    return detail::subset_root_sum(plan, resolve_workers(workers)).value;
}

CyclotomicNumber vi_tuple_sum(const InvariantQuery& q) {
    validate(q);
    CyclotomicNumber total(q.n);
    std::vector<int> tuple;
    std::vector<bool> taken(static_cast<std::size_t>(q.n), false);
    std::function<void()> rec = [&] {
        if (static_cast<int>(tuple.size()) == q.k) {
            total += vi_summand(q, tuple);
            return;
        }
        for (int e = 0; e < q.n; ++e) {
            if (taken[static_cast<std::size_t>(e)]) continue;
            taken[static_cast<std::size_t>(e)] = true;
            tuple.push_back(e);
            rec();
            tuple.pop_back();
            taken[static_cast<std::size_t>(e)] = false;
        }
    };
    rec();
    return total;
}

long vi_sign_exponent(const InvariantQuery& q) { return q.e_prime * (q.k - 1); }

InvariantResult vi_invariant(const InvariantQuery& q, unsigned workers) {
    validate(q);
    if (q.d != 0) throw std::invalid_argument("vi_invariant needs bundle degree 0; apply degree_reduce first");
    const auto tally = degree_tally(q);
    if (!tally.balanced()) throw InadmissibleQuery("", tally);

    const CyclotomicNumber sum = vi_subset_sum(q, workers);
    const Rational scale = sign_of(vi_sign_exponent(q)) * power(q.n, static_cast<long>(q.k) * (q.g - 1));

    InvariantResult out;
    out.value = extract_rational(sum) * scale;
    out.terms_summed = binomial(q.n, q.k);
    out.integral = is_integer(out.value);
    return out;
}

DegreeSplit split_degree(long d, int n) {
    const long b = ((-d) % n + n) % n;
    return {(d + b) / n, b};
}

InvariantResult count_maximal(int n, long d, int k, int g, Convention convention, unsigned workers) {
    if (n < 2 || k < 1 || k >= n) throw std::invalid_argument("need 1 <= k < n");
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
    const auto [a, b] = split_degree(d, n);
    (void)a;

    const long kk = k;
    const long sign_numerator = (kk - 1) * (b * kk - static_cast<long>(g - 1) * kk * kk);
    if (sign_numerator % n != 0)
        throw NonIntegralSignExponent("maximal-subbundle sign exponent (k-1)(bk-(g-1)k^2)/n = " +
                                      std::to_string(sign_numerator) + "/" + std::to_string(n) +
                                      " is not an integer");

    const long power_of_delta = b - g + 1;
    const bool delta_is_top = convention == Convention::dual;  // sigma_k, else sigma_1
    const long delta_degree = delta_is_top ? k : 1;

    const auto delta = [=](std::span<const int> s) {
        if (delta_is_top) return CyclicPoly::monomial(n, std::accumulate(s.begin(), s.end(), 0L));
        return detail::elementary_symmetric_cyclic(n, s)[1];
    };

    detail::RootSumPlan plan;
    plan.n = n;
    plan.k = k;
    plan.numerator = [=](std::span<const int> s) {
        CyclicPoly num = power_of_delta > 0 ? delta(s).pow(static_cast<unsigned>(power_of_delta)) : CyclicPoly::monomial(n, 0);
        if (g == 0) num = num * detail::ordered_vandermonde(n, s);
        return num;
    };
    long den_degree = 0;
    if (g >= 2) den_degree += static_cast<long>(g - 1) * k * (k - 1);
    if (power_of_delta < 0) den_degree += -power_of_delta * delta_degree;
    if (g >= 2 || power_of_delta < 0) {
        plan.denominator = [=](std::span<const int> s) {
            CyclicPoly den = CyclicPoly::monomial(n, 0);
            if (g >= 2) den = detail::ordered_vandermonde(n, s).pow(static_cast<unsigned>(g - 1));
            if (power_of_delta < 0) den = den * delta(s).pow(static_cast<unsigned>(-power_of_delta));
            return den;
        };
        plan.denominator_degree = den_degree;
    }

    const auto sum = detail::subset_root_sum(plan, resolve_workers(workers));
    const Rational scale = sign_of(sign_numerator / n) * power(n, kk * (g - 1));

    InvariantResult out;
    out.value = extract_rational(sum.value) * scale;
    out.terms_summed = sum.terms;
    out.integral = is_integer(out.value);
    return out;
}

InvariantQuery twist_reduce(const InvariantQuery& q, long line_degree) {
    InvariantQuery out = q;
    out.d += static_cast<long>(q.n) * line_degree;
    out.e_prime += static_cast<long>(q.k) * line_degree;
    return out;
}

std::vector<InvariantQuery> degree_reduce(const InvariantQuery& q) {
    validate(q);
    if (q.d == 0) return {q};
    const auto [a, b] = split_degree(q.d, q.n);
    InvariantQuery reduced = q;
    reduced.d = 0;
    reduced.e_prime = q.e_prime - a * q.k;
    reduced.monomial.insert(reduced.monomial.end(), static_cast<std::size_t>(b), q.k);
    const auto tally = degree_tally(reduced);
    if (!tally.balanced()) throw InadmissibleQuery("reduced query: ", tally);
    return {reduced};
}

InvariantResult evaluate(const InvariantQuery& q, unsigned workers) {
    validate(q);
    const auto tally = degree_tally(q);
    if (!tally.balanced()) throw InadmissibleQuery("", tally);
    const auto reduced = degree_reduce(q);
    return vi_invariant(reduced.front(), workers);
}

InvariantQuery node_query(int k, int g, long f_prime, std::vector<int> monomial, Convention convention) {
    InvariantQuery q{2, k, g, f_prime, 0, std::move(monomial), convention};
    validate(q);
    return q;
}

}  // namespace gwvi
