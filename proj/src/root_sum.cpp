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

#include "root_sum.hpp"

#include <algorithm>
#include <exception>
#include <map>
#include <stdexcept>
#include <thread>

#include "gwvi/vi_engine.hpp"

namespace gwvi::detail {

CyclicPoly CyclicPoly::monomial(int n, long exponent) {
    CyclicPoly p(n);
    p.coeffs_[p.index(exponent)] = 1;
    return p;
}

std::size_t CyclicPoly::index(long exponent) const noexcept {
    const long n = static_cast<long>(coeffs_.size());
    return static_cast<std::size_t>(((exponent % n) + n) % n);
}

void CyclicPoly::add_rotated(const CyclicPoly& src, long shift) {
    const std::size_t n = coeffs_.size();
    const std::size_t s = index(shift);
    for (std::size_t j = 0; j < n; ++j) {
        if (src.coeffs_[j] == 0) continue;
        std::size_t t = j + s;
        if (t >= n) t -= n;
        coeffs_[t] += src.coeffs_[j];
    }
}

void CyclicPoly::multiply_binomial(long a, long b) {
    const std::size_t n = coeffs_.size();
    const std::size_t sa = index(a);
    const std::size_t sb = index(b);
    std::vector<Integer> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        if (coeffs_[j] == 0) continue;
        out[(j + sa) % n] += coeffs_[j];
        out[(j + sb) % n] -= coeffs_[j];
    }
    coeffs_ = std::move(out);
}

CyclicPoly CyclicPoly::pow(unsigned exponent) const {
    CyclicPoly result = monomial(n(), 0);
    CyclicPoly base = *this;
    while (exponent) {
        if (exponent & 1u) result = result * base;
        exponent >>= 1;
        if (exponent) base = base * base;
    }
    return result;
}

CyclicPoly operator*(const CyclicPoly& lhs, const CyclicPoly& rhs) {
    const std::size_t n = lhs.coeffs_.size();
    if (rhs.coeffs_.size() != n) throw std::invalid_argument("incompatible cyclotomic orders");
    CyclicPoly out(static_cast<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            std::size_t t = i + j;
            if (t >= n) t -= n;
            out.coeffs_[t] += lhs.coeffs_[i] * rhs.coeffs_[j];
        }
    }
    return out;
}

std::vector<CyclicPoly> elementary_symmetric_cyclic(int n, std::span<const int> exponents) {
    const std::size_t k = exponents.size();
    std::vector<CyclicPoly> e(k + 1, CyclicPoly(n));
    e[0] = CyclicPoly::monomial(n, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t t = i + 1; t >= 1; --t) e[t].add_rotated(e[t - 1], exponents[i]);
    return e;
}

CyclicPoly ordered_vandermonde(int n, std::span<const int> exponents) {
    CyclicPoly v = CyclicPoly::monomial(n, 0);
    for (std::size_t i = 0; i < exponents.size(); ++i)
        for (std::size_t j = 0; j < exponents.size(); ++j)
            if (i != j) v.multiply_binomial(exponents[i], exponents[j]);
    return v;
}

std::vector<int> unrank_combination(int n, int k, std::uint64_t rank) {
    std::vector<int> combo;
    combo.reserve(static_cast<std::size_t>(k));
    int next = 0;
    for (int slot = 0; slot < k; ++slot) {
        for (int v = next; v < n; ++v) {
            const std::uint64_t block = binomial(n - v - 1, k - slot - 1);
            if (rank < block) {
                combo.push_back(v);
                next = v + 1;
                break;
            }
            rank -= block;
        }
    }
    if (static_cast<int>(combo.size()) != k) throw std::out_of_range("combination rank out of range");
    return combo;
}

bool next_combination(std::vector<int>& combo, int n) {
    const int k = static_cast<int>(combo.size());
    int i = k - 1;
    while (i >= 0 && combo[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++combo[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
    return true;
}

namespace {

// Lexicographically least rotation of `combo` that contains 0, and the shift
// t with combo = rep + t (mod n).
std::pair<std::vector<int>, long> rotation_class(std::span<const int> combo, int n) {
    std::vector<int> best;
    long best_shift = 0;
    std::vector<int> candidate(combo.size());
    for (int t : combo) {
        for (std::size_t i = 0; i < combo.size(); ++i) candidate[i] = ((combo[i] - t) % n + n) % n;
        std::sort(candidate.begin(), candidate.end());
        if (best.empty() || candidate < best) {
            best = candidate;
            best_shift = t;
        }
    }
    return {std::move(best), best_shift};
}

CyclotomicNumber sum_block(const RootSumPlan& plan, std::uint64_t begin, std::uint64_t end) {
    CyclotomicNumber total(plan.n);
    if (begin >= end) return total;
    std::vector<int> combo = unrank_combination(plan.n, plan.k, begin);

    if (!plan.denominator) {
        CyclicPoly acc(plan.n);
        for (std::uint64_t r = begin; r < end; ++r) {
            acc.add_rotated(plan.numerator(combo), 0);
            next_combination(combo, plan.n);
        }
        return CyclotomicNumber::from_cyclic(plan.n, acc.coefficients());
    }

    // N(S)/D(S) with S = R + t and D(S) = zeta^{t w} D(R): accumulate
    // zeta^{-t w} N(S) per class R, then divide by D(R) once.
    std::map<std::vector<int>, CyclicPoly> classes;
    for (std::uint64_t r = begin; r < end; ++r) {
        auto [rep, shift] = rotation_class(combo, plan.n);
        auto it = classes.try_emplace(std::move(rep), plan.n).first;
        it->second.add_rotated(plan.numerator(combo), -shift * plan.denominator_degree);
        next_combination(combo, plan.n);
    }
    for (const auto& [rep, acc] : classes) {
        const CyclicPoly den = plan.denominator(rep);
        const auto inv = CyclotomicNumber::from_cyclic(plan.n, den.coefficients()).inverse();
        total += CyclotomicNumber::from_cyclic(plan.n, acc.coefficients()) * inv;
    }
    return total;
}

}  // namespace

RootSum subset_root_sum(const RootSumPlan& plan, unsigned workers) {
    if (plan.k < 1 || plan.k > plan.n) throw std::invalid_argument("subset size out of range");
    const std::uint64_t total = binomial(plan.n, plan.k);
    workers = std::max(1u, workers);
    if (workers > total) workers = static_cast<unsigned>(total);

    std::vector<CyclotomicNumber> partial(workers, CyclotomicNumber(plan.n));
    const auto bounds = [&](unsigned w) { return total * w / workers; };

    if (workers == 1) {
        partial[0] = sum_block(plan, 0, total);
    } else {
        std::vector<std::exception_ptr> errors(workers);
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] {
                try {
                    partial[w] = sum_block(plan, bounds(w), bounds(w + 1));
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& t : threads) t.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    RootSum out{CyclotomicNumber(plan.n), total};
    for (const auto& p : partial) out.value += p;
    return out;
}

}  // namespace gwvi::detail
