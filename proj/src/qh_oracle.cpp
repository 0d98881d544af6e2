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

#include "gwvi/qh_oracle.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "gwvi/cyclotomic.hpp"
#include "root_sum.hpp"

namespace gwvi {

QuantumClassSum quantum_product(const Partition& lambda, const Partition& mu, int k, int n) {
    QuantumClassSum out(k, n);
    if (!lambda.fits_in_box(k, n - k)) throw std::invalid_argument("class outside box: " + lambda.to_string());
    if (!mu.fits_in_box(k, n - k)) throw std::invalid_argument("class outside box: " + mu.to_string());
    for (const auto& [nu, c] : lr_product(lambda, mu, k)) {
        const auto reduced = rim_hook_reduce(nu, k, n);
        if (!reduced) continue;
        out.add(reduced->partition, reduced->q_exponent, reduced->sign * c);
    }
    return out;
}

namespace {

bool is_zero(const Rational& x) { return x == 0; }
bool is_zero(const CyclotomicNumber& x) { return x.is_zero(); }
Rational invert(const Rational& x) { return 1 / x; }
CyclotomicNumber invert(const CyclotomicNumber& x) { return x.inverse(); }

// Row-reduces the N x cols matrix `a` in place (Gauss-Jordan on the first N
// columns). Returns the determinant of the leading N x N block, zero when it
// is singular (the reduction is then incomplete).
template <class T>
T gauss_jordan(std::vector<T>& a, std::size_t rows, std::size_t cols, const T& one) {
    T det = one;
    for (std::size_t c = 0; c < rows; ++c) {
        std::size_t pivot = c;
        while (pivot < rows && is_zero(a[pivot * cols + c])) ++pivot;
        if (pivot == rows) return one - one;
        if (pivot != c) {
            for (std::size_t j = 0; j < cols; ++j) std::swap(a[pivot * cols + j], a[c * cols + j]);
            det = -det;
        }
        const T p = a[c * cols + c];
        det = det * p;
        const T pinv = invert(p);
        for (std::size_t j = 0; j < cols; ++j) a[c * cols + j] = a[c * cols + j] * pinv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == c || is_zero(a[r * cols + c])) continue;
            const T f = a[r * cols + c];
            for (std::size_t j = 0; j < cols; ++j)
                if (!is_zero(a[c * cols + j])) a[r * cols + j] = a[r * cols + j] - f * a[c * cols + j];
        }
    }
    return det;
}

}  // namespace

FusionAlgebra::FusionAlgebra(int k, int n) : k_(k), n_(n) {
    if (k < 1 || k >= n) throw std::invalid_argument("FusionAlgebra requires 1 <= k < n");
    basis_ = box_partitions(k, n - k);
    const std::size_t N = basis_.size();
    for (std::size_t i = 0; i < N; ++i) index_.emplace(basis_[i], i);

    products_.assign(N * N, {});
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = i; j < N; ++j) {
            std::vector<Entry> entries;
            const QuantumClassSum sum = quantum_product(basis_[i], basis_[j], k, n);
            for (const auto& [key, c] : sum.terms())
                entries.push_back({static_cast<std::uint32_t>(index_.at(key.first)), key.second, c});
            products_[j * N + i] = entries;
            products_[i * N + j] = std::move(entries);
        }
    }

    pairing_.assign(N * N, 0);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) pairing_[i * N + j] = structure_constant(i, j, top_index());

    std::vector<Rational> aug(N * 2 * N);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) aug[i * 2 * N + j] = pairing_[i * N + j];
        aug[i * 2 * N + N + i] = 1;
    }
    pairing_det_ = gauss_jordan(aug, N, 2 * N, Rational(1));
    if (pairing_det_ == 0) throw std::logic_error("degenerate pairing");
    pairing_inv_.assign(N * N, Rational(0));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) pairing_inv_[i * N + j] = aug[i * 2 * N + N + j];

    handle_.assign(N, Rational(0));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            const Rational& w = pairing_inv_[i * N + j];
            if (w == 0) continue;
            for (const auto& e : product(i, j)) handle_[e.index] += w * e.coefficient;
        }
}

std::size_t FusionAlgebra::index_of(const Partition& lambda) const {
    auto it = index_.find(lambda);
    if (it == index_.end()) throw std::invalid_argument("class outside box: " + lambda.to_string());
    return it->second;
}

long FusionAlgebra::structure_constant(std::size_t i, std::size_t j, std::size_t l) const {
    long total = 0;
    for (const auto& e : product(i, j))
        if (e.index == l) total += e.coefficient;
    return total;
}

std::vector<Rational> FusionAlgebra::unit() const {
    std::vector<Rational> v(dimension(), Rational(0));
    v[0] = 1;  // the empty partition comes first
    return v;
}

std::vector<Rational> FusionAlgebra::multiply(const std::vector<Rational>& v, std::size_t basis_index) const {
    std::vector<Rational> out(dimension(), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (const auto& e : product(i, basis_index)) out[e.index] += v[i] * e.coefficient;
    }
    return out;
}

std::vector<Rational> FusionAlgebra::multiply(const std::vector<Rational>& v, const std::vector<Rational>& w) const {
    std::vector<Rational> out(dimension(), Rational(0));
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < w.size(); ++j) {
            if (w[j] == 0) continue;
            const Rational vw = v[i] * w[j];
            for (const auto& e : product(i, j)) out[e.index] += vw * e.coefficient;
        }
    }
    return out;
}

Rational FusionAlgebra::correlator(std::span<const Partition> classes, int g) const {
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
    auto v = unit();
    for (const auto& c : classes) v = multiply(v, index_of(c));
    for (int i = 0; i < g; ++i) v = multiply(v, handle_);
    return counit(v);
}

const FusionAlgebra& fusion_algebra(int k, int n) {
    static std::mutex mutex;
    static std::map<std::pair<int, int>, std::unique_ptr<FusionAlgebra>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[{k, n}];
    if (!slot) slot = std::make_unique<FusionAlgebra>(k, n);
    return *slot;
}

Rational correlator_genus_g(std::span<const Partition> classes, int g, int k, int n) {
    return fusion_algebra(k, n).correlator(classes, g);
}

namespace {

// Polynomials in q with rational coefficients, index = q-degree.
using QPoly = std::vector<Rational>;
// One QPoly per basis element.
using FormalElement = std::vector<QPoly>;

void add_term(QPoly& p, std::size_t degree, const Rational& c) {
    if (c == 0) return;
    if (p.size() <= degree) p.resize(degree + 1, Rational(0));
    p[degree] += c;
}

QPoly poly_mul(const QPoly& a, const QPoly& b, std::size_t max_degree) {
    QPoly out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= max_degree; ++j)
            if (b[j] != 0) add_term(out, i + j, a[i] * b[j]);
    }
    return out;
}

bool poly_zero(const QPoly& p) {
    for (const auto& c : p)
        if (c != 0) return false;
    return true;
}

FormalElement formal_multiply(const FusionAlgebra& alg, const FormalElement& v, const FormalElement& w) {
    const std::size_t N = alg.dimension();
    FormalElement out(N);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t di = 0; di < v[i].size(); ++di) {
            if (v[i][di] == 0) continue;
            for (std::size_t j = 0; j < N; ++j) {
                for (std::size_t dj = 0; dj < w[j].size(); ++dj) {
                    if (w[j][dj] == 0) continue;
                    const Rational vw = v[i][di] * w[j][dj];
                    for (const auto& e : alg.product(i, j))
                        add_term(out[e.index], di + dj + static_cast<std::size_t>(e.q_exponent), vw * e.coefficient);
                }
            }
        }
    }
    return out;
}

FormalElement formal_basis(std::size_t N, std::size_t i) {
    FormalElement v(N);
    v[i] = QPoly{Rational(1)};
    return v;
}

}  // namespace

std::map<int, Rational> correlator_formal_q(std::span<const Partition> classes, int g, int k, int n) {
    const FusionAlgebra& alg = fusion_algebra(k, n);
    const std::size_t N = alg.dimension();
    const std::size_t top = alg.top_index();
    const auto max_degree = static_cast<std::size_t>(k * (n - k));  // generous truncation

    // eta(q) = P + E(q), P the classical Poincare pairing.
    std::vector<QPoly> eta(N * N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            for (const auto& e : alg.product(i, j))
                if (e.index == top) add_term(eta[i * N + j], static_cast<std::size_t>(e.q_exponent), Rational(e.coefficient));

    std::vector<Rational> aug(N * 2 * N);
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) aug[i * 2 * N + j] = eta[i * N + j].empty() ? Rational(0) : eta[i * N + j][0];
        aug[i * 2 * N + N + i] = 1;
    }
    if (gauss_jordan(aug, N, 2 * N, Rational(1)) == 0) throw std::logic_error("degenerate pairing");
    std::vector<QPoly> p_inv(N * N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) add_term(p_inv[i * N + j], 0, aug[i * 2 * N + N + j]);

    // -P^{-1} E
    std::vector<QPoly> step(N * N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j)
            for (std::size_t l = 0; l < N; ++l) {
                QPoly e = eta[l * N + j];
                if (!e.empty()) e[0] = 0;
                const QPoly prod = poly_mul(p_inv[i * N + l], e, max_degree);
                for (std::size_t d = 0; d < prod.size(); ++d) add_term(step[i * N + j], d, -prod[d]);
            }

    // eta^{-1} = sum_t (-P^{-1} E)^t P^{-1}; E has no constant term, so the
    // series terminates under the degree truncation.
    std::vector<QPoly> inverse = p_inv;
    std::vector<QPoly> term = p_inv;
    for (std::size_t t = 0; t <= max_degree; ++t) {
        std::vector<QPoly> next(N * N);
        bool nonzero = false;
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                for (std::size_t l = 0; l < N; ++l) {
                    const QPoly prod = poly_mul(step[i * N + l], term[l * N + j], max_degree);
                    for (std::size_t d = 0; d < prod.size(); ++d) add_term(next[i * N + j], d, prod[d]);
                }
        for (std::size_t idx = 0; idx < N * N; ++idx) {
            if (poly_zero(next[idx])) continue;
            nonzero = true;
            for (std::size_t d = 0; d < next[idx].size(); ++d) add_term(inverse[idx], d, next[idx][d]);
        }
        term = std::move(next);
        if (!nonzero) break;
    }

    FormalElement handle(N);
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            const QPoly& w = inverse[i * N + j];
            if (poly_zero(w)) continue;
            for (const auto& e : alg.product(i, j))
                for (std::size_t d = 0; d < w.size(); ++d)
                    add_term(handle[e.index], d + static_cast<std::size_t>(e.q_exponent), w[d] * e.coefficient);
        }

    FormalElement v = formal_basis(N, 0);
    for (const auto& c : classes) v = formal_multiply(alg, v, formal_basis(N, alg.index_of(c)));
    for (int i = 0; i < g; ++i) v = formal_multiply(alg, v, handle);

    std::map<int, Rational> out;
    for (std::size_t d = 0; d < v[top].size(); ++d)
        if (v[top][d] != 0) out.emplace(static_cast<int>(d), v[top][d]);
    return out;
}

namespace {

CyclotomicNumber schur_at(const Partition& lambda, const std::vector<CyclotomicNumber>& e, int order) {
    const Partition conj = lambda.conjugate();
    const auto L = static_cast<std::size_t>(conj.length());
    if (L == 0) return CyclotomicNumber(order, 1);
    const int k = static_cast<int>(e.size()) - 1;
    std::vector<CyclotomicNumber> m(L * L, CyclotomicNumber(order));
    for (std::size_t i = 0; i < L; ++i)
        for (std::size_t j = 0; j < L; ++j) {
            const int r = conj[i] - static_cast<int>(i) + static_cast<int>(j);
            if (r >= 0 && r <= k) m[i * L + j] = e[static_cast<std::size_t>(r)];
        }
    return gauss_jordan(m, L, L, CyclotomicNumber(order, 1));
}

}  // namespace

Rational correlator_eigenbasis(std::span<const Partition> classes, int g, int k, int n) {
    if (k < 1 || k >= n) throw std::invalid_argument("need 1 <= k < n");
    if (g < 0) throw std::invalid_argument("genus must be nonnegative");
    const int order = 2 * n;
    const auto basis = box_partitions(k, n - k);
    const std::size_t N = basis.size();
    for (const auto& c : classes)
        if (!c.fits_in_box(k, n - k)) throw std::invalid_argument("class outside box: " + c.to_string());

    // x_t = zeta_{2n}^{2t + k - 1} runs over the roots of x^n = (-1)^{k-1}.
    std::vector<std::vector<CyclotomicNumber>> e_at;  // per subset: sigma_0..sigma_k
    std::vector<int> combo(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) combo[static_cast<std::size_t>(i)] = i;
    do {
        std::vector<CyclotomicNumber> x;
        for (int t : combo) x.push_back(CyclotomicNumber::zeta(order, 2L * t + k - 1));
        std::vector<CyclotomicNumber> e;
        for (int j = 0; j <= k; ++j) e.push_back(elementary_symmetric(j, x));
        e_at.push_back(std::move(e));
    } while (detail::next_combination(combo, n));
    if (e_at.size() != N) throw std::logic_error("idempotent count differs from the algebra dimension");

    // sum_S s_lambda(x_S) theta_S = delta_{lambda, top}
    std::vector<CyclotomicNumber> system(N * (N + 1), CyclotomicNumber(order));
    for (std::size_t r = 0; r < N; ++r) {
        for (std::size_t s = 0; s < N; ++s) system[r * (N + 1) + s] = schur_at(basis[r], e_at[s], order);
        if (r == N - 1) system[r * (N + 1) + N] = CyclotomicNumber(order, 1);
    }
    if (gauss_jordan(system, N, N + 1, CyclotomicNumber(order, 1)).is_zero())
        throw std::logic_error("degenerate pairing");

    CyclotomicNumber total(order);
    for (std::size_t s = 0; s < N; ++s) {
        CyclotomicNumber term = system[s * (N + 1) + N].pow(1 - g);
        for (const auto& c : classes) term *= schur_at(c, e_at[s], order);
        total += term;
    }
    return total.to_rational();
}

Partition class_for_exponent(int exponent, int k, Convention convention) {
    if (exponent < 1 || exponent > k) throw std::invalid_argument("monomial exponent outside 1..k");
    return column_partition(symmetric_index(exponent, k, convention));
}

Rational oracle_value(const InvariantQuery& q) {
    validate(q);
    if (q.d != 0) throw std::invalid_argument("oracle needs bundle degree 0; apply degree_reduce first");
    const auto tally = degree_tally(q);
    if (!tally.balanced()) throw InadmissibleQuery("", tally);
    std::vector<Partition> classes;
    for (int a : q.monomial) classes.push_back(class_for_exponent(a, q.k, q.convention));
    return correlator_genus_g(classes, q.g, q.k, q.n);
}

bool oracle_compare(const InvariantQuery& q, unsigned workers) {
    const Rational expected = oracle_value(q);
    return vi_invariant(q, workers).value == expected;
}

}  // namespace gwvi
