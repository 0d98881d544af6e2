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

#ifndef GWVI_QH_ORACLE_HPP
#define GWVI_QH_ORACLE_HPP

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "gwvi/rational.hpp"
#include "gwvi/symfunc.hpp"
#include "gwvi/vi_engine.hpp"

namespace gwvi {

/// sigma_lambda * sigma_mu in the small quantum cohomology of Gr(k, n):
/// classical LR product on at most k rows, then rim-hook reduction, with the
/// q-power kept. Throws std::invalid_argument("class outside box").
QuantumClassSum quantum_product(const Partition& lambda, const Partition& mu, int k, int n);

/// The quantum cohomology ring of Gr(k, n) at q = 1 as a Frobenius algebra on
/// the Schubert basis. Built once per (k, n); read-only afterwards.
class FusionAlgebra {
   public:
    struct Entry {
        std::uint32_t index;
        int q_exponent;
        long coefficient;
    };

    /// Throws std::logic_error("degenerate pairing") if the trace form is singular.
    FusionAlgebra(int k, int n);

    int k() const noexcept { return k_; }
    int n() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return basis_.size(); }
    const std::vector<Partition>& basis() const noexcept { return basis_; }
    std::size_t index_of(const Partition& lambda) const;
    std::size_t top_index() const noexcept { return basis_.size() - 1; }

    /// sigma_i * sigma_j with q-powers, sparse.
    const std::vector<Entry>& product(std::size_t i, std::size_t j) const { return products_[i * basis_.size() + j]; }
    /// Structure constant c_{ij}^l at q = 1.
    long structure_constant(std::size_t i, std::size_t j, std::size_t l) const;

    /// eta(i, j) = counit(sigma_i sigma_j) at q = 1.
    long pairing(std::size_t i, std::size_t j) const { return pairing_[i * basis_.size() + j]; }
    const Rational& pairing_inverse(std::size_t i, std::size_t j) const { return pairing_inv_[i * basis_.size() + j]; }
    const Rational& pairing_determinant() const noexcept { return pairing_det_; }

    /// H = sum_{i,j} eta^{ij} sigma_i sigma_j, in the Schubert basis.
    const std::vector<Rational>& handle_element() const noexcept { return handle_; }

    std::vector<Rational> unit() const;
    std::vector<Rational> multiply(const std::vector<Rational>& v, std::size_t basis_index) const;
    std::vector<Rational> multiply(const std::vector<Rational>& v, const std::vector<Rational>& w) const;
    /// Coefficient of the top class sigma_{box}.
    Rational counit(const std::vector<Rational>& v) const { return v[top_index()]; }

    /// counit(sigma_{l_1} ... sigma_{l_m} H^g)
    Rational correlator(std::span<const Partition> classes, int g) const;

   private:
    int k_;
    int n_;
    std::vector<Partition> basis_;
    std::map<Partition, std::size_t> index_;
    std::vector<std::vector<Entry>> products_;
    std::vector<long> pairing_;
    std::vector<Rational> pairing_inv_;
    Rational pairing_det_;
    std::vector<Rational> handle_;
};

/// Cached, thread-safe accessor.
const FusionAlgebra& fusion_algebra(int k, int n);

/// Genus-g correlator epsilon(sigma_{l_1} ... sigma_{l_m} H^g) at q = 1.
Rational correlator_genus_g(std::span<const Partition> classes, int g, int k, int n);

/// Same correlator with q kept formal: q-exponent -> coefficient. Meant as a
/// check (small n) that only one q-degree survives, so that q = 1 loses nothing.
std::map<int, Rational> correlator_formal_q(std::span<const Partition> classes, int g, int k, int n);

/// Same correlator through the idempotent basis: sigma_lambda evaluates to the
/// Schur polynomial s_lambda at k distinct roots of x^n = (-1)^{k-1}, computed
/// in Q(zeta_{2n}).
Rational correlator_eigenbasis(std::span<const Partition> classes, int g, int k, int n);

/// Schubert class standing for X_a: (1^a) under dual, (1^{k-a+1}) under paper.
Partition class_for_exponent(int exponent, int k, Convention convention);

/// correlator_genus_g of the query's classes. Requires d = 0 and an admissible query.
Rational oracle_value(const InvariantQuery& query);

/// oracle_value(query) == vi_invariant(query).value
bool oracle_compare(const InvariantQuery& query, unsigned workers = 1);

}  // namespace gwvi

#endif  // GWVI_QH_ORACLE_HPP
