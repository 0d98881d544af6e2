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

#ifndef GWVI_ROOT_SUM_HPP
#define GWVI_ROOT_SUM_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gwvi/cyclotomic.hpp"

namespace gwvi::detail {

/// Element of Z[x]/(x^n - 1). Reduction to Q(zeta_n) happens once, at the
/// end, through CyclotomicNumber::from_cyclic.
class CyclicPoly {
   public:
    explicit CyclicPoly(int n) : coeffs_(static_cast<std::size_t>(n)) {}

    static CyclicPoly monomial(int n, long exponent);

    int n() const noexcept { return static_cast<int>(coeffs_.size()); }
    std::span<const Integer> coefficients() const noexcept { return coeffs_; }

    /// *this += x^shift * src
    void add_rotated(const CyclicPoly& src, long shift);
    /// *this *= (x^a - x^b)
    void multiply_binomial(long a, long b);
    CyclicPoly pow(unsigned exponent) const;

    friend CyclicPoly operator*(const CyclicPoly& lhs, const CyclicPoly& rhs);

   private:
    std::size_t index(long exponent) const noexcept;

    std::vector<Integer> coeffs_;
};

/// sigma_0 .. sigma_k of the roots zeta^{e_i}.
std::vector<CyclicPoly> elementary_symmetric_cyclic(int n, std::span<const int> exponents);

/// prod_{i != j} (rho_i - rho_j) over ordered pairs.
CyclicPoly ordered_vandermonde(int n, std::span<const int> exponents);

/// Sum over k-subsets S of the n-th roots of unity of numerator(S) / denominator(S).
/// The denominator must be homogeneous of `denominator_degree` in the roots;
/// its inverse is then computed once per rotation class of subsets.
struct RootSumPlan {
    int n = 1;
    int k = 1;
    std::function<CyclicPoly(std::span<const int>)> numerator;
    std::function<CyclicPoly(std::span<const int>)> denominator;  // empty: 1
    long denominator_degree = 0;
};

struct RootSum {
    CyclotomicNumber value;
    std::uint64_t terms = 0;
};

/// Contiguous blocks of the lexicographic subset order are summed per worker
/// and combined in block order; the exact result does not depend on `workers`.
RootSum subset_root_sum(const RootSumPlan& plan, unsigned workers);

/// The rank-th k-subset of {0..n-1} in lexicographic order.
std::vector<int> unrank_combination(int n, int k, std::uint64_t rank);

/// Advances to the next k-subset in lexicographic order; false past the last.
bool next_combination(std::vector<int>& combo, int n);

}  // namespace gwvi::detail

#endif  // GWVI_ROOT_SUM_HPP
