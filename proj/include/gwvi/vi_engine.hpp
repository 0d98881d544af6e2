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

#ifndef GWVI_VI_ENGINE_HPP
#define GWVI_VI_ENGINE_HPP

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gwvi/cyclotomic.hpp"
#include "gwvi/rational.hpp"

namespace gwvi {

/// How a monomial variable X_a is read.
///  - paper: X_a -> sigma_{k-a+1}(rho), weighted degree k - a + 1.
///  - dual:  X_a -> sigma_a(rho), weighted degree a (X_a has weight a).
/// The two are relabelings a <-> k-a+1 of each other for a single invariant.
/// Only `dual` keeps the appended X_k^b of degree reduction degree-consistent,
/// so it is the default.
enum class Convention { paper, dual };

std::string_view to_string(Convention convention);
/// Throws std::invalid_argument for anything but "paper" or "dual".
Convention parse_convention(std::string_view text);

/// Input to one invariant N_{d,e'}(X_{a_1} ... X_{a_m}) of the rank-n bundle,
/// rank-k subsheaves, genus g.
struct InvariantQuery {
    int n = 2;
    int k = 1;
    int g = 0;
    long e_prime = 0;
    long d = 0;
    std::vector<int> monomial;
    Convention convention = Convention::dual;

    friend bool operator==(const InvariantQuery&, const InvariantQuery&) = default;
};

/// Throws std::invalid_argument unless 1 <= k < n, g >= 0 and 1 <= a_i <= k.
void validate(const InvariantQuery& query);

struct InvariantResult {
    Rational value;
    std::uint64_t terms_summed = 0;  // number of k-subsets of the n-th roots
    bool integral = false;
};

/// Both sides of the degree condition
///   sum_i deg(X_{a_i}) = d k - n e' + k (n-k) (1-g).
struct DegreeTally {
    long monomial_degree = 0;
    long required_degree = 0;
    bool balanced() const noexcept { return monomial_degree == required_degree; }
};

class InadmissibleQuery : public std::domain_error {
   public:
    InadmissibleQuery(const std::string& context, DegreeTally tally);
    const DegreeTally& tally() const noexcept { return tally_; }

   private:
    DegreeTally tally_;
};

/// A root-of-unity sum that should be rational was not.
class ConventionMiscalibration : public std::runtime_error {
   public:
    explicit ConventionMiscalibration(const NonRationalValue& cause);
    const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }

   private:
    std::vector<Rational> coefficients_;
};

/// The maximal-subbundle sign exponent is not an integer for these inputs.
class NonIntegralSignExponent : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

std::uint64_t binomial(int n, int k);

/// 0 means one worker per hardware thread.
unsigned resolve_workers(unsigned requested);

/// Index j of the elementary symmetric function sigma_j that X_a stands for;
/// this is also the weighted degree of X_a.
int symmetric_index(int exponent, int k, Convention convention);

DegreeTally degree_tally(const InvariantQuery& query);
bool check_admissible(const InvariantQuery& query);

/// One term Delta / (prod rho_i * prod_{i != j} (rho_i - rho_j))^{g-1} at the
/// roots zeta_n^{e} for the given exponents (any order, pairwise distinct mod n).
/// Plain field arithmetic; the reference route for the fast subset sum.
CyclotomicNumber vi_summand(const InvariantQuery& query, std::span<const int> root_exponents);

/// Sum of vi_summand over k-element subsets of the n-th roots of unity.
CyclotomicNumber vi_subset_sum(const InvariantQuery& query, unsigned workers = 1);

/// Same summand over ordered k-tuples of distinct roots (k! times the subset sum).
CyclotomicNumber vi_tuple_sum(const InvariantQuery& query);

/// Exponent of the sign in front of the sum: e'(k-1).
///
/// Written out literally the invariant is
///   n^{alpha beta} / k'! * sum_S Delta / (prod_{i=1}^{n} rho_i prod_{i != j}(rho_i - rho_j))^{g-1}
/// with alpha = k'(g-1), beta = (-1)^{e'(k'-1) + (g-1)k'(k'-1)/2},
/// Delta = prod_{i=1}^{m} sigma_{k'-a(l)+1}(rho).
/// Read here as beta * n^alpha, prod over the k' chosen roots, and without the
/// (g-1)k'(k'-1)/2 term: the ordered-pair product already carries
/// (-1)^{k'(k'-1)/2} per power relative to the squared Vandermonde.
long vi_sign_exponent(const InvariantQuery& query);

/// (-1)^{e'(k-1)} n^{k(g-1)} * vi_subset_sum. Requires d = 0 and an admissible
/// query; throws InadmissibleQuery, or ConventionMiscalibration if the sum is
/// not rational.
InvariantResult vi_invariant(const InvariantQuery& query, unsigned workers = 1);

/// d = a n - b with 0 <= b < n.
struct DegreeSplit {
    long a = 0;
    long b = 0;
};
DegreeSplit split_degree(long d, int n);

/// Number m(n, d, k, g) of maximal rank-k subbundles:
///   (-1)^{(k-1)(bk - (g-1)k^2)/n} n^{k(g-1)} sum_S Delta^{b-g+1} / (prod_{i != j}(rho_i - rho_j))^{g-1}
/// over k-subsets S, with Delta = sigma_k (dual) or sigma_1 (paper).
/// Throws NonIntegralSignExponent when the sign exponent is fractional.
InvariantResult count_maximal(int n, long d, int k, int g, Convention convention = Convention::dual,
                              unsigned workers = 1);

/// Tensoring by a line bundle of degree line_degree:
/// (d, e') -> (d + n line_degree, e' + k line_degree).
InvariantQuery twist_reduce(const InvariantQuery& query, long line_degree);

/// Writes d = a n - b and returns the single degree-0 query with
/// e' - a k and b extra copies of X_k. Throws InadmissibleQuery (with the
/// reduced tallies) if the reduced query fails the degree condition.
std::vector<InvariantQuery> degree_reduce(const InvariantQuery& query);

/// Full pipeline: admissibility, degree reduction when d != 0, vi_invariant.
InvariantResult evaluate(const InvariantQuery& query, unsigned workers = 1);

/// Node-locus invariant N_{n',f'}: same formula with rank 2.
InvariantQuery node_query(int k, int g, long f_prime, std::vector<int> monomial,
                          Convention convention = Convention::dual);

}  // namespace gwvi

#endif  // GWVI_VI_ENGINE_HPP
