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

#ifndef GWVI_PARABOLIC_HPP
#define GWVI_PARABOLIC_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "gwvi/rational.hpp"
#include "gwvi/vi_engine.hpp"

namespace gwvi {

struct ParabolicWeight {
    Rational weight;
    int multiplicity = 1;

    friend bool operator==(const ParabolicWeight&, const ParabolicWeight&) = default;
};

/// Flag weights at one marked point, strictly increasing in [0, 1).
using MarkedPoint = std::vector<ParabolicWeight>;

struct ParabolicData {
    int rank = 1;
    long degree = 0;
    std::vector<MarkedPoint> points;
};

/// Throws std::invalid_argument if a point's multiplicities do not sum to the
/// rank, or its weights are not strictly increasing in [0, 1).
void validate(const ParabolicData& data);

/// deg + sum over points and flag steps of k_i alpha_i.
Rational parabolic_degree(const ParabolicData& data);

enum class SlopeOrder { strict_pass, boundary, fail };
std::string_view to_string(SlopeOrder order);

/// Compares par-slopes of one candidate subbundle against the whole bundle.
/// Requires 0 < sub.rank < whole.rank.
SlopeOrder slope_compare(const ParabolicData& sub, const ParabolicData& whole);

/// k(n-k)(g-1) + epsilon + N sum(mu). Requires 1 <= epsilon <= n-1 and N >= 0.
Rational s_invariant(int n, int k, int g, int epsilon, long group_order = 0, const std::vector<Rational>& mu = {});

/// Node form: rank 2, epsilon = 1.
Rational s_invariant_node(int k, int g, long group_order = 0, const std::vector<Rational>& mu = {});

/// 2r^2(g-1) + n r(r-1) + 2.
long moduli_dimension(int rank, int n_points, int g);

struct ConnectionSpectrum {
    int n_points = 0;
    int rank = 1;
    /// lambda[i][j], 0 <= i < n_points, 0 <= j < rank
    std::vector<std::vector<Rational>> lambda;
    long degree = 0;
};

/// d + sum lambda == 0. Throws std::invalid_argument on ragged dimensions.
bool residue_degree_check(const ConnectionSpectrum& spectrum);

/// exponent / N for each entry, grouped and sorted. Throws std::invalid_argument
/// unless N >= 1 and 0 <= exponent < N.
std::vector<ParabolicWeight> weights_from_equivariant(long group_order, const std::vector<long>& exponents);

struct ParabolicQuery {
    InvariantQuery base;
    int epsilon = 1;
    long group_order = 0;
    std::vector<Rational> mu;
};

struct ParabolicResult {
    Rational threshold;   // s_invariant with the N sum(mu) shift
    Rational s_value;     // d k - n e'
    bool in_range = false;
    std::optional<InvariantResult> invariant;  // set when in_range
};

/// s-value d k - n e' of the base query against the shifted threshold; when
/// s-value >= threshold the base query is evaluated.
ParabolicResult parabolic_invariant(const ParabolicQuery& query, unsigned workers = 1);

}  // namespace gwvi

#endif  // GWVI_PARABOLIC_HPP
