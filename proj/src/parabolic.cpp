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

#include "gwvi/parabolic.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace gwvi {

void validate(const ParabolicData& data) {
    if (data.rank < 1) throw std::invalid_argument("rank must be positive");
    for (const auto& point : data.points) {
        long total = 0;
        for (std::size_t i = 0; i < point.size(); ++i) {
            const auto& w = point[i];
            if (w.multiplicity < 1) throw std::invalid_argument("multiplicities must be positive");
            if (w.weight < 0 || w.weight >= 1) throw std::invalid_argument("weights must lie in [0, 1)");
            if (i > 0 && !(point[i - 1].weight < w.weight))
                throw std::invalid_argument("weights must be strictly increasing");
            total += w.multiplicity;
        }
        if (total != data.rank)
            throw std::invalid_argument("multiplicities sum to " + std::to_string(total) + ", rank is " +
                                        std::to_string(data.rank));
    }
}

Rational parabolic_degree(const ParabolicData& data) {
    validate(data);
    Rational total = data.degree;
    for (const auto& point : data.points)
        for (const auto& w : point) total += w.weight * w.multiplicity;
    return total;
}

std::string_view to_string(SlopeOrder order) {
    switch (order) {
        case SlopeOrder::strict_pass: return "strict_pass";
        case SlopeOrder::boundary: return "boundary";
        case SlopeOrder::fail: return "fail";
    }
    return "?";
}

SlopeOrder slope_compare(const ParabolicData& sub, const ParabolicData& whole) {
    if (sub.rank < 1 || sub.rank >= whole.rank) throw std::invalid_argument("need 0 < rank(sub) < rank(whole)");
    const Rational lhs = parabolic_degree(sub) * whole.rank;
    const Rational rhs = parabolic_degree(whole) * sub.rank;
    if (lhs < rhs) return SlopeOrder::strict_pass;
    if (lhs == rhs) return SlopeOrder::boundary;
    return SlopeOrder::fail;
}

Rational s_invariant(int n, int k, int g, int epsilon, long group_order, const std::vector<Rational>& mu) {
    if (epsilon < 1 || epsilon > n - 1) throw std::invalid_argument("epsilon must lie in 1..n-1");
    if (group_order < 0) throw std::invalid_argument("group order must be nonnegative");
    Rational value = static_cast<long>(k) * (n - k) * (g - 1) + epsilon;
    value += Rational(group_order) * std::accumulate(mu.begin(), mu.end(), Rational(0));
    return value;
}

Rational s_invariant_node(int k, int g, long group_order, const std::vector<Rational>& mu) {
    return s_invariant(2, k, g, 1, group_order, mu);
}

long moduli_dimension(int rank, int n_points, int g) {
    const long r = rank;
    return 2 * r * r * (g - 1) + static_cast<long>(n_points) * r * (r - 1) + 2;
}

bool residue_degree_check(const ConnectionSpectrum& spectrum) {
    if (static_cast<int>(spectrum.lambda.size()) != spectrum.n_points)
        throw std::invalid_argument("lambda must have one row per point");
    Rational total = spectrum.degree;
    for (const auto& row : spectrum.lambda) {
        if (static_cast<int>(row.size()) != spectrum.rank)
            throw std::invalid_argument("lambda rows must have rank entries");
        for (const auto& x : row) total += x;
    }
    return total == 0;
}

std::vector<ParabolicWeight> weights_from_equivariant(long group_order, const std::vector<long>& exponents) {
    if (group_order < 1) throw std::invalid_argument("group order must be positive");
    std::map<long, int> counts;
    for (long e : exponents) {
        if (e < 0 || e >= group_order)
            throw std::invalid_argument("exponent " + std::to_string(e) + " outside 0.." +
                                        std::to_string(group_order - 1));
        ++counts[e];
    }
    std::vector<ParabolicWeight> out;
    for (const auto& [e, c] : counts) {
        Rational w(e, group_order);
        w.canonicalize();
        out.push_back({w, c});
    }
    return out;
}

ParabolicResult parabolic_invariant(const ParabolicQuery& query, unsigned workers) {
    const auto& q = query.base;
    validate(q);
    ParabolicResult result;
    result.threshold = s_invariant(q.n, q.k, q.g, query.epsilon, query.group_order, query.mu);
    result.s_value = q.d * q.k - static_cast<long>(q.n) * q.e_prime;
    result.in_range = result.s_value >= result.threshold;
    if (result.in_range) result.invariant = evaluate(q, workers);
    return result;
}

}  // namespace gwvi
