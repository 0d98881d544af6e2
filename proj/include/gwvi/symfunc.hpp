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

#ifndef GWVI_SYMFUNC_HPP
#define GWVI_SYMFUNC_HPP

#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gwvi/cyclotomic.hpp"

namespace gwvi {

/// Weakly decreasing list of positive parts; trailing zeros are dropped on
/// construction so equal partitions compare equal.
class Partition {
   public:
    Partition() = default;
    Partition(std::initializer_list<int> parts);
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    /// |lambda|
    int size() const noexcept;
    bool empty() const noexcept { return parts_.empty(); }
    /// Part in `row` (0-based); zero past the last row.
    int operator[](std::size_t row) const noexcept { return row < parts_.size() ? parts_[row] : 0; }

    Partition conjugate() const;
    bool fits_in_box(int rows, int cols) const noexcept;
    /// Complement inside the rows x cols box, rotated by 180 degrees.
    Partition complement(int rows, int cols) const;

    /// "(3,1)"; the empty partition prints as "()".
    std::string to_string() const;

    friend auto operator<=>(const Partition&, const Partition&) = default;

   private:
    std::vector<int> parts_;
};

/// (1^a): a single column of a boxes.
Partition column_partition(int a);

/// All partitions inside the rows x cols box, ordered by size, then
/// lexicographically decreasing.
std::vector<Partition> box_partitions(int rows, int cols);

/// sigma_j(values) by the one-pass recurrence prod (1 + v_i t). j beyond the
/// number of values gives 0. An empty list is read in Q (order 1).
CyclotomicNumber elementary_symmetric(int j, std::span<const CyclotomicNumber> values);

/// Littlewood-Richardson coefficient c^nu_{lambda mu}, counted by direct
/// enumeration of LR skew tableaux of shape nu/lambda and content mu.
long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Classical product s_lambda * s_mu truncated to partitions with at most
/// `max_rows` rows.
std::map<Partition, long> lr_product(const Partition& lambda, const Partition& mu, int max_rows);

struct RimHookReduction {
    Partition partition;
    int q_exponent = 0;
    int sign = 1;

    friend bool operator==(const RimHookReduction&, const RimHookReduction&) = default;
};

/// Strips n-rim hooks from lambda until it fits the k x (n-k) box; each strip
/// contributes one power of q and the sign (-1)^{k - height}. Returns
/// std::nullopt when the n-core does not fit the box (the class is zero).
/// Throws std::invalid_argument("class outside algebra") when lambda has more
/// than k rows.
std::optional<RimHookReduction> rim_hook_reduce(const Partition& lambda, int k, int n);

/// Integer combination of q^d sigma_lambda with every lambda inside the
/// k x (n-k) box. Zero coefficients are never stored.
class QuantumClassSum {
   public:
    using Key = std::pair<Partition, int>;

    QuantumClassSum(int k, int n);

    int k() const noexcept { return k_; }
    int n() const noexcept { return n_; }

    /// Throws std::invalid_argument when lambda leaves the box or q_exponent < 0.
    void add(const Partition& lambda, int q_exponent, long coefficient);
    long coefficient(const Partition& lambda, int q_exponent) const;
    const std::map<Key, long>& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }

    /// "s(2) + s(1,1)", "q*s(1)", "-2*q^2*s()"; "0" when empty.
    std::string to_string() const;

    friend bool operator==(const QuantumClassSum&, const QuantumClassSum&) = default;

   private:
    int k_;
    int n_;
    std::map<Key, long> terms_;
};

}  // namespace gwvi

#endif  // GWVI_SYMFUNC_HPP
