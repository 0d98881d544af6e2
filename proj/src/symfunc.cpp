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

#include "gwvi/symfunc.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gwvi {

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
    std::vector<int> out(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
    for (int p : parts_)
        for (int j = 0; j < p; ++j) ++out[static_cast<std::size_t>(j)];
    return Partition(std::move(out));
}

bool Partition::fits_in_box(int rows, int cols) const noexcept {
    return length() <= rows && (parts_.empty() || parts_.front() <= cols);
}

Partition Partition::complement(int rows, int cols) const {
    if (!fits_in_box(rows, cols)) throw std::invalid_argument("partition does not fit the box");
    std::vector<int> out(static_cast<std::size_t>(rows));
    for (int i = 0; i < rows; ++i) out[static_cast<std::size_t>(i)] = cols - (*this)[static_cast<std::size_t>(rows - 1 - i)];
    return Partition(std::move(out));
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

Partition column_partition(int a) {
    if (a < 0) throw std::invalid_argument("column length must be nonnegative");
    return Partition(std::vector<int>(static_cast<std::size_t>(a), 1));
}

namespace {

void box_rec(std::vector<int>& prefix, int rows, int max_part, std::vector<Partition>& out) {
    if (static_cast<int>(prefix.size()) == rows) {
        out.emplace_back(prefix);
        return;
    }
    for (int v = max_part; v >= 0; --v) {
        prefix.push_back(v);
        box_rec(prefix, rows, v, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Partition> box_partitions(int rows, int cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("box dimensions must be nonnegative");
    std::vector<Partition> out;
    std::vector<int> prefix;
    box_rec(prefix, rows, cols, out);
    std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return a.size() < b.size(); });
    return out;
}

CyclotomicNumber elementary_symmetric(int j, std::span<const CyclotomicNumber> values) {
    if (j < 0) throw std::invalid_argument("elementary_symmetric: negative index");
    if (values.empty()) return CyclotomicNumber(1, j == 0 ? 1 : 0);
    const int order = values.front().order();
    if (j > static_cast<int>(values.size())) {
        for (const auto& v : values)
            if (v.order() != order) throw std::invalid_argument("incompatible cyclotomic orders");
        return CyclotomicNumber(order);
    }
    std::vector<CyclotomicNumber> e(static_cast<std::size_t>(j) + 1, CyclotomicNumber(order));
    e[0] = CyclotomicNumber(order, 1);
    for (std::size_t i = 0; i < values.size(); ++i) {
        const auto top = std::min<std::size_t>(static_cast<std::size_t>(j), i + 1);
        for (std::size_t t = top; t >= 1; --t) e[t] += e[t - 1] * values[i];
    }
    return e[static_cast<std::size_t>(j)];
}

namespace {

struct LrFiller {
    const Partition& lambda;
    const Partition& mu;
    std::vector<std::pair<int, int>> cells;  // reverse reading order
    std::vector<std::vector<int>> tableau;   // 0 = empty or inside lambda
    std::vector<int> used;
    long count = 0;

    LrFiller(const Partition& l, const Partition& m, const Partition& nu) : lambda(l), mu(m) {
        tableau.resize(static_cast<std::size_t>(nu.length()));
        for (int i = 0; i < nu.length(); ++i) {
            tableau[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(nu[static_cast<std::size_t>(i)]), 0);
            for (int j = nu[static_cast<std::size_t>(i)] - 1; j >= l[static_cast<std::size_t>(i)]; --j) cells.emplace_back(i, j);
        }
        used.assign(static_cast<std::size_t>(m.length()) + 1, 0);
    }

    void fill(std::size_t idx) {
        if (idx == cells.size()) {
            ++count;
            return;
        }
        const auto [i, j] = cells[idx];
        const auto row = static_cast<std::size_t>(i);
        const auto col = static_cast<std::size_t>(j);
        // entries in row i of an LR tableau never exceed i + 1
        const int max_value = std::min(mu.length(), i + 1);
        for (int v = 1; v <= max_value; ++v) {
            const auto vv = static_cast<std::size_t>(v);
            if (used[vv] >= mu[vv - 1]) continue;
            if (v > 1 && used[vv] + 1 > used[vv - 1]) continue;
            if (col + 1 < tableau[row].size() && tableau[row][col + 1] < v) continue;
            if (i > 0 && j >= lambda[row - 1] && tableau[row - 1][col] >= v) continue;
            tableau[row][col] = v;
            ++used[vv];
            fill(idx + 1);
            --used[vv];
            tableau[row][col] = 0;
        }
    }
};

bool contains(const Partition& outer, const Partition& inner) {
    if (inner.length() > outer.length()) return false;
    for (int i = 0; i < inner.length(); ++i)
        if (inner[static_cast<std::size_t>(i)] > outer[static_cast<std::size_t>(i)]) return false;
    return true;
}

}  // namespace

long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    if (nu.size() != lambda.size() + mu.size()) return 0;
    if (!contains(nu, lambda) || !contains(nu, mu)) return 0;
    LrFiller filler(lambda, mu, nu);
    filler.fill(0);
    return filler.count;
}

namespace {

void candidate_rec(const Partition& lambda, int mu_first, int rows, int remaining, int cap, std::vector<int>& prefix,
                   std::vector<Partition>& out) {
    const auto i = prefix.size();
    if (static_cast<int>(i) == rows) {
        if (remaining == 0) out.emplace_back(prefix);
        return;
    }
    const int lo = lambda[i];
    const int hi = std::min({cap, lo + mu_first, lo + remaining});
    for (int v = hi; v >= lo; --v) {
        prefix.push_back(v);
        candidate_rec(lambda, mu_first, rows, remaining - (v - lo), v, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::map<Partition, long> lr_product(const Partition& lambda, const Partition& mu, int max_rows) {
    std::map<Partition, long> out;
    if (lambda.length() > max_rows || mu.length() > max_rows) return out;
    std::vector<Partition> candidates;
    std::vector<int> prefix;
    const int cap = lambda.empty() ? mu[0] : lambda[0] + mu[0];
    candidate_rec(lambda, mu[0], max_rows, mu.size(), cap, prefix, candidates);
    for (const auto& nu : candidates) {
        const long c = lr_coefficient(lambda, mu, nu);
        if (c != 0) out.emplace(nu, c);
    }
    return out;
}

std::optional<RimHookReduction> rim_hook_reduce(const Partition& lambda, int k, int n) {
    if (k < 1 || k >= n) throw std::invalid_argument("rim_hook_reduce requires 1 <= k < n");
    if (lambda.length() > k) throw std::invalid_argument("class outside algebra");

    // beta-numbers: removing an n-rim hook moves one bead n places down the abacus
    std::vector<long> beta(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + k - 1 - i;

    int q = 0;
    int sign = 1;
    for (;;) {
        bool moved = false;
        for (std::size_t idx = 0; idx < beta.size(); ++idx) {  // beta is decreasing
            const long b = beta[idx];
            if (b < n) continue;
            const long target = b - n;
            if (std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
            const auto between = std::count_if(beta.begin(), beta.end(), [&](long x) { return target < x && x < b; });
            const long height = between + 1;
            if ((k - height) % 2 != 0) sign = -sign;
            ++q;
            beta[idx] = target;
            std::sort(beta.begin(), beta.end(), std::greater<>());
            moved = true;
            break;
        }
        if (!moved) break;
    }

    std::vector<int> parts(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) parts[static_cast<std::size_t>(i)] = static_cast<int>(beta[static_cast<std::size_t>(i)]) - (k - 1 - i);
    Partition reduced(std::move(parts));
    if (!reduced.fits_in_box(k, n - k)) return std::nullopt;
    return RimHookReduction{std::move(reduced), q, sign};
}

QuantumClassSum::QuantumClassSum(int k, int n) : k_(k), n_(n) {
    if (k < 1 || k >= n) throw std::invalid_argument("QuantumClassSum requires 1 <= k < n");
}

void QuantumClassSum::add(const Partition& lambda, int q_exponent, long coefficient) {
    if (!lambda.fits_in_box(k_, n_ - k_)) throw std::invalid_argument("class outside box: " + lambda.to_string());
    if (q_exponent < 0) throw std::invalid_argument("negative q exponent");
    if (coefficient == 0) return;
    auto [it, inserted] = terms_.try_emplace(Key{lambda, q_exponent}, coefficient);
    if (!inserted) {
        it->second += coefficient;
        if (it->second == 0) terms_.erase(it);
    }
}

long QuantumClassSum::coefficient(const Partition& lambda, int q_exponent) const {
    auto it = terms_.find(Key{lambda, q_exponent});
    return it == terms_.end() ? 0 : it->second;
}

std::string QuantumClassSum::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [key, c] : terms_) {
        long shown = c;
        if (!first) {
            os << (c < 0 ? " - " : " + ");
            shown = c < 0 ? -c : c;
        }
        first = false;
        if (shown == -1) os << "-";
        else if (shown != 1) os << shown << "*";
        if (key.second == 1) os << "q*";
        else if (key.second > 1) os << "q^" << key.second << "*";
        os << "s" << key.first.to_string();
    }
    return os.str();
}

}  // namespace gwvi
