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

#include "gwvi/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <sstream>
#include <utility>

#include "cyclotomic_detail.hpp"

namespace gwvi {

namespace detail {

namespace {

// Exact division of integer polynomials by a monic divisor.
std::vector<long> divide_monic(std::vector<long> num, const std::vector<long>& den) {
    const std::size_t dd = den.size() - 1;
    std::vector<long> quot(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        const long c = num[i];
        quot[i - dd] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
    }
    for (std::size_t i = 0; i < dd; ++i)
        if (num[i] != 0) throw std::logic_error("cyclotomic polynomial division left a remainder");
    return quot;
}

std::unique_ptr<CyclotomicOrderData> build_order_data(int n) {
    auto data = std::make_unique<CyclotomicOrderData>();
    data->order = n;

    std::vector<long> poly(static_cast<std::size_t>(n) + 1, 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d)
        if (n % d == 0) poly = divide_monic(std::move(poly), order_data(d).phi);
    data->phi = std::move(poly);
    data->degree = static_cast<int>(data->phi.size()) - 1;

    const auto deg = static_cast<std::size_t>(data->degree);
    data->power_mod.reserve(static_cast<std::size_t>(n));
    std::vector<long> current(deg, 0);
    current[0] = 1;
    for (int j = 0; j < n; ++j) {
        data->power_mod.push_back(current);
        // multiply by x and reduce the overflowing top coefficient
        std::vector<long> next(deg, 0);
        const long top = current[deg - 1];
        for (std::size_t i = deg - 1; i > 0; --i) next[i] = current[i - 1];
        for (std::size_t i = 0; i < deg; ++i) next[i] -= top * data->phi[i];
        current = std::move(next);
    }
    return data;
}

}  // namespace

const CyclotomicOrderData& order_data(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
    static std::recursive_mutex mutex;
    static std::map<int, std::unique_ptr<CyclotomicOrderData>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, build_order_data(n)).first;
    return *it->second;
}

}  // namespace detail

NonRationalValue::NonRationalValue(int order, std::vector<Rational> coefficients)
    : std::runtime_error([&] {
          std::ostringstream os;
          os << "non-rational cyclotomic value in Q(zeta_" << order << "): [";
          for (std::size_t i = 0; i < coefficients.size(); ++i) os << (i ? ", " : "") << coefficients[i].get_str();
          os << "]";
          return os.str();
      }()),
      order_(order),
      coefficients_(std::move(coefficients)) {}

int euler_phi(int n) { return detail::order_data(n).degree; }

const std::vector<long>& cyclotomic_polynomial(int n) { return detail::order_data(n).phi; }

namespace {

using Poly = std::vector<Rational>;

void trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Long division; divisor must be nonzero after trimming.
std::pair<Poly, Poly> divmod(Poly num, const Poly& den) {
    if (num.size() < den.size()) return {Poly{}, std::move(num)};
    Poly quot(num.size() - den.size() + 1);
    const Rational& lead = den.back();
    for (std::size_t i = num.size(); i-- >= den.size();) {
        if (num[i] == 0) continue;
        Rational c = num[i] / lead;
        const std::size_t shift = i - (den.size() - 1);
        quot[shift] = c;
        for (std::size_t j = 0; j < den.size(); ++j) num[shift + j] -= c * den[j];
    }
    num.resize(den.size() - 1);
    trim(num);
    trim(quot);
    return {std::move(quot), std::move(num)};
}

Poly subtract_product(const Poly& a, const Poly& q, const Poly& b) {
    Poly out(std::max(a.size(), q.empty() || b.empty() ? 0 : q.size() + b.size() - 1));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
    for (std::size_t i = 0; i < q.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
    trim(out);
    return out;
}

}  // namespace

CyclotomicNumber::CyclotomicNumber(int order, const Rational& value)
    : order_(order), data_(&detail::order_data(order)), coeffs_(static_cast<std::size_t>(data_->degree)) {
    coeffs_[0] = value;
}

CyclotomicNumber CyclotomicNumber::zeta(int order, long exponent) {
    CyclotomicNumber out(order);
    const long r = ((exponent % order) + order) % order;
    const auto& row = out.data_->power_mod[static_cast<std::size_t>(r)];
    for (std::size_t i = 0; i < row.size(); ++i) out.coeffs_[i] = row[i];
    return out;
}

CyclotomicNumber CyclotomicNumber::from_power_basis(int order, std::vector<Rational> coefficients) {
    CyclotomicNumber out(order);
    if (coefficients.size() > out.coeffs_.size())
        throw std::invalid_argument("too many power-basis coordinates for Q(zeta_" + std::to_string(order) + ")");
    for (std::size_t i = 0; i < coefficients.size(); ++i) out.coeffs_[i] = std::move(coefficients[i]);
    return out;
}

CyclotomicNumber CyclotomicNumber::from_cyclic(int order, std::span<const Integer> coefficients) {
    CyclotomicNumber out(order);
    const auto deg = out.coeffs_.size();
    std::vector<Integer> acc(deg);
    for (std::size_t j = 0; j < coefficients.size(); ++j) {
        if (coefficients[j] == 0) continue;
        const auto& row = out.data_->power_mod[j % static_cast<std::size_t>(order)];
        for (std::size_t i = 0; i < deg; ++i)
            if (row[i] != 0) acc[i] += row[i] * coefficients[j];
    }
    for (std::size_t i = 0; i < deg; ++i) out.coeffs_[i] = acc[i];
    return out;
}

bool CyclotomicNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) return false;
    return true;
}

Rational CyclotomicNumber::to_rational() const {
    if (!is_rational()) throw NonRationalValue(order_, coeffs_);
    return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::inverse() const {
    Poly a(coeffs_.begin(), coeffs_.end());
    trim(a);
    if (a.empty()) throw std::domain_error("division by zero");

    Poly r0(data_->phi.begin(), data_->phi.end());
    Poly r1 = std::move(a);
    Poly s0;            // coefficient of the current r0 in terms of the input
    Poly s1{Rational(1)};
    while (!r1.empty()) {
        auto [q, r] = divmod(r0, r1);
        Poly s2 = subtract_product(s0, q, s1);
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // Phi_n is irreducible, so the gcd r0 is a nonzero constant.
    if (r0.size() != 1) throw std::logic_error("cyclotomic inverse: non-constant gcd");
    const Rational scale = 1 / r0[0];
    CyclotomicNumber out(order_);
    auto [unused, reduced] = divmod(std::move(s0), Poly(data_->phi.begin(), data_->phi.end()));
    for (std::size_t i = 0; i < reduced.size(); ++i) out.coeffs_[i] = reduced[i] * scale;
    return out;
}

CyclotomicNumber CyclotomicNumber::galois(long j) const {
    const long n = order_;
    const long jj = ((j % n) + n) % n;
    if (std::gcd(jj, n) != 1) throw std::invalid_argument("galois exponent must be coprime to the order");
    CyclotomicNumber out(order_);
    out.coeffs_[0] = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        const auto& row = data_->power_mod[static_cast<std::size_t>((static_cast<long>(i) * jj) % n)];
        for (std::size_t t = 0; t < row.size(); ++t)
            if (row[t] != 0) out.coeffs_[t] += row[t] * coeffs_[i];
    }
    return out;
}

CyclotomicNumber CyclotomicNumber::pow(long exponent) const {
    CyclotomicNumber base = exponent < 0 ? inverse() : *this;
    unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    CyclotomicNumber result(order_, 1);
    while (e) {
        if (e & 1u) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

void CyclotomicNumber::require_same_order(const CyclotomicNumber& rhs) const {
    if (order_ != rhs.order_) throw std::invalid_argument("incompatible cyclotomic orders");
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber out(*this);
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
    require_same_order(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
    require_same_order(rhs);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

CyclotomicNumber operator*(const CyclotomicNumber& lhs, const CyclotomicNumber& rhs) {
    lhs.require_same_order(rhs);
    const std::size_t deg = lhs.coeffs_.size();
    std::vector<Rational> wide(2 * deg - 1);
    for (std::size_t i = 0; i < deg; ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < deg; ++j)
            if (rhs.coeffs_[j] != 0) wide[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    const auto& phi = lhs.data_->phi;
    for (std::size_t i = wide.size(); i-- > deg;) {
        if (wide[i] == 0) continue;
        const Rational c = wide[i];
        for (std::size_t j = 0; j < deg; ++j)
            if (phi[j] != 0) wide[i - deg + j] -= c * phi[j];
        wide[i] = 0;
    }
    CyclotomicNumber out(lhs.order_);
    for (std::size_t i = 0; i < deg; ++i) out.coeffs_[i] = std::move(wide[i]);
    return out;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) { return *this = *this * rhs; }

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& rhs) { return *this = *this / rhs; }

CyclotomicNumber& CyclotomicNumber::operator*=(const Rational& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

bool operator==(const CyclotomicNumber& lhs, const CyclotomicNumber& rhs) {
    if (lhs.order_ != rhs.order_) return false;
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        if (lhs.coeffs_[i] != rhs.coeffs_[i]) return false;
    return true;
}

std::string CyclotomicNumber::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        os << coeffs_[i].get_str();
        if (i > 0) os << "*z^" << i;
    }
    if (first) os << "0";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& value) { return os << value.to_string(); }

Rational root_power_sum(int n, long t) {
    if (n < 1) throw std::invalid_argument("root_power_sum: n must be positive");
    return t % n == 0 ? Rational(n) : Rational(0);
}

}  // namespace gwvi
