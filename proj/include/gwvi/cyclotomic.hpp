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

#ifndef GWVI_CYCLOTOMIC_HPP
#define GWVI_CYCLOTOMIC_HPP

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "gwvi/rational.hpp"

namespace gwvi {

namespace detail {
struct CyclotomicOrderData;
}

/// Raised by CyclotomicNumber::to_rational when a non-constant coordinate
/// survives. Carries the full coordinate vector for diagnostics.
class NonRationalValue : public std::runtime_error {
   public:
    NonRationalValue(int order, std::vector<Rational> coefficients);

    int order() const noexcept { return order_; }
    const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }

   private:
    int order_;
    std::vector<Rational> coefficients_;
};

int euler_phi(int n);

/// n-th cyclotomic polynomial, coefficients from x^0 up to the leading 1.
/// Computed once per order as (x^n - 1) / prod_{d | n, d < n} Phi_d and cached;
/// concurrent first use is safe.
const std::vector<long>& cyclotomic_polynomial(int n);

/// An element of Q(zeta_n), stored in the power basis 1, zeta, ..., zeta^{phi(n)-1}
/// of Q[x]/(Phi_n). The representation is canonical, so equality of field
/// elements is equality of coordinates.
class CyclotomicNumber {
   public:
    /// The rational constant `value` viewed in Q(zeta_order).
    explicit CyclotomicNumber(int order = 1, const Rational& value = 0);

    /// zeta_order^exponent; any integer exponent.
    static CyclotomicNumber zeta(int order, long exponent = 1);

    /// Coordinates over the power basis; at most phi(order) entries, missing
    /// ones are zero.
    static CyclotomicNumber from_power_basis(int order, std::vector<Rational> coefficients);

    /// Reduces sum_j coefficients[j] * zeta^j for arbitrary length.
    static CyclotomicNumber from_cyclic(int order, std::span<const Integer> coefficients);

    int order() const noexcept { return order_; }
    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;

    /// Throws NonRationalValue if any non-constant coordinate is nonzero.
    Rational to_rational() const;

    /// Extended polynomial gcd with Phi_n. Throws std::domain_error("division by zero").
    CyclotomicNumber inverse() const;

    /// Field automorphism zeta -> zeta^j; requires gcd(j, n) = 1.
    CyclotomicNumber galois(long j) const;

    CyclotomicNumber pow(long exponent) const;

    CyclotomicNumber operator-() const;
    CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator/=(const CyclotomicNumber& rhs);
    CyclotomicNumber& operator*=(const Rational& rhs);

    friend CyclotomicNumber operator+(CyclotomicNumber lhs, const CyclotomicNumber& rhs) { return lhs += rhs; }
    friend CyclotomicNumber operator-(CyclotomicNumber lhs, const CyclotomicNumber& rhs) { return lhs -= rhs; }
    friend CyclotomicNumber operator*(const CyclotomicNumber& lhs, const CyclotomicNumber& rhs);
    friend CyclotomicNumber operator/(const CyclotomicNumber& lhs, const CyclotomicNumber& rhs) {
        return lhs * rhs.inverse();
    }
    friend CyclotomicNumber operator*(CyclotomicNumber lhs, const Rational& rhs) { return lhs *= rhs; }

    friend bool operator==(const CyclotomicNumber& lhs, const CyclotomicNumber& rhs);

    /// e.g. "1/2 + 1/2*z^1" in the power basis; "0" for zero.
    std::string to_string() const;

   private:
    void require_same_order(const CyclotomicNumber& rhs) const;

    int order_;
    const detail::CyclotomicOrderData* data_;
    std::vector<Rational> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& value);

/// sum over all n-th roots of unity rho of rho^t: n if n | t, else 0.
Rational root_power_sum(int n, long t);

}  // namespace gwvi

#endif  // GWVI_CYCLOTOMIC_HPP
