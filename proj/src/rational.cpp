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

#include "gwvi/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace gwvi {

std::string to_string(const Rational& value) { return value.get_str(10); }

namespace {

bool valid_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (!text.empty() && text.front() == '+') text.remove_prefix(1);

    const auto slash = text.find('/');
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!valid_integer_literal(num) || !valid_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");

    Integer n(std::string(num.front() == '+' ? num.substr(1) : num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw std::invalid_argument("malformed rational: zero denominator");
    Rational r(n, d);
    r.canonicalize();
    return r;
}

bool is_integer(const Rational& value) { return mpz_divisible_p(value.get_num_mpz_t(), value.get_den_mpz_t()) != 0; }

Rational power(long base, long exponent) {
    if (exponent < 0 && base == 0) throw std::domain_error("division by zero");
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), Integer(base).get_mpz_t(), static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
    if (exponent >= 0) return Rational(p);
    Rational r(Integer(1), p);
    r.canonicalize();
    return r;
}

}  // namespace gwvi
