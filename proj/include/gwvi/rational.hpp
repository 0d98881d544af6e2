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

#ifndef GWVI_RATIONAL_HPP
#define GWVI_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace gwvi {

using Integer = mpz_class;

/// Exact rational scalar. GMP keeps it in lowest terms with a positive
/// denominator; the canonical zero is 0/1.
using Rational = mpq_class;

/// "7", "-7/3"; never a decimal point.
std::string to_string(const Rational& value);

/// Inverse of to_string. Also accepts surrounding whitespace and an explicit
/// leading '+'. Throws std::invalid_argument on malformed input or a zero
/// denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& value);

/// base^exponent for a possibly negative exponent (base != 0 when exponent < 0).
Rational power(long base, long exponent);

}  // namespace gwvi

#endif  // GWVI_RATIONAL_HPP
