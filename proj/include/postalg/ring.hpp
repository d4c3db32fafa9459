/*
   Copyright 2026 the postalg authors

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

/**
 * @file ring.hpp
 * @brief Coefficient-ring concept shared by the generic algebra templates.
 *
 * A ring element carries its ring with it (modulus, truncation order), so the
 * interface is instance-based: `a.zero_like()` is the zero of a's ring, not of
 * some global ring.  All arithmetic is exact; there is no floating point
 * anywhere in this library.
 */

#pragma once

#include <concepts>
#include <string>

#include "postalg/prime_field.hpp"
#include "postalg/rational.hpp"
#include "postalg/truncated_poly.hpp"

namespace postalg {

template <typename R>
concept Ring = std::regular<R> && requires(const R& a, const R& b) {
    { a + b } -> std::convertible_to<R>;
    { a - b } -> std::convertible_to<R>;
    { a * b } -> std::convertible_to<R>;
    { -a } -> std::convertible_to<R>;
    { a.zero_like() } -> std::convertible_to<R>;
    { a.one_like() } -> std::convertible_to<R>;
    { a.embed_integer(long{1}) } -> std::convertible_to<R>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.characteristic() } -> std::convertible_to<unsigned long>;
    { a.inverse() } -> std::convertible_to<R>;
    { a.str() } -> std::convertible_to<std::string>;
};

static_assert(Ring<Rational>);
static_assert(Ring<PrimeField>);
static_assert(Ring<TruncatedPoly>);

/// Parses a ring element in the text form matching the prototype's ring:
/// `p/q` for Rational, `k mod p` for PrimeField (modulus must agree).
inline Rational parse_like(const Rational&, std::string_view text) { return Rational::parse(text); }

inline PrimeField parse_like(const PrimeField& proto, std::string_view text) {
    PrimeField v = PrimeField::parse(text);
    if (proto.modulus() != 0 && v.modulus() != proto.modulus())
        throw ParseError(0, "element modulus " + std::to_string(v.modulus()) +
                                " does not match ring modulus " + std::to_string(proto.modulus()));
    return v;
}

}  // namespace postalg
