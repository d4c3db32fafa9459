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

// Shared helpers for the test suites.  All randomness is mt19937_64 with
// fixed seeds so every run checks the same values on every platform.

#pragma once

#include <random>

#include "postalg/rational.hpp"

namespace postalg::testutil {

inline std::mt19937_64 rng(std::uint64_t seed) { return std::mt19937_64(seed); }

/// Small random rational: numerator in [-9, 9], denominator in [1, 9].
inline Rational random_rational(std::mt19937_64& g) {
    std::uniform_int_distribution<long> num(-9, 9), den(1, 9);
    return Rational(num(g), den(g));
}

/// Random nonzero rational.
inline Rational random_nonzero_rational(std::mt19937_64& g) {
    for (;;) {
        Rational r = random_rational(g);
        if (!r.is_zero()) return r;
    }
}

}  // namespace postalg::testutil
