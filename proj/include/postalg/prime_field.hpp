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

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "postalg/common.hpp"

namespace postalg {

/// Integers mod an odd prime p.  Text form is `k mod p` with 0 <= k < p.
///
/// A default-constructed value is the "unattached" zero (p = 0): it compares
/// equal to the zero of any modulus and adopts the other operand's modulus in
/// arithmetic.  This keeps generic accumulation loops (`PrimeField acc{}; acc =
/// acc + x;`) well defined without threading a prototype everywhere.  Mixing
/// two different nonzero moduli is an error.
class PrimeField {
  public:
    PrimeField() : p_(0), v_(0) {}

    PrimeField(long p, long value) : p_(p) {
        if (!is_odd_prime(p)) throw std::domain_error("PrimeField: modulus " + std::to_string(p) + " is not an odd prime");
        v_ = value % p;
        if (v_ < 0) v_ += p;
    }

    static bool is_odd_prime(long p) {
        if (p < 3 || p % 2 == 0) return false;
        for (long d = 3; d * d <= p; d += 2)
            if (p % d == 0) return false;
        return true;
    }

    /// Parses `k mod p`.
    static PrimeField parse(std::string_view text) {
        auto tok = detail::split_ws(text);
        if (tok.size() != 3 || tok[1] != "mod")
            throw ParseError(0, "bad prime-field element '" + std::string(text) + "' (want 'k mod p')");
        long k, p;
        try {
            k = std::stol(tok[0]);
            p = std::stol(tok[2]);
        } catch (const std::exception&) {
            throw ParseError(0, "bad prime-field element '" + std::string(text) + "'");
        }
        if (!is_odd_prime(p))
            throw ParseError(0, "modulus " + tok[2] + " is not an odd prime");
        return PrimeField(p, k);
    }

    std::string str() const { return std::to_string(v_) + " mod " + std::to_string(p_); }

    long modulus() const { return p_; }
    long value() const { return v_; }

    // ring interface
    PrimeField zero_like() const { return with(0); }
    PrimeField one_like() const { return with(1); }
    PrimeField embed_integer(long k) const {
        if (p_ == 0) throw std::domain_error("PrimeField: embed into unattached zero");
        return PrimeField(p_, k);
    }
    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    unsigned long characteristic() const { return static_cast<unsigned long>(p_); }

    PrimeField inverse() const {
        if (v_ == 0) throw std::domain_error("PrimeField: inverse of zero");
        // extended Euclid
        long a = v_, b = p_, x0 = 1, x1 = 0;
        while (b != 0) {
            long q = a / b;
            long t = a - q * b; a = b; b = t;
            t = x0 - q * x1; x0 = x1; x1 = t;
        }
        return with(x0);
    }

    friend PrimeField operator+(const PrimeField& a, const PrimeField& b) {
        long p = joint(a, b);
        return p == 0 ? PrimeField() : PrimeField(p, a.v_ + b.v_);
    }
    friend PrimeField operator-(const PrimeField& a, const PrimeField& b) {
        long p = joint(a, b);
        return p == 0 ? PrimeField() : PrimeField(p, a.v_ - b.v_);
    }
    friend PrimeField operator*(const PrimeField& a, const PrimeField& b) {
        long p = joint(a, b);
        return p == 0 ? PrimeField() : PrimeField(p, a.v_ * b.v_);
    }
    friend PrimeField operator/(const PrimeField& a, const PrimeField& b) { return a * b.inverse(); }
    PrimeField operator-() const { return p_ == 0 ? PrimeField() : PrimeField(p_, -v_); }
    PrimeField& operator+=(const PrimeField& o) { return *this = *this + o; }
    PrimeField& operator-=(const PrimeField& o) { return *this = *this - o; }
    PrimeField& operator*=(const PrimeField& o) { return *this = *this * o; }

    friend bool operator==(const PrimeField& a, const PrimeField& b) {
        if (a.p_ == 0 || b.p_ == 0) return a.v_ == 0 && b.v_ == 0;
        return a.p_ == b.p_ && a.v_ == b.v_;
    }
    friend bool operator!=(const PrimeField& a, const PrimeField& b) { return !(a == b); }

  private:
    PrimeField with(long value) const {
        if (p_ == 0) throw std::domain_error("PrimeField: unattached zero has no unit");
        return PrimeField(p_, value);
    }
    static long joint(const PrimeField& a, const PrimeField& b) {
        if (a.p_ == 0) return b.p_;
        if (b.p_ == 0) return a.p_;
        if (a.p_ != b.p_) throw std::invalid_argument("PrimeField: mixed moduli");
        return a.p_;
    }

    long p_;
    long v_;
};

}  // namespace postalg
