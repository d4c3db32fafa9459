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

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "postalg/common.hpp"

namespace postalg {

/// Arbitrary-precision rational, always canonical: gcd(num, den) = 1, den > 0.
/// Text form is `p/q`, or plain `p` when the denominator is 1.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }

    static Rational parse(std::string_view text) {
        std::string_view s = detail::trim(text);
        if (s.empty()) throw ParseError(0, "empty rational");
        std::size_t slash = s.find('/');
        auto check_int = [&](std::string_view t) {
            if (t.empty()) return false;
            std::size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
            if (k == t.size()) return false;
            for (; k < t.size(); ++k)
                if (t[k] < '0' || t[k] > '9') return false;
            return true;
        };
        if (slash == std::string_view::npos) {
            if (!check_int(s)) throw ParseError(0, "bad rational '" + std::string(text) + "'");
            Rational r;
            r.v_ = mpq_class(mpz_class(std::string(s), 10));
            return r;
        }
        std::string_view num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!check_int(num) || !check_int(den))
            throw ParseError(0, "bad rational '" + std::string(text) + "'");
        mpz_class d(std::string(den), 10);
        if (d == 0) throw ParseError(0, "bad rational '" + std::string(text) + "': zero denominator");
        Rational r;
        r.v_ = mpq_class(mpz_class(std::string(num), 10), d);
        r.v_.canonicalize();
        return r;
    }

    std::string str() const { return v_.get_str(); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    // ring interface
    Rational zero_like() const { return Rational(); }
    Rational one_like() const { return Rational(1); }
    Rational embed_integer(long k) const { return Rational(k); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    unsigned long characteristic() const { return 0; }

    Rational inverse() const {
        if (is_zero()) throw std::domain_error("Rational: inverse of zero");
        Rational r;
        r.v_ = 1 / v_;
        return r;
    }

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw std::domain_error("Rational: division by zero");
        return Rational(a.v_ / b.v_);
    }
    Rational operator-() const { return Rational(-v_); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    int sign() const { return sgn(v_); }
    Rational abs() const { return sign() < 0 ? -*this : *this; }

  private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}
    mpq_class v_;
};

}  // namespace postalg
