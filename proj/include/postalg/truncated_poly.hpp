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
#include <vector>

#include "postalg/rational.hpp"

namespace postalg {

/// Rational polynomials truncated at a fixed order N, i.e. Q[x]/(x^{N+1}).
/// Multiplication discards every term of degree > N.  A default-constructed
/// value is the unattached zero (order -1); it adopts the other operand's
/// order in arithmetic.  Mixing two distinct orders is an error.
class TruncatedPoly {
  public:
    TruncatedPoly() : order_(-1) {}

    explicit TruncatedPoly(int order) : order_(order), c_(order + 1) {
        if (order < 0) throw std::domain_error("TruncatedPoly: negative order");
    }

    TruncatedPoly(int order, std::vector<Rational> coeffs) : TruncatedPoly(order) {
        if (static_cast<int>(coeffs.size()) > order + 1)
            throw std::domain_error("TruncatedPoly: too many coefficients");
        for (std::size_t i = 0; i < coeffs.size(); ++i) c_[i] = coeffs[i];
    }

    int order() const { return order_; }

    const Rational& coeff(int i) const {
        static const Rational kZero;
        if (order_ < 0 || i > order_) return kZero;
        return c_[i];
    }
    void set_coeff(int i, const Rational& v) {
        if (order_ < 0 || i < 0 || i > order_) throw std::out_of_range("TruncatedPoly: coefficient index");
        c_[i] = v;
    }

    std::string str() const {
        if (order_ < 0) return "0";
        std::string out;
        bool first = true;
        for (int i = 0; i <= order_; ++i) {
            if (c_[i].is_zero()) continue;
            if (first) {
                out = c_[i].str();
                if (i > 0) out += i == 1 ? " x" : " x^" + std::to_string(i);
                first = false;
                continue;
            }
            Rational a = c_[i].abs();
            out += c_[i].sign() < 0 ? " - " : " + ";
            out += a.str();
            if (i > 0) out += i == 1 ? " x" : " x^" + std::to_string(i);
        }
        return first ? "0" : out;
    }

    // ring interface
    TruncatedPoly zero_like() const { return order_ < 0 ? TruncatedPoly() : TruncatedPoly(order_); }
    TruncatedPoly one_like() const { return embed_integer(1); }
    TruncatedPoly embed_integer(long k) const {
        if (order_ < 0) throw std::domain_error("TruncatedPoly: embed into unattached zero");
        TruncatedPoly r(order_);
        r.c_[0] = Rational(k);
        return r;
    }
    bool is_zero() const {
        for (const auto& x : c_)
            if (!x.is_zero()) return false;
        return true;
    }
    bool is_one() const {
        if (order_ < 0 || !c_[0].is_one()) return false;
        for (int i = 1; i <= order_; ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    unsigned long characteristic() const { return 0; }

    /// Inverse of a unit: constant term nonzero.  Solved term by term from
    /// (sum a_i x^i)(sum b_j x^j) = 1.
    TruncatedPoly inverse() const {
        if (order_ < 0 || c_[0].is_zero())
            throw std::domain_error("TruncatedPoly: inverse of non-unit");
        TruncatedPoly r(order_);
        Rational a0inv = c_[0].inverse();
        r.c_[0] = a0inv;
        for (int n = 1; n <= order_; ++n) {
            Rational s;
            for (int i = 1; i <= n; ++i) s += c_[i] * r.c_[n - i];
            r.c_[n] = -(a0inv * s);
        }
        return r;
    }

    friend TruncatedPoly operator+(const TruncatedPoly& a, const TruncatedPoly& b) {
        int n = joint(a, b);
        if (n < 0) return TruncatedPoly();
        TruncatedPoly r(n);
        for (int i = 0; i <= n; ++i) r.c_[i] = a.coeff(i) + b.coeff(i);
        return r;
    }
    friend TruncatedPoly operator-(const TruncatedPoly& a, const TruncatedPoly& b) { return a + (-b); }
    friend TruncatedPoly operator*(const TruncatedPoly& a, const TruncatedPoly& b) {
        int n = joint(a, b);
        if (n < 0) return TruncatedPoly();
        TruncatedPoly r(n);
        for (int i = 0; i <= n; ++i) {
            if (a.coeff(i).is_zero()) continue;
            for (int j = 0; i + j <= n; ++j) r.c_[i + j] += a.coeff(i) * b.coeff(j);
        }
        return r;
    }
    TruncatedPoly operator-() const {
        TruncatedPoly r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    TruncatedPoly& operator+=(const TruncatedPoly& o) { return *this = *this + o; }
    TruncatedPoly& operator-=(const TruncatedPoly& o) { return *this = *this - o; }
    TruncatedPoly& operator*=(const TruncatedPoly& o) { return *this = *this * o; }

    friend bool operator==(const TruncatedPoly& a, const TruncatedPoly& b) {
        if (a.order_ < 0 || b.order_ < 0) return a.is_zero() && b.is_zero();
        if (a.order_ != b.order_) return false;
        for (int i = 0; i <= a.order_; ++i)
            if (a.c_[i] != b.c_[i]) return false;
        return true;
    }
    friend bool operator!=(const TruncatedPoly& a, const TruncatedPoly& b) { return !(a == b); }

  private:
    static int joint(const TruncatedPoly& a, const TruncatedPoly& b) {
        if (a.order_ < 0) return b.order_;
        if (b.order_ < 0) return a.order_;
        if (a.order_ != b.order_) throw std::invalid_argument("TruncatedPoly: mixed truncation orders");
        return a.order_;
    }

    int order_;
    std::vector<Rational> c_;
};

}  // namespace postalg
