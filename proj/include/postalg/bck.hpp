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
 * @file bck.hpp
 * @brief The Hopf algebra of rooted forests (coproduct by admissible cuts).
 *
 * The underlying algebra is the free commutative algebra on non-planar rooted
 * trees over Q; a basis element is a forest, the unit is the empty forest.
 * On a tree the coproduct is
 *
 *     Delta(w)  =  w (x) 1  +  sum over admissible cuts c of  P^c(w) (x) R^c(w)
 *
 * (the empty cut contributes 1 (x) w), extended multiplicatively to forests
 * and linearly.  The counit kills every nonempty forest.  The antipode of a
 * tree runs over ALL edge subsets,
 *
 *     S(w)  =  sum over cuts c of  (-1)^{|c|+1}  (w with the edges of c deleted),
 *
 * extended as an algebra homomorphism.  Everything here is exact rational
 * arithmetic.
 */

#pragma once

#include <array>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "postalg/rational.hpp"
#include "postalg/trees.hpp"

namespace postalg {

/// Finite Q-linear combination of forests.
class BCKElement {
  public:
    BCKElement() = default;

    static BCKElement zero() { return {}; }
    static BCKElement unit() { return of(Forest()); }
    static BCKElement of(const Forest& f, const Rational& c = Rational(1)) {
        BCKElement e;
        e.add(f, c);
        return e;
    }
    static BCKElement of(const Tree& t, const Rational& c = Rational(1)) {
        return of(Forest(t), c);
    }

    void add(const Forest& f, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(f, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Rational coeff(const Forest& f) const {
        auto it = terms_.find(f);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const std::map<Forest, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Counit: coefficient of the empty forest (the algebra map sending every
    /// tree to 0).
    Rational counit() const { return coeff(Forest()); }

    friend BCKElement operator+(const BCKElement& a, const BCKElement& b) {
        BCKElement r = a;
        for (const auto& [f, c] : b.terms_) r.add(f, c);
        return r;
    }
    friend BCKElement operator-(const BCKElement& a, const BCKElement& b) {
        BCKElement r = a;
        for (const auto& [f, c] : b.terms_) r.add(f, -c);
        return r;
    }
    friend BCKElement operator*(const Rational& s, const BCKElement& a) {
        BCKElement r;
        for (const auto& [f, c] : a.terms_) r.add(f, s * c);
        return r;
    }
    /// Bilinear forest (multiset-union) product.
    friend BCKElement operator*(const BCKElement& a, const BCKElement& b) {
        BCKElement r;
        for (const auto& [fa, ca] : a.terms_)
            for (const auto& [fb, cb] : b.terms_) r.add(fa * fb, ca * cb);
        return r;
    }

    friend bool operator==(const BCKElement& a, const BCKElement& b) { return a.terms_ == b.terms_; }

    /// Graded-lex ordered term lines, `<rational> <forest>` each.
    std::vector<std::string> lines() const {
        std::vector<std::pair<std::pair<int, std::string>, std::string>> sorted;
        for (const auto& [f, c] : terms_)
            sorted.push_back({{f.node_count(), f.key()}, c.str() + " " + f.key()});
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::string> out;
        out.reserve(sorted.size());
        for (auto& s : sorted) out.push_back(std::move(s.second));
        return out;
    }

  private:
    std::map<Forest, Rational> terms_;
};

/// Element of the two-fold tensor square, forest-pair basis.
class BCKTensor2 {
  public:
    using Key = std::pair<Forest, Forest>;

    static BCKTensor2 unit() {
        BCKTensor2 t;
        t.add(Forest(), Forest(), Rational(1));
        return t;
    }

    void add(const Forest& l, const Forest& r, const Rational& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(Key{l, r}, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    Rational coeff(const Forest& l, const Forest& r) const {
        auto it = terms_.find(Key{l, r});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    friend BCKTensor2 operator+(const BCKTensor2& a, const BCKTensor2& b) {
        BCKTensor2 r = a;
        for (const auto& [k, c] : b.terms_) r.add(k.first, k.second, c);
        return r;
    }
    friend BCKTensor2 operator-(const BCKTensor2& a, const BCKTensor2& b) {
        BCKTensor2 r = a;
        for (const auto& [k, c] : b.terms_) r.add(k.first, k.second, -c);
        return r;
    }
    friend BCKTensor2 operator*(const Rational& s, const BCKTensor2& a) {
        BCKTensor2 r;
        for (const auto& [k, c] : a.terms_) r.add(k.first, k.second, s * c);
        return r;
    }
    /// Componentwise product (A (x) B)(C (x) D) = AC (x) BD.
    friend BCKTensor2 operator*(const BCKTensor2& a, const BCKTensor2& b) {
        BCKTensor2 r;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_)
                r.add(ka.first * kb.first, ka.second * kb.second, ca * cb);
        return r;
    }

    friend bool operator==(const BCKTensor2& a, const BCKTensor2& b) { return a.terms_ == b.terms_; }

    std::vector<std::string> lines() const {
        std::vector<std::pair<std::pair<int, std::string>, std::string>> sorted;
        for (const auto& [k, c] : terms_) {
            std::string key = k.first.key() + " | " + k.second.key();
            sorted.push_back({{k.first.node_count() + k.second.node_count(), key},
                              c.str() + " " + key});
        }
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::string> out;
        out.reserve(sorted.size());
        for (auto& s : sorted) out.push_back(std::move(s.second));
        return out;
    }

  private:
    std::map<Key, Rational> terms_;
};

/// Element of the three-fold tensor power.
class BCKTensor3 {
  public:
    using Key = std::array<Forest, 3>;

    void add(const Forest& a, const Forest& b, const Forest& c, const Rational& v) {
        if (v.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(Key{a, b, c}, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const std::map<Key, Rational>& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    friend bool operator==(const BCKTensor3& a, const BCKTensor3& b) { return a.terms_ == b.terms_; }

  private:
    std::map<Key, Rational> terms_;
};

// ---------------------------------------------------------------------------
// Coproduct.

inline BCKTensor2 coproduct(const Tree& t) {
    BCKTensor2 out;
    out.add(Forest(t), Forest(), Rational(1));  // w (x) 1
    for (const auto& ac : admissible_cuts(t))
        out.add(ac.pruned, Forest(ac.remaining), Rational(1));
    return out;
}

inline BCKTensor2 coproduct(const Forest& f) {
    BCKTensor2 out = BCKTensor2::unit();
    for (const auto& t : f.trees()) out = out * coproduct(t);
    return out;
}

inline BCKTensor2 coproduct(const BCKElement& x) {
    BCKTensor2 out;
    for (const auto& [f, c] : x.terms()) out = out + c * coproduct(f);
    return out;
}

/// Reduced coproduct  delta(x) = Delta(x) - x (x) 1.
inline BCKTensor2 reduced_coproduct(const BCKElement& x) {
    BCKTensor2 out = coproduct(x);
    for (const auto& [f, c] : x.terms()) out.add(f, Forest(), -c);
    return out;
}

inline BCKTensor2 reduced_coproduct(const Tree& t) { return reduced_coproduct(BCKElement::of(t)); }

/// (Delta (x) Id) Delta.
inline BCKTensor3 coproduct_left(const BCKElement& x) {
    BCKTensor3 out;
    const BCKTensor2 outer = coproduct(x);
    for (const auto& [k, c] : outer.terms()) {
        const BCKTensor2 inner = coproduct(k.first);
        for (const auto& [k2, c2] : inner.terms())
            out.add(k2.first, k2.second, k.second, c * c2);
    }
    return out;
}

/// (Id (x) Delta) Delta.
inline BCKTensor3 coproduct_right(const BCKElement& x) {
    BCKTensor3 out;
    const BCKTensor2 outer = coproduct(x);
    for (const auto& [k, c] : outer.terms()) {
        const BCKTensor2 inner = coproduct(k.second);
        for (const auto& [k2, c2] : inner.terms())
            out.add(k.first, k2.first, k2.second, c * c2);
    }
    return out;
}

/// (Delta (x) Id) delta, with delta the reduced coproduct.
inline BCKTensor3 reduced_coproduct_left(const BCKElement& x) {
    BCKTensor3 out;
    const BCKTensor2 outer = reduced_coproduct(x);
    for (const auto& [k, c] : outer.terms()) {
        const BCKTensor2 inner = coproduct(k.first);
        for (const auto& [k2, c2] : inner.terms())
            out.add(k2.first, k2.second, k.second, c * c2);
    }
    return out;
}

/// (Id (x) delta) delta.
inline BCKTensor3 reduced_coproduct_right(const BCKElement& x) {
    BCKTensor3 out;
    const BCKTensor2 outer = reduced_coproduct(x);
    for (const auto& [k, c] : outer.terms()) {
        const BCKTensor2 inner = reduced_coproduct(BCKElement::of(k.second));
        for (const auto& [k2, c2] : inner.terms())
            out.add(k.first, k2.first, k2.second, c * c2);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Counit and antipode.

inline Rational counit(const BCKElement& x) { return x.counit(); }

inline BCKElement antipode(const Tree& t) {
    BCKElement out;
    for (const auto& c : all_cuts(t)) {
        Rational sign((c.size() + 1) % 2 == 0 ? 1 : -1);
        out.add(remove_cut(t, c), sign);
    }
    return out;
}

inline BCKElement antipode(const Forest& f) {
    BCKElement out = BCKElement::unit();
    for (const auto& t : f.trees()) out = out * antipode(t);
    return out;
}

inline BCKElement antipode(const BCKElement& x) {
    BCKElement out;
    for (const auto& [f, c] : x.terms()) out = out + c * antipode(f);
    return out;
}

/// m (S (x) Id) Delta(x); equals counit(x) * 1 by the antipode axiom.
inline BCKElement antipode_convolve_left(const BCKElement& x) {
    BCKElement out;
    const BCKTensor2 d = coproduct(x);
    for (const auto& [k, c] : d.terms())
        out = out + c * (antipode(k.first) * BCKElement::of(k.second));
    return out;
}

/// m (Id (x) S) Delta(x).
inline BCKElement antipode_convolve_right(const BCKElement& x) {
    BCKElement out;
    const BCKTensor2 d = coproduct(x);
    for (const auto& [k, c] : d.terms())
        out = out + c * (BCKElement::of(k.first) * antipode(k.second));
    return out;
}

}  // namespace postalg
