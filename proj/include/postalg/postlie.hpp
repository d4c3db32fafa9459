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
 * @file postlie.hpp
 * @brief Graded-truncated free post-Lie machinery on planar forests.
 *
 * The underlying space is the tensor algebra on planar rooted trees: a basis
 * element is a word of planar trees (an OrderedForest), the unit is the empty
 * word, and the grade of a word is its total node count.  Everything is
 * truncated at a fixed grade N; terms above N are silently dropped.
 *
 * Structure maps:
 *   - concatenation product (the free product of words),
 *   - deshuffle coproduct: every single tree is primitive, extended
 *     multiplicatively, so a word splits as the sum over subsequence splits,
 *   - left grafting of trees, extended to whole words by the nested
 *     recursion
 *         1 |> a            = a
 *         (x x1 ... xn) |> a = x |> ((x1 ... xn) |> a)
 *                              - sum_i (x1 ... (x |> xi) ... xn) |> a
 *         X |> 1            = counit(X) 1
 *         X |> (a1 ... am)  = sum (X_(1) |> a1) ... (X_(m) |> am)
 *     over the iterated deshuffle of X,
 *   - the Grossman-Larson-type product  x * y = sum x_(1) . (x_(2) |> y),
 *   - exp/log for both products, BCH, the Magnus expansion
 *     Omega(x) = log_{*}(exp(x)), and the formal-integration post-group
 *         x . y = BCH(x, y),   x |> y = exp(L_{Omega(x)})(y).
 *
 * Lie elements are graded elements that are primitive for the deshuffle
 * coproduct; primitivity is the operative invariant and is checked (not
 * represented structurally).  Operations that require it throw on failure.
 *
 * The grafting is injectable so degenerate base products (for instance the
 * zero product, under which the Grossman-Larson product collapses to plain
 * concatenation) can share all of the series machinery.  A base product must
 * be grade additive: the product of trees with j and k nodes is a combination
 * of trees with j+k nodes.  Left grafting and the zero product both are.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "postalg/common.hpp"
#include "postalg/ring.hpp"
#include "postalg/trees.hpp"

namespace postalg {

/// Hard cap on the truncation grade; the basis growth is Catalan-factorial.
inline constexpr int kMaxLieGrade = 6;
inline constexpr int kDefaultLieGrade = 4;

template <Ring R>
class GradedElement;

namespace detail {

template <Ring R>
void require_same_grade(const GradedElement<R>& a, const GradedElement<R>& b) {
    if (a.grade() != b.grade())
        throw std::invalid_argument("graded elements: grade mismatch");
}

}  // namespace detail

/// Finite linear combination of words of planar trees, truncated at a fixed
/// grade (total node count).  The prototype element carries the ring.
template <Ring R>
class GradedElement {
  public:
    GradedElement() = default;

    GradedElement(int grade, const R& proto) : grade_(grade), proto_(proto.zero_like()) {
        if (grade < 0 || grade > kMaxLieGrade)
            throw std::invalid_argument("graded element: grade out of range");
    }

    static GradedElement unit(int grade, const R& proto) {
        GradedElement e(grade, proto);
        e.add(OrderedForest(), proto.one_like());
        return e;
    }
    static GradedElement of(int grade, const OrderedForest& w, const R& c) {
        GradedElement e(grade, c);
        e.add(w, c);
        return e;
    }
    static GradedElement of(int grade, const PlanarTree& t, const R& c) {
        return of(grade, OrderedForest(t), c);
    }

    int grade() const { return grade_; }
    const R& proto() const { return proto_; }

    /// Adds c.w, dropping the term when the word exceeds the grade.
    void add(const OrderedForest& w, const R& c) {
        if (w.node_count() > grade_) return;
        R v = c + proto_;  // attaches the ring; mixed rings throw
        if (v.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(w, v);
        if (!fresh) {
            it->second = it->second + v;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    R coeff(const OrderedForest& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? proto_ : it->second;
    }

    const std::map<OrderedForest, R>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Counit: the coefficient of the empty word.
    R counit() const { return coeff(OrderedForest()); }

    /// The part of total node count n, as an element of the same grade.
    GradedElement graded_part(int n) const {
        GradedElement out(grade_, proto_);
        for (const auto& [w, c] : terms_)
            if (w.node_count() == n) out.add(w, c);
        return out;
    }

    friend GradedElement operator+(const GradedElement& a, const GradedElement& b) {
        detail::require_same_grade(a, b);
        GradedElement r = a;
        for (const auto& [w, c] : b.terms_) r.add(w, c);
        return r;
    }
    friend GradedElement operator-(const GradedElement& a, const GradedElement& b) {
        detail::require_same_grade(a, b);
        GradedElement r = a;
        for (const auto& [w, c] : b.terms_) r.add(w, -c);
        return r;
    }
    friend GradedElement operator-(const GradedElement& a) {
        GradedElement r(a.grade_, a.proto_);
        for (const auto& [w, c] : a.terms_) r.add(w, -c);
        return r;
    }
    friend GradedElement operator*(const R& s, const GradedElement& a) {
        GradedElement r(a.grade_, a.proto_);
        for (const auto& [w, c] : a.terms_) r.add(w, s * c);
        return r;
    }

    friend bool operator==(const GradedElement& a, const GradedElement& b) {
        return a.grade_ == b.grade_ && a.terms_ == b.terms_;
    }

    /// Graded-lex ordered term lines, `<value> <word>` each.
    std::vector<std::string> lines() const {
        std::vector<std::pair<std::pair<int, std::string>, std::string>> sorted;
        for (const auto& [w, c] : terms_)
            sorted.push_back({{w.node_count(), w.key()}, c.str() + " " + w.key()});
        std::sort(sorted.begin(), sorted.end());
        std::vector<std::string> out;
        out.reserve(sorted.size());
        for (auto& s : sorted) out.push_back(std::move(s.second));
        return out;
    }

    std::string str() const {
        std::string out;
        const std::vector<std::string> ls = lines();
        for (std::size_t i = 0; i < ls.size(); ++i) {
            if (i) out += '\n';
            out += ls[i];
        }
        return out;
    }

    /// Reads `<value> <word>` lines; blank lines are skipped, repeated words
    /// accumulate.  A word above the grade is an error, not a silent drop.
    static GradedElement parse(int grade, const R& proto, const std::string& text) {
        GradedElement out(grade, proto);
        const std::vector<std::string> ls = detail::split_on(text, '\n');
        for (std::size_t pos = 0; pos < ls.size(); ++pos) {
            int lineno = static_cast<int>(pos + 1);
            std::string_view line = detail::trim(ls[pos]);
            if (line.empty()) continue;
            std::size_t sp = line.find_first_of(" \t");
            if (sp == std::string_view::npos)
                throw ParseError(lineno, "expected '<value> <word>'");
            std::string value_text(detail::trim(line.substr(0, sp)));
            std::string word_text(detail::trim(line.substr(sp)));
            R c = [&] {
                try {
                    return parse_like(proto, value_text);
                } catch (const ParseError& e) {
                    throw ParseError(lineno, e.what());
                }
            }();
            OrderedForest w = [&] {
                try {
                    return OrderedForest::parse(word_text);
                } catch (const ParseError& e) {
                    throw ParseError(lineno, e.what());
                }
            }();
            if (w.node_count() > grade)
                throw ParseError(lineno, "word '" + word_text + "' exceeds grade " +
                                             std::to_string(grade));
            out.add(w, c);
        }
        return out;
    }

  private:
    int grade_ = 0;
    R proto_;
    std::map<OrderedForest, R> terms_;
};

/// Element of the two-fold tensor square, word-pair basis.
template <Ring R>
class GradedTensor2 {
  public:
    using Key = std::pair<OrderedForest, OrderedForest>;

    void add(const OrderedForest& l, const OrderedForest& r, const R& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.try_emplace(Key{l, r}, c);
        if (!fresh) {
            it->second = it->second + c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    const std::map<Key, R>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    friend GradedTensor2 operator+(const GradedTensor2& a, const GradedTensor2& b) {
        GradedTensor2 r = a;
        for (const auto& [k, c] : b.terms_) r.add(k.first, k.second, c);
        return r;
    }
    friend GradedTensor2 operator-(const GradedTensor2& a, const GradedTensor2& b) {
        GradedTensor2 r = a;
        for (const auto& [k, c] : b.terms_) r.add(k.first, k.second, -c);
        return r;
    }

    friend bool operator==(const GradedTensor2& a, const GradedTensor2& b) {
        return a.terms_ == b.terms_;
    }

  private:
    std::map<Key, R> terms_;
};

/// Bilinear extension of word concatenation, truncated.
template <Ring R>
GradedElement<R> concat(const GradedElement<R>& a, const GradedElement<R>& b) {
    detail::require_same_grade(a, b);
    GradedElement<R> out(a.grade(), a.proto());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) out.add(wa * wb, ca * cb);
    return out;
}

/// Deshuffle coproduct: each tree letter is primitive, so a word splits as
/// the sum over all order-preserving two-colourings of its letters.
template <Ring R>
GradedTensor2<R> deshuffle(const GradedElement<R>& x) {
    GradedTensor2<R> out;
    for (const auto& [w, c] : x.terms()) {
        const std::vector<PlanarTree>& ts = w.trees();
        const std::size_t n = ts.size();
        for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
            std::vector<PlanarTree> l, r;
            for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1u ? l : r).push_back(ts[i]);
            out.add(OrderedForest(std::move(l)), OrderedForest(std::move(r)), c);
        }
    }
    return out;
}

/// Whether deshuffle(x) = x (x) 1 + 1 (x) x.  Forces a zero constant term.
template <Ring R>
bool is_primitive(const GradedElement<R>& x) {
    GradedTensor2<R> expect;
    for (const auto& [w, c] : x.terms()) {
        expect.add(w, OrderedForest(), c);
        expect.add(OrderedForest(), w, c);
    }
    return deshuffle(x) == expect;
}

namespace detail {

template <Ring R>
void require_char_zero(const GradedElement<R>& x, const char* what) {
    if (x.proto().characteristic() != 0)
        throw std::domain_error(std::string(what) + ": needs a characteristic-zero ring");
}

/// exp under an arbitrary associative product; x must have zero constant term
/// so the series stops at the grade.
template <Ring R, typename Mul>
GradedElement<R> exp_series(const GradedElement<R>& x, Mul mul, const char* what) {
    require_char_zero(x, what);
    if (!x.counit().is_zero())
        throw std::domain_error(std::string(what) + ": constant term must be 0");
    GradedElement<R> out = GradedElement<R>::unit(x.grade(), x.proto());
    GradedElement<R> pow = out;
    long fact = 1;
    for (int k = 1; k <= x.grade(); ++k) {
        pow = mul(pow, x);
        if (pow.is_zero()) break;
        fact *= k;
        out = out + x.proto().embed_integer(fact).inverse() * pow;
    }
    return out;
}

/// log of 1 + z under an arbitrary associative product.
template <Ring R, typename Mul>
GradedElement<R> log_series(const GradedElement<R>& x, Mul mul, const char* what) {
    require_char_zero(x, what);
    if (!(x.counit() == x.proto().one_like()))
        throw std::domain_error(std::string(what) + ": constant term must be 1");
    const GradedElement<R> z = x - GradedElement<R>::unit(x.grade(), x.proto());
    GradedElement<R> out(x.grade(), x.proto());
    GradedElement<R> pow = GradedElement<R>::unit(x.grade(), x.proto());
    for (int k = 1; k <= x.grade(); ++k) {
        pow = mul(pow, z);
        if (pow.is_zero()) break;
        // (-1)^{k+1} / k
        out = out + x.proto().embed_integer(k % 2 ? k : -k).inverse() * pow;
    }
    return out;
}

}  // namespace detail

template <Ring R>
GradedElement<R> exp_dot(const GradedElement<R>& x) {
    return detail::exp_series(
        x, [](const GradedElement<R>& a, const GradedElement<R>& b) { return concat(a, b); },
        "exp");
}

template <Ring R>
GradedElement<R> log_dot(const GradedElement<R>& x) {
    return detail::log_series(
        x, [](const GradedElement<R>& a, const GradedElement<R>& b) { return concat(a, b); },
        "log");
}

/// BCH(x, y) = log(exp(x).exp(y)) in the concatenation algebra.  The output
/// is again primitive up to the grade.
template <Ring R>
GradedElement<R> bch(const GradedElement<R>& x, const GradedElement<R>& y) {
    detail::require_same_grade(x, y);
    if (!is_primitive(x) || !is_primitive(y))
        throw std::domain_error("bch: arguments must be primitive");
    return log_dot(concat(exp_dot(x), exp_dot(y)));
}

/// The free post-Lie engine: one truncation grade, one base product on
/// trees, and memo tables for the word-level extension.  Methods are const
/// but fill the memo tables, so one engine must not be shared across threads.
template <Ring R>
class PostLie {
  public:
    /// Base product on generators: (tau, omega) -> combination of trees.
    /// Must be grade additive (see the file comment).
    using BaseProduct =
        std::function<std::vector<std::pair<PlanarTree, R>>(const PlanarTree&, const PlanarTree&)>;

    /// Default base product: left grafting, one term per node of omega.
    PostLie(int grade, const R& proto) : PostLie(grade, proto, BaseProduct{}) {}

    PostLie(int grade, const R& proto, BaseProduct base)
        : grade_(grade), proto_(proto.zero_like()), base_(std::move(base)) {
        if (grade < 0 || grade > kMaxLieGrade)
            throw std::invalid_argument("post-lie: grade out of range");
        if (!base_)
            base_ = [one = proto_.one_like()](const PlanarTree& tau, const PlanarTree& omega) {
                std::vector<std::pair<PlanarTree, R>> out;
                const std::vector<PlanarTree> hung = graft_all(tau, omega);
                out.reserve(hung.size());
                for (const PlanarTree& t : hung) out.emplace_back(t, one);
                return out;
            };
    }

    int grade() const { return grade_; }
    const R& proto() const { return proto_; }

    GradedElement<R> zero() const { return GradedElement<R>(grade_, proto_); }
    GradedElement<R> unit() const { return GradedElement<R>::unit(grade_, proto_); }
    GradedElement<R> of(const PlanarTree& t) const {
        return GradedElement<R>::of(grade_, t, proto_.one_like());
    }
    GradedElement<R> of(const OrderedForest& w) const {
        return GradedElement<R>::of(grade_, w, proto_.one_like());
    }

    /// The base product extended bilinearly.  Both arguments must be
    /// combinations of single trees.
    GradedElement<R> graft(const GradedElement<R>& x, const GradedElement<R>& y) const {
        require_grade(x);
        require_grade(y);
        for (const auto& [w, c] : x.terms())
            if (w.size() != 1)
                throw std::invalid_argument("graft: arguments must be combinations of single trees");
        for (const auto& [w, c] : y.terms())
            if (w.size() != 1)
                throw std::invalid_argument("graft: arguments must be combinations of single trees");
        GradedElement<R> out(grade_, proto_);
        for (const auto& [wx, cx] : x.terms())
            for (const auto& [wy, cy] : y.terms())
                out = out + (cx * cy) * base_elem(wx.trees()[0], wy.trees()[0]);
        return out;
    }

    /// The full word-level extension of the base product.
    GradedElement<R> extend_rhd(const GradedElement<R>& x, const GradedElement<R>& y) const {
        require_grade(x);
        require_grade(y);
        GradedElement<R> out(grade_, proto_);
        for (const auto& [wx, cx] : x.terms())
            for (const auto& [wy, cy] : y.terms()) {
                if (wx.node_count() + wy.node_count() > grade_) continue;
                out = out + (cx * cy) * rhd_word_word(wx, wy);
            }
        return out;
    }

    /// x * y = sum x_(1) . (x_(2) |> y) over the deshuffle of x.
    GradedElement<R> gl_product(const GradedElement<R>& x, const GradedElement<R>& y) const {
        require_grade(x);
        require_grade(y);
        const R one = proto_.one_like();
        GradedElement<R> out(grade_, proto_);
        for (const auto& [w, c] : x.terms()) {
            const std::vector<PlanarTree>& ts = w.trees();
            const std::size_t n = ts.size();
            for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
                std::vector<PlanarTree> l, r;
                for (std::size_t i = 0; i < n; ++i) ((mask >> i) & 1u ? l : r).push_back(ts[i]);
                GradedElement<R> acted(grade_, proto_);
                const OrderedForest right(std::move(r));
                for (const auto& [wy, cy] : y.terms()) {
                    if (right.node_count() + wy.node_count() > grade_) continue;
                    acted = acted + cy * rhd_word_word(right, wy);
                }
                out = out + c * concat(GradedElement<R>::of(grade_, OrderedForest(std::move(l)), one),
                                       acted);
            }
        }
        return out;
    }

    GradedElement<R> exp_gl(const GradedElement<R>& x) const {
        require_grade(x);
        return detail::exp_series(
            x,
            [this](const GradedElement<R>& a, const GradedElement<R>& b) { return gl_product(a, b); },
            "exp");
    }

    GradedElement<R> log_gl(const GradedElement<R>& x) const {
        require_grade(x);
        return detail::log_series(
            x,
            [this](const GradedElement<R>& a, const GradedElement<R>& b) { return gl_product(a, b); },
            "log");
    }

    /// Magnus expansion Omega(x) = log_{*}(exp(x)).
    GradedElement<R> magnus(const GradedElement<R>& x) const {
        require_grade(x);
        if (!is_primitive(x)) throw std::domain_error("magnus: input is not primitive");
        return log_gl(exp_dot(x));
    }

    /// The inverse expansion: recovers x from Omega(x).
    GradedElement<R> magnus_inverse(const GradedElement<R>& y) const {
        require_grade(y);
        if (!is_primitive(y)) throw std::domain_error("magnus: input is not primitive");
        return log_dot(exp_gl(y));
    }

    /// Integration action x |> y = exp(L_{Omega(x)})(y) =
    /// sum_k (Omega(x) |>)^k (y) / k!.
    GradedElement<R> integrate_rhd(const GradedElement<R>& x, const GradedElement<R>& y) const {
        require_grade(x);
        require_grade(y);
        if (!is_primitive(x) || !is_primitive(y))
            throw std::domain_error("integration: inputs must be primitive");
        const GradedElement<R> om = magnus(x);
        GradedElement<R> out = y;
        GradedElement<R> cur = y;
        long fact = 1;
        for (int k = 1; k <= grade_; ++k) {
            cur = extend_rhd(om, cur);
            if (cur.is_zero()) break;
            fact *= k;
            out = out + proto_.embed_integer(fact).inverse() * cur;
        }
        return out;
    }

    /// The formal-integration post-group on primitive elements:
    /// (x . y, x |> y) = (BCH(x, y), exp(L_{Omega(x)})(y)).
    std::pair<GradedElement<R>, GradedElement<R>> integrate(const GradedElement<R>& x,
                                                            const GradedElement<R>& y) const {
        return {bch(x, y), integrate_rhd(x, y)};
    }

    /// Sub-adjacent group product carried back to primitive elements:
    /// z with exp(z) = exp(x) * exp(y), computed as BCH(x, x |> y) and
    /// asserted against the direct group-like product.
    GradedElement<R> lb_product(const GradedElement<R>& x, const GradedElement<R>& y) const {
        const GradedElement<R> z = bch(x, integrate_rhd(x, y));
        if (!(exp_dot(z) == gl_product(exp_dot(x), exp_dot(y))))
            throw std::logic_error("lie-butcher product: group-like identity failed");
        return z;
    }

  private:
    void require_grade(const GradedElement<R>& e) const {
        if (e.grade() != grade_)
            throw std::invalid_argument("post-lie: element grade does not match the engine");
    }

    GradedElement<R> base_elem(const PlanarTree& tau, const PlanarTree& omega) const {
        GradedElement<R> out(grade_, proto_);
        const std::vector<std::pair<PlanarTree, R>> prods = base_(tau, omega);
        for (const auto& [t, c] : prods) out.add(OrderedForest(t), c);
        return out;
    }

    /// Word acting on a single tree; lands in combinations of single trees.
    GradedElement<R> rhd_word_tree(const OrderedForest& w, const PlanarTree& a) const {
        if (w.node_count() + a.node_count() > grade_) return zero();
        const auto key = std::pair{w.key(), a.key()};
        if (auto it = memo_tree_.find(key); it != memo_tree_.end()) return it->second;
        GradedElement<R> out(grade_, proto_);
        const std::vector<PlanarTree>& ls = w.trees();
        if (ls.empty()) {
            out.add(OrderedForest(a), proto_.one_like());
        } else if (ls.size() == 1) {
            out = base_elem(ls[0], a);
        } else {
            const PlanarTree x = ls[0];
            const OrderedForest rest(std::vector<PlanarTree>(ls.begin() + 1, ls.end()));
            const GradedElement<R> inner = rhd_word_tree(rest, a);
            for (const auto& [u, c] : inner.terms())
                out = out + c * base_elem(x, u.trees()[0]);
            for (std::size_t i = 0; i < rest.size(); ++i) {
                const GradedElement<R> g = base_elem(x, rest.trees()[i]);
                for (const auto& [u, c] : g.terms()) {
                    std::vector<PlanarTree> wd = rest.trees();
                    wd[i] = u.trees()[0];
                    out = out - c * rhd_word_tree(OrderedForest(std::move(wd)), a);
                }
            }
        }
        memo_tree_.emplace(key, out);
        return out;
    }

    /// Word acting on a word, through the iterated deshuffle of the left
    /// argument: one summand per order-preserving distribution of its
    /// letters over the target's letters.
    GradedElement<R> rhd_word_word(const OrderedForest& w, const OrderedForest& a) const {
        if (a.empty()) {
            GradedElement<R> out(grade_, proto_);
            if (w.empty()) out.add(OrderedForest(), proto_.one_like());
            return out;
        }
        if (a.size() == 1) return rhd_word_tree(w, a.trees()[0]);
        if (w.node_count() + a.node_count() > grade_) return zero();
        const auto key = std::pair{w.key(), a.key()};
        if (auto it = memo_word_.find(key); it != memo_word_.end()) return it->second;
        GradedElement<R> out(grade_, proto_);
        const std::size_t n = w.size(), m = a.size();
        std::vector<std::size_t> slot(n, 0);
        while (true) {
            std::vector<std::vector<PlanarTree>> parts(m);
            for (std::size_t i = 0; i < n; ++i) parts[slot[i]].push_back(w.trees()[i]);
            GradedElement<R> prod = unit();
            for (std::size_t j = 0; j < m && !prod.is_zero(); ++j)
                prod = concat(prod, rhd_word_tree(OrderedForest(std::move(parts[j])), a.trees()[j]));
            out = out + prod;
            std::size_t i = 0;
            while (i < n && slot[i] == m - 1) {
                slot[i] = 0;
                ++i;
            }
            if (i == n) break;
            ++slot[i];
        }
        memo_word_.emplace(key, out);
        return out;
    }

    int grade_;
    R proto_;
    BaseProduct base_;
    mutable std::map<std::pair<std::string, std::string>, GradedElement<R>> memo_tree_;
    mutable std::map<std::pair<std::string, std::string>, GradedElement<R>> memo_word_;
};

}  // namespace postalg
