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

// The Butcher pre-group over an exact coefficient ring: truncated characters
// a : {trees} -> R with a(empty forest) = 1, the commutative product
// (a.b)(w) = a(w) + b(w), the action (a rhd b)(w) summed over admissible
// cuts, the induced composition group a o b = a.(a rhd b), and the finite
// truncations over a prime field, exportable as post-group tables.

#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "postalg/bck.hpp"
#include "postalg/common.hpp"
#include "postalg/postgroup.hpp"
#include "postalg/ring.hpp"
#include "postalg/trees.hpp"

namespace postalg {

inline constexpr int kMaxCharacterOrder = 8;

/// A truncated Butcher character: one ring value per tree with at most
/// `order` nodes, extended multiplicatively to forests with value 1 on the
/// empty forest.  The prototype element carries the ring (e.g. the modulus).
template <Ring R>
class Character {
  public:
    Character() = default;

    Character(int order, const R& proto) : order_(order), proto_(proto.zero_like()) {
        if (order < 1 || order > kMaxCharacterOrder)
            throw std::invalid_argument("character: order out of range");
        const std::vector<Tree> basis = all_trees_up_to(order);
        for (const Tree& t : basis) values_.emplace(t, proto_);
    }

    int order() const { return order_; }
    const R& proto() const { return proto_; }

    const R& value(const Tree& t) const {
        auto it = values_.find(t);
        if (it == values_.end())
            throw std::domain_error("character: tree exceeds truncation order");
        return it->second;
    }

    void set_value(const Tree& t, const R& v) {
        auto it = values_.find(t);
        if (it == values_.end())
            throw std::domain_error("character: tree exceeds truncation order");
        it->second = v + proto_;  // attaches the ring; mixed rings throw
    }

    const std::map<Tree, R>& values() const { return values_; }

    /// Multiplicative extension to forests; 1 on the empty forest.
    R eval_forest(const Forest& f) const {
        R out = proto_.one_like();
        const std::vector<Tree> factors = f.trees();
        for (const Tree& t : factors) out = out * value(t);
        return out;
    }

    /// Linear-multiplicative evaluation of a Hopf-algebra element whose
    /// forests all fit under the truncation order.  Rational coefficients
    /// are embedded into R; a denominator divisible by the characteristic
    /// is an error.
    R eval(const BCKElement& x) const {
        R out = proto_;
        for (const auto& [forest, coeff] : x.terms()) {
            mpz_class num = coeff.numerator(), den = coeff.denominator();
            if (!num.fits_slong_p() || !den.fits_slong_p())
                throw std::domain_error("character: coefficient too large to embed");
            R c = proto_.embed_integer(num.get_si()) *
                  proto_.embed_integer(den.get_si()).inverse();
            out = out + c * eval_forest(forest);
        }
        return out;
    }

    bool operator==(const Character&) const = default;

  private:
    int order_ = 0;
    R proto_;
    std::map<Tree, R> values_;
};

/// The unit of both group structures: the character vanishing on every tree.
template <Ring R>
Character<R> identity_character(int order, const R& proto) {
    return Character<R>(order, proto);
}

namespace detail {

template <Ring R>
void require_compatible(const Character<R>& a, const Character<R>& b) {
    if (a.order() != b.order())
        throw std::invalid_argument("characters have different truncation orders");
}

}  // namespace detail

/// (a.b)(w) = a(w) + b(w).  The Butcher group's abelian product.
template <Ring R>
Character<R> char_dot(const Character<R>& a, const Character<R>& b) {
    detail::require_compatible(a, b);
    Character<R> out = a;
    for (const auto& [t, v] : b.values()) out.set_value(t, out.value(t) + v);
    return out;
}

/// The dot-inverse: pointwise negation.
template <Ring R>
Character<R> char_neg(const Character<R>& a) {
    Character<R> out = a;
    for (const auto& [t, v] : a.values()) out.set_value(t, -v);
    return out;
}

/// (a rhd b)(w) = sum over admissible cuts c of a(P^c(w)) b(R^c(w)).
/// The empty cut contributes b(w); the pruned part is evaluated
/// multiplicatively.
template <Ring R>
Character<R> char_rhd(const Character<R>& a, const Character<R>& b) {
    detail::require_compatible(a, b);
    Character<R> out(a.order(), a.proto() + b.proto());
    for (const auto& [t, unused] : out.values()) {
        R acc = out.proto();
        const std::vector<AdmissibleCut> cuts = admissible_cuts(t);
        for (const AdmissibleCut& c : cuts) acc = acc + a.eval_forest(c.pruned) * b.value(c.remaining);
        out.set_value(t, acc);
    }
    return out;
}

/// Sub-adjacent (composition) product a o b = a.(a rhd b); equals the
/// convolution of characters through the tree coproduct.
template <Ring R>
Character<R> char_compose(const Character<R>& a, const Character<R>& b) {
    return char_dot(a, char_rhd(a, b));
}

/// The o-inverse, solved degree by degree: the equation (a o x)(w) = 0
/// determines x(w) from values of x on strictly smaller trees,
///   x(w) = -a(w) - sum over nonempty admissible cuts of a(P^c) x(R^c).
template <Ring R>
Character<R> char_inverse_circ(const Character<R>& a) {
    Character<R> out(a.order(), a.proto());
    for (int n = 1; n <= a.order(); ++n) {
        const std::vector<Tree> level = all_trees(n);
        for (const Tree& t : level) {
            R acc = -a.value(t);
            const std::vector<AdmissibleCut> cuts = admissible_cuts(t);
            for (const AdmissibleCut& c : cuts) {
                if (c.cut.size() == 0) continue;
                acc = acc - a.eval_forest(c.pruned) * out.value(c.remaining);
            }
            out.set_value(t, acc);
        }
    }
    return out;
}

/// Header `order N ring Q` or `order N ring Fp:<p>`, then one line
/// `<tree-string> <ring-element>` per tree.  Unlisted trees default to 0;
/// duplicates are rejected.
template <Ring R>
std::string character_str(const Character<R>& c) {
    std::ostringstream os;
    os << "order " << c.order() << " ring ";
    if (c.proto().characteristic() == 0)
        os << "Q";
    else
        os << "Fp:" << c.proto().characteristic();
    os << "\n";
    const std::vector<Tree> basis = all_trees_up_to(c.order());
    for (const Tree& t : basis) os << t.key() << " " << c.value(t).str() << "\n";
    return os.str();
}

namespace detail {

struct CharacterHeader {
    int order = 0;
    bool rational = true;
    long p = 0;
};

inline CharacterHeader parse_character_header(const std::vector<std::string>& lines,
                                              std::size_t* pos) {
    while (*pos < lines.size() && trim(lines[*pos]).empty()) ++*pos;
    if (*pos >= lines.size()) throw ParseError(1, "expected 'order N ring ...' header");
    int lineno = static_cast<int>(*pos + 1);
    auto toks = split_ws(trim(lines[*pos]));
    ++*pos;
    if (toks.size() != 4 || toks[0] != "order" || toks[2] != "ring")
        throw ParseError(lineno, "expected 'order N ring Q|Fp:<p>' header");
    CharacterHeader head;
    try {
        std::size_t used = 0;
        head.order = std::stoi(toks[1], &used);
        if (used != toks[1].size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw ParseError(lineno, "bad order '" + toks[1] + "'");
    }
    if (toks[3] == "Q") {
        head.rational = true;
    } else if (toks[3].rfind("Fp:", 0) == 0) {
        head.rational = false;
        std::string ptext = toks[3].substr(3);
        try {
            std::size_t used = 0;
            head.p = std::stol(ptext, &used);
            if (used != ptext.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError(lineno, "bad modulus '" + ptext + "'");
        }
    } else {
        throw ParseError(lineno, "unknown ring '" + toks[3] + "'");
    }
    return head;
}

template <Ring R>
Character<R> parse_character_body(const std::vector<std::string>& lines, std::size_t pos,
                                  int order, const R& proto) {
    Character<R> out(order, proto);
    std::map<std::string, int> seen;
    for (; pos < lines.size(); ++pos) {
        int lineno = static_cast<int>(pos + 1);
        std::string_view line = trim(lines[pos]);
        if (line.empty()) continue;
        std::size_t sp = line.find_first_of(" \t");
        if (sp == std::string_view::npos)
            throw ParseError(lineno, "expected '<tree> <value>'");
        std::string tree_text(line.substr(0, sp));
        std::string value_text(trim(line.substr(sp)));
        Tree t = [&] {
            try {
                return Tree::parse(tree_text);
            } catch (const ParseError& e) {
                throw ParseError(lineno, e.what());
            }
        }();
        if (t.node_count() > order)
            throw ParseError(lineno, "tree '" + tree_text + "' exceeds order " +
                                         std::to_string(order));
        if (seen.count(t.key()))
            throw ParseError(lineno, "duplicate tree '" + tree_text + "' (first at line " +
                                         std::to_string(seen[t.key()]) + ")");
        seen[t.key()] = lineno;
        try {
            out.set_value(t, parse_like(proto, value_text));
        } catch (const ParseError& e) {
            throw ParseError(lineno, e.what());
        }
    }
    return out;
}

}  // namespace detail

/// Reads a rational character.  Rejects Fp headers.
inline Character<Rational> parse_character_q(const std::string& text) {
    auto lines = detail::split_on(text, '\n');
    std::size_t pos = 0;
    auto head = detail::parse_character_header(lines, &pos);
    if (!head.rational) throw ParseError(1, "expected ring Q");
    return detail::parse_character_body(lines, pos, head.order, Rational());
}

/// Reads a prime-field character; the header fixes the modulus.
inline Character<PrimeField> parse_character_fp(const std::string& text) {
    auto lines = detail::split_on(text, '\n');
    std::size_t pos = 0;
    auto head = detail::parse_character_header(lines, &pos);
    if (head.rational) throw ParseError(1, "expected ring Fp:<p>");
    PrimeField proto(head.p, 0);
    return detail::parse_character_body(lines, pos, head.order, proto);
}

/// Every character on the trees with at most `order` nodes over F_p, in
/// lexicographic order of the value vector along the graded-lexicographic
/// tree basis.  The identity character comes first.
inline std::vector<Character<PrimeField>> all_characters_fp(int order, long p) {
    PrimeField proto(p, 0);
    const std::vector<Tree> basis = all_trees_up_to(order);
    double size = 1;
    for (std::size_t i = 0; i < basis.size(); ++i) size *= static_cast<double>(p);
    if (size > 20000.0) throw std::domain_error("finite carrier too large to enumerate");
    std::vector<Character<PrimeField>> out;
    std::vector<long> digits(basis.size(), 0);
    for (;;) {
        Character<PrimeField> c(order, proto);
        for (std::size_t i = 0; i < basis.size(); ++i)
            c.set_value(basis[i], PrimeField(p, digits[i]));
        out.push_back(std::move(c));
        // Increment as a base-p counter, last digit fastest.
        std::size_t i = basis.size();
        while (i > 0 && digits[i - 1] == p - 1) digits[--i] = 0;
        if (i == 0) break;
        ++digits[i - 1];
    }
    return out;
}

/// Index of a character in the `all_characters_fp` ordering.
inline int character_index_fp(const Character<PrimeField>& c) {
    const std::vector<Tree> basis = all_trees_up_to(c.order());
    long p = static_cast<long>(c.proto().characteristic());
    long idx = 0;
    for (const Tree& t : basis) idx = idx * p + c.value(t).value();
    return static_cast<int>(idx);
}

/// The finite pre-group over F_p truncated at `order`, as an explicit
/// post-group table.  Carrier indices follow `all_characters_fp`; index 0
/// is the identity character, so it is the unit of dot.
inline PostGroupTable butcher_table(int order, long p) {
    const std::vector<Character<PrimeField>> carrier = all_characters_fp(order, p);
    int n = static_cast<int>(carrier.size());
    std::vector<int> dot(static_cast<std::size_t>(n) * n), rhd(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            dot[static_cast<std::size_t>(i) * n + j] =
                character_index_fp(char_dot(carrier[i], carrier[j]));
            rhd[static_cast<std::size_t>(i) * n + j] =
                character_index_fp(char_rhd(carrier[i], carrier[j]));
        }
    return PostGroupTable(GroupTable(n, std::move(dot)), std::move(rhd));
}

}  // namespace postalg
