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

#include <array>
#include <cstdint>
#include <map>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "postalg/postlie.hpp"
#include "postalg/prime_field.hpp"
#include "postalg/rational.hpp"
#include "test_util.hpp"

using namespace postalg;
using postalg::testutil::random_nonzero_rational;
using postalg::testutil::rng;
using Elem = GradedElement<Rational>;
using T2 = GradedTensor2<Rational>;

namespace {

PlanarTree pt(const char* s) { return PlanarTree::parse(s); }
OrderedForest wd(const char* s) { return OrderedForest::parse(s); }

Elem el(int grade, const char* w, const Rational& c) {
    return Elem::of(grade, wd(w), c);
}

/// Commutator in the concatenation algebra.
Elem br(const Elem& a, const Elem& b) { return concat(a, b) - concat(b, a); }

/// Random combination of basis words; `with_const` allows the empty word.
Elem random_elem(int grade, std::mt19937_64& g, int picks, bool with_const) {
    std::vector<OrderedForest> pool;
    for (int n = with_const ? 0 : 1; n <= grade; ++n) {
        const std::vector<OrderedForest> ws = all_ordered_forests(n);
        pool.insert(pool.end(), ws.begin(), ws.end());
    }
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    Elem out(grade, Rational(0));
    for (int i = 0; i < picks; ++i) out.add(pool[pick(g)], random_nonzero_rational(g));
    return out;
}

/// Random primitive element: trees, brackets of trees, and one nested
/// bracket shape.  Every output is checked primitive where it is used.
Elem random_primitive(int grade, std::mt19937_64& g, int picks) {
    const std::vector<PlanarTree> pool = all_planar_trees_up_to(grade);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    std::uniform_int_distribution<int> kind(0, 2);
    auto one_of = [&](const PlanarTree& t) { return Elem::of(grade, t, Rational(1)); };
    Elem out(grade, Rational(0));
    for (int i = 0; i < picks; ++i) {
        const Rational c = random_nonzero_rational(g);
        for (;;) {
            const int k = kind(g);
            if (k == 0) {
                out = out + c * one_of(pool[pick(g)]);
                break;
            }
            const PlanarTree a = pool[pick(g)], b = pool[pick(g)];
            if (a == b) continue;
            if (k == 1) {
                if (a.node_count() + b.node_count() > grade) continue;
                out = out + c * br(one_of(a), one_of(b));
                break;
            }
            const PlanarTree d = pool[pick(g)];
            if (a.node_count() + b.node_count() + d.node_count() > grade) continue;
            out = out + c * br(br(one_of(a), one_of(b)), one_of(d));
            break;
        }
    }
    return out;
}

/// exp(x) (x) exp(x)-style outer product, cut at the total grade.
T2 outer(const Elem& a, const Elem& b, int grade) {
    T2 out;
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            if (wa.node_count() + wb.node_count() > grade) continue;
            out.add(wa, wb, ca * cb);
        }
    return out;
}

/// Componentwise product of tensors, dropping total grades above the
/// truncation (the graded sense in which the bialgebra laws hold).
template <typename Mul>
T2 tensor_mul(const T2& s, const T2& t, int grade, Mul mul) {
    T2 out;
    for (const auto& [ks, cs] : s.terms())
        for (const auto& [kt, ct] : t.terms()) {
            const Elem l = mul(Elem::of(grade, ks.first, Rational(1)),
                               Elem::of(grade, kt.first, Rational(1)));
            const Elem r = mul(Elem::of(grade, ks.second, Rational(1)),
                               Elem::of(grade, kt.second, Rational(1)));
            for (const auto& [wl, cl] : l.terms())
                for (const auto& [wr, cr] : r.terms()) {
                    if (wl.node_count() + wr.node_count() > grade) continue;
                    out.add(wl, wr, cs * ct * cl * cr);
                }
        }
    return out;
}

using Key3 = std::array<OrderedForest, 3>;

/// (deshuffle (x) id) resp. (id (x) deshuffle) applied to a two-tensor.
std::map<Key3, Rational> split_again(const T2& t, bool left_side, int grade) {
    std::map<Key3, Rational> out;
    for (const auto& [k, c] : t.terms()) {
        const Elem side = Elem::of(grade, left_side ? k.first : k.second, Rational(1));
        const T2 d = deshuffle(side);
        for (const auto& [k2, c2] : d.terms()) {
            const Key3 key = left_side ? Key3{k2.first, k2.second, k.second}
                                       : Key3{k.first, k2.first, k2.second};
            out[key] += c * c2;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

}  // namespace

TEST_CASE("graded elements: arithmetic, truncation, and text form", "[postlie]") {
    Elem x(4, Rational(0));
    x.add(wd("1"), Rational(2));
    x.add(wd("[]"), Rational(3));
    x.add(wd("[[]]"), Rational(1, 2));
    x.add(wd("[][]"), Rational(-1));
    REQUIRE(x.coeff(wd("[]")) == Rational(3));
    REQUIRE(x.counit() == Rational(2));
    REQUIRE(x.graded_part(2) == el(4, "[[]]", Rational(1, 2)) + el(4, "[][]", Rational(-1)));

    // terms above the grade vanish silently
    Elem y(2, Rational(0));
    y.add(wd("[[[]]]"), Rational(7));
    REQUIRE(y.is_zero());

    // cancellation removes the stored term
    Elem z = x - x;
    REQUIRE(z.is_zero());
    REQUIRE((Rational(2) * x).coeff(wd("[[]]")) == Rational(1));
    REQUIRE((-x).coeff(wd("[][]")) == Rational(1));

    // concatenation: unit, non-commutativity
    const Elem unit = Elem::unit(4, Rational(0));
    REQUIRE(concat(unit, x) == x);
    REQUIRE(concat(x, unit) == x);
    REQUIRE(concat(el(4, "[]", Rational(1)), el(4, "[[]]", Rational(1))) ==
            el(4, "[][[]]", Rational(1)));
    REQUIRE(concat(el(4, "[[]]", Rational(1)), el(4, "[]", Rational(1))) ==
            el(4, "[[]][]", Rational(1)));

    // frozen text layout: graded-lex order, one term per line
    REQUIRE(x.str() == "2 1\n3 []\n1/2 [[]]\n-1 [][]");
    REQUIRE(Elem::parse(4, Rational(0), x.str()) == x);
    REQUIRE(Elem::parse(4, Rational(0), "") == Elem(4, Rational(0)));

    // duplicate words accumulate
    REQUIRE(Elem::parse(3, Rational(0), "1 []\n2 []") == el(3, "[]", Rational(3)));

    // parse failures carry 1-based line numbers
    auto line_of = [](const char* text) {
        try {
            Elem::parse(3, Rational(0), text);
        } catch (const ParseError& e) {
            return e.line();
        }
        return -1;
    };
    REQUIRE(line_of("x []") == 1);
    REQUIRE(line_of("1 []\n1/2 [[]") == 2);
    REQUIRE(line_of("1 []\n\n1 [[[]]][]") == 3);  // exceeds grade 3
    REQUIRE(line_of("3") == 1);                   // missing word

    // grade guards
    REQUIRE_THROWS_AS(Elem(7, Rational(0)), std::invalid_argument);
    REQUIRE_THROWS_AS(Elem(-1, Rational(0)), std::invalid_argument);
    REQUIRE_THROWS_AS(x + Elem(3, Rational(0)), std::invalid_argument);
    REQUIRE_THROWS_AS(concat(x, Elem(3, Rational(0))), std::invalid_argument);
}

TEST_CASE("deshuffle: subsequence splits, counit, coassociativity", "[postlie]") {
    // every single tree is primitive
    const std::vector<PlanarTree> trees = all_planar_trees_up_to(4);
    for (const PlanarTree& t : trees) REQUIRE(is_primitive(Elem::of(5, t, Rational(1))));

    // frozen: the two-letter word [][] splits with multiplicity two
    const T2 d = deshuffle(el(5, "[][]", Rational(1)));
    T2 expect;
    expect.add(wd("[][]"), wd("1"), Rational(1));
    expect.add(wd("[]"), wd("[]"), Rational(2));
    expect.add(wd("1"), wd("[][]"), Rational(1));
    REQUIRE(d == expect);

    auto g = rng(47030);
    for (int rep = 0; rep < 3; ++rep) {
        const Elem x = random_elem(5, g, 5, true);
        const T2 dx = deshuffle(x);

        // (counit (x) id) recovers the element, and symmetrically
        Elem left(5, Rational(0)), right(5, Rational(0));
        for (const auto& [k, c] : dx.terms()) {
            if (k.first.empty()) left.add(k.second, c);
            if (k.second.empty()) right.add(k.first, c);
        }
        REQUIRE(left == x);
        REQUIRE(right == x);

        // coassociativity
        REQUIRE(split_again(dx, true, 5) == split_again(dx, false, 5));
    }
}

TEST_CASE("primitive elements are the Lie-like combinations", "[postlie]") {
    const Elem dot = el(4, "[]", Rational(1));
    const Elem l2 = el(4, "[[]]", Rational(1));
    REQUIRE(is_primitive(dot));
    REQUIRE(is_primitive(br(dot, l2)));
    REQUIRE(is_primitive(br(br(dot, l2), dot)));
    REQUIRE(is_primitive(Elem(4, Rational(0))));

    REQUIRE_FALSE(is_primitive(el(4, "[][]", Rational(1))));
    REQUIRE_FALSE(is_primitive(Elem::unit(4, Rational(0))));
    REQUIRE_FALSE(is_primitive(dot + Elem::unit(4, Rational(0))));
}

TEST_CASE("left grafting on generators", "[postlie]") {
    const PostLie<Rational> eng(4, Rational(0));
    const Elem dot = eng.of(pt("[]"));
    const Elem l2 = eng.of(pt("[[]]"));

    REQUIRE(eng.graft(dot, dot) == l2);
    REQUIRE(eng.graft(dot, l2) == el(4, "[[[]]]", Rational(1)) + el(4, "[[][]]", Rational(1)));
    REQUIRE(eng.graft(l2, dot) == el(4, "[[[]]]", Rational(1)));

    // bilinear in both slots
    REQUIRE(eng.graft(Rational(2) * dot, Rational(3) * dot) == Rational(6) * l2);
    REQUIRE(eng.graft(dot + l2, dot) ==
            l2 + el(4, "[[[]]]", Rational(1)));

    // only combinations of single trees are accepted
    REQUIRE_THROWS_AS(eng.graft(eng.unit(), dot), std::invalid_argument);
    REQUIRE_THROWS_AS(eng.graft(dot, eng.of(wd("[][]"))), std::invalid_argument);

    // matches the word-level extension on generators
    REQUIRE(eng.graft(dot, l2) == eng.extend_rhd(dot, l2));
}

TEST_CASE("word-level extension follows the nested recursion", "[postlie]") {
    const PostLie<Rational> eng(4, Rational(0));
    const Elem dot = eng.of(pt("[]"));

    // ([] []) |> []  =  [] |> ([] |> [])  -  ([] |> []) |> []  =  the cherry
    REQUIRE(eng.extend_rhd(eng.of(wd("[][]")), dot) == el(4, "[[][]]", Rational(1)));

    // three bullets acting on one: everything cancels except the star
    REQUIRE(eng.extend_rhd(eng.of(wd("[][][]")), dot) == el(4, "[[][][]]", Rational(1)));

    // [] |> ([] []) spreads across the deshuffle of the left argument
    REQUIRE(eng.extend_rhd(dot, eng.of(wd("[][]"))) ==
            el(4, "[[]][]", Rational(1)) + el(4, "[][[]]", Rational(1)));

    // unit action and counit absorption
    auto g = rng(47033);
    const Elem y = random_elem(4, g, 4, true);
    REQUIRE(eng.extend_rhd(eng.unit(), y) == y);
    const Elem x = random_elem(4, g, 4, true);
    Elem absorbed(4, Rational(0));
    absorbed.add(wd("1"), x.counit());
    REQUIRE(eng.extend_rhd(x, eng.unit()) == absorbed);
}

TEST_CASE("extension is grade additive on basis words", "[postlie]") {
    const PostLie<Rational> eng(5, Rational(0));
    for (int j = 1; j <= 4; ++j) {
        const std::vector<OrderedForest> lefts = all_ordered_forests(j);
        for (int k = 1; j + k <= 5; ++k) {
            const std::vector<OrderedForest> rights = all_ordered_forests(k);
            for (const OrderedForest& w : lefts)
                for (const OrderedForest& a : rights) {
                    const Elem r = eng.extend_rhd(eng.of(w), eng.of(a));
                    for (const auto& [word, c] : r.terms())
                        REQUIRE(word.node_count() == j + k);
                }
        }
    }

    // above the grade everything truncates to zero
    const PostLie<Rational> tight(3, Rational(0));
    REQUIRE(tight.extend_rhd(tight.of(wd("[][]")), tight.of(wd("[][]"))).is_zero());
}

TEST_CASE("post-Lie axioms hold for the grafting", "[postlie]") {
    const PostLie<Rational> eng(5, Rational(0));
    const std::vector<PlanarTree> trees = all_planar_trees_up_to(3);
    auto rhd = [&](const Elem& a, const Elem& b) { return eng.extend_rhd(a, b); };
    std::size_t checked = 0;
    for (const PlanarTree& x : trees)
        for (const PlanarTree& y : trees)
            for (const PlanarTree& z : trees) {
                if (x.node_count() + y.node_count() + z.node_count() > 5) continue;
                const Elem ex = eng.of(x), ey = eng.of(y), ez = eng.of(z);
                // x |> [y,z] = [x |> y, z] + [y, x |> z]
                REQUIRE(rhd(ex, br(ey, ez)) ==
                        br(rhd(ex, ey), ez) + br(ey, rhd(ex, ez)));
                // ([x,y] + x |> y - y |> x) |> z = x |> (y |> z) - y |> (x |> z)
                REQUIRE(rhd(br(ex, ey) + rhd(ex, ey) - rhd(ey, ex), ez) ==
                        rhd(ex, rhd(ey, ez)) - rhd(ey, rhd(ex, ez)));
                ++checked;
            }
    // all triples from {., l2, l3, cherry} with at most five nodes in total
    REQUIRE(checked == 13);
}

TEST_CASE("Grossman-Larson product: frozen value, unit, associativity", "[postlie]") {
    const PostLie<Rational> eng(5, Rational(0));
    const Elem dot = eng.of(pt("[]"));

    // frozen: one bullet times one bullet
    REQUIRE(eng.gl_product(dot, dot) ==
            el(5, "[][]", Rational(1)) + el(5, "[[]]", Rational(1)));

    auto g = rng(47034);
    for (int rep = 0; rep < 2; ++rep) {
        const Elem x = random_elem(5, g, 4, true);
        const Elem y = random_elem(5, g, 4, true);
        const Elem z = random_elem(5, g, 4, true);
        REQUIRE(eng.gl_product(eng.unit(), x) == x);
        REQUIRE(eng.gl_product(x, eng.unit()) == x);
        REQUIRE(eng.gl_product(eng.gl_product(x, y), z) ==
                eng.gl_product(x, eng.gl_product(y, z)));
    }
}

TEST_CASE("deshuffle is a homomorphism for both products", "[postlie]") {
    const PostLie<Rational> eng(4, Rational(0));
    auto cat = [](const Elem& a, const Elem& b) { return concat(a, b); };
    auto gl = [&](const Elem& a, const Elem& b) { return eng.gl_product(a, b); };
    auto g = rng(47035);
    for (int rep = 0; rep < 2; ++rep) {
        const Elem x = random_elem(4, g, 3, true);
        const Elem y = random_elem(4, g, 3, true);
        REQUIRE(deshuffle(concat(x, y)) ==
                tensor_mul(deshuffle(x), deshuffle(y), 4, cat));
        REQUIRE(deshuffle(eng.gl_product(x, y)) ==
                tensor_mul(deshuffle(x), deshuffle(y), 4, gl));
    }
}

TEST_CASE("exponentials and logarithms invert each other", "[postlie]") {
    // frozen series heads
    const Elem dot2 = el(2, "[]", Rational(1));
    REQUIRE(exp_dot(dot2) == Elem::unit(2, Rational(0)) + dot2 + el(2, "[][]", Rational(1, 2)));

    const Elem dot3 = el(3, "[]", Rational(1));
    REQUIRE(log_dot(Elem::unit(3, Rational(0)) + dot3) ==
            dot3 - el(3, "[][]", Rational(1, 2)) + el(3, "[][][]", Rational(1, 3)));

    const PostLie<Rational> eng2(2, Rational(0));
    REQUIRE(eng2.exp_gl(el(2, "[]", Rational(1))) ==
            Elem::unit(2, Rational(0)) + dot2 + el(2, "[][]", Rational(1, 2)) +
                el(2, "[[]]", Rational(1, 2)));

    const PostLie<Rational> eng(5, Rational(0));
    auto g = rng(47036);
    for (int rep = 0; rep < 2; ++rep) {
        const Elem x = random_elem(5, g, 4, false);
        REQUIRE(log_dot(exp_dot(x)) == x);
        REQUIRE(eng.log_gl(eng.exp_gl(x)) == x);
        const Elem one_plus = Elem::unit(5, Rational(0)) + x;
        REQUIRE(exp_dot(log_dot(one_plus)) == one_plus);
        REQUIRE(eng.exp_gl(eng.log_gl(one_plus)) == one_plus);
    }
}

TEST_CASE("BCH: frozen low terms, associativity, primitivity", "[postlie]") {
    const Elem x = el(4, "[]", Rational(1));
    const Elem y = el(4, "[[]]", Rational(1));

    // classical series: x + y + [x,y]/2 + [x,[x,y]]/12; the [y,[y,x]] term
    // sits in grade five and is cut
    const Elem expect =
        x + y + Rational(1, 2) * br(x, y) + Rational(1, 12) * br(x, br(x, y));
    REQUIRE(bch(x, y) == expect);

    const Elem zero(4, Rational(0));
    REQUIRE(bch(x, zero) == x);
    REQUIRE(bch(zero, y) == y);

    auto g = rng(47037);
    for (int rep = 0; rep < 2; ++rep) {
        const Elem a = random_primitive(4, g, 3);
        const Elem b = random_primitive(4, g, 3);
        const Elem c = random_primitive(4, g, 3);
        REQUIRE(is_primitive(a));
        REQUIRE(is_primitive(bch(a, b)));
        REQUIRE(bch(a, bch(b, c)) == bch(bch(a, b), c));
    }

    REQUIRE_THROWS_AS(bch(el(4, "[][]", Rational(1)), y), std::domain_error);
}

TEST_CASE("Magnus expansion and its inverse", "[postlie]") {
    const PostLie<Rational> eng2(2, Rational(0));
    const Elem dot2 = el(2, "[]", Rational(1));
    REQUIRE(eng2.magnus(dot2) == dot2 - el(2, "[[]]", Rational(1, 2)));

    const PostLie<Rational> eng(4, Rational(0));
    auto g = rng(47038);
    for (int rep = 0; rep < 2; ++rep) {
        const Elem x = random_primitive(4, g, 3);
        REQUIRE(is_primitive(x));
        const Elem om = eng.magnus(x);
        REQUIRE(is_primitive(om));
        REQUIRE(om.graded_part(1) == x.graded_part(1));
        REQUIRE(eng.magnus_inverse(om) == x);
        REQUIRE(eng.exp_gl(om) == exp_dot(x));
    }

    // under the zero base product the two products coincide, so Omega = x
    const PostLie<Rational> triv(
        4, Rational(0),
        [](const PlanarTree&, const PlanarTree&) {
            return std::vector<std::pair<PlanarTree, Rational>>{};
        });
    for (int rep = 0; rep < 2; ++rep) {
        const Elem x = random_primitive(4, g, 3);
        const Elem y = random_elem(4, g, 3, true);
        REQUIRE(triv.gl_product(x, y) == concat(x, y));
        REQUIRE(triv.magnus(x) == x);
    }

    REQUIRE_THROWS_AS(eng.magnus(el(4, "[][]", Rational(1))), std::domain_error);
}

TEST_CASE("formal integration yields the post-group operations", "[postlie]") {
    // frozen low-grade action of one bullet on another
    const PostLie<Rational> eng3(3, Rational(0));
    const Elem dot3 = el(3, "[]", Rational(1));
    REQUIRE(eng3.integrate_rhd(dot3, dot3) ==
            dot3 + el(3, "[[]]", Rational(1)) + el(3, "[[][]]", Rational(1, 2)));

    // exp(x) |> exp(y) = exp(x |> y)
    {
        auto g = rng(47039);
        const Elem x = random_primitive(3, g, 2);
        const Elem y = random_primitive(3, g, 2);
        REQUIRE(eng3.extend_rhd(exp_dot(x), exp_dot(y)) ==
                exp_dot(eng3.integrate_rhd(x, y)));
    }

    const PostLie<Rational> eng(4, Rational(0));
    auto g = rng(47040);
    for (int rep = 0; rep < 2; ++rep) {
        const Elem x = random_primitive(4, g, 3);
        const Elem y = random_primitive(4, g, 3);
        REQUIRE(is_primitive(x));
        REQUIRE(is_primitive(y));
        const Elem xy = eng.integrate_rhd(x, y);
        REQUIRE(is_primitive(xy));
        // the action transported through either exponential
        REQUIRE(xy == eng.extend_rhd(exp_dot(x), y));
        REQUIRE(xy == eng.extend_rhd(eng.exp_gl(eng.magnus(x)), y));
    }

    // post-group axioms modulo the grade
    for (int rep = 0; rep < 2; ++rep) {
        const Elem a = random_primitive(4, g, 2);
        const Elem b = random_primitive(4, g, 2);
        const Elem c = random_primitive(4, g, 2);
        REQUIRE(eng.integrate_rhd(a, bch(b, c)) ==
                bch(eng.integrate_rhd(a, b), eng.integrate_rhd(a, c)));
        REQUIRE(eng.integrate_rhd(bch(a, eng.integrate_rhd(a, b)), c) ==
                eng.integrate_rhd(a, eng.integrate_rhd(b, c)));
    }

    // the pair view, and acting on zero
    const Elem x = random_primitive(4, g, 2);
    const Elem y = random_primitive(4, g, 2);
    const auto [d, r] = eng.integrate(x, y);
    REQUIRE(d == bch(x, y));
    REQUIRE(r == eng.integrate_rhd(x, y));
    REQUIRE(bch(x, Elem(4, Rational(0))) == x);

    REQUIRE_THROWS_AS(eng.integrate_rhd(el(4, "[][]", Rational(1)), y), std::domain_error);
}

TEST_CASE("Lie-Butcher product agrees with the direct group-like product", "[postlie]") {
    const PostLie<Rational> eng3(3, Rational(0));
    const Elem dot = el(3, "[]", Rational(1));

    // by hand: z = BCH(., . |> .) with . |> . = . + l2 + cherry/2
    const Elem expect = Rational(2) * dot + el(3, "[[]]", Rational(1)) +
                        el(3, "[[][]]", Rational(1, 2)) +
                        Rational(1, 2) * br(dot, el(3, "[[]]", Rational(1)));
    REQUIRE(eng3.lb_product(dot, dot) == expect);

    const PostLie<Rational> eng(4, Rational(0));
    auto g = rng(47041);
    for (int rep = 0; rep < 2; ++rep) {
        const Elem x = random_primitive(4, g, 2);
        const Elem y = random_primitive(4, g, 2);
        const Elem z = eng.lb_product(x, y);
        REQUIRE(z == log_dot(eng.gl_product(exp_dot(x), exp_dot(y))));
        // group-likes: deshuffle(exp(x)) = exp(x) (x) exp(x) mod the grade
        const Elem ex = exp_dot(x);
        REQUIRE(deshuffle(ex) == outer(ex, ex, 4));
    }

    REQUIRE(eng.lb_product(eng.zero(), eng.zero()).is_zero());
    const Elem x = random_primitive(4, g, 2);
    REQUIRE(eng.lb_product(x, eng.zero()) == x);
}

TEST_CASE("finite characteristic and grade guards", "[postlie]") {
    // the extension itself is division-free, so it works over a prime field
    const PrimeField f5(5, 0);
    const PostLie<PrimeField> feng(3, f5);
    const GradedElement<PrimeField> fdot =
        GradedElement<PrimeField>::of(3, pt("[]"), PrimeField(5, 1));
    REQUIRE(feng.extend_rhd(fdot, fdot) ==
            GradedElement<PrimeField>::of(3, pt("[[]]"), PrimeField(5, 1)));

    // exp/log refuse finite characteristic
    REQUIRE_THROWS_AS(exp_dot(fdot), std::domain_error);
    REQUIRE_THROWS_AS(feng.exp_gl(fdot), std::domain_error);
    REQUIRE_THROWS_AS(log_dot(GradedElement<PrimeField>::unit(3, f5) + fdot), std::domain_error);
    REQUIRE_THROWS_AS(feng.magnus(fdot), std::domain_error);

    // exp needs a zero constant term, log needs constant term one
    const Elem dot = el(3, "[]", Rational(1));
    REQUIRE_THROWS_AS(exp_dot(Elem::unit(3, Rational(0)) + dot), std::domain_error);
    REQUIRE_THROWS_AS(log_dot(dot), std::domain_error);

    // engine/element grade agreement
    const PostLie<Rational> eng(4, Rational(0));
    REQUIRE_THROWS_AS(eng.extend_rhd(dot, dot), std::invalid_argument);
    REQUIRE_THROWS_AS(eng.gl_product(el(4, "[]", Rational(1)), dot), std::invalid_argument);
    REQUIRE_THROWS_AS(PostLie<Rational>(7, Rational(0)), std::invalid_argument);
}
