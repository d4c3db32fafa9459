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
#include <functional>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "postalg/bck.hpp"
#include "postalg/butcher.hpp"
#include "postalg/postgroup.hpp"
#include "postalg/trees.hpp"
#include "postalg/ybe.hpp"
#include "test_util.hpp"

using namespace postalg;
using postalg::testutil::random_character_q;
using postalg::testutil::rng;
using QChar = Character<Rational>;

namespace {

// (a rhd b)(u) for a single tree, expanded literally through admissible cuts.
Rational rhd_expanded(const QChar& a, const QChar& b, const Tree& u) {
    Rational sum(0);
    const auto cuts = admissible_cuts(u);
    for (const auto& ac : cuts) sum += a.eval_forest(ac.pruned) * b.value(ac.remaining);
    return sum;
}

Rational rhd_expanded_forest(const QChar& a, const QChar& b, const Forest& f) {
    Rational prod(1);
    for (const auto& u : f.trees()) prod *= rhd_expanded(a, b, u);
    return prod;
}

// The circ-inverse of a rhd b evaluated on the forest F, expanded through all
// cut tuples of F with the sign (-1)^{|c| + t(F)}, t(F) the number of trees.
Rational rhd_dagger_expanded(const QChar& a, const QChar& b, const Forest& f) {
    const auto& comps = f.trees();
    const int t = static_cast<int>(comps.size());
    Rational sum(0);
    std::function<void(std::size_t, int, const Forest&)> go =
        [&](std::size_t i, int csize, const Forest& acc) {
            if (i == comps.size()) {
                Rational sign((csize + t) % 2 == 0 ? 1 : -1);
                sum += sign * rhd_expanded_forest(a, b, acc);
                return;
            }
            const auto cuts = all_cuts(comps[i]);
            for (const Cut& c : cuts) go(i + 1, csize + c.size(), acc * remove_cut(comps[i], c));
        };
    go(0, 0, Forest());
    return sum;
}

// Independent expansion of the second output of the Yang-Baxter map on
// characters, ((a rhd b)^dagger o a o b)(w), through the two-fold coproduct.
Rational rmap_second_oracle(const QChar& a, const QChar& b, const Tree& w) {
    Rational total(0);
    const BCKTensor3 d2 = coproduct_left(BCKElement::of(w));
    for (const auto& [key, coeff] : d2.terms())
        total += coeff * rhd_dagger_expanded(a, b, key[0]) * a.eval_forest(key[1]) *
                 b.eval_forest(key[2]);
    return total;
}

using CharPair = std::pair<QChar, QChar>;
using CharTriple = std::array<QChar, 3>;

CharTriple braid_121(const QChar& x, const QChar& y, const QChar& z) {
    CharPair r1 = butcher_rmap(x, y);
    CharPair r2 = butcher_rmap(r1.second, z);
    CharPair r3 = butcher_rmap(r1.first, r2.first);
    return {r3.first, r3.second, r2.second};
}

CharTriple braid_212(const QChar& x, const QChar& y, const QChar& z) {
    CharPair r1 = butcher_rmap(y, z);
    CharPair r2 = butcher_rmap(x, r1.first);
    CharPair r3 = butcher_rmap(r2.second, r1.second);
    return {r2.first, r3.first, r3.second};
}

}  // namespace

TEST_CASE("flip map is an involutive nondegenerate solution") {
    RMap r = RMap::flip(3);
    REQUIRE(r.size() == 3);
    REQUIRE(r.apply(1, 2) == std::pair<int, int>(2, 1));
    REQUIRE(r.is_bijective());
    auto rep = r.verify_braid();
    REQUIRE(rep.ok());
    REQUIRE(rep.checks == 1 + 27);
    REQUIRE(r.verify_nondegenerate());
    REQUIRE(r.is_involutive());
}

TEST_CASE("identity map satisfies the braid relation but is degenerate") {
    int n = 3;
    std::vector<int> out1(9), out2(9);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            out1[static_cast<std::size_t>(x) * n + y] = x;
            out2[static_cast<std::size_t>(x) * n + y] = y;
        }
    RMap r(n, out1, out2);
    REQUIRE(r.verify_braid().ok());
    REQUIRE(r.is_involutive());
    REQUIRE_FALSE(r.verify_nondegenerate());
}

TEST_CASE("rmap text form round trips with a frozen layout") {
    RMap r = RMap::flip(2);
    REQUIRE(r.str() ==
            "n=2\n"
            "0 0 -> 0 0\n"
            "0 1 -> 1 0\n"
            "1 0 -> 0 1\n"
            "1 1 -> 1 1\n");
    REQUIRE(RMap::parse(r.str()) == r);
}

TEST_CASE("rmap parse errors carry line numbers") {
    SECTION("malformed pair line") {
        try {
            RMap::parse("n=2\n0 0 -> 0 0\n0 1 => 1 0\n1 0 -> 0 1\n1 1 -> 1 1");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            REQUIRE(e.line() == 3);
        }
    }
    SECTION("index out of range") {
        try {
            RMap::parse("n=2\n0 0 -> 0 0\n0 1 -> 1 0\n1 0 -> 0 2\n1 1 -> 1 1");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            REQUIRE(e.line() == 4);
        }
    }
    SECTION("duplicate input pair") {
        try {
            RMap::parse("n=2\n0 0 -> 0 0\n0 0 -> 1 0\n1 0 -> 0 1\n1 1 -> 1 1");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            REQUIRE(e.line() == 3);
        }
    }
    SECTION("missing pairs") {
        try {
            RMap::parse("n=2\n0 0 -> 0 0\n0 1 -> 1 0\n1 0 -> 0 1");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            REQUIRE(e.line() == 4);
        }
    }
}

TEST_CASE("trivial post-group yields the conjugation solution") {
    GroupTable s3 = GroupTable::symmetric(3);
    BraidedGroup bg = postgroup_to_braided(PostGroupTable::trivial(s3));
    REQUIRE(bg.circ == s3);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) {
            auto [u, v] = bg.r.apply(a, b);
            REQUIRE(u == b);
            REQUIRE(v == s3.mul(s3.inverse(b), s3.mul(a, b)));
        }
    REQUIRE(bg.verify().ok());
    auto rep = bg.r.verify_braid();
    REQUIRE(rep.ok());
    REQUIRE(rep.checks == 1 + 216);
    REQUIRE(bg.r.verify_nondegenerate());
    // Conjugation on a nonabelian group is not involutive.
    REQUIRE_FALSE(bg.r.is_involutive());
}

TEST_CASE("flip braided group on an abelian carrier, and the inverse construction") {
    GroupTable z6 = GroupTable::cyclic(6);
    BraidedGroup bg{z6, RMap::flip(6)};
    REQUIRE(bg.verify().ok());

    PostGroupTable t = braided_to_postgroup(bg);
    REQUIRE(t.verify().ok());
    REQUIRE(t.dot_table() == z6);
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b) REQUIRE(t.rhd(a, b) == b);

    REQUIRE(postgroup_to_braided(t).r == bg.r);

    // The same R-map on a nonabelian carrier violates compatibility.
    BraidedGroup bad{GroupTable::symmetric(3), RMap::flip(6)};
    REQUIRE_FALSE(bad.verify().ok());
    REQUIRE_THROWS_AS(braided_to_postgroup(bad), std::domain_error);
}

TEST_CASE("post-group and braided group constructions invert each other") {
    std::vector<PostGroupTable> tables;
    tables.push_back(PostGroupTable::trivial(GroupTable::symmetric(3)));
    tables.push_back(PostGroupTable::trivial(GroupTable::cyclic(4)));
    tables.push_back(butcher_table(2, 3));
    for (const auto& t : tables) {
        BraidedGroup bg = postgroup_to_braided(t);
        REQUIRE(bg.verify().ok());
        REQUIRE(braided_to_postgroup(bg) == t);
    }
}

TEST_CASE("braided group of the order-9 truncated carrier is an involutive solution") {
    PostGroupTable t9 = butcher_table(2, 3);
    BraidedGroup bg = postgroup_to_braided(t9);
    REQUIRE(bg.verify().ok());

    auto rep = bg.r.verify_braid();
    REQUIRE(rep.ok());
    REQUIRE(rep.checks == 1 + 729);
    REQUIRE(bg.r.verify_nondegenerate());
    REQUIRE(bg.r.is_involutive());

    // Round trip through the text form.
    REQUIRE(RMap::parse(bg.r.str()) == bg.r);

    // Perturbing a single output pair breaks the braid relation.
    std::vector<int> out1(81), out2(81);
    for (int x = 0; x < 9; ++x)
        for (int y = 0; y < 9; ++y) {
            auto [u, v] = bg.r.apply(x, y);
            out1[static_cast<std::size_t>(x) * 9 + y] = u;
            out2[static_cast<std::size_t>(x) * 9 + y] = v;
        }
    out1[1 * 9 + 2] = (out1[1 * 9 + 2] + 1) % 9;
    RMap bad(9, out1, out2);
    REQUIRE_FALSE(bad.verify_braid().ok());
}

TEST_CASE("character solution components are the expected compositions") {
    QChar a(2, Rational(0)), b(2, Rational(0));
    Tree dot = Tree::parse("[]");
    Tree l2 = Tree::parse("[[]]");
    a.set_value(dot, Rational(2));
    a.set_value(l2, Rational(3));
    b.set_value(dot, Rational(5));
    b.set_value(l2, Rational(7));

    auto [first, second] = butcher_rmap(a, b);
    REQUIRE(first.value(dot) == Rational(5));
    REQUIRE(first.value(l2) == Rational(17));
    REQUIRE(second.value(dot) == Rational(2));
    REQUIRE(second.value(l2) == Rational(-7));

    // Compatibility: the two outputs compose back to a o b.
    REQUIRE(char_compose(first, second) == char_compose(a, b));

    // Involutivity on this pair.
    auto [f2, s2] = butcher_rmap(first, second);
    REQUIRE(f2 == a);
    REQUIRE(s2 == b);

    QChar e = identity_character(2, Rational(0));
    auto [ef, es] = butcher_rmap(e, e);
    REQUIRE(ef == e);
    REQUIRE(es == e);
}

TEST_CASE("second component matches the coproduct expansion oracle") {
    auto gen = rng(47010);
    const auto trees = all_trees_up_to(4);
    for (int rep = 0; rep < 3; ++rep) {
        QChar a = random_character_q(4, gen);
        QChar b = random_character_q(4, gen);
        QChar second = butcher_rmap(a, b).second;
        for (const auto& w : trees) REQUIRE(second.value(w) == rmap_second_oracle(a, b, w));
    }
}

TEST_CASE("character solution satisfies the braid relation and is involutive") {
    auto gen = rng(47011);
    for (int rep = 0; rep < 2; ++rep) {
        QChar x = random_character_q(4, gen);
        QChar y = random_character_q(4, gen);
        QChar z = random_character_q(4, gen);

        CharTriple lhs = braid_121(x, y, z);
        CharTriple rhs = braid_212(x, y, z);
        REQUIRE(lhs[0] == rhs[0]);
        REQUIRE(lhs[1] == rhs[1]);
        REQUIRE(lhs[2] == rhs[2]);

        auto [u, v] = butcher_rmap(x, y);
        auto [p, q] = butcher_rmap(u, v);
        REQUIRE(p == x);
        REQUIRE(q == y);
        REQUIRE(char_compose(u, v) == char_compose(x, y));
    }
}
