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

#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "postalg/operad.hpp"
#include "postalg/prime_field.hpp"
#include "postalg/rational.hpp"
#include "postalg/truncated_poly.hpp"
#include "test_util.hpp"

using namespace postalg;
using postalg::testutil::random_rational;
using postalg::testutil::rng;
using QSeries = SeriesGroupElem<Rational>;

namespace {

QSeries series_of(std::vector<Rational> coeffs) {
    QSeries s(static_cast<int>(coeffs.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs.size(); ++i) s.set_coeff(static_cast<int>(i + 1), coeffs[i]);
    return s;
}

QSeries random_series(int order, std::mt19937_64& gen) {
    QSeries s(order, Rational(0));
    for (int n = 1; n <= order; ++n) s.set_coeff(n, random_rational(gen));
    return s;
}

// Literal iteration of the double sum with an explicit odometer over the
// compositions, as a check on the recursive evaluation in the library.
Rational rhd_coeff_oracle(const QSeries& a, const QSeries& b, int n, int s_min) {
    auto k = [&](int t) { return t == 0 ? Rational(1) : a.coeff(t); };
    Rational total(0);
    for (int s = s_min; s <= n + 1; ++s) {
        int rest = n + 1 - s;
        std::vector<int> t(static_cast<std::size_t>(s), 0);
        t[static_cast<std::size_t>(s - 1)] = rest;
        while (true) {
            Rational prod = s == 1 ? Rational(1) : b.coeff(s - 1);
            for (int v : t) prod *= k(v);
            total += prod;
            // next composition of `rest` into s nonnegative parts
            int i = s - 1;
            while (i > 0 && t[static_cast<std::size_t>(i)] == 0) --i;
            if (i == 0) break;
            int carry = t[static_cast<std::size_t>(i)] - 1;
            t[static_cast<std::size_t>(i)] = 0;
            t[static_cast<std::size_t>(i - 1)] += 1;
            t[static_cast<std::size_t>(s - 1)] = carry;
        }
    }
    return total;
}

// Substitution oracle: the group product as series composition,
// C(x) = B(x A(x)) . A(x).
TruncatedPoly poly_of(const QSeries& s) {
    TruncatedPoly p(s.order());
    p.set_coeff(0, Rational(1));
    for (int n = 1; n <= s.order(); ++n) p.set_coeff(n, s.coeff(n));
    return p;
}

QSeries substitution_circ(const QSeries& a, const QSeries& b) {
    int order = a.order();
    TruncatedPoly pa = poly_of(a);
    TruncatedPoly xa(order);  // x A(x)
    for (int n = 1; n <= order; ++n) xa.set_coeff(n, pa.coeff(n - 1));
    TruncatedPoly acc = pa;  // A + sum_m l_m (xA)^m A
    TruncatedPoly power = pa.one_like();
    for (int m = 1; m <= order; ++m) {
        power *= xa;
        acc += TruncatedPoly(order, {b.coeff(m)}) * power * pa;
    }
    QSeries out(order, Rational(0));
    for (int n = 1; n <= order; ++n) out.set_coeff(n, acc.coeff(n));
    return out;
}

}  // namespace

TEST_CASE("pointwise product and identity") {
    QSeries a = series_of({Rational(1)});
    REQUIRE(com_dot(a, a) == series_of({Rational(2)}));

    QSeries p = series_of({Rational(2), Rational(1)});
    QSeries q = series_of({Rational(0), Rational(1)});
    REQUIRE(com_dot(p, q) == series_of({Rational(2), Rational(2)}));

    QSeries e = com_identity(2, Rational(0));
    REQUIRE(com_dot(p, e) == p);
    REQUIRE(com_dot(p, com_neg(p)) == e);

    QSeries w(3, Rational(0));
    REQUIRE_THROWS_AS(com_dot(p, w), std::invalid_argument);
}

TEST_CASE("low-order composition coefficients") {
    QSeries a = series_of({Rational(2), Rational(3), Rational(5), Rational(7)});
    QSeries b = series_of({Rational(11), Rational(13), Rational(17), Rational(19)});
    QSeries r = com_rhd(a, b);

    // (a rhd b)_1 = l1, (a rhd b)_2 = l2 + 2 l1 k1.
    REQUIRE(r.coeff(1) == Rational(11));
    REQUIRE(r.coeff(2) == Rational(13) + Rational(2) * Rational(11) * Rational(2));
    // Degree 3 regression value: l3 + 3 l2 k1 + 2 l1 k2 + l1 k1^2.
    REQUIRE(r.coeff(3) == Rational(17) + Rational(3) * Rational(13) * Rational(2) +
                              Rational(2) * Rational(11) * Rational(3) +
                              Rational(11) * Rational(4));
    REQUIRE(r.coeff(3) == Rational(205));

    QSeries c = com_circ(a, b);
    REQUIRE(c.coeff(1) == Rational(2) + Rational(11));

    QSeries e = com_identity(4, Rational(0));
    REQUIRE(com_circ(a, e) == a);
    REQUIRE(com_circ(e, b) == b);
    REQUIRE(com_rhd(e, b) == b);
    REQUIRE(com_rhd(a, e) == e);
}

TEST_CASE("double sum matches the literal odometer oracle") {
    auto gen = rng(47020);
    for (int order = 1; order <= 6; ++order) {
        QSeries a = random_series(order, gen);
        QSeries b = random_series(order, gen);
        QSeries r = com_rhd(a, b);
        QSeries c = com_circ(a, b);
        for (int n = 1; n <= order; ++n) {
            REQUIRE(r.coeff(n) == rhd_coeff_oracle(a, b, n, 2));
            REQUIRE(c.coeff(n) == rhd_coeff_oracle(a, b, n, 1));
        }
    }
}

TEST_CASE("group product is series substitution") {
    auto gen = rng(47021);
    for (int order = 1; order <= 6; ++order) {
        QSeries a = random_series(order, gen);
        QSeries b = random_series(order, gen);
        REQUIRE(com_circ(a, b) == substitution_circ(a, b));
        REQUIRE(com_circ(a, b) == com_dot(a, com_rhd(a, b)));
    }
}

TEST_CASE("pre-group axioms hold exactly at every order up to 6") {
    auto gen = rng(47022);
    for (int order = 1; order <= 6; ++order) {
        for (int rep = 0; rep < 4; ++rep) {
            QSeries a = random_series(order, gen);
            QSeries b = random_series(order, gen);
            QSeries c = random_series(order, gen);
            // dot is commutative: a pre-group, not just a post-group.
            REQUIRE(com_dot(a, b) == com_dot(b, a));
            // distributivity over dot
            REQUIRE(com_rhd(a, com_dot(b, c)) == com_dot(com_rhd(a, b), com_rhd(a, c)));
            // weighted associativity
            REQUIRE(com_rhd(com_dot(a, com_rhd(a, b)), c) == com_rhd(a, com_rhd(b, c)));
            // circ is associative as a consequence
            REQUIRE(com_circ(com_circ(a, b), c) == com_circ(a, com_circ(b, c)));
        }
    }
}

TEST_CASE("series text forms round trip") {
    QSeries a = series_of({Rational(2), Rational(-1, 2), Rational(0)});
    REQUIRE(a.str() == "1 + 2 x + -1/2 x^2 + 0 x^3");
    REQUIRE(QSeries::parse(a.str(), Rational(0)) == a);
    REQUIRE(QSeries::parse("2 -1/2 0", Rational(0)) == a);

    SeriesGroupElem<PrimeField> f(2, PrimeField(5, 0));
    f.set_coeff(1, PrimeField(5, 2));
    f.set_coeff(2, PrimeField(5, 4));
    REQUIRE(f.str() == "1 + 2 mod 5 x + 4 mod 5 x^2");
    REQUIRE(SeriesGroupElem<PrimeField>::parse(f.str(), PrimeField(5, 0)) == f);

    try {
        QSeries::parse("1", Rational(0));
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        REQUIRE(e.line() == 1);
    }
    REQUIRE_THROWS_AS(QSeries::parse("1 + 2 x^2", Rational(0)), ParseError);
    REQUIRE_THROWS_AS(QSeries::parse("1 + 2 x + x^2", Rational(0)), ParseError);
    REQUIRE_THROWS_AS(QSeries::parse("2 q 0", Rational(0)), ParseError);
}

TEST_CASE("prime field series obey the same identities") {
    SeriesGroupElem<PrimeField> a(3, PrimeField(7, 0));
    SeriesGroupElem<PrimeField> b(3, PrimeField(7, 0));
    for (int n = 1; n <= 3; ++n) {
        a.set_coeff(n, PrimeField(7, 2 * n + 1));
        b.set_coeff(n, PrimeField(7, 3 * n + 2));
    }
    REQUIRE(com_circ(a, b) == com_dot(a, com_rhd(a, b)));
    REQUIRE(com_rhd(com_dot(a, com_rhd(a, b)), b) == com_rhd(a, com_rhd(b, b)));
}

TEST_CASE("commutative operad instance verifies and reproduces the series ops") {
    TruncatedOperad com = com_operad(6);
    auto rep = com.verify();
    REQUIRE(rep.ok());
    REQUIRE(rep.checks > 50);

    OperadPreGroup pg(com_operad(6));
    auto gen = rng(47023);
    QSeries a = random_series(5, gen);
    QSeries b = random_series(5, gen);

    auto tuple_of = [](const QSeries& s) {
        std::vector<std::vector<Rational>> comps;
        for (int n = 1; n <= s.order(); ++n) comps.push_back({s.coeff(n)});
        return OperadTuple(s.order() + 1, std::move(comps));
    };

    OperadTuple ta = tuple_of(a), tb = tuple_of(b);
    REQUIRE(pg.rhd(ta, tb) == tuple_of(com_rhd(a, b)));
    REQUIRE(pg.circ(ta, tb) == tuple_of(com_circ(a, b)));
    REQUIRE(pg.dot(ta, tb) == tuple_of(com_dot(a, b)));

    // identity tuple: a rhd b with a = (Id, 0, ...) returns b
    OperadTuple e = pg.identity();
    REQUIRE(pg.rhd(e, tb) == tb);
    REQUIRE(pg.rhd(ta, e) == e);
    REQUIRE(pg.circ(ta, e) == ta);
    REQUIRE(pg.dot(ta, pg.neg(ta)) == e);
}

TEST_CASE("two-dimensional coinvariant instance behaves componentwise") {
    // Two independent copies of the commutative operad.
    TruncatedOperad pair_op(
        4, {2, 2, 2},
        [](int, const std::vector<int>& ts, const std::vector<Rational>& top,
           const std::vector<std::vector<Rational>>& args) {
            int n = 0;
            for (int t : ts) n += t;
            std::vector<Rational> out{top[0], top.size() > 1 ? top[1] : top[0]};
            for (std::size_t i = 0; i < args.size(); ++i) {
                int t = ts[i];
                out[0] *= args[i][0];
                out[1] *= t == 1 ? args[i][0] : args[i][1];
            }
            if (n == 1) out.resize(1);
            return out;
        });
    REQUIRE(pair_op.verify().ok());

    OperadPreGroup pg(std::move(pair_op));
    auto gen = rng(47024);
    QSeries a1 = random_series(3, gen), a2 = random_series(3, gen);
    QSeries b1 = random_series(3, gen), b2 = random_series(3, gen);
    std::vector<std::vector<Rational>> ca, cb;
    for (int n = 1; n <= 3; ++n) {
        ca.push_back({a1.coeff(n), a2.coeff(n)});
        cb.push_back({b1.coeff(n), b2.coeff(n)});
    }
    OperadTuple ta(4, ca), tb(4, cb);
    OperadTuple r = pg.rhd(ta, tb);
    QSeries r1 = com_rhd(a1, b1), r2 = com_rhd(a2, b2);
    for (int n = 2; n <= 4; ++n) {
        REQUIRE(r.comp(n)[0] == r1.coeff(n - 1));
        REQUIRE(r.comp(n)[1] == r2.coeff(n - 1));
    }
}

TEST_CASE("operad axiom violations are caught") {
    // Passes unitality (scale = 1 when the top is the identity or all
    // arguments are) but breaks associativity on mixed nestings.
    TruncatedOperad bad(
        4, {1, 1, 1},
        [](int k, const std::vector<int>& ts, const std::vector<Rational>& top,
           const std::vector<std::vector<Rational>>& args) {
            Rational prod = top[0];
            for (const auto& a : args) prod *= a[0];
            bool all_ones = true;
            for (int t : ts) all_ones = all_ones && t == 1;
            if (k != 1 && !all_ones) prod *= Rational(2);
            return std::vector<Rational>{prod};
        });
    auto rep = bad.verify();
    REQUIRE_FALSE(rep.ok());
    bool located = false;
    for (const auto& v : rep.violations)
        located = located || v.find("operad associativity fails") != std::string::npos;
    REQUIRE(located);
    REQUIRE_THROWS_AS(OperadPreGroup(std::move(bad)), std::domain_error);

    // Broken unitality is reported as such.
    TruncatedOperad bad2(
        3, {1, 1},
        [](int, const std::vector<int>&, const std::vector<Rational>& top,
           const std::vector<std::vector<Rational>>& args) {
            Rational prod = top[0];
            for (const auto& a : args) prod *= a[0];
            return std::vector<Rational>{prod + Rational(1)};
        });
    REQUIRE_FALSE(bad2.verify().ok());
}
