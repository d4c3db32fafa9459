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

// Finite post-groups as explicit operation tables, together with the
// structures they induce: the sub-adjacent group, relative Rota-Baxter
// operators and their descendant groups, semidirect-product factorization,
// and matched pairs of groups.  Everything here is desk-scale: carriers are
// small enough that every axiom is checked on every tuple.

#pragma once

#include <algorithm>
#include <cstddef>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "postalg/common.hpp"

namespace postalg {

namespace detail {

// True iff `row` is a permutation of {0,...,n-1}.
inline bool is_perm(const std::vector<int>& row) {
    std::vector<char> seen(row.size(), 0);
    for (int v : row) {
        if (v < 0 || static_cast<std::size_t>(v) >= row.size() || seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

}  // namespace detail

/// A finite magma table; `verify()` decides whether it is a group.  Entries
/// are indices into the carrier {0,...,n-1}.  The constructor validates shape
/// and range only, so deliberately broken tables can be built and reported on.
class GroupTable {
  public:
    GroupTable() = default;

    GroupTable(int n, std::vector<int> mul) : n_(n), mul_(std::move(mul)) {
        if (n_ <= 0) throw std::invalid_argument("group table: carrier must be nonempty");
        if (mul_.size() != static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_))
            throw std::invalid_argument("group table: need n*n entries");
        for (int v : mul_)
            if (v < 0 || v >= n_) throw std::invalid_argument("group table: entry out of range");
    }

    int size() const { return n_; }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * n_ + b]; }

    /// Index of the two-sided unit, or -1 if none exists.
    int unit() const {
        for (int e = 0; e < n_; ++e) {
            bool good = true;
            for (int a = 0; a < n_ && good; ++a)
                good = mul(e, a) == a && mul(a, e) == a;
            if (good) return e;
        }
        return -1;
    }

    int inverse(int a) const {
        int e = unit();
        if (e < 0) throw std::domain_error("group table: no unit");
        for (int x = 0; x < n_; ++x)
            if (mul(a, x) == e && mul(x, a) == e) return x;
        throw std::domain_error("group table: element has no inverse");
    }

    bool is_abelian() const {
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < a; ++b)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    /// Order of `a` in the group; requires a unit.
    int element_order(int a) const {
        int e = unit();
        if (e < 0) throw std::domain_error("group table: no unit");
        int x = a;
        for (int k = 1; k <= n_; ++k) {
            if (x == e) return k;
            x = mul(x, a);
        }
        throw std::domain_error("group table: order exceeds carrier size");
    }

    /// Full group-axiom check: unique two-sided unit, associativity on all
    /// triples, two-sided inverses.  Violations carry the offending tuple.
    VerificationReport verify() const {
        VerificationReport rep;
        int e = unit();
        rep.require(e >= 0, "no two-sided unit");
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c) {
                    rep.count();
                    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
                        std::ostringstream os;
                        os << "associativity fails at a=" << a << " b=" << b << " c=" << c;
                        rep.violations.push_back(os.str());
                    }
                }
        if (e >= 0) {
            for (int a = 0; a < n_; ++a) {
                bool has = false;
                for (int x = 0; x < n_ && !has; ++x) has = mul(a, x) == e && mul(x, a) == e;
                rep.require(has, "no inverse for element " + std::to_string(a));
            }
        }
        return rep;
    }

    /// Conjugate table under a carrier permutation: mul'(p(a),p(b)) = p(mul(a,b)).
    GroupTable relabel(const std::vector<int>& p) const {
        if (static_cast<int>(p.size()) != n_ || !detail::is_perm(p))
            throw std::invalid_argument("relabel: not a carrier permutation");
        std::vector<int> out(mul_.size());
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                out[static_cast<std::size_t>(p[a]) * n_ + p[b]] = p[mul(a, b)];
        return GroupTable(n_, std::move(out));
    }

    static GroupTable cyclic(int n) {
        std::vector<int> mul(static_cast<std::size_t>(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
        return GroupTable(n, std::move(mul));
    }

    static GroupTable direct_product(const GroupTable& g, const GroupTable& h) {
        int n = g.size() * h.size();
        std::vector<int> mul(static_cast<std::size_t>(n) * n);
        for (int a1 = 0; a1 < g.size(); ++a1)
            for (int a2 = 0; a2 < h.size(); ++a2)
                for (int b1 = 0; b1 < g.size(); ++b1)
                    for (int b2 = 0; b2 < h.size(); ++b2) {
                        int a = a1 * h.size() + a2, b = b1 * h.size() + b2;
                        mul[static_cast<std::size_t>(a) * n + b] =
                            g.mul(a1, b1) * h.size() + h.mul(a2, b2);
                    }
        return GroupTable(n, std::move(mul));
    }

    /// Symmetric group on k symbols (k <= 5), carrier = permutations of
    /// {0..k-1} in lexicographic order, product (p*q)(x) = p(q(x)).  The
    /// identity permutation is lexicographically first, so the unit is 0.
    static GroupTable symmetric(int k) {
        if (k < 1 || k > 5) throw std::invalid_argument("symmetric: need 1 <= k <= 5");
        std::vector<std::vector<int>> perms;
        std::vector<int> p(k);
        std::iota(p.begin(), p.end(), 0);
        do perms.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
        int n = static_cast<int>(perms.size());
        auto index_of = [&](const std::vector<int>& q) {
            return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
        };
        std::vector<int> mul(static_cast<std::size_t>(n) * n);
        std::vector<int> comp(k);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                for (int x = 0; x < k; ++x) comp[x] = perms[a][perms[b][x]];
                mul[static_cast<std::size_t>(a) * n + b] = index_of(comp);
            }
        return GroupTable(n, std::move(mul));
    }

    /// Dihedral group of order 2k, elements r^i s^j indexed as i + k*j,
    /// with s r = r^{-1} s.  The unit is 0.
    static GroupTable dihedral(int k) {
        if (k < 1) throw std::invalid_argument("dihedral: need k >= 1");
        int n = 2 * k;
        std::vector<int> mul(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < 2; ++j)
                for (int p = 0; p < k; ++p)
                    for (int q = 0; q < 2; ++q) {
                        int a = i + k * j, b = p + k * q;
                        int rot = j ? (i - p + k) % k : (i + p) % k;
                        mul[static_cast<std::size_t>(a) * n + b] = rot + k * (j ^ q);
                    }
        return GroupTable(n, std::move(mul));
    }

    /// Quaternion group of order 8, carrier {1,i,j,k,-1,-i,-j,-k} indexed
    /// 0..7 as m + 4s with m the basis unit and s the sign bit.
    static GroupTable quaternion() {
        // base[a][b] = {unit, sign} for a,b in {1,i,j,k}
        static const int base[4][4][2] = {
            {{0, 0}, {1, 0}, {2, 0}, {3, 0}},
            {{1, 0}, {0, 1}, {3, 0}, {2, 1}},
            {{2, 0}, {3, 1}, {0, 1}, {1, 0}},
            {{3, 0}, {2, 0}, {1, 1}, {0, 1}}};
        std::vector<int> mul(64);
        for (int a = 0; a < 8; ++a)
            for (int b = 0; b < 8; ++b) {
                int m = base[a % 4][b % 4][0];
                int s = (a / 4) ^ (b / 4) ^ base[a % 4][b % 4][1];
                mul[static_cast<std::size_t>(a) * 8 + b] = m + 4 * s;
            }
        return GroupTable(8, std::move(mul));
    }

    bool operator==(const GroupTable&) const = default;

  private:
    int n_ = 0;
    std::vector<int> mul_;
};

namespace detail {

// Reads a rows x cols block of indices in [0, bound) from `lines` starting
// at lines[*pos], skipping blank lines.  Line numbers in errors are 1-based.
inline std::vector<int> parse_rect_block(const std::vector<std::string>& lines, std::size_t* pos,
                                         int rows, int cols, int bound, const std::string& what) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(rows) * cols);
    int seen = 0;
    while (seen < rows) {
        if (*pos >= lines.size())
            throw ParseError(static_cast<int>(lines.size()),
                             what + ": expected " + std::to_string(rows) + " rows, got " +
                                 std::to_string(seen));
        const std::string& line = lines[*pos];
        ++*pos;
        auto toks = split_ws(trim(line));
        if (toks.empty()) continue;
        if (static_cast<int>(toks.size()) != cols)
            throw ParseError(static_cast<int>(*pos),
                             what + ": expected " + std::to_string(cols) + " entries per row");
        for (const auto& t : toks) {
            std::size_t used = 0;
            int v = 0;
            try {
                v = std::stoi(t, &used);
            } catch (const std::exception&) {
                throw ParseError(static_cast<int>(*pos), what + ": bad index '" + t + "'");
            }
            if (used != t.size() || v < 0 || v >= bound)
                throw ParseError(static_cast<int>(*pos), what + ": bad index '" + t + "'");
            out.push_back(v);
        }
        ++seen;
    }
    return out;
}

// Square special case: one n*n block over the carrier {0,...,n-1}.
inline std::vector<int> parse_table_block(const std::vector<std::string>& lines, std::size_t* pos,
                                          int n, const std::string& what) {
    return parse_rect_block(lines, pos, n, n, n, what);
}

inline std::size_t expect_marker(const std::vector<std::string>& lines, std::size_t pos,
                                 const std::string& marker) {
    while (pos < lines.size() && trim(lines[pos]).empty()) ++pos;
    if (pos >= lines.size() || trim(lines[pos]) != marker)
        throw ParseError(static_cast<int>(pos + 1), "expected '" + marker + "'");
    return pos + 1;
}

inline int parse_size_header(const std::vector<std::string>& lines, std::size_t* pos) {
    while (*pos < lines.size() && trim(lines[*pos]).empty()) ++*pos;
    if (*pos >= lines.size()) throw ParseError(1, "expected 'n=<size>' header");
    std::string head(trim(lines[*pos]));
    if (head.rfind("n=", 0) != 0)
        throw ParseError(static_cast<int>(*pos + 1), "expected 'n=<size>' header");
    std::string rest(trim(std::string_view(head).substr(2)));
    std::size_t used = 0;
    int n = 0;
    try {
        n = std::stoi(rest, &used);
    } catch (const std::exception&) {
        throw ParseError(static_cast<int>(*pos + 1), "bad carrier size '" + rest + "'");
    }
    if (used != rest.size() || n <= 0)
        throw ParseError(static_cast<int>(*pos + 1), "bad carrier size '" + rest + "'");
    ++*pos;
    return n;
}

// Reads the `g=<size> h=<size>` header of the two-carrier formats.
inline std::pair<int, int> parse_pair_size_header(const std::vector<std::string>& lines,
                                                  std::size_t* pos) {
    while (*pos < lines.size() && trim(lines[*pos]).empty()) ++*pos;
    if (*pos >= lines.size()) throw ParseError(1, "expected 'g=<size> h=<size>' header");
    int lineno = static_cast<int>(*pos + 1);
    auto toks = split_ws(trim(lines[*pos]));
    if (toks.size() != 2)
        throw ParseError(lineno, "expected 'g=<size> h=<size>' header");
    auto read = [lineno](const std::string& tok, const char* name) {
        std::string prefix = std::string(name) + "=";
        if (tok.rfind(prefix, 0) != 0)
            throw ParseError(lineno, "expected '" + prefix + "<size>'");
        std::string rest = tok.substr(prefix.size());
        std::size_t used = 0;
        int n = 0;
        try {
            n = std::stoi(rest, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != rest.size() || n <= 0)
            throw ParseError(lineno, "bad carrier size '" + rest + "'");
        return n;
    };
    int ng = read(toks[0], "g");
    int nh = read(toks[1], "h");
    ++*pos;
    return {ng, nh};
}

inline void reject_trailing(const std::vector<std::string>& lines, std::size_t pos) {
    for (; pos < lines.size(); ++pos)
        if (!trim(lines[pos]).empty())
            throw ParseError(static_cast<int>(pos + 1), "trailing content after tables");
}

inline void write_table_block(std::ostream& os, const GroupTable& t) {
    for (int a = 0; a < t.size(); ++a) {
        for (int b = 0; b < t.size(); ++b) os << (b ? " " : "") << t.mul(a, b);
        os << "\n";
    }
}

// Writes a rows x cols block through an index-pair accessor.
template <class F>
void write_rect_block(std::ostream& os, int rows, int cols, F&& entry) {
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) os << (j ? " " : "") << entry(i, j);
        os << "\n";
    }
}

}  // namespace detail

/// A post-group (G,.,rhd) on {0,...,n-1}.  Element 0 is the unit of dot;
/// the file reader rejects tables where it is not.
class PostGroupTable {
  public:
    PostGroupTable() = default;

    PostGroupTable(GroupTable dot, std::vector<int> rhd) : dot_(std::move(dot)), rhd_(std::move(rhd)) {
        int n = dot_.size();
        if (rhd_.size() != static_cast<std::size_t>(n) * static_cast<std::size_t>(n))
            throw std::invalid_argument("post-group table: rhd needs n*n entries");
        for (int v : rhd_)
            if (v < 0 || v >= n) throw std::invalid_argument("post-group table: rhd entry out of range");
    }

    int size() const { return dot_.size(); }
    const GroupTable& dot_table() const { return dot_; }
    int dot(int a, int b) const { return dot_.mul(a, b); }
    int rhd(int a, int b) const { return rhd_[static_cast<std::size_t>(a) * size() + b]; }

    /// The trivial post-group on a group: a rhd b = b.
    static PostGroupTable trivial(const GroupTable& g) {
        int n = g.size();
        std::vector<int> rhd(static_cast<std::size_t>(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) rhd[static_cast<std::size_t>(a) * n + b] = b;
        return PostGroupTable(g, std::move(rhd));
    }

    /// Exhaustive axiom check.  Verifies that dot is a group, that each left
    /// rhd-multiplication is a bijection fixing the unit, the unit laws, and
    /// the two post-group axioms
    ///   a rhd (b.c) = (a rhd b).(a rhd c)
    ///   (a.(a rhd b)) rhd c = a rhd (b rhd c)
    /// on every triple.
    VerificationReport verify() const {
        VerificationReport rep = dot_.verify();
        int n = size();
        int e = dot_.unit();
        if (e < 0) return rep;  // not a group: the remaining axioms are meaningless
        for (int a = 0; a < n; ++a) {
            std::vector<int> row(rhd_.begin() + static_cast<std::size_t>(a) * n,
                                 rhd_.begin() + static_cast<std::size_t>(a + 1) * n);
            rep.require(detail::is_perm(row), "left rhd-multiplication by " + std::to_string(a) +
                                                  " is not a bijection");
            rep.require(rhd(a, e) == e, "a rhd e != e at a=" + std::to_string(a));
            rep.require(rhd(e, a) == a, "e rhd a != a at a=" + std::to_string(a));
        }
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    rep.count();
                    if (rhd(a, dot(b, c)) != dot(rhd(a, b), rhd(a, c))) {
                        std::ostringstream os;
                        os << "distributivity fails at a=" << a << " b=" << b << " c=" << c;
                        rep.violations.push_back(os.str());
                    }
                    rep.count();
                    if (rhd(dot(a, rhd(a, b)), c) != rhd(a, rhd(b, c))) {
                        std::ostringstream os;
                        os << "weighted associativity fails at a=" << a << " b=" << b << " c=" << c;
                        rep.violations.push_back(os.str());
                    }
                }
        return rep;
    }

    /// Sub-adjacent product a o b = a.(a rhd b).  A group whenever the
    /// post-group axioms hold, with the same unit.
    GroupTable subadjacent() const {
        int n = size();
        std::vector<int> mul(static_cast<std::size_t>(n) * n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) mul[static_cast<std::size_t>(a) * n + b] = dot(a, rhd(a, b));
        return GroupTable(n, std::move(mul));
    }

    /// The sub-adjacent inverse a^dagger: the solution x of a rhd x = a^{-1}.
    int dagger(int a) const {
        int target = dot_.inverse(a);
        for (int x = 0; x < size(); ++x)
            if (rhd(a, x) == target) return x;
        throw std::domain_error("dagger: left rhd-multiplication not surjective");
    }

    bool operator==(const PostGroupTable&) const = default;

    /// Text form: `n=<size>`, `dot:` with n rows, `rhd:` with n rows.
    static PostGroupTable parse(const std::string& text) {
        auto lines = detail::split_on(text, '\n');
        std::size_t pos = 0;
        int n = detail::parse_size_header(lines, &pos);
        pos = detail::expect_marker(lines, pos, "dot:");
        std::size_t dot_row0_line = pos + 1;
        auto dot = detail::parse_table_block(lines, &pos, n, "dot");
        pos = detail::expect_marker(lines, pos, "rhd:");
        auto rhd = detail::parse_table_block(lines, &pos, n, "rhd");
        for (std::size_t rest = pos; rest < lines.size(); ++rest)
            if (!detail::trim(lines[rest]).empty())
                throw ParseError(static_cast<int>(rest + 1), "trailing content after tables");
        GroupTable g(n, std::move(dot));
        for (int b = 0; b < n; ++b)
            if (g.mul(0, b) != b || g.mul(b, 0) != b)
                throw ParseError(static_cast<int>(dot_row0_line), "element 0 is not the unit of dot");
        return PostGroupTable(std::move(g), std::move(rhd));
    }

    std::string str() const {
        std::ostringstream os;
        os << "n=" << size() << "\n" << "dot:\n";
        detail::write_table_block(os, dot_);
        os << "rhd:\n";
        for (int a = 0; a < size(); ++a) {
            for (int b = 0; b < size(); ++b) os << (b ? " " : "") << rhd(a, b);
            os << "\n";
        }
        return os.str();
    }

  private:
    GroupTable dot_;
    std::vector<int> rhd_;
};

/// An action of G on H by automorphisms, as the table phi[a][h] = Phi(a)(h).
class ActionTable {
  public:
    ActionTable() = default;

    ActionTable(int ng, int nh, std::vector<int> phi) : ng_(ng), nh_(nh), phi_(std::move(phi)) {
        if (ng_ <= 0 || nh_ <= 0) throw std::invalid_argument("action table: empty carrier");
        if (phi_.size() != static_cast<std::size_t>(ng_) * static_cast<std::size_t>(nh_))
            throw std::invalid_argument("action table: need |G|*|H| entries");
        for (int v : phi_)
            if (v < 0 || v >= nh_) throw std::invalid_argument("action table: entry out of range");
    }

    int g_size() const { return ng_; }
    int h_size() const { return nh_; }
    int act(int a, int h) const { return phi_[static_cast<std::size_t>(a) * nh_ + h]; }

    /// Checks that every Phi(a) is an automorphism of H, Phi(e_G) = Id, and
    /// Phi(a.b) = Phi(a) Phi(b).
    VerificationReport verify(const GroupTable& g, const GroupTable& h) const {
        VerificationReport rep;
        rep.require(g.size() == ng_ && h.size() == nh_, "action table: carrier size mismatch");
        if (g.size() != ng_ || h.size() != nh_) return rep;
        int eg = g.unit();
        rep.require(eg >= 0, "action table: G has no unit");
        if (eg >= 0)
            for (int x = 0; x < nh_; ++x)
                rep.require(act(eg, x) == x, "Phi(e) is not the identity at " + std::to_string(x));
        for (int a = 0; a < ng_; ++a) {
            std::vector<int> row(phi_.begin() + static_cast<std::size_t>(a) * nh_,
                                 phi_.begin() + static_cast<std::size_t>(a + 1) * nh_);
            rep.require(detail::is_perm(row), "Phi(" + std::to_string(a) + ") is not a bijection");
            for (int x = 0; x < nh_; ++x)
                for (int y = 0; y < nh_; ++y) {
                    rep.count();
                    if (act(a, h.mul(x, y)) != h.mul(act(a, x), act(a, y))) {
                        std::ostringstream os;
                        os << "Phi(" << a << ") is not multiplicative at x=" << x << " y=" << y;
                        rep.violations.push_back(os.str());
                    }
                }
        }
        for (int a = 0; a < ng_; ++a)
            for (int b = 0; b < ng_; ++b)
                for (int x = 0; x < nh_; ++x) {
                    rep.count();
                    if (act(g.mul(a, b), x) != act(a, act(b, x))) {
                        std::ostringstream os;
                        os << "Phi is not a homomorphism at a=" << a << " b=" << b << " x=" << x;
                        rep.violations.push_back(os.str());
                    }
                }
        return rep;
    }

    static ActionTable trivial(int ng, int nh) {
        std::vector<int> phi(static_cast<std::size_t>(ng) * nh);
        for (int a = 0; a < ng; ++a)
            for (int x = 0; x < nh; ++x) phi[static_cast<std::size_t>(a) * nh + x] = x;
        return ActionTable(ng, nh, std::move(phi));
    }

    /// The adjoint action of a group on itself: Ad(a)(x) = a.x.a^{-1}.
    static ActionTable adjoint(const GroupTable& g) {
        int n = g.size();
        std::vector<int> phi(static_cast<std::size_t>(n) * n);
        for (int a = 0; a < n; ++a) {
            int ai = g.inverse(a);
            for (int x = 0; x < n; ++x)
                phi[static_cast<std::size_t>(a) * n + x] = g.mul(g.mul(a, x), ai);
        }
        return ActionTable(n, n, std::move(phi));
    }

    /// Left rhd-multiplication of a post-group, as an action of the
    /// sub-adjacent group on (G,.): Phi(a) = L_a.
    static ActionTable left_rhd(const PostGroupTable& t) {
        int n = t.size();
        std::vector<int> phi(static_cast<std::size_t>(n) * n);
        for (int a = 0; a < n; ++a)
            for (int x = 0; x < n; ++x) phi[static_cast<std::size_t>(a) * n + x] = t.rhd(a, x);
        return ActionTable(n, n, std::move(phi));
    }

    bool operator==(const ActionTable&) const = default;

  private:
    int ng_ = 0, nh_ = 0;
    std::vector<int> phi_;
};

class MatchedPair;

/// A map B : H -> G together with the groups and the action it refers to.
/// B is a relative Rota-Baxter operator when
///   B(h).B(k) = B(h . Phi(B(h))(k))  for all h,k in H.
class RBOperator {
  public:
    RBOperator() = default;

    RBOperator(GroupTable g, GroupTable h, ActionTable phi, std::vector<int> b)
        : g_(std::move(g)), h_(std::move(h)), phi_(std::move(phi)), b_(std::move(b)) {
        if (phi_.g_size() != g_.size() || phi_.h_size() != h_.size())
            throw std::invalid_argument("rb operator: action does not match the groups");
        if (b_.size() != static_cast<std::size_t>(h_.size()))
            throw std::invalid_argument("rb operator: B needs |H| entries");
        for (int v : b_)
            if (v < 0 || v >= g_.size()) throw std::invalid_argument("rb operator: B entry out of range");
    }

    const GroupTable& g_table() const { return g_; }
    const GroupTable& h_table() const { return h_; }
    const ActionTable& action() const { return phi_; }
    int b(int h) const { return b_[static_cast<std::size_t>(h)]; }

    VerificationReport verify() const {
        VerificationReport rep = phi_.verify(g_, h_);
        int nh = h_.size();
        for (int h = 0; h < nh; ++h)
            for (int k = 0; k < nh; ++k) {
                rep.count();
                if (g_.mul(b(h), b(k)) != b(h_.mul(h, phi_.act(b(h), k)))) {
                    std::ostringstream os;
                    os << "Rota-Baxter identity fails at h=" << h << " k=" << k;
                    rep.violations.push_back(os.str());
                }
            }
        return rep;
    }

    /// Descendant product h o k = h . Phi(B(h))(k) on H.
    GroupTable descendant() const {
        int n = h_.size();
        std::vector<int> mul(static_cast<std::size_t>(n) * n);
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k)
                mul[static_cast<std::size_t>(h) * n + k] = h_.mul(h, phi_.act(b(h), k));
        return GroupTable(n, std::move(mul));
    }

    /// Post-group (H, ._H, rhd) with h rhd k = Phi(B(h))(k); its sub-adjacent
    /// group is the descendant group.  Requires a valid Rota-Baxter operator.
    PostGroupTable to_postgroup() const {
        if (!verify().ok()) throw std::domain_error("to_postgroup: Rota-Baxter identity fails");
        int n = h_.size();
        std::vector<int> rhd(static_cast<std::size_t>(n) * n);
        for (int h = 0; h < n; ++h)
            for (int k = 0; k < n; ++k) rhd[static_cast<std::size_t>(h) * n + k] = phi_.act(b(h), k);
        return PostGroupTable(h_, std::move(rhd));
    }

    MatchedPair to_matched_pair() const;

    bool operator==(const RBOperator&) const = default;

    /// Text form: `g=<|G|> h=<|H|>`, `g:`/`h:` with the two group tables,
    /// `phi:` with |G| rows of |H| entries for the action, and `b:` with one
    /// row of |H| entries in G.
    static RBOperator parse(const std::string& text) {
        auto lines = detail::split_on(text, '\n');
        std::size_t pos = 0;
        auto [ng, nh] = detail::parse_pair_size_header(lines, &pos);
        pos = detail::expect_marker(lines, pos, "g:");
        auto g = detail::parse_rect_block(lines, &pos, ng, ng, ng, "g");
        pos = detail::expect_marker(lines, pos, "h:");
        auto h = detail::parse_rect_block(lines, &pos, nh, nh, nh, "h");
        pos = detail::expect_marker(lines, pos, "phi:");
        auto phi = detail::parse_rect_block(lines, &pos, ng, nh, nh, "phi");
        pos = detail::expect_marker(lines, pos, "b:");
        auto b = detail::parse_rect_block(lines, &pos, 1, nh, ng, "b");
        detail::reject_trailing(lines, pos);
        return RBOperator(GroupTable(ng, std::move(g)), GroupTable(nh, std::move(h)),
                          ActionTable(ng, nh, std::move(phi)), std::move(b));
    }

    std::string str() const {
        std::ostringstream os;
        os << "g=" << g_.size() << " h=" << h_.size() << "\n";
        os << "g:\n";
        detail::write_table_block(os, g_);
        os << "h:\n";
        detail::write_table_block(os, h_);
        os << "phi:\n";
        detail::write_rect_block(os, g_.size(), h_.size(),
                                 [this](int a, int x) { return phi_.act(a, x); });
        os << "b:\n";
        detail::write_rect_block(os, 1, h_.size(), [this](int, int x) { return b(x); });
        return os.str();
    }

  private:
    GroupTable g_;
    GroupTable h_;
    ActionTable phi_;
    std::vector<int> b_;
};

/// The identity map as a relative Rota-Baxter operator on the sub-adjacent
/// group of a post-group, with respect to the action L_rhd on (G,.).
inline RBOperator id_as_rb(const PostGroupTable& t) {
    std::vector<int> b(static_cast<std::size_t>(t.size()));
    std::iota(b.begin(), b.end(), 0);
    return RBOperator(t.subadjacent(), t.dot_table(), ActionTable::left_rhd(t), std::move(b));
}

/// The transported product on H x G obtained by pulling the semidirect
/// product back along (h,a) -> (h, B(h).a).  Always a group; pairs are
/// indexed h*|G| + a.
inline GroupTable semidirect_star_table(const GroupTable& g, const GroupTable& h,
                                        const ActionTable& phi, const std::vector<int>& b) {
    int ng = g.size(), nh = h.size();
    int n = ng * nh;
    std::vector<int> mul(static_cast<std::size_t>(n) * n);
    for (int h1 = 0; h1 < nh; ++h1)
        for (int a = 0; a < ng; ++a)
            for (int h2 = 0; h2 < nh; ++h2)
                for (int bb = 0; bb < ng; ++bb) {
                    int m = h.mul(h1, phi.act(g.mul(b[h1], a), h2));
                    int z = g.mul(g.inverse(b[m]),
                                  g.mul(b[h1], g.mul(a, g.mul(b[h2], bb))));
                    mul[static_cast<std::size_t>(h1 * ng + a) * n + (h2 * ng + bb)] = m * ng + z;
                }
    return GroupTable(n, std::move(mul));
}

/// True iff both H x {e_G} and {e_H} x G are closed under the transported
/// product (hence subgroups), which happens exactly when B is a relative
/// Rota-Baxter operator.
inline bool semidirect_factorization_check(const GroupTable& g, const GroupTable& h,
                                           const ActionTable& phi, const std::vector<int>& b) {
    int ng = g.size(), nh = h.size();
    int eg = g.unit(), eh = h.unit();
    if (eg < 0 || eh < 0) throw std::domain_error("factorization check: carrier is not a group");
    // H x {e_G} closed: the G-component of (h1,e)*(h2,e) must be e_G.
    for (int h1 = 0; h1 < nh; ++h1)
        for (int h2 = 0; h2 < nh; ++h2) {
            int m = h.mul(h1, phi.act(g.mul(b[h1], eg), h2));
            int z = g.mul(g.inverse(b[m]), g.mul(b[h1], g.mul(eg, g.mul(b[h2], eg))));
            if (z != eg) return false;
        }
    // {e_H} x G closed: the H-component of (e,a)*(e,b) must be e_H.  It does
    // not depend on b, since only h2 = e_H enters it.
    for (int a = 0; a < ng; ++a) {
        int m = h.mul(eh, phi.act(g.mul(b[eh], a), eh));
        if (m != eh) return false;
    }
    return true;
}

/// Matched pair of groups (G, H, sigma) with sigma(a,h) = (a -> h, a <- h),
/// stored as the two tables act_h[a][h] in H and act_g[a][h] in G.
class MatchedPair {
  public:
    MatchedPair() = default;

    MatchedPair(GroupTable g, GroupTable h, std::vector<int> act_h, std::vector<int> act_g)
        : g_(std::move(g)), h_(std::move(h)), act_h_(std::move(act_h)), act_g_(std::move(act_g)) {
        std::size_t need = static_cast<std::size_t>(g_.size()) * static_cast<std::size_t>(h_.size());
        if (act_h_.size() != need || act_g_.size() != need)
            throw std::invalid_argument("matched pair: need |G|*|H| entries per action");
        for (int v : act_h_)
            if (v < 0 || v >= h_.size()) throw std::invalid_argument("matched pair: H-action out of range");
        for (int v : act_g_)
            if (v < 0 || v >= g_.size()) throw std::invalid_argument("matched pair: G-action out of range");
    }

    const GroupTable& g_table() const { return g_; }
    const GroupTable& h_table() const { return h_; }
    int act_h(int a, int h) const { return act_h_[static_cast<std::size_t>(a) * h_.size() + h]; }
    int act_g(int a, int h) const { return act_g_[static_cast<std::size_t>(a) * h_.size() + h]; }

    /// Exhaustive check of the six matched-pair conditions.
    VerificationReport verify() const {
        VerificationReport rep;
        int ng = g_.size(), nh = h_.size();
        int eg = g_.unit(), eh = h_.unit();
        rep.require(eg >= 0 && eh >= 0, "matched pair: carriers are not groups");
        if (eg < 0 || eh < 0) return rep;
        auto fail = [&rep](const char* which, int a, int b, int c) {
            std::ostringstream os;
            os << which << " fails at (" << a << "," << b << "," << c << ")";
            rep.violations.push_back(os.str());
        };
        for (int h = 0; h < nh; ++h)
            rep.require(act_h(eg, h) == h, "MG-1 fails at h=" + std::to_string(h));
        for (int a = 0; a < ng; ++a)
            rep.require(act_g(a, eh) == a, "MG-4 fails at a=" + std::to_string(a));
        for (int a = 0; a < ng; ++a)
            for (int b = 0; b < ng; ++b)
                for (int h = 0; h < nh; ++h) {
                    rep.count();
                    if (act_h(a, act_h(b, h)) != act_h(g_.mul(a, b), h)) fail("MG-2", a, b, h);
                    rep.count();
                    if (act_g(g_.mul(a, b), h) !=
                        g_.mul(act_g(a, act_h(b, h)), act_g(b, h)))
                        fail("MG-3", a, b, h);
                }
        for (int a = 0; a < ng; ++a)
            for (int h = 0; h < nh; ++h)
                for (int k = 0; k < nh; ++k) {
                    rep.count();
                    if (act_g(act_g(a, h), k) != act_g(a, h_.mul(h, k))) fail("MG-5", a, h, k);
                    rep.count();
                    if (act_h(a, h_.mul(h, k)) !=
                        h_.mul(act_h(a, h), act_h(act_g(a, h), k)))
                        fail("MG-6", a, h, k);
                }
        return rep;
    }

    bool operator==(const MatchedPair&) const = default;

    /// Text form: `g=<|G|> h=<|H|>`, `g:`/`h:` with the two group tables,
    /// then `to_h:`/`to_g:` with |G| rows of |H| entries for a -> h and
    /// a <- h.
    static MatchedPair parse(const std::string& text) {
        auto lines = detail::split_on(text, '\n');
        std::size_t pos = 0;
        auto [ng, nh] = detail::parse_pair_size_header(lines, &pos);
        pos = detail::expect_marker(lines, pos, "g:");
        auto g = detail::parse_rect_block(lines, &pos, ng, ng, ng, "g");
        pos = detail::expect_marker(lines, pos, "h:");
        auto h = detail::parse_rect_block(lines, &pos, nh, nh, nh, "h");
        pos = detail::expect_marker(lines, pos, "to_h:");
        auto ah = detail::parse_rect_block(lines, &pos, ng, nh, nh, "to_h");
        pos = detail::expect_marker(lines, pos, "to_g:");
        auto ag = detail::parse_rect_block(lines, &pos, ng, nh, ng, "to_g");
        detail::reject_trailing(lines, pos);
        return MatchedPair(GroupTable(ng, std::move(g)), GroupTable(nh, std::move(h)),
                           std::move(ah), std::move(ag));
    }

    std::string str() const {
        std::ostringstream os;
        os << "g=" << g_.size() << " h=" << h_.size() << "\n";
        os << "g:\n";
        detail::write_table_block(os, g_);
        os << "h:\n";
        detail::write_table_block(os, h_);
        os << "to_h:\n";
        detail::write_rect_block(os, g_.size(), h_.size(),
                                 [this](int a, int h) { return act_h(a, h); });
        os << "to_g:\n";
        detail::write_rect_block(os, g_.size(), h_.size(),
                                 [this](int a, int h) { return act_g(a, h); });
        return os.str();
    }

  private:
    GroupTable g_;
    GroupTable h_;
    std::vector<int> act_h_;
    std::vector<int> act_g_;
};

/// Matched pair induced by a relative Rota-Baxter operator:
///   a -> h = Phi(a)(h),   a <- h = B(Phi(a)(h))^{-1} . a . B(h),
/// between (G,._G) and the descendant group of B.
inline MatchedPair RBOperator::to_matched_pair() const {
    if (!verify().ok()) throw std::domain_error("to_matched_pair: Rota-Baxter identity fails");
    int ng = g_.size(), nh = h_.size();
    std::vector<int> ah(static_cast<std::size_t>(ng) * nh), ag(static_cast<std::size_t>(ng) * nh);
    for (int a = 0; a < ng; ++a)
        for (int h = 0; h < nh; ++h) {
            int moved = phi_.act(a, h);
            ah[static_cast<std::size_t>(a) * nh + h] = moved;
            ag[static_cast<std::size_t>(a) * nh + h] =
                g_.mul(g_.inverse(b(moved)), g_.mul(a, b(h)));
        }
    return MatchedPair(g_, descendant(), std::move(ah), std::move(ag));
}

/// True iff f preserves both dot and rhd, i.e. is a post-group homomorphism.
/// Such a map automatically preserves the sub-adjacent products.
inline bool is_postgroup_hom(const PostGroupTable& s, const PostGroupTable& t,
                             const std::vector<int>& f) {
    if (f.size() != static_cast<std::size_t>(s.size())) return false;
    for (int v : f)
        if (v < 0 || v >= t.size()) return false;
    for (int a = 0; a < s.size(); ++a)
        for (int b = 0; b < s.size(); ++b) {
            if (f[s.dot(a, b)] != t.dot(f[a], f[b])) return false;
            if (f[s.rhd(a, b)] != t.rhd(f[a], f[b])) return false;
        }
    return true;
}

/// All Rota-Baxter operators on g with respect to the adjoint action, found
/// by exhaustive search over the |G|^|G| self-maps.  Bounded to |G| <= 6.
inline std::vector<RBOperator> find_rb_operators_adjoint(const GroupTable& g) {
    int n = g.size();
    if (n > 6) throw std::domain_error("adjoint search: carrier larger than 6");
    std::vector<int> conj(static_cast<std::size_t>(n) * n);
    for (int x = 0; x < n; ++x) {
        int xi = g.inverse(x);
        for (int y = 0; y < n; ++y)
            conj[static_cast<std::size_t>(x) * n + y] = g.mul(g.mul(x, y), xi);
    }
    ActionTable ad = ActionTable::adjoint(g);
    std::vector<RBOperator> found;
    std::vector<int> b(static_cast<std::size_t>(n), 0);
    for (;;) {
        bool good = true;
        for (int x = 0; x < n && good; ++x)
            for (int y = 0; y < n && good; ++y)
                good = g.mul(b[x], b[y]) ==
                       b[g.mul(x, conj[static_cast<std::size_t>(b[x]) * n + y])];
        if (good) found.emplace_back(g, g, ad, b);
        int i = 0;
        while (i < n && b[i] == n - 1) b[i++] = 0;
        if (i == n) break;
        ++b[i];
    }
    return found;
}

}  // namespace postalg
