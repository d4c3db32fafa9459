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

// Set-theoretic Yang-Baxter machinery over finite carriers: R-maps with
// braid-relation, bijectivity and non-degeneracy checks, braided groups, the
// solution R(a,b) = (a rhd b, (a rhd b)^dagger o a o b) attached to a
// post-group, the inverse construction, and the same solution on truncated
// Butcher characters.

#pragma once

#include <array>
#include <cstddef>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "postalg/butcher.hpp"
#include "postalg/common.hpp"
#include "postalg/postgroup.hpp"

namespace postalg {

/// A map R : X x X -> X x X on a finite carrier {0,...,n-1}, stored as the
/// two output components.  Writing R(x,y) = (phi_x(y), psi_y(x)), the tables
/// are out1[x][y] = phi_x(y) and out2[x][y] = psi_y(x).
class RMap {
  public:
    RMap() = default;

    RMap(int n, std::vector<int> out1, std::vector<int> out2)
        : n_(n), out1_(std::move(out1)), out2_(std::move(out2)) {
        std::size_t need = static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_);
        if (n_ <= 0 || out1_.size() != need || out2_.size() != need)
            throw std::invalid_argument("rmap: need two n*n component tables");
        for (int v : out1_)
            if (v < 0 || v >= n_) throw std::invalid_argument("rmap: entry out of range");
        for (int v : out2_)
            if (v < 0 || v >= n_) throw std::invalid_argument("rmap: entry out of range");
    }

    int size() const { return n_; }

    std::pair<int, int> apply(int x, int y) const {
        std::size_t i = static_cast<std::size_t>(x) * n_ + y;
        return {out1_[i], out2_[i]};
    }

    bool is_bijective() const {
        std::set<std::pair<int, int>> image;
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y) image.insert(apply(x, y));
        return image.size() == static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_);
    }

    /// Braid relation R12 R23 R12 = R23 R12 R23, checked on every triple.
    /// The report counts one check per triple; bijectivity of R is a
    /// separate requirement recorded as its own check.
    VerificationReport verify_braid() const {
        VerificationReport rep;
        rep.require(is_bijective(), "R is not a bijection on X x X");
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y)
                for (int z = 0; z < n_; ++z) {
                    rep.count();
                    auto lhs = apply_121(x, y, z);
                    auto rhs = apply_212(x, y, z);
                    if (lhs != rhs) {
                        std::ostringstream os;
                        os << "braid relation fails at (" << x << "," << y << "," << z << ")";
                        rep.violations.push_back(os.str());
                    }
                }
        return rep;
    }

    /// Non-degeneracy: every phi_x and every psi_y is a permutation of X.
    bool verify_nondegenerate() const {
        for (int x = 0; x < n_; ++x) {
            std::vector<int> phi(n_), psi(n_);
            for (int y = 0; y < n_; ++y) {
                phi[y] = apply(x, y).first;   // phi_x
                psi[y] = apply(y, x).second;  // psi_x
            }
            if (!detail::is_perm(phi) || !detail::is_perm(psi)) return false;
        }
        return true;
    }

    bool is_involutive() const {
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y) {
                auto [u, v] = apply(x, y);
                if (apply(u, v) != std::pair<int, int>(x, y)) return false;
            }
        return true;
    }

    static RMap flip(int n) {
        std::vector<int> out1(static_cast<std::size_t>(n) * n), out2(out1.size());
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                out1[static_cast<std::size_t>(x) * n + y] = y;
                out2[static_cast<std::size_t>(x) * n + y] = x;
            }
        return RMap(n, std::move(out1), std::move(out2));
    }

    bool operator==(const RMap&) const = default;

    /// Text form: `n=<size>` then one line `x y -> u v` per input pair,
    /// each pair exactly once.
    static RMap parse(const std::string& text) {
        auto lines = detail::split_on(text, '\n');
        std::size_t pos = 0;
        int n = detail::parse_size_header(lines, &pos);
        std::size_t need = static_cast<std::size_t>(n) * static_cast<std::size_t>(n);
        std::vector<int> out1(need, -1), out2(need, -1);
        std::size_t filled = 0;
        for (; pos < lines.size(); ++pos) {
            int lineno = static_cast<int>(pos + 1);
            auto toks = detail::split_ws(detail::trim(lines[pos]));
            if (toks.empty()) continue;
            if (toks.size() != 5 || toks[2] != "->")
                throw ParseError(lineno, "expected 'x y -> u v'");
            int vals[4];
            const char* names[4] = {"x", "y", "u", "v"};
            int vi = 0;
            for (int ti : {0, 1, 3, 4}) {
                std::size_t used = 0;
                int v = -1;
                try {
                    v = std::stoi(toks[static_cast<std::size_t>(ti)], &used);
                } catch (const std::exception&) {
                    used = 0;
                }
                if (used != toks[static_cast<std::size_t>(ti)].size() || v < 0 || v >= n)
                    throw ParseError(lineno, std::string("bad index for ") + names[vi] + " '" +
                                                 toks[static_cast<std::size_t>(ti)] + "'");
                vals[vi++] = v;
            }
            std::size_t i = static_cast<std::size_t>(vals[0]) * n + vals[1];
            if (out1[i] >= 0)
                throw ParseError(lineno, "duplicate pair (" + toks[0] + "," + toks[1] + ")");
            out1[i] = vals[2];
            out2[i] = vals[3];
            ++filled;
        }
        if (filled != need)
            throw ParseError(static_cast<int>(lines.size()),
                             "expected " + std::to_string(need) + " pairs, got " +
                                 std::to_string(filled));
        return RMap(n, std::move(out1), std::move(out2));
    }

    std::string str() const {
        std::ostringstream os;
        os << "n=" << n_ << "\n";
        for (int x = 0; x < n_; ++x)
            for (int y = 0; y < n_; ++y) {
                auto [u, v] = apply(x, y);
                os << x << " " << y << " -> " << u << " " << v << "\n";
            }
        return os.str();
    }

  private:
    std::array<int, 3> apply_121(int x, int y, int z) const {
        auto [a, b] = apply(x, y);
        auto [c, d] = apply(b, z);
        auto [e, f] = apply(a, c);
        return {e, f, d};
    }

    std::array<int, 3> apply_212(int x, int y, int z) const {
        auto [a, b] = apply(y, z);
        auto [c, d] = apply(x, a);
        auto [e, f] = apply(d, b);
        return {c, e, f};
    }

    int n_ = 0;
    std::vector<int> out1_;
    std::vector<int> out2_;
};

/// A group together with an R-map on its carrier.  Valid when (G,G,R) is a
/// matched pair whose two actions multiply back to the group product:
/// (a -> b) o (a <- b) = a o b.
struct BraidedGroup {
    GroupTable circ;
    RMap r;

    VerificationReport verify() const {
        VerificationReport rep = circ.verify();
        int n = circ.size();
        rep.require(r.size() == n, "R-map carrier does not match the group");
        if (!rep.ok()) return rep;
        std::vector<int> ah(static_cast<std::size_t>(n) * n), ag(ah.size());
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                auto [u, v] = r.apply(a, b);
                ah[static_cast<std::size_t>(a) * n + b] = u;
                ag[static_cast<std::size_t>(a) * n + b] = v;
            }
        rep.merge(MatchedPair(circ, circ, ah, ag).verify());
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                rep.count();
                auto [u, v] = r.apply(a, b);
                if (circ.mul(u, v) != circ.mul(a, b)) {
                    std::ostringstream os;
                    os << "compatibility (a->b)o(a<-b) = aob fails at a=" << a << " b=" << b;
                    rep.violations.push_back(os.str());
                }
            }
        return rep;
    }
};

/// The braided group attached to a post-group:
///   R(a,b) = (a rhd b, (a rhd b)^dagger o a o b)
/// over the sub-adjacent group.
inline BraidedGroup postgroup_to_braided(const PostGroupTable& t) {
    int n = t.size();
    GroupTable circ = t.subadjacent();
    std::vector<int> out1(static_cast<std::size_t>(n) * n), out2(out1.size());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int u = t.rhd(a, b);
            out1[static_cast<std::size_t>(a) * n + b] = u;
            out2[static_cast<std::size_t>(a) * n + b] =
                circ.mul(t.dagger(u), circ.mul(a, b));
        }
    return BraidedGroup{std::move(circ), RMap(n, std::move(out1), std::move(out2))};
}

/// The inverse construction: a braided group yields the post-group
///   a rhd b = a -> b,   a . b = a o (a^dagger -> b),
/// where a^dagger is the o-inverse.  Requires a valid braided group.
inline PostGroupTable braided_to_postgroup(const BraidedGroup& bg) {
    if (!bg.verify().ok()) throw std::domain_error("braided_to_postgroup: invalid braided group");
    int n = bg.circ.size();
    std::vector<int> dot(static_cast<std::size_t>(n) * n), rhd(dot.size());
    for (int a = 0; a < n; ++a) {
        int ad = bg.circ.inverse(a);
        for (int b = 0; b < n; ++b) {
            rhd[static_cast<std::size_t>(a) * n + b] = bg.r.apply(a, b).first;
            dot[static_cast<std::size_t>(a) * n + b] =
                bg.circ.mul(a, bg.r.apply(ad, b).first);
        }
    }
    return PostGroupTable(GroupTable(n, std::move(dot)), std::move(rhd));
}

/// The Yang-Baxter solution on truncated Butcher characters:
/// R(a,b) = (a rhd b, (a rhd b)^dagger o a o b).
template <Ring R>
std::pair<Character<R>, Character<R>> butcher_rmap(const Character<R>& a, const Character<R>& b) {
    Character<R> first = char_rhd(a, b);
    Character<R> second = char_compose(char_inverse_circ(first), char_compose(a, b));
    return {std::move(first), std::move(second)};
}

}  // namespace postalg
