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

// Skew-left braces on finite carriers and their equivalence with post-groups:
// a brace (G,o,.) gives the post-group a rhd b = a^{-1}.(a o b), a post-group
// gives the brace with o the sub-adjacent product, and the two constructions
// are mutually inverse.  Also a complete enumeration of braces on up to 8
// elements modulo simultaneous relabeling.

#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "postalg/common.hpp"
#include "postalg/postgroup.hpp"

namespace postalg {

/// A skew-left brace: two group structures o ("circ") and . ("dot") on one
/// carrier, tied together by  a o (b.c) = (a o b) . a^{-1} . (a o c)  with
/// a^{-1} the dot-inverse.
class BraceTable {
  public:
    BraceTable() = default;

    BraceTable(GroupTable circ, GroupTable dot) : circ_(std::move(circ)), dot_(std::move(dot)) {
        if (circ_.size() != dot_.size())
            throw std::invalid_argument("brace table: circ and dot need the same carrier");
    }

    int size() const { return dot_.size(); }
    const GroupTable& circ_table() const { return circ_; }
    const GroupTable& dot_table() const { return dot_; }
    int circ(int a, int b) const { return circ_.mul(a, b); }
    int dot(int a, int b) const { return dot_.mul(a, b); }

    /// The trivial brace on a group: o = dot.
    static BraceTable trivial(const GroupTable& g) { return BraceTable(g, g); }

    /// Exhaustive check: both tables are groups, the units coincide, and the
    /// brace axiom holds on every triple.
    VerificationReport verify() const {
        VerificationReport rep = circ_.verify();
        rep.merge(dot_.verify());
        int n = size();
        rep.require(circ_.unit() == dot_.unit() && dot_.unit() >= 0,
                    "circ and dot units do not coincide");
        if (!rep.ok()) return rep;
        for (int a = 0; a < n; ++a) {
            int ainv = dot_.inverse(a);
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    rep.count();
                    if (circ(a, dot(b, c)) != dot(dot(circ(a, b), ainv), circ(a, c))) {
                        std::ostringstream os;
                        os << "brace axiom fails at a=" << a << " b=" << b << " c=" << c;
                        rep.violations.push_back(os.str());
                    }
                }
        }
        return rep;
    }

    bool operator==(const BraceTable&) const = default;

    /// Text form: `n=<size>`, `circ:` with n rows, `dot:` with n rows.
    /// Element 0 must be the unit of both tables.
    static BraceTable parse(const std::string& text) {
        auto lines = detail::split_on(text, '\n');
        std::size_t pos = 0;
        int n = detail::parse_size_header(lines, &pos);
        pos = detail::expect_marker(lines, pos, "circ:");
        std::size_t circ_row0_line = pos + 1;
        auto circ = detail::parse_table_block(lines, &pos, n, "circ");
        pos = detail::expect_marker(lines, pos, "dot:");
        std::size_t dot_row0_line = pos + 1;
        auto dot = detail::parse_table_block(lines, &pos, n, "dot");
        for (std::size_t rest = pos; rest < lines.size(); ++rest)
            if (!detail::trim(lines[rest]).empty())
                throw ParseError(static_cast<int>(rest + 1), "trailing content after tables");
        GroupTable c(n, std::move(circ)), d(n, std::move(dot));
        for (int b = 0; b < n; ++b) {
            if (c.mul(0, b) != b || c.mul(b, 0) != b)
                throw ParseError(static_cast<int>(circ_row0_line), "element 0 is not the unit of circ");
            if (d.mul(0, b) != b || d.mul(b, 0) != b)
                throw ParseError(static_cast<int>(dot_row0_line), "element 0 is not the unit of dot");
        }
        return BraceTable(std::move(c), std::move(d));
    }

    std::string str() const {
        std::ostringstream os;
        os << "n=" << size() << "\n";
        os << "circ:\n";
        detail::write_table_block(os, circ_);
        os << "dot:\n";
        detail::write_table_block(os, dot_);
        return os.str();
    }

  private:
    GroupTable circ_;
    GroupTable dot_;
};

/// The brace attached to a post-group: circ is the sub-adjacent product,
/// dot is kept.  Requires a valid post-group.
inline BraceTable postgroup_to_brace(const PostGroupTable& t) {
    if (!t.verify().ok()) throw std::domain_error("postgroup_to_brace: invalid post-group");
    return BraceTable(t.subadjacent(), t.dot_table());
}

/// The post-group attached to a brace: a rhd b = a^{-1}.(a o b) with a^{-1}
/// the dot-inverse.  Requires a valid brace.
inline PostGroupTable brace_to_postgroup(const BraceTable& b) {
    if (!b.verify().ok()) throw std::domain_error("brace_to_postgroup: invalid brace");
    int n = b.size();
    std::vector<int> rhd(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        int ainv = b.dot_table().inverse(a);
        for (int x = 0; x < n; ++x)
            rhd[static_cast<std::size_t>(a) * n + x] = b.dot(ainv, b.circ(a, x));
    }
    return PostGroupTable(b.dot_table(), std::move(rhd));
}

/// All automorphisms of a finite group, as carrier permutations, found by
/// brute force (feasible for n <= 8).
inline std::vector<std::vector<int>> automorphisms(const GroupTable& g) {
    int n = g.size();
    if (n > 8) throw std::domain_error("automorphisms: carrier too large");
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        if (p[g.unit()] != g.unit()) continue;
        bool ok = true;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b) ok = p[g.mul(a, b)] == g.mul(p[a], p[b]);
        if (ok) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

/// One representative per isomorphism class of groups with n <= 8 elements.
/// Every table has unit 0.  The order of the classes is fixed: the cyclic
/// group first, then the remaining classes.
inline std::vector<GroupTable> small_group_catalog(int n) {
    if (n < 1 || n > 8) throw std::domain_error("small_group_catalog: need 1 <= n <= 8");
    std::vector<GroupTable> out;
    out.push_back(GroupTable::cyclic(n));
    switch (n) {
        case 4:
            out.push_back(GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2)));
            break;
        case 6:
            out.push_back(GroupTable::symmetric(3));
            break;
        case 8:
            out.push_back(GroupTable::direct_product(GroupTable::cyclic(4), GroupTable::cyclic(2)));
            out.push_back(GroupTable::direct_product(
                GroupTable::cyclic(2),
                GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2))));
            out.push_back(GroupTable::dihedral(4));
            out.push_back(GroupTable::quaternion());
            break;
        default:
            break;
    }
    return out;
}

namespace detail {

// Backtracking search for all maps lam : G -> Aut(G,.) with lam_e = id and
// lam_a lam_b = lam_{a . lam_a(b)}.  Each solution is exactly a brace with
// the given dot group, via  a o b = a . lam_a(b).  The search assigns lam at
// the smallest unassigned element and closes under the condition, so every
// solution is produced once.
class BraceSearch {
  public:
    BraceSearch(const GroupTable& dot, const std::vector<std::vector<int>>& auts)
        : dot_(dot), auts_(auts), n_(dot.size()), na_(static_cast<int>(auts.size())) {
        std::map<std::vector<int>, int> index;
        for (int i = 0; i < na_; ++i) index[auts_[i]] = i;
        comp_.resize(static_cast<std::size_t>(na_) * na_);
        std::vector<int> c(n_);
        for (int i = 0; i < na_; ++i)
            for (int j = 0; j < na_; ++j) {
                for (int x = 0; x < n_; ++x) c[x] = auts_[i][auts_[j][x]];
                comp_[static_cast<std::size_t>(i) * na_ + j] = index.at(c);
            }
        std::vector<int> id(n_);
        std::iota(id.begin(), id.end(), 0);
        id_ = index.at(id);
    }

    std::vector<std::vector<int>> run() {
        std::vector<int> lam(n_, -1);
        lam[dot_.unit()] = id_;
        found_.clear();
        extend(lam);
        return std::move(found_);
    }

  private:
    // Fixpoint closure of the compatibility condition over assigned elements.
    bool close(std::vector<int>& lam) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int a = 0; a < n_; ++a) {
                if (lam[a] < 0) continue;
                for (int b = 0; b < n_; ++b) {
                    if (lam[b] < 0) continue;
                    int c = dot_.mul(a, auts_[static_cast<std::size_t>(lam[a])][b]);
                    int t = comp_[static_cast<std::size_t>(lam[a]) * na_ + lam[b]];
                    if (lam[c] < 0) {
                        lam[c] = t;
                        changed = true;
                    } else if (lam[c] != t) {
                        return false;
                    }
                }
            }
        }
        return true;
    }

    void extend(const std::vector<int>& lam) {
        int next = -1;
        for (int a = 0; a < n_; ++a)
            if (lam[a] < 0) {
                next = a;
                break;
            }
        if (next < 0) {
            found_.push_back(lam);
            return;
        }
        for (int f = 0; f < na_; ++f) {
            std::vector<int> trial = lam;
            trial[next] = f;
            if (close(trial)) extend(trial);
        }
    }

    const GroupTable& dot_;
    const std::vector<std::vector<int>>& auts_;
    int n_;
    int na_;
    int id_;
    std::vector<int> comp_;
    std::vector<std::vector<int>> found_;
};

}  // namespace detail

/// All skew-left braces on n <= 8 elements, one representative per class
/// modulo simultaneous relabeling of both tables, in a deterministic order:
/// dot groups follow the catalog order, circ tables are sorted per dot group.
inline std::vector<BraceTable> enumerate_braces(int n) {
    if (n < 1 || n > 8) throw std::domain_error("enumerate_braces: need 1 <= n <= 8");
    std::vector<BraceTable> out;
    for (const GroupTable& dot : small_group_catalog(n)) {
        auto auts = automorphisms(dot);
        detail::BraceSearch search(dot, auts);
        // Any iso between braces sharing this dot table is an automorphism of
        // dot, so canonicalizing circ over Aut(dot) dedups the class.
        std::set<std::vector<int>> canon;
        for (const auto& lam : search.run()) {
            std::vector<int> circ(static_cast<std::size_t>(n) * n);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    circ[static_cast<std::size_t>(a) * n + b] =
                        dot.mul(a, auts[static_cast<std::size_t>(lam[a])][b]);
            GroupTable c(n, std::move(circ));
            std::vector<int> best;
            for (const auto& p : auts) {
                GroupTable r = c.relabel(p);
                std::vector<int> flat(static_cast<std::size_t>(n) * n);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) flat[static_cast<std::size_t>(a) * n + b] = r.mul(a, b);
                if (best.empty() || flat < best) best = std::move(flat);
            }
            canon.insert(std::move(best));
        }
        for (const auto& circ : canon) out.emplace_back(GroupTable(n, circ), dot);
    }
    return out;
}

}  // namespace postalg
