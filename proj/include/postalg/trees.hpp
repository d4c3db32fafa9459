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
 * @file trees.hpp
 * @brief Rooted trees, planar rooted trees, forests, and edge cuts.
 *
 * Grammar for the text form:  tree := "[" tree* "]".  A single node is `[]`,
 * the 2-chain is `[[]]`, the cherry is `[[][]]`.  A forest is a concatenation
 * of tree strings; the empty forest prints as `1`.  Balanced-bracket strings
 * decompose uniquely, so the forest serialization is unambiguous.
 *
 * Tree (non-planar) keeps its children as a canonical multiset: sorted
 * ascending by serialized string, recursively.  Two trees are equal iff their
 * serializations are equal.  PlanarTree keeps children in the given order.
 *
 * Edges are identified with their child node under preorder traversal of the
 * canonical form: edge i is the edge whose child is preorder node i+1 (the
 * root is node 0).  A Cut is a bitmask over edge indices.
 */

#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "postalg/common.hpp"

namespace postalg {

namespace detail {

struct RawNode {
    std::vector<RawNode> kids;
};

/// Recursive-descent parser for the bracket grammar.  `expect_single` demands
/// exactly one tree; otherwise a (possibly empty) sequence is accepted.
inline std::vector<RawNode> parse_raw(std::string_view s, bool expect_single) {
    std::vector<RawNode> roots;
    std::vector<RawNode*> stack;
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '[') {
            if (stack.empty()) {
                roots.emplace_back();
                stack.push_back(&roots.back());
            } else {
                stack.back()->kids.emplace_back();
                stack.push_back(&stack.back()->kids.back());
            }
        } else if (c == ']') {
            if (stack.empty()) throw ParseError(0, "unbalanced ']' in '" + std::string(s) + "'");
            stack.pop_back();
        } else {
            throw ParseError(0, std::string("unexpected character '") + c + "' in tree string");
        }
    }
    if (!stack.empty()) throw ParseError(0, "unbalanced '[' in '" + std::string(s) + "'");
    if (expect_single && roots.size() != 1)
        throw ParseError(0, "expected exactly one tree in '" + std::string(s) + "'");
    return roots;
}

}  // namespace detail

/// Planar (ordered) rooted tree.
class PlanarTree {
  public:
    /// Single node.
    PlanarTree() : nodes_(1), key_("[]") {}

    explicit PlanarTree(std::vector<PlanarTree> children) : children_(std::move(children)) {
        nodes_ = 1;
        key_ = "[";
        for (const auto& c : children_) {
            nodes_ += c.nodes_;
            key_ += c.key_;
        }
        key_ += "]";
    }

    static PlanarTree parse(std::string_view s) {
        auto raw = detail::parse_raw(detail::trim(s), true);
        return from_raw(raw[0]);
    }

    const std::vector<PlanarTree>& children() const { return children_; }
    int node_count() const { return nodes_; }
    const std::string& key() const { return key_; }
    const std::string& str() const { return key_; }

    friend bool operator==(const PlanarTree& a, const PlanarTree& b) { return a.key_ == b.key_; }
    friend std::strong_ordering operator<=>(const PlanarTree& a, const PlanarTree& b) {
        return a.key_ <=> b.key_;
    }

    static PlanarTree from_raw(const detail::RawNode& n) {
        std::vector<PlanarTree> kids;
        kids.reserve(n.kids.size());
        for (const auto& k : n.kids) kids.push_back(from_raw(k));
        return PlanarTree(std::move(kids));
    }

  private:
    std::vector<PlanarTree> children_;
    int nodes_;
    std::string key_;
};

/// Non-planar rooted tree in canonical form: children sorted ascending by key,
/// recursively.  The constructor canonicalizes, so every reachable value is
/// canonical.
class Tree {
  public:
    Tree() : nodes_(1), key_("[]") {}

    explicit Tree(std::vector<Tree> children) : children_(std::move(children)) {
        std::sort(children_.begin(), children_.end(),
                  [](const Tree& a, const Tree& b) { return a.key_ < b.key_; });
        nodes_ = 1;
        key_ = "[";
        for (const auto& c : children_) {
            nodes_ += c.nodes_;
            key_ += c.key_;
        }
        key_ += "]";
    }

    static Tree parse(std::string_view s) {
        auto raw = detail::parse_raw(detail::trim(s), true);
        return from_raw(raw[0]);
    }

    static Tree from_raw(const detail::RawNode& n) {
        std::vector<Tree> kids;
        kids.reserve(n.kids.size());
        for (const auto& k : n.kids) kids.push_back(from_raw(k));
        return Tree(std::move(kids));
    }

    /// Forgets planar order.
    static Tree from_planar(const PlanarTree& p) {
        std::vector<Tree> kids;
        kids.reserve(p.children().size());
        for (const auto& k : p.children()) kids.push_back(from_planar(k));
        return Tree(std::move(kids));
    }

    const std::vector<Tree>& children() const { return children_; }
    int node_count() const { return nodes_; }
    const std::string& key() const { return key_; }
    const std::string& str() const { return key_; }

    friend bool operator==(const Tree& a, const Tree& b) { return a.key_ == b.key_; }
    friend std::strong_ordering operator<=>(const Tree& a, const Tree& b) { return a.key_ <=> b.key_; }

  private:
    std::vector<Tree> children_;
    int nodes_;
    std::string key_;
};

/// Multiset of non-planar trees; factors kept sorted by key.  Empty forest
/// prints as `1`.
class Forest {
  public:
    Forest() = default;

    explicit Forest(std::vector<Tree> trees) : trees_(std::move(trees)) {
        std::sort(trees_.begin(), trees_.end());
    }

    explicit Forest(const Tree& t) : trees_{t} {}

    static Forest parse(std::string_view s) {
        std::string_view t = detail::trim(s);
        if (t == "1") return Forest();
        auto raw = detail::parse_raw(t, false);
        if (raw.empty()) throw ParseError(0, "empty forest (write '1' for the empty forest)");
        std::vector<Tree> trees;
        trees.reserve(raw.size());
        for (const auto& r : raw) trees.push_back(Tree::from_raw(r));
        return Forest(std::move(trees));
    }

    const std::vector<Tree>& trees() const { return trees_; }
    bool empty() const { return trees_.empty(); }
    std::size_t size() const { return trees_.size(); }

    int node_count() const {
        int n = 0;
        for (const auto& t : trees_) n += t.node_count();
        return n;
    }

    std::string key() const {
        if (trees_.empty()) return "1";
        std::string out;
        for (const auto& t : trees_) out += t.key();
        return out;
    }
    std::string str() const { return key(); }

    /// Multiset union (the forest product of the BCK algebra).
    friend Forest operator*(const Forest& a, const Forest& b) {
        std::vector<Tree> all = a.trees_;
        all.insert(all.end(), b.trees_.begin(), b.trees_.end());
        return Forest(std::move(all));
    }

    friend bool operator==(const Forest& a, const Forest& b) { return a.trees_ == b.trees_; }
    friend std::strong_ordering operator<=>(const Forest& a, const Forest& b) {
        return a.key() <=> b.key();
    }

  private:
    std::vector<Tree> trees_;
};

/// Ordered sequence of planar trees (a word in the tensor algebra on planar
/// trees).  Empty word prints as `1`.
class OrderedForest {
  public:
    OrderedForest() = default;
    explicit OrderedForest(std::vector<PlanarTree> trees) : trees_(std::move(trees)) {}
    explicit OrderedForest(const PlanarTree& t) : trees_{t} {}

    static OrderedForest parse(std::string_view s) {
        std::string_view t = detail::trim(s);
        if (t == "1") return OrderedForest();
        auto raw = detail::parse_raw(t, false);
        if (raw.empty()) throw ParseError(0, "empty word (write '1' for the empty word)");
        std::vector<PlanarTree> trees;
        trees.reserve(raw.size());
        for (const auto& r : raw) trees.push_back(PlanarTree::from_raw(r));
        return OrderedForest(std::move(trees));
    }

    const std::vector<PlanarTree>& trees() const { return trees_; }
    bool empty() const { return trees_.empty(); }
    std::size_t size() const { return trees_.size(); }

    int node_count() const {
        int n = 0;
        for (const auto& t : trees_) n += t.node_count();
        return n;
    }

    std::string key() const {
        if (trees_.empty()) return "1";
        std::string out;
        for (const auto& t : trees_) out += t.key();
        return out;
    }
    std::string str() const { return key(); }

    /// Concatenation.
    friend OrderedForest operator*(const OrderedForest& a, const OrderedForest& b) {
        std::vector<PlanarTree> all = a.trees_;
        all.insert(all.end(), b.trees_.begin(), b.trees_.end());
        return OrderedForest(std::move(all));
    }

    friend bool operator==(const OrderedForest& a, const OrderedForest& b) { return a.trees_ == b.trees_; }
    friend std::strong_ordering operator<=>(const OrderedForest& a, const OrderedForest& b) {
        return a.key() <=> b.key();
    }

  private:
    std::vector<PlanarTree> trees_;
};

// ---------------------------------------------------------------------------
// Cuts.

/// Subset of the edges of one tree, as a bitmask.  Bit i is the edge whose
/// child is preorder node i+1 of the canonical form.
struct Cut {
    std::uint32_t mask = 0;

    int size() const {
        int n = 0;
        for (std::uint32_t m = mask; m; m &= m - 1) ++n;
        return n;
    }
    bool contains(int edge) const { return (mask >> edge) & 1u; }
    friend bool operator==(const Cut&, const Cut&) = default;
};

namespace detail {

/// Preorder flattening of a Tree: parent index per node (root first, -1 for
/// the root) plus child lists in preorder indices.
struct FlatTree {
    std::vector<int> parent;
    std::vector<std::vector<int>> children;

    explicit FlatTree(const Tree& t) {
        flatten(t, -1);
    }

    int flatten(const Tree& t, int par) {
        int me = static_cast<int>(parent.size());
        parent.push_back(par);
        children.emplace_back();
        if (par >= 0) children[par].push_back(me);
        for (const auto& c : t.children()) flatten(c, me);
        return me;
    }

    int edge_count() const { return static_cast<int>(parent.size()) - 1; }

    /// Rebuilds the subtree rooted at node v, skipping any child whose
    /// connecting edge is in `cut`.
    Tree component(int v, const Cut& cut) const {
        std::vector<Tree> kids;
        for (int w : children[v])
            if (!cut.contains(w - 1)) kids.push_back(component(w, cut));
        return Tree(std::move(kids));
    }
};

}  // namespace detail

/// All 2^E subsets of the edges of t.  E is capped to keep enumeration sane.
inline std::vector<Cut> all_cuts(const Tree& t) {
    int e = t.node_count() - 1;
    if (e > 20) throw std::domain_error("all_cuts: tree too large");
    std::vector<Cut> out;
    out.reserve(std::size_t{1} << e);
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << e); ++m) out.push_back(Cut{m});
    return out;
}

/// Result of one admissible cut: the pruned forest P^c (components not
/// containing the root) and the remaining tree R^c (component of the root).
struct AdmissibleCut {
    Cut cut;
    Forest pruned;
    Tree remaining;
};

/// Admissible cuts of t: at most one cut edge on any path from the root to a
/// leaf.  The empty cut is admissible and yields (1, t).  The full cut c = all
/// edges below the root is admissible only when every edge is a root edge.
inline std::vector<AdmissibleCut> admissible_cuts(const Tree& t) {
    detail::FlatTree flat(t);
    int e = flat.edge_count();
    if (e > 20) throw std::domain_error("admissible_cuts: tree too large");
    // anc[v] = edges on the path root -> v (including v's parent edge).
    std::vector<std::uint32_t> anc(flat.parent.size(), 0);
    for (std::size_t v = 1; v < flat.parent.size(); ++v)
        anc[v] = anc[flat.parent[v]] | (std::uint32_t{1} << (v - 1));

    std::vector<AdmissibleCut> out;
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << e); ++m) {
        bool ok = true;
        for (int i = 0; ok && i < e; ++i) {
            if (!((m >> i) & 1u)) continue;
            int child = i + 1;
            if (m & anc[flat.parent[child]]) ok = false;
        }
        if (!ok) continue;
        Cut cut{m};
        std::vector<Tree> pruned;
        for (int i = 0; i < e; ++i)
            if (cut.contains(i)) pruned.push_back(flat.component(i + 1, cut));
        out.push_back(AdmissibleCut{cut, Forest(std::move(pruned)), flat.component(0, cut)});
    }
    return out;
}

/// Deletes the edges in `cut` and returns the forest of connected components.
inline Forest remove_cut(const Tree& t, const Cut& cut) {
    detail::FlatTree flat(t);
    if (cut.mask >> flat.edge_count())
        throw std::domain_error("remove_cut: cut mentions edges the tree does not have");
    std::vector<Tree> comps;
    comps.push_back(flat.component(0, cut));
    for (int i = 0; i < flat.edge_count(); ++i)
        if (cut.contains(i)) comps.push_back(flat.component(i + 1, cut));
    return Forest(std::move(comps));
}

// ---------------------------------------------------------------------------
// Enumeration.

namespace detail {

template <typename T>
void multisets_rec(const std::vector<T>& pool, std::size_t from, int budget,
                   std::vector<T>& cur, std::vector<std::vector<T>>& out) {
    if (budget == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < pool.size(); ++i) {
        int sz = pool[i].node_count();
        if (sz > budget) continue;
        cur.push_back(pool[i]);
        multisets_rec(pool, i, budget - sz, cur, out);
        cur.pop_back();
    }
}

template <typename T>
void sequences_rec(const std::vector<T>& pool, int budget, std::vector<T>& cur,
                   std::vector<std::vector<T>>& out) {
    if (budget == 0) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = 0; i < pool.size(); ++i) {
        int sz = pool[i].node_count();
        if (sz > budget) continue;
        cur.push_back(pool[i]);
        sequences_rec(pool, budget - sz, cur, out);
        cur.pop_back();
    }
}

}  // namespace detail

/// All non-planar rooted trees with exactly n nodes, ascending by key.
inline std::vector<Tree> all_trees(int n) {
    if (n < 1) return {};
    std::vector<std::vector<Tree>> by_size(n + 1);
    by_size[1] = {Tree()};
    std::vector<Tree> pool;  // all trees of size < current, ordered (size, key)
    for (int size = 2; size <= n; ++size) {
        pool.clear();
        for (int s = 1; s < size; ++s)
            pool.insert(pool.end(), by_size[s].begin(), by_size[s].end());
        std::vector<std::vector<Tree>> kid_sets;
        std::vector<Tree> cur;
        detail::multisets_rec(pool, 0, size - 1, cur, kid_sets);
        for (auto& ks : kid_sets) by_size[size].emplace_back(std::move(ks));
        std::sort(by_size[size].begin(), by_size[size].end());
        by_size[size].erase(std::unique(by_size[size].begin(), by_size[size].end()),
                            by_size[size].end());
    }
    return by_size[n];
}

/// All non-planar trees with 1..n nodes, ordered by (node count, key).
inline std::vector<Tree> all_trees_up_to(int n) {
    std::vector<Tree> out;
    for (int k = 1; k <= n; ++k) {
        auto tk = all_trees(k);
        out.insert(out.end(), tk.begin(), tk.end());
    }
    return out;
}

/// All planar rooted trees with exactly n nodes (Catalan(n-1) of them),
/// ascending by key.
inline std::vector<PlanarTree> all_planar_trees(int n) {
    if (n < 1) return {};
    std::vector<std::vector<PlanarTree>> by_size(n + 1);
    by_size[1] = {PlanarTree()};
    std::vector<PlanarTree> pool;
    for (int size = 2; size <= n; ++size) {
        pool.clear();
        for (int s = 1; s < size; ++s)
            pool.insert(pool.end(), by_size[s].begin(), by_size[s].end());
        std::vector<std::vector<PlanarTree>> kid_seqs;
        std::vector<PlanarTree> cur;
        detail::sequences_rec(pool, size - 1, cur, kid_seqs);
        for (auto& ks : kid_seqs) by_size[size].emplace_back(std::move(ks));
        std::sort(by_size[size].begin(), by_size[size].end());
    }
    return by_size[n];
}

inline std::vector<PlanarTree> all_planar_trees_up_to(int n) {
    std::vector<PlanarTree> out;
    for (int k = 1; k <= n; ++k) {
        auto tk = all_planar_trees(k);
        out.insert(out.end(), tk.begin(), tk.end());
    }
    return out;
}

/// All forests with exactly n nodes total (n = 0 gives the empty forest).
inline std::vector<Forest> all_forests(int n) {
    if (n < 0) return {};
    std::vector<Tree> pool = all_trees_up_to(n);
    std::vector<std::vector<Tree>> sets;
    std::vector<Tree> cur;
    detail::multisets_rec(pool, 0, n, cur, sets);
    std::vector<Forest> out;
    out.reserve(sets.size());
    for (auto& s : sets) out.emplace_back(std::move(s));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// All words of planar trees with exactly n nodes total.
inline std::vector<OrderedForest> all_ordered_forests(int n) {
    if (n < 0) return {};
    std::vector<PlanarTree> pool = all_planar_trees_up_to(n);
    std::vector<std::vector<PlanarTree>> seqs;
    std::vector<PlanarTree> cur;
    detail::sequences_rec(pool, n, cur, seqs);
    std::vector<OrderedForest> out;
    out.reserve(seqs.size());
    for (auto& s : seqs) out.emplace_back(std::move(s));
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Left grafting of planar trees.

/// All ways to attach tau below a node of omega as that node's leftmost child;
/// one result per node of omega.  This is the generator-level product of the
/// free post-Lie algebra on planar trees.
inline std::vector<PlanarTree> graft_all(const PlanarTree& tau, const PlanarTree& omega) {
    std::vector<PlanarTree> out;
    // attach at the root of omega
    {
        std::vector<PlanarTree> kids;
        kids.reserve(omega.children().size() + 1);
        kids.push_back(tau);
        kids.insert(kids.end(), omega.children().begin(), omega.children().end());
        out.emplace_back(std::move(kids));
    }
    // attach inside the i-th child
    for (std::size_t i = 0; i < omega.children().size(); ++i) {
        for (const auto& sub : graft_all(tau, omega.children()[i])) {
            std::vector<PlanarTree> kids = omega.children();
            kids[i] = sub;
            out.emplace_back(std::move(kids));
        }
    }
    return out;
}

}  // namespace postalg
