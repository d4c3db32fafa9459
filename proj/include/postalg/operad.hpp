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

// The pre-group of truncated power series 1 + k1 x + ... + kN x^N attached
// to the commutative operad, and a generic truncated-coinvariant operad
// interface producing the same structure from user-supplied composition maps.

#pragma once

#include <functional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "postalg/common.hpp"
#include "postalg/rational.hpp"
#include "postalg/ring.hpp"

namespace postalg {

/// A truncated series 1 + k1 x + ... + kN x^N over the ring R.  The constant
/// term is implicitly 1; coeff(n) is k_n for 1 <= n <= N.
template <Ring R>
class SeriesGroupElem {
  public:
    SeriesGroupElem(int order, const R& proto)
        : order_(order), proto_(proto.zero_like()), c_(static_cast<std::size_t>(order), proto.zero_like()) {
        if (order < 1) throw std::domain_error("series: order must be at least 1");
    }

    int order() const { return order_; }
    const R& proto() const { return proto_; }

    const R& coeff(int n) const {
        if (n < 1 || n > order_) throw std::out_of_range("series: coefficient index");
        return c_[static_cast<std::size_t>(n - 1)];
    }
    void set_coeff(int n, const R& v) {
        if (n < 1 || n > order_) throw std::out_of_range("series: coefficient index");
        c_[static_cast<std::size_t>(n - 1)] = v;
        proto_ = v.zero_like();
    }

    bool operator==(const SeriesGroupElem&) const = default;

    /// Canonical form: every coefficient printed, `1 + k1 x + k2 x^2 + ...`.
    std::string str() const {
        std::ostringstream os;
        os << "1";
        for (int n = 1; n <= order_; ++n) {
            os << " + " << coeff(n).str() << " x";
            if (n > 1) os << "^" << n;
        }
        return os.str();
    }

    /// Accepts the canonical sum form (powers 1..N in order, each exactly
    /// once) or a plain whitespace-separated coefficient list k1 ... kN.
    static SeriesGroupElem parse(const std::string& text, const R& proto) {
        std::string body(detail::trim(text));
        if (body.empty()) throw ParseError(1, "empty series");
        if (body == "1") throw ParseError(1, "series needs at least one coefficient");
        if (body.rfind("1 + ", 0) == 0) return parse_sum(body, proto);
        auto toks = detail::split_ws(body);
        SeriesGroupElem out(static_cast<int>(toks.size()), proto);
        for (std::size_t i = 0; i < toks.size(); ++i) {
            try {
                out.set_coeff(static_cast<int>(i + 1), parse_like(proto, toks[i]));
            } catch (const std::exception&) {
                throw ParseError(1, "bad coefficient '" + toks[i] + "'");
            }
        }
        return out;
    }

  private:
    static SeriesGroupElem parse_sum(const std::string& body, const R& proto) {
        std::vector<std::string> terms;
        std::size_t start = 0;
        for (std::size_t i = 0; i + 2 < body.size(); ++i) {
            if (body.compare(i, 3, " + ") == 0) {
                terms.push_back(body.substr(start, i - start));
                start = i + 3;
            }
        }
        terms.push_back(body.substr(start));
        // terms[0] is the constant 1, terms[n] must be `<coeff> x^n`.
        int order = static_cast<int>(terms.size()) - 1;
        SeriesGroupElem out(order, proto);
        for (int n = 1; n <= order; ++n) {
            std::string term = terms[static_cast<std::size_t>(n)];
            std::string suffix = n == 1 ? " x" : " x^" + std::to_string(n);
            if (term.size() <= suffix.size() ||
                term.compare(term.size() - suffix.size(), suffix.size(), suffix) != 0)
                throw ParseError(1, "expected term in x^" + std::to_string(n) + ", got '" + term + "'");
            std::string val = term.substr(0, term.size() - suffix.size());
            try {
                out.set_coeff(n, parse_like(proto, val));
            } catch (const std::exception&) {
                throw ParseError(1, "bad coefficient '" + val + "'");
            }
        }
        return out;
    }

    int order_;
    R proto_;
    std::vector<R> c_;
};

template <Ring R>
SeriesGroupElem<R> com_identity(int order, const R& proto) {
    return SeriesGroupElem<R>(order, proto);
}

namespace detail {

template <Ring R>
void check_same_order(const SeriesGroupElem<R>& a, const SeriesGroupElem<R>& b) {
    if (a.order() != b.order()) throw std::invalid_argument("series: mixed truncation orders");
}

// sum over compositions t1+...+ts = total, t_i >= 0, of k_{t1}...k_{ts},
// with k_0 = 1.
template <Ring R>
R com_comp_sum(const SeriesGroupElem<R>& a, int slots, int total, const R& one) {
    if (slots == 0) return total == 0 ? one : one.zero_like();
    R sum = one.zero_like();
    for (int t = 0; t <= total; ++t) {
        R factor = t == 0 ? one : a.coeff(t);
        if (factor.is_zero()) continue;
        sum = sum + factor * com_comp_sum(a, slots - 1, total - t, one);
    }
    return sum;
}

// All vectors (t_1..t_parts) with t_i >= 1 and sum == total.
inline std::vector<std::vector<int>> compositions_exact(int parts, int total) {
    std::vector<std::vector<int>> out;
    if (parts < 1 || total < parts) return out;
    std::vector<int> cur(static_cast<std::size_t>(parts), 1);
    std::function<void(int, int)> go = [&](int slot, int remaining) {
        if (slot == parts - 1) {
            cur[static_cast<std::size_t>(slot)] = remaining;
            out.push_back(cur);
            return;
        }
        for (int t = 1; t <= remaining - (parts - 1 - slot); ++t) {
            cur[static_cast<std::size_t>(slot)] = t;
            go(slot + 1, remaining - t);
        }
    };
    go(0, total);
    return out;
}

}  // namespace detail

/// Pointwise product (1+sum k_n x^n).(1+sum l_n x^n) = 1+sum (k_n+l_n) x^n.
template <Ring R>
SeriesGroupElem<R> com_dot(const SeriesGroupElem<R>& a, const SeriesGroupElem<R>& b) {
    detail::check_same_order(a, b);
    SeriesGroupElem<R> out = a;
    for (int n = 1; n <= a.order(); ++n) out.set_coeff(n, a.coeff(n) + b.coeff(n));
    return out;
}

/// Dot-inverse: negate every coefficient.
template <Ring R>
SeriesGroupElem<R> com_neg(const SeriesGroupElem<R>& a) {
    SeriesGroupElem<R> out = a;
    for (int n = 1; n <= a.order(); ++n) out.set_coeff(n, -a.coeff(n));
    return out;
}

/// (a rhd b)_n = sum_{s=2}^{n+1} sum_{t1+...+ts = n+1-s} l_{s-1} k_{t1}...k_{ts}
/// with k_0 = 1 and t_i >= 0.
template <Ring R>
SeriesGroupElem<R> com_rhd(const SeriesGroupElem<R>& a, const SeriesGroupElem<R>& b) {
    detail::check_same_order(a, b);
    int order = a.order();
    R one = a.proto().one_like();
    SeriesGroupElem<R> out(order, a.proto());
    for (int n = 1; n <= order; ++n) {
        R sum = a.proto().zero_like();
        for (int s = 2; s <= n + 1; ++s)
            sum = sum + b.coeff(s - 1) * detail::com_comp_sum(a, s, n + 1 - s, one);
        out.set_coeff(n, sum);
    }
    return out;
}

/// The substitution-style group product, the same double sum started at
/// s = 1.  Equals com_dot(a, com_rhd(a, b)).
template <Ring R>
SeriesGroupElem<R> com_circ(const SeriesGroupElem<R>& a, const SeriesGroupElem<R>& b) {
    detail::check_same_order(a, b);
    int order = a.order();
    R one = a.proto().one_like();
    SeriesGroupElem<R> out(order, a.proto());
    for (int n = 1; n <= order; ++n) {
        R sum = a.proto().zero_like();
        for (int s = 1; s <= n + 1; ++s) {
            R factor = s == 1 ? one : b.coeff(s - 1);
            if (factor.is_zero()) continue;
            sum = sum + factor * detail::com_comp_sum(a, s, n + 1 - s, one);
        }
        out.set_coeff(n, sum);
    }
    return out;
}

/// A tuple (a_2, ..., a_N) of coinvariant coordinate vectors, one per arity;
/// the arity-1 component is implicitly the operad identity.
class OperadTuple {
  public:
    OperadTuple(int max_arity, std::vector<std::vector<Rational>> comps)
        : max_arity_(max_arity), comps_(std::move(comps)) {
        if (max_arity < 2 || static_cast<int>(comps_.size()) != max_arity - 1)
            throw std::invalid_argument("operad tuple: need components for arities 2..N");
    }

    int max_arity() const { return max_arity_; }

    const std::vector<Rational>& comp(int arity) const {
        if (arity < 2 || arity > max_arity_) throw std::out_of_range("operad tuple: arity");
        return comps_[static_cast<std::size_t>(arity - 2)];
    }
    void set_comp(int arity, std::vector<Rational> v) {
        if (arity < 2 || arity > max_arity_) throw std::out_of_range("operad tuple: arity");
        comps_[static_cast<std::size_t>(arity - 2)] = std::move(v);
    }

    bool operator==(const OperadTuple&) const = default;

  private:
    int max_arity_;
    std::vector<std::vector<Rational>> comps_;
};

/// A truncated operad presented through its coinvariant spaces: a dimension
/// for every arity 2..N (arity 1 is spanned by the identity) and the induced
/// composition  gamma(top; args) -> coordinates in arity sum(ts).
///
/// The gamma callback receives the arity of the top element, the arities of
/// the arguments, the coordinates of the top element, and the coordinates of
/// each argument; the arity-1 identity is passed as the vector {1}.
class TruncatedOperad {
  public:
    using Gamma = std::function<std::vector<Rational>(
        int k, const std::vector<int>& ts, const std::vector<Rational>& top,
        const std::vector<std::vector<Rational>>& args)>;

    TruncatedOperad(int max_arity, std::vector<int> dims, Gamma gamma)
        : max_arity_(max_arity), dims_(std::move(dims)), gamma_(std::move(gamma)) {
        if (max_arity_ < 2 || static_cast<int>(dims_.size()) != max_arity_ - 1)
            throw std::invalid_argument("operad: need dimensions for arities 2..N");
        for (int d : dims_)
            if (d < 1) throw std::invalid_argument("operad: dimensions must be positive");
    }

    int max_arity() const { return max_arity_; }

    int dim(int arity) const {
        if (arity == 1) return 1;
        if (arity < 1 || arity > max_arity_) throw std::out_of_range("operad: arity");
        return dims_[static_cast<std::size_t>(arity - 2)];
    }

    std::vector<Rational> compose(int k, const std::vector<int>& ts,
                                  const std::vector<Rational>& top,
                                  const std::vector<std::vector<Rational>>& args) const {
        auto out = gamma_(k, ts, top, args);
        int n = 0;
        for (int t : ts) n += t;
        if (static_cast<int>(out.size()) != dim(n))
            throw std::domain_error("operad: gamma returned the wrong dimension");
        return out;
    }

    /// Unitality on every basis vector, and associativity of composition on
    /// every two-level nesting whose overall arity stays in range, with all
    /// slots ranging over basis vectors.
    VerificationReport verify() const {
        VerificationReport rep;
        const std::vector<Rational> id{Rational(1)};
        for (int n = 2; n <= max_arity_; ++n)
            for (int i = 0; i < dim(n); ++i) {
                std::vector<Rational> e = basis(n, i);
                rep.require(compose(1, {n}, id, {e}) == e,
                            "gamma(id; a) != a at arity " + std::to_string(n));
                rep.require(compose(n, std::vector<int>(static_cast<std::size_t>(n), 1), e,
                                    std::vector<std::vector<Rational>>(static_cast<std::size_t>(n),
                                                                       id)) == e,
                            "gamma(a; id...id) != a at arity " + std::to_string(n));
            }
        for (int k = 2; k <= max_arity_; ++k)
            for (int m = k; m <= max_arity_; ++m)
                for (const auto& ts : detail::compositions_exact(k, m))
                    for (int n = m; n <= max_arity_; ++n)
                        for (const auto& us : detail::compositions_exact(m, n))
                            check_associativity(rep, k, ts, us);
        return rep;
    }

  private:
    std::vector<Rational> basis(int arity, int i) const {
        std::vector<Rational> e(static_cast<std::size_t>(dim(arity)));
        e[static_cast<std::size_t>(i)] = Rational(1);
        return e;
    }

    // Checks gamma(gamma(c; b_1..b_k); a_1..a_m) = gamma(c; gamma(b_i; block_i))
    // where block_i takes the next ts[i] entries of the a's, over every
    // assignment of basis vectors to the slots.
    void check_associativity(VerificationReport& rep, int k, const std::vector<int>& ts,
                             const std::vector<int>& us) const {
        const std::vector<Rational> id{Rational(1)};
        int m = static_cast<int>(us.size());
        // Slot dimensions: c, then b_1..b_k, then a_1..a_m.
        std::vector<int> slot_dims{dim(k)};
        for (int t : ts) slot_dims.push_back(dim(t));
        for (int u : us) slot_dims.push_back(dim(u));
        std::vector<int> pick(slot_dims.size(), 0);
        while (true) {
            std::vector<Rational> c = basis(k, pick[0]);
            std::vector<std::vector<Rational>> bs, as;
            for (int i = 0; i < k; ++i)
                bs.push_back(ts[static_cast<std::size_t>(i)] == 1
                                 ? id
                                 : basis(ts[static_cast<std::size_t>(i)], pick[static_cast<std::size_t>(1 + i)]));
            for (int j = 0; j < m; ++j)
                as.push_back(us[static_cast<std::size_t>(j)] == 1
                                 ? id
                                 : basis(us[static_cast<std::size_t>(j)],
                                         pick[static_cast<std::size_t>(1 + k + j)]));

            std::vector<Rational> inner = compose(k, ts, c, bs);
            std::vector<Rational> lhs = compose(m, us, inner, as);

            std::vector<std::vector<Rational>> blocks;
            std::vector<int> block_arities;
            std::size_t off = 0;
            for (int i = 0; i < k; ++i) {
                int width = ts[static_cast<std::size_t>(i)];
                std::vector<int> sub(us.begin() + static_cast<std::ptrdiff_t>(off),
                                     us.begin() + static_cast<std::ptrdiff_t>(off) + width);
                std::vector<std::vector<Rational>> part(
                    as.begin() + static_cast<std::ptrdiff_t>(off),
                    as.begin() + static_cast<std::ptrdiff_t>(off) + width);
                off += static_cast<std::size_t>(width);
                int bn = 0;
                for (int v : sub) bn += v;
                blocks.push_back(compose(width, sub, bs[static_cast<std::size_t>(i)], part));
                block_arities.push_back(bn);
            }
            std::vector<Rational> rhs = compose(k, block_arities, c, blocks);

            rep.count();
            if (lhs != rhs) {
                std::ostringstream os;
                os << "operad associativity fails at top arity " << k << ", split (";
                for (std::size_t i = 0; i < ts.size(); ++i) os << (i ? "," : "") << ts[i];
                os << ")";
                rep.violations.push_back(os.str());
            }

            std::size_t s = 0;
            while (s < pick.size()) {
                if (++pick[s] < slot_dims[s]) break;
                pick[s++] = 0;
            }
            if (s == pick.size()) break;
        }
    }

    int max_arity_;
    std::vector<int> dims_;
    Gamma gamma_;
};

/// The commutative operad: every coinvariant space is one-dimensional and
/// composition multiplies coordinates.
inline TruncatedOperad com_operad(int max_arity) {
    std::vector<int> dims(static_cast<std::size_t>(max_arity - 1), 1);
    return TruncatedOperad(
        max_arity, std::move(dims),
        [](int, const std::vector<int>&, const std::vector<Rational>& top,
           const std::vector<std::vector<Rational>>& args) {
            Rational prod = top[0];
            for (const auto& a : args) prod *= a[0];
            return std::vector<Rational>{prod};
        });
}

/// The pre-group on coinvariant tuples:
///   (a rhd b)_n = sum_{k=2}^{n} sum_{t1+...+tk = n, t_i >= 1}
///                 gamma(b_k; a_{t1}, ..., a_{tk}),
/// dot the componentwise sum, circ the same double sum started at k = 1.
/// Construction fails if the operad fails its axiom check.
class OperadPreGroup {
  public:
    explicit OperadPreGroup(TruncatedOperad op) : op_(std::move(op)) {
        if (!op_.verify().ok()) throw std::domain_error("operad pre-group: operad axioms fail");
    }

    const TruncatedOperad& operad() const { return op_; }

    OperadTuple identity() const {
        std::vector<std::vector<Rational>> comps;
        for (int n = 2; n <= op_.max_arity(); ++n)
            comps.push_back(std::vector<Rational>(static_cast<std::size_t>(op_.dim(n))));
        return OperadTuple(op_.max_arity(), std::move(comps));
    }

    OperadTuple dot(const OperadTuple& a, const OperadTuple& b) const {
        check(a);
        check(b);
        OperadTuple out = a;
        for (int n = 2; n <= op_.max_arity(); ++n) {
            std::vector<Rational> v = a.comp(n);
            for (std::size_t i = 0; i < v.size(); ++i) v[i] += b.comp(n)[i];
            out.set_comp(n, std::move(v));
        }
        return out;
    }

    OperadTuple neg(const OperadTuple& a) const {
        check(a);
        OperadTuple out = a;
        for (int n = 2; n <= op_.max_arity(); ++n) {
            std::vector<Rational> v = a.comp(n);
            for (auto& x : v) x = -x;
            out.set_comp(n, std::move(v));
        }
        return out;
    }

    OperadTuple rhd(const OperadTuple& a, const OperadTuple& b) const { return sum_from(a, b, 2); }

    OperadTuple circ(const OperadTuple& a, const OperadTuple& b) const { return sum_from(a, b, 1); }

  private:
    void check(const OperadTuple& t) const {
        if (t.max_arity() != op_.max_arity())
            throw std::invalid_argument("operad pre-group: tuple arity mismatch");
        for (int n = 2; n <= op_.max_arity(); ++n)
            if (static_cast<int>(t.comp(n).size()) != op_.dim(n))
                throw std::invalid_argument("operad pre-group: tuple dimension mismatch");
    }

    OperadTuple sum_from(const OperadTuple& a, const OperadTuple& b, int k_min) const {
        check(a);
        check(b);
        static const std::vector<Rational> id{Rational(1)};
        OperadTuple out = identity();
        for (int n = 2; n <= op_.max_arity(); ++n) {
            std::vector<Rational> acc(static_cast<std::size_t>(op_.dim(n)));
            for (int k = k_min; k <= n; ++k)
                for (const auto& ts : detail::compositions_exact(k, n)) {
                    const std::vector<Rational>& top = k == 1 ? id : b.comp(k);
                    std::vector<std::vector<Rational>> args;
                    args.reserve(ts.size());
                    for (int t : ts) args.push_back(t == 1 ? id : a.comp(t));
                    auto term = op_.compose(k, ts, top, args);
                    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += term[i];
                }
            out.set_comp(n, std::move(acc));
        }
        return out;
    }

    TruncatedOperad op_;
};

}  // namespace postalg
