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

// Batch command-line front end.  Every subcommand reads the plain-text
// formats owned by the library headers and writes canonically ordered plain
// text, so fixed inputs always produce byte-identical output.  Exit codes:
// 0 on success, 1 when a verification subcommand finds violations, 2 on
// usage errors or malformed inputs (file parse errors carry the offending
// line number).  The environment variable POSTALG_MAX_GRADE lowers the
// truncation grade available to the postlie subcommands.

#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "postalg/bck.hpp"
#include "postalg/braces.hpp"
#include "postalg/butcher.hpp"
#include "postalg/common.hpp"
#include "postalg/operad.hpp"
#include "postalg/postgroup.hpp"
#include "postalg/postlie.hpp"
#include "postalg/prime_field.hpp"
#include "postalg/rational.hpp"
#include "postalg/trees.hpp"
#include "postalg/ybe.hpp"

namespace postalg {

namespace detail {

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error(path + ": cannot open file");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Wraps a text parser so parse errors carry the file name in front of the
// 1-based line number.
template <class Fn>
auto parse_file(const std::string& path, Fn&& fn) {
    const std::string text = read_text_file(path);
    try {
        return fn(text);
    } catch (const ParseError& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
}

// POSTALG_MAX_GRADE caps the truncation grade of the postlie subcommands;
// unset or larger than the library maximum means the library maximum.
inline int grade_cap_from_env() {
    const char* env = std::getenv("POSTALG_MAX_GRADE");
    if (env == nullptr) return kMaxLieGrade;
    const std::string text(env);
    std::size_t used = 0;
    int cap = 0;
    try {
        cap = std::stoi(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used != text.size() || cap < 1)
        throw std::runtime_error("POSTALG_MAX_GRADE: bad value '" + text + "'");
    return std::min(cap, kMaxLieGrade);
}

inline int print_report(std::ostream& out, const std::string& label,
                        const VerificationReport& rep, bool verbose) {
    out << rep.summary(label) << "\n";
    if (verbose)
        for (const auto& v : rep.violations) out << v << "\n";
    return rep.ok() ? 0 : 1;
}

// Shared body of the butcher subcommands, one instantiation per ring.
template <Ring R>
void character_command(std::ostream& out, const std::string& op, const std::string& path_a,
                       const std::string& path_b, Character<R> (*parse)(const std::string&)) {
    auto load = [parse](const std::string& path) {
        try {
            return parse(read_text_file(path));
        } catch (const ParseError& e) {
            throw std::runtime_error(path + ": " + e.what());
        }
    };
    const Character<R> a = load(path_a);
    if (op == "inv") {
        out << character_str(char_inverse_circ(a));
        return;
    }
    const Character<R> b = load(path_b);
    if (op == "dot")
        out << character_str(char_dot(a, b));
    else if (op == "rhd")
        out << character_str(char_rhd(a, b));
    else
        out << character_str(char_compose(a, b));
}

}  // namespace detail

/// Runs the command line given by `args` (without the program name), writing
/// results to `out` and diagnostics to `err`.  Returns the process exit
/// code: 0 success, 1 verification failure, 2 usage or parse error.
inline int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact computer algebra for post-groups, skew braces, Butcher characters, "
                 "Yang-Baxter maps and free post-Lie algebras",
                 "postalg"};
    int rc = 0;
    try {
        const int grade_cap = detail::grade_cap_from_env();
        app.require_subcommand(1);

        // trees -----------------------------------------------------------
        auto* trees = app.add_subcommand("trees", "rooted-tree enumeration");
        trees->require_subcommand(1);
        auto* trees_enum =
            trees->add_subcommand("enum", "list every tree with the given node count");
        int enum_nodes = 1;
        bool enum_planar = false;
        trees_enum->add_option("--nodes", enum_nodes, "number of nodes")
            ->required()
            ->check(CLI::Range(1, 10));
        trees_enum->add_flag("--planar", enum_planar, "planar rooted trees (ordered children)");
        trees_enum->callback([&] {
            if (enum_planar)
                for (const auto& t : all_planar_trees(enum_nodes)) out << t.key() << "\n";
            else
                for (const auto& t : all_trees(enum_nodes)) out << t.key() << "\n";
        });

        // hopf ------------------------------------------------------------
        auto* hopf = app.add_subcommand("hopf", "the Hopf algebra of rooted forests");
        hopf->require_subcommand(1);
        std::string hopf_forest;
        auto* hopf_cop =
            hopf->add_subcommand("coproduct", "admissible-cut coproduct of a forest");
        hopf_cop->add_option("forest", hopf_forest, "forest in bracket notation")->required();
        hopf_cop->callback([&] {
            const BCKTensor2 d = coproduct(Forest::parse(hopf_forest));
            const std::vector<std::string> lines = d.lines();
            for (const auto& line : lines) out << line << "\n";
        });
        auto* hopf_anti = hopf->add_subcommand("antipode", "antipode of a forest");
        hopf_anti->add_option("forest", hopf_forest, "forest in bracket notation")->required();
        hopf_anti->callback([&] {
            const BCKElement s = antipode(Forest::parse(hopf_forest));
            const std::vector<std::string> lines = s.lines();
            for (const auto& line : lines) out << line << "\n";
        });

        // butcher ---------------------------------------------------------
        auto* butcher =
            app.add_subcommand("butcher", "truncated Butcher characters (ring Q or Fp)");
        butcher->require_subcommand(1);
        std::string char_a, char_b;
        auto run_characters = [&out, &char_a, &char_b](const std::string& op) {
            bool rational = true;
            {
                const std::string text = detail::read_text_file(char_a);
                auto lines = detail::split_on(text, '\n');
                std::size_t pos = 0;
                try {
                    rational = detail::parse_character_header(lines, &pos).rational;
                } catch (const ParseError& e) {
                    throw std::runtime_error(char_a + ": " + e.what());
                }
            }
            if (rational)
                detail::character_command<Rational>(out, op, char_a, char_b, &parse_character_q);
            else
                detail::character_command<PrimeField>(out, op, char_a, char_b,
                                                      &parse_character_fp);
        };
        const std::pair<const char*, const char*> binary_ops[] = {
            {"dot", "pointwise sum a(w) + b(w)"},
            {"rhd", "the grafting action (a rhd b)(w)"},
            {"compose", "sub-adjacent product a o b = a.(a rhd b)"},
        };
        for (const auto& [name, help] : binary_ops) {
            auto* sub = butcher->add_subcommand(name, help);
            sub->add_option("--a", char_a, "left character file")->required();
            sub->add_option("--b", char_b, "right character file")->required();
            sub->callback([&run_characters, name] { run_characters(name); });
        }
        auto* butcher_inv = butcher->add_subcommand("inv", "inverse for the o product");
        butcher_inv->add_option("--a", char_a, "character file")->required();
        butcher_inv->callback([&run_characters] { run_characters("inv"); });

        // verify ----------------------------------------------------------
        auto* verify = app.add_subcommand("verify", "exhaustive axiom checks on table files");
        verify->require_subcommand(1);
        std::string verify_table;
        bool verify_verbose = false;
        auto add_table = [&](CLI::App* sub) {
            sub->add_option("--table", verify_table, "input table file")->required();
            sub->add_flag("--verbose", verify_verbose, "print one line per violation");
        };
        auto* v_postgroup = verify->add_subcommand("postgroup", "post-group axioms");
        add_table(v_postgroup);
        v_postgroup->callback([&] {
            const PostGroupTable t = detail::parse_file(
                verify_table, [](const std::string& s) { return PostGroupTable::parse(s); });
            rc = detail::print_report(out, "postgroup", t.verify(), verify_verbose);
        });
        auto* v_brace = verify->add_subcommand("brace", "skew-brace axioms");
        add_table(v_brace);
        v_brace->callback([&] {
            const BraceTable b = detail::parse_file(
                verify_table, [](const std::string& s) { return BraceTable::parse(s); });
            rc = detail::print_report(out, "brace", b.verify(), verify_verbose);
        });
        auto* v_mp = verify->add_subcommand("matched-pair", "matched-pair conditions MG-1..MG-6");
        add_table(v_mp);
        v_mp->callback([&] {
            const MatchedPair mp = detail::parse_file(
                verify_table, [](const std::string& s) { return MatchedPair::parse(s); });
            rc = detail::print_report(out, "matched-pair", mp.verify(), verify_verbose);
        });
        auto* v_rb = verify->add_subcommand("rb", "relative Rota-Baxter identity");
        add_table(v_rb);
        v_rb->callback([&] {
            const RBOperator op = detail::parse_file(
                verify_table, [](const std::string& s) { return RBOperator::parse(s); });
            rc = detail::print_report(out, "rota-baxter", op.verify(), verify_verbose);
        });
        auto* v_ybe = verify->add_subcommand(
            "ybe", "braid relation and bijectivity of an R-map; reports R^2=Id and degeneracy");
        add_table(v_ybe);
        v_ybe->callback([&] {
            const RMap r = detail::parse_file(
                verify_table, [](const std::string& s) { return RMap::parse(s); });
            const VerificationReport rep = r.verify_braid();
            const bool bijective = r.is_bijective();
            const std::size_t n = static_cast<std::size_t>(r.size());
            const std::size_t triples = n * n * n;
            // verify_braid records bijectivity as its own check; the braid
            // line counts the triples alone.
            const std::size_t bad = rep.violations.size() - (bijective ? 0 : 1);
            out << "braid: " << (triples - bad) << "/" << triples << " pass";
            if (r.is_involutive()) out << ", R^2=Id";
            out << "\n";
            out << "bijective: " << (bijective ? "yes" : "no") << "\n";
            out << "nondegenerate: " << (r.verify_nondegenerate() ? "yes" : "no") << "\n";
            if (verify_verbose)
                for (const auto& v : rep.violations) out << v << "\n";
            rc = rep.ok() ? 0 : 1;
        });

        // brace -----------------------------------------------------------
        auto* brace = app.add_subcommand("brace", "skew-brace constructions");
        brace->require_subcommand(1);
        auto* brace_convert = brace->add_subcommand(
            "convert", "turn a post-group table into a brace, or a brace into a post-group");
        std::string convert_table, convert_from;
        brace_convert->add_option("--table", convert_table, "input table file")->required();
        brace_convert->add_option("--from", convert_from, "input kind")
            ->required()
            ->check(CLI::IsMember({"postgroup", "brace"}));
        brace_convert->callback([&] {
            if (convert_from == "postgroup") {
                const PostGroupTable t = detail::parse_file(
                    convert_table, [](const std::string& s) { return PostGroupTable::parse(s); });
                out << postgroup_to_brace(t).str();
            } else {
                const BraceTable b = detail::parse_file(
                    convert_table, [](const std::string& s) { return BraceTable::parse(s); });
                out << brace_to_postgroup(b).str();
            }
        });
        auto* brace_enum = brace->add_subcommand("enum", "list every brace of a given order");
        int brace_order = 1;
        brace_enum->add_option("--order", brace_order, "carrier size")
            ->required()
            ->check(CLI::Range(1, 8));
        brace_enum->callback([&] {
            const std::vector<BraceTable> found = enumerate_braces(brace_order);
            out << "count: " << found.size() << "\n";
            for (const auto& b : found) out << "\n" << b.str();
        });

        // operad ----------------------------------------------------------
        auto* operad = app.add_subcommand("operad", "operadic pre-groups");
        operad->require_subcommand(1);
        auto* operad_com = operad->add_subcommand(
            "com", "the pre-group of the commutative operad on coefficient series");
        std::string com_op, com_a, com_b;
        operad_com->add_option("--op", com_op, "operation")
            ->required()
            ->check(CLI::IsMember({"dot", "neg", "rhd", "circ"}));
        operad_com->add_option("a", com_a, "series, `1 + k1 x + k2 x^2 + ...` or `k1 k2 ...`")
            ->required();
        operad_com->add_option("b", com_b, "second series (binary operations only)");
        operad_com->callback([&] {
            const Rational proto;
            const SeriesGroupElem<Rational> a = SeriesGroupElem<Rational>::parse(com_a, proto);
            if (com_op == "neg") {
                if (!com_b.empty()) throw std::runtime_error("neg takes a single series");
                out << com_neg(a).str() << "\n";
                return;
            }
            if (com_b.empty()) throw std::runtime_error(com_op + " needs two series");
            const SeriesGroupElem<Rational> b = SeriesGroupElem<Rational>::parse(com_b, proto);
            if (com_op == "dot")
                out << com_dot(a, b).str() << "\n";
            else if (com_op == "rhd")
                out << com_rhd(a, b).str() << "\n";
            else
                out << com_circ(a, b).str() << "\n";
        });

        // postlie ---------------------------------------------------------
        auto* postlie =
            app.add_subcommand("postlie", "the free post-Lie algebra on one generator, over Q");
        postlie->require_subcommand(1);
        std::string pl_x, pl_y, pl_product = "dot";
        int pl_grade = std::min(kDefaultLieGrade, grade_cap);
        bool pl_inverse = false;
        auto load_elem = [&pl_grade](const std::string& path) {
            return detail::parse_file(path, [&pl_grade](const std::string& text) {
                return GradedElement<Rational>::parse(pl_grade, Rational(), text);
            });
        };
        auto emit = [&out](const GradedElement<Rational>& r) {
            const std::string text = r.str();
            if (!text.empty()) out << text << "\n";
        };
        auto add_grade = [&pl_grade, grade_cap](CLI::App* sub) {
            sub->add_option("--grade", pl_grade, "truncation grade")
                ->check(CLI::Range(1, grade_cap))
                ->capture_default_str();
        };
        auto add_x = [&pl_x](CLI::App* sub) {
            sub->add_option("--x", pl_x, "element file, `<value> <word>` lines")->required();
        };
        auto add_y = [&pl_y](CLI::App* sub) {
            sub->add_option("--y", pl_y, "element file, `<value> <word>` lines")->required();
        };

        auto* pl_graft = postlie->add_subcommand("graft", "left grafting x rhd y on trees");
        add_x(pl_graft);
        add_y(pl_graft);
        add_grade(pl_graft);
        pl_graft->callback([&] {
            const PostLie<Rational> engine(pl_grade, Rational());
            emit(engine.graft(load_elem(pl_x), load_elem(pl_y)));
        });

        auto* pl_gl = postlie->add_subcommand(
            "gl", "Grossman-Larson product x * y = sum x1 . (x2 rhd y)");
        add_x(pl_gl);
        add_y(pl_gl);
        add_grade(pl_gl);
        pl_gl->callback([&] {
            const PostLie<Rational> engine(pl_grade, Rational());
            emit(engine.gl_product(load_elem(pl_x), load_elem(pl_y)));
        });

        auto* pl_exp = postlie->add_subcommand("exp", "truncated exponential series");
        add_x(pl_exp);
        add_grade(pl_exp);
        pl_exp->add_option("--product", pl_product, "dot or gl")
            ->check(CLI::IsMember({"dot", "gl"}))
            ->capture_default_str();
        pl_exp->callback([&] {
            const GradedElement<Rational> x = load_elem(pl_x);
            if (pl_product == "dot") {
                emit(exp_dot(x));
            } else {
                const PostLie<Rational> engine(pl_grade, Rational());
                emit(engine.exp_gl(x));
            }
        });

        auto* pl_log = postlie->add_subcommand("log", "truncated logarithm series");
        add_x(pl_log);
        add_grade(pl_log);
        pl_log->add_option("--product", pl_product, "dot or gl")
            ->check(CLI::IsMember({"dot", "gl"}))
            ->capture_default_str();
        pl_log->callback([&] {
            const GradedElement<Rational> x = load_elem(pl_x);
            if (pl_product == "dot") {
                emit(log_dot(x));
            } else {
                const PostLie<Rational> engine(pl_grade, Rational());
                emit(engine.log_gl(x));
            }
        });

        auto* pl_bch = postlie->add_subcommand(
            "bch", "Baker-Campbell-Hausdorff series of two primitive elements");
        add_x(pl_bch);
        add_y(pl_bch);
        add_grade(pl_bch);
        pl_bch->callback([&] { emit(bch(load_elem(pl_x), load_elem(pl_y))); });

        auto* pl_magnus =
            postlie->add_subcommand("magnus", "post-Lie Magnus expansion of a primitive element");
        add_x(pl_magnus);
        add_grade(pl_magnus);
        pl_magnus->add_flag("--inverse", pl_inverse, "inverse Magnus expansion");
        pl_magnus->callback([&] {
            const PostLie<Rational> engine(pl_grade, Rational());
            const GradedElement<Rational> x = load_elem(pl_x);
            emit(pl_inverse ? engine.magnus_inverse(x) : engine.magnus(x));
        });

        auto* pl_integrate = postlie->add_subcommand(
            "integrate", "formal integration x rhd y of the induced post-group");
        add_x(pl_integrate);
        add_y(pl_integrate);
        add_grade(pl_integrate);
        pl_integrate->callback([&] {
            const PostLie<Rational> engine(pl_grade, Rational());
            emit(engine.integrate_rhd(load_elem(pl_x), load_elem(pl_y)));
        });

        auto* pl_lb = postlie->add_subcommand(
            "lb-product", "Lie-Butcher product of the induced post-group");
        add_x(pl_lb);
        add_y(pl_lb);
        add_grade(pl_lb);
        pl_lb->callback([&] {
            const PostLie<Rational> engine(pl_grade, Rational());
            emit(engine.lb_product(load_elem(pl_x), load_elem(pl_y)));
        });

        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        return rc;
    } catch (const CLI::ParseError& e) {
        // CLI11 prints help requests to `out` (exit code 0) and usage
        // diagnostics to `err`.
        return app.exit(e, out, err) == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        err << "postalg: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace postalg
