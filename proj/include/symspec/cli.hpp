#pragma once

// Command-line driver: `symspec <group> <command> ...`.
//
// Groups and commands:
//
//   re     parse | tonfa --method thompson|pd|totd | fromnfa
//   nfa    empty | witness | member | intersect
//   t      compose | identity | functional | invert | satisfies
//   graph  expand | trim | union | concat | star | product
//   fmt    check
//
// Exit status: 0 when the command succeeds (for predicates: the property
// holds / the answer is "true"), 1 when a predicate answers "false" or a
// property is violated, 2 for any usage, parse, or validation error, which
// is reported as a one-line diagnostic on standard error.
//
// Common flags: `--alphabet <chars|#n>` (required when no input file carries
// an `@alphabet` line; when both are present they must agree), `--kind
// lang|rel` for expressions, `-o <file>` to write output to a file instead
// of standard output, `--witness` to print a violating pair.
//
// All output is deterministic: graphs are written with states renamed
// q0..qn in breadth-first discovery order, transitions sorted, and classes
// in canonical sorted form, so identical invocations produce byte-identical
// results.

#include <symspec/io.hpp>
#include <symspec/nfa.hpp>
#include <symspec/transducer.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace symspec::cli {

namespace detail {

/// Command-level misuse that is not a file-format problem (bad combination
/// of inputs, missing alphabet, unreadable file).  Reported like a parse
/// error: one line, exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Holds the notation shared by every object of one invocation.  The first
/// source wins (the `--alphabet` flag, else the first file); every later
/// file must agree, which `parse_graph_document` enforces via the fallback.
struct Session {
    std::optional<Notation> notation;

    void set_flag(const std::string& flag) {
        if (!flag.empty()) notation = Notation::parse(flag, "--alphabet", 1);
    }

    GraphDocument load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw UsageError("cannot open '" + path + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        GraphDocument doc = parse_graph_document(buf.str(), path, notation);
        if (!notation) notation = doc.notation;
        return doc;
    }

    const Notation& require() const {
        if (!notation) throw UsageError("an alphabet is required; pass --alphabet");
        return *notation;
    }
};

inline LabelledGraph<SetSpec> as_lang(const GraphDocument& doc, const std::string& path) {
    if (doc.kind == GraphKind::NfaSetSpec)
        return std::get<LabelledGraph<SetSpec>>(doc.graph);
    if (doc.kind == GraphKind::Nfa)
        return lift(std::get<LabelledGraph<Letter>>(doc.graph));
    throw UsageError("'" + path + "' is a transducer; an acceptor is required here");
}

inline LabelledGraph<PairingSpec> as_rel(const GraphDocument& doc, const std::string& path) {
    if (doc.kind == GraphKind::TransducerSetSpec)
        return std::get<LabelledGraph<PairingSpec>>(doc.graph);
    if (doc.kind == GraphKind::Transducer)
        return lift(std::get<LabelledGraph<LetterPair>>(doc.graph));
    throw UsageError("'" + path + "' is an acceptor; a transducer is required here");
}

inline bool plain_kind(const GraphDocument& doc) {
    return doc.kind == GraphKind::Nfa || doc.kind == GraphKind::Transducer;
}

/// Letter-level view of a set-labelled acceptor, when every label is the
/// eps marker or a single symbol.
inline std::optional<LabelledGraph<Letter>> to_letters(const LabelledGraph<SetSpec>& g,
                                                       const Alphabet& gamma) {
    LabelledGraph<Letter> out;
    out.add_states(g.state_count());
    for (int q : g.initial()) out.add_initial(q);
    for (int q : g.final_states()) out.add_final(q);
    for (const auto& t : g.transitions()) {
        if (t.label.is_eps()) {
            out.add_transition(t.from, std::nullopt, t.to);
        } else if (auto s = singleton_value(t.label, gamma)) {
            out.add_transition(t.from, *s, t.to);
        } else {
            return std::nullopt;
        }
    }
    return out;
}

inline std::optional<LabelledGraph<LetterPair>> to_letter_pairs(
    const LabelledGraph<PairingSpec>& g, const Alphabet& gamma) {
    LabelledGraph<LetterPair> out;
    out.add_states(g.state_count());
    for (int q : g.initial()) out.add_initial(q);
    for (int q : g.final_states()) out.add_final(q);
    for (const auto& t : g.transitions()) {
        auto single = [&](const SetSpec& f) { return singleton_value(f, gamma); };
        std::optional<LetterPair> p;
        switch (t.label.kind()) {
            case PairKind::EE:
                p = LetterPair{std::nullopt, std::nullopt};
                break;
            case PairKind::EG:
                if (auto y = single(t.label.rhs())) p = LetterPair{std::nullopt, *y};
                break;
            case PairKind::FE:
                if (auto x = single(t.label.lhs())) p = LetterPair{*x, std::nullopt};
                break;
            case PairKind::FG:
                if (auto x = single(t.label.lhs()))
                    if (auto y = single(t.label.rhs())) p = LetterPair{*x, *y};
                break;
            case PairKind::Same:
                if (auto x = single(t.label.lhs())) p = LetterPair{*x, *x};
                break;
            case PairKind::Diff:
                if (auto x = single(t.label.lhs()))
                    if (auto y = single(t.label.rhs()))
                        if (*x != *y) p = LetterPair{*x, *y};
                break;
        }
        if (!p) return std::nullopt;
        out.add_transition(t.from, *p, t.to);
    }
    return out;
}

/// Results of an operation keep the compact set-labelled kind unless every
/// input was a plain letter graph and the result is representable as one.
inline GraphDocument pack_lang(LabelledGraph<SetSpec> g, const Notation& nt,
                               bool prefer_plain) {
    if (prefer_plain)
        if (auto p = to_letters(g, nt.alphabet())) return make_document(std::move(*p), nt);
    return make_document(std::move(g), nt);
}

inline GraphDocument pack_rel(LabelledGraph<PairingSpec> g, const Notation& nt,
                              bool prefer_plain) {
    if (prefer_plain)
        if (auto p = to_letter_pairs(g, nt.alphabet()))
            return make_document(std::move(*p), nt);
    return make_document(std::move(g), nt);
}

}  // namespace detail

/// Runs one invocation.  `args` excludes the program name.  Returns the
/// process exit status; all output goes to the given streams.
inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"regular expressions, automata, and transducers with set-labelled "
                 "transitions"};
    app.name("symspec");
    app.require_subcommand(1);

    // Option storage, shared across leaves; only the parsed leaf reads them.
    std::string expr, file_a, file_b, word, out_path, alphabet_flag, prop, lang_path;
    std::string kind = "lang", method = "thompson", side = "in";
    bool witness = false;
    int rc = 0;

    auto emit = [&](const std::string& text) {
        if (out_path.empty()) {
            out << text;
        } else {
            std::ofstream f(out_path);
            if (!f) throw detail::UsageError("cannot write '" + out_path + "'");
            f << text;
        }
    };
    auto answer = [&](bool yes) {
        out << (yes ? "true" : "false") << "\n";
        return yes ? 0 : 1;
    };

    auto add_alphabet = [&](CLI::App* cmd) {
        cmd->add_option("--alphabet", alphabet_flag,
                        "alphabet as characters or #n for numeric symbols");
    };
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", out_path, "write to this file instead of stdout");
    };

    // ---- re ---------------------------------------------------------------
    auto* re = app.add_subcommand("re", "regular expressions");
    re->require_subcommand(1);

    auto* re_parse = re->add_subcommand("parse", "parse and reprint canonically");
    re_parse->add_option("expression", expr, "expression text")->required();
    re_parse->add_option("--kind", kind, "expression kind")
        ->check(CLI::IsMember({"lang", "rel"}));
    add_alphabet(re_parse);
    add_output(re_parse);
    re_parse->callback([&] {
        detail::Session s;
        s.set_flag(alphabet_flag);
        const Notation& nt = s.require();
        std::string text = kind == "rel" ? print_regex(parse_regex_rel(expr, nt), nt)
                                         : print_regex(parse_regex_lang(expr, nt), nt);
        emit(text + "\n");
        rc = 0;
    });

    auto* re_tonfa = re->add_subcommand("tonfa", "compile an expression to a graph");
    re_tonfa->add_option("expression", expr, "expression text")->required();
    re_tonfa->add_option("--method", method, "thompson, pd, or totd (relation kind)")
        ->check(CLI::IsMember({"thompson", "pd", "totd"}));
    re_tonfa->add_option("--kind", kind, "expression kind")
        ->check(CLI::IsMember({"lang", "rel"}));
    add_alphabet(re_tonfa);
    add_output(re_tonfa);
    re_tonfa->callback([&] {
        detail::Session s;
        s.set_flag(alphabet_flag);
        const Notation& nt = s.require();
        const bool relation = kind == "rel" || method == "totd";
        if (relation) {
            if (method == "pd")
                throw detail::UsageError(
                    "--method pd applies to language expressions only");
            auto g = thompson(parse_regex_rel(expr, nt));
            emit(print_graph_document(make_document(std::move(g), nt)));
        } else {
            auto r = parse_regex_lang(expr, nt);
            auto g = method == "pd" ? pd_automaton(r) : thompson(r);
            emit(print_graph_document(make_document(std::move(g), nt)));
        }
        rc = 0;
    });

    auto* re_fromnfa = re->add_subcommand("fromnfa", "graph to expression");
    re_fromnfa->add_option("file", file_a, "graph file")->required();
    add_alphabet(re_fromnfa);
    add_output(re_fromnfa);
    re_fromnfa->callback([&] {
        detail::Session s;
        s.set_flag(alphabet_flag);
        auto doc = s.load(file_a);
        const Notation& nt = s.require();
        std::string text = doc.language_kind()
                               ? print_regex(state_eliminate(detail::as_lang(doc, file_a)), nt)
                               : print_regex(state_eliminate(detail::as_rel(doc, file_a)), nt);
        emit(text + "\n");
        rc = 0;
    });

    // ---- nfa --------------------------------------------------------------
    auto* nfa = app.add_subcommand("nfa", "acceptors");
    nfa->require_subcommand(1);

    auto* nfa_empty = nfa->add_subcommand("empty", "is the language empty?");
    nfa_empty->add_option("file", file_a, "acceptor file")->required();
    add_alphabet(nfa_empty);
    nfa_empty->callback([&] {
        detail::Session s;
        s.set_flag(alphabet_flag);
        auto g = detail::as_lang(s.load(file_a), file_a);
        rc = answer(is_empty(g, s.require().alphabet()));
    });

    auto* nfa_witness = nfa->add_subcommand("witness", "print a shortest accepted word");
    nfa_witness->add_option("file", file_a, "acceptor file")->required();
    add_alphabet(nfa_witness);
    nfa_witness->callback([&] {
        detail::Session s;
        s.set_flag(alphabet_flag);
        auto g = detail::as_lang(s.load(file_a), file_a);
        const Notation& nt = s.require();
        auto w = non_empty_witness(g, nt.alphabet());
        if (w) out << nt.print_word(*w) << "\n";
        rc = w ? 0 : 1;
    });

    auto* nfa_member = nfa->add_subcommand("member", "is the word accepted?");
    nfa_member->add_option("file", file_a, "acceptor file")->required();
    nfa_member->add_option("word", word, "word (\\e for the empty word)")->required();
    add_alphabet(nfa_member);
    nfa_member->callback([&] {
        detail::Session s;
        s.set_flag(alphabet_flag);
        auto g = detail::as_lang(s.load(file_a), file_a);
        const Notation& nt = s.require();
        rc = answer(member(g, nt.parse_word(word, "word", 1), nt.alphabet()));
    });

    auto* nfa_intersect = nfa->add_subcommand("intersect", "product acceptor");
    nfa_intersect->add_option("a", file_a, "first acceptor")->required();
    nfa_intersect->add_option("b", file_b, "second acceptor")->required();
    add_alphabet(nfa_intersect);
    add_output(nfa_intersect);
    nfa_intersect->callback([&] {
        detail::Session s;
        s.set_flag(alphabet_flag);
        auto da = s.load(file_a);
        auto db = s.load(file_b);
        const Notation& nt = s.require();
        auto g = intersect(detail::as_lang(da, file_a), detail::as_lang(db, file_b),
                           nt.alphabet());
        emit(print_graph_document(detail::pack_lang(
            std::move(g), nt, detail::plain_kind(da) && detail::plain_kind(db))));
        rc = 0;
    });

    // ---- t ----------------------------------------------------------------
    auto* t = app.add_subcommand("t", "transducers");
    t->require_subcommand(1);

    auto* t_compose = t->add_subcommand("compose", "relational composition");
    t_compose->add_option("a", file_a, "first transducer")->required();
    t_compose->add_option("b", file_b, "second transducer")->required();
    add_alphabet(t_compose);
    add_output(t_compose);
    t_compose->callback([&] {
        detail::Session s;
        s.set_flag(alphabet_flag);
        auto da = s.load(file_a);
        auto db = s.load(file_b);
        const Notation& nt = s.require();
        auto g = compose(detail::as_rel(da, file_a), detail::as_rel(db, file_b),
                         nt.alphabet());
        emit(print_graph_document(detail::pack_rel(
            std::move(g), nt, detail::plain_kind(da) && detail::plain_kind(db))));
        rc = 0;
    });

    auto* t_identity = t->add_subcommand("identity", "does it realize a sub-identity?");
    t_identity->add_option("file", file_a, "transducer file")->required();
    add_alphabet(t_identity);
    t_identity->callback([&] {
        detail::Session s;
        s.set_flag(alphabet_flag);
        auto g = detail::as_rel(s.load(file_a), file_a);
        rc = answer(realizes_identity(g, s.require().alphabet()));
    });

    auto* t_functional = t->add_subcommand("functional", "is the relation a function?");
    t_functional->add_option("file", file_a, "transducer file")->required();
    add_alphabet(t_functional);
    t_functional->callback([&] {
        detail::Session s;
        s.set_flag(alphabet_flag);
        auto g = detail::as_rel(s.load(file_a), file_a);
        rc = answer(is_functional(g, s.require().alphabet()));
    });

    auto* t_invert = t->add_subcommand("invert", "swap input and output");
    t_invert->add_option("file", file_a, "transducer file")->required();
    add_alphabet(t_invert);
    add_output(t_invert);
    t_invert->callback([&] {
        detail::Session s;
        s.set_flag(alphabet_flag);
        auto d = s.load(file_a);
        const Notation& nt = s.require();
        emit(print_graph_document(detail::pack_rel(inverse(detail::as_rel(d, file_a)), nt,
                                                   detail::plain_kind(d))));
        rc = 0;
    });

    auto* t_satisfies =
        t->add_subcommand("satisfies", "does the language satisfy the property?");
    t_satisfies->add_option("--prop", prop, "px, sub2, or a transducer file")->required();
    t_satisfies->add_option("--lang", lang_path, "acceptor file")->required();
    t_satisfies->add_flag("--witness", witness, "print a violating pair");
    add_alphabet(t_satisfies);
    t_satisfies->callback([&] {
        detail::Session s;
        s.set_flag(alphabet_flag);
        LabelledGraph<PairingSpec> tr;
        if (prop == "px") tr = builtin_px();
        else if (prop == "sub2") tr = builtin_sub2();
        else tr = detail::as_rel(s.load(prop), prop);
        auto lang = detail::as_lang(s.load(lang_path), lang_path);
        const Notation& nt = s.require();
        auto w = satisfies_property(tr, lang, nt.alphabet());
        if (!w) {
            out << "holds\n";
            rc = 0;
        } else {
            if (witness)
                out << nt.print_word(w->first) << "\t" << nt.print_word(w->second) << "\n";
            else
                out << "violated\n";
            rc = 1;
        }
    });

    // ---- graph ------------------------------------------------------------
    auto* graph = app.add_subcommand("graph", "labelled-graph operations");
    graph->require_subcommand(1);

    auto* g_expand = graph->add_subcommand("expand", "replace set labels by letters");
    g_expand->add_option("file", file_a, "graph file")->required();
    add_alphabet(g_expand);
    add_output(g_expand);
    g_expand->callback([&] {
        detail::Session s;
        s.set_flag(alphabet_flag);
        auto d = s.load(file_a);
        const Notation& nt = s.require();
        GraphDocument result = d;
        if (d.kind == GraphKind::NfaSetSpec)
            result = make_document(
                expand(std::get<LabelledGraph<SetSpec>>(d.graph), nt.alphabet()), nt);
        else if (d.kind == GraphKind::TransducerSetSpec)
            result = make_document(
                expand(std::get<LabelledGraph<PairingSpec>>(d.graph), nt.alphabet()), nt);
        emit(print_graph_document(result));
        rc = 0;
    });

    auto* g_trim = graph->add_subcommand("trim", "keep only useful states");
    g_trim->add_option("file", file_a, "graph file")->required();
    add_alphabet(g_trim);
    add_output(g_trim);
    g_trim->callback([&] {
        detail::Session s;
        s.set_flag(alphabet_flag);
        auto d = s.load(file_a);
        std::visit([](auto& g) { g = trim(g); }, d.graph);
        emit(print_graph_document(d));
        rc = 0;
    });

    auto combine = [&](const std::string& name, const std::string& help, auto op) {
        auto* cmd = graph->add_subcommand(name, help);
        cmd->add_option("a", file_a, "first graph")->required();
        cmd->add_option("b", file_b, "second graph")->required();
        add_alphabet(cmd);
        add_output(cmd);
        cmd->callback([&, op] {
            detail::Session s;
            s.set_flag(alphabet_flag);
            auto da = s.load(file_a);
            auto db = s.load(file_b);
            if (da.language_kind() != db.language_kind())
                throw detail::UsageError(
                    "cannot combine an acceptor with a transducer");
            const Notation& nt = s.require();
            const bool plain = detail::plain_kind(da) && detail::plain_kind(db);
            if (da.language_kind()) {
                auto g = op(detail::as_lang(da, file_a), detail::as_lang(db, file_b));
                emit(print_graph_document(detail::pack_lang(std::move(g), nt, plain)));
            } else {
                auto g = op(detail::as_rel(da, file_a), detail::as_rel(db, file_b));
                emit(print_graph_document(detail::pack_rel(std::move(g), nt, plain)));
            }
            rc = 0;
        });
    };
    combine("union", "accept either behaviour",
            [](const auto& a, const auto& b) { return graph_union(a, b); });
    combine("concat", "concatenate behaviours",
            [](const auto& a, const auto& b) { return graph_concat(a, b); });

    auto* g_star = graph->add_subcommand("star", "iterate the behaviour");
    g_star->add_option("file", file_a, "graph file")->required();
    add_alphabet(g_star);
    add_output(g_star);
    g_star->callback([&] {
        detail::Session s;
        s.set_flag(alphabet_flag);
        auto d = s.load(file_a);
        const Notation& nt = s.require();
        const bool plain = detail::plain_kind(d);
        if (d.language_kind())
            emit(print_graph_document(
                detail::pack_lang(graph_star(detail::as_lang(d, file_a)), nt, plain)));
        else
            emit(print_graph_document(
                detail::pack_rel(graph_star(detail::as_rel(d, file_a)), nt, plain)));
        rc = 0;
    });

    auto* g_product = graph->add_subcommand(
        "product", "intersect, compose, or restrict, depending on the input kinds");
    g_product->add_option("a", file_a, "first graph")->required();
    g_product->add_option("b", file_b, "second graph")->required();
    g_product->add_option("--side", side, "for transducer x acceptor: restrict in or out")
        ->check(CLI::IsMember({"in", "out"}));
    add_alphabet(g_product);
    add_output(g_product);
    g_product->callback([&] {
        detail::Session s;
        s.set_flag(alphabet_flag);
        auto da = s.load(file_a);
        auto db = s.load(file_b);
        const Notation& nt = s.require();
        const bool plain = detail::plain_kind(da) && detail::plain_kind(db);
        if (da.language_kind() && db.language_kind()) {
            auto g = intersect(detail::as_lang(da, file_a), detail::as_lang(db, file_b),
                               nt.alphabet());
            emit(print_graph_document(detail::pack_lang(std::move(g), nt, plain)));
        } else if (!da.language_kind() && !db.language_kind()) {
            auto g = compose(detail::as_rel(da, file_a), detail::as_rel(db, file_b),
                             nt.alphabet());
            emit(print_graph_document(detail::pack_rel(std::move(g), nt, plain)));
        } else if (!da.language_kind() && db.language_kind()) {
            auto tr = detail::as_rel(da, file_a);
            auto lang = detail::as_lang(db, file_b);
            auto g = side == "in" ? restrict_input(tr, lang, nt.alphabet())
                                  : restrict_output(tr, lang, nt.alphabet());
            emit(print_graph_document(detail::pack_rel(std::move(g), nt, plain)));
        } else {
            throw detail::UsageError(
                "an acceptor cannot restrict a transducer; pass the transducer first");
        }
        rc = 0;
    });

    // ---- fmt --------------------------------------------------------------
    auto* fmt = app.add_subcommand("fmt", "file format utilities");
    fmt->require_subcommand(1);

    auto* fmt_check = fmt->add_subcommand("check", "validate and reprint canonically");
    fmt_check->add_option("file", file_a, "graph file")->required();
    add_alphabet(fmt_check);
    add_output(fmt_check);
    fmt_check->callback([&] {
        detail::Session s;
        s.set_flag(alphabet_flag);
        emit(print_graph_document(s.load(file_a)));
        rc = 0;
    });

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "symspec: " << e.what() << "\n";
        return 2;
    } catch (const symspec::ParseError& e) {
        err << "symspec: " << e.what() << "\n";
        return 2;
    } catch (const detail::UsageError& e) {
        err << "symspec: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "symspec: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

}  // namespace symspec::cli
