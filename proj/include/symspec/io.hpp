#pragma once

// Text formats: symbol notation, label tokens, expressions, and graph files.
//
// Two notations for symbols exist, fixed by how the alphabet is written:
//
//   * character mode — the alphabet is a string of distinct printable
//     characters (e.g. `01` or `abc`); each character is one symbol and
//     words are written by juxtaposition;
//   * numeric mode — `#n` denotes the symbols 0..n-1, written as decimal
//     numbers; words and class contents separate symbols with commas.
//
// The empty word is always written `\e`.  Metacharacters are reserved and
// can never be alphabet symbols.
//
// Graph files:
//
//   @type nfa|nfa-setspec|transducer|transducer-setspec
//   @alphabet <chars or #n>
//   @initial <state> ...
//   @final <state> ...
//   <src> <label> <dst>
//
// States are named by whitespace-free identifiers; lines whose first
// non-blank character is `#` are comments.  Written files renumber states
// q0..qn in breadth-first discovery order from the initial states, so equal
// invocations produce byte-identical output.  Reading a written file back
// always yields a structurally equal graph; when every mentioned state is
// reachable from an initial state (true for everything the library
// constructs) the written form is additionally a fixed point of
// parse-then-print.

#include <symspec/alphabet.hpp>
#include <symspec/graph.hpp>
#include <symspec/pairspec.hpp>
#include <symspec/regex.hpp>
#include <symspec/setspec.hpp>

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <deque>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace symspec {

/// Malformed text.  `what()` reads `<source>:<line>: <message>`; for
/// command-line expressions the line number is the character position.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& where, std::size_t line, const std::string& message)
        : std::runtime_error(where + ":" + std::to_string(line) + ": " + message) {}
};

// ---------------------------------------------------------------------------
// Symbol notation

class Notation {
public:
    /// True for characters that have a fixed syntactic role and therefore
    /// can never name an alphabet symbol.
    static bool reserved(char c) {
        switch (c) {
            case '\\': case '[': case ']': case '^': case '@': case '/':
            case '!': case '=': case '(': case ')': case '+': case '*':
            case '#': case ',':
                return true;
            default:
                return !std::isprint(static_cast<unsigned char>(c)) ||
                       std::isspace(static_cast<unsigned char>(c));
        }
    }

    static Notation chars(std::string_view letters, const std::string& where,
                          std::size_t line) {
        std::vector<Symbol> syms;
        for (char c : letters) {
            if (reserved(c))
                throw ParseError(where, line,
                                 std::string("reserved character '") + c +
                                     "' cannot be an alphabet symbol");
            syms.push_back(static_cast<Symbol>(static_cast<unsigned char>(c)));
        }
        return Notation(false, make_alphabet(std::move(syms), where, line));
    }

    static Notation numeric(std::size_t n, const std::string& where, std::size_t line) {
        if (n < 2) throw ParseError(where, line, "alphabet needs at least two symbols");
        return Notation(true, Alphabet::range(n));
    }

    /// `#n` selects numeric mode; anything else is a character alphabet.
    static Notation parse(std::string_view text, const std::string& where,
                          std::size_t line) {
        if (text.empty()) throw ParseError(where, line, "empty alphabet");
        if (text.front() == '#') {
            std::size_t n = 0;
            auto digits = text.substr(1);
            if (digits.empty()) throw ParseError(where, line, "expected a count after '#'");
            for (char c : digits) {
                if (!std::isdigit(static_cast<unsigned char>(c)))
                    throw ParseError(where, line, "bad alphabet size '" + std::string(text) + "'");
                n = n * 10 + static_cast<std::size_t>(c - '0');
                if (n > 1'000'000) throw ParseError(where, line, "alphabet too large");
            }
            return numeric(n, where, line);
        }
        return chars(text, where, line);
    }

    bool numeric_mode() const { return numeric_; }
    const Alphabet& alphabet() const { return gamma_; }

    std::string print_alphabet() const {
        if (numeric_) return "#" + std::to_string(gamma_.size());
        std::string s;
        for (Symbol g : gamma_.symbols()) s.push_back(static_cast<char>(g));
        return s;
    }

    std::string print_symbol(Symbol g) const {
        if (numeric_) return std::to_string(g);
        return std::string(1, static_cast<char>(g));
    }

    /// Symbols only, no empty-word marker; "" for the empty sequence.
    std::string print_symbols(const std::vector<Symbol>& w) const {
        std::string s;
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (numeric_ && i > 0) s.push_back(',');
            s += print_symbol(w[i]);
        }
        return s;
    }

    std::string print_word(const Word& w) const {
        return w.empty() ? "\\e" : print_symbols(w);
    }

    /// Contents of a class or a word body: one symbol per character
    /// (character mode) or comma-separated decimal numbers (numeric mode).
    /// Every symbol must belong to the alphabet.
    Word parse_symbols(std::string_view text, const std::string& where,
                       std::size_t line) const {
        Word w;
        if (numeric_) {
            std::size_t i = 0;
            while (i < text.size()) {
                std::size_t j = i;
                while (j < text.size() && text[j] != ',') ++j;
                auto piece = text.substr(i, j - i);
                if (piece.empty())
                    throw ParseError(where, line, "empty symbol in '" + std::string(text) + "'");
                Symbol g = 0;
                for (char c : piece) {
                    if (!std::isdigit(static_cast<unsigned char>(c)))
                        throw ParseError(where, line,
                                         "bad symbol '" + std::string(piece) + "'");
                    g = g * 10 + static_cast<Symbol>(c - '0');
                }
                check(g, where, line);
                w.push_back(g);
                i = j + (j < text.size() ? 1 : 0);
            }
            if (!text.empty() && text.back() == ',')
                throw ParseError(where, line, "trailing comma in '" + std::string(text) + "'");
        } else {
            for (char c : text) {
                Symbol g = static_cast<Symbol>(static_cast<unsigned char>(c));
                if (reserved(c))
                    throw ParseError(where, line,
                                     std::string("reserved character '") + c + "' in a word");
                check(g, where, line);
                w.push_back(g);
            }
        }
        return w;
    }

    /// A full word argument: `\e` for the empty word, else symbols.
    Word parse_word(std::string_view text, const std::string& where,
                    std::size_t line) const {
        if (text == "\\e") return {};
        if (text.empty()) throw ParseError(where, line, "empty word (write \\e)");
        return parse_symbols(text, where, line);
    }

    bool operator==(const Notation& other) const {
        return numeric_ == other.numeric_ && gamma_ == other.gamma_;
    }

private:
    Notation(bool numeric, Alphabet gamma) : numeric_(numeric), gamma_(std::move(gamma)) {}

    static Alphabet make_alphabet(std::vector<Symbol> syms, const std::string& where,
                                  std::size_t line) {
        try {
            return Alphabet(std::move(syms));
        } catch (const std::invalid_argument& e) {
            throw ParseError(where, line, e.what());
        }
    }

    void check(Symbol g, const std::string& where, std::size_t line) const {
        if (!gamma_.contains(g))
            throw ParseError(where, line, "symbol '" + print_symbol(g) +
                                              "' is not in the alphabet");
    }

    bool numeric_;
    Alphabet gamma_;
};

// ---------------------------------------------------------------------------
// Label tokens

inline std::string print_setspec(const SetSpec& f, const Notation& nt) {
    switch (f.kind()) {
        case SetKind::Eps: return "\\e";
        case SetKind::All: return "@";
        case SetKind::In: return "[" + nt.print_symbols(f.word().symbols()) + "]";
        case SetKind::NotIn: return "[^" + nt.print_symbols(f.word().symbols()) + "]";
    }
    return {};
}

/// Parses `\e`, `@`, `[w]`, or `[^w]` and normalizes the result: a class
/// listing the whole alphabet becomes `@`, and a class that excludes every
/// symbol is rejected because it denotes no symbol at all.
inline SetSpec parse_setspec_token(std::string_view tok, const Notation& nt,
                                   const std::string& where, std::size_t line) {
    auto build = [&](SetSpec f) {
        auto norm = normalize(f, nt.alphabet());
        if (!norm)
            throw ParseError(where, line,
                             "class '" + std::string(tok) + "' excludes every symbol");
        return *norm;
    };
    if (tok == "\\e") return SetSpec::eps();
    if (tok == "@") return SetSpec::all();
    if (tok.size() >= 2 && tok.front() == '[' && tok.back() == ']') {
        bool negated = tok.size() >= 3 && tok[1] == '^';
        auto body = tok.substr(negated ? 2 : 1, tok.size() - (negated ? 3 : 2));
        Word w = nt.parse_symbols(body, where, line);
        if (w.empty()) throw ParseError(where, line, "empty class '" + std::string(tok) + "'");
        auto sw = wo(w);
        return build(negated ? SetSpec::not_in(sw) : SetSpec::in(sw));
    }
    throw ParseError(where, line, "bad set token '" + std::string(tok) + "'");
}

inline std::string print_pairing(const PairingSpec& p, const Notation& nt) {
    switch (p.kind()) {
        case PairKind::EE: return "\\e/\\e";
        case PairKind::EG: return "\\e/" + print_setspec(p.rhs(), nt);
        case PairKind::FE: return print_setspec(p.lhs(), nt) + "/\\e";
        case PairKind::FG:
            return print_setspec(p.lhs(), nt) + "/" + print_setspec(p.rhs(), nt);
        case PairKind::Same: return print_setspec(p.lhs(), nt) + "/=";
        case PairKind::Diff:
            return print_setspec(p.lhs(), nt) + "/!" + print_setspec(p.rhs(), nt);
    }
    return {};
}

/// Parses `F/G`, `F/=`, `F/!G`, `\e/G`, `F/\e`, or `\e/\e` where F and G are
/// set tokens.  `=` and `!` require symbol sets on both relevant sides.
inline PairingSpec parse_pairing_token(std::string_view tok, const Notation& nt,
                                       const std::string& where, std::size_t line) {
    auto slash = tok.find('/');
    if (slash == std::string_view::npos)
        throw ParseError(where, line, "bad pair token '" + std::string(tok) + "' (missing /)");
    auto left = tok.substr(0, slash);
    auto right = tok.substr(slash + 1);
    if (left.empty() || right.empty())
        throw ParseError(where, line, "bad pair token '" + std::string(tok) + "'");

    auto side = [&](std::string_view part) {
        SetSpec f = parse_setspec_token(part, nt, where, line);
        return f;
    };
    auto symbol_side = [&](std::string_view part) {
        SetSpec f = side(part);
        if (f.is_eps())
            throw ParseError(where, line, "'" + std::string(tok) +
                                              "': this side must denote symbols");
        return f;
    };

    if (right == "=") return PairingSpec::same(symbol_side(left));
    if (right.front() == '!')
        return PairingSpec::diff(symbol_side(left), symbol_side(right.substr(1)));

    SetSpec l = side(left);
    SetSpec r = side(right);
    if (l.is_eps() && r.is_eps()) return PairingSpec::ee();
    if (l.is_eps()) return PairingSpec::eg(std::move(r));
    if (r.is_eps()) return PairingSpec::fe(std::move(l));
    return PairingSpec::fg(std::move(l), std::move(r));
}

inline std::string print_letter(const Letter& x, const Notation& nt) {
    return x ? nt.print_symbol(*x) : "\\e";
}

inline Letter parse_letter_token(std::string_view tok, const Notation& nt,
                                 const std::string& where, std::size_t line) {
    if (tok == "\\e") return std::nullopt;
    Word w = nt.parse_symbols(tok, where, line);
    if (w.size() != 1)
        throw ParseError(where, line, "expected one letter, got '" + std::string(tok) + "'");
    return w.front();
}

inline std::string print_letter_pair(const LetterPair& p, const Notation& nt) {
    return print_letter(p.in, nt) + "/" + print_letter(p.out, nt);
}

inline LetterPair parse_letter_pair_token(std::string_view tok, const Notation& nt,
                                          const std::string& where, std::size_t line) {
    auto slash = tok.find('/');
    if (slash == std::string_view::npos)
        throw ParseError(where, line, "bad pair token '" + std::string(tok) + "' (missing /)");
    return {parse_letter_token(tok.substr(0, slash), nt, where, line),
            parse_letter_token(tok.substr(slash + 1), nt, where, line)};
}

// ---------------------------------------------------------------------------
// Expressions
//
// Grammar, loosest to tightest:  union `+`  <  juxtaposition  <  postfix `*`;
// parentheses group.  Leaves are `\0` (the empty expression, only valid on
// its own), the neutral leaf (`\e` for languages, `\e/\e` for relations) and
// label tokens.  Both operators associate to the left.

namespace detail {

enum class TokKind { LParen, RParen, Plus, Star, Empty, Leaf };

struct ExprTok {
    TokKind kind;
    std::size_t pos;    // 1-based character position
    std::string text;   // label text for Leaf
};

/// Splits an expression into tokens.  A leaf token is a full label: for
/// relations this spans `side/side`, `side/=`, or `side/!side`.
inline std::vector<ExprTok> lex_expression(std::string_view text, bool relation,
                                           const std::string& where) {
    std::vector<ExprTok> out;
    std::size_t i = 0;
    auto fail = [&](std::size_t at, const std::string& msg) -> void {
        throw ParseError(where, at + 1, msg);
    };
    auto scan_side = [&]() -> std::string {
        // One component: `\e`, `@`, or a class `[...]`.
        if (i >= text.size()) fail(i, "expected a label");
        std::size_t start = i;
        char c = text[i];
        if (c == '\\') {
            if (i + 1 >= text.size()) fail(i, "dangling backslash");
            i += 2;
            return std::string(text.substr(start, 2));
        }
        if (c == '@') {
            ++i;
            return "@";
        }
        if (c == '[') {
            auto close = text.find(']', i);
            if (close == std::string_view::npos) fail(i, "unterminated class");
            i = close + 1;
            return std::string(text.substr(start, i - start));
        }
        fail(i, std::string("unexpected character '") + c + "'");
        return {};
    };

    while (i < text.size()) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t pos = i + 1;
        switch (c) {
            case '(': out.push_back({TokKind::LParen, pos, ""}); ++i; continue;
            case ')': out.push_back({TokKind::RParen, pos, ""}); ++i; continue;
            case '+': out.push_back({TokKind::Plus, pos, ""}); ++i; continue;
            case '*': out.push_back({TokKind::Star, pos, ""}); ++i; continue;
            default: break;
        }
        if (text.substr(i, 2) == "\\0") {
            out.push_back({TokKind::Empty, pos, ""});
            i += 2;
            continue;
        }
        std::string tok = scan_side();
        if (relation) {
            if (i >= text.size() || text[i] != '/')
                fail(i < text.size() ? i : text.size() - 1,
                     "expected '/' after '" + tok + "' in a relation expression");
            tok.push_back('/');
            ++i;
            if (i < text.size() && text[i] == '=') {
                tok.push_back('=');
                ++i;
            } else if (i < text.size() && text[i] == '!') {
                tok.push_back('!');
                ++i;
                tok += scan_side();
            } else {
                tok += scan_side();
            }
        } else if (i < text.size() && text[i] == '/') {
            fail(i, "'/' is not valid in a language expression");
        }
        out.push_back({TokKind::Leaf, pos, tok});
    }
    return out;
}

template <class L, class ParseLabel>
class ExprParser {
public:
    ExprParser(std::vector<ExprTok> toks, ParseLabel parse_label, std::string where)
        : toks_(std::move(toks)), parse_label_(std::move(parse_label)),
          where_(std::move(where)) {}

    Regex<L> run() {
        if (toks_.empty()) throw ParseError(where_, 1, "empty expression");
        // The empty-expression leaf must stand alone.
        bool any_empty = false;
        for (const auto& t : toks_)
            if (t.kind == TokKind::Empty) any_empty = true;
        if (any_empty) {
            if (toks_.size() != 1)
                throw ParseError(where_, toks_.front().pos,
                                 "\\0 must be the whole expression");
            return Regex<L>::empty();
        }
        Regex<L> r = expr();
        if (at_ != toks_.size())
            throw ParseError(where_, toks_[at_].pos, "unexpected ')'");
        return r;
    }

private:
    bool peek(TokKind k) const { return at_ < toks_.size() && toks_[at_].kind == k; }

    bool starts_atom() const {
        return peek(TokKind::LParen) || peek(TokKind::Leaf);
    }

    Regex<L> expr() {
        Regex<L> r = term();
        while (peek(TokKind::Plus)) {
            ++at_;
            r = Regex<L>::alt(std::move(r), term());
        }
        return r;
    }

    Regex<L> term() {
        if (!starts_atom()) {
            std::size_t pos = at_ < toks_.size() ? toks_[at_].pos : last_pos();
            throw ParseError(where_, pos, "expected an expression");
        }
        Regex<L> r = factor();
        while (starts_atom()) r = Regex<L>::seq(std::move(r), factor());
        return r;
    }

    Regex<L> factor() {
        Regex<L> r = atom();
        while (peek(TokKind::Star)) {
            ++at_;
            r = Regex<L>::star(std::move(r));
        }
        return r;
    }

    Regex<L> atom() {
        if (peek(TokKind::LParen)) {
            std::size_t open = toks_[at_].pos;
            ++at_;
            Regex<L> r = expr();
            if (!peek(TokKind::RParen))
                throw ParseError(where_, last_pos(),
                                 "missing ')' for '(' at position " + std::to_string(open));
            ++at_;
            return r;
        }
        Regex<L> r = Regex<L>::label(parse_label_(toks_[at_].text, toks_[at_].pos));
        ++at_;
        return r;
    }

    std::size_t last_pos() const { return toks_.back().pos; }

    std::vector<ExprTok> toks_;
    ParseLabel parse_label_;
    std::string where_;
    std::size_t at_ = 0;
};

}  // namespace detail

inline Regex<SetSpec> parse_regex_lang(std::string_view text, const Notation& nt,
                                       const std::string& where = "expression") {
    auto toks = detail::lex_expression(text, false, where);
    auto parse_label = [&](const std::string& tok, std::size_t pos) {
        return parse_setspec_token(tok, nt, where, pos);
    };
    return detail::ExprParser<SetSpec, decltype(parse_label)>(std::move(toks), parse_label,
                                                              where)
        .run();
}

inline Regex<PairingSpec> parse_regex_rel(std::string_view text, const Notation& nt,
                                          const std::string& where = "expression") {
    auto toks = detail::lex_expression(text, true, where);
    auto parse_label = [&](const std::string& tok, std::size_t pos) {
        return parse_pairing_token(tok, nt, where, pos);
    };
    return detail::ExprParser<PairingSpec, decltype(parse_label)>(std::move(toks),
                                                                  parse_label, where)
        .run();
}

namespace detail {

// Precedence ranks for printing with minimal parentheses.
template <class L>
int regex_rank(const Regex<L>& r) {
    switch (r.kind()) {
        case RegexKind::Union: return 0;
        case RegexKind::Concat: return 1;
        default: return 2;
    }
}

template <class L, class PrintLabel>
void print_regex_rec(const Regex<L>& r, int min_rank, const PrintLabel& print_label,
                     const char* neutral, std::string& out) {
    const bool parens = regex_rank(r) < min_rank;
    if (parens) out.push_back('(');
    switch (r.kind()) {
        case RegexKind::Empty:
            out += "\\0";
            break;
        case RegexKind::Neutral:
            out += neutral;
            break;
        case RegexKind::Label:
            out += print_label(r.label());
            break;
        case RegexKind::Union:
            // Operators associate left, so a right-nested operand needs
            // parentheses for the reparse to rebuild the same tree.
            print_regex_rec(r.left(), 0, print_label, neutral, out);
            out.push_back('+');
            print_regex_rec(r.right(), 1, print_label, neutral, out);
            break;
        case RegexKind::Concat:
            print_regex_rec(r.left(), 1, print_label, neutral, out);
            print_regex_rec(r.right(), 2, print_label, neutral, out);
            break;
        case RegexKind::Star:
            print_regex_rec(r.sub(), 2, print_label, neutral, out);
            out.push_back('*');
            break;
    }
    if (parens) out.push_back(')');
}

}  // namespace detail

inline std::string print_regex(const Regex<SetSpec>& r, const Notation& nt) {
    std::string out;
    auto pl = [&](const SetSpec& f) { return print_setspec(f, nt); };
    detail::print_regex_rec(r, 0, pl, "\\e", out);
    return out;
}

inline std::string print_regex(const Regex<PairingSpec>& r, const Notation& nt) {
    std::string out;
    auto pl = [&](const PairingSpec& p) { return print_pairing(p, nt); };
    detail::print_regex_rec(r, 0, pl, "\\e/\\e", out);
    return out;
}

// ---------------------------------------------------------------------------
// Graph documents

enum class GraphKind { Nfa, NfaSetSpec, Transducer, TransducerSetSpec };

inline std::string_view kind_name(GraphKind k) {
    switch (k) {
        case GraphKind::Nfa: return "nfa";
        case GraphKind::NfaSetSpec: return "nfa-setspec";
        case GraphKind::Transducer: return "transducer";
        case GraphKind::TransducerSetSpec: return "transducer-setspec";
    }
    return {};
}

inline std::optional<GraphKind> kind_from_name(std::string_view name) {
    if (name == "nfa") return GraphKind::Nfa;
    if (name == "nfa-setspec") return GraphKind::NfaSetSpec;
    if (name == "transducer") return GraphKind::Transducer;
    if (name == "transducer-setspec") return GraphKind::TransducerSetSpec;
    return std::nullopt;
}

/// One parsed graph file: its kind, the notation it is written in, and the
/// graph itself (the variant alternative matches the kind).
struct GraphDocument {
    GraphKind kind;
    Notation notation;
    std::variant<LabelledGraph<Letter>, LabelledGraph<SetSpec>, LabelledGraph<LetterPair>,
                 LabelledGraph<PairingSpec>>
        graph;

    bool language_kind() const {
        return kind == GraphKind::Nfa || kind == GraphKind::NfaSetSpec;
    }
    bool compact_kind() const {
        return kind == GraphKind::NfaSetSpec || kind == GraphKind::TransducerSetSpec;
    }
};

inline GraphDocument make_document(LabelledGraph<Letter> g, Notation nt) {
    return {GraphKind::Nfa, std::move(nt), std::move(g)};
}
inline GraphDocument make_document(LabelledGraph<SetSpec> g, Notation nt) {
    return {GraphKind::NfaSetSpec, std::move(nt), std::move(g)};
}
inline GraphDocument make_document(LabelledGraph<LetterPair> g, Notation nt) {
    return {GraphKind::Transducer, std::move(nt), std::move(g)};
}
inline GraphDocument make_document(LabelledGraph<PairingSpec> g, Notation nt) {
    return {GraphKind::TransducerSetSpec, std::move(nt), std::move(g)};
}

/// Parses a graph file.  `fallback` supplies the notation when the file has
/// no `@alphabet` line; when both exist they must agree.  `@type` must
/// precede the first transition, and the alphabet must be known by then.
inline GraphDocument parse_graph_document(std::string_view text, const std::string& where,
                                          const std::optional<Notation>& fallback) {
    std::optional<GraphKind> kind;
    std::optional<Notation> notation;

    struct RawTransition {
        std::string from, label, to;
        std::size_t line;
    };
    std::vector<std::string> names;                     // in order of first appearance
    std::vector<std::pair<std::string, std::size_t>> initial_names, final_names;
    std::vector<RawTransition> raw;

    std::istringstream lines{std::string(text)};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(lines, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty() || toks.front().front() == '#') continue;

        const std::string& head = toks.front();
        if (head == "@type") {
            if (toks.size() != 2) throw ParseError(where, lineno, "@type needs one value");
            if (kind) throw ParseError(where, lineno, "duplicate @type");
            kind = kind_from_name(toks[1]);
            if (!kind) throw ParseError(where, lineno, "unknown type '" + toks[1] + "'");
        } else if (head == "@alphabet") {
            if (toks.size() != 2) throw ParseError(where, lineno, "@alphabet needs one value");
            if (notation) throw ParseError(where, lineno, "duplicate @alphabet");
            notation = Notation::parse(toks[1], where, lineno);
            if (fallback && !(*fallback == *notation))
                throw ParseError(where, lineno,
                                 "file alphabet '" + notation->print_alphabet() +
                                     "' differs from the requested alphabet '" +
                                     fallback->print_alphabet() + "'");
        } else if (head == "@initial" || head == "@final") {
            auto& sink = head == "@initial" ? initial_names : final_names;
            for (std::size_t i = 1; i < toks.size(); ++i) sink.emplace_back(toks[i], lineno);
        } else if (head.front() == '@') {
            throw ParseError(where, lineno, "unknown directive '" + head + "'");
        } else {
            if (toks.size() != 3)
                throw ParseError(where, lineno,
                                 "expected '<src> <label> <dst>', got " +
                                     std::to_string(toks.size()) + " tokens");
            if (!kind) throw ParseError(where, lineno, "transition before @type");
            raw.push_back({toks[0], toks[1], toks[2], lineno});
        }
    }

    if (!kind) throw ParseError(where, 1, "missing @type");
    if (!notation) {
        if (!fallback)
            throw ParseError(where, 1, "no @alphabet line and no alphabet given");
        notation = fallback;
    }

    std::map<std::string, int> ids;
    auto id_of = [&](const std::string& name) {
        auto [it, fresh] = ids.try_emplace(name, static_cast<int>(names.size()));
        if (fresh) names.push_back(name);
        return it->second;
    };
    for (const auto& [name, ln] : initial_names) id_of(name);
    for (const auto& [name, ln] : final_names) id_of(name);
    for (const auto& t : raw) {
        id_of(t.from);
        id_of(t.to);
    }

    const Notation& nt = *notation;
    auto build = [&](auto parse_label) {
        using L = decltype(parse_label(raw.front(), nt));
        LabelledGraph<L> g;
        g.add_states(static_cast<int>(names.size()));
        for (const auto& [name, ln] : initial_names) g.add_initial(ids.at(name));
        for (const auto& [name, ln] : final_names) g.add_final(ids.at(name));
        for (const auto& t : raw)
            g.add_transition(ids.at(t.from), parse_label(t, nt), ids.at(t.to));
        return g;
    };

    GraphDocument doc{*kind, nt, LabelledGraph<Letter>{}};
    switch (*kind) {
        case GraphKind::Nfa:
            doc.graph = build([&](const RawTransition& t, const Notation& n) {
                return parse_letter_token(t.label, n, where, t.line);
            });
            break;
        case GraphKind::NfaSetSpec:
            doc.graph = build([&](const RawTransition& t, const Notation& n) {
                return parse_setspec_token(t.label, n, where, t.line);
            });
            break;
        case GraphKind::Transducer:
            doc.graph = build([&](const RawTransition& t, const Notation& n) {
                return parse_letter_pair_token(t.label, n, where, t.line);
            });
            break;
        case GraphKind::TransducerSetSpec:
            doc.graph = build([&](const RawTransition& t, const Notation& n) {
                return parse_pairing_token(t.label, n, where, t.line);
            });
            break;
    }
    return doc;
}

namespace detail {

inline std::string print_graph_label(const Letter& l, const Notation& nt) {
    return print_letter(l, nt);
}
inline std::string print_graph_label(const SetSpec& l, const Notation& nt) {
    return print_setspec(l, nt);
}
inline std::string print_graph_label(const LetterPair& l, const Notation& nt) {
    return print_letter_pair(l, nt);
}
inline std::string print_graph_label(const PairingSpec& l, const Notation& nt) {
    return print_pairing(l, nt);
}

/// States renamed q0..qn in breadth-first discovery order from the initial
/// states (transitions scanned in stored order); states the search misses
/// keep their relative order afterwards.  States that the file would never
/// mention (not initial, not final, on no transition) get no number at all:
/// a reparse cannot see them, so numbering them would shift every later
/// name and break byte-for-byte stability.
template <class L>
std::vector<int> canonical_order(const LabelledGraph<L>& g) {
    const int n = g.state_count();
    std::vector<char> mentioned(n, 0);
    for (int q : g.initial()) mentioned[q] = 1;
    for (int q : g.final_states()) mentioned[q] = 1;
    for (const auto& t : g.transitions()) mentioned[t.from] = mentioned[t.to] = 1;

    std::vector<int> new_id(n, -1);
    int next = 0;
    std::deque<int> queue;
    for (int q : g.initial()) {
        if (new_id[q] < 0) {
            new_id[q] = next++;
            queue.push_back(q);
        }
    }
    auto adj = g.adjacency();
    while (!queue.empty()) {
        int q = queue.front();
        queue.pop_front();
        for (const auto* t : adj[q]) {
            if (new_id[t->to] < 0) {
                new_id[t->to] = next++;
                queue.push_back(t->to);
            }
        }
    }
    for (int q = 0; q < n; ++q)
        if (mentioned[q] && new_id[q] < 0) new_id[q] = next++;
    return new_id;
}

}  // namespace detail

inline std::string print_graph_document(const GraphDocument& doc) {
    std::ostringstream out;
    out << "@type " << kind_name(doc.kind) << "\n";
    out << "@alphabet " << doc.notation.print_alphabet() << "\n";
    std::visit(
        [&](const auto& g) {
            auto order = detail::canonical_order(g);
            auto list = [&](const std::vector<int>& states) {
                std::vector<int> ids;
                for (int q : states) ids.push_back(order[q]);
                std::sort(ids.begin(), ids.end());
                for (int q : ids) out << " q" << q;
            };
            out << "@initial";
            list(g.initial());
            out << "\n@final";
            list(g.final_states());
            out << "\n";
            struct Row {
                int from, to;
                std::string label;
            };
            std::vector<Row> rows;
            for (const auto& t : g.transitions())
                rows.push_back({order[t.from], order[t.to],
                                detail::print_graph_label(t.label, doc.notation)});
            std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
                return std::tie(a.from, a.to, a.label) < std::tie(b.from, b.to, b.label);
            });
            for (const auto& r : rows)
                out << "q" << r.from << " " << r.label << " q" << r.to << "\n";
        },
        doc.graph);
    return out.str();
}

}  // namespace symspec
