#pragma once

// Text format for marker schemes and configuration literals.
//
//   alphabet 4;
//   rule {
//     start = "000";          # words quote symbols 0-9 then a-z
//     end = "111";            # runs may use repetition sugar: "0^8"
//     map "2332" -> "3223";
//     map "3223" -> "2332";
//   }
//
// Configuration literals: `(0)* "2332" @1 (1)*` (two-sided) and
// `"0110" (1)*` (one-sided). Whitespace-insensitive, `#` comments,
// semicolons optional. Every parse error carries line, column, and a
// stable machine-readable code.

#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "autshift/marker.hpp"
#include "autshift/omega.hpp"

namespace autshift {

class ParseError : public Error {
public:
    ParseError(std::string code, int line, int column, const std::string& message)
        : Error(std::move(code), "line " + std::to_string(line) + ", column " +
                                     std::to_string(column) + ": " + message),
          line_(line), column_(column) {}
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

private:
    int line_;
    int column_;
};

namespace dsl_detail {

struct Token {
    enum Kind { Ident, Int, Str, LBrace, RBrace, LParen, RParen, Equals, Semi, Arrow, Star, At, End };
    Kind kind = End;
    std::string text;       ///< identifier name or raw string body
    long long value = 0;    ///< for Int
    int line = 1, column = 1;
};

inline const char* kind_name(Token::Kind k) {
    switch (k) {
        case Token::Ident: return "identifier";
        case Token::Int: return "integer";
        case Token::Str: return "quoted word";
        case Token::LBrace: return "'{'";
        case Token::RBrace: return "'}'";
        case Token::LParen: return "'('";
        case Token::RParen: return "')'";
        case Token::Equals: return "'='";
        case Token::Semi: return "';'";
        case Token::Arrow: return "'->'";
        case Token::Star: return "'*'";
        case Token::At: return "'@'";
        case Token::End: return "end of input";
    }
    return "?";
}

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

    [[noreturn]] void fail(const std::string& code, const std::string& msg) const {
        throw ParseError(code, current_.line, current_.column,
                         msg + " (found " + describe(current_) + ")");
    }

    Token expect(Token::Kind kind, const std::string& what) {
        if (current_.kind != kind) fail("syntax_error", "expected " + what);
        return take();
    }

    /// Semicolons are separators, never required.
    void skip_semis() {
        while (current_.kind == Token::Semi) advance();
    }

private:
    static std::string describe(const Token& t) {
        if (t.kind == Token::Ident) return "'" + t.text + "'";
        if (t.kind == Token::Int) return "'" + std::to_string(t.value) + "'";
        if (t.kind == Token::Str) return "\"" + t.text + "\"";
        return kind_name(t.kind);
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char cur() const { return text_[pos_]; }

    void bump() {
        if (text_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    void skip_blank() {
        while (!at_end()) {
            char c = cur();
            if (c == '#') {
                while (!at_end() && cur() != '\n') bump();
            } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                bump();
            } else {
                return;
            }
        }
    }

    void advance() {
        skip_blank();
        current_ = Token{};
        current_.line = line_;
        current_.column = col_;
        if (at_end()) {
            current_.kind = Token::End;
            return;
        }
        char c = cur();
        if (c == '{' || c == '}' || c == '(' || c == ')' || c == '=' || c == ';' ||
            c == '*' || c == '@') {
            bump();
            switch (c) {
                case '{': current_.kind = Token::LBrace; return;
                case '}': current_.kind = Token::RBrace; return;
                case '(': current_.kind = Token::LParen; return;
                case ')': current_.kind = Token::RParen; return;
                case '=': current_.kind = Token::Equals; return;
                case ';': current_.kind = Token::Semi; return;
                case '*': current_.kind = Token::Star; return;
                default: current_.kind = Token::At; return;
            }
        }
        if (c == '-') {
            bump();
            if (!at_end() && cur() == '>') {
                bump();
                current_.kind = Token::Arrow;
                return;
            }
            if (at_end() || cur() < '0' || cur() > '9')
                throw ParseError("syntax_error", current_.line, current_.column,
                                 "stray '-': expected '->' or a negative integer");
            lex_int(true);
            return;
        }
        if (c >= '0' && c <= '9') {
            lex_int(false);
            return;
        }
        if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_') {
            current_.kind = Token::Ident;
            while (!at_end() && ((cur() >= 'a' && cur() <= 'z') || (cur() >= 'A' && cur() <= 'Z') ||
                                 (cur() >= '0' && cur() <= '9') || cur() == '_')) {
                current_.text.push_back(cur());
                bump();
            }
            return;
        }
        if (c == '"') {
            bump();
            current_.kind = Token::Str;
            while (!at_end() && cur() != '"') {
                if (cur() == '\n')
                    throw ParseError("unterminated_string", current_.line, current_.column,
                                     "quoted word runs past the end of the line");
                current_.text.push_back(cur());
                bump();
            }
            if (at_end())
                throw ParseError("unterminated_string", current_.line, current_.column,
                                 "quoted word is never closed");
            bump();
            return;
        }
        throw ParseError("syntax_error", line_, col_,
                         std::string("unexpected character '") + c + "'");
    }

    void lex_int(bool negative) {
        current_.kind = Token::Int;
        if (negative) current_.text.push_back('-');
        long long v = 0;
        while (!at_end() && cur() >= '0' && cur() <= '9') {
            v = v * 10 + (cur() - '0');
            if (v > (1LL << 40))
                throw ParseError("bad_integer", current_.line, current_.column,
                                 "integer literal out of range");
            current_.text.push_back(cur());
            bump();
        }
        current_.value = negative ? -v : v;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token current_;
};

inline constexpr std::size_t kMaxWordLength = std::size_t(1) << 16;

inline int symbol_from_char(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    return -1;
}

/// Expand a quoted word body: symbols 0-9a-z, with `s^N` repeating the
/// preceding symbol. Columns point into the original text.
inline Word expand_word(const Token& tok, int alphabet) {
    Word out;
    const std::string& raw = tok.text;
    std::size_t i = 0;
    auto col = [&](std::size_t offset) { return tok.column + 1 + (int)offset; };
    if (raw.empty())
        throw ParseError("empty_word", tok.line, tok.column, "words must be nonempty");
    while (i < raw.size()) {
        int s = symbol_from_char(raw[i]);
        if (s < 0)
            throw ParseError("bad_symbol", tok.line, col(i),
                             std::string("'") + raw[i] + "' is not a symbol (use 0-9, a-z)");
        if (s >= alphabet)
            throw ParseError("bad_symbol", tok.line, col(i),
                             std::string("symbol '") + raw[i] + "' is outside alphabet " +
                                 std::to_string(alphabet));
        std::size_t count = 1;
        if (i + 1 < raw.size() && raw[i + 1] == '^') {
            std::size_t j = i + 2, digits = 0;
            count = 0;
            while (j < raw.size() && raw[j] >= '0' && raw[j] <= '9') {
                count = count * 10 + std::size_t(raw[j] - '0');
                if (count > kMaxWordLength)
                    throw ParseError("bad_repeat", tok.line, col(i + 2), "repeat count too large");
                ++j;
                ++digits;
            }
            if (digits == 0)
                throw ParseError("bad_repeat", tok.line, col(i + 1),
                                 "'^' must be followed by a repeat count");
            if (count == 0)
                throw ParseError("bad_repeat", tok.line, col(i + 2),
                                 "repeat count must be at least 1");
            i = j;
        } else {
            ++i;
        }
        if (out.size() + count > kMaxWordLength)
            throw ParseError("bad_repeat", tok.line, tok.column, "word too long");
        out.insert(out.end(), count, (Sym)s);
    }
    return out;
}

/// Unquoted tail word between parentheses: plain symbols, no sugar.
inline Word plain_word(Lexer& lex, int alphabet) {
    Token tok = lex.peek();
    Word out;
    while (true) {
        const Token& t = lex.peek();
        if (t.kind != Token::Int && t.kind != Token::Ident) break;
        for (char c : t.text) {
            int s = symbol_from_char(c);
            if (s < 0 || s >= alphabet)
                throw ParseError("bad_symbol", t.line, t.column,
                                 std::string("symbol '") + c + "' is not in alphabet " +
                                     std::to_string(alphabet));
            out.push_back((Sym)s);
        }
        lex.take();
    }
    if (out.empty())
        throw ParseError("empty_word", tok.line, tok.column,
                         "expected a word of symbols inside '(...)'");
    return out;
}

}  // namespace dsl_detail

inline MarkerScheme parse_scheme(const std::string& text, std::string label = "scheme") {
    using dsl_detail::Token;
    dsl_detail::Lexer lex(text);

    Token kw = lex.expect(Token::Ident, "'alphabet'");
    if (kw.text != "alphabet")
        throw ParseError("syntax_error", kw.line, kw.column,
                         "a scheme starts with 'alphabet N', got '" + kw.text + "'");
    Token n_tok = lex.expect(Token::Int, "the alphabet size");
    if (n_tok.value < 2 || n_tok.value > kMaxPrintableAlphabet)
        throw ParseError("bad_alphabet", n_tok.line, n_tok.column,
                         "alphabet size must be between 2 and " +
                             std::to_string(kMaxPrintableAlphabet));
    const int alphabet = (int)n_tok.value;
    lex.skip_semis();

    std::vector<MarkerRule> rules;
    while (lex.peek().kind == Token::Ident) {
        Token rk = lex.take();
        if (rk.text != "rule")
            throw ParseError("syntax_error", rk.line, rk.column,
                             "expected 'rule', got '" + rk.text + "'");
        lex.expect(Token::LBrace, "'{'");
        lex.skip_semis();

        auto field_word = [&](const char* name) {
            Token f = lex.expect(Token::Ident, std::string("'") + name + "'");
            if (f.text != name)
                throw ParseError("syntax_error", f.line, f.column,
                                 "expected '" + std::string(name) + "', got '" + f.text + "'");
            lex.expect(Token::Equals, "'='");
            Token w = lex.expect(Token::Str, "a quoted word");
            lex.skip_semis();
            return dsl_detail::expand_word(w, alphabet);
        };
        Word start = field_word("start");
        Word end = field_word("end");

        std::vector<std::pair<Word, Word>> mapping;
        Token first_map = lex.peek();
        while (lex.peek().kind == Token::Ident && lex.peek().text == "map") {
            lex.take();
            Token src = lex.expect(Token::Str, "a quoted word");
            lex.expect(Token::Arrow, "'->'");
            Token dst = lex.expect(Token::Str, "a quoted word");
            lex.skip_semis();
            Word s = dsl_detail::expand_word(src, alphabet);
            Word d = dsl_detail::expand_word(dst, alphabet);
            if (s.size() != d.size())
                throw ParseError("length_mismatch", src.line, src.column,
                                 "map source has length " + std::to_string(s.size()) +
                                     " but target has length " + std::to_string(d.size()));
            mapping.emplace_back(std::move(s), std::move(d));
        }
        if (mapping.empty())
            throw ParseError("syntax_error", first_map.line, first_map.column,
                             "a rule needs at least one 'map' entry");
        Token close = lex.expect(Token::RBrace, "'}'");
        lex.skip_semis();
        try {
            rules.push_back(make_rule(std::move(start), std::move(end), std::move(mapping)));
        } catch (const Error& e) {
            throw ParseError("bad_rule", rk.line, rk.column, e.what());
        }
        (void)close;
    }
    if (lex.peek().kind != Token::End) lex.fail("syntax_error", "expected 'rule' or end of input");
    try {
        return MarkerScheme(alphabet, std::move(rules), std::move(label));
    } catch (const Error& e) {
        throw ParseError("bad_scheme", 1, 1, e.what());
    }
}

/// Run-length sugar for runs of at least 4 identical symbols. A run followed
/// by a digit symbol is left expanded: "0^41" would read as a repeat of 41.
inline std::string render_word(const Word& w) {
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t run = 1;
        while (i + run < w.size() && w[i + run] == w[i]) ++run;
        bool digit_follows = i + run < w.size() && w[i + run] < 10;
        if (run >= 4 && !digit_follows) {
            out += symbol_to_char(w[i]);
            out += "^" + std::to_string(run);
        } else {
            out.append(run, symbol_to_char(w[i]));
        }
        i += run;
    }
    return out;
}

inline std::string render_scheme(const MarkerScheme& s) {
    std::string out = "alphabet " + std::to_string(s.alphabet()) + ";\n";
    for (const MarkerRule& r : s.rules()) {
        out += "rule {\n";
        out += "  start = \"" + render_word(r.start) + "\";\n";
        out += "  end = \"" + render_word(r.end) + "\";\n";
        for (std::size_t i = 0; i < r.data.size(); ++i)
            out += "  map \"" + render_word(r.data[i]) + "\" -> \"" +
                   render_word(r.data[r.perm[i]]) + "\";\n";
        out += "}\n";
    }
    return out;
}

inline BiConfiguration parse_biconfig(const std::string& text, int alphabet) {
    using dsl_detail::Token;
    dsl_detail::Lexer lex(text);
    lex.expect(Token::LParen, "'(' opening the left tail");
    Word left = dsl_detail::plain_word(lex, alphabet);
    lex.expect(Token::RParen, "')'");
    lex.expect(Token::Star, "'*'");
    Token core_tok = lex.expect(Token::Str, "the quoted core word");
    Word core;  // an empty core ("") is legal: the junction of the two tails
    if (!core_tok.text.empty()) core = dsl_detail::expand_word(core_tok, alphabet);
    lex.expect(Token::At, "'@' before the anchor position");
    Token anchor = lex.expect(Token::Int, "the anchor position");
    lex.expect(Token::LParen, "'(' opening the right tail");
    Word right = dsl_detail::plain_word(lex, alphabet);
    lex.expect(Token::RParen, "')'");
    lex.expect(Token::Star, "'*'");
    if (lex.peek().kind != Token::End) lex.fail("syntax_error", "expected end of literal");
    try {
        return BiConfiguration::from_parts(alphabet, std::move(left), std::move(core),
                                           anchor.value, std::move(right));
    } catch (const Error& e) {
        throw ParseError("invalid_literal", 1, 1, e.what());
    }
}

inline OmegaPoint parse_omega(const std::string& text, int alphabet) {
    using dsl_detail::Token;
    dsl_detail::Lexer lex(text);
    Word prefix;
    if (lex.peek().kind == Token::Str) {
        Token p = lex.take();
        if (!p.text.empty()) prefix = dsl_detail::expand_word(p, alphabet);
    }
    lex.expect(Token::LParen, "'(' opening the tail");
    Word tail = dsl_detail::plain_word(lex, alphabet);
    lex.expect(Token::RParen, "')'");
    lex.expect(Token::Star, "'*'");
    if (lex.peek().kind != Token::End) lex.fail("syntax_error", "expected end of literal");
    try {
        return OmegaPoint::from_parts(alphabet, std::move(prefix), std::move(tail));
    } catch (const Error& e) {
        throw ParseError("invalid_literal", 1, 1, e.what());
    }
}

/// Dispatch on shape: a two-sided literal contains an '@' anchor.
inline std::variant<BiConfiguration, OmegaPoint> parse_config(const std::string& text,
                                                              int alphabet) {
    if (text.find('@') != std::string::npos)
        return parse_biconfig(text, alphabet);
    return parse_omega(text, alphabet);
}

}  // namespace autshift
