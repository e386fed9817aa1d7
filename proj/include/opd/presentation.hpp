#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "opd/symmetrize.hpp"

namespace opd {

struct SourceError {
    int line = 1;
    int column = 1;
    std::string message;
    std::string token;

    std::string str() const {
        std::string s = std::to_string(line) + ":" + std::to_string(column) + ": " + message;
        if (!token.empty()) s += " near '" + token + "'";
        return s;
    }
};

class ParseError : public std::runtime_error {
public:
    explicit ParseError(SourceError e) : std::runtime_error(e.str()), error(std::move(e)) {}
    SourceError error;
};

// An operad presentation: operation symbols with symmetry flags plus named
// multilinear identities.
struct Presentation {
    std::vector<SymbolicOp> ops;
    std::vector<IdentityExpr> identities;

    int find_op(const std::string& name) const {
        for (size_t i = 0; i < ops.size(); ++i)
            if (ops[i].name == name) return static_cast<int>(i);
        return -1;
    }
    const IdentityExpr* find_identity(const std::string& name) const {
        for (const auto& id : identities)
            if (id.name == name) return &id;
        return nullptr;
    }
};

namespace detail {

struct Token {
    enum Kind { Ident, Number, Symbol, End } kind = End;
    std::string text;
    int line = 1, column = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_ws();
        Token t;
        t.line = line_;
        t.column = col_;
        if (pos_ >= text_.size()) return t;
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            t.kind = Token::Ident;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                t.text += advance();
            return t;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            t.kind = Token::Number;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                t.text += advance();
            return t;
        }
        t.kind = Token::Symbol;
        t.text = std::string(1, advance());
        return t;
    }

private:
    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }
    void skip_ws() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }
    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
};

class PresentationParser {
public:
    explicit PresentationParser(const std::string& text) {
        Lexer lex(text);
        for (Token t = lex.next();; t = lex.next()) {
            tokens_.push_back(t);
            if (t.kind == Token::End) break;
        }
    }

    Presentation parse() {
        Presentation p;
        while (peek().kind != Token::End) {
            Token kw = expect(Token::Ident, "expected 'op' or 'id' declaration");
            if (kw.text == "op") parse_op(p);
            else if (kw.text == "id") parse_identity(p);
            else fail(kw, "expected 'op' or 'id'");
        }
        return p;
    }

private:
    [[noreturn]] void fail(const Token& t, const std::string& message) const {
        throw ParseError({t.line, t.column, message, t.kind == Token::End ? "" : t.text});
    }
    const Token& peek(size_t ahead = 0) const {
        size_t i = std::min(pos_ + ahead, tokens_.size() - 1);
        return tokens_[i];
    }
    Token take() { return tokens_[std::min(pos_++, tokens_.size() - 1)]; }
    Token expect(Token::Kind kind, const std::string& message) {
        Token t = take();
        if (t.kind != kind) fail(t, message);
        return t;
    }
    Token expect_symbol(char c) {
        Token t = take();
        if (t.kind != Token::Symbol || t.text[0] != c)
            fail(t, std::string("expected '") + c + "'");
        return t;
    }
    bool at_symbol(char c, size_t ahead = 0) const {
        const Token& t = peek(ahead);
        return t.kind == Token::Symbol && t.text[0] == c;
    }

    void parse_op(Presentation& p) {
        Token name = expect(Token::Ident, "expected operation name");
        if (p.find_op(name.text) >= 0) fail(name, "duplicate operation name");
        expect_symbol(':');
        Token flag = expect(Token::Ident, "expected symmetry flag");
        Symmetry s;
        if (flag.text == "plain") s = Symmetry::Plain;
        else if (flag.text == "symmetric") s = Symmetry::Symmetric;
        else if (flag.text == "antisymmetric") s = Symmetry::Antisymmetric;
        else fail(flag, "symmetry must be plain, symmetric or antisymmetric");
        p.ops.push_back({name.text, s});
    }

    void parse_identity(Presentation& p) {
        Token name = expect(Token::Ident, "expected identity name");
        if (p.find_identity(name.text)) fail(name, "duplicate identity name");
        expect_symbol(':');
        IdentityExpr id;
        id.name = name.text;
        parse_expr(p, id, Rat(1));
        expect_symbol('=');
        parse_expr(p, id, Rat(-1));
        finish_identity(name, id);
        p.identities.push_back(std::move(id));
    }

    // sum of signed terms, appended to id with an overall sign
    void parse_expr(const Presentation& p, IdentityExpr& id, const Rat& overall) {
        bool first = true;
        while (true) {
            Rat sign = overall;
            if (at_symbol('-')) {
                take();
                sign = -sign;
            } else if (at_symbol('+')) {
                take();
            } else if (!first) {
                break;
            }
            parse_term(p, id, sign);
            first = false;
        }
    }

    void parse_term(const Presentation& p, IdentityExpr& id, Rat sign) {
        Rat coeff = sign;
        if (peek().kind == Token::Number) {
            Token num = take();
            Rat value(boost::multiprecision::cpp_int(num.text));
            if (at_symbol('/')) {
                take();
                Token den = expect(Token::Number, "expected denominator");
                Rat d(boost::multiprecision::cpp_int(den.text));
                if (d == 0) fail(den, "malformed rational: zero denominator");
                value /= d;
            }
            if (at_symbol('*')) {
                take();
                coeff *= value;
            } else if (value == 0) {
                return;  // a literal zero side contributes nothing
            } else {
                fail(num, "a constant term is not allowed in a multilinear identity");
            }
        }
        Token start = peek();
        TermNode term = parse_application(p);
        std::vector<int> vars;
        collect_vars(term, vars);
        std::sort(vars.begin(), vars.end());
        if (std::adjacent_find(vars.begin(), vars.end()) != vars.end())
            fail(start, "repeated variable in a term");
        id.terms.emplace_back(std::move(coeff), std::move(term));
    }

    TermNode parse_application(const Presentation& p) {
        Token head = expect(Token::Ident, "expected an operation or variable");
        if (!at_symbol('(')) {
            // variable: x followed by a positive index
            if (head.text.size() >= 2 && head.text[0] == 'x' &&
                std::all_of(head.text.begin() + 1, head.text.end(),
                            [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
                int index = std::stoi(head.text.substr(1));
                if (index >= 1) return TermNode::variable(index);
            }
            fail(head, "expected a variable of the form x1, x2, ...");
        }
        int op = p.find_op(head.text);
        if (op < 0) fail(head, "unknown operation");
        expect_symbol('(');
        TermNode left = parse_application(p);
        expect_symbol(',');
        TermNode right = parse_application(p);
        if (at_symbol(',')) fail(peek(), "operations are binary: expected exactly two arguments");
        expect_symbol(')');
        return TermNode::apply(op, std::move(left), std::move(right));
    }

    void finish_identity(const Token& at, IdentityExpr& id) const {
        if (id.terms.empty()) fail(at, "identity has no terms");
        std::vector<int> vars;
        collect_vars(id.terms.front().second, vars);
        id.arity = static_cast<int>(vars.size());
        try {
            check_multilinear(id);
        } catch (const std::invalid_argument& e) {
            fail(at, e.what());
        }
    }

    std::vector<Token> tokens_;
    size_t pos_ = 0;
};

}  // namespace detail

inline Presentation parse_presentation(const std::string& text) {
    return detail::PresentationParser(text).parse();
}

inline std::string render(const TermNode& t, const Presentation& p) {
    if (t.op < 0) return "x" + std::to_string(t.var);
    return p.ops[static_cast<size_t>(t.op)].name + "(" + render(t.children[0], p) + ", " +
           render(t.children[1], p) + ")";
}

inline std::string render(const Presentation& p) {
    std::string out;
    for (const auto& op : p.ops) {
        out += "op " + op.name + " : ";
        switch (op.symmetry) {
            case Symmetry::Plain: out += "plain"; break;
            case Symmetry::Symmetric: out += "symmetric"; break;
            case Symmetry::Antisymmetric: out += "antisymmetric"; break;
        }
        out += "\n";
    }
    for (const auto& id : p.identities) {
        out += "id " + id.name + " :";
        bool first = true;
        for (const auto& [c, t] : id.terms) {
            Rat a = c;
            if (a < 0) {
                out += " -";
                a = -a;
            } else {
                out += first ? "" : " +";
            }
            out += " ";
            if (a != 1) out += to_string(a) + "*";
            out += render(t, p);
            first = false;
        }
        out += " = 0\n";
    }
    return out;
}

}  // namespace opd
