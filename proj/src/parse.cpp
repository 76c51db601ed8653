#include "qcone/parse.hpp"

#include <cctype>

namespace qcone {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    size_t pos;
};

struct Lexer {
    const std::string& src;
    size_t at = 0;

    Token next() {
        while (at < src.size() && std::isspace((unsigned char)src[at])) ++at;
        size_t start = at;
        if (at == src.size()) return {Tok::End, "", start};
        char c = src[at];
        if (std::isdigit((unsigned char)c)) {
            while (at < src.size() && std::isdigit((unsigned char)src[at])) ++at;
            return {Tok::Number, src.substr(start, at - start), start};
        }
        if (std::isalpha((unsigned char)c)) {
            while (at < src.size() && std::isalnum((unsigned char)src[at])) ++at;
            return {Tok::Ident, src.substr(start, at - start), start};
        }
        ++at;
        switch (c) {
        case '+': return {Tok::Plus, "+", start};
        case '-': return {Tok::Minus, "-", start};
        case '*': return {Tok::Star, "*", start};
        case '/': return {Tok::Slash, "/", start};
        case '^': return {Tok::Caret, "^", start};
        case '(': return {Tok::LParen, "(", start};
        case ')': return {Tok::RParen, ")", start};
        }
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
};

struct Parser {
    const Presentation& preset;
    std::vector<Token> toks;
    size_t idx = 0;

    explicit Parser(const std::string& input, const Presentation& p) : preset(p) {
        Lexer lex{input};
        for (;;) {
            Token t = lex.next();
            toks.push_back(t);
            if (t.kind == Tok::End) break;
        }
    }

    const Token& peek() const { return toks[idx]; }
    Token take() { return toks[idx++]; }
    bool accept(Tok k) {
        if (peek().kind != k) return false;
        ++idx;
        return true;
    }

    long long number(const Token& t) { return std::stoll(t.text); }

    // integer or half-integer exponent, returned doubled
    int exponent() {
        bool paren = accept(Tok::LParen);
        bool neg = accept(Tok::Minus);
        if (peek().kind != Tok::Number)
            throw ParseError("malformed exponent", peek().pos);
        Token num = take();
        long long val = number(num);
        int doubled;
        if (accept(Tok::Slash)) {
            if (peek().kind != Tok::Number || peek().text != "2")
                throw ParseError("malformed exponent (denominator must be 2)", peek().pos);
            take();
            doubled = (int)val;
        } else {
            doubled = (int)(2 * val);
        }
        if (neg) doubled = -doubled;
        if (paren && !accept(Tok::RParen))
            throw ParseError("malformed exponent (missing ')')", peek().pos);
        return doubled;
    }

    // returns true if a factor was consumed
    bool factor(ExprTerm& term) {
        const Token& t = peek();
        if (t.kind == Tok::Number) {
            Token num = take();
            long long n = number(num);
            long long d = 1;
            if (accept(Tok::Slash)) {
                if (peek().kind != Tok::Number)
                    throw ParseError("malformed rational", peek().pos);
                d = number(take());
                if (d == 0) throw ParseError("zero denominator", num.pos);
            }
            term.scalar *= QLaurent(GaussRat(Rat(n, d)));
            return true;
        }
        if (t.kind == Tok::Ident) {
            if (t.text == "i") {
                take();
                term.scalar *= QLaurent::unit_i();
                return true;
            }
            if (t.text == "q") {
                take();
                int doubled = accept(Tok::Caret) ? exponent() : 2;
                term.scalar *= QLaurent::q_pow(doubled);
                return true;
            }
            const Generator* g = preset.find_generator(t.text);
            if (!g)
                throw ParseError("unknown token '" + t.text + "' for preset " +
                                     preset.name,
                                 t.pos);
            take();
            term.word.push_back(g->id);
            return true;
        }
        return false;
    }

    ExprTerm term() {
        ExprTerm out;
        if (!factor(out))
            throw ParseError("expected a scalar or generator token", peek().pos);
        for (;;) {
            if (accept(Tok::Star)) {
                if (!factor(out))
                    throw ParseError("expected a factor after '*'", peek().pos);
                continue;
            }
            if (!factor(out)) break;
        }
        return out;
    }

    ExprAst expr() {
        ExprAst ast;
        bool negate = accept(Tok::Minus);
        ExprTerm first = term();
        if (negate) first.scalar = -first.scalar;
        ast.terms.push_back(std::move(first));
        for (;;) {
            if (accept(Tok::Plus)) {
                ast.terms.push_back(term());
            } else if (accept(Tok::Minus)) {
                ExprTerm t = term();
                t.scalar = -t.scalar;
                ast.terms.push_back(std::move(t));
            } else {
                break;
            }
        }
        if (peek().kind != Tok::End)
            throw ParseError("trailing input", peek().pos);
        return ast;
    }
};

} // namespace

ExprAst parse(const std::string& input, const Presentation& p) {
    Parser parser(input, p);
    return parser.expr();
}

Element to_element(const ExprAst& ast) {
    Element e;
    for (const auto& t : ast.terms) e.add(t.word, t.scalar);
    return e;
}

} // namespace qcone
