#include "svf/parse.hpp"

#include <cctype>
#include <optional>
#include <utility>

namespace svf {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Caret, LParen, RParen, End };

struct Token {
    Tok kind;
    std::string text;
    SourceSpan span;
};

const char* tok_name(Tok k) {
    switch (k) {
        case Tok::Number: return "number";
        case Tok::Ident: return "identifier";
        case Tok::Plus: return "'+'";
        case Tok::Minus: return "'-'";
        case Tok::Star: return "'*'";
        case Tok::Caret: return "'^'";
        case Tok::LParen: return "'('";
        case Tok::RParen: return "')'";
        case Tok::End: return "end of input";
    }
    return "?";
}

std::vector<Token> lex(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    const std::size_t n = text.size();
    auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
    auto is_ident_start = [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
    };
    auto is_ident_char = [&](char c) { return is_ident_start(c) || is_digit(c); };
    while (i < n) {
        char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        if (is_digit(c)) {
            while (i < n && is_digit(text[i])) ++i;
            if (i < n && text[i] == '/' && i + 1 < n && is_digit(text[i + 1])) {
                ++i;
                while (i < n && is_digit(text[i])) ++i;
            }
            out.push_back({Tok::Number, std::string(text.substr(start, i - start)), {start, i}});
            continue;
        }
        if (is_ident_start(c)) {
            while (i < n && is_ident_char(text[i])) ++i;
            out.push_back({Tok::Ident, std::string(text.substr(start, i - start)), {start, i}});
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::Plus; break;
            case '-': kind = Tok::Minus; break;
            case '*': kind = Tok::Star; break;
            case '^': kind = Tok::Caret; break;
            case '(': kind = Tok::LParen; break;
            case ')': kind = Tok::RParen; break;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'",
                                 {start, start + 1});
        }
        out.push_back({kind, std::string(1, c), {start, start + 1}});
        ++i;
    }
    out.push_back({Tok::End, "", {n, n}});
    return out;
}

enum class AtomKind { Number, EvenVar, OddVar, Paren };

struct VarRef {
    VarKind kind;
    std::size_t index; // 1-based within its kind
};

SuperPolynomial poly_pow(const SuperPolynomial& base, unsigned long e) {
    SuperPolynomial acc = SuperPolynomial::constant(base.signature(), 1);
    SuperPolynomial sq = base;
    while (e > 0) {
        if (e & 1) acc = SuperPolynomial::mul(acc, sq);
        e >>= 1;
        if (e > 0) sq = SuperPolynomial::mul(sq, sq);
    }
    return acc;
}

class Parser {
public:
    Parser(std::string_view text, SigPtr sig) : sig_(std::move(sig)), tokens_(lex(text)) {}

    SuperPolynomial run_poly() {
        SuperPolynomial p = parse_sum();
        expect_end();
        return p;
    }

    VectorField run_field() {
        VectorField x(sig_);
        // Whole-input "0" denotes the zero field.
        if (peek().kind == Tok::Number && peek(1).kind == Tok::End
            && rational_from_string(peek().text) == 0) {
            return x;
        }
        int sign = +1;
        if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            sign = peek().kind == Tok::Minus ? -1 : +1;
            advance();
        }
        parse_field_term(x, sign);
        while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            sign = peek().kind == Tok::Minus ? -1 : +1;
            advance();
            parse_field_term(x, sign);
        }
        expect_end();
        return x;
    }

private:
    const Token& peek(std::size_t k = 0) const {
        std::size_t i = pos_ + k;
        if (i >= tokens_.size()) i = tokens_.size() - 1;
        return tokens_[i];
    }
    const Token& advance() { return tokens_[pos_++]; }

    Token expect(Tok kind, const char* what) {
        if (peek().kind != kind)
            throw ParseError(std::string("expected ") + what + ", found " + tok_name(peek().kind),
                             peek().span, {tok_name(kind)});
        return advance();
    }

    void expect_end() {
        if (peek().kind != Tok::End)
            throw ParseError("unexpected input after expression", peek().span,
                             {tok_name(Tok::End)});
    }

    std::optional<VarRef> lookup(const std::string& name) const {
        for (std::size_t i = 0; i < sig_->even_count; ++i)
            if (sig_->even_names[i] == name) return VarRef{VarKind::Even, i + 1};
        for (std::size_t j = 0; j < sig_->odd_count; ++j)
            if (sig_->odd_names[j] == name) return VarRef{VarKind::Odd, j + 1};
        // Singleton conveniences: t <-> t1, theta <-> theta1.
        if (sig_->even_count == 1
            && ((name == "t" && sig_->even_names[0] == "t1")
                || (name == "t1" && sig_->even_names[0] == "t")))
            return VarRef{VarKind::Even, 1};
        if (sig_->odd_count == 1
            && ((name == "theta" && sig_->odd_names[0] == "theta1")
                || (name == "theta1" && sig_->odd_names[0] == "theta")))
            return VarRef{VarKind::Odd, 1};
        return std::nullopt;
    }

    SuperPolynomial parse_atom(AtomKind& kind, SourceSpan& span) {
        const Token tok = peek();
        switch (tok.kind) {
            case Tok::Number: {
                advance();
                kind = AtomKind::Number;
                span = tok.span;
                return SuperPolynomial::constant(sig_, rational_from_string(tok.text));
            }
            case Tok::Ident: {
                advance();
                auto var = lookup(tok.text);
                if (!var)
                    throw ParseError("unknown variable '" + tok.text + "'", tok.span);
                span = tok.span;
                if (var->kind == VarKind::Even) {
                    kind = AtomKind::EvenVar;
                    return SuperPolynomial::even_variable(sig_, var->index);
                }
                kind = AtomKind::OddVar;
                return SuperPolynomial::odd_variable(sig_, var->index);
            }
            case Tok::LParen: {
                const Token open = advance();
                SuperPolynomial inner = parse_sum();
                const Token close = expect(Tok::RParen, "')'");
                kind = AtomKind::Paren;
                span = {open.span.begin, close.span.end};
                return inner;
            }
            default:
                throw ParseError(std::string("expected a term, found ") + tok_name(tok.kind),
                                 tok.span, {"number", "variable", "'('"});
        }
    }

    SuperPolynomial parse_factor(AtomKind& kind) {
        SourceSpan span;
        SuperPolynomial base = parse_atom(kind, span);
        if (peek().kind != Tok::Caret) return base;
        if (kind == AtomKind::OddVar)
            throw ParseError("odd variable cannot be raised to a power", span);
        if (kind == AtomKind::Number)
            throw ParseError("power base must be an even variable or a parenthesized even expression",
                             span);
        if (kind == AtomKind::Paren && !base.is_parity_homogeneous(Parity::Even))
            throw ParseError("only even subexpressions can be raised to a power", span);
        advance();
        Token e = expect(Tok::Number, "a nonnegative integer exponent");
        if (e.text.find('/') != std::string::npos)
            throw ParseError("exponent must be a nonnegative integer", e.span);
        if (e.text.size() > 4)
            throw ParseError("exponent too large", e.span);
        return poly_pow(base, std::stoul(e.text));
    }

    SuperPolynomial parse_product() {
        AtomKind kind;
        SuperPolynomial acc = parse_factor(kind);
        bool prev_numeric = kind == AtomKind::Number;
        for (;;) {
            const Token& tok = peek();
            if (tok.kind == Tok::Star) {
                advance();
                acc = SuperPolynomial::mul(acc, parse_factor(kind));
                prev_numeric = kind == AtomKind::Number;
            } else if (tok.kind == Tok::Ident || tok.kind == Tok::LParen) {
                if (prev_numeric)
                    throw ParseError("explicit '*' required after a numeric literal", tok.span,
                                     {"'*'"});
                acc = SuperPolynomial::mul(acc, parse_factor(kind));
                prev_numeric = kind == AtomKind::Number;
            } else if (tok.kind == Tok::Number) {
                throw ParseError("explicit '*' required before a numeric literal", tok.span,
                                 {"'*'"});
            } else {
                return acc;
            }
        }
    }

    SuperPolynomial parse_sum() {
        int sign = +1;
        if (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
            sign = peek().kind == Tok::Minus ? -1 : +1;
            advance();
        }
        SuperPolynomial acc = parse_product();
        if (sign < 0) acc = -acc;
        for (;;) {
            if (peek().kind == Tok::Plus) {
                advance();
                acc += parse_product();
            } else if (peek().kind == Tok::Minus) {
                advance();
                acc -= parse_product();
            } else {
                return acc;
            }
        }
    }

    bool at_derivation() const {
        return peek().kind == Tok::Ident && peek().text == "d" && peek(1).kind == Tok::LParen;
    }

    void parse_field_term(VectorField& x, int sign) {
        SuperPolynomial coeff = SuperPolynomial::constant(sig_, 1);
        bool prev_numeric = false;
        for (;;) {
            if (at_derivation()) {
                advance(); // d
                advance(); // (
                Token var = expect(Tok::Ident, "a variable name");
                auto ref = lookup(var.text);
                if (!ref)
                    throw ParseError("unknown variable '" + var.text + "' in d(...)", var.span);
                expect(Tok::RParen, "')'");
                const Token& after = peek();
                if (after.kind != Tok::Plus && after.kind != Tok::Minus && after.kind != Tok::End)
                    throw ParseError("d(...) must be the last factor of its term", after.span,
                                     {"'+'", "'-'", "end of input"});
                std::size_t slot = ref->kind == VarKind::Even
                                       ? ref->index - 1
                                       : sig_->even_count + ref->index - 1;
                if (sign < 0) coeff = -coeff;
                x.set_coefficient(slot, x.coefficient(slot) + coeff);
                return;
            }
            AtomKind kind;
            SuperPolynomial f = parse_factor(kind);
            coeff = SuperPolynomial::mul(coeff, f);
            prev_numeric = kind == AtomKind::Number;
            const Token& tok = peek();
            if (tok.kind == Tok::Star) {
                advance();
            } else if (tok.kind == Tok::Ident || tok.kind == Tok::LParen) {
                if (prev_numeric)
                    throw ParseError("explicit '*' required after a numeric literal", tok.span,
                                     {"'*'"});
            } else if (tok.kind == Tok::Number) {
                throw ParseError("explicit '*' required before a numeric literal", tok.span,
                                 {"'*'"});
            } else {
                throw ParseError("expected d(<var>) to end the field term", tok.span,
                                 {"d(<var>)"});
            }
        }
    }

    SigPtr sig_;
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

} // namespace

SuperPolynomial parse_poly(std::string_view text, const SigPtr& sig) {
    return Parser(text, sig).run_poly();
}

VectorField parse_field(std::string_view text, const SigPtr& sig) {
    return Parser(text, sig).run_field();
}

} // namespace svf
