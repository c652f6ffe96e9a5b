#include "monoidlab/parser.hpp"

#include <cctype>

namespace monoidlab {

bool GenericExpr::is_xy_constant() const {
    for (const auto& [k, c] : terms_) {
        (void)c;
        if (!k.x.is_zero() || k.y != 0) return false;
    }
    return true;
}

void GenericExpr::add_term(const Key& k, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(k, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

namespace {

enum class TokKind { Number, VarX, VarS, VarT, VarY, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };

struct Token {
    TokKind kind;
    BigInt number;
    std::size_t pos;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        current_.pos = pos_;
        if (pos_ >= text_.size()) {
            current_.kind = TokKind::End;
            return;
        }
        char c = text_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            current_.kind = TokKind::Number;
            current_.number = BigInt(std::string(text_.substr(start, pos_ - start)));
            return;
        }
        ++pos_;
        switch (c) {
            case 'x': current_.kind = TokKind::VarX; return;
            case 's': current_.kind = TokKind::VarS; return;
            case 't': current_.kind = TokKind::VarT; return;
            case 'y': current_.kind = TokKind::VarY; return;
            case '+': current_.kind = TokKind::Plus; return;
            case '-': current_.kind = TokKind::Minus; return;
            case '*': current_.kind = TokKind::Star; return;
            case '/': current_.kind = TokKind::Slash; return;
            case '^': current_.kind = TokKind::Caret; return;
            case '(': current_.kind = TokKind::LParen; return;
            case ')': current_.kind = TokKind::RParen; return;
            default:
                throw ParseError(std::string("unexpected character '") + c + "'", pos_ - 1);
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    Token current_{TokKind::End, BigInt(0), 0};
};

GenericExpr expr_constant(const RatFunc& c) {
    GenericExpr g;
    g.add_term({Rational(0), 0}, c);
    return g;
}

GenericExpr expr_add(const GenericExpr& a, const GenericExpr& b) {
    GenericExpr g = a;
    for (const auto& [k, c] : b.terms()) g.add_term(k, c);
    return g;
}

GenericExpr expr_neg(const GenericExpr& a) {
    GenericExpr g;
    for (const auto& [k, c] : a.terms()) g.add_term(k, -c);
    return g;
}

GenericExpr expr_mul(const GenericExpr& a, const GenericExpr& b) {
    GenericExpr g;
    for (const auto& [ka, ca] : a.terms()) {
        for (const auto& [kb, cb] : b.terms()) {
            g.add_term({ka.x + kb.x, ka.y + kb.y}, ca * cb);
        }
    }
    return g;
}

class Parser {
public:
    explicit Parser(std::string_view text) : lexer_(text) {}

    GenericExpr parse() {
        GenericExpr g = parse_expr();
        const Token& t = lexer_.peek();
        if (t.kind != TokKind::End) {
            throw ParseError("trailing input", t.pos);
        }
        return g;
    }

private:
    GenericExpr parse_expr() {
        GenericExpr g = parse_term();
        while (true) {
            TokKind k = lexer_.peek().kind;
            if (k == TokKind::Plus) {
                lexer_.take();
                g = expr_add(g, parse_term());
            } else if (k == TokKind::Minus) {
                lexer_.take();
                g = expr_add(g, expr_neg(parse_term()));
            } else {
                return g;
            }
        }
    }

    GenericExpr parse_term() {
        GenericExpr g = parse_factor();
        while (true) {
            TokKind k = lexer_.peek().kind;
            if (k == TokKind::Star) {
                lexer_.take();
                g = expr_mul(g, parse_factor());
            } else if (k == TokKind::Slash) {
                Token op = lexer_.take();
                GenericExpr rhs = parse_factor();
                if (!rhs.is_xy_constant()) {
                    throw ParseError("division requires a constant divisor", op.pos);
                }
                if (rhs.is_zero()) {
                    throw ParseError("division by zero", op.pos);
                }
                RatFunc inv = rhs.terms().begin()->second.inverse();
                g = expr_mul(g, expr_constant(inv));
            } else {
                return g;
            }
        }
    }

    GenericExpr parse_factor() {
        if (lexer_.peek().kind == TokKind::Minus) {
            lexer_.take();
            return expr_neg(parse_factor());
        }
        Token primary_tok = lexer_.peek();
        GenericExpr base = parse_primary();
        if (lexer_.peek().kind != TokKind::Caret) {
            return base;
        }
        Token caret = lexer_.take();
        Rational exponent = parse_exponent();
        bool base_is_x = base.terms().size() == 1 && base.terms().begin()->second == RatFunc(1) &&
                         base.terms().begin()->first.x == Rational(1) &&
                         base.terms().begin()->first.y == 0;
        if (base_is_x) {
            GenericExpr g;
            g.add_term({exponent, 0}, RatFunc(1));
            return g;
        }
        if (!exponent.is_integer()) {
            throw ParseError("fractional exponents are only supported on x", caret.pos);
        }
        BigInt e = exponent.num();
        if (e < 0) {
            if (!base.is_xy_constant()) {
                throw ParseError("negative exponents require a constant base", caret.pos);
            }
            if (base.is_zero()) {
                throw ParseError("zero base with negative exponent", primary_tok.pos);
            }
            RatFunc c = base.terms().begin()->second;
            RatFunc inv = c.inverse();
            RatFunc acc(1);
            for (BigInt i = 0; i < -e; ++i) acc = acc * inv;
            return expr_constant(acc);
        }
        if (e == 0) {
            return expr_constant(RatFunc(1));
        }
        if (e > 64) {
            throw ParseError("exponent too large", caret.pos);
        }
        GenericExpr acc = base;
        for (BigInt i = 1; i < e; ++i) acc = expr_mul(acc, base);
        return acc;
    }

    Rational parse_exponent() {
        const Token& t = lexer_.peek();
        if (t.kind == TokKind::Number) {
            return Rational(lexer_.take().number);
        }
        if (t.kind == TokKind::Minus) {
            lexer_.take();
            return -parse_exponent();
        }
        if (t.kind == TokKind::LParen) {
            Token open = lexer_.take();
            GenericExpr inner = parse_expr();
            expect(TokKind::RParen, "')'");
            if (!inner.is_xy_constant()) {
                throw ParseError("exponent must be a rational constant", open.pos);
            }
            if (inner.is_zero()) return Rational(0);
            RatFunc c = inner.terms().begin()->second;
            if (!c.is_rational_constant()) {
                throw ParseError("exponent must be a rational constant", open.pos);
            }
            return c.rational_value();
        }
        throw ParseError("expected an exponent", t.pos);
    }

    GenericExpr parse_primary() {
        Token t = lexer_.take();
        switch (t.kind) {
            case TokKind::Number:
                return expr_constant(RatFunc(Rational(t.number)));
            case TokKind::VarX: {
                GenericExpr g;
                g.add_term({Rational(1), 0}, RatFunc(1));
                return g;
            }
            case TokKind::VarY: {
                GenericExpr g;
                g.add_term({Rational(0), 1}, RatFunc(1));
                return g;
            }
            case TokKind::VarS:
                return expr_constant(RatFunc::var_s());
            case TokKind::VarT:
                return expr_constant(RatFunc::var_t());
            case TokKind::LParen: {
                GenericExpr g = parse_expr();
                expect(TokKind::RParen, "')'");
                return g;
            }
            default:
                throw ParseError("expected a value", t.pos);
        }
    }

    void expect(TokKind kind, const std::string& what) {
        const Token& t = lexer_.peek();
        if (t.kind != kind) {
            throw ParseError("expected " + what, t.pos);
        }
        lexer_.take();
    }

    Lexer lexer_;
};

void require_no_y(const GenericExpr& g) {
    for (const auto& [k, c] : g.terms()) {
        (void)c;
        if (k.y != 0) {
            throw std::domain_error("expression must not mention y");
        }
    }
}

Rational coeff_as_rational(const RatFunc& c) {
    if (!c.is_rational_constant()) {
        throw std::domain_error("coefficient " + c.str() + " outside Q");
    }
    return c.rational_value();
}

}  // namespace

GenericExpr parse_generic(std::string_view text) { return Parser(text).parse(); }

Rational to_rational(const GenericExpr& g) {
    if (g.is_zero()) return Rational(0);
    if (!g.is_xy_constant()) {
        throw std::domain_error("expected a rational constant");
    }
    return coeff_as_rational(g.terms().begin()->second);
}

RatFunc to_ratfunc(const GenericExpr& g) {
    if (g.is_zero()) return RatFunc();
    if (!g.is_xy_constant()) {
        throw std::domain_error("expected an expression in s and t only");
    }
    return g.terms().begin()->second;
}

QExpr to_q_expr(const GenericExpr& g) {
    require_no_y(g);
    QExpr f;
    for (const auto& [k, c] : g.terms()) {
        f.add_term(k.x, coeff_as_rational(c));
    }
    return f;
}

FpExpr to_fp_expr(const GenericExpr& g, std::int64_t p) {
    require_no_y(g);
    FpExpr f;
    for (const auto& [k, c] : g.terms()) {
        Rational q = coeff_as_rational(c);
        if (q.den() % p == 0) {
            throw std::domain_error("coefficient " + q.str() + " not reducible mod " +
                                    std::to_string(p));
        }
        std::int64_t value = fp_mul(fp_reduce(q.num(), p), fp_inv(fp_reduce(q.den(), p), p), p);
        f.add_term(k.x, FpElem{value, p});
    }
    return f;
}

FpPoly to_fp_poly(const GenericExpr& g, std::int64_t p) {
    FpExpr f = to_fp_expr(g, p);
    std::vector<std::int64_t> coeffs;
    for (const auto& [e, c] : f.terms()) {
        if (!e.is_integer()) {
            throw std::domain_error("standard polynomial requires integer exponents");
        }
        auto i = static_cast<std::size_t>(e.num());
        if (coeffs.size() <= i) coeffs.resize(i + 1, 0);
        coeffs[i] = c.value;
    }
    return FpPoly(p, std::move(coeffs));
}

IntPoly to_int_poly(const GenericExpr& g) { return IntPoly::from_q_expr(to_q_expr(g)); }

SubringPoly to_subring_poly(const GenericExpr& g) {
    require_no_y(g);
    std::vector<RatFunc> coeffs;
    for (const auto& [k, c] : g.terms()) {
        if (!k.x.is_integer() || k.x.is_negative()) {
            throw std::domain_error("subring polynomial requires nonnegative integer exponents");
        }
        auto i = static_cast<std::size_t>(k.x.num());
        if (coeffs.size() <= i) coeffs.resize(i + 1);
        coeffs[i] = c;
    }
    return SubringPoly(std::move(coeffs));
}

RYPoly to_ry_poly(const GenericExpr& g) {
    std::vector<std::vector<RatFunc>> rows;
    for (const auto& [k, c] : g.terms()) {
        if (!k.x.is_integer() || k.x.is_negative() || k.y < 0) {
            throw std::domain_error("polynomial in x and y requires nonnegative integer exponents");
        }
        auto j = static_cast<std::size_t>(k.y);
        auto i = static_cast<std::size_t>(k.x.num());
        if (rows.size() <= j) rows.resize(j + 1);
        if (rows[j].size() <= i) rows[j].resize(i + 1);
        rows[j][i] = c;
    }
    std::vector<SubringPoly> coeffs;
    coeffs.reserve(rows.size());
    for (auto& row : rows) coeffs.emplace_back(std::move(row));
    return RYPoly(std::move(coeffs));
}

Rational parse_rational(std::string_view text) { return to_rational(parse_generic(text)); }
RatFunc parse_ratfunc(std::string_view text) { return to_ratfunc(parse_generic(text)); }
QExpr parse_q_expr(std::string_view text) { return to_q_expr(parse_generic(text)); }
FpExpr parse_fp_expr(std::string_view text, std::int64_t p) {
    return to_fp_expr(parse_generic(text), p);
}
FpPoly parse_fp_poly(std::string_view text, std::int64_t p) {
    return to_fp_poly(parse_generic(text), p);
}
IntPoly parse_int_poly(std::string_view text) { return to_int_poly(parse_generic(text)); }
SubringPoly parse_subring_poly(std::string_view text) {
    return to_subring_poly(parse_generic(text));
}
RYPoly parse_ry_poly(std::string_view text) { return to_ry_poly(parse_generic(text)); }

}  // namespace monoidlab
