#pragma once

#include "monoidlab/ascent.hpp"
#include "monoidlab/fp.hpp"
#include "monoidlab/mpoly.hpp"
#include "monoidlab/polyexpr.hpp"
#include "monoidlab/subring.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace monoidlab {

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Evaluated expression over the grammar
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | primary ('^' exponent)?
///   primary:= integer | 'x' | 's' | 't' | 'y' | '(' expr ')'
/// Terms are keyed by (rational x-exponent, integer y-exponent) with
/// coefficients in Q(s,t). Division requires an (x,y)-constant divisor;
/// rational exponents are admitted on the bare variable x only.
class GenericExpr {
public:
    struct Key {
        Rational x;
        int y = 0;

        friend bool operator==(const Key&, const Key&) = default;
        friend bool operator<(const Key& a, const Key& b) {
            if (!(a.x == b.x)) return a.x < b.x;
            return a.y < b.y;
        }
    };

    using TermMap = std::map<Key, RatFunc>;

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_xy_constant() const;

    void add_term(const Key& k, const RatFunc& c);

    TermMap terms_;
};

GenericExpr parse_generic(std::string_view text);

/// Lowerings into the concrete domains; each validates shape and throws
/// std::domain_error on values outside the target domain.
Rational to_rational(const GenericExpr& g);
RatFunc to_ratfunc(const GenericExpr& g);
QExpr to_q_expr(const GenericExpr& g);
FpExpr to_fp_expr(const GenericExpr& g, std::int64_t p);
FpPoly to_fp_poly(const GenericExpr& g, std::int64_t p);
IntPoly to_int_poly(const GenericExpr& g);
SubringPoly to_subring_poly(const GenericExpr& g);
RYPoly to_ry_poly(const GenericExpr& g);

Rational parse_rational(std::string_view text);
RatFunc parse_ratfunc(std::string_view text);
QExpr parse_q_expr(std::string_view text);
FpExpr parse_fp_expr(std::string_view text, std::int64_t p);
FpPoly parse_fp_poly(std::string_view text, std::int64_t p);
IntPoly parse_int_poly(std::string_view text);
SubringPoly parse_subring_poly(std::string_view text);
RYPoly parse_ry_poly(std::string_view text);

}  // namespace monoidlab
