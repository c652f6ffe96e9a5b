#pragma once

#include "monoidlab/rational.hpp"

#include <map>
#include <string>
#include <utility>

namespace monoidlab {

/// Exponent vector over the two indeterminates s and t.
struct Exponents {
    int s = 0;
    int t = 0;

    friend bool operator==(const Exponents&, const Exponents&) = default;
};

/// Graded lexicographic order, s before t.
struct GradedLex {
    bool operator()(const Exponents& a, const Exponents& b) const {
        int da = a.s + a.t, db = b.s + b.t;
        if (da != db) return da < db;
        if (a.s != b.s) return a.s < b.s;
        return a.t < b.t;
    }
};

/// Polynomial in Q[s, t]. No zero coefficients are stored.
class MPoly {
public:
    using TermMap = std::map<Exponents, Rational, GradedLex>;

    MPoly() = default;
    explicit MPoly(Rational constant);
    static MPoly var_s();
    static MPoly var_t();
    static MPoly monomial(Exponents e, Rational c);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant term (zero when absent).
    Rational constant_value() const;
    const TermMap& terms() const { return terms_; }
    int total_degree() const;

    /// Coefficient of the graded-lex leading term; zero for the zero polynomial.
    Rational leading_coeff() const;

    void add_term(const Exponents& e, const Rational& c);

    MPoly operator-() const;
    friend MPoly operator+(const MPoly& a, const MPoly& b);
    friend MPoly operator-(const MPoly& a, const MPoly& b);
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend bool operator==(const MPoly& a, const MPoly& b) { return a.terms_ == b.terms_; }

    MPoly scaled(const Rational& c) const;

    std::string str() const;

private:
    TermMap terms_;
};

/// Element of Q(s, t) as a fraction of integer-coefficient polynomials.
/// Normalized so that the integer contents of numerator and denominator are
/// coprime and the denominator's leading coefficient is positive; no
/// multivariate GCD reduction is performed. Equality is decided by
/// cross-multiplication.
class RatFunc {
public:
    RatFunc() : num_(), den_(Rational(1)) {}
    RatFunc(long long n) : num_(Rational(n)), den_(Rational(1)) {}
    explicit RatFunc(const Rational& q);
    RatFunc(MPoly num, MPoly den);

    static RatFunc var_s() { return RatFunc(MPoly::var_s(), MPoly(Rational(1))); }
    static RatFunc var_t() { return RatFunc(MPoly::var_t(), MPoly(Rational(1))); }

    const MPoly& num() const { return num_; }
    const MPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    /// True iff the value is a rational number (both parts constant).
    bool is_rational_constant() const;
    /// True iff the value is an integer.
    bool is_integer() const;
    /// The value as a rational number; requires is_rational_constant().
    Rational rational_value() const;

    RatFunc inverse() const;
    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);

    friend bool operator==(const RatFunc& a, const RatFunc& b);
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    std::string str() const;

private:
    void normalize();

    MPoly num_;
    MPoly den_;
};

}  // namespace monoidlab
