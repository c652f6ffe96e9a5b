#pragma once

#include "monoidlab/fp.hpp"
#include "monoidlab/mpoly.hpp"
#include "monoidlab/rational.hpp"

#include <map>
#include <sstream>
#include <string>
#include <vector>

namespace monoidlab {

inline bool coeff_is_zero(const FpElem& c) { return c.value == 0; }
inline bool coeff_is_zero(const Rational& c) { return c.is_zero(); }
inline bool coeff_is_zero(const RatFunc& c) { return c.is_zero(); }

inline std::string coeff_str(const FpElem& c) { return std::to_string(c.value); }
inline std::string coeff_str(const Rational& c) { return c.str(); }
inline std::string coeff_str(const RatFunc& c) {
    std::string s = c.str();
    if (s.find_first_of("+-*/^") != std::string::npos || s.find('s') != std::string::npos ||
        s.find('t') != std::string::npos) {
        return "(" + s + ")";
    }
    return s;
}

/// Polynomial expression with nonnegative rational exponents: an element of
/// the monoid semidomain S[M] for M a Puiseux monoid. Terms are kept in an
/// ordered map keyed by exact exponents; no zero coefficients are stored.
template <typename C>
class PolyExpr {
public:
    using TermMap = std::map<Rational, C>;

    PolyExpr() = default;

    static PolyExpr monomial(const Rational& exponent, const C& coeff) {
        if (exponent.is_negative()) {
            throw std::domain_error("PolyExpr: negative exponent");
        }
        PolyExpr f;
        f.add_term(exponent, coeff);
        return f;
    }

    static PolyExpr constant(const C& coeff) { return monomial(Rational(0), coeff); }

    void add_term(const Rational& exponent, const C& coeff) {
        if (exponent.is_negative()) {
            throw std::domain_error("PolyExpr: negative exponent");
        }
        if (coeff_is_zero(coeff)) return;
        auto [it, inserted] = terms_.emplace(exponent, coeff);
        if (!inserted) {
            it->second = it->second + coeff;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_zero());
    }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    std::vector<Rational> support() const {
        std::vector<Rational> s;
        s.reserve(terms_.size());
        for (const auto& [e, c] : terms_) s.push_back(e);
        return s;
    }

    const Rational& order() const {
        require_nonzero();
        return terms_.begin()->first;
    }

    const Rational& degree() const {
        require_nonzero();
        return terms_.rbegin()->first;
    }

    const C& order_coeff() const {
        require_nonzero();
        return terms_.begin()->second;
    }

    const C& leading_coeff() const {
        require_nonzero();
        return terms_.rbegin()->second;
    }

    PolyExpr operator-() const {
        PolyExpr r;
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend PolyExpr operator+(const PolyExpr& a, const PolyExpr& b) {
        PolyExpr r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend PolyExpr operator-(const PolyExpr& a, const PolyExpr& b) {
        PolyExpr r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    friend PolyExpr operator*(const PolyExpr& a, const PolyExpr& b) {
        PolyExpr r;
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                r.add_term(ea + eb, ca * cb);
            }
        }
        return r;
    }

    friend bool operator==(const PolyExpr& a, const PolyExpr& b) { return a.terms_ == b.terms_; }

    PolyExpr pow(unsigned long long e) const {
        if (e == 0) {
            throw std::domain_error("PolyExpr::pow: exponent must be positive");
        }
        PolyExpr acc;
        bool acc_set = false;
        PolyExpr sq = *this;
        unsigned long long n = e;
        while (n > 0) {
            if (n & 1) {
                acc = acc_set ? acc * sq : sq;
                acc_set = true;
            }
            n >>= 1;
            if (n > 0) sq = sq * sq;
        }
        return acc;
    }

    /// Maps x to x^c, scaling every exponent by c > 0.
    PolyExpr substituted_power(const Rational& c) const {
        if (!c.is_positive()) {
            throw std::domain_error("substitute_power: scale must be positive");
        }
        PolyExpr r;
        for (const auto& [e, coeff] : terms_) r.terms_.emplace(e * c, coeff);
        return r;
    }

    /// Canonical text form: terms in descending exponent order, each
    /// `coeff*x^(num/den)` with unit coefficients and trivial exponents
    /// elided.
    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) out << " + ";
            first = false;
            const auto& [e, c] = *it;
            std::string cs = coeff_str(c);
            if (e.is_zero()) {
                out << cs;
                continue;
            }
            bool unit_coeff = cs == "1";
            if (!unit_coeff) out << cs << "*";
            out << "x";
            if (!(e == Rational(1))) {
                if (e.is_integer()) {
                    out << "^" << e.str();
                } else {
                    out << "^(" << e.str() << ")";
                }
            }
        }
        return out.str();
    }

private:
    void require_nonzero() const {
        if (terms_.empty()) {
            throw std::domain_error("PolyExpr: zero expression has no support structure");
        }
    }

    TermMap terms_;
};

using FpExpr = PolyExpr<FpElem>;
using QExpr = PolyExpr<Rational>;

/// Support, order, degree, and the extreme coefficients of a nonzero
/// expression.
template <typename C>
struct ExprStructure {
    std::vector<Rational> support;
    Rational order;
    Rational degree;
    C order_coeff;
    C leading_coeff;
};

template <typename C>
ExprStructure<C> structure(const PolyExpr<C>& f) {
    return {f.support(), f.order(), f.degree(), f.order_coeff(), f.leading_coeff()};
}

/// Units of S[M] for a field S and reduced M are the nonzero constants.
template <typename C>
bool is_unit(const PolyExpr<C>& f) {
    return !f.is_zero() && f.is_constant();
}

template <typename C>
PolyExpr<C> substitute_power(const PolyExpr<C>& f, const Rational& c) {
    return f.substituted_power(c);
}

}  // namespace monoidlab
