#include "monoidlab/mpoly.hpp"

#include <sstream>

namespace monoidlab {

MPoly::MPoly(Rational constant) {
    if (!constant.is_zero()) {
        terms_.emplace(Exponents{0, 0}, std::move(constant));
    }
}

MPoly MPoly::var_s() { return monomial({1, 0}, Rational(1)); }
MPoly MPoly::var_t() { return monomial({0, 1}, Rational(1)); }

MPoly MPoly::monomial(Exponents e, Rational c) {
    MPoly p;
    if (!c.is_zero()) {
        p.terms_.emplace(e, std::move(c));
    }
    return p;
}

bool MPoly::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

Rational MPoly::constant_value() const {
    auto it = terms_.find(Exponents{0, 0});
    return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const Exponents& e = terms_.rbegin()->first;
    return e.s + e.t;
}

Rational MPoly::leading_coeff() const {
    if (terms_.empty()) return Rational(0);
    return terms_.rbegin()->second;
}

void MPoly::add_term(const Exponents& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly MPoly::operator-() const {
    MPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MPoly operator+(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MPoly operator-(const MPoly& a, const MPoly& b) {
    MPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly r;
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            r.add_term(Exponents{ea.s + eb.s, ea.t + eb.t}, ca * cb);
        }
    }
    return r;
}

MPoly MPoly::scaled(const Rational& c) const {
    MPoly r;
    if (c.is_zero()) return r;
    for (const auto& [e, coeff] : terms_) r.terms_.emplace(e, coeff * c);
    return r;
}

namespace {

std::string monomial_str(const Exponents& e, const Rational& c) {
    std::ostringstream out;
    bool coeff_shown = false;
    if (e.s == 0 && e.t == 0) {
        return c.str();
    }
    if (!(c == Rational(1))) {
        if (c == Rational(-1)) {
            out << "-";
        } else {
            out << c.str() << "*";
        }
        coeff_shown = true;
    }
    bool first = true;
    auto put_var = [&](char v, int exp) {
        if (exp == 0) return;
        if (!first) out << "*";
        out << v;
        if (exp != 1) out << "^" << exp;
        first = false;
    };
    put_var('s', e.s);
    put_var('t', e.t);
    (void)coeff_shown;
    return out.str();
}

}  // namespace

std::string MPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        std::string m = monomial_str(it->first, it->second);
        if (first) {
            out << m;
            first = false;
        } else if (!m.empty() && m.front() == '-') {
            out << " - " << m.substr(1);
        } else {
            out << " + " << m;
        }
    }
    return out.str();
}

RatFunc::RatFunc(const Rational& q) : num_(MPoly(q)), den_(MPoly(Rational(1))) {}

RatFunc::RatFunc(MPoly num, MPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) {
        throw std::domain_error("RatFunc: zero denominator");
    }
    normalize();
}

namespace {

/// Scale factor that clears all coefficient denominators, divided by the
/// gcd of the resulting integer coefficients. Applied jointly to numerator
/// and denominator it yields coprime integer contents.
struct Content {
    BigInt num_gcd = 0;   // gcd of integer numerators after clearing
    BigInt den_lcm = 1;   // lcm of coefficient denominators
};

Content content_of(const MPoly& p) {
    Content c;
    for (const auto& [e, coeff] : p.terms()) {
        (void)e;
        c.den_lcm = boost::multiprecision::lcm(c.den_lcm, coeff.den());
    }
    for (const auto& [e, coeff] : p.terms()) {
        (void)e;
        BigInt scaled = coeff.num() * (c.den_lcm / coeff.den());
        c.num_gcd = boost::multiprecision::gcd(c.num_gcd, scaled);
    }
    return c;
}

}  // namespace

void RatFunc::normalize() {
    if (num_.is_zero()) {
        den_ = MPoly(Rational(1));
        return;
    }
    Content cn = content_of(num_);
    Content cd = content_of(den_);
    // integer content of p is num_gcd / den_lcm; divide both parts by
    // gcd(contents) so the remaining integer contents are coprime.
    Rational gcd_content(boost::multiprecision::gcd(cn.num_gcd, cd.num_gcd),
                         boost::multiprecision::lcm(cn.den_lcm, cd.den_lcm));
    Rational inv = Rational(1) / gcd_content;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
    if (den_.leading_coeff().is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
}

bool RatFunc::is_rational_constant() const {
    if (num_.is_zero()) return true;
    // The representation is unreduced, so decide semantically: the value is
    // a rational constant iff numerator and denominator are proportional,
    // which cross-multiplication against the leading ratio detects.
    Rational ratio = num_.leading_coeff() / den_.leading_coeff();
    return num_.scaled(Rational(ratio.den())) == den_.scaled(Rational(ratio.num()));
}

bool RatFunc::is_integer() const {
    if (!is_rational_constant()) return false;
    return rational_value().is_integer();
}

Rational RatFunc::rational_value() const {
    if (num_.is_zero()) return Rational(0);
    if (!is_rational_constant()) {
        throw std::domain_error("RatFunc: not a rational constant");
    }
    return num_.leading_coeff() / den_.leading_coeff();
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) {
        throw std::domain_error("RatFunc: inversion of zero");
    }
    return RatFunc(den_, num_);
}

RatFunc RatFunc::operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    return a * b.inverse();
}

bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string RatFunc::str() const {
    if (is_rational_constant()) {
        return rational_value().str();
    }
    if (den_ == MPoly(Rational(1))) {
        return num_.str();
    }
    auto wrapped = [](const MPoly& p) {
        std::string s = p.str();
        if (p.terms().size() > 1 || s.find_first_of("*^-") != std::string::npos) {
            return "(" + s + ")";
        }
        return s;
    };
    return wrapped(num_) + "/" + wrapped(den_);
}

}  // namespace monoidlab
