#include "monoidlab/rational.hpp"

#include <algorithm>
#include <cctype>

namespace monoidlab {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_ == 0) {
        throw std::domain_error("Rational: zero denominator");
    }
    normalize();
}

void Rational::normalize() {
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    if (den_ < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

BigInt Rational::floor() const {
    BigInt q = num_ / den_;
    if (num_ < 0 && q * den_ != num_) {
        --q;
    }
    return q;
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.num_ == 0) {
        throw std::domain_error("Rational: division by zero");
    }
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    BigInt lhs = a.num_ * b.den_;
    BigInt rhs = b.num_ * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::str() const {
    if (den_ == 1) {
        return num_.str();
    }
    return num_.str() + "/" + den_.str();
}

Rational Rational::parse(std::string_view text) {
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) {
            throw std::invalid_argument("Rational: bad integer literal '" + std::string(text) + "'");
        }
        return Rational(BigInt(std::string(text)));
    }
    std::string_view n = text.substr(0, slash);
    std::string_view d = text.substr(slash + 1);
    if (!is_int(n) || !is_int(d)) {
        throw std::invalid_argument("Rational: bad fraction literal '" + std::string(text) + "'");
    }
    return Rational(BigInt(std::string(n)), BigInt(std::string(d)));
}

Rational make_rational(BigInt n, BigInt d) {
    return Rational(std::move(n), std::move(d));
}

BigInt rational_num_part(const Rational& q) {
    if (!q.is_positive()) {
        throw std::domain_error("rational_num_part: value must be positive");
    }
    return q.num();
}

BigInt rational_den_part(const Rational& q) {
    if (!q.is_positive()) {
        throw std::domain_error("rational_den_part: value must be positive");
    }
    return q.den();
}

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (BigInt d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

std::vector<BigInt> prime_factors(BigInt n) {
    if (n == 0) {
        throw std::domain_error("prime_factors: zero input");
    }
    if (n < 0) n = -n;
    std::vector<BigInt> out;
    for (BigInt d = 2; d * d <= n; d == 2 ? d = 3 : d += 2) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

long long valuation(BigInt n, const BigInt& p) {
    long long v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

}  // namespace

long long padic_valuation(const Rational& q, const BigInt& p) {
    if (q.is_zero()) {
        throw std::domain_error("padic_valuation: zero argument");
    }
    if (!is_prime(p)) {
        throw std::domain_error("padic_valuation: modulus is not prime");
    }
    return valuation(boost::multiprecision::abs(q.num()), p) - valuation(q.den(), p);
}

bool in_localization(const Rational& q, const std::vector<BigInt>& primes) {
    if (q.is_negative()) {
        throw std::domain_error("in_localization: negative argument");
    }
    BigInt d = q.den();
    for (const BigInt& p : primes) {
        while (d % p == 0) d /= p;
    }
    return d == 1;
}

Rational rational_pow(const Rational& base, long long exponent) {
    if (exponent == 0) return Rational(1);
    if (exponent < 0) {
        if (base.is_zero()) {
            throw std::domain_error("rational_pow: zero base with negative exponent");
        }
        Rational inv = Rational(1) / base;
        return rational_pow(inv, -exponent);
    }
    auto e = static_cast<unsigned long long>(exponent);
    return Rational(bigint_pow(base.num(), e), bigint_pow(base.den(), e));
}

BigInt bigint_pow(const BigInt& base, unsigned long long exponent) {
    return boost::multiprecision::pow(base, static_cast<unsigned>(exponent));
}

}  // namespace monoidlab
