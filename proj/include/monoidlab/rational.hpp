#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace monoidlab {

using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always kept reduced with den >= 1.
/// Zero is represented as 0/1.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long n) : num_(n), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}
    Rational(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_negative() const { return num_ < 0; }
    bool is_positive() const { return num_ > 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ < 0 ? -1 : 1); }

    /// Integer part rounded toward negative infinity.
    BigInt floor() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    std::string str() const;

    /// Parses `int` or `num/den`. Throws std::invalid_argument on syntax
    /// errors and std::domain_error on a zero denominator.
    static Rational parse(std::string_view text);

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

/// Reduced, positive-denominator representative of n/d. d must be nonzero.
Rational make_rational(BigInt n, BigInt d);

/// Numerator of a positive rational written in lowest terms.
BigInt rational_num_part(const Rational& q);
/// Denominator of a positive rational written in lowest terms.
BigInt rational_den_part(const Rational& q);

bool is_prime(const BigInt& n);

/// Distinct prime factors of |n|, ascending. n must be nonzero.
std::vector<BigInt> prime_factors(BigInt n);

/// v_p(q) = v_p(num) - v_p(den). Requires q != 0 and p prime.
long long padic_valuation(const Rational& q, const BigInt& p);

/// True iff every prime factor of den(q) lies in `primes`.
/// Decides membership of q >= 0 in the localization Z[1/p : p in primes].
bool in_localization(const Rational& q, const std::vector<BigInt>& primes);

Rational rational_pow(const Rational& base, long long exponent);

BigInt bigint_pow(const BigInt& base, unsigned long long exponent);

}  // namespace monoidlab
