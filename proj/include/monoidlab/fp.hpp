#pragma once

#include "monoidlab/rational.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace monoidlab {

/// Element of the prime field F_p, value reduced into [0, p).
struct FpElem {
    std::int64_t value = 0;
    std::int64_t p = 2;

    friend bool operator==(const FpElem&, const FpElem&) = default;
};

FpElem operator+(const FpElem& a, const FpElem& b);
FpElem operator-(const FpElem& a, const FpElem& b);
FpElem operator*(const FpElem& a, const FpElem& b);
FpElem operator-(const FpElem& a);

std::int64_t fp_add(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t fp_sub(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t fp_mul(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t fp_pow(std::int64_t a, BigInt e, std::int64_t p);
std::int64_t fp_inv(std::int64_t a, std::int64_t p);
std::int64_t fp_reduce(BigInt v, std::int64_t p);

/// Dense polynomial over F_p. The highest stored coefficient is nonzero;
/// the zero polynomial stores no coefficients.
class FpPoly {
public:
    explicit FpPoly(std::int64_t p);
    FpPoly(std::int64_t p, std::vector<std::int64_t> coeffs);

    static FpPoly zero(std::int64_t p) { return FpPoly(p); }
    static FpPoly constant(std::int64_t p, std::int64_t c);
    static FpPoly monomial(std::int64_t p, std::int64_t c, std::size_t degree);
    static FpPoly x(std::int64_t p) { return monomial(p, 1, 1); }

    std::int64_t modulus() const { return p_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the zero polynomial is -1.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    std::int64_t coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
    const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
    std::int64_t leading_coeff() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
    bool is_monic() const { return leading_coeff() == 1; }

    FpPoly monic() const;
    FpPoly derivative() const;
    FpPoly scaled(std::int64_t c) const;

    friend FpPoly operator+(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator-(const FpPoly& a, const FpPoly& b);
    friend FpPoly operator*(const FpPoly& a, const FpPoly& b);
    friend bool operator==(const FpPoly& a, const FpPoly& b);

    /// Lexicographic-by-degree-then-coefficients order; used for canonical
    /// factor lists.
    friend bool operator<(const FpPoly& a, const FpPoly& b);

    std::string str() const;

private:
    void trim();

    std::int64_t p_;
    std::vector<std::int64_t> coeffs_;  // coeffs_[i] multiplies x^i
};

/// Quotient and remainder of a by b, b != 0.
std::pair<FpPoly, FpPoly> fp_poly_divrem(const FpPoly& a, const FpPoly& b);
FpPoly fp_poly_mod(const FpPoly& a, const FpPoly& b);
/// Exact quotient; throws if b does not divide a.
FpPoly fp_poly_divexact(const FpPoly& a, const FpPoly& b);
bool fp_poly_divides(const FpPoly& b, const FpPoly& a);
/// Monic gcd.
FpPoly fp_poly_gcd(FpPoly a, FpPoly b);
FpPoly fp_poly_pow(const FpPoly& base, const BigInt& e);
FpPoly fp_poly_powmod(const FpPoly& base, const BigInt& e, const FpPoly& mod);
/// a(x^k).
FpPoly fp_poly_substitute_power(const FpPoly& a, std::size_t k);

/// Least e >= 1 with a^e = 1; divides p - 1. Requires a != 0.
std::int64_t multiplicative_order(const FpElem& a);

/// All elements of F_p^x with multiplicative order p - 1.
std::vector<FpElem> primitive_roots(std::int64_t p);

/// Irreducibility of the binomial x^t - a over F_p, decided from the order
/// e of a: (i) gcd(t, (p-1)/e) = 1, (ii) every prime factor of t divides e,
/// (iii) if 4 | t then 4 | p - 1. The same criterion holds over any finite
/// field; this module implements the prime-field case only.
bool binomial_irreducible(std::int64_t t, const FpElem& a);

/// Parameter a for p = 3 (mod 4) such that x^(2^k) - 2a*x^(2^(k-1)) - 1 is
/// irreducible over F_p for every k >= 1. Writing p + 1 = 2^gamma * s with s
/// odd, a = a_gamma where a_1 = 0, a_j = ((a_{j-1}+1)/2)^((p+1)/4) for
/// j in [2, gamma-1], and a_gamma = ((a_{gamma-1}-1)/2)^((p+1)/4).
FpElem trinomial_parameter(std::int64_t p);

/// x^t - a over F_p.
FpPoly binomial_poly(std::int64_t p, std::int64_t t, std::int64_t a);
/// x^(2^k) - 2a*x^(2^(k-1)) - 1 over F_p.
FpPoly trinomial_poly(std::int64_t p, int k, std::int64_t a);

struct OracleConfig {
    /// Largest degree handled by exhaustive trial division.
    int trial_cutoff_degree = 12;
    /// Trial division also requires p^(deg/2) at or under this bound;
    /// beyond it the derandomized test runs instead.
    std::int64_t trial_work_budget = 1 << 21;
};

/// Exact irreducibility verdict computed without the binomial/trinomial
/// criteria: exhaustive trial division by all monic polynomials of degree
/// at most deg/2 when affordable, otherwise the derandomized test
/// (x^(p^n) = x mod f, and gcd(x^(p^(n/l)) - x, f) = 1 for each prime l | n).
bool is_irreducible_oracle(const FpPoly& f, const OracleConfig& config = {});

struct FpFactorization {
    std::int64_t unit = 1;
    std::vector<std::pair<FpPoly, int>> factors;  // monic irreducible, multiplicity
};

/// Complete factorization into monic irreducibles times a unit scalar.
/// Trial division at small degree, Berlekamp splitting above it.
FpFactorization factorize(const FpPoly& f, const OracleConfig& config = {});

/// Reassembles unit * prod(factors^multiplicity).
FpPoly fp_factorization_product(const FpFactorization& fac, std::int64_t p);

/// Checks g(x)^(p^n) == g(x^(p^n)); holds identically over F_p.
bool frobenius_power_check(const FpPoly& g, int n);

}  // namespace monoidlab
