#pragma once

#include "monoidlab/fp.hpp"
#include "monoidlab/polyexpr.hpp"
#include "monoidlab/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace monoidlab {

/// Dense polynomial over Z. The highest stored coefficient is nonzero.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs);
    static IntPoly constant(BigInt c);
    static IntPoly from_q_expr(const QExpr& f);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    BigInt coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt leading_coeff() const { return coeffs_.empty() ? BigInt(0) : coeffs_.back(); }

    BigInt eval(const BigInt& x) const;
    /// gcd of |coefficients|; zero polynomial has content 0.
    BigInt content() const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    QExpr to_q_expr() const;
    std::string str() const;

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

/// Exact quotient in Z[x], or none when b does not divide a over Z.
std::optional<IntPoly> int_poly_divexact(const IntPoly& a, const IntPoly& b);

struct KroneckerLimits {
    /// Largest degree accepted by the exhaustive interpolation search.
    int max_degree = 4;
};

/// A nonconstant proper factor in Z[x] found by Kronecker interpolation over
/// divisor tuples of integer evaluations, or none when the polynomial is
/// indecomposable. Requires deg f >= 1 within the configured degree limit.
std::optional<IntPoly> kronecker_factor(const IntPoly& f, const KroneckerLimits& limits = {});

/// f is indecomposable iff it is not a product of two nonconstant integer
/// polynomials. Constants are rejected.
bool indecomposable(const IntPoly& f, const KroneckerLimits& limits = {});

struct AscentResultZ {
    BigInt constant;
    std::vector<IntPoly> atoms;  // primitive, positive leading coefficient
};

/// Maximal decomposition into indecomposables followed by content
/// extraction: f = constant * prod(atoms), every atom indecomposable with
/// coprime coefficients.
AscentResultZ ascent_factorization(const IntPoly& f, const KroneckerLimits& limits = {});

struct AscentResultFp {
    std::int64_t unit = 1;
    std::vector<FpPoly> atoms;  // monic irreducible, repeated by multiplicity
};

/// Over a field every coefficient set has MCD 1, so the maximal
/// decomposition is the full irreducible factorization.
AscentResultFp ascent_factorization(const FpPoly& f, const OracleConfig& config = {});

}  // namespace monoidlab
