#pragma once

#include "monoidlab/mpoly.hpp"
#include "monoidlab/polyexpr.hpp"
#include "monoidlab/rational.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace monoidlab {

/// Top field K of the tower Z (= S) inside Q (= F) inside K.
enum class TopField { Q, Qs, Qst };

/// The subring S[x] + K[x]x^2 of K[x]: integer coefficients in degrees 0
/// and 1, coefficients from the configured field elsewhere. TopField::Q
/// gives the almost-atomic ring Z[x] + Q[x]x^2; Qs and Qst give the
/// quasi-atomic rings over the computable transcendental extensions.
struct SubringSpec {
    TopField coeff_field = TopField::Q;
};

bool ratfunc_in_field(const RatFunc& v, TopField field);
std::string top_field_name(TopField field);

/// Polynomial over K as a dense coefficient sequence. Subring membership is
/// a checked property, never assumed.
class SubringPoly {
public:
    SubringPoly() = default;
    explicit SubringPoly(std::vector<RatFunc> coeffs);
    static SubringPoly monomial(RatFunc c, std::size_t degree);
    static SubringPoly constant(RatFunc c);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const RatFunc& coeff(std::size_t i) const;
    const std::vector<RatFunc>& coeffs() const { return coeffs_; }

    /// Minimal index with a nonzero coefficient; requires a nonzero value.
    long order() const;
    const RatFunc& order_coeff() const;

    SubringPoly operator-() const;
    friend SubringPoly operator+(const SubringPoly& a, const SubringPoly& b);
    friend SubringPoly operator-(const SubringPoly& a, const SubringPoly& b);
    friend SubringPoly operator*(const SubringPoly& a, const SubringPoly& b);
    friend bool operator==(const SubringPoly& a, const SubringPoly& b);

    std::string str() const;

private:
    void trim();

    std::vector<RatFunc> coeffs_;
};

/// Coefficients of x^0 and x^1 lie in Z, the rest in the configured field.
bool membership_subring(const SubringPoly& f, const SubringSpec& spec);

/// Atomicity criterion for S = Z (not a field, satisfies the ACCP): a
/// nonzero member is atomic iff its order coefficient is an integer.
bool is_atomic_element(const SubringPoly& f, const SubringSpec& spec);

/// Nonzero integer s, atomic in Z, with is_atomic_element(s * f) true.
/// Default choice: the denominator of the order coefficient.
BigInt almost_atomic_witness(const SubringPoly& f, const SubringSpec& spec);

/// Cofactor g = k^(-1) x^2 for the order coefficient k; g is a subring
/// member and g * f has order coefficient 1.
SubringPoly quasi_atomic_witness(const SubringPoly& f, const SubringSpec& spec);

struct NonAlmostAtomicRecord {
    RatFunc kappa;
    SubringPoly factor;           // kappa * x^2
    SubringPoly product;          // f * kappa * x^2
    RatFunc product_order_coeff;  // kappa times the order coefficient of f
    bool order_coeff_in_base;     // always false: the refutation
};

/// For kappa in K \ F and atomic f, shows that f * (kappa x^2) fails the
/// atomicity criterion: its order coefficient is kappa times an integer,
/// hence outside Z.
NonAlmostAtomicRecord not_almost_atomic_witness(const SubringSpec& spec, const RatFunc& kappa,
                                                const SubringPoly& f);

struct DescentStep {
    int k = 0;
    Rational cofactor_coeff;  // q / a^k
    bool member = false;
    bool atomic = false;
};

struct DescentChain {
    Rational q;
    BigInt atom;
    std::vector<DescentStep> steps;
    /// Consecutive cofactors differ by the non-unit atom.
    bool strictly_proper = false;
};

/// The chain q x^2 = a^k * ((q/a^k) x^2) for k = 1..length, with every
/// cofactor certified a member and a non-unit.
DescentChain infinite_descent_demo(const Rational& q, const BigInt& atom, int length);

struct Claim1Entry {
    int index = 0;
    SubringPoly value;  // p_i(x)
    bool member = false;
    /// Low-degree coefficients that must lie in Z but do not.
    std::vector<std::pair<long, RatFunc>> violations;
};

struct Claim1Report {
    int e = 0;
    RatFunc gamma;
    std::vector<Claim1Entry> entries;
    bool any_violation = false;
};

/// Evaluates p_i(x) = (t/gamma) x^(2-e) T_i(x) + (s/gamma) x^(2-e) T_{i-1}(x)
/// for i = 0..d+1 (T_{-1} = T_{d+1} = 0) and reports which low-degree
/// coefficients fall outside Z; membership is checked in Z + Zx + x^2 K[x]
/// with K = Q(s,t).
Claim1Report claim1_constraints(const std::vector<SubringPoly>& T, int e, const RatFunc& gamma);

/// The recursion Q_{s+1}(x) = -x + z_{s+1}/z_s, Q_k(x) = Z_k/z_s - x Q_{k-1}(x)
/// for k = s+2..d. z_tail supplies z_{s+1}, Z_{s+2}, ..., Z_d in order.
/// Every Q_k is nonconstant with deg Q_k = k - s.
std::vector<QExpr> claim2_polynomials(const BigInt& z_s, const std::vector<BigInt>& z_tail,
                                      int s_index, int d);

/// Element of R[y]: coefficients indexed by powers of y, each one a
/// polynomial over K in x.
class RYPoly {
public:
    RYPoly() = default;
    explicit RYPoly(std::vector<SubringPoly> y_coeffs);
    static RYPoly from_x_poly(SubringPoly p);
    static RYPoly monomial(SubringPoly p, std::size_t y_power);

    bool is_zero() const { return y_coeffs_.empty(); }
    long y_degree() const { return static_cast<long>(y_coeffs_.size()) - 1; }
    long x_degree() const;
    const SubringPoly& y_coeff(std::size_t j) const;
    const std::vector<SubringPoly>& y_coeffs() const { return y_coeffs_; }

    bool is_unit() const;  // +1 or -1

    RYPoly operator-() const;
    friend RYPoly operator+(const RYPoly& a, const RYPoly& b);
    friend RYPoly operator-(const RYPoly& a, const RYPoly& b);
    friend RYPoly operator*(const RYPoly& a, const RYPoly& b);
    friend bool operator==(const RYPoly& a, const RYPoly& b);

    std::string str() const;

private:
    void trim();

    std::vector<SubringPoly> y_coeffs_;
};

/// Every y-coefficient individually a member of the base subring.
bool membership_subring(const RYPoly& f, const SubringSpec& spec);

/// The target element F(y) multiplies: (s x^2) y + (t x^2).
RYPoly quasi_atomic_target();

struct ProbeBudget {
    int max_x_degree = 4;
    int max_y_degree = 2;
    /// Total s/t-degree and integer size admitted in candidate coefficients.
    int coeff_complexity = 3;
};

/// Searches for a factorization A = U * V with both parts members of R[y]
/// and non-units, over candidate divisors within the budget. Finding none
/// certifies nothing beyond the searched set.
std::optional<std::pair<RYPoly, RYPoly>> bounded_member_split(const RYPoly& a,
                                                              const SubringSpec& spec,
                                                              const ProbeBudget& budget = {});

enum class RefuteStatus { Valid, Invalid, UnknownAtBudget };

struct RefuteVerdict {
    RefuteStatus status = RefuteStatus::UnknownAtBudget;
    std::string reason;
    int factor_index = -1;  // first offending factor, when applicable
};

/// Checks a claimed factorization of F * ((s x^2) y + (t x^2)) into
/// irreducibles of R[y]: the product must match exactly, every factor must
/// be a member and a non-unit, and no factor may admit a member
/// factorization within the probe budget. A candidate surviving all checks
/// is unknown-at-budget, never valid: the bounded probe cannot certify
/// irreducibility.
RefuteVerdict refute_quasi_atomic_candidate(const RYPoly& multiplier,
                                            const std::vector<RYPoly>& claimed_factors,
                                            const SubringSpec& spec, const ProbeBudget& budget = {});

}  // namespace monoidlab
