#include "monoidlab/ascent.hpp"

#include <algorithm>
#include <sstream>

namespace monoidlab {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(BigInt c) { return IntPoly(std::vector<BigInt>{std::move(c)}); }

IntPoly IntPoly::from_q_expr(const QExpr& f) {
    std::vector<BigInt> coeffs;
    for (const auto& [e, c] : f.terms()) {
        if (!e.is_integer()) {
            throw std::domain_error("IntPoly: fractional exponent " + e.str());
        }
        if (!c.is_integer()) {
            throw std::domain_error("IntPoly: non-integer coefficient " + c.str());
        }
        auto i = static_cast<std::size_t>(e.num());
        if (coeffs.size() <= i) coeffs.resize(i + 1, BigInt(0));
        coeffs[i] = c.num();
    }
    return IntPoly(std::move(coeffs));
}

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt r = 0;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        r = r * x + coeffs_[i];
    }
    return r;
}

BigInt IntPoly::content() const {
    BigInt g = 0;
    for (const BigInt& c : coeffs_) g = boost::multiprecision::gcd(g, c);
    return g < 0 ? BigInt(-g) : g;
}

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return IntPoly(std::move(v));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return IntPoly(std::move(v));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<BigInt> v(std::max(a.coeffs_.size(), b.coeffs_.size()), BigInt(0));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return IntPoly(std::move(v));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<BigInt> v(a.coeffs_.size() + b.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return IntPoly(std::move(v));
}

QExpr IntPoly::to_q_expr() const {
    QExpr f;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) f.add_term(Rational(BigInt(i)), Rational(coeffs_[i]));
    }
    return f;
}

std::string IntPoly::str() const { return to_q_expr().str(); }

std::optional<IntPoly> int_poly_divexact(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) {
        throw std::domain_error("int_poly_divexact: division by zero polynomial");
    }
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<BigInt> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<BigInt> quot(static_cast<std::size_t>(a.degree() - b.degree()) + 1, BigInt(0));
    const BigInt& lead = b.leading_coeff();
    for (long i = a.degree(); i >= b.degree(); --i) {
        BigInt c = rem[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (c % lead != 0) return std::nullopt;
        BigInt q = c / lead;
        quot[static_cast<std::size_t>(i - b.degree())] = q;
        for (long j = 0; j <= b.degree(); ++j) {
            rem[static_cast<std::size_t>(i - b.degree() + j)] -= q * b.coeff(static_cast<std::size_t>(j));
        }
    }
    for (const BigInt& c : rem) {
        if (c != 0) return std::nullopt;
    }
    return IntPoly(std::move(quot));
}

namespace {

std::vector<BigInt> divisors_of(const BigInt& n, bool positive_only) {
    BigInt a = n < 0 ? BigInt(-n) : n;
    std::vector<BigInt> out;
    for (BigInt d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            out.push_back(d);
            if (d * d != a) out.push_back(a / d);
        }
    }
    std::sort(out.begin(), out.end());
    if (!positive_only) {
        std::vector<BigInt> with_signs;
        with_signs.reserve(out.size() * 2);
        for (const BigInt& d : out) {
            with_signs.push_back(d);
            with_signs.push_back(-d);
        }
        out = std::move(with_signs);
    }
    return out;
}

/// Degree-k interpolation through (points[i], values[i]); none when the
/// result is not an integer polynomial of degree exactly k.
std::optional<IntPoly> interpolate_integer(const std::vector<BigInt>& points,
                                           const std::vector<BigInt>& values, long k) {
    std::size_t n = points.size();
    std::vector<Rational> coeffs(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
        // Lagrange basis polynomial for point i, accumulated into coeffs.
        std::vector<Rational> basis{Rational(1)};
        Rational denom(1);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            std::vector<Rational> next(basis.size() + 1, Rational(0));
            for (std::size_t d = 0; d < basis.size(); ++d) {
                next[d + 1] += basis[d];
                next[d] -= basis[d] * Rational(points[j]);
            }
            basis = std::move(next);
            denom *= Rational(points[i]) - Rational(points[j]);
        }
        Rational weight = Rational(values[i]) / denom;
        for (std::size_t d = 0; d < basis.size(); ++d) coeffs[d] += basis[d] * weight;
    }
    std::vector<BigInt> integer_coeffs(n);
    for (std::size_t d = 0; d < n; ++d) {
        if (!coeffs[d].is_integer()) return std::nullopt;
        integer_coeffs[d] = coeffs[d].num();
    }
    IntPoly g(std::move(integer_coeffs));
    if (g.degree() != k) return std::nullopt;
    return g;
}

BigInt point_sequence(std::size_t index) {
    // 0, 1, -1, 2, -2, ...
    if (index == 0) return 0;
    BigInt v((index + 1) / 2);
    return index % 2 == 1 ? v : -v;
}

}  // namespace

std::optional<IntPoly> kronecker_factor(const IntPoly& f, const KroneckerLimits& limits) {
    if (f.degree() < 1) {
        throw std::domain_error("kronecker_factor: nonconstant polynomial required");
    }
    if (f.degree() > limits.max_degree) {
        throw std::domain_error("kronecker_factor: degree " + std::to_string(f.degree()) +
                                " exceeds the supported bound " + std::to_string(limits.max_degree));
    }
    for (long k = 1; 2 * k <= f.degree(); ++k) {
        std::vector<BigInt> points;
        std::size_t idx = 0;
        while (points.size() < static_cast<std::size_t>(k) + 1) {
            BigInt pt = point_sequence(idx++);
            BigInt value = f.eval(pt);
            if (value == 0) {
                // pt is an integer root, so x - pt divides f.
                return IntPoly(std::vector<BigInt>{-pt, BigInt(1)});
            }
            points.push_back(pt);
        }
        std::vector<std::vector<BigInt>> choices;
        for (std::size_t i = 0; i < points.size(); ++i) {
            choices.push_back(divisors_of(f.eval(points[i]), /*positive_only=*/i == 0));
        }
        std::vector<std::size_t> pick(points.size(), 0);
        while (true) {
            std::vector<BigInt> values(points.size());
            for (std::size_t i = 0; i < points.size(); ++i) values[i] = choices[i][pick[i]];
            if (auto g = interpolate_integer(points, values, k)) {
                if (auto q = int_poly_divexact(f, *g); q.has_value()) {
                    return g;
                }
            }
            std::size_t i = 0;
            while (i < pick.size()) {
                if (++pick[i] < choices[i].size()) break;
                pick[i] = 0;
                ++i;
            }
            if (i == pick.size()) break;
        }
    }
    return std::nullopt;
}

bool indecomposable(const IntPoly& f, const KroneckerLimits& limits) {
    if (f.degree() < 1) {
        throw std::domain_error("indecomposable: constant polynomial");
    }
    return !kronecker_factor(f, limits).has_value();
}

AscentResultZ ascent_factorization(const IntPoly& f, const KroneckerLimits& limits) {
    if (f.is_zero() || f.degree() < 1) {
        throw std::domain_error("ascent_factorization: nonzero nonconstant polynomial required");
    }
    AscentResultZ result;
    BigInt content = f.content();
    result.constant = f.leading_coeff() < 0 ? BigInt(-content) : content;
    IntPoly primitive = *int_poly_divexact(f, IntPoly::constant(result.constant));
    std::vector<IntPoly> pending{primitive};
    while (!pending.empty()) {
        IntPoly g = std::move(pending.back());
        pending.pop_back();
        if (auto factor = kronecker_factor(g, limits)) {
            IntPoly h = *factor;
            if (h.leading_coeff() < 0) h = -h;
            pending.push_back(h);
            pending.push_back(*int_poly_divexact(g, h));
        } else {
            result.atoms.push_back(std::move(g));
        }
    }
    std::sort(result.atoms.begin(), result.atoms.end(), [](const IntPoly& a, const IntPoly& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return a.coeffs() < b.coeffs();
    });
    return result;
}

AscentResultFp ascent_factorization(const FpPoly& f, const OracleConfig& config) {
    if (f.is_zero() || f.degree() < 1) {
        throw std::domain_error("ascent_factorization: nonzero nonconstant polynomial required");
    }
    FpFactorization fac = factorize(f, config);
    AscentResultFp result;
    result.unit = fac.unit;
    for (const auto& [g, m] : fac.factors) {
        for (int i = 0; i < m; ++i) result.atoms.push_back(g);
    }
    return result;
}

}  // namespace monoidlab
