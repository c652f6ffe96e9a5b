#include "monoidlab/fp.hpp"

#include <algorithm>
#include <sstream>

namespace monoidlab {

namespace {

void require_prime_modulus(std::int64_t p) {
    if (!is_prime(BigInt(p))) {
        throw std::domain_error("modulus " + std::to_string(p) + " is not prime");
    }
}

std::vector<std::int64_t> small_prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

namespace {

void require_same_modulus(const FpElem& a, const FpElem& b) {
    if (a.p != b.p) {
        throw std::domain_error("FpElem: mixed moduli " + std::to_string(a.p) + " and " +
                                std::to_string(b.p));
    }
}

}  // namespace

FpElem operator+(const FpElem& a, const FpElem& b) {
    require_same_modulus(a, b);
    return {fp_add(a.value, b.value, a.p), a.p};
}

FpElem operator-(const FpElem& a, const FpElem& b) {
    require_same_modulus(a, b);
    return {fp_sub(a.value, b.value, a.p), a.p};
}

FpElem operator*(const FpElem& a, const FpElem& b) {
    require_same_modulus(a, b);
    return {fp_mul(a.value, b.value, a.p), a.p};
}

FpElem operator-(const FpElem& a) { return {a.value == 0 ? 0 : a.p - a.value, a.p}; }

std::int64_t fp_add(std::int64_t a, std::int64_t b, std::int64_t p) {
    std::int64_t r = a + b;
    return r >= p ? r - p : r;
}

std::int64_t fp_sub(std::int64_t a, std::int64_t b, std::int64_t p) {
    std::int64_t r = a - b;
    return r < 0 ? r + p : r;
}

std::int64_t fp_mul(std::int64_t a, std::int64_t b, std::int64_t p) {
    return static_cast<std::int64_t>(static_cast<__int128>(a) * b % p);
}

std::int64_t fp_pow(std::int64_t a, BigInt e, std::int64_t p) {
    if (e < 0) {
        return fp_pow(fp_inv(a, p), -e, p);
    }
    std::int64_t base = a % p;
    if (base < 0) base += p;
    std::int64_t r = 1 % p;
    while (e > 0) {
        if ((e & 1) != 0) r = fp_mul(r, base, p);
        base = fp_mul(base, base, p);
        e >>= 1;
    }
    return r;
}

std::int64_t fp_inv(std::int64_t a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) {
        throw std::domain_error("fp_inv: zero is not invertible");
    }
    return fp_pow(a, BigInt(p - 2), p);
}

std::int64_t fp_reduce(BigInt v, std::int64_t p) {
    BigInt r = v % p;
    if (r < 0) r += p;
    return static_cast<std::int64_t>(r);
}

FpPoly::FpPoly(std::int64_t p) : p_(p) {
    require_prime_modulus(p);
}

FpPoly::FpPoly(std::int64_t p, std::vector<std::int64_t> coeffs) : p_(p), coeffs_(std::move(coeffs)) {
    require_prime_modulus(p);
    for (auto& c : coeffs_) {
        c %= p_;
        if (c < 0) c += p_;
    }
    trim();
}

FpPoly FpPoly::constant(std::int64_t p, std::int64_t c) {
    return FpPoly(p, std::vector<std::int64_t>{c});
}

FpPoly FpPoly::monomial(std::int64_t p, std::int64_t c, std::size_t degree) {
    std::vector<std::int64_t> v(degree + 1, 0);
    v[degree] = c;
    return FpPoly(p, std::move(v));
}

void FpPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

FpPoly FpPoly::monic() const {
    if (is_zero() || is_monic()) return *this;
    return scaled(fp_inv(leading_coeff(), p_));
}

FpPoly FpPoly::derivative() const {
    if (coeffs_.size() <= 1) return FpPoly(p_);
    std::vector<std::int64_t> v(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        v[i - 1] = fp_mul(coeffs_[i], static_cast<std::int64_t>(i % p_), p_);
    }
    return FpPoly(p_, std::move(v));
}

FpPoly FpPoly::scaled(std::int64_t c) const {
    c %= p_;
    if (c < 0) c += p_;
    std::vector<std::int64_t> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = fp_mul(coeffs_[i], c, p_);
    return FpPoly(p_, std::move(v));
}

FpPoly operator+(const FpPoly& a, const FpPoly& b) {
    std::vector<std::int64_t> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = fp_add(a.coeff(i), b.coeff(i), a.p_);
    return FpPoly(a.p_, std::move(v));
}

FpPoly operator-(const FpPoly& a, const FpPoly& b) {
    std::vector<std::int64_t> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = fp_sub(a.coeff(i), b.coeff(i), a.p_);
    return FpPoly(a.p_, std::move(v));
}

FpPoly operator*(const FpPoly& a, const FpPoly& b) {
    if (a.is_zero() || b.is_zero()) return FpPoly(a.p_);
    std::vector<std::int64_t> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            v[i + j] = fp_add(v[i + j], fp_mul(a.coeffs_[i], b.coeffs_[j], a.p_), a.p_);
        }
    }
    return FpPoly(a.p_, std::move(v));
}

bool operator==(const FpPoly& a, const FpPoly& b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
}

bool operator<(const FpPoly& a, const FpPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
    return std::lexicographical_compare(a.coeffs_.rbegin(), a.coeffs_.rend(), b.coeffs_.rbegin(),
                                        b.coeffs_.rend());
}

std::string FpPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i] == 0) continue;
        if (!first) out << " + ";
        first = false;
        if (i == 0) {
            out << coeffs_[i];
        } else {
            if (coeffs_[i] != 1) out << coeffs_[i] << "*";
            out << "x";
            if (i != 1) out << "^" << i;
        }
    }
    return out.str();
}

std::pair<FpPoly, FpPoly> fp_poly_divrem(const FpPoly& a, const FpPoly& b) {
    if (b.is_zero()) {
        throw std::domain_error("fp_poly_divrem: division by zero polynomial");
    }
    std::int64_t p = a.modulus();
    std::vector<std::int64_t> rem(a.coeffs().begin(), a.coeffs().end());
    long db = b.degree();
    if (a.degree() < db) return {FpPoly(p), a};
    std::vector<std::int64_t> quot(a.degree() - db + 1, 0);
    std::int64_t lead_inv = fp_inv(b.leading_coeff(), p);
    for (long i = a.degree(); i >= db; --i) {
        std::int64_t c = rem[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        std::int64_t q = fp_mul(c, lead_inv, p);
        quot[static_cast<std::size_t>(i - db)] = q;
        for (long j = 0; j <= db; ++j) {
            auto idx = static_cast<std::size_t>(i - db + j);
            rem[idx] = fp_sub(rem[idx], fp_mul(q, b.coeff(static_cast<std::size_t>(j)), p), p);
        }
    }
    return {FpPoly(p, std::move(quot)), FpPoly(p, std::move(rem))};
}

FpPoly fp_poly_mod(const FpPoly& a, const FpPoly& b) { return fp_poly_divrem(a, b).second; }

FpPoly fp_poly_divexact(const FpPoly& a, const FpPoly& b) {
    auto [q, r] = fp_poly_divrem(a, b);
    if (!r.is_zero()) {
        throw std::domain_error("fp_poly_divexact: inexact division");
    }
    return q;
}

bool fp_poly_divides(const FpPoly& b, const FpPoly& a) {
    return fp_poly_divrem(a, b).second.is_zero();
}

FpPoly fp_poly_gcd(FpPoly a, FpPoly b) {
    while (!b.is_zero()) {
        FpPoly r = fp_poly_mod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

FpPoly fp_poly_pow(const FpPoly& base, const BigInt& e) {
    if (e < 0) {
        throw std::domain_error("fp_poly_pow: negative exponent");
    }
    FpPoly result = FpPoly::constant(base.modulus(), 1);
    FpPoly b = base;
    BigInt n = e;
    while (n > 0) {
        if ((n & 1) != 0) result = result * b;
        n >>= 1;
        if (n > 0) b = b * b;
    }
    return result;
}

FpPoly fp_poly_powmod(const FpPoly& base, const BigInt& e, const FpPoly& mod) {
    FpPoly result = FpPoly::constant(base.modulus(), 1);
    FpPoly b = fp_poly_mod(base, mod);
    BigInt n = e;
    while (n > 0) {
        if ((n & 1) != 0) result = fp_poly_mod(result * b, mod);
        n >>= 1;
        if (n > 0) b = fp_poly_mod(b * b, mod);
    }
    return result;
}

FpPoly fp_poly_substitute_power(const FpPoly& a, std::size_t k) {
    if (k == 0) {
        throw std::domain_error("fp_poly_substitute_power: exponent must be positive");
    }
    if (a.is_zero()) return a;
    std::vector<std::int64_t> v(static_cast<std::size_t>(a.degree()) * k + 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) v[i * k] = a.coeff(i);
    return FpPoly(a.modulus(), std::move(v));
}

std::int64_t multiplicative_order(const FpElem& a) {
    require_prime_modulus(a.p);
    std::int64_t v = a.value % a.p;
    if (v < 0) v += a.p;
    if (v == 0) {
        throw std::domain_error("multiplicative_order: zero element");
    }
    std::int64_t e = a.p - 1;
    for (std::int64_t l : small_prime_factors(a.p - 1)) {
        while (e % l == 0 && fp_pow(v, BigInt(e / l), a.p) == 1) e /= l;
    }
    return e;
}

std::vector<FpElem> primitive_roots(std::int64_t p) {
    require_prime_modulus(p);
    std::vector<FpElem> out;
    for (std::int64_t a = 1; a < p; ++a) {
        if (multiplicative_order({a, p}) == p - 1) out.push_back({a, p});
    }
    return out;
}

bool binomial_irreducible(std::int64_t t, const FpElem& a) {
    require_prime_modulus(a.p);
    if (t < 2) {
        throw std::domain_error("binomial_irreducible: t must be at least 2");
    }
    std::int64_t e = multiplicative_order(a);
    std::int64_t cofactor = (a.p - 1) / e;
    if (BigInt(boost::multiprecision::gcd(BigInt(t), BigInt(cofactor))) != 1) return false;
    for (std::int64_t l : small_prime_factors(t)) {
        if (e % l != 0) return false;
    }
    if (t % 4 == 0 && (a.p - 1) % 4 != 0) return false;
    return true;
}

FpElem trinomial_parameter(std::int64_t p) {
    require_prime_modulus(p);
    if (p % 4 != 3) {
        throw std::domain_error("trinomial_parameter: p must be 3 mod 4");
    }
    std::int64_t m = p + 1;
    int gamma = 0;
    while (m % 2 == 0) {
        m /= 2;
        ++gamma;
    }
    std::int64_t half = fp_inv(2, p);
    BigInt exp((p + 1) / 4);
    std::int64_t a = 0;  // a_1
    for (int j = 2; j <= gamma - 1; ++j) {
        a = fp_pow(fp_mul(fp_add(a, 1, p), half, p), exp, p);
    }
    a = fp_pow(fp_mul(fp_sub(a, 1, p), half, p), exp, p);
    return {a, p};
}

FpPoly binomial_poly(std::int64_t p, std::int64_t t, std::int64_t a) {
    std::vector<std::int64_t> v(static_cast<std::size_t>(t) + 1, 0);
    v[0] = -a;
    v[static_cast<std::size_t>(t)] = 1;
    return FpPoly(p, std::move(v));
}

FpPoly trinomial_poly(std::int64_t p, int k, std::int64_t a) {
    if (k < 1) {
        throw std::domain_error("trinomial_poly: k must be positive");
    }
    std::vector<std::int64_t> v((std::size_t{1} << k) + 1, 0);
    v[0] = -1;
    v[std::size_t{1} << (k - 1)] = -2 * a;
    v[std::size_t{1} << k] = 1;
    return FpPoly(p, std::move(v));
}

namespace {

/// Enumerates monic polynomials of the given degree in lexicographic
/// coefficient order. Returns false when the enumeration wraps around.
bool next_monic(std::vector<std::int64_t>& coeffs, std::int64_t p) {
    for (std::size_t i = 0; i + 1 < coeffs.size(); ++i) {
        if (++coeffs[i] < p) return true;
        coeffs[i] = 0;
    }
    return false;
}

bool trial_division_affordable(const FpPoly& f, const OracleConfig& config) {
    long deg = f.degree();
    if (deg > config.trial_cutoff_degree) return false;
    long half = deg / 2;
    BigInt work = bigint_pow(BigInt(f.modulus()), static_cast<unsigned long long>(half));
    return work <= config.trial_work_budget;
}

bool irreducible_by_trial_division(const FpPoly& f) {
    long deg = f.degree();
    for (long d = 1; 2 * d <= deg; ++d) {
        std::vector<std::int64_t> coeffs(static_cast<std::size_t>(d) + 1, 0);
        coeffs.back() = 1;
        do {
            FpPoly g(f.modulus(), coeffs);
            if (fp_poly_divides(g, f)) return false;
        } while (next_monic(coeffs, f.modulus()));
    }
    return true;
}

/// Derandomized irreducibility test: f of degree n over F_p is irreducible
/// iff x^(p^n) = x (mod f) and gcd(x^(p^(n/l)) - x, f) = 1 for every prime
/// l dividing n.
bool irreducible_by_frobenius_test(const FpPoly& f) {
    std::int64_t p = f.modulus();
    auto n = static_cast<std::int64_t>(f.degree());
    const FpPoly x = FpPoly::x(p);
    auto frobenius_iterate = [&](std::int64_t steps) {
        FpPoly result = fp_poly_mod(x, f);
        for (std::int64_t i = 0; i < steps; ++i) {
            result = fp_poly_powmod(result, BigInt(p), f);
        }
        return result;
    };
    if (!(frobenius_iterate(n) == fp_poly_mod(x, f))) return false;
    for (std::int64_t l : small_prime_factors(n)) {
        FpPoly g = fp_poly_gcd(frobenius_iterate(n / l) - x, f);
        if (g.degree() != 0) return false;
    }
    return true;
}

}  // namespace

bool is_irreducible_oracle(const FpPoly& f, const OracleConfig& config) {
    if (f.degree() < 1) {
        throw std::domain_error("is_irreducible_oracle: constant polynomial");
    }
    if (f.degree() == 1) return true;
    if (trial_division_affordable(f, config)) {
        return irreducible_by_trial_division(f);
    }
    return irreducible_by_frobenius_test(f);
}

namespace {

void merge_factor(std::vector<std::pair<FpPoly, int>>& factors, const FpPoly& g, int mult) {
    for (auto& [h, m] : factors) {
        if (h == g) {
            m += mult;
            return;
        }
    }
    factors.emplace_back(g, mult);
}

void factor_by_trial_division(FpPoly f, int outer_mult, std::vector<std::pair<FpPoly, int>>& out) {
    std::int64_t p = f.modulus();
    for (long d = 1; 2 * d <= f.degree(); ++d) {
        std::vector<std::int64_t> coeffs(static_cast<std::size_t>(d) + 1, 0);
        coeffs.back() = 1;
        do {
            FpPoly g(p, coeffs);
            int mult = 0;
            while (fp_poly_divides(g, f)) {
                f = fp_poly_divexact(f, g);
                ++mult;
            }
            if (mult > 0) merge_factor(out, g, mult * outer_mult);
        } while (next_monic(coeffs, p) && 2 * d <= f.degree());
    }
    if (f.degree() >= 1) merge_factor(out, f, outer_mult);
}

/// Distinct irreducible factors of a monic squarefree polynomial, found by
/// Berlekamp subalgebra splitting (deterministic; the modulus is small).
void berlekamp_squarefree(const FpPoly& f, int outer_mult, std::vector<std::pair<FpPoly, int>>& out) {
    std::int64_t p = f.modulus();
    auto n = static_cast<std::size_t>(f.degree());
    // Rows of Q: coefficients of x^(p*i) mod f.
    std::vector<std::vector<std::int64_t>> q(n, std::vector<std::int64_t>(n, 0));
    FpPoly xp = fp_poly_powmod(FpPoly::x(p), BigInt(p), f);
    FpPoly power = FpPoly::constant(p, 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) q[i][j] = power.coeff(j);
        power = fp_poly_mod(power * xp, f);
    }
    // Null space of (Q - I)^T: vectors v with v(x)^p = v(x) mod f.
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m[j][i] = fp_sub(q[i][j], i == j ? 1 : 0, p);
        }
    }
    std::vector<long> pivot_of_col(n, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < n; ++col) {
        std::size_t sel = rank;
        while (sel < n && m[sel][col] == 0) ++sel;
        if (sel == n) continue;
        std::swap(m[sel], m[rank]);
        std::int64_t inv = fp_inv(m[rank][col], p);
        for (std::size_t j = 0; j < n; ++j) m[rank][j] = fp_mul(m[rank][j], inv, p);
        for (std::size_t r = 0; r < n; ++r) {
            if (r != rank && m[r][col] != 0) {
                std::int64_t factor = m[r][col];
                for (std::size_t j = 0; j < n; ++j) {
                    m[r][j] = fp_sub(m[r][j], fp_mul(factor, m[rank][j], p), p);
                }
            }
        }
        pivot_of_col[col] = static_cast<long>(rank);
        ++rank;
    }
    std::vector<FpPoly> basis;
    for (std::size_t col = 0; col < n; ++col) {
        if (pivot_of_col[col] != -1) continue;
        std::vector<std::int64_t> v(n, 0);
        v[col] = 1;
        for (std::size_t c = 0; c < n; ++c) {
            if (pivot_of_col[c] != -1) {
                v[c] = fp_sub(0, m[static_cast<std::size_t>(pivot_of_col[c])][col], p);
            }
        }
        basis.push_back(FpPoly(p, std::move(v)));
    }
    std::size_t factor_count = basis.size();
    std::vector<FpPoly> pieces{f};
    for (const FpPoly& v : basis) {
        if (pieces.size() == factor_count) break;
        if (v.degree() < 1) continue;  // the constant vector never splits
        std::vector<FpPoly> next;
        for (const FpPoly& piece : pieces) {
            if (piece.degree() <= 1) {
                next.push_back(piece);
                continue;
            }
            std::vector<FpPoly> split;
            FpPoly rest = piece;
            for (std::int64_t c = 0; c < p && rest.degree() > 0; ++c) {
                FpPoly g = fp_poly_gcd(v - FpPoly::constant(p, c), rest);
                if (g.degree() >= 1) {
                    split.push_back(g);
                    rest = fp_poly_divexact(rest, g);
                }
            }
            if (rest.degree() >= 1) split.push_back(rest);
            if (split.empty()) split.push_back(piece);
            for (auto& s : split) next.push_back(s.monic());
        }
        pieces = std::move(next);
    }
    for (const FpPoly& piece : pieces) merge_factor(out, piece, outer_mult);
}

void factor_rec(const FpPoly& f, int mult, const OracleConfig& config,
                std::vector<std::pair<FpPoly, int>>& out) {
    std::int64_t p = f.modulus();
    if (f.degree() < 1) return;
    if (trial_division_affordable(f, config)) {
        factor_by_trial_division(f, mult, out);
        return;
    }
    FpPoly deriv = f.derivative();
    if (deriv.is_zero()) {
        // f = h(x)^p with h read off from every p-th coefficient.
        std::vector<std::int64_t> h(static_cast<std::size_t>(f.degree() / p) + 1, 0);
        for (std::size_t i = 0; i < h.size(); ++i) h[i] = f.coeff(i * static_cast<std::size_t>(p));
        factor_rec(FpPoly(p, std::move(h)), mult * static_cast<int>(p), config, out);
        return;
    }
    FpPoly g = fp_poly_gcd(f, deriv);
    if (g.degree() >= 1) {
        factor_rec(g, mult, config, out);
        factor_rec(fp_poly_divexact(f, g), mult, config, out);
        return;
    }
    berlekamp_squarefree(f, mult, out);
}

}  // namespace

FpFactorization factorize(const FpPoly& f, const OracleConfig& config) {
    if (f.is_zero()) {
        throw std::domain_error("factorize: zero polynomial");
    }
    FpFactorization result;
    result.unit = f.leading_coeff();
    if (f.degree() < 1) return result;
    factor_rec(f.monic(), 1, config, result.factors);
    std::sort(result.factors.begin(), result.factors.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return result;
}

FpPoly fp_factorization_product(const FpFactorization& fac, std::int64_t p) {
    FpPoly out = FpPoly::constant(p, fac.unit);
    for (const auto& [g, m] : fac.factors) {
        out = out * fp_poly_pow(g, BigInt(m));
    }
    return out;
}

bool frobenius_power_check(const FpPoly& g, int n) {
    if (n < 0) {
        throw std::domain_error("frobenius_power_check: negative n");
    }
    if (g.is_zero() || n == 0) return true;
    std::int64_t p = g.modulus();
    BigInt e = bigint_pow(BigInt(p), static_cast<unsigned long long>(n));
    BigInt result_degree = BigInt(g.degree()) * e;
    if (result_degree > 2'000'000) {
        throw std::domain_error("frobenius_power_check: p^n too large for a dense expansion");
    }
    FpPoly lhs = fp_poly_pow(g, e);
    FpPoly rhs = fp_poly_substitute_power(g, static_cast<std::size_t>(e));
    return lhs == rhs;
}

}  // namespace monoidlab
