#include "monoidlab/subring.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace monoidlab {

bool ratfunc_in_field(const RatFunc& v, TopField field) {
    switch (field) {
        case TopField::Q:
            return v.is_rational_constant();
        case TopField::Qs: {
            auto no_t = [](const MPoly& p) {
                for (const auto& [e, c] : p.terms()) {
                    (void)c;
                    if (e.t != 0) return false;
                }
                return true;
            };
            return no_t(v.num()) && no_t(v.den());
        }
        case TopField::Qst:
            return true;
    }
    return false;
}

std::string top_field_name(TopField field) {
    switch (field) {
        case TopField::Q:
            return "Q";
        case TopField::Qs:
            return "Q(s)";
        case TopField::Qst:
            return "Q(s,t)";
    }
    return "?";
}

SubringPoly::SubringPoly(std::vector<RatFunc> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

SubringPoly SubringPoly::monomial(RatFunc c, std::size_t degree) {
    std::vector<RatFunc> v(degree + 1);
    v[degree] = std::move(c);
    return SubringPoly(std::move(v));
}

SubringPoly SubringPoly::constant(RatFunc c) { return monomial(std::move(c), 0); }

void SubringPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

const RatFunc& SubringPoly::coeff(std::size_t i) const {
    static const RatFunc zero;
    return i < coeffs_.size() ? coeffs_[i] : zero;
}

long SubringPoly::order() const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) return static_cast<long>(i);
    }
    throw std::domain_error("SubringPoly: zero polynomial has no order");
}

const RatFunc& SubringPoly::order_coeff() const {
    return coeffs_[static_cast<std::size_t>(order())];
}

SubringPoly SubringPoly::operator-() const {
    std::vector<RatFunc> v(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = -coeffs_[i];
    return SubringPoly(std::move(v));
}

SubringPoly operator+(const SubringPoly& a, const SubringPoly& b) {
    std::vector<RatFunc> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) + b.coeff(i);
    return SubringPoly(std::move(v));
}

SubringPoly operator-(const SubringPoly& a, const SubringPoly& b) {
    std::vector<RatFunc> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.coeff(i) - b.coeff(i);
    return SubringPoly(std::move(v));
}

SubringPoly operator*(const SubringPoly& a, const SubringPoly& b) {
    if (a.is_zero() || b.is_zero()) return SubringPoly();
    std::vector<RatFunc> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return SubringPoly(std::move(v));
}

bool operator==(const SubringPoly& a, const SubringPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (!(a.coeffs_[i] == b.coeffs_[i])) return false;
    }
    return true;
}

std::string SubringPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        std::string cs = coeff_str(coeffs_[i]);
        if (i == 0) {
            out << cs;
            continue;
        }
        if (cs != "1") out << cs << "*";
        out << "x";
        if (i != 1) out << "^" << i;
    }
    return out.str();
}

bool membership_subring(const SubringPoly& f, const SubringSpec& spec) {
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        const RatFunc& c = f.coeff(i);
        if (c.is_zero()) continue;
        if (i <= 1) {
            if (!c.is_integer()) return false;
        } else if (!ratfunc_in_field(c, spec.coeff_field)) {
            return false;
        }
    }
    return true;
}

bool is_atomic_element(const SubringPoly& f, const SubringSpec& spec) {
    if (f.is_zero()) {
        throw std::domain_error("is_atomic_element: zero polynomial");
    }
    if (!membership_subring(f, spec)) {
        throw std::domain_error("is_atomic_element: not a subring member");
    }
    return f.order_coeff().is_integer();
}

BigInt almost_atomic_witness(const SubringPoly& f, const SubringSpec& spec) {
    if (f.is_zero()) {
        throw std::domain_error("almost_atomic_witness: zero polynomial");
    }
    if (!membership_subring(f, spec)) {
        throw std::domain_error("almost_atomic_witness: not a subring member");
    }
    const RatFunc& k = f.order_coeff();
    if (!k.is_rational_constant()) {
        throw std::domain_error("almost_atomic_witness: order coefficient outside Q");
    }
    return k.rational_value().den();
}

SubringPoly quasi_atomic_witness(const SubringPoly& f, const SubringSpec& spec) {
    if (f.is_zero()) {
        throw std::domain_error("quasi_atomic_witness: zero polynomial");
    }
    if (!membership_subring(f, spec)) {
        throw std::domain_error("quasi_atomic_witness: not a subring member");
    }
    return SubringPoly::monomial(f.order_coeff().inverse(), 2);
}

NonAlmostAtomicRecord not_almost_atomic_witness(const SubringSpec& spec, const RatFunc& kappa,
                                                const SubringPoly& f) {
    if (kappa.is_rational_constant()) {
        throw std::domain_error("not_almost_atomic_witness: kappa lies in the fraction field");
    }
    if (!is_atomic_element(f, spec)) {
        throw std::domain_error("not_almost_atomic_witness: f is not atomic");
    }
    NonAlmostAtomicRecord record;
    record.kappa = kappa;
    record.factor = SubringPoly::monomial(kappa, 2);
    record.product = f * record.factor;
    record.product_order_coeff = record.product.order_coeff();
    record.order_coeff_in_base = record.product_order_coeff.is_integer();
    return record;
}

DescentChain infinite_descent_demo(const Rational& q, const BigInt& atom, int length) {
    if (q.is_zero()) {
        throw std::domain_error("infinite_descent_demo: q must be nonzero");
    }
    if (!is_prime(atom < 0 ? BigInt(-atom) : atom)) {
        throw std::domain_error("infinite_descent_demo: the supplied element is not an atom of Z");
    }
    if (length < 1) {
        throw std::domain_error("infinite_descent_demo: length must be positive");
    }
    DescentChain chain;
    chain.q = q;
    chain.atom = atom;
    chain.strictly_proper = true;
    SubringSpec spec{TopField::Q};
    Rational power(1);
    for (int k = 1; k <= length; ++k) {
        power *= Rational(atom);
        DescentStep step;
        step.k = k;
        step.cofactor_coeff = q / power;
        SubringPoly cofactor = SubringPoly::monomial(RatFunc(step.cofactor_coeff), 2);
        step.member = membership_subring(cofactor, spec);
        step.atomic = is_atomic_element(cofactor, spec);
        chain.strictly_proper = chain.strictly_proper && step.member;
        chain.steps.push_back(step);
    }
    return chain;
}

Claim1Report claim1_constraints(const std::vector<SubringPoly>& T, int e, const RatFunc& gamma) {
    if (gamma.is_zero()) {
        throw std::domain_error("claim1_constraints: gamma must be nonzero");
    }
    if (e < 0 || e > 2) {
        throw std::domain_error("claim1_constraints: e must lie in [0, 2]");
    }
    Claim1Report report;
    report.e = e;
    report.gamma = gamma;
    RatFunc alpha = RatFunc::var_s();
    RatFunc beta = RatFunc::var_t();
    RatFunc beta_over_gamma = beta / gamma;
    RatFunc alpha_over_gamma = alpha / gamma;
    auto shift = static_cast<std::size_t>(2 - e);
    int d = static_cast<int>(T.size()) - 1;
    auto term_at = [&](int i) {
        return (i < 0 || i > d) ? SubringPoly() : T[static_cast<std::size_t>(i)];
    };
    SubringSpec spec{TopField::Qst};
    for (int i = 0; i <= d + 1; ++i) {
        Claim1Entry entry;
        entry.index = i;
        SubringPoly scaled = SubringPoly::constant(beta_over_gamma) * term_at(i) +
                             SubringPoly::constant(alpha_over_gamma) * term_at(i - 1);
        entry.value = SubringPoly::monomial(RatFunc(1), shift) * scaled;
        entry.member = membership_subring(entry.value, spec);
        for (std::size_t deg = 0; deg <= 1 && deg < entry.value.coeffs().size(); ++deg) {
            const RatFunc& c = entry.value.coeff(deg);
            if (!c.is_zero() && !c.is_integer()) {
                entry.violations.emplace_back(static_cast<long>(deg), c);
            }
        }
        report.any_violation = report.any_violation || !entry.violations.empty();
        report.entries.push_back(std::move(entry));
    }
    return report;
}

std::vector<QExpr> claim2_polynomials(const BigInt& z_s, const std::vector<BigInt>& z_tail,
                                      int s_index, int d) {
    if (z_s == 0) {
        throw std::domain_error("claim2_polynomials: z_s must be nonzero");
    }
    if (d <= s_index) {
        throw std::domain_error("claim2_polynomials: d must exceed the starting index");
    }
    if (z_tail.size() != static_cast<std::size_t>(d - s_index)) {
        throw std::domain_error("claim2_polynomials: need exactly d - s integers");
    }
    std::vector<QExpr> out;
    QExpr x = QExpr::monomial(Rational(1), Rational(1));
    QExpr current = (-x) + QExpr::constant(Rational(z_tail[0], z_s));
    out.push_back(current);
    for (int k = s_index + 2; k <= d; ++k) {
        Rational ratio(z_tail[static_cast<std::size_t>(k - s_index - 1)], z_s);
        current = QExpr::constant(ratio) - (x * current);
        out.push_back(current);
    }
    return out;
}

RYPoly::RYPoly(std::vector<SubringPoly> y_coeffs) : y_coeffs_(std::move(y_coeffs)) { trim(); }

RYPoly RYPoly::from_x_poly(SubringPoly p) { return RYPoly(std::vector<SubringPoly>{std::move(p)}); }

RYPoly RYPoly::monomial(SubringPoly p, std::size_t y_power) {
    std::vector<SubringPoly> v(y_power + 1);
    v[y_power] = std::move(p);
    return RYPoly(std::move(v));
}

void RYPoly::trim() {
    while (!y_coeffs_.empty() && y_coeffs_.back().is_zero()) y_coeffs_.pop_back();
}

long RYPoly::x_degree() const {
    long deg = -1;
    for (const SubringPoly& c : y_coeffs_) {
        if (!c.is_zero()) deg = std::max(deg, c.degree());
    }
    return deg;
}

const SubringPoly& RYPoly::y_coeff(std::size_t j) const {
    static const SubringPoly zero;
    return j < y_coeffs_.size() ? y_coeffs_[j] : zero;
}

bool RYPoly::is_unit() const {
    if (y_coeffs_.size() != 1 || y_coeffs_[0].degree() != 0) return false;
    const RatFunc& c = y_coeffs_[0].coeff(0);
    return c == RatFunc(1) || c == RatFunc(-1);
}

RYPoly RYPoly::operator-() const {
    std::vector<SubringPoly> v(y_coeffs_.size());
    for (std::size_t i = 0; i < y_coeffs_.size(); ++i) v[i] = -y_coeffs_[i];
    return RYPoly(std::move(v));
}

RYPoly operator+(const RYPoly& a, const RYPoly& b) {
    std::vector<SubringPoly> v(std::max(a.y_coeffs_.size(), b.y_coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.y_coeff(i) + b.y_coeff(i);
    return RYPoly(std::move(v));
}

RYPoly operator-(const RYPoly& a, const RYPoly& b) {
    std::vector<SubringPoly> v(std::max(a.y_coeffs_.size(), b.y_coeffs_.size()));
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = a.y_coeff(i) - b.y_coeff(i);
    return RYPoly(std::move(v));
}

RYPoly operator*(const RYPoly& a, const RYPoly& b) {
    if (a.is_zero() || b.is_zero()) return RYPoly();
    std::vector<SubringPoly> v(a.y_coeffs_.size() + b.y_coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.y_coeffs_.size(); ++i) {
        for (std::size_t j = 0; j < b.y_coeffs_.size(); ++j) {
            v[i + j] = v[i + j] + a.y_coeffs_[i] * b.y_coeffs_[j];
        }
    }
    return RYPoly(std::move(v));
}

bool operator==(const RYPoly& a, const RYPoly& b) {
    if (a.y_coeffs_.size() != b.y_coeffs_.size()) return false;
    for (std::size_t i = 0; i < a.y_coeffs_.size(); ++i) {
        if (!(a.y_coeffs_[i] == b.y_coeffs_[i])) return false;
    }
    return true;
}

std::string RYPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t j = y_coeffs_.size(); j-- > 0;) {
        if (y_coeffs_[j].is_zero()) continue;
        if (!first) out << " + ";
        first = false;
        std::string cs = y_coeffs_[j].str();
        if (j == 0) {
            out << cs;
            continue;
        }
        if (cs == "1") {
            out << "y";
        } else {
            bool needs_parens = cs.find_first_of("+-") != std::string::npos;
            out << (needs_parens ? "(" + cs + ")" : cs) << "*y";
        }
        if (j != 1) out << "^" << j;
    }
    return out.str();
}

bool membership_subring(const RYPoly& f, const SubringSpec& spec) {
    for (const SubringPoly& c : f.y_coeffs()) {
        if (!membership_subring(c, spec)) return false;
    }
    return true;
}

RYPoly quasi_atomic_target() {
    SubringPoly a = SubringPoly::monomial(RatFunc::var_s(), 2);
    SubringPoly b = SubringPoly::monomial(RatFunc::var_t(), 2);
    return RYPoly::monomial(a, 1) + RYPoly::from_x_poly(b);
}

namespace {

/// Bivariate exponent pair for the probe's division arithmetic.
struct XYKey {
    int x = 0;
    int y = 0;

    friend bool operator==(const XYKey&, const XYKey&) = default;
};

struct XYGradedLex {
    bool operator()(const XYKey& a, const XYKey& b) const {
        if (a.x + a.y != b.x + b.y) return a.x + a.y < b.x + b.y;
        if (a.x != b.x) return a.x < b.x;
        return a.y < b.y;
    }
};

using XYPoly = std::map<XYKey, RatFunc, XYGradedLex>;

XYPoly to_xy(const RYPoly& f) {
    XYPoly out;
    for (std::size_t j = 0; j < f.y_coeffs().size(); ++j) {
        const SubringPoly& c = f.y_coeff(j);
        for (std::size_t i = 0; i < c.coeffs().size(); ++i) {
            if (!c.coeff(i).is_zero()) {
                out[{static_cast<int>(i), static_cast<int>(j)}] = c.coeff(i);
            }
        }
    }
    return out;
}

RYPoly from_xy(const XYPoly& f) {
    std::size_t ydeg = 0;
    for (const auto& [k, c] : f) {
        (void)c;
        ydeg = std::max(ydeg, static_cast<std::size_t>(k.y));
    }
    std::vector<std::vector<RatFunc>> rows(ydeg + 1);
    for (const auto& [k, c] : f) {
        auto& row = rows[static_cast<std::size_t>(k.y)];
        if (row.size() <= static_cast<std::size_t>(k.x)) row.resize(static_cast<std::size_t>(k.x) + 1);
        row[static_cast<std::size_t>(k.x)] = c;
    }
    std::vector<SubringPoly> coeffs;
    coeffs.reserve(rows.size());
    for (auto& row : rows) coeffs.emplace_back(std::move(row));
    return RYPoly(std::move(coeffs));
}

void xy_add_term(XYPoly& f, const XYKey& k, const RatFunc& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = f.emplace(k, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) f.erase(it);
    }
}

XYPoly xy_mul(const XYPoly& a, const XYPoly& b) {
    XYPoly out;
    for (const auto& [ka, ca] : a) {
        for (const auto& [kb, cb] : b) {
            xy_add_term(out, {ka.x + kb.x, ka.y + kb.y}, ca * cb);
        }
    }
    return out;
}

/// Exact division by leading-term elimination in the graded-lex order;
/// none as soon as the leading term stops dividing.
std::optional<XYPoly> xy_divexact(XYPoly a, const XYPoly& u) {
    if (u.empty()) {
        throw std::domain_error("xy_divexact: division by zero");
    }
    XYPoly quotient;
    const auto& [lead_key, lead_coeff] = *u.rbegin();
    while (!a.empty()) {
        const auto& [key, coeff] = *a.rbegin();
        if (key.x < lead_key.x || key.y < lead_key.y) return std::nullopt;
        XYKey qk{key.x - lead_key.x, key.y - lead_key.y};
        RatFunc qc = coeff / lead_coeff;
        xy_add_term(quotient, qk, qc);
        for (const auto& [uk, uc] : u) {
            xy_add_term(a, {qk.x + uk.x, qk.y + uk.y}, -(qc * uc));
        }
    }
    return quotient;
}

/// Candidate coefficients: bounded rationals times bounded monomials in s, t.
std::vector<RatFunc> probe_coefficients(int complexity) {
    std::vector<Rational> rationals;
    for (long long n = 1; n <= complexity; ++n) {
        for (long long m = 1; m <= complexity; ++m) {
            Rational v{BigInt(n), BigInt(m)};
            if (std::find(rationals.begin(), rationals.end(), v) == rationals.end()) {
                rationals.push_back(v);
            }
        }
    }
    std::vector<RatFunc> out;
    RatFunc s = RatFunc::var_s();
    RatFunc t = RatFunc::var_t();
    for (int es = -complexity; es <= complexity; ++es) {
        for (int et = -complexity; et <= complexity; ++et) {
            if (std::abs(es) + std::abs(et) > complexity) continue;
            RatFunc mono(1);
            for (int i = 0; i < std::abs(es); ++i) mono = es > 0 ? mono * s : mono / s;
            for (int i = 0; i < std::abs(et); ++i) mono = et > 0 ? mono * t : mono / t;
            for (const Rational& r : rationals) {
                out.push_back(mono * RatFunc(r));
                out.push_back(mono * RatFunc(-r));
            }
        }
    }
    return out;
}

std::optional<std::pair<RYPoly, RYPoly>> try_divisor(const XYPoly& a, const XYPoly& u,
                                                     const SubringSpec& spec) {
    if (u.empty()) return std::nullopt;
    auto v = xy_divexact(a, u);
    if (!v.has_value() || v->empty()) return std::nullopt;
    RYPoly left = from_xy(u);
    RYPoly right = from_xy(*v);
    if (left.is_unit() || right.is_unit()) return std::nullopt;
    if (!membership_subring(left, spec) || !membership_subring(right, spec)) return std::nullopt;
    return std::make_pair(left, right);
}

}  // namespace

std::optional<std::pair<RYPoly, RYPoly>> bounded_member_split(const RYPoly& a,
                                                              const SubringSpec& spec,
                                                              const ProbeBudget& budget) {
    if (a.is_zero()) {
        throw std::domain_error("bounded_member_split: zero polynomial");
    }
    XYPoly target = to_xy(a);
    std::vector<XYKey> supports;
    for (int i = 0; i <= budget.max_x_degree; ++i) {
        for (int j = 0; j <= budget.max_y_degree; ++j) {
            supports.push_back({i, j});
        }
    }
    std::vector<RatFunc> coeffs = probe_coefficients(budget.coeff_complexity);
    // Monomial divisors over the full coefficient set.
    for (const XYKey& k : supports) {
        for (const RatFunc& c : coeffs) {
            XYPoly u;
            u[k] = c;
            if (auto split = try_divisor(target, u, spec)) return split;
        }
    }
    // Binomial divisors over a small coefficient set.
    std::vector<RatFunc> small{RatFunc(1),  RatFunc(-1),          RatFunc(2),
                               RatFunc(-2), RatFunc::var_s(),     RatFunc::var_t(),
                               -RatFunc::var_s(), -RatFunc::var_t()};
    for (std::size_t i = 0; i < supports.size(); ++i) {
        for (std::size_t j = i + 1; j < supports.size(); ++j) {
            for (const RatFunc& ci : small) {
                for (const RatFunc& cj : small) {
                    XYPoly u;
                    u[supports[i]] = ci;
                    u[supports[j]] = cj;
                    if (auto split = try_divisor(target, u, spec)) return split;
                }
            }
        }
    }
    return std::nullopt;
}

RefuteVerdict refute_quasi_atomic_candidate(const RYPoly& multiplier,
                                            const std::vector<RYPoly>& claimed_factors,
                                            const SubringSpec& spec, const ProbeBudget& budget) {
    RefuteVerdict verdict;
    if (claimed_factors.empty()) {
        verdict.status = RefuteStatus::Invalid;
        verdict.reason = "empty factor list";
        return verdict;
    }
    if (multiplier.is_zero() || !membership_subring(multiplier, spec)) {
        verdict.status = RefuteStatus::Invalid;
        verdict.reason = "multiplier F is not a nonzero member of R[y]";
        return verdict;
    }
    RYPoly target = multiplier * quasi_atomic_target();
    RYPoly product = claimed_factors.front();
    for (std::size_t i = 1; i < claimed_factors.size(); ++i) product = product * claimed_factors[i];
    if (!(product == target)) {
        verdict.status = RefuteStatus::Invalid;
        verdict.reason = "product does not equal F * ((s x^2) y + (t x^2))";
        return verdict;
    }
    for (std::size_t i = 0; i < claimed_factors.size(); ++i) {
        if (claimed_factors[i].is_unit()) {
            verdict.status = RefuteStatus::Invalid;
            verdict.reason = "claimed factor is a unit, not an irreducible";
            verdict.factor_index = static_cast<int>(i);
            return verdict;
        }
        if (!membership_subring(claimed_factors[i], spec)) {
            verdict.status = RefuteStatus::Invalid;
            verdict.reason = "claimed factor is not a member of R[y]";
            verdict.factor_index = static_cast<int>(i);
            return verdict;
        }
    }
    for (std::size_t i = 0; i < claimed_factors.size(); ++i) {
        if (auto split = bounded_member_split(claimed_factors[i], spec, budget)) {
            verdict.status = RefuteStatus::Invalid;
            verdict.reason = "claimed factor admits a member factorization: (" + split->first.str() +
                             ") * (" + split->second.str() + ")";
            verdict.factor_index = static_cast<int>(i);
            return verdict;
        }
    }
    verdict.status = RefuteStatus::UnknownAtBudget;
    verdict.reason = "no member factorization of any factor found at budget; "
                     "irreducibility not certified";
    return verdict;
}

}  // namespace monoidlab
