#include "diffspec/fourth_moment.hpp"

#include <sstream>
#include <stdexcept>

#include "diffspec/errors.hpp"
#include "diffspec/poly_text.hpp"

namespace diffspec {

TargetLaw TargetLaw::gaussian() { return {TargetKind::Gaussian, 0, 0}; }

TargetLaw TargetLaw::gamma(const Rational& nu) {
    if (!(nu > Rational(0))) throw std::invalid_argument("TargetLaw: Gamma requires nu > 0");
    return {TargetKind::Gamma, nu, 0};
}

TargetLaw TargetLaw::beta(const Rational& alpha, const Rational& beta) {
    if (!(alpha > Rational(0)) || !(beta > Rational(0)))
        throw std::invalid_argument("TargetLaw: Beta requires alpha > 0 and beta > 0");
    return {TargetKind::Beta, alpha, beta};
}

Rational TargetLaw::mean() const {
    switch (kind_) {
        case TargetKind::Gaussian: return 0;
        case TargetKind::Gamma: return a_;
        case TargetKind::Beta: return a_ / (a_ + b_);
    }
    throw std::logic_error("TargetLaw: bad kind");
}

Rational TargetLaw::canonical_a() const {
    if (kind_ == TargetKind::Beta) {
        const Rational s = a_ + b_;
        return 2 * (s + 1) / s;
    }
    return 2;
}

MultiPoly TargetLaw::q_polynomial() const {
    switch (kind_) {
        case TargetKind::Gaussian: return hermite_polynomial(2);
        case TargetKind::Gamma: return laguerre_polynomial(2, a_ - 1);
        case TargetKind::Beta:
            return substitute_affine(jacobi_polynomial(2, a_ - 1, b_ - 1), {{Rational(-2), Rational(1)}});
    }
    throw std::logic_error("TargetLaw: bad kind");
}

Rational TargetLaw::expression_prefactor() const {
    switch (kind_) {
        case TargetKind::Gaussian: return Rational(1, 2);
        case TargetKind::Gamma: return 1;
        case TargetKind::Beta: {
            const Rational s = a_ + b_;
            return Rational(1) / ((s + 1) * (s + 2));
        }
    }
    throw std::logic_error("TargetLaw: bad kind");
}

std::map<int, Rational> TargetLaw::raw_moments(int up_to) const {
    std::map<int, Rational> out;
    switch (kind_) {
        case TargetKind::Gaussian:
            for (int k = 1; k <= up_to; ++k) {
                Rational m = 0;
                if (k % 2 == 0) {
                    m = 1;
                    for (int j = 1; j < k; j += 2) m *= Rational(j);
                }
                out[k] = m;
            }
            break;
        case TargetKind::Gamma: {
            Rational m = 1;
            for (int k = 1; k <= up_to; ++k) {
                m *= a_ + Rational(k - 1);  // nu (nu+1) ... (nu+k-1)
                out[k] = m;
            }
            break;
        }
        case TargetKind::Beta: {
            Rational m = 1;
            for (int k = 1; k <= up_to; ++k) {
                m *= (a_ + Rational(k - 1)) / (a_ + b_ + Rational(k - 1));
                out[k] = m;
            }
            break;
        }
    }
    return out;
}

std::string TargetLaw::describe() const {
    switch (kind_) {
        case TargetKind::Gaussian: return "gaussian";
        case TargetKind::Gamma: return "gamma(" + a_.str() + ")";
        case TargetKind::Beta: return "beta(" + a_.str() + "," + b_.str() + ")";
    }
    throw std::logic_error("TargetLaw: bad kind");
}

namespace {

Rational require_eigenvalue(const ProductStructure& s, const MultiPoly& x, const char* who) {
    const std::optional<Rational> lambda = eigenvalue_of(s, x);
    if (!lambda) throw std::invalid_argument(std::string(who) + ": X is not an eigenfunction");
    return *lambda;
}

}  // namespace

MultiPoly gamma_expression(const ProductStructure& s, const MultiPoly& x, const TargetLaw& t) {
    const Rational lambda = require_eigenvalue(s, x, "gamma_expression");
    const MultiPoly g = carre_du_champ(s, x);
    switch (t.kind()) {
        case TargetKind::Gaussian:
            return g - MultiPoly::constant(s.dim(), lambda);
        case TargetKind::Gamma: {
            const MultiPoly y = x + MultiPoly::constant(s.dim(), t.mean());
            return g - lambda * y;
        }
        case TargetKind::Beta: {
            const MultiPoly y = x + MultiPoly::constant(s.dim(), t.mean());
            const Rational sab = t.alpha() + t.beta();
            return g - (lambda / sab) * (y * (MultiPoly::constant(s.dim(), 1) - y));
        }
    }
    throw std::logic_error("gamma_expression: bad target");
}

bool l_expression_identity(const ProductStructure& s, const MultiPoly& x, const TargetLaw& t) {
    const Rational lambda = require_eigenvalue(s, x, "l_expression_identity");
    const MultiPoly lhs = gamma_expression(s, x, t);
    const MultiPoly y = x + MultiPoly::constant(s.dim(), t.mean());
    const MultiPoly qy = compose_univariate(t.q_polynomial(), y);
    const Rational eta = t.canonical_a() * lambda;
    const MultiPoly rhs = t.expression_prefactor() * (apply_generator(s, qy) + eta * qy);
    return lhs == rhs;
}

Rational distance_functional(const ProductStructure& s, const MultiPoly& x, const TargetLaw& t) {
    const MultiPoly expr = gamma_expression(s, x, t);
    return integrate(s, expr * expr);
}

MultiPoly quadratic_criterion_integrand(const MultiPoly& q, const Rational& a, const Rational& center) {
    if (q.dim() != 1 || q.degree() != 2)
        throw std::invalid_argument("quadratic_criterion_integrand: q must be univariate of degree exactly two");
    const MultiPoly dq = q.derivative(0);
    const Rational ddq = q.derivative(0).derivative(0).constant_term();  // non-zero since deg q = 2
    const MultiPoly linear = MultiPoly::variable(1, 0) - MultiPoly::constant(1, center);
    return a * (q * q) - (Rational(1) / (3 * ddq)) * (dq * dq * dq * linear);
}

Rational moment_statistic(const TargetLaw& t, const Rational& a, const std::map<int, Rational>& y_raw_moments) {
    const MultiPoly integrand = quadratic_criterion_integrand(t.q_polynomial(), a, t.mean());
    Rational out = 0;
    for (const auto& [exps, c] : integrand.terms()) {
        const int k = exps[0];
        if (k == 0) {
            out += c;
            continue;
        }
        const auto it = y_raw_moments.find(k);
        if (it == y_raw_moments.end())
            throw std::invalid_argument("moment_statistic: missing raw moment of order " + std::to_string(k));
        out += c * it->second;
    }
    return out;
}

bool spectral_condition(const ProductStructure& s, const MultiPoly& x, const TargetLaw& t) {
    const Rational lambda = require_eigenvalue(s, x, "spectral_condition");
    const SpectralDecomposition sq = decompose(s, x * x);
    return sq.max_eigenvalue() <= t.canonical_a() * lambda;
}

std::array<Rational, 5> shift_raw_moments(const std::array<Rational, 5>& m, const Rational& c) {
    std::array<Rational, 5> out{};
    const long long binom[5][5] = {{1, 0, 0, 0, 0}, {1, 1, 0, 0, 0}, {1, 2, 1, 0, 0}, {1, 3, 3, 1, 0}, {1, 4, 6, 4, 1}};
    for (int k = 0; k <= 4; ++k) {
        Rational sum = 0;
        for (int j = 0; j <= k; ++j) sum += Rational(binom[k][j]) * c.pow(k - j) * m[static_cast<std::size_t>(j)];
        out[static_cast<std::size_t>(k)] = sum;
    }
    return out;
}

std::map<int, Rational> shifted_moments_of(const ProductStructure& s, const MultiPoly& x, const Rational& mean) {
    const MultiPoly y = x + MultiPoly::constant(s.dim(), mean);
    std::map<int, Rational> out;
    for (int k = 1; k <= 4; ++k) out[k] = integrate(s, y.pow(k));
    return out;
}

CriterionResult fourth_moment_bound(const ProductStructure& s, const MultiPoly& x, const TargetLaw& t) {
    const Rational lambda = require_eigenvalue(s, x, "fourth_moment_bound");
    CriterionResult r{.target = t,
                      .lambda = lambda,
                      .distance = 0,
                      .statistic = 0,
                      .bound = 0,
                      .improved_distance = std::nullopt,
                      .improved_bound = std::nullopt,
                      .spectral_condition_ok = false,
                      .square_support = {},
                      .support_threshold = 0};
    r.distance = distance_functional(s, x, t);
    r.statistic = moment_statistic(t, t.canonical_a(), shifted_moments_of(s, x, t.mean()));
    const Rational pf = t.expression_prefactor();
    r.bound = pf * pf * t.canonical_a() * lambda * lambda * r.statistic;
    const SpectralDecomposition sq = decompose(s, x * x);
    r.square_support = sq.support();
    r.support_threshold = t.canonical_a() * lambda;
    r.spectral_condition_ok = sq.max_eigenvalue() <= r.support_threshold;
    if (t.kind() == TargetKind::Gaussian) {
        const Rational m2 = moment(s, x, 2);
        const Rational m4 = moment(s, x, 4);
        const MultiPoly centered = carre_du_champ(s, x) - MultiPoly::constant(s.dim(), lambda * m2);
        r.improved_distance = integrate(s, centered * centered);
        const Rational l1 = smallest_positive_eigenvalue(s);
        r.improved_bound = (lambda * lambda / 3 - l1 * lambda / 6) * (m4 - 3 * m2 * m2);
    }
    if (r.spectral_condition_ok) {
        const auto fail = [&](const char* which, const Rational& lhs, const Rational& rhs) {
            std::ostringstream os;
            os << "fourth_moment_bound: " << which << " violated: " << lhs.str() << " > " << rhs.str()
               << " for X = " << print_poly(x) << " on " << s.describe() << " targeting " << t.describe();
            throw MathAssertionError(os.str());
        };
        if (r.distance > r.bound) fail("distance <= bound", r.distance, r.bound);
        if (r.improved_distance && *r.improved_distance > *r.improved_bound)
            fail("improved distance <= improved bound", *r.improved_distance, *r.improved_bound);
    }
    return r;
}

StatisticComparison printed_statistic_comparison(const TargetLaw& t, const std::map<int, Rational>& y_raw_moments) {
    StatisticComparison cmp;
    cmp.quadratic_route = moment_statistic(t, t.canonical_a(), y_raw_moments);
    // centered moments m_k(X), X = Y - mean
    std::array<Rational, 5> ym{1, 0, 0, 0, 0};
    for (int k = 1; k <= 4; ++k) {
        const auto it = y_raw_moments.find(k);
        if (it == y_raw_moments.end())
            throw std::invalid_argument("printed_statistic_comparison: missing raw moment of order " + std::to_string(k));
        ym[static_cast<std::size_t>(k)] = it->second;
    }
    const std::array<Rational, 5> xm = shift_raw_moments(ym, -t.mean());
    const Rational m2 = xm[2], m3 = xm[3], m4 = xm[4];
    switch (t.kind()) {
        case TargetKind::Gaussian:
            cmp.printed = m4 - 6 * m2 + 3;
            cmp.expected_ratio = Rational(3, 2);
            break;
        case TargetKind::Gamma: {
            const Rational nu = t.nu();
            cmp.printed = m4 - 6 * m3 + 6 * (Rational(1) - nu) * m2 + 3 * nu * nu;
            cmp.expected_ratio = 6;
            break;
        }
        case TargetKind::Beta: {
            const Rational al = t.alpha(), s = t.alpha() + t.beta();
            const Rational frac = (al + 1) / (s + 2);
            cmp.printed = m4 + 3 * frac * m3 + 3 * (al + 1) * (al + 1) * m2 - s * frac.pow(3);
            cmp.expected_ratio = Rational(3) / ((s + 1) * (s + 1) * (s + 2) * (s + 2));
            break;
        }
    }
    cmp.agree = (cmp.printed == cmp.expected_ratio * cmp.quadratic_route);
    return cmp;
}

}  // namespace diffspec
