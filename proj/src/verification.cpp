#include "diffspec/verification.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "diffspec/errors.hpp"
#include "diffspec/poly_text.hpp"
#include "diffspec/sampling.hpp"

namespace diffspec {

Rational random_small_rational(std::mt19937_64& rng, int max_abs_num, int max_den, bool allow_zero) {
    std::uniform_int_distribution<int> num_dist(-max_abs_num, max_abs_num);
    std::uniform_int_distribution<int> den_dist(1, max_den);
    for (;;) {
        const int num = num_dist(rng);
        if (num == 0 && !allow_zero) continue;
        return {num, den_dist(rng)};
    }
}

MultiPoly random_polynomial(std::mt19937_64& rng, int dim, int max_degree, int max_terms) {
    std::uniform_int_distribution<int> term_count(1, max_terms);
    std::uniform_int_distribution<int> deg_dist(0, max_degree);
    MultiPoly p(dim);
    const int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
        // random exponent vector with bounded total degree
        int budget = deg_dist(rng);
        Exponents exps(static_cast<std::size_t>(dim), 0);
        for (int i = 0; i < dim && budget > 0; ++i) {
            std::uniform_int_distribution<int> e(0, budget);
            const int v = (i + 1 == dim) ? budget : e(rng);
            exps[static_cast<std::size_t>(i)] = v;
            budget -= v;
        }
        p.add_term(exps, random_small_rational(rng, 4, 4));
    }
    if (p.is_zero()) p += MultiPoly::constant(dim, 1);
    return p;
}

MultiPoly random_eigenfunction(const ProductStructure& s, std::mt19937_64& rng, int max_degree, int min_degree,
                               Rational* lambda_out) {
    std::uniform_int_distribution<int> deg_dist(min_degree, max_degree);
    const int p = deg_dist(rng);
    // random composition of the total degree over the coordinates
    Exponents base(static_cast<std::size_t>(s.dim()), 0);
    int budget = p;
    for (int i = 0; i < s.dim() && budget > 0; ++i) {
        std::uniform_int_distribution<int> e(0, budget);
        const int v = (i + 1 == s.dim()) ? budget : e(rng);
        base[static_cast<std::size_t>(i)] = v;
        budget -= v;
    }
    std::shuffle(base.begin(), base.end(), rng);
    Rational lambda = 0;
    for (int i = 0; i < s.dim(); ++i) lambda += s.coord(i).eigenvalue(base[static_cast<std::size_t>(i)]);

    const std::vector<Exponents> reps = eigen_index_vectors(s, lambda);
    MultiPoly x(s.dim());
    std::uniform_int_distribution<int> coin(0, 1);
    for (const Exponents& rep : reps)
        if (coin(rng)) x += random_small_rational(rng, 3, 3) * basis_product(s, rep);
    if (x.is_zero()) x = random_small_rational(rng, 3, 3) * basis_product(s, base);
    if (lambda_out) *lambda_out = lambda;
    return x;
}

std::vector<ProductStructure> default_structure_set() {
    const auto ou = CoordinateStructure::ornstein_uhlenbeck();
    const auto lag = [](long n, long d) { return CoordinateStructure::laguerre(Rational(n, d)); };
    const auto jac = [](long an, long ad, long bn, long bd) {
        return CoordinateStructure::jacobi(Rational(an, ad), Rational(bn, bd));
    };
    std::vector<ProductStructure> out;
    out.emplace_back(std::vector<CoordinateStructure>{ou});
    out.emplace_back(std::vector<CoordinateStructure>{ou, ou});
    out.emplace_back(std::vector<CoordinateStructure>{ou, ou, ou});
    out.emplace_back(std::vector<CoordinateStructure>{lag(-1, 2)});
    out.emplace_back(std::vector<CoordinateStructure>{lag(0, 1), lag(0, 1)});
    out.emplace_back(std::vector<CoordinateStructure>{lag(3, 2), lag(3, 2)});
    out.emplace_back(std::vector<CoordinateStructure>{lag(-1, 2), lag(0, 1), lag(3, 2)});
    out.emplace_back(std::vector<CoordinateStructure>{jac(1, 2, 1, 2)});
    out.emplace_back(std::vector<CoordinateStructure>{jac(1, 4, 1, 2), jac(1, 4, 1, 2)});
    out.emplace_back(std::vector<CoordinateStructure>{jac(3, 4, 1, 4)});
    out.emplace_back(std::vector<CoordinateStructure>{jac(1, 2, 1, 2), jac(1, 2, 1, 2), jac(1, 2, 1, 2)});
    out.emplace_back(std::vector<CoordinateStructure>{ou, lag(0, 1)});
    out.emplace_back(std::vector<CoordinateStructure>{ou, lag(1, 2), ou});
    return out;
}

namespace {

constexpr int kMaxEigenDegree = 4;

class Checker {
  public:
    explicit Checker(std::string name) { result_.name = std::move(name); }

    void record(bool ok, const std::function<std::string()>& describe) {
        ++result_.cases;
        if (ok) return;
        ++result_.failures;
        if (result_.counterexample.empty()) result_.counterexample = describe();
    }

    CheckResult take() { return std::move(result_); }
    void set_note(std::string note) { result_.note = std::move(note); }

  private:
    CheckResult result_;
};

std::mt19937_64 seeded_rng(const VerifyOptions& o, std::uint64_t salt) { return std::mt19937_64(chunk_seed(o.seed, salt)); }

std::string describe_case(const ProductStructure& s, const MultiPoly& x) {
    return s.describe() + "  X = " + print_poly(x);
}

// random univariate polynomial of degree <= max_degree (exact degree when forced)
MultiPoly random_univariate(std::mt19937_64& rng, int max_degree, int forced_degree = -1) {
    MultiPoly q(1);
    const int deg = forced_degree >= 0 ? forced_degree : std::uniform_int_distribution<int>(0, max_degree)(rng);
    for (int k = 0; k < deg; ++k) q.add_term(Exponents{k}, random_small_rational(rng, 3, 3, true));
    q.add_term(Exponents{deg}, random_small_rational(rng, 3, 3, false));
    return q;
}

}  // namespace

CheckResult check_square_gamma_identity(const VerifyOptions& o) {
    Checker check("square-gamma-identity");
    auto rng = seeded_rng(o, 1);
    for (const ProductStructure& s : o.structures) {
        for (int c = 0; c < o.identity_cases; ++c) {
            Rational lambda;
            const MultiPoly x = random_eigenfunction(s, rng, kMaxEigenDegree, 1, &lambda);
            const MultiPoly sq = x * x;
            const MultiPoly lhs = 2 * carre_du_champ(s, x);
            const MultiPoly rhs = apply_generator(s, sq) + (2 * lambda) * sq;
            check.record(lhs == rhs, [&] { return describe_case(s, x); });
        }
    }
    return check.take();
}

CheckResult check_integration_by_parts(const VerifyOptions& o) {
    Checker check("integration-by-parts");
    auto rng = seeded_rng(o, 2);
    for (const ProductStructure& s : o.structures) {
        for (int c = 0; c < o.pair_cases; ++c) {
            const MultiPoly p = random_polynomial(rng, s.dim(), 4, 5);
            const MultiPoly q = random_polynomial(rng, s.dim(), 4, 5);
            const Rational lhs = integrate(s, carre_du_champ(s, p, q));
            const Rational r1 = -integrate(s, p * apply_generator(s, q));
            const Rational r2 = -integrate(s, q * apply_generator(s, p));
            check.record(lhs == r1 && lhs == r2,
                         [&] { return s.describe() + "  p = " + print_poly(p) + "  q = " + print_poly(q); });
        }
    }
    return check.take();
}

CheckResult check_generator_symmetry(const VerifyOptions& o) {
    Checker check("generator-symmetry");
    auto rng = seeded_rng(o, 3);
    for (const ProductStructure& s : o.structures) {
        for (int c = 0; c < o.pair_cases; ++c) {
            const MultiPoly p = random_polynomial(rng, s.dim(), 4, 5);
            const MultiPoly q = random_polynomial(rng, s.dim(), 4, 5);
            check.record(integrate(s, p * apply_generator(s, q)) == integrate(s, q * apply_generator(s, p)),
                         [&] { return s.describe() + "  p = " + print_poly(p) + "  q = " + print_poly(q); });
        }
    }
    return check.take();
}

CheckResult check_diffusion_chain_rule(const VerifyOptions& o) {
    Checker check("diffusion-chain-rule");
    auto rng = seeded_rng(o, 4);
    for (const ProductStructure& s : o.structures) {
        for (int c = 0; c < o.pair_cases; ++c) {
            const MultiPoly p = random_polynomial(rng, s.dim(), 3, 4);
            const MultiPoly phi = random_univariate(rng, 4);
            const MultiPoly lhs = apply_generator(s, compose_univariate(phi, p));
            const MultiPoly rhs = compose_univariate(phi.derivative(0), p) * apply_generator(s, p) +
                                  compose_univariate(phi.derivative(0).derivative(0), p) * carre_du_champ(s, p);
            check.record(lhs == rhs, [&] { return s.describe() + "  p = " + print_poly(p) + "  phi = " + print_poly(phi); });
        }
    }
    return check.take();
}

CheckResult check_gamma_derivation(const VerifyOptions& o) {
    Checker check("gamma-derivation");
    auto rng = seeded_rng(o, 5);
    for (const ProductStructure& s : o.structures) {
        for (int c = 0; c < o.pair_cases; ++c) {
            const MultiPoly p = random_polynomial(rng, s.dim(), 3, 4);
            const MultiPoly phi = random_univariate(rng, 4);
            const MultiPoly lhs = carre_du_champ(s, compose_univariate(phi, p), p);
            const MultiPoly rhs = compose_univariate(phi.derivative(0), p) * carre_du_champ(s, p);
            check.record(lhs == rhs, [&] { return s.describe() + "  p = " + print_poly(p) + "  phi = " + print_poly(phi); });
        }
    }
    return check.take();
}

CheckResult check_gamma_positivity(const VerifyOptions& o) {
    Checker check("gamma-positivity");
    auto rng = seeded_rng(o, 6);
    for (const ProductStructure& s : o.structures) {
        for (int c = 0; c < o.pair_cases; ++c) {
            const MultiPoly p = random_polynomial(rng, s.dim(), 4, 5);
            check.record(integrate(s, carre_du_champ(s, p)) >= Rational(0),
                         [&] { return s.describe() + "  p = " + print_poly(p); });
        }
    }
    return check.take();
}

CheckResult check_decomposition_reconstruction(const VerifyOptions& o) {
    Checker check("decomposition-reconstruction");
    auto rng = seeded_rng(o, 7);
    for (const ProductStructure& s : o.structures) {
        for (int c = 0; c < o.reconstruction_cases; ++c) {
            const MultiPoly p = random_polynomial(rng, s.dim(), 4, 6);
            const SpectralDecomposition d = decompose(s, p);
            bool ok = d.reconstruct() == p;
            for (const auto& [eta, comp] : d.components) {
                if (!ok) break;
                ok = apply_generator(s, comp) == (-eta) * comp;
            }
            if (ok) {
                for (auto it = d.components.begin(); ok && it != d.components.end(); ++it)
                    for (auto jt = std::next(it); ok && jt != d.components.end(); ++jt)
                        ok = integrate(s, it->second * jt->second).is_zero();
            }
            check.record(ok, [&] { return s.describe() + "  p = " + print_poly(p); });
        }
    }
    return check.take();
}

CheckResult check_projection_operator_oracle(const VerifyOptions& o) {
    Checker check("projection-operator-oracle");
    auto rng = seeded_rng(o, 8);
    for (const ProductStructure& s : o.structures) {
        for (int c = 0; c < o.pair_cases; ++c) {
            const MultiPoly p = random_polynomial(rng, s.dim(), 4, 5);
            const SpectralDecomposition d = decompose(s, p);
            if (d.components.empty()) continue;
            const std::vector<Rational> support = d.support();
            // pick one eigenvalue of the support at random
            std::uniform_int_distribution<std::size_t> pick(0, support.size() - 1);
            const Rational eta = support[pick(rng)];
            const MultiPoly via_operator = project_operator_formula(s, p, eta, support);
            check.record(via_operator == project(s, p, eta),
                         [&] { return s.describe() + "  p = " + print_poly(p) + "  eta = " + eta.str(); });
        }
    }
    return check.take();
}

CheckResult check_square_annihilation(const VerifyOptions& o) {
    Checker check("square-annihilation");
    auto rng = seeded_rng(o, 9);
    for (const ProductStructure& s : o.structures) {
        for (int c = 0; c < o.identity_cases / 2; ++c) {
            const MultiPoly x = random_eigenfunction(s, rng, 3);
            const MultiPoly sq = x * x;
            MultiPoly r = sq;
            for (const Rational& eta : decompose(s, sq).support()) r = apply_generator(s, r) + eta * r;
            check.record(r.is_zero(), [&] { return describe_case(s, x); });
        }
    }
    return check.take();
}

CheckResult check_eigenfunctions_chaotic(const VerifyOptions& o) {
    Checker check("eigenfunctions-chaotic");
    auto rng = seeded_rng(o, 10);
    for (const ProductStructure& s : o.structures) {
        for (int c = 0; c < o.identity_cases; ++c) {
            const MultiPoly x = random_eigenfunction(s, rng, kMaxEigenDegree);
            const ChaosReport report = chaos_check(s, x);
            check.record(report.is_chaotic, [&] { return describe_case(s, x) + "  reason: " + report.reason; });
        }
    }
    return check.take();
}

CheckResult check_jacobi_support_bound(const VerifyOptions& o) {
    Checker check("jacobi-support-bound");
    auto rng = seeded_rng(o, 11);
    for (const ProductStructure& s : o.structures) {
        if (!s.has_jacobi_coordinate()) continue;
        bool uniform = true;
        for (int i = 1; i < s.dim(); ++i) uniform = uniform && s.coord(i) == s.coord(0);
        if (!uniform || s.coord(0).kind() != CoordKind::Jacobi) continue;
        for (int c = 0; c < o.identity_cases; ++c) {
            Rational lambda;
            const MultiPoly x = random_eigenfunction(s, rng, kMaxEigenDegree, 1, &lambda);
            const std::vector<Exponents> reps = eigen_index_vectors(s, lambda);
            const Rational bound = jacobi_support_bound(reps.front(), s.coord(0).alpha(), s.coord(0).beta());
            const Rational max_support = decompose(s, x * x).max_eigenvalue();
            check.record(max_support <= bound, [&] {
                return describe_case(s, x) + "  max_support = " + max_support.str() + "  bound = " + bound.str();
            });
        }
    }
    return check.take();
}

CheckResult check_jacobi_condition_boundary(const VerifyOptions& o) {
    Checker check("jacobi-condition-boundary");
    (void)o;
    const std::vector<Rational> values = {Rational(1, 5), Rational(1, 4), Rational(1, 2), Rational(3, 4),
                                          Rational(1),    Rational(5, 4), Rational(2)};
    for (const Rational& alpha : values) {
        for (const Rational& beta : values) {
            const Rational s = alpha + beta;
            bool holds_all = true;
            for (int p = 0; p <= 5 && holds_all; ++p) {
                const Rational lp = Rational(p) * (Rational(p) + s - 1);
                const Rational l2p = Rational(2 * p) * (Rational(2 * p) + s - 1);
                holds_all = 2 * lp * (s + 1) / s >= l2p;
            }
            const bool expected = s <= Rational(1);
            check.record(holds_all == expected, [&] {
                return "alpha = " + alpha.str() + "  beta = " + beta.str() + "  condition held = " +
                       (holds_all ? "yes" : "no");
            });
        }
    }
    return check.take();
}

CheckResult check_spectral_sandwich(const VerifyOptions& o) {
    Checker check("spectral-sandwich");
    auto rng = seeded_rng(o, 12);
    for (const ProductStructure& s : o.structures) {
        for (int c = 0; c < o.identity_cases; ++c) {
            const MultiPoly p = random_polynomial(rng, s.dim(), 4, 5);
            const SpectralDecomposition d = decompose(s, p);
            Rational eta = d.max_eigenvalue();
            if (std::uniform_int_distribution<int>(0, 1)(rng)) eta += Rational(std::uniform_int_distribution<int>(1, 3)(rng));
            const SandwichResult r = general_principle(s, p, eta);
            // eigencomponent route for both integrals
            Rational i1 = 0, i2 = 0;
            for (const auto& [lambda, comp] : d.components) {
                const Rational norm2 = integrate(s, comp * comp);
                i1 += (eta - lambda) * norm2;
                i2 += (eta - lambda) * (eta - lambda) * norm2;
            }
            const bool ok = r.sandwich_ok && r.i1 == i1 && r.i2 == i2;
            check.record(ok, [&] {
                return s.describe() + "  p = " + print_poly(p) + "  eta = " + eta.str() + "  i1 = " + r.i1.str() +
                       "  i2 = " + r.i2.str() + "  c = " + r.c.str();
            });
        }
    }
    return check.take();
}

CheckResult check_quadratic_statistic_identity(const VerifyOptions& o) {
    Checker check("quadratic-statistic-identity");
    auto rng = seeded_rng(o, 13);
    for (const ProductStructure& s : o.structures) {
        for (int c = 0; c < o.identity_cases; ++c) {
            Rational lambda;
            const MultiPoly x = random_eigenfunction(s, rng, kMaxEigenDegree, 1, &lambda);
            const Rational a = random_small_rational(rng, 4, 3, true);
            const MultiPoly q = random_univariate(rng, 2, 2);
            const MultiPoly qx = compose_univariate(q, x);
            const Rational lhs = integrate(s, qx * (apply_generator(s, qx) + (a * lambda) * qx));
            const MultiPoly integrand = quadratic_criterion_integrand(q, a, 0);
            Rational rhs = 0;
            for (const auto& [exps, coeff] : integrand.terms())
                rhs += coeff * (exps[0] == 0 ? Rational(1) : integrate(s, x.pow(exps[0])));
            rhs *= lambda;
            check.record(lhs == rhs, [&] {
                return describe_case(s, x) + "  a = " + a.str() + "  Q = " + print_poly(q) + "  lhs = " + lhs.str() +
                       "  rhs = " + rhs.str();
            });
        }
    }
    return check.take();
}

namespace {

std::vector<TargetLaw> targets_for(const ProductStructure& s) {
    std::vector<TargetLaw> out{TargetLaw::gaussian(), TargetLaw::gamma(1), TargetLaw::gamma(Rational(3, 2))};
    if (s.has_jacobi_coordinate() && s.coord(0).kind() == CoordKind::Jacobi)
        out.push_back(TargetLaw::beta(s.coord(0).alpha(), s.coord(0).beta()));
    else
        out.push_back(TargetLaw::beta(Rational(1, 2), Rational(1, 2)));
    return out;
}

}  // namespace

CheckResult check_criterion_bound_chain(const VerifyOptions& o) {
    Checker check("criterion-bound-chain");
    auto rng = seeded_rng(o, 14);
    int condition_ok_cases = 0;
    for (const ProductStructure& s : o.structures) {
        const std::vector<TargetLaw> targets = targets_for(s);
        for (int c = 0; c < o.identity_cases / 2; ++c) {
            const MultiPoly x = random_eigenfunction(s, rng, 3);
            const TargetLaw& t = targets[static_cast<std::size_t>(c) % targets.size()];
            bool ok = true;
            std::string detail;
            try {
                const CriterionResult r = fourth_moment_bound(s, x, t);
                if (r.spectral_condition_ok) {
                    ++condition_ok_cases;
                    // distance <= bound is asserted inside; statistic must be non-negative
                    ok = r.statistic >= Rational(0) && r.distance <= r.bound;
                    detail = "statistic = " + r.statistic.str() + "  distance = " + r.distance.str() +
                             "  bound = " + r.bound.str();
                }
            } catch (const MathAssertionError& e) {
                ok = false;
                detail = e.what();
            }
            check.record(ok, [&] { return describe_case(s, x) + "  target = " + t.describe() + "  " + detail; });
        }
    }
    check.set_note("spectral condition held in " + std::to_string(condition_ok_cases) + " cases");
    return check.take();
}

CheckResult check_fourth_moment_positivity(const VerifyOptions& o) {
    Checker check("fourth-moment-positivity");
    auto rng = seeded_rng(o, 15);
    int strict = 0;
    int total = 0;
    for (const ProductStructure& s : o.structures) {
        if (s.has_jacobi_coordinate()) continue;
        bool all_ou = true;
        for (const CoordinateStructure& c : s.coords()) all_ou = all_ou && c.kind() == CoordKind::OrnsteinUhlenbeck;
        if (!all_ou) continue;
        for (int c = 0; c < o.identity_cases; ++c) {
            const MultiPoly x = random_eigenfunction(s, rng, kMaxEigenDegree, 2);
            const Rational excess = moment(s, x, 4) - 3 * moment(s, x, 2).pow(2);
            ++total;
            if (excess > Rational(0)) ++strict;
            check.record(excess >= Rational(0), [&] { return describe_case(s, x) + "  excess = " + excess.str(); });
        }
    }
    check.set_note("strict inequality in " + std::to_string(strict) + "/" + std::to_string(total) + " cases");
    return check.take();
}

CheckResult check_target_vanishing(const VerifyOptions& o) {
    Checker check("target-vanishing");
    (void)o;
    std::vector<TargetLaw> targets{TargetLaw::gaussian()};
    for (int k = 1; k <= 10; ++k) targets.push_back(TargetLaw::gamma(Rational(k, 2)));
    const std::vector<std::pair<Rational, Rational>> beta_params = {
        {Rational(1, 2), Rational(1, 2)}, {Rational(1, 4), Rational(3, 4)}, {Rational(1), Rational(1)},
        {Rational(2), Rational(3)},       {Rational(1, 3), Rational(1, 3)}, {Rational(3, 2), Rational(1, 2)},
        {Rational(1), Rational(2)},       {Rational(5), Rational(1)},      {Rational(1, 5), Rational(2, 5)},
        {Rational(3), Rational(3)},       {Rational(2), Rational(2)},      {Rational(1, 2), Rational(1, 4)}};
    for (const auto& [a, b] : beta_params) targets.push_back(TargetLaw::beta(a, b));
    for (const TargetLaw& t : targets) {
        const Rational stat = moment_statistic(t, t.canonical_a(), t.raw_moments(4));
        check.record(stat.is_zero(), [&] { return t.describe() + "  statistic = " + stat.str(); });
    }
    return check.take();
}

CheckResult check_l_expression_identities(const VerifyOptions& o) {
    Checker check("l-expression-identity");
    auto rng = seeded_rng(o, 16);
    for (const ProductStructure& s : o.structures) {
        const std::vector<TargetLaw> targets = targets_for(s);
        for (int c = 0; c < o.identity_cases / 2; ++c) {
            const MultiPoly x = random_eigenfunction(s, rng, 3);
            const TargetLaw& t = targets[static_cast<std::size_t>(c) % targets.size()];
            check.record(l_expression_identity(s, x, t),
                         [&] { return describe_case(s, x) + "  target = " + t.describe(); });
        }
    }
    return check.take();
}

std::vector<Discrepancy> known_discrepancies() {
    std::vector<Discrepancy> out;

    {
        // The Gamma-approximation statement reads "2 lambda_p <= lambda_{2p}"
        // while its derivation (and this implementation) consume the reverse.
        Discrepancy d;
        d.id = "gamma-hypothesis-direction";
        d.description =
            "The Gamma-approximation bound is stated under '2 lambda_p <= lambda_{2p}' but its derivation "
            "uses 'lambda_{2p} <= 2 lambda_p'; the support-based check max_support(X^2) <= 2 lambda_p is "
            "implemented.";
        const ProductStructure s({CoordinateStructure::laguerre(0)});
        const MultiPoly x = coordinate_basis(s.coord(0), 2);
        const SpectralDecomposition sq = decompose(s, x * x);
        d.computed["example_structure"] = s.describe();
        d.computed["example_eigenvalue"] = "2";
        d.computed["max_support_of_square"] = sq.max_eigenvalue().str();
        d.computed["doubling_threshold"] = "4";
        d.computed["implemented_condition"] = "max_support(X^2) <= 2*lambda_p";
        out.push_back(std::move(d));
    }

    {
        // The displayed Beta bound integrates the Gamma-expression without a
        // square on the left-hand side; the squared integrand from the
        // derivation is implemented.
        Discrepancy d;
        d.id = "beta-distance-missing-square";
        d.description =
            "The Beta-approximation display bounds the unsquared integral of the Gamma-expression; the "
            "derivation (and this implementation) square the integrand.";
        const ProductStructure s({CoordinateStructure::jacobi(Rational(1, 2), Rational(1, 2))});
        const MultiPoly x = basis_product(s, {2});
        const TargetLaw t = TargetLaw::beta(Rational(1, 2), Rational(1, 2));
        const MultiPoly expr = gamma_expression(s, x, t);
        d.computed["example_structure"] = s.describe();
        d.computed["unsquared_integral"] = integrate(s, expr).str();
        d.computed["squared_integral"] = integrate(s, expr * expr).str();
        out.push_back(std::move(d));
    }

    {
        // The printed Beta moment expression (all plus signs) is not
        // proportional to the quadratic-route statistic and does not vanish at
        // the exact target.
        Discrepancy d;
        d.id = "beta-printed-coefficients";
        d.description =
            "The printed Beta fourth-moment expression does not vanish at the exact Beta moments; the "
            "quadratic-route statistic (which vanishes exactly) is authoritative and the printed value is "
            "recorded as-is.";
        const TargetLaw t = TargetLaw::beta(Rational(1, 2), Rational(1, 2));
        const StatisticComparison cmp = printed_statistic_comparison(t, t.raw_moments(4));
        d.computed["target"] = t.describe();
        d.computed["quadratic_route_at_exact_target"] = cmp.quadratic_route.str();
        d.computed["printed_at_exact_target"] = cmp.printed.str();
        d.computed["expected_ratio_if_consistent"] = cmp.expected_ratio.str();
        d.computed["agree"] = cmp.agree ? "true" : "false";
        out.push_back(std::move(d));
    }

    return out;
}

VerifyReport run_verification(const VerifyOptions& options) {
    VerifyReport report;
    report.checks.push_back(check_square_gamma_identity(options));
    report.checks.push_back(check_integration_by_parts(options));
    report.checks.push_back(check_generator_symmetry(options));
    report.checks.push_back(check_diffusion_chain_rule(options));
    report.checks.push_back(check_gamma_derivation(options));
    report.checks.push_back(check_gamma_positivity(options));
    report.checks.push_back(check_decomposition_reconstruction(options));
    report.checks.push_back(check_projection_operator_oracle(options));
    report.checks.push_back(check_square_annihilation(options));
    report.checks.push_back(check_eigenfunctions_chaotic(options));
    report.checks.push_back(check_jacobi_support_bound(options));
    report.checks.push_back(check_jacobi_condition_boundary(options));
    report.checks.push_back(check_spectral_sandwich(options));
    report.checks.push_back(check_quadratic_statistic_identity(options));
    report.checks.push_back(check_criterion_bound_chain(options));
    report.checks.push_back(check_fourth_moment_positivity(options));
    report.checks.push_back(check_target_vanishing(options));
    report.checks.push_back(check_l_expression_identities(options));
    report.discrepancies = known_discrepancies();
    for (const CheckResult& c : report.checks) report.all_passed = report.all_passed && c.passed();
    return report;
}

}  // namespace diffspec
