#include "diffspec/orthogonal.hpp"

#include <numeric>
#include <stdexcept>

namespace diffspec {

namespace {

MultiPoly x1() { return MultiPoly::variable(1, 0); }

void check_gt(const Rational& v, long bound, const char* what) {
    if (!(v > Rational(bound))) throw std::invalid_argument(std::string(what) + " must be > " + std::to_string(bound));
}

}  // namespace

OrthogonalFamily OrthogonalFamily::hermite() { return {FamilyKind::Hermite, 0, 0}; }

OrthogonalFamily OrthogonalFamily::laguerre(const Rational& nu) {
    check_gt(nu, -1, "Laguerre parameter nu");
    return {FamilyKind::Laguerre, nu, 0};
}

OrthogonalFamily OrthogonalFamily::jacobi(const Rational& alpha, const Rational& beta) {
    check_gt(alpha, -1, "Jacobi parameter alpha");
    check_gt(beta, -1, "Jacobi parameter beta");
    return {FamilyKind::Jacobi, alpha, beta};
}

MultiPoly OrthogonalFamily::polynomial(int n) const {
    switch (kind_) {
        case FamilyKind::Hermite: return hermite_polynomial(n);
        case FamilyKind::Laguerre: return laguerre_polynomial(n, a_);
        case FamilyKind::Jacobi: return jacobi_polynomial(n, a_, b_);
    }
    throw std::logic_error("OrthogonalFamily: bad kind");
}

MultiPoly hermite_polynomial(int n) {
    if (n < 0) throw std::invalid_argument("hermite_polynomial: negative degree");
    MultiPoly prev = MultiPoly::constant(1, 1);
    if (n == 0) return prev;
    MultiPoly cur = x1();
    for (int k = 1; k < n; ++k) {
        MultiPoly next = x1() * cur - Rational(k) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

MultiPoly laguerre_polynomial(int n, const Rational& nu) {
    if (n < 0) throw std::invalid_argument("laguerre_polynomial: negative degree");
    check_gt(nu, -1, "Laguerre parameter nu");
    MultiPoly prev = MultiPoly::constant(1, 1);
    if (n == 0) return prev;
    // L_1^{(nu)} = 1 + nu - x
    MultiPoly cur = MultiPoly::constant(1, nu + 1) - x1();
    for (int k = 1; k < n; ++k) {
        // (k+1) L_{k+1} = (2k+1+nu - x) L_k - (k+nu) L_{k-1}
        MultiPoly next = (MultiPoly::constant(1, Rational(2 * k + 1) + nu) - x1()) * cur - (Rational(k) + nu) * prev;
        next = Rational(1, k + 1) * next;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

MultiPoly jacobi_polynomial(int n, const Rational& alpha, const Rational& beta) {
    if (n < 0) throw std::invalid_argument("jacobi_polynomial: negative degree");
    check_gt(alpha, -1, "Jacobi parameter alpha");
    check_gt(beta, -1, "Jacobi parameter beta");
    const Rational s = alpha + beta;
    MultiPoly prev = MultiPoly::constant(1, 1);
    if (n == 0) return prev;
    // P_1 = ((alpha+beta+2) x + alpha - beta) / 2
    MultiPoly cur = Rational(1, 2) * ((s + 2) * x1() + MultiPoly::constant(1, alpha - beta));
    for (int k = 2; k <= n; ++k) {
        const Rational kk(k);
        const Rational c1 = 2 * kk * (kk + s) * (2 * kk + s - 2);
        const Rational c2 = (2 * kk + s - 1) * (2 * kk + s) * (2 * kk + s - 2);
        const Rational c3 = (2 * kk + s - 1) * (alpha * alpha - beta * beta);
        const Rational c4 = 2 * (kk + alpha - 1) * (kk + beta - 1) * (2 * kk + s);
        MultiPoly next = (c2 * x1() + MultiPoly::constant(1, c3)) * cur - c4 * prev;
        next = (Rational(1) / c1) * next;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

namespace {

// leading coefficient of a univariate polynomial of exact degree k
Rational leading_coefficient(const MultiPoly& p) {
    const int deg = p.degree();
    return p.coeff(Exponents{deg});
}

struct BasisCache {
    explicit BasisCache(const std::vector<BasisGenerator>& basis) : basis_(basis), polys_(basis.size()) {}

    const MultiPoly& poly(std::size_t coord, int k) {
        auto& column = polys_[coord];
        while (column.size() <= static_cast<std::size_t>(k)) {
            MultiPoly b = basis_[coord](static_cast<int>(column.size()));
            if (b.dim() != 1 || b.degree() != static_cast<int>(column.size()))
                throw std::invalid_argument("expand_in_basis: basis element has wrong degree");
            if (column.empty() && !(b == MultiPoly::constant(1, 1)))
                throw std::invalid_argument("expand_in_basis: degree-0 basis element must be 1");
            column.push_back(std::move(b));
        }
        return column[static_cast<std::size_t>(k)];
    }

    const std::vector<BasisGenerator>& basis_;
    std::vector<std::vector<MultiPoly>> polys_;
};

// graded-max monomial of a non-zero polynomial (max total degree, then lex-max)
Exponents graded_leading_monomial(const MultiPoly& p) {
    const Exponents* best = nullptr;
    int best_total = -1;
    for (const auto& [exps, c] : p.terms()) {
        const int total = std::accumulate(exps.begin(), exps.end(), 0);
        if (total > best_total || (total == best_total && exps > *best)) {
            best = &exps;
            best_total = total;
        }
    }
    return *best;
}

}  // namespace

std::map<Exponents, Rational> expand_in_basis(const MultiPoly& p, const std::vector<BasisGenerator>& basis) {
    if (basis.size() != static_cast<std::size_t>(p.dim()))
        throw std::invalid_argument("expand_in_basis: basis list length does not match dimension");
    BasisCache cache(basis);
    std::map<Exponents, Rational> out;
    MultiPoly rest = p;
    while (!rest.is_zero()) {
        const Exponents lead = graded_leading_monomial(rest);
        Rational lc = 1;
        for (std::size_t i = 0; i < lead.size(); ++i) lc *= leading_coefficient(cache.poly(i, lead[i]));
        const Rational c = rest.coeff(lead) / lc;
        out.emplace(lead, c);
        // subtract c * prod_j B_{lead_j}(x_j); every other monomial of the
        // product has strictly smaller total degree, so `lead` never recurs
        MultiPoly product = MultiPoly::constant(p.dim(), c);
        for (std::size_t i = 0; i < lead.size(); ++i) {
            if (lead[i] == 0) continue;
            MultiPoly factor(p.dim());
            for (const auto& [e, bc] : cache.poly(i, lead[i]).terms()) {
                Exponents lifted(static_cast<std::size_t>(p.dim()), 0);
                lifted[i] = e[0];
                factor.add_term(lifted, bc);
            }
            product = product * factor;
        }
        rest -= product;
    }
    return out;
}

namespace {

std::vector<BasisGenerator> family_generators(const std::vector<OrthogonalFamily>& families) {
    std::vector<BasisGenerator> gens;
    gens.reserve(families.size());
    for (const auto& fam : families) gens.emplace_back([fam](int k) { return fam.polynomial(k); });
    return gens;
}

}  // namespace

std::map<Exponents, Rational> product_basis_expand(const MultiPoly& p, const std::vector<OrthogonalFamily>& families) {
    return expand_in_basis(p, family_generators(families));
}

MultiPoly reconstruct_from_basis(int dim, const std::map<Exponents, Rational>& expansion,
                                 const std::vector<BasisGenerator>& basis) {
    if (basis.size() != static_cast<std::size_t>(dim))
        throw std::invalid_argument("reconstruct_from_basis: basis list length does not match dimension");
    BasisCache cache(basis);
    MultiPoly out(dim);
    for (const auto& [idx, c] : expansion) {
        if (idx.size() != static_cast<std::size_t>(dim))
            throw std::invalid_argument("reconstruct_from_basis: index length does not match dimension");
        MultiPoly term = MultiPoly::constant(dim, c);
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (idx[i] == 0) continue;
            MultiPoly factor(dim);
            for (const auto& [e, bc] : cache.poly(i, idx[i]).terms()) {
                Exponents lifted(static_cast<std::size_t>(dim), 0);
                lifted[i] = e[0];
                factor.add_term(lifted, bc);
            }
            term = term * factor;
        }
        out += term;
    }
    return out;
}

MultiPoly reconstruct_from_basis(int dim, const std::map<Exponents, Rational>& expansion,
                                 const std::vector<OrthogonalFamily>& families) {
    return reconstruct_from_basis(dim, expansion, family_generators(families));
}

}  // namespace diffspec
