#include "diffspec/spectral.hpp"

#include <algorithm>
#include <stdexcept>

namespace diffspec {

std::vector<Rational> SpectralDecomposition::support() const {
    std::vector<Rational> out;
    out.reserve(components.size());
    for (const auto& [eta, comp] : components) out.push_back(eta);
    return out;
}

const MultiPoly* SpectralDecomposition::find(const Rational& eta) const {
    const auto it = components.find(eta);
    return it == components.end() ? nullptr : &it->second;
}

MultiPoly SpectralDecomposition::reconstruct() const {
    MultiPoly out(dim);
    for (const auto& [eta, comp] : components) out += comp;
    return out;
}

Rational SpectralDecomposition::max_eigenvalue() const {
    return components.empty() ? Rational(0) : components.rbegin()->first;
}

SpectralDecomposition decompose(const ProductStructure& s, const MultiPoly& p) {
    if (p.dim() != s.dim()) throw std::invalid_argument("decompose: dimension mismatch");
    std::vector<BasisGenerator> basis;
    basis.reserve(static_cast<std::size_t>(s.dim()));
    for (int i = 0; i < s.dim(); ++i) {
        const CoordinateStructure& c = s.coord(i);
        basis.emplace_back([c](int k) { return c.basis(k); });
    }
    SpectralDecomposition out;
    out.dim = s.dim();
    for (const auto& [idx, coef] : expand_in_basis(p, basis)) {
        Rational eta = 0;
        for (int i = 0; i < s.dim(); ++i) eta += s.coord(i).eigenvalue(idx[static_cast<std::size_t>(i)]);
        const auto it = out.components.find(eta);
        if (it == out.components.end())
            out.components.emplace(eta, coef * basis_product(s, idx));
        else
            it->second += coef * basis_product(s, idx);
    }
    // degenerate eigenvalues can in principle cancel; never keep a zero component
    std::erase_if(out.components, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

MultiPoly project(const ProductStructure& s, const MultiPoly& p, const Rational& eta) {
    const SpectralDecomposition d = decompose(s, p);
    const MultiPoly* comp = d.find(eta);
    return comp ? *comp : MultiPoly(s.dim());
}

MultiPoly project_operator_formula(const ProductStructure& s, const MultiPoly& p, const Rational& eta,
                                   const std::vector<Rational>& support) {
    if (p.dim() != s.dim()) throw std::invalid_argument("project_operator_formula: dimension mismatch");
    std::vector<Rational> sorted = support;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("project_operator_formula: repeated eigenvalue in support");
    if (!std::binary_search(sorted.begin(), sorted.end(), eta))
        throw std::invalid_argument("project_operator_formula: eta not in support");
    MultiPoly r = p;
    Rational denom = 1;
    for (const Rational& lambda : sorted) {
        if (lambda == eta) continue;
        r = apply_generator(s, r) + lambda * r;
        denom *= lambda - eta;
    }
    return (Rational(1) / denom) * r;
}

std::optional<Rational> eigenvalue_of(const ProductStructure& s, const MultiPoly& p) {
    if (p.is_zero()) throw std::invalid_argument("eigenvalue_of: zero polynomial");
    const SpectralDecomposition d = decompose(s, p);
    if (d.components.size() != 1) return std::nullopt;
    return d.components.begin()->first;
}

std::vector<Exponents> eigen_index_vectors(const ProductStructure& s, const Rational& lambda) {
    if (lambda < Rational(0)) return {};
    std::vector<Exponents> out;
    Exponents current(static_cast<std::size_t>(s.dim()), 0);
    // coordinate eigenvalues are strictly increasing in the index, so the
    // depth-first search is finite
    const auto recurse = [&](auto&& self, int coord, const Rational& remaining) -> void {
        if (coord == s.dim()) {
            if (remaining.is_zero()) out.push_back(current);
            return;
        }
        for (int k = 0;; ++k) {
            const Rational ev = s.coord(coord).eigenvalue(k);
            if (ev > remaining) break;
            current[static_cast<std::size_t>(coord)] = k;
            self(self, coord + 1, remaining - ev);
        }
        current[static_cast<std::size_t>(coord)] = 0;
    };
    recurse(recurse, 0, lambda);
    return out;
}

Rational chaos_threshold(const ProductStructure& s, const Rational& lambda) {
    if (!s.has_jacobi_coordinate()) return 2 * lambda;
    const std::vector<Exponents> reps = eigen_index_vectors(s, lambda);
    if (reps.empty()) throw std::invalid_argument("chaos_threshold: eigenvalue " + lambda.str() + " not in the spectrum");
    Rational best = 0;
    for (const Exponents& idx : reps) {
        Rational doubled = 0;
        for (int i = 0; i < s.dim(); ++i) doubled += s.coord(i).eigenvalue(2 * idx[static_cast<std::size_t>(i)]);
        best = std::max(best, doubled);
    }
    return best;
}

Rational jacobi_support_bound(const Exponents& indices, const Rational& alpha, const Rational& beta) {
    if (indices.empty()) throw std::invalid_argument("jacobi_support_bound: empty index vector");
    for (int k : indices)
        if (k < 0) throw std::invalid_argument("jacobi_support_bound: negative index");
    const CoordinateStructure c = CoordinateStructure::jacobi(alpha, beta);
    const ProductStructure s(std::vector<CoordinateStructure>(indices.size(), c));
    Rational lambda = 0;
    for (int k : indices) lambda += c.eigenvalue(k);
    return chaos_threshold(s, lambda);
}

ChaosReport chaos_check(const ProductStructure& s, const MultiPoly& x) {
    ChaosReport report;
    if (x.is_zero()) {
        report.reason = "zero polynomial is not an eigenfunction";
        return report;
    }
    const SpectralDecomposition sq = decompose(s, x * x);
    report.square_support = sq.support();
    report.max_support = sq.max_eigenvalue();
    const std::optional<Rational> lambda = eigenvalue_of(s, x);
    if (!lambda) {
        report.reason = "not an eigenfunction (decomposition has several components)";
        return report;
    }
    report.eigenvalue = *lambda;
    report.threshold = chaos_threshold(s, *lambda);
    report.is_chaotic = report.max_support <= report.threshold;
    if (!report.is_chaotic) report.reason = "support of X^2 exceeds the doubling threshold";
    return report;
}

SandwichResult general_principle(const ProductStructure& s, const MultiPoly& p, const Rational& eta) {
    if (p.dim() != s.dim()) throw std::invalid_argument("general_principle: dimension mismatch");
    const SpectralDecomposition d = decompose(s, p);
    if (!d.components.empty() && d.max_eigenvalue() > eta)
        throw std::invalid_argument("general_principle: eta is below the top of the support");
    const MultiPoly lp = apply_generator(s, p);
    const MultiPoly shifted = lp + eta * p;                       // (L + eta) p
    const MultiPoly shifted2 = apply_generator(s, shifted) + eta * shifted;  // (L + eta)^2 p
    SandwichResult r;
    r.i1 = integrate(s, p * shifted);
    r.i2 = integrate(s, p * shifted2);
    Rational inv_c = 0;
    bool have = false;
    for (const auto& [lambda, comp] : d.components) {
        const Rational gap = eta - lambda;
        if (gap.is_zero()) continue;
        if (!have || gap < inv_c) {
            inv_c = gap;
            have = true;
        }
    }
    r.c = have ? Rational(1) / inv_c : Rational(0);
    r.sandwich_ok = (r.i2 <= eta * r.i1) && (eta * r.i1 <= r.c * eta * r.i2);
    return r;
}

}  // namespace diffspec
