#include "diffspec/structures.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace diffspec {

CoordinateStructure CoordinateStructure::ornstein_uhlenbeck() {
    return {CoordKind::OrnsteinUhlenbeck, 0, 0};
}

CoordinateStructure CoordinateStructure::laguerre(const Rational& nu) {
    if (!(nu > Rational(-1))) throw std::invalid_argument("Laguerre coordinate requires nu > -1");
    return {CoordKind::Laguerre, nu, 0};
}

CoordinateStructure CoordinateStructure::jacobi(const Rational& alpha, const Rational& beta) {
    if (!(alpha > Rational(0)) || !(beta > Rational(0)))
        throw std::invalid_argument("Jacobi coordinate requires alpha > 0 and beta > 0");
    return {CoordKind::Jacobi, alpha, beta};
}

Rational CoordinateStructure::eigenvalue(int k) const {
    if (k < 0) throw std::invalid_argument("eigenvalue: negative index");
    if (kind_ == CoordKind::Jacobi) return Rational(k) * (Rational(k) + a_ + b_ - 1);
    return Rational(k);
}

Rational CoordinateStructure::raw_moment(int k) const {
    if (k < 0) throw std::invalid_argument("raw_moment: negative order");
    switch (kind_) {
        case CoordKind::OrnsteinUhlenbeck: {
            if (k % 2 == 1) return 0;
            Rational m = 1;  // E[x^{2j}] = (2j-1)!!
            for (int j = 1; j < k; j += 2) m *= Rational(j);
            return m;
        }
        case CoordKind::Laguerre: {
            Rational m = 1;  // Gamma(nu+1) moments: (nu+1)(nu+2)...(nu+k)
            for (int j = 1; j <= k; ++j) m *= a_ + Rational(j);
            return m;
        }
        case CoordKind::Jacobi: {
            Rational m = 1;  // Beta(alpha,beta) moments: prod_{j<k} (alpha+j)/(alpha+beta+j)
            for (int j = 0; j < k; ++j) m *= (a_ + Rational(j)) / (a_ + b_ + Rational(j));
            return m;
        }
    }
    throw std::logic_error("CoordinateStructure: bad kind");
}

MultiPoly CoordinateStructure::basis(int k) const {
    switch (kind_) {
        case CoordKind::OrnsteinUhlenbeck: return hermite_polynomial(k);
        case CoordKind::Laguerre: return laguerre_polynomial(k, a_);
        case CoordKind::Jacobi:
            // P_k^{(alpha-1, beta-1)}(1 - 2x)
            return substitute_affine(jacobi_polynomial(k, a_ - 1, b_ - 1), {{Rational(-2), Rational(1)}});
    }
    throw std::logic_error("CoordinateStructure: bad kind");
}

MultiPoly CoordinateStructure::diffusion_coefficient() const {
    const MultiPoly x = MultiPoly::variable(1, 0);
    switch (kind_) {
        case CoordKind::OrnsteinUhlenbeck: return MultiPoly::constant(1, 1);
        case CoordKind::Laguerre: return x;
        case CoordKind::Jacobi: return x * (MultiPoly::constant(1, 1) - x);
    }
    throw std::logic_error("CoordinateStructure: bad kind");
}

MultiPoly CoordinateStructure::drift() const {
    const MultiPoly x = MultiPoly::variable(1, 0);
    switch (kind_) {
        case CoordKind::OrnsteinUhlenbeck: return -x;
        case CoordKind::Laguerre: return MultiPoly::constant(1, a_ + 1) - x;
        case CoordKind::Jacobi: return MultiPoly::constant(1, a_) - (a_ + b_) * x;
    }
    throw std::logic_error("CoordinateStructure: bad kind");
}

std::string CoordinateStructure::describe() const {
    switch (kind_) {
        case CoordKind::OrnsteinUhlenbeck: return "ou";
        case CoordKind::Laguerre: return "laguerre(" + a_.str() + ")";
        case CoordKind::Jacobi: return "jacobi(" + a_.str() + "," + b_.str() + ")";
    }
    throw std::logic_error("CoordinateStructure: bad kind");
}

ProductStructure::ProductStructure(std::vector<CoordinateStructure> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) throw std::invalid_argument("ProductStructure: needs at least one coordinate");
}

bool ProductStructure::has_jacobi_coordinate() const {
    return std::any_of(coords_.begin(), coords_.end(),
                       [](const CoordinateStructure& c) { return c.kind() == CoordKind::Jacobi; });
}

std::string ProductStructure::describe() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? ", " : "") << coords_[i].describe();
    os << "]";
    return os.str();
}

namespace {

// lift a univariate polynomial to coordinate `coord` of a dim-dimensional space
MultiPoly lift(const MultiPoly& uni, int dim, int coord) {
    MultiPoly out(dim);
    for (const auto& [e, c] : uni.terms()) {
        Exponents lifted(static_cast<std::size_t>(dim), 0);
        lifted[static_cast<std::size_t>(coord)] = e[0];
        out.add_term(lifted, c);
    }
    return out;
}

}  // namespace

MultiPoly apply_generator(const ProductStructure& s, const MultiPoly& p) {
    if (p.dim() != s.dim()) throw std::invalid_argument("apply_generator: dimension mismatch");
    MultiPoly out(p.dim());
    for (int i = 0; i < s.dim(); ++i) {
        const MultiPoly di = p.derivative(i);
        if (di.is_zero()) continue;
        const MultiPoly dii = di.derivative(i);
        out += lift(s.coord(i).diffusion_coefficient(), s.dim(), i) * dii;
        out += lift(s.coord(i).drift(), s.dim(), i) * di;
    }
    return out;
}

MultiPoly carre_du_champ(const ProductStructure& s, const MultiPoly& p, const MultiPoly& q) {
    if (p.dim() != s.dim() || q.dim() != s.dim()) throw std::invalid_argument("carre_du_champ: dimension mismatch");
    MultiPoly out = apply_generator(s, p * q);
    out -= p * apply_generator(s, q);
    out -= q * apply_generator(s, p);
    return Rational(1, 2) * out;
}

MultiPoly carre_du_champ(const ProductStructure& s, const MultiPoly& p) { return carre_du_champ(s, p, p); }

Rational integrate(const ProductStructure& s, const MultiPoly& p) {
    if (p.dim() != s.dim()) throw std::invalid_argument("integrate: dimension mismatch");
    Rational sum = 0;
    for (const auto& [exps, c] : p.terms()) {
        Rational term = c;
        for (int i = 0; i < s.dim(); ++i) term *= s.coord(i).raw_moment(exps[static_cast<std::size_t>(i)]);
        sum += term;
    }
    return sum;
}

Rational moment(const ProductStructure& s, const MultiPoly& p, int k) {
    if (k < 1) throw std::invalid_argument("moment: order must be >= 1");
    return integrate(s, p.pow(k));
}

Rational coordinate_eigenvalue(const CoordinateStructure& c, int k) { return c.eigenvalue(k); }

MultiPoly coordinate_basis(const CoordinateStructure& c, int k) { return c.basis(k); }

MultiPoly basis_product(const ProductStructure& s, const Exponents& idx) {
    if (idx.size() != static_cast<std::size_t>(s.dim()))
        throw std::invalid_argument("basis_product: index length does not match dimension");
    MultiPoly out = MultiPoly::constant(s.dim(), 1);
    for (int i = 0; i < s.dim(); ++i) {
        const int k = idx[static_cast<std::size_t>(i)];
        if (k == 0) continue;
        out = out * lift(s.coord(i).basis(k), s.dim(), i);
    }
    return out;
}

Rational smallest_positive_eigenvalue(const ProductStructure& s) {
    Rational best = s.coord(0).eigenvalue(1);
    for (int i = 1; i < s.dim(); ++i) best = std::min(best, s.coord(i).eigenvalue(1));
    return best;
}

}  // namespace diffspec
