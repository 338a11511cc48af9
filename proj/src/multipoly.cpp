#include "diffspec/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace diffspec {

MultiPoly::MultiPoly(int dim) : dim_(dim) {
    if (dim < 1) throw std::invalid_argument("MultiPoly: dimension must be positive");
}

MultiPoly MultiPoly::constant(int dim, const Rational& c) {
    MultiPoly p(dim);
    p.add_term(Exponents(static_cast<std::size_t>(dim), 0), c);
    return p;
}

MultiPoly MultiPoly::variable(int dim, int coord) {
    Exponents e(static_cast<std::size_t>(dim), 0);
    if (coord < 0 || coord >= dim) throw std::invalid_argument("MultiPoly: coordinate out of range");
    e[static_cast<std::size_t>(coord)] = 1;
    return monomial(dim, std::move(e), 1);
}

MultiPoly MultiPoly::monomial(int dim, Exponents exps, const Rational& c) {
    MultiPoly p(dim);
    p.add_term(exps, c);
    return p;
}

bool MultiPoly::is_constant() const {
    return terms_.empty() ||
           (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                              [](int e) { return e == 0; }));
}

int MultiPoly::degree() const {
    int deg = -1;
    for (const auto& [exps, c] : terms_) deg = std::max(deg, std::accumulate(exps.begin(), exps.end(), 0));
    return deg;
}

Rational MultiPoly::coeff(const Exponents& exps) const {
    const auto it = terms_.find(exps);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coeff(Exponents(static_cast<std::size_t>(dim_), 0)); }

void MultiPoly::add_term(const Exponents& exps, const Rational& c) {
    if (exps.size() != static_cast<std::size_t>(dim_))
        throw std::invalid_argument("MultiPoly: exponent vector length does not match dimension");
    for (int e : exps)
        if (e < 0) throw std::invalid_argument("MultiPoly: negative exponent");
    if (c.is_zero()) return;
    const auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out(dim_);
    for (const auto& [exps, c] : terms_) out.terms_.emplace(exps, -c);
    return out;
}

void MultiPoly::check_same_dim(const MultiPoly& o) const {
    if (dim_ != o.dim_) throw std::invalid_argument("MultiPoly: dimension mismatch");
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_same_dim(o);
    for (const auto& [exps, c] : o.terms_) add_term(exps, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_same_dim(o);
    for (const auto& [exps, c] : o.terms_) add_term(exps, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_same_dim(b);
    MultiPoly out(a.dim_);
    Exponents exps(static_cast<std::size_t>(a.dim_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < exps.size(); ++i) exps[i] = ea[i] + eb[i];
            out.add_term(exps, ca * cb);
        }
    }
    return out;
}

MultiPoly operator*(const Rational& s, const MultiPoly& p) {
    MultiPoly out(p.dim_);
    if (s.is_zero()) return out;
    for (const auto& [exps, c] : p.terms_) out.terms_.emplace(exps, s * c);
    return out;
}

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw std::invalid_argument("MultiPoly: negative power");
    MultiPoly out = constant(dim_, 1);
    MultiPoly base = *this;
    while (e > 0) {
        if (e & 1) out = out * base;
        if (e >>= 1) base = base * base;
    }
    return out;
}

MultiPoly MultiPoly::derivative(int coord) const {
    if (coord < 0 || coord >= dim_) throw std::invalid_argument("MultiPoly: coordinate out of range");
    MultiPoly out(dim_);
    const auto ci = static_cast<std::size_t>(coord);
    for (const auto& [exps, c] : terms_) {
        if (exps[ci] == 0) continue;
        Exponents e = exps;
        --e[ci];
        out.add_term(e, Rational(exps[ci]) * c);
    }
    return out;
}

Rational MultiPoly::evaluate(std::span<const Rational> point) const {
    if (point.size() != static_cast<std::size_t>(dim_))
        throw std::invalid_argument("MultiPoly: evaluation point length does not match dimension");
    // Per-coordinate power cache; powers are built once up to the max exponent used.
    std::vector<std::vector<Rational>> powers(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) powers[i].push_back(1);
    Rational sum = 0;
    for (const auto& [exps, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < point.size(); ++i) {
            auto& cache = powers[i];
            while (cache.size() <= static_cast<std::size_t>(exps[i])) cache.push_back(cache.back() * point[i]);
            term *= cache[static_cast<std::size_t>(exps[i])];
        }
        sum += term;
    }
    return sum;
}

double MultiPoly::evaluate(std::span<const double> point) const {
    if (point.size() != static_cast<std::size_t>(dim_))
        throw std::invalid_argument("MultiPoly: evaluation point length does not match dimension");
    std::vector<std::vector<double>> powers(point.size());
    for (std::size_t i = 0; i < point.size(); ++i) powers[i].push_back(1.0);
    double sum = 0.0;
    for (const auto& [exps, c] : terms_) {
        double term = c.to_double();
        for (std::size_t i = 0; i < point.size(); ++i) {
            auto& cache = powers[i];
            while (cache.size() <= static_cast<std::size_t>(exps[i])) cache.push_back(cache.back() * point[i]);
            term *= cache[static_cast<std::size_t>(exps[i])];
        }
        sum += term;
    }
    return sum;
}

MultiPoly compose_univariate(const MultiPoly& q, const MultiPoly& p) {
    if (q.dim() != 1) throw std::invalid_argument("compose_univariate: outer polynomial must be univariate");
    // Horner over the dense coefficient list of q.
    const int deg = q.degree();
    if (deg < 0) return MultiPoly(p.dim());
    std::vector<Rational> coeffs(static_cast<std::size_t>(deg) + 1, Rational(0));
    for (const auto& [exps, c] : q.terms()) coeffs[static_cast<std::size_t>(exps[0])] = c;
    MultiPoly out = MultiPoly::constant(p.dim(), coeffs.back());
    for (int k = deg - 1; k >= 0; --k) out = out * p + MultiPoly::constant(p.dim(), coeffs[static_cast<std::size_t>(k)]);
    return out;
}

MultiPoly substitute_affine(const MultiPoly& p, const std::vector<std::pair<Rational, Rational>>& maps) {
    if (maps.size() != static_cast<std::size_t>(p.dim()))
        throw std::invalid_argument("substitute_affine: map list length does not match dimension");
    std::vector<MultiPoly> images;
    images.reserve(maps.size());
    for (std::size_t i = 0; i < maps.size(); ++i) {
        MultiPoly img = maps[i].first * MultiPoly::variable(p.dim(), static_cast<int>(i));
        img += MultiPoly::constant(p.dim(), maps[i].second);
        images.push_back(std::move(img));
    }
    MultiPoly out(p.dim());
    for (const auto& [exps, c] : p.terms()) {
        MultiPoly term = MultiPoly::constant(p.dim(), c);
        for (std::size_t i = 0; i < maps.size(); ++i)
            if (exps[i] > 0) term = term * images[i].pow(exps[i]);
        out += term;
    }
    return out;
}

}  // namespace diffspec
