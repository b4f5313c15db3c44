#include "fockforge/fock/fock_vector.hpp"

#include <stdexcept>

namespace fockforge::fock {

FockVector FockVector::monomial(const ModeMonomial& m, const RF& c) {
    FockVector v;
    v.add(m, c);
    return v;
}

RF FockVector::coefficient(const ModeMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RF() : it->second;
}

std::optional<int> FockVector::degree() const {
    std::optional<int> d;
    for (const auto& [m, c] : terms_) {
        int dm = fock::degree(m);
        if (d && *d != dm) return std::nullopt;
        d = dm;
    }
    return d;
}

void FockVector::add(const ModeMonomial& m, const RF& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

FockVector& FockVector::operator+=(const FockVector& o) {
    for (const auto& [m, c] : o.terms_) add(m, c);
    return *this;
}

FockVector& FockVector::operator-=(const FockVector& o) {
    for (const auto& [m, c] : o.terms_) add(m, -c);
    return *this;
}

FockVector FockVector::scaled(const RF& c) const {
    FockVector out;
    if (c.is_zero()) return out;
    for (const auto& [m, x] : terms_) out.terms_.emplace(m, x * c);
    return out;
}

FockVector create(const BosonLattice& L, const Direction& dir, int n, const FockVector& v) {
    if (n < 1) throw std::invalid_argument("create: mode must be positive");
    if (dir.size() != L.rank()) throw std::invalid_argument("create: direction has wrong length");
    FockVector out;
    for (std::size_t i = 0; i < dir.size(); ++i) {
        if (dir[i] == 0) continue;
        RF w(dir[i]);
        for (const auto& [m, c] : v.terms()) out.add(with_mode(m, {n, static_cast<int>(i)}), c * w);
    }
    return out;
}

FockVector annihilate(const BosonLattice& L, const Direction& dir, int n, const FockVector& v) {
    if (n < 1) throw std::invalid_argument("annihilate: mode must be positive");
    // [P^dir_n, P^j_{-n}] = -n (dir, e_j) scale
    std::vector<RF> bracket(L.rank());
    for (std::size_t j = 0; j < L.rank(); ++j) {
        Rational g = L.pairing(dir, unit_direction(L.rank(), j));
        if (g != 0) bracket[j] = RF(Rational(-n) * g) * L.scale();
    }
    FockVector out;
    for (const auto& [m, c] : v.terms()) {
        for (std::size_t k = 0; k < m.size(); ++k) {
            if (m[k].n != n) continue;
            if (k > 0 && m[k - 1] == m[k]) continue;  // count each distinct mode once
            std::size_t mult = 1;
            while (k + mult < m.size() && m[k + mult] == m[k]) ++mult;
            const RF& b = bracket[static_cast<std::size_t>(m[k].gen)];
            if (b.is_zero()) continue;
            ModeMonomial rest = m;
            rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(k));
            out.add(rest, c * b * RF(static_cast<long>(mult)));
        }
    }
    return out;
}

FockVector mode(const BosonLattice& L, const Direction& dir, int m, const FockVector& v) {
    if (m < 0) return create(L, dir, -m, v);
    if (m > 0) return annihilate(L, dir, m, v);
    throw std::invalid_argument("mode: zero modes are not part of the lattice action");
}

FockVector create(const BosonLattice& L, std::size_t i, int n, const FockVector& v) {
    return create(L, unit_direction(L.rank(), i), n, v);
}
FockVector annihilate(const BosonLattice& L, std::size_t i, int n, const FockVector& v) {
    return annihilate(L, unit_direction(L.rank(), i), n, v);
}
FockVector mode(const BosonLattice& L, std::size_t i, int m, const FockVector& v) {
    return mode(L, unit_direction(L.rank(), i), m, v);
}

namespace {

// <m|w> by moving the creation operators of m across as annihilators.
RF pair_monomial(const BosonLattice& L, ModeMonomial m, FockVector w, Adjoint adj) {
    RF sign(1);
    while (!m.empty()) {
        Mode x = m.back();
        m.pop_back();
        w = annihilate(L, static_cast<std::size_t>(x.gen), x.n, w);
        if (w.is_zero()) return RF();
        if (adj == Adjoint::Minus) sign = -sign;
    }
    return sign * w.coefficient({});
}

}  // namespace

RF contravariant_form(const BosonLattice& L, const FockVector& v, const FockVector& w, Adjoint adj) {
    RF out;
    for (const auto& [m, c] : v.terms()) {
        FockVector same_degree;
        int d = degree(m);
        for (const auto& [m2, c2] : w.terms()) {
            if (degree(m2) == d) same_degree.add(m2, c2);
        }
        if (same_degree.is_zero()) continue;
        out += c * pair_monomial(L, m, same_degree, adj);
    }
    return out;
}

Matrix<RF> contravariant_gram(const BosonLattice& L, int d, Adjoint adj) {
    auto basis = L.basis(d);
    Matrix<RF> g(basis.size(), basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = 0; j < basis.size(); ++j) {
            g(i, j) = pair_monomial(L, basis[i], FockVector::monomial(basis[j]), adj);
        }
    }
    return g;
}

std::vector<RF> coordinates(const std::vector<ModeMonomial>& basis, const FockVector& v) {
    std::map<ModeMonomial, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
    std::vector<RF> x(basis.size());
    for (const auto& [m, c] : v.terms()) {
        auto it = index.find(m);
        if (it == index.end()) throw std::invalid_argument("coordinates: vector leaves the given basis");
        x[it->second] = c;
    }
    return x;
}

FockVector from_coordinates(const std::vector<ModeMonomial>& basis, const std::vector<RF>& x) {
    if (x.size() != basis.size()) throw std::invalid_argument("from_coordinates: size mismatch");
    FockVector v;
    for (std::size_t i = 0; i < basis.size(); ++i) v.add(basis[i], x[i]);
    return v;
}

}  // namespace fockforge::fock
