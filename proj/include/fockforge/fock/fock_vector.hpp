#pragma once

#include <map>
#include <optional>
#include <vector>

#include "fockforge/fock/lattice.hpp"

namespace fockforge::fock {

/// Finite combination of creation monomials on |vac>.
class FockVector {
  public:
    using Terms = std::map<ModeMonomial, RF>;

    FockVector() = default;
    static FockVector vacuum() { return monomial({}); }
    static FockVector monomial(const ModeMonomial& m, const RF& c = RF(1));

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    RF coefficient(const ModeMonomial& m) const;
    /// Common degree of all monomials; nullopt for zero or mixed vectors.
    std::optional<int> degree() const;

    void add(const ModeMonomial& m, const RF& c);
    FockVector& operator+=(const FockVector& o);
    FockVector& operator-=(const FockVector& o);
    friend FockVector operator+(FockVector a, const FockVector& b) { return a += b; }
    friend FockVector operator-(FockVector a, const FockVector& b) { return a -= b; }
    FockVector operator-() const { return scaled(RF(-1)); }
    FockVector scaled(const RF& c) const;
    friend FockVector operator*(const RF& c, const FockVector& v) { return v.scaled(c); }

    template <class F>
    FockVector map_coefficients(F&& f) const {
        FockVector out;
        for (const auto& [m, c] : terms_) out.add(m, f(c));
        return out;
    }

    friend bool operator==(const FockVector&, const FockVector&) = default;

  private:
    Terms terms_;
};

/// P^dir_{-n}: multiplies by sum_i dir[i] P^i_{-n}.
FockVector create(const BosonLattice& L, const Direction& dir, int n, const FockVector& v);
/// P^dir_n, n >= 1, acting by the bracket with each creation operator.
FockVector annihilate(const BosonLattice& L, const Direction& dir, int n, const FockVector& v);
/// P^dir_m for m != 0 (negative m creates).
FockVector mode(const BosonLattice& L, const Direction& dir, int m, const FockVector& v);

FockVector create(const BosonLattice& L, std::size_t i, int n, const FockVector& v);
FockVector annihilate(const BosonLattice& L, std::size_t i, int n, const FockVector& v);
FockVector mode(const BosonLattice& L, std::size_t i, int m, const FockVector& v);

/// Adjoint used by the pairing: (P_n)^dagger = +P_{-n} or -P_{-n}.
enum class Adjoint { Plus, Minus };

/// Bilinear pairing with <vac, vac> = 1 and the given adjoint rule.
RF contravariant_form(const BosonLattice& L, const FockVector& v, const FockVector& w, Adjoint adj = Adjoint::Plus);
/// Pairing matrix on the degree-d monomial basis.
Matrix<RF> contravariant_gram(const BosonLattice& L, int d, Adjoint adj = Adjoint::Plus);

/// Coordinates of a degree-d vector in L.basis(d).
std::vector<RF> coordinates(const std::vector<ModeMonomial>& basis, const FockVector& v);
FockVector from_coordinates(const std::vector<ModeMonomial>& basis, const std::vector<RF>& x);

}  // namespace fockforge::fock
