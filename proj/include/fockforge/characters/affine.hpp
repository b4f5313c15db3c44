#pragma once

#include <string>
#include <vector>

#include "fockforge/characters/series.hpp"

namespace fockforge::characters {

/// Finite type X_r of G; the level-one algebra is the Langlands dual of
/// the untwisted affinization (untwisted itself for ADE).
struct AffineType {
    char base;  // A B C D E F G
    int rank;

    /// "G2" -> {G, 2}. Throws std::invalid_argument on anything that is not
    /// a finite simple type (A1+, B2+, C2+, D4+, E6-8, F4, G2).
    static AffineType parse(const std::string& s);

    std::string name() const;
    bool simply_laced() const { return base == 'A' || base == 'D' || base == 'E'; }
    /// Kac notation of the dual affine algebra, e.g. "D4^(3)".
    std::string dual_label() const;
    int lacing() const;
    int long_simple_roots() const;
    int dual_coxeter() const;
    /// mult of n delta in the dual affine algebra.
    long mult(int n) const;

    friend bool operator==(const AffineType&, const AffineType&) = default;
};

/// One representative per row of the table, plus small ranks.
std::vector<AffineType> catalog_types();

/// Coefficient of q^d in prod (1 - q^n)^{-mult n delta}.
Rational level1_multiplicity(const AffineType& t, int d);
QSeries level1_series(const AffineType& t, int order);

struct FrenkelKacResult {
    bool pass = true;
    /// First degree where the sides disagree, or -1.
    int mismatch_degree = -1;
};

/// For ADE: level-one multiplicities against the graded dimension of the
/// rank-r Fock space, both from the series and from the Fock basis.
FrenkelKacResult frenkel_kac_check(const AffineType& t, int order);

/// k = -e2/e1 - h^vee. Throws exact::PoleError when e1 = 0.
exact::RationalFunction level_map(const exact::RationalFunction& e1, const exact::RationalFunction& e2,
                                  const AffineType& t);

}  // namespace fockforge::characters
