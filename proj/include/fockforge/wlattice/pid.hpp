#pragma once

#include <cstdint>
#include <vector>

#include "fockforge/exact/matrix.hpp"
#include "fockforge/exact/upoly.hpp"
#include "fockforge/exact/var_spec.hpp"

namespace fockforge::wlattice {

using exact::Matrix;
using exact::Rational;
using exact::RF;
using exact::UPoly;

/// Column operations over Q[t]: A * U = H with U unimodular, the first
/// `rank` columns of H in column echelon form and the rest zero.
struct ColumnEchelon {
    Matrix<UPoly> H;
    Matrix<UPoly> U;
    std::size_t rank = 0;
};
ColumnEchelon column_echelon(const Matrix<UPoly>& A);

/// Nonzero invariant factors of A over Q[t], monic, each dividing the next.
std::vector<UPoly> smith_divisors(Matrix<UPoly> A);

/// Columns of U spanning ker A over Q[t] (a basis of the kernel module).
Matrix<UPoly> kernel_basis(const Matrix<UPoly>& A);

/// Sends each coefficient variable to c0 + c1 t, c1 != 0, drawn from a
/// seeded mt19937_64. Restricting A_T-modules to such a line turns
/// module questions into linear algebra over the PID Q[t].
class LineSpecialization {
  public:
    LineSpecialization(exact::VarSpecPtr vars, std::uint64_t seed);
    /// Explicit images, one per variable; seed reported as 0.
    LineSpecialization(exact::VarSpecPtr vars, std::vector<UPoly> images);

    std::uint64_t seed() const { return seed_; }
    const exact::VarSpecPtr& vars() const { return vars_; }
    const std::vector<UPoly>& images() const { return images_; }

    /// Throws std::domain_error for non-polynomial input.
    UPoly apply(const RF& x) const;
    UPoly apply(const exact::Poly& p) const;
    Matrix<UPoly> apply(const Matrix<RF>& m) const;

  private:
    exact::VarSpecPtr vars_;
    std::uint64_t seed_;
    std::vector<UPoly> images_;
};

}  // namespace fockforge::wlattice
