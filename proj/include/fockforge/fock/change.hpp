#pragma once

#include "fockforge/fock/operator_matrix.hpp"

namespace fockforge::fock {

/// New generators Q^a = sum_b T[a][b] P^b of an existing lattice. The new
/// lattice has gram T gram T^t and the same normalization.
class GeneratorChange {
  public:
    /// With `invertible` set, T must be square and nonsingular; to_new is
    /// then available.
    GeneratorChange(LatticePtr old_lattice, Matrix<Rational> T, bool invertible = true,
                    std::vector<std::string> labels = {});

    const LatticePtr& old_lattice() const { return old_; }
    const LatticePtr& new_lattice() const { return new_; }
    const Matrix<Rational>& matrix() const { return t_; }

    /// Expand a vector written in the Q's in terms of the P's.
    FockVector to_old(const FockVector& v) const;
    /// Inverse transport (isomorphism mode only).
    FockVector to_new(const FockVector& v) const;

    /// Row a of T as a direction in the old lattice.
    Direction direction(std::size_t a) const;

    /// Conjugate an operator on the new lattice over to the old one.
    OperatorMatrix to_old(const OperatorMatrix& op, int max_degree) const;

  private:
    LatticePtr old_;
    LatticePtr new_;
    Matrix<Rational> t_;
    std::optional<Matrix<Rational>> t_inv_;
};

GeneratorChange change_of_generators(const Matrix<Rational>& T, LatticePtr L);

}  // namespace fockforge::fock
