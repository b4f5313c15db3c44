#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "fockforge/virasoro/feigin_fuchs.hpp"
#include "fockforge/wlattice/pid.hpp"

namespace fockforge::wlattice {

using fock::BosonLattice;
using fock::FockVector;
using fock::LatticePtr;

enum class Algebra { sl2, sl3 };

const char* to_string(Algebra g);
/// "sl2" or "sl3"; throws std::invalid_argument otherwise.
Algebra parse_algebra(const std::string& s);

/// Free submodule of one graded piece of a Fock space, given by a basis of
/// vectors with polynomial coefficients in the ~P monomials.
struct FockLattice {
    LatticePtr ambient;
    int degree = 0;
    std::vector<FockVector> basis;

    std::size_t size() const { return basis.size(); }
    /// Rows: ambient monomials of the degree; columns: basis vectors.
    Matrix<RF> coordinates() const;
};

/// A coefficient that should have been polynomial was not.
class IntegralityError : public std::domain_error {
  public:
    IntegralityError(RF coefficient, const std::string& what)
        : std::domain_error(what), coefficient_(std::move(coefficient)) {}
    const RF& coefficient() const { return coefficient_; }

  private:
    RF coefficient_;
};

/// Integral-form boson lattice of the root lattice: gram [2] over a1, a2
/// for sl2, the Cartan matrix over a1, a2, a3 for sl3. Shared per algebra.
LatticePtr root_lattice(Algebra g);

/// Primitive integral vector orthogonal to alpha_i, first nonzero entry
/// positive. Empty for sl2.
fock::Direction orthogonal_root(Algebra g, std::size_t i);

/// Integral Feigin-Fuchs boson along alpha_i with <a, alpha_i> = a_i - a_{i+1}.
virasoro::FeiginFuchsSpec root_spec(Algebra g, std::size_t i);

/// Basis ~L_{i,-lambda} ~Q_{-mu} |vac>, |lambda| + |mu| = d, with ~Q along
/// orthogonal_root(g, i); Virasoro-heavy terms first. Throws
/// IntegralityError on a non-polynomial coefficient.
FockLattice vir_sublattice(Algebra g, std::size_t i, int d);

/// All ~P monomials of degree d with coefficient 1.
FockLattice heisenberg_lattice(LatticePtr L, int d);

struct PidIntersection {
    std::uint64_t seed = 0;
    std::size_t rank = 0;
    /// Columns span L1 cap L2 after specialization, in ambient coordinates.
    Matrix<UPoly> basis;
    /// Invariant factors of the intersection inside the ambient monomial
    /// lattice, inside L1, and inside L2.
    std::vector<UPoly> divisors;
    std::vector<UPoly> divisors_in_first;
    std::vector<UPoly> divisors_in_second;
};

/// The line lost rank somewhere; try another seed.
class DegenerateLine : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

PidIntersection pid_intersection(const FockLattice& L1, const FockLattice& L2, const LineSpecialization& line);

struct IntegrityWitness {
    int degree;
    std::size_t root;
    std::string what;
};

struct IntegralityReport {
    bool pass = true;
    std::vector<IntegrityWitness> witnesses;
};

/// Every vir_sublattice basis for degrees 0..d and every simple root has
/// polynomial coefficients and full rank.
IntegralityReport integrality_check(Algebra g, int d);

/// gl(r) boson lattice: identity gram, standard form, a1..ar symbolic.
LatticePtr gl_lattice(std::size_t r);

/// Degree-d vectors killed by P^Delta_m = sum_i P^i_m for 0 < m <= d.
FockLattice annihilator_kernel(std::size_t r, int d);
/// Same test for a single vector of `L` (identity gram).
bool killed_by_diagonal(const BosonLattice& L, const FockVector& v);

}  // namespace fockforge::wlattice
