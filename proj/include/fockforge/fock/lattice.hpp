#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "fockforge/exact/equivariant.hpp"
#include "fockforge/exact/matrix.hpp"

namespace fockforge::fock {

using exact::Equivariant;
using exact::Matrix;
using exact::Rational;
using exact::RF;

/// Normalization of the Heisenberg bracket
///   [P^i_m, P^j_n] = -m delta_{m,-n} gram[i][j] * scale
/// with scale = 1/(e1 e2) (Standard) or e1 e2 (Integral, ~P = e1 e2 P).
enum class FormScale { Standard, Integral };

const char* to_string(FormScale f);

/// Creation operator P^gen_{-n}, n >= 1.
struct Mode {
    int n;
    int gen;
    friend bool operator==(const Mode&, const Mode&) = default;
    friend auto operator<=>(const Mode&, const Mode&) = default;
};

/// Product of commuting creation operators applied to |vac>. Canonical
/// order: larger n first, then smaller generator index.
using ModeMonomial = std::vector<Mode>;

int degree(const ModeMonomial& m);
/// Canonical insertion of one more creation operator.
ModeMonomial with_mode(ModeMonomial m, Mode x);
ModeMonomial merge(const ModeMonomial& a, const ModeMonomial& b);
/// All colored partitions of d with the given number of colors, in a
/// fixed order (largest first part first).
std::vector<ModeMonomial> colored_partitions(std::size_t colors, int d);
std::size_t colored_partition_count(std::size_t colors, int d);

/// Linear combination of generators, one coefficient per generator.
using Direction = std::vector<Rational>;
Direction unit_direction(std::size_t rank, std::size_t i);

class BosonLattice {
  public:
    BosonLattice(Matrix<Rational> gram, FormScale form, Equivariant params, std::vector<std::string> labels = {});

    std::size_t rank() const { return gram_.rows(); }
    const Matrix<Rational>& gram() const { return gram_; }
    FormScale form() const { return form_; }
    const Equivariant& params() const { return params_; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// 1/(e1 e2) or e1 e2.
    const RF& scale() const { return scale_; }
    /// (x, y) under the gram form.
    Rational pairing(const Direction& x, const Direction& y) const;

    std::vector<ModeMonomial> basis(int d) const { return colored_partitions(rank(), d); }
    std::size_t graded_dimension(int d) const { return colored_partition_count(rank(), d); }

    /// Same gram, form and coefficient ring.
    bool compatible(const BosonLattice& o) const;

    /// Same gram and coefficient ring, other normalization.
    BosonLattice with_form(FormScale form) const;

  private:
    Matrix<Rational> gram_;
    FormScale form_;
    Equivariant params_;
    std::vector<std::string> labels_;
    RF scale_;
};

using LatticePtr = std::shared_ptr<const BosonLattice>;

LatticePtr make_lattice(Matrix<Rational> gram, FormScale form, Equivariant params,
                        std::vector<std::string> labels = {});

/// Cartan matrix of sl_{n+1}.
Matrix<Rational> cartan_gram_a(std::size_t n);

}  // namespace fockforge::fock
