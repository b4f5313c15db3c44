#pragma once

#include <cstdint>

#include "fockforge/rmatrix/reflection.hpp"

namespace fockforge::rmatrix {

/// One normalization/orientation tried against R = 1 + (s/u) r + O(u^-2).
struct ExpansionCandidate {
    ReflectionConvention convention;
    /// Highest k in {0, 1} such that the u^0..u^-k coefficients match;
    /// -1 when the block grows at u = infinity or the constant term fails.
    int verified_order = -1;
    std::string mismatch;  // empty when verified_order == 1
    bool passes() const { return verified_order >= 1; }
};

struct ExpansionReport {
    int degree = 0;
    std::vector<ExpansionCandidate> candidates;
    /// Scalar sign that works on this degree for some orientation, if any.
    std::optional<int> scalar_sign;
    std::optional<Orientation> scalar_orientation;
    bool any_passes() const;
    const ExpansionCandidate& find(const ReflectionConvention& c) const;
};

/// All eight conventions on the degree-d block, expanded in u = a1 - a2.
ExpansionReport expansion_report(int d);

/// rank-3 gl-type lattice (gram = identity, standard form) with the new
/// generators Delta_ij = P^i + P^j, -_ij = P^i - P^j and the remaining P^k.
class PairEmbedding {
  public:
    PairEmbedding(LatticePtr triple, std::size_t i, std::size_t j);

    std::size_t i() const { return i_; }
    std::size_t j() const { return j_; }
    const fock::GeneratorChange& change() const { return change_; }

    /// id on Delta_ij and on the third boson, `op` on the -_ij factor.
    OperatorMatrix lift(const OperatorMatrix& op, int max_degree) const;

  private:
    std::size_t i_, j_;
    fock::GeneratorChange change_;
};

LatticePtr triple_lattice(const Equivariant& params);

/// R_ij(a_i - a_j) on the triple Fock space under a convention.
OperatorMatrix pair_reflection(const Equivariant& params, std::size_t i, std::size_t j, int max_degree,
                               const ReflectionConvention& conv);

/// R12 R13 R23 - R23 R13 R12 on degrees 0..max_degree; `params` carries
/// a1, a2, a3, e1, e2.
OperatorMatrix ybe_residual(const Equivariant& params, int max_degree, const ReflectionConvention& conv);

/// Deterministic generic numeric parameters (a1, a2, a3, e1, e2) for a seed:
/// small rationals, a_i distinct, and every PBW matrix up to `max_degree`
/// invertible for all three pairs.
Equivariant ybe_seed_params(std::uint64_t seed, int max_degree);

}  // namespace fockforge::rmatrix
