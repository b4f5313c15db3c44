#pragma once

#include "fockforge/virasoro/feigin_fuchs.hpp"

namespace fockforge::virasoro {

/// Sign of the cubic term in the cup product by c_1 of the tautological
/// bundle on the Hilbert scheme side:
///   c_1 = k (e1e2)^2/6 sum_{m1+m2+m3=0} :P P P: - (e1e2 (e1+e2)/4) sum_m (|m|-1) :P_{-m} P_m:
/// Transcribed takes k = -1 as printed; CommutatorConsistent takes k = +1,
/// the sign for which [c_1, P_n] reproduces the quadratic term
/// +(n e1e2/2) sum :P_l P_m:. The two differ by the automorphism P -> -P.
enum class LehnSign { Transcribed, CommutatorConsistent };

/// Rank-one lattice with gram [1] in the standard form,
/// [P_m, P_n] = -m delta_{m,-n}/(e1 e2).
LatticePtr lehn_lattice(const Equivariant& params);

FockVector lehn_apply(const fock::BosonLattice& L, const FockVector& v, LehnSign sign = LehnSign::CommutatorConsistent);
OperatorMatrix lehn_operator(LatticePtr L, int max_degree, LehnSign sign = LehnSign::CommutatorConsistent);

/// Right-hand side (n e1e2/2) sum_{l+m=n} :P_l P_m: - (n(|n|-1)/2)(e1+e2) P_n.
FockVector lehn_commutator_rhs(const fock::BosonLattice& L, int n, const FockVector& v);

/// [c_1, P_n] minus the right-hand side, source degrees 0..max_degree.
OperatorMatrix lehn_commutator_residual(LatticePtr L, int n, int max_degree,
                                        LehnSign sign = LehnSign::CommutatorConsistent);

}  // namespace fockforge::virasoro
