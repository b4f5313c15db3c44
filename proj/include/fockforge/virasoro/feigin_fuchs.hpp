#pragma once

#include <vector>

#include "fockforge/fock/operator_matrix.hpp"

namespace fockforge::virasoro {

using exact::Equivariant;
using exact::Matrix;
using exact::Rational;
using exact::RF;
using fock::Direction;
using fock::FockVector;
using fock::FormScale;
using fock::LatticePtr;
using fock::OperatorMatrix;

/// One boson P = P^dir of self-pairing 2 inside a lattice, together with
/// the value of its central zero mode. In the integral form every mode,
/// the zero mode included, is e1 e2 times the standard one.
struct FeiginFuchsSpec {
    LatticePtr lattice;
    Direction boson;
    RF zero_mode;

    /// Zero mode from <a, alpha>: (<a,alpha> - e1 - e2)/(e1 e2), or
    /// <a,alpha> - e1 - e2 in the integral form.
    static FeiginFuchsSpec along(LatticePtr lattice, Direction boson, const RF& a_dot_alpha);
    /// Rank-one lattice with gram [2] and <a, alpha> = a1 - a2.
    static FeiginFuchsSpec sl2(const Equivariant& params, FormScale form = FormScale::Standard);

    const Equivariant& params() const { return lattice->params(); }
    FormScale form() const { return lattice->form(); }
};

/// P_k along the boson; k = 0 multiplies by the zero mode.
FockVector boson_mode(const FeiginFuchsSpec& spec, int k, const FockVector& v);

/// L_n v (or ~L_n v in the integral form):
///   L_n  = -(e1 e2/4) sum_m :P_m P_{n-m}: - ((n+1)/2)(e1+e2) P_n
///   ~L_n = -(1/4)     sum_m :~P_m ~P_{n-m}: - ((n+1)/2)(e1+e2) ~P_n
FockVector virasoro_apply(const FeiginFuchsSpec& spec, int n, const FockVector& v);
/// L_{-lambda_1} ... L_{-lambda_k} v.
FockVector virasoro_apply_word(const FeiginFuchsSpec& spec, const std::vector<int>& lambda, const FockVector& v);

OperatorMatrix virasoro_mode(int n, const FeiginFuchsSpec& spec, int max_degree);
/// Same operator for the integral twin of `spec`.
OperatorMatrix integral_mode(int n, const FeiginFuchsSpec& spec, int max_degree);
FeiginFuchsSpec integral_twin(const FeiginFuchsSpec& spec);

/// c = 1 + 6 (e1+e2)^2/(e1 e2).
RF central_charge(const Equivariant& params);

/// Standard form: [L_m, L_n] - (m-n) L_{m+n} - c delta_{m,-n} (m^3-m)/12.
/// Integral form: [~L_m, ~L_n] - e1e2 { (m-n) ~L_{m+n}
///                 + (e1e2 + 6 (e1+e2)^2) delta_{m,-n} (m^3-m)/12 }.
/// Source degrees 0..max_degree.
OperatorMatrix virasoro_bracket_residual(int m, int n, const FeiginFuchsSpec& spec, int max_degree);

/// Columns L_{-lambda}|vac>, lambda ranging over partitions of d (largest
/// part first), rows the degree-d monomial basis of the lattice.
Matrix<RF> pbw_matrix(int d, const FeiginFuchsSpec& spec);

/// Partitions of d in the order used by pbw_matrix.
std::vector<std::vector<int>> partitions(int d);

}  // namespace fockforge::virasoro
