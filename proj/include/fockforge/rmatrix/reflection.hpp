#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fockforge/fock/change.hpp"
#include "fockforge/virasoro/feigin_fuchs.hpp"

namespace fockforge::rmatrix {

using exact::Equivariant;
using exact::Matrix;
using exact::Rational;
using exact::RF;
using fock::FockVector;
using fock::LatticePtr;
using fock::OperatorMatrix;

/// SourceSwapped: R L_n(sigma a) = L_n(a) R, i.e. R = M(a) M(sigma a)^{-1}.
/// TargetSwapped: R L_n(a) = L_n(sigma a) R, the inverse operator.
/// sigma exchanges a1 and a2; M is the PBW matrix.
enum class Orientation { SourceSwapped, TargetSwapped };

/// Post-multiplication applied to the raw reflection: the identity, or the
/// parity omega = (-1)^{number of creation operators}, each with a sign.
enum class Normalization { Plus, Minus, PlusParity, MinusParity };

struct ReflectionConvention {
    Orientation orientation = Orientation::TargetSwapped;
    Normalization normalization = Normalization::PlusParity;
};

const char* to_string(Orientation o);
const char* to_string(Normalization n);
std::string to_string(const ReflectionConvention& c);

/// Reflection operator on the antidiagonal factor (rank one, gram [2],
/// standard form) for spectral parameter a1 - a2 of `params`, degrees
/// 0..max_degree. Raw (un-normalized) unless a convention says otherwise.
/// Throws exact::PoleError naming the vanishing PBW determinant when the
/// parameters are not generic.
OperatorMatrix reflection(const Equivariant& params, int max_degree, Orientation orientation);
OperatorMatrix reflection(const Equivariant& params, int max_degree, const ReflectionConvention& conv);

/// Diagonal operator (-1)^{#modes} or its negative, per normalization.
OperatorMatrix normalization_operator(LatticePtr lattice, int max_degree, Normalization n);

/// r = -e1 e2 sum_{n>0} P_{-n} P_n on the antidiagonal factor.
OperatorMatrix classical_r(const Equivariant& params, int max_degree);

/// Parameters (a_i, a_j, e1, e2) inside the coefficient ring of `params`.
Equivariant pair_params(const Equivariant& params, std::size_t i, std::size_t j);

}  // namespace fockforge::rmatrix
