#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "fockforge/exact/rational_function.hpp"
#include "fockforge/exact/var_spec.hpp"

namespace fockforge::exact {

/// Values of the equivariant parameters a_1..a_n, e1, e2 inside one
/// coefficient field. Symbolic contexts use the variables themselves;
/// numeric contexts plug in rationals.
struct Equivariant {
    VarSpecPtr vars;
    std::vector<RationalFunction> a;
    RationalFunction e1;
    RationalFunction e2;

    /// Variables a1..an, e1, e2.
    static Equivariant symbolic(std::size_t n_cartan);
    /// Variables u, e1, e2 with a = (u, 0): everything depending only on
    /// a1 - a2 is expressed through u.
    static Equivariant spectral();
    /// No variables at all.
    static Equivariant numeric(std::vector<Rational> a, const Rational& e1, const Rational& e2);

    RationalFunction e1e2() const { return e1 * e2; }
    RationalFunction s() const { return e1 + e2; }
    /// a_i - a_j (0-based indices).
    RationalFunction difference(std::size_t i, std::size_t j) const { return a.at(i) - a.at(j); }
    /// Copy with a_i and a_j exchanged.
    Equivariant swapped(std::size_t i, std::size_t j) const;

    std::string format(const RationalFunction& x) const { return x.to_string(*vars); }
};

}  // namespace fockforge::exact
