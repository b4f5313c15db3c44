#include "fockforge/exact/equivariant.hpp"

#include <utility>

namespace fockforge::exact {

Equivariant Equivariant::symbolic(std::size_t n_cartan) {
    Equivariant eq;
    eq.vars = VarSpec::equivariant(n_cartan);
    for (std::size_t i = 0; i < n_cartan; ++i) eq.a.push_back(RationalFunction::var(i));
    eq.e1 = RationalFunction::var(n_cartan);
    eq.e2 = RationalFunction::var(n_cartan + 1);
    return eq;
}

Equivariant Equivariant::spectral() {
    Equivariant eq;
    eq.vars = std::make_shared<const VarSpec>(std::vector<std::string>{"u", "e1", "e2"},
                                              std::vector<VarKind>{VarKind::Cartan, VarKind::Epsilon, VarKind::Epsilon});
    eq.a = {RationalFunction::var(0), RationalFunction(0)};
    eq.e1 = RationalFunction::var(1);
    eq.e2 = RationalFunction::var(2);
    return eq;
}

Equivariant Equivariant::numeric(std::vector<Rational> a, const Rational& e1, const Rational& e2) {
    Equivariant eq;
    eq.vars = std::make_shared<const VarSpec>();
    for (auto& x : a) eq.a.emplace_back(x);
    eq.e1 = RationalFunction(e1);
    eq.e2 = RationalFunction(e2);
    return eq;
}

Equivariant Equivariant::swapped(std::size_t i, std::size_t j) const {
    Equivariant eq = *this;
    std::swap(eq.a.at(i), eq.a.at(j));
    return eq;
}

}  // namespace fockforge::exact
