#include "fockforge/rmatrix/reflection.hpp"

#include <stdexcept>

namespace fockforge::rmatrix {

using virasoro::FeiginFuchsSpec;

const char* to_string(Orientation o) { return o == Orientation::SourceSwapped ? "source-swapped" : "target-swapped"; }

const char* to_string(Normalization n) {
    switch (n) {
        case Normalization::Plus: return "+id";
        case Normalization::Minus: return "-id";
        case Normalization::PlusParity: return "+parity";
        case Normalization::MinusParity: return "-parity";
    }
    return "?";
}

std::string to_string(const ReflectionConvention& c) {
    return std::string(to_string(c.orientation)) + "," + to_string(c.normalization);
}

namespace {

// Name the PBW determinant factor that vanishes at numeric parameters.
[[noreturn]] void throw_singular(const Equivariant& params, int d) {
    std::vector<std::optional<Rational>> values;
    for (const RF* x : {&params.a.at(0), &params.a.at(1), &params.e1, &params.e2}) {
        if (!x->is_constant()) throw exact::SingularMatrix("reflection: PBW matrix singular at degree " + std::to_string(d));
        values.push_back(x->constant_value());
    }
    auto sym = Equivariant::symbolic(2);
    RF det = exact::determinant(virasoro::pbw_matrix(d, FeiginFuchsSpec::sl2(sym))) *
             exact::determinant(virasoro::pbw_matrix(d, FeiginFuchsSpec::sl2(sym.swapped(0, 1))));
    try {
        (void)det.inverse().specialize(values);
    } catch (const exact::PoleError& e) {
        throw exact::PoleError(e.factor(), "reflection: PBW determinant factor " + e.factor().to_string(*sym.vars) +
                                               " vanishes at degree " + std::to_string(d));
    }
    throw exact::SingularMatrix("reflection: PBW matrix singular at degree " + std::to_string(d));
}

}  // namespace

OperatorMatrix reflection(const Equivariant& params, int max_degree, Orientation orientation) {
    auto spec = FeiginFuchsSpec::sl2(params);
    auto swapped = FeiginFuchsSpec::sl2(params.swapped(0, 1));
    OperatorMatrix out(spec.lattice, spec.lattice, 0);
    for (int d = 0; d <= max_degree; ++d) {
        Matrix<RF> M = virasoro::pbw_matrix(d, spec);
        Matrix<RF> Ms = virasoro::pbw_matrix(d, swapped);
        try {
            out.set_block(d, orientation == Orientation::SourceSwapped ? M * exact::inverse(Ms) : Ms * exact::inverse(M));
        } catch (const exact::SingularMatrix&) {
            throw_singular(params, d);
        }
    }
    return out;
}

OperatorMatrix normalization_operator(LatticePtr lattice, int max_degree, Normalization n) {
    const bool parity = n == Normalization::PlusParity || n == Normalization::MinusParity;
    const RF sign = n == Normalization::Minus || n == Normalization::MinusParity ? RF(-1) : RF(1);
    return OperatorMatrix::from_action(lattice, 0, max_degree, [&](const FockVector& v) {
        FockVector out;
        for (const auto& [m, c] : v.terms()) out.add(m, parity && m.size() % 2 == 1 ? -(c * sign) : c * sign);
        return out;
    });
}

OperatorMatrix reflection(const Equivariant& params, int max_degree, const ReflectionConvention& conv) {
    OperatorMatrix R = reflection(params, max_degree, conv.orientation);
    return normalization_operator(R.source(), max_degree, conv.normalization) * R;
}

OperatorMatrix classical_r(const Equivariant& params, int max_degree) {
    auto L = FeiginFuchsSpec::sl2(params).lattice;
    RF k = -params.e1e2();
    return OperatorMatrix::from_action(L, 0, max_degree, [&](const FockVector& v) {
        FockVector out;
        for (int n = 1; n <= max_degree; ++n) out += fock::create(*L, 0, n, fock::annihilate(*L, 0, n, v));
        return out.scaled(k);
    });
}

Equivariant pair_params(const Equivariant& params, std::size_t i, std::size_t j) {
    Equivariant p = params;
    p.a = {params.a.at(i), params.a.at(j)};
    return p;
}

}  // namespace fockforge::rmatrix
