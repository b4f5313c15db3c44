#include "fockforge/virasoro/feigin_fuchs.hpp"

#include <stdexcept>

namespace fockforge::virasoro {

FeiginFuchsSpec FeiginFuchsSpec::along(LatticePtr lattice, Direction boson, const RF& a_dot_alpha) {
    if (lattice->pairing(boson, boson) != 2) throw std::invalid_argument("Feigin-Fuchs boson must have self-pairing 2");
    const auto& p = lattice->params();
    RF shifted = a_dot_alpha - p.s();
    RF zero = lattice->form() == FormScale::Standard ? shifted / p.e1e2() : shifted;
    return {std::move(lattice), std::move(boson), zero};
}

FeiginFuchsSpec FeiginFuchsSpec::sl2(const Equivariant& params, FormScale form) {
    auto L = fock::make_lattice(Matrix<Rational>{{2}}, form, params, {"P-"});
    return along(L, Direction{1}, params.difference(0, 1));
}

FockVector boson_mode(const FeiginFuchsSpec& spec, int k, const FockVector& v) {
    if (k == 0) return v.scaled(spec.zero_mode);
    return fock::mode(*spec.lattice, spec.boson, k, v);
}

namespace {

// :P_a P_b: v with the annihilator (positive mode) applied first.
FockVector normal_pair(const FeiginFuchsSpec& spec, int a, int b, const FockVector& v) {
    if (a > b) std::swap(a, b);
    return boson_mode(spec, a, boson_mode(spec, b, v));
}

int max_degree_of(const FockVector& v) {
    int d = 0;
    for (const auto& [m, c] : v.terms()) d = std::max(d, fock::degree(m));
    return d;
}

}  // namespace

FockVector virasoro_apply(const FeiginFuchsSpec& spec, int n, const FockVector& v) {
    if (v.is_zero()) return v;
    const auto& p = spec.params();
    const bool integral = spec.form() == FormScale::Integral;
    const RF quad = integral ? RF(Rational(-1, 4)) : p.e1e2() * RF(Rational(-1, 4));
    const RF lin = p.s() * RF(Rational(-(n + 1), 2));

    // Annihilators above the top degree act by zero.
    const int top = max_degree_of(v);
    FockVector sum;
    for (int m = std::min(0, n) - top; m <= std::max(0, n) + top; ++m) {
        int k = n - m;
        if (m > top || k > top) continue;
        sum += normal_pair(spec, m, k, v);
    }
    FockVector out = sum.scaled(quad);
    if (!lin.is_zero()) out += boson_mode(spec, n, v).scaled(lin);
    return out;
}

FockVector virasoro_apply_word(const FeiginFuchsSpec& spec, const std::vector<int>& lambda, const FockVector& v) {
    FockVector out = v;
    for (auto it = lambda.rbegin(); it != lambda.rend(); ++it) out = virasoro_apply(spec, -*it, out);
    return out;
}

OperatorMatrix virasoro_mode(int n, const FeiginFuchsSpec& spec, int max_degree) {
    return OperatorMatrix::from_action(spec.lattice, -n, max_degree,
                                       [&](const FockVector& v) { return virasoro_apply(spec, n, v); });
}

FeiginFuchsSpec integral_twin(const FeiginFuchsSpec& spec) {
    if (spec.form() == FormScale::Integral) return spec;
    auto L = std::make_shared<const fock::BosonLattice>(spec.lattice->with_form(FormScale::Integral));
    return {L, spec.boson, spec.zero_mode * spec.params().e1e2()};
}

OperatorMatrix integral_mode(int n, const FeiginFuchsSpec& spec, int max_degree) {
    return virasoro_mode(n, integral_twin(spec), max_degree);
}

RF central_charge(const Equivariant& p) { return RF(1) + RF(6) * p.s() * p.s() / p.e1e2(); }

OperatorMatrix virasoro_bracket_residual(int m, int n, const FeiginFuchsSpec& spec, int max_degree) {
    // Build the modes far enough up that every composition is stored.
    const int reach = max_degree + std::abs(m) + std::abs(n);
    OperatorMatrix Lm = virasoro_mode(m, spec, reach);
    OperatorMatrix Ln = virasoro_mode(n, spec, reach);
    OperatorMatrix Lmn = virasoro_mode(m + n, spec, reach);
    const auto& p = spec.params();
    const bool integral = spec.form() == FormScale::Integral;
    RF outer = integral ? p.e1e2() : RF(1);
    OperatorMatrix out = fock::commutator(Lm, Ln) - Lmn.scaled(outer * RF(m - n));
    if (m + n == 0) {
        RF c = integral ? p.e1e2() + RF(6) * p.s() * p.s() : central_charge(p);
        RF k = outer * c * RF(Rational(m * m * m - m, 12));
        out = out - OperatorMatrix::identity(spec.lattice, reach).scaled(k);
    }
    return out.restricted(max_degree);
}

std::vector<std::vector<int>> partitions(int d) {
    std::vector<std::vector<int>> out;
    for (const auto& m : fock::colored_partitions(1, d)) {
        std::vector<int> lambda;
        for (const auto& x : m) lambda.push_back(x.n);
        out.push_back(std::move(lambda));
    }
    return out;
}

Matrix<RF> pbw_matrix(int d, const FeiginFuchsSpec& spec) {
    auto rows = spec.lattice->basis(d);
    auto lambdas = partitions(d);
    Matrix<RF> M(rows.size(), lambdas.size());
    for (std::size_t j = 0; j < lambdas.size(); ++j) {
        auto col = fock::coordinates(rows, virasoro_apply_word(spec, lambdas[j], FockVector::vacuum()));
        for (std::size_t i = 0; i < rows.size(); ++i) M(i, j) = std::move(col[i]);
    }
    return M;
}

}  // namespace fockforge::virasoro
