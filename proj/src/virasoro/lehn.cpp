#include "fockforge/virasoro/lehn.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace fockforge::virasoro {

namespace {

void require_rank_one(const fock::BosonLattice& L) {
    if (L.rank() != 1) throw std::invalid_argument("Lehn operator needs a rank-one lattice");
}

int top_degree(const FockVector& v) {
    int d = 0;
    for (const auto& [m, c] : v.terms()) d = std::max(d, fock::degree(m));
    return d;
}

// Normal-ordered product of nonzero modes: annihilators act first.
FockVector normal_product(const fock::BosonLattice& L, std::vector<int> modes, const FockVector& v) {
    std::sort(modes.begin(), modes.end());
    FockVector out = v;
    for (auto it = modes.rbegin(); it != modes.rend() && !out.is_zero(); ++it) out = fock::mode(L, 0, *it, out);
    return out;
}

}  // namespace

LatticePtr lehn_lattice(const Equivariant& params) {
    return fock::make_lattice(Matrix<Rational>{{1}}, FormScale::Standard, params, {"P"});
}

FockVector lehn_apply(const fock::BosonLattice& L, const FockVector& v, LehnSign sign) {
    require_rank_one(L);
    const auto& p = L.params();
    const int top = top_degree(v);

    // Every mode of a surviving term is bounded by the degree in absolute value.
    FockVector cubic;
    for (int a = -top; a <= top; ++a) {
        for (int b = -top; b <= top; ++b) {
            int c = -a - b;
            if (a == 0 || b == 0 || c == 0 || std::abs(c) > top) continue;
            cubic += normal_product(L, {a, b, c}, v);
        }
    }
    FockVector quad;
    for (int m = 2; m <= top; ++m) {
        quad += normal_product(L, {-m, m}, v).scaled(RF(2 * (m - 1)));  // m and -m give the same term
    }
    RF k = sign == LehnSign::Transcribed ? RF(-1) : RF(1);
    RF e1e2 = p.e1e2();
    return cubic.scaled(k * e1e2 * e1e2 * RF(Rational(1, 6))) - quad.scaled(e1e2 * p.s() * RF(Rational(1, 4)));
}

OperatorMatrix lehn_operator(LatticePtr L, int max_degree, LehnSign sign) {
    return OperatorMatrix::from_action(L, 0, max_degree, [&](const FockVector& v) { return lehn_apply(*L, v, sign); });
}

FockVector lehn_commutator_rhs(const fock::BosonLattice& L, int n, const FockVector& v) {
    require_rank_one(L);
    if (n == 0) return {};
    const auto& p = L.params();
    const int top = top_degree(v);
    FockVector quad;
    for (int l = std::min(0, n) - top; l <= std::max(0, n) + top; ++l) {
        int m = n - l;
        if (l == 0 || m == 0 || l > top || m > top) continue;
        quad += normal_product(L, {l, m}, v);
    }
    RF a = p.e1e2() * RF(Rational(n, 2));
    RF b = p.s() * RF(Rational(n * (std::abs(n) - 1), 2));
    return quad.scaled(a) - fock::mode(L, 0, n, v).scaled(b);
}

OperatorMatrix lehn_commutator_residual(LatticePtr L, int n, int max_degree, LehnSign sign) {
    if (n == 0) throw std::invalid_argument("lehn_commutator_residual: n must be nonzero");
    const int reach = max_degree + std::abs(n);
    OperatorMatrix c1 = lehn_operator(L, reach, sign);
    OperatorMatrix Pn = OperatorMatrix::from_action(L, -n, reach, [&](const FockVector& v) { return fock::mode(*L, 0, n, v); });
    OperatorMatrix rhs =
        OperatorMatrix::from_action(L, -n, reach, [&](const FockVector& v) { return lehn_commutator_rhs(*L, n, v); });
    return (fock::commutator(c1, Pn) - rhs).restricted(max_degree);
}

}  // namespace fockforge::virasoro
