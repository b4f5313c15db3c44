#include "fockforge/wlattice/lattice.hpp"

#include <map>
#include <numeric>

namespace fockforge::wlattice {

using fock::Direction;
using fock::ModeMonomial;
using virasoro::FeiginFuchsSpec;

const char* to_string(Algebra g) { return g == Algebra::sl2 ? "sl2" : "sl3"; }

Algebra parse_algebra(const std::string& s) {
    if (s == "sl2") return Algebra::sl2;
    if (s == "sl3") return Algebra::sl3;
    throw std::invalid_argument("unknown algebra '" + s + "' (expected sl2 or sl3)");
}

Matrix<RF> FockLattice::coordinates() const {
    auto mons = ambient->basis(degree);
    Matrix<RF> out(mons.size(), basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        auto x = fock::coordinates(mons, basis[j]);
        for (std::size_t i = 0; i < mons.size(); ++i) out(i, j) = x[i];
    }
    return out;
}

LatticePtr root_lattice(Algebra g) {
    static const LatticePtr sl2 = fock::make_lattice(Matrix<Rational>{{2}}, fock::FormScale::Integral,
                                                     exact::Equivariant::symbolic(2), {"P"});
    static const LatticePtr sl3 = fock::make_lattice(fock::cartan_gram_a(2), fock::FormScale::Integral,
                                                     exact::Equivariant::symbolic(3), {"P1", "P2"});
    return g == Algebra::sl2 ? sl2 : sl3;
}

Direction orthogonal_root(Algebra g, std::size_t i) {
    auto L = root_lattice(g);
    if (L->rank() == 1) return {};
    if (i >= L->rank()) throw std::out_of_range("orthogonal_root: no such simple root");
    // (x, alpha_i) = 0 in rank two
    const auto& G = L->gram();
    Direction v{G(i, 1), -G(i, 0)};
    mpz_class l = 1, g0 = 0;
    for (const auto& x : v) l = lcm(l, mpz_class(x.get_den()));
    for (auto& x : v) x *= l;
    for (const auto& x : v) g0 = gcd(g0, mpz_class(x.get_num()));
    for (auto& x : v) x /= g0;
    if (v[0] < 0 || (v[0] == 0 && v[1] < 0))
        for (auto& x : v) x = -x;
    return v;
}

FeiginFuchsSpec root_spec(Algebra g, std::size_t i) {
    auto L = root_lattice(g);
    if (i >= L->rank()) throw std::out_of_range("root_spec: no such simple root");
    return FeiginFuchsSpec::along(L, fock::unit_direction(L->rank(), i), L->params().difference(i, i + 1));
}

FockLattice vir_sublattice(Algebra g, std::size_t i, int d) {
    auto spec = root_spec(g, i);
    auto perp = orthogonal_root(g, i);
    FockLattice out{spec.lattice, d, {}};
    auto vars = spec.params().vars;
    for (int k = d; k >= 0; --k) {
        if (perp.empty() && k != d) break;
        for (const auto& mu : virasoro::partitions(d - k)) {
            FockVector q = FockVector::vacuum();
            for (int part : mu) q = fock::create(*spec.lattice, perp, part, q);
            for (const auto& lambda : virasoro::partitions(k)) {
                FockVector v = virasoro::virasoro_apply_word(spec, lambda, q);
                for (const auto& [m, c] : v.terms())
                    if (!c.is_polynomial())
                        throw IntegralityError(c, std::string(to_string(g)) + " root " + std::to_string(i + 1) +
                                                      " degree " + std::to_string(d) + ": coefficient " +
                                                      c.to_string(*vars) + " is not polynomial");
                out.basis.push_back(std::move(v));
            }
        }
    }
    return out;
}

FockLattice heisenberg_lattice(LatticePtr L, int d) {
    FockLattice out{L, d, {}};
    for (const auto& m : L->basis(d)) out.basis.push_back(FockVector::monomial(m));
    return out;
}

namespace {

Matrix<UPoly> hcat(const Matrix<UPoly>& a, const Matrix<UPoly>& b) {
    Matrix<UPoly> out(a.rows(), a.cols() + b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.cols(); ++j) out(i, a.cols() + j) = b(i, j);
    }
    return out;
}

Matrix<UPoly> rows_of(const Matrix<UPoly>& m, std::size_t from, std::size_t to) {
    Matrix<UPoly> out(to - from, m.cols());
    for (std::size_t i = from; i < to; ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i - from, j) = m(i, j);
    return out;
}

}  // namespace

PidIntersection pid_intersection(const FockLattice& L1, const FockLattice& L2, const LineSpecialization& line) {
    if (!L1.ambient->compatible(*L2.ambient) || L1.degree != L2.degree)
        throw std::invalid_argument("pid_intersection: lattices live in different spaces");
    const Matrix<RF> C1 = L1.coordinates(), C2 = L2.coordinates();
    Matrix<RF> C(C1.rows(), C1.cols() + C2.cols());
    for (std::size_t i = 0; i < C.rows(); ++i) {
        for (std::size_t j = 0; j < C1.cols(); ++j) C(i, j) = C1(i, j);
        for (std::size_t j = 0; j < C2.cols(); ++j) C(i, C1.cols() + j) = C2(i, j);
    }
    const std::size_t generic = exact::rank(C);

    const Matrix<UPoly> B1 = line.apply(C1), B2 = line.apply(C2);
    if (column_echelon(B1).rank != L1.size() || column_echelon(B2).rank != L2.size())
        throw DegenerateLine("pid_intersection: a basis loses rank on line seed " + std::to_string(line.seed()) +
                             "; retry with a new seed");
    const Matrix<UPoly> K = kernel_basis(hcat(B1, B2.scaled(UPoly(-1))));
    PidIntersection out;
    out.seed = line.seed();
    out.rank = K.cols();
    if (out.rank != L1.size() + L2.size() - generic)
        throw DegenerateLine("pid_intersection: intersection jumps in rank on line seed " + std::to_string(line.seed()) +
                             "; retry with a new seed");
    const Matrix<UPoly> X = rows_of(K, 0, L1.size()), Y = rows_of(K, L1.size(), K.rows());
    out.basis = B1 * X;
    out.divisors = smith_divisors(out.basis);
    out.divisors_in_first = smith_divisors(X);
    out.divisors_in_second = smith_divisors(Y);
    return out;
}

namespace {

bool full_rank(const FockLattice& L) {
    const std::size_t n = L.ambient->graded_dimension(L.degree);
    if (L.size() != n) return false;
    const Matrix<RF> C = L.coordinates();
    LineSpecialization line(L.ambient->params().vars, 1);
    if (column_echelon(line.apply(C)).rank == n) return true;
    return exact::rank(C) == n;
}

}  // namespace

IntegralityReport integrality_check(Algebra g, int d) {
    IntegralityReport rep;
    const std::size_t roots = root_lattice(g)->rank();
    for (int k = 0; k <= d; ++k)
        for (std::size_t i = 0; i < roots; ++i) {
            try {
                if (!full_rank(vir_sublattice(g, i, k))) rep.witnesses.push_back({k, i, "basis is not of full rank"});
            } catch (const IntegralityError& e) {
                rep.witnesses.push_back({k, i, e.what()});
            }
        }
    rep.pass = rep.witnesses.empty();
    return rep;
}

LatticePtr gl_lattice(std::size_t r) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < r; ++i) labels.push_back("P" + std::to_string(i + 1));
    return fock::make_lattice(Matrix<Rational>::identity(r), fock::FormScale::Standard,
                              exact::Equivariant::symbolic(r), labels);
}

bool killed_by_diagonal(const BosonLattice& L, const FockVector& v) {
    const Direction diag(L.rank(), Rational(1));
    int top = 0;
    for (const auto& [m, c] : v.terms()) top = std::max(top, fock::degree(m));
    for (int m = 1; m <= top; ++m)
        if (!fock::annihilate(L, diag, m, v).is_zero()) return false;
    return true;
}

FockLattice annihilator_kernel(std::size_t r, int d) {
    auto L = gl_lattice(r);
    const Direction diag(r, Rational(1));
    const auto source = L->basis(d);
    // P^Delta_m is scale times a rational matrix; solve over Q.
    std::vector<std::vector<Rational>> rows;
    for (int m = 1; m <= d; ++m) {
        const auto target = L->basis(d - m);
        std::map<ModeMonomial, std::size_t> index;
        for (std::size_t i = 0; i < target.size(); ++i) index[target[i]] = i;
        std::vector<std::vector<Rational>> block(target.size(), std::vector<Rational>(source.size()));
        for (std::size_t j = 0; j < source.size(); ++j) {
            auto w = fock::annihilate(*L, diag, m, FockVector::monomial(source[j]));
            for (const auto& [mono, c] : w.terms()) block[index.at(mono)][j] = (c / L->scale()).constant_value();
        }
        for (auto& row : block) rows.push_back(std::move(row));
    }
    Matrix<Rational> A(rows.size(), source.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < source.size(); ++j) A(i, j) = rows[i][j];
    const Matrix<Rational> N = exact::nullspace(A);
    FockLattice out{L, d, {}};
    for (std::size_t k = 0; k < N.cols(); ++k) {
        FockVector v;
        for (std::size_t j = 0; j < source.size(); ++j)
            if (N(j, k) != 0) v.add(source[j], RF(N(j, k)));
        out.basis.push_back(std::move(v));
    }
    return out;
}

}  // namespace fockforge::wlattice
