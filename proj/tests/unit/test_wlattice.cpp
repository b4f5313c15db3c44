#include "doctest.h"
#include "fockforge/exact/parse.hpp"
#include "fockforge/wlattice/lattice.hpp"

#include <random>

using namespace fockforge;
using namespace fockforge::wlattice;
using fock::Mode;

namespace {

UPoly up(std::vector<Rational> c) { return UPoly(std::move(c)); }

RF rf(Algebra g, const char* s) { return exact::parse_rational_function(s, *root_lattice(g)->params().vars); }

}  // namespace

TEST_CASE("Smith form and kernels over Q[t]") {
    const UPoly t = UPoly::x();
    Matrix<UPoly> A{{t, UPoly(0)}, {UPoly(0), t + UPoly(1)}};
    auto d = smith_divisors(A);
    REQUIRE(d.size() == 2);
    CHECK(d[0] == UPoly(1));
    CHECK(d[1] == t * (t + UPoly(1)));

    Matrix<UPoly> B{{t * t, t}, {UPoly(0), t}};
    d = smith_divisors(B);
    CHECK(d == std::vector<UPoly>{t, t * t});

    // [t, t^2 + 1] has kernel spanned by (t^2 + 1, -t)
    Matrix<UPoly> C{{t, t * t + UPoly(1)}};
    auto K = kernel_basis(C);
    REQUIRE(K.cols() == 1);
    CHECK((C * K).is_zero());
    CHECK(smith_divisors(K) == std::vector<UPoly>{UPoly(1)});
    CHECK(column_echelon(C).rank == 1);
}

TEST_CASE("line specialization") {
    LineSpecialization a(root_lattice(Algebra::sl2)->params().vars, 5), b(root_lattice(Algebra::sl2)->params().vars, 5);
    CHECK(a.images() == b.images());
    for (const auto& x : a.images()) CHECK(x.degree() == 1);
    auto v = root_lattice(Algebra::sl2)->params().vars;
    LineSpecialization fixed(v, {up({1, 1}), up({0, 2}), up({3}), up({0, 0, 1})});
    CHECK(fixed.apply(rf(Algebra::sl2, "a1*a2 - e1")) == up({-3, 2, 2}));
    CHECK_THROWS_AS(fixed.apply(rf(Algebra::sl2, "1/a1")), std::domain_error);
}

TEST_CASE("vir_sublattice examples") {
    auto L0 = vir_sublattice(Algebra::sl2, 0, 0);
    REQUIRE(L0.size() == 1);
    CHECK(L0.basis[0] == FockVector::vacuum());

    auto L1 = vir_sublattice(Algebra::sl2, 0, 1);
    REQUIRE(L1.size() == 1);
    CHECK(L1.basis[0] == FockVector::monomial({{1, 0}}, rf(Algebra::sl2, "-(a1 - a2 - e1 - e2)/2")));

    auto S1 = vir_sublattice(Algebra::sl3, 0, 1);
    REQUIRE(S1.size() == 2);
    CHECK(S1.basis[0] == FockVector::monomial({{1, 0}}, rf(Algebra::sl3, "-(a1 - a2 - e1 - e2)/2")));
    CHECK(S1.basis[1] == FockVector::monomial({{1, 0}}) + FockVector::monomial({{1, 1}}, RF(2)));
    CHECK(orthogonal_root(Algebra::sl3, 0) == fock::Direction{1, 2});
    CHECK(orthogonal_root(Algebra::sl3, 1) == fock::Direction{2, 1});
    CHECK(orthogonal_root(Algebra::sl2, 0).empty());

    auto S2 = vir_sublattice(Algebra::sl3, 1, 1);
    CHECK(S2.basis[0] == FockVector::monomial({{1, 1}}, rf(Algebra::sl3, "-(a2 - a3 - e1 - e2)/2")));
}

TEST_CASE("integrality") {
    CHECK(integrality_check(Algebra::sl2, 0).pass);
    auto sl2 = integrality_check(Algebra::sl2, 5);
    CHECK(sl2.pass);
    CHECK(sl2.witnesses.empty());
    CHECK(integrality_check(Algebra::sl3, 3).pass);
}

TEST_CASE("pid_intersection") {
    auto vars2 = root_lattice(Algebra::sl2)->params().vars;
    const LineSpecialization line2(vars2, 1);

    SUBCASE("self-intersection") {
        auto L = vir_sublattice(Algebra::sl2, 0, 3);
        auto r = pid_intersection(L, L, line2);
        CHECK(r.rank == 3);
        for (const auto& x : r.divisors_in_first) CHECK(x == UPoly(1));
        for (const auto& x : r.divisors_in_second) CHECK(x == UPoly(1));
    }
    SUBCASE("sl2 degree one: index of Vir in Heis") {
        auto vir = vir_sublattice(Algebra::sl2, 0, 1);
        auto r = pid_intersection(vir, heisenberg_lattice(vir.ambient, 1), line2);
        CHECK(r.rank == 1);
        CHECK(r.divisors_in_first == std::vector<UPoly>{UPoly(1)});
        UPoly expect = line2.apply(rf(Algebra::sl2, "a1 - a2 - e1 - e2")).monic();
        CHECK(r.divisors == std::vector<UPoly>{expect});
        CHECK(r.divisors_in_second == std::vector<UPoly>{expect});
    }
    SUBCASE("sl3 golden divisors, seed 1") {
        // Cross-checked by a dual-lattice Smith form computed outside the library.
        const LineSpecialization line3(root_lattice(Algebra::sl3)->params().vars, 1);
        auto r = pid_intersection(vir_sublattice(Algebra::sl3, 0, 1), vir_sublattice(Algebra::sl3, 1, 1), line3);
        CHECK(r.rank == 2);
        CHECK(r.divisors == std::vector<UPoly>{UPoly(1), up({Rational(-91, 87), Rational(773, 174), 1})});
        CHECK(r.divisors_in_first == std::vector<UPoly>{UPoly(1), up({Rational(-13, 58), 1})});
        CHECK(r.divisors_in_second == std::vector<UPoly>{UPoly(1), up({Rational(14, 3), 1})});
        // the two nontrivial factors are the specialized Virasoro factors
        CHECK(r.divisors_in_first[1] == line3.apply(rf(Algebra::sl3, "a2 - a3 - e1 - e2")).monic());
        CHECK(r.divisors_in_second[1] == line3.apply(rf(Algebra::sl3, "a1 - a2 - e1 - e2")).monic());
    }
    SUBCASE("sl3 ranks match the rank-2 graded dimension") {
        const LineSpecialization line3(root_lattice(Algebra::sl3)->params().vars, 2);
        for (int d = 0; d <= 3; ++d) {
            auto r = pid_intersection(vir_sublattice(Algebra::sl3, 0, d), vir_sublattice(Algebra::sl3, 1, d), line3);
            CHECK(r.rank == root_lattice(Algebra::sl3)->graded_dimension(d));
        }
    }
    SUBCASE("independent of the basis") {
        auto L1 = vir_sublattice(Algebra::sl3, 0, 2), L2 = vir_sublattice(Algebra::sl3, 1, 2);
        const LineSpecialization line3(root_lattice(Algebra::sl3)->params().vars, 3);
        auto base = pid_intersection(L1, L2, line3);
        std::mt19937_64 rng(11);
        const RF e1 = root_lattice(Algebra::sl3)->params().e1;
        for (int round = 0; round < 3; ++round) {
            auto M = L1;
            // elementary operations over A_T, including polynomial multipliers
            for (int k = 0; k < 6; ++k) {
                std::size_t i = rng() % M.size(), j = rng() % M.size();
                if (i == j) continue;
                RF c = RF(static_cast<long>(rng() % 7) - 3) + (rng() % 2 ? e1 : RF(0));
                M.basis[i] += M.basis[j].scaled(c);
            }
            std::swap(M.basis.front(), M.basis.back());
            auto r = pid_intersection(M, L2, line3);
            CHECK(r.divisors == base.divisors);
            CHECK(r.divisors_in_first == base.divisors_in_first);
            CHECK(r.divisors_in_second == base.divisors_in_second);
        }
    }
    SUBCASE("degenerate line") {
        // a1 - a2 - e1 - e2 vanishes identically on this line
        LineSpecialization bad(vars2, {up({0, 1}), up({0}), up({0, 1}), up({0})});
        auto vir = vir_sublattice(Algebra::sl2, 0, 1);
        CHECK_THROWS_AS(pid_intersection(vir, heisenberg_lattice(vir.ambient, 1), bad), DegenerateLine);
    }
}

TEST_CASE("annihilator_kernel") {
    auto k = annihilator_kernel(2, 1);
    REQUIRE(k.size() == 1);
    const auto& v = k.basis[0];
    CHECK(v.coefficient({{1, 0}}) == -v.coefficient({{1, 1}}));
    CHECK(!v.coefficient({{1, 0}}).is_zero());

    for (std::size_t r : {2, 3})
        for (int d = 0; d <= 5; ++d) {
            auto K = annihilator_kernel(r, d);
            CHECK(K.size() == fock::colored_partition_count(r - 1, d));
            for (const auto& b : K.basis) CHECK(killed_by_diagonal(*K.ambient, b));
        }

    // Virasoro along P1 - P2 preserves the kernel.
    auto L = gl_lattice(2);
    auto spec = virasoro::FeiginFuchsSpec::along(L, fock::Direction{1, -1}, L->params().difference(0, 1));
    for (int d = 0; d <= 4; ++d)
        for (const auto& b : annihilator_kernel(2, d).basis)
            for (int n = -2; n <= 2; ++n) CHECK(killed_by_diagonal(*L, virasoro::virasoro_apply(spec, n, b)));
}
