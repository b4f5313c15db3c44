#include <set>

#include "doctest.h"
#include "fockforge/exact/parse.hpp"
#include "fockforge/fock/change.hpp"
#include "fockforge/fock/serialize.hpp"

using namespace fockforge;
using namespace fockforge::fock;
using exact::Equivariant;
using exact::Matrix;
using exact::Rational;
using exact::RF;

namespace {

const Equivariant& eq2() {
    static const Equivariant e = Equivariant::symbolic(2);
    return e;
}

RF rf(const char* s) { return exact::parse_rational_function(s, *eq2().vars); }

LatticePtr sl2(FormScale f = FormScale::Standard) { return make_lattice(Matrix<Rational>{{2}}, f, eq2()); }
LatticePtr gl(std::size_t r) { return make_lattice(Matrix<Rational>::identity(r), FormScale::Standard, eq2()); }

FockVector vac() { return FockVector::vacuum(); }

}  // namespace

TEST_CASE("apply_creation") {
    auto L = gl(2);
    FockVector v = create(*L, 0, 3, vac());
    CHECK(v == FockVector::monomial({{3, 0}}));
    CHECK(create(*L, 1, 2, create(*L, 0, 1, vac())) == create(*L, 0, 1, create(*L, 1, 2, vac())));
    CHECK(create(*L, 1, 2, v).degree() == 5);
    CHECK_THROWS_AS(create(*L, 0, 0, vac()), std::invalid_argument);
    CHECK_THROWS_AS(create(*L, 2, 1, vac()), std::invalid_argument);
}

TEST_CASE("apply_annihilation") {
    auto L = sl2();
    CHECK(annihilate(*L, 0, 1, create(*L, 0, 1, vac())) == vac().scaled(rf("-2/(e1*e2)")));
    CHECK(annihilate(*L, 0, 2, create(*L, 0, 1, vac())).is_zero());
    CHECK(annihilate(*L, 0, 1, vac()).is_zero());
    // Multiplicities: P_1 P_{-1}^2 = 2 [P_1, P_{-1}] P_{-1}.
    FockVector sq = create(*L, 0, 1, create(*L, 0, 1, vac()));
    CHECK(annihilate(*L, 0, 1, sq) == FockVector::monomial({{1, 0}}, rf("-4/(e1*e2)")));

    auto G = gl(2);
    FockVector minus = create(*G, Direction{1, -1}, 1, vac());
    CHECK(annihilate(*G, Direction{1, 1}, 1, minus).is_zero());
    CHECK(annihilate(*G, Direction{1, -1}, 1, minus) == vac().scaled(rf("-2/(e1*e2)")));
}

TEST_CASE("graded_dimension") {
    CHECK(gl(1)->graded_dimension(4) == 5);
    CHECK(gl(2)->graded_dimension(3) == 10);
    for (std::size_t r = 1; r <= 3; ++r) CHECK(gl(r)->graded_dimension(0) == 1);
    for (std::size_t r = 1; r <= 3; ++r)
        for (int d = 0; d <= 7; ++d) CHECK(colored_partitions(r, d).size() == colored_partition_count(r, d));
    CHECK(colored_partition_count(3, 8) == 810);
    // Basis monomials are canonical and distinct.
    auto b = colored_partitions(2, 4);
    std::set<ModeMonomial> seen(b.begin(), b.end());
    CHECK(seen.size() == b.size());
    for (const auto& m : b) {
        ModeMonomial rebuilt;
        for (const auto& x : m) rebuilt = with_mode(rebuilt, x);
        CHECK(rebuilt == m);
        CHECK(degree(m) == 4);
    }
}

TEST_CASE("orthogonal factors convolve graded dimensions") {
    auto two = make_lattice(Matrix<Rational>{{2, 0}, {0, 6}}, FormScale::Standard, eq2());
    for (int d = 0; d <= 6; ++d) {
        std::size_t conv = 0;
        for (int k = 0; k <= d; ++k) conv += colored_partition_count(1, k) * colored_partition_count(1, d - k);
        CHECK(two->graded_dimension(d) == conv);
    }
}

TEST_CASE("commutator law, Cartan sl3 and gl2, degree <= 3") {
    for (auto L : {make_lattice(cartan_gram_a(2), FormScale::Standard, eq2()), gl(2), sl2(FormScale::Integral)}) {
        for (int d = 0; d <= 3; ++d) {
            for (const auto& m : L->basis(d)) {
                FockVector v = FockVector::monomial(m);
                for (std::size_t i = 0; i < L->rank(); ++i)
                    for (std::size_t j = 0; j < L->rank(); ++j)
                        for (int a = -3; a <= 3; ++a)
                            for (int b = -3; b <= 3; ++b) {
                                if (a == 0 || b == 0) continue;
                                FockVector lhs = mode(*L, i, a, mode(*L, j, b, v)) - mode(*L, j, b, mode(*L, i, a, v));
                                RF expect = a + b == 0 ? RF(Rational(-a) * L->gram()(i, j)) * L->scale() : RF(0);
                                CHECK(lhs == v.scaled(expect));
                            }
            }
        }
    }
}

TEST_CASE("standard and integral forms differ by rescaling") {
    auto S = sl2(FormScale::Standard);
    auto I = sl2(FormScale::Integral);
    RF h = eq2().e1e2();
    // phi(~P monomial) = (e1 e2)^{#modes} P monomial
    auto phi = [&](const FockVector& v) {
        FockVector out;
        for (const auto& [m, c] : v.terms()) out.add(m, c * h.pow(static_cast<int>(m.size())));
        return out;
    };
    for (int d = 0; d <= 4; ++d) {
        for (const auto& m : I->basis(d)) {
            FockVector v = FockVector::monomial(m);
            for (int n = 1; n <= 3; ++n) {
                CHECK(phi(annihilate(*I, 0, n, v)) == annihilate(*S, 0, n, phi(v)).scaled(h));
                CHECK(phi(create(*I, 0, n, v)) == create(*S, 0, n, phi(v)).scaled(h));
            }
        }
    }
}

TEST_CASE("change_of_generators") {
    SUBCASE("identity") {
        auto L = gl(2);
        auto ch = change_of_generators(Matrix<Rational>::identity(2), L);
        CHECK(ch.new_lattice()->gram() == L->gram());
        FockVector v = create(*L, 1, 2, create(*L, 0, 1, vac()));
        CHECK(ch.to_old(v) == v);
        CHECK(ch.to_new(v) == v);
    }
    SUBCASE("gl2 diagonal and antidiagonal") {
        auto ch = change_of_generators(Matrix<Rational>{{1, 1}, {1, -1}}, gl(2));
        CHECK(ch.new_lattice()->gram() == Matrix<Rational>{{2, 0}, {0, 2}});
        CHECK(ch.to_old(vac()) == vac());
    }
    SUBCASE("sl3 orthogonal pair") {
        auto L = make_lattice(cartan_gram_a(2), FormScale::Standard, eq2());
        auto ch = change_of_generators(Matrix<Rational>{{1, 0}, {1, 2}}, L);
        CHECK(ch.new_lattice()->gram() == Matrix<Rational>{{2, 0}, {0, 6}});
    }
    SUBCASE("singular T rejected") {
        CHECK_THROWS_AS(change_of_generators(Matrix<Rational>{{1, 1}, {2, 2}}, gl(2)), exact::SingularMatrix);
    }
    SUBCASE("transport is invertible and respects brackets") {
        auto L = make_lattice(cartan_gram_a(2), FormScale::Standard, eq2());
        auto ch = change_of_generators(Matrix<Rational>{{1, 0}, {1, 2}}, L);
        const auto& N = *ch.new_lattice();
        for (int d = 0; d <= 3; ++d) {
            for (const auto& m : N.basis(d)) {
                FockVector v = FockVector::monomial(m);
                CHECK(ch.to_new(ch.to_old(v)) == v);
                for (std::size_t a = 0; a < 2; ++a)
                    for (int k : {-2, -1, 1, 2}) {
                        // Q^a_k in the new lattice vs the matching old direction.
                        CHECK(ch.to_old(mode(N, a, k, v)) == mode(*L, ch.direction(a), k, ch.to_old(v)));
                    }
            }
        }
    }
}

TEST_CASE("contravariant_form") {
    auto L = sl2();
    FockVector p1 = create(*L, 0, 1, vac());
    FockVector p2 = create(*L, 0, 2, vac());
    CHECK(contravariant_form(*L, p1, p1) == rf("-2/(e1*e2)"));
    CHECK(contravariant_form(*L, p1, p2).is_zero());
    auto I = sl2(FormScale::Integral);
    CHECK(contravariant_form(*I, p1, p1) == rf("-2*e1*e2"));
    CHECK(contravariant_form(*L, vac(), vac()) == RF(1));
    CHECK(contravariant_form(*L, p1, p1, Adjoint::Minus) == rf("2/(e1*e2)"));

    SUBCASE("symmetric and nondegenerate through degree 4") {
        for (auto M : {sl2(), gl(2), make_lattice(cartan_gram_a(2), FormScale::Integral, eq2())}) {
            for (int d = 0; d <= 4; ++d) {
                auto g = contravariant_gram(*M, d);
                CHECK(g == g.transpose());
                CHECK(!exact::determinant(g).is_zero());
            }
        }
    }
}

TEST_CASE("operator matrices") {
    auto L = gl(2);
    auto P = [&](std::size_t i, int m) {
        return OperatorMatrix::from_action(L, -m, 4, [=](const FockVector& v) { return mode(*L, i, m, v); });
    };
    // [P^1_2, P^1_{-2}] = -2/(e1 e2) on stored degrees.
    auto c = commutator(P(0, 2), P(0, -2));
    CHECK(c == OperatorMatrix::identity(L, 2).scaled(rf("-2/(e1*e2)")).restricted(c.max_degree()));
    CHECK(commutator(P(0, 1), P(1, -1)).is_zero());
    // Lowering below degree 0 gives empty blocks, not errors.
    CHECK(P(0, 3).block(1).rows() == 0);
    FockVector v = create(*L, 1, 1, create(*L, 0, 2, vac()));
    CHECK(P(0, 2).apply(v) == mode(*L, 0, 2, v));
    CHECK_THROWS_AS(P(0, -1).apply(create(*L, 0, 5, vac())), std::out_of_range);

    SUBCASE("act_on_factor") {
        auto one = make_lattice(Matrix<Rational>{{2}}, FormScale::Standard, eq2());
        auto N = make_lattice(Matrix<Rational>{{2, 0}, {0, 2}}, FormScale::Standard, eq2());
        auto op = OperatorMatrix::from_action(one, 0, 3, [&](const FockVector& x) {
            return create(*one, 0, 1, annihilate(*one, 0, 1, x));
        });
        auto lifted = act_on_factor(op, N, 1, 3);
        FockVector w = create(*N, 0, 1, create(*N, 1, 1, vac()));
        CHECK(lifted.apply(w) == create(*N, 1, 1, annihilate(*N, 1, 1, w)));
        CHECK_THROWS_AS(act_on_factor(op, make_lattice(cartan_gram_a(2), FormScale::Standard, eq2()), 0, 2),
                        std::invalid_argument);
    }
}

TEST_CASE("json serialization") {
    auto L = sl2();
    FockVector v = create(*L, 0, 1, vac()).scaled(rf("1/e1"));
    CHECK(to_json(v, *eq2().vars).dump() == R"j([{"monomial":[[1,0]],"coeff":"(1)/(e1)"}])j");
    CHECK(to_json(*L).dump() == R"({"rank":1,"gram":[["2"]],"form":"standard","labels":["P1"]})");
}
