#include "doctest.h"
#include "fockforge/adhm/adhm.hpp"
#include "fockforge/characters/series.hpp"

#include <random>

using namespace fockforge;
using namespace fockforge::adhm;

namespace {

QMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols) {
    QMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            Rational q(static_cast<long>(rng() % 7) - 3, static_cast<long>(rng() % 2) + 1);
            q.canonicalize();
            m(i, j) = q;
        }
    return m;
}

AdhmData sample(std::mt19937_64& rng, int d, int r, bool framed = true) { return random_adhm(rng(), d, r, framed); }

QMatrix random_invertible(std::mt19937_64& rng, std::size_t n) {
    for (;;) {
        QMatrix g = random_matrix(rng, n, n);
        if (exact::rank(g) == n) return g;
    }
}

}  // namespace

TEST_CASE("moment map") {
    CHECK(moment_map(AdhmData::zero(3, 2)).is_zero());
    CHECK(moment_map(fixed_point_data({{2, 1}})).is_zero());
    AdhmData x = AdhmData::zero(1, 1);
    x.I(0, 0) = 1;
    x.J(0, 0) = 1;
    CHECK(moment_map(x) == QMatrix{{Rational(1)}});
    AdhmData bad = AdhmData::zero(2, 1);
    bad.I = QMatrix(1, 1);
    CHECK_THROWS_AS(moment_map(bad), std::invalid_argument);
}

TEST_CASE("stability") {
    AdhmData x = AdhmData::zero(1, 1);
    x.I(0, 0) = 1;
    CHECK(is_stable(x));
    CHECK(!is_stable(AdhmData::zero(2, 1)));
    CHECK(is_stable(AdhmData::zero(0, 1)));

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        auto y = sample(rng, 3, 1);
        if (trial % 3 == 0) y.B2 = QMatrix(3, 3);
        const bool s = is_stable(y);
        // conjugation by g: B -> g B g^-1, I -> g I, J -> J g^-1
        auto g = random_invertible(rng, 3);
        auto gi = exact::inverse(g);
        AdhmData z{3, 1, g * y.B1 * gi, g * y.B2 * gi, g * y.I, y.J * gi};
        CHECK(is_stable(z) == s);
    }
}

TEST_CASE("fixed points") {
    auto x = fixed_point_data({{1}});
    CHECK(x.d == 1);
    CHECK(x.B1.is_zero());
    CHECK(x.B2.is_zero());
    CHECK(x.I == QMatrix{{Rational(1)}});
    CHECK(x.J.is_zero());

    auto e = fixed_point_data({{}, {}});
    CHECK(e.d == 0);
    CHECK(e.r == 2);

    auto y = fixed_point_data({{2, 1}});
    // boxes (0,0), (0,1), (1,0)
    CHECK(y.B1 == QMatrix{{0, 0, 0}, {1, 0, 0}, {0, 0, 0}});
    CHECK(y.B2 == QMatrix{{0, 0, 0}, {0, 0, 0}, {1, 0, 0}});
    CHECK(is_stable(y));

    for (int r = 1; r <= 3; ++r)
        for (int d = 0; d <= 6; ++d) {
            auto tuples = partition_tuples(r, d);
            CHECK(Rational(static_cast<unsigned long>(tuples.size())) == characters::gieseker_series(r, 6)[d]);
            for (const auto& t : tuples) {
                auto z = fixed_point_data(t);
                CHECK(z.d == d);
                CHECK(moment_map(z).is_zero());
                CHECK(is_stable(z));
                CHECK(ba_residual(z).is_zero());
            }
        }

    auto swapped = fixed_point_data({{1}, {}}, std::vector<int>{1, 0});
    CHECK(swapped.I == QMatrix{{0, 1}});
    CHECK_THROWS(fixed_point_data({{1}}, std::vector<int>{1}));
    CHECK_THROWS(fixed_point_data({{1, 2}}));
}

TEST_CASE("partition tuple syntax") {
    auto t = parse_partition_tuple("2,1;;1");
    CHECK(t == PartitionTuple{{2, 1}, {}, {1}});
    CHECK(to_string(t) == "2,1;;1");
    CHECK(parse_partition_tuple(";") == PartitionTuple{{}, {}});
    CHECK(parse_partition_tuple("") == PartitionTuple{{}});
    CHECK_THROWS(parse_partition_tuple("1,2"));
    CHECK_THROWS(parse_partition_tuple("a"));
    CHECK_THROWS(parse_partition_tuple("0"));
}

TEST_CASE("monad complex") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        auto x = sample(rng, 1 + trial % 4, 1 + trial % 3);
        CHECK(ba_residual(x).is_zero());
    }
    // mu != 0 gives b a = z0^2 mu != 0
    AdhmData x = AdhmData::zero(1, 1);
    x.I(0, 0) = 2;
    x.J(0, 0) = 3;
    auto m = monad_matrices(x);
    CHECK(m.a.rows() == 3);
    CHECK(m.b.cols() == 3);
    auto ba = m.b * m.a;
    CHECK(ba(0, 0) == Poly::var(0) * Poly::var(0) * Poly(6));
    // z0 = 0 kills the product for any data
    auto y = sample(rng, 3, 2);
    auto my = monad_matrices(y);
    std::vector<Poly> at0{Poly(0), Poly::var(1), Poly::var(2)};
    auto restrict0 = [&](const Matrix<Poly>& M) { return M.map([&](const Poly& p) { return p.compose(at0); }); };
    CHECK((restrict0(my.b) * restrict0(my.a)).is_zero());
}

TEST_CASE("spectra") {
    CHECK(characteristic_polynomial(QMatrix{{1, 2}, {3, 4}}) == UPoly(std::vector<Rational>{-2, -5, 1}));
    auto s = spectrum_projection(fixed_point_data({{3, 1}, {2}}), 1, 0);
    REQUIRE(s.roots.size() == 1);
    CHECK(s.roots[0] == std::pair<Rational, int>{0, 6});
    CHECK(spectrum_projection(AdhmData::zero(0, 1), 1, 1).size() == 0);

    // x^2 - 2 stays symbolic; x = 1/2 is rational
    auto t = spectrum(UPoly(std::vector<Rational>{-2, 0, 1}) * UPoly(std::vector<Rational>{Rational(-1, 2), 1}).pow(2));
    CHECK(t.roots == std::vector<std::pair<Rational, int>>{{Rational(1, 2), 2}});
    REQUIRE(t.residual.size() == 1);
    CHECK(t.residual[0].first == UPoly(std::vector<Rational>{-2, 0, 1}));
    CHECK_THROWS(spectrum_projection(AdhmData::zero(1, 1), 0, 0));

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 100; ++trial) {
        auto x = sample(rng, 1 + trial % 3, 2);
        auto y = sample(rng, 1 + trial % 4, 2, trial % 2 == 0);
        Rational c1(static_cast<long>(rng() % 5) - 2), c2(static_cast<long>(rng() % 5) - 2);
        if (c1 == 0 && c2 == 0) c1 = 1;
        auto sum = direct_sum(x, y);
        CHECK(spectrum_projection(sum, c1, c2) ==
              concatenate(spectrum_projection(x, c1, c2), spectrum_projection(y, c1, c2)));
    }
}

TEST_CASE("direct sums") {
    std::mt19937_64 rng(5);
    auto x = fixed_point_data({{2}});
    CHECK(direct_sum(x, AdhmData::zero(0, 1)) == x);

    for (int trial = 0; trial < 20; ++trial) {
        auto a = sample(rng, 2, 1), b = sample(rng, 2, 1, false);
        auto s = direct_sum(a, b, SumMode::FirstCarriesFraming);
        auto mu = moment_map(s), ma = moment_map(a), mb = moment_map(b);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) {
                Rational want = i < 2 && j < 2 ? ma(i, j) : (i >= 2 && j >= 2 ? mb(i - 2, j - 2) : Rational(0));
                CHECK(mu(i, j) == want);
            }
        // both framed: the off-diagonal blocks are I_a J_b and I_b J_a
        auto c = sample(rng, 2, 1);
        auto shared = moment_map(direct_sum(a, c));
        auto off = a.I * c.J;
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) CHECK(shared(i, 2 + j) == off(i, j));
    }
    CHECK_THROWS(direct_sum(x, sample(rng, 1, 1), SumMode::FirstCarriesFraming));
    CHECK_THROWS(direct_sum(x, AdhmData::zero(1, 2)));

    // stable plus an unframed piece is unstable
    AdhmData y = AdhmData::zero(1, 1);
    CHECK(is_stable(x));
    CHECK(!is_stable(direct_sum(x, y)));
}

TEST_CASE("support cycles") {
    auto c = support_cycle(fixed_point_data({{2, 1}}));
    CHECK(c.points == std::vector<std::pair<std::pair<Rational, Rational>, int>>{{{0, 0}, 3}});
    CHECK(c.unsplit == 0);
    CHECK(support_cycle(AdhmData::zero(0, 1)).points.empty());

    AdhmData x = AdhmData::zero(3, 1);
    x.B1 = QMatrix{{1, 0, 0}, {0, 2, 0}, {0, 0, 1}};
    x.B2 = QMatrix{{5, 0, 0}, {0, 5, 0}, {0, 0, Rational(-1, 2)}};
    x.I = QMatrix{{1}, {1}, {1}};
    auto s = support_cycle(x);
    CHECK(s.points == std::vector<std::pair<std::pair<Rational, Rational>, int>>{
                          {{1, Rational(-1, 2)}, 1}, {{1, 5}, 1}, {{2, 5}, 1}});
    // same cycle after a change of basis
    std::mt19937_64 rng(9);
    auto g = random_invertible(rng, 3);
    auto gi = exact::inverse(g);
    AdhmData y{3, 1, g * x.B1 * gi, g * x.B2 * gi, g * x.I, x.J * gi};
    CHECK(support_cycle(y).points == s.points);

    // a rotation has no rational eigenvalues
    AdhmData rot = AdhmData::zero(2, 1);
    rot.B1 = QMatrix{{0, -1}, {1, 0}};
    CHECK(support_cycle(rot).unsplit == 2);

    AdhmData nc = AdhmData::zero(2, 1);
    nc.B1 = QMatrix{{0, 1}, {0, 0}};
    nc.B2 = QMatrix{{0, 0}, {1, 0}};
    CHECK_THROWS_AS(support_cycle(nc), std::invalid_argument);
}

TEST_CASE("JSON round trip") {
    std::mt19937_64 rng(1);
    auto x = sample(rng, 3, 2);
    auto j = to_json(x);
    CHECK(j["d"] == 3);
    CHECK(j["B1"].size() == 3);
    CHECK(adhm_from_json(j) == x);
    j["I"][0].push_back("1");
    CHECK_THROWS_AS(adhm_from_json(j), std::invalid_argument);
}
