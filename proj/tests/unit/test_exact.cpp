#include <random>

#include "doctest.h"
#include "fockforge/exact/matrix.hpp"
#include "fockforge/exact/parse.hpp"

using namespace fockforge::exact;

namespace doctest {
template <>
struct StringMaker<RF> {
    static String convert(const RF& x) { return x.to_string(*VarSpec::equivariant(2)).c_str(); }
};
}  // namespace doctest

namespace {

const VarSpecPtr& vars2() {
    static const VarSpecPtr v = VarSpec::equivariant(2);  // a1 a2 e1 e2
    return v;
}

RF rf(const char* text) { return parse_rational_function(text, *vars2()); }

// Small random polynomial in the first `nvars` variables.
Poly random_poly(std::mt19937_64& rng, std::size_t nvars, int max_terms, unsigned max_deg) {
    std::vector<Poly::Term> terms;
    int n = static_cast<int>(rng() % static_cast<unsigned>(max_terms)) + 1;
    for (int i = 0; i < n; ++i) {
        Monomial m;
        for (std::size_t k = 0; k < nvars; ++k) m = m * Monomial::var(k, static_cast<unsigned>(rng() % (max_deg + 1)));
        long c = static_cast<long>(rng() % 7) - 3;
        terms.push_back({m, Rational(c, static_cast<long>(rng() % 3) + 1)});
    }
    return Poly::from_terms(std::move(terms));
}

RF random_rf(std::mt19937_64& rng) {
    Poly den;
    while (den.is_zero()) den = random_poly(rng, 4, 3, 1);
    return RF(random_poly(rng, 4, 3, 2), den);
}

}  // namespace

TEST_CASE("rf_arith examples") {
    CHECK(rf("(e1^2 - e2^2)/(e1 - e2)") == rf("e1 + e2"));
    CHECK(rf("1/e1 + 1/e2") == RF(rf("e1 + e2").numerator(), rf("e1*e2").numerator()));
    CHECK(rf("((a1 - a2)/e1) * (e1/(a1 - a2))") == RF(1));
    CHECK_THROWS_AS(rf("a1") / RF(0), DivisionByZero);
}

TEST_CASE("canonical form and printing") {
    RF x = rf("(2*a1 - 2*a2)/(4*e1*e2)");
    CHECK(x.denominator().leading().coeff == 1);
    CHECK(x.to_string(*vars2()) == "(1/2*a1 - 1/2*a2)/(e1*e2)");
    CHECK(rf("-e1 + 3").to_string(*vars2()) == "(-e1 + 3)/(1)");
    // Denominator sign is canonical: leading coefficient +1.
    CHECK(rf("1/(e2 - e1)") == rf("-1/(e1 - e2)"));
    CHECK(rf("1/(e2 - e1)").denominator().leading().coeff == 1);
}

TEST_CASE("parser rejects malformed input") {
    CHECK_THROWS_AS(rf("a1 +"), std::invalid_argument);
    CHECK_THROWS_AS(rf("b7"), std::invalid_argument);
    CHECK_THROWS_AS(rf("a1^-1"), std::invalid_argument);
    CHECK_THROWS_AS(rf("(a1"), std::invalid_argument);
    CHECK_THROWS_AS(rf("1/(a1-a1)"), std::invalid_argument);
}

TEST_CASE("serialization round-trips through the parser") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        RF x = random_rf(rng);
        CHECK(rf(x.to_string(*vars2()).c_str()) == x);
    }
}

TEST_CASE("polynomial gcd") {
    Poly f = rf("(a1 - a2 - e1)*(e1 + 2*e2)^2*(a1 + e2)").numerator();
    Poly g = rf("(a1 - a2 - e1)*(e1 + 2*e2)*(a2 - 3*e1)").numerator();
    CHECK(gcd(f, g) == rf("(a1 - a2 - e1)*(e1 + 2*e2)").numerator().monic());
    CHECK(gcd(f, Poly(0)) == f.monic());
    CHECK(gcd(Poly(3), f) == Poly(1));
    Poly m = rf("a1^2*e1").numerator();
    CHECK(gcd(m, rf("a1*e1^3 + a1^3").numerator()) == rf("a1").numerator());
}

TEST_CASE("field axioms on random triples") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        RF x = random_rf(rng), y = random_rf(rng), z = random_rf(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + y == y + x);
        CHECK(x * y == y * x);
        if (!x.is_zero()) CHECK(x * x.inverse() == RF(1));
        CHECK(x - x == RF(0));
    }
}

TEST_CASE("normalization is idempotent") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; ++i) {
        RF x = random_rf(rng);
        CHECK(RF(x.numerator(), x.denominator()) == x);
    }
}

TEST_CASE("rf_specialize examples") {
    RF x = rf("(a1 - a2)/(e1*e2)");
    std::map<std::string, Rational> at{{"a1", 1}, {"a2", 0}, {"e1", 1}, {"e2", -2}};
    CHECK(x.specialize(*vars2(), at) == RF(Rational(-1, 2)));
    CHECK(x.specialize(*vars2(), {}) == x);
    try {
        (void)rf("1/(a1 - a2)").specialize(*vars2(), {{"a1", 3}, {"a2", 3}});
        FAIL("expected a pole");
    } catch (const PoleError& e) {
        CHECK(e.factor() == rf("a1 - a2").numerator());
    }
    // The vanishing factor is isolated from the rest of the denominator.
    try {
        (void)rf("1/((a1 - a2)*(e1 + 1))").specialize(*vars2(), {{"a1", 3}, {"a2", 3}});
        FAIL("expected a pole");
    } catch (const PoleError& e) {
        CHECK(e.factor() == rf("a1 - a2").numerator());
    }
}

TEST_CASE("specialization commutes with arithmetic") {
    std::mt19937_64 rng(77);
    std::vector<std::optional<Rational>> at{Rational(2), std::nullopt, Rational(-1, 3), Rational(5)};
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        RF x = random_rf(rng), y = random_rf(rng);
        try {
            RF sx = x.specialize(at), sy = y.specialize(at);
            CHECK((x * y).specialize(at) == sx * sy);
            CHECK((x + y).specialize(at) == sx + sy);
            ++checked;
        } catch (const PoleError&) {
        }
    }
    CHECK(checked > 200);
}

TEST_CASE("rf_laurent_at_infinity") {
    auto us = VarSpec::of({"u", "s"});
    auto p = [&](const char* t) { return parse_rational_function(t, *us); };

    SUBCASE("reflection eigenvalue expansion") {
        auto e = laurent_at_infinity(p("(u - s)/(-u - s)"), 0, 2);
        CHECK(e.first_power == 0);
        REQUIRE(e.coeffs.size() == 3);
        CHECK(e.coefficient(0) == p("-1"));
        CHECK(e.coefficient(1) == p("2*s"));
        CHECK(e.coefficient(2) == p("-2*s^2"));
    }
    SUBCASE("constant") {
        auto e = laurent_at_infinity(p("s/3"), 0, 3);
        CHECK(e.coefficient(0) == p("s/3"));
        for (int k = 1; k <= 3; ++k) CHECK(e.coefficient(k).is_zero());
    }
    SUBCASE("already Laurent") {
        auto e = laurent_at_infinity(p("1/u"), 0, 1);
        CHECK(e.first_power == 1);
        CHECK(e.coefficient(1) == RF(1));
    }
    SUBCASE("truncation error has the promised degree") {
        std::mt19937_64 rng(3);
        for (int i = 0; i < 100; ++i) {
            Poly num = random_poly(rng, 2, 4, 3);
            Poly den;
            while (den.is_zero() || den.degree_in(0) == 0) den = random_poly(rng, 2, 3, 2);
            RF x(num, den);
            for (int order : {0, 2, 4}) {
                auto e = laurent_at_infinity(x, 0, order);
                RF partial;
                for (int k = e.first_power; k <= order; ++k) {
                    partial += e.coefficient(k) * RF::var(0).pow(-k);
                }
                RF err = x - partial;
                if (!err.is_zero()) CHECK(degree_in(err, 0) <= -order - 1);
            }
        }
    }
}

TEST_CASE("univariate polynomials") {
    UPoly a(std::vector<Rational>{-1, 0, 1});  // t^2 - 1
    UPoly b(std::vector<Rational>{1, 1});      // t + 1
    auto [q, r] = a.divmod(b);
    CHECK(q == UPoly(std::vector<Rational>{-1, 1}));
    CHECK(r.is_zero());
    CHECK(gcd(a, UPoly(std::vector<Rational>{-1, 1}) * UPoly(std::vector<Rational>{2, 1})) == UPoly(std::vector<Rational>{-1, 1}));
    CHECK(a.to_string() == "t^2 - 1");
}

TEST_CASE("matrices over rational functions") {
    Matrix<RF> m{{rf("e1"), rf("1")}, {rf("a1"), rf("e2")}};
    Matrix<RF> inv = inverse(m);
    CHECK(m * inv == Matrix<RF>::identity(2));
    CHECK(determinant(m) == rf("e1*e2 - a1"));
    Matrix<RF> sing{{rf("e1"), rf("e2")}, {rf("2*e1"), rf("2*e2")}};
    CHECK_THROWS_AS(inverse(sing), SingularMatrix);
    auto ns = nullspace(sing);
    REQUIRE(ns.cols() == 1);
    CHECK((sing * ns).is_zero());
}
