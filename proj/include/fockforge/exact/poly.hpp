#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fockforge/exact/var_spec.hpp"

namespace fockforge::exact {

using Rational = mpq_class;
using Integer = mpz_class;

/// Exponent vector over at most VarSpec::max_vars variables, packed 16 bits
/// per variable with variable 0 in the most significant lane. Ordered
/// graded-lexicographically.
class Monomial {
  public:
    using Packed = unsigned __int128;
    static constexpr unsigned max_exponent = 0x7fff;

    Monomial() = default;
    static Monomial var(std::size_t k, unsigned exponent = 1);

    unsigned exponent(std::size_t k) const {
        return static_cast<unsigned>((packed_ >> shift(k)) & 0xffffu);
    }
    unsigned degree() const { return degree_; }
    bool is_one() const { return packed_ == 0; }
    Packed packed() const { return packed_; }
    std::size_t hash() const {
        auto lo = static_cast<std::uint64_t>(packed_);
        auto hi = static_cast<std::uint64_t>(packed_ >> 64);
        return static_cast<std::size_t>(lo ^ (hi * 0x9e3779b97f4a7c15ull));
    }
    /// Bit k set iff variable k has positive exponent.
    unsigned support() const;

    Monomial operator*(const Monomial& other) const;
    bool divides(const Monomial& other) const;
    /// Requires divides(other) from the divisor side: other / *this.
    Monomial quotient_of(const Monomial& other) const;
    Monomial with_exponent(std::size_t k, unsigned e) const;
    static Monomial min(const Monomial& x, const Monomial& y);

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend std::strong_ordering operator<=>(const Monomial& x, const Monomial& y) {
        if (auto c = x.degree_ <=> y.degree_; c != 0) return c;
        return x.packed_ <=> y.packed_;
    }

  private:
    static unsigned shift(std::size_t k) { return static_cast<unsigned>(16 * (7 - k)); }
    Packed packed_ = 0;
    unsigned degree_ = 0;
};

/// Sparse multivariate polynomial over the rationals. Terms are stored in
/// strictly decreasing graded-lex order with nonzero coefficients.
class Poly {
  public:
    struct Term {
        Monomial mono;
        Rational coeff;
        friend bool operator==(const Term&, const Term&) = default;
    };

    Poly() = default;
    Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
    Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)

    static Poly var(std::size_t k);
    static Poly monomial(const Monomial& m, const Rational& c = 1);
    /// Arbitrary order, duplicates and zeros allowed.
    static Poly from_terms(std::vector<Term> terms);

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
    bool is_monomial() const { return terms_.size() == 1; }
    std::size_t size() const { return terms_.size(); }
    const std::vector<Term>& terms() const { return terms_; }
    const Term& leading() const { return terms_.front(); }
    Rational constant_term() const;

    unsigned degree_in(std::size_t k) const;
    unsigned total_degree() const { return terms_.empty() ? 0 : terms_.front().mono.degree(); }
    unsigned support() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly scaled(const Rational& c) const;
    Poly times_monomial(const Monomial& m, const Rational& c) const;
    Poly pow(unsigned e) const;

    friend bool operator==(const Poly&, const Poly&) = default;
    /// Total order used for deterministic containers; not algebraic.
    friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

    std::optional<Poly> divide_exact(const Poly& d) const;

    /// Coefficients with respect to variable k, indexed by exponent.
    std::vector<Poly> coefficients_in(std::size_t k) const;
    static Poly from_coefficients(std::size_t k, std::span<const Poly> coeffs);

    /// Positive rational c such that *this / c has coprime integer coefficients.
    Rational content() const;
    Poly primitive() const;
    /// Leading coefficient scaled to 1.
    Poly monic() const;

    /// Substitute variable k by images[k] (all images live in one target ring).
    Poly compose(std::span<const Poly> images) const;
    /// Partial evaluation; unassigned variables stay.
    Poly evaluate(std::span<const std::optional<Rational>> values) const;

    std::string to_string(const VarSpec& vars) const;

  private:
    std::vector<Term> terms_;
};

/// Monic gcd (zero only when both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

std::string rational_to_string(const Rational& q);

}  // namespace fockforge::exact
