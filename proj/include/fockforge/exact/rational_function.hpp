#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "fockforge/exact/poly.hpp"

namespace fockforge::exact {

class DivisionByZero : public std::domain_error {
  public:
    DivisionByZero() : std::domain_error("division by the zero rational function") {}
};

/// Raised when a specialization sends a denominator to zero. Carries the
/// (monic) denominator factor that vanished.
class PoleError : public std::domain_error {
  public:
    PoleError(Poly factor, const std::string& what) : std::domain_error(what), factor_(std::move(factor)) {}
    const Poly& factor() const { return factor_; }

  private:
    Poly factor_;
};

/// Element of Q(x_1..x_n) in canonical form: gcd(num, den) = 1 and den is
/// monic in graded-lex order. Equal values have identical representations.
class RationalFunction {
  public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    RationalFunction(long c) : num_(Rational(c)), den_(1) {}   // NOLINT(google-explicit-constructor)
    RationalFunction(const Poly& p) : num_(p), den_(1) {}      // NOLINT(google-explicit-constructor)
    RationalFunction(const Poly& num, const Poly& den);

    static RationalFunction var(std::size_t k) { return RationalFunction(Poly::var(k)); }

    const Poly& numerator() const { return num_; }
    const Poly& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Value of a constant function.
    Rational constant_value() const;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    RationalFunction inverse() const;
    RationalFunction pow(int e) const;

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;
    friend std::strong_ordering operator<=>(const RationalFunction& a, const RationalFunction& b);

    /// Partial substitution of rational values; untouched variables stay
    /// symbolic. Throws PoleError if the denominator vanishes.
    RationalFunction specialize(std::span<const std::optional<Rational>> values) const;
    RationalFunction specialize(const VarSpec& vars, const std::map<std::string, Rational>& assignment) const;
    /// Substitute variable k by images[k] (rational functions of one target ring).
    RationalFunction compose(std::span<const RationalFunction> images) const;

    /// "(<num>)/(<den>)" with terms in canonical order.
    std::string to_string(const VarSpec& vars) const;

  private:
    struct Reduced {};
    RationalFunction(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}
    void normalize();

    Poly num_;
    Poly den_;
};

using RF = RationalFunction;

/// Result of rf_laurent_at_infinity: x = sum_k coeffs[i] * var^{-k},
/// k = first_power + i, truncated after var^{-order}.
struct LaurentExpansion {
    int first_power = 0;  // most negative k, i.e. -(deg num - deg den)
    std::vector<RationalFunction> coeffs;

    /// Coefficient of var^{-k}; zero outside the stored range.
    RationalFunction coefficient(int k) const;
};

LaurentExpansion laurent_at_infinity(const RationalFunction& x, std::size_t var, int order);

/// Degree in var of x regarded as a rational function of var alone
/// (deg num - deg den); zero function reports INT_MIN.
int degree_in(const RationalFunction& x, std::size_t var);

}  // namespace fockforge::exact
