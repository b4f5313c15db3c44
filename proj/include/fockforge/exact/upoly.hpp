#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fockforge/exact/poly.hpp"

namespace fockforge::exact {

/// Dense univariate polynomial over Q, coefficients low to high, no
/// trailing zeros.
class UPoly {
  public:
    UPoly() = default;
    UPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    UPoly(long c) : UPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    explicit UPoly(std::vector<Rational> coeffs);

    static UPoly x() { return UPoly(std::vector<Rational>{0, 1}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int k) const;
    const Rational& leading() const { return c_.back(); }

    UPoly operator-() const;
    UPoly& operator+=(const UPoly& o);
    UPoly& operator-=(const UPoly& o);
    friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
    friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly& operator*=(const UPoly& o) { return *this = *this * o; }
    UPoly scaled(const Rational& c) const;
    UPoly pow(unsigned e) const;

    /// Euclidean division; divisor must be nonzero.
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;
    UPoly monic() const;
    UPoly derivative() const;
    Rational evaluate(const Rational& t) const;

    friend bool operator==(const UPoly&, const UPoly&) = default;

    std::string to_string(const std::string& var = "t") const;
    /// Embed as a multivariate polynomial in variable k.
    Poly to_poly(std::size_t k) const;

  private:
    void trim();
    std::vector<Rational> c_;
};

/// Monic gcd; zero iff both inputs are zero.
UPoly gcd(const UPoly& a, const UPoly& b);

}  // namespace fockforge::exact
