#pragma once

#include <functional>
#include <string>
#include <vector>

#include "fockforge/exact/rational_function.hpp"

namespace fockforge::characters {

using exact::Rational;

/// Power series in q truncated after q^order.
class QSeries {
  public:
    explicit QSeries(int order);
    QSeries(int order, std::vector<Rational> coeffs);
    static QSeries one(int order);

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& operator[](int d) const { return c_.at(static_cast<std::size_t>(d)); }
    Rational& operator[](int d) { return c_.at(static_cast<std::size_t>(d)); }
    const std::vector<Rational>& coeffs() const { return c_; }

    QSeries& operator+=(const QSeries& o);
    QSeries& operator-=(const QSeries& o);
    friend QSeries operator+(QSeries a, const QSeries& b) { return a += b; }
    friend QSeries operator-(QSeries a, const QSeries& b) { return a -= b; }
    /// Truncated to the smaller order.
    friend QSeries operator*(const QSeries& a, const QSeries& b);
    /// Requires a nonzero constant term.
    QSeries reciprocal() const;
    friend QSeries operator/(const QSeries& a, const QSeries& b) { return a * b.reciprocal(); }

    friend bool operator==(const QSeries&, const QSeries&) = default;

    /// "1, 2, 5, 10"
    std::string to_string() const;

  private:
    std::vector<Rational> c_;
};

/// prod_{n>=1} (1 - q^n)^{-m(n)} to the given order.
QSeries euler_product(const std::function<long(int)>& m, int order);

/// prod (1 - q^n)^{-colors}: colored partition counts.
QSeries colored_partition_series(long colors, int order);

/// Dimensions for the framed rank-r moduli: the r-fold product of the
/// Hilbert scheme series, one factor per torus-fixed summand.
QSeries gieseker_series(long r, int order);

/// gieseker_series(rank + 1) divided by the Hilbert scheme series.
QSeries ih_series(long rank, int order);

}  // namespace fockforge::characters
