#include "fockforge/characters/series.hpp"

#include <stdexcept>

namespace fockforge::characters {

QSeries::QSeries(int order) {
    if (order < 0) throw std::invalid_argument("QSeries: negative order");
    c_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

QSeries::QSeries(int order, std::vector<Rational> coeffs) : QSeries(order) {
    for (std::size_t i = 0; i < coeffs.size() && i < c_.size(); ++i) c_[i] = coeffs[i];
}

QSeries QSeries::one(int order) {
    QSeries s(order);
    s[0] = 1;
    return s;
}

QSeries& QSeries::operator+=(const QSeries& o) {
    if (o.order() < order()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
}

QSeries& QSeries::operator-=(const QSeries& o) {
    if (o.order() < order()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    const int n = std::min(a.order(), b.order());
    QSeries out(n);
    for (int i = 0; i <= n; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

QSeries QSeries::reciprocal() const {
    if (c_[0] == 0) throw std::domain_error("QSeries: reciprocal of a series without constant term");
    QSeries out(order());
    out[0] = 1 / c_[0];
    for (int d = 1; d <= order(); ++d) {
        Rational acc = 0;
        for (int i = 1; i <= d; ++i) acc += c_[static_cast<std::size_t>(i)] * out[d - i];
        out[d] = -acc * out[0];
    }
    return out;
}

std::string QSeries::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ", ";
        s += c_[i].get_str();
    }
    return s;
}

QSeries euler_product(const std::function<long(int)>& m, int order) {
    QSeries s = QSeries::one(order);
    for (int n = 1; n <= order; ++n) {
        long k = m(n);
        if (k < 0) throw std::invalid_argument("euler_product: negative exponent");
        // multiply by 1/(1 - q^n), k times
        for (long rep = 0; rep < k; ++rep)
            for (int d = n; d <= order; ++d) s[d] += s[d - n];
    }
    return s;
}

QSeries colored_partition_series(long colors, int order) {
    return euler_product([colors](int) { return colors; }, order);
}

QSeries gieseker_series(long r, int order) {
    const QSeries hilb = colored_partition_series(1, order);
    QSeries out = QSeries::one(order);
    for (long i = 0; i < r; ++i) out = out * hilb;
    return out;
}

QSeries ih_series(long rank, int order) { return gieseker_series(rank + 1, order) / colored_partition_series(1, order); }

}  // namespace fockforge::characters
