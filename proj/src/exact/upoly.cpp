#include "fockforge/exact/upoly.hpp"

#include <stdexcept>

namespace fockforge::exact {

UPoly::UPoly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[static_cast<std::size_t>(k)];
}

UPoly UPoly::operator-() const {
    UPoly p = *this;
    for (auto& c : p.c_) c = -c;
    return p;
}

UPoly& UPoly::operator+=(const UPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
    if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UPoly(std::move(out));
}

UPoly UPoly::scaled(const Rational& c) const {
    if (c == 0) return {};
    UPoly p = *this;
    for (auto& x : p.c_) x *= c;
    return p;
}

UPoly UPoly::pow(unsigned e) const {
    UPoly result(1);
    for (unsigned i = 0; i < e; ++i) result *= *this;
    return result;
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw std::domain_error("UPoly: division by zero");
    if (degree() < d.degree()) return {UPoly(), *this};
    std::vector<Rational> r = c_;
    std::vector<Rational> q(c_.size() - d.c_.size() + 1);
    const Rational inv = 1 / d.leading();
    for (int k = degree() - d.degree(); k >= 0; --k) {
        const Rational f = r[static_cast<std::size_t>(k + d.degree())] * inv;
        q[static_cast<std::size_t>(k)] = f;
        if (f == 0) continue;
        for (int j = 0; j <= d.degree(); ++j) {
            r[static_cast<std::size_t>(k + j)] -= f * d.c_[static_cast<std::size_t>(j)];
        }
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly UPoly::monic() const {
    if (is_zero()) return {};
    return scaled(1 / leading());
}

UPoly UPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<long>(i);
    return UPoly(std::move(out));
}

Rational UPoly::evaluate(const Rational& t) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
}

std::string UPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[static_cast<std::size_t>(k)];
        if (c == 0) continue;
        bool negative = c < 0;
        Rational mag = abs(c);
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string factor = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
        if (factor.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += factor;
        } else {
            out += mag.get_str() + "*" + factor;
        }
    }
    return out;
}

Poly UPoly::to_poly(std::size_t k) const {
    std::vector<Poly::Term> terms;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != 0) terms.push_back({Monomial::var(k, static_cast<unsigned>(i)), c_[i]});
    }
    return Poly::from_terms(std::move(terms));
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a;
    UPoly y = b;
    while (!y.is_zero()) {
        UPoly r = x.divmod(y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

}  // namespace fockforge::exact
