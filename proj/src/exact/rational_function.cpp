#include "fockforge/exact/rational_function.hpp"

#include <climits>

namespace fockforge::exact {

RationalFunction::RationalFunction(const Poly& num, const Poly& den) : num_(num), den_(den) { normalize(); }

void RationalFunction::normalize() {
    if (den_.is_zero()) throw DivisionByZero();
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (!den_.is_constant()) {
        Poly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = *num_.divide_exact(g);
            den_ = *den_.divide_exact(g);
        }
    }
    Rational lc = den_.leading().coeff;
    if (lc != 1) {
        num_ = num_.scaled(1 / lc);
        den_ = den_.scaled(1 / lc);
    }
}

Rational RationalFunction::constant_value() const {
    if (!is_constant()) throw std::logic_error("RationalFunction: not a constant");
    return num_.constant_term() / den_.constant_term();
}

RationalFunction RationalFunction::operator-() const { return {-num_, den_, Reduced{}}; }

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        normalize();
        return *this;
    }
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ += o.num_;  // both monic constants, i.e. 1
        return *this;
    }
    // Henrici: with g = gcd(d1, d2), any common factor of the new numerator
    // and d1*d2/g already divides g.
    Poly g = gcd(den_, o.den_);
    Poly d1 = *den_.divide_exact(g);
    Poly d2 = *o.den_.divide_exact(g);
    Poly t = num_ * d2 + o.num_ * d1;
    Poly d = den_ * d2;
    if (t.is_zero()) return *this = RationalFunction();
    if (!g.is_constant()) {
        Poly h = gcd(t, g);
        if (!h.is_constant()) {
            t = *t.divide_exact(h);
            d = *d.divide_exact(h);
        }
    }
    Rational lc = d.leading().coeff;
    num_ = t.scaled(1 / lc);
    den_ = d.scaled(1 / lc);
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero() || o.is_zero()) return *this = RationalFunction();
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ = num_ * o.num_;
        return *this;
    }
    Poly g1 = gcd(num_, o.den_);
    Poly g2 = gcd(o.num_, den_);
    Poly n1 = g1.is_constant() ? num_ : *num_.divide_exact(g1);
    Poly e2 = g1.is_constant() ? o.den_ : *o.den_.divide_exact(g1);
    Poly n2 = g2.is_constant() ? o.num_ : *o.num_.divide_exact(g2);
    Poly e1 = g2.is_constant() ? den_ : *den_.divide_exact(g2);
    Poly n = n1 * n2;
    Poly d = e1 * e2;
    Rational lc = d.leading().coeff;
    num_ = n.scaled(1 / lc);
    den_ = d.scaled(1 / lc);
    return *this;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Rational lc = num_.leading().coeff;
    return {den_.scaled(1 / lc), num_.scaled(1 / lc), Reduced{}};
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::pow(int e) const {
    if (e < 0) return inverse().pow(-e);
    return {num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Reduced{}};
}

std::strong_ordering operator<=>(const RationalFunction& a, const RationalFunction& b) {
    if (auto c = a.num_ <=> b.num_; c != 0) return c;
    return a.den_ <=> b.den_;
}

namespace {

// Split p into factors along variable contents and return one that vanishes
// under the assignment. Falls back to p itself.
Poly vanishing_factor(const Poly& p, std::span<const std::optional<Rational>> values) {
    unsigned support = p.support();
    for (std::size_t k = 0; k < VarSpec::max_vars; ++k) {
        if (!(support >> k & 1u)) continue;
        auto coeffs = p.coefficients_in(k);
        Poly content;
        for (const auto& c : coeffs) {
            if (!c.is_zero()) content = content.is_zero() ? c.monic() : gcd(content, c);
        }
        if (content.is_constant()) continue;
        Poly rest = *p.divide_exact(content);
        if (content.evaluate(values).is_zero()) return vanishing_factor(content, values);
        return vanishing_factor(rest, values);
    }
    if (!p.is_monomial()) return p.monic();
    // Monomial: pick a single vanishing variable.
    const auto& m = p.leading().mono;
    for (std::size_t k = 0; k < VarSpec::max_vars && k < values.size(); ++k) {
        if (m.exponent(k) != 0 && values[k] && *values[k] == 0) return Poly::var(k);
    }
    return p.monic();
}

}  // namespace

RationalFunction RationalFunction::specialize(std::span<const std::optional<Rational>> values) const {
    Poly d = den_.evaluate(values);
    if (d.is_zero()) {
        Poly f = vanishing_factor(den_, values);
        throw PoleError(f, "denominator vanishes under specialization");
    }
    return {num_.evaluate(values), d};
}

RationalFunction RationalFunction::specialize(const VarSpec& vars,
                                              const std::map<std::string, Rational>& assignment) const {
    std::vector<std::optional<Rational>> values(vars.size());
    for (const auto& [name, value] : assignment) values[vars.require(name)] = value;
    return specialize(values);
}

RationalFunction RationalFunction::compose(std::span<const RationalFunction> images) const {
    bool polynomial = true;
    for (const auto& im : images) polynomial = polynomial && im.is_polynomial();
    if (polynomial) {
        std::vector<Poly> polys;
        polys.reserve(images.size());
        for (const auto& im : images) polys.push_back(im.numerator());  // monic constant denominator
        return {num_.compose(polys), den_.compose(polys)};
    }
    auto eval = [&](const Poly& p) {
        RationalFunction out;
        for (const auto& t : p.terms()) {
            RationalFunction term(t.coeff);
            for (std::size_t k = 0; k < VarSpec::max_vars; ++k) {
                unsigned e = t.mono.exponent(k);
                if (e != 0) term *= images[k].pow(static_cast<int>(e));
            }
            out += term;
        }
        return out;
    };
    return eval(num_) / eval(den_);
}

std::string RationalFunction::to_string(const VarSpec& vars) const {
    return "(" + num_.to_string(vars) + ")/(" + den_.to_string(vars) + ")";
}

RationalFunction LaurentExpansion::coefficient(int k) const {
    int i = k - first_power;
    if (i < 0 || i >= static_cast<int>(coeffs.size())) return {};
    return coeffs[static_cast<std::size_t>(i)];
}

int degree_in(const RationalFunction& x, std::size_t var) {
    if (x.is_zero()) return INT_MIN;
    return static_cast<int>(x.numerator().degree_in(var)) - static_cast<int>(x.denominator().degree_in(var));
}

LaurentExpansion laurent_at_infinity(const RationalFunction& x, std::size_t var, int order) {
    LaurentExpansion out;
    if (x.is_zero()) {
        out.first_power = 0;
        return out;
    }
    auto num = x.numerator().coefficients_in(var);
    auto den = x.denominator().coefficients_in(var);
    const int n = static_cast<int>(num.size()) - 1;
    const int m = static_cast<int>(den.size()) - 1;
    out.first_power = m - n;
    const int terms = order - out.first_power + 1;
    if (terms <= 0) return out;
    // In w = 1/var: x = var^(n-m) * A(w)/B(w), A_i = num[n-i], B_j = den[m-j].
    auto a_at = [&](int i) -> RationalFunction { return i <= n ? RationalFunction(num[static_cast<std::size_t>(n - i)]) : RationalFunction(); };
    auto b_at = [&](int j) -> RationalFunction { return j <= m ? RationalFunction(den[static_cast<std::size_t>(m - j)]) : RationalFunction(); };
    RationalFunction b0_inv = b_at(0).inverse();
    for (int k = 0; k < terms; ++k) {
        RationalFunction c = a_at(k);
        for (int j = 1; j <= k && j <= m; ++j) c -= b_at(j) * out.coeffs[static_cast<std::size_t>(k - j)];
        out.coeffs.push_back(c * b0_inv);
    }
    return out;
}

}  // namespace fockforge::exact
