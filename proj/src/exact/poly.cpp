#include "fockforge/exact/poly.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace fockforge::exact {

namespace {

constexpr Monomial::Packed lane_high = 0x8000800080008000ull;
constexpr Monomial::Packed high_bits = lane_high << 64 | lane_high;

}  // namespace

// ---------------------------------------------------------------- Monomial

Monomial Monomial::var(std::size_t k, unsigned exponent) {
    if (k >= VarSpec::max_vars) throw std::out_of_range("Monomial: variable index out of range");
    if (exponent > max_exponent) throw std::overflow_error("Monomial: exponent too large");
    Monomial m;
    m.packed_ = static_cast<Packed>(exponent) << shift(k);
    m.degree_ = exponent;
    return m;
}

unsigned Monomial::support() const {
    unsigned mask = 0;
    for (std::size_t k = 0; k < VarSpec::max_vars; ++k) {
        if (exponent(k) != 0) mask |= 1u << k;
    }
    return mask;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial m;
    m.packed_ = packed_ + other.packed_;
    if ((m.packed_ & high_bits) != 0) throw std::overflow_error("Monomial: exponent overflow");
    m.degree_ = degree_ + other.degree_;
    return m;
}

bool Monomial::divides(const Monomial& other) const {
    if (degree_ > other.degree_) return false;
    return (((other.packed_ | high_bits) - packed_) & high_bits) == high_bits;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
    Monomial m;
    m.packed_ = other.packed_ - packed_;
    m.degree_ = other.degree_ - degree_;
    return m;
}

Monomial Monomial::with_exponent(std::size_t k, unsigned e) const {
    if (e > max_exponent) throw std::overflow_error("Monomial: exponent too large");
    Monomial m = *this;
    unsigned old = exponent(k);
    m.packed_ &= ~(Packed{0xffff} << shift(k));
    m.packed_ |= static_cast<Packed>(e) << shift(k);
    m.degree_ = degree_ - old + e;
    return m;
}

Monomial Monomial::min(const Monomial& x, const Monomial& y) {
    Monomial m;
    for (std::size_t k = 0; k < VarSpec::max_vars; ++k) {
        unsigned e = std::min(x.exponent(k), y.exponent(k));
        m.packed_ |= static_cast<Packed>(e) << shift(k);
        m.degree_ += e;
    }
    return m;
}

// ---------------------------------------------------------------- Poly

Poly::Poly(const Rational& c) {
    Rational v = c;
    v.canonicalize();
    if (v != 0) terms_.push_back({Monomial{}, std::move(v)});
}

Poly Poly::var(std::size_t k) { return monomial(Monomial::var(k), 1); }

Poly Poly::monomial(const Monomial& m, const Rational& c) {
    Poly p;
    Rational v = c;
    v.canonicalize();
    if (v != 0) p.terms_.push_back({m, std::move(v)});
    return p;
}

Poly Poly::from_terms(std::vector<Term> terms) {
    for (auto& t : terms) t.coeff.canonicalize();
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return x.mono > y.mono; });
    Poly p;
    p.terms_.reserve(terms.size());
    for (auto& t : terms) {
        if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
            p.terms_.back().coeff += t.coeff;
        } else {
            if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
            p.terms_.push_back(std::move(t));
        }
    }
    if (!p.terms_.empty() && p.terms_.back().coeff == 0) p.terms_.pop_back();
    return p;
}

Rational Poly::constant_term() const {
    if (!terms_.empty() && terms_.back().mono.is_one()) return terms_.back().coeff;
    return 0;
}

unsigned Poly::degree_in(std::size_t k) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.mono.exponent(k));
    return d;
}

unsigned Poly::support() const {
    unsigned mask = 0;
    for (const auto& t : terms_) mask |= t.mono.support();
    return mask;
}

Poly Poly::operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) t.coeff = -t.coeff;
    return p;
}

namespace {

template <bool Subtract>
std::vector<Poly::Term> merge_terms(const std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b) {
    std::vector<Poly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].mono > b[j].mono)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].mono > a[i].mono) {
            if constexpr (Subtract) {
                out.push_back({b[j].mono, -b[j].coeff});
            } else {
                out.push_back(b[j]);
            }
            ++j;
        } else {
            Rational c = Subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
            if (c != 0) out.push_back({a[i].mono, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) return *this = o;
    terms_ = merge_terms<false>(terms_, o.terms_);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.terms_.empty()) return *this;
    terms_ = merge_terms<true>(terms_, o.terms_);
    return *this;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.is_monomial()) return b.times_monomial(a.leading().mono, a.leading().coeff);
    if (b.is_monomial()) return a.times_monomial(b.leading().mono, b.leading().coeff);
    struct Hash {
        std::size_t operator()(const Monomial& m) const { return m.hash(); }
    };
    std::unordered_map<Monomial, std::size_t, Hash> index;
    std::vector<Poly::Term> acc;
    acc.reserve(a.size() * b.size());
    index.reserve(a.size() * b.size());
    for (const auto& x : a.terms()) {
        for (const auto& y : b.terms()) {
            Monomial m = x.mono * y.mono;
            auto [it, inserted] = index.try_emplace(m, acc.size());
            if (inserted) {
                acc.push_back({m, x.coeff * y.coeff});
            } else {
                acc[it->second].coeff += x.coeff * y.coeff;
            }
        }
    }
    return Poly::from_terms(std::move(acc));
}

Poly Poly::scaled(const Rational& c) const {
    if (c == 0) return {};
    Poly p = *this;
    for (auto& t : p.terms_) t.coeff *= c;
    return p;
}

Poly Poly::times_monomial(const Monomial& m, const Rational& c) const {
    if (c == 0) return {};
    Poly p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.mono * m, t.coeff * c});
    return p;
}

Poly Poly::pow(unsigned e) const {
    Poly result(1);
    Poly base = *this;
    while (e != 0) {
        if (e & 1u) result *= base;
        e >>= 1u;
        if (e != 0) base = base * base;
    }
    return result;
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
    if (auto c = a.terms_.size() <=> b.terms_.size(); c != 0) return c;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
        if (auto c = a.terms_[i].mono <=> b.terms_[i].mono; c != 0) return c;
        int q = cmp(a.terms_[i].coeff, b.terms_[i].coeff);
        if (q != 0) return q < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
    if (d.is_zero()) throw std::domain_error("Poly: division by zero polynomial");
    if (is_zero()) return Poly{};
    if (d.is_constant()) return scaled(1 / d.leading().coeff);
    if (total_degree() < d.total_degree()) return std::nullopt;
    unsigned sd = d.support();
    for (std::size_t k = 0; k < VarSpec::max_vars; ++k) {
        if ((sd >> k & 1u) && degree_in(k) < d.degree_in(k)) return std::nullopt;
    }
    Poly rem = *this;
    std::vector<Term> q;
    const Term& ld = d.leading();
    while (!rem.is_zero()) {
        const Term& lt = rem.leading();
        if (!ld.mono.divides(lt.mono)) return std::nullopt;
        Monomial m = ld.mono.quotient_of(lt.mono);
        Rational c = lt.coeff / ld.coeff;
        rem -= d.times_monomial(m, c);
        q.push_back({m, std::move(c)});
    }
    return from_terms(std::move(q));
}

std::vector<Poly> Poly::coefficients_in(std::size_t k) const {
    std::vector<std::vector<Term>> buckets(degree_in(k) + 1);
    for (const auto& t : terms_) {
        unsigned e = t.mono.exponent(k);
        buckets[e].push_back({t.mono.with_exponent(k, 0), t.coeff});
    }
    std::vector<Poly> out;
    out.reserve(buckets.size());
    for (auto& b : buckets) {
        Poly p;
        p.terms_ = std::move(b);  // order is preserved when one exponent is cleared
        out.push_back(std::move(p));
    }
    return out;
}

Poly Poly::from_coefficients(std::size_t k, std::span<const Poly> coeffs) {
    std::vector<Term> terms;
    for (std::size_t e = 0; e < coeffs.size(); ++e) {
        Monomial xe = Monomial::var(k, static_cast<unsigned>(e));
        for (const auto& t : coeffs[e].terms_) terms.push_back({t.mono * xe, t.coeff});
    }
    return from_terms(std::move(terms));
}

Rational Poly::content() const {
    if (terms_.empty()) return 0;
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const auto& t : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    Rational c(num_gcd, den_lcm);
    c.canonicalize();
    return c;
}

Poly Poly::primitive() const {
    if (terms_.empty()) return {};
    return scaled(1 / content());
}

Poly Poly::monic() const {
    if (terms_.empty()) return {};
    return scaled(1 / terms_.front().coeff);
}

Poly Poly::compose(std::span<const Poly> images) const {
    std::vector<std::vector<Poly>> powers(images.size());
    auto power = [&](std::size_t k, unsigned e) -> const Poly& {
        auto& cache = powers[k];
        if (cache.empty()) cache.emplace_back(1);
        while (cache.size() <= e) cache.push_back(cache.back() * images[k]);
        return cache[e];
    };
    Poly out;
    for (const auto& t : terms_) {
        Poly term(t.coeff);
        for (std::size_t k = 0; k < VarSpec::max_vars; ++k) {
            unsigned e = t.mono.exponent(k);
            if (e == 0) continue;
            if (k >= images.size()) throw std::invalid_argument("Poly::compose: missing image for variable");
            term *= power(k, e);
        }
        out += term;
    }
    return out;
}

Poly Poly::evaluate(std::span<const std::optional<Rational>> values) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Rational c = t.coeff;
        Monomial m = t.mono;
        for (std::size_t k = 0; k < values.size() && k < VarSpec::max_vars; ++k) {
            unsigned e = m.exponent(k);
            if (e == 0 || !values[k]) continue;
            Rational v;
            mpz_pow_ui(v.get_num_mpz_t(), values[k]->get_num_mpz_t(), e);
            mpz_pow_ui(v.get_den_mpz_t(), values[k]->get_den_mpz_t(), e);
            c *= v;
            m = m.with_exponent(k, 0);
        }
        if (c != 0) out.push_back({m, std::move(c)});
    }
    return from_terms(std::move(out));
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string Poly::to_string(const VarSpec& vars) const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& t : terms_) {
        bool negative = t.coeff < 0;
        Rational mag = abs(t.coeff);
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        std::string factors;
        for (std::size_t k = 0; k < VarSpec::max_vars; ++k) {
            unsigned e = t.mono.exponent(k);
            if (e == 0) continue;
            if (k >= vars.size()) throw std::invalid_argument("Poly::to_string: variable outside VarSpec");
            if (!factors.empty()) factors += "*";
            factors += vars.name(k);
            if (e > 1) factors += "^" + std::to_string(e);
        }
        if (factors.empty()) {
            out += rational_to_string(mag);
        } else if (mag == 1) {
            out += factors;
        } else {
            out += rational_to_string(mag) + "*" + factors;
        }
    }
    return out;
}

// ---------------------------------------------------------------- gcd

namespace {

using UniPoly = std::vector<Poly>;  // coefficients in the main variable, low to high

void trim(UniPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int deg(const UniPoly& p) { return static_cast<int>(p.size()) - 1; }

Poly gcd_impl(const Poly& a, const Poly& b);

Poly content_of(const UniPoly& coeffs) {
    Poly g;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        if (it->is_zero()) continue;
        g = g.is_zero() ? *it : gcd_impl(g, *it);
        if (g.is_constant()) return Poly(1);
    }
    return g;
}

UniPoly divide_all(const UniPoly& p, const Poly& d) {
    UniPoly out;
    out.reserve(p.size());
    for (const auto& c : p) {
        auto q = c.divide_exact(d);
        if (!q) throw std::logic_error("gcd: inexact coefficient division");
        out.push_back(std::move(*q));
    }
    return out;
}

UniPoly pseudo_remainder(const UniPoly& a, const UniPoly& b) {
    UniPoly r = a;
    const int n = deg(b);
    int e = deg(a) - n + 1;
    const Poly& lb = b.back();
    while (!r.empty() && deg(r) >= n) {
        Poly lead = r.back();
        int k = deg(r) - n;
        for (auto& c : r) c *= lb;
        for (int i = 0; i <= n; ++i) r[static_cast<std::size_t>(i + k)] -= lead * b[static_cast<std::size_t>(i)];
        trim(r);
        --e;
    }
    if (e > 0 && !r.empty()) {
        Poly f = lb.pow(static_cast<unsigned>(e));
        for (auto& c : r) c *= f;
    }
    return r;
}

// Last nonzero subresultant of primitive a, b (deg a >= deg b >= 1).
UniPoly subresultant_gcd(UniPoly a, UniPoly b) {
    if (deg(a) < deg(b)) std::swap(a, b);
    Poly g(1);
    Poly h(1);
    while (true) {
        int delta = deg(a) - deg(b);
        UniPoly r = pseudo_remainder(a, b);
        if (r.empty()) return b;
        if (deg(r) == 0) return UniPoly{Poly(1)};
        a = std::move(b);
        b = divide_all(r, g * h.pow(static_cast<unsigned>(delta)));
        g = a.back();
        if (delta == 1) {
            h = g;
        } else if (delta > 1) {
            auto q = g.pow(static_cast<unsigned>(delta)).divide_exact(h.pow(static_cast<unsigned>(delta - 1)));
            if (!q) throw std::logic_error("gcd: inexact subresultant update");
            h = std::move(*q);
        }
    }
}

Poly content_wrt(const Poly& p, std::size_t k) { return content_of(p.coefficients_in(k)); }

Poly gcd_impl(const Poly& a, const Poly& b) {
    if (a.is_constant() || b.is_constant()) return Poly(1);
    if (a.is_monomial() || b.is_monomial()) {
        const Poly& mono = a.is_monomial() ? a : b;
        const Poly& other = a.is_monomial() ? b : a;
        Monomial m = mono.leading().mono;
        for (const auto& t : other.terms()) m = Monomial::min(m, t.mono);
        return Poly::monomial(m, 1);
    }
    unsigned sa = a.support();
    unsigned sb = b.support();
    if (unsigned only_a = sa & ~sb; only_a != 0) {
        return gcd_impl(content_wrt(a, static_cast<std::size_t>(std::countr_zero(only_a))), b);
    }
    if (unsigned only_b = sb & ~sa; only_b != 0) {
        return gcd_impl(a, content_wrt(b, static_cast<std::size_t>(std::countr_zero(only_b))));
    }
    if (auto q = a.divide_exact(b)) return b;
    if (auto q = b.divide_exact(a)) return a;

    std::size_t main = 0;
    unsigned best = ~0u;
    for (std::size_t k = 0; k < VarSpec::max_vars; ++k) {
        if (!(sa >> k & 1u)) continue;
        unsigned d = std::max(a.degree_in(k), b.degree_in(k));
        if (d < best) {
            best = d;
            main = k;
        }
    }
    UniPoly ua = a.primitive().coefficients_in(main);
    UniPoly ub = b.primitive().coefficients_in(main);
    Poly ca = content_of(ua);
    Poly cb = content_of(ub);
    Poly c = gcd_impl(ca, cb);
    ua = divide_all(ua, ca);
    ub = divide_all(ub, cb);
    UniPoly g = subresultant_gcd(std::move(ua), std::move(ub));
    if (deg(g) == 0) return c;
    g = divide_all(g, content_of(g));
    return c * Poly::from_coefficients(main, g);
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    return gcd_impl(a, b).monic();
}

}  // namespace fockforge::exact
