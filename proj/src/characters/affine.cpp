#include "fockforge/characters/affine.hpp"

#include <regex>
#include <stdexcept>

#include "fockforge/fock/lattice.hpp"

namespace fockforge::characters {

AffineType AffineType::parse(const std::string& s) {
    static const std::regex re("([A-G])([0-9]+)");
    std::smatch m;
    if (!std::regex_match(s, m, re)) throw std::invalid_argument("bad type '" + s + "' (expected e.g. A2, G2, E8)");
    AffineType t{m[1].str()[0], std::stoi(m[2].str())};
    const int r = t.rank;
    bool ok = false;
    switch (t.base) {
        case 'A': ok = r >= 1; break;
        case 'B': ok = r >= 2; break;
        case 'C': ok = r >= 2; break;
        case 'D': ok = r >= 4; break;
        case 'E': ok = r >= 6 && r <= 8; break;
        case 'F': ok = r == 4; break;
        case 'G': ok = r == 2; break;
    }
    if (!ok) throw std::invalid_argument("no finite simple type " + s);
    return t;
}

std::string AffineType::name() const { return std::string(1, base) + std::to_string(rank); }

std::string AffineType::dual_label() const {
    switch (base) {
        case 'B': return "A" + std::to_string(2 * rank) + "^(2)";
        case 'C': return "D" + std::to_string(rank + 1) + "^(2)";
        case 'F': return "E6^(2)";
        case 'G': return "D4^(3)";
        default: return name() + "^(1)";
    }
}

int AffineType::lacing() const {
    if (simply_laced()) return 1;
    return base == 'G' ? 3 : 2;
}

int AffineType::long_simple_roots() const {
    switch (base) {
        case 'B': return rank - 1;
        case 'C': return 1;
        case 'F': return 2;
        case 'G': return 1;
        default: return rank;
    }
}

int AffineType::dual_coxeter() const {
    switch (base) {
        case 'A': return rank + 1;
        case 'B': return 2 * rank - 1;
        case 'C': return rank + 1;
        case 'D': return 2 * rank - 2;
        case 'E': return rank == 6 ? 12 : rank == 7 ? 18 : 30;
        case 'F': return 9;
        case 'G': return 4;
    }
    throw std::logic_error("dual_coxeter: bad type");
}

long AffineType::mult(int n) const { return n % lacing() == 0 ? rank : long_simple_roots(); }

std::vector<AffineType> catalog_types() {
    std::vector<AffineType> out;
    for (const char* s : {"A1", "A2", "A3", "D4", "D5", "E6", "E7", "E8", "B2", "B3", "B4", "C2", "C3", "C4", "F4", "G2"})
        out.push_back(AffineType::parse(s));
    return out;
}

QSeries level1_series(const AffineType& t, int order) {
    return euler_product([&t](int n) { return t.mult(n); }, order);
}

Rational level1_multiplicity(const AffineType& t, int d) { return level1_series(t, d)[d]; }

FrenkelKacResult frenkel_kac_check(const AffineType& t, int order) {
    if (!t.simply_laced()) throw std::invalid_argument("frenkel_kac_check: needs a simply laced type");
    const QSeries mult = level1_series(t, order);
    const QSeries fock_side = colored_partition_series(t.rank, order);
    FrenkelKacResult out;
    for (int d = 0; d <= order; ++d) {
        const auto dim = fock::colored_partition_count(static_cast<std::size_t>(t.rank), d);
        if (mult[d] != fock_side[d] || fock_side[d] != Rational(static_cast<unsigned long>(dim))) {
            out.pass = false;
            out.mismatch_degree = d;
            break;
        }
    }
    return out;
}

exact::RationalFunction level_map(const exact::RationalFunction& e1, const exact::RationalFunction& e2,
                                  const AffineType& t) {
    if (e1.is_zero()) throw exact::PoleError(e1.numerator(), "level_map: e1 = 0");
    return -e2 / e1 - exact::RationalFunction(static_cast<long>(t.dual_coxeter()));
}

}  // namespace fockforge::characters
