#include "fockforge/cli/checks.hpp"

#include <chrono>
#include <functional>
#include <future>
#include <random>
#include <stdexcept>

#include "fockforge/adhm/adhm.hpp"
#include "fockforge/characters/affine.hpp"
#include "fockforge/exact/parse.hpp"
#include "fockforge/rmatrix/checks.hpp"
#include "fockforge/virasoro/lehn.hpp"
#include "fockforge/wlattice/lattice.hpp"

namespace fockforge::cli {

using exact::Equivariant;
using exact::Matrix;
using exact::Rational;
using exact::RF;
using fock::FockVector;
using fock::OperatorMatrix;

const char* to_string(Status s) {
    switch (s) {
        case Status::Pass: return "pass";
        case Status::Fail: return "fail";
        case Status::Measured: return "measured";
    }
    return "?";
}

const char* to_string(Profile p) { return p == Profile::Quick ? "quick" : "full"; }

Profile parse_profile(const std::string& s) {
    if (s == "quick") return Profile::Quick;
    if (s == "full") return Profile::Full;
    throw std::invalid_argument("unknown profile '" + s + "' (expected quick or full)");
}

Json to_json(const CheckReport& r, bool timing) {
    Json j{{"check", r.check},
           {"params", r.params},
           {"status", to_string(r.status)},
           {"seed", r.seed},
           {"witnesses", r.witnesses},
           {"data", r.data}};
    if (timing) j["seconds"] = r.seconds;
    return j;
}

namespace {

// Collects failures; the report fails as soon as one witness is recorded.
struct Recorder {
    CheckReport& rep;
    void expect(bool ok, const std::string& what) {
        if (!ok) rep.witnesses.push_back(what);
    }
};

std::string residual_witness(const std::string& label, const OperatorMatrix& res) {
    auto at = res.first_nonzero();
    if (!at) return label + ": zero";
    auto [d, i, j] = *at;
    const auto& vars = *res.source()->params().vars;
    return label + ": degree " + std::to_string(d) + " entry (" + std::to_string(i) + "," + std::to_string(j) +
           ") = " + res.block(d)(i, j).to_string(vars);
}

void check_residual(Recorder& rec, const std::string& label, const OperatorMatrix& res) {
    if (!res.is_zero()) rec.rep.witnesses.push_back(residual_witness(label, res));
}

std::string mn(int m, int n) { return "m=" + std::to_string(m) + " n=" + std::to_string(n); }

// ---------------------------------------------------------------- heisenberg

void heisenberg(CheckReport& rep, int D, const CheckParams& p) {
    Recorder rec{rep};
    const int max_rank = p.rank.value_or(3);
    rep.params["rank"] = max_rank;
    rep.params["modes"] = D;
    const auto params = Equivariant::symbolic(2);
    std::vector<std::pair<std::string, fock::LatticePtr>> lattices;
    for (int r = 1; r <= max_rank; ++r) {
        auto n = static_cast<std::size_t>(r);
        lattices.emplace_back("A" + std::to_string(r),
                              fock::make_lattice(fock::cartan_gram_a(n), fock::FormScale::Standard, params));
        lattices.emplace_back("gl" + std::to_string(r),
                              fock::make_lattice(Matrix<Rational>::identity(n), fock::FormScale::Standard, params));
    }
    std::size_t checked = 0;
    for (const auto& [name, L] : lattices)
        for (int d = 0; d <= D; ++d)
            for (const auto& m : L->basis(d)) {
                const FockVector v = FockVector::monomial(m);
                for (std::size_t i = 0; i < L->rank(); ++i)
                    for (std::size_t j = 0; j < L->rank(); ++j)
                        for (int a = -D; a <= D; ++a)
                            for (int b = -D; b <= D; ++b) {
                                if (a == 0 || b == 0) continue;
                                FockVector lhs = fock::mode(*L, i, a, fock::mode(*L, j, b, v)) -
                                                 fock::mode(*L, j, b, fock::mode(*L, i, a, v));
                                RF expect = a + b == 0 ? RF(Rational(-a) * L->gram()(i, j)) * L->scale() : RF(0);
                                ++checked;
                                if (lhs != v.scaled(expect))
                                    rec.expect(false, name + " [P" + std::to_string(i + 1) + "_" + std::to_string(a) +
                                                          ", P" + std::to_string(j + 1) + "_" + std::to_string(b) +
                                                          "] wrong on degree " + std::to_string(d));
                            }
            }
    rep.data["lattices"] = Json::array();
    for (const auto& [name, L] : lattices) rep.data["lattices"].push_back(name);
    rep.data["commutators_checked"] = checked;
}

// ---------------------------------------------------------------- virasoro

void virasoro_check(CheckReport& rep, int D, const CheckParams&) {
    Recorder rec{rep};
    const auto params = Equivariant::symbolic(2);
    const auto spec = virasoro::FeiginFuchsSpec::sl2(params);
    const auto& vars = *params.vars;
    for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) check_residual(rec, mn(m, n), virasoro::virasoro_bracket_residual(m, n, spec, D));
    // highest weight
    const RF h = RF(Rational(-1, 4)) * (params.difference(0, 1) * params.difference(0, 1) - params.s() * params.s()) /
                 params.e1e2();
    const FockVector vac = FockVector::vacuum();
    rec.expect(virasoro::virasoro_apply(spec, 0, vac) == vac.scaled(h), "L_0|vac> differs from the highest weight");
    for (int n = 1; n <= 3; ++n)
        rec.expect(virasoro::virasoro_apply(spec, n, vac).is_zero(), "L_" + std::to_string(n) + "|vac> != 0");
    const RF c = RF(1) + RF(6) * params.s() * params.s() / params.e1e2();
    rec.expect(virasoro::central_charge(params) == c, "central charge");
    rep.data["highest_weight"] = h.to_string(vars);
    rep.data["central_charge"] = c.to_string(vars);
}

void integral_virasoro(CheckReport& rep, int D, const CheckParams&) {
    Recorder rec{rep};
    const auto params = Equivariant::symbolic(2);
    const auto spec = virasoro::integral_twin(virasoro::FeiginFuchsSpec::sl2(params));
    for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) check_residual(rec, mn(m, n), virasoro::virasoro_bracket_residual(m, n, spec, D));
    // ~L_0 = e1 e2 L_0 on the vacuum
    const RF h = RF(Rational(-1, 4)) * (params.difference(0, 1) * params.difference(0, 1) - params.s() * params.s());
    const FockVector vac = FockVector::vacuum();
    rec.expect(virasoro::virasoro_apply(spec, 0, vac) == vac.scaled(h), "~L_0|vac> differs from e1 e2 h");
    // every ~L_n matrix entry is polynomial
    bool poly = true;
    for (int n = -3; n <= 3; ++n) {
        auto op = virasoro::virasoro_mode(n, spec, D);
        for (const auto& [d, M] : op.blocks())
            for (std::size_t i = 0; i < M.rows(); ++i)
                for (std::size_t j = 0; j < M.cols(); ++j) poly = poly && M(i, j).is_polynomial();
    }
    rec.expect(poly, "a ~L_n matrix entry is not polynomial");
    rep.data["highest_weight"] = h.to_string(*params.vars);
}

// ---------------------------------------------------------------- lehn

void lehn(CheckReport& rep, int D, const CheckParams&) {
    Recorder rec{rep};
    const auto params = Equivariant::symbolic(2);
    const auto& vars = *params.vars;
    auto L = virasoro::lehn_lattice(params);
    Json transcribed = Json::object();
    for (int n : {-3, -2, -1, 1, 2, 3}) {
        check_residual(rec, "n=" + std::to_string(n), virasoro::lehn_commutator_residual(L, n, D));
        auto t = virasoro::lehn_commutator_residual(L, n, D, virasoro::LehnSign::Transcribed);
        transcribed["n=" + std::to_string(n)] = t.is_zero() ? "zero" : residual_witness("residual", t);
    }
    // spectrum: box-content sums
    auto op = virasoro::lehn_operator(L, 3);
    auto rf = [&](const std::string& s) { return exact::parse_rational_function(s, vars); };
    rec.expect(op.block(2)(0, 0) + op.block(2)(1, 1) == params.s(), "degree-2 trace");
    rec.expect(exact::determinant(op.block(2)) == params.e1e2(), "degree-2 determinant");
    for (const char* ev : {"3*e1", "e1 + e2", "3*e2"})
        rec.expect(exact::determinant(op.block(3) - Matrix<RF>::identity(3).scaled(rf(ev))).is_zero(),
                   std::string("degree-3 eigenvalue ") + ev);
    rep.data["cubic_sign"] = "commutator-consistent";
    rep.data["transcribed_sign_residuals"] = transcribed;
}

// ---------------------------------------------------------------- reflection

using rmatrix::Normalization;
using rmatrix::Orientation;
using rmatrix::ReflectionConvention;

std::vector<ReflectionConvention> all_conventions() {
    std::vector<ReflectionConvention> out;
    for (auto o : {Orientation::SourceSwapped, Orientation::TargetSwapped})
        for (auto n : {Normalization::Plus, Normalization::Minus, Normalization::PlusParity, Normalization::MinusParity})
            out.push_back({o, n});
    return out;
}

void reflection(CheckReport& rep, int D, const CheckParams&) {
    Recorder rec{rep};
    const auto p = Equivariant::spectral();
    const auto& vars = *p.vars;
    const auto spec = virasoro::FeiginFuchsSpec::sl2(p);
    const auto swapped = virasoro::FeiginFuchsSpec::sl2(p.swapped(0, 1));
    const auto R = rmatrix::reflection(p, D + 2, Orientation::SourceSwapped);
    for (int n = -2; n <= 2; ++n) {
        auto lhs = R * virasoro::virasoro_mode(n, swapped, D);
        auto rhs = virasoro::virasoro_mode(n, spec, D + 2) * R.restricted(D);
        check_residual(rec, "intertwining n=" + std::to_string(n), (lhs - rhs).restricted(D));
    }
    const auto R1 = R.restricted(D + 1);
    const auto Rsig = rmatrix::reflection(p.swapped(0, 1), D + 1, Orientation::SourceSwapped);
    check_residual(rec, "R(a) R(sigma a) - 1", R1 * Rsig - OperatorMatrix::identity(R1.source(), D + 1));
    const auto r = rmatrix::classical_r(p, D + 1);
    for (int d = 0; d <= D + 1; ++d)
        rec.expect(r.block(d) == Matrix<RF>::identity(r.block(d).rows()).scaled(RF(2 * d)),
                   "classical r is not 2d on degree " + std::to_string(d));
    // degree-1 eigenvalue per convention
    const RF u = p.difference(0, 1), s = p.s();
    const RF ratio = (u - s) / (u + s);
    Json eig = Json::object();
    for (const auto& c : all_conventions()) {
        RF x = rmatrix::reflection(p, 1, c).block(1)(0, 0);
        RF base = c.orientation == Orientation::SourceSwapped ? ratio : RF(1) / ratio;
        rec.expect(x == base || x == -base, "degree-1 eigenvalue for " + rmatrix::to_string(c));
        eig[rmatrix::to_string(c)] = x.to_string(vars);
    }
    rep.data["degree1_eigenvalue"] = eig;
    rep.data["u"] = "a1 - a2, with a2 = 0";
}

void expansion(CheckReport& rep, int D, const CheckParams&) {
    Recorder rec{rep};
    Json degrees = Json::array();
    std::vector<ReflectionConvention> uniform = all_conventions();
    for (int d = 0; d <= D; ++d) {
        auto report = rmatrix::expansion_report(d);
        Json cands = Json::array();
        std::vector<ReflectionConvention> keep;
        for (const auto& c : report.candidates) {
            cands.push_back({{"convention", rmatrix::to_string(c.convention)},
                             {"verified_order", c.verified_order},
                             {"mismatch", c.mismatch}});
            for (const auto& u : uniform)
                if (c.passes() && u.orientation == c.convention.orientation &&
                    u.normalization == c.convention.normalization)
                    keep.push_back(u);
        }
        uniform = keep;
        Json entry{{"degree", d}, {"candidates", cands}};
        entry["scalar_sign"] = report.scalar_sign ? Json(*report.scalar_sign) : Json(nullptr);
        entry["scalar_orientation"] =
            report.scalar_orientation ? Json(rmatrix::to_string(*report.scalar_orientation)) : Json(nullptr);
        degrees.push_back(entry);
    }
    Json u = Json::array();
    for (const auto& c : uniform) u.push_back(rmatrix::to_string(c));
    rec.expect(!uniform.empty(), "no convention matches 1 + (s/u) r on every degree");
    const ReflectionConvention def{};
    bool default_ok = false;
    for (const auto& c : uniform) default_ok |= c.orientation == def.orientation && c.normalization == def.normalization;
    rec.expect(default_ok, "default convention " + rmatrix::to_string(def) + " fails");
    rep.data["uniform_conventions"] = u;
    rep.data["default_convention"] = rmatrix::to_string(def);
    rep.data["degrees"] = degrees;
}

// ---------------------------------------------------------------- ybe

Json params_json(const Equivariant& p) {
    Json a = Json::array();
    for (const auto& x : p.a) a.push_back(p.format(x));
    return {{"a", a}, {"e1", p.format(p.e1)}, {"e2", p.format(p.e2)}};
}

void ybe_seed(Recorder& rec, Json& seeds, int D, std::uint64_t seed) {
    const ReflectionConvention uniform{};
    auto p = rmatrix::ybe_seed_params(seed, D);
    auto res = rmatrix::ybe_residual(p, D, uniform);
    check_residual(rec, "seed " + std::to_string(seed), res);
    Json entry{{"seed", seed}, {"params", params_json(p)}, {"residual", res.is_zero() ? "zero" : "nonzero"}};
    seeds.push_back(entry);
}

void ybe(CheckReport& rep, int D, const CheckParams& p) {
    Recorder rec{rep};
    const ReflectionConvention uniform{};
    check_residual(rec, "symbolic degree 1", rmatrix::ybe_residual(Equivariant::symbolic(3), 1, uniform));
    Json seeds = Json::array();
    for (std::uint64_t k = 0; k < 5; ++k) ybe_seed(rec, seeds, D, p.seed + k);
    // the un-normalized reflection is the braid form and should fail
    auto q = rmatrix::ybe_seed_params(p.seed, std::min(D, 2));
    bool raw_zero = rmatrix::ybe_residual(q, std::min(D, 2), {Orientation::TargetSwapped, Normalization::Plus}).is_zero();
    rep.data["convention"] = rmatrix::to_string(uniform);
    rep.data["seeds"] = seeds;
    rep.data["raw_reflection_residual"] = raw_zero ? "zero" : "nonzero";
}

// ---------------------------------------------------------------- wlattice

Json divisors_json(const std::vector<exact::UPoly>& ds) {
    Json out = Json::array();
    for (const auto& d : ds) out.push_back(d.to_string("t"));
    return out;
}

wlattice::PidIntersection intersect_with_retry(const wlattice::FockLattice& a, const wlattice::FockLattice& b,
                                               std::uint64_t seed) {
    for (std::uint64_t s = seed;; ++s) {
        try {
            return wlattice::pid_intersection(a, b, wlattice::LineSpecialization(a.ambient->params().vars, s));
        } catch (const wlattice::DegenerateLine&) {
            if (s > seed + 100) throw;
        }
    }
}

void wlattice_check(CheckReport& rep, int D, const CheckParams& p) {
    using wlattice::Algebra;
    Recorder rec{rep};
    const int d3 = std::min(D, 3);
    auto add_witnesses = [&](const wlattice::IntegralityReport& r, const char* g) {
        for (const auto& w : r.witnesses) rec.expect(false, std::string(g) + ": " + w.what);
    };
    add_witnesses(wlattice::integrality_check(Algebra::sl2, D), "sl2");
    add_witnesses(wlattice::integrality_check(Algebra::sl3, d3), "sl3");

    // index of Vir in Heis at degree one
    auto vir = wlattice::vir_sublattice(Algebra::sl2, 0, 1);
    auto heis = wlattice::heisenberg_lattice(vir.ambient, 1);
    auto idx = intersect_with_retry(vir, heis, p.seed);
    const auto& params = vir.ambient->params();
    wlattice::LineSpecialization line(params.vars, idx.seed);
    const auto expect = line.apply(params.difference(0, 1) - params.s()).monic();
    rec.expect(idx.divisors == std::vector<exact::UPoly>{expect}, "sl2 degree-1 index divisor");
    rep.data["sl2_index"] = {{"algebra", "sl2"}, {"degree", 1},           {"line_seed", idx.seed},
                             {"rank", idx.rank}, {"divisors", divisors_json(idx.divisors)},
                             {"expected", expect.to_string("t")}};

    Json inter = Json::array();
    for (int d = 1; d <= d3; ++d) {
        auto a = wlattice::vir_sublattice(Algebra::sl3, 0, d), b = wlattice::vir_sublattice(Algebra::sl3, 1, d);
        auto x = intersect_with_retry(a, b, p.seed), y = intersect_with_retry(a, b, p.seed);
        rec.expect(x.divisors == y.divisors && x.divisors_in_first == y.divisors_in_first,
                   "sl3 intersection not deterministic at degree " + std::to_string(d));
        rec.expect(x.rank == a.ambient->graded_dimension(d),
                   "sl3 intersection rank " + std::to_string(x.rank) + " at degree " + std::to_string(d));
        inter.push_back({{"algebra", "sl3"},
                         {"degree", d},
                         {"line_seed", x.seed},
                         {"rank", x.rank},
                         {"divisors", divisors_json(x.divisors)},
                         {"divisors_in_S1", divisors_json(x.divisors_in_first)},
                         {"divisors_in_S2", divisors_json(x.divisors_in_second)}});
    }
    Json perp = Json::array();
    for (std::size_t i = 0; i < 2; ++i) {
        Json v = Json::array();
        for (const auto& c : wlattice::orthogonal_root(Algebra::sl3, i)) v.push_back(exact::rational_to_string(c));
        perp.push_back(v);
    }
    rep.data["sl3_orthogonal_roots"] = perp;
    rep.data["sl3_intersections"] = inter;
}

void kernel(CheckReport& rep, int D, const CheckParams&) {
    Recorder rec{rep};
    Json dims = Json::object();
    for (std::size_t r : {2, 3}) {
        const auto ih = characters::ih_series(static_cast<long>(r) - 1, D);
        Json row = Json::array();
        for (int d = 0; d <= D; ++d) {
            auto K = wlattice::annihilator_kernel(r, d);
            row.push_back(K.size());
            rec.expect(Rational(static_cast<unsigned long>(K.size())) == ih[d],
                       "r=" + std::to_string(r) + " d=" + std::to_string(d) + ": kernel dimension " +
                           std::to_string(K.size()) + " vs " + ih[d].get_str());
            for (const auto& b : K.basis)
                rec.expect(wlattice::killed_by_diagonal(*K.ambient, b), "kernel vector not annihilated");
        }
        dims["r=" + std::to_string(r)] = row;
    }
    auto L = wlattice::gl_lattice(2);
    auto spec = virasoro::FeiginFuchsSpec::along(L, fock::Direction{1, -1}, L->params().difference(0, 1));
    for (int d = 0; d <= std::min(D, 4); ++d)
        for (const auto& b : wlattice::annihilator_kernel(2, d).basis)
            for (int n = -2; n <= 2; ++n)
                rec.expect(wlattice::killed_by_diagonal(*L, virasoro::virasoro_apply(spec, n, b)),
                           "L_" + std::to_string(n) + " leaves the kernel at degree " + std::to_string(d));
    rep.data["dimensions"] = dims;
}

// ---------------------------------------------------------------- characters

// Multisets of colored parts by direct enumeration.
long count_colored(int d, int max_n, long max_c, const std::function<long(int)>& m) {
    if (d == 0) return 1;
    long total = 0;
    for (int n = std::min(d, max_n); n >= 1; --n) {
        long top = n == max_n ? max_c : m(n) - 1;
        for (long c = top; c >= 0; --c) total += count_colored(d - n, n, c, m);
    }
    return total;
}

Json series_json(const characters::QSeries& s) {
    Json out = Json::array();
    for (const auto& c : s.coeffs()) out.push_back(c.get_str());
    return out;
}

void characters_check(CheckReport& rep, int D, const CheckParams& p) {
    using characters::AffineType;
    Recorder rec{rep};
    const auto hilb = characters::colored_partition_series(1, D);
    for (long r = 1; r <= 3; ++r) {
        auto g = characters::gieseker_series(r, D);
        rec.expect(g == characters::colored_partition_series(r, D), "gieseker r=" + std::to_string(r));
        for (int d = 0; d <= D; ++d)
            rec.expect(g[d] == Rational(static_cast<unsigned long>(fock::colored_partition_count(r, d))),
                       "gieseker vs Fock dimension r=" + std::to_string(r) + " d=" + std::to_string(d));
        rec.expect(characters::ih_series(r - 1, D) * hilb == g, "ih * hilb != gieseker r=" + std::to_string(r));
    }
    std::vector<AffineType> types = characters::catalog_types();
    if (p.type) types = {AffineType::parse(*p.type)};
    Json table = Json::array();
    for (const auto& t : types) {
        auto s = characters::level1_series(t, D);
        for (int d = 0; d <= D; ++d) {
            long want = d == 0 ? 1 : count_colored(d, d, t.mult(d) - 1, [&t](int n) { return t.mult(n); });
            rec.expect(s[d] == want, t.name() + " d=" + std::to_string(d));
        }
        table.push_back({{"type", t.name()},
                         {"dual", t.dual_label()},
                         {"lacing", t.lacing()},
                         {"long_simple_roots", t.long_simple_roots()},
                         {"multiplicities", series_json(s)}});
    }
    if (!p.type) {
        auto g2 = characters::level1_series(AffineType::parse("G2"), std::max(D, 4));
        rec.expect(std::vector<Rational>(g2.coeffs().begin(), g2.coeffs().begin() + 5) ==
                       std::vector<Rational>{1, 1, 2, 4, 6},
                   "G2 multiplicities");
        rec.expect(characters::level1_multiplicity(AffineType::parse("B2"), 2) == 3, "B2 d=2");
        rec.expect(characters::level1_multiplicity(AffineType::parse("A2"), 3) == 10, "A2 d=3");
    }
    rep.data["gieseker_r2"] = series_json(characters::gieseker_series(2, D));
    rep.data["ih_rank1"] = series_json(characters::ih_series(1, D));
    rep.data["level1"] = table;
}

void frenkel_kac(CheckReport& rep, int D, const CheckParams& p) {
    Recorder rec{rep};
    const int max_rank = p.rank.value_or(3);
    rep.params["rank"] = max_rank;
    for (int r = 1; r <= max_rank; ++r) {
        auto t = characters::AffineType{'A', r};
        auto res = characters::frenkel_kac_check(t, D);
        rec.expect(res.pass, t.name() + " differs at degree " + std::to_string(res.mismatch_degree));
    }
}

// ---------------------------------------------------------------- adhm

void adhm_check(CheckReport& rep, int D, const CheckParams& p) {
    Recorder rec{rep};
    const int max_rank = p.rank.value_or(3);
    rep.params["rank"] = max_rank;
    Json counts = Json::object();
    for (int r = 1; r <= max_rank; ++r) {
        const auto g = characters::gieseker_series(r, D);
        Json row = Json::array();
        for (int d = 0; d <= D; ++d) {
            auto tuples = adhm::partition_tuples(r, d);
            row.push_back(tuples.size());
            rec.expect(Rational(static_cast<unsigned long>(tuples.size())) == g[d],
                       "fixed-point count r=" + std::to_string(r) + " d=" + std::to_string(d));
            for (const auto& t : tuples) {
                auto x = adhm::fixed_point_data(t);
                rec.expect(adhm::moment_map(x).is_zero(), "mu != 0 at " + adhm::to_string(t));
                rec.expect(adhm::is_stable(x), "unstable at " + adhm::to_string(t));
                rec.expect(adhm::spectrum_projection(x, 1, 0).roots ==
                               std::vector<std::pair<Rational, int>>(d ? 1 : 0, {Rational(0), d}),
                           "B1 not nilpotent at " + adhm::to_string(t));
            }
        }
        counts["r=" + std::to_string(r)] = row;
    }
    std::mt19937_64 rng(p.seed);
    int ba = 0, concat = 0;
    for (int trial = 0; trial < 100; ++trial) {
        auto x = adhm::random_adhm(rng(), 1 + trial % 4, 1 + trial % 3);
        if (adhm::ba_residual(x).is_zero()) ++ba;
        else rec.expect(false, "b a != z0^2 mu on random trial " + std::to_string(trial));
    }
    for (int trial = 0; trial < 100; ++trial) {
        auto x = adhm::random_adhm(rng(), 1 + trial % 3, 2), y = adhm::random_adhm(rng(), 1 + trial % 4, 2);
        Rational c1(static_cast<long>(rng() % 5) - 2), c2(static_cast<long>(rng() % 5) - 2);
        if (c1 == 0 && c2 == 0) c1 = 1;
        if (adhm::spectrum_projection(adhm::direct_sum(x, y), c1, c2) ==
            adhm::concatenate(adhm::spectrum_projection(x, c1, c2), adhm::spectrum_projection(y, c1, c2)))
            ++concat;
        else
            rec.expect(false, "spectra do not concatenate on random pair " + std::to_string(trial));
    }
    rep.data["fixed_point_counts"] = counts;
    rep.data["random_ba_checked"] = ba;
    rep.data["random_direct_sums_checked"] = concat;
}

// ---------------------------------------------------------------- registry

using Runner = void (*)(CheckReport&, int, const CheckParams&);

struct Entry {
    CheckInfo info;
    Runner run;
};

const std::vector<Entry>& entries() {
    static const std::vector<Entry> e{
        {{"heisenberg", "fock", "[P^i_m, P^j_n] on Cartan and gl lattices, |m|,|n| <= degree",
          {"--max-degree", "--rank"}, 3, 4},
         heisenberg},
        {{"virasoro", "virasoro", "Feigin-Fuchs bracket |m|,|n| <= 3, highest weight, central charge",
          {"--max-degree"}, 3, 5},
         virasoro_check},
        {{"integral-virasoro", "virasoro", "~L bracket in the integral form, polynomial entries",
          {"--max-degree"}, 3, 5},
         integral_virasoro},
        {{"lehn", "virasoro", "[c_1, P_n] for |n| <= 3 and the spectrum of c_1", {"--max-degree"}, 3, 5}, lehn},
        {{"reflection", "rmatrix", "intertwining, R(a)R(sigma a) = 1, classical r, degree-1 eigenvalue",
          {"--max-degree"}, 2, 3},
         reflection},
        {{"expansion", "rmatrix", "R = 1 + (s/u) r + O(u^-2) for every convention", {"--max-degree"}, 3, 3},
         expansion},
        {{"ybe", "rmatrix", "Yang-Baxter residual, symbolic at degree 1 and five seeds", {"--max-degree", "--seed"}, 2, 2},
         ybe},
        {{"wlattice", "wlattice", "integrality, Vir in Heis index, sl3 intersections along a line",
          {"--max-degree", "--seed"}, 3, 5},
         wlattice_check},
        {{"kernel", "wlattice", "kernel of the diagonal annihilators against the IH series", {"--max-degree"}, 3, 5},
         kernel},
        {{"characters", "characters", "Gieseker and IH series, level-one multiplicity table", {"--max-degree", "--type"},
          10, 10},
         characters_check},
        {{"frenkel-kac", "characters", "level-one multiplicities against Fock dimensions, A_r",
          {"--max-degree", "--rank"}, 10, 10},
         frenkel_kac},
        {{"adhm", "adhm", "fixed points, monad complex, spectra of direct sums", {"--max-degree", "--seed", "--rank"}, 6,
          6},
         adhm_check},
    };
    return e;
}

const Entry& find_entry(const std::string& name) {
    for (const auto& e : entries())
        if (e.info.name == name) return e;
    throw std::invalid_argument("unknown check '" + name + "'");
}

}  // namespace

const std::vector<CheckInfo>& registry() {
    static const std::vector<CheckInfo> r = [] {
        std::vector<CheckInfo> out;
        for (const auto& e : entries()) out.push_back(e.info);
        return out;
    }();
    return r;
}

const CheckInfo& find_check(const std::string& name) { return find_entry(name).info; }

CheckReport run_check(const std::string& name, const CheckParams& params) {
    const Entry& e = find_entry(name);
    CheckReport rep;
    rep.check = name;
    rep.seed = params.seed;
    const int D = params.max_degree.value_or(e.info.full_degree);
    if (D < 0) throw std::invalid_argument("--max-degree must be nonnegative");
    rep.params["max_degree"] = D;
    if (params.type) rep.params["type"] = *params.type;
    const auto t0 = std::chrono::steady_clock::now();
    e.run(rep, D, params);
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.status = rep.witnesses.empty() ? Status::Pass : Status::Fail;
    return rep;
}

CheckReport run_ybe(int degree, std::uint64_t seed) {
    CheckReport rep;
    rep.check = "ybe";
    rep.seed = seed;
    rep.params["degree"] = degree;
    rep.params["convention"] = rmatrix::to_string(ReflectionConvention{});
    const auto t0 = std::chrono::steady_clock::now();
    Recorder rec{rep};
    Json seeds = Json::array();
    ybe_seed(rec, seeds, degree, seed);
    rep.data["params"] = seeds[0]["params"];
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.status = rep.witnesses.empty() ? Status::Pass : Status::Fail;
    return rep;
}

bool SuiteReport::ok() const {
    for (const auto& c : checks)
        if (!c.ok()) return false;
    return true;
}

SuiteReport run_suite(Profile profile, std::uint64_t seed, int jobs) {
    SuiteReport out{profile, {}};
    const auto& reg = registry();
    auto one = [&](std::size_t i) {
        CheckParams p;
        p.seed = seed;
        p.max_degree = profile == Profile::Quick ? reg[i].quick_degree : reg[i].full_degree;
        return run_check(reg[i].name, p);
    };
    if (jobs <= 1) {
        for (std::size_t i = 0; i < reg.size(); ++i) out.checks.push_back(one(i));
        return out;
    }
    out.checks.resize(reg.size());
    std::size_t next = 0;
    while (next < reg.size()) {
        std::vector<std::pair<std::size_t, std::future<CheckReport>>> batch;
        for (int k = 0; k < jobs && next < reg.size(); ++k, ++next)
            batch.emplace_back(next, std::async(std::launch::async, one, next));
        for (auto& [i, f] : batch) out.checks[i] = f.get();
    }
    return out;
}

Json to_json(const SuiteReport& s, bool timing) {
    Json checks = Json::array();
    for (const auto& c : s.checks) checks.push_back(to_json(c, timing));
    return {{"profile", to_string(s.profile)}, {"status", s.ok() ? "pass" : "fail"}, {"checks", checks}};
}

}  // namespace fockforge::cli
