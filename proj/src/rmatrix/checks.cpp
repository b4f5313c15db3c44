#include "fockforge/rmatrix/checks.hpp"

#include <random>
#include <stdexcept>

namespace fockforge::rmatrix {

bool ExpansionReport::any_passes() const {
    for (const auto& c : candidates)
        if (c.passes()) return true;
    return false;
}

const ExpansionCandidate& ExpansionReport::find(const ReflectionConvention& c) const {
    for (const auto& x : candidates)
        if (x.convention.orientation == c.orientation && x.convention.normalization == c.normalization) return x;
    throw std::out_of_range("expansion_report: convention not tried");
}

namespace {

constexpr Orientation kOrientations[] = {Orientation::SourceSwapped, Orientation::TargetSwapped};
constexpr Normalization kNormalizations[] = {Normalization::Plus, Normalization::Minus, Normalization::PlusParity,
                                             Normalization::MinusParity};

// Compare X against Id + (s/u) r entrywise, in u = var 0.
ExpansionCandidate judge(const Matrix<RF>& X, const Matrix<RF>& r, const Equivariant& p, ReflectionConvention conv) {
    ExpansionCandidate out{conv, -1, {}};
    const auto& vars = *p.vars;
    int verified = 1;
    for (std::size_t i = 0; i < X.rows() && verified >= 0; ++i) {
        for (std::size_t j = 0; j < X.cols(); ++j) {
            auto e = exact::laurent_at_infinity(X(i, j), 0, 1);
            std::string where = "entry (" + std::to_string(i) + "," + std::to_string(j) + ")";
            if (!X(i, j).is_zero() && e.first_power < 0) {
                verified = -1;
                out.mismatch = where + " grows like u^" + std::to_string(-e.first_power);
                break;
            }
            RF c0 = e.coefficient(0);
            RF want0 = i == j ? RF(1) : RF(0);
            if (c0 != want0) {
                verified = -1;
                out.mismatch = where + " u^0: " + c0.to_string(vars) + " vs " + want0.to_string(vars);
                break;
            }
            RF c1 = e.coefficient(1);
            RF want1 = p.s() * r(i, j);
            if (verified == 1 && c1 != want1) {
                verified = 0;
                out.mismatch = where + " u^-1: " + c1.to_string(vars) + " vs " + want1.to_string(vars);
            }
        }
    }
    out.verified_order = verified;
    return out;
}

}  // namespace

ExpansionReport expansion_report(int d) {
    const auto p = Equivariant::spectral();
    ExpansionReport report;
    report.degree = d;
    const Matrix<RF> r = classical_r(p, d).block(d);
    for (auto o : kOrientations) {
        OperatorMatrix R = reflection(p, d, o);
        for (auto n : kNormalizations) {
            OperatorMatrix X = normalization_operator(R.source(), d, n) * R;
            auto cand = judge(X.block(d), r, p, {o, n});
            if (cand.passes() && !report.scalar_sign && (n == Normalization::Plus || n == Normalization::Minus)) {
                report.scalar_sign = n == Normalization::Plus ? 1 : -1;
                report.scalar_orientation = o;
            }
            report.candidates.push_back(std::move(cand));
        }
    }
    return report;
}

PairEmbedding::PairEmbedding(LatticePtr triple, std::size_t i, std::size_t j)
    : i_(i), j_(j), change_(triple, [&] {
          if (triple->rank() != 3 || i == j || i > 2 || j > 2) throw std::invalid_argument("PairEmbedding: bad pair");
          std::size_t k = 3 - i - j;
          Matrix<Rational> T(3, 3);
          T(0, i) = 1, T(0, j) = 1;
          T(1, i) = 1, T(1, j) = -1;
          T(2, k) = 1;
          return T;
      }(), true, {"D", "M", "Q"}) {}

OperatorMatrix PairEmbedding::lift(const OperatorMatrix& op, int max_degree) const {
    return change_.to_old(fock::act_on_factor(op, change_.new_lattice(), 1, max_degree), max_degree);
}

LatticePtr triple_lattice(const Equivariant& params) {
    if (params.a.size() != 3) throw std::invalid_argument("triple_lattice: need three Cartan parameters");
    return fock::make_lattice(Matrix<Rational>::identity(3), fock::FormScale::Standard, params, {"P1", "P2", "P3"});
}

OperatorMatrix pair_reflection(const Equivariant& params, std::size_t i, std::size_t j, int max_degree,
                               const ReflectionConvention& conv) {
    PairEmbedding emb(triple_lattice(params), i, j);
    return emb.lift(reflection(pair_params(params, i, j), max_degree, conv), max_degree);
}

OperatorMatrix ybe_residual(const Equivariant& params, int max_degree, const ReflectionConvention& conv) {
    auto L = triple_lattice(params);
    auto lift = [&](std::size_t i, std::size_t j) {
        PairEmbedding emb(L, i, j);
        return emb.lift(reflection(pair_params(params, i, j), max_degree, conv), max_degree);
    };
    OperatorMatrix R12 = lift(0, 1), R13 = lift(0, 2), R23 = lift(1, 2);
    return R12 * R13 * R23 - R23 * R13 * R12;
}

Equivariant ybe_seed_params(std::uint64_t seed, int max_degree) {
    std::mt19937_64 rng(seed);
    auto draw = [&] {
        long num = static_cast<long>(rng() % 41) - 20;
        long den = static_cast<long>(rng() % 5) + 1;
        Rational q(num, den);
        q.canonicalize();
        return q;
    };
    for (;;) {
        std::vector<Rational> a{draw(), draw(), draw()};
        Rational e1 = draw(), e2 = draw();
        if (a[0] == a[1] || a[0] == a[2] || a[1] == a[2] || e1 == 0 || e2 == 0) continue;
        Equivariant p = Equivariant::numeric(a, e1, e2);
        try {
            for (auto [i, j] : {std::pair{0, 1}, {0, 2}, {1, 2}})
                for (auto o : kOrientations)
                    (void)reflection(pair_params(p, static_cast<std::size_t>(i), static_cast<std::size_t>(j)),
                                     max_degree, o);
        } catch (const exact::PoleError&) {
            continue;
        } catch (const exact::SingularMatrix&) {
            continue;
        }
        return p;
    }
}

}  // namespace fockforge::rmatrix
