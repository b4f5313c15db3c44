#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fockforge/exact/matrix.hpp"
#include "fockforge/exact/upoly.hpp"
#include "fockforge/exact/var_spec.hpp"
#include "json.hpp"

namespace fockforge::adhm {

using exact::Matrix;
using exact::Poly;
using exact::Rational;
using exact::UPoly;
using QMatrix = Matrix<Rational>;

/// Linear maps B1, B2 on V = Q^d, I: W -> V, J: V -> W with W = Q^r.
struct AdhmData {
    int d = 0;
    int r = 0;
    QMatrix B1, B2, I, J;

    /// Zero data of the given shape.
    static AdhmData zero(int d, int r);
    /// Throws std::invalid_argument on inconsistent shapes.
    void validate() const;
    friend bool operator==(const AdhmData&, const AdhmData&) = default;
};

/// Entries (k - 3)/q with k in 0..6, q in {1, 2}; I = J = 0 unless framed.
AdhmData random_adhm(std::uint64_t seed, int d, int r, bool framed = true);

/// [B1, B2] + I J.
QMatrix moment_map(const AdhmData& x);

/// No proper B1, B2-invariant subspace contains im I: the closure of the
/// columns of I under B1 and B2 is all of V.
bool is_stable(const AdhmData& x);

using Partition = std::vector<int>;
using PartitionTuple = std::vector<Partition>;

/// "2,1;;1" -> ((2,1), (), (1)).
PartitionTuple parse_partition_tuple(const std::string& s);
std::string to_string(const PartitionTuple& t);

/// All r-tuples of partitions of total size d.
std::vector<PartitionTuple> partition_tuples(int r, int d);

/// Monomial-ideal data. Boxes of lambda^(k) in row-major order form the
/// basis of V; B1 moves a box one step along its row, B2 one step down,
/// I sends framing vector slot[k] to the corner box of lambda^(k), J = 0.
/// Default slots: k -> k.
AdhmData fixed_point_data(const PartitionTuple& lambda, std::optional<std::vector<int>> slots = std::nullopt);

/// Entries are linear forms in z0, z1, z2 (variables 0, 1, 2 of vars()).
struct MonadMatrices {
    Matrix<Poly> a;  // (2d + r) x d
    Matrix<Poly> b;  // d x (2d + r)
    static const exact::VarSpec& vars();
};

MonadMatrices monad_matrices(const AdhmData& x);
/// b a - z0^2 mu, identically zero.
Matrix<Poly> ba_residual(const AdhmData& x);

/// det(x - M) by Faddeev-LeVerrier.
UPoly characteristic_polynomial(const QMatrix& M);

/// Roots of a characteristic polynomial: rational roots with
/// multiplicity, the rest as monic square-free factors with multiplicity.
struct Spectrum {
    UPoly charpoly;
    std::vector<std::pair<Rational, int>> roots;  // increasing
    std::vector<std::pair<UPoly, int>> residual;
    int size() const;
    friend bool operator==(const Spectrum&, const Spectrum&) = default;
};

Spectrum spectrum(const UPoly& charpoly);
/// Spectrum of c1 B1 + c2 B2; (c1, c2) must not both vanish.
Spectrum spectrum_projection(const AdhmData& x, const Rational& c1, const Rational& c2);
/// Multiset union.
Spectrum concatenate(const Spectrum& a, const Spectrum& b);

enum class SumMode {
    /// I stacked, J side by side: both summands see the same W.
    SharedFraming,
    /// Only the first summand is framed; the second must have I = J = 0.
    FirstCarriesFraming,
};

AdhmData direct_sum(const AdhmData& x, const AdhmData& y, SumMode mode = SumMode::SharedFraming);

/// Joint eigenvalues of commuting B1, B2 with multiplicity. Points whose
/// B1-eigenvalue is irrational are counted in `unsplit` only.
struct SupportCycle {
    std::vector<std::pair<std::pair<Rational, Rational>, int>> points;  // sorted
    int unsplit = 0;
};

/// Requires [B1, B2] = 0 (std::invalid_argument otherwise).
SupportCycle support_cycle(const AdhmData& x);

nlohmann::ordered_json to_json(const AdhmData& x);
AdhmData adhm_from_json(const nlohmann::ordered_json& j);

}  // namespace fockforge::adhm
