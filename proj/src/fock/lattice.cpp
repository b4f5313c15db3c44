#include "fockforge/fock/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace fockforge::fock {

const char* to_string(FormScale f) { return f == FormScale::Standard ? "standard" : "integral"; }

namespace {

bool before(const Mode& x, const Mode& y) { return x.n > y.n || (x.n == y.n && x.gen < y.gen); }

void partitions_rec(std::size_t colors, int remaining, Mode bound, ModeMonomial& cur,
                    std::vector<ModeMonomial>& out) {
    if (remaining == 0) {
        out.push_back(cur);
        return;
    }
    // Next mode must not come before `bound` in canonical order.
    for (int n = std::min(remaining, bound.n); n >= 1; --n) {
        int g0 = n == bound.n ? bound.gen : 0;
        for (int g = g0; g < static_cast<int>(colors); ++g) {
            cur.push_back({n, g});
            partitions_rec(colors, remaining - n, {n, g}, cur, out);
            cur.pop_back();
        }
    }
}

}  // namespace

int degree(const ModeMonomial& m) {
    int d = 0;
    for (const auto& x : m) d += x.n;
    return d;
}

ModeMonomial with_mode(ModeMonomial m, Mode x) {
    if (x.n < 1) throw std::invalid_argument("creation mode must be positive");
    auto pos = std::upper_bound(m.begin(), m.end(), x, before);
    m.insert(pos, x);
    return m;
}

ModeMonomial merge(const ModeMonomial& a, const ModeMonomial& b) {
    ModeMonomial out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), before);
    return out;
}

std::vector<ModeMonomial> colored_partitions(std::size_t colors, int d) {
    std::vector<ModeMonomial> out;
    if (d < 0) return out;
    if (d == 0) return {ModeMonomial{}};
    if (colors == 0) return out;
    ModeMonomial cur;
    partitions_rec(colors, d, {d, 0}, cur, out);
    return out;
}

std::size_t colored_partition_count(std::size_t colors, int d) {
    if (d < 0) return 0;
    // Euler transform of the constant sequence `colors`.
    std::vector<std::size_t> c(static_cast<std::size_t>(d) + 1, 0);
    c[0] = 1;
    for (int n = 1; n <= d; ++n) {
        for (std::size_t k = 0; k < colors; ++k) {
            for (int m = n; m <= d; ++m) c[static_cast<std::size_t>(m)] += c[static_cast<std::size_t>(m - n)];
        }
    }
    return c[static_cast<std::size_t>(d)];
}

Direction unit_direction(std::size_t rank, std::size_t i) {
    if (i >= rank) throw std::invalid_argument("generator index out of range");
    Direction d(rank, Rational(0));
    d[i] = 1;
    return d;
}

BosonLattice::BosonLattice(Matrix<Rational> gram, FormScale form, Equivariant params, std::vector<std::string> labels)
    : gram_(std::move(gram)), form_(form), params_(std::move(params)), labels_(std::move(labels)) {
    if (gram_.rows() != gram_.cols()) throw std::invalid_argument("gram matrix must be square");
    if (gram_.rows() == 0) throw std::invalid_argument("lattice must have positive rank");
    for (std::size_t i = 0; i < rank(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (gram_(i, j) != gram_(j, i)) throw std::invalid_argument("gram matrix must be symmetric");
    if (labels_.empty()) {
        for (std::size_t i = 0; i < rank(); ++i) labels_.push_back("P" + std::to_string(i + 1));
    }
    if (labels_.size() != rank()) throw std::invalid_argument("one label per generator");
    RF e1e2 = params_.e1e2();
    scale_ = form_ == FormScale::Standard ? e1e2.inverse() : e1e2;
}

Rational BosonLattice::pairing(const Direction& x, const Direction& y) const {
    if (x.size() != rank() || y.size() != rank()) throw std::invalid_argument("direction has wrong length");
    Rational s = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < rank(); ++j) s += x[i] * gram_(i, j) * y[j];
    }
    return s;
}

bool BosonLattice::compatible(const BosonLattice& o) const {
    return gram_ == o.gram_ && form_ == o.form_ && *params_.vars == *o.params_.vars && params_.e1 == o.params_.e1 &&
           params_.e2 == o.params_.e2;
}

BosonLattice BosonLattice::with_form(FormScale form) const { return BosonLattice(gram_, form, params_, labels_); }

LatticePtr make_lattice(Matrix<Rational> gram, FormScale form, Equivariant params, std::vector<std::string> labels) {
    return std::make_shared<const BosonLattice>(std::move(gram), form, std::move(params), std::move(labels));
}

Matrix<Rational> cartan_gram_a(std::size_t n) {
    Matrix<Rational> g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        g(i, i) = 2;
        if (i + 1 < n) g(i, i + 1) = g(i + 1, i) = -1;
    }
    return g;
}

}  // namespace fockforge::fock
