#include "fockforge/fock/operator_matrix.hpp"

#include <stdexcept>

namespace fockforge::fock {

namespace {

void require_same(const LatticePtr& x, const LatticePtr& y, const char* what) {
    if (x != y && !x->compatible(*y)) throw std::invalid_argument(what);
}

}  // namespace

OperatorMatrix::OperatorMatrix(LatticePtr source, LatticePtr target, int shift)
    : source_(std::move(source)), target_(std::move(target)), shift_(shift) {
    if (!source_ || !target_) throw std::invalid_argument("OperatorMatrix: null lattice");
}

OperatorMatrix OperatorMatrix::from_action(LatticePtr source, LatticePtr target, int shift, int max_degree,
                                           const Action& f) {
    OperatorMatrix out(source, target, shift);
    for (int d = 0; d <= max_degree; ++d) {
        auto src = source->basis(d);
        auto tgt = target->basis(d + shift);
        Matrix<RF> m(tgt.size(), src.size());
        for (std::size_t j = 0; j < src.size(); ++j) {
            FockVector img = f(FockVector::monomial(src[j]));
            if (img.is_zero()) continue;
            if (tgt.empty()) throw std::logic_error("from_action: image in negative degree");
            auto col = coordinates(tgt, img);
            for (std::size_t i = 0; i < tgt.size(); ++i) m(i, j) = std::move(col[i]);
        }
        out.blocks_.emplace(d, std::move(m));
    }
    return out;
}

OperatorMatrix OperatorMatrix::identity(LatticePtr lattice, int max_degree) {
    OperatorMatrix out(lattice, lattice, 0);
    for (int d = 0; d <= max_degree; ++d) out.blocks_.emplace(d, Matrix<RF>::identity(lattice->graded_dimension(d)));
    return out;
}

const Matrix<RF>& OperatorMatrix::block(int d) const {
    auto it = blocks_.find(d);
    if (it == blocks_.end()) throw std::out_of_range("OperatorMatrix: degree " + std::to_string(d) + " not stored");
    return it->second;
}

void OperatorMatrix::set_block(int d, Matrix<RF> m) {
    if (m.cols() != source_->graded_dimension(d) || m.rows() != target_->graded_dimension(d + shift_))
        throw std::invalid_argument("OperatorMatrix: block shape does not match graded dimensions");
    blocks_[d] = std::move(m);
}

FockVector OperatorMatrix::apply(const FockVector& v) const {
    // Split by degree, apply each block.
    std::map<int, FockVector> parts;
    for (const auto& [m, c] : v.terms()) parts[degree(m)].add(m, c);
    FockVector out;
    for (const auto& [d, part] : parts) {
        const auto& mat = block(d);
        auto src = source_->basis(d);
        auto tgt = target_->basis(d + shift_);
        auto x = coordinates(src, part);
        std::vector<RF> y(tgt.size());
        for (std::size_t i = 0; i < tgt.size(); ++i)
            for (std::size_t j = 0; j < src.size(); ++j)
                if (!mat(i, j).is_zero() && !x[j].is_zero()) y[i] += mat(i, j) * x[j];
        out += from_coordinates(tgt, y);
    }
    return out;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same(a.source_, b.target_, "composition: lattices do not match");
    OperatorMatrix out(b.source_, a.target_, a.shift_ + b.shift_);
    for (const auto& [d, mb] : b.blocks_) {
        int mid = d + b.shift_;
        if (mid < 0) {
            out.blocks_.emplace(d, Matrix<RF>(out.target_->graded_dimension(d + out.shift_), mb.cols()));
            continue;
        }
        auto it = a.blocks_.find(mid);
        if (it == a.blocks_.end()) continue;
        out.blocks_.emplace(d, it->second * mb);
    }
    return out;
}

OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b) {
    require_same(a.source_, b.source_, "sum: source lattices do not match");
    require_same(a.target_, b.target_, "sum: target lattices do not match");
    if (a.shift_ != b.shift_) throw std::invalid_argument("sum: degree shifts differ");
    OperatorMatrix out(a.source_, a.target_, a.shift_);
    for (const auto& [d, ma] : a.blocks_) {
        auto it = b.blocks_.find(d);
        if (it != b.blocks_.end()) out.blocks_.emplace(d, ma + it->second);
    }
    return out;
}

OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b) { return a + b.scaled(RF(-1)); }

OperatorMatrix OperatorMatrix::scaled(const RF& c) const {
    OperatorMatrix out(source_, target_, shift_);
    for (const auto& [d, m] : blocks_) out.blocks_.emplace(d, m.scaled(c));
    return out;
}

OperatorMatrix OperatorMatrix::restricted(int max_degree) const {
    OperatorMatrix out(source_, target_, shift_);
    for (const auto& [d, m] : blocks_)
        if (d <= max_degree) out.blocks_.emplace(d, m);
    return out;
}

bool OperatorMatrix::is_zero() const {
    for (const auto& [d, m] : blocks_)
        if (!m.is_zero()) return false;
    return true;
}

std::optional<std::tuple<int, std::size_t, std::size_t>> OperatorMatrix::first_nonzero() const {
    for (const auto& [d, m] : blocks_)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                if (!m(i, j).is_zero()) return std::tuple{d, i, j};
    return std::nullopt;
}

bool operator==(const OperatorMatrix& a, const OperatorMatrix& b) {
    return a.shift_ == b.shift_ && (a.source_ == b.source_ || a.source_->compatible(*b.source_)) &&
           (a.target_ == b.target_ || a.target_->compatible(*b.target_)) && a.blocks_ == b.blocks_;
}

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b) { return a * b - b * a; }

OperatorMatrix act_on_factor(const OperatorMatrix& op, LatticePtr big, std::size_t gen, int max_degree) {
    if (op.source()->rank() != 1 || op.target()->rank() != 1)
        throw std::invalid_argument("act_on_factor: operator must live on a rank-one factor");
    if (gen >= big->rank()) throw std::invalid_argument("act_on_factor: generator out of range");
    for (std::size_t j = 0; j < big->rank(); ++j)
        if (j != gen && big->gram()(gen, j) != 0)
            throw std::invalid_argument("act_on_factor: generator is not orthogonal to the rest");
    const int g = static_cast<int>(gen);
    return OperatorMatrix::from_action(big, op.shift(), max_degree, [&](const FockVector& v) {
        FockVector out;
        for (const auto& [m, c] : v.terms()) {
            ModeMonomial mine, rest;
            for (const auto& x : m) {
                if (x.gen == g)
                    mine.push_back({x.n, 0});
                else
                    rest.push_back(x);
            }
            FockVector img = op.apply(FockVector::monomial(mine));
            for (const auto& [mm, cc] : img.terms()) {
                ModeMonomial lifted;
                for (const auto& x : mm) lifted.push_back({x.n, g});
                out.add(merge(lifted, rest), c * cc);
            }
        }
        return out;
    });
}

}  // namespace fockforge::fock
