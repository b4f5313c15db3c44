#include "fockforge/fock/change.hpp"

#include <stdexcept>

namespace fockforge::fock {

namespace {

// Multilinear expansion: each creation operator of a monomial is replaced
// by the combination given by one row of `rows`.
FockVector expand(const BosonLattice& target, const Matrix<Rational>& rows, const FockVector& v) {
    FockVector out;
    for (const auto& [m, c] : v.terms()) {
        FockVector acc = FockVector::vacuum().scaled(c);
        for (const auto& x : m) {
            Direction dir(rows.cols());
            for (std::size_t b = 0; b < rows.cols(); ++b) dir[b] = rows(static_cast<std::size_t>(x.gen), b);
            acc = create(target, dir, x.n, acc);
        }
        out += acc;
    }
    return out;
}

}  // namespace

GeneratorChange::GeneratorChange(LatticePtr old_lattice, Matrix<Rational> T, bool invertible,
                                 std::vector<std::string> labels)
    : old_(std::move(old_lattice)), t_(std::move(T)) {
    if (t_.cols() != old_->rank()) throw std::invalid_argument("change_of_generators: T has wrong width");
    if (invertible) {
        if (t_.rows() != t_.cols()) throw std::invalid_argument("change_of_generators: T must be square");
        t_inv_ = exact::inverse(t_);  // throws SingularMatrix
    }
    Matrix<Rational> g = t_ * old_->gram() * t_.transpose();
    new_ = make_lattice(std::move(g), old_->form(), old_->params(), std::move(labels));
}

FockVector GeneratorChange::to_old(const FockVector& v) const { return expand(*old_, t_, v); }

FockVector GeneratorChange::to_new(const FockVector& v) const {
    if (!t_inv_) throw std::logic_error("change_of_generators: inverse transport needs an invertible T");
    return expand(*new_, *t_inv_, v);
}

Direction GeneratorChange::direction(std::size_t a) const {
    Direction d(t_.cols());
    for (std::size_t b = 0; b < t_.cols(); ++b) d[b] = t_(a, b);
    return d;
}

OperatorMatrix GeneratorChange::to_old(const OperatorMatrix& op, int max_degree) const {
    return OperatorMatrix::from_action(old_, op.shift(), max_degree,
                                       [&](const FockVector& v) { return to_old(op.apply(to_new(v))); });
}

GeneratorChange change_of_generators(const Matrix<Rational>& T, LatticePtr L) {
    return GeneratorChange(std::move(L), T, T.rows() == T.cols());
}

}  // namespace fockforge::fock
