#pragma once

#include <functional>
#include <map>

#include "fockforge/fock/fock_vector.hpp"

namespace fockforge::fock {

/// Graded operator stored as one matrix per source degree d, mapping the
/// degree-d monomial basis of `source` to the degree d+shift basis of
/// `target`. Blocks landing in negative degree have zero rows.
class OperatorMatrix {
  public:
    using Action = std::function<FockVector(const FockVector&)>;

    OperatorMatrix(LatticePtr source, LatticePtr target, int shift);

    /// Tabulate `f` on every basis monomial of degree 0..max_degree.
    static OperatorMatrix from_action(LatticePtr source, LatticePtr target, int shift, int max_degree,
                                      const Action& f);
    static OperatorMatrix from_action(LatticePtr lattice, int shift, int max_degree, const Action& f) {
        return from_action(lattice, lattice, shift, max_degree, f);
    }
    static OperatorMatrix identity(LatticePtr lattice, int max_degree);

    const LatticePtr& source() const { return source_; }
    const LatticePtr& target() const { return target_; }
    int shift() const { return shift_; }
    const std::map<int, Matrix<RF>>& blocks() const { return blocks_; }
    bool has_block(int d) const { return blocks_.count(d) != 0; }
    const Matrix<RF>& block(int d) const;
    void set_block(int d, Matrix<RF> m);
    /// Largest stored source degree (-1 when empty).
    int max_degree() const { return blocks_.empty() ? -1 : blocks_.rbegin()->first; }

    FockVector apply(const FockVector& v) const;

    /// Composition a after b, on the source degrees where both are stored.
    friend OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
    /// Sums keep only degrees present in both operands.
    friend OperatorMatrix operator+(const OperatorMatrix& a, const OperatorMatrix& b);
    friend OperatorMatrix operator-(const OperatorMatrix& a, const OperatorMatrix& b);
    OperatorMatrix scaled(const RF& c) const;
    OperatorMatrix restricted(int max_degree) const;

    bool is_zero() const;
    /// First nonzero entry as (degree, row, col), for reports.
    std::optional<std::tuple<int, std::size_t, std::size_t>> first_nonzero() const;

    template <class F>
    OperatorMatrix map_entries(F&& f) const {
        OperatorMatrix out(source_, target_, shift_);
        for (const auto& [d, m] : blocks_) out.blocks_.emplace(d, m.map(f));
        return out;
    }

    friend bool operator==(const OperatorMatrix& a, const OperatorMatrix& b);

  private:
    LatticePtr source_;
    LatticePtr target_;
    int shift_;
    std::map<int, Matrix<RF>> blocks_;
};

OperatorMatrix commutator(const OperatorMatrix& a, const OperatorMatrix& b);

/// Lift an operator on a rank-one factor to `big`, acting on the modes of
/// generator `gen` and leaving the others alone. `gen` must be gram
/// orthogonal to every other generator of `big`.
OperatorMatrix act_on_factor(const OperatorMatrix& op, LatticePtr big, std::size_t gen, int max_degree);

}  // namespace fockforge::fock
