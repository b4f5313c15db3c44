#include "fockforge/wlattice/pid.hpp"

#include <random>
#include <stdexcept>

namespace fockforge::wlattice {

namespace {

void swap_columns(Matrix<UPoly>& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < m.rows(); ++r) std::swap(m(r, a), m(r, b));
}

void swap_rows(Matrix<UPoly>& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(a, c), m(b, c));
}

// col[dst] -= q * col[src]
void column_axpy(Matrix<UPoly>& m, std::size_t dst, std::size_t src, const UPoly& q) {
    for (std::size_t r = 0; r < m.rows(); ++r)
        if (!m(r, src).is_zero()) m(r, dst) -= q * m(r, src);
}

void row_axpy(Matrix<UPoly>& m, std::size_t dst, std::size_t src, const UPoly& q) {
    for (std::size_t c = 0; c < m.cols(); ++c)
        if (!m(src, c).is_zero()) m(dst, c) -= q * m(src, c);
}

}  // namespace

ColumnEchelon column_echelon(const Matrix<UPoly>& A) {
    ColumnEchelon out{A, Matrix<UPoly>::identity(A.cols()), 0};
    auto& H = out.H;
    auto& U = out.U;
    std::size_t c = 0;
    for (std::size_t r = 0; r < H.rows() && c < H.cols(); ++r) {
        for (;;) {
            // smallest-degree nonzero entry of row r among columns c..
            std::size_t best = H.cols();
            for (std::size_t j = c; j < H.cols(); ++j)
                if (!H(r, j).is_zero() && (best == H.cols() || H(r, j).degree() < H(r, best).degree())) best = j;
            if (best == H.cols()) break;
            swap_columns(H, c, best);
            swap_columns(U, c, best);
            bool clean = true;
            for (std::size_t j = c + 1; j < H.cols(); ++j) {
                if (H(r, j).is_zero()) continue;
                UPoly q = H(r, j).divmod(H(r, c)).first;
                column_axpy(H, j, c, q);
                column_axpy(U, j, c, q);
                if (!H(r, j).is_zero()) clean = false;
            }
            if (clean) {
                ++c;
                break;
            }
        }
    }
    out.rank = c;
    return out;
}

Matrix<UPoly> kernel_basis(const Matrix<UPoly>& A) {
    auto e = column_echelon(A);
    Matrix<UPoly> K(A.cols(), A.cols() - e.rank);
    for (std::size_t j = e.rank; j < A.cols(); ++j)
        for (std::size_t i = 0; i < A.cols(); ++i) K(i, j - e.rank) = e.U(i, j);
    return K;
}

std::vector<UPoly> smith_divisors(Matrix<UPoly> A) {
    std::vector<UPoly> out;
    const std::size_t n = std::min(A.rows(), A.cols());
    for (std::size_t t = 0; t < n; ++t) {
        for (;;) {
            std::size_t bi = A.rows(), bj = A.cols();
            for (std::size_t i = t; i < A.rows(); ++i)
                for (std::size_t j = t; j < A.cols(); ++j)
                    if (!A(i, j).is_zero() && (bi == A.rows() || A(i, j).degree() < A(bi, bj).degree())) bi = i, bj = j;
            if (bi == A.rows()) return out;
            swap_rows(A, t, bi);
            swap_columns(A, t, bj);
            bool clean = true;
            for (std::size_t i = t + 1; i < A.rows(); ++i) {
                if (A(i, t).is_zero()) continue;
                row_axpy(A, i, t, A(i, t).divmod(A(t, t)).first);
                if (!A(i, t).is_zero()) clean = false;
            }
            for (std::size_t j = t + 1; j < A.cols(); ++j) {
                if (A(t, j).is_zero()) continue;
                column_axpy(A, j, t, A(t, j).divmod(A(t, t)).first);
                if (!A(t, j).is_zero()) clean = false;
            }
            if (!clean) continue;
            // pivot must divide the rest of the block
            std::size_t bad = A.rows();
            for (std::size_t i = t + 1; i < A.rows() && bad == A.rows(); ++i)
                for (std::size_t j = t + 1; j < A.cols(); ++j)
                    if (!A(i, j).divmod(A(t, t)).second.is_zero()) {
                        bad = i;
                        break;
                    }
            if (bad == A.rows()) break;
            row_axpy(A, t, bad, UPoly(-1));
        }
        out.push_back(A(t, t).monic());
    }
    return out;
}

LineSpecialization::LineSpecialization(exact::VarSpecPtr vars, std::uint64_t seed)
    : vars_(std::move(vars)), seed_(seed) {
    std::mt19937_64 rng(seed);
    auto draw = [&](bool nonzero) {
        for (;;) {
            long num = static_cast<long>(rng() % 19) - 9;
            long den = static_cast<long>(rng() % 3) + 1;
            if (nonzero && num == 0) continue;
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
    };
    for (std::size_t k = 0; k < vars_->size(); ++k) {
        Rational c0 = draw(false);
        Rational c1 = draw(true);
        images_.push_back(UPoly(std::vector<Rational>{c0, c1}));
    }
}

LineSpecialization::LineSpecialization(exact::VarSpecPtr vars, std::vector<UPoly> images)
    : vars_(std::move(vars)), seed_(0), images_(std::move(images)) {
    if (images_.size() != vars_->size()) throw std::invalid_argument("line specialization: one image per variable");
}

UPoly LineSpecialization::apply(const exact::Poly& p) const {
    UPoly out;
    for (const auto& term : p.terms()) {
        UPoly x(term.coeff);
        for (std::size_t k = 0; k < images_.size(); ++k)
            if (unsigned e = term.mono.exponent(k)) x *= images_[k].pow(e);
        out += x;
    }
    return out;
}

UPoly LineSpecialization::apply(const RF& x) const {
    if (!x.is_polynomial()) throw std::domain_error("line specialization: coefficient is not a polynomial");
    return apply(x.numerator()).scaled(Rational(Rational(1) / x.denominator().constant_term()));
}

Matrix<UPoly> LineSpecialization::apply(const Matrix<RF>& m) const {
    return m.map([&](const RF& x) { return apply(x); });
}

}  // namespace fockforge::wlattice
