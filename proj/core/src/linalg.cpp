#include "dw/linalg.hpp"

#include "dw/error.hpp"

namespace dw {

RowEchelon row_reduce(Matrix m) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    Rational factor;
    for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
        std::size_t p = row;
        while (p < m.rows() && sgn(m(p, col)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != row)
            for (std::size_t c = col; c < m.cols(); ++c) swap(m(p, c), m(row, c));
        Rational inv = 1 / m(row, col);
        for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || sgn(m(r, col)) == 0) continue;
            factor = m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (sgn(m(row, c)) != 0) m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::optional<Matrix> inverse(const Matrix& m) {
    if (!m.square()) throw DimensionMismatch("inverse of non-square matrix");
    const std::size_t n = m.rows();
    auto ech = row_reduce(hstack(m, Matrix::identity(n)));
    if (ech.pivots.size() < n || (n > 0 && ech.pivots[n - 1] != n - 1)) return std::nullopt;
    return ech.reduced.block(0, n, n, n);
}

std::optional<Vector> ldlt_pivots(const Matrix& a) {
    if (!a.square()) throw DimensionMismatch("LDL^T of non-square matrix");
    const std::size_t n = a.rows();
    // Work on the Schur complements directly: after step k the trailing block
    // holds A_{k+1..} - L D L^T restricted to it.
    Matrix s = a;
    Vector pivots(n);
    for (std::size_t k = 0; k < n; ++k) {
        if (sgn(s(k, k)) == 0) return std::nullopt;
        pivots[k] = s(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            if (sgn(s(i, k)) == 0) continue;
            Rational l = s(i, k) / s(k, k);
            for (std::size_t j = k + 1; j <= i; ++j) {
                s(i, j) -= l * s(k, j);
                s(j, i) = s(i, j);
            }
        }
    }
    return pivots;
}

GramForm::GramForm(Matrix m) : matrix_(std::move(m)) {
    if (!matrix_.is_symmetric())
        throw ValidationError("gram_symmetric", "Gram matrix must be square and symmetric");
    auto piv = ldlt_pivots(matrix_);
    if (!piv) throw ValidationError("gram_positive_definite", "LDL^T hit a zero pivot");
    for (std::size_t i = 0; i < piv->size(); ++i)
        if (sgn((*piv)[i]) <= 0)
            throw ValidationError("gram_positive_definite",
                                  "LDL^T pivot " + std::to_string(i) + " is " + (*piv)[i].get_str() + " <= 0");
    pivots_ = std::move(*piv);
    auto inv = dw::inverse(matrix_);
    if (!inv) throw InternalError("positive-definite Gram matrix reported singular");
    inverse_ = std::move(*inv);
}

GramForm GramForm::identity(std::size_t n) { return GramForm(Matrix::identity(n)); }

Rational GramForm::inner(std::span<const Rational> u, std::span<const Rational> v) const {
    if (u.size() != dim() || v.size() != dim()) throw DimensionMismatch("inner product size mismatch");
    Vector gv = matrix_ * v;
    Rational s;
    for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * gv[i];
    return s;
}

Subspace::Subspace(Matrix basis) : basis_(std::move(basis)) {
    if (rank(basis_) != basis_.cols())
        throw ValidationError("subspace_basis_independent", "basis columns are linearly dependent");
}

bool Subspace::contains(std::span<const Rational> v) const {
    if (v.size() != ambient_dim()) throw DimensionMismatch("vector length != ambient dimension");
    return solve(basis_, v).has_value();
}

bool Subspace::contains(const Subspace& other) const {
    if (other.ambient_dim() != ambient_dim()) throw DimensionMismatch("ambient dimension mismatch");
    return rank(hstack(basis_, other.basis_)) == dim();
}

Subspace kernel_basis(const Matrix& m) {
    auto ech = row_reduce(m);
    const std::size_t n = m.cols();
    std::vector<bool> is_pivot(n, false);
    for (auto p : ech.pivots) is_pivot[p] = true;
    Matrix basis(n, n - ech.pivots.size());
    std::size_t out = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        basis(free, out) = 1;
        for (std::size_t r = 0; r < ech.pivots.size(); ++r) basis(ech.pivots[r], out) = -ech.reduced(r, free);
        ++out;
    }
    return Subspace(std::move(basis), Subspace::Trusted{});
}

Subspace image_basis(const Matrix& m) {
    auto ech = row_reduce(m);
    Matrix basis(m.rows(), ech.pivots.size());
    for (std::size_t j = 0; j < ech.pivots.size(); ++j)
        for (std::size_t r = 0; r < m.rows(); ++r) basis(r, j) = m(r, ech.pivots[j]);
    return Subspace(std::move(basis), Subspace::Trusted{});
}

std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b) {
    if (b.size() != m.rows())
        throw DimensionMismatch("solve: rhs length " + std::to_string(b.size()) + " != rows " +
                                std::to_string(m.rows()));
    Matrix aug(m.rows(), m.cols() + 1);
    aug.set_block(0, 0, m);
    for (std::size_t r = 0; r < m.rows(); ++r) aug(r, m.cols()) = b[r];
    auto ech = row_reduce(std::move(aug));
    if (!ech.pivots.empty() && ech.pivots.back() == m.cols()) return std::nullopt;
    Vector x(m.cols());
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) x[ech.pivots[r]] = ech.reduced(r, m.cols());
    return x;
}

Matrix gram_adjoint(const Matrix& d, const GramForm& g_dom, const GramForm& g_cod) {
    if (d.cols() != g_dom.dim() || d.rows() != g_cod.dim())
        throw DimensionMismatch("gram_adjoint: map is " + std::to_string(d.rows()) + "x" +
                                std::to_string(d.cols()) + ", forms have dims " + std::to_string(g_dom.dim()) +
                                " and " + std::to_string(g_cod.dim()));
    return g_dom.inverse() * (d.transpose() * g_cod.matrix());
}

Matrix orthogonal_coordinates(const Subspace& s, const GramForm& g) {
    if (s.ambient_dim() != g.dim()) throw DimensionMismatch("orthogonal_coordinates: ambient != form dim");
    const Matrix btg = s.basis().transpose() * g.matrix();
    auto small = inverse(btg * s.basis());
    if (!small) throw InternalError("restricted Gram matrix is singular");
    return *small * btg;
}

Matrix orthogonal_projector(const Subspace& s, const GramForm& g) {
    if (s.ambient_dim() != g.dim()) throw DimensionMismatch("orthogonal_projector: ambient != form dim");
    return s.basis() * orthogonal_coordinates(s, g);
}

}  // namespace dw
