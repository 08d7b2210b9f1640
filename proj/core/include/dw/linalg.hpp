#pragma once

#include "dw/matrix.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace dw {

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
    Matrix reduced;
    std::vector<std::size_t> pivots;
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);

/// Inverse of a square matrix; nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Symmetric positive-definite form. Construction is the only way to get
/// one, and it certifies positive-definiteness through an exact LDL^T
/// factorization whose pivots must all be strictly positive.
class GramForm {
public:
    /// Throws ValidationError if `m` is not symmetric or not positive-definite.
    explicit GramForm(Matrix m);
    static GramForm identity(std::size_t n);

    std::size_t dim() const noexcept { return matrix_.rows(); }
    const Matrix& matrix() const noexcept { return matrix_; }
    const Matrix& inverse() const noexcept { return inverse_; }
    /// Diagonal of D in G = L D L^T; all strictly positive.
    const Vector& pivots() const noexcept { return pivots_; }

    Rational inner(std::span<const Rational> u, std::span<const Rational> v) const;

    friend bool operator==(const GramForm& a, const GramForm& b) { return a.matrix_ == b.matrix_; }

private:
    Matrix matrix_;
    Matrix inverse_;
    Vector pivots_;
};

/// LDL^T pivots without pivoting, or nullopt when a zero pivot is reached
/// before the factorization completes. A symmetric matrix is positive
/// definite iff this succeeds with every pivot > 0.
std::optional<Vector> ldlt_pivots(const Matrix& symmetric);

/// A linear subspace of Q^ambient_dim, stored as a matrix whose columns form
/// a basis (linearly independent by construction).
class Subspace {
public:
    explicit Subspace(std::size_t ambient_dim) : basis_(ambient_dim, 0) {}
    /// Throws ValidationError if the columns of `basis` are dependent.
    explicit Subspace(Matrix basis);

    std::size_t ambient_dim() const noexcept { return basis_.rows(); }
    std::size_t dim() const noexcept { return basis_.cols(); }
    const Matrix& basis() const noexcept { return basis_; }

    bool contains(std::span<const Rational> v) const;
    /// Every basis vector of `other` lies in this subspace.
    bool contains(const Subspace& other) const;

private:
    struct Trusted {};
    Subspace(Matrix basis, Trusted) : basis_(std::move(basis)) {}
    friend Subspace kernel_basis(const Matrix&);
    friend Subspace image_basis(const Matrix&);

    Matrix basis_;
};

/// Basis of {v : m v = 0}; dimension cols(m) - rank(m).
Subspace kernel_basis(const Matrix& m);
/// Basis of the column space of m, taken from the pivot columns of m itself.
Subspace image_basis(const Matrix& m);

/// Some x with m x = b, or nullopt if b is outside the image of m.
/// Throws DimensionMismatch if b.size() != rows(m).
std::optional<Vector> solve(const Matrix& m, std::span<const Rational> b);

/// Adjoint of d : (dom, g_dom) -> (cod, g_cod), i.e. g_dom^{-1} d^T g_cod.
Matrix gram_adjoint(const Matrix& d, const GramForm& g_dom, const GramForm& g_cod);

/// g-orthogonal projector onto s: B (B^T G B)^{-1} B^T G.
Matrix orthogonal_projector(const Subspace& s, const GramForm& g);

/// Coordinates of each vector of the subspace spanned by `basis` with respect
/// to that basis, as the g-orthogonal left inverse (B^T G B)^{-1} B^T G.
Matrix orthogonal_coordinates(const Subspace& s, const GramForm& g);

}  // namespace dw
