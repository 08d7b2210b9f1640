#pragma once

#include "dw/linalg.hpp"

#include <cstddef>
#include <vector>

namespace dw {

/// Finite cochain complex V^0 -> V^1 -> ... -> V^n with an inner product on
/// every degree. The constructor validates shapes and d_{k+1} d_k = 0, so
/// every instance is a genuine complex.
class CochainComplex {
public:
    /// `differentials[k]` maps degree k to degree k+1; its size must be
    /// grams.size() - 1. Throws ValidationError on any violated invariant.
    CochainComplex(std::vector<Matrix> differentials, std::vector<GramForm> grams);

    /// Complex with zero differentials and identity Gram forms.
    static CochainComplex trivial(const std::vector<std::size_t>& dims);

    std::size_t max_degree() const noexcept { return grams_.size() - 1; }
    std::size_t dim(std::size_t k) const { return grams_.at(k).dim(); }
    std::vector<std::size_t> dims() const;

    /// d_k : V^k -> V^{k+1}, 0 <= k < n.
    const Matrix& differential(std::size_t k) const;
    /// d_k^* : V^{k+1} -> V^k with respect to G_k and G_{k+1}.
    const Matrix& adjoint(std::size_t k) const;
    const GramForm& gram(std::size_t k) const;

    const std::vector<Matrix>& differentials() const noexcept { return differentials_; }
    const std::vector<GramForm>& grams() const noexcept { return grams_; }

    /// Appends a zero-dimensional degree n+1.
    CochainComplex extended() const;

    friend bool operator==(const CochainComplex& a, const CochainComplex& b) {
        return a.differentials_ == b.differentials_ && a.grams_ == b.grams_;
    }

private:
    void check_degree(std::size_t k) const;

    std::vector<Matrix> differentials_;
    std::vector<GramForm> grams_;
    std::vector<Matrix> adjoints_;
};

/// Orthogonal splitting V^k = Ker(Laplacian) + Im(d_{k-1}) + Im(d_k^*).
struct HodgeSplit {
    std::size_t degree = 0;
    Subspace harmonic{0};
    Subspace image_d{0};
    Subspace image_dstar{0};
};

/// d_k^* d_k + d_{k-1} d_{k-1}^*; the absent term is dropped at k = 0 and k = n.
Matrix laplacian(const CochainComplex& c, std::size_t k);
HodgeSplit hodge_decompose(const CochainComplex& c, std::size_t k);
/// G_k-orthogonal projector onto the harmonic subspace of degree k.
Matrix harmonic_projector(const CochainComplex& c, std::size_t k);
/// dim Ker d_k - rank d_{k-1}.
std::size_t cohomology_dim(const CochainComplex& c, std::size_t k);
std::vector<std::size_t> cohomology_dims(const CochainComplex& c);
long long euler_characteristic(const CochainComplex& c);
/// Alternating sum of the space dimensions.
long long dimension_euler_characteristic(const CochainComplex& c);

}  // namespace dw
