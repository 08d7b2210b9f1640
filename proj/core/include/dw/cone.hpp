#pragma once

#include "dw/complex.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace dw {

/// Finite-dimensional spaces A^0..A^{L-1} with inner products, and maps
/// gamma_k : V^k -> A^k out of a base complex. A^{k-1} is glued onto total
/// degree k. L is either n (the usual case) or n+1, in which case the base is
/// treated as having a zero-dimensional degree n+1.
class AugmentationData {
public:
    AugmentationData() = default;
    /// Throws ValidationError unless grams.size() == gammas.size() and each
    /// gamma_k has dim(A^k) rows.
    AugmentationData(std::vector<GramForm> grams, std::vector<Matrix> gammas);

    /// All a_k = 0, sized for `base`.
    static AugmentationData zero(const CochainComplex& base);

    std::size_t length() const noexcept { return grams_.size(); }
    std::size_t dim(std::size_t k) const { return k < grams_.size() ? grams_[k].dim() : 0; }
    std::vector<std::size_t> dims() const;
    const GramForm& gram(std::size_t k) const { return grams_.at(k); }
    const Matrix& gamma(std::size_t k) const { return gammas_.at(k); }
    const std::vector<GramForm>& grams() const noexcept { return grams_; }
    const std::vector<Matrix>& gammas() const noexcept { return gammas_; }

    friend bool operator==(const AugmentationData&, const AugmentationData&) = default;

private:
    std::vector<GramForm> grams_;
    std::vector<Matrix> gammas_;
};

/// Throws ValidationError if the augmentation does not fit the base: wrong
/// length, wrong gamma widths, or gamma_k d_{k-1} != 0.
void check_compatible(const CochainComplex& base, const AugmentationData& aug);

enum class Flavor { tilde, deformed };

struct DeformOptions {
    /// Precompose gamma_0 with the harmonic projector as in every other
    /// degree. When false, degree 0 uses gamma_0 unprojected.
    bool project_degree_zero = true;
};

/// Total complex T^k = V^k + A^{k-1} (orthogonal sum of the Gram forms) with
/// differential (w, a) -> (d w, gamma(X w)), X = identity (tilde) or the
/// harmonic projector (deformed).
struct AugmentedComplex {
    /// Base as used for the totals; extended by a zero degree when the
    /// augmentation has length n+1.
    CochainComplex base;
    AugmentationData aug;
    CochainComplex total;
    Flavor flavor = Flavor::tilde;
};

AugmentedComplex build_tilde_complex(const CochainComplex& base, const AugmentationData& aug);
AugmentedComplex build_deformed_complex(const CochainComplex& base, const AugmentationData& aug,
                                        DeformOptions options = {});

/// d_k restricted to Im(d_k^*), an isomorphism onto Im(d_k).
struct RestrictedIso {
    std::size_t degree = 0;
    Subspace source{0};  ///< Im(d_k^*) in V^k
    Subspace target{0};  ///< Im(d_k) in V^{k+1}
    Matrix forward;      ///< d_k * source.basis() == target.basis() * forward
    Matrix inverse;      ///< forward^{-1}
    /// Global V^{k+1} -> V^k map: orthogonal projection onto Im(d_k)
    /// followed by the inverse isomorphism.
    Matrix lift;
};

RestrictedIso iso_restricted_d(const CochainComplex& base, std::size_t k);

/// The unipotent chain maps between the deformed and tilde totals, one
/// matrix per total degree: (h, w1, w2, a) -> (h, w1, w2, a +/- gamma(I^{-1} w1)).
std::vector<Matrix> chain_map_m(const CochainComplex& base, const AugmentationData& aug, DeformOptions options = {});
std::vector<Matrix> chain_map_m_inverse(const CochainComplex& base, const AugmentationData& aug,
                                        DeformOptions options = {});

struct IdentityCheck {
    std::size_t degree = 0;
    bool pass = false;
    std::optional<EntryMismatch> mismatch;
};

struct ChainMapReport {
    std::vector<IdentityCheck> forward;    ///< m d = d~ m
    std::vector<IdentityCheck> backward;   ///< m^{-1} d~ = d m^{-1}
    std::vector<IdentityCheck> inverse;    ///< m m^{-1} = 1
    std::vector<IdentityCheck> unipotent;  ///< (m - 1)^2 = 0
    bool pass() const;
};

ChainMapReport verify_chain_maps(const CochainComplex& base, const AugmentationData& aug, DeformOptions options = {});

struct QuasiIsoReport {
    std::vector<std::size_t> base_cohomology;
    std::vector<std::size_t> tilde_cohomology;
    std::vector<std::size_t> deformed_cohomology;
    bool cohomology_agrees = false;
    long long chi_base = 0;
    long long chi_tilde = 0;
    long long chi_deformed = 0;
    /// sum_k (-1)^k a_k
    long long aug_alternating_sum = 0;
    bool euler_ledger_holds = false;
    bool pass() const { return cohomology_agrees && euler_ledger_holds; }
};

QuasiIsoReport verify_quasi_isomorphism(const CochainComplex& base, const AugmentationData& aug,
                                        DeformOptions options = {});

}  // namespace dw
