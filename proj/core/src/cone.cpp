#include "dw/cone.hpp"

#include "dw/error.hpp"

namespace dw {

namespace {

std::string idx(const char* name, std::size_t k) { return std::string(name) + "[" + std::to_string(k) + "]"; }

// Base complex padded to the augmentation length, paired with the augmentation.
struct Prepared {
    CochainComplex base;
    const AugmentationData& aug;
};

Prepared prepare(const CochainComplex& base, const AugmentationData& aug) {
    check_compatible(base, aug);
    if (aug.length() == base.max_degree() + 1) return {base.extended(), aug};
    return {base, aug};
}

Matrix total_differential(const Prepared& p, std::size_t k, const Matrix& gamma_source) {
    const std::size_t v_k = p.base.dim(k), v_next = p.base.dim(k + 1);
    const std::size_t a_prev = k > 0 ? p.aug.dim(k - 1) : 0, a_k = p.aug.dim(k);
    Matrix d(v_next + a_k, v_k + a_prev);
    d.set_block(0, 0, p.base.differential(k));
    d.set_block(v_next, 0, p.aug.gamma(k) * gamma_source);
    return d;
}

GramForm total_gram(const Prepared& p, std::size_t k) {
    if (k == 0) return p.base.gram(0);
    return GramForm(block_diagonal(p.base.gram(k).matrix(), p.aug.gram(k - 1).matrix()));
}

AugmentedComplex assemble(Prepared p, Flavor flavor, DeformOptions options) {
    const std::size_t n = p.base.max_degree();
    std::vector<Matrix> ds;
    std::vector<GramForm> gs;
    for (std::size_t k = 0; k <= n; ++k) {
        gs.push_back(total_gram(p, k));
        if (k == n) break;
        bool project = flavor == Flavor::deformed && (k > 0 || options.project_degree_zero);
        Matrix source = project ? harmonic_projector(p.base, k) : Matrix::identity(p.base.dim(k));
        ds.push_back(total_differential(p, k, source));
    }
    CochainComplex total(std::move(ds), std::move(gs));
    return AugmentedComplex{std::move(p.base), p.aug, std::move(total), flavor};
}

std::vector<Matrix> chain_maps(const Prepared& p, const Rational& sign, DeformOptions options) {
    const std::size_t n = p.base.max_degree();
    std::vector<Matrix> ms;
    for (std::size_t k = 0; k <= n; ++k) {
        const std::size_t a_prev = k > 0 ? p.aug.dim(k - 1) : 0;
        Matrix m = Matrix::identity(p.base.dim(k) + a_prev);
        // With an unprojected gamma_0 the degree-1 differentials already agree.
        if (k > 0 && (k > 1 || options.project_degree_zero) && a_prev > 0) {
            Matrix correction = p.aug.gamma(k - 1) * iso_restricted_d(p.base, k - 1).lift;
            m.set_block(p.base.dim(k), 0, correction * sign);
        }
        ms.push_back(std::move(m));
    }
    return ms;
}

IdentityCheck check_equal(std::size_t degree, const Matrix& lhs, const Matrix& rhs) {
    auto mm = first_mismatch(lhs, rhs);
    return IdentityCheck{degree, !mm.has_value(), std::move(mm)};
}

bool all_pass(const std::vector<IdentityCheck>& v) {
    for (const auto& c : v)
        if (!c.pass) return false;
    return true;
}

long long alternating(const std::vector<std::size_t>& xs) {
    long long s = 0;
    for (std::size_t k = 0; k < xs.size(); ++k) s += (k % 2 ? -1 : 1) * static_cast<long long>(xs[k]);
    return s;
}

}  // namespace

AugmentationData::AugmentationData(std::vector<GramForm> grams, std::vector<Matrix> gammas)
    : grams_(std::move(grams)), gammas_(std::move(gammas)) {
    if (grams_.size() != gammas_.size())
        throw ValidationError("augmentation_shape",
                              std::to_string(grams_.size()) + " A-space forms but " + std::to_string(gammas_.size()) +
                                  " gamma maps",
                              "gammas");
    for (std::size_t k = 0; k < gammas_.size(); ++k)
        if (gammas_[k].rows() != grams_[k].dim())
            throw ValidationError("augmentation_shape",
                                  "gamma_" + std::to_string(k) + " has " + std::to_string(gammas_[k].rows()) +
                                      " rows, A^" + std::to_string(k) + " has dim " + std::to_string(grams_[k].dim()),
                                  idx("gammas", k));
}

AugmentationData AugmentationData::zero(const CochainComplex& base) {
    std::vector<GramForm> gs;
    std::vector<Matrix> gammas;
    for (std::size_t k = 0; k < base.max_degree(); ++k) {
        gs.push_back(GramForm::identity(0));
        gammas.emplace_back(0, base.dim(k));
    }
    return AugmentationData(std::move(gs), std::move(gammas));
}

std::vector<std::size_t> AugmentationData::dims() const {
    std::vector<std::size_t> out;
    for (const auto& g : grams_) out.push_back(g.dim());
    return out;
}

void check_compatible(const CochainComplex& base, const AugmentationData& aug) {
    const std::size_t n = base.max_degree();
    if (aug.length() != n && aug.length() != n + 1)
        throw ValidationError("augmentation_length",
                              "augmentation has " + std::to_string(aug.length()) + " spaces, base has max degree " +
                                  std::to_string(n) + " (expected n or n+1)",
                              "gammas");
    for (std::size_t k = 0; k < aug.length(); ++k) {
        if (aug.gamma(k).cols() != base.dim(k))
            throw ValidationError("augmentation_shape",
                                  "gamma_" + std::to_string(k) + " has " + std::to_string(aug.gamma(k).cols()) +
                                      " columns, V^" + std::to_string(k) + " has dim " + std::to_string(base.dim(k)),
                                  idx("gammas", k));
        if (k > 0 && !(aug.gamma(k) * base.differential(k - 1)).is_zero())
            throw ValidationError("gamma_kills_image", "gamma_" + std::to_string(k) + " d_" + std::to_string(k - 1) + " != 0",
                                  idx("gammas", k));
    }
}

AugmentedComplex build_tilde_complex(const CochainComplex& base, const AugmentationData& aug) {
    return assemble(prepare(base, aug), Flavor::tilde, {});
}

AugmentedComplex build_deformed_complex(const CochainComplex& base, const AugmentationData& aug,
                                        DeformOptions options) {
    return assemble(prepare(base, aug), Flavor::deformed, options);
}

RestrictedIso iso_restricted_d(const CochainComplex& base, std::size_t k) {
    if (k >= base.max_degree())
        throw DegreeOutOfRange("iso_restricted_d: degree " + std::to_string(k) + " has no outgoing differential");
    RestrictedIso iso;
    iso.degree = k;
    iso.source = image_basis(base.adjoint(k));
    iso.target = image_basis(base.differential(k));
    if (iso.source.dim() != iso.target.dim()) throw InternalError("rank of d and d* differ");
    const Matrix image = base.differential(k) * iso.source.basis();
    const Matrix coords = orthogonal_coordinates(iso.target, base.gram(k + 1));
    iso.forward = coords * image;
    auto inv = inverse(iso.forward);
    if (!inv) throw InternalError("d restricted to Im(d*) is not injective in degree " + std::to_string(k));
    iso.inverse = std::move(*inv);
    iso.lift = iso.source.basis() * (iso.inverse * coords);
    return iso;
}

std::vector<Matrix> chain_map_m(const CochainComplex& base, const AugmentationData& aug, DeformOptions options) {
    return chain_maps(prepare(base, aug), Rational(1), options);
}

std::vector<Matrix> chain_map_m_inverse(const CochainComplex& base, const AugmentationData& aug,
                                        DeformOptions options) {
    return chain_maps(prepare(base, aug), Rational(-1), options);
}

bool ChainMapReport::pass() const {
    return all_pass(forward) && all_pass(backward) && all_pass(inverse) && all_pass(unipotent);
}

ChainMapReport verify_chain_maps(const CochainComplex& base, const AugmentationData& aug, DeformOptions options) {
    Prepared p = prepare(base, aug);
    const auto tilde = assemble(p, Flavor::tilde, options);
    const auto deformed = assemble(p, Flavor::deformed, options);
    const auto m = chain_maps(p, Rational(1), options);
    const auto m_inv = chain_maps(p, Rational(-1), options);

    ChainMapReport report;
    const std::size_t n = tilde.total.max_degree();
    for (std::size_t k = 0; k < n; ++k) {
        const Matrix& dt = tilde.total.differential(k);
        const Matrix& dd = deformed.total.differential(k);
        report.forward.push_back(check_equal(k, m[k + 1] * dd, dt * m[k]));
        report.backward.push_back(check_equal(k, m_inv[k + 1] * dt, dd * m_inv[k]));
    }
    for (std::size_t k = 0; k <= n; ++k) {
        const Matrix id = Matrix::identity(m[k].rows());
        report.inverse.push_back(check_equal(k, m[k] * m_inv[k], id));
        const Matrix nil = m[k] - id;
        report.unipotent.push_back(check_equal(k, nil * nil, Matrix::zero(id.rows(), id.cols())));
    }
    return report;
}

QuasiIsoReport verify_quasi_isomorphism(const CochainComplex& base, const AugmentationData& aug,
                                        DeformOptions options) {
    Prepared p = prepare(base, aug);
    const auto tilde = assemble(p, Flavor::tilde, options);
    const auto deformed = assemble(p, Flavor::deformed, options);

    QuasiIsoReport r;
    r.base_cohomology = cohomology_dims(p.base);
    r.tilde_cohomology = cohomology_dims(tilde.total);
    r.deformed_cohomology = cohomology_dims(deformed.total);
    r.cohomology_agrees = r.tilde_cohomology == r.deformed_cohomology;
    r.chi_base = alternating(r.base_cohomology);
    r.chi_tilde = alternating(r.tilde_cohomology);
    r.chi_deformed = alternating(r.deformed_cohomology);
    r.aug_alternating_sum = alternating(aug.dims());
    const long long expected = r.chi_base - r.aug_alternating_sum;
    r.euler_ledger_holds = r.chi_tilde == expected && r.chi_deformed == expected;
    return r;
}

}  // namespace dw
