#include "dw/complex.hpp"

#include "dw/error.hpp"

namespace dw {

namespace {

std::string degree_field(const char* name, std::size_t k) { return std::string(name) + "[" + std::to_string(k) + "]"; }

}  // namespace

CochainComplex::CochainComplex(std::vector<Matrix> differentials, std::vector<GramForm> grams)
    : differentials_(std::move(differentials)), grams_(std::move(grams)) {
    if (grams_.empty()) throw ValidationError("complex_nonempty", "a complex needs at least degree 0");
    if (differentials_.size() + 1 != grams_.size())
        throw ValidationError("complex_shape", "expected " + std::to_string(grams_.size() - 1) +
                                                   " differentials, got " + std::to_string(differentials_.size()),
                              "differentials");
    for (std::size_t k = 0; k < differentials_.size(); ++k) {
        const Matrix& d = differentials_[k];
        if (d.cols() != grams_[k].dim() || d.rows() != grams_[k + 1].dim())
            throw ValidationError("complex_shape",
                                  "d_" + std::to_string(k) + " is " + std::to_string(d.rows()) + "x" +
                                      std::to_string(d.cols()) + ", expected " + std::to_string(grams_[k + 1].dim()) +
                                      "x" + std::to_string(grams_[k].dim()),
                                  degree_field("differentials", k));
    }
    for (std::size_t k = 0; k + 1 < differentials_.size(); ++k)
        if (!(differentials_[k + 1] * differentials_[k]).is_zero())
            throw ValidationError("d_squared_zero", "d_" + std::to_string(k + 1) + " d_" + std::to_string(k) + " != 0",
                                  degree_field("differentials", k + 1));
    adjoints_.reserve(differentials_.size());
    for (std::size_t k = 0; k < differentials_.size(); ++k)
        adjoints_.push_back(gram_adjoint(differentials_[k], grams_[k], grams_[k + 1]));
}

CochainComplex CochainComplex::trivial(const std::vector<std::size_t>& dims) {
    std::vector<Matrix> ds;
    std::vector<GramForm> gs;
    for (std::size_t k = 0; k < dims.size(); ++k) {
        gs.push_back(GramForm::identity(dims[k]));
        if (k + 1 < dims.size()) ds.emplace_back(dims[k + 1], dims[k]);
    }
    return CochainComplex(std::move(ds), std::move(gs));
}

std::vector<std::size_t> CochainComplex::dims() const {
    std::vector<std::size_t> out;
    for (const auto& g : grams_) out.push_back(g.dim());
    return out;
}

void CochainComplex::check_degree(std::size_t k) const {
    if (k > max_degree())
        throw DegreeOutOfRange("degree " + std::to_string(k) + " outside [0, " + std::to_string(max_degree()) + "]");
}

const Matrix& CochainComplex::differential(std::size_t k) const {
    if (k >= differentials_.size())
        throw DegreeOutOfRange("no differential out of degree " + std::to_string(k));
    return differentials_[k];
}

const Matrix& CochainComplex::adjoint(std::size_t k) const {
    if (k >= adjoints_.size()) throw DegreeOutOfRange("no adjoint into degree " + std::to_string(k));
    return adjoints_[k];
}

const GramForm& CochainComplex::gram(std::size_t k) const {
    check_degree(k);
    return grams_[k];
}

CochainComplex CochainComplex::extended() const {
    auto ds = differentials_;
    auto gs = grams_;
    ds.emplace_back(0, grams_.back().dim());
    gs.push_back(GramForm::identity(0));
    return CochainComplex(std::move(ds), std::move(gs));
}

Matrix laplacian(const CochainComplex& c, std::size_t k) {
    if (k > c.max_degree()) throw DegreeOutOfRange("laplacian: degree " + std::to_string(k) + " out of range");
    Matrix lap(c.dim(k), c.dim(k));
    if (k < c.max_degree()) lap += c.adjoint(k) * c.differential(k);
    if (k > 0) lap += c.differential(k - 1) * c.adjoint(k - 1);
    return lap;
}

HodgeSplit hodge_decompose(const CochainComplex& c, std::size_t k) {
    if (k > c.max_degree()) throw DegreeOutOfRange("hodge_decompose: degree " + std::to_string(k) + " out of range");
    HodgeSplit split;
    split.degree = k;
    split.harmonic = kernel_basis(laplacian(c, k));
    split.image_d = k > 0 ? image_basis(c.differential(k - 1)) : Subspace(c.dim(k));
    split.image_dstar = k < c.max_degree() ? image_basis(c.adjoint(k)) : Subspace(c.dim(k));
    if (split.harmonic.dim() + split.image_d.dim() + split.image_dstar.dim() != c.dim(k))
        throw InternalError("Hodge summand dimensions do not add up in degree " + std::to_string(k));
    return split;
}

Matrix harmonic_projector(const CochainComplex& c, std::size_t k) {
    if (k > c.max_degree()) throw DegreeOutOfRange("harmonic_projector: degree " + std::to_string(k) + " out of range");
    return orthogonal_projector(kernel_basis(laplacian(c, k)), c.gram(k));
}

std::size_t cohomology_dim(const CochainComplex& c, std::size_t k) {
    if (k > c.max_degree()) throw DegreeOutOfRange("cohomology_dim: degree " + std::to_string(k) + " out of range");
    std::size_t cycles = k < c.max_degree() ? c.dim(k) - rank(c.differential(k)) : c.dim(k);
    std::size_t boundaries = k > 0 ? rank(c.differential(k - 1)) : 0;
    return cycles - boundaries;
}

std::vector<std::size_t> cohomology_dims(const CochainComplex& c) {
    // one rank per differential instead of two
    std::vector<std::size_t> ranks;
    for (const auto& d : c.differentials()) ranks.push_back(rank(d));
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k <= c.max_degree(); ++k) {
        std::size_t cycles = c.dim(k) - (k < c.max_degree() ? ranks[k] : 0);
        out.push_back(cycles - (k > 0 ? ranks[k - 1] : 0));
    }
    return out;
}

long long euler_characteristic(const CochainComplex& c) {
    long long chi = 0;
    auto h = cohomology_dims(c);
    for (std::size_t k = 0; k < h.size(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long long>(h[k]);
    return chi;
}

long long dimension_euler_characteristic(const CochainComplex& c) {
    long long chi = 0;
    for (std::size_t k = 0; k <= c.max_degree(); ++k) chi += (k % 2 ? -1 : 1) * static_cast<long long>(c.dim(k));
    return chi;
}

}  // namespace dw
