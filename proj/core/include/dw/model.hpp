#pragma once

#include "dw/cone.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace dw {

/// Reproducible generator used for every random model. The engine is
/// std::mt19937_64 (bit-exact across conforming implementations); bounded
/// draws use rejection sampling, so sequences do not depend on any
/// implementation-defined distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }
    /// Uniform in [0, bound); bound must be > 0.
    std::uint64_t below(std::uint64_t bound);
    /// +/- p/q with p, q uniform in [1, bound].
    Rational entry(std::uint64_t bound);

private:
    std::mt19937_64 engine_;
};

/// Random square matrix L U with unit lower L and upper U with nonzero
/// diagonal, hence always invertible.
Matrix random_invertible(Rng& rng, std::size_t n, std::uint64_t bound);
Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::uint64_t bound);
/// A A^T + I for a random A.
GramForm random_gram(Rng& rng, std::size_t n, std::uint64_t bound);

/// Target data for a generated model: harmonic dimensions h_0..h_n, ranks
/// r_k of d_k, augmentation dimensions a_0..a_{n-1}. Space dimensions are
/// v_k = h_k + r_k + r_{k-1}.
struct ModelSpec {
    std::size_t n = 1;
    std::vector<std::size_t> harmonic;
    std::vector<std::size_t> ranks;
    std::vector<std::size_t> aug;
    std::uint64_t seed = 0;
    std::uint64_t coefficient_bound = 8;

    /// Throws ValidationError on inconsistent lengths or a zero bound.
    void validate() const;
    std::vector<std::size_t> space_dims() const;

    /// Derives ranks from requested space dimensions; throws ValidationError
    /// if a rank would be negative or the top degree does not balance.
    static ModelSpec from_space_dims(std::vector<std::size_t> harmonic, const std::vector<std::size_t>& dims,
                                     std::vector<std::size_t> aug, std::uint64_t seed, std::uint64_t bound = 8);

    friend bool operator==(const ModelSpec&, const ModelSpec&) = default;
};

struct Model {
    CochainComplex base;
    AugmentationData aug;
};

/// Same spec, same model, entry for entry.
Model build_model(const ModelSpec& spec);

struct ModelReport {
    ModelSpec spec;
    std::vector<std::size_t> space_dims;
    std::vector<std::size_t> harmonic_dims;    ///< dim Ker(Laplacian_k)
    std::vector<std::size_t> cohomology_dims;  ///< rank-computed
    bool hodge_pass = false;
    ChainMapReport chain_maps;
    QuasiIsoReport quasi_iso;
    long long chi_expected = 0;  ///< sum (-1)^k h_k - sum (-1)^k a_k
    bool euler_pass = false;
    bool pass() const { return hodge_pass && chain_maps.pass() && quasi_iso.pass() && euler_pass; }
};

/// Builds the model and checks, exactly: harmonic dims equal the targets and
/// the rank-computed cohomology; the chain-map identities between the tilde
/// and deformed totals; equal cohomology of both totals; and the Euler ledger.
ModelReport verify_model(const ModelSpec& spec, DeformOptions options = {});

struct SweepParams {
    std::size_t count = 500;
    std::uint64_t seed = 1;
    std::size_t max_degree = 4;
    std::size_t max_dim = 8;
    std::size_t max_aug = 3;
    std::uint64_t coefficient_bound = 8;
};

/// Random valid specs with 1 <= n <= max_degree and every v_k <= max_dim.
std::vector<ModelSpec> sweep_specs(const SweepParams& params);

/// verify_model over all specs with up to `jobs` threads; results are in
/// input order.
std::vector<ModelReport> verify_models(const std::vector<ModelSpec>& specs, unsigned jobs = 1,
                                       DeformOptions options = {});

}  // namespace dw
