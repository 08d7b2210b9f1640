#include "dw/model.hpp"

#include "dw/error.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>

namespace dw {

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("Rng::below: bound must be positive");
    // Reject the lowest 2^64 mod bound values so the remainder is uniform.
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
        std::uint64_t x = next();
        if (x >= threshold) return x % bound;
    }
}

Rational Rng::entry(std::uint64_t bound) {
    const bool negative = next() & 1;
    Integer num(static_cast<unsigned long>(1 + below(bound)));
    Integer den(static_cast<unsigned long>(1 + below(bound)));
    Rational q(negative ? Integer(-num) : num, den);
    q.canonicalize();
    return q;
}

Matrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, std::uint64_t bound) {
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = rng.entry(bound);
    return m;
}

Matrix random_invertible(Rng& rng, std::size_t n, std::uint64_t bound) {
    Matrix lower = Matrix::identity(n);
    Matrix upper(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < r; ++c) lower(r, c) = rng.entry(bound);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = r; c < n; ++c) upper(r, c) = rng.entry(bound);
    return lower * upper;
}

GramForm random_gram(Rng& rng, std::size_t n, std::uint64_t bound) {
    Matrix a = random_matrix(rng, n, n, bound);
    return GramForm(a * a.transpose() + Matrix::identity(n));
}

void ModelSpec::validate() const {
    if (harmonic.size() != n + 1)
        throw ValidationError("model_shape",
                              "harmonic_dims needs n+1 = " + std::to_string(n + 1) + " entries, got " +
                                  std::to_string(harmonic.size()),
                              "harmonic_dims");
    if (ranks.size() != n)
        throw ValidationError("model_shape",
                              "rank_dims needs n = " + std::to_string(n) + " entries, got " + std::to_string(ranks.size()),
                              "rank_dims");
    if (aug.size() != n)
        throw ValidationError("model_shape",
                              "aug_dims needs n = " + std::to_string(n) + " entries, got " + std::to_string(aug.size()),
                              "aug_dims");
    if (coefficient_bound == 0)
        throw ValidationError("coefficient_bound_positive", "coefficient_bound must be >= 1", "coefficient_bound");
}

std::vector<std::size_t> ModelSpec::space_dims() const {
    std::vector<std::size_t> v(n + 1);
    for (std::size_t k = 0; k <= n; ++k)
        v[k] = harmonic[k] + (k < n ? ranks[k] : 0) + (k > 0 ? ranks[k - 1] : 0);
    return v;
}

ModelSpec ModelSpec::from_space_dims(std::vector<std::size_t> harmonic, const std::vector<std::size_t>& dims,
                                     std::vector<std::size_t> aug, std::uint64_t seed, std::uint64_t bound) {
    if (dims.empty() || harmonic.size() != dims.size())
        throw ValidationError("model_shape", "dims and harmonic_dims must have the same nonzero length", "dims");
    const std::size_t n = dims.size() - 1;
    std::vector<std::size_t> ranks;
    long long incoming = 0;
    for (std::size_t k = 0; k <= n; ++k) {
        long long r = static_cast<long long>(dims[k]) - static_cast<long long>(harmonic[k]) - incoming;
        const std::string at = "dims[" + std::to_string(k) + "]";
        if (r < 0)
            throw ValidationError("rank_nonnegative",
                                  "h_" + std::to_string(k) + " plus the incoming rank exceeds v_" + std::to_string(k) +
                                      " (implied rank " + std::to_string(r) + ")",
                                  at);
        if (k == n) {
            if (r != 0)
                throw ValidationError("rank_balance",
                                      "top degree leaves " + std::to_string(r) + " dimensions with nowhere to map",
                                      at);
        } else {
            ranks.push_back(static_cast<std::size_t>(r));
        }
        incoming = r;
    }
    ModelSpec spec{n, std::move(harmonic), std::move(ranks), std::move(aug), seed, bound};
    spec.validate();
    return spec;
}

Model build_model(const ModelSpec& spec) {
    spec.validate();
    const std::size_t n = spec.n;
    const auto v = spec.space_dims();
    const std::uint64_t bound = spec.coefficient_bound;
    Rng rng(spec.seed);

    // Block coordinates in degree k: [harmonic h_k | image r_{k-1} | source r_k].
    auto image_offset = [&](std::size_t k) { return spec.harmonic[k]; };
    auto source_offset = [&](std::size_t k) { return spec.harmonic[k] + (k > 0 ? spec.ranks[k - 1] : 0); };

    std::vector<Matrix> block_d;
    for (std::size_t k = 0; k < n; ++k) {
        Matrix d(v[k + 1], v[k]);
        d.set_block(image_offset(k + 1), source_offset(k), random_invertible(rng, spec.ranks[k], bound));
        block_d.push_back(std::move(d));
    }
    std::vector<Matrix> basis, basis_inv;
    for (std::size_t k = 0; k <= n; ++k) {
        basis.push_back(random_invertible(rng, v[k], bound));
        basis_inv.push_back(*inverse(basis.back()));
    }
    std::vector<Matrix> ds;
    for (std::size_t k = 0; k < n; ++k) ds.push_back(basis[k + 1] * block_d[k] * basis_inv[k]);
    std::vector<GramForm> grams;
    for (std::size_t k = 0; k <= n; ++k) grams.push_back(random_gram(rng, v[k], bound));
    CochainComplex base(std::move(ds), std::move(grams));

    std::vector<GramForm> aug_grams;
    std::vector<Matrix> gammas;
    for (std::size_t k = 0; k < n; ++k) {
        aug_grams.push_back(random_gram(rng, spec.aug[k], bound));
        // Zero columns on the image block, then change basis: gamma kills Im(d_{k-1}).
        Matrix g = random_matrix(rng, spec.aug[k], v[k], bound);
        const std::size_t img = k > 0 ? spec.ranks[k - 1] : 0;
        g.set_block(0, image_offset(k), Matrix::zero(spec.aug[k], img));
        gammas.push_back(g * basis_inv[k]);
    }
    AugmentationData aug(std::move(aug_grams), std::move(gammas));
    check_compatible(base, aug);
    return Model{std::move(base), std::move(aug)};
}

ModelReport verify_model(const ModelSpec& spec, DeformOptions options) {
    Model model = build_model(spec);
    ModelReport r;
    r.spec = spec;
    r.space_dims = model.base.dims();
    for (std::size_t k = 0; k <= spec.n; ++k) r.harmonic_dims.push_back(hodge_decompose(model.base, k).harmonic.dim());
    r.cohomology_dims = cohomology_dims(model.base);
    r.hodge_pass = r.harmonic_dims == spec.harmonic && r.cohomology_dims == spec.harmonic;
    r.chain_maps = verify_chain_maps(model.base, model.aug, options);
    r.quasi_iso = verify_quasi_isomorphism(model.base, model.aug, options);
    long long chi_h = 0, chi_a = 0;
    for (std::size_t k = 0; k <= spec.n; ++k) chi_h += (k % 2 ? -1 : 1) * static_cast<long long>(spec.harmonic[k]);
    for (std::size_t k = 0; k < spec.n; ++k) chi_a += (k % 2 ? -1 : 1) * static_cast<long long>(spec.aug[k]);
    r.chi_expected = chi_h - chi_a;
    r.euler_pass = r.quasi_iso.chi_tilde == r.chi_expected && r.quasi_iso.chi_deformed == r.chi_expected;
    return r;
}

std::vector<ModelSpec> sweep_specs(const SweepParams& params) {
    if (params.max_degree < 1 || params.max_dim < 1)
        throw ValidationError("sweep_params", "max_degree and max_dim must be >= 1");
    Rng rng(params.seed);
    std::vector<ModelSpec> specs;
    specs.reserve(params.count);
    for (std::size_t i = 0; i < params.count; ++i) {
        ModelSpec s;
        s.n = 1 + rng.below(params.max_degree);
        s.coefficient_bound = params.coefficient_bound;
        std::size_t incoming = 0;
        for (std::size_t k = 0; k <= s.n; ++k) {
            const std::size_t room = params.max_dim - incoming;
            std::size_t r = 0;
            if (k < s.n) r = rng.below(std::min<std::size_t>(room, 3) + 1);
            std::size_t h = rng.below(std::min<std::size_t>(room - r, 3) + 1);
            s.harmonic.push_back(h);
            if (k < s.n) {
                s.ranks.push_back(r);
                s.aug.push_back(rng.below(params.max_aug + 1));
            }
            incoming = r;
        }
        s.seed = rng.next();
        specs.push_back(std::move(s));
    }
    return specs;
}

std::vector<ModelReport> verify_models(const std::vector<ModelSpec>& specs, unsigned jobs, DeformOptions options) {
    std::vector<ModelReport> reports(specs.size());
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(specs.size())));
    if (jobs <= 1) {
        for (std::size_t i = 0; i < specs.size(); ++i) reports[i] = verify_model(specs[i], options);
        return reports;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < specs.size();) {
            try {
                reports[i] = verify_model(specs[i], options);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return reports;
}

}  // namespace dw
