#include "dw/complex.hpp"
#include "dw/error.hpp"
#include "dw/model.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace dw;

namespace {

// 0 -> Q -> Q -> 0 with d = (c) and identity forms.
CochainComplex line(const Rational& c) {
    return CochainComplex({Matrix{{c}}}, {GramForm::identity(1), GramForm::identity(1)});
}

CochainComplex seeded(std::uint64_t seed, std::vector<std::size_t> h, std::vector<std::size_t> r) {
    ModelSpec spec{h.size() - 1, h, r, std::vector<std::size_t>(r.size(), 0), seed, 8};
    return build_model(spec).base;
}

}  // namespace

TEST_CASE("construction validates the complex") {
    CHECK_THROWS_AS(CochainComplex({}, {}), ValidationError);
    CHECK_THROWS_AS(CochainComplex({Matrix(2, 1)}, {GramForm::identity(1), GramForm::identity(1)}), ValidationError);
    // d_1 d_0 = (1) != 0
    CHECK_THROWS_AS(CochainComplex({Matrix{{1}}, Matrix{{1}}},
                                   {GramForm::identity(1), GramForm::identity(1), GramForm::identity(1)}),
                    ValidationError);
    try {
        CochainComplex({Matrix{{1}}, Matrix{{1}}}, {GramForm::identity(1), GramForm::identity(1), GramForm::identity(1)});
    } catch (const ValidationError& e) {
        CHECK(e.invariant() == "d_squared_zero");
        CHECK(e.field() == "differentials[1]");
    }
    auto c = CochainComplex::trivial({2, 0, 3});
    CHECK(c.max_degree() == 2);
    CHECK(c.dims() == std::vector<std::size_t>{2, 0, 3});
    CHECK_THROWS_AS(laplacian(c, 3), DegreeOutOfRange);
    CHECK_THROWS_AS(hodge_decompose(c, 3), DegreeOutOfRange);
    CHECK_THROWS_AS(cohomology_dim(c, 5), DegreeOutOfRange);
    CHECK_THROWS_AS(harmonic_projector(c, 3), DegreeOutOfRange);
}

TEST_CASE("laplacian") {
    auto zero = CochainComplex::trivial({2, 3});
    CHECK(laplacian(zero, 0).is_zero());
    CHECK(laplacian(zero, 1).is_zero());

    auto l = line(1);
    CHECK(laplacian(l, 0) == Matrix{{1}});
    CHECK(laplacian(l, 1) == Matrix{{1}});

    auto c = seeded(5, {1, 2, 1}, {2, 1});
    for (std::size_t k = 0; k <= c.max_degree(); ++k) {
        CAPTURE(k);
        Matrix lap = laplacian(c, k);
        const Matrix& g = c.gram(k).matrix();
        CHECK(g * lap == lap.transpose() * g);
        // positive on the complement of the kernel: restrict G*Lap to Im(d) + Im(d*)
        auto split = hodge_decompose(c, k);
        Matrix complement = hstack(split.image_d.basis(), split.image_dstar.basis());
        if (complement.cols() > 0) CHECK_NOTHROW(GramForm(complement.transpose() * g * lap * complement));
    }
}

TEST_CASE("hodge_decompose") {
    auto zero = CochainComplex::trivial({2, 3});
    auto s0 = hodge_decompose(zero, 0);
    CHECK(s0.harmonic.dim() == 2);
    CHECK(s0.image_d.dim() == 0);
    CHECK(s0.image_dstar.dim() == 0);

    auto l = line(1);
    auto a = hodge_decompose(l, 0), b = hodge_decompose(l, 1);
    CHECK(a.harmonic.dim() == 0);
    CHECK(a.image_dstar.dim() == 1);
    CHECK(a.image_d.dim() == 0);
    CHECK(b.harmonic.dim() == 0);
    CHECK(b.image_d.dim() == 1);
    CHECK(b.image_dstar.dim() == 0);

    auto c = seeded(9, {1, 2, 1}, {1, 2});
    CHECK(hodge_decompose(c, 0).harmonic.dim() == 1);
    CHECK(hodge_decompose(c, 1).harmonic.dim() == 2);
    CHECK(hodge_decompose(c, 2).harmonic.dim() == 1);
}

TEST_CASE("harmonic_projector") {
    CHECK(harmonic_projector(CochainComplex::trivial({3}), 0) == Matrix::identity(3));
    CHECK(harmonic_projector(line(1), 0).is_zero());
    CHECK(harmonic_projector(line(1), 1).is_zero());

    auto c = seeded(17, {2, 1, 1}, {1, 2});
    for (std::size_t k = 0; k <= c.max_degree(); ++k) {
        CAPTURE(k);
        Matrix p = harmonic_projector(c, k);
        auto split = hodge_decompose(c, k);
        CHECK(p * p == p);
        CHECK(c.gram(k).matrix() * p == p.transpose() * c.gram(k).matrix());
        CHECK((p * split.image_d.basis()).is_zero());
        CHECK((p * split.image_dstar.basis()).is_zero());
        CHECK(p * split.harmonic.basis() == split.harmonic.basis());
    }
}

TEST_CASE("cohomology and Euler characteristic") {
    auto zero = CochainComplex::trivial({2, 3});
    CHECK(cohomology_dims(zero) == std::vector<std::size_t>{2, 3});
    CHECK(euler_characteristic(zero) == -1);
    CHECK(cohomology_dims(line(1)) == std::vector<std::size_t>{0, 0});
    CHECK(euler_characteristic(line(1)) == 0);
    CHECK(dimension_euler_characteristic(line(1)) == 0);

    auto c = seeded(23, {1, 0, 2, 1}, {2, 1, 1});
    CHECK(cohomology_dims(c) == std::vector<std::size_t>{1, 0, 2, 1});
    for (std::size_t k = 0; k <= c.max_degree(); ++k) CHECK(cohomology_dim(c, k) == cohomology_dims(c)[k]);
    CHECK(euler_characteristic(c) == dimension_euler_characteristic(c));
    CHECK(euler_characteristic(c) == 1 - 0 + 2 - 1);
}

TEST_CASE("Hodge theorem properties over seeded complexes") {
    Rng shapes(4242);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + shapes.below(3);
        std::vector<std::size_t> h, r;
        for (std::size_t k = 0; k <= n; ++k) h.push_back(shapes.below(3));
        for (std::size_t k = 0; k < n; ++k) r.push_back(shapes.below(3));
        auto c = seeded(shapes.next(), h, r);
        CAPTURE(trial);

        std::vector<GramForm> plain;
        for (auto d : c.dims()) plain.push_back(GramForm::identity(d));
        CochainComplex euclidean(c.differentials(), plain);
        CHECK(euler_characteristic(euclidean) == euler_characteristic(c));
        CHECK(euler_characteristic(c) == dimension_euler_characteristic(c));

        for (std::size_t k = 0; k <= n; ++k) {
            auto split = hodge_decompose(c, k);
            CHECK(split.harmonic.dim() == cohomology_dim(c, k));
            CHECK(split.harmonic.dim() == h[k]);

            // pairwise orthogonality of the three summands
            const Matrix& g = c.gram(k).matrix();
            const Matrix& hb = split.harmonic.basis();
            const Matrix& ib = split.image_d.basis();
            const Matrix& sb = split.image_dstar.basis();
            CHECK((hb.transpose() * g * ib).is_zero());
            CHECK((hb.transpose() * g * sb).is_zero());
            CHECK((ib.transpose() * g * sb).is_zero());

            // harmonic vectors are closed and coclosed
            if (k < n) CHECK((c.differential(k) * hb).is_zero());
            if (k > 0) CHECK((c.adjoint(k - 1) * hb).is_zero());

            // Ker d_k = harmonic + Im d_{k-1}
            Subspace cycles = k < n ? kernel_basis(c.differential(k)) : Subspace(Matrix::identity(c.dim(k)));
            Subspace sum(hstack(hb, ib));
            CHECK(cycles.contains(sum));
            CHECK(sum.contains(cycles));
        }
    }
}
