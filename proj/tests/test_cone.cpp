#include "dw/cone.hpp"
#include "dw/error.hpp"
#include "dw/model.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace dw;

namespace {

Model seeded_model(std::uint64_t seed, std::vector<std::size_t> h, std::vector<std::size_t> r,
                   std::vector<std::size_t> a) {
    return build_model(ModelSpec{h.size() - 1, std::move(h), std::move(r), std::move(a), seed, 8});
}

AugmentationData identity_forms(std::vector<Matrix> gammas) {
    std::vector<GramForm> gs;
    for (const auto& g : gammas) gs.push_back(GramForm::identity(g.rows()));
    return AugmentationData(std::move(gs), std::move(gammas));
}

bool is_identity(const Matrix& m) { return m == Matrix::identity(m.rows()); }

}  // namespace

TEST_CASE("augmentation validation") {
    auto base = CochainComplex::trivial({2, 2});
    CHECK_THROWS_AS(AugmentationData({GramForm::identity(1)}, {}), ValidationError);
    CHECK_THROWS_AS(AugmentationData({GramForm::identity(2)}, {Matrix(1, 2)}), ValidationError);
    CHECK_THROWS_AS(check_compatible(base, identity_forms({Matrix(1, 3)})), ValidationError);
    CHECK_THROWS_AS(check_compatible(base, identity_forms({})), ValidationError);
    CHECK_NOTHROW(check_compatible(base, identity_forms({Matrix(1, 2)})));
    CHECK_NOTHROW(check_compatible(base, identity_forms({Matrix(1, 2), Matrix(1, 2)})));

    // gamma_1 must vanish on Im(d_0)
    CochainComplex c({Matrix{{1}}}, {GramForm::identity(1), GramForm::identity(1)});
    try {
        check_compatible(c, identity_forms({Matrix(0, 1), Matrix{{1}}}));
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(e.invariant() == "gamma_kills_image");
    }
    CHECK_THROWS_AS(build_tilde_complex(c, identity_forms({Matrix(0, 1), Matrix{{1}}})), ValidationError);
}

TEST_CASE("build_tilde_complex") {
    SUBCASE("zero augmentation gives the base") {
        auto m = seeded_model(3, {1, 1, 0}, {1, 1}, {0, 0});
        auto t = build_tilde_complex(m.base, m.aug);
        CHECK(t.flavor == Flavor::tilde);
        CHECK(t.total == m.base);
    }
    SUBCASE("single-degree base with a_0 = 1") {
        auto base = CochainComplex::trivial({1});
        auto t = build_tilde_complex(base, identity_forms({Matrix{{1}}}));
        CHECK(t.total.dims() == std::vector<std::size_t>{1, 1});
        CHECK(t.total.differential(0) == Matrix{{1}});
        CHECK(cohomology_dims(t.total) == std::vector<std::size_t>{0, 0});
    }
    SUBCASE("seeded total squares to zero") {
        auto m = seeded_model(77, {1, 2, 1}, {2, 1}, {2, 3});
        auto t = build_tilde_complex(m.base, m.aug);
        CHECK(t.total.dims() == std::vector<std::size_t>{m.base.dim(0), m.base.dim(1) + 2, m.base.dim(2) + 3});
        CHECK((t.total.differential(1) * t.total.differential(0)).is_zero());
    }
}

TEST_CASE("build_deformed_complex") {
    SUBCASE("zero augmentation gives the base") {
        auto m = seeded_model(4, {0, 1, 1}, {2, 1}, {0, 0});
        CHECK(build_deformed_complex(m.base, m.aug).total == m.base);
    }
    SUBCASE("zero differential: deformed equals tilde") {
        auto base = CochainComplex::trivial({2, 3, 1});
        Rng rng(8);
        auto aug = identity_forms({random_matrix(rng, 2, 2, 5), random_matrix(rng, 1, 3, 5)});
        auto d = build_deformed_complex(base, aug);
        CHECK(d.flavor == Flavor::deformed);
        CHECK(d.total == build_tilde_complex(base, aug).total);
    }
    SUBCASE("seeded deformed differential squares to zero") {
        auto m = seeded_model(78, {2, 1, 1, 1}, {1, 2, 1}, {1, 2, 2});
        auto d = build_deformed_complex(m.base, m.aug);
        for (std::size_t k = 0; k + 1 < d.total.max_degree(); ++k)
            CHECK((d.total.differential(k + 1) * d.total.differential(k)).is_zero());
    }
    SUBCASE("harmonic projection kills exact forms for any gamma") {
        auto m = seeded_model(79, {1, 1, 1}, {2, 2}, {0, 0});
        Rng rng(80);
        for (std::size_t k = 1; k <= 2; ++k) {
            Matrix arbitrary = random_matrix(rng, 2, m.base.dim(k), 5);
            CHECK_FALSE((arbitrary * m.base.differential(k - 1)).is_zero());
            CHECK((arbitrary * harmonic_projector(m.base, k) * m.base.differential(k - 1)).is_zero());
        }
    }
}

TEST_CASE("iso_restricted_d") {
    SUBCASE("zero differential") {
        auto iso = iso_restricted_d(CochainComplex::trivial({2, 2}), 0);
        CHECK(iso.source.dim() == 0);
        CHECK(iso.target.dim() == 0);
        CHECK(iso.forward.rows() == 0);
    }
    SUBCASE("d = (2)") {
        CochainComplex c({Matrix{{2}}}, {GramForm::identity(1), GramForm::identity(1)});
        auto iso = iso_restricted_d(c, 0);
        CHECK(iso.forward == Matrix{{2}});
        CHECK(iso.inverse == Matrix{{Rational(1, 2)}});
    }
    SUBCASE("seeded") {
        auto m = seeded_model(91, {1, 1, 1}, {2, 3}, {0, 0});
        for (std::size_t k = 0; k < 2; ++k) {
            auto iso = iso_restricted_d(m.base, k);
            CHECK(iso.forward * iso.inverse == Matrix::identity(iso.forward.rows()));
            // d_k lift = identity on Im(d_k); lift d_k lands in Im(d_k^*)
            const Matrix& d = m.base.differential(k);
            CHECK(d * iso.lift * iso.target.basis() == iso.target.basis());
            Matrix back = iso.lift * d;
            for (std::size_t c = 0; c < back.cols(); ++c) CHECK(iso.source.contains(back.column(c)));
            // lift vanishes on the orthogonal complement of Im(d_k)
            auto split = hodge_decompose(m.base, k + 1);
            CHECK((iso.lift * split.harmonic.basis()).is_zero());
            CHECK((iso.lift * split.image_dstar.basis()).is_zero());
        }
        CHECK_THROWS_AS(iso_restricted_d(m.base, 2), DegreeOutOfRange);
    }
}

TEST_CASE("chain maps") {
    SUBCASE("gamma = 0 gives identity maps") {
        auto m = seeded_model(5, {1, 1, 1}, {1, 1}, {2, 2});
        std::vector<Matrix> zero_gammas;
        for (const auto& g : m.aug.gammas()) zero_gammas.emplace_back(g.rows(), g.cols());
        AugmentationData aug(m.aug.grams(), zero_gammas);
        for (const auto& x : chain_map_m(m.base, aug)) CHECK(is_identity(x));
        for (const auto& x : chain_map_m_inverse(m.base, aug)) CHECK(is_identity(x));
        CHECK(verify_chain_maps(m.base, aug).pass());
    }
    SUBCASE("no exact forms gives identity maps") {
        auto base = CochainComplex::trivial({2, 2, 2});
        Rng rng(6);
        auto aug = identity_forms({random_matrix(rng, 1, 2, 4), random_matrix(rng, 2, 2, 4)});
        for (const auto& x : chain_map_m(base, aug)) CHECK(is_identity(x));
        CHECK(verify_chain_maps(base, aug).pass());
    }
    SUBCASE("seeded maps are mutually inverse and unipotent") {
        auto m = seeded_model(12, {1, 0, 1}, {2, 2}, {2, 1});
        auto fwd = chain_map_m(m.base, m.aug);
        auto inv = chain_map_m_inverse(m.base, m.aug);
        REQUIRE(fwd.size() == 3);
        CHECK(is_identity(fwd[0]));
        CHECK_FALSE(is_identity(fwd[1]));
        for (std::size_t k = 0; k < fwd.size(); ++k) {
            CHECK(is_identity(fwd[k] * inv[k]));
            Matrix nil = fwd[k] - Matrix::identity(fwd[k].rows());
            CHECK((nil * nil).is_zero());
            // identity on the A-summand
            const std::size_t v = m.base.dim(k);
            CHECK(is_identity(fwd[k].block(v, v, fwd[k].rows() - v, fwd[k].cols() - v)));
        }
    }
}

TEST_CASE("chain-map identities hold for random compatible pairs") {
    Rng shapes(2024);
    for (int trial = 0; trial < 120; ++trial) {
        const std::size_t n = 1 + shapes.below(3);
        std::vector<std::size_t> h, r, a;
        for (std::size_t k = 0; k <= n; ++k) h.push_back(shapes.below(3));
        for (std::size_t k = 0; k < n; ++k) {
            r.push_back(shapes.below(3));
            a.push_back(shapes.below(3));
        }
        auto m = seeded_model(shapes.next(), h, r, a);
        CAPTURE(trial);
        for (bool project0 : {true, false}) {
            CAPTURE(project0);
            DeformOptions opts{project0};
            auto report = verify_chain_maps(m.base, m.aug, opts);
            CHECK(report.pass());
            auto q = verify_quasi_isomorphism(m.base, m.aug, opts);
            CHECK(q.cohomology_agrees);
            CHECK(q.euler_ledger_holds);
        }
    }
}

TEST_CASE("unprojected degree zero needs the matching chain map") {
    // gamma_0 nonzero on Im(d_0^*) makes the uniform chain map fail in degree 0
    auto m = seeded_model(31, {1, 1}, {2}, {2});
    auto deformed = build_deformed_complex(m.base, m.aug, DeformOptions{false});
    auto tilde = build_tilde_complex(m.base, m.aug);
    auto uniform = chain_map_m(m.base, m.aug, DeformOptions{true});
    Matrix lhs = uniform[1] * deformed.total.differential(0);
    Matrix rhs = tilde.total.differential(0) * uniform[0];
    CHECK(first_mismatch(lhs, rhs).has_value());
    CHECK(verify_chain_maps(m.base, m.aug, DeformOptions{false}).pass());
}

TEST_CASE("a failing identity is reported with its first differing entry") {
    ChainMapReport r;
    r.forward.push_back({0, true, std::nullopt});
    CHECK(r.pass());
    r.backward.push_back({1, false, EntryMismatch{2, 0, Rational(1), Rational(0)}});
    CHECK_FALSE(r.pass());
}

TEST_CASE("verify_quasi_isomorphism") {
    SUBCASE("zero augmentation reproduces base cohomology") {
        auto m = seeded_model(41, {1, 2, 0}, {1, 1}, {0, 0});
        auto q = verify_quasi_isomorphism(m.base, m.aug);
        CHECK(q.tilde_cohomology == q.base_cohomology);
        CHECK(q.deformed_cohomology == q.base_cohomology);
        CHECK(q.pass());
    }
    SUBCASE("rank-r gamma_0 on a zero differential") {
        // V = (3, 2), d = 0, gamma_0 : Q^3 -> Q^3 of rank 2
        auto base = CochainComplex::trivial({3, 2});
        Matrix gamma{{1, 0, 1}, {0, 1, 1}, {1, 1, 2}};
        REQUIRE(rank(gamma) == 2);
        auto q = verify_quasi_isomorphism(base, identity_forms({gamma}));
        // H^0 = ker gamma_0, H^1 = V^1 + coker gamma_0
        CHECK(q.tilde_cohomology == std::vector<std::size_t>{3 - 2, 2 + (3 - 2)});
        CHECK(q.deformed_cohomology == q.tilde_cohomology);
        CHECK(q.chi_tilde == (3 - 2) - 3);
        CHECK(q.euler_ledger_holds);
    }
}
