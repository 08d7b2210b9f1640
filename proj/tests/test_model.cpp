#include "dw/error.hpp"
#include "dw/model.hpp"

#include <doctest.h>

#include <set>

using namespace dw;

namespace {

ModelSpec spec(std::vector<std::size_t> h, std::vector<std::size_t> r, std::vector<std::size_t> a,
               std::uint64_t seed) {
    return ModelSpec{h.size() - 1, std::move(h), std::move(r), std::move(a), seed, 8};
}

}  // namespace

TEST_CASE("rng draws") {
    Rng a(42), b(42);
    for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
    Rng r(3);
    std::set<std::uint64_t> seen;
    for (int i = 0; i < 2000; ++i) {
        auto v = r.below(5);
        REQUIRE(v < 5);
        seen.insert(v);
    }
    CHECK(seen.size() == 5);
    for (int i = 0; i < 500; ++i) {
        Rational q = r.entry(4);
        CHECK(q != 0);
        CHECK(abs(q.get_num()) <= 4);
        CHECK(q.get_den() <= 4);
    }
    for (int i = 0; i < 20; ++i) CHECK(inverse(random_invertible(r, 4, 6)).has_value());
    CHECK_NOTHROW(random_gram(r, 3, 5));
}

TEST_CASE("same seed gives the same model") {
    auto s = spec({1, 2, 1}, {2, 1}, {1, 2}, 99);
    auto m1 = build_model(s), m2 = build_model(s);
    CHECK(m1.base == m2.base);
    CHECK(m1.aug == m2.aug);

    bool differs = false;
    for (std::uint64_t seed = 100; seed < 110; ++seed) {
        auto other = s;
        other.seed = seed;
        if (!(build_model(other).base.differential(0) == m1.base.differential(0))) differs = true;
    }
    CHECK(differs);
}

TEST_CASE("models realize the requested data") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        auto s = spec({1, 0, 2}, {2, 1}, {2, 1}, seed);
        auto m = build_model(s);
        CHECK(m.base.dims() == s.space_dims());
        CHECK(cohomology_dims(m.base) == s.harmonic);
        for (std::size_t k = 0; k < s.n; ++k) CHECK(rank(m.base.differential(k)) == s.ranks[k]);
        for (std::size_t k = 1; k < m.aug.length(); ++k)
            CHECK((m.aug.gamma(k) * m.base.differential(k - 1)).is_zero());
    }
}

TEST_CASE("small specs") {
    auto s = spec({1, 0}, {1}, {1}, 5);
    CHECK(s.space_dims() == std::vector<std::size_t>{2, 1});
    auto m = build_model(s);
    CHECK(m.base.dims() == std::vector<std::size_t>{2, 1});
    CHECK(m.aug.dims() == std::vector<std::size_t>{1});

    auto zero = spec({2, 1, 3}, {0, 0}, {1, 1}, 5);
    auto mz = build_model(zero);
    CHECK(mz.base.dims() == zero.harmonic);
    CHECK(mz.base.differential(0).is_zero());
    CHECK(mz.base.differential(1).is_zero());
    auto r = verify_model(zero);
    CHECK(r.pass());
}

TEST_CASE("verify_model") {
    auto r = verify_model(spec({1, 1, 0}, {1, 1}, {1, 1}, 7));
    CHECK(r.hodge_pass);
    CHECK(r.chain_maps.pass());
    CHECK(r.quasi_iso.cohomology_agrees);
    CHECK(r.quasi_iso.euler_ledger_holds);
    CHECK(r.euler_pass);
    CHECK(r.chi_expected == 0);
    CHECK(r.quasi_iso.chi_tilde == 0);
    CHECK(r.pass());
    CHECK(r.harmonic_dims == std::vector<std::size_t>{1, 1, 0});
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(spec({1, 1}, {1, 1}, {1}, 1).validate(), ValidationError);
    CHECK_THROWS_AS(spec({1, 1}, {1}, {1, 1, 1}, 1).validate(), ValidationError);
    auto zero_bound = spec({1, 1}, {1}, {1}, 1);
    zero_bound.coefficient_bound = 0;
    CHECK_THROWS_AS(zero_bound.validate(), ValidationError);

    auto ok = ModelSpec::from_space_dims({1, 1, 0}, {2, 3, 1}, {1, 1}, 3);
    CHECK(ok.ranks == std::vector<std::size_t>{1, 1});
    CHECK(ok.space_dims() == std::vector<std::size_t>{2, 3, 1});
    try {
        ModelSpec::from_space_dims({3, 0}, {2, 1}, {1}, 3);
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(e.invariant() == "rank_nonnegative");
    }
    try {
        ModelSpec::from_space_dims({1, 0}, {2, 2}, {1}, 3);
        FAIL("expected a validation error");
    } catch (const ValidationError& e) {
        CHECK(e.invariant() == "rank_balance");
    }
}

TEST_CASE("sweep") {
    SweepParams p;
    p.count = 60;
    p.seed = 11;
    auto specs = sweep_specs(p);
    REQUIRE(specs.size() == 60);
    CHECK(specs == sweep_specs(p));
    for (const auto& s : specs) {
        CHECK_NOTHROW(s.validate());
        CHECK(s.n >= 1);
        CHECK(s.n <= p.max_degree);
        for (auto v : s.space_dims()) CHECK(v <= p.max_dim);
    }
    auto serial = verify_models(specs, 1);
    auto parallel = verify_models(specs, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].spec == specs[i]);
        CHECK(parallel[i].spec == specs[i]);
        CHECK(serial[i].pass());
        CHECK(parallel[i].pass());
        CHECK(serial[i].quasi_iso.tilde_cohomology == parallel[i].quasi_iso.tilde_cohomology);
    }
}
