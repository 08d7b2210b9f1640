#include "dw/io.hpp"

#include "dw/error.hpp"

#include <algorithm>
#include <initializer_list>
#include <limits>
#include <string_view>

namespace dw::io {

std::uint64_t read_u64_text(std::string_view text) {
    const bool digits = !text.empty() && text.size() <= 20 &&
                        std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; });
    if (digits) {
        Integer v(std::string(text), 10);
        if (v <= Integer(std::to_string(std::numeric_limits<std::uint64_t>::max())))
            return std::stoull(std::string(text));
    }
    throw ValidationError("unsigned_64", "expected a decimal integer in [0, 2^64), got \"" + std::string(text) + "\"");
}

namespace {

std::string at(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string at(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

const char* type_name(const Json& j) { return j.type_name(); }

void expect_object(const Json& j, const std::string& path, std::initializer_list<std::string_view> allowed,
                   std::initializer_list<std::string_view> required) {
    if (!j.is_object()) throw ValidationError("schema_type", std::string("expected object, got ") + type_name(j), path);
    for (const auto& [key, _] : j.items())
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw ValidationError("schema_unknown_field", "unknown field \"" + key + "\"", at(path, key));
    for (auto key : required)
        if (!j.contains(std::string(key)))
            throw ValidationError("schema_missing_field", "missing required field", at(path, std::string(key)));
}

const Json& expect_array(const Json& j, const std::string& path) {
    if (!j.is_array()) throw ValidationError("schema_type", std::string("expected array, got ") + type_name(j), path);
    return j;
}

// Re-throws construction errors from the core types at the JSON path.
template <class F>
auto at_path(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const ValidationError& e) {
        throw e.at(path);
    } catch (const DimensionMismatch& e) {
        throw ValidationError("dimension_mismatch", e.what(), path);
    }
}

long long read_int(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return j.get<long long>();
    throw ValidationError("schema_type", std::string("expected integer, got ") + type_name(j), path);
}

std::size_t read_count(const Json& j, const std::string& path) {
    long long v = read_int(j, path);
    if (v < 0) throw ValidationError("count_nonnegative", "expected a count >= 0, got " + std::to_string(v), path);
    return static_cast<std::size_t>(v);
}

std::uint64_t read_u64(const Json& j, const std::string& path) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    if (j.is_number_integer()) {
        long long v = j.get<long long>();
        if (v < 0) throw ValidationError("seed_nonnegative", "expected unsigned integer", path);
        return static_cast<std::uint64_t>(v);
    }
    if (j.is_string()) return at_path(path, [&] { return read_u64_text(j.get_ref<const std::string&>()); });
    throw ValidationError("schema_type", "expected unsigned 64-bit integer", path);
}

std::vector<std::size_t> read_counts(const Json& j, const std::string& path) {
    std::vector<std::size_t> out;
    const auto& arr = expect_array(j, path);
    for (std::size_t i = 0; i < arr.size(); ++i) out.push_back(read_count(arr[i], at(path, i)));
    return out;
}

Json counts(const std::vector<std::size_t>& v) { return Json(v); }

Series read_series(const Json& j, const std::string& path) {
    Series s;
    const auto& arr = expect_array(j, path);
    for (std::size_t i = 0; i < arr.size(); ++i) {
        const std::string p = at(path, i);
        if (!arr[i].is_array() || arr[i].size() != 2)
            throw ValidationError("schema_type", "expected [exponent, \"p/q\"] pair", p);
        long long e = read_int(arr[i][0], at(p, 0));
        if (e < 1 || e > std::numeric_limits<unsigned>::max())
            throw ValidationError("branch_through_origin", "exponents must be >= 1", at(p, 0));
        s.push_back({static_cast<unsigned>(e), read_rational(arr[i][1], at(p, 1))});
    }
    return s;
}

Json series_json(const Series& s) {
    Json arr = Json::array();
    for (const auto& t : s) arr.push_back(Json::array({t.exponent, to_string(t.coefficient)}));
    return arr;
}

Json check_json(const IdentityCheck& c) {
    Json j;
    j["degree"] = c.degree;
    j["pass"] = c.pass;
    if (c.mismatch) j["first_mismatch"] = to_json(*c.mismatch);
    return j;
}

Json checks_json(const char* identity, const std::vector<IdentityCheck>& checks) {
    Json j;
    j["identity"] = identity;
    bool pass = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
    j["pass"] = pass;
    Json failures = Json::array();
    for (const auto& c : checks)
        if (!c.pass) failures.push_back(check_json(c));
    j["degrees_checked"] = checks.size();
    j["failures"] = std::move(failures);
    return j;
}

}  // namespace

Json to_json(const Rational& q) { return to_string(q); }

Rational read_rational(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(Integer(std::to_string(j.get<long long>())));
    if (!j.is_string())
        throw ValidationError("schema_type", std::string("expected rational string \"p/q\", got ") + type_name(j), path);
    return at_path(path, [&] { return parse_rational(j.get_ref<const std::string&>()); });
}

Json to_json(const Matrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json entries = Json::array();
    for (const auto& x : m.entries()) entries.push_back(to_string(x));
    j["entries"] = std::move(entries);
    return j;
}

Matrix read_matrix(const Json& j, const std::string& path) {
    expect_object(j, path, {"rows", "cols", "entries"}, {"rows", "cols", "entries"});
    const std::size_t rows = read_count(j["rows"], at(path, "rows"));
    const std::size_t cols = read_count(j["cols"], at(path, "cols"));
    const auto& arr = expect_array(j["entries"], at(path, "entries"));
    if (arr.size() != rows * cols)
        throw ValidationError("matrix_entry_count",
                              "expected rows*cols = " + std::to_string(rows * cols) + " entries, got " +
                                  std::to_string(arr.size()),
                              at(path, "entries"));
    std::vector<Rational> entries;
    entries.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i) entries.push_back(read_rational(arr[i], at(at(path, "entries"), i)));
    return Matrix(rows, cols, std::move(entries));
}

Json to_json(const CochainComplex& c) {
    Json j;
    j["dims"] = counts(c.dims());
    Json ds = Json::array(), gs = Json::array();
    for (const auto& d : c.differentials()) ds.push_back(to_json(d));
    for (const auto& g : c.grams()) gs.push_back(to_json(g.matrix()));
    j["differentials"] = std::move(ds);
    j["grams"] = std::move(gs);
    return j;
}

CochainComplex read_complex(const Json& j, const std::string& path) {
    expect_object(j, path, {"dims", "differentials", "grams"}, {"dims", "differentials"});
    const auto dims = read_counts(j["dims"], at(path, "dims"));
    std::vector<Matrix> ds;
    const auto& darr = expect_array(j["differentials"], at(path, "differentials"));
    for (std::size_t i = 0; i < darr.size(); ++i) ds.push_back(read_matrix(darr[i], at(at(path, "differentials"), i)));
    std::vector<GramForm> gs;
    if (j.contains("grams")) {
        const auto& garr = expect_array(j["grams"], at(path, "grams"));
        if (garr.size() != dims.size())
            throw ValidationError("complex_shape", "need one Gram matrix per degree", at(path, "grams"));
        for (std::size_t i = 0; i < garr.size(); ++i) {
            const std::string p = at(at(path, "grams"), i);
            Matrix g = read_matrix(garr[i], p);
            if (g.rows() != dims[i])
                throw ValidationError("complex_shape", "Gram size does not match dims[" + std::to_string(i) + "]", p);
            gs.push_back(at_path(p, [&] { return GramForm(std::move(g)); }));
        }
    } else {
        for (auto d : dims) gs.push_back(GramForm::identity(d));
    }
    return at_path(path, [&] { return CochainComplex(std::move(ds), std::move(gs)); });
}

Json to_json(const AugmentationData& a) {
    Json j;
    j["dims"] = counts(a.dims());
    Json gs = Json::array(), gm = Json::array();
    for (const auto& g : a.grams()) gs.push_back(to_json(g.matrix()));
    for (const auto& g : a.gammas()) gm.push_back(to_json(g));
    j["grams"] = std::move(gs);
    j["gammas"] = std::move(gm);
    return j;
}

AugmentationData read_augmentation(const Json& j, const std::string& path) {
    expect_object(j, path, {"dims", "grams", "gammas"}, {"dims", "gammas"});
    const auto dims = read_counts(j["dims"], at(path, "dims"));
    std::vector<GramForm> gs;
    if (j.contains("grams")) {
        const auto& garr = expect_array(j["grams"], at(path, "grams"));
        if (garr.size() != dims.size())
            throw ValidationError("augmentation_shape", "need one Gram matrix per A-space", at(path, "grams"));
        for (std::size_t i = 0; i < garr.size(); ++i) {
            const std::string p = at(at(path, "grams"), i);
            Matrix g = read_matrix(garr[i], p);
            if (g.rows() != dims[i])
                throw ValidationError("augmentation_shape", "Gram size does not match dims[" + std::to_string(i) + "]", p);
            gs.push_back(at_path(p, [&] { return GramForm(std::move(g)); }));
        }
    } else {
        for (auto d : dims) gs.push_back(GramForm::identity(d));
    }
    std::vector<Matrix> gammas;
    const auto& arr = expect_array(j["gammas"], at(path, "gammas"));
    for (std::size_t i = 0; i < arr.size(); ++i) gammas.push_back(read_matrix(arr[i], at(at(path, "gammas"), i)));
    return at_path(path, [&] { return AugmentationData(std::move(gs), std::move(gammas)); });
}

Json to_json(const PuiseuxBranch& b) {
    Json j;
    j["x"] = series_json(b.x());
    j["y"] = series_json(b.y());
    return j;
}

PuiseuxBranch read_branch(const Json& j, const std::string& path) {
    expect_object(j, path, {"x", "y"}, {"x", "y"});
    Series x = read_series(j["x"], at(path, "x"));
    Series y = read_series(j["y"], at(path, "y"));
    return at_path(path, [&] { return PuiseuxBranch(std::move(x), std::move(y)); });
}

Json to_json(const CurveSingularity& s) {
    Json j;
    if (!s.name().empty()) j["name"] = s.name();
    Json arr = Json::array();
    for (const auto& b : s.branches()) arr.push_back(to_json(b));
    j["branches"] = std::move(arr);
    return j;
}

CurveSingularity read_singularity(const Json& j, const std::string& path) {
    expect_object(j, path, {"name", "branches"}, {"branches"});
    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw ValidationError("schema_type", "expected string", at(path, "name"));
        name = j["name"].get<std::string>();
    }
    std::vector<PuiseuxBranch> branches;
    const auto& arr = expect_array(j["branches"], at(path, "branches"));
    for (std::size_t i = 0; i < arr.size(); ++i) branches.push_back(read_branch(arr[i], at(at(path, "branches"), i)));
    return at_path(path, [&] { return CurveSingularity(std::move(branches), std::move(name)); });
}

Json to_json(const IndexLedger& l) {
    Json j;
    j["n"] = l.n;
    j["todd_integral"] = l.todd_integral;
    j["a0"] = l.a0;
    j["higher"] = l.higher;
    return j;
}

IndexLedger read_ledger(const Json& j, const std::string& path) {
    expect_object(j, path, {"kind", "n", "todd_integral", "a0", "higher"}, {"n", "todd_integral", "a0", "higher"});
    IndexLedger l;
    l.n = read_count(j["n"], at(path, "n"));
    l.todd_integral = read_int(j["todd_integral"], at(path, "todd_integral"));
    l.a0 = read_int(j["a0"], at(path, "a0"));
    const auto& arr = expect_array(j["higher"], at(path, "higher"));
    for (std::size_t i = 0; i < arr.size(); ++i) l.higher.push_back(read_int(arr[i], at(at(path, "higher"), i)));
    at_path(path, [&] { l.validate(); });
    return l;
}

Json to_json(const ModelSpec& s) {
    Json j;
    j["n"] = s.n;
    j["harmonic_dims"] = counts(s.harmonic);
    j["rank_dims"] = counts(s.ranks);
    j["aug_dims"] = counts(s.aug);
    j["seed"] = s.seed;
    j["coefficient_bound"] = s.coefficient_bound;
    return j;
}

ModelSpec read_model_spec(const Json& j, const std::string& path) {
    expect_object(j, path, {"n", "harmonic_dims", "rank_dims", "dims", "aug_dims", "seed", "coefficient_bound"},
                  {"harmonic_dims", "aug_dims", "seed"});
    if (j.contains("rank_dims") == j.contains("dims"))
        throw ValidationError("schema_rank_or_dims", "give exactly one of rank_dims and dims", path);
    auto harmonic = read_counts(j["harmonic_dims"], at(path, "harmonic_dims"));
    auto aug = read_counts(j["aug_dims"], at(path, "aug_dims"));
    const std::uint64_t seed = read_u64(j["seed"], at(path, "seed"));
    const std::uint64_t bound =
        j.contains("coefficient_bound") ? read_u64(j["coefficient_bound"], at(path, "coefficient_bound")) : 8;
    ModelSpec spec;
    if (j.contains("dims")) {
        auto dims = read_counts(j["dims"], at(path, "dims"));
        spec = at_path(path, [&] { return ModelSpec::from_space_dims(harmonic, dims, aug, seed, bound); });
    } else {
        if (harmonic.empty())
            throw ValidationError("model_shape", "harmonic_dims must be non-empty", at(path, "harmonic_dims"));
        spec = ModelSpec{harmonic.size() - 1, harmonic, read_counts(j["rank_dims"], at(path, "rank_dims")), aug, seed,
                         bound};
        at_path(path, [&] { spec.validate(); });
    }
    if (j.contains("n") && read_count(j["n"], at(path, "n")) != spec.n)
        throw ValidationError("model_shape", "n disagrees with harmonic_dims length", at(path, "n"));
    return spec;
}

SweepParams read_sweep(const Json& j, const std::string& path) {
    expect_object(j, path, {"count", "seed", "max_degree", "max_dim", "max_aug", "coefficient_bound"}, {"count", "seed"});
    SweepParams p;
    p.count = read_count(j["count"], at(path, "count"));
    p.seed = read_u64(j["seed"], at(path, "seed"));
    if (j.contains("max_degree")) p.max_degree = read_count(j["max_degree"], at(path, "max_degree"));
    if (j.contains("max_dim")) p.max_dim = read_count(j["max_dim"], at(path, "max_dim"));
    if (j.contains("max_aug")) p.max_aug = read_count(j["max_aug"], at(path, "max_aug"));
    if (j.contains("coefficient_bound")) p.coefficient_bound = read_u64(j["coefficient_bound"], at(path, "coefficient_bound"));
    if (p.max_degree < 1) throw ValidationError("sweep_params", "max_degree must be >= 1", at(path, "max_degree"));
    if (p.max_dim < 1) throw ValidationError("sweep_params", "max_dim must be >= 1", at(path, "max_dim"));
    if (p.coefficient_bound < 1)
        throw ValidationError("coefficient_bound_positive", "coefficient_bound must be >= 1", at(path, "coefficient_bound"));
    return p;
}

Json to_json(const EntryMismatch& m) {
    Json j;
    j["row"] = m.row;
    j["col"] = m.col;
    j["lhs"] = to_string(m.lhs);
    j["rhs"] = to_string(m.rhs);
    return j;
}

Json to_json(const ChainMapReport& r) {
    Json j;
    j["pass"] = r.pass();
    j["forward"] = checks_json("m . d = d~ . m", r.forward);
    j["backward"] = checks_json("m^-1 . d~ = d . m^-1", r.backward);
    j["inverse"] = checks_json("m . m^-1 = 1", r.inverse);
    j["unipotent"] = checks_json("(m - 1)^2 = 0", r.unipotent);
    return j;
}

Json to_json(const QuasiIsoReport& r) {
    Json j;
    j["pass"] = r.pass();
    j["base_cohomology"] = counts(r.base_cohomology);
    j["tilde_cohomology"] = counts(r.tilde_cohomology);
    j["deformed_cohomology"] = counts(r.deformed_cohomology);
    j["cohomology_agrees"] = r.cohomology_agrees;
    j["chi_base"] = r.chi_base;
    j["chi_tilde"] = r.chi_tilde;
    j["chi_deformed"] = r.chi_deformed;
    j["aug_alternating_sum"] = r.aug_alternating_sum;
    j["euler_ledger_holds"] = r.euler_ledger_holds;
    return j;
}

Json to_json(const ModelReport& r) {
    Json j;
    j["seed"] = r.spec.seed;
    j["pass"] = r.pass();
    j["spec"] = to_json(r.spec);
    j["space_dims"] = counts(r.space_dims);
    Json hodge;
    hodge["pass"] = r.hodge_pass;
    hodge["harmonic_dims"] = counts(r.harmonic_dims);
    hodge["cohomology_dims"] = counts(r.cohomology_dims);
    j["hodge"] = std::move(hodge);
    j["chain_maps"] = to_json(r.chain_maps);
    j["quasi_isomorphism"] = to_json(r.quasi_iso);
    Json euler;
    euler["formula"] = "chi(total) = sum (-1)^k h_k - sum (-1)^k a_k";
    euler["pass"] = r.euler_pass;
    euler["chi_expected"] = r.chi_expected;
    euler["chi_tilde"] = r.quasi_iso.chi_tilde;
    euler["chi_deformed"] = r.quasi_iso.chi_deformed;
    j["euler_ledger"] = std::move(euler);
    return j;
}

Json to_json(const DeltaResult& r) {
    Json j;
    j["delta"] = r.delta;
    j["stabilized"] = r.stabilized;
    j["truncation"] = r.truncation;
    return j;
}

Json to_json(const LedgerReport& r) {
    Json j;
    j["formula"] = "resolution_index_ledger";
    j["ledger"] = to_json(r.ledger);
    j["chi"] = r.chi;
    j["sign_convention"] = "todd - a0 + sum_{i>=1} (-1)^(i-1) a_i";
    if (r.ledger.n >= 2) {
        Json alt;
        alt["sign_convention"] = "todd - a0 + sum_{1<=i<n} (-1)^i a_i";
        alt["chi"] = r.chi_shifted_signs;
        j["alternative"] = std::move(alt);
    }
    j["conventions_agree"] = r.conventions_agree;
    j["note"] = r.note;
    return j;
}

Json to_json(const PlaneCurveReport& r) {
    Json j;
    j["formula"] = "singular_riemann_roch";
    j["degree"] = r.degree;
    j["p_a"] = r.arithmetic_genus;
    j["g"] = r.geometric_genus;
    j["sum_delta"] = r.sum_delta;
    j["chi"] = r.chi;
    j["one_minus_p_a"] = 1 - r.arithmetic_genus;
    Json ledger = to_json(r.ledger);
    ledger["chi"] = r.chi_ledger;
    j["ledger"] = std::move(ledger);
    Json rows = Json::array();
    for (const auto& s : r.singularities) {
        Json row;
        row["name"] = s.name;
        row["branches"] = s.branches;
        row["delta"] = s.delta;
        row["truncation"] = s.truncation;
        rows.push_back(std::move(row));
    }
    j["singularities"] = std::move(rows);
    return j;
}

SceneDocument read_scene(const Json& j) {
    if (!j.is_object()) throw ValidationError("schema_type", "top level must be an object", "$");
    if (!j.contains("kind") || !j["kind"].is_string())
        throw ValidationError("schema_missing_field", "missing string field \"kind\"", "kind");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "delta") {
        expect_object(j, "", {"kind", "singularities"}, {"singularities"});
        DeltaDocument doc;
        const auto& arr = expect_array(j["singularities"], "singularities");
        for (std::size_t i = 0; i < arr.size(); ++i) doc.singularities.push_back(read_singularity(arr[i], at("singularities", i)));
        return doc;
    }
    if (kind == "curve") {
        expect_object(j, "", {"kind", "degree", "singularities"}, {"degree", "singularities"});
        CurveDocument doc;
        long long degree = read_int(j["degree"], "degree");
        if (degree < 1 || degree > 1'000'000) throw ValidationError("curve_degree", "degree must be >= 1", "degree");
        doc.curve.degree = static_cast<int>(degree);
        const auto& arr = expect_array(j["singularities"], "singularities");
        for (std::size_t i = 0; i < arr.size(); ++i)
            doc.curve.singularities.push_back(read_singularity(arr[i], at("singularities", i)));
        return doc;
    }
    if (kind == "ledger") return LedgerDocument{read_ledger(j, "")};
    if (kind == "model") {
        expect_object(j, "", {"kind", "specs", "sweep"}, {});
        if (j.contains("specs") == j.contains("sweep"))
            throw ValidationError("schema_specs_or_sweep", "give exactly one of \"specs\" and \"sweep\"", "specs");
        ModelDocument doc;
        if (j.contains("sweep")) {
            doc.specs = sweep_specs(read_sweep(j["sweep"], "sweep"));
        } else {
            const auto& arr = expect_array(j["specs"], "specs");
            for (std::size_t i = 0; i < arr.size(); ++i) doc.specs.push_back(read_model_spec(arr[i], at("specs", i)));
        }
        return doc;
    }
    throw ValidationError("schema_kind", "unknown document kind \"" + kind + "\" (expected delta, curve, ledger, model)",
                          "kind");
}

}  // namespace dw::io
