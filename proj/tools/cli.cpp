#include "cli.hpp"

#include "dw/error.hpp"
#include "dw/io.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

namespace dw::cli {

namespace {

using io::Json;

struct Options {
    std::string path;
    bool text = false;
    int truncation = 16;
    int max_truncation = 256;
    unsigned jobs = 1;
    bool unprojected_degree_zero = false;
};

struct Failure {
    int code;
    std::string message;
};

std::string line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

io::SceneDocument load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Failure{kValidation, "cannot open '" + path + "'"};
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string text = buf.str();
    Json j;
    try {
        j = Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Failure{kValidation, path + ": malformed JSON at " + line_col(text, e.byte) + ": " + e.what()};
    }
    try {
        return io::read_scene(j);
    } catch (const ValidationError& e) {
        throw Failure{kValidation, path + ": " + e.what()};
    }
}

template <class Doc>
const Doc& expect_kind(const io::SceneDocument& doc, const char* kind, const std::string& path) {
    if (auto* d = std::get_if<Doc>(&doc)) return *d;
    throw Failure{kValidation, path + ": expected a \"" + std::string(kind) + "\" document"};
}

TruncationPolicy policy_of(const Options& o) {
    if (o.truncation < 2) throw Failure{kValidation, "--truncation must be >= 2"};
    if (o.max_truncation < o.truncation) throw Failure{kValidation, "--max-truncation must be >= --truncation"};
    return TruncationPolicy{o.truncation, o.max_truncation};
}

void print_json(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

// --- delta -------------------------------------------------------------------

int cmd_delta(const Options& o, std::ostream& out) {
    const auto doc = load(o.path);
    const auto& delta_doc = expect_kind<io::DeltaDocument>(doc, "delta", o.path);
    const auto policy = policy_of(o);
    int status = kSuccess;
    for (std::size_t i = 0; i < delta_doc.singularities.size(); ++i) {
        const auto& s = delta_doc.singularities[i];
        auto total = delta_stabilized(s, policy);
        std::vector<std::size_t> branch_deltas;
        for (std::size_t b = 0; b < s.branch_count(); ++b)
            branch_deltas.push_back(delta_stabilized(s.restricted({b}), policy).delta);
        Json pairs = Json::array();
        std::size_t decomposed = 0;
        for (auto d : branch_deltas) decomposed += d;
        for (std::size_t a = 0; a < s.branch_count(); ++a)
            for (std::size_t b = a + 1; b < s.branch_count(); ++b) {
                auto im = intersection_multiplicity(s, a, b, policy);
                decomposed += im;
                pairs.push_back(Json{{"i", a}, {"j", b}, {"intersection_multiplicity", im}});
            }
        const bool additive = decomposed == total.delta;
        if (!additive) status = kInternal;

        Json j;
        j["index"] = i;
        if (!s.name().empty()) j["name"] = s.name();
        j["delta"] = total.delta;
        j["stabilized"] = total.stabilized;
        j["truncation"] = total.truncation;
        j["branches"] = s.branch_count();
        j["branch_deltas"] = branch_deltas;
        j["pairs"] = std::move(pairs);
        j["additive"] = additive;
        if (auto sg = s.branch_count() == 1 ? delta_semigroup(s.branches()[0]) : std::nullopt) j["semigroup_gaps"] = *sg;

        if (o.text) {
            out << std::left << std::setw(16) << (s.name().empty() ? "#" + std::to_string(i) : s.name())
                << " delta = " << total.delta << "  (truncation " << total.truncation << ", " << s.branch_count()
                << " branch" << (s.branch_count() == 1 ? "" : "es") << ")\n";
            for (std::size_t b = 0; b < branch_deltas.size(); ++b)
                out << "    branch " << b << ": delta = " << branch_deltas[b] << '\n';
            for (const auto& p : j["pairs"])
                out << "    (" << p["i"].get<std::size_t>() << ", " << p["j"].get<std::size_t>()
                    << "): intersection multiplicity = " << p["intersection_multiplicity"].get<std::size_t>() << '\n';
        } else {
            print_json(out, j);
        }
    }
    return status;
}

// --- curve -------------------------------------------------------------------

int cmd_curve(const Options& o, std::ostream& out) {
    const auto doc = load(o.path);
    const auto& curve = expect_kind<io::CurveDocument>(doc, "curve", o.path).curve;
    PlaneCurveReport r;
    try {
        r = plane_curve_report(curve, policy_of(o));
    } catch (const ValidationError& e) {
        throw Failure{kValidation, o.path + ": " + e.what()};
    }
    if (o.text) {
        out << "degree            " << r.degree << '\n'
            << "arithmetic genus  " << r.arithmetic_genus << '\n'
            << "sum of deltas     " << r.sum_delta << '\n'
            << "geometric genus   " << r.geometric_genus << '\n'
            << "chi = 1 - g - sum " << r.chi << '\n'
            << "1 - p_a           " << 1 - r.arithmetic_genus << '\n'
            << "ledger chi        " << r.chi_ledger << '\n';
        for (const auto& s : r.singularities)
            out << "  " << std::left << std::setw(16) << s.name << " delta = " << s.delta << '\n';
    } else {
        print_json(out, io::to_json(r));
    }
    return kSuccess;
}

// --- ledger ------------------------------------------------------------------

int cmd_ledger(const Options& o, std::ostream& out) {
    const auto doc = load(o.path);
    const auto& ledger = expect_kind<io::LedgerDocument>(doc, "ledger", o.path).ledger;
    const auto r = ledger_report(ledger);
    if (o.text) {
        out << "chi                     " << r.chi << "   [todd - a0 + sum (-1)^(i-1) a_i]\n";
        if (ledger.n >= 2) out << "chi (alternative signs) " << r.chi_shifted_signs << "   [todd - a0 + sum (-1)^i a_i]\n";
        out << r.note << '\n';
    } else {
        print_json(out, io::to_json(r));
    }
    return kSuccess;
}

// --- model-verify ------------------------------------------------------------

std::optional<std::uint64_t> seed_override() {
    const char* env = std::getenv("DW_SEED_OVERRIDE");
    if (!env || !*env) return std::nullopt;
    try {
        return io::read_u64_text(env);
    } catch (const ValidationError& e) {
        throw Failure{kValidation, std::string("DW_SEED_OVERRIDE: ") + e.what()};
    }
}

int cmd_model_verify(const Options& o, std::ostream& out) {
    const auto doc = load(o.path);
    auto specs = expect_kind<io::ModelDocument>(doc, "model", o.path).specs;
    if (auto seed = seed_override())
        for (auto& s : specs) s.seed = *seed;
    DeformOptions deform;
    deform.project_degree_zero = !o.unprojected_degree_zero;
    const auto reports = verify_models(specs, std::max(1u, o.jobs), deform);
    std::size_t passed = 0;
    for (std::size_t i = 0; i < reports.size(); ++i) {
        const auto& r = reports[i];
        passed += r.pass();
        if (o.text) {
            out << std::setw(5) << i << "  seed " << std::setw(20) << r.spec.seed << "  " << (r.pass() ? "PASS" : "FAIL")
                << "  hodge=" << r.hodge_pass << " chain=" << r.chain_maps.pass()
                << " cohomology=" << r.quasi_iso.cohomology_agrees << " euler=" << r.euler_pass
                << " chi=" << r.chi_expected << '\n';
        } else {
            Json j;
            j["index"] = i;
            j.update(io::to_json(r));
            print_json(out, j);
        }
    }
    if (o.text) out << passed << "/" << reports.size() << " specs passed\n";
    return passed == reports.size() ? kSuccess : kInternal;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact finite-dimensional checks for augmented Hilbert complexes and singular curve indices", "dw"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("file", o.path, "JSON input document")->required();
        sub->add_flag("--json", [&](std::int64_t) { o.text = false; }, "emit JSON (default)");
        sub->add_flag("--text", o.text, "emit aligned human-readable text");
        sub->add_option("--truncation", o.truncation, "starting truncation order for delta")->capture_default_str();
        sub->add_option("--max-truncation", o.max_truncation, "largest truncation tried before giving up")
            ->capture_default_str();
        sub->add_option("--jobs", o.jobs, "worker threads for model sweeps")->capture_default_str();
    };
    auto* delta = app.add_subcommand("delta", "delta invariants of plane-curve singularities");
    auto* curve = app.add_subcommand("curve", "Riemann-Roch report for a plane curve");
    auto* ledger = app.add_subcommand("ledger", "Euler characteristic from resolution data");
    auto* model = app.add_subcommand("model-verify", "build and verify seeded model complexes");
    for (auto* sub : {delta, curve, ledger, model}) add_common(sub);
    model->add_flag("--unprojected-degree-zero", o.unprojected_degree_zero,
                    "use gamma_0 without the harmonic projector in the deformed differential");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kValidation;
    }

    try {
        if (*delta) return cmd_delta(o, out);
        if (*curve) return cmd_curve(o, out);
        if (*ledger) return cmd_ledger(o, out);
        return cmd_model_verify(o, out);
    } catch (const Failure& f) {
        err << "error: " << f.message << '\n';
        return f.code;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kValidation;
    } catch (const NonStabilization& e) {
        err << "error: " << e.what() << "; retry with a larger --max-truncation\n";
        return kComputationLimit;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kInternal;
    }
}

}  // namespace dw::cli
