#pragma once

#include "dw/model.hpp"
#include "dw/riemann_roch.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace dw::io {

/// Key order in every emitted object is insertion order, so output is
/// byte-stable for a given input.
using Json = nlohmann::ordered_json;

// Every reader takes the JSON path of the value it parses and throws
// ValidationError naming that path. Unknown object keys are rejected.

Json to_json(const Rational& q);
Rational read_rational(const Json& j, const std::string& path);

/// {"rows": r, "cols": c, "entries": ["p/q", ...]} in row-major order.
Json to_json(const Matrix& m);
Matrix read_matrix(const Json& j, const std::string& path);

/// {"dims": [...], "differentials": [matrix...], "grams": [matrix...]}
Json to_json(const CochainComplex& c);
CochainComplex read_complex(const Json& j, const std::string& path = "complex");

/// {"dims": [...], "grams": [matrix...], "gammas": [matrix...]}
Json to_json(const AugmentationData& a);
AugmentationData read_augmentation(const Json& j, const std::string& path = "augmentation");

/// {"x": [[exponent, "p/q"], ...], "y": [...]}
Json to_json(const PuiseuxBranch& b);
PuiseuxBranch read_branch(const Json& j, const std::string& path);

/// {"name": "...", "branches": [...]}; name optional.
Json to_json(const CurveSingularity& s);
CurveSingularity read_singularity(const Json& j, const std::string& path);

/// {"n": n, "todd_integral": t, "a0": a0, "higher": [a_1..a_n]}
Json to_json(const IndexLedger& l);
IndexLedger read_ledger(const Json& j, const std::string& path);

/// {"n", "harmonic_dims", "rank_dims" | "dims", "aug_dims", "seed", "coefficient_bound"}
Json to_json(const ModelSpec& s);
ModelSpec read_model_spec(const Json& j, const std::string& path);
SweepParams read_sweep(const Json& j, const std::string& path);
/// Decimal unsigned 64-bit integer; throws ValidationError otherwise.
std::uint64_t read_u64_text(std::string_view text);

Json to_json(const EntryMismatch& m);
Json to_json(const ChainMapReport& r);
Json to_json(const QuasiIsoReport& r);
Json to_json(const ModelReport& r);
Json to_json(const DeltaResult& r);
Json to_json(const LedgerReport& r);
Json to_json(const PlaneCurveReport& r);

struct DeltaDocument {
    std::vector<CurveSingularity> singularities;
};
struct CurveDocument {
    PlaneCurveData curve;
};
struct LedgerDocument {
    IndexLedger ledger;
};
struct ModelDocument {
    std::vector<ModelSpec> specs;
};

using SceneDocument = std::variant<DeltaDocument, CurveDocument, LedgerDocument, ModelDocument>;

/// Dispatches on the "kind" field: "delta", "curve", "ledger" or "model".
SceneDocument read_scene(const Json& j);

}  // namespace dw::io
