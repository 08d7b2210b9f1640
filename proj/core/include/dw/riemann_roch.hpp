#pragma once

#include "dw/curve.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace dw {

/// Integer data of a resolution pi : M -> X with isolated singularities:
/// the Todd integral of M, a0 = dim (pi_* O_M / O_X)(X), and
/// higher[i-1] = dim (R^i pi_* O_M)(X) for i = 1..n.
struct IndexLedger {
    std::size_t n = 1;
    long long todd_integral = 0;
    long long a0 = 0;
    std::vector<long long> higher;

    /// Throws ValidationError: n >= 1, higher.size() == n, all counts >= 0,
    /// and the top-degree term a_n vanishes.
    void validate() const;
};

/// todd - a0 + sum_{i=1}^{n} (-1)^{i-1} a_i.
long long chi_via_ledger(const IndexLedger& ledger);

/// Same data evaluated with the opposite alternating sign on the higher terms
/// (todd - a0 + sum_{i=1}^{n-1} (-1)^i a_i), which is how the deformed-index
/// count is sometimes written. Agrees with chi_via_ledger whenever every a_i
/// with i >= 1 vanishes.
long long chi_via_ledger_shifted_signs(const IndexLedger& ledger);

struct LedgerReport {
    IndexLedger ledger;
    long long chi = 0;
    long long chi_shifted_signs = 0;
    bool conventions_agree = false;
    std::string note;
};

LedgerReport ledger_report(const IndexLedger& ledger);

/// 1 - g - sum(deltas).
long long curve_chi(long long genus, const std::vector<long long>& deltas);

struct PlaneCurveData {
    int degree = 1;
    std::vector<CurveSingularity> singularities;
};

struct SingularityRow {
    std::string name;
    std::size_t branches = 0;
    std::size_t delta = 0;
    int truncation = 0;
};

struct PlaneCurveReport {
    int degree = 0;
    long long arithmetic_genus = 0;
    long long geometric_genus = 0;
    long long sum_delta = 0;
    long long chi = 0;
    IndexLedger ledger;
    long long chi_ledger = 0;
    std::vector<SingularityRow> singularities;
};

/// (d-1)(d-2)/2.
long long arithmetic_genus(int degree);

/// Computes every delta, the genera and chi, and cross-checks
/// chi = 1 - p_a = chi_via_ledger. Throws ValidationError when the deltas
/// exceed p_a, NonStabilization when a delta does not stabilize, and
/// InternalError if the cross-checks disagree.
PlaneCurveReport plane_curve_report(const PlaneCurveData& data, TruncationPolicy policy = {});

}  // namespace dw
