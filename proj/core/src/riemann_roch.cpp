#include "dw/riemann_roch.hpp"

#include "dw/error.hpp"

#include <numeric>

namespace dw {

void IndexLedger::validate() const {
    if (n < 1) throw ValidationError("ledger_dimension", "complex dimension n must be >= 1", "n");
    if (higher.size() != n)
        throw ValidationError("ledger_shape",
                              "expected " + std::to_string(n) + " higher entries, got " + std::to_string(higher.size()),
                              "higher");
    if (a0 < 0) throw ValidationError("ledger_nonnegative", "a0 must be >= 0", "a0");
    for (std::size_t i = 0; i < higher.size(); ++i)
        if (higher[i] < 0)
            throw ValidationError("ledger_nonnegative", "counts must be >= 0", "higher[" + std::to_string(i) + "]");
    if (higher.back() != 0)
        throw ValidationError("top_degree_vanishing",
                              "a_n = dim (R^n pi_* O_M)(X) must be 0, got " + std::to_string(higher.back()),
                              "higher[" + std::to_string(n - 1) + "]");
}

long long chi_via_ledger(const IndexLedger& ledger) {
    ledger.validate();
    long long chi = ledger.todd_integral - ledger.a0;
    for (std::size_t i = 1; i <= ledger.n; ++i) chi += (i % 2 ? 1 : -1) * ledger.higher[i - 1];
    return chi;
}

long long chi_via_ledger_shifted_signs(const IndexLedger& ledger) {
    ledger.validate();
    long long chi = ledger.todd_integral - ledger.a0;
    for (std::size_t i = 1; i < ledger.n; ++i) chi += (i % 2 ? -1 : 1) * ledger.higher[i - 1];
    return chi;
}

LedgerReport ledger_report(const IndexLedger& ledger) {
    LedgerReport r;
    r.ledger = ledger;
    r.chi = chi_via_ledger(ledger);
    r.chi_shifted_signs = chi_via_ledger_shifted_signs(ledger);
    r.conventions_agree = r.chi == r.chi_shifted_signs;
    if (ledger.n == 1)
        r.note = "n = 1: a_1 = 0, so both sign conventions coincide";
    else if (r.conventions_agree)
        r.note = "all higher counts that carry a sign vanish; conventions coincide";
    else
        r.note = "sign conventions disagree; chi uses (-1)^(i-1) on a_i, which matches direct Euler bookkeeping "
                 "of the augmented complex";
    return r;
}

long long curve_chi(long long genus, const std::vector<long long>& deltas) {
    return 1 - genus - std::accumulate(deltas.begin(), deltas.end(), 0LL);
}

long long arithmetic_genus(int degree) {
    const long long d = degree;
    return (d - 1) * (d - 2) / 2;
}

PlaneCurveReport plane_curve_report(const PlaneCurveData& data, TruncationPolicy policy) {
    if (data.degree < 1) throw ValidationError("curve_degree", "degree must be >= 1", "degree");
    PlaneCurveReport r;
    r.degree = data.degree;
    r.arithmetic_genus = arithmetic_genus(data.degree);
    std::vector<long long> deltas;
    for (const auto& s : data.singularities) {
        auto res = delta_stabilized(s, policy);
        deltas.push_back(static_cast<long long>(res.delta));
        r.singularities.push_back({s.name(), s.branch_count(), res.delta, res.truncation});
    }
    r.sum_delta = std::accumulate(deltas.begin(), deltas.end(), 0LL);
    if (r.sum_delta > r.arithmetic_genus)
        throw ValidationError("delta_bounded_by_genus",
                              "sum of deltas " + std::to_string(r.sum_delta) + " exceeds p_a = " +
                                  std::to_string(r.arithmetic_genus) + " for degree " + std::to_string(data.degree),
                              "singularities");
    r.geometric_genus = r.arithmetic_genus - r.sum_delta;
    r.chi = curve_chi(r.geometric_genus, deltas);
    r.ledger = IndexLedger{1, 1 - r.geometric_genus, r.sum_delta, {0}};
    r.chi_ledger = chi_via_ledger(r.ledger);
    if (r.chi != 1 - r.arithmetic_genus || r.chi_ledger != r.chi)
        throw InternalError("Riemann-Roch cross-check failed: chi = " + std::to_string(r.chi) +
                            ", 1 - p_a = " + std::to_string(1 - r.arithmetic_genus) +
                            ", ledger chi = " + std::to_string(r.chi_ledger));
    return r;
}

}  // namespace dw
