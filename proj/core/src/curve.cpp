#include "dw/curve.hpp"

#include "dw/error.hpp"

#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>

namespace dw {

namespace {

void validate_series(const Series& s, const char* field) {
    for (std::size_t i = 0; i < s.size(); ++i) {
        const std::string at = std::string(field) + "[" + std::to_string(i) + "]";
        if (s[i].exponent < 1)
            throw ValidationError("branch_through_origin", "exponents must be >= 1", at);
        if (sgn(s[i].coefficient) == 0) throw ValidationError("series_nonzero_coefficients", "zero coefficient", at);
        if (i > 0 && s[i].exponent <= s[i - 1].exponent)
            throw ValidationError("series_exponents_increasing", "exponents must increase strictly", at);
    }
}

std::optional<unsigned> order(const Series& s) {
    if (s.empty()) return std::nullopt;
    return s.front().exponent;
}

// Truncated power series a_0 + a_1 t + ... + a_{N-1} t^{N-1}; multiplication by
// a sparse branch coordinate drops every term of degree >= N.
using Dense = std::vector<Rational>;

Dense times_sparse(const Dense& v, const Series& s, std::size_t n) {
    Dense out(n);
    for (const auto& term : s)
        for (std::size_t j = 0; j + term.exponent < n; ++j)
            if (sgn(v[j]) != 0) out[j + term.exponent] += v[j] * term.coefficient;
    return out;
}

// Row echelon basis keyed by pivot position; rows are scaled so the pivot is 1.
class EchelonSpan {
public:
    explicit EchelonSpan(std::size_t width) : width_(width) {}

    // Reduces v in place against the current rows; returns true and stores it if
    // it was independent.
    bool insert(Dense& v) {
        for (std::size_t j = 0; j < width_; ++j) {
            if (sgn(v[j]) == 0) continue;
            auto it = rows_.find(j);
            if (it == rows_.end()) {
                Rational inv = 1 / v[j];
                for (std::size_t c = j; c < width_; ++c) v[c] *= inv;
                rows_.emplace(j, v);
                return true;
            }
            Rational f = v[j];
            const Dense& r = it->second;
            for (std::size_t c = j; c < width_; ++c)
                if (sgn(r[c]) != 0) v[c] -= f * r[c];
        }
        return false;
    }

    std::size_t dim() const noexcept { return rows_.size(); }

private:
    std::size_t width_;
    std::map<std::size_t, Dense> rows_;
};

}  // namespace

PuiseuxBranch::PuiseuxBranch(Series x, Series y) : x_(std::move(x)), y_(std::move(y)) {
    if (x_.empty() && y_.empty())
        throw ValidationError("branch_nonconstant", "x and y series cannot both be empty");
    validate_series(x_, "x");
    validate_series(y_, "y");
    unsigned g = 0;
    for (const auto& t : x_) g = std::gcd(g, t.exponent);
    for (const auto& t : y_) g = std::gcd(g, t.exponent);
    if (g != 1)
        throw ValidationError("branch_primitive",
                              "gcd of all exponents is " + std::to_string(g) +
                                  "; the parametrization factors through t -> t^" + std::to_string(g));
}

std::optional<unsigned> PuiseuxBranch::x_order() const { return order(x_); }
std::optional<unsigned> PuiseuxBranch::y_order() const { return order(y_); }

CurveSingularity::CurveSingularity(std::vector<PuiseuxBranch> branches, std::string name)
    : branches_(std::move(branches)), name_(std::move(name)) {
    if (branches_.empty()) throw ValidationError("singularity_nonempty", "at least one branch is required", "branches");
    for (std::size_t i = 0; i < branches_.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (branches_[i] == branches_[j])
                throw ValidationError("branches_distinct",
                                      "branch " + std::to_string(i) + " repeats branch " + std::to_string(j),
                                      "branches[" + std::to_string(i) + "]");
}

CurveSingularity CurveSingularity::restricted(const std::vector<std::size_t>& indices) const {
    std::vector<PuiseuxBranch> sub;
    for (auto i : indices) sub.push_back(branches_.at(i));
    return CurveSingularity(std::move(sub), name_);
}

std::size_t delta_at_truncation(const CurveSingularity& s, int truncation) {
    if (truncation < 1) throw std::invalid_argument("truncation must be positive");
    const std::size_t n = static_cast<std::size_t>(truncation);
    const std::size_t r = s.branch_count();
    const std::size_t width = r * n;

    // The image of Q[x, y] is the smallest subspace containing 1 that is closed
    // under multiplication by x and by y, so saturate from 1.
    auto multiply = [&](const Dense& v, bool by_x) {
        Dense out(width);
        for (std::size_t b = 0; b < r; ++b) {
            const auto& br = s.branches()[b];
            Dense part(v.begin() + static_cast<std::ptrdiff_t>(b * n), v.begin() + static_cast<std::ptrdiff_t>((b + 1) * n));
            Dense prod = times_sparse(part, by_x ? br.x() : br.y(), n);
            std::copy(prod.begin(), prod.end(), out.begin() + static_cast<std::ptrdiff_t>(b * n));
        }
        return out;
    };

    EchelonSpan span(width);
    std::deque<Dense> frontier;
    Dense one(width);
    for (std::size_t b = 0; b < r; ++b) one[b * n] = 1;
    frontier.push_back(one);
    span.insert(one);
    while (!frontier.empty() && span.dim() < width) {
        Dense v = std::move(frontier.front());
        frontier.pop_front();
        for (bool by_x : {true, false}) {
            Dense w = multiply(v, by_x);
            Dense reduced = w;
            if (span.insert(reduced)) frontier.push_back(std::move(w));
        }
    }
    return width - span.dim();
}

unsigned multiplicity(const PuiseuxBranch& b) {
    auto ox = b.x_order(), oy = b.y_order();
    if (ox && oy) return std::min(*ox, *oy);
    return ox ? *ox : *oy;
}

unsigned max_multiplicity(const CurveSingularity& s) {
    unsigned e = 1;
    for (const auto& b : s.branches()) e = std::max(e, multiplicity(b));
    return e;
}

DeltaResult delta_bruteforce(const CurveSingularity& s, int truncation) {
    if (truncation < 2) throw std::invalid_argument("truncation must be >= 2");
    // If the codimension does not grow over a window as long as the largest
    // branch multiplicity E, then t^N lies in O + t^(N+E), and multiplying by a
    // generic linear form pushes the remainder into the conductor: N is past it.
    const int window = static_cast<int>(max_multiplicity(s));
    std::size_t at_n = delta_at_truncation(s, truncation);
    std::size_t at_next = delta_at_truncation(s, truncation + window);
    return DeltaResult{at_n, at_n == at_next, truncation};
}

DeltaResult delta_stabilized(const CurveSingularity& s, TruncationPolicy policy) {
    int n = std::max(policy.start, 2);
    for (;;) {
        auto res = delta_bruteforce(s, n);
        if (res.stabilized) return res;
        if (n >= policy.cap)
            throw NonStabilization("delta did not stabilize up to truncation " + std::to_string(n) +
                                       (s.name().empty() ? "" : " for '" + s.name() + "'"),
                                   n);
        n = std::min(2 * n, policy.cap);
    }
}

std::optional<std::size_t> delta_semigroup(const PuiseuxBranch& branch) {
    if (branch.x().size() != 1 || branch.y().size() != 1) return std::nullopt;
    const std::size_t a = branch.x().front().exponent;
    const std::size_t b = branch.y().front().exponent;
    if (std::gcd(a, b) != 1) return std::nullopt;
    return (a - 1) * (b - 1) / 2;
}

std::size_t intersection_multiplicity(const CurveSingularity& s, std::size_t i, std::size_t j,
                                      TruncationPolicy policy) {
    if (i == j) throw std::invalid_argument("intersection_multiplicity needs two distinct branches");
    if (i >= s.branch_count() || j >= s.branch_count()) throw std::out_of_range("branch index out of range");
    const std::size_t pair = delta_stabilized(s.restricted({i, j}), policy).delta;
    const std::size_t di = delta_stabilized(s.restricted({i}), policy).delta;
    const std::size_t dj = delta_stabilized(s.restricted({j}), policy).delta;
    if (pair < di + dj) throw InternalError("delta of a pair below the sum of its branch deltas");
    return pair - di - dj;
}

}  // namespace dw
