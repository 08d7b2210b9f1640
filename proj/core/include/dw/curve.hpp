#pragma once

#include "dw/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace dw {

/// coefficient * t^exponent, exponent >= 1.
struct SeriesTerm {
    unsigned exponent = 1;
    Rational coefficient;
    friend bool operator==(const SeriesTerm&, const SeriesTerm&) = default;
};

using Series = std::vector<SeriesTerm>;

/// A branch of a plane-curve germ at the origin, given by its normalization
/// t -> (x(t), y(t)). Construction validates that the branch passes through
/// the origin, that exponents increase strictly with nonzero coefficients,
/// and that the parametrization is primitive (exponent gcd 1).
class PuiseuxBranch {
public:
    PuiseuxBranch(Series x, Series y);

    const Series& x() const noexcept { return x_; }
    const Series& y() const noexcept { return y_; }

    /// t-adic order of x or y; nullopt for the zero series.
    std::optional<unsigned> x_order() const;
    std::optional<unsigned> y_order() const;

    friend bool operator==(const PuiseuxBranch&, const PuiseuxBranch&) = default;

private:
    Series x_;
    Series y_;
};

/// Germ of a reduced plane curve at one point, as a set of branches.
class CurveSingularity {
public:
    /// Throws ValidationError for an empty branch list or repeated branches.
    explicit CurveSingularity(std::vector<PuiseuxBranch> branches, std::string name = {});

    const std::vector<PuiseuxBranch>& branches() const noexcept { return branches_; }
    std::size_t branch_count() const noexcept { return branches_.size(); }
    const std::string& name() const noexcept { return name_; }

    /// The germ formed by a subset of the branches.
    CurveSingularity restricted(const std::vector<std::size_t>& indices) const;

private:
    std::vector<PuiseuxBranch> branches_;
    std::string name_;
};

/// codim of the image of Q[x, y] in (Q[t]/t^N)^r, where r is the number of
/// branches. Grows with N up to the conductor, then equals delta.
std::size_t delta_at_truncation(const CurveSingularity& s, int truncation);

struct DeltaResult {
    std::size_t delta = 0;
    bool stabilized = false;
    int truncation = 0;
};

/// Largest branch multiplicity min(ord x, ord y); 1 for smooth branches.
unsigned multiplicity(const PuiseuxBranch& branch);
unsigned max_multiplicity(const CurveSingularity& s);

/// delta at truncation N. `stabilized` is set iff the same value is obtained
/// at N + E with E = max_multiplicity(s) (N + 1 when every branch is smooth);
/// in that case the value is the true delta.
/// Throws std::invalid_argument for N < 2.
DeltaResult delta_bruteforce(const CurveSingularity& s, int truncation);

struct TruncationPolicy {
    int start = 16;
    int cap = 256;
};

/// Doubles the truncation from `policy.start` until delta_bruteforce
/// stabilizes. Throws NonStabilization once `policy.cap` is exceeded.
DeltaResult delta_stabilized(const CurveSingularity& s, TruncationPolicy policy = {});

/// Gap count of the semigroup <a, b> for a branch (c1 t^a, c2 t^b) with
/// gcd(a, b) = 1, i.e. (a-1)(b-1)/2; nullopt for any other shape.
std::optional<std::size_t> delta_semigroup(const PuiseuxBranch& branch);

/// delta({i, j}) - delta({i}) - delta({j}).
std::size_t intersection_multiplicity(const CurveSingularity& s, std::size_t i, std::size_t j,
                                      TruncationPolicy policy = {});

}  // namespace dw
