#pragma once

// One-parameter families {X_t} of subsets of the line, given cylindrically:
// each cell is a band between two affine boundaries, or the graph of one,
// over an interval of parameters t.

#include "semilin/interval.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace semilin {

/// t -> slope*t + intercept, or a constant infinite boundary.
class AffineBoundary {
public:
    enum class Kind { NegInf, Finite, PosInf };

    static AffineBoundary affine(Rat slope, Rat intercept) { return {Kind::Finite, std::move(slope), std::move(intercept)}; }
    static AffineBoundary constant(Rat c) { return affine(0, std::move(c)); }
    static AffineBoundary neg_inf() { return {Kind::NegInf, 0, 0}; }
    static AffineBoundary pos_inf() { return {Kind::PosInf, 0, 0}; }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    const Rat& slope() const { return slope_; }
    const Rat& intercept() const { return intercept_; }
    Extended at(const Rat& t) const;

    friend bool operator==(const AffineBoundary&, const AffineBoundary&) = default;

private:
    AffineBoundary(Kind kind, Rat slope, Rat intercept)
        : kind_(kind), slope_(std::move(slope)), intercept_(std::move(intercept)) {}

    Kind kind_;
    Rat slope_;
    Rat intercept_;
};

std::string to_string(const AffineBoundary& b);

class FiberCell {
public:
    enum class Kind { Band, Graph };

    /// Throws MalformedFamily unless lower < upper on the open domain.
    static FiberCell band(Interval domain, AffineBoundary lower, AffineBoundary upper, bool lower_closed = false,
                          bool upper_closed = false);
    /// The value must be finite.
    static FiberCell graph(Interval domain, AffineBoundary value);

    Kind kind() const { return kind_; }
    bool is_band() const { return kind_ == Kind::Band; }
    const Interval& domain() const { return domain_; }
    const AffineBoundary& lower() const { return lower_; }
    const AffineBoundary& upper() const { return upper_; }
    /// Graph cells only.
    const AffineBoundary& value() const { return lower_; }
    bool lower_closed() const { return lower_closed_; }
    bool upper_closed() const { return upper_closed_; }
    bool has_infinite_boundary() const { return !lower_.is_finite() || !upper_.is_finite(); }

    /// The cell's part of X_t; empty outside the domain.
    IntervalUnion at(const Rat& t) const;

    friend bool operator==(const FiberCell&, const FiberCell&) = default;

private:
    FiberCell(Kind kind, Interval domain, AffineBoundary lower, AffineBoundary upper, bool lc, bool uc)
        : kind_(kind), domain_(std::move(domain)), lower_(std::move(lower)), upper_(std::move(upper)),
          lower_closed_(lc), upper_closed_(uc) {}

    Kind kind_;
    Interval domain_;
    AffineBoundary lower_;
    AffineBoundary upper_;
    bool lower_closed_;
    bool upper_closed_;
};

struct Family {
    std::vector<FiberCell> cells;

    friend bool operator==(const Family&, const Family&) = default;
};

IntervalUnion fiber(const Family& f, const Rat& t);

/// Parameters in the union of the cell domains whose fiber is bounded.
IntervalUnion bounded_params(const Family& f);

/// Graph cells whose fiber at t is the left (right) endpoint set of X_t.
/// Throws UnboundedFiber if any fiber is unbounded.
Family endpoint_family(const Family& f, Side side);

struct LengthWitness {
    /// Supremum over bounded fibers of the longest component; 0 when there
    /// are no bounded fibers.
    Extended bound;
    /// Refinement piece on which the supremum is attained or approached.
    Interval piece;
    /// Length of the extremal component on that piece: slope*t + intercept.
    Rat slope;
    Rat intercept;
    /// A critical parameter, or an infinite end, where the supremum is reached.
    Extended at;
};

LengthWitness uniform_length_bound(const Family& f);

/// Sorted refinement parameters: finite domain endpoints and crossings of
/// finite boundaries.
std::vector<Rat> critical_params(const Family& f);

/// For each left endpoint a of X_t, the pair (a, b) with b = a for a point
/// component and b = min(right endpoints in (a, a + K]) otherwise. K defaults to
/// the uniform length bound; a supplied K must not be smaller.
/// The result is cross-checked against the component list of X_t.
std::vector<std::pair<Rat, Rat>> match_endpoints(const Family& f, const Rat& t, std::optional<Rat> k = std::nullopt);

}  // namespace semilin
