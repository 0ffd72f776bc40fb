#pragma once

// Exact semilinear subsets of the line: finite unions of points and
// intervals with rational (or infinite) endpoints, kept in a canonical form.

#include "semilin/rational.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace semilin {

/// A nonempty convex subset of the line. Closed ends are finite; lo == hi
/// only for a point, which is closed on both sides.
class Interval {
public:
    /// Validating constructor; throws Error(MalformedInterval).
    Interval(Extended lo, Extended hi, bool lo_closed, bool hi_closed);

    static Interval open(Extended lo, Extended hi) { return {std::move(lo), std::move(hi), false, false}; }
    static Interval closed(Rat lo, Rat hi) { return {std::move(lo), std::move(hi), true, true}; }
    static Interval point(const Rat& p) { return {p, p, true, true}; }
    static Interval line() { return open(Extended::neg_inf(), Extended::pos_inf()); }

    const Extended& lo() const { return lo_; }
    const Extended& hi() const { return hi_; }
    bool lo_closed() const { return lo_closed_; }
    bool hi_closed() const { return hi_closed_; }

    bool is_point() const { return lo_ == hi_; }
    bool is_bounded() const { return lo_.is_finite() && hi_.is_finite(); }
    bool contains(const Rat& x) const;
    /// hi - lo; infinite for rays.
    Extended length() const;

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    Extended lo_;
    Extended hi_;
    bool lo_closed_;
    bool hi_closed_;
};

std::string to_string(const Interval& iv);

class IntervalUnion;

namespace detail {
/// Wraps a list already known to be canonical (sweep output).
IntervalUnion adopt_canonical(std::vector<Interval> parts);
}  // namespace detail

/// Canonical finite union of pairwise disjoint, non-mergeable intervals,
/// sorted left to right. The empty list is the empty set.
class IntervalUnion {
public:
    IntervalUnion() = default;

    static IntervalUnion empty() { return {}; }
    static IntervalUnion full() { return IntervalUnion::of(Interval::line()); }
    static IntervalUnion of(const Interval& iv);
    static IntervalUnion points(std::span<const Rat> pts);

    std::span<const Interval> parts() const { return parts_; }
    std::size_t size() const { return parts_.size(); }
    bool is_empty() const { return parts_.empty(); }
    bool is_full() const;
    bool contains(const Rat& x) const;

    bool is_bounded() const;
    /// inf/sup of the set; precondition: nonempty.
    const Extended& inf() const;
    const Extended& sup() const;

    friend bool operator==(const IntervalUnion&, const IntervalUnion&) = default;

private:
    friend IntervalUnion detail::adopt_canonical(std::vector<Interval> parts);
    explicit IntervalUnion(std::vector<Interval> canonical) : parts_(std::move(canonical)) {}

    std::vector<Interval> parts_;
};

std::string to_string(const IntervalUnion& x);

/// Canonical form of an arbitrary finite union; idempotent and insensitive
/// to the order of `raw`.
IntervalUnion normalize(std::span<const Interval> raw);

enum class BoolKind { Union, Intersect, Difference, SymmDiff, Complement };

/// Exact boolean combination. `y` must be absent exactly for Complement.
IntervalUnion bool_op(BoolKind kind, const IntervalUnion& x, const IntervalUnion* y = nullptr);

IntervalUnion set_union(const IntervalUnion& x, const IntervalUnion& y);
IntervalUnion set_intersect(const IntervalUnion& x, const IntervalUnion& y);
IntervalUnion set_difference(const IntervalUnion& x, const IntervalUnion& y);
IntervalUnion set_symmdiff(const IntervalUnion& x, const IntervalUnion& y);
IntervalUnion set_complement(const IntervalUnion& x);

/// Image of x under t -> q*t + a. Throws InvalidArgument when q == 0.
IntervalUnion affine_op(const IntervalUnion& x, const Rat& q, const Rat& a);
inline IntervalUnion translate(const IntervalUnion& x, const Rat& a) { return affine_op(x, Rat(1), a); }

std::vector<Interval> components(const IntervalUnion& x);

enum class Side { Left, Right };

/// Finite left (right) endpoints of the components, ascending. Infinite ends
/// contribute nothing and a point component contributes to both sides.
std::vector<Rat> endpoints(const IntervalUnion& x, Side side);

enum class BoundednessClass { Bounded, Cobounded, BothUnbounded, DegenerateEmptyOrFull };

struct Boundedness {
    BoundednessClass cls;
    /// For nonempty bounded x: a shift with (a + x) and x disjoint.
    std::optional<Rat> witness;
};

Boundedness boundedness(const IntervalUnion& x);
std::string_view to_string(BoundednessClass cls);

enum class TopoKind { Closure, Interior, Frontier };

IntervalUnion topo_op(const IntervalUnion& x, TopoKind kind);

struct Metrics {
    Extended max_component_length;
    Extended diameter;
};

/// Both values are 0 for the empty set.
Metrics metrics(const IntervalUnion& x);

/// Which endpoint differences isolate_interval may try.
enum class ShiftSearch { LeftEndpoints, AllEndpoints };

struct Isolation {
    Rat shift;
    Interval single;
};

/// Finds d among endpoint differences such that (x + d) and x meet in exactly
/// one component of x. Ties go to the smallest |d|, then to positive d.
/// Throws PreconditionViolation unless x is bounded with >= 2 components, and
/// NoIsolatingShift when the search is exhausted.
Isolation isolate_interval(const IntervalUnion& x, ShiftSearch search = ShiftSearch::AllEndpoints);

}  // namespace semilin
