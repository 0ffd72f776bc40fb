#pragma once

// Semilinear subsets of the plane of dimension at most one: finitely many
// points together with segments, rays and lines. Every line-like piece lives
// on a carrier line, either the graph of x -> slope*x + intercept or a
// vertical line x = c, and is described by an interval of the carrier's
// parameter (x for graphs, y for verticals).

#include "semilin/interval.hpp"

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace semilin {

struct Point2 {
    Rat x;
    Rat y;

    friend bool operator==(const Point2&, const Point2&) = default;
    friend std::strong_ordering operator<=>(const Point2& a, const Point2& b) {
        if (auto c = compare(a.x, b.x); c != 0) return c;
        return compare(a.y, b.y);
    }
};

std::string to_string(const Point2& p);

/// A rational slope or VERTICAL. Vertical orders after every rational.
class Slope {
public:
    Slope(Rat value) : value_(std::move(value)) {}  // NOLINT implicit
    static Slope vertical() { return Slope(); }

    bool is_vertical() const { return !value_.has_value(); }
    const Rat& value() const;

    friend bool operator==(const Slope&, const Slope&) = default;
    friend std::strong_ordering operator<=>(const Slope& a, const Slope& b);

private:
    Slope() = default;
    std::optional<Rat> value_;
};

std::string to_string(const Slope& s);

/// A line in the plane: y = slope*x + offset, or x = offset when vertical.
struct Carrier {
    Slope slope;
    Rat offset;

    static Carrier graph(Rat slope, Rat intercept) { return {Slope(std::move(slope)), std::move(intercept)}; }
    static Carrier vertical(Rat abscissa) { return {Slope::vertical(), std::move(abscissa)}; }

    bool is_vertical() const { return slope.is_vertical(); }
    Point2 at(const Rat& param) const;
    Rat param_of(const Point2& p) const;
    bool contains(const Point2& p) const;
    /// The unique common point of two non-parallel carriers.
    std::optional<Point2> meet(const Carrier& other) const;

    friend bool operator==(const Carrier&, const Carrier&) = default;
    friend std::strong_ordering operator<=>(const Carrier& a, const Carrier& b) {
        if (auto c = a.slope <=> b.slope; c != 0) return c;
        return compare(a.offset, b.offset);
    }
};

/// Point(x, y), Seg(slope, intercept, domain) or VSeg(abscissa, range).
/// Seg and VSeg carry a non-degenerate parameter interval.
class Cell {
public:
    enum class Kind { Point, Seg, VSeg };

    static Cell point(Rat x, Rat y);
    static Cell seg(Rat slope, Rat intercept, Interval domain);
    static Cell vseg(Rat abscissa, Interval range);
    /// Seg or VSeg depending on the carrier; throws MalformedCell for a point span.
    static Cell on(const Carrier& carrier, Interval span);

    Kind kind() const { return kind_; }
    bool is_point() const { return kind_ == Kind::Point; }
    /// Point cells only.
    const Point2& location() const;
    /// Seg/VSeg only.
    const Carrier& carrier() const;
    const Interval& span() const;

    bool contains(const Point2& p) const;
    bool is_bounded() const;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend std::strong_ordering operator<=>(const Cell& a, const Cell& b);

private:
    Cell(Kind kind, Point2 location, Carrier carrier, Interval span)
        : kind_(kind), location_(std::move(location)), carrier_(std::move(carrier)), span_(std::move(span)) {}

    Kind kind_;
    Point2 location_;
    Carrier carrier_;
    Interval span_;
};

std::string to_string(const Cell& c);

class PlanarComplex;

namespace detail {
PlanarComplex adopt_canonical_cells(std::vector<Cell> cells);
}  // namespace detail

/// Canonical dim <= 1 subset of the plane. Cells are pairwise disjoint, maximal
/// along their carrier, and sorted (points first). A point on several carriers
/// belongs to the first carrier, in (slope, offset) order, on which it is
/// non-isolated; points lying on no such carrier are Point cells.
class PlanarComplex {
public:
    PlanarComplex() = default;

    std::span<const Cell> cells() const { return cells_; }
    bool is_empty() const { return cells_.empty(); }
    bool contains(const Point2& p) const;
    /// Sorted distinct carriers of the line cells.
    std::vector<Carrier> carriers() const;

    friend bool operator==(const PlanarComplex&, const PlanarComplex&) = default;

private:
    friend PlanarComplex detail::adopt_canonical_cells(std::vector<Cell> cells);
    explicit PlanarComplex(std::vector<Cell> cells) : cells_(std::move(cells)) {}

    std::vector<Cell> cells_;
};

std::string to_string(const PlanarComplex& x);

PlanarComplex normalize(std::span<const Cell> raw);
inline PlanarComplex make_complex(std::initializer_list<Cell> cells) {
    return normalize(std::span<const Cell>(cells.begin(), cells.size()));
}

/// Union, Intersect, Difference and SymmDiff; Complement leaves the dim <= 1
/// universe and is rejected with DimensionMismatch.
PlanarComplex bool_op(BoolKind kind, const PlanarComplex& x, const PlanarComplex& y);

/// Image under (x, y) -> (x, y) + shift, preceded by (x, y) -> (y, x) when swap.
PlanarComplex affine_image(const PlanarComplex& x, const Point2& shift, bool swap);
inline PlanarComplex translate(const PlanarComplex& x, const Point2& shift) { return affine_image(x, shift, false); }
inline PlanarComplex swap_axes(const PlanarComplex& x) { return affine_image(x, Point2{0, 0}, true); }
/// Image under (x, y) -> (q*x, q*y), q != 0.
PlanarComplex scale(const PlanarComplex& x, const Rat& q);

bool is_bounded(const PlanarComplex& x);

enum class PlanarTopo { Closure, Frontier };

/// The interior of a dim <= 1 set is empty, so the frontier is the closure.
PlanarComplex topo_op(const PlanarComplex& x, PlanarTopo kind);

/// Pullback of x along a line: {t : carrier.at(t) in x}.
IntervalUnion section(const PlanarComplex& x, const Carrier& line);
/// axis 1 or 2.
IntervalUnion project(const PlanarComplex& x, int axis);

/// Points at which x is locally closed under u - v + w.
PlanarComplex affine_part(const PlanarComplex& x);

/// One ray of the local star at a point: the carrier direction and which way.
struct Direction {
    Slope slope;
    bool positive;

    friend bool operator==(const Direction&, const Direction&) = default;
    friend std::strong_ordering operator<=>(const Direction& a, const Direction& b) {
        if (auto c = a.slope <=> b.slope; c != 0) return c;
        return a.positive <=> b.positive;
    }
};

/// Directions of the half-segments of x emanating from p (p must lie in x).
std::vector<Direction> local_star(const PlanarComplex& x, const Point2& p);

/// Same germ up to translation; throws PointNotInSet unless p, q in x.
bool germ_equal(const PlanarComplex& x, const Point2& p, const Point2& q);

/// Closed subgroup of the plane: {0}, a line through the origin, or everything.
struct Subgroup2D {
    enum class Kind { Zero, Line, Plane };
    Kind kind;
    Slope direction = Slope(0);

    bool contains(const Point2& a) const;
    friend bool operator==(const Subgroup2D&, const Subgroup2D&) = default;
};

std::string to_string(const Subgroup2D& g);

/// Shifts a with (a + x) symmetric-difference x bounded.
Subgroup2D stab_bd(const PlanarComplex& x);

struct GraphLines {
    Rat slope;
    std::vector<Rat> offsets;

    friend bool operator==(const GraphLines&, const GraphLines&) = default;
};

struct Decomposition {
    std::vector<GraphLines> graphs;
    std::vector<Rat> verticals;
    /// x restricted to the qualifying carriers outside their bounded gaps.
    PlanarComplex line_parts;
    PlanarComplex residue;
    /// Unbounded cells whose carrier line is not co-bounded inside x.
    std::vector<Cell> unresolved;

    /// Full carrier lines of graphs and verticals.
    std::vector<Carrier> lines() const;
    bool resolved() const { return unresolved.empty(); }
};

/// Splits x into co-bounded carrier lines plus a bounded residue. When
/// resolved, the three boundedness conditions and x = line_parts u residue are
/// re-verified before returning (InternalCheckFailed otherwise).
Decomposition decompose(const PlanarComplex& x);

/// The full line as a complex.
PlanarComplex full_line(const Carrier& c);

}  // namespace semilin
