#include "semilin/planar.hpp"

#include "semilin/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace semilin {

// ---------------------------------------------------------------------------
// Points, slopes, carriers

std::string to_string(const Point2& p) { return "(" + format_rat(p.x) + "," + format_rat(p.y) + ")"; }

const Rat& Slope::value() const {
    if (!value_) fail(ErrorTag::InvalidArgument, "value() of a vertical slope");
    return *value_;
}

std::strong_ordering operator<=>(const Slope& a, const Slope& b) {
    if (a.is_vertical() || b.is_vertical()) return a.is_vertical() <=> b.is_vertical();
    return compare(*a.value_, *b.value_);
}

std::string to_string(const Slope& s) { return s.is_vertical() ? "vertical" : format_rat(s.value()); }

Point2 Carrier::at(const Rat& param) const {
    if (is_vertical()) return {offset, param};
    return {param, slope.value() * param + offset};
}

Rat Carrier::param_of(const Point2& p) const { return is_vertical() ? p.y : p.x; }

bool Carrier::contains(const Point2& p) const {
    if (is_vertical()) return p.x == offset;
    return p.y == slope.value() * p.x + offset;
}

std::optional<Point2> Carrier::meet(const Carrier& other) const {
    if (slope == other.slope) return std::nullopt;
    if (is_vertical()) return other.at(offset);
    if (other.is_vertical()) return at(other.offset);
    const Rat x = (other.offset - offset) / (slope.value() - other.slope.value());
    return at(x);
}

// ---------------------------------------------------------------------------
// Cells

Cell Cell::point(Rat x, Rat y) {
    return Cell(Kind::Point, Point2{std::move(x), std::move(y)}, Carrier::graph(0, 0), Interval::line());
}

Cell Cell::seg(Rat slope, Rat intercept, Interval domain) {
    return on(Carrier::graph(std::move(slope), std::move(intercept)), std::move(domain));
}

Cell Cell::vseg(Rat abscissa, Interval range) { return on(Carrier::vertical(std::move(abscissa)), std::move(range)); }

Cell Cell::on(const Carrier& carrier, Interval span) {
    if (span.is_point()) fail(ErrorTag::MalformedCell, "segment cell over a single point " + to_string(span));
    return Cell(carrier.is_vertical() ? Kind::VSeg : Kind::Seg, Point2{0, 0}, carrier, std::move(span));
}

const Point2& Cell::location() const {
    if (kind_ != Kind::Point) fail(ErrorTag::InvalidArgument, "location() of a segment cell");
    return location_;
}

const Carrier& Cell::carrier() const {
    if (kind_ == Kind::Point) fail(ErrorTag::InvalidArgument, "carrier() of a point cell");
    return carrier_;
}

const Interval& Cell::span() const {
    if (kind_ == Kind::Point) fail(ErrorTag::InvalidArgument, "span() of a point cell");
    return span_;
}

bool Cell::contains(const Point2& p) const {
    if (kind_ == Kind::Point) return location_ == p;
    return carrier_.contains(p) && span_.contains(carrier_.param_of(p));
}

bool Cell::is_bounded() const { return kind_ == Kind::Point || span_.is_bounded(); }

std::strong_ordering operator<=>(const Cell& a, const Cell& b) {
    if (a.is_point() != b.is_point()) return b.is_point() <=> a.is_point();
    if (a.is_point()) return a.location_ <=> b.location_;
    if (auto c = a.carrier_ <=> b.carrier_; c != 0) return c;
    if (auto c = a.span_.lo() <=> b.span_.lo(); c != 0) return c;
    if (a.span_.lo_closed() != b.span_.lo_closed()) return b.span_.lo_closed() <=> a.span_.lo_closed();
    if (auto c = a.span_.hi() <=> b.span_.hi(); c != 0) return c;
    return a.span_.hi_closed() <=> b.span_.hi_closed();
}

std::string to_string(const Cell& c) {
    switch (c.kind()) {
        case Cell::Kind::Point: return "Point" + to_string(c.location());
        case Cell::Kind::Seg:
            return "Seg(" + format_rat(c.carrier().slope.value()) + "," + format_rat(c.carrier().offset) + "," +
                   to_string(c.span()) + ")";
        case Cell::Kind::VSeg: return "VSeg(" + format_rat(c.carrier().offset) + "," + to_string(c.span()) + ")";
    }
    return "?";
}

// ---------------------------------------------------------------------------
// Canonical form

namespace {

std::vector<Carrier> carriers_of(std::span<const Cell> cells) {
    std::vector<Carrier> out;
    for (const auto& c : cells)
        if (!c.is_point()) out.push_back(c.carrier());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

IntervalUnion section_of(std::span<const Cell> cells, const Carrier& line) {
    std::vector<Interval> raw;
    for (const auto& c : cells) {
        if (c.is_point()) {
            if (line.contains(c.location())) raw.push_back(Interval::point(line.param_of(c.location())));
            continue;
        }
        if (c.carrier() == line) {
            raw.push_back(c.span());
            continue;
        }
        if (auto q = line.meet(c.carrier()); q && c.contains(*q)) raw.push_back(Interval::point(line.param_of(*q)));
    }
    return normalize(raw);
}

/// t lies in a non-degenerate component of s.
bool on_segment_part(const IntervalUnion& s, const Rat& t) {
    for (const auto& iv : s.parts())
        if (!iv.is_point() && iv.contains(t)) return true;
    return false;
}

IntervalUnion without_points(const IntervalUnion& s) {
    std::vector<Interval> raw;
    for (const auto& iv : s.parts())
        if (!iv.is_point()) raw.push_back(iv);
    return normalize(raw);
}

}  // namespace

PlanarComplex detail::adopt_canonical_cells(std::vector<Cell> cells) { return PlanarComplex(std::move(cells)); }

PlanarComplex normalize(std::span<const Cell> raw) {
    const auto lines = carriers_of(raw);
    std::vector<IntervalUnion> full;
    full.reserve(lines.size());
    for (const auto& l : lines) full.push_back(section_of(raw, l));

    std::vector<Cell> out;
    std::set<Point2> candidates;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        IntervalUnion kept = without_points(full[i]);
        for (const auto& iv : full[i].parts())
            if (iv.is_point()) candidates.insert(lines[i].at(iv.lo().value()));
        std::vector<Rat> taken;
        for (std::size_t j = 0; j < i; ++j) {
            auto q = lines[i].meet(lines[j]);
            if (q && on_segment_part(full[j], lines[j].param_of(*q))) taken.push_back(lines[i].param_of(*q));
        }
        if (!taken.empty()) kept = set_difference(kept, IntervalUnion::points(taken));
        for (const auto& iv : kept.parts()) out.push_back(Cell::on(lines[i], iv));
    }
    for (const auto& c : raw)
        if (c.is_point()) candidates.insert(c.location());
    for (const auto& p : candidates) {
        bool covered = false;
        for (std::size_t i = 0; i < lines.size() && !covered; ++i)
            covered = lines[i].contains(p) && on_segment_part(full[i], lines[i].param_of(p));
        if (!covered) out.push_back(Cell::point(p.x, p.y));
    }
    std::sort(out.begin(), out.end());
    return detail::adopt_canonical_cells(std::move(out));
}

bool PlanarComplex::contains(const Point2& p) const {
    return std::any_of(cells_.begin(), cells_.end(), [&](const Cell& c) { return c.contains(p); });
}

std::vector<Carrier> PlanarComplex::carriers() const { return carriers_of(cells_); }

std::string to_string(const PlanarComplex& x) {
    if (x.is_empty()) return "{}";
    std::string s;
    for (const auto& c : x.cells()) {
        if (!s.empty()) s += " u ";
        s += to_string(c);
    }
    return s;
}

PlanarComplex full_line(const Carrier& c) { return make_complex({Cell::on(c, Interval::line())}); }

// ---------------------------------------------------------------------------
// Boolean operations and affine images

PlanarComplex bool_op(BoolKind kind, const PlanarComplex& x, const PlanarComplex& y) {
    bool (*op)(bool, bool) = nullptr;
    switch (kind) {
        case BoolKind::Union: op = [](bool a, bool b) { return a || b; }; break;
        case BoolKind::Intersect: op = [](bool a, bool b) { return a && b; }; break;
        case BoolKind::Difference: op = [](bool a, bool b) { return a && !b; }; break;
        case BoolKind::SymmDiff: op = [](bool a, bool b) { return a != b; }; break;
        case BoolKind::Complement:
            fail(ErrorTag::DimensionMismatch, "complement leaves the dim <= 1 universe of planar sets");
    }

    // Off every carrier of either operand only isolated points remain, so the
    // result is determined by the per-carrier sections plus those points.
    std::vector<Carrier> lines = x.carriers();
    for (const auto& l : y.carriers()) lines.push_back(l);
    std::sort(lines.begin(), lines.end());
    lines.erase(std::unique(lines.begin(), lines.end()), lines.end());

    std::vector<Cell> raw;
    for (const auto& l : lines) {
        const IntervalUnion sy = section(y, l);
        const IntervalUnion s = bool_op(kind, section(x, l), &sy);
        for (const auto& iv : s.parts()) {
            if (iv.is_point()) {
                auto p = l.at(iv.lo().value());
                raw.push_back(Cell::point(p.x, p.y));
            } else {
                raw.push_back(Cell::on(l, iv));
            }
        }
    }
    auto off_lines = [&](const Point2& p) {
        return std::none_of(lines.begin(), lines.end(), [&](const Carrier& l) { return l.contains(p); });
    };
    for (const auto* operand : {&x, &y})
        for (const auto& c : operand->cells())
            if (c.is_point() && off_lines(c.location()) && op(x.contains(c.location()), y.contains(c.location())))
                raw.push_back(c);
    return normalize(raw);
}

PlanarComplex affine_image(const PlanarComplex& x, const Point2& shift, bool swap) {
    std::vector<Cell> raw;
    raw.reserve(x.cells().size());
    for (const auto& c : x.cells()) {
        if (c.is_point()) {
            Point2 p = c.location();
            if (swap) std::swap(p.x, p.y);
            raw.push_back(Cell::point(p.x + shift.x, p.y + shift.y));
            continue;
        }
        Carrier l = c.carrier();
        Interval span = c.span();
        if (swap) {
            if (l.is_vertical()) {
                // {(c, y)} -> {(y, c)}: horizontal at height c.
                l = Carrier::graph(0, l.offset);
            } else if (l.slope.value() == 0) {
                l = Carrier::vertical(l.offset);
            } else {
                // y = s x + d  <=>  x = y/s - d/s; the new parameter is the old y.
                const Rat& s = l.slope.value();
                IntervalUnion image = affine_op(IntervalUnion::of(span), s, l.offset);
                span = image.parts()[0];
                l = Carrier::graph(1 / s, -l.offset / s);
            }
        }
        // Translate: parameter moves with x (graphs) or y (verticals).
        if (l.is_vertical()) {
            l.offset += shift.x;
            span = translate(IntervalUnion::of(span), shift.y).parts()[0];
        } else {
            l.offset += shift.y - l.slope.value() * shift.x;
            span = translate(IntervalUnion::of(span), shift.x).parts()[0];
        }
        raw.push_back(Cell::on(l, span));
    }
    return normalize(raw);
}

PlanarComplex scale(const PlanarComplex& x, const Rat& q) {
    if (q == 0) fail(ErrorTag::InvalidArgument, "planar scale by zero");
    std::vector<Cell> raw;
    for (const auto& c : x.cells()) {
        if (c.is_point()) {
            raw.push_back(Cell::point(q * c.location().x, q * c.location().y));
            continue;
        }
        Carrier l = c.carrier();
        l.offset *= q;
        raw.push_back(Cell::on(l, affine_op(IntervalUnion::of(c.span()), q, 0).parts()[0]));
    }
    return normalize(raw);
}

// ---------------------------------------------------------------------------
// Boundedness, topology, sections, projections

IntervalUnion section(const PlanarComplex& x, const Carrier& line) { return section_of(x.cells(), line); }

IntervalUnion project(const PlanarComplex& x, int axis) {
    if (axis != 1 && axis != 2) fail(ErrorTag::InvalidArgument, "projection axis must be 1 or 2");
    std::vector<Interval> raw;
    for (const auto& c : x.cells()) {
        if (c.is_point()) {
            raw.push_back(Interval::point(axis == 1 ? c.location().x : c.location().y));
            continue;
        }
        const Carrier& l = c.carrier();
        if (l.is_vertical()) {
            raw.push_back(axis == 1 ? Interval::point(l.offset) : c.span());
        } else if (axis == 1) {
            raw.push_back(c.span());
        } else if (l.slope.value() == 0) {
            raw.push_back(Interval::point(l.offset));
        } else {
            raw.push_back(affine_op(IntervalUnion::of(c.span()), l.slope.value(), l.offset).parts()[0]);
        }
    }
    return normalize(raw);
}

bool is_bounded(const PlanarComplex& x) { return project(x, 1).is_bounded() && project(x, 2).is_bounded(); }

PlanarComplex topo_op(const PlanarComplex& x, PlanarTopo kind) {
    (void)kind;  // closure and frontier coincide in this universe
    std::vector<Cell> raw;
    for (const auto& c : x.cells()) {
        if (c.is_point()) {
            raw.push_back(c);
            continue;
        }
        const Interval& s = c.span();
        raw.push_back(Cell::on(c.carrier(), Interval(s.lo(), s.hi(), s.lo().is_finite(), s.hi().is_finite())));
    }
    return normalize(raw);
}

// ---------------------------------------------------------------------------
// Local structure: stars, affine part, germs

std::vector<Direction> local_star(const PlanarComplex& x, const Point2& p) {
    std::vector<Direction> star;
    for (const auto& l : x.carriers()) {
        if (!l.contains(p)) continue;
        const Rat t = l.param_of(p);
        const IntervalUnion s = section(x, l);
        bool up = false, down = false;
        for (const auto& iv : s.parts()) {
            if (iv.is_point()) continue;
            const Extended e(t);
            if (iv.lo() <= e && e < iv.hi()) up = true;
            if (iv.lo() < e && e <= iv.hi()) down = true;
        }
        if (down) star.push_back({l.slope, false});
        if (up) star.push_back({l.slope, true});
    }
    std::sort(star.begin(), star.end());
    return star;
}

namespace {

bool star_is_affine(const std::vector<Direction>& star) {
    if (star.empty()) return true;
    return star.size() == 2 && star[0].slope == star[1].slope && star[0].positive != star[1].positive;
}

/// Every point where the local star can differ from that of a nearby point:
/// span endpoints, carrier crossings and isolated points.
std::set<Point2> special_points(const PlanarComplex& x) {
    std::set<Point2> pts;
    const auto lines = x.carriers();
    for (const auto& c : x.cells()) {
        if (c.is_point()) {
            pts.insert(c.location());
            continue;
        }
        if (c.span().lo().is_finite()) pts.insert(c.carrier().at(c.span().lo().value()));
        if (c.span().hi().is_finite()) pts.insert(c.carrier().at(c.span().hi().value()));
    }
    for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = i + 1; j < lines.size(); ++j)
            if (auto q = lines[i].meet(lines[j])) pts.insert(*q);
    return pts;
}

}  // namespace

PlanarComplex affine_part(const PlanarComplex& x) {
    std::vector<Cell> bad;
    for (const auto& p : special_points(x))
        if (x.contains(p) && !star_is_affine(local_star(x, p))) bad.push_back(Cell::point(p.x, p.y));
    if (bad.empty()) return x;
    return bool_op(BoolKind::Difference, x, normalize(bad));
}

bool germ_equal(const PlanarComplex& x, const Point2& p, const Point2& q) {
    if (!x.contains(p)) fail(ErrorTag::PointNotInSet, "germ_equal: " + to_string(p) + " is not in the set");
    if (!x.contains(q)) fail(ErrorTag::PointNotInSet, "germ_equal: " + to_string(q) + " is not in the set");
    return local_star(x, p) == local_star(x, q);
}

// ---------------------------------------------------------------------------
// Bounded stabiliser

bool Subgroup2D::contains(const Point2& a) const {
    switch (kind) {
        case Kind::Zero: return a.x == 0 && a.y == 0;
        case Kind::Plane: return true;
        case Kind::Line:
            if (direction.is_vertical()) return a.x == 0;
            return a.y == direction.value() * a.x;
    }
    return false;
}

std::string to_string(const Subgroup2D& g) {
    switch (g.kind) {
        case Subgroup2D::Kind::Zero: return "Zero";
        case Subgroup2D::Kind::Plane: return "Plane";
        case Subgroup2D::Kind::Line: return "Line(" + to_string(g.direction) + ")";
    }
    return "?";
}

Subgroup2D stab_bd(const PlanarComplex& x) {
    // A shift fixes x up to a bounded set iff it permutes the unbounded ends
    // (carrier, direction) of x. Shifts preserve slopes and act on each
    // slope class's finite offset set by a translation, so every slope present
    // forces the shift onto that slope's line through the origin.
    std::set<Slope> slopes;
    for (const auto& c : x.cells())
        if (!c.is_bounded()) slopes.insert(c.carrier().slope);
    if (slopes.empty()) return {Subgroup2D::Kind::Plane};
    if (slopes.size() == 1) return {Subgroup2D::Kind::Line, *slopes.begin()};
    return {Subgroup2D::Kind::Zero};
}

// ---------------------------------------------------------------------------
// Decomposition into co-bounded lines and a bounded residue

std::vector<Carrier> Decomposition::lines() const {
    std::vector<Carrier> out;
    for (const auto& g : graphs)
        for (const auto& d : g.offsets) out.push_back(Carrier::graph(g.slope, d));
    for (const auto& c : verticals) out.push_back(Carrier::vertical(c));
    return out;
}

Decomposition decompose(const PlanarComplex& x) {
    Decomposition out;
    std::vector<Cell> consumed;
    std::vector<Cell> unresolved;
    std::map<Rat, std::vector<Rat>> graph_offsets;

    for (const auto& l : x.carriers()) {
        bool unbounded = false;
        for (const auto& c : x.cells())
            if (!c.is_point() && c.carrier() == l && !c.is_bounded()) unbounded = true;
        if (!unbounded) continue;

        const IntervalUnion s = section(x, l);
        const IntervalUnion gaps = set_complement(s);
        if (!gaps.is_bounded()) {
            for (const auto& c : x.cells())
                if (!c.is_point() && c.carrier() == l && !c.is_bounded()) unresolved.push_back(c);
            continue;
        }
        if (l.is_vertical())
            out.verticals.push_back(l.offset);
        else
            graph_offsets[l.slope.value()].push_back(l.offset);
        if (gaps.is_empty()) {
            consumed.push_back(Cell::on(l, Interval::line()));
        } else {
            consumed.push_back(Cell::on(l, Interval::open(Extended::neg_inf(), gaps.inf())));
            consumed.push_back(Cell::on(l, Interval::open(gaps.sup(), Extended::pos_inf())));
        }
    }
    for (auto& [slope, offsets] : graph_offsets) out.graphs.push_back({slope, offsets});

    out.line_parts = normalize(consumed);
    out.unresolved = unresolved;
    const PlanarComplex removed = bool_op(BoolKind::Union, out.line_parts, normalize(unresolved));
    out.residue = bool_op(BoolKind::Difference, x, removed);

    if (out.resolved()) {
        PlanarComplex all_lines;
        for (const auto& l : out.lines()) {
            if (!is_bounded(bool_op(BoolKind::Difference, full_line(l), x)))
                fail(ErrorTag::InternalCheckFailed, "decompose: carrier line minus X is unbounded");
            all_lines = bool_op(BoolKind::Union, all_lines, full_line(l));
        }
        if (!is_bounded(bool_op(BoolKind::Difference, x, all_lines)))
            fail(ErrorTag::InternalCheckFailed, "decompose: X minus the carrier lines is unbounded");
        if (!is_bounded(out.residue)) fail(ErrorTag::InternalCheckFailed, "decompose: residue is unbounded");
        if (bool_op(BoolKind::Union, out.line_parts, out.residue) != x)
            fail(ErrorTag::InternalCheckFailed, "decompose: parts do not reassemble X");
    }
    return out;
}

}  // namespace semilin
