#include "semilin/interval.hpp"

#include "semilin/error.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace semilin {

// ---------------------------------------------------------------------------
// Interval

Interval::Interval(Extended lo, Extended hi, bool lo_closed, bool hi_closed)
    : lo_(std::move(lo)), hi_(std::move(hi)), lo_closed_(lo_closed), hi_closed_(hi_closed) {
    if (lo_ > hi_) fail(ErrorTag::MalformedInterval, "interval with lo > hi: " + to_string(*this));
    if ((lo_closed_ && !lo_.is_finite()) || (hi_closed_ && !hi_.is_finite()))
        fail(ErrorTag::MalformedInterval, "closed infinite end: " + to_string(*this));
    if (lo_ == hi_ && !(lo_closed_ && hi_closed_))
        fail(ErrorTag::MalformedInterval, "empty degenerate interval: " + to_string(*this));
}

bool Interval::contains(const Rat& x) const {
    const Extended e(x);
    const auto lo_cmp = lo_ <=> e;
    if (lo_cmp > 0 || (lo_cmp == 0 && !lo_closed_)) return false;
    const auto hi_cmp = e <=> hi_;
    return hi_cmp < 0 || (hi_cmp == 0 && hi_closed_);
}

Extended Interval::length() const { return hi_ - lo_; }

std::string to_string(const Interval& iv) {
    if (iv.lo() == iv.hi() && iv.lo().is_finite()) return "{" + format_rat(iv.lo().value()) + "}";
    std::string s = iv.lo_closed() ? "[" : "(";
    s += format_extended(iv.lo()) + "," + format_extended(iv.hi());
    s += iv.hi_closed() ? "]" : ")";
    return s;
}

// ---------------------------------------------------------------------------
// Canonicalisation by sweeping the breakpoints.
//
// With breakpoints p_0 < ... < p_{k-1} the line splits into 2k+1 regions
// (gap, point, gap, ..., point, gap). Any set whose endpoints are among the
// breakpoints is constant on each region, so sampling one rational per region
// and merging maximal included runs yields the canonical form.

namespace {

using Predicate = std::function<bool(const Rat&)>;

Rat gap_sample(const std::vector<Rat>& pts, std::size_t gap) {
    if (pts.empty()) return Rat(0);
    if (gap == 0) return pts.front() - 1;
    if (gap == pts.size()) return pts.back() + 1;
    return (pts[gap - 1] + pts[gap]) / 2;
}

std::vector<Interval> sweep(std::vector<Rat> pts, const Predicate& member) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    const std::size_t k = pts.size();
    std::vector<Interval> out;
    bool open_run = false;
    Extended run_lo;
    bool run_lo_closed = false;

    // Region r: even r = gap r/2, odd r = point (r-1)/2.
    for (std::size_t r = 0; r <= 2 * k; ++r) {
        const bool is_point = (r % 2) == 1;
        const std::size_t idx = r / 2;
        const bool in = is_point ? member(pts[idx]) : member(gap_sample(pts, idx));
        if (in && !open_run) {
            open_run = true;
            if (is_point) {
                run_lo = pts[idx];
                run_lo_closed = true;
            } else {
                run_lo = idx == 0 ? Extended::neg_inf() : Extended(pts[idx - 1]);
                run_lo_closed = false;
            }
        } else if (!in && open_run) {
            open_run = false;
            // The previous region r-1 closes the run.
            const std::size_t prev = r - 1;
            if (prev % 2 == 1) {
                out.emplace_back(run_lo, pts[prev / 2], run_lo_closed, true);
            } else {
                out.emplace_back(run_lo, pts[prev / 2], run_lo_closed, false);
            }
        }
    }
    if (open_run) out.emplace_back(run_lo, Extended::pos_inf(), run_lo_closed, false);
    return out;
}

void collect_endpoints(std::span<const Interval> parts, std::vector<Rat>& pts) {
    for (const auto& iv : parts) {
        if (iv.lo().is_finite()) pts.push_back(iv.lo().value());
        if (iv.hi().is_finite()) pts.push_back(iv.hi().value());
    }
}

IntervalUnion combine(const IntervalUnion& x, const IntervalUnion& y, bool (*op)(bool, bool)) {
    std::vector<Rat> pts;
    collect_endpoints(x.parts(), pts);
    collect_endpoints(y.parts(), pts);
    return detail::adopt_canonical(
        sweep(std::move(pts), [&](const Rat& t) { return op(x.contains(t), y.contains(t)); }));
}

}  // namespace

IntervalUnion detail::adopt_canonical(std::vector<Interval> parts) { return IntervalUnion(std::move(parts)); }

IntervalUnion normalize(std::span<const Interval> raw) {
    std::vector<Rat> pts;
    collect_endpoints(raw, pts);
    auto parts = sweep(std::move(pts), [&](const Rat& t) {
        return std::any_of(raw.begin(), raw.end(), [&](const Interval& iv) { return iv.contains(t); });
    });
    return detail::adopt_canonical(std::move(parts));
}

// ---------------------------------------------------------------------------
// IntervalUnion

IntervalUnion IntervalUnion::of(const Interval& iv) { return normalize(std::span<const Interval>(&iv, 1)); }

IntervalUnion IntervalUnion::points(std::span<const Rat> pts) {
    std::vector<Interval> raw;
    raw.reserve(pts.size());
    for (const auto& p : pts) raw.push_back(Interval::point(p));
    return normalize(raw);
}

bool IntervalUnion::is_full() const {
    return parts_.size() == 1 && parts_[0].lo().is_neg_inf() && parts_[0].hi().is_pos_inf();
}

bool IntervalUnion::contains(const Rat& x) const {
    const Extended e(x);
    // First part whose upper end is not strictly left of x.
    auto it = std::partition_point(parts_.begin(), parts_.end(),
                                   [&](const Interval& iv) { return iv.hi() < e; });
    for (; it != parts_.end() && it->lo() <= e; ++it)
        if (it->contains(x)) return true;
    return false;
}

bool IntervalUnion::is_bounded() const {
    return parts_.empty() || (parts_.front().lo().is_finite() && parts_.back().hi().is_finite());
}

const Extended& IntervalUnion::inf() const {
    if (parts_.empty()) fail(ErrorTag::InvalidArgument, "inf of the empty set");
    return parts_.front().lo();
}

const Extended& IntervalUnion::sup() const {
    if (parts_.empty()) fail(ErrorTag::InvalidArgument, "sup of the empty set");
    return parts_.back().hi();
}

std::string to_string(const IntervalUnion& x) {
    if (x.is_empty()) return "{}";
    std::string s;
    for (const auto& iv : x.parts()) {
        if (!s.empty()) s += " u ";
        s += to_string(iv);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Boolean algebra

IntervalUnion set_union(const IntervalUnion& x, const IntervalUnion& y) {
    return combine(x, y, [](bool a, bool b) { return a || b; });
}
IntervalUnion set_intersect(const IntervalUnion& x, const IntervalUnion& y) {
    return combine(x, y, [](bool a, bool b) { return a && b; });
}
IntervalUnion set_difference(const IntervalUnion& x, const IntervalUnion& y) {
    return combine(x, y, [](bool a, bool b) { return a && !b; });
}
IntervalUnion set_symmdiff(const IntervalUnion& x, const IntervalUnion& y) {
    return combine(x, y, [](bool a, bool b) { return a != b; });
}
IntervalUnion set_complement(const IntervalUnion& x) {
    return combine(x, IntervalUnion::empty(), [](bool a, bool) { return !a; });
}

IntervalUnion bool_op(BoolKind kind, const IntervalUnion& x, const IntervalUnion* y) {
    if ((kind == BoolKind::Complement) != (y == nullptr))
        fail(ErrorTag::InvalidArgument, "complement takes one operand, other operations two");
    switch (kind) {
        case BoolKind::Union: return set_union(x, *y);
        case BoolKind::Intersect: return set_intersect(x, *y);
        case BoolKind::Difference: return set_difference(x, *y);
        case BoolKind::SymmDiff: return set_symmdiff(x, *y);
        case BoolKind::Complement: return set_complement(x);
    }
    fail(ErrorTag::InvalidArgument, "unknown boolean operation");
}

IntervalUnion affine_op(const IntervalUnion& x, const Rat& q, const Rat& a) {
    if (q == 0) fail(ErrorTag::InvalidArgument, "affine_op with zero scale is not injective");
    std::vector<Interval> raw;
    raw.reserve(x.size());
    for (const auto& iv : x.parts()) {
        Extended lo = scale(iv.lo(), q) + a;
        Extended hi = scale(iv.hi(), q) + a;
        if (q > 0)
            raw.emplace_back(lo, hi, iv.lo_closed(), iv.hi_closed());
        else
            raw.emplace_back(hi, lo, iv.hi_closed(), iv.lo_closed());
    }
    return normalize(raw);
}

std::vector<Interval> components(const IntervalUnion& x) {
    return {x.parts().begin(), x.parts().end()};
}

std::vector<Rat> endpoints(const IntervalUnion& x, Side side) {
    std::vector<Rat> out;
    for (const auto& iv : x.parts()) {
        const Extended& e = side == Side::Left ? iv.lo() : iv.hi();
        if (e.is_finite()) out.push_back(e.value());
    }
    return out;
}

// ---------------------------------------------------------------------------
// Boundedness, topology, metrics

std::string_view to_string(BoundednessClass cls) {
    switch (cls) {
        case BoundednessClass::Bounded: return "bounded";
        case BoundednessClass::Cobounded: return "cobounded";
        case BoundednessClass::BothUnbounded: return "both_unbounded";
        case BoundednessClass::DegenerateEmptyOrFull: return "degenerate_empty_or_full";
    }
    return "?";
}

Boundedness boundedness(const IntervalUnion& x) {
    if (x.is_empty() || x.is_full()) return {BoundednessClass::DegenerateEmptyOrFull, std::nullopt};
    if (x.is_bounded()) {
        // Any shift longer than the diameter moves x off itself.
        Rat a = x.sup().value() - x.inf().value() + 1;
        return {BoundednessClass::Bounded, std::move(a)};
    }
    if (set_complement(x).is_bounded()) return {BoundednessClass::Cobounded, std::nullopt};
    return {BoundednessClass::BothUnbounded, std::nullopt};
}

IntervalUnion topo_op(const IntervalUnion& x, TopoKind kind) {
    auto closure = [&] {
        std::vector<Interval> raw;
        for (const auto& iv : x.parts())
            raw.emplace_back(iv.lo(), iv.hi(), iv.lo().is_finite(), iv.hi().is_finite());
        return normalize(raw);
    };
    auto interior = [&] {
        std::vector<Interval> raw;
        for (const auto& iv : x.parts())
            if (!iv.is_point()) raw.push_back(Interval::open(iv.lo(), iv.hi()));
        return normalize(raw);
    };
    switch (kind) {
        case TopoKind::Closure: return closure();
        case TopoKind::Interior: return interior();
        case TopoKind::Frontier: return set_difference(closure(), interior());
    }
    fail(ErrorTag::InvalidArgument, "unknown topological operator");
}

Metrics metrics(const IntervalUnion& x) {
    if (x.is_empty()) return {Extended(0), Extended(0)};
    Extended longest(0);
    for (const auto& iv : x.parts()) longest = std::max(longest, iv.length());
    return {longest, x.sup() - x.inf()};
}

// ---------------------------------------------------------------------------
// Interval isolation by endpoint-difference shifts

Isolation isolate_interval(const IntervalUnion& x, ShiftSearch search) {
    if (!x.is_bounded() || x.size() < 2)
        fail(ErrorTag::PreconditionViolation, "isolate_interval needs a bounded set with at least two components");

    std::set<Rat> ends;
    for (const auto& e : endpoints(x, Side::Left)) ends.insert(e);
    if (search == ShiftSearch::AllEndpoints)
        for (const auto& e : endpoints(x, Side::Right)) ends.insert(e);

    std::vector<Rat> shifts;
    for (const auto& a : ends)
        for (const auto& b : ends)
            if (a != b) shifts.push_back(a - b);
    std::sort(shifts.begin(), shifts.end(), [](const Rat& a, const Rat& b) {
        const Rat aa = abs(a), bb = abs(b);
        if (aa != bb) return aa < bb;
        return a > b;
    });
    shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());

    for (const auto& d : shifts) {
        const auto meet = set_intersect(translate(x, d), x);
        if (meet.size() != 1) continue;
        const Interval& only = meet.parts()[0];
        for (const auto& iv : x.parts())
            if (iv == only) return {d, only};
    }
    fail(ErrorTag::NoIsolatingShift, "no endpoint difference isolates a single component of " + to_string(x));
}

}  // namespace semilin
