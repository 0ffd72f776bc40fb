#include "semilin/synthesis.hpp"

#include "semilin/error.hpp"

#include <algorithm>
#include <optional>

namespace semilin {

namespace {

bool all_points(const IntervalUnion& x) {
    return std::all_of(x.parts().begin(), x.parts().end(), [](const Interval& iv) { return iv.is_point(); });
}

Rat total_length(const IntervalUnion& x) {
    Rat sum = 0;
    for (const auto& iv : x.parts()) sum += iv.hi().value() - iv.lo().value();
    return sum;
}

/// Positive gaps between consecutive components of a bounded set.
std::vector<Rat> positive_gaps(const IntervalUnion& z) {
    std::vector<Rat> gaps;
    for (std::size_t i = 0; i + 1 < z.size(); ++i) {
        Rat g = z.parts()[i + 1].lo().value() - z.parts()[i].hi().value();
        if (g > 0) gaps.push_back(g);
    }
    return gaps;
}

Rat ceil_rat(const Rat& r) {
    using boost::multiprecision::cpp_int;
    cpp_int n = boost::multiprecision::numerator(r);
    cpp_int d = boost::multiprecision::denominator(r);
    cpp_int q = n / d;
    if (q * d < n) q += 1;
    return Rat(q);
}

/// Removes the point components of a bounded set with two shifted intersections:
/// ((Z + e) n Z) u ((Z - e) n Z) for e below every positive gap and strictly
/// below half of every non-degenerate length.
std::size_t strip_points(TraceBuilder& b, std::size_t cur) {
    const IntervalUnion z = b.line_value(cur);
    if (std::none_of(z.parts().begin(), z.parts().end(), [](const Interval& iv) { return iv.is_point(); })) return cur;

    std::vector<Rat> scales = positive_gaps(z);
    std::vector<Interval> solid;
    for (const auto& iv : z.parts()) {
        if (iv.is_point()) continue;
        scales.push_back(iv.hi().value() - iv.lo().value());
        solid.push_back(iv);
    }
    if (scales.empty()) fail(ErrorTag::InternalCheckFailed, "point stripping on a finite set");
    const Rat eps = *std::min_element(scales.begin(), scales.end()) / 3;

    const std::size_t up = b.apply(cur, step::Translate{eps, std::nullopt});
    const std::size_t a = b.apply(up, step::Intersect{cur});
    const std::size_t down = b.apply(cur, step::Translate{-eps, std::nullopt});
    const std::size_t c = b.apply(down, step::Intersect{cur});
    const std::size_t out = b.apply(a, step::Union{c});
    if (b.line_value(out) != normalize(solid))
        fail(ErrorTag::InternalCheckFailed, "point stripping changed " + to_string(z));
    return out;
}

}  // namespace

std::string_view to_string(OneDimKind kind) {
    switch (kind) {
        case OneDimKind::FiniteOrCofinite: return "FINITE_OR_COFINITE";
        case OneDimKind::BoundedOrCoboundedInfinite: return "BOUNDED_OR_COBOUNDED_INFINITE";
        case OneDimKind::BothUnbounded: return "BOTH_UNBOUNDED";
    }
    return "?";
}

std::string_view to_string(BoundSide side) {
    switch (side) {
        case BoundSide::Bounded: return "bounded";
        case BoundSide::Cobounded: return "cobounded";
        case BoundSide::None: return "none";
    }
    return "?";
}

OneDimClass classify_one_dim(const IntervalUnion& y) {
    if (all_points(y)) return {OneDimKind::FiniteOrCofinite, BoundSide::Bounded};
    if (all_points(set_complement(y))) return {OneDimKind::FiniteOrCofinite, BoundSide::Cobounded};
    switch (boundedness(y).cls) {
        case BoundednessClass::Bounded: return {OneDimKind::BoundedOrCoboundedInfinite, BoundSide::Bounded};
        case BoundednessClass::Cobounded: return {OneDimKind::BoundedOrCoboundedInfinite, BoundSide::Cobounded};
        case BoundednessClass::BothUnbounded: return {OneDimKind::BothUnbounded, BoundSide::None};
        case BoundednessClass::DegenerateEmptyOrFull: break;
    }
    fail(ErrorTag::InternalCheckFailed, "empty or full set escaped the finite/cofinite test");
}

std::size_t append_ray_steps(TraceBuilder& b, std::size_t input) {
    const IntervalUnion y = b.line_value(input);
    if (classify_one_dim(y).kind != OneDimKind::BothUnbounded)
        fail(ErrorTag::PreconditionViolation, "derive_ray needs a set that is neither bounded nor co-bounded, got " + to_string(y));
    if (y.size() == 1) return input;

    const bool flipped = y.parts().front().lo().is_finite();
    const Interval target = flipped ? y.parts().back() : y.parts().front();

    std::size_t cur = input;
    if (flipped) cur = b.apply(cur, step::Scale{-1});
    const Rat b1 = b.line_value(cur).parts().front().hi().value();
    if (b1 != 0) cur = b.apply(cur, step::Translate{-b1, std::nullopt});

    while (b.line_value(cur).size() > 1) {
        const Interval last = b.line_value(cur).parts().back();
        const Rat s = last.lo().value() + last.hi().value();
        const std::size_t neg = b.apply(cur, step::Scale{-1});
        const std::size_t n = b.apply(neg, step::Intersect{cur});
        const std::size_t shifted = b.apply(n, step::Translate{s, std::nullopt});
        const std::size_t m = b.apply(shifted, step::Intersect{n});
        // The reflection maps a closed end of I_n to an open one, so m is I_n
        // or its interior; leftover closed ends are peeled later as points.
        const IntervalUnion& got = b.line_value(m);
        const IntervalUnion open_last =
            last.is_point() ? IntervalUnion::of(last) : IntervalUnion::of(Interval::open(last.lo(), last.hi()));
        if (got != IntervalUnion::of(last) && got != open_last)
            fail(ErrorTag::InternalCheckFailed, "peeling did not isolate " + to_string(last));
        cur = b.apply(cur, step::Diff{m});
    }

    if (b1 != 0) cur = b.apply(cur, step::Translate{b1, std::nullopt});
    if (flipped) cur = b.apply(cur, step::Scale{-1});
    if (b.line_value(cur) != IntervalUnion::of(target))
        fail(ErrorTag::InternalCheckFailed, "ray construction ended at " + to_string(b.line_value(cur)));
    return cur;
}

RayDerivation derive_ray(const IntervalUnion& y, const std::string& name) {
    TraceBuilder b({name}, {y});
    const std::size_t out = append_ray_steps(b, 0);
    RayDerivation result{b.line_value(out), b.finish(out)};
    if (replay(result.trace, std::vector<SetValue>{y}) != SetValue(result.ray))
        fail(ErrorTag::InternalCheckFailed, "ray trace does not replay");
    return result;
}

std::size_t iteration_cap(const IntervalUnion& z) {
    const std::size_t n = z.size();
    const std::vector<Rat> gaps = positive_gaps(z);
    if (gaps.empty() || !z.is_bounded() || z.is_empty()) return 4 * n;
    const Rat diameter = z.sup().value() - z.inf().value();
    const Rat ratio = ceil_rat(diameter / *std::min_element(gaps.begin(), gaps.end()));
    return 4 * n * static_cast<std::size_t>(boost::multiprecision::numerator(ratio));
}

IntervalDerivation derive_interval(const IntervalUnion& y, const std::string& name) {
    const OneDimClass cls = classify_one_dim(y);
    if (cls.kind != OneDimKind::BoundedOrCoboundedInfinite)
        fail(ErrorTag::PreconditionViolation,
             "derive_interval needs an infinite bounded or co-bounded set, got " + to_string(y));

    TraceBuilder b({name}, {y});
    std::size_t cur = 0;
    if (cls.side == BoundSide::Cobounded) cur = b.apply(cur, step::Complement{});
    cur = strip_points(b, cur);

    IntervalDerivation out{Interval::point(0), {}, 0, false};
    const std::size_t cap = iteration_cap(b.line_value(cur));
    Rat measure = total_length(b.line_value(cur));
    while (b.line_value(cur).size() > 1) {
        if (out.iterations >= cap) {
            std::optional<Isolation> iso;
            try {
                iso = isolate_interval(b.line_value(cur));
            } catch (const Error& e) {
                if (e.tag() != ErrorTag::NoIsolatingShift) throw;
                fail(ErrorTag::IterationCapExceeded,
                     "no single interval after " + std::to_string(cap) + " contractions of " + to_string(y));
            }
            const std::size_t shifted = b.apply(cur, step::Translate{iso->shift, std::nullopt});
            cur = b.apply(shifted, step::Intersect{cur});
            out.used_fallback = true;
            break;
        }
        const IntervalUnion& z = b.line_value(cur);
        const Rat alpha = z.sup().value() - z.parts().front().hi().value();
        const std::size_t shifted = b.apply(cur, step::Translate{alpha, std::nullopt});
        cur = b.apply(shifted, step::Intersect{cur});
        ++out.iterations;
        cur = strip_points(b, cur);
        const Rat next = total_length(b.line_value(cur));
        if (b.line_value(cur).is_empty() || !(next < measure))
            fail(ErrorTag::InternalCheckFailed, "contraction made no progress on " + to_string(y));
        measure = next;
    }

    const IntervalUnion& last = b.line_value(cur);
    if (last.size() != 1 || last.parts().front().is_point() || !last.is_bounded())
        fail(ErrorTag::InternalCheckFailed, "interval construction ended at " + to_string(last));
    out.interval = last.parts().front();
    out.trace = b.finish(cur);
    if (replay(out.trace, std::vector<SetValue>{y}) != SetValue(IntervalUnion::of(out.interval)))
        fail(ErrorTag::InternalCheckFailed, "interval trace does not replay");
    return out;
}

}  // namespace semilin
