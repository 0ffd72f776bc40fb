#pragma once

// Constructions that turn a subset of the line into a simpler definable set:
// a ray from a set that is neither bounded nor co-bounded, and a single bounded
// interval from an infinite bounded or co-bounded set. Each result comes with
// a trace that rebuilds it from the input using translations, scalings and
// boolean operations only.

#include "semilin/interval.hpp"
#include "semilin/trace.hpp"

#include <string>

namespace semilin {

enum class OneDimKind { FiniteOrCofinite, BoundedOrCoboundedInfinite, BothUnbounded };
enum class BoundSide { Bounded, Cobounded, None };

struct OneDimClass {
    OneDimKind kind;
    /// Bounded for finite sets and bounded infinite ones, Cobounded for their
    /// complements, None exactly when kind is BothUnbounded.
    BoundSide side;

    friend bool operator==(const OneDimClass&, const OneDimClass&) = default;
};

OneDimClass classify_one_dim(const IntervalUnion& y);
std::string_view to_string(OneDimKind kind);
std::string_view to_string(BoundSide side);

struct RayDerivation {
    IntervalUnion ray;
    Trace trace;
};

/// Requires BothUnbounded (PreconditionViolation otherwise). Peels bounded
/// components off the side opposite the ray, outermost first.
RayDerivation derive_ray(const IntervalUnion& y, const std::string& name = "Y");

/// Appends the ray construction to an existing builder; `input` must hold a
/// BothUnbounded subset of the line. Returns the slot holding the ray.
std::size_t append_ray_steps(TraceBuilder& b, std::size_t input);

struct IntervalDerivation {
    Interval interval;
    Trace trace;
    /// Applications of Z -> (Z + alpha) n Z.
    std::size_t iterations = 0;
    bool used_fallback = false;
};

/// Requires BoundedOrCoboundedInfinite. Iterates Z -> (Z + alpha) n Z with
/// alpha = b_n - b_1 until one component remains; the iteration is capped and
/// then falls back to isolate_interval. Throws IterationCapExceeded when both fail.
IntervalDerivation derive_interval(const IntervalUnion& y, const std::string& name = "Y");

/// The iteration cap used by derive_interval for a bounded set without points.
std::size_t iteration_cap(const IntervalUnion& z);

}  // namespace semilin
