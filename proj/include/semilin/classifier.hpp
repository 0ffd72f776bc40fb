#pragma once

// Places a finite set of generators in the lattice
//   LIN       <R; +, scalar maps>
//   LIN_STAR  expansion by bounded sets
//   SEMI      the full ordered vector space
// and returns evidence that can be checked independently: normal forms for
// LIN, a union of lines A with X symmetric-difference A bounded for LIN_STAR,
// and a trace building a ray from the generators for SEMI.

#include "semilin/planar.hpp"
#include "semilin/trace.hpp"

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace semilin {

enum class Level { Lin, LinStar, Semi };

std::string_view to_string(Level level);

/// X = points, or X = R minus points when cofinite.
struct AffineCombo1D {
    std::vector<Rat> points;
    bool cofinite = false;

    friend bool operator==(const AffineCombo1D&, const AffineCombo1D&) = default;
};

struct LineMinusPoints {
    Carrier line;
    /// Carrier parameters of the removed points.
    std::vector<Rat> removed;

    friend bool operator==(const LineMinusPoints&, const LineMinusPoints&) = default;
};

/// X = (union of lines minus finitely many points) u points.
struct AffineCombo2D {
    std::vector<LineMinusPoints> lines;
    std::vector<Point2> points;

    friend bool operator==(const AffineCombo2D&, const AffineCombo2D&) = default;
};

using AffineCombo = std::variant<AffineCombo1D, AffineCombo2D>;

SetValue evaluate(const AffineCombo& combo);

std::optional<AffineCombo> is_affine_combo(const SetValue& x);

struct SbCertificate {
    /// Empty set or R in dimension 1; a union of full lines in dimension 2.
    SetValue a;
    /// The lines making up A (dimension 2 only).
    std::vector<Carrier> lines;

    friend bool operator==(const SbCertificate&, const SbCertificate&) = default;
};

std::optional<SbCertificate> sb_certificate(const SetValue& x);

struct Generator {
    std::string name;
    SetValue value;
};

struct GeneratorEvidence {
    Level level;
    std::optional<AffineCombo> combo;
    std::optional<SbCertificate> sb;

    friend bool operator==(const GeneratorEvidence&, const GeneratorEvidence&) = default;
};

struct Verdict {
    Level level = Level::Lin;
    std::vector<GeneratorEvidence> evidence;
    /// SEMI only: the generator the ray is built from, the trace over all
    /// generators, and the ray it produces.
    std::optional<std::size_t> witness;
    std::optional<Trace> trace;
    std::optional<IntervalUnion> ray;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

Verdict classify(const std::vector<Generator>& generators);

/// Re-checks every certificate in v against the generators; throws
/// InternalCheckFailed on the first failure.
void verify(const Verdict& v, const std::vector<Generator>& generators);

}  // namespace semilin
