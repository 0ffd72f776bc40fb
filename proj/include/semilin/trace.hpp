#pragma once

// Replayable derivations. A trace starts from named generator sets and applies
// only maps available in every structure <R; +, scalar maps, generators>:
// translations, nonzero scalings, boolean combinations, the coordinate swap,
// sections along lines, and coordinate projections. Anything a trace produces
// is therefore definable from its generators.

#include "semilin/interval.hpp"
#include "semilin/planar.hpp"

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace semilin {

using SetValue = std::variant<IntervalUnion, PlanarComplex>;

/// 1 for subsets of the line, 2 for subsets of the plane.
int dimension(const SetValue& v);
std::string to_string(const SetValue& v);

namespace step {

/// dy is present exactly for planar operands.
struct Translate {
    Rat dx;
    std::optional<Rat> dy;
    friend bool operator==(const Translate&, const Translate&) = default;
};
struct Scale {
    Rat factor;
    friend bool operator==(const Scale&, const Scale&) = default;
};
struct Intersect {
    std::size_t ref;
    friend bool operator==(const Intersect&, const Intersect&) = default;
};
struct Union {
    std::size_t ref;
    friend bool operator==(const Union&, const Union&) = default;
};
struct Diff {
    std::size_t ref;
    friend bool operator==(const Diff&, const Diff&) = default;
};
struct Complement {
    friend bool operator==(const Complement&, const Complement&) = default;
};
struct Swap {
    friend bool operator==(const Swap&, const Swap&) = default;
};
struct Section {
    Slope slope;
    Rat offset;
    friend bool operator==(const Section&, const Section&) = default;
};
struct ProjectAxis {
    int axis;
    friend bool operator==(const ProjectAxis&, const ProjectAxis&) = default;
};

}  // namespace step

using StepOp = std::variant<step::Translate, step::Scale, step::Intersect, step::Union, step::Diff,
                            step::Complement, step::Swap, step::Section, step::ProjectAxis>;

/// Value slots are numbered generators first (0..g-1), then one slot per step.
struct TraceStep {
    std::size_t input;
    StepOp op;
    friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct Trace {
    std::vector<std::string> generators;
    std::vector<TraceStep> steps;
    std::size_t output = 0;

    friend bool operator==(const Trace&, const Trace&) = default;
};

std::string step_name(const StepOp& op);

/// Applies one step. `values` holds every slot produced so far (for refs).
SetValue apply_step(const StepOp& op, const SetValue& input, const std::vector<SetValue>& values);

/// Checks that every slot reference points backwards. Throws DanglingRef.
void check_structure(const Trace& trace);

/// Deterministic evaluation; generators are bound positionally.
SetValue replay(const Trace& trace, const std::vector<SetValue>& generators);
/// Generators looked up by name; a missing name is a DanglingRef.
SetValue replay(const Trace& trace, const std::map<std::string, SetValue>& named);

/// Records steps while evaluating them, so constructions can inspect
/// intermediate sets when choosing the next constant.
class TraceBuilder {
public:
    TraceBuilder(std::vector<std::string> names, std::vector<SetValue> generators);

    std::size_t apply(std::size_t input, StepOp op);
    const SetValue& value(std::size_t slot) const { return values_.at(slot); }
    const IntervalUnion& line_value(std::size_t slot) const;
    std::size_t size() const { return values_.size(); }

    Trace finish(std::size_t output) const;

private:
    Trace trace_;
    std::vector<SetValue> values_;
};

}  // namespace semilin
