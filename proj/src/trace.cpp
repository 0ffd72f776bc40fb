#include "semilin/trace.hpp"

#include "semilin/error.hpp"

namespace semilin {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

const IntervalUnion& as_line(const SetValue& v, const char* what) {
    if (const auto* x = std::get_if<IntervalUnion>(&v)) return *x;
    fail(ErrorTag::DimensionMismatch, std::string(what) + " needs a subset of the line");
}

const PlanarComplex& as_plane(const SetValue& v, const char* what) {
    if (const auto* x = std::get_if<PlanarComplex>(&v)) return *x;
    fail(ErrorTag::DimensionMismatch, std::string(what) + " needs a subset of the plane");
}

const SetValue& slot(const std::vector<SetValue>& values, std::size_t ref) {
    if (ref >= values.size()) fail(ErrorTag::DanglingRef, "reference to slot " + std::to_string(ref) + " not yet produced");
    return values[ref];
}

SetValue binary(BoolKind kind, const SetValue& a, const SetValue& b) {
    if (dimension(a) != dimension(b)) fail(ErrorTag::DimensionMismatch, "boolean step on sets of different dimension");
    if (dimension(a) == 1) {
        const auto& y = std::get<IntervalUnion>(b);
        return bool_op(kind, std::get<IntervalUnion>(a), &y);
    }
    return bool_op(kind, std::get<PlanarComplex>(a), std::get<PlanarComplex>(b));
}

}  // namespace

int dimension(const SetValue& v) { return std::holds_alternative<IntervalUnion>(v) ? 1 : 2; }

std::string to_string(const SetValue& v) {
    return std::visit([](const auto& x) { return to_string(x); }, v);
}

std::string step_name(const StepOp& op) {
    return std::visit(overloaded{
                          [](const step::Translate&) { return "translate"; },
                          [](const step::Scale&) { return "scale"; },
                          [](const step::Intersect&) { return "intersect"; },
                          [](const step::Union&) { return "union"; },
                          [](const step::Diff&) { return "diff"; },
                          [](const step::Complement&) { return "complement"; },
                          [](const step::Swap&) { return "swap"; },
                          [](const step::Section&) { return "section"; },
                          [](const step::ProjectAxis&) { return "project"; },
                      },
                      op);
}

SetValue apply_step(const StepOp& op, const SetValue& input, const std::vector<SetValue>& values) {
    return std::visit(
        overloaded{
            [&](const step::Translate& s) -> SetValue {
                if (dimension(input) == 1) {
                    if (s.dy) fail(ErrorTag::DimensionMismatch, "planar translation applied to a subset of the line");
                    return translate(std::get<IntervalUnion>(input), s.dx);
                }
                if (!s.dy) fail(ErrorTag::DimensionMismatch, "line translation applied to a planar set");
                return translate(std::get<PlanarComplex>(input), Point2{s.dx, *s.dy});
            },
            [&](const step::Scale& s) -> SetValue {
                if (s.factor == 0) fail(ErrorTag::InvalidArgument, "scale step with zero factor");
                if (dimension(input) == 1) return affine_op(std::get<IntervalUnion>(input), s.factor, 0);
                return scale(std::get<PlanarComplex>(input), s.factor);
            },
            [&](const step::Intersect& s) { return binary(BoolKind::Intersect, input, slot(values, s.ref)); },
            [&](const step::Union& s) { return binary(BoolKind::Union, input, slot(values, s.ref)); },
            [&](const step::Diff& s) { return binary(BoolKind::Difference, input, slot(values, s.ref)); },
            [&](const step::Complement&) -> SetValue { return set_complement(as_line(input, "complement")); },
            [&](const step::Swap&) -> SetValue { return swap_axes(as_plane(input, "swap")); },
            [&](const step::Section& s) -> SetValue {
                return section(as_plane(input, "section"), Carrier{s.slope, s.offset});
            },
            [&](const step::ProjectAxis& s) -> SetValue { return project(as_plane(input, "project"), s.axis); },
        },
        op);
}

void check_structure(const Trace& trace) {
    const std::size_t g = trace.generators.size();
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& st = trace.steps[i];
        const std::size_t available = g + i;
        if (st.input >= available)
            fail(ErrorTag::DanglingRef, "step " + std::to_string(i) + " reads slot " + std::to_string(st.input));
        std::visit(overloaded{
                       [&](const step::Intersect& s) {
                           if (s.ref >= available) fail(ErrorTag::DanglingRef, "step " + std::to_string(i) + " refers forward");
                       },
                       [&](const step::Union& s) {
                           if (s.ref >= available) fail(ErrorTag::DanglingRef, "step " + std::to_string(i) + " refers forward");
                       },
                       [&](const step::Diff& s) {
                           if (s.ref >= available) fail(ErrorTag::DanglingRef, "step " + std::to_string(i) + " refers forward");
                       },
                       [](const auto&) {},
                   },
                   st.op);
    }
    if (trace.output >= g + trace.steps.size())
        fail(ErrorTag::DanglingRef, "output slot " + std::to_string(trace.output) + " does not exist");
}

SetValue replay(const Trace& trace, const std::vector<SetValue>& generators) {
    check_structure(trace);
    if (generators.size() != trace.generators.size())
        fail(ErrorTag::DanglingRef, "trace expects " + std::to_string(trace.generators.size()) + " generators");
    std::vector<SetValue> values = generators;
    values.reserve(generators.size() + trace.steps.size());
    for (const auto& st : trace.steps) {
        SetValue next = apply_step(st.op, values[st.input], values);
        values.push_back(std::move(next));
    }
    return values[trace.output];
}

SetValue replay(const Trace& trace, const std::map<std::string, SetValue>& named) {
    std::vector<SetValue> gens;
    for (const auto& name : trace.generators) {
        auto it = named.find(name);
        if (it == named.end()) fail(ErrorTag::DanglingRef, "generator \"" + name + "\" is not bound");
        gens.push_back(it->second);
    }
    return replay(trace, gens);
}

TraceBuilder::TraceBuilder(std::vector<std::string> names, std::vector<SetValue> generators)
    : values_(std::move(generators)) {
    if (names.size() != values_.size()) fail(ErrorTag::InvalidArgument, "generator names and values differ in count");
    trace_.generators = std::move(names);
}

std::size_t TraceBuilder::apply(std::size_t input, StepOp op) {
    if (input >= values_.size()) fail(ErrorTag::DanglingRef, "builder input slot out of range");
    SetValue next = apply_step(op, values_[input], values_);
    trace_.steps.push_back({input, std::move(op)});
    values_.push_back(std::move(next));
    return values_.size() - 1;
}

const IntervalUnion& TraceBuilder::line_value(std::size_t slot) const { return as_line(value(slot), "line_value"); }

Trace TraceBuilder::finish(std::size_t output) const {
    Trace t = trace_;
    t.output = output;
    check_structure(t);
    return t;
}

}  // namespace semilin
