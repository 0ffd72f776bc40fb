#include "semilin/document.hpp"

#include "semilin/error.hpp"

#include <algorithm>
#include <set>

namespace semilin::doc {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

[[noreturn]] void bad(const std::string& what) { fail(ErrorTag::ParseError, what); }

void expect_fields(const Json& j, const char* what, std::initializer_list<const char*> required,
                   std::initializer_list<const char*> optional = {}) {
    if (!j.is_object()) bad(std::string(what) + ": expected an object");
    for (const auto* key : required)
        if (!j.contains(key)) bad(std::string(what) + ": missing field \"" + key + "\"");
    for (const auto& [key, value] : j.items()) {
        const bool known = std::any_of(required.begin(), required.end(), [&](const char* k) { return key == k; }) ||
                           std::any_of(optional.begin(), optional.end(), [&](const char* k) { return key == k; });
        if (!known) bad(std::string(what) + ": unknown field \"" + key + "\"");
    }
}

const Json& array_field(const Json& j, const char* key, const char* what) {
    const Json& a = j.at(key);
    if (!a.is_array()) bad(std::string(what) + ": \"" + key + "\" must be an array");
    return a;
}

bool bool_field(const Json& j, const char* key, const char* what) {
    const Json& b = j.at(key);
    if (!b.is_boolean()) bad(std::string(what) + ": \"" + key + "\" must be true or false");
    return b.get<bool>();
}

std::size_t index_field(const Json& j, const char* key, const char* what) {
    const Json& n = j.at(key);
    if (!n.is_number_unsigned()) bad(std::string(what) + ": \"" + key + "\" must be a non-negative integer");
    return n.get<std::size_t>();
}

std::string string_field(const Json& j, const char* key, const char* what) {
    const Json& s = j.at(key);
    if (!s.is_string()) bad(std::string(what) + ": \"" + key + "\" must be a string");
    return s.get<std::string>();
}

Json rats(const std::vector<Rat>& xs) {
    Json a = Json::array();
    for (const auto& x : xs) a.push_back(format_rat(x));
    return a;
}

Json encode_carrier(const Carrier& c) { return {{"slope", encode(c.slope)}, {"offset", format_rat(c.offset)}}; }

Json cells_of(const PlanarComplex& x) {
    Json a = Json::array();
    for (const auto& c : x.cells()) a.push_back(encode(c));
    return a;
}

const std::set<std::string>& result_types() {
    static const std::set<std::string> types{"boundedness",  "metrics",      "isolation", "one_dim_class",
                                             "subgroup",     "decomposition", "length_bound", "verdict",
                                             "endpoints",    "flag",          "pairs",        "components",   "star",
                                             "interval_derivation"};
    return types;
}

}  // namespace

// ---------------------------------------------------------------------------
// Encoding

Json encode(const Interval& iv) {
    return {{"lo", format_extended(iv.lo())},
            {"hi", format_extended(iv.hi())},
            {"lo_closed", iv.lo_closed()},
            {"hi_closed", iv.hi_closed()}};
}

Json encode(const IntervalUnion& x) {
    Json parts = Json::array();
    for (const auto& iv : x.parts()) parts.push_back(encode(iv));
    return {{"type", "interval_union"}, {"intervals", parts}};
}

Json encode(const Slope& s) { return s.is_vertical() ? Json("vertical") : Json(format_rat(s.value())); }

Json encode(const Point2& p) { return {{"x", format_rat(p.x)}, {"y", format_rat(p.y)}}; }

Json encode(const Cell& c) {
    switch (c.kind()) {
        case Cell::Kind::Point:
            return {{"kind", "point"}, {"x", format_rat(c.location().x)}, {"y", format_rat(c.location().y)}};
        case Cell::Kind::Seg:
            return {{"kind", "seg"},
                    {"slope", format_rat(c.carrier().slope.value())},
                    {"intercept", format_rat(c.carrier().offset)},
                    {"domain", encode(c.span())}};
        case Cell::Kind::VSeg:
            return {{"kind", "vseg"}, {"abscissa", format_rat(c.carrier().offset)}, {"range", encode(c.span())}};
    }
    return {};
}

Json encode(const PlanarComplex& x) { return {{"type", "planar_complex"}, {"cells", cells_of(x)}}; }

Json encode(const AffineBoundary& b) {
    switch (b.kind()) {
        case AffineBoundary::Kind::NegInf: return "-inf";
        case AffineBoundary::Kind::PosInf: return "+inf";
        case AffineBoundary::Kind::Finite: break;
    }
    return {{"slope", format_rat(b.slope())}, {"intercept", format_rat(b.intercept())}};
}

Json encode(const FiberCell& c) {
    if (!c.is_band()) return {{"kind", "graph"}, {"domain", encode(c.domain())}, {"value", encode(c.value())}};
    return {{"kind", "band"},
            {"domain", encode(c.domain())},
            {"lower", encode(c.lower())},
            {"upper", encode(c.upper())},
            {"lower_closed", c.lower_closed()},
            {"upper_closed", c.upper_closed()}};
}

Json encode(const Family& f) {
    Json cells = Json::array();
    for (const auto& c : f.cells) cells.push_back(encode(c));
    return {{"type", "family"}, {"cells", cells}};
}

Json encode(const TraceStep& s) {
    Json j{{"op", step_name(s.op)}, {"input", s.input}};
    std::visit(overloaded{
                   [&](const step::Translate& t) {
                       Json shift = Json::array({format_rat(t.dx)});
                       if (t.dy) shift.push_back(format_rat(*t.dy));
                       j["shift"] = shift;
                   },
                   [&](const step::Scale& t) { j["factor"] = format_rat(t.factor); },
                   [&](const step::Intersect& t) { j["ref"] = t.ref; },
                   [&](const step::Union& t) { j["ref"] = t.ref; },
                   [&](const step::Diff& t) { j["ref"] = t.ref; },
                   [&](const step::Complement&) {},
                   [&](const step::Swap&) {},
                   [&](const step::Section& t) {
                       j["slope"] = encode(t.slope);
                       j["offset"] = format_rat(t.offset);
                   },
                   [&](const step::ProjectAxis& t) { j["axis"] = static_cast<unsigned>(t.axis); },
               },
               s.op);
    return j;
}

Json encode(const Trace& t) {
    Json steps = Json::array();
    for (const auto& s : t.steps) steps.push_back(encode(s));
    return {{"type", "trace"}, {"generators", t.generators}, {"steps", steps}, {"output", t.output}};
}

Json encode(const SetValue& v) {
    return std::visit([](const auto& x) { return encode(x); }, v);
}

Json encode(const Boundedness& b) {
    return {{"type", "boundedness"},
            {"class", std::string(to_string(b.cls))},
            {"witness", b.witness ? Json(format_rat(*b.witness)) : Json(nullptr)}};
}

Json encode(const Metrics& m) {
    return {{"type", "metrics"},
            {"max_component_length", format_extended(m.max_component_length)},
            {"diameter", format_extended(m.diameter)}};
}

Json encode(const Isolation& iso) {
    return {{"type", "isolation"}, {"shift", format_rat(iso.shift)}, {"single", encode(iso.single)}};
}

Json encode(const OneDimClass& c) {
    return {{"type", "one_dim_class"}, {"kind", std::string(to_string(c.kind))}, {"side", std::string(to_string(c.side))}};
}

Json encode(const Subgroup2D& g) {
    switch (g.kind) {
        case Subgroup2D::Kind::Zero: return {{"type", "subgroup"}, {"kind", "zero"}, {"direction", nullptr}};
        case Subgroup2D::Kind::Plane: return {{"type", "subgroup"}, {"kind", "plane"}, {"direction", nullptr}};
        case Subgroup2D::Kind::Line: break;
    }
    return {{"type", "subgroup"}, {"kind", "line"}, {"direction", encode(g.direction)}};
}

Json encode(const Decomposition& d) {
    Json graphs = Json::array();
    for (const auto& g : d.graphs) graphs.push_back({{"slope", format_rat(g.slope)}, {"offsets", rats(g.offsets)}});
    Json unresolved = Json::array();
    for (const auto& c : d.unresolved) unresolved.push_back(encode(c));
    return {{"type", "decomposition"},
            {"graphs", graphs},
            {"verticals", rats(d.verticals)},
            {"line_parts", encode(d.line_parts)},
            {"residue", encode(d.residue)},
            {"unresolved", unresolved},
            {"resolved", d.resolved()}};
}

Json encode(const LengthWitness& w) {
    return {{"type", "length_bound"},
            {"bound", format_extended(w.bound)},
            {"piece", encode(w.piece)},
            {"slope", format_rat(w.slope)},
            {"intercept", format_rat(w.intercept)},
            {"at", format_extended(w.at)}};
}

Json encode(const AffineCombo& c) {
    if (const auto* one = std::get_if<AffineCombo1D>(&c))
        return {{"kind", "finite_or_cofinite"}, {"points", rats(one->points)}, {"cofinite", one->cofinite}};
    const auto& two = std::get<AffineCombo2D>(c);
    Json lines = Json::array();
    for (const auto& l : two.lines) lines.push_back({{"line", encode_carrier(l.line)}, {"removed", rats(l.removed)}});
    Json points = Json::array();
    for (const auto& p : two.points) points.push_back(encode(p));
    return {{"kind", "lines_minus_points"}, {"lines", lines}, {"points", points}};
}

Json encode(const SbCertificate& c) {
    Json lines = Json::array();
    for (const auto& l : c.lines) lines.push_back(encode_carrier(l));
    return {{"a", encode(c.a)}, {"lines", lines}};
}

Json encode(const Verdict& v, const std::vector<Generator>& generators) {
    Json gens = Json::array();
    for (std::size_t i = 0; i < v.evidence.size(); ++i) {
        const auto& e = v.evidence[i];
        Json g{{"name", generators.at(i).name}, {"level", std::string(to_string(e.level))}};
        g["normal_form"] = e.combo ? encode(*e.combo) : Json(nullptr);
        g["certificate"] = e.sb ? encode(*e.sb) : Json(nullptr);
        gens.push_back(g);
    }
    return {{"type", "verdict"},
            {"level", std::string(to_string(v.level))},
            {"generators", gens},
            {"witness", v.witness ? Json(generators.at(*v.witness).name) : Json(nullptr)},
            {"trace", v.trace ? encode(*v.trace) : Json(nullptr)},
            {"ray", v.ray ? encode(*v.ray) : Json(nullptr)}};
}

// ---------------------------------------------------------------------------
// Decoding

Rat decode_rat(const Json& j) {
    if (!j.is_string()) bad("rationals must be strings such as \"3\" or \"-7/2\"");
    return parse_rat(j.get<std::string>());
}

Extended decode_extended(const Json& j) {
    if (!j.is_string()) bad("endpoints must be strings such as \"3\", \"-7/2\" or \"-inf\"");
    return parse_extended(j.get<std::string>());
}

Interval decode_interval(const Json& j) {
    expect_fields(j, "interval", {"lo", "hi", "lo_closed", "hi_closed"});
    return Interval(decode_extended(j.at("lo")), decode_extended(j.at("hi")), bool_field(j, "lo_closed", "interval"),
                    bool_field(j, "hi_closed", "interval"));
}

IntervalUnion decode_interval_union(const Json& j) {
    expect_fields(j, "interval_union", {"type", "intervals"});
    std::vector<Interval> raw;
    for (const auto& iv : array_field(j, "intervals", "interval_union")) raw.push_back(decode_interval(iv));
    return normalize(raw);
}

Slope decode_slope(const Json& j) {
    if (j.is_string() && j.get<std::string>() == "vertical") return Slope::vertical();
    return Slope(decode_rat(j));
}

Point2 decode_point(const Json& j) {
    expect_fields(j, "point", {"x", "y"});
    return {decode_rat(j.at("x")), decode_rat(j.at("y"))};
}

Cell decode_cell(const Json& j) {
    if (!j.is_object() || !j.contains("kind")) bad("cell: expected an object with a \"kind\"");
    const std::string kind = string_field(j, "kind", "cell");
    if (kind == "point") {
        expect_fields(j, "point cell", {"kind", "x", "y"});
        return Cell::point(decode_rat(j.at("x")), decode_rat(j.at("y")));
    }
    if (kind == "seg") {
        expect_fields(j, "seg cell", {"kind", "slope", "intercept", "domain"});
        return Cell::seg(decode_rat(j.at("slope")), decode_rat(j.at("intercept")), decode_interval(j.at("domain")));
    }
    if (kind == "vseg") {
        expect_fields(j, "vseg cell", {"kind", "abscissa", "range"});
        return Cell::vseg(decode_rat(j.at("abscissa")), decode_interval(j.at("range")));
    }
    bad("cell: unknown kind \"" + kind + "\"");
}

PlanarComplex decode_planar_complex(const Json& j) {
    expect_fields(j, "planar_complex", {"type", "cells"});
    std::vector<Cell> raw;
    for (const auto& c : array_field(j, "cells", "planar_complex")) raw.push_back(decode_cell(c));
    return normalize(raw);
}

namespace {

AffineBoundary decode_boundary(const Json& j) {
    if (j.is_string()) {
        const auto s = j.get<std::string>();
        if (s == "-inf") return AffineBoundary::neg_inf();
        if (s == "+inf" || s == "inf") return AffineBoundary::pos_inf();
        bad("boundary: expected \"-inf\", \"+inf\" or {slope, intercept}");
    }
    expect_fields(j, "boundary", {"slope", "intercept"});
    return AffineBoundary::affine(decode_rat(j.at("slope")), decode_rat(j.at("intercept")));
}

FiberCell decode_fiber_cell(const Json& j) {
    if (!j.is_object() || !j.contains("kind")) bad("family cell: expected an object with a \"kind\"");
    const std::string kind = string_field(j, "kind", "family cell");
    if (kind == "graph") {
        expect_fields(j, "graph cell", {"kind", "domain", "value"});
        return FiberCell::graph(decode_interval(j.at("domain")), decode_boundary(j.at("value")));
    }
    if (kind == "band") {
        expect_fields(j, "band cell", {"kind", "domain", "lower", "upper", "lower_closed", "upper_closed"});
        return FiberCell::band(decode_interval(j.at("domain")), decode_boundary(j.at("lower")), decode_boundary(j.at("upper")),
                               bool_field(j, "lower_closed", "band cell"), bool_field(j, "upper_closed", "band cell"));
    }
    bad("family cell: unknown kind \"" + kind + "\"");
}

StepOp decode_op(const Json& j, const std::string& op) {
    const char* what = "trace step";
    if (op == "translate") {
        expect_fields(j, what, {"op", "input", "shift"});
        const Json& s = array_field(j, "shift", what);
        if (s.size() == 1) return step::Translate{decode_rat(s[0]), std::nullopt};
        if (s.size() == 2) return step::Translate{decode_rat(s[0]), decode_rat(s[1])};
        bad("translate: shift needs one or two components");
    }
    if (op == "scale") {
        expect_fields(j, what, {"op", "input", "factor"});
        return step::Scale{decode_rat(j.at("factor"))};
    }
    if (op == "intersect" || op == "union" || op == "diff") {
        expect_fields(j, what, {"op", "input", "ref"});
        const std::size_t ref = index_field(j, "ref", what);
        if (op == "intersect") return step::Intersect{ref};
        if (op == "union") return step::Union{ref};
        return step::Diff{ref};
    }
    if (op == "complement") {
        expect_fields(j, what, {"op", "input"});
        return step::Complement{};
    }
    if (op == "swap") {
        expect_fields(j, what, {"op", "input"});
        return step::Swap{};
    }
    if (op == "section") {
        expect_fields(j, what, {"op", "input", "slope", "offset"});
        return step::Section{decode_slope(j.at("slope")), decode_rat(j.at("offset"))};
    }
    if (op == "project") {
        expect_fields(j, what, {"op", "input", "axis"});
        const std::size_t axis = index_field(j, "axis", what);
        if (axis != 1 && axis != 2) bad("project: axis must be 1 or 2");
        return step::ProjectAxis{static_cast<int>(axis)};
    }
    bad("trace step: unknown op \"" + op + "\"");
}

}  // namespace

Family decode_family(const Json& j) {
    expect_fields(j, "family", {"type", "cells"});
    Family f;
    for (const auto& c : array_field(j, "cells", "family")) f.cells.push_back(decode_fiber_cell(c));
    return f;
}

Trace decode_trace(const Json& j) {
    expect_fields(j, "trace", {"type", "generators", "steps", "output"});
    Trace t;
    for (const auto& g : array_field(j, "generators", "trace")) {
        if (!g.is_string()) bad("trace: generator names must be strings");
        t.generators.push_back(g.get<std::string>());
    }
    for (const auto& s : array_field(j, "steps", "trace")) {
        if (!s.is_object() || !s.contains("op")) bad("trace step: expected an object with an \"op\"");
        const std::string op = string_field(s, "op", "trace step");
        StepOp decoded = decode_op(s, op);
        t.steps.push_back({index_field(s, "input", "trace step"), std::move(decoded)});
    }
    t.output = index_field(j, "output", "trace");
    return t;
}

// ---------------------------------------------------------------------------
// Documents

const Json& Document::at(const std::string& name) const {
    auto it = objects.find(name);
    if (it == objects.end()) fail(ErrorTag::UnknownName, "no object named \"" + name + "\"");
    return it->second;
}

std::string Document::type_of(const std::string& name) const { return at(name).at("type").get<std::string>(); }

namespace {

void expect_type(const Document& d, const std::string& name, std::initializer_list<const char*> types) {
    const std::string t = d.type_of(name);
    for (const auto* want : types)
        if (t == want) return;
    std::string list;
    for (const auto* want : types) list += std::string(list.empty() ? "" : " or ") + want;
    fail(ErrorTag::DimensionMismatch, "object \"" + name + "\" is a " + t + ", expected " + list);
}

}  // namespace

IntervalUnion Document::interval_union(const std::string& name) const {
    expect_type(*this, name, {"interval_union"});
    return decode_interval_union(at(name));
}

PlanarComplex Document::planar_complex(const std::string& name) const {
    expect_type(*this, name, {"planar_complex"});
    return decode_planar_complex(at(name));
}

SetValue Document::set_value(const std::string& name) const {
    expect_type(*this, name, {"interval_union", "planar_complex"});
    if (type_of(name) == "interval_union") return decode_interval_union(at(name));
    return decode_planar_complex(at(name));
}

Family Document::family(const std::string& name) const {
    expect_type(*this, name, {"family"});
    return decode_family(at(name));
}

Trace Document::trace(const std::string& name) const {
    expect_type(*this, name, {"trace"});
    return decode_trace(at(name));
}

Document parse_document(std::string_view text) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
    expect_fields(j, "document", {"version", "objects"});
    if (!j.at("version").is_string() || j.at("version").get<std::string>() != kVersion)
        bad(std::string("document: version must be \"") + kVersion + "\"");
    if (!j.at("objects").is_object()) bad("document: \"objects\" must be an object");
    Document d;
    for (const auto& [name, obj] : j.at("objects").items()) {
        if (name.empty()) bad("document: object names must be nonempty");
        if (!obj.is_object() || !obj.contains("type") || !obj.at("type").is_string())
            bad("object \"" + name + "\": expected an object with a string \"type\"");
        const std::string type = obj.at("type").get<std::string>();
        if (type == "interval_union") d.objects[name] = encode(decode_interval_union(obj));
        else if (type == "planar_complex") d.objects[name] = encode(decode_planar_complex(obj));
        else if (type == "family") d.objects[name] = encode(decode_family(obj));
        else if (type == "trace") d.objects[name] = encode(decode_trace(obj));
        else if (result_types().count(type)) d.objects[name] = obj;
        else bad("object \"" + name + "\": unknown type \"" + type + "\"");
    }
    return d;
}

std::string serialize(const Document& d) {
    Json objects = Json::object();
    for (const auto& [name, obj] : d.objects) objects[name] = obj;
    const Json j{{"version", kVersion}, {"objects", objects}};
    return j.dump(2) + "\n";
}

std::string serialize_error(std::string_view tag, std::string_view message) {
    const Json j{{"error", {{"tag", std::string(tag)}, {"message", std::string(message)}}}};
    return j.dump(2) + "\n";
}

}  // namespace semilin::doc
