#include "semilin/classifier.hpp"
#include "semilin/document.hpp"
#include "semilin/error.hpp"
#include "semilin/family.hpp"
#include "semilin/synthesis.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <sstream>

#ifndef SEMILIN_VERSION
#define SEMILIN_VERSION "0.0.0"
#endif

using namespace semilin;
using doc::Document;
using doc::Json;

namespace {

struct Options {
    std::string in;
    std::string out;
    std::string as = "result";

    std::string set;
    std::string a;
    std::string b;
    std::string op;
    std::string side = "left";
    std::string kind;
    std::string family;
    std::string trace;
    std::vector<std::string> sets;
    bool all = false;
    bool left_only = false;

    std::string factor = "1";
    std::string shift = "0";
    std::string dx = "0";
    std::string dy = "0";
    bool swap = false;
    std::string t;
    std::string k;
    std::string p;
    std::string q;
    int axis = 1;
    std::string slope;
    std::string offset = "0";
};

[[noreturn]] void usage(const std::string& message) { fail(ErrorTag::ParseError, message); }

Side parse_side(const std::string& s) {
    if (s == "left") return Side::Left;
    if (s == "right") return Side::Right;
    usage("--side must be left or right");
}

Point2 parse_point(const std::string& s) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) usage("points are written x,y");
    return {parse_rat(s.substr(0, comma)), parse_rat(s.substr(comma + 1))};
}

BoolKind parse_bool_kind(const std::string& s) {
    if (s == "union") return BoolKind::Union;
    if (s == "intersect") return BoolKind::Intersect;
    if (s == "difference") return BoolKind::Difference;
    if (s == "symmdiff") return BoolKind::SymmDiff;
    if (s == "complement") return BoolKind::Complement;
    usage("--op must be union, intersect, difference, symmdiff or complement");
}

const std::string& need(const std::string& value, const char* flag) {
    if (value.empty()) usage(std::string(flag) + " is required");
    return value;
}

Json endpoints_json(Side side, const std::vector<Rat>& xs) {
    Json pts = Json::array();
    for (const auto& x : xs) pts.push_back(format_rat(x));
    return {{"type", "endpoints"}, {"side", side == Side::Left ? "left" : "right"}, {"points", pts}};
}

Json flag_json(bool value) { return {{"type", "flag"}, {"value", value}}; }

/// Objects produced by one command, keyed by their output names.
using Output = std::map<std::string, Json>;
using Handler = std::function<Output(const Options&, const Document&)>;

Output one(const Options& o, Json value) { return {{o.as, std::move(value)}}; }

// ---------------------------------------------------------------------------
// Subsets of the line

Output cmd_normalize(const Options& o, const Document& d) {
    if (o.set.empty()) return Output(d.objects.begin(), d.objects.end());
    return {{o.set, d.at(o.set)}};
}

Output cmd_boolop(const Options& o, const Document& d) {
    const BoolKind kind = parse_bool_kind(need(o.op, "--op"));
    const auto x = d.interval_union(need(o.a, "--a"));
    if (kind == BoolKind::Complement) return one(o, doc::encode(bool_op(kind, x)));
    const auto y = d.interval_union(need(o.b, "--b"));
    return one(o, doc::encode(bool_op(kind, x, &y)));
}

Output cmd_affine(const Options& o, const Document& d) {
    return one(o, doc::encode(affine_op(d.interval_union(need(o.set, "--set")), parse_rat(o.factor), parse_rat(o.shift))));
}

Output cmd_components(const Options& o, const Document& d) {
    Json parts = Json::array();
    for (const auto& iv : components(d.interval_union(need(o.set, "--set")))) parts.push_back(doc::encode(iv));
    return one(o, {{"type", "components"}, {"intervals", parts}});
}

Output cmd_endpoints(const Options& o, const Document& d) {
    const Side side = parse_side(o.side);
    return one(o, endpoints_json(side, endpoints(d.interval_union(need(o.set, "--set")), side)));
}

Output cmd_boundedness(const Options& o, const Document& d) {
    return one(o, doc::encode(boundedness(d.interval_union(need(o.set, "--set")))));
}

Output cmd_topo(const Options& o, const Document& d) {
    TopoKind kind;
    if (o.kind == "closure") kind = TopoKind::Closure;
    else if (o.kind == "interior") kind = TopoKind::Interior;
    else if (o.kind == "frontier") kind = TopoKind::Frontier;
    else usage("--kind must be closure, interior or frontier");
    return one(o, doc::encode(topo_op(d.interval_union(need(o.set, "--set")), kind)));
}

Output cmd_metrics(const Options& o, const Document& d) {
    return one(o, doc::encode(metrics(d.interval_union(need(o.set, "--set")))));
}

Output cmd_isolate(const Options& o, const Document& d) {
    const auto search = o.left_only ? ShiftSearch::LeftEndpoints : ShiftSearch::AllEndpoints;
    return one(o, doc::encode(isolate_interval(d.interval_union(need(o.set, "--set")), search)));
}

Output cmd_classify1d(const Options& o, const Document& d) {
    return one(o, doc::encode(classify_one_dim(d.interval_union(need(o.set, "--set")))));
}

Output cmd_derive_ray(const Options& o, const Document& d) {
    const auto& name = need(o.set, "--set");
    const auto r = derive_ray(d.interval_union(name), name);
    return {{name, d.at(name)}, {"ray", doc::encode(r.ray)}, {"trace", doc::encode(r.trace)}};
}

Output cmd_derive_interval(const Options& o, const Document& d) {
    const auto& name = need(o.set, "--set");
    const auto r = derive_interval(d.interval_union(name), name);
    const Json derivation{{"type", "interval_derivation"},
                          {"iterations", r.iterations},
                          {"used_fallback", r.used_fallback}};
    return {{name, d.at(name)},
            {"interval", doc::encode(normalize(std::vector<Interval>{r.interval}))},
            {"trace", doc::encode(r.trace)},
            {"derivation", derivation}};
}

Output cmd_replay(const Options& o, const Document& d) {
    const auto& name = need(o.trace, "--trace");
    const Json& obj = d.at(name);
    if (obj.at("type") == "verdict" && obj.at("trace").is_null())
        fail(ErrorTag::InvalidArgument, "verdict \"" + name + "\" carries no trace");
    const Trace t = obj.at("type") == "verdict" ? doc::decode_trace(obj.at("trace")) : d.trace(name);
    std::map<std::string, SetValue> named;
    for (const auto& g : t.generators)
        if (d.has(g)) named.emplace(g, d.set_value(g));
    return one(o, doc::encode(replay(t, named)));
}

// ---------------------------------------------------------------------------
// Subsets of the plane

Output cmd_pc_normalize(const Options& o, const Document& d) {
    if (o.set.empty()) {
        Output out;
        for (const auto& [name, obj] : d.objects)
            if (d.type_of(name) == "planar_complex") out.emplace(name, obj);
        return out;
    }
    return {{o.set, doc::encode(d.planar_complex(o.set))}};
}

Output cmd_pc_boolop(const Options& o, const Document& d) {
    const BoolKind kind = parse_bool_kind(need(o.op, "--op"));
    const auto x = d.planar_complex(need(o.a, "--a"));
    if (kind == BoolKind::Complement) return one(o, doc::encode(bool_op(kind, x, x)));
    return one(o, doc::encode(bool_op(kind, x, d.planar_complex(need(o.b, "--b")))));
}

Output cmd_pc_affine(const Options& o, const Document& d) {
    const auto x = d.planar_complex(need(o.set, "--set"));
    return one(o, doc::encode(affine_image(x, Point2{parse_rat(o.dx), parse_rat(o.dy)}, o.swap)));
}

Output cmd_pc_bounded(const Options& o, const Document& d) {
    return one(o, flag_json(is_bounded(d.planar_complex(need(o.set, "--set")))));
}

Output cmd_pc_topo(const Options& o, const Document& d) {
    PlanarTopo kind;
    if (o.kind == "closure") kind = PlanarTopo::Closure;
    else if (o.kind == "frontier") kind = PlanarTopo::Frontier;
    else usage("--kind must be closure or frontier");
    return one(o, doc::encode(topo_op(d.planar_complex(need(o.set, "--set")), kind)));
}

Output cmd_pc_section(const Options& o, const Document& d) {
    const Slope slope = need(o.slope, "--slope") == "vertical" ? Slope::vertical() : Slope(parse_rat(o.slope));
    const Carrier line{slope, parse_rat(o.offset)};
    return one(o, doc::encode(section(d.planar_complex(need(o.set, "--set")), line)));
}

Output cmd_pc_project(const Options& o, const Document& d) {
    if (o.axis != 1 && o.axis != 2) usage("--axis must be 1 or 2");
    return one(o, doc::encode(project(d.planar_complex(need(o.set, "--set")), o.axis)));
}

Output cmd_pc_affine_part(const Options& o, const Document& d) {
    return one(o, doc::encode(affine_part(d.planar_complex(need(o.set, "--set")))));
}

Output cmd_pc_star(const Options& o, const Document& d) {
    const Point2 p = parse_point(need(o.p, "--p"));
    Json dirs = Json::array();
    for (const auto& dir : local_star(d.planar_complex(need(o.set, "--set")), p))
        dirs.push_back({{"slope", doc::encode(dir.slope)}, {"positive", dir.positive}});
    return one(o, {{"type", "star"}, {"at", doc::encode(p)}, {"directions", dirs}});
}

Output cmd_pc_germ_equal(const Options& o, const Document& d) {
    const auto x = d.planar_complex(need(o.set, "--set"));
    return one(o, flag_json(germ_equal(x, parse_point(need(o.p, "--p")), parse_point(need(o.q, "--q")))));
}

Output cmd_pc_stab_bd(const Options& o, const Document& d) {
    return one(o, doc::encode(stab_bd(d.planar_complex(need(o.set, "--set")))));
}

Output cmd_pc_decompose(const Options& o, const Document& d) {
    return one(o, doc::encode(decompose(d.planar_complex(need(o.set, "--set")))));
}

// ---------------------------------------------------------------------------
// Families

Output cmd_fiber(const Options& o, const Document& d) {
    return one(o, doc::encode(fiber(d.family(need(o.family, "--family")), parse_rat(need(o.t, "--t")))));
}

Output cmd_bounded_params(const Options& o, const Document& d) {
    return one(o, doc::encode(bounded_params(d.family(need(o.family, "--family")))));
}

Output cmd_endpoint_family(const Options& o, const Document& d) {
    return one(o, doc::encode(endpoint_family(d.family(need(o.family, "--family")), parse_side(o.side))));
}

Output cmd_uniform_bound(const Options& o, const Document& d) {
    return one(o, doc::encode(uniform_length_bound(d.family(need(o.family, "--family")))));
}

Output cmd_match_endpoints(const Options& o, const Document& d) {
    std::optional<Rat> k;
    if (!o.k.empty()) k = parse_rat(o.k);
    const auto pairs = match_endpoints(d.family(need(o.family, "--family")), parse_rat(need(o.t, "--t")), k);
    Json list = Json::array();
    for (const auto& [a, b] : pairs) list.push_back(Json::array({format_rat(a), format_rat(b)}));
    return one(o, {{"type", "pairs"}, {"pairs", list}});
}

// ---------------------------------------------------------------------------
// Classification

Output cmd_classify(const Options& o, const Document& d) {
    std::vector<std::string> names = o.sets;
    if (o.all) {
        if (!names.empty()) usage("--all and --sets are exclusive");
        for (const auto& [name, obj] : d.objects) {
            const auto type = d.type_of(name);
            if (type == "interval_union" || type == "planar_complex") names.push_back(name);
        }
    }
    if (names.empty()) usage("classify needs --all or --sets");
    std::vector<Generator> gens;
    Output out;
    for (const auto& name : names) {
        gens.push_back({name, d.set_value(name)});
        out.emplace(name, d.at(name));
    }
    const Verdict v = classify(gens);
    if (out.count(o.as)) fail(ErrorTag::InvalidArgument, "output name \"" + o.as + "\" collides with a generator");
    out.emplace(o.as, doc::encode(v, gens));
    return out;
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream f(path, std::ios::binary);
    if (!f) usage("cannot open " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) usage("cannot write " + path);
    f << text;
}

struct Command {
    const char* name;
    const char* help;
    Handler run;
    std::vector<const char*> flags;
};

}  // namespace

int main(int argc, char** argv) {
    Options o;
    CLI::App app{"Exact semilinear set toolkit: interval algebra, planar cells, families, trace synthesis and reduct classification.\n"
                 "Reads a document from --in (default stdin) and writes a document to --out (default stdout)."};
    app.set_version_flag("--version", std::string("semilin ") + SEMILIN_VERSION);
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--in", o.in, "Input document (default stdin)");
    app.add_option("--out", o.out, "Output document (default stdout)");
    app.add_option("--as", o.as, "Name of the result object")->capture_default_str();

    const std::vector<Command> commands{
        {"normalize", "Canonicalize the document or one set", cmd_normalize, {"set?"}},
        {"boolop", "Boolean operation on subsets of the line", cmd_boolop, {"op", "a", "b"}},
        {"affine", "Image under x -> factor*x + shift", cmd_affine, {"set", "factor", "shift"}},
        {"components", "Connected components in order", cmd_components, {"set"}},
        {"endpoints", "Left or right endpoints", cmd_endpoints, {"set", "side"}},
        {"boundedness", "Bounded, cobounded or both unbounded", cmd_boundedness, {"set"}},
        {"topo", "Closure, interior or frontier", cmd_topo, {"set", "kind"}},
        {"metrics", "Longest component and diameter", cmd_metrics, {"set"}},
        {"isolate", "Shift d with X n (X + d) a single interval", cmd_isolate, {"set", "left-only"}},
        {"classify1d", "Finite/cofinite, bounded/cobounded infinite, or both unbounded", cmd_classify1d, {"set"}},
        {"derive-ray", "Replayable derivation of a ray", cmd_derive_ray, {"set"}},
        {"derive-interval", "Replayable derivation of a bounded interval", cmd_derive_interval, {"set"}},
        {"replay", "Evaluate a trace against the document", cmd_replay, {"trace"}},
        {"pc-normalize", "Canonicalize planar complexes", cmd_pc_normalize, {"set?"}},
        {"pc-boolop", "Boolean operation on planar complexes", cmd_pc_boolop, {"op", "a", "b"}},
        {"pc-affine", "Optional coordinate swap, then translation", cmd_pc_affine, {"set", "dx", "dy", "swap"}},
        {"pc-bounded", "Whether a planar complex is bounded", cmd_pc_bounded, {"set"}},
        {"pc-topo", "Closure or frontier", cmd_pc_topo, {"set", "kind"}},
        {"pc-section", "Pullback along a line", cmd_pc_section, {"set", "slope", "offset"}},
        {"pc-project", "Coordinate projection", cmd_pc_project, {"set", "axis"}},
        {"pc-affine-part", "Points where the set is locally closed under u - v + w", cmd_pc_affine_part, {"set"}},
        {"pc-star", "Directions of the local star at a point", cmd_pc_star, {"set", "p"}},
        {"pc-germ-equal", "Whether two points have the same germ", cmd_pc_germ_equal, {"set", "p", "q"}},
        {"pc-stab-bd", "Subgroup of shifts with bounded symmetric difference", cmd_pc_stab_bd, {"set"}},
        {"pc-decompose", "Co-bounded lines plus bounded residue", cmd_pc_decompose, {"set"}},
        {"fiber", "Fiber of a family at t", cmd_fiber, {"family", "t"}},
        {"bounded-params", "Parameters with bounded fibers", cmd_bounded_params, {"family"}},
        {"endpoint-family", "Family of left or right fiber endpoints", cmd_endpoint_family, {"family", "side"}},
        {"uniform-bound", "Uniform bound on component lengths", cmd_uniform_bound, {"family"}},
        {"match-endpoints", "Pair endpoints of a fiber into components", cmd_match_endpoints, {"family", "t", "k"}},
        {"classify", "Classify generators as LIN, LIN_STAR or SEMI", cmd_classify, {"all", "sets"}},
    };

    const Command* chosen = nullptr;
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->callback([&chosen, &c] { chosen = &c; });
        for (std::string f : c.flags) {
            if (!f.empty() && f.back() == '?') f.pop_back();
            if (f == "set") sub->add_option("--set", o.set, "Operand set name");
            else if (f == "a") sub->add_option("--a", o.a, "First operand name");
            else if (f == "b") sub->add_option("--b", o.b, "Second operand name");
            else if (f == "op") sub->add_option("--op", o.op, "union|intersect|difference|symmdiff|complement");
            else if (f == "factor") sub->add_option("--factor", o.factor, "Nonzero rational factor")->capture_default_str();
            else if (f == "shift") sub->add_option("--shift", o.shift, "Rational shift")->capture_default_str();
            else if (f == "side") sub->add_option("--side", o.side, "left|right")->capture_default_str();
            else if (f == "kind") sub->add_option("--kind", o.kind, "Topological operation");
            else if (f == "left-only") sub->add_flag("--left-only", o.left_only, "Search shifts among left endpoints only");
            else if (f == "trace") sub->add_option("--trace", o.trace, "Trace object name");
            else if (f == "dx") sub->add_option("--dx", o.dx, "Horizontal shift")->capture_default_str();
            else if (f == "dy") sub->add_option("--dy", o.dy, "Vertical shift")->capture_default_str();
            else if (f == "swap") sub->add_flag("--swap", o.swap, "Swap coordinates before translating");
            else if (f == "slope") sub->add_option("--slope", o.slope, "Rational slope or 'vertical'");
            else if (f == "offset") sub->add_option("--offset", o.offset, "Intercept, or abscissa for vertical lines")->capture_default_str();
            else if (f == "axis") sub->add_option("--axis", o.axis, "1 or 2")->capture_default_str();
            else if (f == "p") sub->add_option("--p", o.p, "Point x,y");
            else if (f == "q") sub->add_option("--q", o.q, "Point x,y");
            else if (f == "family") sub->add_option("--family", o.family, "Family object name");
            else if (f == "t") sub->add_option("--t", o.t, "Parameter value");
            else if (f == "k") sub->add_option("--k", o.k, "Component length bound (default: uniform bound)");
            else if (f == "all") sub->add_flag("--all", o.all, "Use every set in the document");
            else if (f == "sets") sub->add_option("--sets", o.sets, "Generator names")->delimiter(',');
        }
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        const Document input = doc::parse_document(read_input(o.in));
        const Output result = chosen->run(o, input);
        Document output;
        for (const auto& [name, obj] : result) output.objects[name] = obj;
        write_output(o.out, doc::serialize(output));
        return 0;
    } catch (const Error& e) {
        std::cout << doc::serialize_error(to_string(e.tag()), e.what());
        std::cerr << "semilin: " << to_string(e.tag()) << ": " << e.what() << "\n";
        return e.tag() == ErrorTag::ParseError ? 1 : 2;
    }
}
