#pragma once

// The JSON document format shared by the command-line tool's input and
// output:
//
//   {"version": "semilin/1", "objects": {"<name>": {"type": ..., ...}, ...}}
//
// Rationals are strings ("3", "-7/2"), infinities are "-inf" / "+inf".
// Decoding is strict: unknown or missing fields are ParseErrors. Encoding is
// canonical (sorted keys, lowest-terms rationals, two-space indentation).

#include "semilin/classifier.hpp"
#include "semilin/family.hpp"
#include "semilin/synthesis.hpp"
#include "semilin/trace.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace semilin::doc {

using Json = nlohmann::json;

inline constexpr const char* kVersion = "semilin/1";

Json encode(const Interval& iv);
Json encode(const IntervalUnion& x);
Json encode(const Cell& c);
Json encode(const PlanarComplex& x);
Json encode(const AffineBoundary& b);
Json encode(const FiberCell& c);
Json encode(const Family& f);
Json encode(const TraceStep& s);
Json encode(const Trace& t);
Json encode(const SetValue& v);
Json encode(const Slope& s);
Json encode(const Point2& p);
Json encode(const Boundedness& b);
Json encode(const Metrics& m);
Json encode(const Isolation& iso);
Json encode(const OneDimClass& c);
Json encode(const Subgroup2D& g);
Json encode(const Decomposition& d);
Json encode(const LengthWitness& w);
Json encode(const AffineCombo& c);
Json encode(const SbCertificate& c);
/// Generator names are needed to label the evidence.
Json encode(const Verdict& v, const std::vector<Generator>& generators);

Interval decode_interval(const Json& j);
IntervalUnion decode_interval_union(const Json& j);
Cell decode_cell(const Json& j);
PlanarComplex decode_planar_complex(const Json& j);
Family decode_family(const Json& j);
Trace decode_trace(const Json& j);
Slope decode_slope(const Json& j);
Point2 decode_point(const Json& j);
Rat decode_rat(const Json& j);
Extended decode_extended(const Json& j);

/// A parsed document: objects by name, each already in canonical encoding.
struct Document {
    std::map<std::string, Json> objects;

    bool has(const std::string& name) const { return objects.count(name) != 0; }
    /// Throws UnknownName if absent.
    const Json& at(const std::string& name) const;
    std::string type_of(const std::string& name) const;

    IntervalUnion interval_union(const std::string& name) const;
    PlanarComplex planar_complex(const std::string& name) const;
    /// An interval_union or planar_complex object.
    SetValue set_value(const std::string& name) const;
    Family family(const std::string& name) const;
    Trace trace(const std::string& name) const;

    friend bool operator==(const Document&, const Document&) = default;
};

/// Input types (interval_union, planar_complex, family, trace) are decoded and
/// re-encoded, which canonicalizes them; result types are checked for a known
/// type tag and kept as given.
Document parse_document(std::string_view text);
std::string serialize(const Document& d);

/// Machine-readable error record: {"error": {"tag": ..., "message": ...}}.
std::string serialize_error(std::string_view tag, std::string_view message);

}  // namespace semilin::doc
