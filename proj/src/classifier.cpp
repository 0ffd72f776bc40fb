#include "semilin/classifier.hpp"

#include "semilin/error.hpp"
#include "semilin/synthesis.hpp"

#include <algorithm>

namespace semilin {

namespace {

bool is_ray(const IntervalUnion& r) {
    return r.size() == 1 && r.parts()[0].lo().is_finite() != r.parts()[0].hi().is_finite();
}

bool all_points(const IntervalUnion& x) {
    return std::all_of(x.parts().begin(), x.parts().end(), [](const Interval& iv) { return iv.is_point(); });
}

std::vector<Rat> point_values(const IntervalUnion& x) {
    std::vector<Rat> out;
    for (const auto& iv : x.parts()) out.push_back(iv.lo().value());
    return out;
}

bool symmdiff_bounded(const SetValue& x, const SetValue& a) {
    if (dimension(x) == 1) return set_symmdiff(std::get<IntervalUnion>(x), std::get<IntervalUnion>(a)).is_bounded();
    return is_bounded(bool_op(BoolKind::SymmDiff, std::get<PlanarComplex>(x), std::get<PlanarComplex>(a)));
}

void check(bool ok, const std::string& what) {
    if (!ok) fail(ErrorTag::InternalCheckFailed, "classifier certificate: " + what);
}

}  // namespace

std::string_view to_string(Level level) {
    switch (level) {
        case Level::Lin: return "LIN";
        case Level::LinStar: return "LIN_STAR";
        case Level::Semi: return "SEMI";
    }
    return "?";
}

SetValue evaluate(const AffineCombo& combo) {
    if (const auto* c = std::get_if<AffineCombo1D>(&combo)) {
        const IntervalUnion pts = IntervalUnion::points(c->points);
        return c->cofinite ? set_complement(pts) : pts;
    }
    const auto& c = std::get<AffineCombo2D>(combo);
    PlanarComplex out;
    for (const auto& l : c.lines) {
        std::vector<Cell> holes;
        for (const auto& t : l.removed) {
            const Point2 p = l.line.at(t);
            holes.push_back(Cell::point(p.x, p.y));
        }
        out = bool_op(BoolKind::Union, out, bool_op(BoolKind::Difference, full_line(l.line), normalize(holes)));
    }
    std::vector<Cell> pts;
    for (const auto& p : c.points) pts.push_back(Cell::point(p.x, p.y));
    return bool_op(BoolKind::Union, out, normalize(pts));
}

std::optional<AffineCombo> is_affine_combo(const SetValue& x) {
    if (const auto* y = std::get_if<IntervalUnion>(&x)) {
        if (all_points(*y)) return AffineCombo1D{point_values(*y), false};
        const IntervalUnion co = set_complement(*y);
        if (all_points(co)) return AffineCombo1D{point_values(co), true};
        return std::nullopt;
    }
    const auto& p = std::get<PlanarComplex>(x);
    AffineCombo2D combo;
    for (const auto& l : p.carriers()) {
        const IntervalUnion missing = set_complement(section(p, l));
        if (!all_points(missing)) return std::nullopt;
        combo.lines.push_back({l, point_values(missing)});
    }
    for (const auto& c : p.cells())
        if (c.is_point()) combo.points.push_back(c.location());
    check(evaluate(combo) == x, "lines-minus-points form does not reproduce the set");
    return combo;
}

std::optional<SbCertificate> sb_certificate(const SetValue& x) {
    if (const auto* y = std::get_if<IntervalUnion>(&x)) {
        if (y->is_empty() || y->is_bounded()) return SbCertificate{IntervalUnion::empty(), {}};
        if (set_complement(*y).is_bounded()) return SbCertificate{IntervalUnion::full(), {}};
        return std::nullopt;
    }
    const auto& p = std::get<PlanarComplex>(x);
    const Decomposition d = decompose(p);
    if (!d.resolved()) return std::nullopt;
    SbCertificate cert{PlanarComplex(), d.lines()};
    PlanarComplex a;
    for (const auto& l : cert.lines) a = bool_op(BoolKind::Union, a, full_line(l));
    cert.a = a;
    check(symmdiff_bounded(x, cert.a), "X symmetric-difference A is unbounded");
    return cert;
}

Verdict classify(const std::vector<Generator>& generators) {
    Verdict v;
    for (const auto& g : generators) {
        GeneratorEvidence e{Level::Lin, is_affine_combo(g.value), std::nullopt};
        if (!e.combo) {
            e.sb = sb_certificate(g.value);
            e.level = e.sb ? Level::LinStar : Level::Semi;
        }
        v.level = std::max(v.level, e.level);
        v.evidence.push_back(std::move(e));
    }

    if (v.level == Level::Semi) {
        std::vector<std::string> names;
        std::vector<SetValue> values;
        for (const auto& g : generators) {
            names.push_back(g.name);
            values.push_back(g.value);
        }
        TraceBuilder b(names, values);
        std::size_t i = 0;
        while (v.evidence[i].level != Level::Semi) ++i;
        std::size_t slot = i;
        if (const auto* p = std::get_if<PlanarComplex>(&generators[i].value)) {
            const Carrier l = decompose(*p).unresolved.front().carrier();
            slot = b.apply(slot, step::Section{l.slope, l.offset});
        }
        slot = append_ray_steps(b, slot);
        v.witness = i;
        v.trace = b.finish(slot);
        v.ray = b.line_value(slot);
    }
    verify(v, generators);
    return v;
}

void verify(const Verdict& v, const std::vector<Generator>& generators) {
    check(v.evidence.size() == generators.size(), "evidence count");
    Level top = Level::Lin;
    for (std::size_t i = 0; i < generators.size(); ++i) {
        const auto& e = v.evidence[i];
        const auto& x = generators[i].value;
        top = std::max(top, e.level);
        switch (e.level) {
            case Level::Lin:
                check(e.combo && evaluate(*e.combo) == x, "normal form of " + generators[i].name);
                break;
            case Level::LinStar:
                check(!e.combo && e.sb && dimension(e.sb->a) == dimension(x), "evidence shape of " + generators[i].name);
                check(symmdiff_bounded(x, e.sb->a), "X symmetric-difference A of " + generators[i].name);
                break;
            case Level::Semi:
                check(!e.combo && !e.sb, "evidence shape of " + generators[i].name);
                break;
        }
    }
    check(top == v.level, "overall level is not the join of generator levels");
    if (v.level != Level::Semi) {
        check(!v.trace && !v.ray && !v.witness, "non-SEMI verdict carries a trace");
        return;
    }
    check(v.trace && v.ray && v.witness, "SEMI verdict without a trace");
    std::vector<SetValue> values;
    for (const auto& g : generators) values.push_back(g.value);
    const SetValue out = replay(*v.trace, values);
    check(out == SetValue(*v.ray), "trace does not replay to the stated ray");
    check(is_ray(*v.ray), "trace output is not a ray");
}

}  // namespace semilin
