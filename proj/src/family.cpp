#include "semilin/family.hpp"

#include "semilin/error.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace semilin {

namespace {

using Fn = std::pair<Rat, Rat>;  // slope, intercept

Rat eval(const Fn& f, const Rat& t) { return f.first * t + f.second; }

/// Limit of an affine function at a finite point or an infinite end.
Extended limit(const Fn& f, const Extended& at) {
    if (at.is_finite()) return Extended(eval(f, at.value()));
    if (f.first == 0) return Extended(f.second);
    const bool up = at.is_pos_inf() ? f.first > 0 : f.first < 0;
    return up ? Extended::pos_inf() : Extended::neg_inf();
}

struct Piece {
    Interval iv;
    Rat sample;
};

/// The t-axis cut at the critical parameters: open gaps and the points between them.
std::vector<Piece> pieces(const std::vector<Rat>& crit) {
    std::vector<Piece> out;
    if (crit.empty()) return {{Interval::line(), Rat(0)}};
    out.push_back({Interval::open(Extended::neg_inf(), crit.front()), crit.front() - 1});
    for (std::size_t i = 0; i < crit.size(); ++i) {
        out.push_back({Interval::point(crit[i]), crit[i]});
        if (i + 1 < crit.size())
            out.push_back({Interval::open(crit[i], crit[i + 1]), (crit[i] + crit[i + 1]) / 2});
    }
    out.push_back({Interval::open(crit.back(), Extended::pos_inf()), crit.back() + 1});
    return out;
}

std::vector<Fn> active_functions(const Family& f, const Rat& t) {
    std::vector<Fn> fns;
    for (const auto& c : f.cells) {
        if (!c.domain().contains(t)) continue;
        if (c.lower().is_finite()) fns.emplace_back(c.lower().slope(), c.lower().intercept());
        if (c.is_band() && c.upper().is_finite()) fns.emplace_back(c.upper().slope(), c.upper().intercept());
    }
    std::sort(fns.begin(), fns.end());
    return fns;
}

/// The smallest active boundary function taking value e at t.
Fn function_for(const std::vector<Fn>& fns, const Rat& t, const Rat& e) {
    for (const auto& fn : fns)
        if (eval(fn, t) == e) return fn;
    fail(ErrorTag::InternalCheckFailed, "no boundary produces endpoint " + format_rat(e) + " at t=" + format_rat(t));
}

void check_no_infinite(const Family& f, const char* what) {
    for (const auto& c : f.cells)
        if (c.has_infinite_boundary())
            fail(ErrorTag::UnboundedFiber,
                 std::string(what) + ": a cell with an infinite boundary makes fibers over " + to_string(c.domain()) +
                     " unbounded");
}

}  // namespace

Extended AffineBoundary::at(const Rat& t) const {
    switch (kind_) {
        case Kind::NegInf: return Extended::neg_inf();
        case Kind::PosInf: return Extended::pos_inf();
        case Kind::Finite: break;
    }
    return Extended(slope_ * t + intercept_);
}

std::string to_string(const AffineBoundary& b) {
    switch (b.kind()) {
        case AffineBoundary::Kind::NegInf: return "-inf";
        case AffineBoundary::Kind::PosInf: return "+inf";
        case AffineBoundary::Kind::Finite: break;
    }
    return format_rat(b.slope()) + "*t+" + format_rat(b.intercept());
}

FiberCell FiberCell::band(Interval domain, AffineBoundary lower, AffineBoundary upper, bool lower_closed,
                          bool upper_closed) {
    if (lower.kind() == AffineBoundary::Kind::PosInf || upper.kind() == AffineBoundary::Kind::NegInf)
        fail(ErrorTag::MalformedFamily, "band boundaries are reversed");
    if ((lower_closed && !lower.is_finite()) || (upper_closed && !upper.is_finite()))
        fail(ErrorTag::MalformedFamily, "an infinite band side cannot be closed");
    if (lower.is_finite() && upper.is_finite()) {
        const Fn w{upper.slope() - lower.slope(), upper.intercept() - lower.intercept()};
        const Extended& a = domain.lo();
        const Extended& b = domain.hi();
        const Extended zero(Rat(0));
        bool ok = limit(w, a) >= zero && limit(w, b) >= zero;
        if (!domain.is_point()) {
            Rat m = 0;
            if (a.is_finite() && b.is_finite()) m = (a.value() + b.value()) / 2;
            else if (a.is_finite()) m = a.value() + 1;
            else if (b.is_finite()) m = b.value() - 1;
            ok = ok && eval(w, m) > 0;
        }
        if (!ok)
            fail(ErrorTag::MalformedFamily,
                 "band lower boundary " + to_string(lower) + " is not below " + to_string(upper) + " on " + to_string(domain));
    }
    return FiberCell(Kind::Band, std::move(domain), std::move(lower), std::move(upper), lower_closed, upper_closed);
}

FiberCell FiberCell::graph(Interval domain, AffineBoundary value) {
    if (!value.is_finite()) fail(ErrorTag::MalformedFamily, "a graph cell needs a finite value");
    AffineBoundary copy = value;
    return FiberCell(Kind::Graph, std::move(domain), std::move(value), std::move(copy), true, true);
}

IntervalUnion FiberCell::at(const Rat& t) const {
    if (!domain_.contains(t)) return IntervalUnion::empty();
    const Extended lo = lower_.at(t);
    if (kind_ == Kind::Graph) return IntervalUnion::of(Interval::point(lo.value()));
    const Extended hi = upper_.at(t);
    if (lo == hi) return lower_closed_ && upper_closed_ ? IntervalUnion::of(Interval::point(lo.value())) : IntervalUnion::empty();
    return IntervalUnion::of(Interval(lo, hi, lower_closed_, upper_closed_));
}

IntervalUnion fiber(const Family& f, const Rat& t) {
    std::vector<Interval> parts;
    for (const auto& c : f.cells) {
        const IntervalUnion part = c.at(t);
        parts.insert(parts.end(), part.parts().begin(), part.parts().end());
    }
    return normalize(parts);
}

IntervalUnion bounded_params(const Family& f) {
    std::vector<Interval> all, infinite;
    for (const auto& c : f.cells) {
        all.push_back(c.domain());
        if (c.has_infinite_boundary()) infinite.push_back(c.domain());
    }
    return set_difference(normalize(all), normalize(infinite));
}

std::vector<Rat> critical_params(const Family& f) {
    std::set<Rat> crit;
    std::set<Fn> fns;
    for (const auto& c : f.cells) {
        if (c.domain().lo().is_finite()) crit.insert(c.domain().lo().value());
        if (c.domain().hi().is_finite()) crit.insert(c.domain().hi().value());
        if (c.lower().is_finite()) fns.emplace(c.lower().slope(), c.lower().intercept());
        if (c.upper().is_finite()) fns.emplace(c.upper().slope(), c.upper().intercept());
    }
    const std::vector<Fn> list(fns.begin(), fns.end());
    for (std::size_t i = 0; i < list.size(); ++i)
        for (std::size_t j = i + 1; j < list.size(); ++j)
            if (list[i].first != list[j].first)
                crit.insert((list[j].second - list[i].second) / (list[i].first - list[j].first));
    return {crit.begin(), crit.end()};
}

Family endpoint_family(const Family& f, Side side) {
    check_no_infinite(f, "endpoint_family");
    const auto ps = pieces(critical_params(f));
    std::vector<std::set<Fn>> used(ps.size());
    std::map<Fn, std::vector<Interval>> domains;

    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (ps[i].iv.is_point()) continue;
        const Rat& t = ps[i].sample;
        const auto fns = active_functions(f, t);
        for (const auto& e : endpoints(fiber(f, t), side)) {
            const Fn fn = function_for(fns, t, e);
            used[i].insert(fn);
            domains[fn].push_back(ps[i].iv);
        }
    }
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (!ps[i].iv.is_point()) continue;
        const Rat& c = ps[i].sample;
        for (const auto& e : endpoints(fiber(f, c), side)) {
            std::optional<Fn> pick;
            for (const auto* nb : {&used[i - 1], &used[i + 1]}) {
                for (const auto& fn : *nb)
                    if (eval(fn, c) == e) {
                        pick = fn;
                        break;
                    }
                if (pick) break;
            }
            domains[pick.value_or(Fn{0, e})].push_back(ps[i].iv);
        }
    }

    Family out;
    for (const auto& [fn, parts] : domains)
        for (const auto& comp : components(normalize(parts)))
            out.cells.push_back(FiberCell::graph(comp, AffineBoundary::affine(fn.first, fn.second)));
    return out;
}

LengthWitness uniform_length_bound(const Family& f) {
    const IntervalUnion bp = bounded_params(f);
    std::optional<LengthWitness> best;
    auto offer = [&](LengthWitness w) {
        if (!best || best->bound < w.bound) best = std::move(w);
    };

    for (const auto& p : pieces(critical_params(f))) {
        const Rat& t = p.sample;
        if (!bp.contains(t)) continue;
        const auto fns = active_functions(f, t);
        for (const auto& comp : components(fiber(f, t))) {
            const Fn lo = function_for(fns, t, comp.lo().value());
            const Fn hi = function_for(fns, t, comp.hi().value());
            const Fn len{hi.first - lo.first, hi.second - lo.second};
            if (p.iv.is_point()) {
                offer({Extended(eval(len, t)), p.iv, len.first, len.second, Extended(t)});
                continue;
            }
            const Extended at_lo = limit(len, p.iv.lo());
            const Extended at_hi = limit(len, p.iv.hi());
            if (at_hi > at_lo || (at_hi == at_lo && !p.iv.lo().is_finite() && p.iv.hi().is_finite()))
                offer({at_hi, p.iv, len.first, len.second, p.iv.hi()});
            else
                offer({at_lo, p.iv, len.first, len.second, p.iv.lo()});
        }
    }
    if (!best) return {Extended(Rat(0)), Interval::line(), 0, 0, Extended(Rat(0))};
    return *best;
}

std::vector<std::pair<Rat, Rat>> match_endpoints(const Family& f, const Rat& t, std::optional<Rat> k) {
    const IntervalUnion x = fiber(f, t);
    if (!x.is_bounded()) fail(ErrorTag::PreconditionViolation, "match_endpoints: fiber at t=" + format_rat(t) + " is unbounded");
    const Extended bound = uniform_length_bound(f).bound;
    if (!bound.is_finite()) fail(ErrorTag::PreconditionViolation, "match_endpoints: component lengths are unbounded");
    if (k && Extended(*k) < bound)
        fail(ErrorTag::PreconditionViolation, "match_endpoints: K=" + format_rat(*k) + " is below the length bound");
    const Rat K = k.value_or(bound.value());

    const auto left = endpoints(x, Side::Left);
    const auto right = endpoints(x, Side::Right);
    std::vector<std::pair<Rat, Rat>> out;
    for (const auto& a : left) {
        const bool point = std::any_of(x.parts().begin(), x.parts().end(),
                                       [&](const Interval& iv) { return iv.is_point() && iv.lo() == Extended(a); });
        if (point) {
            out.emplace_back(a, a);
            continue;
        }
        std::optional<Rat> b;
        for (const auto& r : right)
            if (a < r && r <= a + K) {
                b = r;
                break;
            }
        if (!b) fail(ErrorTag::InternalCheckFailed, "no right endpoint within K of " + format_rat(a));
        out.emplace_back(a, *b);
    }

    std::vector<std::pair<Rat, Rat>> truth;
    for (const auto& iv : x.parts()) truth.emplace_back(iv.lo().value(), iv.hi().value());
    if (out != truth) fail(ErrorTag::InternalCheckFailed, "endpoint matching disagrees with the components at t=" + format_rat(t));
    return out;
}

}  // namespace semilin
