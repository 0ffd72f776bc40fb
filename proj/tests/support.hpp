#pragma once

// Seeded random generators and brute-force membership oracles shared by the
// test binaries.

#include "semilin/interval.hpp"
#include "semilin/planar.hpp"

#include <random>
#include <set>
#include <vector>

namespace semilin::testing {

using Rng = std::mt19937_64;

inline Rat rand_rat(Rng& rng, int lo = -8, int hi = 8, int max_den = 3) {
    std::uniform_int_distribution<int> num(lo * max_den, hi * max_den);
    std::uniform_int_distribution<int> den(1, max_den);
    return Rat(num(rng)) / den(rng);
}

inline bool coin(Rng& rng, double p = 0.5) { return std::bernoulli_distribution(p)(rng); }

inline int rand_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline Interval rand_bounded_interval(Rng& rng, bool allow_point = true) {
    Rat a = rand_rat(rng);
    if (allow_point && coin(rng, 0.15)) return Interval::point(a);
    Rat len = Rat(rand_int(rng, 1, 12)) / rand_int(rng, 1, 3);
    return Interval(a, a + len, coin(rng), coin(rng));
}

/// Mix of bounded pieces, points and rays on either side.
inline Interval rand_interval(Rng& rng, double ray_prob = 0.2) {
    if (coin(rng, ray_prob)) {
        Rat c = rand_rat(rng);
        if (coin(rng)) return Interval(Extended::neg_inf(), c, false, coin(rng));
        return Interval(c, Extended::pos_inf(), coin(rng), false);
    }
    return rand_bounded_interval(rng);
}

inline IntervalUnion rand_union(Rng& rng, int max_parts = 4, double ray_prob = 0.2) {
    std::vector<Interval> raw;
    const int k = rand_int(rng, 0, max_parts);
    for (int i = 0; i < k; ++i) raw.push_back(rand_interval(rng, ray_prob));
    return normalize(raw);
}

inline IntervalUnion rand_bounded_union(Rng& rng, int min_parts = 1, int max_parts = 5) {
    std::vector<Interval> raw;
    const int k = rand_int(rng, min_parts, max_parts);
    for (int i = 0; i < k; ++i) raw.push_back(rand_bounded_interval(rng));
    return normalize(raw);
}

/// Breakpoints, midpoints and far-away points: enough to pin down membership
/// of any union whose endpoints are among the given sets' endpoints.
inline std::vector<Rat> sample_points(std::initializer_list<const IntervalUnion*> sets) {
    std::set<Rat> pts;
    for (const auto* s : sets)
        for (const auto& iv : s->parts()) {
            if (iv.lo().is_finite()) pts.insert(iv.lo().value());
            if (iv.hi().is_finite()) pts.insert(iv.hi().value());
        }
    std::vector<Rat> base(pts.begin(), pts.end());
    std::vector<Rat> out = base;
    if (base.empty()) {
        out = {Rat(-1000), Rat(0), Rat(1000)};
        return out;
    }
    out.push_back(base.front() - 1000);
    out.push_back(base.back() + 1000);
    for (std::size_t i = 0; i + 1 < base.size(); ++i) out.push_back((base[i] + base[i + 1]) / 2);
    return out;
}

inline Rat rand_slope(Rng& rng) {
    static const int nums[] = {-2, -1, -1, 0, 0, 1, 1, 2, 1, -1};
    static const int dens[] = {1, 1, 2, 1, 1, 1, 2, 1, 3, 3};
    const int i = rand_int(rng, 0, 9);
    return Rat(nums[i]) / dens[i];
}

inline Cell rand_cell(Rng& rng, double ray_prob = 0.15) {
    const int kind = rand_int(rng, 0, 5);
    if (kind == 0) return Cell::point(rand_rat(rng, -4, 4, 2), rand_rat(rng, -4, 4, 2));
    Interval span = Interval::point(0);
    do span = rand_interval(rng, ray_prob);
    while (span.is_point());
    if (kind == 1) return Cell::vseg(rand_rat(rng, -4, 4, 2), span);
    return Cell::seg(rand_slope(rng), rand_rat(rng, -4, 4, 2), span);
}

inline PlanarComplex rand_complex(Rng& rng, int max_cells = 4, double ray_prob = 0.15) {
    std::vector<Cell> raw;
    const int k = rand_int(rng, 0, max_cells);
    for (int i = 0; i < k; ++i) raw.push_back(rand_cell(rng, ray_prob));
    return normalize(raw);
}

inline PlanarComplex rand_bounded_complex(Rng& rng, int max_cells = 4) { return rand_complex(rng, max_cells, 0.0); }

/// Sample points of the plane relevant to the given complexes: special points
/// of every cell, pairwise carrier meets, and points along each carrier.
inline std::vector<Point2> plane_samples(std::initializer_list<const PlanarComplex*> sets) {
    std::vector<Carrier> carriers;
    std::set<Point2> pts;
    for (const auto* s : sets)
        for (const auto& c : s->cells()) {
            if (c.is_point()) {
                pts.insert(c.location());
                continue;
            }
            carriers.push_back(c.carrier());
        }
    for (std::size_t i = 0; i < carriers.size(); ++i)
        for (std::size_t j = i + 1; j < carriers.size(); ++j)
            if (auto m = carriers[i].meet(carriers[j])) pts.insert(*m);
    for (const auto& l : carriers) {
        std::vector<Rat> params;
        for (const auto* s : sets)
            for (const auto& c : s->cells()) {
                if (c.is_point()) {
                    if (l.contains(c.location())) params.push_back(l.param_of(c.location()));
                    continue;
                }
                if (c.carrier() == l) {
                    if (c.span().lo().is_finite()) params.push_back(c.span().lo().value());
                    if (c.span().hi().is_finite()) params.push_back(c.span().hi().value());
                } else if (auto m = l.meet(c.carrier())) {
                    params.push_back(l.param_of(*m));
                }
            }
        for (const auto& p : pts)
            if (l.contains(p)) params.push_back(l.param_of(p));
        std::sort(params.begin(), params.end());
        params.erase(std::unique(params.begin(), params.end()), params.end());
        std::vector<Rat> ts = params;
        if (params.empty()) ts.push_back(0);
        else {
            ts.push_back(params.front() - 500);
            ts.push_back(params.back() + 500);
            for (std::size_t i = 0; i + 1 < params.size(); ++i) ts.push_back((params[i] + params[i + 1]) / 2);
        }
        for (const auto& t : ts) pts.insert(l.at(t));
    }
    return {pts.begin(), pts.end()};
}

}  // namespace semilin::testing
