#include "semilin/error.hpp"
#include "semilin/family.hpp"
#include "family_support.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace semilin;
using semilin::testing::Rng;

namespace {

const Extended NINF = Extended::neg_inf();
const Extended PINF = Extended::pos_inf();

Interval O(Extended a, Extended b) { return Interval::open(std::move(a), std::move(b)); }
IntervalUnion U(std::initializer_list<Interval> parts) { return normalize(std::vector<Interval>(parts)); }
AffineBoundary A(Rat s, Rat i) { return AffineBoundary::affine(std::move(s), std::move(i)); }

Family triangle() { return {{FiberCell::band(O(0, 1), A(0, 0), A(1, 0))}}; }

Family line_minus_two_points() {
    return {{FiberCell::band(O(0, PINF), AffineBoundary::neg_inf(), A(-1, 0)),
             FiberCell::band(O(0, PINF), A(-1, 0), A(1, 0)),
             FiberCell::band(O(0, PINF), A(1, 0), AffineBoundary::pos_inf())}};
}

Family two_moving_intervals() {
    return {{FiberCell::band(O(0, PINF), A(-1, -1), A(-1, 0)), FiberCell::band(O(0, PINF), A(1, 0), A(1, 1))}};
}

Family widening() { return {{FiberCell::band(O(0, PINF), A(-1, 0), A(1, 0))}}; }

}  // namespace

TEST(FiberCellTest, Validation) {
    EXPECT_THROW(FiberCell::band(O(0, 1), A(1, 0), A(0, 0)), Error);
    EXPECT_THROW(FiberCell::band(O(0, PINF), A(0, 0), A(-1, 5)), Error);
    EXPECT_THROW(FiberCell::band(O(0, 1), AffineBoundary::pos_inf(), A(0, 0)), Error);
    EXPECT_THROW(FiberCell::band(O(0, 1), AffineBoundary::neg_inf(), A(0, 0), true, false), Error);
    EXPECT_THROW(FiberCell::graph(O(0, 1), AffineBoundary::pos_inf()), Error);
    EXPECT_NO_THROW(FiberCell::band(Interval::closed(0, 1), A(0, 0), A(1, 0)));
    try {
        FiberCell::band(O(0, 1), A(1, 0), A(0, 0));
    } catch (const Error& e) {
        EXPECT_EQ(e.tag(), ErrorTag::MalformedFamily);
    }
    const auto closed = FiberCell::band(Interval::closed(0, 1), A(0, 0), A(1, 0), true, true);
    EXPECT_EQ(closed.at(0), U({Interval::point(0)}));
    EXPECT_TRUE(FiberCell::band(Interval::closed(0, 1), A(0, 0), A(1, 0)).at(0).is_empty());
}

TEST(FiberTest, Examples) {
    EXPECT_EQ(fiber(triangle(), Rat(1) / 2), U({O(0, Rat(1) / 2)}));
    EXPECT_EQ(fiber(line_minus_two_points(), 3), U({O(NINF, -3), O(-3, 3), O(3, PINF)}));
    EXPECT_TRUE(fiber(Family{}, 5).is_empty());
    EXPECT_EQ(fiber(two_moving_intervals(), 5), U({O(-6, -5), O(5, 6)}));
}

TEST(BoundedParamsTest, Examples) {
    EXPECT_EQ(bounded_params(triangle()), U({O(0, 1)}));
    EXPECT_TRUE(bounded_params(line_minus_two_points()).is_empty());
    const Family g{{FiberCell::graph(Interval::closed(-2, 3), A(1, 1))}};
    EXPECT_EQ(bounded_params(g), U({Interval::closed(-2, 3)}));
}

TEST(EndpointFamilyTest, Examples) {
    const auto left = endpoint_family(triangle(), Side::Left);
    ASSERT_EQ(left.cells.size(), 1u);
    EXPECT_EQ(left.cells[0], FiberCell::graph(O(0, 1), A(0, 0)));

    const Family apart{{FiberCell::band(O(2, 3), A(1, 0), A(1, 1)), FiberCell::band(O(2, 3), A(0, 0), A(0, 1))}};
    const auto l2 = endpoint_family(apart, Side::Left);
    ASSERT_EQ(l2.cells.size(), 2u);
    EXPECT_NE(std::find(l2.cells.begin(), l2.cells.end(), FiberCell::graph(O(2, 3), A(1, 0))), l2.cells.end());
    EXPECT_NE(std::find(l2.cells.begin(), l2.cells.end(), FiberCell::graph(O(2, 3), A(0, 0))), l2.cells.end());

    const Rat h = Rat(1) / 2;
    const Family overlap{{FiberCell::band(O(-h, h), A(1, 0), A(1, 1)), FiberCell::band(O(-h, h), A(0, 0), A(0, 1))}};
    const auto l3 = endpoint_family(overlap, Side::Left);
    ASSERT_EQ(l3.cells.size(), 2u);
    for (const Rat t : {Rat(-1) / 4, Rat(0), Rat(1) / 4})
        EXPECT_EQ(fiber(l3, t), U({Interval::point(std::min(t, Rat(0)))}));
    for (const auto& c : l3.cells) {
        const bool neg_side = c.domain().lo() == Extended(-h);
        EXPECT_EQ(c.value(), neg_side ? A(1, 0) : A(0, 0));
    }

    try {
        endpoint_family(line_minus_two_points(), Side::Left);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.tag(), ErrorTag::UnboundedFiber);
    }
}

TEST(UniformBoundTest, Examples) {
    const auto w = uniform_length_bound(triangle());
    EXPECT_EQ(w.bound, Extended(1));
    EXPECT_EQ(w.at, Extended(1));
    EXPECT_FALSE(w.piece.contains(1));

    const auto r = uniform_length_bound(two_moving_intervals());
    EXPECT_EQ(r.bound, Extended(1));
    EXPECT_EQ(metrics(fiber(two_moving_intervals(), 100)).diameter, Extended(202));

    EXPECT_EQ(uniform_length_bound(widening()).bound, PINF);
    EXPECT_EQ(uniform_length_bound(widening()).at, PINF);
    EXPECT_EQ(uniform_length_bound(Family{}).bound, Extended(0));
}

TEST(MatchEndpointsTest, Examples) {
    const Family two{{FiberCell::band(Interval::line(), A(0, 0), A(0, 1)), FiberCell::band(Interval::line(), A(0, 2), A(0, 4))}};
    EXPECT_EQ(match_endpoints(two, 0), (std::vector<std::pair<Rat, Rat>>{{0, 1}, {2, 4}}));
    EXPECT_EQ(match_endpoints(triangle(), Rat(1) / 3), (std::vector<std::pair<Rat, Rat>>{{0, Rat(1) / 3}}));
    const Family with_point{{FiberCell::band(Interval::line(), A(0, 0), A(0, 1)), FiberCell::graph(Interval::line(), A(0, 5))}};
    EXPECT_EQ(match_endpoints(with_point, 7), (std::vector<std::pair<Rat, Rat>>{{0, 1}, {5, 5}}));
    const Family touching{{FiberCell::band(Interval::line(), A(0, 0), A(0, 1)), FiberCell::band(Interval::line(), A(0, 1), A(0, 2))}};
    EXPECT_EQ(match_endpoints(touching, 0), (std::vector<std::pair<Rat, Rat>>{{0, 1}, {1, 2}}));
    EXPECT_EQ(match_endpoints(two, 0, Rat(10)), match_endpoints(two, 0));

    auto expect_pre = [](auto&& fn) {
        try {
            fn();
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.tag(), ErrorTag::PreconditionViolation);
        }
    };
    expect_pre([&] { match_endpoints(widening(), 1); });
    expect_pre([&] { match_endpoints(line_minus_two_points(), 1); });
    expect_pre([&] { match_endpoints(two, 0, Rat(1)); });
}

TEST(FamilyProperties, SamplingConsistency) {
    Rng rng(41);
    for (int i = 0; i < 200; ++i) {
        Family f = semilin::testing::rand_bounded_width_family(rng);
        if (semilin::testing::coin(rng, 0.3))
            f.cells.push_back(FiberCell::band(O(semilin::testing::rand_rat(rng), PINF), AffineBoundary::neg_inf(), A(1, 0)));
        const auto bp = bounded_params(f);
        const bool all_bounded = std::none_of(f.cells.begin(), f.cells.end(), [](const FiberCell& c) { return c.has_infinite_boundary(); });
        std::optional<Family> left, right;
        if (all_bounded) {
            left = endpoint_family(f, Side::Left);
            right = endpoint_family(f, Side::Right);
        }
        const auto ub = uniform_length_bound(f);
        for (const auto& t : semilin::testing::param_samples(f, rng, 30)) {
            const auto x = fiber(f, t);
            const bool in_domain = std::any_of(f.cells.begin(), f.cells.end(), [&](const FiberCell& c) { return c.domain().contains(t); });
            ASSERT_EQ(bp.contains(t), in_domain && x.is_bounded());
            if (left) {
                ASSERT_EQ(fiber(*left, t), IntervalUnion::points(endpoints(x, Side::Left)));
                ASSERT_EQ(fiber(*right, t), IntervalUnion::points(endpoints(x, Side::Right)));
            }
            if (bp.contains(t)) ASSERT_LE(metrics(x).max_component_length, ub.bound);
        }
    }
}

TEST(FamilyProperties, BoundedWidthFragment) {
    Rng rng(42);
    for (int i = 0; i < 200; ++i) {
        const Family f = semilin::testing::rand_bounded_width_family(rng);
        const auto ub = uniform_length_bound(f);
        ASSERT_TRUE(ub.bound.is_finite());
        ASSERT_LE(ub.bound, semilin::testing::chaining_bound(f));
        const auto crit = critical_params(f);
        if (ub.at.is_finite()) {
            ASSERT_TRUE(std::binary_search(crit.begin(), crit.end(), ub.at.value()));
            ASSERT_EQ(Extended(ub.slope * ub.at.value() + ub.intercept), ub.bound);
        } else {
            ASSERT_EQ(ub.slope, 0);
            ASSERT_EQ(Extended(ub.intercept), ub.bound);
        }
        Extended seen(Rat(0));
        for (const auto& t : semilin::testing::param_samples(f, rng, 100)) {
            const auto x = fiber(f, t);
            seen = std::max(seen, metrics(x).max_component_length);
            ASSERT_LE(metrics(x).max_component_length, ub.bound);
            if (x.size() >= 2) {
                try {
                    const auto iso = isolate_interval(x);
                    ASSERT_LE(Extended(iso.single.hi().value() - iso.single.lo().value()), ub.bound);
                } catch (const Error& e) {
                    ASSERT_EQ(e.tag(), ErrorTag::NoIsolatingShift);
                }
            }
            const auto pairs = match_endpoints(f, t);
            ASSERT_EQ(pairs.size(), x.size());
        }
    }
}
