#include "semilin/error.hpp"
#include "semilin/synthesis.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace semilin;
using semilin::testing::Rng;

namespace {

const Extended NINF = Extended::neg_inf();
const Extended PINF = Extended::pos_inf();

IntervalUnion U(std::initializer_list<Interval> parts) { return normalize(std::vector<Interval>(parts)); }
Interval O(Extended a, Extended b) { return Interval::open(std::move(a), std::move(b)); }

std::vector<std::string> names(const Trace& t) {
    std::vector<std::string> out;
    for (const auto& s : t.steps) out.push_back(step_name(s.op));
    return out;
}

IntervalUnion rand_both_unbounded(Rng& rng) {
    for (;;) {
        std::vector<Interval> raw;
        const Rat c = semilin::testing::rand_rat(rng);
        if (semilin::testing::coin(rng))
            raw.push_back(Interval(NINF, c, false, semilin::testing::coin(rng)));
        else
            raw.push_back(Interval(c, PINF, semilin::testing::coin(rng), false));
        for (int k = semilin::testing::rand_int(rng, 0, 5); k > 0; --k)
            raw.push_back(semilin::testing::rand_bounded_interval(rng));
        const auto y = normalize(raw);
        if (classify_one_dim(y).kind == OneDimKind::BothUnbounded) return y;
    }
}

IntervalUnion rand_bounded_or_cobounded_infinite(Rng& rng) {
    for (;;) {
        auto y = semilin::testing::rand_bounded_union(rng, 1, 6);
        if (semilin::testing::coin(rng, 0.3)) y = set_complement(y);
        if (classify_one_dim(y).kind == OneDimKind::BoundedOrCoboundedInfinite) return y;
    }
}

bool is_single_ray(const IntervalUnion& r) {
    if (r.size() != 1) return false;
    const auto& iv = r.parts()[0];
    return iv.lo().is_finite() != iv.hi().is_finite();
}

}  // namespace

TEST(ClassifyOneDimTest, Examples) {
    EXPECT_EQ(classify_one_dim(U({Interval::point(1), Interval::point(2)})),
              (OneDimClass{OneDimKind::FiniteOrCofinite, BoundSide::Bounded}));
    EXPECT_EQ(classify_one_dim(U({O(0, 1), O(2, 4)})),
              (OneDimClass{OneDimKind::BoundedOrCoboundedInfinite, BoundSide::Bounded}));
    EXPECT_EQ(classify_one_dim(U({O(NINF, 0), O(1, 2)})), (OneDimClass{OneDimKind::BothUnbounded, BoundSide::None}));
    EXPECT_EQ(classify_one_dim(IntervalUnion::empty()).kind, OneDimKind::FiniteOrCofinite);
    EXPECT_EQ(classify_one_dim(IntervalUnion::full()),
              (OneDimClass{OneDimKind::FiniteOrCofinite, BoundSide::Cobounded}));
    EXPECT_EQ(classify_one_dim(set_complement(U({O(0, 1)}))),
              (OneDimClass{OneDimKind::BoundedOrCoboundedInfinite, BoundSide::Cobounded}));
}

TEST(ClassifyOneDimTest, TrichotomyAgreesWithBoundedness) {
    Rng rng(31);
    for (int i = 0; i < 1000; ++i) {
        const auto y = semilin::testing::rand_union(rng, 5, 0.3);
        const auto c = classify_one_dim(y);
        const auto b = boundedness(y).cls;
        bool finite = true, cofinite = true;
        for (const auto& iv : y.parts()) finite &= iv.is_point();
        for (const auto& iv : components(set_complement(y))) cofinite &= iv.is_point();
        ASSERT_EQ(c.kind == OneDimKind::FiniteOrCofinite, finite || cofinite);
        ASSERT_EQ(c.kind == OneDimKind::BothUnbounded, b == BoundednessClass::BothUnbounded);
        if (c.kind == OneDimKind::BothUnbounded) {
            int rays = 0;
            for (const auto& iv : y.parts()) rays += iv.is_bounded() ? 0 : 1;
            ASSERT_EQ(rays, 1);
        }
    }
}

TEST(DeriveRayTest, WorkedExample) {
    const auto y = U({O(NINF, 0), O(1, 2)});
    const auto r = derive_ray(y);
    EXPECT_EQ(r.ray, IntervalUnion::of(O(NINF, 0)));
    EXPECT_EQ(names(r.trace), (std::vector<std::string>{"scale", "intersect", "translate", "intersect", "diff"}));
    const auto& shift = std::get<step::Translate>(r.trace.steps[2].op);
    EXPECT_EQ(shift.dx, Rat(3));
    TraceBuilder b({"Y"}, {y});
    const auto n = b.apply(b.apply(0, step::Scale{-1}), step::Intersect{0});
    EXPECT_EQ(b.line_value(n), U({O(-2, -1), O(1, 2)}));
    EXPECT_EQ(b.line_value(b.apply(b.apply(n, step::Translate{3, std::nullopt}), step::Intersect{n})), U({O(1, 2)}));
}

TEST(DeriveRayTest, Examples) {
    const auto ray = U({O(0, PINF)});
    const auto r = derive_ray(ray);
    EXPECT_EQ(r.ray, ray);
    EXPECT_TRUE(r.trace.steps.empty());
    EXPECT_EQ(r.trace.output, 0u);

    const auto two = derive_ray(U({O(NINF, 0), O(1, 2), O(3, 4)}));
    EXPECT_EQ(two.ray, IntervalUnion::of(O(NINF, 0)));
    EXPECT_EQ(two.trace.steps.size(), 10u);
    EXPECT_EQ(std::get<step::Translate>(two.trace.steps[2].op).dx, Rat(7));
    EXPECT_EQ(std::get<step::Translate>(two.trace.steps[7].op).dx, Rat(3));

    const auto right = derive_ray(U({Interval(Rat(5), PINF, true, false), Interval::point(-1), O(2, 3)}));
    EXPECT_EQ(right.ray, IntervalUnion::of(Interval(Rat(5), PINF, true, false)));
}

TEST(DeriveRayTest, RandomSoundness) {
    Rng rng(32);
    for (int i = 0; i < 500; ++i) {
        const auto y = rand_both_unbounded(rng);
        const auto r = derive_ray(y);
        ASSERT_TRUE(is_single_ray(r.ray)) << to_string(y);
        ASSERT_EQ(replay(r.trace, std::vector<SetValue>{y}), SetValue(r.ray));
        ASSERT_EQ(set_difference(r.ray, y), IntervalUnion::empty());
    }
}

TEST(DeriveRayTest, RefusesBoundedAndCobounded) {
    Rng rng(33);
    for (int i = 0; i < 500; ++i) {
        auto y = semilin::testing::rand_bounded_union(rng, 0, 5);
        if (semilin::testing::coin(rng)) y = set_complement(y);
        try {
            derive_ray(y);
            FAIL() << to_string(y);
        } catch (const Error& e) {
            ASSERT_EQ(e.tag(), ErrorTag::PreconditionViolation);
        }
    }
}

TEST(DeriveIntervalTest, Examples) {
    const auto a = derive_interval(U({O(0, 1), O(2, 4)}));
    EXPECT_EQ(a.interval, O(3, 4));
    EXPECT_EQ(a.iterations, 1u);
    EXPECT_EQ(std::get<step::Translate>(a.trace.steps[0].op).dx, Rat(3));

    const auto b = derive_interval(U({O(0, 1)}));
    EXPECT_EQ(b.interval, O(0, 1));
    EXPECT_TRUE(b.trace.steps.empty());

    const auto c = derive_interval(U({O(0, 5), O(6, 7)}));
    EXPECT_EQ(c.interval, O(6, 7));
    EXPECT_EQ(c.iterations, 3u);
    EXPECT_FALSE(c.used_fallback);
    TraceBuilder tb({"Y"}, {U({O(0, 5), O(6, 7)})});
    const auto once = tb.apply(tb.apply(0, step::Translate{2, std::nullopt}), step::Intersect{0});
    EXPECT_EQ(tb.line_value(once), U({O(2, 5), O(6, 7)}));

    const auto cob = derive_interval(set_complement(U({O(0, 1), O(2, 4)})));
    EXPECT_EQ(names(cob.trace).front(), "complement");
    EXPECT_EQ(cob.interval, O(3, 4));

    const auto pts = derive_interval(U({Interval::point(-3), O(0, 1), Interval::point(10)}));
    EXPECT_EQ(pts.interval, O(0, 1));
}

TEST(DeriveIntervalTest, Preconditions) {
    for (const auto& y : {U({Interval::point(1)}), IntervalUnion::empty(), IntervalUnion::full(), U({O(0, PINF)})}) {
        try {
            derive_interval(y);
            FAIL() << to_string(y);
        } catch (const Error& e) {
            EXPECT_EQ(e.tag(), ErrorTag::PreconditionViolation);
        }
    }
}

TEST(DeriveIntervalTest, RandomSoundness) {
    Rng rng(34);
    for (int i = 0; i < 500; ++i) {
        const auto y = rand_bounded_or_cobounded_infinite(rng);
        const auto r = derive_interval(y);
        ASSERT_TRUE(r.interval.is_bounded());
        ASSERT_FALSE(r.interval.is_point());
        ASSERT_EQ(replay(r.trace, std::vector<SetValue>{y}), SetValue(IntervalUnion::of(r.interval)));
    }
}

TEST(DeriveIntervalTest, CapFormula) {
    EXPECT_EQ(iteration_cap(U({O(0, 5), O(6, 7)})), 4u * 2u * 7u);
    EXPECT_EQ(iteration_cap(U({O(0, 1), O(1, 2)})), 8u);
    EXPECT_EQ(iteration_cap(U({O(0, 1)})), 4u);
}

TEST(ReplayTest, Examples) {
    const auto y = U({O(NINF, 0), O(1, 2)});
    Trace empty{{"Y"}, {}, 0};
    EXPECT_EQ(replay(empty, std::vector<SetValue>{y}), SetValue(y));
    Trace t{{"Y"}, {{0, step::Scale{-1}}, {1, step::Intersect{0}}}, 2};
    EXPECT_EQ(replay(t, std::vector<SetValue>{y}), SetValue(U({O(-2, -1), O(1, 2)})));
    const auto r = derive_ray(y, "Y");
    EXPECT_EQ(replay(r.trace, std::map<std::string, SetValue>{{"Y", y}}), SetValue(r.ray));
}

TEST(ReplayTest, Errors) {
    const auto y = U({O(0, 1)});
    auto expect_tag = [&](const Trace& t, std::vector<SetValue> gens, ErrorTag tag) {
        try {
            replay(t, gens);
            FAIL();
        } catch (const Error& e) {
            EXPECT_EQ(e.tag(), tag);
        }
    };
    expect_tag(Trace{{"Y"}, {{0, step::Intersect{1}}}, 1}, {y}, ErrorTag::DanglingRef);
    expect_tag(Trace{{"Y"}, {{3, step::Complement{}}}, 1}, {y}, ErrorTag::DanglingRef);
    expect_tag(Trace{{"Y"}, {}, 4}, {y}, ErrorTag::DanglingRef);
    expect_tag(Trace{{"Y"}, {{0, step::Swap{}}}, 1}, {y}, ErrorTag::DimensionMismatch);
    expect_tag(Trace{{"Y"}, {{0, step::Translate{1, Rat(2)}}}, 1}, {y}, ErrorTag::DimensionMismatch);
    expect_tag(Trace{{"Y", "P"}, {{0, step::Union{1}}}, 2}, {y, PlanarComplex()}, ErrorTag::DimensionMismatch);
    expect_tag(Trace{{"Y"}, {{0, step::Scale{0}}}, 1}, {y}, ErrorTag::InvalidArgument);
    try {
        replay(Trace{{"Z"}, {}, 0}, std::map<std::string, SetValue>{{"Y", y}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.tag(), ErrorTag::DanglingRef);
    }
}

TEST(ReplayTest, PlanarSteps) {
    const auto v = make_complex({Cell::seg(1, 0, Interval(Rat(0), PINF, true, false)),
                                 Cell::seg(-1, 0, Interval(NINF, Rat(0), false, true))});
    Trace t{{"V"}, {{0, step::Section{Slope(1), 0}}}, 1};
    EXPECT_EQ(replay(t, std::vector<SetValue>{v}), SetValue(IntervalUnion::of(Interval(Rat(0), PINF, true, false))));
    Trace p{{"V"}, {{0, step::Swap{}}, {1, step::ProjectAxis{2}}}, 2};
    EXPECT_EQ(replay(p, std::vector<SetValue>{v}), SetValue(IntervalUnion::full()));
    Trace s{{"V"}, {{0, step::Translate{1, Rat(1)}}, {1, step::Scale{2}}}, 2};
    EXPECT_EQ(std::get<PlanarComplex>(replay(s, std::vector<SetValue>{v})), scale(translate(v, {1, 1}), 2));
}
