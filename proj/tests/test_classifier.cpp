#include "semilin/classifier.hpp"
#include "semilin/error.hpp"
#include "semilin/synthesis.hpp"
#include "classifier_support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace semilin;
using namespace semilin::testing;

namespace {

Generator moved(const Generator& g, Rng& rng) {
    Rat q = rand_rat(rng);
    if (q == 0) q = -2;
    const Rat a = rand_rat(rng), b = rand_rat(rng);
    if (const auto* y = std::get_if<IntervalUnion>(&g.value)) return {g.name, affine_op(*y, q, a)};
    return {g.name, translate(scale(std::get<PlanarComplex>(g.value), q), {a, b})};
}

SetValue rand_generator(Rng& rng) {
    switch (rand_int(rng, 0, 3)) {
        case 0: return rand_union(rng, 4, 0.25);
        case 1: return rand_bounded_union(rng, 0, 3);
        case 2: return rand_complex(rng, 3, 0.3);
        default: return rand_bounded_complex(rng, 3);
    }
}

}  // namespace

TEST(AffineComboTest, Examples) {
    const auto a = is_affine_combo(iu({Interval::point(1), Interval::point(2)}));
    ASSERT_TRUE(a);
    EXPECT_EQ(std::get<AffineCombo1D>(*a), (AffineCombo1D{{1, 2}, false}));
    EXPECT_FALSE(is_affine_combo(iu({Interval::open(0, 1)})));
    const auto line = full_line(Carrier::graph(2, 0));
    const SetValue x = bool_op(BoolKind::Union, bool_op(BoolKind::Difference, line, make_complex({Cell::point(1, 2)})),
                               make_complex({Cell::point(9, 9)}));
    const auto c = is_affine_combo(x);
    ASSERT_TRUE(c);
    const auto& combo = std::get<AffineCombo2D>(*c);
    ASSERT_EQ(combo.lines.size(), 1u);
    EXPECT_EQ(combo.lines[0].removed, std::vector<Rat>{1});
    EXPECT_EQ(combo.points, (std::vector<Point2>{Point2{9, 9}}));
    EXPECT_EQ(evaluate(*c), x);
    EXPECT_FALSE(is_affine_combo(SetValue(vset())));
    EXPECT_FALSE(is_affine_combo(SetValue(unit_square())));
}

TEST(AffineComboTest, BooleanCombinationsOfLinesAndPoints) {
    Rng rng(51);
    const BoolKind kinds[] = {BoolKind::Union, BoolKind::Intersect, BoolKind::Difference, BoolKind::SymmDiff};
    for (int i = 0; i < 300; ++i) {
        std::vector<PlanarComplex> atoms;
        for (int k = rand_int(rng, 1, 3); k > 0; --k) {
            const Carrier l = coin(rng, 0.2) ? Carrier::vertical(rand_rat(rng, -3, 3, 2))
                                             : Carrier::graph(rand_slope(rng), rand_rat(rng, -3, 3, 2));
            atoms.push_back(full_line(l));
        }
        for (int k = rand_int(rng, 0, 4); k > 0; --k) {
            if (coin(rng) && !atoms.empty() && !atoms[0].cells().empty()) {
                const auto& l = atoms[0].cells()[0].carrier();
                const Point2 p = l.at(rand_rat(rng, -3, 3, 2));
                atoms.push_back(make_complex({Cell::point(p.x, p.y)}));
            } else {
                atoms.push_back(make_complex({Cell::point(rand_rat(rng, -3, 3, 2), rand_rat(rng, -3, 3, 2))}));
            }
        }
        std::shuffle(atoms.begin(), atoms.end(), rng);
        PlanarComplex x = atoms[0];
        for (std::size_t k = 1; k < atoms.size(); ++k) x = bool_op(kinds[rand_int(rng, 0, 3)], x, atoms[k]);
        const auto c = is_affine_combo(x);
        ASSERT_TRUE(c) << to_string(x);
        ASSERT_EQ(evaluate(*c), SetValue(x));
    }
}

TEST(AffineComboTest, RejectsSetsWithSegmentsOrRays) {
    Rng rng(52);
    for (int i = 0; i < 200; ++i) {
        const auto x = rand_complex(rng, 3, 0.3);
        bool partial = false;
        for (const auto& l : x.carriers())
            for (const auto& iv : components(set_complement(section(x, l)))) partial |= !iv.is_point();
        ASSERT_EQ(is_affine_combo(x).has_value(), !partial) << to_string(x);
    }
}

TEST(SbCertificateTest, Examples) {
    const auto a = sb_certificate(iu({Interval::open(0, 1)}));
    ASSERT_TRUE(a);
    EXPECT_EQ(a->a, SetValue(IntervalUnion::empty()));
    EXPECT_FALSE(sb_certificate(iu({Interval::open(ninf(), Rat(0)), Interval::open(1, 2)})));
    EXPECT_FALSE(sb_certificate(SetValue(vset())));
    const auto line = full_line(Carrier::graph(2, 0));
    const auto c = sb_certificate(SetValue(bool_op(BoolKind::Union, line, unit_square())));
    ASSERT_TRUE(c);
    EXPECT_EQ(c->a, SetValue(line));
    EXPECT_EQ(sb_certificate(set_complement(iu({Interval::open(0, 1)})))->a, SetValue(IntervalUnion::full()));
}

TEST(ClassifyTest, Corpus) {
    for (const auto& c : classifier_corpus()) {
        const Verdict v = classify(c.generators);
        EXPECT_EQ(v.level, c.expected) << c.label;
        EXPECT_NO_THROW(verify(v, c.generators)) << c.label;
    }
}

TEST(ClassifyTest, SemiCertificates) {
    const auto ray = classify({{"X", iu({Interval::open(0, pinf())})}});
    ASSERT_TRUE(ray.trace);
    EXPECT_TRUE(ray.trace->steps.empty());
    EXPECT_EQ(*ray.ray, iu({Interval::open(0, pinf())}));

    const auto v = classify({{"V", vset()}});
    ASSERT_TRUE(v.trace);
    ASSERT_EQ(v.trace->steps.size(), 1u);
    EXPECT_EQ(std::get<step::Section>(v.trace->steps[0].op), (step::Section{Slope(-1), 0}));
    EXPECT_EQ(*v.ray, iu({Interval(ninf(), Rat(0), false, true)}));

    const auto lb = classify({{"S", unit_square()}, {"Y", iu({Interval::open(ninf(), Rat(0)), Interval::open(1, 2)})}});
    EXPECT_EQ(lb.level, Level::Semi);
    EXPECT_EQ(*lb.witness, 1u);
    EXPECT_EQ(lb.trace->generators, (std::vector<std::string>{"S", "Y"}));
    EXPECT_EQ(*lb.ray, iu({Interval::open(ninf(), Rat(0))}));
}

TEST(ClassifyTest, InvarianceUnderAffineMaps) {
    Rng rng(53);
    for (int i = 0; i < 150; ++i) {
        std::vector<Generator> gens;
        for (int k = rand_int(rng, 1, 3); k > 0; --k) gens.push_back({"G" + std::to_string(k), rand_generator(rng)});
        const Level base = classify(gens).level;
        std::vector<Generator> moved_gens;
        for (const auto& g : gens) moved_gens.push_back(moved(g, rng));
        ASSERT_EQ(classify(moved_gens).level, base);
    }
}

TEST(ClassifyTest, MonotoneAndBoundedNeverSemi) {
    Rng rng(54);
    for (int i = 0; i < 150; ++i) {
        std::vector<Generator> gens;
        for (int k = rand_int(rng, 1, 3); k > 0; --k) gens.push_back({"G" + std::to_string(k), rand_generator(rng)});
        const Level base = classify(gens).level;
        auto more = gens;
        more.push_back({"H", rand_generator(rng)});
        ASSERT_GE(classify(more).level, base);

        std::vector<Generator> bounded{{"B1", rand_bounded_union(rng, 0, 4)}, {"B2", rand_bounded_complex(rng)}};
        const Verdict bv = classify(bounded);
        ASSERT_NE(bv.level, Level::Semi);
        for (const auto& e : bv.evidence)
            if (e.sb) ASSERT_TRUE(std::holds_alternative<IntervalUnion>(e.sb->a) ? std::get<IntervalUnion>(e.sb->a).is_empty()
                                                                                   : std::get<PlanarComplex>(e.sb->a).is_empty());
    }
}

TEST(ClassifyTest, OneDimTrichotomyIsExclusive) {
    Rng rng(55);
    for (int i = 0; i < 500; ++i) {
        const auto y = rand_union(rng, 5, 0.3);
        const bool lin = is_affine_combo(y).has_value();
        const bool sb_only = !lin && sb_certificate(y).has_value();
        bool ray_ok = true;
        try {
            derive_ray(y);
        } catch (const Error& e) {
            ASSERT_EQ(e.tag(), ErrorTag::PreconditionViolation);
            ray_ok = false;
        }
        ASSERT_EQ(int(lin) + int(sb_only) + int(ray_ok), 1) << to_string(y);
    }
}

TEST(ClassifyTest, NoRayFromBoundedGeneratorsWithinDepth) {
    // Small exhaustive search over traces built from bounded/co-bounded
    // generators: nothing reachable is neither bounded nor co-bounded.
    Rng rng(56);
    for (int round = 0; round < 20; ++round) {
        std::vector<IntervalUnion> pool{rand_bounded_union(rng, 1, 3), set_complement(rand_bounded_union(rng, 1, 2))};
        std::set<std::string> seen;
        const Rat shifts[] = {-3, -1, Rat(1) / 2, 2};
        for (int depth = 0; depth < 2; ++depth) {
            const auto current = pool;
            for (const auto& x : current) {
                std::vector<IntervalUnion> next{set_complement(x), affine_op(x, -1, 0), affine_op(x, 2, 0)};
                for (const auto& s : shifts) next.push_back(translate(x, s));
                for (const auto& y : current) {
                    next.push_back(set_intersect(x, y));
                    next.push_back(set_union(x, y));
                    next.push_back(set_difference(x, y));
                }
                for (auto& n : next) {
                    ASSERT_NE(classify_one_dim(n).kind, OneDimKind::BothUnbounded) << to_string(n);
                    if (seen.insert(to_string(n)).second && pool.size() < 40) pool.push_back(std::move(n));
                }
            }
        }
    }
}
