#include <algorithm>
#include <array>
#include <cmath>

#include <gtest/gtest.h>

#include "meanconvex/functions.hpp"
#include "meanconvex/popoviciu.hpp"
#include "oracles.hpp"

using namespace meanconvex;

namespace {

PointFunction on(PointFunction f, Interval d) { return with_domain(std::move(f), d); }

// a positive function usable under every argument mean on (0.5, 4)
PointFunction test_fn() { return on(fn_cosh(), Interval::open(0.5, 4.0)); }
const oracle::Fn test_ofn = [](double x) { return std::cosh(x); };

} // namespace

TEST(Sides, SquareAA) {
    Sides s = popoviciu_sides(TheoremId::AA, weight_identity(), fn_square(), 1, 1, 4);
    EXPECT_DOUBLE_EQ(s.lhs, 13.5);
    EXPECT_DOUBLE_EQ(s.rhs, 15.0);
    EXPECT_FALSE(s.log_domain);
}

TEST(Sides, IdentityAAAtDiagonal) {
    for (double c : {-2.0, 0.5, 3.0}) {
        Sides s = popoviciu_sides(TheoremId::AA, weight_identity(), fn_identity(), c, c, c);
        EXPECT_NEAR(s.lhs, 3 * c, 1e-14);
        EXPECT_NEAR(s.rhs, 3 * c, 1e-14);
    }
}

TEST(Sides, ExpGGInLogs) {
    Sides s = popoviciu_sides(TheoremId::GG, weight_identity(), fn_exp(), 1, 1, 8);
    EXPECT_TRUE(s.log_domain);
    EXPECT_NEAR(s.lhs, 1 + 4 * std::sqrt(2.0), 1e-13);
    EXPECT_NEAR(s.rhs, 8.0, 1e-13);
}

TEST(Sides, ReciprocalHAEquality) {
    Sides s = popoviciu_sides(TheoremId::HA, weight_identity(), fn_reciprocal(), 1, 2, 3);
    EXPECT_NEAR(s.lhs, s.rhs, 1e-14);
}

TEST(Sides, AllNineAgainstOracle) {
    PointFunction f = test_fn();
    Rng rng(99);
    for (WeightFunction h : {weight_identity(), weight_power(2.0), weight_reciprocal()}) {
        double h32 = h(1.5), h12 = h(0.5);
        for (int i = 0; i < 300; ++i) {
            double x = rng.uniform(0.6, 3.9), y = rng.uniform(0.6, 3.9), z = rng.uniform(0.6, 3.9);
            for (TheoremId id : all_theorems) {
                std::string tag = to_string(id);
                Sides s = popoviciu_sides(id, h, f, x, y, z);
                auto [l, r] = oracle::popoviciu(tag[0], tag[1], test_ofn, h32, h12, x, y, z);
                EXPECT_LT(oracle::rel(s.lhs, l), 1e-12) << tag;
                EXPECT_LT(oracle::rel(s.rhs, r), 1e-12) << tag;
            }
        }
    }
}

TEST(Sides, DegenerateTripleIsEquality) {
    PointFunction f = test_fn();
    for (TheoremId id : all_theorems)
        for (double c : {0.7, 1.3, 3.5}) {
            Sides s = popoviciu_sides(id, weight_identity(), f, c, c, c);
            EXPECT_LE(std::fabs(s.lhs - s.rhs), 1e-10 * std::max(1.0, std::fabs(s.lhs))) << to_string(id);
        }
}

TEST(Sides, PermutationSymmetry) {
    PointFunction f = test_fn();
    Rng rng(1);
    for (int i = 0; i < 1000; ++i) {
        std::array<double, 3> p{rng.uniform(0.6, 3.9), rng.uniform(0.6, 3.9), rng.uniform(0.6, 3.9)};
        for (TheoremId id : all_theorems) {
            Sides base = popoviciu_sides(id, weight_identity(), f, p[0], p[1], p[2]);
            std::array<double, 3> q = p;
            std::sort(q.begin(), q.end());
            do {
                Sides s = popoviciu_sides(id, weight_identity(), f, q[0], q[1], q[2]);
                EXPECT_LE(oracle::rel(s.lhs, base.lhs), 1e-12);
                EXPECT_LE(oracle::rel(s.rhs, base.rhs), 1e-12);
            } while (std::next_permutation(q.begin(), q.end()));
        }
    }
}

TEST(Sides, TwoPointReductionIsBitwise) {
    PointFunction f = test_fn();
    Rng rng(2);
    for (int i = 0; i < 1000; ++i) {
        double x = rng.uniform(0.6, 3.9), y = rng.uniform(0.6, 3.9);
        for (TheoremId id : all_theorems) {
            Sides a = two_point_reduction(id, weight_identity(), f, x, y);
            Sides b = popoviciu_sides(id, weight_identity(), f, x, y, y);
            EXPECT_EQ(a.lhs, b.lhs);
            EXPECT_EQ(a.rhs, b.rhs);
        }
    }
    Sides s = two_point_reduction(TheoremId::HH, weight_identity(), on(fn_identity(), Interval::positive()), 2, 3);
    EXPECT_NEAR(s.lhs, s.rhs, 1e-14);
}

TEST(Sides, DomainErrors) {
    EXPECT_THROW(popoviciu_sides(TheoremId::GA, weight_identity(), fn_cosh(), -1, 2, 3), domain_error);
    EXPECT_THROW(popoviciu_sides(TheoremId::AA, weight_identity(), on(fn_square(), Interval::open(0, 1)), 0.5, 2, 0.5),
                 domain_error);
    EXPECT_THROW(popoviciu_sides(TheoremId::AG, weight_identity(), fn_square(), 0, 1, 2), evaluation_error);
}

TEST(Relation, DirectionTable) {
    for (TheoremId id : all_theorems) {
        bool h_val = val_mean_of(id) == MeanKind::Harmonic;
        EXPECT_EQ(theorem_relation(id, Sense::convex), h_val ? Relation::ge : Relation::le) << to_string(id);
        EXPECT_EQ(theorem_relation(id, Sense::concave), h_val ? Relation::le : Relation::ge) << to_string(id);
    }
    EXPECT_EQ(parse_theorem("GH"), TheoremId::GH);
    EXPECT_THROW(parse_theorem("XX"), domain_error);
}

TEST(VerifyTheorem, SquareAA) {
    PopoviciuReport r = verify_theorem(TheoremId::AA, weight_identity(), on(fn_square(), Interval::open(0.0, 10.0)),
                                       Sense::convex);
    EXPECT_EQ(r.status(), Status::holds);
    EXPECT_GE(r.min_margin, -1e-12 * 300);
    EXPECT_TRUE(r.h_hypothesis_ok);
    PopoviciuReport c = verify_theorem(TheoremId::AA, weight_identity(), on(fn_square(), Interval::open(0.0, 10.0)),
                                       Sense::concave);
    EXPECT_EQ(c.status(), Status::refuted);
    ASSERT_FALSE(c.witnesses.empty());
    const Witness& w = c.witnesses.front();
    Sides s = popoviciu_sides(TheoremId::AA, weight_identity(), fn_square(), w.x, w.y, w.z);
    EXPECT_EQ(s.lhs, w.lhs);
    EXPECT_EQ(s.rhs, w.rhs);
}

TEST(VerifyTheorem, ReciprocalAHIsEquality) {
    PopoviciuReport r = verify_theorem(TheoremId::AH, weight_identity(), on(fn_reciprocal(), Interval::open(0.1, 10.0)),
                                       Sense::concave);
    EXPECT_EQ(r.status(), Status::holds);
    EXPECT_LE(r.max_abs_residual_at_equality, 1e-12);
    EXPECT_NEAR(r.min_margin, 0.0, 1e-12);
}

TEST(VerifyTheorem, HypothesisRecordedNotEnforced) {
    // t^0.5 is subadditive; the <= direction wants a superadditive h
    PopoviciuReport r = verify_theorem(TheoremId::AA, weight_power(0.5), fn_square(), Sense::convex);
    EXPECT_FALSE(r.h_hypothesis_ok);
    ASSERT_TRUE(r.h_class);
    EXPECT_EQ(r.h_class->tag, AdditivityTag::subadditive);
}

TEST(VerifyTheorem, CoshGHOnOneToFourRefuted) {
    // cosh on [1,4] is not G_tH_t-convex there, and the GH form fails with it in either sense
    PointFunction f = on(fn_cosh(), Interval::closed(1.0, 4.0));
    EXPECT_EQ(verify_class({MeanKind::Geometric, MeanKind::Harmonic, weight_identity(), Sense::convex}, f).status,
              Status::refuted);
    EXPECT_EQ(verify_theorem(TheoremId::GH, weight_identity(), f, Sense::convex).status(), Status::refuted);
    EXPECT_EQ(verify_theorem(TheoremId::GH, weight_identity(), f, Sense::concave).status(), Status::refuted);
}

TEST(EqualityFamilies, HandTriples) {
    EXPECT_LE(equality_residual(EqualityFamily::reciprocal_AH, 1, 2, 3), 1e-15);
    Sides s = equality_sides(EqualityFamily::log_GA, 2, 3, 5);
    EXPECT_NEAR(s.lhs, 2.0 / 3.0 * std::log(30.0), 1e-14);
    EXPECT_NEAR(s.rhs, 2.0 / 3.0 * std::log(30.0), 1e-14);
    s = equality_sides(EqualityFamily::exp_reciprocal_HG, 1, 2, 4);
    EXPECT_NEAR(s.lhs, 1.75, 1e-14);
    EXPECT_NEAR(s.rhs, 1.75, 1e-14);
    EXPECT_THROW(equality_residual(EqualityFamily::log_GA, 0.5, 2, 3), domain_error);
}

TEST(EqualityFamilies, TenThousandTriplesEach) {
    SamplePlan plan;
    plan.grid_points = 0;
    for (EqualityFamily fam : all_equality_families) {
        Interval r = sampling_region(family_function(fam).domain, plan);
        double worst = 0;
        std::size_t n = 0;
        for_each_triple(r, plan, [&](double x, double y, double z) {
            Sides s = equality_sides(fam, x, y, z);
            worst = std::max(worst, std::fabs(s.lhs - s.rhs) / tol_scale(s.lhs, s.rhs));
            ++n;
        });
        EXPECT_EQ(n, 10000u);
        EXPECT_LE(worst, 1e-9) << to_string(fam);
    }
}

TEST(EqualityFamilies, ExpIsNotAnEqualityCaseOfGG) {
    Sides s = popoviciu_sides(TheoremId::GG, weight_identity(), fn_exp(), 1, 2, 5);
    EXPECT_GT(std::fabs(s.lhs - s.rhs), 0.1);
    Sides a = popoviciu_sides(TheoremId::AG, weight_identity(), fn_exp(), 1, 2, 5);
    EXPECT_NEAR(a.lhs, a.rhs, 1e-13);
}

TEST(Chains, IdentityMakesEveryLinkEqual) {
    ChainReport r = chained_check(ChainId::AA_subadditive, weight_identity(), fn_identity());
    EXPECT_TRUE(r.hypotheses_ok());
    ASSERT_EQ(r.links.size(), 3u);
    for (const auto& l : r.links) {
        EXPECT_TRUE(l.holds()) << l.label;
        EXPECT_NEAR(l.min_margin, 0.0, 1e-12);
    }
}

TEST(Chains, CoshSuperadditiveHypothesisFails) {
    PointFunction f = on(fn_cosh(), Interval::open(0.0, 5.0));
    EXPECT_THROW(chained_check(ChainId::GA_superadditive, weight_identity(), f), hypothesis_mismatch);
    ChainReport r = chained_check(ChainId::GA_superadditive, weight_identity(), f, {}, default_tol, ChainOptions{false});
    EXPECT_FALSE(r.hypotheses_ok());
    ASSERT_EQ(r.links.size(), 2u);
    EXPECT_TRUE(r.links[0].holds());
    // cosh(x)+cosh(y)+cosh(z) > cosh(x+y+z) near 0
    EXPECT_FALSE(r.links[1].holds());
}

TEST(Chains, CoshSupermultiplicativeHypothesisFails) {
    PointFunction f = on(fn_cosh(), Interval::closed(1.0, 4.0));
    EXPECT_THROW(chained_check(ChainId::GG_supermultiplicative, weight_identity(), f), hypothesis_mismatch);
    ChainReport r = chained_check(ChainId::GG_supermultiplicative, weight_identity(), f, {}, default_tol, ChainOptions{false});
    EXPECT_TRUE(r.log_domain);
    ASSERT_EQ(r.links.size(), 2u);
    EXPECT_TRUE(r.links[0].holds());
    // at (1,1,1): cosh(1)^3 > cosh(1)
    EXPECT_FALSE(r.links[1].holds());
}

TEST(Chains, NamesRoundTrip) {
    for (ChainId c : all_chains) EXPECT_EQ(parse_chain(to_string(c)), c);
    EXPECT_THROW(parse_chain("nope"), domain_error);
}

TEST(Hlawka, HandValues) {
    EXPECT_DOUBLE_EQ(hlawka_check(1, 2, 3).margin, 0.0);
    HlawkaResult r = hlawka_check(1, 1, -1);
    EXPECT_DOUBLE_EQ(r.lhs, 4.0);
    EXPECT_DOUBLE_EQ(r.rhs, 2.0);
    EXPECT_DOUBLE_EQ(r.margin, 2.0);
    EXPECT_DOUBLE_EQ(hlawka_check(0, 0, 0).margin, 0.0);
}

TEST(Hlawka, RandomTriplesAgainstOracle) {
    Rng rng(42);
    for (int i = 0; i < 100000; ++i) {
        double x = rng.uniform(-100, 100), y = rng.uniform(-100, 100), z = rng.uniform(-100, 100);
        HlawkaResult r = hlawka_check(x, y, z);
        EXPECT_GE(r.margin, 0.0);
        EXPECT_LE(std::fabs(r.margin - oracle::hlawka_margin(x, y, z)), 1e-12 * std::max(1.0, r.lhs));
    }
}

TEST(Hlawka, CancellingTriples) {
    // naive subtraction rounds these below zero
    EXPECT_GE(hlawka_check(0.1, 0.2, -0.3).margin, 0.0);
    EXPECT_GE(hlawka_check(1e16, 1.0, -1e16).margin, 0.0);
    EXPECT_DOUBLE_EQ(hlawka_check(1e16, 1.0, -1e16).margin, 2.0);
    EXPECT_DOUBLE_EQ(hlawka_check(-3, -4, -5).margin, 0.0);
}
