#include <cmath>

#include <gtest/gtest.h>

#include "meanconvex/means.hpp"
#include "oracles.hpp"

using namespace meanconvex;

static double ev(MeanKind k, double t, double a, double b, WeightFunction h = weight_identity()) {
    return mean_eval({k, h, t}, a, b);
}

TEST(Means, HandValues) {
    EXPECT_DOUBLE_EQ(ev(MeanKind::Arithmetic, 0.5, 2, 4), 3.0);
    EXPECT_NEAR(ev(MeanKind::Geometric, 0.5, 1, 9), 3.0, 1e-15);
    EXPECT_DOUBLE_EQ(ev(MeanKind::Arithmetic, 0.25, 4, 8), 5.0);
    EXPECT_DOUBLE_EQ(ev(MeanKind::Harmonic, 0.5, 2, 6), 3.0);
}

TEST(Means, Classic) {
    EXPECT_DOUBLE_EQ(mean_classic(MeanKind::Arithmetic, 1, 3), 2.0);
    EXPECT_DOUBLE_EQ(mean_classic(MeanKind::Geometric, 4, 4), 4.0);
    EXPECT_DOUBLE_EQ(mean_classic(MeanKind::Harmonic, 1, 1), 1.0);
    EXPECT_THROW(mean_classic(MeanKind::Geometric, -1, 1), domain_error);
}

TEST(Means, WeightPlacementAgainstOracle) {
    Rng rng(7);
    WeightFunction h = weight_power(2.0);
    for (int i = 0; i < 1000; ++i) {
        double a = rng.uniform(0.01, 50), b = rng.uniform(0.01, 50), t = rng.uniform(0.01, 0.99);
        double ht = t * t, hs = (1 - t) * (1 - t);
        EXPECT_LT(oracle::rel(ev(MeanKind::Arithmetic, t, a, b, h), oracle::A_h(ht, hs, a, b)), 1e-14);
        EXPECT_LT(oracle::rel(ev(MeanKind::Geometric, t, a, b, h), oracle::G_h(ht, hs, a, b)), 1e-13);
        EXPECT_LT(oracle::rel(ev(MeanKind::Harmonic, t, a, b, h), oracle::H_h(ht, hs, a, b)), 1e-14);
    }
}

TEST(Means, Axioms) {
    Rng rng(11);
    for (int i = 0; i < 1000; ++i) {
        double x = rng.uniform(0.01, 100), y = rng.uniform(0.01, 100), lam = rng.uniform(0.1, 10);
        for (MeanKind k : {MeanKind::Arithmetic, MeanKind::Geometric, MeanKind::Harmonic}) {
            double m = mean_classic(k, x, y);
            EXPECT_NEAR(m, mean_classic(k, y, x), 1e-12 * m);
            EXPECT_NEAR(mean_classic(k, x, x), x, 1e-12 * x);
            EXPECT_GE(m, std::min(x, y) * (1 - 1e-14));
            EXPECT_LE(m, std::max(x, y) * (1 + 1e-14));
            EXPECT_NEAR(mean_classic(k, lam * x, lam * y), lam * m, 1e-12 * lam * m);
            EXPECT_NEAR(ev(k, 0.5, x, y), m, 1e-12 * m);
        }
    }
}

TEST(Means, Endpoints) {
    for (MeanKind k : {MeanKind::Arithmetic, MeanKind::Geometric, MeanKind::Harmonic}) {
        EXPECT_NEAR(ev(k, 0.0, 3.0, 7.0), 3.0, 1e-14);
        EXPECT_NEAR(ev(k, 1.0, 3.0, 7.0), 7.0, 1e-14);
    }
}

TEST(Means, HarmonicIsReciprocalOfArithmetic) {
    Rng rng(3);
    WeightFunction h = weight_power(0.5);
    for (int i = 0; i < 500; ++i) {
        double a = rng.uniform(0.1, 20), b = rng.uniform(0.1, 20), t = rng.uniform(0.01, 0.99);
        double hm = ev(MeanKind::Harmonic, t, a, b, h);
        double am = ev(MeanKind::Arithmetic, t, 1 / a, 1 / b, h);
        EXPECT_NEAR(hm, 1 / am, 1e-12 * hm);
    }
}

TEST(Means, Errors) {
    EXPECT_THROW(ev(MeanKind::Arithmetic, 0.5, 0.0, 1.0), domain_error);
    EXPECT_THROW(ev(MeanKind::Harmonic, 0.5, 1.0, -2.0), domain_error);
    EXPECT_THROW(ev(MeanKind::Arithmetic, 1.5, 1.0, 2.0), domain_error);
    WeightFunction zero = weight_custom("zero", [](double) { return 0.0; });
    EXPECT_THROW(ev(MeanKind::Harmonic, 0.5, 1.0, 2.0, zero), evaluation_error);
}

TEST(Means, ChainIdentity) {
    ChainVerdict v = check_am_gm_hm(weight_identity(), 0.5, 2, 8);
    EXPECT_TRUE(v.holds);
    EXPECT_DOUBLE_EQ(v.harmonic, 3.2);
    EXPECT_NEAR(v.geometric, 4.0, 1e-15);
    EXPECT_DOUBLE_EQ(v.arithmetic, 5.0);
}

TEST(Means, ChainReflexive) {
    for (double t : {0.1, 0.5, 0.9}) {
        ChainVerdict v = check_am_gm_hm(weight_identity(), t, 6, 6);
        EXPECT_TRUE(v.holds);
        EXPECT_NEAR(v.margin_hg, 0.0, 1e-14);
        EXPECT_NEAR(v.margin_ga, 0.0, 1e-14);
    }
}

TEST(Means, ChainFailsForSquareWeight) {
    ChainVerdict v = check_am_gm_hm(weight_power(2.0), 0.5, 1, 4);
    EXPECT_DOUBLE_EQ(v.arithmetic, 1.25);
    EXPECT_NEAR(v.geometric, std::sqrt(2.0), 1e-15);
    EXPECT_DOUBLE_EQ(v.harmonic, 3.2);
    EXPECT_FALSE(v.holds);
}
