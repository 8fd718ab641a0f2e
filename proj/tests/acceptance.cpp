// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <string>

#include "meanconvex/meanconvex.hpp"

using namespace meanconvex;

namespace {

int failures = 0;

void report(int n, bool ok, const std::string& what, double secs) {
    std::printf("%s criterion %d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", n, what.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++failures;
}

struct Clock {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double secs() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    }
};

std::string g(double v) {
    char b[40];
    std::snprintf(b, sizeof b, "%.3g", v);
    return b;
}

void criterion1() {
    Clock c;
    SamplePlan plan;
    plan.grid_points = 0;
    double worst = 0;
    std::size_t n = 0;
    bool ok = true;
    std::string bad;
    for (EqualityFamily fam : all_equality_families) {
        Interval r = sampling_region(family_function(fam).domain, plan);
        double w = 0;
        std::size_t k = 0;
        for_each_triple(r, plan, [&](double x, double y, double z) {
            Sides s = equality_sides(fam, x, y, z);
            w = std::max(w, std::fabs(s.lhs - s.rhs) / tol_scale(s.lhs, s.rhs));
            ++k;
        });
        if (w > 1e-9 || k != 10000) {
            ok = false;
            bad += std::string(" ") + to_string(fam);
        }
        worst = std::max(worst, w);
        n += k;
    }
    double s = c.secs();
    report(1, ok && s < 1.0, "7 equality families, " + std::to_string(n) + " triples, max scaled residual " + g(worst) + bad, s);
}

void criterion2() {
    Clock c;
    SamplePlan plan;
    PointFunction f = with_domain(fn_square(), Interval::open(0.1, 10.0));
    auto conv = verify_theorem(TheoremId::AA, weight_identity(), f, Sense::convex, plan, 1e-12);
    auto conc = verify_theorem(TheoremId::AA, weight_identity(), f, Sense::concave, plan);
    bool replay = false;
    if (!conc.witnesses.empty()) {
        const Witness& w = conc.witnesses.front();
        Sides s = popoviciu_sides(TheoremId::AA, weight_identity(), f, w.x, w.y, w.z);
        replay = s.lhs == w.lhs && s.rhs == w.rhs && s.lhs < s.rhs; // concave claim is lhs >= rhs
    }
    bool ok = conv.status() == Status::holds && conv.triples_tested == 33u * 33u * 33u + 10000u &&
              conc.status() == Status::refuted && replay;
    report(2, ok,
           "x^2 AA on (0.1,10): " + std::to_string(conv.triples_tested) + " triples, min margin " + g(conv.min_margin) +
               ", concave claim " + to_string(conc.status()) + (replay ? ", witness replays" : ", witness does not replay"),
           c.secs());
}

void criterion3() {
    Clock c;
    struct Case {
        TheoremId id;
        PointFunction f;
        Interval dom;
        Sense sense;
    };
    Interval pos = Interval::open(0.0, inf);
    Case cases[] = {
        {TheoremId::AA, fn_square(), Interval::reals(), Sense::convex},
        {TheoremId::AG, fn_cosh(), Interval::reals(), Sense::convex},
        {TheoremId::AH, fn_reciprocal(), pos, Sense::convex},
        {TheoremId::GA, fn_cosh(), pos, Sense::convex},
        {TheoremId::GG, fn_cosh(), pos, Sense::convex},
        {TheoremId::GH, fn_cosh(), Interval::closed(1.0, 4.0), Sense::convex},
        {TheoremId::HA, fn_reciprocal(), pos, Sense::convex},
        {TheoremId::HG, fn_exp(), pos, Sense::convex},
        {TheoremId::HH, fn_arctan(), pos, Sense::concave},
    };
    bool ok = true;
    std::string detail;
    for (const Case& k : cases) {
        std::string tag = to_string(k.id) + "(" + k.f.name + ")";
        try {
            auto r = verify_theorem(k.id, weight_identity(), with_domain(k.f, k.dom), k.sense);
            if (r.status() != Status::holds) {
                ok = false;
                detail += " " + tag + " refuted, min margin " + g(r.min_margin);
            }
        } catch (const std::exception& e) {
            ok = false;
            detail += " " + tag + " error: " + e.what();
        }
    }
    double s = c.secs();
    report(3, ok && s < 10.0, "nine theorems with h=identity" + (detail.empty() ? std::string(" hold on samples") : detail), s);
}

void criterion4() {
    Clock c;
    SamplePlan plan;
    plan.grid_points = 0;
    double worst = 0;
    std::size_t n = 0;
    auto run = [&](MeanKind arg, MeanKind val, const PointFunction& f, const Interval& dom) {
        ConvexitySpec spec{arg, val, weight_identity(), Sense::convex};
        Interval r = sampling_region(dom, plan);
        for_each_xyt(r, plan, [&](double x, double y, double t) {
            Gap gp = defining_gap(spec, f, x, y, t);
            worst = std::max(worst, std::fabs(gp.lhs - gp.rhs) / std::max(std::fabs(gp.lhs), std::fabs(gp.rhs)));
            ++n;
        });
    };
    run(MeanKind::Arithmetic, MeanKind::Geometric, fn_exp(), Interval::reals());
    run(MeanKind::Harmonic, MeanKind::Harmonic, fn_identity(), Interval::open(0.0, inf));
    report(4, worst <= 1e-12 && n == 20000,
           "exp under A/G and identity under H/H: " + std::to_string(n) + " samples, max relative gap " + g(worst), c.secs());
}

void criterion5() {
    Clock c;
    struct Cls {
        WeightFunction h;
        MeanKind val;
        Sense sense;
    };
    Cls classes[] = {
        {weight_reciprocal(), MeanKind::Arithmetic, Sense::concave},
        {weight_reciprocal(), MeanKind::Harmonic, Sense::convex},
        {weight_constant(), MeanKind::Arithmetic, Sense::concave},
        {weight_constant(), MeanKind::Harmonic, Sense::convex},
        {weight_reciprocal(), MeanKind::Geometric, Sense::concave},
    };
    PointFunction f = fn_constant(2.0);
    int total = 0, refuted = 0;
    for (const Cls& k : classes)
        for (MeanKind arg : {MeanKind::Arithmetic, MeanKind::Geometric, MeanKind::Harmonic})
            for (double t : {0.1, 0.25, 0.5, 0.75, 0.9}) {
                ++total;
                try {
                    if (diagonal_refute({arg, k.val, k.h, k.sense}, f, 3.0, t).refuted) ++refuted;
                } catch (const std::exception&) {
                }
            }
    report(5, refuted == total && total == 75,
           std::to_string(refuted) + "/" + std::to_string(total) + " diagonal refutations (4 reversed classes + G case, 3 argument means, 5 t)",
           c.secs());
}

void criterion6() {
    Clock c;
    SamplePlan plan;
    plan.box = Interval::open(0.0, 1.0);
    bool ok = true;
    std::string detail;
    for (double k : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0}) {
        auto sampled = classify_additivity([k](double t) { return std::pow(t, k); }, Interval::open(0.0, 1.0), plan);
        auto table = power_weight_class(k);
        detail += " k=" + g(k) + ":" + to_string(sampled.tag);
        if (sampled.tag != table.tag) {
            ok = false;
            detail += std::string("(table ") + to_string(table.tag) + ")";
        }
    }
    report(6, ok, "x^k additivity" + detail, c.secs());
}

void criterion7() {
    Clock c;
    Rng rng(42);
    double worst = 0;
    std::size_t same_sign = 0, equal = 0;
    for (int i = 0; i < 1000000; ++i) {
        double x = rng.uniform(-100, 100), y = rng.uniform(-100, 100), z = rng.uniform(-100, 100);
        HlawkaResult h = hlawka_check(x, y, z);
        worst = std::min(worst, h.margin);
        if ((x >= 0 && y >= 0 && z >= 0) || (x <= 0 && y <= 0 && z <= 0)) {
            ++same_sign;
            if (std::fabs(h.margin) <= 1e-12 * tol_scale(h.lhs, h.rhs)) ++equal;
        }
    }
    report(7, worst >= 0 && equal == same_sign,
           "Hlawka on 1e6 triples, min margin " + g(worst) + ", equality on " + std::to_string(equal) + "/" +
               std::to_string(same_sign) + " same-sign triples",
           c.secs());
}

void criterion8() {
    Clock c;
    PointFunction f = with_domain(fn_cosh(), Interval::closed(1.0, 4.0));
    Rng rng(42);
    bool bitwise = true;
    double worst = 0;
    for (TheoremId id : all_theorems)
        for (int i = 0; i < 1000; ++i) {
            double x = rng.uniform(1, 4), y = rng.uniform(1, 4), z = rng.uniform(1, 4);
            Sides a = two_point_reduction(id, weight_identity(), f, x, y);
            Sides b = popoviciu_sides(id, weight_identity(), f, x, y, y);
            if (!(a.lhs == b.lhs && a.rhs == b.rhs)) bitwise = false;
            Sides p = popoviciu_sides(id, weight_identity(), f, x, y, z);
            for (Sides q : {popoviciu_sides(id, weight_identity(), f, z, x, y),
                            popoviciu_sides(id, weight_identity(), f, y, z, x),
                            popoviciu_sides(id, weight_identity(), f, z, y, x)}) {
                worst = std::max(worst, std::fabs(p.lhs - q.lhs) / tol_scale(p.lhs, q.lhs));
                worst = std::max(worst, std::fabs(p.rhs - q.rhs) / tol_scale(p.rhs, q.rhs));
            }
        }
    report(8, bitwise && worst <= 1e-12,
           std::string("two-point reduction ") + (bitwise ? "bitwise equal" : "differs") + ", permutation gap " + g(worst),
           c.secs());
}

void criterion9() {
    Clock c;
    RunConfig cfg;
    cfg.command = "audit";
    CommandResult a = cli_detail::cmd_audit(cfg), b = cli_detail::cmd_audit(cfg);
    std::string ja = dump_json(a.json), jb = dump_json(b.json);
    std::size_t entries = a.json["findings"].size();
    bool ok = a.exit_code == 0 && b.exit_code == 0 && entries == builtin_claims().size() && entries >= 24 && ja == jb;
    report(9, ok,
           "audit of " + std::to_string(entries) + " entries, exit " + std::to_string(a.exit_code) +
               (ja == jb ? ", JSON byte-stable" : ", JSON differs between runs"),
           c.secs());
}

} // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    std::printf("%d of 9 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
