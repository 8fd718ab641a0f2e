#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "function.hpp"
#include "means.hpp"
#include "sampling.hpp"
#include "weights.hpp"

namespace meanconvex {

enum class Sense { convex, concave };

inline const char* to_string(Sense s) { return s == Sense::convex ? "convex" : "concave"; }

inline Sense parse_sense(const std::string& s) {
    if (s == "convex") return Sense::convex;
    if (s == "concave") return Sense::concave;
    throw domain_error("unknown sense '" + s + "'");
}

struct ConvexitySpec {
    MeanKind arg_mean = MeanKind::Arithmetic;
    MeanKind val_mean = MeanKind::Arithmetic;
    WeightFunction h = weight_identity();
    Sense sense = Sense::convex;

    std::string label() const {
        std::string s;
        s += mean_letter(arg_mean);
        s += "_t";
        s += mean_letter(val_mean);
        s += "_h[" + h.name + "]-";
        s += to_string(sense);
        return s;
    }
};

struct Gap {
    double lhs = 0.0;
    double rhs = 0.0;
};

// Argument mean M(t;x,y); t sits on x for all three kinds.
inline double argument_mean(MeanKind k, double x, double y, double t) {
    switch (k) {
    case MeanKind::Arithmetic:
        return t * x + (1.0 - t) * y;
    case MeanKind::Geometric:
        if (!(x > 0.0) || !(y > 0.0)) throw domain_error("geometric argument mean needs positive points");
        return std::exp(t * std::log(x) + (1.0 - t) * std::log(y));
    case MeanKind::Harmonic: {
        double den = t * x + (1.0 - t) * y;
        if (den == 0.0 || x == 0.0 || y == 0.0) throw domain_error("harmonic argument mean undefined");
        return x * y / den;
    }
    }
    return 0.0;
}

// Value side N(h(t); f(x), f(y)). The weight h(t) goes on f(x) when the argument mean is
// arithmetic or geometric and on f(y) when it is harmonic, matching each defining case.
inline Gap defining_gap(const ConvexitySpec& spec, const PointFunction& f, double x, double y, double t) {
    x = f.admit(x);
    y = f.admit(y);
    double m = f.admit(argument_mean(spec.arg_mean, x, y, t));
    double ht = spec.h(t), hs = spec.h(1.0 - t);
    double wx = spec.arg_mean == MeanKind::Harmonic ? hs : ht;
    double wy = spec.arg_mean == MeanKind::Harmonic ? ht : hs;
    Gap g;
    g.lhs = f.at(m);
    switch (spec.val_mean) {
    case MeanKind::Arithmetic:
        g.rhs = wx * f.at(x) + wy * f.at(y);
        break;
    case MeanKind::Geometric:
        g.rhs = std::exp(wx * f.log_at(x) + wy * f.log_at(y));
        break;
    case MeanKind::Harmonic: {
        double den = wx * f.recip_at(x) + wy * f.recip_at(y);
        if (den == 0.0) throw evaluation_error("harmonic value mean: zero denominator");
        g.rhs = 1.0 / den;
        break;
    }
    }
    return g;
}

inline double oriented_margin(Sense s, double lhs, double rhs) { return s == Sense::convex ? rhs - lhs : lhs - rhs; }

enum class Status { holds, refuted };

inline const char* to_string(Status s) { return s == Status::holds ? "holds-on-samples" : "refuted"; }

struct Verdict {
    Status status = Status::holds;
    std::size_t samples_tested = 0;
    std::size_t skipped = 0;
    double min_margin = 0.0;
    std::optional<Witness> witness;
    std::vector<Witness> witnesses;
};

inline Verdict verdict_from(const MarginTally& tally) {
    Verdict v;
    v.samples_tested = tally.samples;
    v.skipped = tally.skipped;
    v.min_margin = tally.min_margin;
    v.witnesses = tally.witnesses;
    if (!tally.witnesses.empty()) {
        v.status = Status::refuted;
        v.witness = tally.witnesses.front();
    }
    return v;
}

inline Verdict verify_class(const ConvexitySpec& spec, const PointFunction& f, const SamplePlan& plan = {},
                            double tol = default_tol) {
    if (plan.empty()) throw precondition_error("verify_class: empty sample plan");
    Interval r = sampling_region(f.domain, plan);
    if (r.degenerate()) throw precondition_error("verify_class: degenerate domain");
    MarginTally tally;
    for_each_xyt(r, plan, [&](double x, double y, double t) {
        Gap g;
        try {
            g = defining_gap(spec, f, x, y, t);
        } catch (const domain_error&) {
            tally.skip();
            return;
        } catch (const evaluation_error&) {
            tally.skip();
            return;
        }
        Witness w;
        w.x = x;
        w.y = y;
        w.t = t;
        w.lhs = g.lhs;
        w.rhs = g.rhs;
        tally.add(oriented_margin(spec.sense, g.lhs, g.rhs), w, tol, plan.max_witnesses);
    });
    tally.require_usable("verify_class");
    return verdict_from(tally);
}

enum class ExtendedKind { Ks2, Q, P };

struct ExtendedClass {
    ExtendedKind kind = ExtendedKind::P;
    double s = 1.0; // only for Ks2
};

inline WeightFunction extended_weight(const ExtendedClass& c) {
    switch (c.kind) {
    case ExtendedKind::Ks2:
        if (!(c.s > 0.0 && c.s <= 1.0)) throw precondition_error("K_s^2 needs s in (0,1]");
        return c.s == 1.0 ? weight_identity() : weight_power(c.s);
    case ExtendedKind::Q:
        return weight_reciprocal();
    case ExtendedKind::P:
        return weight_constant();
    }
    return weight_identity();
}

inline Verdict verify_extended_class(const ExtendedClass& c, MeanKind arg_mean, const PointFunction& f,
                                     const SamplePlan& plan = {}, double tol = default_tol,
                                     MeanKind val_mean = MeanKind::Arithmetic, Sense sense = Sense::convex) {
    SamplePlan p = plan;
    if (p.t_clip <= 0.0) p.t_clip = 1e-6; // Q is only defined for t in (0,1)
    return verify_class({arg_mean, val_mean, extended_weight(c), sense}, f, p, tol);
}

struct OrderingReport {
    std::size_t samples = 0;
    std::size_t premise_held = 0;
    std::size_t failures = 0;
    std::size_t skipped = 0;
    std::optional<Witness> witness; // lhs/rhs are the h-side values at the failing sample
    bool holds() const { return failures == 0; }
};

// If f satisfies the M_tN_t inequality at a sample, does it satisfy M_tN_h there too (h(t) >= t)?
inline OrderingReport class_ordering_check(const PointFunction& f, MeanKind arg_mean, MeanKind val_mean,
                                           const WeightFunction& h_above, const SamplePlan& plan = {},
                                           double tol = default_tol) {
    auto check_t = [&](double t) {
        double v = h_above(t);
        if (v < t - tol * std::max(1.0, t))
            throw precondition_error("class_ordering_check: h(" + std::to_string(t) + ")=" + std::to_string(v) +
                                     " < t");
    };
    for (double t : t_grid(plan)) check_t(t);
    {
        Rng rng(plan.seed);
        for (int i = 0; i < plan.random_samples; ++i) check_t(rng.uniform(plan.t_clip, 1.0 - plan.t_clip));
    }
    ConvexitySpec base{arg_mean, val_mean, weight_identity(), Sense::convex};
    ConvexitySpec lifted{arg_mean, val_mean, h_above, Sense::convex};
    Interval r = sampling_region(f.domain, plan);
    OrderingReport rep;
    for_each_xyt(r, plan, [&](double x, double y, double t) {
        Gap g0, g1;
        try {
            g0 = defining_gap(base, f, x, y, t);
            g1 = defining_gap(lifted, f, x, y, t);
        } catch (const std::exception&) {
            ++rep.skipped;
            return;
        }
        ++rep.samples;
        if (violates(g0.rhs - g0.lhs, g0.lhs, g0.rhs, tol)) return;
        ++rep.premise_held;
        if (violates(g1.rhs - g1.lhs, g1.lhs, g1.rhs, tol)) {
            ++rep.failures;
            if (!rep.witness) {
                Witness w;
                w.x = x;
                w.y = y;
                w.t = t;
                w.lhs = g1.lhs;
                w.rhs = g1.rhs;
                rep.witness = w;
            }
        }
    });
    return rep;
}

struct DiagonalRefutation {
    double lhs = 0.0;
    double rhs = 0.0;
    const char* relation = "<="; // the relation the class demands
    bool refuted = false;
};

// At y = x the argument mean collapses to x, leaving f(x) against (h(t)+h(1-t))-weighted copies of
// itself. For the weights 1/t and 1 this is impossible in the listed senses.
inline DiagonalRefutation diagonal_refute(const ConvexitySpec& spec, const PointFunction& f, double x, double t) {
    bool recip = spec.h.family == WeightFamily::reciprocal;
    bool one = spec.h.family == WeightFamily::constant;
    bool applicable = false;
    bool g_case = false;
    if (recip || one) {
        if (spec.val_mean == MeanKind::Arithmetic && spec.sense == Sense::concave) applicable = true;
        if (spec.val_mean == MeanKind::Harmonic && spec.sense == Sense::convex) applicable = true;
    }
    if (recip && spec.val_mean == MeanKind::Geometric && spec.sense == Sense::concave) {
        applicable = true;
        g_case = true;
    }
    if (!applicable) throw inapplicable_spec("diagonal_refute: " + spec.label() + " is not a forbidden class");
    if (!(t > 0.0 && t < 1.0)) throw domain_error("diagonal_refute: t must lie in (0,1)");
    double fx = f.at(f.admit(x));
    if (!(fx > 0.0)) throw precondition_error("diagonal_refute: needs f(x) > 0");
    if (g_case && !(fx > 1.0)) throw precondition_error("diagonal_refute: geometric case needs f(x) > 1");
    Gap g = defining_gap(spec, f, x, x, t);
    DiagonalRefutation d;
    d.lhs = g.lhs;
    d.rhs = g.rhs;
    d.relation = spec.sense == Sense::convex ? "<=" : ">=";
    d.refuted = violates(oriented_margin(spec.sense, g.lhs, g.rhs), g.lhs, g.rhs, 0.0);
    return d;
}

} // namespace meanconvex
