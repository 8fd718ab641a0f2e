#pragma once

#include <cmath>
#include <string>

#include "errors.hpp"
#include "sampling.hpp"
#include "weights.hpp"

namespace meanconvex {

enum class MeanKind { Arithmetic, Geometric, Harmonic };

inline const char* to_string(MeanKind k) {
    switch (k) {
    case MeanKind::Arithmetic: return "Arithmetic";
    case MeanKind::Geometric: return "Geometric";
    case MeanKind::Harmonic: return "Harmonic";
    }
    return "?";
}

inline char mean_letter(MeanKind k) {
    switch (k) {
    case MeanKind::Arithmetic: return 'A';
    case MeanKind::Geometric: return 'G';
    case MeanKind::Harmonic: return 'H';
    }
    return '?';
}

inline MeanKind mean_from_letter(char c) {
    switch (c) {
    case 'A': case 'a': return MeanKind::Arithmetic;
    case 'G': case 'g': return MeanKind::Geometric;
    case 'H': case 'h': return MeanKind::Harmonic;
    }
    throw domain_error(std::string("unknown mean letter '") + c + "'");
}

struct MeanEvalContext {
    MeanKind kind = MeanKind::Arithmetic;
    WeightFunction h = weight_identity();
    double t = 0.5;
};

// A_h = h(1-t)a + h(t)b,  G_h = a^h(1-t) b^h(t),  H_h = ab / (h(t)a + h(1-t)b)
inline double mean_eval(const MeanEvalContext& ctx, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw domain_error("mean_eval: inputs must be positive, got " + std::to_string(a) + ", " + std::to_string(b));
    if (!(ctx.t >= 0.0 && ctx.t <= 1.0)) throw domain_error("mean_eval: t outside [0,1]");
    double ht = ctx.h(ctx.t);
    double hs = ctx.h(1.0 - ctx.t);
    switch (ctx.kind) {
    case MeanKind::Arithmetic:
        return hs * a + ht * b;
    case MeanKind::Geometric:
        return std::exp(hs * std::log(a) + ht * std::log(b));
    case MeanKind::Harmonic: {
        double den = ht * a + hs * b;
        if (den == 0.0) throw evaluation_error("mean_eval: harmonic denominator vanishes");
        return a * b / den;
    }
    }
    return 0.0;
}

inline double mean_classic(MeanKind kind, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0)) throw domain_error("mean_classic: inputs must be positive");
    switch (kind) {
    case MeanKind::Arithmetic: return (a + b) / 2.0;
    case MeanKind::Geometric: return std::sqrt(a * b);
    case MeanKind::Harmonic: return 2.0 * a * b / (a + b);
    }
    return 0.0;
}

struct ChainVerdict {
    double harmonic = 0.0;
    double geometric = 0.0;
    double arithmetic = 0.0;
    double margin_hg = 0.0; // G_h - H_h
    double margin_ga = 0.0; // A_h - G_h
    bool holds = false;
};

inline ChainVerdict check_am_gm_hm(const WeightFunction& h, double t, double a, double b, double tol = default_tol) {
    ChainVerdict v;
    v.harmonic = mean_eval({MeanKind::Harmonic, h, t}, a, b);
    v.geometric = mean_eval({MeanKind::Geometric, h, t}, a, b);
    v.arithmetic = mean_eval({MeanKind::Arithmetic, h, t}, a, b);
    v.margin_hg = v.geometric - v.harmonic;
    v.margin_ga = v.arithmetic - v.geometric;
    v.holds = !violates(v.margin_hg, v.geometric, v.harmonic, tol) &&
              !violates(v.margin_ga, v.arithmetic, v.geometric, tol);
    return v;
}

} // namespace meanconvex
