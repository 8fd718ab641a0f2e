#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "convexity.hpp"
#include "errors.hpp"
#include "function.hpp"
#include "sampling.hpp"
#include "weights.hpp"

namespace meanconvex {

enum class TheoremId { AA, AG, AH, GA, GG, GH, HA, HG, HH };

inline constexpr std::array<TheoremId, 9> all_theorems = {TheoremId::AA, TheoremId::AG, TheoremId::AH,
                                                          TheoremId::GA, TheoremId::GG, TheoremId::GH,
                                                          TheoremId::HA, TheoremId::HG, TheoremId::HH};

inline MeanKind arg_mean_of(TheoremId id) {
    switch (id) {
    case TheoremId::AA: case TheoremId::AG: case TheoremId::AH: return MeanKind::Arithmetic;
    case TheoremId::GA: case TheoremId::GG: case TheoremId::GH: return MeanKind::Geometric;
    default: return MeanKind::Harmonic;
    }
}

inline MeanKind val_mean_of(TheoremId id) {
    switch (id) {
    case TheoremId::AA: case TheoremId::GA: case TheoremId::HA: return MeanKind::Arithmetic;
    case TheoremId::AG: case TheoremId::GG: case TheoremId::HG: return MeanKind::Geometric;
    default: return MeanKind::Harmonic;
    }
}

inline std::string to_string(TheoremId id) {
    std::string s;
    s += mean_letter(arg_mean_of(id));
    s += mean_letter(val_mean_of(id));
    return s;
}

inline TheoremId parse_theorem(const std::string& s) {
    for (auto id : all_theorems)
        if (to_string(id) == s) return id;
    throw domain_error("unknown theorem '" + s + "'");
}

enum class Relation { le, ge };

inline const char* to_string(Relation r) { return r == Relation::le ? "<=" : ">="; }

// Printed direction per theorem. The reciprocal-sum forms (value mean H) read "<=" for the
// concave class; all others read "<=" for the convex class.
inline Relation theorem_relation(TheoremId id, Sense s) {
    bool recip = val_mean_of(id) == MeanKind::Harmonic;
    bool le = recip ? s == Sense::concave : s == Sense::convex;
    return le ? Relation::le : Relation::ge;
}

// The sense whose relation is "<=" needs a superadditive h, the other a subadditive one.
inline bool needs_superadditive_h(TheoremId id, Sense s) { return theorem_relation(id, s) == Relation::le; }

inline double relation_margin(Relation r, double lhs, double rhs) { return r == Relation::le ? rhs - lhs : lhs - rhs; }

// lhs/rhs are logarithms of the printed products when log_domain is set (value mean G),
// and the printed reciprocal sums when the value mean is H.
struct Sides {
    double lhs = 0.0;
    double rhs = 0.0;
    bool log_domain = false;
};

struct MeanPoints {
    double xz, yz, xy, center;
};

inline MeanPoints pair_means(MeanKind k, double x, double y, double z) {
    switch (k) {
    case MeanKind::Arithmetic:
        return {(x + z) / 2.0, (y + z) / 2.0, (x + y) / 2.0, (x + y + z) / 3.0};
    case MeanKind::Geometric:
        if (!(x > 0.0 && y > 0.0 && z > 0.0)) throw domain_error("geometric means need positive points");
        return {std::sqrt(x * z), std::sqrt(y * z), std::sqrt(x * y), std::cbrt(x * y * z)};
    case MeanKind::Harmonic: {
        double s = x * y + y * z + x * z;
        if (x + z == 0.0 || y + z == 0.0 || x + y == 0.0 || s == 0.0)
            throw domain_error("harmonic means undefined at this triple");
        return {2.0 * x * z / (x + z), 2.0 * y * z / (y + z), 2.0 * x * y / (x + y), 3.0 * x * y * z / s};
    }
    }
    return {};
}

inline Sides popoviciu_sides(TheoremId id, const WeightFunction& h, const PointFunction& f, double x, double y,
                             double z) {
    std::array<double, 3> p{f.admit(x), f.admit(y), f.admit(z)};
    std::sort(p.begin(), p.end());
    x = p[0];
    y = p[1];
    z = p[2];
    MeanPoints m = pair_means(arg_mean_of(id), x, y, z);
    double a = f.admit(m.xz), b = f.admit(m.yz), c = f.admit(m.xy), o = f.admit(m.center);
    double h32 = h(1.5), h12 = h(0.5);
    Sides s;
    switch (val_mean_of(id)) {
    case MeanKind::Arithmetic:
        s.lhs = f.at(a) + f.at(b) + f.at(c);
        s.rhs = h32 * f.at(o) + h12 * (f.at(x) + f.at(y) + f.at(z));
        break;
    case MeanKind::Geometric:
        s.log_domain = true;
        s.lhs = f.log_at(a) + f.log_at(b) + f.log_at(c);
        s.rhs = h32 * f.log_at(o) + h12 * (f.log_at(x) + f.log_at(y) + f.log_at(z));
        break;
    case MeanKind::Harmonic:
        s.lhs = f.recip_at(a) + f.recip_at(b) + f.recip_at(c);
        s.rhs = h12 * (f.recip_at(x) + f.recip_at(y) + f.recip_at(z)) + h32 * f.recip_at(o);
        break;
    }
    return s;
}

inline Sides two_point_reduction(TheoremId id, const WeightFunction& h, const PointFunction& f, double x, double y) {
    return popoviciu_sides(id, h, f, x, y, y);
}

struct PopoviciuReport {
    TheoremId theorem = TheoremId::AA;
    std::string h;
    std::string f;
    Sense sense = Sense::convex;
    Relation relation = Relation::le;
    std::size_t triples_tested = 0;
    std::size_t skipped = 0;
    double min_margin = 0.0;
    double max_abs_residual_at_equality = 0.0; // max |lhs - rhs| / scale
    std::vector<Witness> witnesses;
    std::optional<AdditivityClass> h_class;
    bool h_hypothesis_ok = true;

    Status status() const { return witnesses.empty() ? Status::holds : Status::refuted; }
};

inline PopoviciuReport verify_theorem(TheoremId id, const WeightFunction& h, const PointFunction& f, Sense sense,
                                      const SamplePlan& plan = {}, double tol = default_tol) {
    if (plan.empty()) throw precondition_error("verify_theorem: empty sample plan");
    PopoviciuReport rep;
    rep.theorem = id;
    rep.h = h.name;
    rep.f = f.name;
    rep.sense = sense;
    rep.relation = theorem_relation(id, sense);
    try {
        SamplePlan hp = plan;
        hp.box = Interval::open(0.0, 1.0);
        rep.h_class = classify_additivity([&](double t) { return h(t); }, Interval::open(0.0, 1.0), hp, tol);
        rep.h_hypothesis_ok = needs_superadditive_h(id, sense) ? rep.h_class->is_super() : rep.h_class->is_sub();
    } catch (const std::exception&) {
        rep.h_hypothesis_ok = false;
    }
    Interval r = sampling_region(f.domain, plan);
    MarginTally tally;
    double max_res = 0.0;
    for_each_triple(r, plan, [&](double x, double y, double z) {
        Sides s;
        try {
            s = popoviciu_sides(id, h, f, x, y, z);
        } catch (const domain_error&) {
            tally.skip();
            return;
        } catch (const evaluation_error&) {
            tally.skip();
            return;
        }
        if (!std::isfinite(s.lhs) || !std::isfinite(s.rhs)) {
            tally.skip();
            return;
        }
        max_res = std::max(max_res, std::fabs(s.lhs - s.rhs) / tol_scale(s.lhs, s.rhs));
        Witness w;
        w.x = x;
        w.y = y;
        w.z = z;
        w.lhs = s.lhs;
        w.rhs = s.rhs;
        tally.add(relation_margin(rep.relation, s.lhs, s.rhs), w, tol, plan.max_witnesses);
    });
    tally.require_usable("verify_theorem");
    rep.triples_tested = tally.samples;
    rep.skipped = tally.skipped;
    rep.min_margin = tally.min_margin;
    rep.max_abs_residual_at_equality = max_res;
    rep.witnesses = tally.witnesses;
    return rep;
}

enum class EqualityFamily {
    affine_AA,
    reciprocal_AH,
    log_GA,
    reciprocal_log_GH,
    reciprocal_HA,
    exp_reciprocal_HG,
    identity_HH
};

inline constexpr std::array<EqualityFamily, 7> all_equality_families = {
    EqualityFamily::affine_AA,     EqualityFamily::reciprocal_AH,     EqualityFamily::log_GA,
    EqualityFamily::reciprocal_log_GH, EqualityFamily::reciprocal_HA, EqualityFamily::exp_reciprocal_HG,
    EqualityFamily::identity_HH};

inline const char* to_string(EqualityFamily f) {
    switch (f) {
    case EqualityFamily::affine_AA: return "affine-AA";
    case EqualityFamily::reciprocal_AH: return "reciprocal-AH";
    case EqualityFamily::log_GA: return "log-GA";
    case EqualityFamily::reciprocal_log_GH: return "reciprocal-log-GH";
    case EqualityFamily::reciprocal_HA: return "reciprocal-HA";
    case EqualityFamily::exp_reciprocal_HG: return "exp-reciprocal-HG";
    case EqualityFamily::identity_HH: return "identity-HH";
    }
    return "?";
}

inline TheoremId family_theorem(EqualityFamily f) {
    switch (f) {
    case EqualityFamily::affine_AA: return TheoremId::AA;
    case EqualityFamily::reciprocal_AH: return TheoremId::AH;
    case EqualityFamily::log_GA: return TheoremId::GA;
    case EqualityFamily::reciprocal_log_GH: return TheoremId::GH;
    case EqualityFamily::reciprocal_HA: return TheoremId::HA;
    case EqualityFamily::exp_reciprocal_HG: return TheoremId::HG;
    case EqualityFamily::identity_HH: return TheoremId::HH;
    }
    return TheoremId::AA;
}

inline PointFunction family_function(EqualityFamily fam) {
    PointFunction f;
    switch (fam) {
    case EqualityFamily::affine_AA:
        f = {"affine:2,1", [](double x) { return 2.0 * x + 1.0; }, Interval::reals(), Interval::reals(), false, {}, {}};
        break;
    case EqualityFamily::reciprocal_AH:
    case EqualityFamily::reciprocal_HA:
        f = {"reciprocal", [](double x) { return 1.0 / x; }, Interval::positive(), Interval::positive(), true, {}, {}};
        break;
    case EqualityFamily::log_GA:
        f = {"log", [](double x) { return std::log(x); }, Interval::open(1.0, inf), Interval::positive(), true, {}, {}};
        break;
    case EqualityFamily::reciprocal_log_GH:
        f = {"reciprocal_log", [](double x) { return 1.0 / std::log(x); }, Interval::open(1.0, inf),
             Interval::open(1.0, inf), true, {}, {}};
        break;
    case EqualityFamily::exp_reciprocal_HG:
        f = {"exp_reciprocal", [](double x) { return std::exp(1.0 / x); }, Interval::positive(), Interval::positive(),
             true, [](double x) { return 1.0 / x; }, {}};
        break;
    case EqualityFamily::identity_HH:
        f = {"identity", [](double x) { return x; }, Interval::open(1.0, inf), Interval::reals(), true, {}, {}};
        break;
    }
    return f;
}

// Both sides of the h = t form of the family's inequality, scaled to its printed coefficients
// (2/3 on the pairwise sum for the additive and reciprocal forms, unscaled for products).
inline Sides equality_sides(EqualityFamily fam, double x, double y, double z) {
    PointFunction f = family_function(fam);
    for (double v : {x, y, z})
        if (!f.domain.contains(v)) throw domain_error(std::string(to_string(fam)) + ": point outside " + f.domain.str());
    Sides s = popoviciu_sides(family_theorem(fam), weight_identity(), f, x, y, z);
    if (!s.log_domain) {
        s.lhs *= 2.0 / 3.0;
        s.rhs *= 2.0 / 3.0;
    }
    return s;
}

inline double equality_residual(EqualityFamily fam, double x, double y, double z) {
    Sides s = equality_sides(fam, x, y, z);
    return std::fabs(s.lhs - s.rhs);
}

enum class ChainId {
    AA_subadditive,
    AA_superadditive,
    AG_submultiplicative,
    AG_supermultiplicative,
    AG_superadditive,
    AG_subadditive,
    GA_superadditive,
    GA_subadditive,
    GG_supermultiplicative,
    GG_submultiplicative,
    HA_superadditive,
    HA_subadditive,
    HG_superadditive,
    HG_subadditive
};

inline constexpr std::array<ChainId, 14> all_chains = {
    ChainId::AA_subadditive,        ChainId::AA_superadditive,       ChainId::AG_submultiplicative,
    ChainId::AG_supermultiplicative, ChainId::AG_superadditive,      ChainId::AG_subadditive,
    ChainId::GA_superadditive,      ChainId::GA_subadditive,         ChainId::GG_supermultiplicative,
    ChainId::GG_submultiplicative,  ChainId::HA_superadditive,       ChainId::HA_subadditive,
    ChainId::HG_superadditive,      ChainId::HG_subadditive};

inline const char* to_string(ChainId c) {
    switch (c) {
    case ChainId::AA_subadditive: return "AA-subadditive";
    case ChainId::AA_superadditive: return "AA-superadditive";
    case ChainId::AG_submultiplicative: return "AG-submultiplicative";
    case ChainId::AG_supermultiplicative: return "AG-supermultiplicative";
    case ChainId::AG_superadditive: return "AG-superadditive";
    case ChainId::AG_subadditive: return "AG-subadditive";
    case ChainId::GA_superadditive: return "GA-superadditive";
    case ChainId::GA_subadditive: return "GA-subadditive";
    case ChainId::GG_supermultiplicative: return "GG-supermultiplicative";
    case ChainId::GG_submultiplicative: return "GG-submultiplicative";
    case ChainId::HA_superadditive: return "HA-superadditive";
    case ChainId::HA_subadditive: return "HA-subadditive";
    case ChainId::HG_superadditive: return "HG-superadditive";
    case ChainId::HG_subadditive: return "HG-subadditive";
    }
    return "?";
}

inline ChainId parse_chain(const std::string& s) {
    for (auto c : all_chains)
        if (s == to_string(c)) return c;
    throw domain_error("unknown chain '" + s + "'");
}

inline TheoremId chain_theorem(ChainId c) {
    switch (c) {
    case ChainId::AA_subadditive: case ChainId::AA_superadditive: return TheoremId::AA;
    case ChainId::AG_submultiplicative: case ChainId::AG_supermultiplicative:
    case ChainId::AG_superadditive: case ChainId::AG_subadditive: return TheoremId::AG;
    case ChainId::GA_superadditive: case ChainId::GA_subadditive: return TheoremId::GA;
    case ChainId::GG_supermultiplicative: case ChainId::GG_submultiplicative: return TheoremId::GG;
    case ChainId::HA_superadditive: case ChainId::HA_subadditive: return TheoremId::HA;
    case ChainId::HG_superadditive: case ChainId::HG_subadditive: return TheoremId::HG;
    }
    return TheoremId::AA;
}

enum class AlgebraicProperty { superadditive, subadditive, supermultiplicative, submultiplicative };

inline const char* to_string(AlgebraicProperty p) {
    switch (p) {
    case AlgebraicProperty::superadditive: return "superadditive";
    case AlgebraicProperty::subadditive: return "subadditive";
    case AlgebraicProperty::supermultiplicative: return "supermultiplicative";
    case AlgebraicProperty::submultiplicative: return "submultiplicative";
    }
    return "?";
}

inline AlgebraicProperty chain_property(ChainId c) {
    switch (c) {
    case ChainId::AA_subadditive: case ChainId::AG_subadditive: case ChainId::GA_subadditive:
    case ChainId::HA_subadditive: case ChainId::HG_subadditive:
        return AlgebraicProperty::subadditive;
    case ChainId::AG_submultiplicative: case ChainId::GG_submultiplicative:
        return AlgebraicProperty::submultiplicative;
    case ChainId::AG_supermultiplicative: case ChainId::GG_supermultiplicative:
        return AlgebraicProperty::supermultiplicative;
    default:
        return AlgebraicProperty::superadditive;
    }
}

struct ChainLink {
    std::string label;
    std::size_t samples = 0;
    std::size_t skipped = 0;
    double min_margin = 0.0;
    std::vector<Witness> witnesses;
    bool holds() const { return witnesses.empty(); }
};

struct HypothesisCheck {
    std::string label;
    bool ok = false;
    std::string observed;
};

struct ChainReport {
    ChainId chain = ChainId::AA_subadditive;
    bool log_domain = false;
    std::vector<HypothesisCheck> hypotheses;
    std::vector<ChainLink> links;
    bool holds() const {
        return std::all_of(links.begin(), links.end(), [](const ChainLink& l) { return l.holds(); });
    }
    bool hypotheses_ok() const {
        return std::all_of(hypotheses.begin(), hypotheses.end(), [](const HypothesisCheck& h) { return h.ok; });
    }
};

struct ChainOptions {
    bool enforce_hypotheses = true;
};

struct ChainTerms {
    std::vector<std::string> labels;
    std::vector<std::function<double()>> terms;
};

// Terms of the chain, each to be <= the next. Product chains are kept in log form.
inline ChainTerms chain_terms(ChainId c, const WeightFunction& h, const PointFunction& f, double x, double y,
                              double z) {
    std::array<double, 3> p{x, y, z};
    std::sort(p.begin(), p.end());
    x = p[0];
    y = p[1];
    z = p[2];
    double h32 = h(1.5), h12 = h(0.5);
    TheoremId id = chain_theorem(c);
    auto sides = [id, &h, &f, x, y, z] { return popoviciu_sides(id, h, f, x, y, z); };
    auto lhs = [sides] { return sides().lhs; };
    auto rhs = [sides] { return sides().rhs; };
    auto F = [&f](double v) { return f.at(v); };
    auto L = [&f](double v) { return f.log_at(v); };
    auto logpos = [](double v) {
        if (!(v > 0.0)) throw evaluation_error("log of nonpositive chain term");
        return std::log(v);
    };
    auto sumF = [=] { return F(x) + F(y) + F(z); };
    auto sumL = [=] { return L(x) + L(y) + L(z); };
    auto hm = [](double a, double b) { return a * b / (a + b); };
    ChainTerms t;
    auto add = [&t](std::string l, std::function<double()> fn) {
        t.labels.push_back(std::move(l));
        t.terms.push_back(std::move(fn));
    };
    switch (c) {
    case ChainId::AA_subadditive:
        add("f(x+y+z)", [=] { return F(x + y + z); });
        add("theorem lhs", lhs);
        add("theorem rhs", rhs);
        add("h(3/2)[f(x/3)+f(y/3)+f(z/3)] + h(1/2)[f(x)+f(y)+f(z)]",
            [=] { return h32 * (F(x / 3) + F(y / 3) + F(z / 3)) + h12 * sumF(); });
        break;
    case ChainId::AA_superadditive:
        add("theorem lhs", lhs);
        add("theorem rhs", rhs);
        add("h(3/2)f((x+y+z)/3) + h(1/2)f(x+y+z)", [=] { return h32 * F((x + y + z) / 3) + h12 * F(x + y + z); });
        break;
    case ChainId::AG_submultiplicative:
        add("log f((x+z)(y+z)(x+y)/8)", [=] { return L((x + z) * (y + z) * (x + y) / 8); });
        add("theorem lhs", lhs);
        add("theorem rhs", rhs);
        break;
    case ChainId::AG_supermultiplicative:
        add("theorem lhs", lhs);
        add("theorem rhs", rhs);
        add("h(3/2)log f((x+y+z)/3) + h(1/2)log f(xyz)", [=] { return h32 * L((x + y + z) / 3) + h12 * L(x * y * z); });
        break;
    case ChainId::AG_superadditive:
        add("sum log[f(a/2)+f(b/2)] over pairs", [=] {
            return logpos(F(x / 2) + F(z / 2)) + logpos(F(y / 2) + F(z / 2)) + logpos(F(x / 2) + F(y / 2));
        });
        add("theorem lhs", lhs);
        add("theorem rhs", rhs);
        break;
    case ChainId::AG_subadditive:
        add("theorem lhs", lhs);
        add("theorem rhs", rhs);
        add("h(3/2)log[f(x/3)+f(y/3)+f(z/3)] + h(1/2)sum log f",
            [=] { return h32 * logpos(F(x / 3) + F(y / 3) + F(z / 3)) + h12 * sumL(); });
        break;
    case ChainId::GA_superadditive:
        add("theorem lhs", lhs);
        add("theorem rhs", rhs);
        add("h(3/2)f(cbrt(xyz)) + h(1/2)f(x+y+z)", [=] { return h32 * F(std::cbrt(x * y * z)) + h12 * F(x + y + z); });
        break;
    case ChainId::GA_subadditive:
        add("f(sqrt(xz)+sqrt(yz)+sqrt(xy))",
            [=] { return F(std::sqrt(x * z) + std::sqrt(y * z) + std::sqrt(x * y)); });
        add("theorem lhs", lhs);
        add("theorem rhs", rhs);
        break;
    case ChainId::GG_supermultiplicative:
        add("theorem lhs", lhs);
        add("theorem rhs", rhs);
        add("h(3/2)log f(cbrt(xyz)) + h(1/2)log f(xyz)",
            [=] { return h32 * L(std::cbrt(x * y * z)) + h12 * L(x * y * z); });
        break;
    case ChainId::GG_submultiplicative:
        add("log f(xyz)", [=] { return L(x * y * z); });
        add("theorem lhs", lhs);
        add("theorem rhs", rhs);
        add("h(3/2)sum log f(cbrt(.)) + h(1/2)sum log f",
            [=] { return h32 * (L(std::cbrt(x)) + L(std::cbrt(y)) + L(std::cbrt(z))) + h12 * sumL(); });
        break;
    case ChainId::HA_superadditive:
        add("2[f(xz/(x+z))+f(yz/(y+z))+f(xy/(x+y))]",
            [=] { return 2.0 * (F(hm(x, z)) + F(hm(y, z)) + F(hm(x, y))); });
        add("theorem lhs", lhs);
        add("theorem rhs", rhs);
        add("h(3/2)f(3xyz/(xy+yz+xz)) + h(1/2)f(x+y+z)",
            [=] { return h32 * F(3 * x * y * z / (x * y + y * z + x * z)) + h12 * F(x + y + z); });
        break;
    case ChainId::HA_subadditive:
        add("f(sum of pairwise harmonic means)", [=] { return F(2 * hm(x, z) + 2 * hm(y, z) + 2 * hm(x, y)); });
        add("theorem lhs", lhs);
        add("theorem rhs", rhs);
        add("3h(3/2)f(xyz/(xy+yz+xz)) + h(1/2)sum f",
            [=] { return 3 * h32 * F(x * y * z / (x * y + y * z + x * z)) + h12 * sumF(); });
        break;
    case ChainId::HG_superadditive:
        add("log 2[f(xz/(x+z))+f(yz/(y+z))+f(xy/(x+y))]",
            [=] { return logpos(2.0 * (F(hm(x, z)) + F(hm(y, z)) + F(hm(x, y)))); });
        add("log sum f(pairwise harmonic means)",
            [=] { return logpos(F(2 * hm(x, z)) + F(2 * hm(y, z)) + F(2 * hm(x, y))); });
        add("theorem rhs", rhs);
        break;
    case ChainId::HG_subadditive:
        add("log f(sum of pairwise harmonic means)", [=] { return L(2 * hm(x, z) + 2 * hm(y, z) + 2 * hm(x, y)); });
        add("log sum f(pairwise harmonic means)",
            [=] { return logpos(F(2 * hm(x, z)) + F(2 * hm(y, z)) + F(2 * hm(x, y))); });
        add("theorem rhs", rhs);
        add("h(3/2)log[3f(xyz/(xy+yz+xz))] + h(1/2)sum log f",
            [=] { return h32 * logpos(3 * F(x * y * z / (x * y + y * z + x * z))) + h12 * sumL(); });
        break;
    }
    return t;
}

inline std::vector<HypothesisCheck> chain_hypotheses(ChainId c, const WeightFunction& h, const PointFunction& f,
                                                     const SamplePlan& plan, double tol) {
    std::vector<HypothesisCheck> out;
    TheoremId id = chain_theorem(c);
    {
        HypothesisCheck hc;
        ConvexitySpec spec{arg_mean_of(id), val_mean_of(id), h, Sense::convex};
        hc.label = "f is " + spec.label();
        try {
            Verdict v = verify_class(spec, f, plan, tol);
            hc.ok = v.status == Status::holds;
            hc.observed = to_string(v.status);
        } catch (const std::exception& e) {
            hc.observed = e.what();
        }
        out.push_back(hc);
    }
    {
        AlgebraicProperty prop = chain_property(c);
        HypothesisCheck hc;
        hc.label = std::string("f is ") + to_string(prop);
        try {
            Interval r = f.domain.intersect(plan.box);
            std::function<double(double)> g = [&f](double v) { return f.at(v); };
            bool mult = prop == AlgebraicProperty::supermultiplicative || prop == AlgebraicProperty::submultiplicative;
            AdditivityClass k = mult ? classify_multiplicativity(g, r, plan, tol) : classify_additivity(g, r, plan, tol);
            bool super = prop == AlgebraicProperty::superadditive || prop == AlgebraicProperty::supermultiplicative;
            hc.ok = super ? k.is_super() : k.is_sub();
            hc.observed = mult ? multiplicative_name(k.tag) : to_string(k.tag);
        } catch (const std::exception& e) {
            hc.observed = e.what();
        }
        out.push_back(hc);
    }
    {
        HypothesisCheck hc;
        hc.label = "h is superadditive";
        try {
            SamplePlan hp = plan;
            hp.box = Interval::open(0.0, 1.0);
            AdditivityClass k = classify_additivity([&h](double t) { return h(t); }, Interval::open(0.0, 1.0), hp, tol);
            hc.ok = k.is_super();
            hc.observed = to_string(k.tag);
        } catch (const std::exception& e) {
            hc.observed = e.what();
        }
        out.push_back(hc);
    }
    return out;
}

inline ChainReport chained_check(ChainId c, const WeightFunction& h, const PointFunction& f,
                                 const SamplePlan& plan = {}, double tol = default_tol, ChainOptions opts = {}) {
    ChainReport rep;
    rep.chain = c;
    rep.log_domain = val_mean_of(chain_theorem(c)) == MeanKind::Geometric;
    rep.hypotheses = chain_hypotheses(c, h, f, plan, tol);
    if (opts.enforce_hypotheses && !rep.hypotheses_ok()) {
        std::string msg = std::string("chain ") + to_string(c) + ": hypotheses contradicted on samples:";
        for (const auto& hc : rep.hypotheses)
            if (!hc.ok) msg += " [" + hc.label + ": observed " + hc.observed + "]";
        throw hypothesis_mismatch(msg);
    }
    Interval r = sampling_region(f.domain, plan);
    std::vector<MarginTally> tallies;
    std::vector<std::string> labels;
    for_each_triple(r, plan, [&](double x, double y, double z) {
        ChainTerms ct = chain_terms(c, h, f, x, y, z);
        if (tallies.empty()) {
            tallies.resize(ct.terms.size() - 1);
            for (std::size_t i = 0; i + 1 < ct.labels.size(); ++i) labels.push_back(ct.labels[i] + " <= " + ct.labels[i + 1]);
        }
        std::vector<std::optional<double>> vals(ct.terms.size());
        for (std::size_t i = 0; i < ct.terms.size(); ++i) {
            try {
                double v = ct.terms[i]();
                if (std::isfinite(v)) vals[i] = v;
            } catch (const domain_error&) {
            } catch (const evaluation_error&) {
            }
        }
        for (std::size_t i = 0; i + 1 < vals.size(); ++i) {
            if (!vals[i] || !vals[i + 1]) {
                tallies[i].skip();
                continue;
            }
            Witness w;
            w.x = x;
            w.y = y;
            w.z = z;
            w.lhs = *vals[i];
            w.rhs = *vals[i + 1];
            tallies[i].add(w.rhs - w.lhs, w, tol, plan.max_witnesses);
        }
    });
    for (std::size_t i = 0; i < tallies.size(); ++i) {
        ChainLink l;
        l.label = labels[i];
        l.samples = tallies[i].samples;
        l.skipped = tallies[i].skipped;
        l.min_margin = tallies[i].min_margin;
        l.witnesses = tallies[i].witnesses;
        rep.links.push_back(l);
    }
    return rep;
}

struct HlawkaResult {
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
};

namespace detail {

inline double two_sum(double a, double b, double& err) {
    double s = a + b;
    double bb = s - a;
    err = (a - (s - bb)) + (b - bb);
    return s;
}

inline double sum3(double a, double b, double c) {
    double e1, e2;
    double s = two_sum(a, b, e1);
    s = two_sum(s, c, e2);
    return s + (e1 + e2);
}

inline double sgn(double v) { return v < 0.0 ? -1.0 : 1.0; }

} // namespace detail

// lhs/rhs are the plain sums. The margin is not lhs - rhs: with the signs of the seven inner
// sums fixed it is a x + b y + c z with a, b, c in {0, +-2, +-4}, so the products are exact and
// only one compensated three-term sum rounds. Plain subtraction goes negative by ~1e-13.
inline HlawkaResult hlawka_check(double x, double y, double z) {
    using detail::sgn;
    HlawkaResult r;
    r.lhs = std::fabs(x) + std::fabs(y) + std::fabs(z) + std::fabs(x + y + z);
    r.rhs = std::fabs(x + z) + std::fabs(z + y) + std::fabs(x + y);
    // the sign of a rounded two-term sum is exact; the three-term one needs compensation
    double sxyz = sgn(detail::sum3(x, y, z));
    double sxy = sgn(x + y), sxz = sgn(x + z), syz = sgn(y + z);
    double a = sgn(x) + sxyz - sxz - sxy;
    double b = sgn(y) + sxyz - syz - sxy;
    double c = sgn(z) + sxyz - sxz - syz;
    r.margin = detail::sum3(a * x, b * y, c * z);
    return r;
}

} // namespace meanconvex
