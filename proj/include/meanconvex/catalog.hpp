#pragma once

#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "convexity.hpp"
#include "functions.hpp"
#include "means.hpp"
#include "popoviciu.hpp"
#include "sampling.hpp"
#include "weights.hpp"

namespace meanconvex {

enum class Expected { holds, equality, suspect };

inline const char* to_string(Expected e) {
    switch (e) {
    case Expected::holds: return "holds";
    case Expected::equality: return "equality";
    case Expected::suspect: return "suspect";
    }
    return "?";
}

enum class CheckState { holds, refuted, error };

inline const char* to_string(CheckState s) {
    switch (s) {
    case CheckState::holds: return "holds";
    case CheckState::refuted: return "refuted";
    case CheckState::error: return "error";
    }
    return "?";
}

struct CheckOutcome {
    std::string label;
    bool primary = true;
    CheckState state = CheckState::holds;
    double min_margin = std::numeric_limits<double>::quiet_NaN();
    std::optional<Witness> witness;
    std::size_t samples = 0;
    std::size_t skipped = 0;
    std::string message;
};

struct Check {
    std::string label;
    bool primary = true;
    std::function<std::vector<CheckOutcome>(const SamplePlan&, double)> run;
};

struct CatalogEntry {
    std::string id;
    std::string group; // examples | equality-families | classical
    std::string claim;
    std::string source;
    PointFunction function;
    Interval stated_domain;
    Expected expected = Expected::holds;
    bool requires_positive = true;
    std::vector<Check> checks;
};

enum class FindingVerdict { confirmed, refuted, domain_violation, inconclusive };

inline const char* to_string(FindingVerdict v) {
    switch (v) {
    case FindingVerdict::confirmed: return "confirmed";
    case FindingVerdict::refuted: return "refuted-on-samples";
    case FindingVerdict::domain_violation: return "domain-violation";
    case FindingVerdict::inconclusive: return "inconclusive";
    }
    return "?";
}

struct AuditFinding {
    std::string entry;
    std::string group;
    Expected expected = Expected::holds;
    FindingVerdict verdict = FindingVerdict::confirmed;
    std::optional<Witness> witness;
    double min_margin = std::numeric_limits<double>::quiet_NaN(); // over primary checks
    std::vector<CheckOutcome> checks;
    std::string note;
};

namespace cat {

inline CheckOutcome from_tally(std::string label, bool primary, const MarginTally& t) {
    CheckOutcome o;
    o.label = std::move(label);
    o.primary = primary;
    o.samples = t.samples;
    o.skipped = t.skipped;
    o.min_margin = t.samples ? t.min_margin : std::numeric_limits<double>::quiet_NaN();
    if (!t.witnesses.empty()) {
        o.state = CheckState::refuted;
        o.witness = t.witnesses.front();
    }
    if (t.samples == 0 || 2 * t.samples < t.attempted()) {
        o.state = CheckState::error;
        o.message = "too few usable samples";
    }
    return o;
}

inline CheckOutcome error_outcome(std::string label, bool primary, const std::exception& e) {
    CheckOutcome o;
    o.label = std::move(label);
    o.primary = primary;
    o.state = CheckState::error;
    o.message = e.what();
    return o;
}

template <class Body>
Check make_check(std::string label, bool primary, Body body) {
    Check c;
    c.label = label;
    c.primary = primary;
    c.run = [label, primary, body](const SamplePlan& plan, double tol) -> std::vector<CheckOutcome> {
        try {
            return body(plan, tol, label, primary);
        } catch (const std::exception& e) {
            return {error_outcome(label, primary, e)};
        }
    };
    return c;
}

inline Check class_check(ConvexitySpec spec, PointFunction f, bool primary = true) {
    std::string label = "class " + spec.label();
    return make_check(label, primary, [spec, f](const SamplePlan& plan, double tol, const std::string& l, bool p) {
        Verdict v = verify_class(spec, f, plan, tol);
        CheckOutcome o;
        o.label = l;
        o.primary = p;
        o.state = v.status == Status::holds ? CheckState::holds : CheckState::refuted;
        o.min_margin = v.min_margin;
        o.witness = v.witness;
        o.samples = v.samples_tested;
        o.skipped = v.skipped;
        return std::vector<CheckOutcome>{o};
    });
}

inline Check theorem_check(TheoremId id, WeightFunction h, PointFunction f, Sense sense, bool primary = true) {
    std::string label = "theorem " + to_string(id) + " h=" + h.name + " " + to_string(sense) + " (" +
                        to_string(theorem_relation(id, sense)) + ")";
    return make_check(label, primary, [id, h, f, sense](const SamplePlan& plan, double tol, const std::string& l, bool p) {
        PopoviciuReport r = verify_theorem(id, h, f, sense, plan, tol);
        CheckOutcome o;
        o.label = l;
        o.primary = p;
        o.state = r.status() == Status::holds ? CheckState::holds : CheckState::refuted;
        o.min_margin = r.min_margin;
        if (!r.witnesses.empty()) o.witness = r.witnesses.front();
        o.samples = r.triples_tested;
        o.skipped = r.skipped;
        return std::vector<CheckOutcome>{o};
    });
}

using TripleForm = std::function<Sides(double, double, double)>;

// A printed three-variable inequality sampled over dom intersected with the box.
inline Check printed_check(std::string label, Interval dom, Relation rel, TripleForm form, bool primary = true) {
    label = "printed " + label + " (" + to_string(rel) + ")";
    return make_check(label, primary, [dom, rel, form](const SamplePlan& plan, double tol, const std::string& l, bool p) {
        Interval r = sampling_region(dom, plan);
        MarginTally t;
        for_each_triple(r, plan, [&](double x, double y, double z) {
            Sides s;
            try {
                s = form(x, y, z);
            } catch (const std::exception&) {
                t.skip();
                return;
            }
            if (!std::isfinite(s.lhs) || !std::isfinite(s.rhs)) {
                t.skip();
                return;
            }
            Witness w;
            w.x = x;
            w.y = y;
            w.z = z;
            w.lhs = s.lhs;
            w.rhs = s.rhs;
            t.add(relation_margin(rel, s.lhs, s.rhs), w, tol, plan.max_witnesses);
        });
        return std::vector<CheckOutcome>{from_tally(l, p, t)};
    });
}

// A printed form with no relation symbol: both readings, neither asserted.
inline std::vector<Check> unrelated_printed(std::string label, Interval dom, TripleForm form) {
    return {printed_check(label, dom, Relation::le, form, false), printed_check(label, dom, Relation::ge, form, false)};
}

// |lhs - rhs| <= tol * scale on every sample; margin reported as -(scaled residual).
inline Check equality_check(std::string label, Interval dom, TripleForm form, bool primary = true) {
    label = "equality " + label;
    return make_check(label, primary, [dom, form](const SamplePlan& plan, double tol, const std::string& l, bool p) {
        Interval r = sampling_region(dom, plan);
        MarginTally t;
        for_each_triple(r, plan, [&](double x, double y, double z) {
            Sides s;
            try {
                s = form(x, y, z);
            } catch (const std::exception&) {
                t.skip();
                return;
            }
            Witness w;
            w.x = x;
            w.y = y;
            w.z = z;
            w.lhs = s.lhs;
            w.rhs = s.rhs;
            t.add(-std::fabs(s.lhs - s.rhs), w, tol, plan.max_witnesses);
        });
        return std::vector<CheckOutcome>{from_tally(l, p, t)};
    });
}

inline Check chain_check(ChainId c, WeightFunction h, PointFunction f) {
    std::string label = std::string("chain ") + to_string(c);
    return make_check(label, true, [c, h, f](const SamplePlan& plan, double tol, const std::string& l, bool p) {
        ChainReport rep = chained_check(c, h, f, plan, tol, ChainOptions{false});
        std::vector<CheckOutcome> out;
        for (const auto& hc : rep.hypotheses) {
            CheckOutcome o;
            o.label = l + " hypothesis: " + hc.label;
            o.primary = p;
            o.state = hc.ok ? CheckState::holds : CheckState::refuted;
            o.message = "observed " + hc.observed;
            out.push_back(o);
        }
        for (const auto& link : rep.links) {
            CheckOutcome o;
            o.label = l + " link: " + link.label;
            o.primary = p;
            o.samples = link.samples;
            o.skipped = link.skipped;
            o.min_margin = link.min_margin;
            if (!link.witnesses.empty()) {
                o.state = CheckState::refuted;
                o.witness = link.witnesses.front();
            }
            out.push_back(o);
        }
        return out;
    });
}

inline double sq(double v) { return v * v; }
inline double logp(double v) {
    if (!(v > 0.0)) throw evaluation_error("log of nonpositive value");
    return std::log(v);
}
inline double hmean2(double a, double b) { return 2.0 * a * b / (a + b); }
inline double hcenter(double x, double y, double z) { return 3.0 * x * y * z / (x * y + y * z + x * z); }
inline double cosh_sum_pairs_g(double x, double y, double z) {
    return std::cosh(std::sqrt(x * z)) + std::cosh(std::sqrt(y * z)) + std::cosh(std::sqrt(x * y));
}

inline CatalogEntry entry(std::string id, std::string group, Expected e, PointFunction f, Interval dom,
                          std::string claim, std::string source, bool requires_positive = true) {
    CatalogEntry c;
    c.id = std::move(id);
    c.group = std::move(group);
    c.expected = e;
    c.function = with_domain(std::move(f), dom);
    c.stated_domain = dom;
    c.claim = std::move(claim);
    c.source = std::move(source);
    c.requires_positive = requires_positive;
    return c;
}

inline ConvexitySpec cs(MeanKind a, MeanKind v, WeightFunction h, Sense s) { return {a, v, std::move(h), s}; }

inline CatalogEntry example_entries_part1(std::vector<CatalogEntry>& out);

} // namespace cat

inline std::vector<CatalogEntry> builtin_claims() {
    using namespace cat;
    using MK = MeanKind;
    const auto A = MK::Arithmetic, G = MK::Geometric, H = MK::Harmonic;
    const auto I = weight_identity(), R = weight_reciprocal(), ONE = weight_constant();
    const auto vex = Sense::convex, cave = Sense::concave;
    const auto le = Relation::le, ge = Relation::ge;
    const Interval pos = Interval::positive(), unit = Interval::open(0.0, 1.0), gt1 = Interval::open(1.0, inf);
    const Interval ge1 = Interval::right_open(1.0, inf), neg = Interval::open(-inf, 0.0);
    std::vector<CatalogEntry> out;

    // power p = 2 under the A_tA_t Popoviciu form
    {
        auto e = entry("power-AA-identity", "examples", Expected::holds, fn_power(2.0), pos,
                       "x^p (p=2) is A_tA_t-convex on x>0 and satisfies the h=t Popoviciu form",
                       "2/3[f((x+z)/2)+f((y+z)/2)+f((x+y)/2)] <= f((x+y+z)/3) + [f(x)+f(y)+f(z)]/3 with f=x^p");
        e.checks.push_back(class_check(cs(A, A, I, vex), e.function));
        e.checks.push_back(printed_check("2/3 sum ((a+b)/2)^2 vs ((x+y+z)/3)^2 + sum x^2/3", pos, le,
                                         [](double x, double y, double z) {
                                             double l = 2.0 / 3.0 * (sq((x + z) / 2) + sq((y + z) / 2) + sq((x + y) / 2));
                                             double r = sq((x + y + z) / 3) + (x * x + y * y + z * z) / 3;
                                             return Sides{l, r, false};
                                         }));
        out.push_back(std::move(e));
    }
    {
        auto e = entry("neg-log-AA-identity", "examples", Expected::holds, fn_neg_log(), unit,
                       "-log x is A_tA_t-convex on (0,1)",
                       "(x+z)^2(y+z)^2(x+y)^2 >= 64/27 (x+y+z)^3 xyz for 0<x,y,z<1");
        e.checks.push_back(class_check(cs(A, A, I, vex), e.function));
        e.checks.push_back(theorem_check(TheoremId::AA, I, e.function, vex));
        e.checks.push_back(printed_check("(x+z)^2(y+z)^2(x+y)^2 vs 64/27 (x+y+z)^3 xyz", unit, ge,
                                         [](double x, double y, double z) {
                                             double l = sq((x + z) * (y + z) * (x + y));
                                             double r = 64.0 / 27.0 * std::pow(x + y + z, 3) * x * y * z;
                                             return Sides{l, r, false};
                                         }));
        out.push_back(std::move(e));
    }
    {
        auto e = entry("log-AA-reciprocal", "examples", Expected::holds, fn_log(), unit,
                       "log x is A_tA_{1/t}-concave on (0,1) (real-valued f allowed)",
                       "(x+z)^3(y+z)^3(x+y)^3 >= 512/9 (x+y+z)^2 (xyz)^6 for 0<x,y,z<1", false);
        e.checks.push_back(class_check(cs(A, A, R, cave), e.function));
        e.checks.push_back(theorem_check(TheoremId::AA, R, e.function, cave));
        e.checks.push_back(printed_check("(x+z)^3(y+z)^3(x+y)^3 vs 512/9 (x+y+z)^2 (xyz)^6", unit, ge,
                                         [](double x, double y, double z) {
                                             double l = std::pow((x + z) * (y + z) * (x + y), 3);
                                             double r = 512.0 / 9.0 * sq(x + y + z) * std::pow(x * y * z, 6);
                                             return Sides{l, r, false};
                                         }));
        out.push_back(std::move(e));
    }
    {
        auto e = entry("log-AA-one", "examples", Expected::suspect, fn_log(), unit,
                       "log x is a non-negative A_tA_1-concave function on (0,1)",
                       "(x+z)(y+z)(x+y) >= 8/3 (x+y+z) xyz for 0<x,y,z<1; log is negative on (0,1)");
        e.checks.push_back(class_check(cs(A, A, ONE, cave), e.function));
        e.checks.push_back(theorem_check(TheoremId::AA, ONE, e.function, cave));
        e.checks.push_back(printed_check("(x+z)(y+z)(x+y) vs 8/3 (x+y+z) xyz", unit, ge, [](double x, double y, double z) {
            return Sides{(x + z) * (y + z) * (x + y), 8.0 / 3.0 * (x + y + z) * x * y * z, false};
        }));
        out.push_back(std::move(e));
    }
    // A_tG_h
    {
        auto e = entry("cosh-AG-identity", "examples", Expected::holds, fn_cosh(), Interval::reals(),
                       "cosh is A_tG_t-convex on the reals",
                       "cosh^2 at the three midpoints <= cosh^3((x+y+z)/3) cosh(x)cosh(y)cosh(z)");
        e.checks.push_back(class_check(cs(A, G, I, vex), e.function));
        e.checks.push_back(theorem_check(TheoremId::AG, I, e.function, vex));
        e.checks.push_back(printed_check("log of cosh^2 products vs cosh^3 central times cosh products", Interval::reals(), le,
                                         [](double x, double y, double z) {
                                             double l = 2 * (log_cosh((x + z) / 2) + log_cosh((y + z) / 2) + log_cosh((x + y) / 2));
                                             double r = 3 * log_cosh((x + y + z) / 3) + log_cosh(x) + log_cosh(y) + log_cosh(z);
                                             return Sides{l, r, true};
                                         }));
        out.push_back(std::move(e));
    }
    const Interval asin_dom = Interval::closed(endpoint_shrink, 1.0);
    {
        auto e = entry("arcsin-AG-reciprocal", "examples", Expected::holds, fn_arcsin(), asin_dom,
                       "arcsin is A_tG_{1/t}-concave on [0,1] (shrunk at 0)",
                       "arcsin^3 at the midpoints >= arcsin^2((x+y+z)/3) arcsin^6(x)arcsin^6(y)arcsin^6(z)");
        e.checks.push_back(class_check(cs(A, G, R, cave), e.function));
        e.checks.push_back(theorem_check(TheoremId::AG, R, e.function, cave));
        e.checks.push_back(printed_check("log arcsin^3 products vs arcsin^2 central times arcsin^6 products", asin_dom, ge,
                                         [](double x, double y, double z) {
                                             auto L = [](double v) { return logp(std::asin(v)); };
                                             double l = 3 * (L((x + z) / 2) + L((y + z) / 2) + L((x + y) / 2));
                                             double r = 2 * L((x + y + z) / 3) + 6 * (L(x) + L(y) + L(z));
                                             return Sides{l, r, true};
                                         }));
        out.push_back(std::move(e));
    }
    {
        auto e = entry("arcsin-AG-one", "examples", Expected::suspect, fn_arcsin(), asin_dom,
                       "arcsin is A_tG_1-concave on [0,1]; the printed inequality has no relation symbol",
                       "arcsin at the midpoints [?] arcsin((x+y+z)/3) arcsin(x)arcsin(y)arcsin(z)");
        e.checks.push_back(class_check(cs(A, G, ONE, cave), e.function));
        e.checks.push_back(theorem_check(TheoremId::AG, ONE, e.function, cave));
        for (auto& c : unrelated_printed("log arcsin midpoint product vs central times point product", asin_dom,
                                         [](double x, double y, double z) {
                                             auto L = [](double v) { return logp(std::asin(v)); };
                                             double l = L((x + z) / 2) + L((y + z) / 2) + L((x + y) / 2);
                                             double r = L((x + y + z) / 3) + L(x) + L(y) + L(z);
                                             return Sides{l, r, true};
                                         }))
            e.checks.push_back(std::move(c));
        out.push_back(std::move(e));
    }
    // A_tH_h
    {
        auto e = entry("power-AH-identity", "examples", Expected::holds, fn_power(2.0), ge1,
                       "x^p (p=2) is A_tH_t-concave for x>=1",
                       "2/3 sum ((a+b)/2)^-p <= (x^-p+y^-p+z^-p)/3 + ((x+y+z)/3)^-p for x,y,z>=1");
        e.checks.push_back(class_check(cs(A, H, I, cave), e.function));
        e.checks.push_back(theorem_check(TheoremId::AH, I, e.function, cave));
        e.checks.push_back(printed_check("2/3 sum midpoint^-2 vs sum x^-2/3 + central^-2", ge1, le,
                                         [](double x, double y, double z) {
                                             auto P = [](double v) { return 1.0 / (v * v); };
                                             double l = 2.0 / 3.0 * (P((x + z) / 2) + P((y + z) / 2) + P((x + y) / 2));
                                             double r = (P(x) + P(y) + P(z)) / 3 + P((x + y + z) / 3);
                                             return Sides{l, r, false};
                                         }));
        out.push_back(std::move(e));
    }
    {
        auto e = entry("neg-log-AH-reciprocal", "examples", Expected::suspect, fn_neg_log(), gt1,
                       "-log x is A_tH_{1/t}-convex for x>1 (negative there)",
                       "3/2 sum 1/log(midpoints) <= 3 sum 1/log x + log(xyz)^(1/3) for x,y,z>1");
        e.checks.push_back(class_check(cs(A, H, R, vex), e.function));
        e.checks.push_back(theorem_check(TheoremId::AH, R, e.function, vex));
        e.checks.push_back(printed_check("3/2 sum 1/log(midpoint) vs 3 sum 1/log x + log(xyz)/3", gt1, le,
                                         [](double x, double y, double z) {
                                             double l = 1.5 * (1 / std::log((x + z) / 2) + 1 / std::log((y + z) / 2) +
                                                               1 / std::log((x + y) / 2));
                                             double r = 3 * (1 / std::log(x) + 1 / std::log(y) + 1 / std::log(z)) +
                                                        std::log(x * y * z) / 3;
                                             return Sides{l, r, false};
                                         }));
        out.push_back(std::move(e));
    }
    {
        auto e = entry("neg-log-AH-one", "examples", Expected::suspect, fn_neg_log(), gt1,
                       "-log x is A_tH_1-convex for x>1 (negative there)",
                       "sum 1/log(midpoints) <= sum 1/log x + log(xyz)^(1/3) for x,y,z>1");
        e.checks.push_back(class_check(cs(A, H, ONE, vex), e.function));
        e.checks.push_back(theorem_check(TheoremId::AH, ONE, e.function, vex));
        e.checks.push_back(printed_check("sum 1/log(midpoint) vs sum 1/log x + log(xyz)/3", gt1, le,
                                         [](double x, double y, double z) {
                                             double l = 1 / std::log((x + z) / 2) + 1 / std::log((y + z) / 2) +
                                                        1 / std::log((x + y) / 2);
                                             double r = 1 / std::log(x) + 1 / std::log(y) + 1 / std::log(z) +
                                                        std::log(x * y * z) / 3;
                                             return Sides{l, r, false};
                                         }));
        out.push_back(std::move(e));
    }
    // G_tA_h
    {
        auto e = entry("cosh-GA-identity", "examples", Expected::holds, fn_cosh(), pos,
                       "cosh is G_tA_t-convex on (0,inf)",
                       "2/3 sum cosh(sqrt(ab)) <= cosh(cbrt(xyz)) + sum cosh(x)/3 for x,y,z>0");
        e.checks.push_back(class_check(cs(G, A, I, vex), e.function));
        e.checks.push_back(theorem_check(TheoremId::GA, I, e.function, vex));
        e.checks.push_back(printed_check("2/3 sum cosh(sqrt(ab)) vs cosh(cbrt(xyz)) + sum cosh/3", pos, le,
                                         [](double x, double y, double z) {
                                             double l = 2.0 / 3.0 * cosh_sum_pairs_g(x, y, z);
                                             double r = std::cosh(std::cbrt(x * y * z)) +
                                                        (std::cosh(x) + std::cosh(y) + std::cosh(z)) / 3;
                                             return Sides{l, r, false};
                                         }));
        out.push_back(std::move(e));
    }
    {
        auto e = entry("neg-square-GA-reciprocal", "examples", Expected::suspect, fn_neg_square(), pos,
                       "-x^2 is G_tA_{1/t}-concave on (0,inf) (negative there)",
                       "3/2 (xz+yz+xy) <= cbrt(xyz)^2 + 3(x^2+y^2+z^2) for x,y,z>0");
        e.checks.push_back(class_check(cs(G, A, R, cave), e.function));
        e.checks.push_back(theorem_check(TheoremId::GA, R, e.function, cave));
        e.checks.push_back(printed_check("3/2(xz+yz+xy) vs cbrt(xyz)^2 + 3 sum x^2", pos, le,
                                         [](double x, double y, double z) {
                                             return Sides{1.5 * (x * z + y * z + x * y),
                                                          sq(std::cbrt(x * y * z)) + 3 * (x * x + y * y + z * z), false};
                                         }));
        out.push_back(std::move(e));
    }
    {
        auto e = entry("neg-square-GA-one", "examples", Expected::suspect, fn_neg_square(), pos,
                       "-x^2 is G_tA_1-convex on (0,inf) (negative there; the parent statement says concave)",
                       "xz+yz+xy <= cbrt(xyz)^2 + x^2+y^2+z^2 for x,y,z>0");
        e.checks.push_back(class_check(cs(G, A, ONE, vex), e.function));
        e.checks.push_back(theorem_check(TheoremId::GA, ONE, e.function, cave, false));
        e.checks.push_back(printed_check("xz+yz+xy vs cbrt(xyz)^2 + sum x^2", pos, le, [](double x, double y, double z) {
            return Sides{x * z + y * z + x * y, sq(std::cbrt(x * y * z)) + x * x + y * y + z * z, false};
        }));
        out.push_back(std::move(e));
    }
    {
        auto e = entry("cosh-GA-superadditive-chain", "examples", Expected::holds, fn_cosh(), pos,
                       "cosh is G_tA_t-convex and superadditive on (0,inf)",
                       "2/3 sum cosh(sqrt(ab)) <= cosh(cbrt(xyz)) + sum cosh/3 <= cosh(cbrt(xyz)) + cosh(x+y+z)/3");
        e.checks.push_back(chain_check(ChainId::GA_superadditive, I, e.function));
        e.checks.push_back(printed_check("second link: sum cosh(x)/3 vs cosh(x+y+z)/3", pos, le,
                                         [](double x, double y, double z) {
                                             return Sides{std::cosh(std::cbrt(x * y * z)) +
                                                              (std::cosh(x) + std::cosh(y) + std::cosh(z)) / 3,
                                                          std::cosh(std::cbrt(x * y * z)) + std::cosh(x + y + z) / 3, false};
                                         }));
        out.push_back(std::move(e));
    }
    // G_tG_h
    {
        auto e = entry("cosh-GG-identity", "examples", Expected::holds, fn_cosh(), pos,
                       "cosh is G_tG_t-convex on (0,inf)",
                       "cosh^2 at sqrt(ab) <= cosh^3(cbrt(xyz)) cosh(x)cosh(y)cosh(z) for x,y,z>0");
        e.checks.push_back(class_check(cs(G, G, I, vex), e.function));
        e.checks.push_back(theorem_check(TheoremId::GG, I, e.function, vex));
        e.checks.push_back(printed_check("log cosh^2 products vs cosh^3 central times cosh products", pos, le,
                                         [](double x, double y, double z) {
                                             double l = 2 * (log_cosh(std::sqrt(x * z)) + log_cosh(std::sqrt(y * z)) +
                                                             log_cosh(std::sqrt(x * y)));
                                             double r = 3 * log_cosh(std::cbrt(x * y * z)) + log_cosh(x) + log_cosh(y) + log_cosh(z);
                                             return Sides{l, r, true};
                                         }));
        out.push_back(std::move(e));
    }
    {
        auto e = entry("exp-neg-GG-reciprocal", "examples", Expected::holds, fn_exp_neg(), pos,
                       "exp(-x) is G_tG_{1/t}-concave on (0,inf)",
                       "sqrt(xz)+sqrt(yz)+sqrt(xy) <= 2/3 cbrt(xyz) + 2x+2y+2z for x,y,z>0");
        e.checks.push_back(class_check(cs(G, G, R, cave), e.function));
        e.checks.push_back(theorem_check(TheoremId::GG, R, e.function, cave));
        e.checks.push_back(printed_check("sum sqrt(ab) vs 2/3 cbrt(xyz) + 2 sum x", pos, le, [](double x, double y, double z) {
            return Sides{std::sqrt(x * z) + std::sqrt(y * z) + std::sqrt(x * y),
                         2.0 / 3.0 * std::cbrt(x * y * z) + 2 * (x + y + z), false};
        }));
        out.push_back(std::move(e));
    }
    {
        auto e = entry("exp-neg-GG-one", "examples", Expected::holds, fn_exp_neg(), pos,
                       "exp(-x) is G_tG_1-concave on (0,inf)",
                       "sqrt(xz)+sqrt(yz)+sqrt(xy) <= cbrt(xyz) + x+y+z for x,y,z>0");
        e.checks.push_back(class_check(cs(G, G, ONE, cave), e.function));
        e.checks.push_back(theorem_check(TheoremId::GG, ONE, e.function, cave));
        e.checks.push_back(printed_check("sum sqrt(ab) vs cbrt(xyz) + sum x", pos, le, [](double x, double y, double z) {
            return Sides{std::sqrt(x * z) + std::sqrt(y * z) + std::sqrt(x * y), std::cbrt(x * y * z) + x + y + z, false};
        }));
        // the parent statement prints "<=" for the product form of the concave case
        e.checks.push_back(printed_check("parent product form as stated", pos, le,
                                         [](double x, double y, double z) {
                                             double l = -(std::sqrt(x * z) + std::sqrt(y * z) + std::sqrt(x * y));
                                             double r = -std::cbrt(x * y * z) - (x + y + z);
                                             return Sides{l, r, true};
                                         },
                                         false));
        out.push_back(std::move(e));
    }
    {
        auto e = entry("cosh-GG-supermultiplicative-chain", "examples", Expected::holds, fn_cosh(), ge1,
                       "cosh is G_tG_t-convex and supermultiplicative on [1,inf)",
                       "cosh^2 at sqrt(ab) <= cosh^3(cbrt(xyz)) prod cosh <= cosh^3(cbrt(xyz)) cosh(xyz) for x,y,z>=1");
        e.checks.push_back(chain_check(ChainId::GG_supermultiplicative, I, e.function));
        e.checks.push_back(printed_check("second link in logs: prod cosh vs cosh(xyz)", ge1, le,
                                         [](double x, double y, double z) {
                                             double c = 3 * log_cosh(std::cbrt(x * y * z));
                                             return Sides{c + log_cosh(x) + log_cosh(y) + log_cosh(z), c + log_cosh(x * y * z), true};
                                         }));
        out.push_back(std::move(e));
    }
    // G_tH_h
    {
        auto e = entry("cosh-GH-identity", "examples", Expected::holds, fn_cosh(), ge1,
                       "cosh is G_tH_t-convex for x>=1",
                       "2/3 sum 1/cosh(sqrt(ab)) >= sum 1/cosh(x)/3 + 1/cosh(cbrt(xyz)) for x,y,z>=1");
        e.checks.push_back(class_check(cs(G, H, I, vex), e.function));
        e.checks.push_back(theorem_check(TheoremId::GH, I, e.function, vex));
        e.checks.push_back(printed_check("2/3 sum sech(sqrt(ab)) vs sum sech/3 + sech(cbrt(xyz))", ge1, ge,
                                         [](double x, double y, double z) {
                                             auto S = [](double v) { return 1 / std::cosh(v); };
                                             double l = 2.0 / 3.0 * (S(std::sqrt(x * z)) + S(std::sqrt(y * z)) + S(std::sqrt(x * y)));
                                             double r = (S(x) + S(y) + S(z)) / 3 + S(std::cbrt(x * y * z));
                                             return Sides{l, r, false};
                                         }));
        out.push_back(std::move(e));
    }
    auto inv_log = [](double v) { return 1 / std::log(v); };
    {
        auto e = entry("neg-log-GH-reciprocal", "examples", Expected::suspect, fn_neg_log(), gt1,
                       "-log x is G_tH_{1/t}-convex for x>1 (negative there)",
                       "3/2 sum 1/log(sqrt(ab)) <= 3 sum 1/log x + 1/log(cbrt(xyz)) for x,y,z>1");
        e.checks.push_back(class_check(cs(G, H, R, vex), e.function));
        e.checks.push_back(theorem_check(TheoremId::GH, R, e.function, vex));
        e.checks.push_back(printed_check("3/2 sum 1/log(sqrt(ab)) vs 3 sum 1/log x + 1/log(cbrt(xyz))", gt1, le,
                                         [inv_log](double x, double y, double z) {
                                             double l = 1.5 * (inv_log(std::sqrt(x * z)) + inv_log(std::sqrt(y * z)) +
                                                               inv_log(std::sqrt(x * y)));
                                             double r = 3 * (inv_log(x) + inv_log(y) + inv_log(z)) + inv_log(std::cbrt(x * y * z));
                                             return Sides{l, r, false};
                                         }));
        out.push_back(std::move(e));
    }
    {
        auto e = entry("neg-log-GH-one", "examples", Expected::suspect, fn_neg_log(), gt1,
                       "-log x is G_tH_1-convex for x>1 (negative there)",
                       "sum 1/log(sqrt(ab)) <= sum 1/log x + 1/log(cbrt(xyz)) for x,y,z>1");
        e.checks.push_back(class_check(cs(G, H, ONE, vex), e.function));
        e.checks.push_back(theorem_check(TheoremId::GH, ONE, e.function, vex));
        e.checks.push_back(printed_check("sum 1/log(sqrt(ab)) vs sum 1/log x + 1/log(cbrt(xyz))", gt1, le,
                                         [inv_log](double x, double y, double z) {
                                             double l = inv_log(std::sqrt(x * z)) + inv_log(std::sqrt(y * z)) + inv_log(std::sqrt(x * y));
                                             double r = inv_log(x) + inv_log(y) + inv_log(z) + inv_log(std::cbrt(x * y * z));
                                             return Sides{l, r, false};
                                         }));
        out.push_back(std::move(e));
    }
    // H_tA_h
    {
        auto e = entry("arctan-HA-identity", "examples", Expected::holds, fn_arctan(), pos,
                       "arctan is H_tA_t-convex on (0,inf)",
                       "2/3 sum arctan(2ab/(a+b)) <= arctan(3xyz/(xy+yz+xz)) + sum arctan/3");
        e.checks.push_back(class_check(cs(H, A, I, vex), e.function));
        e.checks.push_back(theorem_check(TheoremId::HA, I, e.function, vex));
        e.checks.push_back(printed_check("2/3 sum arctan(harmonic pairs) vs arctan(center) + sum arctan/3", pos, le,
                                         [](double x, double y, double z) {
                                             double l = 2.0 / 3.0 * (std::atan(hmean2(x, z)) + std::atan(hmean2(y, z)) +
                                                                     std::atan(hmean2(x, y)));
                                             double r = std::atan(hcenter(x, y, z)) + (std::atan(x) + std::atan(y) + std::atan(z)) / 3;
                                             return Sides{l, r, false};
                                         }));
        out.push_back(std::move(e));
    }
    auto hm1 = [](double a, double b) { return a * b / (a + b); };
    auto hc1 = [](double x, double y, double z) { return x * y * z / (x * y + y * z + x * z); };
    {
        auto e = entry("square-HA-reciprocal", "examples", Expected::suspect, fn_square(), neg,
                       "x^2 is H_tA_{1/t}-concave on x<0; the printed constant 1/18 does not follow from the parent form",
                       "sum (ab/(a+b))^2 >= 3/2 (xyz/(xy+yz+xz))^2 + 1/18 (x^2+y^2+z^2) for x,y,z<0");
        e.checks.push_back(class_check(cs(H, A, R, cave), e.function));
        e.checks.push_back(theorem_check(TheoremId::HA, R, e.function, cave));
        e.checks.push_back(printed_check("sum (ab/(a+b))^2 vs 3/2 c^2 + 1/18 sum x^2", neg, ge,
                                         [hm1, hc1](double x, double y, double z) {
                                             double l = sq(hm1(x, z)) + sq(hm1(y, z)) + sq(hm1(x, y));
                                             double r = 1.5 * sq(hc1(x, y, z)) + (x * x + y * y + z * z) / 18;
                                             return Sides{l, r, false};
                                         }));
        e.checks.push_back(printed_check("same with the constant 1/2 implied by the parent form", neg, ge,
                                         [hm1, hc1](double x, double y, double z) {
                                             double l = sq(hm1(x, z)) + sq(hm1(y, z)) + sq(hm1(x, y));
                                             double r = 1.5 * sq(hc1(x, y, z)) + (x * x + y * y + z * z) / 2;
                                             return Sides{l, r, false};
                                         },
                                         false));
        out.push_back(std::move(e));
    }
    {
        auto e = entry("square-HA-one", "examples", Expected::holds, fn_square(), neg,
                       "x^2 is H_tA_1-concave on x<0",
                       "sum (ab/(a+b))^2 >= 9/4 [(x^2+y^2+z^2)/9 + (xyz/(xy+yz+xz))^2] for x,y,z<0");
        e.checks.push_back(class_check(cs(H, A, ONE, cave), e.function));
        e.checks.push_back(theorem_check(TheoremId::HA, ONE, e.function, cave));
        e.checks.push_back(printed_check("sum (ab/(a+b))^2 vs 9/4[sum x^2/9 + c^2]", neg, ge,
                                         [hm1, hc1](double x, double y, double z) {
                                             double l = sq(hm1(x, z)) + sq(hm1(y, z)) + sq(hm1(x, y));
                                             double r = 2.25 * ((x * x + y * y + z * z) / 9 + sq(hc1(x, y, z)));
                                             return Sides{l, r, false};
                                         }));
        out.push_back(std::move(e));
    }
    // H_tG_h
    auto sum_h2 = [](double x, double y, double z) { return hmean2(x, z) + hmean2(y, z) + hmean2(x, y); };
    {
        auto e = entry("exp-HG-identity", "examples", Expected::suspect, fn_exp(), pos,
                       "exp is H_tG_t-convex on (0,inf); the printed last term xyz does not follow from the parent form",
                       "4xz/(x+z)+4yz/(y+z)+4xy/(x+y) <= 9xyz/(xy+yz+xz) + xyz for x,y,z>0");
        e.checks.push_back(class_check(cs(H, G, I, vex), e.function));
        e.checks.push_back(theorem_check(TheoremId::HG, I, e.function, vex));
        e.checks.push_back(printed_check("2 sum 2ab/(a+b) vs 3 center + xyz", pos, le, [sum_h2](double x, double y, double z) {
            return Sides{2 * sum_h2(x, y, z), 3 * hcenter(x, y, z) + x * y * z, false};
        }));
        e.checks.push_back(printed_check("same with x+y+z in place of xyz", pos, le,
                                         [sum_h2](double x, double y, double z) {
                                             return Sides{2 * sum_h2(x, y, z), 3 * hcenter(x, y, z) + x + y + z, false};
                                         },
                                         false));
        out.push_back(std::move(e));
    }
    {
        auto e = entry("exp-neg-HG-reciprocal", "examples", Expected::suspect, fn_exp_neg(), pos,
                       "exp(-x) is H_tG_{1/t}-concave on (0,inf); the printed last term xyz does not follow from the parent form",
                       "xz/(x+z)+yz/(y+z)+xy/(x+y) <= xyz/(xy+yz+xz) + xyz for x,y,z>0");
        e.checks.push_back(class_check(cs(H, G, R, cave), e.function));
        e.checks.push_back(theorem_check(TheoremId::HG, R, e.function, cave));
        e.checks.push_back(printed_check("sum ab/(a+b) vs xyz/(xy+yz+xz) + xyz", pos, le, [hm1, hc1](double x, double y, double z) {
            return Sides{hm1(x, z) + hm1(y, z) + hm1(x, y), hc1(x, y, z) + x * y * z, false};
        }));
        e.checks.push_back(printed_check("same with x+y+z in place of xyz", pos, le,
                                         [hm1, hc1](double x, double y, double z) {
                                             return Sides{hm1(x, z) + hm1(y, z) + hm1(x, y), hc1(x, y, z) + x + y + z, false};
                                         },
                                         false));
        out.push_back(std::move(e));
    }
    {
        auto e = entry("exp-neg-HG-one", "examples", Expected::holds, fn_exp_neg(), pos,
                       "exp(-x) is H_tG_1-concave on (0,inf)",
                       "2xz/(x+z)+2yz/(y+z)+2xy/(x+y) <= 3xyz/(xy+yz+xz) + x+y+z for x,y,z>0");
        e.checks.push_back(class_check(cs(H, G, ONE, cave), e.function));
        e.checks.push_back(theorem_check(TheoremId::HG, ONE, e.function, cave));
        e.checks.push_back(printed_check("sum 2ab/(a+b) vs center + x+y+z", pos, le, [sum_h2](double x, double y, double z) {
            return Sides{sum_h2(x, y, z), hcenter(x, y, z) + x + y + z, false};
        }));
        out.push_back(std::move(e));
    }
    // H_tH_h
    {
        auto e = entry("arctan-HH-identity", "examples", Expected::holds, fn_arctan(), pos,
                       "arctan is H_tH_t-concave on (0,inf)",
                       "2/3 sum 1/arctan(2ab/(a+b)) <= sum 1/arctan(x)/3 + 1/arctan(center) for x,y,z>0");
        e.checks.push_back(class_check(cs(H, H, I, cave), e.function));
        e.checks.push_back(theorem_check(TheoremId::HH, I, e.function, cave));
        e.checks.push_back(printed_check("2/3 sum 1/arctan(harmonic pairs) vs sum 1/arctan/3 + 1/arctan(center)", pos, le,
                                         [](double x, double y, double z) {
                                             auto Q = [](double v) { return 1 / std::atan(v); };
                                             double l = 2.0 / 3.0 * (Q(hmean2(x, z)) + Q(hmean2(y, z)) + Q(hmean2(x, y)));
                                             double r = (Q(x) + Q(y) + Q(z)) / 3 + Q(hcenter(x, y, z));
                                             return Sides{l, r, false};
                                         }));
        out.push_back(std::move(e));
    }
    {
        auto e = entry("neg-log-HH-reciprocal", "examples", Expected::suspect, fn_neg_log(), gt1,
                       "-log x is H_tH_{1/t}-convex for x>1 (negative there)",
                       "3/2 sum 1/log(2ab/(a+b)) <= 3 sum 1/log x + 1/log(center) for x,y,z>1");
        e.checks.push_back(class_check(cs(H, H, R, vex), e.function));
        e.checks.push_back(theorem_check(TheoremId::HH, R, e.function, vex));
        e.checks.push_back(printed_check("3/2 sum 1/log(harmonic pairs) vs 3 sum 1/log x + 1/log(center)", gt1, le,
                                         [inv_log](double x, double y, double z) {
                                             double l = 1.5 * (inv_log(hmean2(x, z)) + inv_log(hmean2(y, z)) + inv_log(hmean2(x, y)));
                                             double r = 3 * (inv_log(x) + inv_log(y) + inv_log(z)) + inv_log(hcenter(x, y, z));
                                             return Sides{l, r, false};
                                         }));
        out.push_back(std::move(e));
    }
    {
        auto e = entry("neg-log-HH-one", "examples", Expected::suspect, fn_neg_log(), pos,
                       "-log x is H_tH_1-convex on (0,inf) (nonpositive for x>=1)",
                       "sum 1/log(2ab/(a+b)) <= sum 1/log x + 1/log(center) for x,y,z>0");
        e.checks.push_back(class_check(cs(H, H, ONE, vex), e.function));
        e.checks.push_back(theorem_check(TheoremId::HH, ONE, e.function, vex));
        e.checks.push_back(printed_check("sum 1/log(harmonic pairs) vs sum 1/log x + 1/log(center)", pos, le,
                                         [inv_log](double x, double y, double z) {
                                             double l = inv_log(hmean2(x, z)) + inv_log(hmean2(y, z)) + inv_log(hmean2(x, y));
                                             double r = inv_log(x) + inv_log(y) + inv_log(z) + inv_log(hcenter(x, y, z));
                                             return Sides{l, r, false};
                                         }));
        out.push_back(std::move(e));
    }

    // equality families of the h = t forms
    for (EqualityFamily fam : all_equality_families) {
        PointFunction f = family_function(fam);
        auto e = entry(std::string("equality-") + to_string(fam), "equality-families", Expected::equality, f, f.domain,
                       std::string("f=") + f.name + " turns the " + to_string(family_theorem(fam)) +
                           " form with h=t into an identity",
                       "both sides of the h=t " + to_string(family_theorem(fam)) + " inequality coincide for f=" + f.name,
                       false);
        e.checks.push_back(equality_check(to_string(fam), f.domain,
                                          [fam](double x, double y, double z) { return equality_sides(fam, x, y, z); }));
        out.push_back(std::move(e));
    }
    // exp claimed as an equality case of the product forms
    for (TheoremId id : {TheoremId::AG, TheoremId::GG}) {
        PointFunction f = fn_exp();
        Interval dom = pos;
        auto e = entry("exp-" + to_string(id) + "-equality", "examples", Expected::suspect, f, dom,
                       "exp gives equality in the h=t " + to_string(id) + " form",
                       "equality claimed for f=e^x, x>0, in the h=t " + to_string(id) + " product inequality");
        PointFunction fd = with_domain(f, dom);
        e.checks.push_back(equality_check("exp " + to_string(id) + " log sides", dom, [id, fd](double x, double y, double z) {
            return popoviciu_sides(id, weight_identity(), fd, x, y, z);
        }));
        e.checks.push_back(theorem_check(id, I, fd, vex, false));
        e.checks.push_back(theorem_check(id, I, fd, cave, false));
        out.push_back(std::move(e));
    }

    // classical statements
    {
        auto e = entry("classical-popoviciu-identity", "classical", Expected::equality, fn_identity(), Interval::reals(),
                       "f(x)=x gives equality in the classical Popoviciu inequality",
                       "2/3 sum f(midpoints) = f((x+y+z)/3) + sum f/3 for f(x)=x", false);
        e.checks.push_back(equality_check("classical form, f(x)=x", Interval::reals(), [](double x, double y, double z) {
            double l = 2.0 / 3.0 * ((x + z) / 2 + (y + z) / 2 + (x + y) / 2);
            double r = (x + y + z) / 3 + (x + y + z) / 3;
            return Sides{l, r, false};
        }));
        out.push_back(std::move(e));
    }
    {
        auto e = entry("classical-popoviciu-square", "classical", Expected::holds, fn_square(), Interval::reals(),
                       "a convex f satisfies the classical Popoviciu inequality (f=x^2)",
                       "2/3 sum f(midpoints) <= f((x+y+z)/3) + sum f/3 for convex f", false);
        e.checks.push_back(theorem_check(TheoremId::AA, I, e.function, vex));
        e.checks.push_back(theorem_check(TheoremId::AA, I, e.function, cave, false));
        out.push_back(std::move(e));
    }
    for (auto h : {I, weight_power(2.0), weight_power(0.5)}) {
        auto e = entry("am-gm-hm-" + h.name, "classical", Expected::holds, fn_identity(), pos,
                       "H_h <= G_h <= A_h for positive increasing h (h=" + h.name + ")",
                       "generalized chain H_h(a,b) <= G_h(a,b) <= A_h(a,b) claimed for h positive increasing", false);
        e.checks.push_back(make_check("chain H_h <= G_h <= A_h", true,
                                      [h](const SamplePlan& plan, double tol, const std::string& l, bool p) {
                                          Interval r = sampling_region(Interval::positive(), plan);
                                          MarginTally t;
                                          for_each_xyt(r, plan, [&](double a, double b, double tt) {
                                              ChainVerdict v = check_am_gm_hm(h, tt, a, b, tol);
                                              Witness w;
                                              w.x = a;
                                              w.y = b;
                                              w.t = tt;
                                              bool first = v.margin_hg <= v.margin_ga;
                                              w.lhs = first ? v.harmonic : v.geometric;
                                              w.rhs = first ? v.geometric : v.arithmetic;
                                              t.add(v.holds ? std::min(v.margin_hg, v.margin_ga)
                                                            : -std::max(1.0, std::fabs(w.lhs)),
                                                    w, tol, plan.max_witnesses);
                                          });
                                          return std::vector<CheckOutcome>{from_tally(l, p, t)};
                                      }));
        out.push_back(std::move(e));
    }
    {
        auto e = entry("hlawka", "classical", Expected::holds, fn_identity(), Interval::reals(),
                       "|x|+|y|+|z|+|x+y+z| >= |x+z|+|z+y|+|x+y| for all reals",
                       "Hlawka's inequality for real numbers", false);
        e.checks.push_back(make_check("Hlawka on [-100,100]^3", true,
                                      [](const SamplePlan& plan, double tol, const std::string& l, bool p) {
                                          SamplePlan hp = plan;
                                          hp.box = Interval::closed(-100.0, 100.0);
                                          MarginTally t;
                                          for_each_triple(hp.box, hp, [&](double x, double y, double z) {
                                              HlawkaResult h = hlawka_check(x, y, z);
                                              Witness w;
                                              w.x = x;
                                              w.y = y;
                                              w.z = z;
                                              w.lhs = h.lhs;
                                              w.rhs = h.rhs;
                                              t.add(h.margin, w, tol, plan.max_witnesses);
                                          });
                                          return std::vector<CheckOutcome>{from_tally(l, p, t)};
                                      }));
        out.push_back(std::move(e));
    }
    struct Row {
        const char* id;
        AdditivityTag tag;
        std::vector<double> ks;
        const char* text;
    };
    for (const Row& row : {Row{"power-table-additive", AdditivityTag::additive, {1.0}, "additive if k=1"},
                           Row{"power-table-subadditive", AdditivityTag::subadditive, {-2.0, -1.0, 0.5},
                               "subadditive if k in (-inf,-1] or [0,1)"},
                           Row{"power-table-superadditive", AdditivityTag::superadditive, {-0.5, 2.0},
                               "superadditive if k in (-1,0) or (1,inf)"}}) {
        auto e = entry(row.id, "classical", Expected::holds, fn_identity(), unit,
                       std::string("x^k on (0,1) is ") + row.text, std::string("x^k table: ") + row.text, false);
        for (double k : row.ks) {
            AdditivityTag want = row.tag;
            e.checks.push_back(make_check("x^" + fmt_param(k) + " is " + to_string(want), true,
                                          [k, want](const SamplePlan& plan, double tol, const std::string& l, bool p) {
                                              SamplePlan up = plan;
                                              up.box = Interval::open(0.0, 1.0);
                                              AdditivityClass c = classify_additivity(
                                                  [k](double t) { return std::pow(t, k); }, Interval::open(0.0, 1.0), up, tol);
                                              CheckOutcome o;
                                              o.label = l;
                                              o.primary = p;
                                              o.samples = c.samples;
                                              o.state = c.tag == want ? CheckState::holds : CheckState::refuted;
                                              o.message = std::string("sampled: ") + to_string(c.tag);
                                              auto wp = c.tag == want ? std::nullopt
                                                        : (want == AdditivityTag::superadditive || want == AdditivityTag::additive)
                                                            ? c.below_witness
                                                            : c.above_witness;
                                              if (wp) {
                                                  Witness w;
                                                  w.x = wp->first;
                                                  w.y = wp->second;
                                                  w.lhs = std::pow(wp->first + wp->second, k);
                                                  w.rhs = std::pow(wp->first, k) + std::pow(wp->second, k);
                                                  o.witness = w;
                                              }
                                              return std::vector<CheckOutcome>{o};
                                          }));
        }
        out.push_back(std::move(e));
    }
    for (bool recip : {true, false}) {
        WeightFunction h = recip ? R : ONE;
        auto e = entry(std::string("nonexistence-") + (recip ? "reciprocal" : "one"), "classical", Expected::holds,
                       fn_constant(2.0), Interval::reals(),
                       "no positive f is M_tA_" + h.name + "-concave or M_tH_" + h.name + "-convex" +
                           (recip ? "; none with f>1 is M_tG_{1/t}-concave" : ""),
                       "setting y=x in the defining inequality contradicts f(x)>0 for h=" + h.name);
        e.checks.push_back(make_check("diagonal refutations", true,
                                      [h, recip](const SamplePlan&, double, const std::string& l, bool p) {
                                          PointFunction f = fn_constant(2.0);
                                          std::size_t n = 0, refuted = 0;
                                          std::optional<Witness> miss;
                                          for (MeanKind m : {MeanKind::Arithmetic, MeanKind::Geometric, MeanKind::Harmonic}) {
                                              std::vector<ConvexitySpec> specs{{m, MeanKind::Arithmetic, h, Sense::concave},
                                                                               {m, MeanKind::Harmonic, h, Sense::convex}};
                                              if (recip) specs.push_back({m, MeanKind::Geometric, h, Sense::concave});
                                              for (const auto& s : specs)
                                                  for (double t : {0.1, 0.25, 0.5, 0.75, 0.9}) {
                                                      DiagonalRefutation d = diagonal_refute(s, f, 5.0, t);
                                                      ++n;
                                                      if (d.refuted) ++refuted;
                                                      else if (!miss) {
                                                          Witness w;
                                                          w.x = 5.0;
                                                          w.t = t;
                                                          w.lhs = d.lhs;
                                                          w.rhs = d.rhs;
                                                          miss = w;
                                                      }
                                                  }
                                          }
                                          CheckOutcome o;
                                          o.label = l;
                                          o.primary = p;
                                          o.samples = n;
                                          o.state = refuted == n ? CheckState::holds : CheckState::refuted;
                                          o.witness = miss;
                                          o.message = std::to_string(refuted) + " of " + std::to_string(n) + " refuted";
                                          return std::vector<CheckOutcome>{o};
                                      }));
        out.push_back(std::move(e));
    }
    struct Ord {
        const char* id;
        PointFunction f;
        Interval dom;
        MeanKind val;
    };
    for (const Ord& o : {Ord{"ordering-square-AA", fn_square(), Interval::reals(), A},
                         Ord{"ordering-exp-AG", fn_exp(), Interval::open(0.0, 5.0), G},
                         Ord{"ordering-reciprocal-AH", fn_reciprocal(), pos, H}}) {
        PointFunction f = with_domain(o.f, o.dom);
        MeanKind val = o.val;
        auto e = entry(o.id, "classical", Expected::holds, f, o.dom,
                       std::string("A_t") + mean_letter(val) + "_t-convexity implies A_t" + mean_letter(val) +
                           "_h-convexity when h(t) >= t (h=t^0.5)",
                       "class ordering: M_tN_t-convex and h(t) >= t give M_tN_h-convex", false);
        e.checks.push_back(make_check("ordering with h=t^0.5", true,
                                      [f, val](const SamplePlan& plan, double tol, const std::string& l, bool p) {
                                          OrderingReport r = class_ordering_check(f, MeanKind::Arithmetic, val,
                                                                                  weight_power(0.5), plan, tol);
                                          CheckOutcome c;
                                          c.label = l;
                                          c.primary = p;
                                          c.samples = r.samples;
                                          c.skipped = r.skipped;
                                          c.state = r.holds() ? CheckState::holds : CheckState::refuted;
                                          c.witness = r.witness;
                                          c.message = std::to_string(r.failures) + " failures among " +
                                                      std::to_string(r.premise_held) + " samples where the premise held";
                                          return std::vector<CheckOutcome>{c};
                                      }));
        out.push_back(std::move(e));
    }
    return out;
}

namespace cat {

inline std::optional<Witness> positivity_hole(const CatalogEntry& e, const SamplePlan& plan) {
    Interval r;
    try {
        r = sampling_region(e.stated_domain, plan);
    } catch (const std::exception&) {
        return std::nullopt;
    }
    for (double x : axis_grid(r, 1025)) {
        double v;
        try {
            v = e.function.at(x);
        } catch (const std::exception&) {
            continue;
        }
        if (!(v > 0.0)) {
            Witness w;
            w.x = x;
            w.lhs = v;
            w.rhs = 0.0;
            return w;
        }
    }
    return std::nullopt;
}

} // namespace cat

inline AuditFinding audit_entry(const CatalogEntry& e, const SamplePlan& plan, double tol) {
    AuditFinding f;
    f.entry = e.id;
    f.group = e.group;
    f.expected = e.expected;
    for (const auto& c : e.checks)
        for (auto& o : c.run(plan, tol)) f.checks.push_back(std::move(o));
    bool refuted = false, errored = false;
    for (const auto& o : f.checks) {
        if (!o.primary) continue;
        if (!std::isnan(o.min_margin) && (std::isnan(f.min_margin) || o.min_margin < f.min_margin))
            f.min_margin = o.min_margin;
        if (o.state == CheckState::refuted) {
            if (!refuted) f.note = o.label;
            refuted = true;
            if (!f.witness) f.witness = o.witness; // hypothesis checks carry none
        }
        if (o.state == CheckState::error) errored = true;
    }
    std::optional<Witness> hole;
    if (e.requires_positive) hole = cat::positivity_hole(e, plan);
    if (hole) {
        f.verdict = FindingVerdict::domain_violation;
        f.witness = hole;
        f.note = "f(x) <= 0 inside the stated domain";
    } else if (refuted) {
        f.verdict = FindingVerdict::refuted;
    } else if (errored) {
        f.verdict = FindingVerdict::inconclusive;
        for (const auto& o : f.checks)
            if (o.primary && o.state == CheckState::error) {
                f.note = o.label + ": " + o.message;
                break;
            }
    } else {
        f.verdict = FindingVerdict::confirmed;
    }
    return f;
}

inline bool entry_selected(const CatalogEntry& e, const std::string& only) {
    if (only.empty() || only == "all") return true;
    if (only == "suspect") return e.expected == Expected::suspect;
    return e.group == only || e.id == only;
}

inline std::vector<AuditFinding> run_audit(const SamplePlan& plan = {}, double tol = default_tol,
                                           const std::string& only = "") {
    std::vector<AuditFinding> out;
    for (const auto& e : builtin_claims())
        if (entry_selected(e, only)) out.push_back(audit_entry(e, plan, tol));
    return out;
}

} // namespace meanconvex
