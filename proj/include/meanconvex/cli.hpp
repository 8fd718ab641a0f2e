#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "catalog.hpp"
#include "convexity.hpp"
#include "functions.hpp"
#include "means.hpp"
#include "popoviciu.hpp"
#include "report.hpp"
#include "sampling.hpp"
#include "weights.hpp"

namespace meanconvex {

struct RunConfig {
    std::string command;
    std::string theorem;
    std::string mean_class; // "XY": argument mean X, value mean Y
    bool hlawka_reversed = false;
    std::string f;
    std::string h = "identity";
    std::string sense = "convex";
    std::string domain; // "lo,hi"
    std::string only;
    int grid = 33;
    int grid_t = 17;
    int random = 10000;
    std::uint64_t seed = 42;
    double tol = default_tol;
    long budget = 100000;
    double a = 1.0, b = 1.0, t = 0.5;
    std::string format = "text";
    std::string output;
    std::string json_path;
    std::string csv_path;

    SamplePlan plan() const {
        SamplePlan p;
        p.grid_points = grid;
        p.grid_t = grid_t;
        p.random_samples = random;
        p.seed = seed;
        if (!domain.empty()) {
            auto comma = domain.find(',');
            if (comma == std::string::npos) throw domain_error("--domain expects lo,hi");
            double lo, hi;
            try {
                lo = std::stod(domain.substr(0, comma));
                hi = std::stod(domain.substr(comma + 1));
            } catch (const std::exception&) {
                throw domain_error("--domain expects lo,hi, got '" + domain + "'");
            }
            if (!(lo < hi)) throw domain_error("--domain needs lo < hi");
            p.box = Interval::closed(lo, hi);
        }
        return p;
    }
};

struct CommandResult {
    int exit_code = 0;
    Json json;
    std::string text;
    std::vector<Witness> rows; // csv
};

namespace cli_detail {

inline Json config_json(const RunConfig& c) {
    Json j;
    j["command"] = c.command;
    if (c.command == "verify" || c.command == "search") {
        if (!c.theorem.empty()) j["theorem"] = c.theorem;
        if (!c.mean_class.empty()) j["class"] = c.mean_class;
        if (c.hlawka_reversed) j["hlawka_reversed"] = true;
        if (!c.hlawka_reversed) {
            j["f"] = c.f;
            j["h"] = c.h;
            j["sense"] = c.sense;
        }
        if (c.command == "search") j["budget"] = c.budget;
    } else if (c.command == "audit") {
        j["only"] = c.only.empty() ? "all" : c.only;
    } else if (c.command == "classify") {
        j["f"] = c.f.empty() ? Json(nullptr) : Json(c.f);
        j["h"] = c.h;
    } else if (c.command == "means") {
        j["a"] = c.a;
        j["b"] = c.b;
        j["t"] = c.t;
        j["h"] = c.h;
    }
    SamplePlan p;
    try {
        p = c.plan();
    } catch (const std::exception&) {
    }
    j["plan"] = plan_json(p, c.tol);
    return j;
}

inline Json base_report(const RunConfig& c) {
    Json j;
    j["schema_version"] = 1;
    j["config"] = config_json(c);
    return j;
}

inline void fill_common(Json& j, const char* verdict, double min_margin, const std::vector<Witness>& ws,
                        std::size_t skipped, std::size_t samples) {
    j["verdict"] = verdict;
    j["min_margin"] = num(min_margin);
    j["witnesses"] = witnesses_json(ws);
    j["skipped"] = skipped;
    j["samples"] = samples;
}

inline std::string fmt_witness(const Witness& w) {
    std::ostringstream o;
    o << "x=" << fmt17(w.x) << " y=" << fmt17(w.y);
    if (!std::isnan(w.z)) o << " z=" << fmt17(w.z);
    if (!std::isnan(w.t)) o << " t=" << fmt17(w.t);
    o << "  lhs=" << fmt17(w.lhs) << " rhs=" << fmt17(w.rhs);
    return o.str();
}

inline ConvexitySpec parse_class(const std::string& s, const WeightFunction& h, Sense sense) {
    if (s.size() != 2) throw domain_error("class must be two mean letters, e.g. AG");
    return {mean_from_letter(s[0]), mean_from_letter(s[1]), h, sense};
}

inline CommandResult cmd_verify(const RunConfig& c) {
    if (c.theorem.empty() == c.mean_class.empty()) throw domain_error("verify needs exactly one of --theorem or --class");
    if (c.f.empty()) throw domain_error("verify needs --f");
    SamplePlan plan = c.plan();
    PointFunction f = parse_function(c.f);
    WeightFunction h = parse_weight(c.h);
    Sense sense = parse_sense(c.sense);
    CommandResult r;
    r.json = base_report(c);
    std::ostringstream text;
    bool holds;
    if (!c.theorem.empty()) {
        TheoremId id = parse_theorem(c.theorem);
        PopoviciuReport rep = verify_theorem(id, h, f, sense, plan, c.tol);
        holds = rep.status() == Status::holds;
        fill_common(r.json, holds ? "holds" : "refuted", rep.min_margin, rep.witnesses, rep.skipped, rep.triples_tested);
        Json d;
        d["relation"] = to_string(rep.relation);
        d["max_abs_residual_at_equality"] = num(rep.max_abs_residual_at_equality);
        d["h_class"] = rep.h_class ? Json(to_string(rep.h_class->tag)) : Json(nullptr);
        d["h_hypothesis_ok"] = rep.h_hypothesis_ok;
        r.json["details"] = d;
        r.rows = rep.witnesses;
        text << "theorem " << to_string(id) << "  h=" << h.name << "  f=" << f.name << "  " << to_string(sense) << " ("
             << to_string(rep.relation) << ")\n";
        text << (holds ? "holds-on-samples" : "refuted") << "  triples=" << rep.triples_tested
             << " skipped=" << rep.skipped << " min_margin=" << fmt17(rep.min_margin) << "\n";
        if (rep.h_class && !rep.h_hypothesis_ok)
            text << "note: h is " << to_string(rep.h_class->tag) << " on (0,1); the theorem assumes otherwise\n";
        for (const auto& w : rep.witnesses) text << "  witness " << fmt_witness(w) << "\n";
    } else {
        ConvexitySpec spec = parse_class(c.mean_class, h, sense);
        Verdict v = verify_class(spec, f, plan, c.tol);
        holds = v.status == Status::holds;
        fill_common(r.json, holds ? "holds" : "refuted", v.min_margin, v.witnesses, v.skipped, v.samples_tested);
        r.rows = v.witnesses;
        text << "class " << spec.label() << "  f=" << f.name << "\n";
        text << to_string(v.status) << "  samples=" << v.samples_tested << " skipped=" << v.skipped
             << " min_margin=" << fmt17(v.min_margin) << "\n";
        for (const auto& w : v.witnesses) text << "  witness " << fmt_witness(w) << "\n";
    }
    r.text = text.str();
    r.exit_code = holds ? 0 : 1;
    return r;
}

inline CommandResult cmd_audit(const RunConfig& c) {
    SamplePlan plan = c.plan();
    if (!c.only.empty() && c.only != "all") {
        bool any = false;
        for (const auto& e : builtin_claims()) any = any || entry_selected(e, c.only);
        if (!any) throw domain_error("--only '" + c.only + "' matches no catalog entry");
    }
    auto findings = run_audit(plan, c.tol, c.only);
    CommandResult r;
    r.json = base_report(c);
    std::map<std::string, int> counts{{"confirmed", 0}, {"refuted-on-samples", 0}, {"domain-violation", 0}, {"inconclusive", 0}};
    std::vector<Witness> ws;
    std::size_t samples = 0, skipped = 0;
    double mn = std::numeric_limits<double>::quiet_NaN();
    Json arr = Json::array();
    std::ostringstream text;
    for (const auto& f : findings) {
        ++counts[to_string(f.verdict)];
        if (f.witness) ws.push_back(*f.witness);
        for (const auto& o : f.checks) {
            samples += o.samples;
            skipped += o.skipped;
        }
        if (!std::isnan(f.min_margin) && (std::isnan(mn) || f.min_margin < mn)) mn = f.min_margin;
        arr.push_back(finding_json(f));
        char line[256];
        std::snprintf(line, sizeof line, "%-36s %-9s %-19s", f.entry.c_str(), to_string(f.expected), to_string(f.verdict));
        text << line;
        if (!f.note.empty()) text << " " << f.note;
        text << "\n";
    }
    bool clean = counts["refuted-on-samples"] == 0 && counts["domain-violation"] == 0;
    fill_common(r.json, clean ? "holds" : "refuted", mn, ws, skipped, samples);
    Json summary;
    summary["entries"] = findings.size();
    for (const char* k : {"confirmed", "refuted-on-samples", "domain-violation", "inconclusive"}) summary[k] = counts[k];
    r.json["summary"] = summary;
    r.json["findings"] = std::move(arr);
    text << "\n" << findings.size() << " entries: " << counts["confirmed"] << " confirmed, "
         << counts["refuted-on-samples"] << " refuted-on-samples, " << counts["domain-violation"]
         << " domain-violation, " << counts["inconclusive"] << " inconclusive\n";
    r.text = text.str();
    r.rows = ws;
    r.exit_code = 0;
    return r;
}

// A point is (p0,p1,p2); for class claims p2 is t and is not shrunk.
struct SearchProblem {
    Interval axes[3];
    bool shrink[3] = {true, true, true};
    double anchor[3] = {0, 0, 0};
    std::function<std::optional<Witness>(const double*)> eval; // lhs/rhs filled, nullopt if unusable
    std::function<double(const Witness&)> margin;
};

inline CommandResult cmd_search(const RunConfig& c) {
    int selectors = !c.theorem.empty() + !c.mean_class.empty() + c.hlawka_reversed;
    if (selectors != 1) throw domain_error("search needs exactly one of --theorem, --class, --hlawka-reversed");
    SamplePlan plan = c.plan();
    SearchProblem sp;
    std::string what;
    if (c.hlawka_reversed) {
        for (auto& a : sp.axes) a = plan.box;
        sp.eval = [](const double* p) -> std::optional<Witness> {
            HlawkaResult h = hlawka_check(p[0], p[1], p[2]);
            Witness w;
            w.x = p[0];
            w.y = p[1];
            w.z = p[2];
            w.lhs = h.lhs;
            w.rhs = h.rhs;
            return w;
        };
        sp.margin = [](const Witness& w) { return w.rhs - w.lhs; };
        what = "Hlawka reversed (lhs <= rhs)";
    } else {
        if (c.f.empty()) throw domain_error("search needs --f");
        PointFunction f = parse_function(c.f);
        WeightFunction h = parse_weight(c.h);
        Sense sense = parse_sense(c.sense);
        Interval r = sampling_region(f.domain, plan);
        for (auto& a : sp.axes) a = r;
        if (!c.theorem.empty()) {
            TheoremId id = parse_theorem(c.theorem);
            Relation rel = theorem_relation(id, sense);
            sp.eval = [id, h, f](const double* p) -> std::optional<Witness> {
                try {
                    Sides s = popoviciu_sides(id, h, f, p[0], p[1], p[2]);
                    Witness w;
                    w.x = p[0];
                    w.y = p[1];
                    w.z = p[2];
                    w.lhs = s.lhs;
                    w.rhs = s.rhs;
                    return w;
                } catch (const std::exception&) {
                    return std::nullopt;
                }
            };
            sp.margin = [rel](const Witness& w) { return relation_margin(rel, w.lhs, w.rhs); };
            what = "theorem " + to_string(id) + " " + to_string(sense);
        } else {
            ConvexitySpec spec = parse_class(c.mean_class, h, sense);
            sp.axes[2] = Interval::closed(plan.t_clip, 1.0 - plan.t_clip);
            sp.shrink[2] = false;
            sp.eval = [spec, f](const double* p) -> std::optional<Witness> {
                try {
                    Gap g = defining_gap(spec, f, p[0], p[1], p[2]);
                    Witness w;
                    w.x = p[0];
                    w.y = p[1];
                    w.t = p[2];
                    w.lhs = g.lhs;
                    w.rhs = g.rhs;
                    return w;
                } catch (const std::exception&) {
                    return std::nullopt;
                }
            };
            Sense s = sense;
            sp.margin = [s](const Witness& w) { return oriented_margin(s, w.lhs, w.rhs); };
            what = "class " + spec.label();
        }
    }
    for (int i = 0; i < 3; ++i) {
        const Interval& a = sp.axes[i];
        sp.anchor[i] = std::clamp(0.0, a.inner_lo(), a.inner_hi());
    }

    long evals = 0;
    std::size_t skipped = 0;
    auto bad = [&](const double* p, Witness* out) {
        ++evals;
        auto w = sp.eval(p);
        if (!w || !std::isfinite(w->lhs) || !std::isfinite(w->rhs)) {
            ++skipped;
            return false;
        }
        if (!violates(sp.margin(*w), w->lhs, w->rhs, c.tol)) return false;
        if (out) *out = *w;
        return true;
    };

    Rng rng(plan.seed);
    std::optional<Witness> first;
    double cur[3];
    while (evals < c.budget && !first) {
        double p[3];
        for (int i = 0; i < 3; ++i) p[i] = rng.uniform(sp.axes[i].inner_lo(), sp.axes[i].inner_hi());
        Witness w;
        if (bad(p, &w)) {
            first = w;
            std::copy(p, p + 3, cur);
        }
    }

    std::optional<Witness> best = first;
    if (first) {
        auto size = [&](const double* p) {
            double s = 0;
            for (int i = 0; i < 3; ++i)
                if (sp.shrink[i]) s = std::max(s, std::fabs(p[i] - sp.anchor[i]));
            return s;
        };
        // bisect lambda in [0,1] along anchor + lambda (cur - anchor), restricted to the axes in mask
        auto bisect = [&](const bool* mask) {
            double lo = 0.0, hi = 1.0, trial[3];
            auto at = [&](double lam) {
                for (int i = 0; i < 3; ++i) trial[i] = mask[i] ? sp.anchor[i] + lam * (cur[i] - sp.anchor[i]) : cur[i];
            };
            Witness w;
            at(0.0);
            if (bad(trial, &w)) {
                std::copy(trial, trial + 3, cur);
                best = w;
                return;
            }
            for (int k = 0; k < 48 && evals < c.budget; ++k) {
                double mid = 0.5 * (lo + hi);
                at(mid);
                if (bad(trial, &w)) {
                    hi = mid;
                    best = w;
                } else {
                    lo = mid;
                }
            }
            at(hi);
            std::copy(trial, trial + 3, cur);
        };
        for (int pass = 0; pass < 50 && evals < c.budget; ++pass) {
            double before = size(cur);
            bool all[3] = {sp.shrink[0], sp.shrink[1], sp.shrink[2]};
            bisect(all);
            for (int i = 0; i < 3; ++i) {
                if (!sp.shrink[i]) continue;
                bool one[3] = {false, false, false};
                one[i] = true;
                bisect(one);
            }
            if (!(size(cur) < before * (1.0 - 1e-12))) break;
        }
    }

    CommandResult r;
    r.json = base_report(c);
    std::vector<Witness> ws;
    if (best) ws.push_back(*best);
    if (first) ws.push_back(*first);
    fill_common(r.json, best ? "refuted" : "holds", best ? sp.margin(*best) : std::numeric_limits<double>::quiet_NaN(), ws,
                skipped, static_cast<std::size_t>(evals));
    r.json["found"] = best.has_value();
    r.json["evaluations"] = evals;
    r.rows = ws;
    std::ostringstream text;
    text << "search " << what << "\n";
    if (best) {
        text << "witness found after " << evals << " evaluations\n";
        text << "  shrunk   " << fmt_witness(*best) << "\n";
        text << "  original " << fmt_witness(*first) << "\n";
    } else {
        text << "no witness in " << evals << " evaluations (inconclusive, not a proof)\n";
    }
    r.text = text.str();
    r.exit_code = best ? 0 : 1;
    return r;
}

inline Json class_json(const AdditivityClass& a, bool multiplicative) {
    Json j;
    j["tag"] = multiplicative ? multiplicative_name(a.tag) : to_string(a.tag);
    j["samples"] = a.samples;
    auto pair = [](const std::optional<std::pair<double, double>>& p) {
        return p ? Json::array({num(p->first), num(p->second)}) : Json(nullptr);
    };
    j["above_witness"] = pair(a.above_witness);
    j["below_witness"] = pair(a.below_witness);
    return j;
}

inline CommandResult cmd_classify(const RunConfig& c) {
    SamplePlan plan = c.plan();
    WeightFunction h = parse_weight(c.h);
    CommandResult r;
    r.json = base_report(c);
    std::ostringstream text;
    std::size_t samples = 0, skipped = 0;
    if (c.f.empty()) {
        SamplePlan up = plan;
        up.box = Interval::open(0.0, 1.0);
        AdditivityClass a = classify_additivity([&h](double t) { return h(t); }, Interval::open(0.0, 1.0), up, c.tol);
        samples = a.samples;
        Json w;
        w["additivity"] = class_json(a, false);
        if (h.family == WeightFamily::power || h.family == WeightFamily::identity) {
            double k = h.family == WeightFamily::identity ? 1.0 : h.exponent;
            w["power_class"] = to_string(power_weight_class(k).tag);
            w["tabulated_class"] = to_string(tabulated_power_class(k).tag);
        }
        fill_common(r.json, "holds", std::numeric_limits<double>::quiet_NaN(), {}, 0, samples);
        r.json["weight"] = w;
        text << "h=" << h.name << " on (0,1): " << to_string(a.tag) << " (" << a.samples << " pairs)\n";
        r.text = text.str();
        return r;
    }
    PointFunction f = parse_function(c.f);
    Interval region = sampling_region(f.domain, plan);
    auto g = [&f](double x) { return f.at(f.admit(x)); };
    Json fj;
    text << "f=" << f.name << " on " << region.str() << "\n";
    for (bool mult : {false, true}) {
        const char* key = mult ? "multiplicativity" : "additivity";
        try {
            AdditivityClass a = mult ? classify_multiplicativity(g, region, plan, c.tol) : classify_additivity(g, region, plan, c.tol);
            fj[key] = class_json(a, mult);
            text << key << ": " << (mult ? multiplicative_name(a.tag) : to_string(a.tag)) << "\n";
        } catch (const std::exception& e) {
            fj[key] = Json{{"error", e.what()}};
            text << key << ": error (" << e.what() << ")\n";
        }
    }
    const MeanKind kinds[3] = {MeanKind::Arithmetic, MeanKind::Geometric, MeanKind::Harmonic};
    Json matrix;
    text << "h=" << h.name << "     A            G            H\n";
    for (MeanKind am : kinds) {
        text << "  " << mean_letter(am) << "_t ";
        for (MeanKind vm : kinds) {
            std::string cell;
            try {
                // geometric and harmonic argument means live on positive reals
                PointFunction fa = am == MeanKind::Arithmetic ? f : with_domain(f, f.domain.intersect(Interval::positive()));
                Verdict vx = verify_class({am, vm, h, Sense::convex}, fa, plan, c.tol);
                Verdict vc = verify_class({am, vm, h, Sense::concave}, fa, plan, c.tol);
                samples += vx.samples_tested + vc.samples_tested;
                skipped += vx.skipped + vc.skipped;
                bool cx = vx.status == Status::holds, cc = vc.status == Status::holds;
                cell = cx && cc ? "equality" : cx ? "convex" : cc ? "concave" : "neither";
            } catch (const std::exception&) {
                cell = "error";
            }
            std::string key{mean_letter(am), mean_letter(vm)};
            matrix[key] = cell;
            char buf[16];
            std::snprintf(buf, sizeof buf, " %-12s", cell.c_str());
            text << buf;
        }
        text << "\n";
    }
    fj["matrix"] = matrix;
    fill_common(r.json, "holds", std::numeric_limits<double>::quiet_NaN(), {}, skipped, samples);
    r.json["function"] = fj;
    r.text = text.str();
    return r;
}

inline CommandResult cmd_means(const RunConfig& c) {
    WeightFunction h = parse_weight(c.h);
    if (!(c.t > 0.0 && c.t < 1.0)) throw domain_error("--t must lie in (0,1)");
    ChainVerdict v = check_am_gm_hm(h, c.t, c.a, c.b, c.tol);
    CommandResult r;
    r.json = base_report(c);
    Witness w;
    w.x = c.a;
    w.y = c.b;
    w.t = c.t;
    bool first_bad = violates(v.margin_hg, v.geometric, v.harmonic, c.tol);
    w.lhs = first_bad ? v.harmonic : v.geometric;
    w.rhs = first_bad ? v.geometric : v.arithmetic;
    std::vector<Witness> ws;
    if (!v.holds) ws.push_back(w);
    fill_common(r.json, v.holds ? "holds" : "refuted", std::min(v.margin_hg, v.margin_ga), ws, 0, 1);
    Json m;
    m["harmonic"] = num(v.harmonic);
    m["geometric"] = num(v.geometric);
    m["arithmetic"] = num(v.arithmetic);
    m["margin_hg"] = num(v.margin_hg);
    m["margin_ga"] = num(v.margin_ga);
    r.json["means"] = m;
    r.rows = ws;
    std::ostringstream text;
    text << "H_h=" << fmt17(v.harmonic) << "  G_h=" << fmt17(v.geometric) << "  A_h=" << fmt17(v.arithmetic) << "\n"
         << "H_h <= G_h <= A_h: " << (v.holds ? "holds" : "fails") << "\n";
    r.text = text.str();
    r.exit_code = v.holds ? 0 : 1;
    return r;
}

inline std::string render(const CommandResult& r, const std::string& format) {
    if (format == "json") return dump_json(r.json);
    if (format == "csv") return witnesses_csv(r.rows);
    return r.text;
}

inline bool write_file(const std::string& path, const std::string& body, std::ostream& err) {
    std::ofstream o(path, std::ios::binary);
    if (!o) {
        err << "error: cannot open " << path << " for writing\n";
        return false;
    }
    o << body;
    if (!o) {
        err << "error: write to " << path << " failed\n";
        return false;
    }
    return true;
}

} // namespace cli_detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"meanconvex: numerical checks for h-MN-convexity and Popoviciu-type inequalities"};
    app.set_help_flag("--help", "print help"); // -h would collide with --h
    app.require_subcommand(1);
    RunConfig c;

    auto common = [&c](CLI::App* s) {
        s->add_option("--seed", c.seed, "random seed (MEANCONVEX_SEED overrides)");
        s->add_option("--tol", c.tol, "relative tolerance");
        s->add_option("--grid", c.grid, "grid points per axis");
        s->add_option("--grid-t", c.grid_t, "grid points for t");
        s->add_option("--random", c.random, "random samples");
        s->add_option("--domain", c.domain, "sampling box lo,hi")->allow_extra_args(false);
        s->add_option("--format", c.format, "stdout format")->check(CLI::IsMember({"json", "csv", "text"}));
        s->add_option("-o,--output", c.output, "write the --format output here instead of stdout");
        s->add_option("--json", c.json_path, "also write a JSON report");
        s->add_option("--csv", c.csv_path, "also write witnesses as CSV");
    };
    auto claim = [&c](CLI::App* s) {
        s->add_option("--theorem", c.theorem, "AA AG AH GA GG GH HA HG HH");
        s->add_option("--class", c.mean_class, "argument and value mean letters, e.g. AG");
        s->add_option("--f", c.f, "function, e.g. square, power:2, affine:2,1");
        s->add_option("--h", c.h, "weight: identity, power:r, reciprocal, constant");
        s->add_option("--sense", c.sense, "convex or concave");
    };

    auto* verify = app.add_subcommand("verify", "check a class or theorem on samples");
    claim(verify);
    common(verify);
    auto* audit = app.add_subcommand("audit", "run every catalog claim");
    audit->add_option("--only", c.only, "group (examples, equality-families, classical), 'suspect', or an entry id");
    common(audit);
    auto* search = app.add_subcommand("search", "look for a counterexample and shrink it");
    claim(search);
    search->add_flag("--hlawka-reversed", c.hlawka_reversed, "search against the reversed Hlawka inequality");
    search->add_option("--budget", c.budget, "evaluation budget");
    common(search);
    auto* classify = app.add_subcommand("classify", "additivity and the 3x3 class matrix");
    classify->add_option("--f", c.f, "function");
    classify->add_option("--h", c.h, "weight");
    common(classify);
    auto* means = app.add_subcommand("means", "generalized means and the H_h <= G_h <= A_h chain");
    means->add_option("--a", c.a)->required();
    means->add_option("--b", c.b)->required();
    means->add_option("--t", c.t);
    means->add_option("--h", c.h, "weight");
    common(means);

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    for (auto* s : {verify, audit, search, classify, means})
        if (s->parsed()) c.command = s->get_name();

    if (const char* env = std::getenv("MEANCONVEX_SEED"); env && *env) {
        try {
            std::size_t used = 0;
            c.seed = std::stoull(env, &used);
            if (used != std::string(env).size()) throw std::invalid_argument(env);
        } catch (const std::exception&) {
            err << "error: MEANCONVEX_SEED is not an unsigned integer\n";
            return 2;
        }
    }

    CommandResult r;
    try {
        if (c.command == "verify") r = cli_detail::cmd_verify(c);
        else if (c.command == "audit") r = cli_detail::cmd_audit(c);
        else if (c.command == "search") r = cli_detail::cmd_search(c);
        else if (c.command == "classify") r = cli_detail::cmd_classify(c);
        else r = cli_detail::cmd_means(c);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        r = CommandResult{};
        r.exit_code = 2;
        r.json = cli_detail::base_report(c);
        cli_detail::fill_common(r.json, "error", std::numeric_limits<double>::quiet_NaN(), {}, 0, 0);
        r.json["error"] = e.what();
        r.text = "";
    }

    std::string body = cli_detail::render(r, c.format);
    if (!c.output.empty()) {
        if (!cli_detail::write_file(c.output, body, err)) return 2;
    } else {
        out << body;
    }
    if (!c.json_path.empty() && !cli_detail::write_file(c.json_path, dump_json(r.json), err)) return 2;
    if (!c.csv_path.empty() && !cli_detail::write_file(c.csv_path, witnesses_csv(r.rows), err)) return 2;
    return r.exit_code;
}

} // namespace meanconvex
