#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"
#include "sampling.hpp"

namespace meanconvex {

using Json = nlohmann::ordered_json;

inline std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// nan/inf become null; everything else is left to the serializer below
inline Json num(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

namespace detail {

inline void dump_into(std::string& out, const Json& j, int indent, int depth) {
    auto newline = [&](int d) {
        if (indent < 0) return;
        out += '\n';
        out.append(static_cast<std::size_t>(indent * d), ' ');
    };
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        bool first = true;
        for (auto it = j.begin(); it != j.end(); ++it) {
            if (!first) out += ',';
            first = false;
            newline(depth + 1);
            out += Json(it.key()).dump();
            out += indent < 0 ? ":" : ": ";
            dump_into(out, it.value(), indent, depth + 1);
        }
        newline(depth);
        out += '}';
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        out += '[';
        bool first = true;
        for (const auto& v : j) {
            if (!first) out += ',';
            first = false;
            newline(depth + 1);
            dump_into(out, v, indent, depth + 1);
        }
        newline(depth);
        out += ']';
        return;
    }
    case Json::value_t::number_float: {
        double v = j.get<double>();
        out += std::isfinite(v) ? fmt17(v) : "null";
        return;
    }
    default:
        out += j.dump();
    }
}

} // namespace detail

inline std::string dump_json(const Json& j, int indent = 2) {
    std::string s;
    detail::dump_into(s, j, indent, 0);
    s += '\n';
    return s;
}

inline Json witness_json(const Witness& w) {
    Json j;
    j["x"] = num(w.x);
    j["y"] = num(w.y);
    j["z"] = num(w.z);
    j["t"] = num(w.t);
    j["lhs"] = num(w.lhs);
    j["rhs"] = num(w.rhs);
    return j;
}

inline Json witnesses_json(const std::vector<Witness>& ws) {
    Json a = Json::array();
    for (const auto& w : ws) a.push_back(witness_json(w));
    return a;
}

inline Json plan_json(const SamplePlan& p, double tol) {
    Json j;
    j["domain"] = Json::array({num(p.box.lo), num(p.box.hi)});
    j["grid"] = p.grid_points;
    j["grid_t"] = p.grid_t;
    j["random"] = p.random_samples;
    j["seed"] = p.seed;
    j["tol"] = tol;
    return j;
}

inline Json outcome_json(const CheckOutcome& o) {
    Json j;
    j["label"] = o.label;
    j["primary"] = o.primary;
    j["state"] = to_string(o.state);
    j["min_margin"] = num(o.min_margin);
    j["witness"] = o.witness ? witness_json(*o.witness) : Json(nullptr);
    j["samples"] = o.samples;
    j["skipped"] = o.skipped;
    if (!o.message.empty()) j["message"] = o.message;
    return j;
}

inline Json finding_json(const AuditFinding& f) {
    Json j;
    j["entry"] = f.entry;
    j["group"] = f.group;
    j["expected"] = to_string(f.expected);
    j["verdict"] = to_string(f.verdict);
    j["min_margin"] = num(f.min_margin);
    j["witness"] = f.witness ? witness_json(*f.witness) : Json(nullptr);
    if (!f.note.empty()) j["note"] = f.note;
    Json checks = Json::array();
    for (const auto& o : f.checks) checks.push_back(outcome_json(o));
    j["checks"] = std::move(checks);
    return j;
}

inline std::string witnesses_csv(const std::vector<Witness>& ws) {
    auto cell = [](double v) { return std::isfinite(v) ? fmt17(v) : std::string(); };
    std::string s = "x,y,z,t,lhs,rhs\n";
    for (const auto& w : ws)
        s += cell(w.x) + "," + cell(w.y) + "," + cell(w.z) + "," + cell(w.t) + "," + cell(w.lhs) + "," + cell(w.rhs) +
             "\n";
    return s;
}

} // namespace meanconvex
