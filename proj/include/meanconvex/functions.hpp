#pragma once

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "errors.hpp"
#include "function.hpp"
#include "weights.hpp"

namespace meanconvex {

inline std::string fmt_param(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

inline double log_cosh(double x) {
    double a = std::fabs(x);
    return a + std::log1p(std::exp(-2.0 * a)) - std::log(2.0);
}

inline PointFunction fn_identity() {
    return {"identity", [](double x) { return x; }, Interval::reals(), Interval::reals(), false, {}, {}};
}

inline PointFunction fn_affine(double a, double b) {
    return {"affine:" + fmt_param(a) + "," + fmt_param(b), [a, b](double x) { return a * x + b; }, Interval::reals(),
            Interval::reals(), false, {}, {}};
}

inline PointFunction fn_square() {
    return {"square", [](double x) { return x * x; }, Interval::reals(), Interval::reals(), false, {}, "zero at x=0"};
}

inline PointFunction fn_neg_square() {
    return {"neg_square", [](double x) { return -x * x; }, Interval::positive(), Interval::reals(), false, {},
            "negative on its stated domain"};
}

inline PointFunction fn_power(double p) {
    return {"power:" + fmt_param(p), [p](double x) { return std::pow(x, p); }, Interval::positive(),
            Interval::positive(), true, [p](double x) { return p * std::log(x); }, {}};
}

inline PointFunction fn_log() {
    return {"log", [](double x) { return std::log(x); }, Interval::positive(), Interval::positive(), false, {},
            "positive only for x > 1"};
}

inline PointFunction fn_neg_log() {
    return {"neg_log", [](double x) { return -std::log(x); }, Interval::positive(), Interval::positive(), false, {},
            "positive only for x < 1"};
}

inline PointFunction fn_exp() {
    return {"exp", [](double x) { return std::exp(x); }, Interval::reals(), Interval::reals(), true,
            [](double x) { return x; }, {}};
}

inline PointFunction fn_exp_neg() {
    return {"exp_neg", [](double x) { return std::exp(-x); }, Interval::reals(), Interval::reals(), true,
            [](double x) { return -x; }, {}};
}

inline PointFunction fn_exp_reciprocal() {
    return {"exp_reciprocal", [](double x) { return std::exp(1.0 / x); }, Interval::positive(), Interval::positive(),
            true, [](double x) { return 1.0 / x; }, {}};
}

inline PointFunction fn_cosh() {
    return {"cosh", [](double x) { return std::cosh(x); }, Interval::reals(), Interval::reals(), true, log_cosh, {}};
}

inline constexpr double endpoint_shrink = 1e-6;

inline PointFunction fn_arcsin() {
    return {"arcsin", [](double x) { return std::asin(x); }, Interval::closed(endpoint_shrink, 1.0),
            Interval::closed(-1.0, 1.0), true, {}, "stated on [0,1]; shrunk at 0 where arcsin vanishes"};
}

inline PointFunction fn_arctan() {
    return {"arctan", [](double x) { return std::atan(x); }, Interval::positive(), Interval::reals(), true, {}, {}};
}

inline PointFunction fn_reciprocal() {
    return {"reciprocal", [](double x) { return 1.0 / x; }, Interval::positive(), Interval::positive(), true, {}, {}};
}

inline PointFunction fn_reciprocal_log() {
    return {"reciprocal_log", [](double x) { return 1.0 / std::log(x); }, Interval::open(1.0, inf),
            Interval::open(1.0, inf), true, {}, {}};
}

inline PointFunction fn_constant(double c) {
    return {"constant:" + fmt_param(c), [c](double) { return c; }, Interval::reals(), Interval::reals(), c > 0.0,
            c > 0.0 ? std::function<double(double)>([c](double) { return std::log(c); }) : nullptr, {}};
}

inline std::vector<PointFunction> builtin_functions() {
    return {fn_identity(), fn_affine(1.0, 0.0), fn_square(),      fn_neg_square(),   fn_power(2.0),
            fn_log(),      fn_neg_log(),        fn_exp(),         fn_exp_neg(),      fn_exp_reciprocal(),
            fn_cosh(),     fn_arcsin(),         fn_arctan(),      fn_reciprocal(),   fn_reciprocal_log(),
            fn_constant(1.0)};
}

namespace detail {

inline std::vector<double> parse_params(const std::string& spec, const std::string& rest) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (pos <= rest.size() && !rest.empty()) {
        std::size_t comma = rest.find(',', pos);
        std::string tok = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stod(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw domain_error("bad parameter '" + tok + "' in '" + spec + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

} // namespace detail

// "name" or "name:p1,p2"
inline PointFunction parse_function(const std::string& spec) {
    std::string name = spec.substr(0, spec.find(':'));
    std::string rest = spec.find(':') == std::string::npos ? "" : spec.substr(spec.find(':') + 1);
    auto p = detail::parse_params(spec, rest);
    auto want = [&](std::size_t n) {
        if (p.size() != n) throw domain_error("'" + name + "' takes " + std::to_string(n) + " parameter(s)");
    };
    if (name == "identity") { want(0); return fn_identity(); }
    if (name == "affine") { want(2); return fn_affine(p[0], p[1]); }
    if (name == "square") { want(0); return fn_square(); }
    if (name == "neg_square") { want(0); return fn_neg_square(); }
    if (name == "power") { want(1); return fn_power(p[0]); }
    if (name == "log") { want(0); return fn_log(); }
    if (name == "neg_log") { want(0); return fn_neg_log(); }
    if (name == "exp") { want(0); return fn_exp(); }
    if (name == "exp_neg") { want(0); return fn_exp_neg(); }
    if (name == "exp_reciprocal") { want(0); return fn_exp_reciprocal(); }
    if (name == "cosh") { want(0); return fn_cosh(); }
    if (name == "arcsin") { want(0); return fn_arcsin(); }
    if (name == "arctan") { want(0); return fn_arctan(); }
    if (name == "reciprocal") { want(0); return fn_reciprocal(); }
    if (name == "reciprocal_log") { want(0); return fn_reciprocal_log(); }
    if (name == "constant") { want(1); return fn_constant(p[0]); }
    throw domain_error("unknown function '" + spec + "'");
}

inline WeightFunction parse_weight(const std::string& spec) {
    std::string name = spec.substr(0, spec.find(':'));
    std::string rest = spec.find(':') == std::string::npos ? "" : spec.substr(spec.find(':') + 1);
    auto p = detail::parse_params(spec, rest);
    if (name == "identity" && p.empty()) return weight_identity();
    if (name == "power" && p.size() == 1) return p[0] == 1.0 ? weight_identity() : weight_power(p[0]);
    if (name == "reciprocal" && p.empty()) return weight_reciprocal();
    if (name == "constant" && p.empty()) return weight_constant();
    throw domain_error("unknown weight '" + spec + "'");
}

} // namespace meanconvex
