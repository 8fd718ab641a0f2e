#pragma once

#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>
#include <type_traits>
#include <utility>

#include "errors.hpp"
#include "interval.hpp"
#include "sampling.hpp"

namespace meanconvex {

enum class WeightFamily { identity, power, reciprocal, constant, custom };

struct WeightFunction {
    std::string name;
    WeightFamily family = WeightFamily::identity;
    double exponent = 1.0;
    std::function<double(double)> custom;

    double operator()(double t) const;
};

inline WeightFunction weight_identity() { return {"identity", WeightFamily::identity, 1.0, {}}; }

inline WeightFunction weight_power(double r) {
    std::string n = "power:";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", r);
    return {n + buf, WeightFamily::power, r, {}};
}

inline WeightFunction weight_reciprocal() { return {"reciprocal", WeightFamily::reciprocal, -1.0, {}}; }
inline WeightFunction weight_constant() { return {"constant", WeightFamily::constant, 0.0, {}}; }

inline WeightFunction weight_custom(std::string name, std::function<double(double)> fn) {
    return {std::move(name), WeightFamily::custom, 0.0, std::move(fn)};
}

inline double weight_eval(const WeightFunction& h, double t) {
    if (!(t >= 0.0 && t <= 2.0))
        throw domain_error("weight " + h.name + ": t=" + std::to_string(t) + " outside [0,2]");
    switch (h.family) {
    case WeightFamily::identity:
        return t;
    case WeightFamily::power:
        if (t == 0.0 && h.exponent < 0.0) throw domain_error("weight " + h.name + ": pole at t=0");
        return std::pow(t, h.exponent);
    case WeightFamily::reciprocal:
        if (t == 0.0) throw domain_error("weight " + h.name + ": pole at t=0");
        return 1.0 / t;
    case WeightFamily::constant:
        return 1.0;
    case WeightFamily::custom: {
        if (!h.custom) throw domain_error("weight " + h.name + " has no evaluator");
        double v = h.custom(t);
        if (!std::isfinite(v)) throw domain_error("weight " + h.name + " not finite at t=" + std::to_string(t));
        return v;
    }
    }
    return t;
}

inline double WeightFunction::operator()(double t) const { return weight_eval(*this, t); }

enum class AdditivityTag { additive, subadditive, superadditive, mixed };

inline const char* to_string(AdditivityTag t) {
    switch (t) {
    case AdditivityTag::additive: return "additive";
    case AdditivityTag::subadditive: return "subadditive";
    case AdditivityTag::superadditive: return "superadditive";
    case AdditivityTag::mixed: return "mixed";
    }
    return "?";
}

inline const char* multiplicative_name(AdditivityTag t) {
    switch (t) {
    case AdditivityTag::additive: return "multiplicative";
    case AdditivityTag::subadditive: return "submultiplicative";
    case AdditivityTag::superadditive: return "supermultiplicative";
    case AdditivityTag::mixed: return "mixed";
    }
    return "?";
}

struct AdditivityClass {
    AdditivityTag tag = AdditivityTag::additive;
    // above: g(s+t) > g(s)+g(t), i.e. subadditivity fails; below: superadditivity fails
    std::optional<std::pair<double, double>> above_witness;
    std::optional<std::pair<double, double>> below_witness;
    std::size_t samples = 0;

    // The pair showing the complementary property fails (empty for additive).
    std::optional<std::pair<double, double>> witness() const {
        if (tag == AdditivityTag::superadditive) return above_witness;
        if (tag == AdditivityTag::subadditive) return below_witness;
        if (tag == AdditivityTag::mixed) return above_witness;
        return std::nullopt;
    }

    bool is_sub() const { return tag == AdditivityTag::additive || tag == AdditivityTag::subadditive; }
    bool is_super() const { return tag == AdditivityTag::additive || tag == AdditivityTag::superadditive; }
};

namespace detail {

template <class Combine>
AdditivityClass classify_binary(const std::function<double(double)>& g, const Interval& domain,
                                const SamplePlan& plan, double tol, Combine combine, const char* what) {
    Interval r = sampling_region(domain, plan);
    AdditivityClass out;
    std::size_t tried = 0;
    for_each_pair(r, plan, [&](double s, double t) {
        double st = combine(s, t);
        if (!domain.contains(st)) return;
        ++tried;
        double whole, parts;
        try {
            whole = g(st);
            if constexpr (std::is_same_v<Combine, std::multiplies<double>>) parts = g(s) * g(t);
            else parts = g(s) + g(t);
        } catch (const std::exception&) {
            return;
        }
        if (!std::isfinite(whole) || !std::isfinite(parts)) return;
        ++out.samples;
        double band = tol * tol_scale(whole, parts);
        if (whole > parts + band && !out.above_witness) out.above_witness = std::make_pair(s, t);
        if (whole < parts - band && !out.below_witness) out.below_witness = std::make_pair(s, t);
    });
    if (tried == 0 || out.samples == 0)
        throw domain_error(std::string(what) + ": no sampled pair stays inside " + domain.str());
    if (out.above_witness && out.below_witness) out.tag = AdditivityTag::mixed;
    else if (out.above_witness) out.tag = AdditivityTag::superadditive;
    else if (out.below_witness) out.tag = AdditivityTag::subadditive;
    else out.tag = AdditivityTag::additive;
    return out;
}

} // namespace detail

inline AdditivityClass classify_additivity(const std::function<double(double)>& g, const Interval& domain,
                                           const SamplePlan& plan = {}, double tol = default_tol) {
    return detail::classify_binary(g, domain, plan, tol, std::plus<double>{}, "classify_additivity");
}

// Tags mean the multiplicative analogues: additive = multiplicative, superadditive = supermultiplicative.
inline AdditivityClass classify_multiplicativity(const std::function<double(double)>& f, const Interval& domain,
                                                 const SamplePlan& plan = {}, double tol = default_tol) {
    return detail::classify_binary(f, domain, plan, tol, std::multiplies<double>{}, "classify_multiplicativity");
}

// For x^k on positive reals: k > 1 superadditive, k < 1 subadditive (negative k included,
// since x^k is then decreasing).
inline AdditivityClass power_weight_class(double k) {
    AdditivityClass c;
    if (k == 1.0) c.tag = AdditivityTag::additive;
    else if (k > 1.0) c.tag = AdditivityTag::superadditive;
    else c.tag = AdditivityTag::subadditive;
    return c;
}

// The x^k table in its commonly printed form, which puts k in (-1,0) on the superadditive side.
// Kept for auditing that row; power_weight_class is the one to rely on.
inline AdditivityClass tabulated_power_class(double k) {
    AdditivityClass c;
    if (k == 1.0) c.tag = AdditivityTag::additive;
    else if (k <= -1.0 || (k >= 0.0 && k < 1.0)) c.tag = AdditivityTag::subadditive;
    else c.tag = AdditivityTag::superadditive;
    return c;
}

} // namespace meanconvex
