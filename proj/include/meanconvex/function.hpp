#pragma once

#include <cmath>
#include <functional>
#include <string>
#include <utility>

#include "errors.hpp"
#include "interval.hpp"

namespace meanconvex {

struct PointFunction {
    std::string name;
    std::function<double(double)> eval;
    Interval domain = Interval::reals();  // stated domain I
    Interval natural = Interval::reals(); // where eval is defined at all
    bool positive_on_domain = false;      // a claim; audited, never assumed
    std::function<double(double)> log_eval; // optional exact log f
    std::string note;

    double operator()(double x) const { return at(x); }

    // Evaluation on the natural domain; callers check the stated domain themselves.
    double at(double x) const {
        if (!natural.contains_with_slack(x))
            throw domain_error(name + ": x=" + std::to_string(x) + " outside " + natural.str());
        double v = eval(natural.clamp(x));
        if (std::isnan(v)) throw evaluation_error(name + ": NaN at x=" + std::to_string(x));
        return v;
    }

    double log_at(double x) const {
        if (log_eval) {
            if (!natural.contains_with_slack(x))
                throw domain_error(name + ": x=" + std::to_string(x) + " outside " + natural.str());
            return log_eval(natural.clamp(x));
        }
        double v = at(x);
        if (!(v > 0.0)) throw evaluation_error(name + ": log of nonpositive value at x=" + std::to_string(x));
        return std::log(v);
    }

    double recip_at(double x) const {
        double v = at(x);
        if (v == 0.0) throw evaluation_error(name + ": reciprocal of zero at x=" + std::to_string(x));
        return 1.0 / v;
    }

    // Membership in the stated domain, with rounding slack at closed ends.
    double admit(double x) const {
        if (!domain.contains_with_slack(x))
            throw domain_error(name + ": argument " + std::to_string(x) + " outside " + domain.str());
        return domain.clamp(x);
    }
};

inline PointFunction with_domain(PointFunction f, const Interval& d) {
    f.domain = d;
    return f;
}

inline PointFunction scaled(PointFunction f, double alpha) {
    auto g = f.eval;
    f.eval = [g, alpha](double x) { return alpha * g(x); };
    if (f.log_eval && alpha > 0.0) {
        auto l = f.log_eval;
        double la = std::log(alpha);
        f.log_eval = [l, la](double x) { return la + l(x); };
    } else {
        f.log_eval = nullptr;
    }
    f.name = std::to_string(alpha) + "*" + f.name;
    if (alpha <= 0.0) f.positive_on_domain = false;
    return f;
}

} // namespace meanconvex
