#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <vector>

#include "errors.hpp"
#include "interval.hpp"

namespace meanconvex {

inline constexpr double default_tol = 1e-9;

struct SamplePlan {
    Interval box = Interval::closed(-10.0, 10.0);
    int grid_points = 33;
    int grid_t = 17;
    int random_samples = 10000;
    std::uint64_t seed = 42;
    double t_clip = 1e-6;
    std::size_t max_witnesses = 5;

    bool empty() const { return grid_points <= 0 && random_samples <= 0; }
};

// mt19937_64 output is fixed by the standard; the double conversion is done by hand
// because std::uniform_real_distribution is implementation-defined.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
    std::uint64_t bits() { return eng_(); }

private:
    std::mt19937_64 eng_;
};

inline double tol_scale(double lhs, double rhs) {
    double s = 1.0;
    if (std::isfinite(lhs)) s = std::max(s, std::fabs(lhs));
    if (std::isfinite(rhs)) s = std::max(s, std::fabs(rhs));
    return s;
}

// margin is oriented so that >= 0 means the claim holds
inline bool violates(double margin, double lhs, double rhs, double tol) {
    if (std::isnan(margin)) return true;
    return margin < -tol * tol_scale(lhs, rhs);
}

inline Interval sampling_region(const Interval& domain, const SamplePlan& plan) {
    Interval r = domain.intersect(plan.box);
    if (r.empty()) throw domain_error("sampling region " + domain.str() + " and box " +
                                      plan.box.str() + " do not intersect");
    if (!r.bounded()) throw domain_error("sampling region " + r.str() + " is unbounded");
    if (r.inner_lo() > r.inner_hi()) throw domain_error("sampling region " + r.str() + " is too narrow");
    return r;
}

inline std::vector<double> axis_grid(const Interval& r, int n) {
    std::vector<double> g;
    if (n <= 0) return g;
    double a = r.inner_lo(), b = r.inner_hi();
    if (n == 1) {
        g.push_back(0.5 * (a + b));
        return g;
    }
    g.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double u = static_cast<double>(i) / (n - 1);
        g.push_back(i == n - 1 ? b : a + (b - a) * u);
    }
    return g;
}

inline std::vector<double> t_grid(const SamplePlan& plan) {
    return axis_grid(Interval::closed(plan.t_clip, 1.0 - plan.t_clip), plan.grid_t);
}

// Sample order is grid first, then random; callers rely on it for smallest-index witnesses.
template <class Fn>
void for_each_pair(const Interval& r, const SamplePlan& plan, Fn&& fn) {
    auto g = axis_grid(r, plan.grid_points);
    for (double s : g)
        for (double t : g) fn(s, t);
    Rng rng(plan.seed);
    double a = r.inner_lo(), b = r.inner_hi();
    for (int i = 0; i < plan.random_samples; ++i) {
        double s = rng.uniform(a, b);
        double t = rng.uniform(a, b);
        fn(s, t);
    }
}

template <class Fn>
void for_each_xyt(const Interval& r, const SamplePlan& plan, Fn&& fn) {
    auto g = axis_grid(r, plan.grid_points);
    auto tg = t_grid(plan);
    for (double x : g)
        for (double y : g)
            for (double t : tg) fn(x, y, t);
    Rng rng(plan.seed);
    double a = r.inner_lo(), b = r.inner_hi();
    double tl = plan.t_clip, th = 1.0 - plan.t_clip;
    for (int i = 0; i < plan.random_samples; ++i) {
        double x = rng.uniform(a, b);
        double y = rng.uniform(a, b);
        double t = rng.uniform(tl, th);
        fn(x, y, t);
    }
}

template <class Fn>
void for_each_triple(const Interval& r, const SamplePlan& plan, Fn&& fn) {
    auto g = axis_grid(r, plan.grid_points);
    for (double x : g)
        for (double y : g)
            for (double z : g) fn(x, y, z);
    Rng rng(plan.seed);
    double a = r.inner_lo(), b = r.inner_hi();
    for (int i = 0; i < plan.random_samples; ++i) {
        double x = rng.uniform(a, b);
        double y = rng.uniform(a, b);
        double z = rng.uniform(a, b);
        fn(x, y, z);
    }
}

// Coordinates that do not apply (z for two-point inequalities, t for three-point ones) are NaN.
struct Witness {
    double x = std::numeric_limits<double>::quiet_NaN();
    double y = std::numeric_limits<double>::quiet_NaN();
    double z = std::numeric_limits<double>::quiet_NaN();
    double t = std::numeric_limits<double>::quiet_NaN();
    double lhs = 0.0;
    double rhs = 0.0;
};

struct MarginTally {
    std::size_t samples = 0;
    std::size_t skipped = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    double max_margin = -std::numeric_limits<double>::infinity();
    std::vector<Witness> witnesses;
    std::size_t violations = 0;

    void add(double margin, const Witness& w, double tol, std::size_t max_witnesses) {
        ++samples;
        if (!std::isnan(margin)) {
            min_margin = std::min(min_margin, margin);
            max_margin = std::max(max_margin, margin);
        }
        if (violates(margin, w.lhs, w.rhs, tol)) {
            ++violations;
            if (witnesses.size() < max_witnesses) witnesses.push_back(w);
        }
    }
    void skip() { ++skipped; }

    std::size_t attempted() const { return samples + skipped; }

    void require_usable(const char* what) const {
        if (samples == 0 || 2 * samples < attempted())
            throw insufficient_samples(std::string(what) + ": only " + std::to_string(samples) + " of " +
                                       std::to_string(attempted()) + " samples usable");
    }
};

} // namespace meanconvex
