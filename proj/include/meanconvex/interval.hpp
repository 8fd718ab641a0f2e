#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "errors.hpp"

namespace meanconvex {

inline constexpr double inf = std::numeric_limits<double>::infinity();

struct Interval {
    double lo = -inf;
    double hi = inf;
    bool lo_closed = false;
    bool hi_closed = false;

    static Interval closed(double a, double b) { return {a, b, true, true}; }
    static Interval open(double a, double b) { return {a, b, false, false}; }
    static Interval left_open(double a, double b) { return {a, b, false, true}; }
    static Interval right_open(double a, double b) { return {a, b, true, false}; }
    static Interval reals() { return {-inf, inf, false, false}; }
    static Interval positive() { return {0.0, inf, false, false}; }

    bool contains(double x) const {
        if (std::isnan(x)) return false;
        bool above = lo_closed ? x >= lo : x > lo;
        bool below = hi_closed ? x <= hi : x < hi;
        return above && below;
    }

    // Closed endpoints absorb rounding of a mean that should land exactly on them.
    bool contains_with_slack(double x, double rel = 1e-12) const {
        if (contains(x)) return true;
        if (std::isnan(x)) return false;
        if (lo_closed && x < lo && lo - x <= rel * std::max(1.0, std::fabs(lo))) return true;
        if (hi_closed && x > hi && x - hi <= rel * std::max(1.0, std::fabs(hi))) return true;
        return false;
    }

    double clamp(double x) const {
        if (lo_closed && x < lo) return lo;
        if (hi_closed && x > hi) return hi;
        return x;
    }

    bool bounded() const { return std::isfinite(lo) && std::isfinite(hi); }

    bool empty() const {
        if (lo > hi) return true;
        if (lo == hi) return !(lo_closed && hi_closed);
        return false;
    }

    bool degenerate() const { return empty() || lo == hi; }

    Interval intersect(const Interval& o) const {
        Interval r;
        if (lo > o.lo) {
            r.lo = lo;
            r.lo_closed = lo_closed;
        } else if (o.lo > lo) {
            r.lo = o.lo;
            r.lo_closed = o.lo_closed;
        } else {
            r.lo = lo;
            r.lo_closed = lo_closed && o.lo_closed;
        }
        if (hi < o.hi) {
            r.hi = hi;
            r.hi_closed = hi_closed;
        } else if (o.hi < hi) {
            r.hi = o.hi;
            r.hi_closed = o.hi_closed;
        } else {
            r.hi = hi;
            r.hi_closed = hi_closed && o.hi_closed;
        }
        return r;
    }

    // Sampling range: open ends are pulled inward so every sample is a member.
    double inner_lo(double inset = 1e-6) const {
        return lo_closed ? lo : lo + inset * std::max(1.0, std::fabs(lo));
    }
    double inner_hi(double inset = 1e-6) const {
        return hi_closed ? hi : hi - inset * std::max(1.0, std::fabs(hi));
    }

    std::string str() const {
        std::ostringstream os;
        os.precision(17);
        os << (lo_closed ? '[' : '(');
        if (std::isinf(lo)) os << "-inf"; else os << lo;
        os << ", ";
        if (std::isinf(hi)) os << "inf"; else os << hi;
        os << (hi_closed ? ']' : ')');
        return os.str();
    }
};

} // namespace meanconvex
