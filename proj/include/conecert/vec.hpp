#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace conecert {

// A point/functional is a dense real vector; the dimension is its length.
using Point = std::vector<double>;

// Global numeric defaults. Every CLI command surfaces these as flags and
// echoes the values it actually used in its report.
inline constexpr double kDefaultTol = 1e-9;
inline constexpr double kDefaultMargin = 1e-7;
inline constexpr double kMarginCap = 1e6;

// Bad user input or violated construction invariants. The CLI maps this to
// exit code 3.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A "cannot happen" condition (solver breakdown, corrupted state). Exit 4.
struct InternalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline bool all_finite(const Point& p) {
    for (double v : p)
        if (!std::isfinite(v)) return false;
    return true;
}

inline void require_finite(const Point& p, const std::string& what) {
    if (!all_finite(p)) throw InputError(what + ": non-finite coordinate");
}

inline void require_dim(const Point& p, std::size_t dim, const std::string& what) {
    if (p.size() != dim)
        throw InputError(what + ": expected dimension " + std::to_string(dim) +
                         ", got " + std::to_string(p.size()));
}

inline double dot(const Point& a, const Point& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Point add(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Point sub(const Point& a, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Point scale(double t, const Point& a) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = t * a[i];
    return r;
}

// a + t*b
inline Point axpy(const Point& a, double t, const Point& b) {
    Point r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + t * b[i];
    return r;
}

inline double norm_inf(const Point& a) {
    double m = 0.0;
    for (double v : a) m = std::max(m, std::fabs(v));
    return m;
}

inline double norm2(const Point& a) { return std::sqrt(dot(a, a)); }

inline bool approx_eq(const Point& a, const Point& b, double tol) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::fabs(a[i] - b[i]) > tol) return false;
    return true;
}

}  // namespace conecert
