#pragma once
/**
 * @file oracles.hpp
 * @brief Brute-force one-dimensional procedures used to cross-check the
 *        analytic fast paths: golden-section line minimization, circle sup,
 *        symmetric differences, sign bisection, equilateral triangles.
 */

#include <minktrig/norm_core.hpp>

#include <functional>
#include <utility>

namespace minktrig {

using ScalarFn = std::function<double(double)>;

struct Bracket {
    double lo{0.0};
    double hi{0.0};
};

struct LineMinimum {
    double t{0.0};
    double value{0.0};
};

inline constexpr int kGoldenMaxIterations = 200;
inline constexpr int kBracketMaxDoublings = 60;

/// Bracket the minimizer of a convex f by doubling away from t0.
/// Throws NumericalError after kBracketMaxDoublings or on non-finite values.
Bracket bracket_minimum(const ScalarFn& f, double t0 = 0.0, double step = 1.0);

/// Golden-section search on [lo, hi]; stops when the bracket is below
/// 1e-10 of its initial width or after kGoldenMaxIterations.
LineMinimum minimize_line(const ScalarFn& f, Bracket bracket);

/// bracket_minimum followed by minimize_line.
LineMinimum minimize_convex(const ScalarFn& f, double t0 = 0.0, double step = 1.0);

struct CircleSup {
    double theta{0.0};
    double value{0.0};
    Vec2 point;
};

/// Maximum of h over S: scan of the circle table, then golden-section
/// refinement on the neighbouring table cells.
CircleSup sup_circle(const PlaneContext& ctx, const std::function<double(Vec2)>& h);

/// (f(t0 + h) - f(t0 - h)) / (2 h).
double finite_diff(const ScalarFn& f, double t0, double h);

/// Root of f in [lo, hi] by sign bisection; f(lo) and f(hi) must differ in sign
/// (a zero endpoint is returned as is). Runs until the bracket stops shrinking.
double bisect_root(const ScalarFn& f, double lo, double hi);

struct Triangle {
    Vec2 y;
    Vec2 z;
};

/// For unit x: unit y with |x - y| = 1 found by bisection in polar angle,
/// and z = x - y, so that x = y + z with all three sides of unit norm.
Triangle equilateral_triangle(const PlaneContext& ctx, Vec2 x);

}  // namespace minktrig
