#pragma once
/**
 * @file circle_calculus.hpp
 * @brief Arc-length and area parameters of S, rho, derivative identities for
 *        sn and cm, and residuals of f'' + rho f = 0.
 *
 * Parameters start at x0 = the circle point at polar angle 0.
 */

#include <minktrig/norm_core.hpp>

#include <utility>
#include <vector>

namespace minktrig {

struct ArcParam {
    ArcKind kind{ArcKind::NormLength};
    /// l, l_a or 2A.
    double total{0.0};
};

ArcParam arc_param(const PlaneContext& ctx, ArcKind kind);

/// Polar angle at parameter value s (s taken modulo total).
double theta_at(const PlaneContext& ctx, const ArcParam& param, double s);

/// Parameter value at the direction of x.
double param_at(const PlaneContext& ctx, const ArcParam& param, Vec2 x);

/// Point of S at parameter value s.
Vec2 param_point(const PlaneContext& ctx, const ArcParam& param, double s);

/// rho(s) = |d/ds b(gamma(s))| along the norm arc length, by symmetric
/// differences with step h = l * 1e-4.
double rho(const PlaneContext& ctx, double s);

/// Residuals |d/ds1 sn(x, y) - sn(b(x), y)| and |d/ds2 cm(x, y) - cm(x, b(y))|,
/// by symmetric differences along the norm arc length with step l * 1e-5.
std::pair<double, double> d_ds_identities(const PlaneContext& ctx, Vec2 x, Vec2 y);

enum class OdeFunction { SnFromX0, CmFromX0 };

struct OdeReport {
    /// max |f'' + rho f| over the grid.
    double residual{0.0};
    /// Arc parameter where the residual peaks.
    double worst_s{0.0};
    double f0{0.0};
    double df0{0.0};
    /// Largest initial-condition error: |f(0) - f0*| and |f'(0) - df0*|.
    double initial_error{0.0};
};

/// Samples f on a uniform norm arc-length grid of `grid` points:
///   SnFromX0: f(s) = sn(x0, gamma(s)) with f(0) = 0, f'(0) = 1;
///   CmFromX0: f(s) = cm(x0, gamma(s)) with f(0) = 1, f'(0) = 0.
/// f'' comes from second differences on the grid and f'(0) from a symmetric
/// difference with step l * 1e-5. Radon contexts only.
OdeReport ode_residual(const PlaneContext& ctx, OdeFunction f, std::size_t grid);

struct AreaParamReport {
    /// max over table cells of |delta sector_area2 - delta s_anti|.
    double max_step_gap{0.0};
    /// Radon contexts: max over the table of the spread of
    /// {s_norm, s_anti, sector_area2}; 0 otherwise.
    double max_param_gap{0.0};
    CircleTotals totals;
};

AreaParamReport area_param_check(const PlaneContext& ctx);

/// max over table nodes of | |d gamma/ds| - 1 |, where gamma(s) is the periodic
/// cubic spline through the table points parameterized by norm arc length.
double norm_speed_defect(const PlaneContext& ctx);

/// Images b(gamma) of the circle, refined between table samples until
/// consecutive images are closer than max_gap in the norm.
std::vector<Vec2> b_image_samples(const PlaneContext& ctx, double max_gap);

/// Twice the area of B (scaled by omega) by the shoelace sum over an inscribed
/// polygon with `vertices` vertices uniform in polar angle.
double shoelace_area2(const PlaneContext& ctx, std::size_t vertices);

/// Richardson extrapolation of shoelace_area2 from `vertices` and 2 * `vertices`.
double shoelace_area2_extrapolated(const PlaneContext& ctx, std::size_t vertices);

}  // namespace minktrig
