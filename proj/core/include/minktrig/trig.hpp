#pragma once
/**
 * @file trig.hpp
 * @brief Minkowski cosine cm (three forms), signed sine sn, the symmetric
 *        cosines cn and ca, the semi-inner product and the Gateaux derivative.
 *
 * All functions throw DomainError on zero arguments unless stated otherwise.
 */

#include <minktrig/norm_core.hpp>

namespace minktrig {

/// cm(x, y) = [y, b(x)] / |y|.
double cm(const PlaneContext& ctx, Vec2 x, Vec2 y);

/// sgn([y, b(x)]) * inf_t |y + t b(x)| / |y|, by golden section.
double cm_inf_form(const PlaneContext& ctx, Vec2 x, Vec2 y);

/// Signed inverse length of the segment from o to the point where the line
/// through y/|y| meets the supporting line at x/|x|. Negative when the point
/// lies on the ray opposite to y; 0 when the two lines are parallel.
double cm_external_form(const PlaneContext& ctx, Vec2 x, Vec2 y);

/// sn(x, y) = [x, y] / (|y|_a |x|).
double sn(const PlaneContext& ctx, Vec2 x, Vec2 y);

/// sqrt(cm(x, y) cm(y, x)). Radon contexts only (UnsupportedOperation
/// otherwise); a product below -1e-9 raises NumericalError.
double cn(const PlaneContext& ctx, Vec2 x, Vec2 y);

/// (cm(x, y) + cm(y, x)) / 2.
double ca(const PlaneContext& ctx, Vec2 x, Vec2 y);

/// (x, y)_s = |x| |y| cm(x, y); 0 when either argument is o.
double semi_inner(const PlaneContext& ctx, Vec2 x, Vec2 y);

/// |x| times the symmetric difference quotient of t -> |x + t y| at 0,
/// step t = 1e-6 |x| / |y|. Returns 0 for y = o.
double gateaux(const PlaneContext& ctx, Vec2 x, Vec2 y);

/// Argmax over S of y -> [y, b(x)]; equals x/|x|.
Vec2 norm_gradient_direction(const PlaneContext& ctx, Vec2 x);

}  // namespace minktrig
