#pragma once
/**
 * @file distortion.hpp
 * @brief Tangent segments from exterior points, the outer distortion
 *        functional gamma, angular bisectors and the parallel-chords figure.
 */

#include <minktrig/norm_core.hpp>

#include <vector>

namespace minktrig {

/// Exterior-point guard used by tangent_points when no tolerance is given.
inline constexpr double kExteriorTol = 1e-9;

/// Tangency points of the two supporting lines through p. q1 is reached first
/// when turning counterclockwise from the direction of p, q2 when turning
/// clockwise. len_i = |p - q_i|.
struct TangentPair {
    Vec2 p;
    Vec2 q1;
    Vec2 q2;
    double len1{0.0};
    double len2{0.0};
    /// Set when |p| < 1 + 1e-6.
    bool low_accuracy{false};
};

/// Throws DomainError when |p| <= 1 + tol, NumericalError when the circle
/// table does not show exactly two sign changes.
TangentPair tangent_points(const PlaneContext& ctx, Vec2 p, double tol = kExteriorTol);

/// len1 / len2 of tangent_points(p).
double gamma_from_point(const PlaneContext& ctx, Vec2 p);

/// The apex (1 - 2^(1 - 1/q), 1) of the mixed l_p-l_q construction, where the
/// tangents at (-2^(-1/q), 2^(-1/q)) and (0, 1) meet; 1/p + 1/q = 1.
Vec2 mixed_apex(double p);

/// argmin over t of |t x - v|, by sign bisection on the derivative.
double foot_parameter(const PlaneContext& ctx, Vec2 x, Vec2 v);

/// Same minimizer by golden section on the values.
double foot_parameter_oracle(const PlaneContext& ctx, Vec2 x, Vec2 v);

/// cm(beta x - v, v) - cm(alpha y - v, v), with beta x - v -| x and
/// alpha y - v -| y. Equals (dist(v, <o,y>) - dist(v, <o,x>)) / |v|.
/// Throws DomainError unless v lies strictly inside the angle xoy.
double glogovskii_defect(const PlaneContext& ctx, Vec2 x, Vec2 y, Vec2 v);

/// Circle inscribed in the angle xoy, touching [o,x> at beta x and [o,y> at alpha y.
struct InscribedCircle {
    Vec2 center;
    double radius{0.0};
    double beta{0.0};
    double alpha{0.0};
};

/// Center on the Glogovskii bisector (bisection of glogovskii_defect along the
/// segment from x to y), scaled so that the radius is radius_fraction times
/// min(dist(x, <o,y>), dist(y, <o,x>)). Throws DomainError for dependent x, y.
InscribedCircle inscribed_circle(const PlaneContext& ctx, Vec2 x, Vec2 y, double radius_fraction = 0.2);

/// gamma(x, y) = beta / alpha for the default inscribed circle.
double gamma_pair(const PlaneContext& ctx, Vec2 x, Vec2 y);

/// cm(x, x + y) / cm(y, x + y) for unit x, y. Radon contexts only.
double radon_gamma_formula(const PlaneContext& ctx, Vec2 x, Vec2 y);

/// x/|x| + y/|y|. Throws DomainError for dependent inputs.
Vec2 busemann_ray(const PlaneContext& ctx, Vec2 x, Vec2 y);

struct LimitProbe {
    std::vector<double> near_x;
    std::vector<double> near_minus_x;
};

/// gamma(x, y) for y at norm arc distance eps (counterclockwise) from x and from -x.
LimitProbe gamma_limit_probe(const PlaneContext& ctx, Vec2 x, const std::vector<double>& eps_list);

/// The parallel-chords figure for tangent directions t1, t2: q_i has b(q_i)
/// along t_i, p is where the tangent lines meet, b_i = (q_i - p)/|q_i - p|,
/// b = (b1 + b2)/|b1 + b2|, c_i = cm(b_i, b) b_i.
struct ParallelChords {
    Vec2 q1, q2, p;
    Vec2 b1, b2, b;
    Vec2 c1, c2;
    /// |sn(q1 - q2, c1 - c2)|.
    double defect{0.0};
    /// |sn(p, b)|: zero when p, o and b are collinear.
    double collinearity{0.0};
};

/// Builds the figure in any context. Throws DomainError for parallel directions.
ParallelChords parallel_chords(const PlaneContext& ctx, Vec2 t1, Vec2 t2);

/// parallel_chords(...).defect; Radon contexts only.
double parallel_chords_check(const PlaneContext& ctx, Vec2 t1, Vec2 t2);

}  // namespace minktrig
