#pragma once
/**
 * @file birkhoff.hpp
 * @brief Birkhoff orthogonality, the map b, conjugate pairs and the Radon probe.
 */

#include <minktrig/norm_core.hpp>
#include <minktrig/report.hpp>

namespace minktrig {

/// u unit in the norm, v unit in the antinorm, mutually Birkhoff orthogonal, [u, v] > 0.
struct ConjugatePair {
    Vec2 u;
    Vec2 v;
};

/// min over lambda of |x + lambda y|, by golden section on the convex line map.
double birkhoff_min(const PlaneContext& ctx, Vec2 x, Vec2 y);

/// (|x| - min_lambda |x + lambda y|) / |x|; zero exactly when x is Birkhoff orthogonal to y.
double birkhoff_defect(const PlaneContext& ctx, Vec2 x, Vec2 y);

/// x is Birkhoff orthogonal to y: min_lambda |x + lambda y| >= |x| - tol.
/// Throws DomainError for zero vectors.
bool is_birkhoff(const PlaneContext& ctx, Vec2 x, Vec2 y, double tol = 1e-9);

/// The positively oriented tangent direction at x/|x| with unit antinorm.
/// Throws DomainError for x = o.
Vec2 birkhoff_b(const PlaneContext& ctx, Vec2 x);

/// A conjugate pair starting the search at x/|x|. In a Radon context this is
/// (x/|x|, b(x)). Throws NumericalError if the scan finds no candidate.
ConjugatePair conjugate_pair(const PlaneContext& ctx, Vec2 x);

/// Checks b(x) -| x for `samples` table points x. max_residual is the largest
/// birkhoff_defect(b(x), x); pass means it stays below tol.
VerifyReport is_radon(const PlaneContext& ctx, std::size_t samples = 256, double tol = kRadonDefectBelow);

}  // namespace minktrig
