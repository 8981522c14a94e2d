#include <minktrig/birkhoff.hpp>
#include <minktrig/errors.hpp>
#include <minktrig/norm_model.hpp>
#include <minktrig/oracles.hpp>
#include <minktrig/trig.hpp>

#include <algorithm>
#include <cmath>

namespace minktrig {

double birkhoff_min(const PlaneContext& ctx, Vec2 x, Vec2 y) {
    if (x.is_zero() || y.is_zero()) {
        throw DomainError("birkhoff: zero vector");
    }
    const double step = 0.25 * norm(ctx, x) / norm(ctx, y);
    const auto f = [&](double lambda) { return norm(ctx, x + lambda * y); };
    return minimize_convex(f, 0.0, step).value;
}

double birkhoff_defect(const PlaneContext& ctx, Vec2 x, Vec2 y) {
    const double nx = norm(ctx, x);
    return std::max(0.0, (nx - birkhoff_min(ctx, x, y)) / nx);
}

bool is_birkhoff(const PlaneContext& ctx, Vec2 x, Vec2 y, double tol) {
    return birkhoff_min(ctx, x, y) >= norm(ctx, x) - tol;
}

Vec2 birkhoff_b(const PlaneContext& ctx, Vec2 x) {
    if (x.is_zero()) {
        throw DomainError("birkhoff_b: zero vector");
    }
    // The gradient g has dual norm 1, so the quarter turn J g has antinorm
    // omega * 1 exactly, and [x, J g] = omega <g, x> > 0.
    const Vec2 g = norm_gradient(ctx, x);
    return quarter_turn(g) / ctx.omega_scale();
}

ConjugatePair conjugate_pair(const PlaneContext& ctx, Vec2 x) {
    if (x.is_zero()) {
        throw DomainError("conjugate_pair: zero vector");
    }
    const Vec2 u0 = x / norm(ctx, x);
    if (ctx.is_radon()) {
        return {u0, birkhoff_b(ctx, u0)};
    }
    // F(theta) = cm(b(u), u) vanishes exactly when b(u) -| u; F has period pi
    const auto F = [&](double theta) {
        const Vec2 u = circle_point_at(ctx, theta);
        return cm(ctx, birkhoff_b(ctx, u), u);
    };
    const double t0 = polar_angle(u0);
    double f_prev = F(t0);
    if (std::abs(f_prev) < 1e-15) {
        return {u0, birkhoff_b(ctx, u0)};
    }
    const std::size_t n = ctx.table_size();
    const double step = ctx.table_step();
    for (std::size_t k = 1; k <= n / 2 + 1; ++k) {
        const double t = t0 + step * static_cast<double>(k);
        const double f = F(t);
        if (f == 0.0 || (f > 0.0) != (f_prev > 0.0)) {
            const double theta = wrap_angle(bisect_root(F, t - step, t));
            const Vec2 u = circle_point_at(ctx, theta);
            return {u, birkhoff_b(ctx, u)};
        }
        f_prev = f;
    }
    throw NumericalError("conjugate_pair: no conjugate direction found on the circle");
}

VerifyReport is_radon(const PlaneContext& ctx, std::size_t samples, double tol) {
    VerifyReport r;
    r.check = "radon";
    const auto table = ctx.circle_table();
    const std::size_t n = table.size();
    samples = std::clamp<std::size_t>(samples, 1, n);
    for (std::size_t k = 0; k < samples; ++k) {
        const Vec2 x = table[k * n / samples].point;
        const Vec2 bx = birkhoff_b(ctx, x);
        const double d = birkhoff_defect(ctx, bx, x);
        if (k == 0 || d > r.max_residual) {
            r.max_residual = d;
            r.witness_x = x;
            r.witness_y = bx;
        }
    }
    r.pass = r.max_residual < tol;
    r.note = to_string(classify_radon_defect(r.max_residual));
    return r;
}

}  // namespace minktrig
