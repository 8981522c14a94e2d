#include <minktrig/birkhoff.hpp>
#include <minktrig/errors.hpp>
#include <minktrig/oracles.hpp>
#include <minktrig/trig.hpp>

#include <cmath>

namespace minktrig {

namespace {

void require_nonzero(Vec2 x, Vec2 y, const char* what) {
    if (x.is_zero() || y.is_zero()) {
        throw DomainError(std::string(what) + ": zero vector");
    }
}

}  // namespace

double cm(const PlaneContext& ctx, Vec2 x, Vec2 y) {
    require_nonzero(x, y, "cm");
    return symplectic(ctx, y, birkhoff_b(ctx, x)) / norm(ctx, y);
}

double cm_inf_form(const PlaneContext& ctx, Vec2 x, Vec2 y) {
    require_nonzero(x, y, "cm_inf_form");
    const Vec2 bx = birkhoff_b(ctx, x);
    const double ny = norm(ctx, y);
    const auto f = [&](double t) { return norm(ctx, y + t * bx); };
    const double inf = minimize_convex(f, 0.0, 0.25 * ny / norm(ctx, bx)).value;
    const double s = symplectic(ctx, y, bx);
    const double sign = s > 0.0 ? 1.0 : (s < 0.0 ? -1.0 : 0.0);
    return sign * inf / ny;
}

double cm_external_form(const PlaneContext& ctx, Vec2 x, Vec2 y) {
    require_nonzero(x, y, "cm_external_form");
    const Vec2 xu = x / norm(ctx, x);
    const Vec2 yu = y / norm(ctx, y);
    const Vec2 d = birkhoff_b(ctx, xu);
    // xu + s d = t yu, solved by Cramer's rule
    const double den = det(yu, d);
    if (std::abs(den) < 1e-14 * euclid_length(yu) * euclid_length(d)) {
        return 0.0;
    }
    const double t = det(xu, d) / den;
    const Vec2 q = t * yu;
    const double len = norm(ctx, q);
    return t > 0.0 ? 1.0 / len : -1.0 / len;
}

double sn(const PlaneContext& ctx, Vec2 x, Vec2 y) {
    require_nonzero(x, y, "sn");
    return symplectic(ctx, x, y) / (antinorm(ctx, y) * norm(ctx, x));
}

double cn(const PlaneContext& ctx, Vec2 x, Vec2 y) {
    if (!ctx.is_radon()) {
        throw UnsupportedOperation("cn is only defined in Radon planes");
    }
    const double p = cm(ctx, x, y) * cm(ctx, y, x);
    if (p < -1e-9) {
        throw NumericalError("cn: cm(x,y) cm(y,x) is negative in a Radon context");
    }
    return std::sqrt(std::max(p, 0.0));
}

double ca(const PlaneContext& ctx, Vec2 x, Vec2 y) { return 0.5 * (cm(ctx, x, y) + cm(ctx, y, x)); }

double semi_inner(const PlaneContext& ctx, Vec2 x, Vec2 y) {
    if (x.is_zero() || y.is_zero()) return 0.0;
    return norm(ctx, x) * norm(ctx, y) * cm(ctx, x, y);
}

double gateaux(const PlaneContext& ctx, Vec2 x, Vec2 y) {
    if (x.is_zero()) {
        throw DomainError("gateaux: zero base point");
    }
    if (y.is_zero()) return 0.0;
    const double nx = norm(ctx, x);
    const double t = 1e-6 * nx / norm(ctx, y);
    const auto f = [&](double s) { return norm(ctx, x + s * y); };
    return nx * finite_diff(f, 0.0, t);
}

Vec2 norm_gradient_direction(const PlaneContext& ctx, Vec2 x) {
    if (x.is_zero()) {
        throw DomainError("norm_gradient_direction: zero vector");
    }
    // y -> [y, b(x)] is the linear functional <grad |x|, y>
    const Vec2 bx = birkhoff_b(ctx, x);
    const Vec2 w{bx.y, -bx.x};
    return support_point(ctx, w);
}

}  // namespace minktrig
