#include <minktrig/errors.hpp>
#include <minktrig/norm_model.hpp>
#include <minktrig/oracles.hpp>

#include <cmath>
#include <numbers>
#include <sstream>

namespace minktrig {

namespace {

double checked(const ScalarFn& f, double t) {
    const double v = f(t);
    if (!std::isfinite(v)) {
        std::ostringstream os;
        os << "objective is not finite at t = " << t;
        throw NumericalError(os.str());
    }
    return v;
}

}  // namespace

Bracket bracket_minimum(const ScalarFn& f, double t0, double step) {
    const double f0 = checked(f, t0);
    double fr = checked(f, t0 + step);
    double fl = checked(f, t0 - step);
    if (fr >= f0 && fl >= f0) {
        return {t0 - step, t0 + step};
    }
    // walk downhill, doubling the step
    const double dir = fr < fl ? 1.0 : -1.0;
    double prev = t0;
    double cur = t0 + dir * step;
    double fcur = dir > 0 ? fr : fl;
    double width = step;
    for (int k = 0; k < kBracketMaxDoublings; ++k) {
        width *= 2.0;
        const double next = cur + dir * width;
        const double fnext = checked(f, next);
        if (fnext >= fcur) {
            return dir > 0 ? Bracket{prev, next} : Bracket{next, prev};
        }
        prev = cur;
        cur = next;
        fcur = fnext;
    }
    throw NumericalError("bracket_minimum: no bracket after 60 doublings");
}

LineMinimum minimize_line(const ScalarFn& f, Bracket bracket) {
    constexpr double invphi = 0.6180339887498949;  // 1 / golden ratio
    double a = bracket.lo;
    double b = bracket.hi;
    const double tol = 1e-10 * (b - a);
    double c = b - invphi * (b - a);
    double d = a + invphi * (b - a);
    double fc = checked(f, c);
    double fd = checked(f, d);
    for (int i = 0; i < kGoldenMaxIterations && (b - a) > tol; ++i) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - invphi * (b - a);
            fc = checked(f, c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + invphi * (b - a);
            fd = checked(f, d);
        }
    }
    // the endpoints may beat the interior probes when the minimum sits on the bracket
    LineMinimum best = fc < fd ? LineMinimum{c, fc} : LineMinimum{d, fd};
    for (double t : {a, b, 0.5 * (a + b)}) {
        const double v = checked(f, t);
        if (v < best.value) best = {t, v};
    }
    return best;
}

LineMinimum minimize_convex(const ScalarFn& f, double t0, double step) {
    return minimize_line(f, bracket_minimum(f, t0, step));
}

CircleSup sup_circle(const PlaneContext& ctx, const std::function<double(Vec2)>& h) {
    const auto table = ctx.circle_table();
    const std::size_t n = table.size();
    std::size_t best = 0;
    double best_value = h(table[0].point);
    for (std::size_t i = 1; i < n; ++i) {
        const double v = h(table[i].point);
        if (v > best_value) {
            best_value = v;
            best = i;
        }
    }
    const double step = ctx.table_step();
    const double center = table[best].theta;
    const auto neg = [&](double theta) { return -h(circle_point_at(ctx, theta)); };
    const LineMinimum m = minimize_line(neg, {center - step, center + step});
    if (-m.value >= best_value) {
        const double theta = wrap_angle(m.t);
        return {theta, -m.value, circle_point_at(ctx, theta)};
    }
    return {center, best_value, table[best].point};
}

double finite_diff(const ScalarFn& f, double t0, double h) {
    return (f(t0 + h) - f(t0 - h)) / (2.0 * h);
}

double bisect_root(const ScalarFn& f, double lo, double hi) {
    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if ((flo > 0.0) == (fhi > 0.0)) {
        throw NumericalError("bisect_root: endpoints do not bracket a sign change");
    }
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

Triangle equilateral_triangle(const PlaneContext& ctx, Vec2 x) {
    if (std::abs(norm(ctx, x) - 1.0) > 1e-9) {
        throw DomainError("equilateral_triangle: x must be a unit vector");
    }
    // |x - gamma(theta)| grows from 0 to 2 on [theta_x, theta_x + pi]
    const double theta_x = polar_angle(x);
    const auto f = [&](double theta) { return norm(ctx, x - circle_point_at(ctx, theta)) - 1.0; };
    const double lo = theta_x + 1e-9;
    const double hi = theta_x + std::numbers::pi - 1e-9;
    if (!(f(lo) < 0.0 && f(hi) > 0.0)) {
        throw NumericalError("equilateral_triangle: bisection bracket failure");
    }
    const double theta = bisect_root(f, lo, hi);
    const Vec2 y = circle_point_at(ctx, theta);
    return {y, x - y};
}

}  // namespace minktrig
