#include <minktrig/birkhoff.hpp>
#include <minktrig/circle_calculus.hpp>
#include <minktrig/errors.hpp>
#include <minktrig/norm_model.hpp>
#include <minktrig/trig.hpp>

#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

namespace minktrig {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double column(const CirclePoint& cp, ArcKind kind) {
    switch (kind) {
        case ArcKind::NormLength: return cp.s_norm;
        case ArcKind::AntinormLength: return cp.s_anti;
        case ArcKind::SectorArea: return cp.sector_area2;
    }
    return 0.0;
}

}  // namespace

ArcParam arc_param(const PlaneContext& ctx, ArcKind kind) { return {kind, ctx.totals().of(kind)}; }

double theta_at(const PlaneContext& ctx, const ArcParam& param, double s) {
    double w = std::fmod(s, param.total);
    if (w < 0.0) w += param.total;
    if (w == 0.0) return 0.0;
    const auto table = ctx.circle_table();
    const std::size_t n = table.size();
    auto it = std::upper_bound(table.begin(), table.end(), w,
                               [&](double v, const CirclePoint& cp) { return v < column(cp, param.kind); });
    const std::size_t i = static_cast<std::size_t>(std::distance(table.begin(), it)) - 1;
    const double lo = table[i].theta;
    const double hi = (i + 1 < n) ? table[i + 1].theta : kTwoPi;
    const auto f = [&](double theta) { return cumulative_at(ctx, param.kind, theta) - w; };
    const double flo = column(table[i], param.kind) - w;
    const double fhi = ((i + 1 < n) ? column(table[i + 1], param.kind) : param.total) - w;
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (fhi < 0.0) return hi;  // rounding at the last cell
    std::uintmax_t iters = 64;
    const auto r = boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, boost::math::tools::eps_tolerance<double>(50),
                                                     iters);
    return 0.5 * (r.first + r.second);
}

double param_at(const PlaneContext& ctx, const ArcParam& param, Vec2 x) {
    if (x.is_zero()) {
        throw DomainError("param_at: zero vector");
    }
    return cumulative_at(ctx, param.kind, polar_angle(x));
}

Vec2 param_point(const PlaneContext& ctx, const ArcParam& param, double s) {
    return circle_point_at(ctx, theta_at(ctx, param, s));
}

double rho(const PlaneContext& ctx, double s) {
    const ArcParam p = arc_param(ctx, ArcKind::NormLength);
    const double h = p.total * 1e-4;
    const Vec2 bp = birkhoff_b(ctx, param_point(ctx, p, s + h));
    const Vec2 bm = birkhoff_b(ctx, param_point(ctx, p, s - h));
    return norm(ctx, (bp - bm) / (2.0 * h));
}

std::pair<double, double> d_ds_identities(const PlaneContext& ctx, Vec2 x, Vec2 y) {
    const ArcParam p = arc_param(ctx, ArcKind::NormLength);
    const double h = p.total * 1e-5;
    const double sx = param_at(ctx, p, x);
    const double sy = param_at(ctx, p, y);
    const double d1 = (sn(ctx, param_point(ctx, p, sx + h), y) - sn(ctx, param_point(ctx, p, sx - h), y)) / (2.0 * h);
    const double d2 = (cm(ctx, x, param_point(ctx, p, sy + h)) - cm(ctx, x, param_point(ctx, p, sy - h))) / (2.0 * h);
    return {std::abs(d1 - sn(ctx, birkhoff_b(ctx, x), y)), std::abs(d2 - cm(ctx, x, birkhoff_b(ctx, y)))};
}

OdeReport ode_residual(const PlaneContext& ctx, OdeFunction kind, std::size_t grid) {
    if (!ctx.is_radon()) {
        throw UnsupportedOperation("ode_residual requires a Radon context");
    }
    if (grid < 8) {
        throw DomainError("ode_residual: grid needs at least 8 points");
    }
    const ArcParam p = arc_param(ctx, ArcKind::NormLength);
    const Vec2 x0 = circle_point_at(ctx, 0.0);
    const auto f = [&](double s) {
        const Vec2 y = param_point(ctx, p, s);
        return kind == OdeFunction::SnFromX0 ? sn(ctx, x0, y) : cm(ctx, x0, y);
    };
    const double h = p.total / static_cast<double>(grid);
    std::vector<double> v(grid);
    for (std::size_t k = 0; k < grid; ++k) {
        v[k] = f(h * static_cast<double>(k));
    }
    OdeReport r;
    for (std::size_t k = 0; k < grid; ++k) {
        const double fm = v[(k + grid - 1) % grid];
        const double fp = v[(k + 1) % grid];
        const double s = h * static_cast<double>(k);
        const double d2 = (fp - 2.0 * v[k] + fm) / (h * h);
        const double res = std::abs(d2 + rho(ctx, s) * v[k]);
        if (res > r.residual) {
            r.residual = res;
            r.worst_s = s;
        }
    }
    const double hd = p.total * 1e-5;
    r.f0 = v[0];
    r.df0 = (f(hd) - f(-hd)) / (2.0 * hd);
    const double want_f0 = kind == OdeFunction::SnFromX0 ? 0.0 : 1.0;
    const double want_df0 = kind == OdeFunction::SnFromX0 ? 1.0 : 0.0;
    r.initial_error = std::max(std::abs(r.f0 - want_f0), std::abs(r.df0 - want_df0));
    return r;
}

AreaParamReport area_param_check(const PlaneContext& ctx) {
    AreaParamReport r;
    r.totals = ctx.totals();
    const auto table = ctx.circle_table();
    const std::size_t n = table.size();
    for (std::size_t i = 0; i < n; ++i) {
        const double a1 = (i + 1 < n) ? table[i + 1].sector_area2 : r.totals.area2;
        const double s1 = (i + 1 < n) ? table[i + 1].s_anti : r.totals.anti_length;
        const double gap = std::abs((a1 - table[i].sector_area2) - (s1 - table[i].s_anti));
        r.max_step_gap = std::max(r.max_step_gap, gap);
        if (ctx.is_radon()) {
            const double lo = std::min({table[i].s_norm, table[i].s_anti, table[i].sector_area2});
            const double hi = std::max({table[i].s_norm, table[i].s_anti, table[i].sector_area2});
            r.max_param_gap = std::max(r.max_param_gap, hi - lo);
        }
    }
    if (ctx.is_radon()) {
        const double lo = std::min({r.totals.norm_length, r.totals.anti_length, r.totals.area2});
        const double hi = std::max({r.totals.norm_length, r.totals.anti_length, r.totals.area2});
        r.max_param_gap = std::max(r.max_param_gap, hi - lo);
    }
    return r;
}

double norm_speed_defect(const PlaneContext& ctx) {
    const auto table = ctx.circle_table();
    const std::size_t n = table.size();
    const double total = ctx.totals().norm_length;
    // the spline class is 2 pi periodic, so work in u = 2 pi s / l
    const double to_u = kTwoPi / total;
    std::vector<double> u(n), xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
        u[i] = table[i].s_norm * to_u;
        xs[i] = table[i].point.x;
        ys[i] = table[i].point.y;
    }
    const PeriodicCubicSpline sx(u, xs);
    const PeriodicCubicSpline sy(std::move(u), std::move(ys));
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double ui = table[i].s_norm * to_u;
        const Vec2 d = Vec2{sx.derivative(ui), sy.derivative(ui)} * to_u;
        worst = std::max(worst, std::abs(norm(ctx, d) - 1.0));
    }
    return worst;
}

std::vector<Vec2> b_image_samples(const PlaneContext& ctx, double max_gap) {
    const auto table = ctx.circle_table();
    const std::size_t n = table.size();
    std::vector<Vec2> out;
    out.reserve(2 * n);
    const auto image = [&](double theta) { return birkhoff_b(ctx, circle_point_at(ctx, theta)); };
    // depth-first refinement of each table cell
    struct Cell {
        double a;
        double b;
        Vec2 ia;
        Vec2 ib;
        int depth;
    };
    for (std::size_t i = 0; i < n; ++i) {
        const double a = table[i].theta;
        const double b = (i + 1 < n) ? table[i + 1].theta : kTwoPi;
        std::vector<Cell> stack{{a, b, image(a), image(b), 0}};
        while (!stack.empty()) {
            const Cell c = stack.back();
            stack.pop_back();
            if (norm(ctx, c.ib - c.ia) <= max_gap || c.depth >= 60) {
                out.push_back(c.ia);
                continue;
            }
            const double m = 0.5 * (c.a + c.b);
            const Vec2 im = image(m);
            // right half first so the left half is emitted first
            stack.push_back({m, c.b, im, c.ib, c.depth + 1});
            stack.push_back({c.a, m, c.ia, im, c.depth + 1});
        }
    }
    return out;
}

double shoelace_area2(const PlaneContext& ctx, std::size_t vertices) {
    if (vertices < 3) {
        throw DomainError("shoelace_area2: need at least 3 vertices");
    }
    const Vec2 first = circle_point_at(ctx, 0.0);
    Vec2 prev = first;
    double sum = 0.0;
    for (std::size_t i = 1; i <= vertices; ++i) {
        const Vec2 cur =
            (i == vertices) ? first : circle_point_at(ctx, kTwoPi * static_cast<double>(i) / static_cast<double>(vertices));
        sum += det(prev, cur);
        prev = cur;
    }
    return ctx.omega_scale() * sum;
}

double shoelace_area2_extrapolated(const PlaneContext& ctx, std::size_t vertices) {
    const double coarse = shoelace_area2(ctx, vertices);
    const double fine = shoelace_area2(ctx, 2 * vertices);
    return (4.0 * fine - coarse) / 3.0;
}

}  // namespace minktrig
