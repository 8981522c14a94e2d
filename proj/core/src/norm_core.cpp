#include <minktrig/birkhoff.hpp>
#include <minktrig/errors.hpp>
#include <minktrig/norm_core.hpp>
#include <minktrig/norm_model.hpp>
#include <minktrig/oracles.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace minktrig {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// 4-point Gauss-Legendre rule on [-1, 1].
constexpr std::array<double, 4> kGaussNodes{-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                                            0.8611363115940526};
constexpr std::array<double, 4> kGaussWeights{0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                                              0.3478548451374538};

double integrate_speed(const PlaneContext& ctx, ArcKind kind, double a, double b) {
    if (b == a) return 0.0;
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (std::size_t k = 0; k < kGaussNodes.size(); ++k) {
        sum += kGaussWeights[k] * arc_speed(ctx, kind, mid + half * kGaussNodes[k]);
    }
    return half * sum;
}

void require_finite(Vec2 v, const char* what) {
    if (!v.is_finite()) {
        throw DomainError(std::string(what) + ": non-finite input");
    }
}

}  // namespace

const char* to_string(RadonFlag flag) {
    switch (flag) {
        case RadonFlag::Radon: return "Radon";
        case RadonFlag::NotRadon: return "NotRadon";
        case RadonFlag::Unknown: return "Unknown";
    }
    return "Unknown";
}

const char* to_string(ArcKind kind) {
    switch (kind) {
        case ArcKind::NormLength: return "norm_length";
        case ArcKind::AntinormLength: return "antinorm_length";
        case ArcKind::SectorArea: return "sector_area";
    }
    return "unknown";
}

double CircleTotals::of(ArcKind kind) const {
    switch (kind) {
        case ArcKind::NormLength: return norm_length;
        case ArcKind::AntinormLength: return anti_length;
        case ArcKind::SectorArea: return area2;
    }
    return 0.0;
}

double PlaneContext::table_step() const { return kTwoPi / static_cast<double>(table_->size()); }

RadonFlag classify_radon_defect(double max_defect) {
    if (max_defect < kRadonDefectBelow) return RadonFlag::Radon;
    if (max_defect > kNotRadonDefectAbove) return RadonFlag::NotRadon;
    return RadonFlag::Unknown;
}

double wrap_angle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    if (t >= kTwoPi) t = 0.0;
    return t;
}

double norm(const PlaneContext& ctx, Vec2 v) {
    require_finite(v, "norm");
    return ctx.model().value(v);
}

Vec2 norm_gradient(const PlaneContext& ctx, Vec2 v) {
    require_finite(v, "norm_gradient");
    if (v.is_zero()) {
        throw DomainError("norm_gradient: zero vector");
    }
    return ctx.model().gradient(v);
}

double symplectic(const PlaneContext& ctx, Vec2 u, Vec2 v) { return ctx.omega_scale() * det(u, v); }

double antinorm(const PlaneContext& ctx, Vec2 v) {
    require_finite(v, "antinorm");
    if (v.is_zero()) return 0.0;
    const auto table = ctx.circle_table();
    const std::size_t n = table.size();
    // |[v, y]| is even in y, so half of an even-sized table suffices
    const std::size_t scan = (n % 2 == 0) ? n / 2 : n;
    std::size_t best = 0;
    double best_value = -1.0;
    for (std::size_t i = 0; i < scan; ++i) {
        const double a = std::abs(det(v, table[i].point));
        if (a > best_value) {
            best_value = a;
            best = i;
        }
    }
    const double step = ctx.table_step();
    const double center = table[best].theta;
    const auto neg = [&](double theta) { return -std::abs(det(v, circle_point_at(ctx, theta))); };
    const LineMinimum m = minimize_line(neg, {center - step, center + step});
    return ctx.omega_scale() * std::max(best_value, -m.value);
}

Vec2 circle_point_at(const PlaneContext& ctx, double theta) {
    const Vec2 u = unit_direction(theta);
    return u / ctx.model().value(u);
}

Vec2 circle_velocity(const PlaneContext& ctx, double theta) {
    const Vec2 u = unit_direction(theta);
    const Vec2 du = quarter_turn(u);
    const double n = ctx.model().value(u);
    const Vec2 g = ctx.model().gradient(u);
    return du / n - u * (dot(g, du) / (n * n));
}

double arc_speed(const PlaneContext& ctx, ArcKind kind, double theta) {
    const Vec2 vel = circle_velocity(ctx, theta);
    switch (kind) {
        case ArcKind::NormLength: return ctx.model().value(vel);
        case ArcKind::AntinormLength: return antinorm(ctx, vel);
        case ArcKind::SectorArea: return symplectic(ctx, circle_point_at(ctx, theta), vel);
    }
    return 0.0;
}

double cumulative_at(const PlaneContext& ctx, ArcKind kind, double theta) {
    const auto table = ctx.circle_table();
    const double t = wrap_angle(theta);
    const double step = ctx.table_step();
    std::size_t i = static_cast<std::size_t>(t / step);
    if (i >= table.size()) i = table.size() - 1;
    double base = 0.0;
    switch (kind) {
        case ArcKind::NormLength: base = table[i].s_norm; break;
        case ArcKind::AntinormLength: base = table[i].s_anti; break;
        case ArcKind::SectorArea: base = table[i].sector_area2; break;
    }
    return base + integrate_speed(ctx, kind, table[i].theta, t);
}

CirclePoint sample_circle(const PlaneContext& ctx, double theta) {
    CirclePoint cp;
    cp.theta = wrap_angle(theta);
    cp.point = circle_point_at(ctx, cp.theta);
    cp.normal = ctx.model().gradient(cp.point);
    cp.tangent = quarter_turn(cp.normal) / (ctx.omega_scale() * dot(cp.normal, cp.point));
    cp.s_norm = cumulative_at(ctx, ArcKind::NormLength, cp.theta);
    cp.s_anti = cumulative_at(ctx, ArcKind::AntinormLength, cp.theta);
    cp.sector_area2 = cumulative_at(ctx, ArcKind::SectorArea, cp.theta);
    return cp;
}

Vec2 support_point(const PlaneContext& ctx, Vec2 w) {
    require_finite(w, "support_point");
    if (w.is_zero()) {
        throw DomainError("support_point: zero functional");
    }
    const CircleSup sup = sup_circle(ctx, [&](Vec2 y) { return dot(w, y); });
    // Polish on the first-order condition: the normal at the maximizer is
    // parallel to w. Its sign stays reliable where the circle is flat and the
    // value comparison of the golden search is not.
    const double step = ctx.table_step();
    const auto f = [&](double theta) { return det(ctx.model().gradient(circle_point_at(ctx, theta)), w); };
    const double lo = sup.theta - 1.5 * step;
    const double hi = sup.theta + 1.5 * step;
    const double flo = f(lo);
    const double fhi = f(hi);
    if (flo > 0.0 && fhi < 0.0) {
        return circle_point_at(ctx, bisect_root(f, lo, hi));
    }
    return sup.point;
}

std::size_t nearest_table_index(const PlaneContext& ctx, double theta) {
    const std::size_t n = ctx.table_size();
    const auto i = static_cast<std::size_t>(std::llround(wrap_angle(theta) / ctx.table_step()));
    return i % n;
}

namespace {

std::vector<CirclePoint> sample_points(const PlaneContext& ctx, std::size_t n) {
    std::vector<CirclePoint> pts(n);
    for (std::size_t i = 0; i < n; ++i) {
        CirclePoint& cp = pts[i];
        cp.theta = kTwoPi * static_cast<double>(i) / static_cast<double>(n);
        cp.point = circle_point_at(ctx, cp.theta);
        cp.normal = ctx.model().gradient(cp.point);
        cp.tangent = quarter_turn(cp.normal) / (ctx.omega_scale() * dot(cp.normal, cp.point));
    }
    return pts;
}

}  // namespace

PlaneContext build_context(const NormSpec& spec, const ContextOptions& options) {
    if (options.table_size < 64) {
        throw ConfigError("circle table needs at least 64 samples");
    }
    if (options.omega_scale < 0.0 || !std::isfinite(options.omega_scale)) {
        throw ConfigError("omega_scale must be positive");
    }
    PlaneContext ctx;
    ctx.spec_ = spec;
    ctx.model_ = make_norm_model(spec);
    ctx.omega_ = options.omega_scale > 0.0 ? options.omega_scale : 1.0;

    const std::size_t n = options.table_size;
    const auto fill = [&]() {
        ctx.table_ = std::make_shared<const std::vector<CirclePoint>>(sample_points(ctx, n));
        std::vector<CirclePoint> pts(ctx.table_->begin(), ctx.table_->end());
        double sn = 0.0, sa = 0.0, ar = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            pts[i].s_norm = sn;
            pts[i].s_anti = sa;
            pts[i].sector_area2 = ar;
            const double a = pts[i].theta;
            const double b = (i + 1 < n) ? pts[i + 1].theta : kTwoPi;
            sn += integrate_speed(ctx, ArcKind::NormLength, a, b);
            sa += integrate_speed(ctx, ArcKind::AntinormLength, a, b);
            ar += integrate_speed(ctx, ArcKind::SectorArea, a, b);
        }
        ctx.table_ = std::make_shared<const std::vector<CirclePoint>>(std::move(pts));
        ctx.totals_ = {sn, sa, ar};
    };
    fill();

    const VerifyReport probe = is_radon(ctx, 256, kRadonDefectBelow);
    ctx.radon_defect_ = probe.max_residual;
    ctx.radon_ = classify_radon_defect(probe.max_residual);

    if (options.omega_scale == 0.0 && options.normalize_radon && ctx.radon_ == RadonFlag::Radon) {
        // |.|_a = c |.| in a Radon plane; dividing the form by c makes them equal
        double c = 0.0;
        constexpr std::size_t kProbe = 64;
        for (std::size_t k = 0; k < kProbe; ++k) {
            c += antinorm(ctx, (*ctx.table_)[k * n / kProbe].point);
        }
        c /= static_cast<double>(kProbe);
        ctx.omega_ /= c;
        fill();
        double worst = 0.0;
        for (const auto& cp : *ctx.table_) {
            worst = std::max(worst, std::abs(antinorm(ctx, cp.point) - 1.0));
        }
        if (worst >= 1e-6) {
            std::ostringstream os;
            os << "Radon normalization failed: max | |y|_a - 1 | = " << worst;
            throw NumericalError(os.str());
        }
    }
    return ctx;
}

}  // namespace minktrig
