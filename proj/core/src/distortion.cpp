#include <minktrig/circle_calculus.hpp>
#include <minktrig/distortion.hpp>
#include <minktrig/errors.hpp>
#include <minktrig/norm_model.hpp>
#include <minktrig/oracles.hpp>
#include <minktrig/trig.hpp>

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

namespace minktrig {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Vec2 unit(const PlaneContext& ctx, Vec2 v) { return v / norm(ctx, v); }

void require_independent(Vec2 x, Vec2 y, const char* what) {
    if (x.is_zero() || y.is_zero() ||
        std::abs(det(x, y)) <= 1e-12 * euclid_length(x) * euclid_length(y)) {
        throw DomainError(std::string(what) + ": vectors are dependent");
    }
}

}  // namespace

TangentPair tangent_points(const PlaneContext& ctx, Vec2 p, double tol) {
    const double np = norm(ctx, p);
    if (!(np > 1.0 + tol)) {
        std::ostringstream os;
        os << "tangent_points: point is not exterior (|p| = " << np << ")";
        throw DomainError(os.str());
    }
    // F > 0 on the arc visible from p
    const auto F = [&](double theta) {
        const Vec2 y = circle_point_at(ctx, theta);
        return dot(ctx.model().gradient(y), p - y);
    };
    // Walk once around the circle starting at the direction of p, where F > 0.
    // The start is an extra node, so arcs narrower than a table cell are seen.
    const auto table = ctx.circle_table();
    const std::size_t n = table.size();
    const double t0 = wrap_angle(polar_angle(p));
    const auto first = static_cast<std::size_t>(std::floor(t0 / ctx.table_step())) + 1;
    std::vector<double> angles{t0};
    std::vector<bool> signs{F(t0) > 0.0};
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t j = first + k;
        const double a = table[j % n].theta + kTwoPi * static_cast<double>(j / n);
        if (a <= angles.back() || a >= t0 + kTwoPi) continue;
        angles.push_back(a);
        signs.push_back(dot(table[j % n].normal, p - table[j % n].point) > 0.0);
    }
    angles.push_back(t0 + kTwoPi);
    signs.push_back(signs.front());

    double down = 0.0;
    double up = 0.0;
    int changes = 0;
    bool have_down = false;
    bool have_up = false;
    for (std::size_t k = 1; k < angles.size(); ++k) {
        if (signs[k] == signs[k - 1]) continue;
        ++changes;
        const double root = wrap_angle(bisect_root(F, angles[k - 1], angles[k]));
        if (signs[k - 1] && !have_down) {
            down = root;
            have_down = true;
        } else if (!signs[k - 1] && !have_up) {
            up = root;
            have_up = true;
        }
    }
    if (changes != 2 || !have_down || !have_up) {
        std::ostringstream os;
        os << "tangent_points: expected 2 sign changes, found " << changes;
        throw NumericalError(os.str());
    }
    TangentPair tp;
    tp.p = p;
    tp.q1 = circle_point_at(ctx, down);
    tp.q2 = circle_point_at(ctx, up);
    tp.len1 = norm(ctx, p - tp.q1);
    tp.len2 = norm(ctx, p - tp.q2);
    tp.low_accuracy = np < 1.0 + 1e-6;
    return tp;
}

double gamma_from_point(const PlaneContext& ctx, Vec2 p) {
    const TangentPair tp = tangent_points(ctx, p);
    return tp.len1 / tp.len2;
}

Vec2 mixed_apex(double p) {
    const double q = p / (p - 1.0);
    return {1.0 - std::pow(2.0, 1.0 - 1.0 / q), 1.0};
}

double foot_parameter(const PlaneContext& ctx, Vec2 x, Vec2 v) {
    if (x.is_zero()) {
        throw DomainError("foot_parameter: zero direction");
    }
    // the minimizer satisfies |t x| <= 2 |v|
    const double r = 2.0 * norm(ctx, v) / norm(ctx, x) + 1.0;
    const auto slope = [&](double t) {
        const Vec2 w = t * x - v;
        if (w.is_zero()) return 0.0;
        return dot(ctx.model().gradient(w), x);
    };
    return bisect_root(slope, -r, r);
}

double foot_parameter_oracle(const PlaneContext& ctx, Vec2 x, Vec2 v) {
    const auto f = [&](double t) { return norm(ctx, t * x - v); };
    return minimize_convex(f, 0.0, 0.5 * norm(ctx, v) / norm(ctx, x)).t;
}

double glogovskii_defect(const PlaneContext& ctx, Vec2 x, Vec2 y, Vec2 v) {
    require_independent(x, y, "glogovskii_defect");
    const double o = det(x, y);
    if (!(det(x, v) * o > 0.0 && det(v, y) * o > 0.0)) {
        throw DomainError("glogovskii_defect: v is not inside the angle");
    }
    const double beta = foot_parameter(ctx, x, v);
    const double alpha = foot_parameter(ctx, y, v);
    return cm(ctx, beta * x - v, v) - cm(ctx, alpha * y - v, v);
}

InscribedCircle inscribed_circle(const PlaneContext& ctx, Vec2 x, Vec2 y, double radius_fraction) {
    require_independent(x, y, "inscribed_circle");
    if (!(radius_fraction > 0.0)) {
        throw DomainError("inscribed_circle: radius fraction must be positive");
    }
    const Vec2 xu = unit(ctx, x);
    const Vec2 yu = unit(ctx, y);
    const auto point = [&](double tau) { return (1.0 - tau) * xu + tau * yu; };
    const auto defect = [&](double tau) { return glogovskii_defect(ctx, xu, yu, point(tau)); };
    // The defect is positive near x and negative near y, but at the very ends
    // the feet are computed from nearly cancelling differences; step inward
    // until the expected sign shows.
    constexpr double kEnds[] = {1e-9, 1e-7, 1e-5, 1e-3, 1e-2};
    double lo = -1.0;
    double hi = -1.0;
    for (double e : kEnds) {
        if (lo < 0.0 && defect(e) > 0.0) lo = e;
        if (hi < 0.0 && defect(1.0 - e) < 0.0) hi = 1.0 - e;
    }
    if (lo < 0.0 || hi < 0.0) {
        throw NumericalError("inscribed_circle: bisector bracket not found");
    }
    const double tau = bisect_root(defect, lo, hi);
    const Vec2 v = point(tau);
    const double d = norm(ctx, foot_parameter(ctx, xu, v) * xu - v);

    const double dist_x_to_y = norm(ctx, foot_parameter(ctx, yu, xu) * yu - xu);
    const double dist_y_to_x = norm(ctx, foot_parameter(ctx, xu, yu) * xu - yu);
    const double r = radius_fraction * std::min(dist_x_to_y, dist_y_to_x);

    InscribedCircle c;
    c.center = (r / d) * v;
    c.beta = foot_parameter(ctx, xu, c.center);
    c.alpha = foot_parameter(ctx, yu, c.center);
    c.radius = 0.5 * (norm(ctx, c.beta * xu - c.center) + norm(ctx, c.alpha * yu - c.center));
    return c;
}

double gamma_pair(const PlaneContext& ctx, Vec2 x, Vec2 y) {
    const InscribedCircle c = inscribed_circle(ctx, x, y);
    return c.beta / c.alpha;
}

double radon_gamma_formula(const PlaneContext& ctx, Vec2 x, Vec2 y) {
    if (!ctx.is_radon()) {
        throw UnsupportedOperation("radon_gamma_formula requires a Radon context");
    }
    require_independent(x, y, "radon_gamma_formula");
    const Vec2 xu = unit(ctx, x);
    const Vec2 yu = unit(ctx, y);
    return cm(ctx, xu, xu + yu) / cm(ctx, yu, xu + yu);
}

Vec2 busemann_ray(const PlaneContext& ctx, Vec2 x, Vec2 y) {
    require_independent(x, y, "busemann_ray");
    return unit(ctx, x) + unit(ctx, y);
}

LimitProbe gamma_limit_probe(const PlaneContext& ctx, Vec2 x, const std::vector<double>& eps_list) {
    const ArcParam arc = arc_param(ctx, ArcKind::NormLength);
    const Vec2 xu = unit(ctx, x);
    const double sx = param_at(ctx, arc, xu);
    const double sm = param_at(ctx, arc, -xu);
    LimitProbe out;
    for (double eps : eps_list) {
        out.near_x.push_back(gamma_pair(ctx, xu, param_point(ctx, arc, sx + eps)));
        out.near_minus_x.push_back(gamma_pair(ctx, xu, param_point(ctx, arc, sm + eps)));
    }
    return out;
}

ParallelChords parallel_chords(const PlaneContext& ctx, Vec2 t1, Vec2 t2) {
    require_independent(t1, t2, "parallel_chords");
    ParallelChords f;
    // b(q) is the quarter turn of the gradient, so b(q_i) || t_i means grad || -J t_i
    f.q1 = support_point(ctx, {t1.y, -t1.x});
    f.q2 = support_point(ctx, {t2.y, -t2.x});
    const double s = det(f.q2 - f.q1, t2) / det(t1, t2);
    f.p = f.q1 + s * t1;
    f.b1 = unit(ctx, f.q1 - f.p);
    f.b2 = unit(ctx, f.q2 - f.p);
    f.b = unit(ctx, f.b1 + f.b2);
    f.c1 = cm(ctx, f.b1, f.b) * f.b1;
    f.c2 = cm(ctx, f.b2, f.b) * f.b2;
    f.defect = std::abs(sn(ctx, f.q1 - f.q2, f.c1 - f.c2));
    f.collinearity = std::abs(sn(ctx, f.p, f.b));
    return f;
}

double parallel_chords_check(const PlaneContext& ctx, Vec2 t1, Vec2 t2) {
    if (!ctx.is_radon()) {
        throw UnsupportedOperation("parallel_chords_check requires a Radon context");
    }
    return parallel_chords(ctx, t1, t2).defect;
}

}  // namespace minktrig
