#include <minktrig/birkhoff.hpp>
#include <minktrig/circle_calculus.hpp>
#include <minktrig/distortion.hpp>
#include <minktrig/errors.hpp>
#include <minktrig/norm_model.hpp>
#include <minktrig/oracles.hpp>
#include <minktrig/trig.hpp>
#include <minktrig/verify.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

namespace minktrig {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

class Sampler {
public:
    Sampler(const PlaneContext& ctx, std::uint64_t seed, std::uint64_t salt)
        : ctx_(ctx), rng_(seed ^ (0x9E3779B97F4A7C15ULL * (salt + 1))) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    double angle() { return uniform(0.0, kTwoPi); }
    Vec2 unit() { return circle_point_at(ctx_, angle()); }
    Vec2 vec() { return uniform(0.25, 4.0) * unit(); }

    /// Unit pair whose polar angles differ from 0 and pi by at least `gap`.
    std::pair<Vec2, Vec2> independent_units(double gap = 0.05) {
        for (;;) {
            const double a = angle();
            const double b = angle();
            const double d = std::abs(std::remainder(a - b, std::numbers::pi));
            if (d >= gap) return {circle_point_at(ctx_, a), circle_point_at(ctx_, b)};
        }
    }

private:
    const PlaneContext& ctx_;
    std::mt19937_64 rng_;
};

struct Worst {
    double value{-std::numeric_limits<double>::infinity()};
    Vec2 x;
    Vec2 y;

    void offer(double v, Vec2 a, Vec2 b) {
        if (v > value) {
            value = v;
            x = a;
            y = b;
        }
    }
};

VerifyReport report(std::string name, bool pass, const Worst& w) {
    VerifyReport r;
    r.check = std::move(name);
    r.pass = pass;
    r.max_residual = std::isfinite(w.value) ? w.value : 0.0;
    r.witness_x = w.x;
    r.witness_y = w.y;
    return r;
}

std::size_t scaled(std::size_t n, std::size_t divisor, std::size_t floor_count) {
    return std::max(n / divisor, floor_count);
}

// --- core ----------------------------------------------------------------

void core_checks(const PlaneContext& ctx, const VerifyOptions& o, std::vector<VerifyReport>& out) {
    {
        Sampler s(ctx, o.seed, 101);
        Worst w;
        for (std::size_t i = 0; i < o.samples; ++i) {
            const Vec2 v = s.vec();
            for (double lambda : {-2.0, -0.5, 3.0}) {
                const double rel = std::abs(norm(ctx, lambda * v) - std::abs(lambda) * norm(ctx, v)) / norm(ctx, v);
                w.offer(rel, v, lambda * v);
            }
        }
        out.push_back(report("norm_homogeneity", w.value <= 1e-12, w));
    }
    {
        Sampler s(ctx, o.seed, 102);
        Worst w;
        for (std::size_t i = 0; i < o.samples; ++i) {
            const Vec2 x = s.vec();
            const Vec2 y = s.vec();
            // positive means the triangle inequality is violated
            w.offer(norm(ctx, x + y) - norm(ctx, x) - norm(ctx, y), x, y);
        }
        out.push_back(report("norm_triangle", w.value <= 1e-12, w));
    }
    {
        Sampler s(ctx, o.seed, 103);
        Worst w;
        for (std::size_t i = 0; i < o.samples; ++i) {
            const Vec2 v = s.vec();
            const Vec2 g = norm_gradient(ctx, v);
            const double euler = std::abs(dot(g, v) - norm(ctx, v)) / norm(ctx, v);
            const double scale = euclid_length(g - norm_gradient(ctx, 2.5 * v));
            const double h = 1e-6 * norm(ctx, v);
            const Vec2 fd{(norm(ctx, v + Vec2{h, 0}) - norm(ctx, v - Vec2{h, 0})) / (2 * h),
                          (norm(ctx, v + Vec2{0, h}) - norm(ctx, v - Vec2{0, h})) / (2 * h)};
            const double fd_err = std::max(std::abs(fd.x - g.x), std::abs(fd.y - g.y));
            // Euler 1e-9 relative, homogeneity 1e-12, finite differences 1e-5
            w.offer(std::max({euler / 1e-9, scale / 1e-12, fd_err / 1e-5}), v, g);
        }
        out.push_back(report("gradient_euler_fd", w.value <= 1.0, w));
    }
    {
        Sampler s(ctx, o.seed, 104);
        Worst w;
        for (std::size_t i = 0; i < scaled(o.samples, 10, 20); ++i) {
            const Vec2 x = s.vec();
            const Vec2 y = s.vec();
            const double ax = antinorm(ctx, x);
            const double tri = antinorm(ctx, x + y) - ax - antinorm(ctx, y);
            const double hom = std::abs(antinorm(ctx, -3.0 * x) - 3.0 * ax) / ax;
            w.offer(std::max(tri, hom), x, y);
        }
        out.push_back(report("antinorm_norm_axioms", w.value <= 1e-10, w));
    }
}

// --- radon / b map ---------------------------------------------------------

void radon_checks(const PlaneContext& ctx, const VerifyOptions& o, std::vector<VerifyReport>& out) {
    {
        VerifyReport r = is_radon(ctx, 256);
        const RadonFlag flag = classify_radon_defect(r.max_residual);
        r.check = std::string("radon:") + to_string(flag);
        r.pass = flag != RadonFlag::Unknown;
        out.push_back(r);
    }
    if (ctx.is_radon()) {
        Worst w;
        const auto table = ctx.circle_table();
        for (std::size_t k = 0; k < 256; ++k) {
            const Vec2 y = table[k * table.size() / 256].point;
            w.offer(std::abs(antinorm(ctx, y) - 1.0), y, y);
        }
        out.push_back(report("antinorm_equals_norm", w.value < 1e-6, w));
    }
    {
        Sampler s(ctx, o.seed, 201);
        Worst unit_form;
        Worst homog;
        Worst oracle;
        for (std::size_t i = 0; i < o.samples; ++i) {
            const Vec2 x = s.unit();
            const Vec2 bx = birkhoff_b(ctx, x);
            unit_form.offer(std::abs(symplectic(ctx, x, bx) - 1.0), x, bx);
            const double h = std::max(euclid_length(birkhoff_b(ctx, 2.0 * x) - bx),
                                      euclid_length(birkhoff_b(ctx, -x) + bx));
            homog.offer(h / euclid_length(bx), x, bx);
            if (i < scaled(o.samples, 10, 20)) {
                oracle.offer(std::max(std::abs(antinorm(ctx, bx) - 1.0), birkhoff_defect(ctx, x, bx)), x, bx);
            }
        }
        out.push_back(report("b_unit_form", unit_form.value <= 1e-8, unit_form));
        out.push_back(report("b_homogeneous_odd", homog.value <= 1e-10, homog));
        out.push_back(report("b_oracle", oracle.value <= 1e-9, oracle));
    }
    if (ctx.is_radon()) {
        Sampler s(ctx, o.seed, 202);
        Worst w;
        for (std::size_t i = 0; i < scaled(o.samples, 10, 20); ++i) {
            const Vec2 z = s.unit();
            const Vec2 bb = birkhoff_b(ctx, birkhoff_b(ctx, z));
            const Vec2 want = -1.0 * z / antinorm(ctx, z);
            w.offer(norm(ctx, bb - want), z, bb);
        }
        out.push_back(report("b_squared", w.value < 1e-6, w));
    }
}

// --- trig ----------------------------------------------------------------

void trig_checks(const PlaneContext& ctx, const VerifyOptions& o, std::vector<VerifyReport>& out) {
    const bool radon = ctx.is_radon();
    {
        Sampler s(ctx, o.seed, 301);
        Worst bounds;
        Worst forms;
        for (std::size_t i = 0; i < o.samples; ++i) {
            const Vec2 x = s.vec();
            const Vec2 y = s.vec();
            const double c = cm(ctx, x, y);
            bounds.offer(std::abs(c) - 1.0, x, y);
            if (i < scaled(o.samples, 4, 50)) {
                const double a = cm_inf_form(ctx, x, y);
                const double e = cm_external_form(ctx, x, y);
                double dev = std::max(std::abs(c - a), std::abs(a - e));
                dev = std::max(dev, std::abs(c - e));
                forms.offer(dev, x, y);
            }
        }
        out.push_back(report("cm_bounds", bounds.value <= 1e-12, bounds));
        out.push_back(report("cm_three_forms", forms.value < 1e-6, forms));
    }
    {
        Sampler s(ctx, o.seed, 302);
        Worst w;
        for (std::size_t i = 0; i < scaled(o.samples, 4, 50); ++i) {
            const Vec2 x = s.unit();
            const Vec2 y = s.unit();
            const Vec2 rec = cm(ctx, x, y) * x + sn(ctx, x, y) * birkhoff_b(ctx, x);
            w.offer(norm(ctx, y - rec), x, y);
        }
        out.push_back(radon ? report("polar_coordinates", w.value < 1e-6, w)
                            : report("polar_coordinates_violation", w.value > 1e-3, w));
    }
    {
        Sampler s(ctx, o.seed, 303);
        Worst expansion;
        Worst pyth_general;
        Worst pyth_cn;
        const std::size_t bases = 8;
        for (std::size_t k = 0; k < bases; ++k) {
            const ConjugatePair pair = conjugate_pair(ctx, s.unit());
            const Vec2 z = pair.u;
            const Vec2 vb = pair.v / norm(ctx, pair.v);
            for (std::size_t i = 0; i < scaled(o.samples, 8 * bases, 10); ++i) {
                const Vec2 y = s.unit();
                const Vec2 rec = cm(ctx, z, y) * z + cm(ctx, vb, y) * vb;
                expansion.offer(norm(ctx, y - rec), z, y);
                const double general = cm(ctx, y, z) * cm(ctx, z, y) + cm(ctx, y, pair.v) * cm(ctx, pair.v, y);
                pyth_general.offer(std::abs(general - 1.0), y, z);
                if (radon) {
                    const double c1 = cn(ctx, y, z);
                    const double c2 = cn(ctx, y, birkhoff_b(ctx, z));
                    pyth_cn.offer(std::abs(c1 * c1 + c2 * c2 - 1.0), y, z);
                }
            }
        }
        out.push_back(report("conjugate_base_expansion", expansion.value < 1e-6, expansion));
        out.push_back(report("pythagorean_conjugate_base", pyth_general.value < 1e-6, pyth_general));
        if (radon) {
            out.push_back(report("pythagorean_cn", pyth_cn.value < 1e-6, pyth_cn));
        }
    }
    {
        Sampler s(ctx, o.seed, 304);
        Worst w;
        for (std::size_t i = 0; i < o.samples; ++i) {
            const Vec2 x = s.vec();
            const Vec2 y = s.vec();
            w.offer(std::abs(cm(ctx, x, y) - cm(ctx, y, x)), x, y);
        }
        out.push_back(ctx.spec().is_euclidean() ? report("cm_symmetric", w.value < 1e-9, w)
                                                : report("cm_asymmetry_witness", w.value > 1e-6, w));
    }
    {
        Sampler s(ctx, o.seed, 305);
        Worst w;
        for (std::size_t i = 0; i < o.samples; ++i) {
            const Vec2 x = s.vec();
            const Vec2 y = s.vec();
            const double p = cm(ctx, x, y) * cm(ctx, y, x);
            w.offer(-p, x, y);
        }
        out.push_back(radon ? report("cm_sign_symmetry", w.value <= 1e-12, w)
                            : report("cm_sign_violation", w.value > 1e-3, w));
    }
    {
        Sampler s(ctx, o.seed, 306);
        Worst cm_sum;
        Worst ca_sum;
        for (std::size_t i = 0; i < scaled(o.samples, 20, 20); ++i) {
            const Vec2 x = s.unit();
            const Triangle t = equilateral_triangle(ctx, x);
            cm_sum.offer(std::abs(cm(ctx, x, t.y) + cm(ctx, x, t.z) - 1.0), x, t.y);
            ca_sum.offer(std::abs(ca(ctx, x, t.y) + ca(ctx, x, t.z) + ca(ctx, t.y, -1.0 * t.z) - 1.5), x, t.y);
        }
        out.push_back(report("equilateral_cm_sum", cm_sum.value < 1e-6, cm_sum));
        out.push_back(report("equilateral_ca_sum", ca_sum.value < 1e-6, ca_sum));
    }
    {
        Sampler s(ctx, o.seed, 307);
        Worst iso;
        Worst buse;
        for (std::size_t i = 0; i < scaled(o.samples, 4, 50); ++i) {
            const auto [x, y] = s.independent_units();
            const Vec2 d = y - x;
            const Vec2 z = support_point(ctx, {d.y, -d.x});
            iso.offer(std::abs(cm(ctx, z, x) - cm(ctx, z, y)), x, y);
            const Vec2 zb = busemann_ray(ctx, x, y);
            buse.offer(std::abs(cm(ctx, zb, x) + cm(ctx, zb, y) - norm(ctx, x + y)), x, y);
        }
        out.push_back(report("isosceles_altitude", iso.value < 1e-7, iso));
        out.push_back(report("busemann_identity", buse.value < 1e-7, buse));
    }
    {
        Sampler s(ctx, o.seed, 308);
        Worst g;
        Worst lin;
        Worst grad_dir;
        for (std::size_t i = 0; i < o.samples; ++i) {
            const Vec2 x = s.vec();
            const Vec2 y = s.vec();
            const double scale = norm(ctx, x) * norm(ctx, y);
            g.offer(std::abs(gateaux(ctx, x, y) - scale * cm(ctx, x, y)) / scale, x, y);
            const Vec2 u = s.vec();
            const Vec2 v = s.vec();
            const double a = s.uniform(-2.0, 2.0);
            const double b = s.uniform(-2.0, 2.0);
            const double lhs = semi_inner(ctx, x, a * u + b * v);
            const double rhs = a * semi_inner(ctx, x, u) + b * semi_inner(ctx, x, v);
            lin.offer(std::abs(lhs - rhs) / (1.0 + std::abs(rhs)), x, u);
            if (i < scaled(o.samples, 20, 20)) {
                grad_dir.offer(norm(ctx, norm_gradient_direction(ctx, x) - x / norm(ctx, x)), x, x);
            }
        }
        out.push_back(report("gateaux_semi_inner", g.value < 1e-5, g));
        out.push_back(report("semi_inner_linearity", lin.value < 1e-8, lin));
        out.push_back(report("norm_gradient_direction", grad_dir.value < 1e-6, grad_dir));
    }
}

// --- distortion -----------------------------------------------------------

void distortion_checks(const PlaneContext& ctx, const VerifyOptions& o, std::vector<VerifyReport>& out) {
    const bool radon = ctx.is_radon();
    const std::size_t pairs = scaled(o.samples, 20, 20);
    {
        Sampler s(ctx, o.seed, 401);
        Worst recip;
        Worst central;
        Worst indep;
        Worst center;
        Worst formula;
        Worst factors;
        for (std::size_t i = 0; i < pairs; ++i) {
            const auto [x, y] = s.independent_units();
            const double gxy = gamma_pair(ctx, x, y);
            recip.offer(std::abs(gxy * gamma_pair(ctx, y, x) - 1.0), x, y);
            central.offer(std::abs(gxy - gamma_pair(ctx, -1.0 * x, -1.0 * y)), x, y);
            const InscribedCircle small = inscribed_circle(ctx, x, y, 0.05);
            indep.offer(std::abs(gxy - small.beta / small.alpha), x, y);
            center.offer(std::abs(glogovskii_defect(ctx, x, y, small.center)), x, y);
            if (radon) {
                formula.offer(std::abs(radon_gamma_formula(ctx, x, y) - gxy), x, y);
                const double f1 = cm(ctx, x, x + y);
                const double f2 = cm(ctx, y, x + y);
                factors.offer(-std::min(f1, f2), x, y);
            }
        }
        out.push_back(report("gamma_reciprocity", recip.value < 1e-7, recip));
        out.push_back(report("gamma_central_symmetry", central.value < 1e-7, central));
        out.push_back(report("inscribed_circle_independence", indep.value < 1e-7, indep));
        out.push_back(report("glogovskii_center", center.value < 1e-7, center));
        if (radon) {
            out.push_back(report("radon_gamma_formula", formula.value < 1e-6, formula));
            out.push_back(report("radon_formula_factors", factors.value <= 1e-12, factors));
        }
    }
    {
        Sampler s(ctx, o.seed, 402);
        Worst matched;
        Worst gamma_one;
        for (std::size_t i = 0; i < pairs; ++i) {
            const Vec2 p = s.uniform(1.2, 4.0) * s.unit();
            const TangentPair tp = tangent_points(ctx, p);
            const double g = tp.len1 / tp.len2;
            const double pair = gamma_pair(ctx, tp.q1 - p, tp.q2 - p);
            matched.offer(std::abs(g - pair), p, tp.q1);
            gamma_one.offer(std::abs(g - 1.0), p, tp.q1);
        }
        out.push_back(report("gamma_point_vs_pair", matched.value < 1e-6, matched));
        out.push_back(ctx.spec().is_euclidean() ? report("gamma_identically_one", gamma_one.value < 1e-8, gamma_one)
                                                : report("gamma_not_one_witness", gamma_one.value > 1e-6, gamma_one));
    }
    {
        Sampler s(ctx, o.seed, 403);
        Worst foot;
        for (std::size_t i = 0; i < pairs; ++i) {
            const Vec2 x = s.unit();
            const Vec2 v = s.vec();
            const double t = foot_parameter(ctx, x, v);
            const double t_oracle = foot_parameter_oracle(ctx, x, v);
            const double gap = (norm(ctx, t * x - v) - norm(ctx, t_oracle * x - v)) / norm(ctx, v);
            foot.offer(gap, x, v);
        }
        out.push_back(report("foot_parameter_oracle", foot.value <= 1e-12, foot));
    }
    {
        Sampler s(ctx, o.seed, 404);
        Worst chords;
        Worst collinear;
        for (std::size_t i = 0; i < pairs; ++i) {
            const auto [t1, t2] = s.independent_units(0.2);
            const ParallelChords f = parallel_chords(ctx, t1, t2);
            chords.offer(f.defect, t1, t2);
            collinear.offer(f.collinearity, t1, t2);
        }
        if (radon) {
            out.push_back(report("parallel_chords", chords.value < 1e-6, chords));
            out.push_back(report("apex_collinearity", collinear.value < 1e-6, collinear));
        } else {
            out.push_back(report("apex_collinearity_violation", collinear.value > 1e-4, collinear));
        }
    }
    if (radon) {
        Sampler s(ctx, o.seed, 405);
        const std::vector<double> eps{0.3, 0.1, 0.03, 0.01};
        // Convergence is asserted on the last step; monotone approach over the
        // whole list is only counted, since it fails where the first-order
        // term changes sign or the arc crosses a curvature singularity.
        Worst w;
        std::size_t non_monotone = 0;
        for (std::size_t i = 0; i < 4; ++i) {
            const Vec2 x = s.unit();
            const LimitProbe probe = gamma_limit_probe(ctx, x, eps);
            for (const auto* seq : {&probe.near_x, &probe.near_minus_x}) {
                bool monotone = true;
                for (std::size_t k = 1; k < seq->size(); ++k) {
                    // 1e-9 is the rounding floor for planes where gamma is identically 1
                    if (std::abs((*seq)[k] - 1.0) > std::abs((*seq)[k - 1] - 1.0) + 1e-9) monotone = false;
                }
                if (!monotone) ++non_monotone;
                const std::size_t last = seq->size() - 1;
                w.offer(std::abs((*seq)[last] - 1.0) - std::abs((*seq)[last - 1] - 1.0) - 1e-9, x, x);
            }
        }
        VerifyReport r = report("gamma_limits", w.value <= 0.0, w);
        r.note = std::to_string(non_monotone) + " of 8 sequences not monotone";
        out.push_back(std::move(r));
    }
}

// --- calculus -------------------------------------------------------------

void calculus_checks(const PlaneContext& ctx, const VerifyOptions& o, std::vector<VerifyReport>& out) {
    const bool radon = ctx.is_radon();
    const ArcParam arc = arc_param(ctx, ArcKind::NormLength);
    {
        Sampler s(ctx, o.seed, 501);
        Worst w;
        for (std::size_t i = 0; i < scaled(o.samples, 20, 20); ++i) {
            const Vec2 x = s.unit();
            const Vec2 y = s.unit();
            const auto [r1, r2] = d_ds_identities(ctx, x, y);
            w.offer(std::max(r1, r2), x, y);
        }
        out.push_back(report("d_ds_identities", w.value < 1e-5, w));
    }
    {
        Sampler s(ctx, o.seed, 502);
        Worst w;
        for (std::size_t i = 0; i < o.samples; ++i) {
            const double theta = s.angle();
            const double back = theta_at(ctx, arc, cumulative_at(ctx, ArcKind::NormLength, theta));
            const double err = std::abs(std::remainder(back - theta, kTwoPi));
            w.offer(err, circle_point_at(ctx, theta), circle_point_at(ctx, back));
        }
        out.push_back(report("arc_param_roundtrip", w.value < 1e-8, w));
    }
    {
        const std::size_t grid = 64;
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        Worst w;
        for (std::size_t k = 0; k < grid; ++k) {
            const double s = arc.total * static_cast<double>(k) / static_cast<double>(grid);
            const double r = rho(ctx, s);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
            w.offer(std::abs(r - 1.0), param_point(ctx, arc, s), {r, 0.0});
        }
        if (ctx.spec().is_euclidean()) {
            out.push_back(report("rho_constant", w.value < 1e-5, w));
        } else if (radon) {
            Worst spread;
            spread.offer(hi - lo, {lo, hi}, {lo, hi});
            out.push_back(report("rho_not_constant", spread.value > 0.01, spread));
        }
    }
    if (radon) {
        for (const auto kind : {OdeFunction::SnFromX0, OdeFunction::CmFromX0}) {
            const OdeReport r = ode_residual(ctx, kind, 2000);
            Worst w;
            w.offer(r.residual, param_point(ctx, arc, r.worst_s), {r.f0, r.df0});
            const bool ok = r.residual < 1e-3 && r.initial_error < 1e-4;
            out.push_back(report(kind == OdeFunction::SnFromX0 ? "ode_sn" : "ode_cm", ok, w));
        }
    }
    {
        const AreaParamReport a = area_param_check(ctx);
        Worst step;
        step.offer(a.max_step_gap, {a.totals.area2, a.totals.anti_length}, {});
        out.push_back(report("area_step_equals_antinorm_step", a.max_step_gap < 1e-7, step));
        if (radon) {
            Worst gap;
            gap.offer(a.max_param_gap, {a.totals.norm_length, a.totals.anti_length}, {a.totals.area2, 0.0});
            out.push_back(report("kepler_parameters_coincide", a.max_param_gap < 1e-5, gap));
        }
        const double shoe = shoelace_area2_extrapolated(ctx, 4 * ctx.table_size());
        Worst rel;
        rel.offer(std::abs(a.totals.area2 - shoe) / shoe, {a.totals.area2, shoe}, {});
        out.push_back(report("area_vs_shoelace", rel.value < 1e-7, rel));
    }
    {
        Worst w;
        w.offer(norm_speed_defect(ctx), {}, {});
        out.push_back(report("norm_length_speed", w.value < 1e-6, w));
    }
    if (radon) {
        // images of s -> b(gamma(s)), sorted by polar angle
        const auto table = ctx.circle_table();
        std::vector<std::pair<double, Vec2>> images;
        for (const Vec2 b : b_image_samples(ctx, 5e-4)) {
            images.emplace_back(wrap_angle(polar_angle(b)), b);
        }
        std::sort(images.begin(), images.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        Worst w;
        for (const auto& cp : table) {
            auto it = std::lower_bound(images.begin(), images.end(), cp.theta,
                                       [](const auto& e, double t) { return e.first < t; });
            const auto& after = (it == images.end()) ? images.front() : *it;
            const auto& before = (it == images.begin()) ? images.back() : *(it - 1);
            const double d = std::min(norm(ctx, after.second - cp.point), norm(ctx, before.second - cp.point));
            w.offer(d, cp.point, d == norm(ctx, after.second - cp.point) ? after.second : before.second);
        }
        out.push_back(report("b_traverses_circle", w.value < 1e-3, w));
    }
}

}  // namespace

Suite parse_suite(const std::string& name) {
    if (name == "all") return Suite::All;
    if (name == "core") return Suite::Core;
    if (name == "trig") return Suite::Trig;
    if (name == "distortion") return Suite::Distortion;
    if (name == "calculus") return Suite::Calculus;
    if (name == "radon") return Suite::Radon;
    throw ConfigError("unknown suite: " + name);
}

std::vector<VerifyReport> run_suite(const PlaneContext& ctx, Suite suite, const VerifyOptions& options) {
    if (options.samples == 0) {
        throw ConfigError("verify needs at least one sample");
    }
    std::vector<VerifyReport> out;
    const bool all = suite == Suite::All;
    if (all || suite == Suite::Core) core_checks(ctx, options, out);
    if (all || suite == Suite::Radon) radon_checks(ctx, options, out);
    if (all || suite == Suite::Trig) trig_checks(ctx, options, out);
    if (all || suite == Suite::Distortion) distortion_checks(ctx, options, out);
    if (all || suite == Suite::Calculus) calculus_checks(ctx, options, out);
    return out;
}

bool all_pass(const std::vector<VerifyReport>& reports) {
    return std::all_of(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.pass; });
}

}  // namespace minktrig
