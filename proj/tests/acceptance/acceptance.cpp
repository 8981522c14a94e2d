// Acceptance suite: one PASS/FAIL line per criterion; exits 1 if any fails.

#include "../unit/support.hpp"

#include <minktrig/birkhoff.hpp>
#include <minktrig/circle_calculus.hpp>
#include <minktrig/distortion.hpp>
#include <minktrig/errors.hpp>
#include <minktrig/trig.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <string>
#include <vector>

using namespace minktrig;
using namespace testing_support;

namespace {

using NormFn = std::function<double(Vec2)>;

/// Each test norm is l_r with r depending only on the quadrant of the argument.
using ExponentFn = double (*)(Vec2);

struct Plane {
    const char* name;
    const PlaneContext* ctx;
    NormFn n;
    ExponentFn r;
    bool radon;
};

std::vector<Plane> planes() {
    const ExponentFn two = [](Vec2) { return 2.0; };
    const ExponentFn four = [](Vec2) { return 4.0; };
    const ExponentFn mixed = [](Vec2 v) { return v.x * v.y >= 0.0 ? 4.0 : 4.0 / 3.0; };
    return {{"euclidean", &euclid(), [](Vec2 v) { return std::hypot(v.x, v.y); }, two, true},
            {"l4", &lp4(), [](Vec2 v) { return lr(v, 4); }, four, false},
            {"mixed4", &mixed4(), [](Vec2 v) { return mixed_norm(v, 4); }, mixed, true}};
}

double signed_pow(double a, double e) { return std::copysign(std::pow(std::abs(a), e), a); }

/// Gradient of |v|_r: sgn(v_i) |v_i|^(r-1) / |v|_r^(r-1).
Vec2 ref_grad(const Plane& p, Vec2 v) {
    const double r = p.r(v);
    const double k = std::pow(lr(v, r), r - 1);
    return {signed_pow(v.x, r - 1) / k, signed_pow(v.y, r - 1) / k};
}

/// cm(x, y) = <grad |x|, y> / |y|.
double ref_cm(const Plane& p, Vec2 x, Vec2 y) { return dot(ref_grad(p, x), y) / p.n(y); }

/// Unit vector with outward normal w: the l_r dual map, taken in the quadrant of w.
Vec2 ref_support(const Plane& p, Vec2 w) {
    const double r = p.r(w);
    const double q = r / (r - 1);
    const double k = std::pow(lr(w, q), q - 1);
    return {signed_pow(w.x, q - 1) / k, signed_pow(w.y, q - 1) / k};
}

/// Unit vector of the formula norm at a uniform random polar angle.
Vec2 ref_unit(const Plane& p, std::mt19937_64& rng) {
    return ref_circle(p.n, std::uniform_real_distribution<double>(0.0, 2 * kPi)(rng));
}

Vec2 ref_vec(const Plane& p, std::mt19937_64& rng) {
    return std::uniform_real_distribution<double>(0.25, 4.0)(rng) * ref_unit(p, rng);
}

/// Directional derivative of the formula norm, Richardson-extrapolated
/// central differences.
double ref_directional(const NormFn& n, Vec2 x, Vec2 y) {
    const double h = 1e-4 * n(x) / n(y);
    const auto d = [&](double t) { return (n(x + t * y) - n(x - t * y)) / (2 * t); };
    return (4 * d(h / 2) - d(h)) / 3;
}

/// y on the formula circle with |x - y| = 1, y counterclockwise from x.
Vec2 ref_equilateral(const NormFn& n, Vec2 x) {
    const double t0 = std::atan2(x.y, x.x);
    double lo = t0;
    double hi = t0 + kPi;
    for (int k = 0; k < 200 && hi - lo > 1e-15; ++k) {
        const double mid = 0.5 * (lo + hi);
        (n(x - ref_circle(n, mid)) < 1.0 ? lo : hi) = mid;
    }
    return ref_circle(n, 0.5 * (lo + hi));
}

int failures = 0;

void line(int id, const char* name, bool pass, const std::string& detail) {
    std::printf("%s %2d %-24s %s\n", pass ? "PASS" : "FAIL", id, name, detail.c_str());
    std::fflush(stdout);
    if (!pass) ++failures;
}

std::string num(const char* key, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s=%.3e ", key, v);
    return buf;
}

// 1 ---------------------------------------------------------------------------
void euclidean_ground_truth() {
    const auto& ctx = euclid();
    double cm_err = 0.0;
    for (int k = 0; k < 360; ++k) {
        const double t = 2 * kPi * k / 360;
        cm_err = std::max(cm_err, std::abs(cm(ctx, {1, 0}, {std::cos(t), std::sin(t)}) - std::cos(t)));
    }
    std::mt19937_64 rng(1001);
    double gamma_err = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double t = std::uniform_real_distribution<double>(0.0, 2 * kPi)(rng);
        const double r = std::uniform_real_distribution<double>(1.05, 5.0)(rng);
        gamma_err = std::max(gamma_err, std::abs(gamma_from_point(ctx, {r * std::cos(t), r * std::sin(t)}) - 1.0));
    }
    line(1, "euclidean_ground_truth", cm_err < 1e-9 && gamma_err < 1e-8,
         num("cm_vs_cos", cm_err) + num("gamma_minus_1", gamma_err));
}

// 2 ---------------------------------------------------------------------------
void cm_three_forms() {
    std::string detail;
    bool pass = true;
    for (const Plane& p : planes()) {
        std::mt19937_64 rng(1002);
        double forms = 0.0;
        double oracle = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const Vec2 x = ref_vec(p, rng);
            const Vec2 y = ref_vec(p, rng);
            const double c = cm(*p.ctx, x, y);
            const double a = cm_inf_form(*p.ctx, x, y);
            const double e = cm_external_form(*p.ctx, x, y);
            forms = std::max({forms, std::abs(c - a), std::abs(c - e), std::abs(a - e)});
            oracle = std::max(oracle, std::abs(c - ref_cm(p, x, y)));
        }
        pass = pass && forms < 1e-6 && oracle < 1e-6;
        detail += std::string(p.name) + ":" + num("forms", forms) + num("oracle", oracle);
    }
    line(2, "cm_three_forms", pass, detail);
}

// 3 ---------------------------------------------------------------------------
void mixed_distortion_closed_form() {
    bool pass = true;
    std::string detail;
    double prev = 0.0;
    for (double p : {2.0, 4.0, 8.0, 16.0}) {
        const double q = p / (p - 1);
        const auto ctx = build_context(NormSpec::mixed(p));
        const double s = std::pow(2.0, -1.0 / q);
        const Vec2 c{1 - std::pow(2.0, 1 - 1.0 / q), 1};
        const TangentPair tp = tangent_points(ctx, c);
        const double g = tp.len1 / tp.len2;
        char buf[96];
        if (p == 2.0) {
            pass = pass && std::abs(g - 1.0) < 1e-6;
            std::snprintf(buf, sizeof buf, "p=2:%.9f ", g);
        } else {
            // tangent points are a = (-s, s) and b = (0, 1)
            const Vec2 a{-s, s};
            const Vec2 b{0, 1};
            const double feet = std::min(std::max(euclid_length(tp.q1 - a), euclid_length(tp.q2 - b)),
                                         std::max(euclid_length(tp.q1 - b), euclid_length(tp.q2 - a)));
            const double closed = std::abs(std::pow(2.0, 1 / p) * (1 + s / (1 - std::pow(2.0, 1 - 1 / q))));
            // the ratio is taken with the tangent at a in the numerator
            const double along_a = euclid_length(tp.q1 - a) < euclid_length(tp.q2 - a) ? g : 1 / g;
            pass = pass && std::abs(along_a - closed) < 1e-6 && feet < 1e-6 && along_a > prev;
            prev = along_a;
            std::snprintf(buf, sizeof buf, "p=%g:%.9f(err=%.1e) ", p, along_a, std::abs(along_a - closed));
        }
        detail += buf;
    }
    line(3, "mixed_distortion", pass, detail);
}

// 4 ---------------------------------------------------------------------------
void radon_distortion_formula() {
    const Plane p = planes()[2];
    std::mt19937_64 rng(1004);
    double err = 0.0;
    int n = 0;
    while (n < 1000) {
        const Vec2 x = ref_unit(p, rng);
        const Vec2 y = ref_unit(p, rng);
        if (std::abs(std::remainder(std::atan2(x.y, x.x) - std::atan2(y.y, y.x), kPi)) < 0.05) continue;
        const double formula = ref_cm(p, x, x + y) / ref_cm(p, y, x + y);
        err = std::max(err, std::abs(gamma_pair(*p.ctx, x, y) - formula));
        ++n;
    }
    line(4, "radon_distortion", err < 1e-6, num("max_err", err));
}

// 5 ---------------------------------------------------------------------------
void gamma_limits() {
    const auto& ctx = mixed4();
    const std::vector<double> eps{0.3, 0.1, 0.03, 0.01};
    int sequences = 0;
    int monotone = 0;
    std::string bad;
    for (int k = 0; k < 8; ++k) {
        const double t = kPi * k / 8;
        const LimitProbe probe = gamma_limit_probe(ctx, {std::cos(t), std::sin(t)}, eps);
        int side = 0;
        for (const auto* seq : {&probe.near_x, &probe.near_minus_x}) {
            bool ok = true;
            for (std::size_t i = 1; i < seq->size(); ++i) {
                if (!(std::abs((*seq)[i] - 1) < std::abs((*seq)[i - 1] - 1))) ok = false;
            }
            ++sequences;
            if (ok) {
                ++monotone;
            } else {
                char buf[64];
                std::snprintf(buf, sizeof buf, "%s%d/8pi(last=%.4f) ", side == 0 ? "+" : "-", k, seq->back());
                bad += buf;
            }
            ++side;
        }
    }
    line(5, "gamma_limits", monotone == sequences,
         std::to_string(monotone) + "/" + std::to_string(sequences) + " monotone " + bad);
}

// 6 ---------------------------------------------------------------------------
void polar_coordinates() {
    bool pass = true;
    std::string detail;
    for (const Plane& p : planes()) {
        std::mt19937_64 rng(1006);
        double polar = 0.0;
        double expansion = 0.0;
        for (int i = 0; i < 2000; ++i) {
            const Vec2 x = ref_unit(p, rng);
            const Vec2 y = ref_unit(p, rng);
            const Vec2 rec = cm(*p.ctx, x, y) * x + sn(*p.ctx, x, y) * birkhoff_b(*p.ctx, x);
            polar = std::max(polar, p.n(y - rec));
        }
        for (int k = 0; k < 8; ++k) {
            const ConjugatePair pair = conjugate_pair(*p.ctx, ref_unit(p, rng));
            const Vec2 vb = pair.v / p.n(pair.v);
            for (int i = 0; i < 250; ++i) {
                const Vec2 y = ref_unit(p, rng);
                const Vec2 rec = ref_cm(p, pair.u, y) * pair.u + ref_cm(p, vb, y) * vb;
                expansion = std::max(expansion, p.n(y - rec));
            }
        }
        pass = pass && (p.radon ? polar < 1e-6 : polar > 1e-3) && expansion < 1e-6;
        detail += std::string(p.name) + ":" + num(p.radon ? "polar" : "polar_witness", polar) +
                  num("conj", expansion);
    }
    line(6, "polar_coordinates", pass, detail);
}

// 7 ---------------------------------------------------------------------------
void gateaux_derivative() {
    bool pass = true;
    std::string detail;
    for (const Plane& p : planes()) {
        std::mt19937_64 rng(1007);
        double lib = 0.0;
        double ref = 0.0;
        for (int i = 0; i < 10000; ++i) {
            const Vec2 x = ref_vec(p, rng);
            const Vec2 y = ref_vec(p, rng);
            const double scale = p.n(x) * p.n(y);
            const double target = scale * cm(*p.ctx, x, y);
            lib = std::max(lib, std::abs(gateaux(*p.ctx, x, y) - target) / scale);
            ref = std::max(ref, std::abs(p.n(x) * ref_directional(p.n, x, y) - target) / scale);
        }
        pass = pass && lib < 1e-5 && ref < 1e-5;
        detail += std::string(p.name) + ":" + num("rel", lib) + num("ref", ref);
    }
    line(7, "gateaux", pass, detail);
}

// 8 ---------------------------------------------------------------------------
void cm_symmetry() {
    const auto planes_ = planes();
    double asym[2] = {0.0, 0.0};
    for (int j = 0; j < 2; ++j) {
        const Plane& p = planes_[j];
        std::mt19937_64 rng(1008);
        for (int i = 0; i < 10000; ++i) {
            const Vec2 x = ref_vec(p, rng);
            const Vec2 y = ref_vec(p, rng);
            asym[j] = std::max(asym[j], std::abs(cm(*p.ctx, x, y) - cm(*p.ctx, y, x)));
        }
    }
    line(8, "cm_symmetry", asym[0] < 1e-9 && asym[1] > 1e-2,
         num("euclidean", asym[0]) + num("l4_witness", asym[1]));
}

// 9 ---------------------------------------------------------------------------
void identities() {
    bool pass = true;
    std::string detail;
    for (const Plane& p : planes()) {
        const auto& ctx = *p.ctx;
        std::mt19937_64 rng(1009);
        double cm_sum = 0.0, ca_sum = 0.0, iso = 0.0, buse = 0.0, pyth = 0.0, general = 0.0;
        for (int i = 0; i < 200; ++i) {
            const Vec2 x = ref_unit(p, rng);
            const Vec2 y = ref_equilateral(p.n, x);
            const Vec2 z = x - y;
            cm_sum = std::max(cm_sum, std::abs(cm(ctx, x, y) + cm(ctx, x, z) - 1));
            ca_sum = std::max(ca_sum, std::abs(ca(ctx, x, y) + ca(ctx, x, z) + ca(ctx, y, -1.0 * z) - 1.5));
        }
        for (int i = 0; i < 200; ++i) {
            const Vec2 x = ref_unit(p, rng);
            const Vec2 y = ref_unit(p, rng);
            if (std::abs(std::remainder(std::atan2(x.y, x.x) - std::atan2(y.y, y.x), kPi)) < 0.05) continue;
            const Vec2 d = y - x;
            const Vec2 z = ref_support(p, {d.y, -d.x});
            iso = std::max(iso, std::abs(cm(ctx, z, x) - cm(ctx, z, y)));
            const Vec2 zb = x / p.n(x) + y / p.n(y);
            buse = std::max(buse, std::abs(cm(ctx, zb, x) + cm(ctx, zb, y) - p.n(x + y)));
        }
        for (int k = 0; k < 8; ++k) {
            const ConjugatePair pair = conjugate_pair(ctx, ref_unit(p, rng));
            for (int i = 0; i < 50; ++i) {
                const Vec2 y = ref_unit(p, rng);
                const double g = cm(ctx, y, pair.u) * cm(ctx, pair.u, y) + cm(ctx, y, pair.v) * cm(ctx, pair.v, y);
                general = std::max(general, std::abs(g - 1));
                if (p.radon) {
                    const double c1 = cn(ctx, y, pair.u);
                    const double c2 = cn(ctx, y, pair.v);
                    pyth = std::max(pyth, std::abs(c1 * c1 + c2 * c2 - 1));
                }
            }
        }
        pass = pass && cm_sum < 1e-6 && ca_sum < 1e-6 && iso < 1e-7 && buse < 1e-7 && general < 1e-6 &&
               (!p.radon || pyth < 1e-6);
        detail += std::string(p.name) + ":" + num("cm_sum", cm_sum) + num("ca_sum", ca_sum) + num("iso", iso) +
                  num("busemann", buse) + num("conj_pyth", general) + (p.radon ? num("cn_pyth", pyth) : "");
    }
    line(9, "identities", pass, detail);
}

// 10 --------------------------------------------------------------------------
void sign_characterization() {
    bool pass = true;
    std::string detail;
    for (const Plane& p : planes()) {
        std::mt19937_64 rng(1010);
        double lowest = std::numeric_limits<double>::infinity();
        const int n = p.radon ? 100000 : 10000;
        for (int i = 0; i < n; ++i) {
            const Vec2 x = ref_vec(p, rng);
            const Vec2 y = ref_vec(p, rng);
            lowest = std::min(lowest, cm(*p.ctx, x, y) * cm(*p.ctx, y, x));
        }
        pass = pass && (p.radon ? lowest >= -1e-12 : lowest < -1e-3);
        detail += std::string(p.name) + ":" + num("min_product", lowest);
    }
    line(10, "cm_sign", pass, detail);
}

// 11 --------------------------------------------------------------------------
void calculus() {
    bool pass = true;
    std::string detail;
    for (const Plane& p : planes()) {
        const auto& ctx = *p.ctx;
        std::mt19937_64 rng(1011);
        double dds = 0.0;
        for (int i = 0; i < 200; ++i) {
            const auto [r1, r2] = d_ds_identities(ctx, ref_unit(p, rng), ref_unit(p, rng));
            dds = std::max({dds, r1, r2});
        }
        const AreaParamReport a = area_param_check(ctx);
        bool ok = dds < 1e-5 && a.max_step_gap < 1e-7 && (!p.radon || a.max_param_gap < 1e-5);
        detail += std::string(p.name) + ":" + num("dds", dds) + num("area_step", a.max_step_gap) +
                  (p.radon ? num("param_gap", a.max_param_gap) : "");

        const ArcParam arc = arc_param(ctx, ArcKind::NormLength);
        double lo = std::numeric_limits<double>::infinity();
        double hi = -lo;
        for (int k = 0; k < 64; ++k) {
            const double r = rho(ctx, arc.total * k / 64);
            lo = std::min(lo, r);
            hi = std::max(hi, r);
        }
        if (std::string(p.name) == "euclidean") {
            const double dev = std::max(std::abs(hi - 1), std::abs(lo - 1));
            ok = ok && dev < 1e-5;
            detail += num("rho_dev", dev);
        }
        if (std::string(p.name) == "mixed4") {
            ok = ok && hi - lo > 0.01;
            detail += num("rho_spread", hi - lo);
            // f'' + rho f = 0 with f = sn: f(0) = 0, f'(0) = 1; f = cm: f(0) = 1, f'(0) = 0
            for (const auto [kind, f0, df0, tag] : {std::tuple{OdeFunction::SnFromX0, 0.0, 1.0, "ode_sn"},
                                                    std::tuple{OdeFunction::CmFromX0, 1.0, 0.0, "ode_cm"}}) {
                const OdeReport r = ode_residual(ctx, kind, 2000);
                const double init = std::max(std::abs(r.f0 - f0), std::abs(r.df0 - df0));
                ok = ok && r.residual < 1e-3 && init < 1e-4;
                detail += num(tag, r.residual) + num("init", init);
            }
        }
        pass = pass && ok;
        detail += " ";
    }
    line(11, "calculus", pass, detail);
}

// 12 --------------------------------------------------------------------------
void b_map() {
    bool pass = true;
    std::string detail;
    for (const Plane& p : planes()) {
        const auto& ctx = *p.ctx;
        std::mt19937_64 rng(1012);
        double form = 0.0, square = 0.0, homog = 0.0;
        for (int i = 0; i < 2000; ++i) {
            const Vec2 x = ref_unit(p, rng);
            const Vec2 b = birkhoff_b(ctx, x);
            form = std::max(form, std::abs(ctx.omega_scale() * det(x, b) - 1));
            const double lambda = std::uniform_real_distribution<double>(0.1, 10.0)(rng);
            homog = std::max({homog, euclid_length(birkhoff_b(ctx, lambda * x) - b),
                              euclid_length(birkhoff_b(ctx, -1.0 * x) + b)});
            if (p.radon) {
                const Vec2 z = std::uniform_real_distribution<double>(0.25, 4.0)(rng) * x;
                // normalized Radon planes have |.|_a = |.|
                square = std::max(square, euclid_length(birkhoff_b(ctx, birkhoff_b(ctx, z)) + z / p.n(z)));
            }
        }
        pass = pass && form < 1e-8 && homog < 1e-10 && (!p.radon || square < 1e-6);
        detail += std::string(p.name) + ":" + num("unit_form", form) + num("homog_odd", homog) +
                  (p.radon ? num("b_squared", square) : "");
    }
    line(12, "b_map", pass, detail);
}

}  // namespace

int main() {
    const std::vector<void (*)()> criteria{euclidean_ground_truth, cm_three_forms, mixed_distortion_closed_form,
                                           radon_distortion_formula, gamma_limits, polar_coordinates,
                                           gateaux_derivative, cm_symmetry, identities,
                                           sign_characterization, calculus, b_map};
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i]();
        } catch (const Error& e) {
            line(static_cast<int>(i + 1), "exception", false, e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("      (%.1f s)\n", secs);
    }
    std::printf("%d of %zu criteria failed\n", failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
