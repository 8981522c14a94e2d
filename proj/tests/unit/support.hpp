#pragma once

// Shared fixtures and independent reference formulas for the unit tests.
// Nothing here calls into the library's numerics except build_context.

#include <minktrig/norm_core.hpp>

#include <cmath>
#include <numbers>
#include <random>

namespace testing_support {

using minktrig::Vec2;

inline constexpr double kPi = std::numbers::pi;

inline const minktrig::PlaneContext& euclid() {
    static const auto ctx = minktrig::build_context(minktrig::NormSpec::euclidean());
    return ctx;
}

inline const minktrig::PlaneContext& lp4() {
    static const auto ctx = minktrig::build_context(minktrig::NormSpec::lp(4.0));
    return ctx;
}

inline const minktrig::PlaneContext& mixed4() {
    static const auto ctx = minktrig::build_context(minktrig::NormSpec::mixed(4.0));
    return ctx;
}

/// Direct l_r formula.
inline double lr(Vec2 v, double r) { return std::pow(std::pow(std::abs(v.x), r) + std::pow(std::abs(v.y), r), 1.0 / r); }

/// Direct mixed formula: l_p where xy >= 0, l_q otherwise.
inline double mixed_norm(Vec2 v, double p) { return v.x * v.y >= 0.0 ? lr(v, p) : lr(v, p / (p - 1.0)); }

/// Point of the unit circle of a norm given by formula, at polar angle t.
template <class Norm>
Vec2 ref_circle(const Norm& n, double t) {
    const Vec2 u{std::cos(t), std::sin(t)};
    return u / n(u);
}

/// sup over the unit circle of |det(v, y)|, by dense angular scan plus local refinement.
template <class Norm>
double ref_antinorm_unscaled(const Norm& n, Vec2 v, int samples = 20000) {
    double best = 0.0;
    double best_t = 0.0;
    for (int i = 0; i < samples; ++i) {
        const double t = kPi * i / samples;
        const double a = std::abs(minktrig::det(v, ref_circle(n, t)));
        if (a > best) {
            best = a;
            best_t = t;
        }
    }
    double step = kPi / samples;
    for (int k = 0; k < 60; ++k) {
        for (double t : {best_t - step, best_t + step}) {
            const double a = std::abs(minktrig::det(v, ref_circle(n, t)));
            if (a > best) {
                best = a;
                best_t = t;
            }
        }
        step *= 0.5;
    }
    return best;
}

/// Central difference gradient of a norm formula.
template <class Norm>
Vec2 ref_gradient(const Norm& n, Vec2 v, double h = 1e-6) {
    return {(n(v + Vec2{h, 0}) - n(v - Vec2{h, 0})) / (2 * h), (n(v + Vec2{0, h}) - n(v - Vec2{0, h})) / (2 * h)};
}

/// Fixed-seed generator of plane vectors for property tests.
class VecGen {
public:
    explicit VecGen(std::uint64_t seed) : rng_(seed) {}

    /// Direction uniform in angle, Euclidean length in [lo, hi].
    Vec2 vec(double lo = 0.2, double hi = 3.0) {
        const double t = angle_(rng_);
        const double r = std::uniform_real_distribution<double>(lo, hi)(rng_);
        return {r * std::cos(t), r * std::sin(t)};
    }

    /// Point of the circle of ctx (unit in the norm).
    Vec2 unit(const minktrig::PlaneContext& ctx) { return minktrig::circle_point_at(ctx, angle_(rng_)); }

    /// Pair whose directions differ by at least min_gap radians modulo pi.
    std::pair<Vec2, Vec2> independent(double min_gap = 0.05) {
        for (;;) {
            const Vec2 a = vec();
            const Vec2 b = vec();
            const double s = std::abs(minktrig::det(a, b)) / (minktrig::euclid_length(a) * minktrig::euclid_length(b));
            if (std::asin(std::min(1.0, s)) > min_gap) return {a, b};
        }
    }

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

private:
    std::mt19937_64 rng_;
    std::uniform_real_distribution<double> angle_{0.0, 2.0 * kPi};
};

}  // namespace testing_support
