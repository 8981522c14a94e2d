#include <minktrig/errors.hpp>
#include <minktrig/norm_model.hpp>

#include <boost/math/tools/toms748_solve.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>

namespace minktrig {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

class EuclideanModel final : public NormModel {
public:
    double value(Vec2 v) const override { return euclid_length(v); }
    Vec2 gradient(Vec2 v) const override { return v / euclid_length(v); }
};

// (|x|^r + |y|^r)^(1/r), evaluated after scaling by max(|x|, |y|).
double lr_value(Vec2 v, double r) {
    const double ax = std::abs(v.x);
    const double ay = std::abs(v.y);
    const double m = std::max(ax, ay);
    if (m == 0.0) {
        return 0.0;
    }
    const double a = ax / m;
    const double b = ay / m;
    return m * std::pow(std::pow(a, r) + std::pow(b, r), 1.0 / r);
}

Vec2 lr_gradient(Vec2 v, double r) {
    const double n = lr_value(v, r);
    const double gx = std::pow(std::abs(v.x) / n, r - 1.0);
    const double gy = std::pow(std::abs(v.y) / n, r - 1.0);
    return {std::copysign(gx, v.x), std::copysign(gy, v.y)};
}

class LpModel final : public NormModel {
public:
    explicit LpModel(double p) : p_(p) {}
    double value(Vec2 v) const override { return lr_value(v, p_); }
    Vec2 gradient(Vec2 v) const override { return lr_gradient(v, p_); }

private:
    double p_;
};

// l_p on the closed quadrants where x*y >= 0, l_q where x*y <= 0.
class MixedModel final : public NormModel {
public:
    explicit MixedModel(double p) : p_(p), q_(p / (p - 1.0)) {}
    double value(Vec2 v) const override { return lr_value(v, exponent(v)); }
    Vec2 gradient(Vec2 v) const override { return lr_gradient(v, exponent(v)); }

private:
    double exponent(Vec2 v) const { return v.x * v.y >= 0.0 ? p_ : q_; }
    double p_;
    double q_;
};

// Gauge of the body with support function h:
//     |v| = max over phi of <v, n(phi)> / h(phi),
// attained where the boundary point x(phi) = h n + h' n' is parallel to v.
class SupportModel final : public NormModel {
public:
    explicit SupportModel(const std::vector<SupportSample>& samples) {
        std::vector<SupportSample> s = samples;
        for (auto& e : s) {
            e.theta = std::fmod(e.theta, kTwoPi);
            if (e.theta < 0.0) e.theta += kTwoPi;
        }
        std::sort(s.begin(), s.end(), [](const auto& a, const auto& b) { return a.theta < b.theta; });
        std::vector<double> nodes;
        std::vector<double> values;
        for (const auto& e : s) {
            if (!nodes.empty() && e.theta - nodes.back() < 1e-12) {
                throw ConfigError("support_table has duplicate angles");
            }
            nodes.push_back(e.theta);
            values.push_back(e.h);
        }
        if (nodes.back() - nodes.front() > kTwoPi - 1e-12) {
            throw ConfigError("support_table has duplicate angles");
        }
        spline_ = PeriodicCubicSpline(std::move(nodes), std::move(values));
        validate_shape();
        build_angle_table();
    }

    double value(Vec2 v) const override {
        if (v.is_zero()) return 0.0;
        const double phi = normal_angle(v);
        return dot(v, unit_direction(phi)) / spline_.value(phi);
    }

    Vec2 gradient(Vec2 v) const override {
        const double phi = normal_angle(v);
        return unit_direction(phi) / spline_.value(phi);
    }

private:
    Vec2 boundary(double phi) const {
        const Vec2 n = unit_direction(phi);
        return spline_.value(phi) * n + spline_.derivative(phi) * quarter_turn(n);
    }

    void validate_shape() const {
        const auto& nodes = spline_.nodes();
        const std::size_t n = nodes.size();
        double hmax = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const double t0 = nodes[i];
            const double t1 = (i + 1 < n) ? nodes[i + 1] : nodes[0] + kTwoPi;
            for (int k = 0; k < 4; ++k) {
                const double t = t0 + (t1 - t0) * k / 4.0;
                const double h = spline_.value(t);
                hmax = std::max(hmax, std::abs(h));
                if (h <= 0.0) {
                    throw ConfigError("support function is not positive");
                }
                if (h + spline_.second_derivative(t) <= 0.0) {
                    throw ConfigError("support function violates h + h'' > 0 (not strictly convex)");
                }
            }
        }
        for (std::size_t i = 0; i < 4 * n; ++i) {
            const double t = kTwoPi * static_cast<double>(i) / static_cast<double>(4 * n);
            if (std::abs(spline_.value(t + std::numbers::pi) - spline_.value(t)) > 1e-6 * hmax) {
                throw ConfigError("support function is not centrally symmetric");
            }
        }
    }

    void build_angle_table() {
        const std::size_t m = std::max<std::size_t>(2048, 8 * spline_.nodes().size());
        phi_.resize(m + 1);
        psi_.resize(m + 1);
        const double phi0 = spline_.nodes().front();
        double prev = 0.0;
        for (std::size_t j = 0; j <= m; ++j) {
            phi_[j] = phi0 + kTwoPi * static_cast<double>(j) / static_cast<double>(m);
            double a = polar_angle(boundary(phi_[j]));
            if (j > 0) {
                // unwrap
                while (a <= prev - std::numbers::pi) a += kTwoPi;
                while (a > prev + std::numbers::pi) a -= kTwoPi;
                if (a <= prev) {
                    throw ConfigError("support_table boundary is not star-shaped with increasing angle");
                }
            }
            psi_[j] = a;
            prev = a;
        }
        if (std::abs(psi_[m] - psi_[0] - kTwoPi) > 1e-9) {
            throw ConfigError("support_table boundary does not wind once around the origin");
        }
        psi_[m] = psi_[0] + kTwoPi;
    }

    double normal_angle(Vec2 v) const {
        double theta = polar_angle(v);
        theta -= kTwoPi * std::floor((theta - psi_.front()) / kTwoPi);
        auto it = std::upper_bound(psi_.begin(), psi_.end(), theta);
        std::size_t j = static_cast<std::size_t>(std::distance(psi_.begin(), it));
        j = std::clamp<std::size_t>(j, 1, psi_.size() - 1) - 1;
        auto f = [&](double phi) { return det(boundary(phi), v); };
        const double fa = f(phi_[j]);
        const double fb = f(phi_[j + 1]);
        if (fa == 0.0) return phi_[j];
        if (fb == 0.0) return phi_[j + 1];
        if ((fa > 0.0) == (fb > 0.0)) {
            // rounding at a bracket edge; the closer endpoint is exact to table precision
            return std::abs(fa) < std::abs(fb) ? phi_[j] : phi_[j + 1];
        }
        std::uintmax_t iters = 64;
        const auto r = boost::math::tools::toms748_solve(f, phi_[j], phi_[j + 1], fa, fb,
                                                         boost::math::tools::eps_tolerance<double>(52), iters);
        return 0.5 * (r.first + r.second);
    }

    PeriodicCubicSpline spline_;
    std::vector<double> phi_;
    std::vector<double> psi_;
};

}  // namespace

PeriodicCubicSpline::PeriodicCubicSpline(std::vector<double> nodes, std::vector<double> values)
    : nodes_(std::move(nodes)), values_(std::move(values)) {
    const std::size_t n = nodes_.size();
    if (n < 3 || values_.size() != n) {
        throw ConfigError("periodic spline needs at least 3 nodes");
    }
    std::vector<double> h(n);
    for (std::size_t i = 0; i < n; ++i) {
        h[i] = (i + 1 < n ? nodes_[i + 1] : nodes_[0] + kTwoPi) - nodes_[i];
        if (h[i] <= 0.0) {
            throw ConfigError("periodic spline nodes must be strictly increasing within one period");
        }
    }
    // Cyclic tridiagonal system for the second derivatives, solved with the
    // Sherman-Morrison correction on top of a plain Thomas sweep.
    std::vector<double> a(n), b(n), c(n), r(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t im = (i + n - 1) % n;
        const std::size_t ip = (i + 1) % n;
        a[i] = h[im];
        b[i] = 2.0 * (h[im] + h[i]);
        c[i] = h[i];
        r[i] = 6.0 * ((values_[ip] - values_[i]) / h[i] - (values_[i] - values_[im]) / h[im]);
    }
    const double alpha = c[n - 1];  // A[n-1][0]
    const double beta = a[0];       // A[0][n-1]
    const double gamma = -b[0];
    std::vector<double> bb = b;
    bb[0] = b[0] - gamma;
    bb[n - 1] = b[n - 1] - alpha * beta / gamma;

    auto thomas = [&](const std::vector<double>& rhs) {
        std::vector<double> cp(n), dp(n), x(n);
        cp[0] = c[0] / bb[0];
        dp[0] = rhs[0] / bb[0];
        for (std::size_t i = 1; i < n; ++i) {
            const double m = bb[i] - a[i] * cp[i - 1];
            cp[i] = c[i] / m;
            dp[i] = (rhs[i] - a[i] * dp[i - 1]) / m;
        }
        x[n - 1] = dp[n - 1];
        for (std::size_t i = n - 1; i-- > 0;) {
            x[i] = dp[i] - cp[i] * x[i + 1];
        }
        return x;
    };
    std::vector<double> x = thomas(r);
    std::vector<double> u(n, 0.0);
    u[0] = gamma;
    u[n - 1] = alpha;
    const std::vector<double> z = thomas(u);
    const double fact = (x[0] + beta * x[n - 1] / gamma) / (1.0 + z[0] + beta * z[n - 1] / gamma);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] -= fact * z[i];
    }
    second_ = std::move(x);
}

PeriodicCubicSpline::Local PeriodicCubicSpline::locate(double t) const {
    const double t0 = nodes_.front();
    t -= kTwoPi * std::floor((t - t0) / kTwoPi);
    auto it = std::upper_bound(nodes_.begin(), nodes_.end(), t);
    std::size_t i = static_cast<std::size_t>(std::distance(nodes_.begin(), it));
    i = (i == 0) ? 0 : i - 1;
    const double next = (i + 1 < nodes_.size()) ? nodes_[i + 1] : t0 + kTwoPi;
    return {i, t - nodes_[i], next - nodes_[i]};
}

double PeriodicCubicSpline::value(double t) const {
    const auto [i, a, h] = locate(t);
    const std::size_t j = (i + 1) % nodes_.size();
    const double b = h - a;
    return second_[i] * b * b * b / (6.0 * h) + second_[j] * a * a * a / (6.0 * h) +
           (values_[i] / h - second_[i] * h / 6.0) * b + (values_[j] / h - second_[j] * h / 6.0) * a;
}

double PeriodicCubicSpline::derivative(double t) const {
    const auto [i, a, h] = locate(t);
    const std::size_t j = (i + 1) % nodes_.size();
    const double b = h - a;
    return -second_[i] * b * b / (2.0 * h) + second_[j] * a * a / (2.0 * h) -
           (values_[i] / h - second_[i] * h / 6.0) + (values_[j] / h - second_[j] * h / 6.0);
}

double PeriodicCubicSpline::second_derivative(double t) const {
    const auto [i, a, h] = locate(t);
    const std::size_t j = (i + 1) % nodes_.size();
    return (second_[i] * (h - a) + second_[j] * a) / h;
}

std::shared_ptr<const NormModel> make_norm_model(const NormSpec& spec) {
    spec.validate();
    switch (spec.kind) {
        case NormKind::Euclidean: return std::make_shared<EuclideanModel>();
        case NormKind::Lp: return std::make_shared<LpModel>(spec.p);
        case NormKind::MixedLpLq: return std::make_shared<MixedModel>(spec.p);
        case NormKind::TabulatedSupport: return std::make_shared<SupportModel>(spec.samples);
    }
    throw ConfigError("unknown norm kind");
}

}  // namespace minktrig
