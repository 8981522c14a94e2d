#pragma once
/**
 * @file norm_core.hpp
 * @brief Norm evaluation, the symplectic form, the antinorm and the cached
 *        unit-circle table that every other module consumes.
 *
 * A PlaneContext is immutable once built. All free functions taking a
 * context are pure and may be called concurrently.
 *
 * The symplectic form is omega_scale * det(u, v). The antinorm is
 *     |v|_a = sup { |[v, y]| : y on the unit circle S }.
 * In a Radon plane built with normalize_radon the scale is chosen so that
 * |.|_a == |.| on S.
 */

#include <minktrig/norm_spec.hpp>
#include <minktrig/vec2.hpp>

#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace minktrig {

class NormModel;

enum class RadonFlag { Radon, NotRadon, Unknown };

const char* to_string(RadonFlag flag);

/// Cumulative parameters carried by the circle table.
enum class ArcKind { NormLength, AntinormLength, SectorArea };

const char* to_string(ArcKind kind);

/// One sample of the unit circle at polar angle theta.
///
/// normal is the norm gradient at point (a covector, paired with directions via
/// the Euclidean dot product); tangent is b(point), i.e. the positively oriented
/// tangent normalized to unit antinorm. The cumulative columns start at 0 for
/// theta = 0.
struct CirclePoint {
    double theta{0.0};
    Vec2 point;
    Vec2 normal;
    Vec2 tangent;
    double s_norm{0.0};
    double s_anti{0.0};
    double sector_area2{0.0};
};

/// Full-circle values of the three cumulative parameters.
struct CircleTotals {
    double norm_length{0.0};
    double anti_length{0.0};
    double area2{0.0};

    double of(ArcKind kind) const;
};

inline constexpr std::size_t kDefaultTableSize = 4096;

struct ContextOptions {
    std::size_t table_size{kDefaultTableSize};
    /// Rescale the symplectic form so that |.|_a == |.| when the plane is Radon.
    bool normalize_radon{true};
    /// Explicit symplectic scale; overrides Radon normalization when > 0.
    double omega_scale{0.0};
};

class PlaneContext {
public:
    const NormSpec& spec() const { return spec_; }
    const NormModel& model() const { return *model_; }
    double omega_scale() const { return omega_; }
    RadonFlag radon_flag() const { return radon_; }
    bool is_radon() const { return radon_ == RadonFlag::Radon; }
    /// Largest normalized Birkhoff symmetry defect seen by the Radon probe.
    double radon_defect() const { return radon_defect_; }

    std::span<const CirclePoint> circle_table() const { return *table_; }
    std::size_t table_size() const { return table_->size(); }
    /// Polar-angle spacing of the table.
    double table_step() const;
    const CircleTotals& totals() const { return totals_; }

private:
    friend PlaneContext build_context(const NormSpec&, const ContextOptions&);

    NormSpec spec_;
    std::shared_ptr<const NormModel> model_;
    double omega_{1.0};
    std::shared_ptr<const std::vector<CirclePoint>> table_;
    CircleTotals totals_;
    RadonFlag radon_{RadonFlag::Unknown};
    double radon_defect_{0.0};
};

/// Validates spec, builds the circle table, probes the Radon property and
/// (optionally) normalizes the symplectic scale. Throws ConfigError.
PlaneContext build_context(const NormSpec& spec, const ContextOptions& options = {});

inline PlaneContext build_context(const NormSpec& spec, std::size_t table_size, bool normalize_radon) {
    return build_context(spec, ContextOptions{table_size, normalize_radon, 0.0});
}

/// Radon detection thresholds on the normalized Birkhoff symmetry defect.
inline constexpr double kRadonDefectBelow = 1e-7;
inline constexpr double kNotRadonDefectAbove = 1e-4;
RadonFlag classify_radon_defect(double max_defect);

// --- evaluation -----------------------------------------------------------

/// |v|; 0 for the origin. Throws DomainError on non-finite input.
double norm(const PlaneContext& ctx, Vec2 v);

/// Gradient of the norm at v != o. Satisfies <g, v> = |v| and is 0-homogeneous.
Vec2 norm_gradient(const PlaneContext& ctx, Vec2 v);

/// [u, v] = omega_scale * det(u, v).
double symplectic(const PlaneContext& ctx, Vec2 u, Vec2 v);

/// |v|_a by table scan followed by golden-section refinement.
double antinorm(const PlaneContext& ctx, Vec2 v);

/// Point of S at polar angle theta.
Vec2 circle_point_at(const PlaneContext& ctx, double theta);

/// d/dtheta of circle_point_at.
Vec2 circle_velocity(const PlaneContext& ctx, double theta);

/// Exact circle sample at an arbitrary polar angle, cumulative columns included.
CirclePoint sample_circle(const PlaneContext& ctx, double theta);

/// d/dtheta of the cumulative parameter of the given kind.
double arc_speed(const PlaneContext& ctx, ArcKind kind, double theta);

/// Cumulative parameter from theta = 0 up to theta (theta taken modulo 2 pi).
double cumulative_at(const PlaneContext& ctx, ArcKind kind, double theta);

/// The unit vector at which the linear functional y -> <w, y> attains its
/// maximum over B (the point of S with outward normal along w).
Vec2 support_point(const PlaneContext& ctx, Vec2 w);

/// Index of the table sample whose polar angle is closest to theta.
std::size_t nearest_table_index(const PlaneContext& ctx, double theta);

/// theta reduced to [0, 2 pi).
double wrap_angle(double theta);

}  // namespace minktrig
