#pragma once
/**
 * @file vec2.hpp
 * @brief Plane vectors for the Minkowski trigonometry library.
 *
 * Vec2 is a plain value type. The Euclidean helpers (dot, euclid_length) are
 * bookkeeping only: every metric quantity of the plane goes through the norm
 * model of a PlaneContext.
 */

#include <cmath>

namespace minktrig {

struct Vec2 {
    double x{0.0};
    double y{0.0};

    constexpr Vec2() = default;
    constexpr Vec2(double X, double Y) : x(X), y(Y) {}

    constexpr Vec2 operator+(const Vec2& r) const { return {x + r.x, y + r.y}; }
    constexpr Vec2 operator-(const Vec2& r) const { return {x - r.x, y - r.y}; }
    constexpr Vec2 operator-() const { return {-x, -y}; }
    constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
    constexpr Vec2 operator/(double s) const { return {x / s, y / s}; }
    friend constexpr Vec2 operator*(double s, const Vec2& v) { return {v.x * s, v.y * s}; }

    Vec2& operator+=(const Vec2& r) { x += r.x; y += r.y; return *this; }
    Vec2& operator-=(const Vec2& r) { x -= r.x; y -= r.y; return *this; }
    Vec2& operator*=(double s) { x *= s; y *= s; return *this; }

    constexpr bool operator==(const Vec2&) const = default;

    constexpr bool is_zero() const { return x == 0.0 && y == 0.0; }
    bool is_finite() const { return std::isfinite(x) && std::isfinite(y); }
};

/// Euclidean pairing; used to pair gradients (covectors) with directions.
constexpr double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// Unscaled determinant a.x*b.y - a.y*b.x.
constexpr double det(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }

/// Counterclockwise quarter turn.
constexpr Vec2 quarter_turn(const Vec2& v) { return {-v.y, v.x}; }

inline double euclid_length(const Vec2& v) { return std::hypot(v.x, v.y); }

inline Vec2 unit_direction(double theta) { return {std::cos(theta), std::sin(theta)}; }

inline double polar_angle(const Vec2& v) { return std::atan2(v.y, v.x); }

}  // namespace minktrig
