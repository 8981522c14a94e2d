#pragma once
/**
 * @file norm_model.hpp
 * @brief Analytic evaluation of the supported norms and their gradients.
 *
 * Models are immutable and thread-safe. Inputs are assumed finite and, for
 * gradient(), non-zero; the checked entry points live in norm_core.hpp.
 */

#include <minktrig/norm_spec.hpp>
#include <minktrig/vec2.hpp>

#include <memory>
#include <vector>

namespace minktrig {

class NormModel {
public:
    virtual ~NormModel() = default;
    virtual double value(Vec2 v) const = 0;
    virtual Vec2 gradient(Vec2 v) const = 0;
};

/// Builds the model described by spec. Throws ConfigError when the spec is invalid.
std::shared_ptr<const NormModel> make_norm_model(const NormSpec& spec);

/// Periodic (period 2 pi) cubic spline through possibly non-uniform nodes.
class PeriodicCubicSpline {
public:
    PeriodicCubicSpline() = default;
    /// Nodes must be strictly increasing and span less than 2 pi.
    PeriodicCubicSpline(std::vector<double> nodes, std::vector<double> values);

    double value(double t) const;
    double derivative(double t) const;
    double second_derivative(double t) const;

    const std::vector<double>& nodes() const { return nodes_; }

private:
    struct Local {
        std::size_t i;
        double a;  // offset from node i
        double h;  // interval width
    };
    Local locate(double t) const;

    std::vector<double> nodes_;
    std::vector<double> values_;
    std::vector<double> second_;  // second derivatives at the nodes
};

}  // namespace minktrig
