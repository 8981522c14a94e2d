#pragma once
/**
 * @file plot.hpp
 * @brief Hand-emitted SVG figures with a CSV listing of every plotted coordinate.
 */

#include <minktrig/norm_core.hpp>

#include <optional>
#include <string>

namespace minktrig::cli {

struct Figure {
    std::string svg;
    /// Header "label,x,y"; scalar results use the x column and leave y empty.
    std::string csv;
};

struct FigureArgs {
    std::optional<Vec2> x;
    std::optional<Vec2> y;
    std::optional<Vec2> t1;
    std::optional<Vec2> t2;
};

/// figure: circle | cm-construction | gamma-construction | parallel-chords.
/// Throws ConfigError for unknown names.
Figure render_figure(const PlaneContext& ctx, const std::string& figure, const FigureArgs& args);

}  // namespace minktrig::cli
