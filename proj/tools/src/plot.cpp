#include <minktrig/distortion.hpp>
#include <minktrig/errors.hpp>
#include <minktrig/trig.hpp>
#include <minktrig/birkhoff.hpp>
#include <minktrig_cli/format.hpp>
#include <minktrig_cli/plot.hpp>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

namespace minktrig::cli {

namespace {

constexpr double kSize = 600.0;
constexpr double kHalf = 300.0;
constexpr double kInner = 260.0;

// Collects primitives in plane coordinates; the view box is fitted on output.
class Canvas {
public:
    void curve(const std::string& label, std::vector<Vec2> pts, const std::string& color, bool closed = true) {
        for (const Vec2& p : pts) row(label, p);
        curves_.push_back({std::move(pts), color, closed});
        for (const Vec2& p : curves_.back().pts) extend(p);
    }

    void segment(Vec2 a, Vec2 b, const std::string& color, bool dashed = false) {
        segments_.push_back({a, b, color, dashed});
        extend(a);
        extend(b);
    }

    /// Long segment along a line; does not widen the view.
    void line(Vec2 through, Vec2 dir, const std::string& color, bool dashed = true) {
        lines_.push_back({through, dir, color, dashed});
    }

    void point(const std::string& label, Vec2 p, const std::string& color = "#000") {
        row(label, p);
        points_.push_back({label, p, color});
        extend(p);
    }

    void scalar(const std::string& label, double v) {
        csv_ << label << ',' << fmt(v) << ",\n";
        notes_.push_back(label + " = " + fmt(v));
    }

    Figure finish(const std::string& title) const {
        const double r = 1.15 * std::max(extent_, 1e-9);
        const auto px = [&](Vec2 p) { return std::pair{kHalf + kInner * p.x / r, kHalf - kInner * p.y / r}; };
        std::ostringstream s;
        s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
          << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n";
        s << "<title>" << title << "</title>\n";
        s << "<rect width=\"100%\" height=\"100%\" fill=\"#fff\"/>\n";
        s << "<line x1=\"0\" y1=\"" << kHalf << "\" x2=\"" << kSize << "\" y2=\"" << kHalf
          << "\" stroke=\"#ddd\"/>\n";
        s << "<line x1=\"" << kHalf << "\" y1=\"0\" x2=\"" << kHalf << "\" y2=\"" << kSize << "\" stroke=\"#ddd\"/>\n";
        for (const auto& c : curves_) {
            s << "<path fill=\"none\" stroke=\"" << c.color << "\" stroke-width=\"1.5\" d=\"";
            for (std::size_t i = 0; i < c.pts.size(); ++i) {
                const auto [x, y] = px(c.pts[i]);
                s << (i ? " L" : "M") << fmt(x) << ' ' << fmt(y);
            }
            if (c.closed) s << " Z";
            s << "\"/>\n";
        }
        for (const auto& l : lines_) {
            const double k = 4.0 * r / std::max(euclid_length(l.dir), 1e-300);
            emit_segment(s, px(l.through - k * l.dir), px(l.through + k * l.dir), l.color, l.dashed);
        }
        for (const auto& g : segments_) {
            emit_segment(s, px(g.a), px(g.b), g.color, g.dashed);
        }
        for (const auto& p : points_) {
            const auto [x, y] = px(p.at);
            s << "<circle cx=\"" << fmt(x) << "\" cy=\"" << fmt(y) << "\" r=\"3\" fill=\"" << p.color << "\"/>\n";
            s << "<text x=\"" << fmt(x + 5) << "\" y=\"" << fmt(y - 5)
              << "\" font-family=\"sans-serif\" font-size=\"13\">" << p.label << "</text>\n";
        }
        double ty = kSize - 10.0 - 16.0 * static_cast<double>(notes_.size() - (notes_.empty() ? 0 : 1));
        for (const auto& n : notes_) {
            s << "<text x=\"10\" y=\"" << fmt(ty) << "\" font-family=\"monospace\" font-size=\"13\">" << n
              << "</text>\n";
            ty += 16.0;
        }
        s << "</svg>\n";
        return {s.str(), "label,x,y\n" + csv_.str()};
    }

private:
    struct Curve {
        std::vector<Vec2> pts;
        std::string color;
        bool closed;
    };
    struct Segment {
        Vec2 a, b;
        std::string color;
        bool dashed;
    };
    struct Line {
        Vec2 through, dir;
        std::string color;
        bool dashed;
    };
    struct Point {
        std::string label;
        Vec2 at;
        std::string color;
    };

    static void emit_segment(std::ostringstream& s, std::pair<double, double> a, std::pair<double, double> b,
                             const std::string& color, bool dashed) {
        s << "<line x1=\"" << fmt(a.first) << "\" y1=\"" << fmt(a.second) << "\" x2=\"" << fmt(b.first)
          << "\" y2=\"" << fmt(b.second) << "\" stroke=\"" << color << "\" stroke-width=\"1.2\""
          << (dashed ? " stroke-dasharray=\"5,4\"" : "") << "/>\n";
    }

    void row(const std::string& label, Vec2 p) { csv_ << label << ',' << fmt(p.x) << ',' << fmt(p.y) << '\n'; }
    void extend(Vec2 p) { extent_ = std::max({extent_, std::abs(p.x), std::abs(p.y)}); }

    std::vector<Curve> curves_;
    std::vector<Segment> segments_;
    std::vector<Line> lines_;
    std::vector<Point> points_;
    std::vector<std::string> notes_;
    std::ostringstream csv_;
    double extent_{0.0};
};

std::vector<Vec2> circle_polyline(const PlaneContext& ctx, Vec2 center = {}, double radius = 1.0) {
    const auto table = ctx.circle_table();
    const std::size_t stride = std::max<std::size_t>(1, table.size() / 512);
    std::vector<Vec2> pts;
    for (std::size_t i = 0; i < table.size(); i += stride) pts.push_back(center + radius * table[i].point);
    return pts;
}

Vec2 unit(const PlaneContext& ctx, Vec2 v) {
    if (v.is_zero()) throw DomainError("figure: zero vector");
    return v / norm(ctx, v);
}

Figure circle_figure(const PlaneContext& ctx) {
    Canvas c;
    c.curve("S", circle_polyline(ctx), "#1f4e9c");
    std::vector<Vec2> anti;
    for (const Vec2& p : circle_polyline(ctx)) anti.push_back(p / antinorm(ctx, p));
    c.curve("antinorm_circle", anti, "#c0392b");
    c.point("o", {});
    c.scalar("omega_scale", ctx.omega_scale());
    c.scalar("radon_defect", ctx.radon_defect());
    return c.finish("unit circle and antinorm circle (" + ctx.spec().label() + ")");
}

Figure cm_figure(const PlaneContext& ctx, const FigureArgs& a) {
    const Vec2 x = unit(ctx, a.x.value_or(Vec2{1.0, 0.0}));
    const Vec2 y = unit(ctx, a.y.value_or(Vec2{0.5, std::sqrt(3.0) / 2.0}));
    const Vec2 bx = birkhoff_b(ctx, x);
    const double c = cm(ctx, x, y);
    const Vec2 q = c * x;
    Canvas cv;
    cv.curve("S", circle_polyline(ctx), "#1f4e9c");
    cv.line(x, bx, "#888");
    cv.line(y, bx, "#c0392b");
    cv.segment({}, x, "#000");
    cv.segment({}, y, "#000");
    cv.point("o", {});
    cv.point("x", x);
    cv.point("y", y);
    cv.point("q", q, "#c0392b");
    cv.scalar("cm", c);
    cv.scalar("norm_q", norm(ctx, q));
    return cv.finish("|q| = cm(x,y)");
}

Figure gamma_figure(const PlaneContext& ctx, const FigureArgs& a) {
    const Vec2 x = unit(ctx, a.x.value_or(Vec2{1.0, 0.0}));
    const Vec2 y = unit(ctx, a.y.value_or(Vec2{std::cos(1.2), std::sin(1.2)}));
    const InscribedCircle ic = inscribed_circle(ctx, x, y, 0.6);
    const double reach = 1.3 * std::max(ic.beta, ic.alpha);
    Canvas cv;
    cv.segment({}, reach * x, "#000");
    cv.segment({}, reach * y, "#000");
    cv.curve("C", circle_polyline(ctx, ic.center, ic.radius), "#1f4e9c");
    cv.segment({}, ic.center, "#888", true);
    cv.point("o", {});
    cv.point("center", ic.center);
    cv.point("beta_x", ic.beta * x, "#c0392b");
    cv.point("alpha_y", ic.alpha * y, "#c0392b");
    cv.scalar("beta", ic.beta);
    cv.scalar("alpha", ic.alpha);
    cv.scalar("gamma", ic.beta / ic.alpha);
    return cv.finish("gamma(x,y) = |beta x| / |alpha y|");
}

Figure chords_figure(const PlaneContext& ctx, const FigureArgs& a) {
    const Vec2 t1 = a.t1.value_or(Vec2{1.0, 0.35});
    const Vec2 t2 = a.t2.value_or(Vec2{-0.3, 1.0});
    const ParallelChords f = parallel_chords(ctx, t1, t2);
    Canvas cv;
    cv.curve("S", circle_polyline(ctx), "#1f4e9c");
    cv.segment(f.p, f.q1 + 0.3 * (f.q1 - f.p), "#888");
    cv.segment(f.p, f.q2 + 0.3 * (f.q2 - f.p), "#888");
    cv.segment(-1.0 * f.b1, f.b1, "#aaa", true);
    cv.segment(-1.0 * f.b2, f.b2, "#aaa", true);
    cv.segment({}, f.b, "#aaa", true);
    cv.segment(f.b, f.c1, "#aaa", true);
    cv.segment(f.b, f.c2, "#aaa", true);
    cv.segment(f.q1, f.q2, "#c0392b");
    cv.segment(f.c1, f.c2, "#c0392b");
    cv.point("o", {});
    cv.point("p", f.p);
    cv.point("q1", f.q1);
    cv.point("q2", f.q2);
    cv.point("b1", f.b1);
    cv.point("b2", f.b2);
    cv.point("b", f.b);
    cv.point("c1", f.c1, "#c0392b");
    cv.point("c2", f.c2, "#c0392b");
    cv.scalar("defect", f.defect);
    cv.scalar("collinearity", f.collinearity);
    return cv.finish("lines <q1,q2> and <c1,c2>");
}

}  // namespace

Figure render_figure(const PlaneContext& ctx, const std::string& figure, const FigureArgs& args) {
    if (figure == "circle") return circle_figure(ctx);
    if (figure == "cm-construction") return cm_figure(ctx, args);
    if (figure == "gamma-construction") return gamma_figure(ctx, args);
    if (figure == "parallel-chords") return chords_figure(ctx, args);
    throw ConfigError("unknown figure: " + figure);
}

}  // namespace minktrig::cli
