#include <minktrig/birkhoff.hpp>
#include <minktrig/circle_calculus.hpp>
#include <minktrig/distortion.hpp>
#include <minktrig/errors.hpp>
#include <minktrig/spec_io.hpp>
#include <minktrig/trig.hpp>
#include <minktrig/verify.hpp>
#include <minktrig_cli/cli.hpp>
#include <minktrig_cli/format.hpp>
#include <minktrig_cli/output.hpp>
#include <minktrig_cli/plot.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

namespace minktrig::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

ContextOptions context_options() {
    ContextOptions opt;
    if (const char* env = std::getenv("MINKTRIG_TABLE_SIZE"); env && *env) {
        char* end = nullptr;
        const unsigned long long n = std::strtoull(env, &end, 10);
        if (*end != '\0' || n < 64 || n > (1ULL << 22)) {
            throw ConfigError(std::string("MINKTRIG_TABLE_SIZE must be an integer in [64, 4194304], got '") + env +
                              "'");
        }
        opt.table_size = static_cast<std::size_t>(n);
    }
    return opt;
}

PlaneContext load_context(const std::string& norm_arg) {
    if (norm_arg.empty()) {
        throw ConfigError("--norm is required");
    }
    return build_context(load_norm_spec(norm_arg), context_options());
}

/// Writes to path, or to out when path is empty.
void emit(const std::string& path, const std::string& content, std::ostream& out) {
    if (path.empty()) {
        out << content;
    } else {
        write_file(path, content);
    }
}

Vec2 arg_vec(const std::vector<double>& a, std::size_t i) { return {a[i], a[i + 1]}; }

nlohmann::ordered_json eval_value(const PlaneContext& ctx, const std::string& fn, const std::vector<double>& a) {
    const auto need = [&](std::size_t n) {
        if (a.size() != n) {
            throw ConfigError("--fn " + fn + " takes " + std::to_string(n) + " numbers, got " +
                              std::to_string(a.size()));
        }
    };
    if (fn == "b") {
        need(2);
        const Vec2 b = birkhoff_b(ctx, arg_vec(a, 0));
        return nlohmann::ordered_json::array({round10(b.x), round10(b.y)});
    }
    if (fn == "antinorm") {
        need(2);
        return round10(antinorm(ctx, arg_vec(a, 0)));
    }
    if (fn == "norm") {
        need(2);
        return round10(norm(ctx, arg_vec(a, 0)));
    }
    if (fn == "gamma") {
        if (a.size() == 2) return round10(gamma_from_point(ctx, arg_vec(a, 0)));
        need(4);
        return round10(gamma_pair(ctx, arg_vec(a, 0), arg_vec(a, 2)));
    }
    using Binary = double (*)(const PlaneContext&, Vec2, Vec2);
    Binary f = nullptr;
    if (fn == "cm") f = &cm;
    if (fn == "sn") f = &sn;
    if (fn == "cn") f = &cn;
    if (fn == "ca") f = &ca;
    if (fn == "gateaux") f = &gateaux;
    if (fn == "semi_inner") f = &semi_inner;
    if (!f) {
        throw ConfigError("unknown --fn: " + fn);
    }
    need(4);
    return round10(f(ctx, arg_vec(a, 0), arg_vec(a, 2)));
}

std::string rho_table(const PlaneContext& ctx, std::size_t rows) {
    const ArcParam p = arc_param(ctx, ArcKind::NormLength);
    std::string csv = "s,theta,rho\n";
    for (std::size_t k = 0; k < rows; ++k) {
        const double s = p.total * static_cast<double>(k) / static_cast<double>(rows);
        csv += csv_row({s, theta_at(ctx, p, s), rho(ctx, s)}) + '\n';
    }
    return csv;
}

std::string cm_row_table(const PlaneContext& ctx, std::size_t rows) {
    const Vec2 x = circle_point_at(ctx, 0.0);
    std::string csv = "theta,y_x,y_y,cm_xy,cm_yx,sn_xy\n";
    for (std::size_t k = 1; k < rows; ++k) {
        const double theta = kTwoPi * static_cast<double>(k) / static_cast<double>(rows);
        const Vec2 y = circle_point_at(ctx, theta);
        csv += csv_row({theta, y.x, y.y, cm(ctx, x, y), cm(ctx, y, x), sn(ctx, x, y)}) + '\n';
    }
    return csv;
}

std::string arc_params_table(const PlaneContext& ctx, std::size_t rows) {
    const auto table = ctx.circle_table();
    const std::size_t stride = std::max<std::size_t>(1, table.size() / std::max<std::size_t>(rows, 1));
    std::string csv = "theta,s_norm,s_anti,area2\n";
    for (std::size_t i = 0; i < table.size(); i += stride) {
        const CirclePoint& c = table[i];
        csv += csv_row({c.theta, c.s_norm, c.s_anti, c.sector_area2}) + '\n';
    }
    const CircleTotals& t = ctx.totals();
    csv += csv_row({kTwoPi, t.norm_length, t.anti_length, t.area2}) + '\n';
    return csv;
}

std::string gamma_sweep_table(const std::vector<double>& ps) {
    std::string csv = "p,apex_x,apex_y,len1,len2,gamma\n";
    for (double p : ps) {
        const PlaneContext ctx = build_context(NormSpec::mixed(p), context_options());
        const Vec2 apex = mixed_apex(p);
        const TangentPair t = tangent_points(ctx, apex);
        csv += csv_row({p, apex.x, apex.y, t.len1, t.len2, t.len1 / t.len2}) + '\n';
    }
    return csv;
}

std::string calculus_table(const PlaneContext& ctx, std::size_t grid) {
    if (grid < 8) {
        throw ConfigError("--grid needs at least 8 points");
    }
    const ArcParam p = arc_param(ctx, ArcKind::NormLength);
    const Vec2 x0 = circle_point_at(ctx, 0.0);
    const double h = p.total / static_cast<double>(grid);
    std::vector<double> vs(grid), vc(grid), th(grid);
    for (std::size_t k = 0; k < grid; ++k) {
        const double s = h * static_cast<double>(k);
        th[k] = theta_at(ctx, p, s);
        const Vec2 y = circle_point_at(ctx, th[k]);
        vs[k] = sn(ctx, x0, y);
        vc[k] = cm(ctx, x0, y);
    }
    std::string csv = "s,theta,rho,sn,cm,residual\n";
    for (std::size_t k = 0; k < grid; ++k) {
        const std::size_t km = (k + grid - 1) % grid;
        const std::size_t kp = (k + 1) % grid;
        const double s = h * static_cast<double>(k);
        const double r = rho(ctx, s);
        const double rs = std::abs((vs[kp] - 2.0 * vs[k] + vs[km]) / (h * h) + r * vs[k]);
        const double rc = std::abs((vc[kp] - 2.0 * vc[k] + vc[km]) / (h * h) + r * vc[k]);
        csv += csv_row({s, th[k], r, vs[k], vc[k], std::max(rs, rc)}) + '\n';
    }
    return csv;
}

std::string gamma_rows(const PlaneContext& ctx, const std::vector<std::string>& points, std::size_t count,
                       std::uint64_t seed) {
    std::vector<Vec2> ps;
    for (const auto& s : points) ps.push_back(parse_vec(s));
    if (ps.empty()) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> angle(0.0, kTwoPi);
        std::uniform_real_distribution<double> radius(1.05, 4.0);
        for (std::size_t k = 0; k < count; ++k) {
            const double theta = angle(rng);
            const double r = radius(rng);
            ps.push_back(r * circle_point_at(ctx, theta));
        }
    }
    std::string csv = "p_x,p_y,len1,len2,gamma\n";
    for (const Vec2& p : ps) {
        const TangentPair t = tangent_points(ctx, p);
        csv += csv_row({p.x, p.y, t.len1, t.len2, t.len1 / t.len2}) + '\n';
    }
    return csv;
}

struct Args {
    std::string norm;
    std::string fn;
    std::string values;
    std::string suite{"all"};
    std::size_t samples{1000};
    std::uint64_t seed{1};
    std::string figure;
    std::string out;
    std::string x, y, t1, t2;
    std::string p_list{"4,8,16,32,64"};
    std::size_t rows{256};
    std::size_t grid{512};
    std::size_t count{100};
    std::vector<std::string> points;
};

std::optional<Vec2> optional_vec(const std::string& s) {
    if (s.empty()) return std::nullopt;
    return parse_vec(s);
}

int dispatch(const CLI::App& app, const Args& a, std::ostream& out) {
    if (app.got_subcommand("eval")) {
        const PlaneContext ctx = load_context(a.norm);
        nlohmann::ordered_json j;
        j["fn"] = a.fn;
        j["value"] = eval_value(ctx, a.fn, parse_numbers(a.values));
        out << j.dump() << '\n';
        return kExitOk;
    }
    if (app.got_subcommand("verify")) {
        const Suite suite = parse_suite(a.suite);
        const PlaneContext ctx = load_context(a.norm);
        const auto reports = run_suite(ctx, suite, {a.samples, a.seed});
        out << to_json(reports) << '\n';
        return all_pass(reports) ? kExitOk : kExitVerifyFail;
    }
    if (app.got_subcommand("plot")) {
        const PlaneContext ctx = load_context(a.norm);
        const FigureArgs fa{optional_vec(a.x), optional_vec(a.y), optional_vec(a.t1), optional_vec(a.t2)};
        const Figure fig = render_figure(ctx, a.figure, fa);
        const std::string csv_path = replace_extension(a.out, ".csv");
        write_file(a.out, fig.svg);
        write_file(csv_path, fig.csv);
        nlohmann::ordered_json j;
        j["svg"] = a.out;
        j["csv"] = csv_path;
        out << j.dump() << '\n';
        return kExitOk;
    }
    if (app.got_subcommand("table")) {
        std::string csv;
        if (a.fn == "gamma-sweep") {
            csv = gamma_sweep_table(parse_numbers(a.p_list));
        } else if (a.fn == "rho" || a.fn == "cm-row" || a.fn == "arc-params") {
            const PlaneContext ctx = load_context(a.norm);
            if (a.fn == "rho") csv = rho_table(ctx, a.rows);
            if (a.fn == "cm-row") csv = cm_row_table(ctx, a.rows);
            if (a.fn == "arc-params") csv = arc_params_table(ctx, a.rows);
        } else {
            throw ConfigError("unknown table --fn: " + a.fn);
        }
        emit(a.out, csv, out);
        return kExitOk;
    }
    if (app.got_subcommand("gamma")) {
        const PlaneContext ctx = load_context(a.norm);
        emit(a.out, gamma_rows(ctx, a.points, a.count, a.seed), out);
        return kExitOk;
    }
    if (app.got_subcommand("calculus")) {
        const PlaneContext ctx = load_context(a.norm);
        emit(a.out, calculus_table(ctx, a.grid), out);
        return kExitOk;
    }
    throw ConfigError("no subcommand");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Trigonometry of smooth Minkowski planes", "minktrig"};
    app.require_subcommand(1);
    Args a;
    const std::string norm_help = "spec.json | builtin:euclidean | builtin:lp:P | builtin:mixed:P";

    auto* eval = app.add_subcommand("eval", "Evaluate one function");
    eval->add_option("--norm", a.norm, norm_help)->required();
    eval->add_option("--fn", a.fn, "cm|sn|cn|ca|gamma|b|antinorm|norm|gateaux|semi_inner")->required();
    eval->add_option("--args", a.values, "x1,x2[,y1,y2]")->required();

    auto* verify = app.add_subcommand("verify", "Run a property suite and print JSON reports");
    verify->add_option("--norm", a.norm, norm_help)->required();
    verify->add_option("--suite", a.suite, "all|core|trig|distortion|calculus|radon");
    verify->add_option("--samples", a.samples, "random samples per check")->check(CLI::PositiveNumber);
    verify->add_option("--seed", a.seed, "RNG seed");

    auto* plot = app.add_subcommand("plot", "Write an SVG figure and its CSV sidecar");
    plot->add_option("--norm", a.norm, norm_help)->required();
    plot->add_option("--figure", a.figure, "circle|cm-construction|gamma-construction|parallel-chords")->required();
    plot->add_option("--out", a.out, "output .svg path")->required();
    plot->add_option("--x", a.x, "x1,x2");
    plot->add_option("--y", a.y, "y1,y2");
    plot->add_option("--t1", a.t1, "first tangent direction (parallel-chords)");
    plot->add_option("--t2", a.t2, "second tangent direction (parallel-chords)");

    auto* table = app.add_subcommand("table", "Write a CSV table");
    table->add_option("--norm", a.norm, norm_help + " (not used by gamma-sweep)");
    table->add_option("--fn", a.fn, "rho|cm-row|gamma-sweep|arc-params")->required();
    table->add_option("--out", a.out, "output .csv path (stdout if omitted)");
    table->add_option("--p-list", a.p_list, "exponents for gamma-sweep");
    table->add_option("--rows", a.rows, "row count")->check(CLI::PositiveNumber);

    auto* gamma = app.add_subcommand("gamma", "Distortion at exterior points as CSV");
    gamma->add_option("--norm", a.norm, norm_help)->required();
    gamma->add_option("--point", a.points, "p1,p2 (repeatable)");
    gamma->add_option("--count", a.count, "random points when no --point is given")->check(CLI::PositiveNumber);
    gamma->add_option("--seed", a.seed, "RNG seed");
    gamma->add_option("--out", a.out, "output .csv path (stdout if omitted)");

    auto* calculus = app.add_subcommand("calculus", "Arc-length profile of rho, sn, cm and the ODE residual");
    calculus->add_option("--norm", a.norm, norm_help)->required();
    calculus->add_option("--grid", a.grid, "grid points")->check(CLI::PositiveNumber);
    calculus->add_option("--out", a.out, "output .csv path (stdout if omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitConfig;
    }

    try {
        return dispatch(app, a, out);
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitDomain;
    }
}

}  // namespace minktrig::cli
