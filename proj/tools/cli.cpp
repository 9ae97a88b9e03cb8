#include "cli.hpp"

#include "shsh/arcsystem.hpp"
#include "shsh/flatsurface.hpp"
#include "shsh/hyperbolic.hpp"
#include "shsh/io.hpp"
#include "shsh/shearshape.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

namespace shsh::cli {

namespace {

struct Options {
    std::optional<double> tolerance;
    bool exact = false;

    double switch_tol() const { return tolerance.value_or(kDefaultSwitchTolerance); }
    double horizontal_tol() const { return tolerance.value_or(kHorizontalTolerance); }
};

std::string num(double x) { return format_number(x); }
std::string num(const Rational& x) { return format_number(x); }

template <class T>
std::string tuple(const std::vector<T>& xs) {
    std::string s = "(";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) s += ",";
        if constexpr (std::is_same_v<T, double> || std::is_same_v<T, Rational>)
            s += num(xs[i]);
        else
            s += std::to_string(xs[i]);
    }
    return s + ")";
}

std::vector<std::string> split(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(item);
    return out;
}

template <class T>
T scalar(const std::string& text) {
    if constexpr (std::is_same_v<T, Rational>) {
        return parse_exact(text);
    } else {
        try {
            std::size_t used = 0;
            const double x = std::stod(text, &used);
            if (used == text.size()) return x;
        } catch (const std::logic_error&) {
        }
        if (text.find('/') != std::string::npos) return boost::rational_cast<double>(parse_rational(text));
        throw FormatError("not a number: '" + text + "'");
    }
}

template <class T>
std::vector<T> scalars(const std::string& text, std::size_t count, const char* what) {
    const auto parts = split(text);
    if (parts.size() != count)
        throw FormatError(std::string(what) + " needs " + std::to_string(count) + " comma-separated values");
    std::vector<T> out;
    for (const auto& p : parts) out.push_back(scalar<T>(p));
    return out;
}

PantsDecomposition decomposition(const std::string& name) {
    if (name == "theta") return theta_pants();
    if (name == "dumbbell") return dumbbell_pants();
    throw FormatError("unknown pants decomposition '" + name + "' (theta or dumbbell)");
}

// Names the first switch whose condition fails.
template <class T>
void require_switches(const TrainTrack& track, const WeightSystem<T>& w, double tol, const std::string& what) {
    require_on_track(track, w);
    for (int s = 0; s < track.num_switches(); ++s)
        if (!is_zero(switch_residual(track, w, s), tol))
            throw ValidationError(what + " violates the switch condition at switch " + std::to_string(s));
}

template <class R>
FlatSurfaceT<R> load_surface(const std::string& path, const Options& opt, std::ostream& err) {
    std::vector<std::string> warnings;
    auto q = read_surface<R>(read_text(path), &warnings, opt.horizontal_tol());
    for (const auto& w : warnings) err << "warning: " << path << ": " << w << "\n";
    return q;
}

template <class R>
void emit_surface(const FlatSurfaceT<R>& q, const std::string& path, std::ostream& out) {
    if (path.empty())
        out << write_surface(q);
    else
        write_text(path, write_surface(q));
}

template <class R>
std::string surface_summary(const FlatSurfaceT<R>& q) {
    return "area=" + num(area(q)) + ", stratum=" + tuple(stratum(q));
}

// ---- commands ---------------------------------------------------------------

template <class R>
void validate_file(const std::string& path, const std::vector<std::string>& weight_files, const std::string& track_path,
                   const Options& opt, std::ostream& out, std::ostream& err) {
    const std::string text = read_text(path);
    const std::string kind = file_kind(text);
    if (kind == "surface") {
        const auto q = load_surface<R>(path, opt, err);
        out << surface_summary(q) << "\n";
        out << "genus=" << q.genus() << ", triangles=" << q.num_triangles() << ", "
            << (is_translation_surface(q) ? "translation" : "half-translation") << "\n";
    } else if (kind == "track" || kind == "weights") {
        const bool is_track = kind == "track";
        if (!is_track && track_path.empty()) throw FormatError("validating weights needs --track");
        const TrainTrack track = read_track(read_text(is_track ? path : track_path));
        std::vector<std::string> files = weight_files;
        if (!is_track) files.insert(files.begin(), path);
        out << "track " << track.id() << ": genus " << track.genus() << ", " << track.num_switches() << " switches, "
            << track.num_branches() << " branches, " << complementary_regions(track).size() << " regions, chi "
            << euler_characteristic(track) << "\n";
        for (const auto& f : files) {
            const auto w = read_weights<R>(read_text(f), track);
            require_switches(track, w, opt.switch_tol(), f);
            out << f << ": switch conditions hold\n";
        }
    } else if (kind == "cut") {
        const auto a = read_cut<R>(text);
        validate(a);
        const auto d = dim_summary(a, a.lambda_components);
        const auto fill = filling_report(a);
        out << "genus=" << d.genus << ", spikes=" << d.spikes << ", chi_lambda=" << d.chi_lambda
            << ", dim_H=" << d.dim_H << ", dim_B=" << d.dim_B << ", dim_SH=" << d.dim_SH << "\n";
        out << "fills=" << (fill.fills ? "yes" : "no") << ", in_B=" << (in_B(a, a.lambda_components) ? "yes" : "no")
            << "\n";
        if (!fill.fills) throw ValidationError("arc system does not fill");
    } else {
        throw FormatError(path + ": unknown file kind '" + kind + "'");
    }
}

template <class R>
void weights_cmd(const std::string& path, const std::string& prefix, const Options& opt, std::ostream& out,
                 std::ostream& err) {
    const auto q = load_surface<R>(path, opt, err);
    const auto il = extract_Il(q, opt.horizontal_tol());
    write_text(prefix + ".track.json", write_track(il.track));
    write_text(prefix + ".sigma.json", write_weights(il.sigma, true));
    write_text(prefix + ".lambda.json", write_weights(il.lambda));
    out << "pair=" << num(pair(il.track, il.sigma, il.lambda, opt.switch_tol())) << "\n";
    out << "area=" << num(area(q)) << "\n";
}

template <class R>
void rebuild_cmd(const std::string& track_path, const std::string& sigma_path, const std::string& lambda_path,
                 const std::string& output, const Options& opt, std::ostream& out) {
    const TrainTrack track = read_track(read_text(track_path));
    const auto sigma = read_weights<R>(read_text(sigma_path), track);
    const auto lambda = read_weights<R>(read_text(lambda_path), track);
    require_switches(track, sigma, opt.switch_tol(), "sigma");
    require_switches(track, lambda, opt.switch_tol(), "lambda");
    const auto q = rebuild(track, sigma, lambda, opt.horizontal_tol());
    emit_surface(q, output, out);
    if (!output.empty()) out << surface_summary(q) << "\n";
}

struct FlowArgs {
    std::optional<std::string> geodesic, horocycle, tremor;
    bool symmetric = false;
    std::string output;
};

template <class R>
void flow_cmd(const std::string& path, const FlowArgs& f, const Options& opt, std::ostream& out, std::ostream& err) {
    const int chosen = int(f.geodesic.has_value()) + int(f.horocycle.has_value()) + int(f.tremor.has_value());
    if (chosen != 1) throw FormatError("flow needs exactly one of --geodesic, --horocycle, --tremor");
    const auto q = load_surface<R>(path, opt, err);
    FlatSurfaceT<R> moved;
    if (f.geodesic) {
        if constexpr (std::is_same_v<R, Rational>) {
            throw DomainError("the geodesic flow leaves rational periods; drop --exact");
        } else {
            moved = geodesic_flow(q, scalar<double>(*f.geodesic), f.symmetric);
        }
    } else if (f.horocycle) {
        moved = horocycle_flow(q, scalar<R>(*f.horocycle));
    } else {
        const TrainTrack track = dual_track(q, opt.horizontal_tol());
        const auto mu = read_weights<R>(read_text(*f.tremor), track);
        moved = tremor(q, mu);
    }
    emit_surface(moved, f.output, out);
    if (!f.output.empty()) out << surface_summary(moved) << "\n";
}

template <class T>
void pants_cmd(const std::string& dec_name, const std::string& lengths_text, const std::string& twists_text,
               const std::string& prefix, bool geometry, std::ostream& out) {
    const PantsDecomposition dec = decomposition(dec_name);
    const auto lengths = scalars<T>(lengths_text, dec.curves, "--lengths");
    const auto twists = scalars<T>(twists_text, dec.curves, "--twists");
    const PantsChart chart = pants_chart(dec, pants_shapes(dec, lengths));
    const auto sigma = pants_encode(chart, lengths, twists);
    const auto lambda = curve_measure(chart, std::vector<T>(dec.curves, T(1)));
    if (prefix.empty()) {
        out << write_weights(sigma, true);
    } else {
        write_text(prefix + ".track.json", write_track(chart.track()));
        write_text(prefix + ".sigma.json", write_weights(sigma, true));
        write_text(prefix + ".lambda.json", write_weights(lambda));
    }
    for (std::size_t p = 0; p < dec.pants.size(); ++p) {
        const auto& c = dec.pants[p];
        const PantsShape& s = chart.shapes[p];
        out << "pants " << p << ": " << (s.two_seam ? "two-seam, long cuff " + std::to_string(s.long_cuff) : "three-seam")
            << ", seam weights "
            << tuple(seam_weights(lengths[c[0].curve], lengths[c[1].curve], lengths[c[2].curve], s)) << "\n";
        if (!geometry) continue;
        const auto r = pants_realize(to_double(lengths[c[0].curve]), to_double(lengths[c[1].curve]),
                                     to_double(lengths[c[2].curve]));
        for (std::size_t i = 0; i < r.seam_lengths.size(); ++i) {
            const auto& b = r.bounds[i];
            out << "  seam " << r.ends[i][0] << "-" << r.ends[i][1] << ": length=" << num(r.seam_lengths[i])
                << ", weight=" << num(r.weights[i]) << ", bounds=[" << num(b.lower) << ", " << num(b.upper) << "] "
                << (b.ok ? "ok" : "violated") << "\n";
        }
    }
}

void dt_cmd(const std::string& dec_name, const std::string& track_path, const std::string& sigma_path,
            std::ostream& out) {
    const PantsDecomposition dec = decomposition(dec_name);
    const TrainTrack track = read_track(read_text(track_path));
    const std::vector<PantsShape> options{{false, -1}, {true, 0}, {true, 1}, {true, 2}};
    std::vector<PantsShape> shapes(dec.pants.size());
    std::function<std::optional<PantsChart>(std::size_t)> search = [&](std::size_t p) -> std::optional<PantsChart> {
        if (p == shapes.size()) {
            PantsChart chart = pants_chart(dec, shapes);
            if (chart.track().same_structure(track)) return chart;
            return std::nullopt;
        }
        for (const auto& s : options) {
            shapes[p] = s;
            if (auto c = search(p + 1)) return c;
        }
        return std::nullopt;
    };
    const auto chart = search(0);
    if (!chart) throw StructuralError("track is not a pants chart of the " + dec_name + " decomposition");
    const auto sigma = read_weights<Rational>(read_text(sigma_path), chart->track());
    const DehnThurston dt = dt_decode(*chart, sigma);
    out << "intersections=" << tuple(dt.intersections) << "\n";
    out << "twists=" << tuple(dt.twists) << "\n";
}

int hexagon_check_cmd(const std::vector<std::string>& sides, std::ostream& out) {
    if (sides.size() != 6) throw FormatError("hexagon-check takes two triples of side lengths or 'spike'");
    auto spec = [](const std::string& s) -> ArcSpec {
        if (s == "spike") return kSpike;
        return scalar<double>(s);
    };
    const Hexagon h = hexagon_from_arc_lengths({spec(sides[0]), spec(sides[1]), spec(sides[2])});
    const Hexagon g = hexagon_from_arc_lengths({spec(sides[3]), spec(sides[4]), spec(sides[5])});
    const double residual = cocycle_check(h, g);
    double sliding = 0.0;
    for (int i = 0; i < 3; ++i) sliding = std::max(sliding, sliding_residual(h, g, i));
    const bool pass = residual < 1e-8 && sliding < 1e-8;
    out << "residual=" << num(residual) << "\n";
    out << "sliding=" << num(sliding) << "\n";
    out << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? kOk : kInvalid;
}

struct LatticeArgs {
    std::string decomposition = "theta";
    std::string lengths = "2,2,2";
    std::int64_t from = 4, to = 32, factor = 2;
    bool generic = false;
    std::string points;
};

void lattice_cmd(const LatticeArgs& a, std::ostream& out) {
    if (a.from < 1 || a.to < a.from || a.factor < 2) throw FormatError("need 1 <= --from <= --to and --factor >= 2");
    const PantsDecomposition dec = decomposition(a.decomposition);
    const auto lengths = scalars<Rational>(a.lengths, dec.curves, "--lengths");
    const PantsChart chart = pants_chart(dec, pants_shapes(dec, lengths));
    const auto lambda = curve_measure(chart, std::vector<std::int64_t>(dec.curves, 1));
    out << "R,count\n";
    std::int64_t last = a.from;
    for (std::int64_t r = a.from; r <= a.to; r *= a.factor) {
        const std::int64_t n =
            a.generic ? count_integer_points(chart.track(), lambda, r) : count_integer_points(chart, lambda, r);
        out << r << "," << n << "\n";
        last = r;
    }
    if (!a.points.empty()) {
        std::ofstream f(a.points);
        if (!f) throw FormatError("cannot write " + a.points);
        const TrainTrack& t = chart.track();
        for (int b = 0; b < t.num_branches(); ++b) f << (b ? "," : "") << "b" << b;
        f << "\n";
        for (const auto& p : integer_points(t, lambda, last)) {
            for (std::size_t b = 0; b < p.size(); ++b) f << (b ? "," : "") << p[b];
            f << "\n";
        }
    }
}

void print_dims(const std::string& name, const DimSummary& d, bool fill, bool inb, std::ostream& out) {
    out << name << ": genus=" << d.genus << ", spikes=" << d.spikes << ", chi_lambda=" << d.chi_lambda
        << ", dim_H=" << d.dim_H << ", dim_B=" << d.dim_B << ", dim_SH=" << d.dim_SH << ", fills=" << (fill ? 1 : 0)
        << ", in_B=" << (inb ? 1 : 0) << "\n";
}

void dims_cmd(const std::string& path, int catalog, std::ostream& out) {
    if (path.empty() == (catalog == 0)) throw FormatError("dims takes a cut file or --catalog <genus>");
    if (!path.empty()) {
        const auto a = read_cut<Rational>(read_text(path));
        validate(a);
        print_dims(path, dim_summary(a, a.lambda_components), fills(a), in_B(a, a.lambda_components), out);
        return;
    }
    for (const auto& e : cut_catalog(catalog))
        print_dims(e.name, dim_summary(e.system, e.system.lambda_components), fills(e.system),
                   in_B(e.system, e.system.lambda_components), out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Shear-shape coordinates for flat and hyperbolic surfaces", "shsh"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for every command");

    Options opt;
    app.add_option("--tolerance", opt.tolerance, "Switch and horizontality tolerance")->check(CLI::PositiveNumber);
    app.add_flag("--exact", opt.exact, "Use rational arithmetic where supported");

    std::function<int()> action;
    auto exact_or_float = [&](auto&& fn) {
        return [&, fn]() {
            if (opt.exact)
                fn(Rational{});
            else
                fn(double{});
            return int(kOk);
        };
    };

    std::string file, track_path, output, prefix;
    std::vector<std::string> weight_files;

    auto* validate_app = app.add_subcommand("validate", "Check a surface, track, weight or cut file");
    validate_app->add_option("file", file, "Input file")->required();
    validate_app->add_option("--track", track_path, "Track for weight files");
    validate_app->add_option("--weights", weight_files, "Weight files to check against the track");
    validate_app->callback([&] {
        action = exact_or_float([&](auto tag) {
            validate_file<decltype(tag)>(file, weight_files, track_path, opt, out, err);
        });
    });

    auto* area_app = app.add_subcommand("area", "Print the area of a surface");
    area_app->add_option("surface", file)->required();
    area_app->callback([&] {
        action = exact_or_float([&](auto tag) {
            const auto q = load_surface<decltype(tag)>(file, opt, err);
            out << "area=" << num(area(q)) << "\n";
        });
    });

    auto* stratum_app = app.add_subcommand("stratum", "Print the stratum of a surface");
    stratum_app->add_option("surface", file)->required();
    stratum_app->callback([&] {
        action = exact_or_float([&](auto tag) {
            const auto q = load_surface<decltype(tag)>(file, opt, err);
            out << "stratum=" << tuple(stratum(q)) << ", "
                << (is_translation_surface(q) ? "translation" : "half-translation") << "\n";
        });
    });

    auto* weights_app = app.add_subcommand("weights", "Write the track and (sigma, lambda) weights of a surface");
    weights_app->add_option("surface", file)->required();
    weights_app->add_option("--prefix", prefix, "Output prefix for .track/.sigma/.lambda.json")->required();
    weights_app->callback([&] {
        action = exact_or_float([&](auto tag) { weights_cmd<decltype(tag)>(file, prefix, opt, out, err); });
    });

    std::string sigma_path, lambda_path;
    auto* rebuild_app = app.add_subcommand("rebuild", "Rebuild a surface from (sigma, lambda) weights");
    rebuild_app->add_option("--track", track_path)->required();
    rebuild_app->add_option("--sigma", sigma_path)->required();
    rebuild_app->add_option("--lambda", lambda_path)->required();
    rebuild_app->add_option("-o,--output", output, "Output surface file (stdout when omitted)");
    rebuild_app->callback([&] {
        action = exact_or_float([&](auto tag) {
            rebuild_cmd<decltype(tag)>(track_path, sigma_path, lambda_path, output, opt, out);
        });
    });

    FlowArgs flow;
    auto* flow_app = app.add_subcommand("flow", "Apply the geodesic or horocycle flow or a tremor");
    flow_app->add_option("surface", file)->required();
    flow_app->add_option("--geodesic", flow.geodesic, "Flow time t");
    flow_app->add_option("--horocycle", flow.horocycle, "Flow time s");
    flow_app->add_option("--tremor", flow.tremor, "Transverse measure file on the dual track");
    flow_app->add_flag("--symmetric", flow.symmetric, "Geodesic flow as diag(e^{t/2}, e^{-t/2})");
    flow_app->add_option("-o,--output", flow.output, "Output surface file (stdout when omitted)");
    flow_app->callback([&] {
        action = exact_or_float([&](auto tag) { flow_cmd<decltype(tag)>(file, flow, opt, out, err); });
    });

    std::string dec_name = "theta", lengths, twists;
    bool geometry = false;
    auto* pants_app = app.add_subcommand("pants", "Encode cuff lengths and twists as a shear-shape cocycle");
    pants_app->add_option("--decomposition", dec_name, "theta or dumbbell");
    pants_app->add_option("--lengths", lengths, "Comma-separated curve lengths")->required();
    pants_app->add_option("--twists", twists, "Comma-separated twists")->required();
    pants_app->add_option("--prefix", prefix, "Output prefix (sigma to stdout when omitted)");
    pants_app->add_flag("--geometry", geometry, "Report seam lengths and bounds of the hyperbolic pants");
    pants_app->callback([&] {
        action = exact_or_float([&](auto tag) {
            pants_cmd<decltype(tag)>(dec_name, lengths, twists, prefix, geometry, out);
        });
    });

    auto* dt_app = app.add_subcommand("dt", "Decode Dehn-Thurston coordinates of an integral cocycle");
    dt_app->add_option("--decomposition", dec_name, "theta or dumbbell");
    dt_app->add_option("--track", track_path)->required();
    dt_app->add_option("--sigma", sigma_path)->required();
    dt_app->callback([&] {
        action = [&] {
            dt_cmd(dec_name, track_path, sigma_path, out);
            return int(kOk);
        };
    });

    std::vector<std::string> sides;
    auto* hex_app = app.add_subcommand("hexagon-check", "Shaping cocycle residual for two hexagons");
    hex_app->add_option("sides", sides, "Six arc lengths (or 'spike'): three per hexagon")->required()->expected(6);
    hex_app->callback([&] { action = [&] { return hexagon_check_cmd(sides, out); }; });

    LatticeArgs lat;
    auto* lat_app = app.add_subcommand("lattice-count", "Count integral cocycles in growing regions");
    lat_app->add_option("--decomposition", lat.decomposition, "theta or dumbbell");
    lat_app->add_option("--lengths", lat.lengths, "Curve lengths selecting the chart");
    lat_app->add_option("--from", lat.from, "Smallest R");
    lat_app->add_option("--to", lat.to, "Largest R");
    lat_app->add_option("--factor", lat.factor, "Ratio between successive R");
    lat_app->add_flag("--generic", lat.generic, "Use the chart-independent enumeration");
    lat_app->add_option("--points", lat.points, "CSV of the points for the largest R");
    lat_app->callback([&] { action = [&] { lattice_cmd(lat, out); return int(kOk); }; });

    int catalog = 0;
    auto* dims_app = app.add_subcommand("dims", "Dimension bookkeeping for cut surfaces");
    dims_app->add_option("cut", file, "Cut file");
    dims_app->add_option("--catalog", catalog, "Genus of the built-in catalog");
    dims_app->callback([&] { action = [&] { dims_cmd(file, catalog, out); return int(kOk); }; });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? int(kOk) : int(kFormat);
    }

    try {
        return action();
    } catch (const ChartError& e) {
        err << "chart error: " << e.what() << "\n";
        return kChart;
    } catch (const FormatError& e) {
        err << "format error: " << e.what() << "\n";
        return kFormat;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInvalid;
    }
}

}  // namespace shsh::cli
