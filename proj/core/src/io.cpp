#include "shsh/io.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

namespace shsh {

using Json = nlohmann::json;

namespace {

Json parse(const std::string& text, const char* kind) {
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw FormatError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object()) throw FormatError("expected a JSON object");
    if (!j.contains("format") || !j["format"].is_number_integer() || j["format"].get<int>() != kFileFormat)
        throw FormatError("unsupported or missing format version (expected " + std::to_string(kFileFormat) + ")");
    if (*kind && j.contains("kind") && j["kind"] != kind)
        throw FormatError("expected a " + std::string(kind) + " file, found " + j["kind"].dump());
    return j;
}

Json header(const char* kind) { return Json{{"format", kFileFormat}, {"kind", kind}}; }

const Json& field(const Json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) throw FormatError(std::string("missing field '") + name + "'");
    return j[name];
}

template <class T>
T get(const Json& j, const char* name) {
    try {
        return field(j, name).get<T>();
    } catch (const Json::exception& e) {
        throw FormatError(std::string("bad field '") + name + "': " + e.what());
    }
}

int id_of(const Json& j) { return get<int>(j, "id"); }

// Rebuilds an id-indexed vector from objects with `id` fields 0..n-1.
template <class T, class F>
std::vector<T> by_id(const Json& list, const char* what, F make) {
    if (!list.is_array()) throw FormatError(std::string(what) + " must be a list");
    std::vector<T> out(list.size());
    std::vector<bool> seen(list.size(), false);
    for (const Json& item : list) {
        const int id = id_of(item);
        if (id < 0 || id >= static_cast<int>(list.size()) || seen[id])
            throw FormatError(std::string(what) + " ids must be 0.." + std::to_string(list.size() - 1) +
                              " without repeats");
        seen[id] = true;
        out[id] = make(item);
    }
    return out;
}

Rational rational_from(const Json& v) {
    if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_float()) {
        const double x = v.get<double>();
        int e = 0;
        double m = std::frexp(x, &e);
        std::int64_t num = 0;
        int shift = 0;
        for (; shift < 62 && m != std::floor(m); ++shift) m *= 2;
        if (m != std::floor(m)) throw FormatError("value " + v.dump() + " has no exact rational form");
        num = static_cast<std::int64_t>(m);
        const int pow2 = e - shift;
        if (pow2 >= 0) {
            if (pow2 > 62) throw FormatError("value " + v.dump() + " is too large");
            return Rational(num) * Rational(std::int64_t{1} << pow2);
        }
        if (-pow2 > 62) throw FormatError("value " + v.dump() + " needs too fine a denominator");
        return Rational(num, std::int64_t{1} << -pow2);
    }
    throw FormatError("expected a number, found " + v.dump());
}

template <class T>
T scalar_from(const Json& v);

template <>
double scalar_from<double>(const Json& v) {
    if (v.is_number()) return v.get<double>();
    if (v.is_string()) return boost::rational_cast<double>(parse_rational(v.get<std::string>()));
    throw FormatError("expected a number, found " + v.dump());
}

template <>
Rational scalar_from<Rational>(const Json& v) {
    return rational_from(v);
}

template <>
Complex scalar_from<Complex>(const Json& v) {
    if (!v.is_array() || v.size() != 2) throw FormatError("complex values are [re, im] pairs, found " + v.dump());
    return {scalar_from<double>(v[0]), scalar_from<double>(v[1])};
}

Json to_json(double x) {
    if (!std::isfinite(x)) throw FormatError("cannot write a non-finite value");
    return std::stod(format_number(x));
}

Json to_json(const Rational& x) { return format_number(x); }

Json to_json(const Complex& z) { return Json::array({to_json(z.real()), to_json(z.imag())}); }

template <class T>
const char* field_name();
template <>
const char* field_name<double>() {
    return "real";
}
template <>
const char* field_name<Rational>() {
    return "rational";
}
template <>
const char* field_name<Complex>() {
    return "complex";
}

}  // namespace

std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string format_number(const Rational& x) { return to_string(x); }

Rational parse_rational(const std::string& text) {
    try {
        std::size_t used = 0;
        const auto slash = text.find('/');
        const std::int64_t num = std::stoll(text.substr(0, slash), &used);
        if (used != (slash == std::string::npos ? text.size() : slash)) throw std::invalid_argument(text);
        if (slash == std::string::npos) return Rational(num);
        const std::string rest = text.substr(slash + 1);
        const std::int64_t den = std::stoll(rest, &used);
        if (used != rest.size() || den == 0) throw std::invalid_argument(text);
        return Rational(num, den);
    } catch (const std::logic_error&) {
        throw FormatError("not a rational number: '" + text + "'");
    }
}

Rational parse_exact(const std::string& text) {
    const auto dot = text.find('.');
    if (dot == std::string::npos || text.find_first_of("eE") != std::string::npos) {
        if (text.find_first_of("eE") == std::string::npos) return parse_rational(text);
        double x = 0.0;
        try {
            std::size_t used = 0;
            x = std::stod(text, &used);
            if (used != text.size()) throw std::invalid_argument(text);
        } catch (const std::logic_error&) {
            throw FormatError("not a number: '" + text + "'");
        }
        return rational_from(Json(x));
    }
    std::string frac = text.substr(dot + 1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (frac.size() > 17 || frac.find_first_not_of("0123456789") != std::string::npos)
        throw FormatError("not a decimal number: '" + text + "'");
    std::string whole = text.substr(0, dot);
    const bool negative = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    const Rational w = parse_rational(whole);
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const Rational f = frac.empty() ? Rational(0) : Rational(std::stoll(frac), den);
    return negative ? w - f : w + f;
}

std::string file_kind(const std::string& text) {
    const Json j = parse(text, "");
    if (!j.contains("kind") || !j["kind"].is_string()) throw FormatError("document has no kind tag");
    return j["kind"].get<std::string>();
}

std::string read_text(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write " + path.string());
    out << text;
    if (!out) throw FormatError("failed writing " + path.string());
}

// ---- tracks -----------------------------------------------------------------

std::string write_track(const TrainTrack& track) {
    Json j = header("track");
    j["id"] = track.id();
    j["genus"] = track.genus();
    Json sw = Json::array();
    for (int s = 0; s < track.num_switches(); ++s) {
        const Switch& x = track.switches()[s];
        sw.push_back({{"id", s}, {"large", x.large}, {"small_left", x.small_left}, {"small_right", x.small_right}});
    }
    Json br = Json::array();
    for (int b = 0; b < track.num_branches(); ++b) {
        const Branch& x = track.branches()[b];
        br.push_back({{"id", b}, {"half_a", x.half_a}, {"half_b", x.half_b}, {"arc", x.arc}});
    }
    j["switches"] = sw;
    j["branches"] = br;
    return j.dump(2) + "\n";
}

TrainTrack read_track(const std::string& text) {
    const Json j = parse(text, "track");
    auto switches = by_id<Switch>(field(j, "switches"), "switches", [](const Json& s) {
        return Switch{get<int>(s, "large"), get<int>(s, "small_left"), get<int>(s, "small_right")};
    });
    auto branches = by_id<Branch>(field(j, "branches"), "branches", [](const Json& b) {
        return Branch{get<int>(b, "half_a"), get<int>(b, "half_b"), b.contains("arc") ? get<bool>(b, "arc") : false};
    });
    const std::string id = j.contains("id") ? get<std::string>(j, "id") : std::string("track");
    return TrainTrack(get<int>(j, "genus"), std::move(switches), std::move(branches), id);
}

// ---- weights ----------------------------------------------------------------

template <class T>
std::string write_weights(const WeightSystem<T>& w, bool arc_positive) {
    Json j = header("weights");
    j["track_id"] = w.track_id;
    j["field"] = field_name<T>();
    if (arc_positive) j["arc_positive"] = true;
    Json values = Json::object();
    for (std::size_t b = 0; b < w.size(); ++b) values[std::to_string(b)] = to_json(w[b]);
    j["weights"] = values;
    return j.dump(2) + "\n";
}

template <class T>
WeightSystem<T> read_weights(const std::string& text, const TrainTrack& track) {
    const Json j = parse(text, "weights");
    const std::string track_id = get<std::string>(j, "track_id");
    if (track_id != track.id())
        throw StructuralError("weights belong to track '" + track_id + "', not '" + track.id() + "'");
    const std::string fld = j.contains("field") ? get<std::string>(j, "field") : std::string("real");
    if constexpr (std::is_same_v<T, Complex>) {
        if (fld != "complex") throw FormatError("expected complex weights, found field '" + fld + "'");
    } else {
        if (fld != "real" && fld != "rational") throw FormatError("expected real weights, found field '" + fld + "'");
    }
    const Json& values = field(j, "weights");
    if (!values.is_object()) throw FormatError("weights must map branch ids to values");
    WeightSystem<T> w = WeightSystem<T>::zeros(track);
    std::vector<bool> seen(w.size(), false);
    for (const auto& [key, v] : values.items()) {
        int b = -1;
        try {
            std::size_t used = 0;
            b = std::stoi(key, &used);
            if (used != key.size()) b = -1;
        } catch (const std::logic_error&) {
        }
        if (b < 0 || b >= static_cast<int>(w.size()))
            throw StructuralError("weight for unknown branch '" + key + "'");
        w[b] = scalar_from<T>(v);
        seen[b] = true;
    }
    for (std::size_t b = 0; b < seen.size(); ++b)
        if (!seen[b]) throw StructuralError("no weight for branch " + std::to_string(b));
    return w;
}

template std::string write_weights(const WeightSystem<double>&, bool);
template std::string write_weights(const WeightSystem<Rational>&, bool);
template std::string write_weights(const WeightSystem<Complex>&, bool);
template WeightSystem<double> read_weights(const std::string&, const TrainTrack&);
template WeightSystem<Rational> read_weights(const std::string&, const TrainTrack&);
template WeightSystem<Complex> read_weights(const std::string&, const TrainTrack&);

// ---- surfaces ---------------------------------------------------------------

template <class R>
std::string write_surface(const FlatSurfaceT<R>& q) {
    Json j = header("surface");
    j["field"] = field_name<R>();
    j["triangles"] = q.triangles();
    j["pairs"] = q.pairs();
    Json periods = Json::object();
    for (int e = 0; e < q.num_edges(); ++e)
        periods[std::to_string(e)] = Json::array({to_json(q.periods()[e].re), to_json(q.periods()[e].im)});
    j["periods"] = periods;
    return j.dump(2) + "\n";
}

template <class R>
FlatSurfaceT<R> read_surface(const std::string& text, std::vector<std::string>* warnings, double tol) {
    const Json j = parse(text, "surface");
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 2>> pairs;
    try {
        triangles = field(j, "triangles").get<std::vector<std::array<int, 3>>>();
        pairs = field(j, "pairs").get<std::vector<std::array<int, 2>>>();
    } catch (const Json::exception& e) {
        throw FormatError(std::string("bad triangles or pairs: ") + e.what());
    }
    const Json& values = field(j, "periods");
    if (!values.is_object()) throw FormatError("periods must map edge ids to [re, im]");
    std::vector<PeriodT<R>> periods(pairs.size());
    std::vector<bool> seen(pairs.size(), false);
    for (const auto& [key, v] : values.items()) {
        int e = -1;
        try {
            std::size_t used = 0;
            e = std::stoi(key, &used);
            if (used != key.size()) e = -1;
        } catch (const std::logic_error&) {
        }
        if (e < 0 || e >= static_cast<int>(pairs.size())) throw StructuralError("period for unknown edge '" + key + "'");
        if (!v.is_array() || v.size() != 2) throw FormatError("period of edge " + key + " is not an [re, im] pair");
        PeriodT<R> z{scalar_from<R>(v[0]), scalar_from<R>(v[1])};
        const PeriodT<R> n = bracket_plus(z);
        if (!(n == z) && warnings) warnings->push_back("edge " + key + ": period replaced by its negative");
        periods[e] = n;
        seen[e] = true;
    }
    for (std::size_t e = 0; e < seen.size(); ++e)
        if (!seen[e]) throw StructuralError("no period for edge " + std::to_string(e));
    return FlatSurfaceT<R>(std::move(triangles), std::move(pairs), std::move(periods), tol);
}

template std::string write_surface(const FlatSurfaceT<double>&);
template std::string write_surface(const FlatSurfaceT<Rational>&);
template FlatSurfaceT<double> read_surface(const std::string&, std::vector<std::string>*, double);
template FlatSurfaceT<Rational> read_surface(const std::string&, std::vector<std::string>*, double);

// ---- cut surfaces -----------------------------------------------------------

namespace {

Json endpoint_json(const ArcEndpoint& e) {
    return {{"boundary", e.boundary}, {"edge", e.edge}, {"position", to_json(e.position)}};
}

ArcEndpoint endpoint_from(const Json& j) {
    ArcEndpoint e;
    e.boundary = get<int>(j, "boundary");
    if (j.contains("edge")) e.edge = get<int>(j, "edge");
    if (j.contains("position")) e.position = get<double>(j, "position");
    return e;
}

}  // namespace

template <class T>
std::string write_cut(const WeightedArcSystem<T>& a) {
    Json j = header("cut");
    j["field"] = field_name<T>();
    Json comps = Json::array();
    for (const auto& c : a.components) {
        Json closed = Json::array();
        for (const auto& b : c.closed_boundaries) {
            Json x = {{"id", b.id}, {"side", b.side}};
            if (b.lambda_component) x["lambda_component"] = *b.lambda_component;
            closed.push_back(x);
        }
        Json crowns = Json::array();
        for (const auto& k : c.crowns)
            crowns.push_back(
                {{"id", k.id}, {"spikes", k.spikes}, {"lambda_component", k.lambda_component}, {"edges", k.edges}});
        comps.push_back({{"genus", c.genus}, {"closed_boundaries", closed}, {"crowns", crowns}});
    }
    j["components"] = comps;
    Json arcs = Json::array();
    for (const auto& arc : a.arcs)
        arcs.push_back({{"id", arc.id},
                        {"e1", endpoint_json(arc.e1)},
                        {"e2", endpoint_json(arc.e2)},
                        {"weight", to_json(arc.weight)}});
    j["arcs"] = arcs;
    Json lambda = Json::array();
    for (const auto& l : a.lambda_components) lambda.push_back({{"id", l.id}, {"orientable", l.orientable}});
    j["lambda_components"] = lambda;
    return j.dump(2) + "\n";
}

template <class T>
WeightedArcSystem<T> read_cut(const std::string& text) {
    const Json j = parse(text, "cut");
    WeightedArcSystem<T> a;
    const Json& comps = field(j, "components");
    if (!comps.is_array()) throw FormatError("components must be a list");
    for (const Json& c : comps) {
        CutSurfaceComponent comp;
        comp.genus = get<int>(c, "genus");
        if (c.contains("closed_boundaries")) {
            for (const Json& b : c["closed_boundaries"]) {
                ClosedBoundary cb;
                cb.id = id_of(b);
                if (b.contains("lambda_component")) cb.lambda_component = get<int>(b, "lambda_component");
                if (b.contains("side")) cb.side = get<int>(b, "side");
                comp.closed_boundaries.push_back(cb);
            }
        }
        if (c.contains("crowns")) {
            for (const Json& k : c["crowns"]) {
                Crown cr;
                cr.id = id_of(k);
                cr.spikes = get<int>(k, "spikes");
                cr.lambda_component = get<int>(k, "lambda_component");
                cr.edges = get<std::vector<int>>(k, "edges");
                comp.crowns.push_back(cr);
            }
        }
        a.components.push_back(comp);
    }
    for (const Json& x : field(j, "arcs")) {
        WeightedArc<T> arc;
        arc.id = id_of(x);
        arc.e1 = endpoint_from(field(x, "e1"));
        arc.e2 = endpoint_from(field(x, "e2"));
        arc.weight = scalar_from<T>(field(x, "weight"));
        a.arcs.push_back(arc);
    }
    if (j.contains("lambda_components"))
        for (const Json& l : j["lambda_components"]) a.lambda_components.push_back({id_of(l), get<bool>(l, "orientable")});
    return a;
}

template std::string write_cut(const WeightedArcSystem<double>&);
template std::string write_cut(const WeightedArcSystem<Rational>&);
template WeightedArcSystem<double> read_cut(const std::string&);
template WeightedArcSystem<Rational> read_cut(const std::string&);

}  // namespace shsh
