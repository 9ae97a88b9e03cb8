#include "shsh/hyperbolic.hpp"

#include "shsh/error.hpp"

#include <Eigen/Dense>
#include <boost/math/tools/roots.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace shsh {

// ---- isometries -------------------------------------------------------------

Isometry::Isometry(double a, double b, double c, double d) : m_{a, b, c, d} {
    const double det = a * d - b * c;
    if (!(det > 0.0) || !std::isfinite(det)) throw DomainError("isometry needs a positive determinant");
    if (det != 1.0) {
        const double s = 1.0 / std::sqrt(det);
        for (double& x : m_) x *= s;
    }
}

Isometry Isometry::operator*(const Isometry& o) const {
    return {m_[0] * o.m_[0] + m_[1] * o.m_[2], m_[0] * o.m_[1] + m_[1] * o.m_[3],
            m_[2] * o.m_[0] + m_[3] * o.m_[2], m_[2] * o.m_[1] + m_[3] * o.m_[3]};
}

Isometry Isometry::inverse() const { return {m_[3], -m_[1], -m_[2], m_[0]}; }

Complex Isometry::apply(Complex z) const { return (m_[0] * z + m_[1]) / (m_[2] * z + m_[3]); }

BoundaryPoint Isometry::apply(const BoundaryPoint& p) const {
    return {m_[0] * p[0] + m_[1] * p[1], m_[2] * p[0] + m_[3] * p[1]};
}

namespace {

double operator_norm(double a, double b, double c, double d) {
    const double fro = a * a + b * b + c * c + d * d;
    const double det = a * d - b * c;
    const double disc = std::max(0.0, fro * fro - 4.0 * det * det);
    return std::sqrt(std::max(0.0, 0.5 * (fro + std::sqrt(disc))));
}

}  // namespace

double Isometry::distance_to_identity() const {
    const double plus = operator_norm(m_[0] - 1.0, m_[1], m_[2], m_[3] - 1.0);
    const double minus = operator_norm(m_[0] + 1.0, m_[1], m_[2], m_[3] + 1.0);
    return std::min(plus, minus);
}

// ---- pointed geodesics ------------------------------------------------------

namespace {

// Columns (fwd, back) scaled to determinant one: maps infinity to fwd and
// zero to back.
std::array<double, 4> end_matrix(const BoundaryPoint& back, const BoundaryPoint& fwd) {
    double a = fwd[0], b = back[0], c = fwd[1], d = back[1];
    double det = a * d - b * c;
    if (std::abs(det) < 1e-300) throw DomainError("geodesic endpoints coincide");
    if (det < 0) {
        b = -b;
        d = -d;
        det = -det;
    }
    const double s = 1.0 / std::sqrt(det);
    return {a * s, b * s, c * s, d * s};
}

}  // namespace

Isometry PointedGeodesic::frame() const {
    const auto c = end_matrix(back, fwd);
    const Isometry to_axis = Isometry(c[0], c[1], c[2], c[3]).inverse();
    const double y = std::abs(to_axis.apply(base));
    const double r = std::sqrt(y);
    return Isometry(c[0], c[1], c[2], c[3]) * Isometry(r, 0.0, 0.0, 1.0 / r);
}

PointedGeodesic operator*(const Isometry& m, const PointedGeodesic& g) {
    return {m.apply(g.back), m.apply(g.fwd), m.apply(g.base)};
}

Isometry translate(const PointedGeodesic& g, double t) {
    if (t == 0.0) return Isometry::identity();
    const auto c = end_matrix(g.back, g.fwd);
    const Isometry frame(c[0], c[1], c[2], c[3]);
    const double e = std::exp(t / 2);
    return frame * Isometry(e, 0.0, 0.0, 1.0 / e) * frame.inverse();
}

Complex boundary_to_disk(const BoundaryPoint& p) {
    const Complex i(0.0, 1.0);
    return (p[0] - i * p[1]) / (p[0] + i * p[1]);
}

double hyperbolic_distance(Complex z, Complex w) {
    const double arg = 1.0 + std::norm(z - w) / (2.0 * z.imag() * w.imag());
    return std::acosh(std::max(1.0, arg));
}

double pointed_distance(const PointedGeodesic& g, const PointedGeodesic& h) {
    return std::max({std::abs(boundary_to_disk(g.back) - boundary_to_disk(h.back)),
                     std::abs(boundary_to_disk(g.fwd) - boundary_to_disk(h.fwd)),
                     hyperbolic_distance(g.base, h.base)});
}

// ---- hyperboloid helpers ----------------------------------------------------

namespace {

using Vec3 = Hexagon::Vec3;

double ip(const Vec3& a, const Vec3& b) { return -a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 add(const Vec3& a, const Vec3& b, double s = 1.0) { return {a[0] + s * b[0], a[1] + s * b[1], a[2] + s * b[2]}; }

Vec3 scale(const Vec3& a, double s) { return {a[0] * s, a[1] * s, a[2] * s}; }

// Orthogonal to a and b for the Lorentz form.
Vec3 lcross(const Vec3& a, const Vec3& b) {
    return {-(a[1] * b[2] - a[2] * b[1]), a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

double det3(const Vec3& a, const Vec3& b, const Vec3& c) {
    return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Vec3 unit_spacelike(const Vec3& v) { return scale(v, 1.0 / std::sqrt(ip(v, v))); }

// Future-pointing point of the hyperboloid on the line through v.
Vec3 unit_timelike(const Vec3& v) {
    const double q = -ip(v, v);
    if (!(q > 0.0)) throw DomainError("expected a timelike vector");
    return scale(v, (v[0] < 0 ? -1.0 : 1.0) / std::sqrt(q));
}

Vec3 foot(const Vec3& x, const Vec3& n) { return unit_timelike(add(x, n, -ip(x, n))); }

// Endpoints of the geodesic with unit normal n as future null vectors.
std::array<Vec3, 2> ends_of(const Vec3& n) {
    const Vec3 t = unit_timelike(add({1.0, 0.0, 0.0}, n, n[0]));
    const Vec3 s = unit_spacelike(lcross(n, t));
    return {add(t, s), add(t, s, -1.0)};
}

BoundaryPoint null_to_boundary(const Vec3& x) {
    const double th = std::atan2(x[2], x[1]);
    return {-std::cos(th / 2), std::sin(th / 2)};
}

Complex to_disk(const Vec3& x) { return Complex(x[1], x[2]) / (1.0 + x[0]); }

Complex to_uhp(const Vec3& x) {
    const Complex w = to_disk(x);
    return Complex(0.0, 1.0) * (1.0 + w) / (1.0 - w);
}

}  // namespace

struct HexagonAccess {
    // Geodesic with normal n whose forward end maximizes `score`.
    template <class Score>
    static PointedGeodesic oriented(const Hexagon& h, const Vec3& n, const Vec3& base, Score score) {
        auto e = ends_of(n);
        if (score(e[0]) < score(e[1])) std::swap(e[0], e[1]);
        return h.placement_ * PointedGeodesic{null_to_boundary(e[1]), null_to_boundary(e[0]), to_uhp(base)};
    }

    static PointedGeodesic raw_side(const Vec3& n, const Vec3& base) {
        auto e = ends_of(n);
        if (det3(n, base, e[0]) < 0) std::swap(e[0], e[1]);
        return {null_to_boundary(e[1]), null_to_boundary(e[0]), to_uhp(base)};
    }

    static const Vec3& arc_normal(const Hexagon& h, int i) { return h.arc_normals_[i]; }
    static const Vec3& basepoint(const Hexagon& h, int j) { return h.feet_[j]; }

    static Vec3 corner(const Hexagon& h, int i, int j) { return unit_timelike(lcross(h.arc_normals_[i], h.normals_[j])); }

    // Signed distance along h_j from its basepoint to the corner with arc i.
    static double offset(const Hexagon& h, int i, int j) {
        const Vec3& m = h.arc_normals_[i];
        const Vec3& p = h.feet_[j];
        const double d = std::acosh(std::max(1.0, -ip(p, corner(h, i, j))));
        return ip(p, m) >= 0 ? d : -d;
    }

    static double side_length(const Hexagon& h, int i) {
        const Vec3 a = corner(h, (i + 1) % 3, i), b = corner(h, (i + 2) % 3, i);
        return std::acosh(std::max(1.0, -ip(a, b)));
    }

    // Basepoints of a hexagon without spine point: side h_j is split at
    // distance (L_j + L_k - L_i) / 2 from its corner with arc i.
    static void split_sides(Hexagon& h) {
        std::array<double, 3> len{};
        for (int j = 0; j < 3; ++j) len[j] = side_length(h, j);
        for (int j = 0; j < 3; ++j) {
            const int i = (j + 2) % 3, k = (j + 1) % 3;
            const double t = (len[j] + len[k] - len[i]) / 2;
            const Vec3 a = corner(h, i, j), b = corner(h, k, j);
            h.feet_[j] = unit_timelike(add(scale(a, std::sinh(len[j] - t)), b, std::sinh(t)));
        }
    }
};

int Hexagon::num_spikes() const {
    return static_cast<int>(std::count_if(arcs_.begin(), arcs_.end(), [](const ArcSpec& a) { return !a; }));
}

double Hexagon::radius() const {
    if (!has_spine_) throw DomainError("hexagon has no spine point");
    return radius_;
}

Complex Hexagon::spine() const {
    if (!has_spine_) throw DomainError("hexagon has no spine point");
    return placement_.apply(to_uhp(spine_));
}

PointedGeodesic Hexagon::side(int i) const { return placement_ * HexagonAccess::raw_side(normals_[i], feet_[i]); }

std::optional<PointedGeodesic> Hexagon::arc(int i) const {
    if (spike(i)) return std::nullopt;
    const Vec3& e = normals_[(i + 1) % 3];
    return HexagonAccess::oriented(*this, arc_normals_[i], HexagonAccess::corner(*this, i, (i + 2) % 3),
                                   [&](const Vec3& x) { return -ip(x, e); });
}

std::optional<double> Hexagon::arc_offset(int i) const {
    if (spike(i)) return std::nullopt;
    return HexagonAccess::offset(*this, i, (i + 1) % 3);
}

std::optional<double> Hexagon::arc_offset_far(int i) const {
    if (spike(i)) return std::nullopt;
    return HexagonAccess::offset(*this, i, (i + 2) % 3);
}

std::optional<double> Hexagon::side_length(int i) const {
    if (spike((i + 1) % 3) || spike((i + 2) % 3)) return std::nullopt;
    return HexagonAccess::side_length(*this, i);
}

std::array<PointedGeodesic, 2> Hexagon::spike_sides(int i) const {
    if (!spike(i)) throw DomainError("arc side " + std::to_string(i) + " is not a spike");
    const int s = (i + 2) % 3, e = (i + 1) % 3;
    const Vec3 vertex = add(normals_[s], normals_[e]);
    auto toward = [&](const Vec3& x) { return -std::abs(ip(x, vertex)); };
    return {HexagonAccess::oriented(*this, normals_[s], feet_[s], toward),
            HexagonAccess::oriented(*this, normals_[e], feet_[e], toward)};
}

Hexagon hexagon_from_arc_lengths(const std::array<ArcSpec, 3>& arcs) {
    for (const ArcSpec& a : arcs)
        if (a && !(*a > 0.0 && std::isfinite(*a))) throw DomainError("arc lengths must be positive and finite");

    Eigen::Matrix3d gram = Eigen::Matrix3d::Identity();
    for (int k = 0; k < 3; ++k) {
        const int i = (k + 1) % 3, j = (k + 2) % 3;
        gram(i, j) = gram(j, i) = arcs[k] ? -std::cosh(*arcs[k]) : -1.0;
    }
    const Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> eig(gram);
    const Eigen::Vector3d w = eig.eigenvalues();
    if (!(w(0) < 0.0 && w(1) > 0.0)) throw DomainError("side data does not describe a hyperbolic hexagon");
    Eigen::Matrix3d nm = eig.eigenvectors() * w.cwiseAbs().cwiseSqrt().asDiagonal();

    // The spine point x solves <n_i, x> = 1 for every side.
    const Eigen::Matrix3d metric = Eigen::Vector3d(-1.0, 1.0, 1.0).asDiagonal();
    auto solve = [&] { return Eigen::Vector3d((nm * metric).partialPivLu().solve(Eigen::Vector3d::Ones())); };
    Eigen::Vector3d x = solve();
    const double q = x(0) * x(0) - x(1) * x(1) - x(2) * x(2);

    Hexagon h;
    h.arcs_ = arcs;
    h.has_spine_ = q > 0.0;
    auto load = [&] {
        for (int i = 0; i < 3; ++i) h.normals_[i] = {nm(i, 0), nm(i, 1), nm(i, 2)};
        for (int i = 0; i < 3; ++i) {
            Vec3 m = lcross(h.normals_[(i + 1) % 3], h.normals_[(i + 2) % 3]);
            if (arcs[i]) m = unit_spacelike(m);
            h.arc_normals_[i] = m;
        }
    };
    if (h.has_spine_) {
        if (x(0) < 0) {
            nm.col(0) *= -1.0;
            x = solve();
        }
    } else {
        if (h.num_spikes() > 0) throw DomainError("the lambda-sides of a spiked polygon have no common equidistant point");
        load();
        if (ip(HexagonAccess::corner(h, 0, 1), h.normals_[2]) < 0) nm.col(0) *= -1.0;
    }
    if (nm.determinant() < 0) {
        nm.col(2) *= -1.0;
        x(2) = -x(2);
    }
    load();

    if (h.has_spine_) {
        h.spine_ = {x(0) / std::sqrt(q), x(1) / std::sqrt(q), x(2) / std::sqrt(q)};
        h.radius_ = std::asinh(ip(h.spine_, h.normals_[0]));
        for (int j = 0; j < 3; ++j) h.feet_[j] = foot(h.spine_, h.normals_[j]);
        for (int i = 0; i < 3; ++i)
            if (arcs[i] && ip(h.feet_[i], h.arc_normals_[i]) < 0) h.arc_normals_[i] = scale(h.arc_normals_[i], -1.0);
    } else {
        for (int i = 0; i < 3; ++i) {
            const Vec3 c = HexagonAccess::corner(h, (i + 1) % 3, i);
            if (ip(c, h.arc_normals_[i]) < 0) h.arc_normals_[i] = scale(h.arc_normals_[i], -1.0);
        }
        HexagonAccess::split_sides(h);
    }

    h.placement_ = HexagonAccess::raw_side(h.normals_[1], h.feet_[1]).frame().inverse();
    return h;
}

std::array<double, 3> arcs_from_side_lengths(const std::array<double, 3>& l) {
    for (double x : l)
        if (!(x > 0.0 && std::isfinite(x))) throw DomainError("side lengths must be positive and finite");
    std::array<double, 3> out{};
    for (int i = 0; i < 3; ++i) {
        const double a = l[(i + 1) % 3], b = l[(i + 2) % 3];
        out[i] = std::acosh((std::cosh(a) * std::cosh(b) + std::cosh(l[i])) / (std::sinh(a) * std::sinh(b)));
    }
    return out;
}

// ---- shaping ----------------------------------------------------------------

double spike_parameter(double h, double h_other, int eps) {
    if (!(h > 0.0) || !(h_other > 0.0)) throw DomainError("sharpness values must be positive");
    if (eps != 1 && eps != -1) throw DomainError("orientation sign must be +1 or -1");
    return eps * std::log(std::tanh(h) / std::tanh(h_other));
}

Isometry shape_spike(const PointedGeodesic& left, const PointedGeodesic& right, double f) {
    if (std::abs(boundary_to_disk(left.fwd) - boundary_to_disk(right.fwd)) > 1e-8)
        throw DomainError("spike sides are not asymptotic");
    return translate(left, f) * translate(right, -f);
}

namespace {

void require_same_type(const Hexagon& h, const Hexagon& g) {
    for (int i = 0; i < 3; ++i)
        if (h.spike(i) != g.spike(i)) throw StructuralError("hexagons differ in combinatorial type");
}

}  // namespace

Isometry shape_hexagon(const Hexagon& h, const Hexagon& g, int i, bool reversed) {
    require_same_type(h, g);
    if (h.spike(i)) throw DomainError("arc side " + std::to_string(i) + " is a spike");
    const int s = (i + 2) % 3, e = (i + 1) % 3;
    const Vec3& m = HexagonAccess::arc_normal(h, i);
    auto away = [&](const Vec3& x) { return ip(x, m); };
    const PointedGeodesic hs = HexagonAccess::oriented(h, h.normals()[s], HexagonAccess::basepoint(h, s), away);
    const PointedGeodesic he = HexagonAccess::oriented(h, h.normals()[e], HexagonAccess::basepoint(h, e), away);
    const PointedGeodesic alpha = *h.arc(i);
    const double f = *g.arc_offset(i) - *h.arc_offset(i);
    const double dl = *g.arcs()[i] - *h.arcs()[i];
    if (reversed) return translate(he, -f) * translate(alpha.reversed(), dl) * translate(hs, f);
    return translate(hs, -f) * translate(alpha, dl) * translate(he, f);
}

Isometry shape_hexagon_spike(const Hexagon& h, const Hexagon& g, int i, bool reversed) {
    require_same_type(h, g);
    const auto sides = h.spike_sides(i);
    const double f = spike_parameter(g.radius(), h.radius(), 1);
    if (reversed) return shape_spike(sides[1], sides[0], f);
    return shape_spike(sides[0], sides[1], f);
}

Isometry shaping(const Hexagon& h, const Hexagon& g, int i) {
    return h.spike(i) ? shape_hexagon_spike(h, g, i) : shape_hexagon(h, g, i);
}

double sliding_residual(const Hexagon& h, const Hexagon& g, int i) {
    const int s = (i + 2) % 3, e = (i + 1) % 3;
    const Isometry superimpose = h.side(e).frame() * g.side(e).frame().inverse();
    const PointedGeodesic moved = shaping(h, g, i) * (superimpose * g.side(s));
    return pointed_distance(moved, h.side(s));
}

double cocycle_check(const Hexagon& h, const Hexagon& g) {
    require_same_type(h, g);
    return (shaping(h, g, 2) * shaping(h, g, 1) * shaping(h, g, 0)).distance_to_identity();
}

// ---- pants ------------------------------------------------------------------

double trirectangle_residual(const Hexagon& h, int i) {
    if (h.spike(i)) throw DomainError("arc side " + std::to_string(i) + " is a spike");
    return std::abs(std::tanh(*h.arcs()[i] / 2) - std::tanh(h.radius()) / std::cosh(*h.arc_offset(i)));
}

std::optional<double> collar_leaf_distance(double arc, double leaf) {
    if (!(arc > 0.0) || !(leaf > 0.0)) throw DomainError("lengths must be positive");
    if (arc >= leaf) return std::nullopt;
    return std::acosh(std::tanh(leaf / 2) / std::tanh(arc / 2));
}

SeamBounds seam_bounds(double length, double weight) {
    if (weight < 0.0) throw DomainError("seam weights are nonnegative");
    SeamBounds b;
    const double inscribed = std::log(std::sqrt(3.0));
    b.lower = std::min(std::log(3.0), 2.0 * std::atanh(std::tanh(inscribed) / std::cosh(weight / 2)));
    b.upper = weight > 0.0 ? 2.0 * std::numbers::pi / weight : std::numeric_limits<double>::infinity();
    b.ok = b.lower <= length * (1.0 + 1e-12) && length <= b.upper * (1.0 + 1e-12);
    return b;
}

namespace {

// cosh of the arc joining the two equal sides of a hexagon with lambda-sides
// (s, x, x).
double self_seam_cosh(double s, double x) {
    const double sh = std::sinh(x);
    return (std::cosh(x) * std::cosh(x) + std::cosh(s)) / (sh * sh);
}

}  // namespace

PantsRealization pants_realize(double a, double b, double c) {
    const std::array<double, 3> len{a, b, c};
    for (double x : len)
        if (!(x > 0.0 && std::isfinite(x))) throw DomainError("cuff lengths must be positive");
    int big = 0;
    for (int i = 1; i < 3; ++i)
        if (len[i] > len[big]) big = i;
    const int p = (big + 1) % 3, q = (big + 2) % 3;

    PantsRealization out;
    if (len[big] <= len[p] + len[q]) {
        const std::array<double, 3> halves{a / 2, b / 2, c / 2};
        const auto arcs = arcs_from_side_lengths(halves);
        const Hexagon hex = hexagon_from_arc_lengths({arcs[0], arcs[1], arcs[2]});
        for (int i = 0; i < 3; ++i) {
            const int j = (i + 1) % 3, k = (i + 2) % 3;
            out.ends.push_back({j, k});
            out.seam_lengths.push_back(arcs[i]);
            out.weights.push_back(std::max(0.0, (len[j] + len[k] - len[i]) / 2));
            out.geometric_weights.push_back(2.0 * *hex.arc_offset(i));
        }
        out.hexagons = {hex, hex};
    } else {
        out.two_seam = true;
        out.long_cuff = big;
        const double half = len[big] / 2;
        auto gap = [&](double x) { return self_seam_cosh(len[p], x) - self_seam_cosh(len[q], half - x); };
        double lo = half * 1e-9, hi = half * (1.0 - 1e-9);
        if (!(gap(lo) > 0.0) || !(gap(hi) < 0.0)) throw DomainError("cannot split the long cuff");
        std::uintmax_t iters = 200;
        const auto root = boost::math::tools::toms748_solve(gap, lo, hi, boost::math::tools::eps_tolerance<double>(),
                                                            iters);
        const double x = (root.first + root.second) / 2;
        const auto arcs_p = arcs_from_side_lengths({len[p], x, x});
        const auto arcs_q = arcs_from_side_lengths({len[q], half - x, half - x});
        const Hexagon hp = hexagon_from_arc_lengths({arcs_p[0], arcs_p[1], arcs_p[2]});
        const Hexagon hq = hexagon_from_arc_lengths({arcs_q[0], arcs_q[1], arcs_q[2]});
        out.ends = {{big, p}, {big, q}, {big, big}};
        out.seam_lengths = {arcs_p[1], arcs_q[1], arcs_p[0]};
        out.weights = {len[p], len[q], (len[big] - len[p] - len[q]) / 2};
        out.geometric_weights = {*hp.arc_offset(1) + *hp.arc_offset(2), *hq.arc_offset(1) + *hq.arc_offset(2),
                                 *hp.arc_offset(0) + *hq.arc_offset(0)};
        out.hexagons = {hp, hq};
    }
    for (std::size_t i = 0; i < out.seam_lengths.size(); ++i)
        out.bounds.push_back(seam_bounds(out.seam_lengths[i], out.weights[i]));
    return out;
}

}  // namespace shsh
