#pragma once

#include "shsh/scalar.hpp"

#include <array>
#include <optional>
#include <vector>

namespace shsh {

// Homogeneous coordinates (x, y) of the boundary point x / y of the upper
// half-plane; (1, 0) is infinity.
using BoundaryPoint = std::array<double, 2>;

// Element of PSL(2, R) acting on the upper half-plane by Mobius maps.
class Isometry {
public:
    Isometry() = default;
    Isometry(double a, double b, double c, double d);

    static Isometry identity() { return {}; }

    double a() const { return m_[0]; }
    double b() const { return m_[1]; }
    double c() const { return m_[2]; }
    double d() const { return m_[3]; }
    double det() const { return m_[0] * m_[3] - m_[1] * m_[2]; }
    double trace() const { return m_[0] + m_[3]; }

    Isometry operator*(const Isometry& o) const;
    Isometry inverse() const;
    Complex apply(Complex z) const;
    BoundaryPoint apply(const BoundaryPoint& p) const;

    // Operator norm of M - I, minimized over the sign of M.
    double distance_to_identity() const;

private:
    std::array<double, 4> m_{1.0, 0.0, 0.0, 1.0};
};

// Oriented geodesic from `back` to `fwd` with a basepoint on it.
struct PointedGeodesic {
    BoundaryPoint back{};
    BoundaryPoint fwd{};
    Complex base{0.0, 1.0};

    PointedGeodesic reversed() const { return {fwd, back, base}; }
    // Isometry taking the upward imaginary axis with basepoint i to this one.
    Isometry frame() const;
};

PointedGeodesic operator*(const Isometry& m, const PointedGeodesic& g);

// Translation by signed distance t along g.
Isometry translate(const PointedGeodesic& g, double t);

// Boundary point on the unit circle after the Cayley map.
Complex boundary_to_disk(const BoundaryPoint& p);
double hyperbolic_distance(Complex z, Complex w);

// Endpoint and basepoint discrepancy of two pointed geodesics.
double pointed_distance(const PointedGeodesic& g, const PointedGeodesic& h);

// Marker for an ideal arc side.
inline constexpr std::optional<double> kSpike = std::nullopt;
using ArcSpec = std::optional<double>;

// Right-angled hexagon with lambda-sides h_0, h_1, h_2 in clockwise order
// and arc side i opposite h_i (joining h_{i+1} and h_{i+2}). Spiked arc sides
// make the neighbouring lambda-sides asymptotic. Each lambda-side carries a
// basepoint: the foot of the spine point, or for a hexagon without one the
// point splitting the side as the spine feet would. Placed with h_1 on the
// imaginary axis and its basepoint at i.
class Hexagon {
public:
    using Vec3 = std::array<double, 3>;

    const std::array<ArcSpec, 3>& arcs() const { return arcs_; }
    bool spike(int i) const { return !arcs_[i].has_value(); }
    int num_spikes() const;

    // A point equidistant from the three lambda-sides. Hexagons with one
    // long arc and two short ones have none.
    bool has_spine() const { return has_spine_; }
    // Distance from the spine point to every lambda-side.
    double radius() const;
    Complex spine() const;
    // Lambda-side h_i with its basepoint.
    PointedGeodesic side(int i) const;
    // Arc side i oriented from h_{i+2} to h_{i+1}, based at its first corner;
    // std::nullopt for spikes.
    std::optional<PointedGeodesic> arc(int i) const;
    // Signed distance from the basepoint on h_{i+1} to the corner with arc i,
    // positive when the basepoint lies on the hexagon's side of the arc.
    std::optional<double> arc_offset(int i) const;
    // The same offset measured on h_{i+2}.
    std::optional<double> arc_offset_far(int i) const;
    // Length of the lambda-side h_i between its corners; nullopt when infinite.
    std::optional<double> side_length(int i) const;
    // Lambda-side h_{i+2} oriented towards the ideal vertex of spike i and
    // h_{i+1} likewise.
    std::array<PointedGeodesic, 2> spike_sides(int i) const;

    // Unit spacelike normals of the lambda-sides in the hyperboloid model.
    const std::array<Vec3, 3>& normals() const { return normals_; }

    friend Hexagon hexagon_from_arc_lengths(const std::array<ArcSpec, 3>& arcs);

private:
    std::array<ArcSpec, 3> arcs_;
    std::array<Vec3, 3> normals_{};
    std::array<Vec3, 3> arc_normals_{};
    std::array<Vec3, 3> feet_{};
    Vec3 spine_{};
    bool has_spine_ = false;
    double radius_ = 0.0;
    Isometry placement_;

    friend struct HexagonAccess;
};

// Throws DomainError for nonpositive finite lengths, or for a spiked polygon
// whose lambda-sides have no common equidistant point.
Hexagon hexagon_from_arc_lengths(const std::array<ArcSpec, 3>& arcs);

// Arc lengths of the hexagon whose alternate lambda-sides have lengths l.
std::array<double, 3> arcs_from_side_lengths(const std::array<double, 3>& l);

// eps * log(tanh h / tanh h_other).
double spike_parameter(double h, double h_other, int eps);

// T_left^f o T_right^{-f}; the two geodesics must share their forward end.
Isometry shape_spike(const PointedGeodesic& left, const PointedGeodesic& right, double f);

// Shaping transformation carrying arc i of G onto arc i of H, for arc i
// oriented from h_{i+2} to h_{i+1} (or backwards when `reversed`).
Isometry shape_hexagon(const Hexagon& h, const Hexagon& g, int i, bool reversed = false);

// Spike shaping for spike i with the sharpness of both hexagons.
Isometry shape_hexagon_spike(const Hexagon& h, const Hexagon& g, int i, bool reversed = false);

// Shaping transformation of side i: hexagon or spike as appropriate.
Isometry shaping(const Hexagon& h, const Hexagon& g, int i);

// With G superimposed on H along (h_{i+1}, p_{i+1}), distance between the
// image of G's pointed h_{i+2} under the shaping map and H's.
double sliding_residual(const Hexagon& h, const Hexagon& g, int i);

// Distance to the identity of A_2 A_1 A_0.
double cocycle_check(const Hexagon& h, const Hexagon& g);

// |tanh(l/2) - tanh(r)/cosh(d)| for finite arc i of length l, spine radius r
// and arc offset d: the right-angled quadrilateral cut out by the spine leaf.
double trirectangle_residual(const Hexagon& h, int i);

// Distance from an arc of length `arc` to the leaf of length `leaf` in its
// collar; nullopt when the arc is not shorter than the leaf.
std::optional<double> collar_leaf_distance(double arc, double leaf);

struct SeamBounds {
    double lower = 0.0;
    double upper = 0.0;  // infinity for zero weight
    bool ok = false;
};

SeamBounds seam_bounds(double length, double weight);

struct PantsRealization {
    bool two_seam = false;
    int long_cuff = -1;
    // Seam i joins the cuffs listed in `ends[i]`; for two seams the last
    // seam runs from the long cuff to itself.
    std::vector<std::array<int, 2>> ends;
    std::vector<double> seam_lengths;
    std::vector<double> weights;
    // Weights recovered from spine offsets of the placed hexagons.
    std::vector<double> geometric_weights;
    std::vector<SeamBounds> bounds;
    std::vector<Hexagon> hexagons;
};

PantsRealization pants_realize(double a, double b, double c);

}  // namespace shsh
