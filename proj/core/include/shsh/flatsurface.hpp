#pragma once

#include "shsh/traintrack.hpp"

#include <array>
#include <string>
#include <vector>

namespace shsh {

inline constexpr double kHorizontalTolerance = 1e-9;

template <class R>
struct PeriodT {
    R re{0};
    R im{0};

    PeriodT operator+(const PeriodT& o) const { return {re + o.re, im + o.im}; }
    PeriodT operator-(const PeriodT& o) const { return {re - o.re, im - o.im}; }
    PeriodT operator-() const { return {-re, -im}; }
    PeriodT operator*(const R& s) const { return {re * s, im * s}; }
    bool operator==(const PeriodT&) const = default;
};

template <class R>
R cross(const PeriodT<R>& a, const PeriodT<R>& b) {
    return a.re * b.im - a.im * b.re;
}

// Representative of {z, -z} with argument in [0, pi).
Complex bracket_plus(Complex z);

template <class R>
PeriodT<R> bracket_plus(const PeriodT<R>& z);

// Triangles list slot ids counterclockwise; slots are numbered 0..3F-1 and
// each slot sits in exactly one triangle and one pair. Edge e is pairs[e] and
// carries periods[e] in [z]+ form.
template <class R>
class FlatSurfaceT {
public:
    FlatSurfaceT() = default;
    FlatSurfaceT(std::vector<std::array<int, 3>> triangles, std::vector<std::array<int, 2>> pairs,
                 std::vector<PeriodT<R>> periods, double tol = kHorizontalTolerance);

    const std::vector<std::array<int, 3>>& triangles() const { return triangles_; }
    const std::vector<std::array<int, 2>>& pairs() const { return pairs_; }
    const std::vector<PeriodT<R>>& periods() const { return periods_; }
    int num_triangles() const { return static_cast<int>(triangles_.size()); }
    int num_edges() const { return static_cast<int>(pairs_.size()); }

    int edge_of(int slot) const { return slot_edge_[slot]; }
    int triangle_of(int slot) const { return slot_triangle_[slot]; }
    int position_of(int slot) const { return slot_position_[slot]; }
    // Sign making signs(t)[k] * period the k-th side vector of triangle t.
    const std::array<int, 3>& signs(int t) const { return signs_[t]; }
    PeriodT<R> side(int slot) const;
    // Glued sides related by z -> -z rather than a translation.
    bool half_turn(int edge) const;

    int num_vertices() const { return num_vertices_; }
    int vertex_of_corner(int slot) const { return corner_vertex_[slot]; }
    const std::vector<double>& cone_angles() const { return cone_angles_; }
    int genus() const { return genus_; }

private:
    std::vector<std::array<int, 3>> triangles_;
    std::vector<std::array<int, 2>> pairs_;
    std::vector<PeriodT<R>> periods_;
    std::vector<int> slot_edge_, slot_triangle_, slot_position_;
    std::vector<std::array<int, 3>> signs_;
    std::vector<int> corner_vertex_;
    std::vector<double> cone_angles_;
    int num_vertices_ = 0;
    int genus_ = 0;
};

using FlatSurface = FlatSurfaceT<double>;
using ExactFlatSurface = FlatSurfaceT<Rational>;

template <class R>
R area(const FlatSurfaceT<R>& q);

template <class R>
std::vector<int> horizontal_saddles(const FlatSurfaceT<R>& q, double tol = kHorizontalTolerance);

// Orders of the cone points, largest first.
template <class R>
std::vector<int> stratum(const FlatSurfaceT<R>& q);

template <class R>
bool is_translation_surface(const FlatSurfaceT<R>& q);

// One switch per triangle (half-branch = slot) and one branch per edge.
template <class R>
TrainTrack dual_track(const FlatSurfaceT<R>& q, double tol = kHorizontalTolerance);

template <class R>
struct IlData {
    TrainTrack track;
    WeightSystem<R> sigma;
    WeightSystem<R> lambda;
};

template <class R>
IlData<R> extract_Il(const FlatSurfaceT<R>& q, double tol = kHorizontalTolerance);

template <class R>
FlatSurfaceT<R> rebuild(const TrainTrack& track, const WeightSystem<R>& sigma, const WeightSystem<R>& lambda,
                        double tol = kHorizontalTolerance);

// Re -> e^t Re, or (e^{t/2} Re, e^{-t/2} Im) when symmetric.
FlatSurface geodesic_flow(const FlatSurface& q, double t, bool symmetric = false);

template <class R>
FlatSurfaceT<R> horocycle_flow(const FlatSurfaceT<R>& q, const R& s);

// mu is a transverse measure on dual_track(q).
template <class R>
FlatSurfaceT<R> tremor(const FlatSurfaceT<R>& q, const WeightSystem<R>& mu);

// Applies (a, b; c, d) with positive determinant to every period.
template <class R>
FlatSurfaceT<R> apply_sl2(const FlatSurfaceT<R>& q, const std::array<R, 4>& m);

// ---- explicit constructions ------------------------------------------------

// Sides of unit square i are 4i + {0 bottom, 1 right, 2 top, 3 left}. Pairs
// join horizontal sides with horizontal ones and vertical with vertical;
// bottom-top and left-right pairs are translations, the rest half-turns.
struct SquareGluing {
    int squares = 0;
    std::vector<std::array<int, 2>> pairs;
};

// right[i] / up[i] is the square to the right of / above square i.
SquareGluing origami(const std::vector<int>& right, const std::vector<int>& up);

// Each square is cut along its diagonal from bottom-left to top-right.
template <class R>
FlatSurfaceT<R> square_complex(const SquareGluing& g);

// Adds a small random solution of the triangle closure equations to the
// periods.
FlatSurface perturb(const FlatSurface& q, unsigned seed, double scale);

template <class R>
FlatSurfaceT<R> convert(const FlatSurfaceT<Rational>& q);

template <class R>
struct NamedSurface {
    std::string name;
    FlatSurfaceT<R> surface;
};

std::vector<NamedSurface<double>> flat_corpus();
std::vector<NamedSurface<Rational>> exact_corpus();

// First connected origami on n squares whose stratum is `kappa`.
SquareGluing find_origami(int squares, const std::vector<int>& kappa);

// Seeded search for square complexes with at least one half-turn gluing.
std::vector<SquareGluing> find_half_translation(int squares, int genus, int count, unsigned seed);

}  // namespace shsh
