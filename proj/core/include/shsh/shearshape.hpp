#pragma once

#include "shsh/traintrack.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace shsh {

// Switch conditions hold and every arc branch is strictly positive.
template <class T>
void require_cocycle(const TrainTrack& track, const WeightSystem<T>& sigma, double tol = kDefaultSwitchTolerance);

// Switch conditions hold, weights are nonnegative and vanish on arc branches.
template <class T>
void require_measure(const TrainTrack& track, const WeightSystem<T>& mu, double tol = kDefaultSwitchTolerance);

template <class T>
T pair(const TrainTrack& track, const WeightSystem<T>& sigma, const WeightSystem<T>& mu,
       double tol = kDefaultSwitchTolerance);

// Positive pairing against every supplied ergodic generator.
template <class T>
bool is_positive(const TrainTrack& track, const WeightSystem<T>& sigma, const std::vector<WeightSystem<T>>& measures,
                 double tol = kDefaultSwitchTolerance);

template <class T>
WeightSystem<T> add_transverse(const TrainTrack& track, const WeightSystem<T>& sigma, const WeightSystem<T>& rho,
                               double tol = kDefaultSwitchTolerance);

// The matrix (a, b; 0, c).
template <class T>
struct UpperTriangular {
    T a{1}, b{0}, c{1};

    UpperTriangular operator*(const UpperTriangular& o) const { return {a * o.a, a * o.b + b * o.c, c * o.c}; }
    bool operator==(const UpperTriangular&) const = default;
};

template <class T>
struct CocyclePair {
    WeightSystem<T> sigma;
    WeightSystem<T> lambda;
};

// (sigma, lambda) -> (a sigma + b lambda, c lambda).
template <class T>
CocyclePair<T> b_action(const TrainTrack& track, const WeightSystem<T>& sigma, const WeightSystem<T>& lambda,
                        const UpperTriangular<T>& m);

// ---- pants decompositions --------------------------------------------------

struct Cuff {
    int curve = -1;
    bool left = true;
};

struct PantsDecomposition {
    int genus = 2;
    int curves = 3;
    std::vector<std::array<Cuff, 3>> pants;
};

// Both pants bounded by all three curves.
PantsDecomposition theta_pants();
// Two one-holed tori joined along a separating curve.
PantsDecomposition dumbbell_pants();

// Seams join every pair of cuffs, or (when the longest cuff exceeds the sum
// of the other two) the long cuff to each short one and to itself.
struct PantsShape {
    bool two_seam = false;
    int long_cuff = -1;

    bool operator==(const PantsShape&) const = default;
};

template <class T>
PantsShape classify_pants(const T& a, const T& b, const T& c);

struct SeamArc {
    int pants = -1;
    int from = -1;
    int to = -1;
};

struct PantsChart {
    PantsDecomposition decomposition;
    std::vector<PantsShape> shapes;
    Smoothing smoothing;
    std::vector<SeamArc> seams;
    // Branches of the smoothed track along each curve, in walking order; the
    // last one closes the loop and records the twist.
    std::vector<std::vector<int>> curve_pieces;

    const TrainTrack& track() const { return smoothing.track; }
    int reference_piece(int curve) const { return curve_pieces[curve].back(); }
};

PantsChart pants_chart(const PantsDecomposition& dec, const std::vector<PantsShape>& shapes);

template <class T>
std::vector<PantsShape> pants_shapes(const PantsDecomposition& dec, const std::vector<T>& lengths);

// Seam weights in the order the chart lists the pants' seams.
template <class T>
std::vector<T> seam_weights(const T& a, const T& b, const T& c, const PantsShape& shape);

template <class T>
WeightSystem<T> pants_encode(const PantsChart& chart, const std::vector<T>& lengths, const std::vector<T>& twists);

// Weight `multiplicity[i]` along curve i, zero on seams.
template <class T>
WeightSystem<T> curve_measure(const PantsChart& chart, const std::vector<T>& multiplicity);

template <class T>
std::vector<WeightSystem<T>> curve_generators(const PantsChart& chart);

struct DehnThurston {
    std::vector<std::int64_t> intersections;
    std::vector<std::int64_t> twists;

    bool operator==(const DehnThurston&) const = default;
};

DehnThurston dt_decode(const PantsChart& chart, const WeightSystem<Rational>& sigma);

// ---- lattice points --------------------------------------------------------

// Integer cocycles with arc weights >= 1, pairing with lambda at most `bound`
// and every weight of magnitude at most bound / m, where m is the smallest
// positive pairing coefficient of a single branch.
std::vector<WeightSystem<std::int64_t>> integer_points(const TrainTrack& track,
                                                       const WeightSystem<std::int64_t>& lambda,
                                                       std::int64_t bound);

std::int64_t count_integer_points(const TrainTrack& track, const WeightSystem<std::int64_t>& lambda,
                                  std::int64_t bound);

// Same region on a pants chart, counted seam by seam with the twists of each
// curve handled in closed form.
std::int64_t count_integer_points(const PantsChart& chart, const WeightSystem<std::int64_t>& lambda,
                                  std::int64_t bound);

// Pairing coefficient of each branch against lambda.
std::vector<Rational> pairing_coefficients(const TrainTrack& track, const WeightSystem<std::int64_t>& lambda);

}  // namespace shsh
