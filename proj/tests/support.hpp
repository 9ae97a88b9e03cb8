#pragma once

#include "shsh/flatsurface.hpp"
#include "shsh/hyperbolic.hpp"
#include "shsh/shearshape.hpp"
#include "shsh/traintrack.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace shsh::fixtures {

// Once-punctured torus: two switches sharing their large branch 0.
inline TrainTrack torus_track() {
    return TrainTrack(1, {{0, 1, 2}, {3, 4, 5}}, {{0, 3}, {1, 5}, {2, 4}}, "torus");
}

// A single closed curve.
inline TrainTrack annulus_track() { return TrainTrack(0, {}, {{-1, -1}}, "annulus"); }

template <class R>
const FlatSurfaceT<R>& corpus_surface(const std::string& name) {
    static const auto corpus = [] {
        if constexpr (std::is_same_v<R, Rational>)
            return exact_corpus();
        else
            return flat_corpus();
    }();
    for (const auto& e : corpus)
        if (e.name == name) return e.surface;
    throw std::out_of_range("no corpus surface " + name);
}

inline double max_period_gap(const FlatSurface& a, const FlatSurface& b) {
    double gap = 0.0;
    for (int e = 0; e < a.num_edges(); ++e) {
        gap = std::max(gap, std::abs(a.periods()[e].re - b.periods()[e].re));
        gap = std::max(gap, std::abs(a.periods()[e].im - b.periods()[e].im));
    }
    return gap;
}

template <class T>
double max_gap(const WeightSystem<T>& a, const WeightSystem<T>& b) {
    double gap = 0.0;
    for (size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(to_double(a[i]) - to_double(b[i])));
    return gap;
}

// Random arc spec with the given spike pattern; lengths uniform in [lo, hi].
inline std::array<ArcSpec, 3> random_arcs(std::mt19937_64& rng, std::array<bool, 3> spikes, double lo = 0.2,
                                          double hi = 3.0) {
    std::uniform_real_distribution<double> len(lo, hi);
    std::array<ArcSpec, 3> a;
    for (int i = 0; i < 3; ++i) a[i] = spikes[i] ? kSpike : ArcSpec(len(rng));
    return a;
}

// Draws until the polygon exists (spiked polygons need a spine point).
inline Hexagon random_hexagon(std::mt19937_64& rng, std::array<bool, 3> spikes) {
    for (;;) {
        try {
            return hexagon_from_arc_lengths(random_arcs(rng, spikes));
        } catch (const DomainError&) {
        }
    }
}

inline std::array<bool, 3> random_spikes(std::mt19937_64& rng, int count) {
    std::array<bool, 3> s{false, false, false};
    std::vector<int> idx{0, 1, 2};
    std::shuffle(idx.begin(), idx.end(), rng);
    for (int k = 0; k < count; ++k) s[idx[k]] = true;
    return s;
}

// Weight systems on one fixed arc-free dual track: real and imaginary parts
// of small perturbations of a surface with no horizontal saddles.
struct DualFamily {
    FlatSurface base;
    TrainTrack track;

    explicit DualFamily(const FlatSurface& q) : base(q), track(dual_track(q)) {}

    std::optional<IlData<double>> sample(unsigned seed, double scale = 0.01) const {
        const FlatSurface p = perturb(base, seed, scale);
        if (!dual_track(p).same_structure(track)) return std::nullopt;
        return extract_Il(p);
    }
};

// Random DT coordinates whose cuff triples avoid the boundary cell.
struct DtSample {
    std::vector<std::int64_t> m, t;
};

inline bool admissible(const PantsDecomposition& dec, const std::vector<std::int64_t>& m) {
    for (const auto& p : dec.pants) {
        const std::int64_t a = m[p[0].curve], b = m[p[1].curve], c = m[p[2].curve];
        if ((a + b + c) % 2 != 0) return false;
        const std::int64_t big = std::max({a, b, c});
        if (2 * big == a + b + c) return false;
    }
    return true;
}

inline std::vector<DtSample> dt_family(const PantsDecomposition& dec, unsigned seed, int count) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> len(1, 9), tw(-6, 6);
    std::vector<DtSample> out;
    while (static_cast<int>(out.size()) < count) {
        DtSample s;
        for (int c = 0; c < dec.curves; ++c) s.m.push_back(len(rng));
        if (!admissible(dec, s.m)) continue;
        for (int c = 0; c < dec.curves; ++c) s.t.push_back(tw(rng));
        out.push_back(s);
    }
    return out;
}

}  // namespace shsh::fixtures
