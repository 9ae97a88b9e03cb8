#include "shsh/flatsurface.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

namespace shsh {

namespace {

constexpr double kClosureTolerance = 1e-9;
constexpr double kAngleTolerance = 1e-9;

template <class R>
bool exact_zero(const PeriodT<R>& z, double scale) {
    if constexpr (ScalarTraits<R>::exact) {
        (void)scale;
        return z.re == R(0) && z.im == R(0);
    } else {
        return std::hypot(z.re, z.im) <= kClosureTolerance * scale;
    }
}

template <class R>
double magnitude(const PeriodT<R>& z) {
    return std::hypot(to_double(z.re), to_double(z.im));
}

template <class R>
bool in_normal_form(const PeriodT<R>& z) {
    return z.im > R(0) || (z.im == R(0) && z.re > R(0));
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Complex bracket_plus(Complex z) {
    if (z == Complex(0.0, 0.0)) throw DomainError("[z]+ is undefined at z = 0");
    if (z.imag() > 0.0 || (z.imag() == 0.0 && z.real() > 0.0)) return z;
    return -z;
}

template <class R>
PeriodT<R> bracket_plus(const PeriodT<R>& z) {
    if (z.re == R(0) && z.im == R(0)) throw DomainError("[z]+ is undefined at z = 0");
    return in_normal_form(z) ? z : -z;
}

template <class R>
FlatSurfaceT<R>::FlatSurfaceT(std::vector<std::array<int, 3>> triangles, std::vector<std::array<int, 2>> pairs,
                              std::vector<PeriodT<R>> periods, double tol)
    : triangles_(std::move(triangles)), pairs_(std::move(pairs)), periods_(std::move(periods)) {
    (void)tol;
    const int nf = num_triangles();
    const int ns = 3 * nf;
    if (nf == 0) throw StructuralError("surface has no triangles");
    if (2 * num_edges() != ns)
        throw StructuralError(std::to_string(num_edges()) + " edge pairs cannot glue " + std::to_string(ns) + " slots");
    if (periods_.size() != pairs_.size())
        throw StructuralError("expected one period per edge, got " + std::to_string(periods_.size()));
    slot_triangle_.assign(ns, -1);
    slot_position_.assign(ns, -1);
    slot_edge_.assign(ns, -1);
    for (int t = 0; t < nf; ++t)
        for (int k = 0; k < 3; ++k) {
            const int s = triangles_[t][k];
            if (s < 0 || s >= ns) throw StructuralError("triangle " + std::to_string(t) + " names slot " + std::to_string(s));
            if (slot_triangle_[s] != -1) throw StructuralError("slot " + std::to_string(s) + " used twice");
            slot_triangle_[s] = t;
            slot_position_[s] = k;
        }
    for (int e = 0; e < num_edges(); ++e)
        for (int s : pairs_[e]) {
            if (s < 0 || s >= ns) throw StructuralError("edge " + std::to_string(e) + " names slot " + std::to_string(s));
            if (slot_edge_[s] != -1) throw StructuralError("slot " + std::to_string(s) + " glued twice");
            slot_edge_[s] = e;
        }
    for (int e = 0; e < num_edges(); ++e) {
        if (periods_[e].re == R(0) && periods_[e].im == R(0))
            throw ValidationError("edge " + std::to_string(e) + " has zero period");
        if (!in_normal_form(periods_[e]))
            throw ValidationError("edge " + std::to_string(e) + " period is not in [z]+ form");
    }

    signs_.resize(nf);
    for (int t = 0; t < nf; ++t) {
        std::array<PeriodT<R>, 3> z;
        double scale = 0.0;
        for (int k = 0; k < 3; ++k) {
            z[k] = periods_[slot_edge_[triangles_[t][k]]];
            scale += magnitude(z[k]);
        }
        int found = 0;
        for (int e1 : {1, -1})
            for (int e2 : {1, -1}) {
                const PeriodT<R> sum = z[0] + z[1] * R(e1) + z[2] * R(e2);
                if (exact_zero(sum, scale)) {
                    signs_[t] = {1, e1, e2};
                    ++found;
                }
            }
        if (found == 0) throw ValidationError("triangle " + std::to_string(t) + " does not close up");
        if (found > 1) throw ValidationError("triangle " + std::to_string(t) + " is degenerate");
        const R twice_area = cross(side(triangles_[t][0]), side(triangles_[t][1]));
        if (!(twice_area > R(0)))
            throw ValidationError("triangle " + std::to_string(t) + " is not positively oriented");
    }

    UnionFind pieces(nf);
    for (const auto& p : pairs_) pieces.unite(slot_triangle_[p[0]], slot_triangle_[p[1]]);
    for (int t = 0; t < nf; ++t)
        if (pieces.find(t) != pieces.find(0)) throw ValidationError("surface is disconnected");

    // Corner k of a triangle is the tail of its k-th side.
    auto next = [&](int s) { return triangles_[slot_triangle_[s]][(slot_position_[s] + 1) % 3]; };
    UnionFind corners(ns);
    for (const auto& p : pairs_) {
        corners.unite(p[0], next(p[1]));
        corners.unite(next(p[0]), p[1]);
    }
    corner_vertex_.assign(ns, -1);
    std::vector<int> root_vertex(ns, -1);
    for (int s = 0; s < ns; ++s) {
        const int r = corners.find(s);
        if (root_vertex[r] < 0) root_vertex[r] = num_vertices_++;
        corner_vertex_[s] = root_vertex[r];
    }
    cone_angles_.assign(num_vertices_, 0.0);
    for (int t = 0; t < nf; ++t)
        for (int k = 0; k < 3; ++k) {
            const PeriodT<R> out = side(triangles_[t][k]);
            const PeriodT<R> back = -side(triangles_[t][(k + 2) % 3]);
            const double x1 = to_double(out.re), y1 = to_double(out.im);
            const double x2 = to_double(back.re), y2 = to_double(back.im);
            cone_angles_[corner_vertex_[triangles_[t][k]]] += std::atan2(x1 * y2 - y1 * x2, x1 * x2 + y1 * y2);
        }
    int kappa_sum = 0;
    for (int v = 0; v < num_vertices_; ++v) {
        const double m = cone_angles_[v] / std::numbers::pi;
        const double rounded = std::round(m);
        if (std::abs(m - rounded) > kAngleTolerance)
            throw ValidationError("cone angle at vertex " + std::to_string(v) + " is not a multiple of pi");
        if (rounded < 3.0)
            throw ValidationError("vertex " + std::to_string(v) + " has cone angle " +
                                  std::to_string(static_cast<int>(rounded)) + "pi below 3pi");
        kappa_sum += static_cast<int>(rounded) - 2;
    }
    const int chi = num_vertices_ - num_edges() + nf;
    if (chi % 2 != 0 || chi > 2) throw ValidationError("surface has odd or positive Euler characteristic");
    genus_ = (2 - chi) / 2;
    if (kappa_sum != 4 * genus_ - 4)
        throw ValidationError("cone orders sum to " + std::to_string(kappa_sum) + ", not 4g - 4");
}

template <class R>
PeriodT<R> FlatSurfaceT<R>::side(int slot) const {
    const int sign = signs_[slot_triangle_[slot]][slot_position_[slot]];
    const PeriodT<R>& z = periods_[slot_edge_[slot]];
    return sign > 0 ? z : -z;
}

template <class R>
bool FlatSurfaceT<R>::half_turn(int edge) const {
    const auto& p = pairs_[edge];
    return signs_[slot_triangle_[p[0]]][slot_position_[p[0]]] == signs_[slot_triangle_[p[1]]][slot_position_[p[1]]];
}

template <class R>
R area(const FlatSurfaceT<R>& q) {
    R total(0);
    for (const auto& t : q.triangles()) total += cross(q.side(t[0]), q.side(t[1])) / R(2);
    return total;
}

template <class R>
std::vector<int> horizontal_saddles(const FlatSurfaceT<R>& q, double tol) {
    std::vector<int> out;
    for (int e = 0; e < q.num_edges(); ++e) {
        const R& im = q.periods()[e].im;
        if (im == R(0) || to_double(im) < tol) out.push_back(e);
    }
    return out;
}

template <class R>
std::vector<int> stratum(const FlatSurfaceT<R>& q) {
    std::vector<int> kappa;
    for (double a : q.cone_angles()) kappa.push_back(static_cast<int>(std::lround(a / std::numbers::pi)) - 2);
    std::sort(kappa.rbegin(), kappa.rend());
    return kappa;
}

template <class R>
bool is_translation_surface(const FlatSurfaceT<R>& q) {
    // Look for a sign per triangle turning every gluing into a translation.
    const int nf = q.num_triangles();
    std::vector<int> flip(nf, 0);
    std::vector<std::vector<std::pair<int, int>>> adj(nf);
    for (int e = 0; e < q.num_edges(); ++e) {
        const int a = q.pairs()[e][0], b = q.pairs()[e][1];
        const int ta = q.triangle_of(a), tb = q.triangle_of(b);
        const int rel = q.half_turn(e) ? -1 : 1;
        adj[ta].push_back({tb, rel});
        adj[tb].push_back({ta, rel});
    }
    flip[0] = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
        const int t = stack.back();
        stack.pop_back();
        for (const auto& [u, rel] : adj[t]) {
            const int want = flip[t] * rel;
            if (flip[u] == 0) {
                flip[u] = want;
                stack.push_back(u);
            } else if (flip[u] != want) {
                return false;
            }
        }
    }
    return true;
}

template <class R>
TrainTrack dual_track(const FlatSurfaceT<R>& q, double tol) {
    std::vector<Switch> switches;
    for (int t = 0; t < q.num_triangles(); ++t) {
        const auto& tri = q.triangles()[t];
        std::array<R, 3> im;
        int horizontal = -1;
        for (int k = 0; k < 3; ++k) {
            im[k] = q.periods()[q.edge_of(tri[k])].im;
            if (im[k] == R(0)) {
                horizontal = k;
            } else if (to_double(im[k]) < tol) {
                throw ChartError("triangle " + std::to_string(t) + " has a nearly horizontal edge");
            }
        }
        int large = -1;
        if (horizontal >= 0) {
            large = (horizontal + 2) % 3;
        } else {
            large = 0;
            for (int k = 1; k < 3; ++k)
                if (im[k] > im[large]) large = k;
            for (int k = 0; k < 3; ++k)
                if (k != large && im[k] == im[large])
                    throw ChartError("triangle " + std::to_string(t) + " has no strict largest imaginary part");
        }
        switches.push_back({tri[large], tri[(large + 2) % 3], tri[(large + 1) % 3]});
    }
    std::vector<Branch> branches;
    for (int e = 0; e < q.num_edges(); ++e)
        branches.push_back({q.pairs()[e][0], q.pairs()[e][1], q.periods()[e].im == R(0)});
    return TrainTrack(q.genus(), std::move(switches), std::move(branches), "dual");
}

template <class R>
IlData<R> extract_Il(const FlatSurfaceT<R>& q, double tol) {
    IlData<R> out;
    out.track = dual_track(q, tol);
    out.sigma = WeightSystem<R>::zeros(out.track);
    out.lambda = WeightSystem<R>::zeros(out.track);
    for (int e = 0; e < q.num_edges(); ++e) {
        out.sigma[e] = q.periods()[e].re;
        out.lambda[e] = q.periods()[e].im;
    }
    return out;
}

template <class R>
FlatSurfaceT<R> rebuild(const TrainTrack& track, const WeightSystem<R>& sigma, const WeightSystem<R>& lambda,
                        double tol) {
    require_on_track(track, sigma);
    require_on_track(track, lambda);
    if (track.num_loops() > 0) throw StructuralError("track has switchless loops and no triangles");
    for (int b = 0; b < track.num_branches(); ++b) {
        const std::string name = "branch " + std::to_string(b);
        if (lambda[b] < R(0)) throw ChartError(name + " has negative imaginary weight");
        if (track.is_arc(b)) {
            if (!(lambda[b] == R(0))) throw ChartError("arc " + name + " has nonzero imaginary weight");
            if (!(sigma[b] > R(0))) throw ChartError("arc " + name + " has nonpositive weight");
        } else if (lambda[b] == R(0)) {
            throw ChartError(name + " is horizontal but not an arc");
        }
    }
    for (int s = 0; s < track.num_switches(); ++s) {
        if (!is_zero(switch_residual(track, sigma, s), tol) || !is_zero(switch_residual(track, lambda, s), tol))
            throw ValidationError("switch condition fails at switch " + std::to_string(s));
        const Switch& sw = track.switches()[s];
        if (lambda[track.branch_of(sw.small_left)] == R(0))
            throw ChartError("switch " + std::to_string(s) + " has a horizontal small-left branch");
        if (!(thurston_term(track, sigma, lambda, s) > R(0)))
            throw ChartError("switch " + std::to_string(s) + " has nonpositive determinant; re-triangulation required");
    }
    std::vector<std::array<int, 3>> triangles;
    for (const Switch& sw : track.switches()) triangles.push_back({sw.large, sw.small_right, sw.small_left});
    std::vector<std::array<int, 2>> pairs;
    std::vector<PeriodT<R>> periods;
    for (int b = 0; b < track.num_branches(); ++b) {
        pairs.push_back({track.branches()[b].half_a, track.branches()[b].half_b});
        periods.push_back({sigma[b], lambda[b]});
    }
    return FlatSurfaceT<R>(std::move(triangles), std::move(pairs), std::move(periods), tol);
}

FlatSurface geodesic_flow(const FlatSurface& q, double t, bool symmetric) {
    IlData<double> d = extract_Il(q);
    const double stretch = symmetric ? std::exp(t / 2) : std::exp(t);
    const double squeeze = symmetric ? std::exp(-t / 2) : 1.0;
    for (size_t b = 0; b < d.sigma.size(); ++b) {
        d.sigma[b] *= stretch;
        d.lambda[b] *= squeeze;
    }
    return rebuild(d.track, d.sigma, d.lambda);
}

template <class R>
FlatSurfaceT<R> horocycle_flow(const FlatSurfaceT<R>& q, const R& s) {
    IlData<R> d = extract_Il(q);
    for (size_t b = 0; b < d.sigma.size(); ++b) d.sigma[b] += s * d.lambda[b];
    return rebuild(d.track, d.sigma, d.lambda);
}

template <class R>
FlatSurfaceT<R> tremor(const FlatSurfaceT<R>& q, const WeightSystem<R>& mu) {
    IlData<R> d = extract_Il(q);
    require_on_track(d.track, mu);
    for (int s = 0; s < d.track.num_switches(); ++s)
        if (!is_zero(switch_residual(d.track, mu, s), kDefaultSwitchTolerance))
            throw ValidationError("tremor measure fails the switch condition at switch " + std::to_string(s));
    for (int b = 0; b < d.track.num_branches(); ++b) {
        if (d.track.is_arc(b) && !(mu[b] == R(0)))
            throw DomainError("tremor measure is nonzero on arc branch " + std::to_string(b));
        if (mu[b] < R(0)) throw DomainError("tremor measure is negative on branch " + std::to_string(b));
        d.sigma[b] += mu[b];
    }
    return rebuild(d.track, d.sigma, d.lambda);
}

template <class R>
FlatSurfaceT<R> apply_sl2(const FlatSurfaceT<R>& q, const std::array<R, 4>& m) {
    if (!(m[0] * m[3] - m[1] * m[2] > R(0))) throw DomainError("matrix must have positive determinant");
    std::vector<PeriodT<R>> periods;
    for (const auto& z : q.periods())
        periods.push_back(bracket_plus(PeriodT<R>{m[0] * z.re + m[1] * z.im, m[2] * z.re + m[3] * z.im}));
    return FlatSurfaceT<R>(q.triangles(), q.pairs(), std::move(periods));
}

SquareGluing origami(const std::vector<int>& right, const std::vector<int>& up) {
    const int n = static_cast<int>(right.size());
    if (static_cast<int>(up.size()) != n) throw StructuralError("origami permutations differ in size");
    SquareGluing g{n, {}};
    for (int i = 0; i < n; ++i) {
        g.pairs.push_back({4 * i + 1, 4 * right[i] + 3});
        g.pairs.push_back({4 * i + 2, 4 * up[i] + 0});
    }
    return g;
}

template <class R>
FlatSurfaceT<R> square_complex(const SquareGluing& g) {
    // Square i: lower triangle slots 6i + {0 bottom, 1 right, 2 diagonal},
    // upper triangle slots 6i + {3 diagonal, 4 top, 5 left}.
    const int n = g.squares;
    if (static_cast<int>(g.pairs.size()) != 2 * n) throw StructuralError("square gluing must pair all 4n sides");
    auto slot_of_side = [](int side) {
        static constexpr std::array<int, 4> offset{0, 1, 4, 5};
        return 6 * (side / 4) + offset[side % 4];
    };
    std::vector<std::array<int, 3>> triangles;
    std::vector<std::array<int, 2>> pairs;
    std::vector<PeriodT<R>> periods;
    const PeriodT<R> horizontal{R(1), R(0)}, vertical{R(0), R(1)}, diagonal{R(1), R(1)};
    for (int i = 0; i < n; ++i) {
        triangles.push_back({6 * i, 6 * i + 1, 6 * i + 2});
        triangles.push_back({6 * i + 3, 6 * i + 4, 6 * i + 5});
        pairs.push_back({6 * i + 2, 6 * i + 3});
        periods.push_back(diagonal);
    }
    std::vector<bool> used(4 * n, false);
    for (const auto& p : g.pairs) {
        for (int side : p) {
            if (side < 0 || side >= 4 * n || used[side])
                throw StructuralError("square side " + std::to_string(side) + " missing or glued twice");
            used[side] = true;
        }
        const bool h0 = p[0] % 2 == 0, h1 = p[1] % 2 == 0;
        if (h0 != h1) throw StructuralError("square gluing joins a horizontal side to a vertical one");
        pairs.push_back({slot_of_side(p[0]), slot_of_side(p[1])});
        periods.push_back(h0 ? horizontal : vertical);
    }
    return FlatSurfaceT<R>(std::move(triangles), std::move(pairs), std::move(periods));
}

FlatSurface perturb(const FlatSurface& q, unsigned seed, double scale) {
    const int nf = q.num_triangles(), ne = q.num_edges();
    Eigen::MatrixXd closure = Eigen::MatrixXd::Zero(nf, ne);
    for (int t = 0; t < nf; ++t)
        for (int k = 0; k < 3; ++k) closure(t, q.edge_of(q.triangles()[t][k])) += q.signs(t)[k];
    const Eigen::MatrixXd kernel = Eigen::FullPivLU<Eigen::MatrixXd>(closure).kernel();
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    auto direction = [&] {
        Eigen::VectorXd c(kernel.cols());
        for (int j = 0; j < kernel.cols(); ++j) c(j) = coef(rng);
        Eigen::VectorXd v = kernel * c;
        const double m = v.cwiseAbs().maxCoeff();
        return m > 0.0 ? Eigen::VectorXd(v / m) : v;
    };
    const Eigen::VectorXd dre = direction(), dim = direction();
    std::vector<PeriodT<double>> periods;
    for (int e = 0; e < ne; ++e) {
        const auto& z = q.periods()[e];
        periods.push_back(bracket_plus(PeriodT<double>{z.re + scale * dre(e), z.im + scale * dim(e)}));
    }
    return FlatSurface(q.triangles(), q.pairs(), std::move(periods));
}

template <class R>
FlatSurfaceT<R> convert(const FlatSurfaceT<Rational>& q) {
    if constexpr (std::is_same_v<R, Rational>) {
        return q;
    } else {
        std::vector<PeriodT<R>> periods;
        for (const auto& z : q.periods()) periods.push_back({to_double(z.re), to_double(z.im)});
        return FlatSurfaceT<R>(q.triangles(), q.pairs(), std::move(periods));
    }
}

SquareGluing find_origami(int squares, const std::vector<int>& kappa) {
    std::vector<int> right(squares), up(squares);
    std::iota(right.begin(), right.end(), 0);
    do {
        std::iota(up.begin(), up.end(), 0);
        do {
            const SquareGluing g = origami(right, up);
            try {
                if (stratum(square_complex<Rational>(g)) == kappa) return g;
            } catch (const Error&) {
            }
        } while (std::next_permutation(up.begin(), up.end()));
    } while (std::next_permutation(right.begin(), right.end()));
    throw DomainError("no origami with the requested stratum on " + std::to_string(squares) + " squares");
}

std::vector<SquareGluing> find_half_translation(int squares, int genus, int count, unsigned seed) {
    std::mt19937 rng(seed);
    auto matching = [&](std::vector<int> sides) {
        for (int i = static_cast<int>(sides.size()) - 1; i > 0; --i)
            std::swap(sides[i], sides[rng() % static_cast<unsigned>(i + 1)]);
        std::vector<std::array<int, 2>> out;
        for (size_t i = 0; i + 1 < sides.size(); i += 2) out.push_back({sides[i], sides[i + 1]});
        return out;
    };
    std::vector<int> horizontal, vertical;
    for (int i = 0; i < squares; ++i) {
        horizontal.insert(horizontal.end(), {4 * i, 4 * i + 2});
        vertical.insert(vertical.end(), {4 * i + 1, 4 * i + 3});
    }
    std::vector<SquareGluing> found;
    for (int attempt = 0; attempt < 200000 && static_cast<int>(found.size()) < count; ++attempt) {
        SquareGluing g{squares, matching(horizontal)};
        const auto v = matching(vertical);
        g.pairs.insert(g.pairs.end(), v.begin(), v.end());
        try {
            const auto q = square_complex<Rational>(g);
            if (q.genus() == genus && !is_translation_surface(q)) found.push_back(g);
        } catch (const Error&) {
        }
    }
    if (static_cast<int>(found.size()) < count) throw DomainError("half-translation search came up short");
    return found;
}

namespace {

std::string stratum_name(const std::vector<int>& kappa) {
    std::string s = "(";
    for (size_t i = 0; i < kappa.size(); ++i) s += (i ? "," : "") + std::to_string(kappa[i]);
    return s + ")";
}

}  // namespace

std::vector<NamedSurface<Rational>> exact_corpus() {
    std::vector<NamedSurface<Rational>> out;
    const auto l_shape = square_complex<Rational>(find_origami(3, {4}));
    const auto two_two = square_complex<Rational>(find_origami(4, {2, 2}));
    out.push_back({"L origami (4)", l_shape});
    out.push_back({"origami (2,2)", two_two});
    out.push_back({"L origami sheared by 1/3", apply_sl2(l_shape, {Rational(1), Rational(1, 3), Rational(0), Rational(1)})});
    out.push_back({"L origami under (2,1;1,1)", apply_sl2(l_shape, {Rational(2), Rational(1), Rational(1), Rational(1)})});
    out.push_back({"origami (2,2) stretched", apply_sl2(two_two, {Rational(3, 2), Rational(0), Rational(0), Rational(2, 3)})});
    out.push_back({"origami (2,2) under (1,2;1,3)", apply_sl2(two_two, {Rational(1), Rational(2), Rational(1), Rational(3)})});
    for (const auto& g : find_half_translation(5, 2, 2, 7)) {
        const auto q = square_complex<Rational>(g);
        out.push_back({"half-translation " + stratum_name(stratum(q)), q});
    }
    const auto six = find_half_translation(6, 2, 1, 11);
    out.push_back({"half-translation " + stratum_name(stratum(square_complex<Rational>(six[0]))),
                   square_complex<Rational>(six[0])});
    return out;
}

std::vector<NamedSurface<double>> flat_corpus() {
    std::vector<NamedSurface<double>> out;
    for (const auto& e : exact_corpus()) out.push_back({e.name, convert<double>(e.surface)});
    const FlatSurface l_shape = out[0].surface, two_two = out[1].surface;
    auto rotation = [](double a) { return std::array<double, 4>{std::cos(a), -std::sin(a), std::sin(a), std::cos(a)}; };
    out.push_back({"L origami rotated", apply_sl2(l_shape, rotation(0.3))});
    out.push_back({"origami (2,2) rotated", apply_sl2(two_two, rotation(1.1))});
    out.push_back({"L origami perturbed", perturb(l_shape, 1, 0.05)});
    out.push_back({"origami (2,2) perturbed", perturb(two_two, 2, 0.05)});
    out.push_back({"L origami rotated and perturbed", perturb(apply_sl2(l_shape, rotation(0.7)), 3, 0.05)});
    out.push_back({"half-translation perturbed", perturb(out[6].surface, 4, 0.05)});
    return out;
}

#define SHSH_INSTANTIATE(R)                                                                                       \
    template PeriodT<R> bracket_plus<R>(const PeriodT<R>&);                                                      \
    template class FlatSurfaceT<R>;                                                                               \
    template R area<R>(const FlatSurfaceT<R>&);                                                                   \
    template std::vector<int> horizontal_saddles<R>(const FlatSurfaceT<R>&, double);                              \
    template std::vector<int> stratum<R>(const FlatSurfaceT<R>&);                                                 \
    template bool is_translation_surface<R>(const FlatSurfaceT<R>&);                                              \
    template TrainTrack dual_track<R>(const FlatSurfaceT<R>&, double);                                            \
    template IlData<R> extract_Il<R>(const FlatSurfaceT<R>&, double);                                             \
    template FlatSurfaceT<R> rebuild<R>(const TrainTrack&, const WeightSystem<R>&, const WeightSystem<R>&, double); \
    template FlatSurfaceT<R> horocycle_flow<R>(const FlatSurfaceT<R>&, const R&);                                  \
    template FlatSurfaceT<R> tremor<R>(const FlatSurfaceT<R>&, const WeightSystem<R>&);                           \
    template FlatSurfaceT<R> apply_sl2<R>(const FlatSurfaceT<R>&, const std::array<R, 4>&);                       \
    template FlatSurfaceT<R> square_complex<R>(const SquareGluing&);                                              \
    template FlatSurfaceT<R> convert<R>(const FlatSurfaceT<Rational>&);
SHSH_INSTANTIATE(double)
SHSH_INSTANTIATE(Rational)
#undef SHSH_INSTANTIATE

}  // namespace shsh
