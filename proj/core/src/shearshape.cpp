#include "shsh/shearshape.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace shsh {

template <class T>
void require_cocycle(const TrainTrack& track, const WeightSystem<T>& sigma, double tol) {
    require_on_track(track, sigma);
    for (int s = 0; s < track.num_switches(); ++s)
        if (!is_zero(switch_residual(track, sigma, s), tol))
            throw ValidationError("switch condition fails at switch " + std::to_string(s));
    for (int b : track.arc_branches())
        if (!(sigma[b] > T(0))) throw ChartError("arc branch " + std::to_string(b) + " has nonpositive weight");
}

template <class T>
void require_measure(const TrainTrack& track, const WeightSystem<T>& mu, double tol) {
    require_on_track(track, mu);
    for (int s = 0; s < track.num_switches(); ++s)
        if (!is_zero(switch_residual(track, mu, s), tol))
            throw ValidationError("switch condition fails at switch " + std::to_string(s));
    for (int b = 0; b < track.num_branches(); ++b) {
        if (track.is_arc(b) && !is_zero(mu[b], tol))
            throw DomainError("measure is nonzero on arc branch " + std::to_string(b));
        if (mu[b] < T(0) && !is_zero(mu[b], tol))
            throw DomainError("measure is negative on branch " + std::to_string(b));
    }
}

template <class T>
T pair(const TrainTrack& track, const WeightSystem<T>& sigma, const WeightSystem<T>& mu, double tol) {
    return thurston_form(track, sigma, mu, tol);
}

template <class T>
bool is_positive(const TrainTrack& track, const WeightSystem<T>& sigma, const std::vector<WeightSystem<T>>& measures,
                 double tol) {
    if (measures.empty()) {
        for (int b = 0; b < track.num_branches(); ++b)
            if (!track.is_arc(b)) throw DomainError("no ergodic generators supplied for a nonempty lamination");
        return true;
    }
    for (const auto& mu : measures) {
        const T p = pair(track, sigma, mu, tol);
        if (!(p > T(0)) || is_zero(p, tol)) return false;
    }
    return true;
}

template <class T>
WeightSystem<T> add_transverse(const TrainTrack& track, const WeightSystem<T>& sigma, const WeightSystem<T>& rho,
                               double tol) {
    require_on_track(track, sigma);
    require_on_track(track, rho);
    for (int b : track.arc_branches())
        if (!is_zero(rho[b], tol)) throw DomainError("transverse cocycle is nonzero on arc branch " + std::to_string(b));
    for (int s = 0; s < track.num_switches(); ++s)
        if (!is_zero(switch_residual(track, rho, s), tol))
            throw ValidationError("transverse cocycle fails the switch condition at switch " + std::to_string(s));
    WeightSystem<T> out = sigma;
    for (int b = 0; b < track.num_branches(); ++b)
        if (!track.is_arc(b)) out[b] += rho[b];
    return out;
}

template <class T>
CocyclePair<T> b_action(const TrainTrack& track, const WeightSystem<T>& sigma, const WeightSystem<T>& lambda,
                        const UpperTriangular<T>& m) {
    if (!(m.a > T(0)) || !(m.c > T(0))) throw DomainError("upper-triangular action needs positive diagonal entries");
    require_on_track(track, sigma);
    require_on_track(track, lambda);
    for (int b : track.arc_branches())
        if (!is_zero(lambda[b], 0.0)) throw DomainError("lamination weight is nonzero on arc branch " + std::to_string(b));
    CocyclePair<T> out{sigma, lambda};
    for (int b = 0; b < track.num_branches(); ++b) {
        out.sigma[b] = m.a * sigma[b] + m.b * lambda[b];
        out.lambda[b] = m.c * lambda[b];
    }
    return out;
}

#define SHSH_INSTANTIATE(T)                                                                                        \
    template void require_cocycle<T>(const TrainTrack&, const WeightSystem<T>&, double);                           \
    template void require_measure<T>(const TrainTrack&, const WeightSystem<T>&, double);                           \
    template T pair<T>(const TrainTrack&, const WeightSystem<T>&, const WeightSystem<T>&, double);                 \
    template bool is_positive<T>(const TrainTrack&, const WeightSystem<T>&, const std::vector<WeightSystem<T>>&,   \
                                 double);                                                                          \
    template WeightSystem<T> add_transverse<T>(const TrainTrack&, const WeightSystem<T>&, const WeightSystem<T>&,  \
                                               double);                                                            \
    template CocyclePair<T> b_action<T>(const TrainTrack&, const WeightSystem<T>&, const WeightSystem<T>&,         \
                                        const UpperTriangular<T>&);
SHSH_INSTANTIATE(double)
SHSH_INSTANTIATE(Rational)
#undef SHSH_INSTANTIATE

PantsDecomposition theta_pants() {
    PantsDecomposition d;
    d.pants.push_back({Cuff{0, true}, Cuff{1, true}, Cuff{2, true}});
    d.pants.push_back({Cuff{0, false}, Cuff{1, false}, Cuff{2, false}});
    return d;
}

PantsDecomposition dumbbell_pants() {
    PantsDecomposition d;
    d.pants.push_back({Cuff{0, true}, Cuff{0, false}, Cuff{1, true}});
    d.pants.push_back({Cuff{2, true}, Cuff{2, false}, Cuff{1, false}});
    return d;
}

template <class T>
PantsShape classify_pants(const T& a, const T& b, const T& c) {
    const std::array<T, 3> len{a, b, c};
    for (const T& x : len)
        if (!(x > T(0))) throw DomainError("cuff lengths must be positive");
    int big = 0;
    for (int i = 1; i < 3; ++i)
        if (len[i] > len[big]) big = i;
    const T rest = len[(big + 1) % 3] + len[(big + 2) % 3];
    if (len[big] == rest)
        throw DomainError("cuff lengths with a + b = c lie on the lower-dimensional cell between the three-seam and "
                          "two-seam charts");
    if (len[big] < rest) return {};
    return {true, big};
}

template PantsShape classify_pants<double>(const double&, const double&, const double&);
template PantsShape classify_pants<Rational>(const Rational&, const Rational&, const Rational&);

namespace {

void check_decomposition(const PantsDecomposition& dec) {
    if (static_cast<int>(dec.pants.size()) != 2 * dec.genus - 2)
        throw StructuralError("a genus " + std::to_string(dec.genus) + " surface needs " +
                              std::to_string(2 * dec.genus - 2) + " pants");
    std::vector<int> seen(2 * dec.curves, 0);
    for (const auto& p : dec.pants)
        for (const Cuff& c : p) {
            if (c.curve < 0 || c.curve >= dec.curves)
                throw StructuralError("cuff names unknown curve " + std::to_string(c.curve));
            ++seen[2 * c.curve + (c.left ? 0 : 1)];
        }
    for (int x : seen)
        if (x != 1) throw StructuralError("each side of each curve must bound exactly one pants");
}

}  // namespace

PantsChart pants_chart(const PantsDecomposition& dec, const std::vector<PantsShape>& shapes) {
    check_decomposition(dec);
    if (shapes.size() != dec.pants.size()) throw StructuralError("one shape per pants expected");
    PantsChart chart;
    chart.decomposition = dec;
    chart.shapes = shapes;

    // Endpoint slots per curve side, listed in the pants' boundary direction.
    std::vector<std::vector<std::pair<int, int>>> slots(2 * dec.curves);
    auto side_index = [](const Cuff& c) { return 2 * c.curve + (c.left ? 0 : 1); };
    for (int p = 0; p < static_cast<int>(dec.pants.size()); ++p) {
        const auto& cuffs = dec.pants[p];
        const PantsShape& shape = shapes[p];
        auto add_seam = [&](int from, int to) {
            chart.seams.push_back({p, from, to});
            return static_cast<int>(chart.seams.size()) - 1;
        };
        if (!shape.two_seam) {
            std::array<int, 3> seam{};
            for (int i = 0; i < 3; ++i) seam[i] = add_seam(i, (i + 1) % 3);
            for (int i = 0; i < 3; ++i) {
                slots[side_index(cuffs[i])].push_back({seam[i], 0});
                slots[side_index(cuffs[i])].push_back({seam[(i + 2) % 3], 1});
            }
        } else {
            if (shape.long_cuff < 0 || shape.long_cuff > 2) throw StructuralError("two-seam shape needs a long cuff");
            const int l = shape.long_cuff, a = (l + 1) % 3, b = (l + 2) % 3;
            const int la = add_seam(l, a), lb = add_seam(l, b), ll = add_seam(l, l);
            auto& around = slots[side_index(cuffs[l])];
            around.push_back({la, 0});
            around.push_back({ll, 0});
            around.push_back({lb, 0});
            around.push_back({ll, 1});
            slots[side_index(cuffs[a])].push_back({la, 1});
            slots[side_index(cuffs[b])].push_back({lb, 1});
        }
    }

    std::vector<ArcAttachment> attach(chart.seams.size());
    for (int c = 0; c < dec.curves; ++c) {
        for (int side = 0; side < 2; ++side) {
            const auto& list = slots[2 * c + side];
            const int n = static_cast<int>(list.size());
            for (int k = 0; k < n; ++k) {
                const double step = 0.5 * (k + 1) / (n + 1);
                ArcEnd end{c, side == 1, side == 0 ? step : 1.0 - step};
                (list[k].second == 0 ? attach[list[k].first].first : attach[list[k].first].second) = end;
            }
        }
    }
    std::vector<Branch> loops(dec.curves, Branch{});
    const TrainTrack base(dec.genus, {}, loops, "pants");
    chart.smoothing = smooth_with_arcs_detailed(base, attach);
    chart.curve_pieces.assign(chart.smoothing.pieces.begin(), chart.smoothing.pieces.end());
    return chart;
}

template <class T>
std::vector<PantsShape> pants_shapes(const PantsDecomposition& dec, const std::vector<T>& lengths) {
    if (static_cast<int>(lengths.size()) != dec.curves) throw StructuralError("one length per curve expected");
    std::vector<PantsShape> out;
    for (const auto& p : dec.pants)
        out.push_back(classify_pants(lengths[p[0].curve], lengths[p[1].curve], lengths[p[2].curve]));
    return out;
}

template <class T>
std::vector<T> seam_weights(const T& a, const T& b, const T& c, const PantsShape& shape) {
    const std::array<T, 3> len{a, b, c};
    if (!shape.two_seam) {
        std::vector<T> w;
        for (int i = 0; i < 3; ++i) {
            const int j = (i + 1) % 3, k = (i + 2) % 3;
            w.push_back((len[i] + len[j] - len[k]) / T(2));
        }
        return w;
    }
    const int l = shape.long_cuff, x = (l + 1) % 3, y = (l + 2) % 3;
    return {len[x], len[y], (len[l] - len[x] - len[y]) / T(2)};
}

template <class T>
WeightSystem<T> pants_encode(const PantsChart& chart, const std::vector<T>& lengths, const std::vector<T>& twists) {
    const auto& dec = chart.decomposition;
    if (static_cast<int>(twists.size()) != dec.curves) throw StructuralError("one twist per curve expected");
    if (pants_shapes(dec, lengths) != chart.shapes)
        throw ChartError("cuff lengths select a different seam pattern than this chart");
    const TrainTrack& track = chart.track();
    WeightSystem<T> w = WeightSystem<T>::zeros(track);
    std::vector<T> seam(chart.seams.size(), T(0));
    int next = 0;
    for (size_t p = 0; p < dec.pants.size(); ++p) {
        const auto& cf = dec.pants[p];
        for (const T& x : seam_weights(lengths[cf[0].curve], lengths[cf[1].curve], lengths[cf[2].curve], chart.shapes[p]))
            seam[next++] = x;
    }
    for (size_t s = 0; s < seam.size(); ++s) w[chart.smoothing.arc_branch[s]] = seam[s];
    for (int c = 0; c < dec.curves; ++c) {
        const auto& pts = chart.smoothing.points[c];
        const auto& pieces = chart.curve_pieces[c];
        T running = twists[c];
        for (size_t j = 0; j < pts.size(); ++j) {
            running += pts[j].right_side ? -seam[pts[j].arc] : seam[pts[j].arc];
            if (j + 1 < pts.size()) w[pieces[j]] = running;
        }
        if (running != twists[c])
            throw ValidationError("curve " + std::to_string(c) + " has unequal lengths on its two sides");
        w[pieces.back()] = twists[c];
    }
    return w;
}

template <class T>
WeightSystem<T> curve_measure(const PantsChart& chart, const std::vector<T>& multiplicity) {
    if (static_cast<int>(multiplicity.size()) != chart.decomposition.curves)
        throw StructuralError("one multiplicity per curve expected");
    WeightSystem<T> w = WeightSystem<T>::zeros(chart.track());
    for (int c = 0; c < chart.decomposition.curves; ++c)
        for (int b : chart.curve_pieces[c]) w[b] = multiplicity[c];
    return w;
}

template <class T>
std::vector<WeightSystem<T>> curve_generators(const PantsChart& chart) {
    std::vector<WeightSystem<T>> out;
    for (int c = 0; c < chart.decomposition.curves; ++c) {
        std::vector<T> m(chart.decomposition.curves, T(0));
        m[c] = T(1);
        out.push_back(curve_measure(chart, m));
    }
    return out;
}

#define SHSH_INSTANTIATE(T)                                                                                       \
    template std::vector<PantsShape> pants_shapes<T>(const PantsDecomposition&, const std::vector<T>&);           \
    template std::vector<T> seam_weights<T>(const T&, const T&, const T&, const PantsShape&);                     \
    template WeightSystem<T> pants_encode<T>(const PantsChart&, const std::vector<T>&, const std::vector<T>&);    \
    template WeightSystem<T> curve_measure<T>(const PantsChart&, const std::vector<T>&);                          \
    template std::vector<WeightSystem<T>> curve_generators<T>(const PantsChart&);
SHSH_INSTANTIATE(double)
SHSH_INSTANTIATE(Rational)
#undef SHSH_INSTANTIATE
template WeightSystem<std::int64_t> curve_measure<std::int64_t>(const PantsChart&, const std::vector<std::int64_t>&);

DehnThurston dt_decode(const PantsChart& chart, const WeightSystem<Rational>& sigma) {
    const TrainTrack& track = chart.track();
    require_cocycle(track, sigma);
    for (int b = 0; b < track.num_branches(); ++b)
        if (sigma[b].denominator() != 1)
            throw DomainError("branch " + std::to_string(b) + " has non-integral weight " + to_string(sigma[b]));
    DehnThurston dt;
    for (int c = 0; c < chart.decomposition.curves; ++c) {
        Rational left(0), right(0);
        for (const auto& p : chart.smoothing.points[c])
            (p.right_side ? right : left) += sigma[chart.smoothing.arc_branch[p.arc]];
        if (left != right)
            throw ValidationError("curve " + std::to_string(c) + " meets " + to_string(left) + " strands on one side and " +
                                  to_string(right) + " on the other");
        dt.intersections.push_back(left.numerator());
        dt.twists.push_back(sigma[chart.reference_piece(c)].numerator());
    }
    return dt;
}

std::vector<Rational> pairing_coefficients(const TrainTrack& track, const WeightSystem<std::int64_t>& lambda) {
    require_on_track(track, lambda);
    std::vector<Rational> coeff(track.num_branches(), Rational(0));
    for (const Switch& sw : track.switches()) {
        const int r = track.branch_of(sw.small_right), l = track.branch_of(sw.small_left);
        coeff[r] += Rational(lambda[l], 2);
        coeff[l] -= Rational(lambda[r], 2);
    }
    return coeff;
}

namespace {

struct LatticeSetup {
    std::vector<Rational> coeff;
    std::int64_t box = 0;
};

LatticeSetup lattice_setup(const TrainTrack& track, const WeightSystem<std::int64_t>& lambda, std::int64_t bound) {
    if (bound < 0) throw DomainError("area bound must be nonnegative");
    require_measure(track, lambda, 0.0);
    LatticeSetup s;
    s.coeff = pairing_coefficients(track, lambda);
    Rational m(0);
    for (const Rational& c : s.coeff)
        if (c > Rational(0) && (m == Rational(0) || c < m)) m = c;
    if (m == Rational(0)) throw DomainError("pairing with the lamination has no positive coefficient; the region is unbounded");
    const Rational q = Rational(bound) / m;
    s.box = q.numerator() / q.denominator();
    return s;
}

}  // namespace

std::vector<WeightSystem<std::int64_t>> integer_points(const TrainTrack& track, const WeightSystem<std::int64_t>& lambda,
                                                       std::int64_t bound) {
    const LatticeSetup setup = lattice_setup(track, lambda, bound);
    const int nb = track.num_branches();
    const int ns = track.num_switches();

    // Switch equations in reduced row echelon form, non-arc columns first so
    // the free coordinates tend to be arc weights.
    std::vector<int> order;
    for (int b = 0; b < nb; ++b)
        if (!track.is_arc(b)) order.push_back(b);
    for (int b = 0; b < nb; ++b)
        if (track.is_arc(b)) order.push_back(b);
    std::vector<std::vector<Rational>> m(ns, std::vector<Rational>(nb, Rational(0)));
    for (int s = 0; s < ns; ++s) {
        const Switch& sw = track.switches()[s];
        m[s][track.branch_of(sw.large)] += 1;
        m[s][track.branch_of(sw.small_left)] -= 1;
        m[s][track.branch_of(sw.small_right)] -= 1;
    }
    std::vector<int> pivot_col;
    int row = 0;
    for (int col : order) {
        int pr = -1;
        for (int r = row; r < ns; ++r)
            if (m[r][col] != Rational(0)) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[row], m[pr]);
        const Rational inv = Rational(1) / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (int r = 0; r < ns; ++r) {
            if (r == row || m[r][col] == Rational(0)) continue;
            const Rational f = m[r][col];
            for (int k = 0; k < nb; ++k) m[r][k] -= f * m[row][k];
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<bool> is_pivot(nb, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<int> free_cols;
    for (int c : order)
        if (!is_pivot[c]) free_cols.push_back(c);
    std::sort(free_cols.begin(), free_cols.end());

    std::vector<WeightSystem<std::int64_t>> out;
    WeightSystem<std::int64_t> w = WeightSystem<std::int64_t>::zeros(track);
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == free_cols.size()) {
            for (int r = 0; r < row; ++r) {
                Rational v(0);
                for (int c : free_cols) v -= m[r][c] * w[c];
                if (v.denominator() != 1) return;
                const std::int64_t x = v.numerator();
                const int pc = pivot_col[r];
                if (x > setup.box || x < -setup.box) return;
                if (track.is_arc(pc) && x < 1) return;
                w[pc] = x;
            }
            Rational p(0);
            for (int b = 0; b < nb; ++b) p += setup.coeff[b] * w[b];
            if (p <= Rational(bound)) out.push_back(w);
            return;
        }
        const int c = free_cols[k];
        const std::int64_t lo = track.is_arc(c) ? 1 : -setup.box;
        for (std::int64_t x = lo; x <= setup.box; ++x) {
            w[c] = x;
            rec(k + 1);
        }
        w[c] = 0;
    };
    if (bound > 0) rec(0);
    return out;
}

std::int64_t count_integer_points(const TrainTrack& track, const WeightSystem<std::int64_t>& lambda,
                                  std::int64_t bound) {
    return static_cast<std::int64_t>(integer_points(track, lambda, bound).size());
}

std::int64_t count_integer_points(const PantsChart& chart, const WeightSystem<std::int64_t>& lambda,
                                  std::int64_t bound) {
    const TrainTrack& track = chart.track();
    const LatticeSetup setup = lattice_setup(track, lambda, bound);
    if (bound == 0) return 0;
    const int na = static_cast<int>(chart.seams.size());
    std::vector<Rational> arc_coeff(na);
    for (int a = 0; a < na; ++a) arc_coeff[a] = setup.coeff[chart.smoothing.arc_branch[a]];
    for (int b = 0; b < track.num_branches(); ++b)
        if (!track.is_arc(b) && setup.coeff[b] != Rational(0))
            throw DomainError("pants chart pairing depends on curve weights; use the generic enumeration");
    for (const Rational& c : arc_coeff)
        if (c <= Rational(0)) throw DomainError("a seam has nonpositive pairing coefficient");

    const int curves = chart.decomposition.curves;
    std::vector<std::int64_t> arc(na, 0);
    std::int64_t total = 0;
    std::function<void(int, Rational)> rec = [&](int a, Rational budget) {
        if (a == na) {
            std::int64_t prod = 1;
            for (int c = 0; c < curves; ++c) {
                std::int64_t run = 0, lo = 0, hi = 0;
                for (const auto& p : chart.smoothing.points[c]) {
                    run += p.right_side ? -arc[p.arc] : arc[p.arc];
                    lo = std::min(lo, run);
                    hi = std::max(hi, run);
                }
                if (run != 0) return;
                const std::int64_t span = 2 * setup.box - (hi - lo) + 1;
                if (span <= 0) return;
                prod *= span;
            }
            total += prod;
            return;
        }
        for (std::int64_t x = 1; x <= setup.box; ++x) {
            const Rational left = budget - arc_coeff[a] * x;
            if (left < Rational(0)) break;
            arc[a] = x;
            rec(a + 1, left);
        }
    };
    rec(0, Rational(bound));
    return total;
}

}  // namespace shsh
