#include "shsh/arcsystem.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <tuple>

namespace shsh {

BoundaryLookup find_boundary(const std::vector<CutSurfaceComponent>& comps, int id) {
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
        for (const ClosedBoundary& b : comps[c].closed_boundaries)
            if (b.id == id) return {c, &b, nullptr};
        for (const Crown& k : comps[c].crowns)
            if (k.id == id) return {c, nullptr, &k};
    }
    return {};
}

namespace {

void validate_components(const std::vector<CutSurfaceComponent>& comps) {
    std::set<int> ids;
    for (size_t c = 0; c < comps.size(); ++c) {
        const auto& comp = comps[c];
        if (comp.genus < 0) throw StructuralError("component " + std::to_string(c) + " has negative genus");
        for (const ClosedBoundary& b : comp.closed_boundaries) {
            if (!ids.insert(b.id).second) throw StructuralError("boundary id " + std::to_string(b.id) + " repeated");
            if (b.side != 1 && b.side != -1)
                throw StructuralError("boundary " + std::to_string(b.id) + " side must be +1 or -1");
        }
        for (const Crown& k : comp.crowns) {
            if (!ids.insert(k.id).second) throw StructuralError("boundary id " + std::to_string(k.id) + " repeated");
            if (k.spikes < 1) throw StructuralError("crown " + std::to_string(k.id) + " needs at least one spike");
            if (static_cast<int>(k.edges.size()) != k.spikes)
                throw StructuralError("crown " + std::to_string(k.id) + " has " + std::to_string(k.edges.size()) +
                                      " edges for " + std::to_string(k.spikes) + " spikes");
            for (int e : k.edges)
                if (e != 1 && e != -1)
                    throw StructuralError("crown " + std::to_string(k.id) + " edge tags must be +1 or -1");
        }
        if (comp.closed_boundaries.empty() && comp.crowns.empty() && comp.genus == 0)
            throw StructuralError("component " + std::to_string(c) + " is a sphere");
    }
}

// Endpoints are ordered along a boundary circle by (edge, position).
using CircleKey = std::pair<int, double>;

CircleKey circle_key(const BoundaryLookup& where, const ArcEndpoint& e) {
    return {where.crown ? e.edge : 0, e.position};
}

}  // namespace

template <class T>
void validate(const WeightedArcSystem<T>& a) {
    validate_components(a.components);
    std::set<int> arc_ids;
    std::set<std::tuple<int, int, double>> spots;
    for (const auto& arc : a.arcs) {
        const std::string name = "arc " + std::to_string(arc.id);
        if (!arc_ids.insert(arc.id).second) throw StructuralError(name + " repeated");
        if (!(arc.weight > T(0))) throw ValidationError(name + " has nonpositive weight");
        int comp = -1;
        for (const ArcEndpoint* e : {&arc.e1, &arc.e2}) {
            const BoundaryLookup where = find_boundary(a.components, e->boundary);
            if (where.component < 0)
                throw StructuralError(name + " ends on undeclared boundary " + std::to_string(e->boundary));
            if (where.crown && (e->edge < 0 || e->edge >= where.crown->spikes))
                throw StructuralError(name + " ends on missing edge " + std::to_string(e->edge) + " of crown " +
                                      std::to_string(e->boundary));
            if (!(e->position > 0.0 && e->position < 1.0))
                throw StructuralError(name + " endpoint position must lie in (0, 1)");
            if (comp >= 0 && comp != where.component) throw StructuralError(name + " joins two different components");
            comp = where.component;
            const CircleKey key = circle_key(where, *e);
            if (!spots.insert({e->boundary, key.first, key.second}).second)
                throw StructuralError(name + " shares an endpoint position with another arc");
        }
    }
}

template void validate<double>(const WeightedArcSystem<double>&);
template void validate<Rational>(const WeightedArcSystem<Rational>&);

int teich_dim(const CutSurfaceComponent& c) {
    int d = 6 * c.genus - 6 + 3 * static_cast<int>(c.closed_boundaries.size());
    for (const Crown& k : c.crowns) d += k.spikes + 3;
    return d;
}

int area_coeff(const CutSurfaceComponent& c) {
    int d = 4 * c.genus - 4 + 2 * static_cast<int>(c.closed_boundaries.size());
    for (const Crown& k : c.crowns) d += k.spikes + 2;
    return d;
}

int ambient_genus(const std::vector<CutSurfaceComponent>& comps) {
    int total = 0;
    for (const auto& c : comps) total += area_coeff(c);
    if ((total + 4) % 4 != 0 || total < 4)
        throw DomainError("total area coefficient " + std::to_string(total) + " is not 4g - 4 for a genus g >= 2");
    return (total + 4) / 4;
}

DimSummary dim_summary(const std::vector<CutSurfaceComponent>& comps, const std::vector<LambdaComponent>& lambda) {
    DimSummary d;
    for (const auto& c : comps)
        for (const Crown& k : c.crowns) d.spikes += k.spikes;
    if (d.spikes % 2 != 0) throw DomainError("total spike count " + std::to_string(d.spikes) + " is odd");
    d.genus = ambient_genus(comps);
    d.chi_lambda = -d.spikes / 2;
    for (const auto& l : lambda)
        if (l.orientable) ++d.orientable_components;
    d.dim_H = -d.chi_lambda + d.orientable_components;
    d.dim_B = -d.orientable_components;
    for (const auto& c : comps) d.dim_B += teich_dim(c);
    d.dim_SH = d.dim_H + d.dim_B;
    if (d.dim_SH != 6 * d.genus - 6)
        throw ValidationError("shear-shape dimension " + std::to_string(d.dim_SH) + " differs from 6g - 6 = " +
                              std::to_string(6 * d.genus - 6));
    return d;
}

FillingReport filling_report(const std::vector<CutSurfaceComponent>& comps,
                             const std::vector<std::pair<ArcEndpoint, ArcEndpoint>>& arcs) {
    validate_components(comps);
    const int nc = static_cast<int>(comps.size());
    const int ne = 2 * static_cast<int>(arcs.size());
    std::vector<int> comp_of(ne, -1);
    std::map<int, std::vector<std::pair<CircleKey, int>>> on_circle;
    std::vector<int> arc_count(nc, 0);
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
        for (int e = 0; e < 2; ++e) {
            const ArcEndpoint& end = e == 0 ? arcs[i].first : arcs[i].second;
            const BoundaryLookup where = find_boundary(comps, end.boundary);
            if (where.component < 0)
                throw StructuralError("arc " + std::to_string(i) + " ends on undeclared boundary " +
                                      std::to_string(end.boundary));
            comp_of[2 * i + e] = where.component;
            on_circle[end.boundary].push_back({circle_key(where, end), 2 * i + e});
        }
        if (comp_of[2 * i] != comp_of[2 * i + 1])
            throw StructuralError("arc " + std::to_string(i) + " joins two different components");
        ++arc_count[comp_of[2 * i]];
    }
    // Walking along a circle from endpoint p reaches next[p]; crossing that
    // arc to its partner continues the boundary of the same region.
    std::vector<int> next(ne, -1);
    for (auto& [id, pts] : on_circle) {
        std::sort(pts.begin(), pts.end());
        for (size_t j = 0; j < pts.size(); ++j) next[pts[j].second] = pts[(j + 1) % pts.size()].second;
    }
    FillingReport rep;
    rep.cycles.assign(nc, 0);
    rep.expected.assign(nc, 0);
    std::vector<bool> seen(ne, false);
    for (int p = 0; p < ne; ++p) {
        if (seen[p]) continue;
        ++rep.cycles[comp_of[p]];
        for (int q = p; !seen[q]; q = next[q] ^ 1) seen[q] = true;
    }
    for (int c = 0; c < nc; ++c) {
        const auto& comp = comps[c];
        const int b = static_cast<int>(comp.closed_boundaries.size());
        const int k = static_cast<int>(comp.crowns.size());
        for (const auto& cb : comp.closed_boundaries)
            if (!on_circle.count(cb.id)) ++rep.cycles[c];
        for (const auto& cr : comp.crowns)
            if (!on_circle.count(cr.id)) ++rep.cycles[c];
        rep.expected[c] = 2 - 2 * comp.genus - b - k + arc_count[c];
        if (rep.cycles[c] != rep.expected[c]) rep.fills = false;
    }
    return rep;
}

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int cap) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(left, cap); part >= 1; --part) {
            cur.push_back(part);
            rec(left - part, part);
            cur.pop_back();
        }
    };
    if (n > 0) rec(n, n);
    return out;
}

namespace {

using Chord = std::pair<int, int>;

// Every triangulation of the polygon whose vertices are vs (in order), as
// lists of diagonals.
std::vector<std::vector<Chord>> triangulations(const std::vector<int>& vs) {
    const size_t n = vs.size();
    if (n < 4) return {{}};
    std::vector<std::vector<Chord>> out;
    for (size_t k = 1; k + 1 < n; ++k) {
        std::vector<int> left(vs.begin(), vs.begin() + static_cast<long>(k) + 1);
        std::vector<int> right(vs.begin() + static_cast<long>(k), vs.end());
        std::vector<Chord> own;
        if (k > 1) own.push_back({vs.front(), vs[k]});
        if (k + 2 < n) own.push_back({vs[k], vs.back()});
        for (const auto& l : triangulations(left))
            for (const auto& r : triangulations(right)) {
                std::vector<Chord> t = own;
                t.insert(t.end(), l.begin(), l.end());
                t.insert(t.end(), r.begin(), r.end());
                out.push_back(std::move(t));
            }
    }
    return out;
}

std::vector<int> alternating_edges(int n) {
    std::vector<int> e(n);
    for (int k = 0; k < n; ++k) e[k] = k % 2 == 0 ? 1 : -1;
    return e;
}

ArcEndpoint crown_end(int crown, int n, int edge, int other) {
    const int offset = ((other - edge) % n + n) % n;
    return {crown, edge, 1.0 - static_cast<double>(offset) / n};
}

// Polygon pieces, one per part. Orientable systems pick triangulations so the
// arcs joining two positive edges can be balanced against those joining two
// negative ones, then weigh them so the total residue vanishes.
WeightedArcSystem<Rational> polygon_cut(const std::vector<int>& kappa, bool orientable) {
    WeightedArcSystem<Rational> sys;
    sys.lambda_components.push_back({0, orientable});
    struct Placed {
        int crown, n, i, j, sign;
    };
    std::vector<Placed> placed;
    int squares = 0;
    for (size_t p = 0; p < kappa.size(); ++p) {
        const int n = kappa[p] + 2;
        const int id = static_cast<int>(p);
        CutSurfaceComponent comp;
        comp.crowns.push_back({id, n, 0, alternating_edges(n)});
        sys.components.push_back(comp);
        std::vector<int> vs(n);
        for (int k = 0; k < n; ++k) vs[k] = k;
        const auto all = triangulations(vs);
        const std::vector<Chord>* pick = &all.front();
        auto sign_of = [](const Chord& c) { return c.first % 2 == c.second % 2 ? (c.first % 2 == 0 ? 1 : -1) : 0; };
        if (orientable) {
            for (const auto& t : all) {
                bool pos = false, neg = false;
                for (const auto& c : t) {
                    pos |= sign_of(c) > 0;
                    neg |= sign_of(c) < 0;
                }
                const bool want_pos = n > 4 || squares % 2 == 0;
                const bool want_neg = n > 4 || squares % 2 == 1;
                if (pos == want_pos && neg == want_neg) {
                    pick = &t;
                    break;
                }
            }
            if (n == 4) ++squares;
        }
        for (const auto& c : *pick) placed.push_back({id, n, c.first, c.second, sign_of(c)});
    }
    int pos = 0, neg = 0;
    for (const auto& p : placed) {
        pos += p.sign > 0;
        neg += p.sign < 0;
    }
    int next_id = 0;
    for (const auto& p : placed) {
        Rational w(1 + next_id % 3, 2);
        if (orientable) w = p.sign > 0 ? Rational(neg) : p.sign < 0 ? Rational(pos) : Rational(1);
        sys.arcs.push_back({next_id++, crown_end(p.crown, p.n, p.i, p.j), crown_end(p.crown, p.n, p.j, p.i), w});
    }
    return sys;
}

struct Cuff {
    int curve;
    int side;
};

// Pieces given as (genus, cuffs); arcs found by a seeded search over endpoint
// placements until the system fills with the same number of endpoints on each
// circle of a piece. Weights then give every circle length 2.
WeightedArcSystem<Rational> multicurve_cut(const std::vector<std::pair<int, std::vector<Cuff>>>& pieces,
                                           int curves, std::uint32_t seed) {
    WeightedArcSystem<Rational> sys;
    for (int c = 0; c < curves; ++c) sys.lambda_components.push_back({c, true});
    int next_boundary = 0;
    for (const auto& [genus, cuffs] : pieces) {
        CutSurfaceComponent comp;
        comp.genus = genus;
        for (const Cuff& cf : cuffs) comp.closed_boundaries.push_back({next_boundary++, cf.curve, cf.side});
        sys.components.push_back(comp);
    }
    std::mt19937 rng(seed);
    int next_arc = 0;
    for (const auto& comp : sys.components) {
        const int b = static_cast<int>(comp.closed_boundaries.size());
        const int chi = 2 - 2 * comp.genus - b;
        const int max_arcs = teich_dim(comp);
        bool found = false;
        for (int count = std::max(1, b); count <= max_arcs && !found; ++count) {
            for (int attempt = 0; attempt < 4000 && !found; ++attempt) {
                std::vector<std::pair<ArcEndpoint, ArcEndpoint>> ends;
                std::set<int> touched;
                for (int k = 0; k < count; ++k) {
                    auto pick = [&] {
                        const int which = static_cast<int>(rng() % static_cast<std::uint32_t>(b));
                        touched.insert(which);
                        const double pos = (1.0 + static_cast<double>(rng() % 9973u)) / 9975.0;
                        return ArcEndpoint{comp.closed_boundaries[which].id, 0, pos};
                    };
                    ArcEndpoint e1 = pick();
                    ArcEndpoint e2 = pick();
                    ends.emplace_back(e1, e2);
                }
                if (static_cast<int>(touched.size()) != b) continue;
                std::map<int, int> per_circle;
                for (const auto& [e1, e2] : ends) {
                    ++per_circle[e1.boundary];
                    ++per_circle[e2.boundary];
                }
                const int share = per_circle.begin()->second;
                if (std::any_of(per_circle.begin(), per_circle.end(), [&](const auto& kv) { return kv.second != share; }))
                    continue;
                const FillingReport rep = filling_report({comp}, ends);
                if (rep.cycles[0] != chi + count || !rep.fills) continue;
                for (const auto& [e1, e2] : ends) sys.arcs.push_back({next_arc++, e1, e2, Rational(2, share)});
                found = true;
            }
        }
        if (!found) throw DomainError("no filling arc system found for a catalog piece");
    }
    return sys;
}

// Pants with seams between each pair of cuffs; all cuffs of length 2 give
// unit seams, so every curve has equal lengths on its two sides.
WeightedArcSystem<Rational> pants_cut(const std::vector<std::vector<Cuff>>& pants, int curves) {
    WeightedArcSystem<Rational> sys;
    for (int c = 0; c < curves; ++c) sys.lambda_components.push_back({c, true});
    int next_boundary = 0, next_arc = 0;
    for (const auto& cuffs : pants) {
        CutSurfaceComponent comp;
        std::vector<int> ids;
        for (const Cuff& cf : cuffs) {
            ids.push_back(next_boundary);
            comp.closed_boundaries.push_back({next_boundary++, cf.curve, cf.side});
        }
        sys.components.push_back(comp);
        for (int i = 0; i < 3; ++i) {
            const int j = (i + 1) % 3;
            sys.arcs.push_back({next_arc++, {ids[i], 0, 0.25}, {ids[j], 0, 0.75}, Rational(1)});
        }
    }
    return sys;
}

}  // namespace

std::vector<CatalogEntry> cut_catalog(int genus) {
    if (genus < 2) throw DomainError("catalog needs genus at least 2");
    std::vector<CatalogEntry> out;
    for (const auto& kappa : partitions(4 * genus - 4)) {
        std::string name = "g" + std::to_string(genus) + " polygons (";
        for (size_t i = 0; i < kappa.size(); ++i) name += (i ? "," : "") + std::to_string(kappa[i]);
        name += ")";
        out.push_back({name, polygon_cut(kappa, false)});
        if (std::all_of(kappa.begin(), kappa.end(), [](int k) { return k % 2 == 0; }))
            out.push_back({name + " orientable", polygon_cut(kappa, true)});
    }
    const std::string g = "g" + std::to_string(genus) + " ";
    if (genus == 2) {
        out.push_back({g + "pants theta", pants_cut({{{0, 1}, {1, 1}, {2, 1}}, {{0, -1}, {1, -1}, {2, -1}}}, 3)});
        out.push_back({g + "pants dumbbell", pants_cut({{{0, 1}, {0, -1}, {1, 1}}, {{2, 1}, {2, -1}, {1, -1}}}, 3)});
        out.push_back({g + "nonseparating curve", multicurve_cut({{1, {{0, 1}, {0, -1}}}}, 1, 11)});
        out.push_back({g + "separating curve", multicurve_cut({{1, {{0, 1}}}, {1, {{0, -1}}}}, 1, 12)});
        out.push_back({g + "two nonseparating curves",
                       multicurve_cut({{0, {{0, 1}, {0, -1}, {1, 1}, {1, -1}}}}, 2, 13)});
        out.push_back({g + "separating and nonseparating",
                       multicurve_cut({{1, {{0, 1}}}, {0, {{0, -1}, {1, 1}, {1, -1}}}}, 2, 14)});
    } else {
        // Handles (a_i+, a_i-, b_i+) joined by a chain of connector pants.
        std::vector<std::vector<Cuff>> chain;
        for (int i = 0; i < genus; ++i) chain.push_back({{i, 1}, {i, -1}, {genus + i, 1}});
        const int e0 = 2 * genus - 1;
        int curves = 2 * genus + genus - 3;
        if (genus == 3) {
            chain.push_back({{3, -1}, {4, -1}, {5, -1}});
        } else {
            chain.push_back({{genus, -1}, {genus + 1, -1}, {e0 + 1, 1}});
            for (int j = 2; j <= genus - 3; ++j) chain.push_back({{e0 + j - 1, -1}, {genus + j, -1}, {e0 + j, 1}});
            chain.push_back({{e0 + genus - 3, -1}, {2 * genus - 2, -1}, {2 * genus - 1, -1}});
        }
        out.push_back({g + "pants decomposition", pants_cut(chain, curves)});
        out.push_back({g + "nonseparating curve", multicurve_cut({{genus - 1, {{0, 1}, {0, -1}}}}, 1, 21)});
        out.push_back({g + "separating curve", multicurve_cut({{1, {{0, 1}}}, {genus - 1, {{0, -1}}}}, 1, 22)});
        out.push_back({g + "two curves", multicurve_cut({{genus - 2, {{0, 1}, {0, -1}, {1, 1}, {1, -1}}}}, 2, 23)});
    }
    return out;
}

}  // namespace shsh
