#pragma once

#include "shsh/error.hpp"
#include "shsh/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace shsh {

// A closed boundary circle of a cut piece. When it comes from a curve of the
// lamination, `lambda_component` names the curve and `side` (+1/-1) says which
// of its two sides this circle is.
struct ClosedBoundary {
    int id = -1;
    std::optional<int> lambda_component;
    int side = 1;
};

// Crown end with `spikes` cusps; edges[k] is +1 or -1 for the orientation of
// the k-th boundary leaf relative to the crown's boundary direction.
struct Crown {
    int id = -1;
    int spikes = 0;
    int lambda_component = -1;
    std::vector<int> edges;
};

struct CutSurfaceComponent {
    int genus = 0;
    std::vector<ClosedBoundary> closed_boundaries;
    std::vector<Crown> crowns;
};

struct LambdaComponent {
    int id = -1;
    bool orientable = false;
};

// Endpoint of an arc: a closed boundary (edge ignored) or edge `edge` of a
// crown. `position` orders endpoints along that boundary piece.
struct ArcEndpoint {
    int boundary = -1;
    int edge = 0;
    double position = 0.5;
};

template <class T>
struct WeightedArc {
    int id = -1;
    ArcEndpoint e1;
    ArcEndpoint e2;
    T weight{};
};

template <class T>
struct WeightedArcSystem {
    std::vector<CutSurfaceComponent> components;
    std::vector<WeightedArc<T>> arcs;
    std::vector<LambdaComponent> lambda_components;
};

struct BoundaryLookup {
    int component = -1;
    const ClosedBoundary* closed = nullptr;
    const Crown* crown = nullptr;
};

BoundaryLookup find_boundary(const std::vector<CutSurfaceComponent>& comps, int id);

// Structural checks: unique boundary ids, crown edge counts and signs, arc
// endpoints on declared boundaries of a single component, positive weights.
template <class T>
void validate(const WeightedArcSystem<T>& a);

template <class T>
T comb_length(const WeightedArcSystem<T>& a, int boundary_id) {
    const BoundaryLookup where = find_boundary(a.components, boundary_id);
    if (!where.closed) throw DomainError("no closed boundary with id " + std::to_string(boundary_id));
    T total(0);
    for (const auto& arc : a.arcs) {
        if (arc.e1.boundary == boundary_id) total += arc.weight;
        if (arc.e2.boundary == boundary_id) total += arc.weight;
    }
    return total;
}

template <class T>
T comb_residue(const WeightedArcSystem<T>& a, int crown_id) {
    const BoundaryLookup where = find_boundary(a.components, crown_id);
    if (!where.crown) throw DomainError("no crown with id " + std::to_string(crown_id));
    const Crown& c = *where.crown;
    if (c.spikes % 2 != 0)
        throw DomainError("crown " + std::to_string(crown_id) + " has an odd number of spikes and no residue");
    T total(0);
    for (const auto& arc : a.arcs) {
        for (const ArcEndpoint* e : {&arc.e1, &arc.e2}) {
            if (e->boundary != crown_id) continue;
            if (e->edge < 0 || e->edge >= static_cast<int>(c.edges.size()))
                throw StructuralError("arc " + std::to_string(arc.id) + " names a missing crown edge");
            total += c.edges[e->edge] > 0 ? arc.weight : -arc.weight;
        }
    }
    return total;
}

template <class T>
bool in_B(const WeightedArcSystem<T>& a, const std::vector<LambdaComponent>& lambda, double tol = 1e-9) {
    std::map<int, bool> orientable;
    for (const auto& l : lambda) orientable[l.id] = l.orientable;
    std::map<int, T> totals;
    for (const auto& comp : a.components) {
        for (const Crown& c : comp.crowns) {
            auto it = orientable.find(c.lambda_component);
            if (it == orientable.end())
                throw StructuralError("crown " + std::to_string(c.id) + " references unknown lamination component " +
                                      std::to_string(c.lambda_component));
            if (it->second) totals[c.lambda_component] += comb_residue(a, c.id);
        }
        for (const ClosedBoundary& b : comp.closed_boundaries) {
            if (!b.lambda_component) continue;
            auto it = orientable.find(*b.lambda_component);
            if (it == orientable.end())
                throw StructuralError("boundary " + std::to_string(b.id) + " references unknown lamination component " +
                                      std::to_string(*b.lambda_component));
            if (it->second) {
                const T len = comb_length(a, b.id);
                totals[*b.lambda_component] += b.side > 0 ? len : -len;
            }
        }
    }
    for (const auto& [id, total] : totals)
        if (!is_zero(total, tol)) return false;
    return true;
}

int teich_dim(const CutSurfaceComponent& c);
int area_coeff(const CutSurfaceComponent& c);

// Genus of the closed surface recovered from sum(area_coeff) = 4g - 4.
int ambient_genus(const std::vector<CutSurfaceComponent>& comps);

struct DimSummary {
    int genus = 0;
    int spikes = 0;
    int chi_lambda = 0;
    int orientable_components = 0;
    int dim_H = 0;
    int dim_B = 0;
    int dim_SH = 0;
};

DimSummary dim_summary(const std::vector<CutSurfaceComponent>& comps, const std::vector<LambdaComponent>& lambda);

template <class T>
DimSummary dim_summary(const WeightedArcSystem<T>& a, const std::vector<LambdaComponent>& lambda) {
    return dim_summary(a.components, lambda);
}

// Counts the boundary cycles of each cut piece after removing the arcs, and
// checks they bound disks: #cycles = chi(piece) - V + E.
struct FillingReport {
    bool fills = true;
    std::vector<int> cycles;
    std::vector<int> expected;
};

FillingReport filling_report(const std::vector<CutSurfaceComponent>& comps,
                             const std::vector<std::pair<ArcEndpoint, ArcEndpoint>>& arcs);

template <class T>
FillingReport filling_report(const WeightedArcSystem<T>& a) {
    std::vector<std::pair<ArcEndpoint, ArcEndpoint>> ends;
    for (const auto& arc : a.arcs) ends.emplace_back(arc.e1, arc.e2);
    return filling_report(a.components, ends);
}

template <class T>
bool fills(const WeightedArcSystem<T>& a) {
    return filling_report(a).fills;
}

struct CatalogEntry {
    std::string name;
    WeightedArcSystem<Rational> system;
};

// Cuts of the closed genus-g surface: one polygonal cut per partition of
// 4g - 4 (orientable variants for even partitions) and a few multicurve cuts.
std::vector<CatalogEntry> cut_catalog(int genus);

std::vector<std::vector<int>> partitions(int n);

}  // namespace shsh
