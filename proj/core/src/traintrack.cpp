#include "shsh/traintrack.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

namespace shsh {

int Switch::half(Slot s) const {
    switch (s) {
        case Slot::large: return large;
        case Slot::small_left: return small_left;
        case Slot::small_right: return small_right;
    }
    return -1;
}

TrainTrack::TrainTrack(int genus, std::vector<Switch> switches, std::vector<Branch> branches, std::string id)
    : genus_(genus), id_(std::move(id)), switches_(std::move(switches)), branches_(std::move(branches)) {
    if (genus_ < 0) throw StructuralError("genus must be nonnegative");
    const int nh = num_half_branches();
    half_switch_.assign(nh, -1);
    half_slot_.assign(nh, Slot::large);
    half_branch_.assign(nh, -1);
    for (int s = 0; s < num_switches(); ++s) {
        for (Slot slot : {Slot::large, Slot::small_left, Slot::small_right}) {
            const int h = switches_[s].half(slot);
            if (h < 0 || h >= nh)
                throw StructuralError("switch " + std::to_string(s) + " names half-branch " + std::to_string(h) +
                                      " outside 0.." + std::to_string(nh - 1));
            if (half_switch_[h] != -1)
                throw StructuralError("half-branch " + std::to_string(h) + " sits at two switch slots");
            half_switch_[h] = s;
            half_slot_[h] = slot;
        }
    }
    for (int b = 0; b < num_branches(); ++b) {
        const Branch& br = branches_[b];
        if (br.half_a < 0 && br.half_b < 0) continue;
        for (int h : {br.half_a, br.half_b}) {
            if (h < 0 || h >= nh)
                throw StructuralError("branch " + std::to_string(b) + " names half-branch " + std::to_string(h));
            if (half_branch_[h] != -1)
                throw StructuralError("half-branch " + std::to_string(h) + " belongs to two branches");
            half_branch_[h] = b;
        }
    }
    for (int h = 0; h < nh; ++h)
        if (half_branch_[h] == -1) throw StructuralError("half-branch " + std::to_string(h) + " has no branch");
}

int TrainTrack::num_loops() const {
    return static_cast<int>(std::count_if(branches_.begin(), branches_.end(), [](const Branch& b) { return b.is_loop(); }));
}

int TrainTrack::opposite(int half) const {
    const Branch& b = branches_[half_branch_[half]];
    return b.half_a == half ? b.half_b : b.half_a;
}

int TrainTrack::ccw_next(int half) const {
    const Switch& s = switches_[half_switch_[half]];
    switch (half_slot_[half]) {
        case Slot::large: return s.small_right;
        case Slot::small_right: return s.small_left;
        case Slot::small_left: return s.large;
    }
    return -1;
}

std::vector<int> TrainTrack::arc_branches() const {
    std::vector<int> out;
    for (int b = 0; b < num_branches(); ++b)
        if (branches_[b].arc) out.push_back(b);
    return out;
}

TrainTrack TrainTrack::with_id(std::string id) const {
    TrainTrack t = *this;
    t.id_ = std::move(id);
    return t;
}

bool TrainTrack::same_structure(const TrainTrack& o) const {
    if (genus_ != o.genus_ || switches_.size() != o.switches_.size() || branches_.size() != o.branches_.size())
        return false;
    for (size_t i = 0; i < switches_.size(); ++i) {
        const Switch &a = switches_[i], &b = o.switches_[i];
        if (a.large != b.large || a.small_left != b.small_left || a.small_right != b.small_right) return false;
    }
    for (size_t i = 0; i < branches_.size(); ++i) {
        const Branch &a = branches_[i], &b = o.branches_[i];
        if (a.half_a != b.half_a || a.half_b != b.half_b || a.arc != b.arc) return false;
    }
    return true;
}

template <class T>
void require_on_track(const TrainTrack& track, const WeightSystem<T>& w) {
    if (w.track_id != track.id())
        throw StructuralError("weight system belongs to track '" + w.track_id + "', not '" + track.id() + "'");
    if (static_cast<int>(w.size()) != track.num_branches())
        throw StructuralError("weight system has " + std::to_string(w.size()) + " entries for " +
                              std::to_string(track.num_branches()) + " branches");
}

template <class T>
T switch_residual(const TrainTrack& track, const WeightSystem<T>& w, int s) {
    const Switch& sw = track.switches()[s];
    return w[track.branch_of(sw.large)] - w[track.branch_of(sw.small_left)] - w[track.branch_of(sw.small_right)];
}

template <class T>
bool check_switch_conditions(const TrainTrack& track, const WeightSystem<T>& w, double tol) {
    require_on_track(track, w);
    for (int s = 0; s < track.num_switches(); ++s)
        if (!is_zero(switch_residual(track, w, s), tol)) return false;
    return true;
}

template <class T>
T thurston_term(const TrainTrack& track, const WeightSystem<T>& sigma, const WeightSystem<T>& rho, int s) {
    const Switch& sw = track.switches()[s];
    const int r = track.branch_of(sw.small_right);
    const int l = track.branch_of(sw.small_left);
    return (sigma[r] * rho[l] - sigma[l] * rho[r]) / T(2);
}

template <class T>
T thurston_form(const TrainTrack& track, const WeightSystem<T>& sigma, const WeightSystem<T>& rho, double tol) {
    require_on_track(track, sigma);
    require_on_track(track, rho);
    for (int s = 0; s < track.num_switches(); ++s) {
        if (!is_zero(switch_residual(track, sigma, s), tol) || !is_zero(switch_residual(track, rho, s), tol))
            throw DomainError("switch condition fails at switch " + std::to_string(s));
    }
    for (int b : track.arc_branches())
        if (!is_zero(rho[b], tol))
            throw DomainError("second argument is nonzero on arc branch " + std::to_string(b));
    T total(0);
    for (int s = 0; s < track.num_switches(); ++s) total += thurston_term(track, sigma, rho, s);
    return total;
}

#define SHSH_INSTANTIATE_SWITCH(T)                                                                \
    template void require_on_track<T>(const TrainTrack&, const WeightSystem<T>&);                 \
    template T switch_residual<T>(const TrainTrack&, const WeightSystem<T>&, int);                \
    template bool check_switch_conditions<T>(const TrainTrack&, const WeightSystem<T>&, double);
#define SHSH_INSTANTIATE_FORM(T)                                                                  \
    template T thurston_term<T>(const TrainTrack&, const WeightSystem<T>&, const WeightSystem<T>&, int); \
    template T thurston_form<T>(const TrainTrack&, const WeightSystem<T>&, const WeightSystem<T>&, double);
SHSH_INSTANTIATE_SWITCH(double)
SHSH_INSTANTIATE_SWITCH(Complex)
SHSH_INSTANTIATE_SWITCH(Rational)
SHSH_INSTANTIATE_SWITCH(std::int64_t)
SHSH_INSTANTIATE_FORM(double)
SHSH_INSTANTIATE_FORM(Complex)
SHSH_INSTANTIATE_FORM(Rational)
#undef SHSH_INSTANTIATE_SWITCH
#undef SHSH_INSTANTIATE_FORM

int euler_characteristic(const TrainTrack& track) {
    return track.num_switches() - track.num_branches() + track.num_loops();
}

std::vector<Region> complementary_regions(const TrainTrack& track) {
    std::vector<Region> regions;
    const int nh = track.num_half_branches();
    std::vector<bool> seen(nh, false);
    for (int start = 0; start < nh; ++start) {
        if (seen[start]) continue;
        Region region;
        int h = start;
        while (!seen[h]) {
            seen[h] = true;
            const int b = track.branch_of(h);
            region.boundary.push_back({b, track.branches()[b].half_a == h});
            const int arrive = track.opposite(h);
            if (track.slot_of(arrive) == Slot::small_right) ++region.cusps;
            h = track.ccw_next(arrive);
        }
        regions.push_back(std::move(region));
    }
    for (int b = 0; b < track.num_branches(); ++b) {
        if (!track.branches()[b].is_loop()) continue;
        regions.push_back({{{b, true}}, 0});
        regions.push_back({{{b, false}}, 0});
    }
    return regions;
}

namespace {

struct PendingPoint {
    double position;
    int arc;
    int end;
    bool right_side;
};

int count_components(const TrainTrack& t) {
    std::vector<int> parent(t.num_switches());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int comps = t.num_switches();
    for (const Branch& b : t.branches()) {
        if (b.is_loop()) {
            ++comps;
            continue;
        }
        const int x = find(t.switch_of(b.half_a)), y = find(t.switch_of(b.half_b));
        if (x != y) {
            parent[x] = y;
            --comps;
        }
    }
    return comps;
}

}  // namespace

Smoothing smooth_with_arcs_detailed(const TrainTrack& track, const std::vector<ArcAttachment>& arcs) {
    const int nb = track.num_branches();
    std::vector<std::vector<PendingPoint>> on_branch(nb);
    for (int i = 0; i < static_cast<int>(arcs.size()); ++i) {
        for (int e = 0; e < 2; ++e) {
            const ArcEnd& end = e == 0 ? arcs[i].first : arcs[i].second;
            if (end.branch < 0 || end.branch >= nb)
                throw StructuralError("arc " + std::to_string(i) + " ends on unknown branch " + std::to_string(end.branch));
            if (!(end.position > 0.0 && end.position < 1.0))
                throw StructuralError("arc " + std::to_string(i) + " end position must lie in (0, 1)");
            on_branch[end.branch].push_back({end.position, i, e, end.right_side});
        }
    }

    std::vector<Switch> switches = track.switches();
    std::vector<Branch> branches;
    Smoothing out;
    out.pieces.resize(nb);
    out.points.resize(nb);
    std::vector<std::array<int, 2>> arc_halves(arcs.size(), {-1, -1});
    int next_half = track.num_half_branches();

    for (int b = 0; b < nb; ++b) {
        auto& pts = on_branch[b];
        std::sort(pts.begin(), pts.end(), [](const PendingPoint& x, const PendingPoint& y) { return x.position < y.position; });
        for (size_t j = 1; j < pts.size(); ++j)
            if (pts[j].position == pts[j - 1].position)
                throw StructuralError("two arc ends share a position on branch " + std::to_string(b));
        const Branch& orig = track.branches()[b];
        if (pts.empty()) {
            out.pieces[b].push_back(static_cast<int>(branches.size()));
            branches.push_back(orig);
            continue;
        }
        std::vector<int> back(pts.size()), fwd(pts.size());
        for (size_t j = 0; j < pts.size(); ++j) {
            const int h0 = next_half++, h1 = next_half++, h2 = next_half++;
            back[j] = h0;
            fwd[j] = h1;
            Switch sw;
            sw.small_right = h2;
            if (pts[j].right_side) {
                sw.large = h0;
                sw.small_left = h1;
            } else {
                sw.large = h1;
                sw.small_left = h0;
            }
            const int sid = static_cast<int>(switches.size());
            switches.push_back(sw);
            arc_halves[pts[j].arc][pts[j].end] = h2;
            out.points[b].push_back({pts[j].arc, pts[j].end, pts[j].right_side, sid});
        }
        auto add_piece = [&](int a, int z) {
            out.pieces[b].push_back(static_cast<int>(branches.size()));
            branches.push_back({a, z, orig.arc});
        };
        if (orig.is_loop()) {
            for (size_t j = 0; j + 1 < pts.size(); ++j) add_piece(fwd[j], back[j + 1]);
            add_piece(fwd.back(), back.front());
        } else {
            add_piece(orig.half_a, back.front());
            for (size_t j = 0; j + 1 < pts.size(); ++j) add_piece(fwd[j], back[j + 1]);
            add_piece(fwd.back(), orig.half_b);
        }
    }
    for (const auto& ah : arc_halves) {
        out.arc_branch.push_back(static_cast<int>(branches.size()));
        branches.push_back({ah[0], ah[1], true});
    }
    out.track = TrainTrack(track.genus(), std::move(switches), std::move(branches), track.id());
    if (arcs.empty()) return out;

    const auto regions = complementary_regions(out.track);
    std::ostringstream bad;
    for (size_t r = 0; r < regions.size(); ++r)
        if (regions[r].cusps < 3) bad << " region " << r << " has " << regions[r].cusps << " cusps;";
    if (!bad.str().empty()) throw StructuralError("smoothing leaves under-cusped regions:" + bad.str());
    if (out.track.num_loops() == 0 && count_components(out.track) == 1) {
        const int chi = out.track.num_switches() - out.track.num_branches() + static_cast<int>(regions.size());
        if (chi != 2 - 2 * track.genus())
            throw StructuralError("smoothing builds a surface of Euler characteristic " + std::to_string(chi) +
                                  ", expected " + std::to_string(2 - 2 * track.genus()));
    }
    return out;
}

TrainTrack smooth_with_arcs(const TrainTrack& track, const std::vector<ArcAttachment>& arcs) {
    return smooth_with_arcs_detailed(track, arcs).track;
}

TrainTrack delete_arcs(const TrainTrack& track) {
    const int ns = track.num_switches();
    std::vector<int> arc_halves(ns, 0);
    for (int s = 0; s < ns; ++s)
        for (Slot slot : {Slot::large, Slot::small_left, Slot::small_right})
            if (track.is_arc(track.branch_of(track.switches()[s].half(slot)))) ++arc_halves[s];
    std::vector<int> new_index(ns, -1);
    int kept = 0;
    for (int s = 0; s < ns; ++s) {
        if (arc_halves[s] > 1) throw DomainError("switch " + std::to_string(s) + " meets more than one arc branch");
        if (arc_halves[s] == 0) new_index[s] = kept++;
    }
    auto renumber = [&](int h) {
        const int s = track.switch_of(h);
        return 3 * new_index[s] + static_cast<int>(track.slot_of(h));
    };
    auto pass_through = [&](int h) {
        const Switch& sw = track.switches()[track.switch_of(h)];
        for (Slot slot : {Slot::large, Slot::small_left, Slot::small_right}) {
            const int o = sw.half(slot);
            if (o != h && !track.is_arc(track.branch_of(o))) return o;
        }
        return -1;
    };

    std::vector<Switch> switches(kept);
    for (int s = 0; s < ns; ++s) {
        if (new_index[s] < 0) continue;
        const int base = 3 * new_index[s];
        switches[new_index[s]] = {base, base + 1, base + 2};
    }
    std::vector<Branch> branches;
    std::vector<bool> used(track.num_half_branches(), false);
    for (int h = 0; h < track.num_half_branches(); ++h) {
        if (used[h] || new_index[track.switch_of(h)] < 0) continue;
        int cur = h;
        used[cur] = true;
        while (true) {
            const int o = track.opposite(cur);
            used[o] = true;
            if (new_index[track.switch_of(o)] >= 0) {
                branches.push_back({renumber(h), renumber(o), false});
                break;
            }
            cur = pass_through(o);
            used[cur] = true;
        }
    }
    for (int h = 0; h < track.num_half_branches(); ++h) {
        if (used[h] || track.is_arc(track.branch_of(h))) continue;
        int cur = h;
        while (!used[cur]) {
            used[cur] = true;
            const int o = track.opposite(cur);
            used[o] = true;
            cur = pass_through(o);
        }
        branches.push_back({-1, -1, false});
    }
    for (const Branch& b : track.branches())
        if (b.is_loop() && !b.arc) branches.push_back(b);
    return TrainTrack(track.genus(), std::move(switches), std::move(branches), track.id());
}

}  // namespace shsh
