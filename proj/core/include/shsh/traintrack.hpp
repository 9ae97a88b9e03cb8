#pragma once

#include "shsh/error.hpp"
#include "shsh/scalar.hpp"

#include <string>
#include <vector>

namespace shsh {

enum class Slot { large, small_left, small_right };

// Half-branch ids at one trivalent switch. Counterclockwise order around the
// switch is (large, small_right, small_left).
struct Switch {
    int large = -1;
    int small_left = -1;
    int small_right = -1;

    int half(Slot s) const;
};

// A branch joins two half-branches. A closed loop without switches has
// half_a == half_b == -1 and an arbitrary fixed direction.
struct Branch {
    int half_a = -1;
    int half_b = -1;
    bool arc = false;

    bool is_loop() const { return half_a < 0; }
};

// One side of a branch, walked from half_a to half_b when forward; the side
// seen is the one on the right of the walk.
struct BranchSide {
    int branch = -1;
    bool forward = true;

    bool operator==(const BranchSide&) const = default;
};

struct Region {
    std::vector<BranchSide> boundary;
    int cusps = 0;
};

class TrainTrack {
public:
    TrainTrack() = default;
    TrainTrack(int genus, std::vector<Switch> switches, std::vector<Branch> branches,
               std::string id = "track");

    int genus() const { return genus_; }
    const std::string& id() const { return id_; }
    const std::vector<Switch>& switches() const { return switches_; }
    const std::vector<Branch>& branches() const { return branches_; }
    int num_switches() const { return static_cast<int>(switches_.size()); }
    int num_branches() const { return static_cast<int>(branches_.size()); }
    int num_half_branches() const { return 3 * num_switches(); }
    int num_loops() const;

    int switch_of(int half) const { return half_switch_[half]; }
    Slot slot_of(int half) const { return half_slot_[half]; }
    int branch_of(int half) const { return half_branch_[half]; }
    // The half-branch at the other end of the branch through `half`.
    int opposite(int half) const;
    // Counterclockwise successor at the switch: large -> right -> left -> large.
    int ccw_next(int half) const;

    bool is_arc(int branch) const { return branches_[branch].arc; }
    std::vector<int> arc_branches() const;

    TrainTrack with_id(std::string id) const;

    bool same_structure(const TrainTrack& other) const;

private:
    int genus_ = 0;
    std::string id_;
    std::vector<Switch> switches_;
    std::vector<Branch> branches_;
    std::vector<int> half_switch_;
    std::vector<Slot> half_slot_;
    std::vector<int> half_branch_;
};

template <class T>
struct WeightSystem {
    std::string track_id;
    std::vector<T> w;

    WeightSystem() = default;
    WeightSystem(std::string id, std::vector<T> weights) : track_id(std::move(id)), w(std::move(weights)) {}
    static WeightSystem zeros(const TrainTrack& t) {
        return WeightSystem(t.id(), std::vector<T>(static_cast<size_t>(t.num_branches()), T(0)));
    }

    size_t size() const { return w.size(); }
    T& operator[](size_t b) { return w[b]; }
    const T& operator[](size_t b) const { return w[b]; }

    WeightSystem& operator+=(const WeightSystem& o) {
        require_same(o);
        for (size_t i = 0; i < w.size(); ++i) w[i] += o.w[i];
        return *this;
    }
    WeightSystem& operator-=(const WeightSystem& o) {
        require_same(o);
        for (size_t i = 0; i < w.size(); ++i) w[i] -= o.w[i];
        return *this;
    }
    WeightSystem& operator*=(const T& s) {
        for (auto& x : w) x *= s;
        return *this;
    }
    friend WeightSystem operator+(WeightSystem a, const WeightSystem& b) { return a += b; }
    friend WeightSystem operator-(WeightSystem a, const WeightSystem& b) { return a -= b; }
    friend WeightSystem operator*(const T& s, WeightSystem a) { return a *= s; }
    bool operator==(const WeightSystem&) const = default;

private:
    void require_same(const WeightSystem& o) const {
        if (o.track_id != track_id || o.w.size() != w.size())
            throw StructuralError("weight systems live on different tracks");
    }
};

inline constexpr double kDefaultSwitchTolerance = 1e-9;

// Throws StructuralError unless w is a weight system on this track.
template <class T>
void require_on_track(const TrainTrack& track, const WeightSystem<T>& w);

template <class T>
T switch_residual(const TrainTrack& track, const WeightSystem<T>& w, int s);

template <class T>
bool check_switch_conditions(const TrainTrack& track, const WeightSystem<T>& w,
                             double tol = kDefaultSwitchTolerance);

// One switch's contribution (1/2)[sigma(r) rho(l) - sigma(l) rho(r)].
template <class T>
T thurston_term(const TrainTrack& track, const WeightSystem<T>& sigma, const WeightSystem<T>& rho, int s);

template <class T>
T thurston_form(const TrainTrack& track, const WeightSystem<T>& sigma, const WeightSystem<T>& rho,
                double tol = kDefaultSwitchTolerance);

// #switches - #branches, with each switchless loop counted as a circle.
int euler_characteristic(const TrainTrack& track);

std::vector<Region> complementary_regions(const TrainTrack& track);

// A point on one side of a branch where an arc ends. `position` in (0, 1) is
// measured from the half_a end (or from the base point of a loop).
struct ArcEnd {
    int branch = -1;
    bool right_side = true;
    double position = 0.5;
};

struct ArcAttachment {
    ArcEnd first;
    ArcEnd second;
};

struct AttachmentPoint {
    int arc = -1;
    int end = 0;
    bool right_side = true;
    int switch_id = -1;
};

struct Smoothing {
    TrainTrack track;
    std::vector<int> arc_branch;
    // New branch ids covering each original branch, in walking order. For a
    // loop with k points the last piece runs from the last point to the first.
    std::vector<std::vector<int>> pieces;
    std::vector<std::vector<AttachmentPoint>> points;
};

Smoothing smooth_with_arcs_detailed(const TrainTrack& track, const std::vector<ArcAttachment>& arcs);
TrainTrack smooth_with_arcs(const TrainTrack& track, const std::vector<ArcAttachment>& arcs);

// Removes arc branches and merges the bivalent switches they leave behind.
TrainTrack delete_arcs(const TrainTrack& track);

}  // namespace shsh
