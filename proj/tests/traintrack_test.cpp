#include "support.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace shsh;
using shsh::fixtures::annulus_track;
using shsh::fixtures::torus_track;

namespace {

WeightSystem<double> torus_weights(double large, double left, double right) {
    return WeightSystem<double>("torus", {large, left, right});
}

}  // namespace

TEST(TrainTrack, ConstructionIndexesHalfBranches) {
    const TrainTrack t = torus_track();
    EXPECT_EQ(t.num_switches(), 2);
    EXPECT_EQ(t.num_half_branches(), 6);
    EXPECT_EQ(t.switch_of(4), 1);
    EXPECT_EQ(t.slot_of(4), Slot::small_left);
    EXPECT_EQ(t.branch_of(5), 1);
    EXPECT_EQ(t.opposite(0), 3);
    EXPECT_EQ(t.ccw_next(0), 2);
    EXPECT_EQ(t.ccw_next(2), 1);
    EXPECT_EQ(t.ccw_next(1), 0);
}

TEST(TrainTrack, RejectsBrokenCombinatorics) {
    EXPECT_THROW(TrainTrack(1, {{0, 1, 2}, {3, 4, 5}}, {{0, 3}, {1, 5}}), StructuralError);
    EXPECT_THROW(TrainTrack(1, {{0, 1, 2}, {3, 4, 9}}, {{0, 3}, {1, 5}, {2, 4}}), StructuralError);
    EXPECT_THROW(TrainTrack(1, {{0, 1, 2}, {3, 4, 5}}, {{0, 3}, {1, 5}, {2, 5}}), StructuralError);
    EXPECT_THROW(TrainTrack(-1, {}, {}), StructuralError);
}

TEST(SwitchConditions, LargeEqualsSumOfSmall) {
    const TrainTrack t = torus_track();
    EXPECT_TRUE(check_switch_conditions(t, torus_weights(3, 1, 2)));
    EXPECT_FALSE(check_switch_conditions(t, torus_weights(3, 1, 1)));
    EXPECT_DOUBLE_EQ(switch_residual(t, torus_weights(3, 1, 1), 0), 1.0);
}

TEST(SwitchConditions, SignedShearAtSwitch) {
    // large s1, left -s2, right d with d = s1 + s2
    const TrainTrack t = torus_track();
    const double s1 = 1.75, s2 = 0.5;
    EXPECT_TRUE(check_switch_conditions(t, torus_weights(s1, -s2, s1 + s2)));
}

TEST(SwitchConditions, ToleranceAndExactness) {
    const TrainTrack t = torus_track();
    EXPECT_TRUE(check_switch_conditions(t, torus_weights(3 + 1e-12, 1, 2)));
    EXPECT_FALSE(check_switch_conditions(t, torus_weights(3 + 1e-6, 1, 2)));
    EXPECT_TRUE(check_switch_conditions(t, torus_weights(3 + 1e-6, 1, 2), 1e-5));
    const WeightSystem<Rational> exact("torus", {Rational(1, 3) + Rational(1, 6), Rational(1, 3), Rational(1, 6)});
    EXPECT_TRUE(check_switch_conditions(t, exact));
}

TEST(SwitchConditions, WrongTrackIsStructural) {
    const TrainTrack t = torus_track();
    EXPECT_THROW(check_switch_conditions(t, WeightSystem<double>("other", {3, 1, 2})), StructuralError);
    EXPECT_THROW(check_switch_conditions(t, WeightSystem<double>("torus", {3, 1})), StructuralError);
}

TEST(ThurstonForm, SingleSwitchDeterminant) {
    const TrainTrack t = torus_track();
    const WeightSystem<double> sigma("torus", {4, 1, 3});
    const WeightSystem<double> rho("torus", {6, 4, 2});
    EXPECT_DOUBLE_EQ(thurston_term(t, sigma, rho, 0), 0.5 * (3 * 4 - 1 * 2));
    EXPECT_DOUBLE_EQ(thurston_term(t, sigma, rho, 0), 5.0);
}

TEST(ThurstonForm, AntisymmetricAndBilinear) {
    const TrainTrack t = torus_track();
    const WeightSystem<double> sigma("torus", {4, 1, 3});
    const WeightSystem<double> rho("torus", {6, 4, 2});
    EXPECT_DOUBLE_EQ(thurston_form(t, sigma, sigma), 0.0);
    EXPECT_DOUBLE_EQ(thurston_form(t, sigma, rho), -thurston_form(t, rho, sigma));
    EXPECT_DOUBLE_EQ(thurston_form(t, 2.5 * sigma, rho), 2.5 * thurston_form(t, sigma, rho));
}

TEST(ThurstonForm, RejectsWeightsOffTheSwitchConditions) {
    const TrainTrack t = torus_track();
    EXPECT_THROW(thurston_form(t, torus_weights(3, 1, 1), torus_weights(3, 1, 2)), DomainError);
}

TEST(EulerCharacteristic, CountsSwitchesMinusBranches) {
    const TrainTrack t(0, {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}, {9, 10, 11}},
                       {{0, 3}, {1, 6}, {2, 9}, {4, 7}, {5, 10}, {8, 11}});
    EXPECT_EQ(euler_characteristic(t), -2);
    EXPECT_EQ(euler_characteristic(torus_track()), -1);
    EXPECT_EQ(euler_characteristic(annulus_track()), 0);
}

TEST(ComplementaryRegions, AnnulusHasTwoSmoothRegions) {
    const auto regions = complementary_regions(annulus_track());
    ASSERT_EQ(regions.size(), 2u);
    EXPECT_EQ(regions[0].cusps, 0);
    EXPECT_EQ(regions[1].cusps, 0);
}

TEST(ComplementaryRegions, FillingTrackHasOneHexagon) {
    // Arc-free dual track of a sheared L origami: chi = -3, one 6-cusped region.
    const TrainTrack t = dual_track(fixtures::corpus_surface<Rational>("L origami under (2,1;1,1)"));
    EXPECT_TRUE(t.arc_branches().empty());
    EXPECT_EQ(euler_characteristic(t), -3);
    const auto regions = complementary_regions(t);
    ASSERT_EQ(regions.size(), 1u);
    EXPECT_EQ(regions[0].cusps, 6);
    EXPECT_EQ(regions[0].cusps, -2 * euler_characteristic(t));
}

TEST(ComplementaryRegions, SquareTiledDualTrack) {
    const TrainTrack t = dual_track(fixtures::corpus_surface<Rational>("L origami (4)"));
    EXPECT_EQ(t.arc_branches().size(), 3u);
    EXPECT_EQ(euler_characteristic(t), -3);
    const auto regions = complementary_regions(t);
    ASSERT_EQ(regions.size(), 1u);
    EXPECT_EQ(regions[0].cusps, 6);
}

TEST(ComplementaryRegions, EveryBranchSideAppearsOnce) {
    const auto il = extract_Il(fixtures::corpus_surface<Rational>("origami (2,2)"));
    const auto regions = complementary_regions(il.track);
    std::vector<int> seen(2 * il.track.num_branches(), 0);
    for (const auto& r : regions)
        for (const auto& s : r.boundary) ++seen[2 * s.branch + (s.forward ? 0 : 1)];
    for (int x : seen) EXPECT_EQ(x, 1);
    int cusps = 0;
    for (const auto& r : regions) cusps += r.cusps;
    EXPECT_EQ(cusps, il.track.num_switches());
}

TEST(Smoothing, EmptyAttachmentListIsIdentity) {
    const TrainTrack t = torus_track();
    const TrainTrack s = smooth_with_arcs(t, {});
    EXPECT_TRUE(s.same_structure(t));
    EXPECT_EQ(s.id(), t.id());
}

TEST(Smoothing, PantsSeamsDropEulerCharacteristicByArcCount) {
    const PantsDecomposition dec = theta_pants();
    const PantsChart chart = pants_chart(dec, {PantsShape{}, PantsShape{}});
    const TrainTrack base = delete_arcs(chart.track());
    const int arcs = static_cast<int>(chart.track().arc_branches().size());
    EXPECT_EQ(arcs, 6);
    EXPECT_EQ(chart.seams.size(), 6u);
    EXPECT_EQ(euler_characteristic(base), 0);
    EXPECT_EQ(euler_characteristic(chart.track()), euler_characteristic(base) - arcs);
    for (const auto& r : complementary_regions(chart.track())) EXPECT_GE(r.cusps, 3);
}

TEST(Smoothing, TwoSeamChartsAreAlsoSmooth) {
    for (const auto& dec : {theta_pants(), dumbbell_pants()}) {
        const PantsChart chart = pants_chart(dec, {PantsShape{true, 0}, PantsShape{true, 2}});
        EXPECT_EQ(euler_characteristic(chart.track()), -6);
        for (const auto& r : complementary_regions(chart.track())) EXPECT_GE(r.cusps, 3);
    }
}

TEST(Smoothing, RejectsUnderCuspedRegions) {
    // An arc with both ends on the same side of a lone curve cuts off a bigon.
    const ArcAttachment a{{0, true, 0.25}, {0, true, 0.75}};
    EXPECT_THROW(smooth_with_arcs(annulus_track(), {a}), StructuralError);
}

TEST(Smoothing, RejectsBadPositions) {
    const ArcAttachment a{{0, true, 0.0}, {0, false, 0.5}};
    EXPECT_THROW(smooth_with_arcs(annulus_track(), {a}), StructuralError);
    const ArcAttachment b{{3, true, 0.5}, {0, false, 0.5}};
    EXPECT_THROW(smooth_with_arcs(annulus_track(), {b}), StructuralError);
}

TEST(Smoothing, DeleteArcsUndoesSmoothing) {
    const PantsChart chart = pants_chart(dumbbell_pants(), {PantsShape{}, PantsShape{}});
    const TrainTrack base = delete_arcs(chart.track());
    EXPECT_TRUE(base.arc_branches().empty());
    EXPECT_EQ(base.num_switches(), 0);
    EXPECT_EQ(base.num_loops(), 3);
}
