#include "support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace shsh;
using fixtures::DualFamily;
using fixtures::DtSample;
using fixtures::dt_family;

namespace {

using Q = Rational;

PantsChart chart_for(const PantsDecomposition& dec, const std::vector<Q>& lengths) {
    return pants_chart(dec, pants_shapes(dec, lengths));
}

}  // namespace

TEST(Pair, CurveMeasuresReadCuffLengths) {
    const std::vector<Q> lengths{3, 5, 4}, twists{1, -2, Q(1, 2)};
    const PantsChart chart = chart_for(theta_pants(), lengths);
    const auto sigma = pants_encode(chart, lengths, twists);
    for (int c = 0; c < 3; ++c) {
        std::vector<Q> m(3, Q(0));
        m[c] = Q(1);
        const Q p = pair(chart.track(), sigma, curve_measure(chart, m));
        EXPECT_GT(p, Q(0));
        EXPECT_EQ(p, lengths[c]);
    }
}

TEST(Pair, ZeroMeasureAndHomogeneity) {
    const std::vector<Q> lengths{2, 2, 2}, twists{0, 1, 2};
    const PantsChart chart = chart_for(theta_pants(), lengths);
    const auto sigma = pants_encode(chart, lengths, twists);
    const auto lambda = curve_measure(chart, std::vector<Q>{1, 2, 3});
    EXPECT_EQ(pair(chart.track(), sigma, WeightSystem<Q>::zeros(chart.track())), Q(0));
    EXPECT_EQ(pair(chart.track(), Q(7, 3) * sigma, lambda), Q(7, 3) * pair(chart.track(), sigma, lambda));
}

TEST(Pair, RejectsNonCocycles) {
    const std::vector<Q> lengths{2, 2, 2}, twists{0, 0, 0};
    const PantsChart chart = chart_for(theta_pants(), lengths);
    auto sigma = pants_encode(chart, lengths, twists);
    const auto lambda = curve_measure(chart, std::vector<Q>{1, 1, 1});
    sigma[chart.track().arc_branches().front()] = Q(-1);
    EXPECT_THROW(pair(chart.track(), sigma, lambda), Error);
    auto bad = lambda;
    bad[chart.track().arc_branches().front()] = Q(1);
    EXPECT_THROW(pair(chart.track(), pants_encode(chart, lengths, twists), bad), Error);
}

TEST(IsPositive, PantsCocyclesArePositiveForAnyTwist) {
    const std::vector<Q> lengths{3, 5, 4};
    const PantsChart chart = chart_for(theta_pants(), lengths);
    const auto gens = curve_generators<Q>(chart);
    EXPECT_EQ(gens.size(), 3u);
    for (int t = -3; t <= 3; ++t) {
        const auto sigma = pants_encode(chart, lengths, std::vector<Q>{Q(t), Q(-2 * t), Q(t, 3)});
        EXPECT_TRUE(is_positive(chart.track(), sigma, gens));
        EXPECT_TRUE(is_positive(chart.track(), Q(5, 2) * sigma, gens));
    }
}

TEST(IsPositive, ZeroPairingIsNotPositive) {
    const DualFamily fam(fixtures::corpus_surface<double>("L origami perturbed"));
    const auto a = fam.sample(1), b = fam.sample(2);
    ASSERT_TRUE(a && b);
    const auto& track = fam.track;
    const auto sigma = a->sigma;
    const auto lambda = a->lambda;
    const auto rho = b->lambda;
    const double omega = thurston_form(track, rho, lambda);
    ASSERT_GT(std::abs(omega), 1e-6);
    const double t = -pair(track, sigma, lambda) / omega;
    const auto edge = add_transverse(track, sigma, t * rho);
    EXPECT_NEAR(pair(track, edge, lambda), 0.0, 1e-12);
    EXPECT_TRUE(is_positive(track, sigma, {lambda}));
    EXPECT_FALSE(is_positive(track, edge, {lambda}));
}

TEST(AddTransverse, ZeroAndInverse) {
    const std::vector<Q> lengths{2, 3, 4}, twists{1, 1, -1};
    const PantsChart chart = chart_for(theta_pants(), lengths);
    const auto sigma = pants_encode(chart, lengths, twists);
    const auto rho = curve_measure(chart, std::vector<Q>{Q(1, 3), Q(-2), Q(5, 7)});
    EXPECT_EQ(add_transverse(chart.track(), sigma, WeightSystem<Q>::zeros(chart.track())), sigma);
    EXPECT_EQ(add_transverse(chart.track(), add_transverse(chart.track(), sigma, rho), Q(-1) * rho), sigma);
}

TEST(AddTransverse, RejectsArcSupport) {
    const std::vector<Q> lengths{2, 2, 2}, twists{0, 0, 0};
    const PantsChart chart = chart_for(theta_pants(), lengths);
    const auto sigma = pants_encode(chart, lengths, twists);
    auto rho = WeightSystem<Q>::zeros(chart.track());
    rho[chart.track().arc_branches().front()] = Q(1);
    EXPECT_THROW(add_transverse(chart.track(), sigma, rho), Error);
}

TEST(AddTransverse, PairingIsAffineWithThurstonSlope) {
    const DualFamily fam(fixtures::corpus_surface<double>("origami (2,2) perturbed"));
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    int used = 0;
    for (unsigned k = 0; k < 20; ++k) {
        const auto a = fam.sample(3 * k + 1), b = fam.sample(3 * k + 2), c = fam.sample(3 * k + 3);
        if (!a || !b || !c) continue;
        ++used;
        const double t = u(rng);
        const auto& mu = b->lambda;
        const auto& mu2 = c->lambda;
        const double lhs = pair(fam.track, add_transverse(fam.track, a->sigma, t * mu), mu2) -
                           pair(fam.track, a->sigma, mu2);
        EXPECT_NEAR(lhs, t * thurston_form(fam.track, mu, mu2), 1e-12 * (1 + std::abs(lhs)));
    }
    EXPECT_GE(used, 15);
}

TEST(BAction, IdentityTranslationAndDilation) {
    const std::vector<Q> lengths{3, 5, 4}, twists{2, 0, -1};
    const PantsChart chart = chart_for(theta_pants(), lengths);
    const auto& t = chart.track();
    const auto sigma = pants_encode(chart, lengths, twists);
    const auto lambda = curve_measure(chart, std::vector<Q>{1, 2, 1});
    const auto id = b_action(t, sigma, lambda, UpperTriangular<Q>{});
    EXPECT_EQ(id.sigma, sigma);
    EXPECT_EQ(id.lambda, lambda);
    const Q s(3, 4);
    const auto sheared = b_action(t, sigma, lambda, UpperTriangular<Q>{Q(1), s, Q(1)});
    EXPECT_EQ(sheared.sigma, sigma + s * lambda);
    EXPECT_EQ(sheared.lambda, lambda);
    const auto dil = b_action(t, sigma, lambda, UpperTriangular<Q>{Q(2), Q(0), Q(1)});
    EXPECT_EQ(dil.sigma, Q(2) * sigma);
    EXPECT_EQ(dil.lambda, lambda);
}

TEST(BAction, ComposesAsMatrices) {
    const std::vector<Q> lengths{2, 2, 2}, twists{1, 0, 3};
    const PantsChart chart = chart_for(theta_pants(), lengths);
    const auto& t = chart.track();
    const auto sigma = pants_encode(chart, lengths, twists);
    const auto lambda = curve_measure(chart, std::vector<Q>{1, 1, 1});
    const UpperTriangular<Q> m{Q(2), Q(1, 3), Q(3)}, n{Q(1, 2), Q(-1), Q(5)};
    const auto step = b_action(t, sigma, lambda, n);
    const auto twice = b_action(t, step.sigma, step.lambda, m);
    const auto once = b_action(t, sigma, lambda, m * n);
    EXPECT_EQ(twice.sigma, once.sigma);
    EXPECT_EQ(twice.lambda, once.lambda);
    EXPECT_THROW(b_action(t, sigma, lambda, UpperTriangular<Q>{Q(-1), Q(0), Q(1)}), DomainError);
}

TEST(PantsEncode, SeamWeightsFromCuffLengths) {
    EXPECT_EQ(classify_pants(Q(2), Q(2), Q(2)), (PantsShape{false, -1}));
    EXPECT_EQ(seam_weights(Q(2), Q(2), Q(2), PantsShape{false, -1}), (std::vector<Q>{1, 1, 1}));
    const PantsShape two = classify_pants(Q(1), Q(1), Q(4));
    EXPECT_EQ(two, (PantsShape{true, 2}));
    EXPECT_EQ(seam_weights(Q(1), Q(1), Q(4), two), (std::vector<Q>{1, 1, 1}));
    EXPECT_EQ(seam_weights(Q(3), Q(4), Q(5), PantsShape{false, -1}), (std::vector<Q>{1, 3, 2}));
    EXPECT_THROW(classify_pants(Q(1), Q(2), Q(3)), DomainError);
    EXPECT_THROW(classify_pants(Q(0), Q(2), Q(1)), DomainError);
}

TEST(PantsEncode, ChartMismatchIsChartError) {
    const PantsChart chart = chart_for(theta_pants(), {2, 2, 2});
    EXPECT_THROW(pants_encode(chart, std::vector<Q>{1, 1, 4}, std::vector<Q>{0, 0, 0}), ChartError);
}

TEST(PantsEncode, ArcWeightsArePositive) {
    for (const auto& dec : {theta_pants(), dumbbell_pants()}) {
        for (const std::vector<Q>& lengths : {std::vector<Q>{2, 2, 2}, std::vector<Q>{1, 4, 1}, std::vector<Q>{3, 5, 4}}) {
            std::vector<PantsShape> shapes;
            try {
                shapes = pants_shapes(dec, lengths);
            } catch (const DomainError&) {
                continue;
            }
            const PantsChart chart = pants_chart(dec, shapes);
            const auto sigma = pants_encode(chart, lengths, std::vector<Q>{0, 1, -1});
            EXPECT_NO_THROW(require_cocycle(chart.track(), sigma));
        }
    }
}

namespace {

DehnThurston roundtrip(const PantsDecomposition& dec, const DtSample& s) {
    std::vector<Q> m(s.m.begin(), s.m.end()), t(s.t.begin(), s.t.end());
    const PantsChart chart = chart_for(dec, m);
    return dt_decode(chart, pants_encode(chart, m, t));
}

}  // namespace

TEST(DehnThurston, SeededFamilyRoundTrips) {
    for (const auto& dec : {theta_pants(), dumbbell_pants()}) {
        for (const auto& s : dt_family(dec, 11, 50)) {
            const DehnThurston dt = roundtrip(dec, s);
            EXPECT_EQ(dt.intersections, s.m);
            EXPECT_EQ(dt.twists, s.t);
        }
    }
}

TEST(DehnThurston, ZeroTwistsAndTwistShift) {
    const PantsDecomposition dec = theta_pants();
    const DtSample flat{{2, 2, 2}, {0, 0, 0}};
    EXPECT_EQ(roundtrip(dec, flat).twists, (std::vector<std::int64_t>{0, 0, 0}));
    DtSample shifted = flat;
    shifted.t[1] += 1;
    EXPECT_EQ(roundtrip(dec, shifted).twists, (std::vector<std::int64_t>{0, 1, 0}));
}

TEST(DehnThurston, RejectsFractionalWeights) {
    const std::vector<Q> lengths{2, 2, 2};
    const PantsChart chart = chart_for(theta_pants(), lengths);
    EXPECT_THROW(dt_decode(chart, pants_encode(chart, lengths, std::vector<Q>{Q(1, 2), 0, 0})), DomainError);
}

namespace {

WeightSystem<Q> exact(const WeightSystem<std::int64_t>& w) {
    return WeightSystem<Q>(w.track_id, std::vector<Q>(w.w.begin(), w.w.end()));
}

struct LatticeChart {
    PantsChart chart = chart_for(theta_pants(), {2, 2, 2});
    WeightSystem<std::int64_t> lambda = curve_measure(chart, std::vector<std::int64_t>{1, 1, 1});
};

}  // namespace

TEST(IntegerPoints, ZeroBoundIsEmpty) {
    const LatticeChart c;
    EXPECT_TRUE(integer_points(c.chart.track(), c.lambda, 0).empty());
    EXPECT_EQ(count_integer_points(c.chart, c.lambda, 0), 0);
    EXPECT_THROW(integer_points(c.chart.track(), c.lambda, -1), DomainError);
}

TEST(IntegerPoints, PointsAreIntegralCocyclesInTheRegion) {
    const LatticeChart c;
    const auto& t = c.chart.track();
    const auto pts = integer_points(t, c.lambda, 6);
    ASSERT_FALSE(pts.empty());
    for (const auto& p : pts) {
        EXPECT_TRUE(check_switch_conditions(t, p));
        for (int b : t.arc_branches()) EXPECT_GE(p[b], 1);
        EXPECT_LE(pair(t, exact(p), exact(c.lambda)), Q(6));
    }
}

TEST(IntegerPoints, DoublingStaysInTheDoubledRegion) {
    const LatticeChart c;
    const auto& t = c.chart.track();
    const auto coeffs = pairing_coefficients(t, c.lambda);
    Rational m(0);
    for (const auto& x : coeffs)
        if (x > Rational(0) && (m == Rational(0) || x < m)) m = x;
    for (const auto& p : integer_points(t, c.lambda, 6)) {
        const auto q = std::int64_t{2} * p;
        EXPECT_TRUE(check_switch_conditions(t, q));
        EXPECT_LE(pair(t, exact(q), exact(c.lambda)), Q(12));
        for (size_t b = 0; b < q.size(); ++b) EXPECT_LE(Rational(std::abs(q[b])) * m, Rational(12));
    }
}

TEST(IntegerPoints, ClosedFormMatchesEnumeration) {
    const LatticeChart c;
    for (std::int64_t r : {2, 4, 6, 8})
        EXPECT_EQ(count_integer_points(c.chart, c.lambda, r), count_integer_points(c.chart.track(), c.lambda, r)) << r;
    EXPECT_EQ(count_integer_points(c.chart, c.lambda, 8), 12195);
}

TEST(IntegerPoints, CountGrowthMatchesChartDimension) {
    const LatticeChart c;
    const double c32 = static_cast<double>(count_integer_points(c.chart, c.lambda, 32));
    const double c64 = static_cast<double>(count_integer_points(c.chart, c.lambda, 64));
    EXPECT_NEAR(std::log2(c64 / c32), 6.0, 0.2);
}
