#include "cli.hpp"
#include "shsh/io.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

using namespace shsh;
namespace fs = std::filesystem;

namespace {

struct Result {
    int code;
    std::string out, err;
};

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("shsh_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }

    Result run(std::vector<std::string> args) const {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return {code, out.str(), err.str()};
    }

    std::string surface(const std::string& corpus_name, const std::string& file) const {
        write_text(path(file), write_surface(fixtures::corpus_surface<Rational>(corpus_name)));
        return path(file);
    }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, ValidateReportsAreaAndStratum) {
    const auto r = run({"validate", surface("L origami (4)", "l.json")});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.out.find("area=3, stratum=(4)"), std::string::npos) << r.out;
    const auto h = run({"--exact", "validate", surface("origami (2,2)", "o.json")});
    EXPECT_NE(h.out.find("area=4, stratum=(2,2)"), std::string::npos) << h.out;
}

TEST_F(Cli, AreaAndStratum) {
    const std::string f = surface("half-translation (1,1,1,1)", "h.json");
    EXPECT_EQ(run({"--exact", "area", f}).out, "area=6\n");
    EXPECT_EQ(run({"stratum", f}).out, "stratum=(1,1,1,1), half-translation\n");
}

TEST_F(Cli, HorocycleThenWeightsTranslatesSigma) {
    const std::string f = surface("L origami (4)", "q.json");
    ASSERT_EQ(run({"--exact", "weights", f, "--prefix", path("a")}).code, cli::kOk);
    ASSERT_EQ(run({"--exact", "flow", f, "--horocycle", "1.0", "-o", path("h.json")}).code, cli::kOk);
    const auto w = run({"--exact", "weights", path("h.json"), "--prefix", path("b")});
    ASSERT_EQ(w.code, cli::kOk);
    EXPECT_EQ(w.out, "pair=3\narea=3\n");
    const TrainTrack track = read_track(read_text(path("a.track.json")));
    const auto sigma = read_weights<Rational>(read_text(path("a.sigma.json")), track);
    const auto lambda = read_weights<Rational>(read_text(path("a.lambda.json")), track);
    const auto moved = read_weights<Rational>(read_text(path("b.sigma.json")), track);
    EXPECT_EQ(moved, sigma + lambda);
}

TEST_F(Cli, FloatingHorocycleMatchesToTwelveDigits) {
    const std::string f = surface("origami (2,2) under (1,2;1,3)", "q.json");
    ASSERT_EQ(run({"weights", f, "--prefix", path("a")}).code, cli::kOk);
    ASSERT_EQ(run({"flow", f, "--horocycle", "0.37", "-o", path("h.json")}).code, cli::kOk);
    ASSERT_EQ(run({"weights", path("h.json"), "--prefix", path("b")}).code, cli::kOk);
    const TrainTrack track = read_track(read_text(path("a.track.json")));
    const auto sigma = read_weights<double>(read_text(path("a.sigma.json")), track);
    const auto lambda = read_weights<double>(read_text(path("a.lambda.json")), track);
    const auto moved = read_weights<double>(read_text(path("b.sigma.json")), track);
    EXPECT_LT(fixtures::max_gap(moved, sigma + 0.37 * lambda), 1e-10);
}

TEST_F(Cli, RebuildRoundTrip) {
    const std::string f = surface("half-translation (2,1,1)", "q.json");
    ASSERT_EQ(run({"--exact", "weights", f, "--prefix", path("a")}).code, cli::kOk);
    const auto r = run({"--exact", "rebuild", "--track", path("a.track.json"), "--sigma", path("a.sigma.json"),
                        "--lambda", path("a.lambda.json"), "-o", path("r.json")});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_EQ(read_surface<Rational>(read_text(path("r.json"))).periods(),
              fixtures::corpus_surface<Rational>("half-translation (2,1,1)").periods());
}

TEST_F(Cli, RebuildRejectsNegativeDeterminantNamingTheSwitch) {
    const std::string f = surface("L origami under (2,1;1,1)", "q.json");
    ASSERT_EQ(run({"--exact", "weights", f, "--prefix", path("a")}).code, cli::kOk);
    const TrainTrack track = read_track(read_text(path("a.track.json")));
    const auto sigma = read_weights<Rational>(read_text(path("a.sigma.json")), track);
    write_text(path("neg.json"), write_weights(Rational(-1) * sigma));
    const auto r = run({"--exact", "rebuild", "--track", path("a.track.json"), "--sigma", path("neg.json"), "--lambda",
                        path("a.lambda.json")});
    EXPECT_EQ(r.code, cli::kChart);
    EXPECT_NE(r.err.find("switch 0"), std::string::npos) << r.err;
}

TEST_F(Cli, RebuildRejectsNonpositiveArcs) {
    const std::string f = surface("L origami (4)", "q.json");
    ASSERT_EQ(run({"--exact", "weights", f, "--prefix", path("a")}).code, cli::kOk);
    const TrainTrack track = read_track(read_text(path("a.track.json")));
    const auto sigma = read_weights<Rational>(read_text(path("a.sigma.json")), track);
    write_text(path("neg.json"), write_weights(Rational(-1) * sigma));
    const auto r = run({"--exact", "rebuild", "--track", path("a.track.json"), "--sigma", path("neg.json"), "--lambda",
                        path("a.lambda.json")});
    EXPECT_EQ(r.code, cli::kChart);
}

TEST_F(Cli, SwitchViolationsAreValidationFailures) {
    const std::string f = surface("L origami (4)", "q.json");
    ASSERT_EQ(run({"--exact", "weights", f, "--prefix", path("a")}).code, cli::kOk);
    const TrainTrack track = read_track(read_text(path("a.track.json")));
    auto sigma = read_weights<Rational>(read_text(path("a.sigma.json")), track);
    sigma[0] += Rational(1, 2);
    write_text(path("bad.json"), write_weights(sigma, true));
    const auto v = run({"--exact", "validate", path("a.track.json"), "--weights", path("bad.json")});
    EXPECT_EQ(v.code, cli::kInvalid);
    EXPECT_NE(v.err.find("switch"), std::string::npos);
    EXPECT_EQ(run({"--exact", "validate", path("a.track.json"), "--weights", path("a.sigma.json")}).code, cli::kOk);
    const auto r = run({"--exact", "rebuild", "--track", path("a.track.json"), "--sigma", path("bad.json"), "--lambda",
                        path("a.lambda.json")});
    EXPECT_EQ(r.code, cli::kInvalid);
}

TEST_F(Cli, ToleranceLoosensTheSwitchCheck) {
    const std::string f = surface("L origami (4)", "q.json");
    ASSERT_EQ(run({"weights", f, "--prefix", path("a")}).code, cli::kOk);
    const TrainTrack track = read_track(read_text(path("a.track.json")));
    auto sigma = read_weights<double>(read_text(path("a.sigma.json")), track);
    sigma[0] += 1e-6;
    write_text(path("near.json"), write_weights(sigma, true));
    EXPECT_EQ(run({"validate", path("a.track.json"), "--weights", path("near.json")}).code, cli::kInvalid);
    EXPECT_EQ(run({"--tolerance", "1e-5", "validate", path("a.track.json"), "--weights", path("near.json")}).code,
              cli::kOk);
}

TEST_F(Cli, FlowOptions) {
    const std::string f = surface("L origami (4)", "q.json");
    const auto g = run({"flow", f, "--geodesic", "0.5"});
    EXPECT_EQ(g.code, cli::kOk);
    EXPECT_EQ(file_kind(g.out), "surface");
    EXPECT_EQ(run({"--exact", "flow", f, "--geodesic", "0.5"}).code, cli::kInvalid);
    EXPECT_EQ(run({"flow", f}).code, cli::kFormat);
    EXPECT_EQ(run({"flow", f, "--geodesic", "1", "--horocycle", "1"}).code, cli::kFormat);
    EXPECT_EQ(run({"flow", f, "--horocycle", "abc"}).code, cli::kFormat);
    ASSERT_EQ(run({"--exact", "weights", f, "--prefix", path("a")}).code, cli::kOk);
    const auto t = run({"--exact", "flow", f, "--tremor", path("a.lambda.json"), "-o", path("t.json")});
    EXPECT_EQ(t.code, cli::kOk) << t.err;
    const auto h = run({"--exact", "flow", f, "--horocycle", "1", "-o", path("h.json")});
    EXPECT_EQ(read_text(path("t.json")), read_text(path("h.json")));
}

TEST_F(Cli, OutputIsDeterministic) {
    const std::string f = surface("origami (2,2) under (1,2;1,3)", "q.json");
    const auto a = run({"flow", f, "--geodesic", "0.25"});
    const auto b = run({"flow", f, "--geodesic", "0.25"});
    EXPECT_EQ(a.out, b.out);
    ASSERT_EQ(run({"weights", f, "--prefix", path("x")}).code, cli::kOk);
    ASSERT_EQ(run({"weights", f, "--prefix", path("y")}).code, cli::kOk);
    EXPECT_EQ(read_text(path("x.sigma.json")), read_text(path("y.sigma.json")));
}

TEST_F(Cli, PantsAndDehnThurston) {
    const auto p = run({"pants", "--lengths", "2,2,2", "--twists", "0,1,-2", "--prefix", path("p"), "--geometry"});
    ASSERT_EQ(p.code, cli::kOk) << p.err;
    EXPECT_NE(p.out.find("seam weights (1,1,1)"), std::string::npos);
    EXPECT_NE(p.out.find("ok"), std::string::npos);
    const auto d = run({"dt", "--track", path("p.track.json"), "--sigma", path("p.sigma.json")});
    EXPECT_EQ(d.code, cli::kOk) << d.err;
    EXPECT_EQ(d.out, "intersections=(2,2,2)\ntwists=(0,1,-2)\n");
    const auto q = run({"pants", "--decomposition", "dumbbell", "--lengths", "1,4,1", "--twists", "3,0,1", "--prefix",
                        path("q")});
    ASSERT_EQ(q.code, cli::kOk) << q.err;
    EXPECT_NE(q.out.find("two-seam"), std::string::npos);
    EXPECT_EQ(run({"dt", "--decomposition", "dumbbell", "--track", path("q.track.json"), "--sigma",
                   path("q.sigma.json")})
                  .out,
              "intersections=(1,4,1)\ntwists=(3,0,1)\n");
    EXPECT_EQ(run({"pants", "--lengths", "1,2,3", "--twists", "0,0,0"}).code, cli::kInvalid);
    EXPECT_EQ(run({"pants", "--lengths", "1,2", "--twists", "0,0,0"}).code, cli::kFormat);
    EXPECT_EQ(run({"pants", "--decomposition", "chain", "--lengths", "1,1,1", "--twists", "0,0,0"}).code,
              cli::kFormat);
}

TEST_F(Cli, PantsWithoutPrefixPrintsSigma) {
    const auto p = run({"pants", "--lengths", "3,4,5", "--twists", "1,1,1"});
    ASSERT_EQ(p.code, cli::kOk);
    EXPECT_NE(p.out.find("\"kind\": \"weights\""), std::string::npos);
    EXPECT_NE(p.out.find("\"arc_positive\": true"), std::string::npos);
}

TEST_F(Cli, HexagonCheck) {
    const auto ok = run({"hexagon-check", "1", "2", "0.5", "1.5", "0.7", "2.2"});
    EXPECT_EQ(ok.code, cli::kOk);
    EXPECT_NE(ok.out.find("PASS"), std::string::npos);
    const auto spiked = run({"hexagon-check", "spike", "0.8", "spike", "spike", "1.9", "spike"});
    EXPECT_EQ(spiked.code, cli::kOk) << spiked.err;
    EXPECT_EQ(run({"hexagon-check", "1", "spike", "1", "1", "1", "1"}).code, cli::kInvalid);
    EXPECT_EQ(run({"hexagon-check", "1", "2", "3"}).code, cli::kFormat);
    EXPECT_EQ(run({"hexagon-check", "1", "-2", "3", "1", "2", "3"}).code, cli::kInvalid);
}

TEST_F(Cli, LatticeCountCsv) {
    const auto r = run({"lattice-count", "--from", "2", "--to", "8", "--points", path("pts.csv")});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_EQ(r.out.substr(0, 8), "R,count\n");
    EXPECT_NE(r.out.find("8,12195\n"), std::string::npos);
    const std::string pts = read_text(path("pts.csv"));
    EXPECT_EQ(static_cast<long>(std::count(pts.begin(), pts.end(), '\n')), 12195 + 1);
    EXPECT_EQ(run({"lattice-count", "--from", "8", "--to", "4"}).code, cli::kFormat);
}

TEST_F(Cli, DimsCatalogAndCutFiles) {
    const auto r = run({"dims", "--catalog", "2"});
    ASSERT_EQ(r.code, cli::kOk);
    EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), static_cast<long>(cut_catalog(2).size()));
    EXPECT_NE(r.out.find("g2 polygons (4): genus=2, spikes=6, chi_lambda=-3, dim_H=3, dim_B=3, dim_SH=6"),
              std::string::npos);
    write_text(path("cut.json"), write_cut(cut_catalog(3).front().system));
    const auto c = run({"dims", path("cut.json")});
    EXPECT_NE(c.out.find("dim_SH=12"), std::string::npos) << c.out;
    const auto v = run({"--exact", "validate", path("cut.json")});
    EXPECT_EQ(v.code, cli::kOk);
    EXPECT_NE(v.out.find("fills=yes"), std::string::npos);
    EXPECT_EQ(run({"dims"}).code, cli::kFormat);
}

TEST_F(Cli, MalformedInputsMapToFormatErrors) {
    write_text(path("broken.json"), "{ not json");
    const auto r = run({"area", path("broken.json")});
    EXPECT_EQ(r.code, cli::kFormat);
    EXPECT_TRUE(r.out.empty());
    EXPECT_EQ(run({"area", path("missing.json")}).code, cli::kFormat);
    write_text(path("v2.json"), "{\"format\": 2, \"kind\": \"surface\"}");
    EXPECT_EQ(run({"validate", path("v2.json")}).code, cli::kFormat);
    write_text(path("odd.json"), "{\"format\": 1, \"kind\": \"poem\"}");
    EXPECT_EQ(run({"validate", path("odd.json")}).code, cli::kFormat);
}

TEST_F(Cli, InvalidSurfacesAreValidationFailures) {
    write_text(path("open.json"),
               R"({"format": 1, "kind": "surface", "field": "rational", "triangles": [[0,1,2],[3,4,5]],
                   "pairs": [[0,3],[1,4],[2,5]], "periods": {"0": ["1","0"], "1": ["0","1"], "2": ["1","1"]}})");
    EXPECT_EQ(run({"--exact", "validate", path("open.json")}).code, cli::kInvalid);
}

TEST_F(Cli, UsageErrors) {
    EXPECT_EQ(run({}).code, cli::kFormat);
    EXPECT_EQ(run({"frobnicate"}).code, cli::kFormat);
    EXPECT_EQ(run({"area"}).code, cli::kFormat);
    EXPECT_EQ(run({"--tolerance", "-1", "area", "x"}).code, cli::kFormat);
    EXPECT_EQ(run({"--help"}).code, cli::kOk);
}
