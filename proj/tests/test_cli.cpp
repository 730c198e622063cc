#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "cli_app.hpp"
#include "fixtures.hpp"

using namespace kncross;
namespace fs = std::filesystem;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("kncross_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    std::string path(const std::string& name) const { return (dir_ / name).string(); }
    std::string write(const std::string& name, const std::string& text) const {
        cli::write_file(path(name), text);
        return path(name);
    }

    fs::path dir_;
};

}  // namespace

TEST_F(Cli, AnalyzeConvexK5) {
    const auto f = write("k5.txt", serialize(gen_convex(5)));
    const CliRun r = run({"analyze", f});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "cr=5 H=1 E=[5,5] identity PASS");
}

TEST_F(Cli, AnalyzePlanarK4Map) {
    const auto f = write("k4.txt", serialize(build_drawing(fixtures::planar_k4_map())));
    const CliRun r = run({"analyze", f});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "cr=0 H=0 E=[3,3] identity PASS");
}

TEST_F(Cli, AnalyzeJsonMirrorsText) {
    const auto f = write("c7.txt", serialize(gen_cylindrical(7)));
    const CliRun r = run({"analyze", f, "--json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["cr"], 9);
    EXPECT_EQ(j["H"], 9);
    EXPECT_EQ(j["identity"], "PASS");
    EXPECT_EQ(j["k4"]["crossed"], 9);
    EXPECT_EQ(j["E"].size(), 3u);
}

TEST_F(Cli, AnalyzeErrors) {
    EXPECT_EQ(run({"analyze", write("bad.txt", "kncross v1\nformat points\n")}).code, 2);
    EXPECT_EQ(run({"analyze", path("missing.txt")}).code, 2);
    EXPECT_EQ(run({"analyze"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
}

TEST_F(Cli, AnalyzeNonGoodDrawingIsNegative) {
    MapData m;
    m.n = 3;
    m.edge_paths.assign(3, {});
    m.edge_paths[edge_index(3, 0, 1)] = {0};
    m.edge_paths[edge_index(3, 1, 2)] = {0};
    m.vertex_rotations = {{1, 2}, {2, 0}, {0, 1}};
    m.reference = {0, 1};
    for (bool ccw : {true, false}) {
        m.crossing_ccw = {ccw};
        try {
            const Drawing d = build_drawing(m);
            const CliRun r = run({"analyze", write("adj.txt", serialize(d))});
            EXPECT_EQ(r.code, 1);
            EXPECT_NE(r.out.find("AdjacentCross"), std::string::npos);
        } catch (const DrawingError&) {
        }
    }
}

TEST_F(Cli, CheckConvexK8) {
    const auto f = write("k8.txt", serialize(gen_convex(8)));
    const CliRun b = run({"check", f, "--mode", "bishell", "--witness-out", path("w.txt")});
    EXPECT_EQ(b.code, 0);
    const WitnessFile w = parse_witness(cli::read_file(path("w.txt")));
    EXPECT_EQ(w.kind, WitnessKind::Bishell);
    EXPECT_EQ(w.a.size(), 3u);
    EXPECT_EQ(run({"verify", f, "--witness", path("w.txt")}).code, 0);

    const CliRun s = run({"check", f, "--mode", "shell", "--s", "4"});
    EXPECT_EQ(s.code, 0);
    EXPECT_NE(s.out.find("v:"), std::string::npos);
    EXPECT_EQ(run({"check", f, "--mode", "shell", "--s", "9"}).code, 2);
    EXPECT_EQ(run({"check", f, "--mode", "bishell", "--s", "7"}).code, 2);
    EXPECT_EQ(run({"check", f, "--mode", "triple"}).code, 2);
    EXPECT_EQ(run({"check", f, "--mode", "shell", "--face", "0", "0"}).code, 2);
    EXPECT_EQ(run({"check", f, "--mode", "shell", "--face", "1", "0"}).code, 0);
}

TEST_F(Cli, CheckNegativeIsExitOne) {
    const Drawing d = gen_convex(7);
    int s = -1, face = -1;
    for (int f = 0; f < d.face_count() && s < 0; ++f)
        for (int k = 0; k <= d.n() - 2 && s < 0; ++k)
            if (d.face_anchor(f) && !check_bishellable(d, k, f)) s = k, face = f;
    ASSERT_GE(s, 0);
    const auto anchor = d.face_anchor(face);
    const auto f = write("k7.txt", serialize(d));
    const CliRun r = run({"check", f, "--mode", "bishell", "--s", std::to_string(s), "--face",
                          std::to_string(anchor->first), std::to_string(anchor->second)});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("not bishellable"), std::string::npos);
}

TEST_F(Cli, VerifyOutcomes) {
    const Drawing d = gen_convex(6);
    const auto f = write("k6.txt", serialize(d));
    auto w = check_bishellable(d, 1, d.reference_face());
    ASSERT_TRUE(w);
    EXPECT_EQ(run({"verify", f, "--witness", write("ok.txt", serialize_witness(d, *w))}).code, 0);

    BishellWitness bad = *w;
    bad.b = {w->a[0], w->b[0] == w->a[0] ? w->b[1] : w->b[0]};
    const CliRun r = run({"verify", f, "--witness", write("bad.txt", serialize_witness(d, bad))});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(r.out, "condition (3) violated at i=1\n");

    const auto n6 = write("n6.txt", "kncross-witness v1\nshell\nface 0 1\nv: 0 6\n");
    EXPECT_EQ(run({"verify", f, "--witness", n6}).code, 2);
    const auto garbage = write("g.txt", "kncross-witness v1\nshell\n");
    EXPECT_EQ(run({"verify", f, "--witness", garbage}).code, 2);
}

TEST_F(Cli, GenerateFamilies) {
    const CliRun c = run({"generate", "cylindrical", "--n", "11", "-o", path("c11.txt")});
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(c.out, "cr=100 H=100\n");
    EXPECT_EQ(parse_drawing(cli::read_file(path("c11.txt"))).crossing_count(), 100);

    const CliRun v = run({"generate", "convex", "--n", "6", "-o", path("v6.txt"), "--svg", path("v6.svg")});
    EXPECT_EQ(v.out, "cr=15 H=3\n");
    EXPECT_NE(cli::read_file(path("v6.svg")).find("<svg"), std::string::npos);

    EXPECT_EQ(run({"generate", "random", "--n", "5", "--seed", "7", "-o", path("r1.txt")}).code, 0);
    EXPECT_EQ(run({"generate", "random", "--n", "5", "--seed", "7", "-o", path("r2.txt")}).code, 0);
    EXPECT_EQ(cli::read_file(path("r1.txt")), cli::read_file(path("r2.txt")));

    EXPECT_EQ(run({"generate", "twopage", "--n", "5", "-o", path("t5.txt")}).out, "cr=5 H=1\n");
    std::string spec = cli::read_file(path("t5.txt"));
    spec.replace(spec.find("e 0 2 T"), 7, "e 0 2 B");
    const CliRun t = run({"generate", "twopage", "--spec", write("spec.txt", spec), "-o", path("t5b.txt")});
    EXPECT_EQ(t.code, 0);
    EXPECT_EQ(t.out, "cr=3 H=1\n");

    EXPECT_EQ(run({"generate", "convex", "-o", path("x.txt")}).code, 2);
    EXPECT_EQ(run({"generate", "convex", "--n", "40", "-o", path("x.txt")}).code, 2);
    EXPECT_EQ(run({"generate", "hexagonal", "--n", "5", "-o", path("x.txt")}).code, 2);
    EXPECT_EQ(run({"generate", "convex", "--n", "5"}).code, 2);
}

TEST_F(Cli, Hunt) {
    const CliRun opt = run({"hunt", "--n", "5", "--trials", "100", "--target", "optimal"});
    EXPECT_EQ(opt.code, 0);
    EXPECT_NE(opt.out.find("match trial="), std::string::npos);
    EXPECT_NE(opt.out.find("cr=1"), std::string::npos);
    const CliRun nb = run({"hunt", "--n", "4", "--trials", "50", "--target", "non-bishellable"});
    EXPECT_EQ(nb.code, 0);
    EXPECT_NE(nb.out.find("matches=0"), std::string::npos);
    const CliRun zero = run({"hunt", "--n", "6", "--trials", "0"});
    EXPECT_EQ(zero.code, 0);
    EXPECT_NE(zero.out.find("distinct=0 matches=0"), std::string::npos);
    EXPECT_EQ(run({"hunt", "--n", "6", "--target", "pretty"}).code, 2);
    EXPECT_EQ(run({"hunt", "--trials", "3"}).code, 2);
}

TEST_F(Cli, ExportSvg) {
    const auto f = write("k5.txt", serialize(gen_convex(5)));
    EXPECT_EQ(run({"export-svg", f, "-o", path("k5.svg")}).code, 0);
    EXPECT_NE(cli::read_file(path("k5.svg")).find("class=\"vertex\""), std::string::npos);
    const auto m = write("m.txt", serialize(gen_convex(5), Format::Map));
    const CliRun r = run({"export-svg", m, "-o", path("m.svg")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("no geometry"), std::string::npos);
}

TEST_F(Cli, Help) { EXPECT_EQ(run({"--help"}).code, 0); }
