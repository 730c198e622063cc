#include <gtest/gtest.h>

#include "cli_app.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace kncross;
using namespace fixtures;

namespace {

void expect_same_structure(const Drawing& a, const Drawing& b) {
    EXPECT_EQ(a.n(), b.n());
    EXPECT_EQ(a.crossing_count(), b.crossing_count());
    EXPECT_EQ(a.face_count(), b.face_count());
    EXPECT_TRUE(weak_iso_equal(rotation_system(a), rotation_system(b)));
    EXPECT_EQ(a.face_vertices(a.reference_face()), b.face_vertices(b.reference_face()));
    std::vector<VertexMask> fa, fb;
    for (int f = 0; f < a.face_count(); ++f) fa.push_back(a.face_vertices(f));
    for (int f = 0; f < b.face_count(); ++f) fb.push_back(b.face_vertices(f));
    std::sort(fa.begin(), fa.end());
    std::sort(fb.begin(), fb.end());
    EXPECT_EQ(fa, fb);
    EXPECT_EQ(k_edge_vector(a).counts, k_edge_vector(b).counts);
}

int parse_error_line(const std::string& text) {
    try {
        parse_drawing(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    return -1;
}

}  // namespace

TEST(Parse, PointsConvexK4) {
    const Drawing d = parse_drawing(
        "kncross v1\nformat points\nn 4\nv 0 0 0\nv 1 1/1 0\nv 2 1 1\nv 3 0/1 1 # top left\n");
    EXPECT_EQ(d.crossing_count(), 1);
}

TEST(Parse, TwopageAllTop) {
    std::string text = "kncross v1\nformat twopage\nn 4\norder 0 1 2 3\n";
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) text += "e " + std::to_string(u) + " " + std::to_string(v) + " T\n";
    EXPECT_EQ(parse_drawing(text).crossing_count(), 1);
}

TEST(Parse, MapPlanarK4) {
    const std::string text =
        "kncross v1\nformat map\nn 4\nc 0\n"
        "rot 0 : 1 3 2\nrot 1 : 2 3 0\nrot 2 : 0 3 1\nrot 3 : 2 0 1\n"
        "e 0 1 :\ne 0 2 :\ne 0 3 :\ne 1 2 :\ne 1 3 :\ne 2 3 :\nref 1 0\n";
    const Drawing d = parse_drawing(text);
    EXPECT_EQ(d.face_count(), 4);
    EXPECT_EQ(d.reference_face(), d.face_left_of(1, 0));
    // the reference is written as the smallest dart on its face
    const std::string canonical = text.substr(0, text.size() - 8) + "ref 0 2\n";
    EXPECT_EQ(serialize(d), canonical);
    EXPECT_EQ(serialize(parse_drawing(canonical)), canonical);
}

TEST(Parse, EdgeListedBackwards) {
    // "e 2 0 : 0" lists the path from 2; a single crossing reads the same
    std::string text = serialize(build_drawing(crossed_k4_map()));
    const auto pos = text.find("e 0 2 : 0");
    ASSERT_NE(pos, std::string::npos);
    text.replace(pos, 9, "e 2 0 : 0");
    EXPECT_EQ(parse_drawing(text).crossing_count(), 1);
}

TEST(Parse, Errors) {
    EXPECT_EQ(parse_error_line("kncross v2\n"), 1);
    EXPECT_EQ(parse_error_line("kncross v1\nformat blob\nn 4\n"), 2);
    EXPECT_EQ(parse_error_line("kncross v1\nformat points\nn 2\n"), 3);
    EXPECT_EQ(parse_error_line("kncross v1\nformat points\nn 3\nv 0 0 0\nv 0 1 1\nv 2 3 0\n"), 5);
    EXPECT_EQ(parse_error_line("kncross v1\nformat points\nn 3\nv 0 0 0\nv 1 1 x\nv 2 3 0\n"), 5);
    EXPECT_EQ(parse_error_line("kncross v1\nformat points\nn 3\nv 0 0 0\nv 1 1 1\n"), 5);
    EXPECT_EQ(parse_error_line("kncross v1\nformat points\nn 3\nv 0 0 0\nv 1 1 1\nv 2 5 0\nv 3 1 1\n"), 7);
    EXPECT_EQ(parse_error_line("\n# comment\nkncross v1\nformat map\nn 3\nc 1\nrot 0 1 2\n"), 7);
    EXPECT_EQ(parse_error_line("kncross v1\nformat twopage\nn 3\norder 0 1 1\n"), 4);
    EXPECT_THROW(parse_drawing("kncross v1\nformat points\nn 3\nv 0 0 0\nv 1 1 1\nv 2 2 2\n"), DegenerateInput);
    MapData bad = crossed_k4_map();
    bad.crossing_ccw[0] = false;
    std::string text = serialize(build_drawing(crossed_k4_map()));
    text.replace(text.find("x 0 : +"), 7, "x 0 : -");
    EXPECT_THROW(parse_drawing(text), DrawingError);
}

TEST(RoundTrip, AllFormatsOnGeneratedDrawings) {
    for (const auto& s : oracle::generated_corpus()) {
        const Drawing& d = s.drawing;
        const std::string natural = serialize(d);
        const DrawingFile back = parse_drawing_file(natural);
        EXPECT_EQ(back.format, natural_format(d)) << s.name;
        expect_same_structure(d, back.drawing);
        EXPECT_EQ(serialize(back.drawing), natural) << s.name;
        const std::string map = serialize(d, Format::Map);
        const Drawing m = parse_drawing(map);
        expect_same_structure(d, m);
        EXPECT_EQ(serialize(m, Format::Map), map) << s.name;
    }
}

TEST(RoundTrip, RandomDrawingsByteStable) {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const Drawing d = gen_random_points(7, seed);
        const std::string text = serialize(d);
        EXPECT_EQ(serialize(parse_drawing(text)), text);
        EXPECT_EQ(text, serialize(gen_random_points(7, seed)));
    }
}

TEST(Serialize, WrongFormatRejected) {
    EXPECT_THROW(serialize(gen_cylindrical(5), Format::Points), std::invalid_argument);
    EXPECT_THROW(serialize(gen_convex(5), Format::TwoPage), std::invalid_argument);
}

TEST(Witness, ParseExamples) {
    const WitnessFile b = parse_witness("kncross-witness v1\nbishell\nface 0 1\na: 0 1\nb: 3 2\n");
    EXPECT_EQ(b.kind, WitnessKind::Bishell);
    EXPECT_EQ(b.a, (std::vector<int>{0, 1}));
    EXPECT_EQ(b.b, (std::vector<int>{3, 2}));
    const Drawing d = gen_convex(5);
    const Witness w = resolve_witness(d, b);
    EXPECT_EQ(std::get<BishellWitness>(w).order(), 1);
    EXPECT_EQ(std::get<BishellWitness>(w).face, d.face_left_of(0, 1));

    const WitnessFile s = parse_witness("kncross-witness v1\nshell\nface 0 1\nv: 0 1 2\n");
    EXPECT_EQ(std::get<ShellWitness>(resolve_witness(d, s)).s(), 3);
}

TEST(Witness, ParseErrors) {
    EXPECT_THROW(parse_witness("kncross-witness v1\nbishell\nface 0 1\na: 0 0\nb: 3 2\n"), ParseError);
    EXPECT_THROW(parse_witness("kncross-witness v1\nbishell\nface 0 1\na: 0 1\nb: 3\n"), ParseError);
    EXPECT_THROW(parse_witness("kncross-witness v1\nshell\nface 0 1\nv:\n"), ParseError);
    EXPECT_THROW(parse_witness("kncross-witness v1\ntriple\n"), ParseError);
    EXPECT_THROW(parse_witness("kncross-witness v1\nshell\nv: 1\n"), ParseError);
    const Drawing d = gen_convex(5);
    EXPECT_THROW(resolve_witness(d, parse_witness("kncross-witness v1\nshell\nface 0 1\nv: 5\n")), MalformedWitness);
    EXPECT_THROW(resolve_witness(d, parse_witness("kncross-witness v1\nshell\nface 0 0\nv: 1\n")), MalformedWitness);
}

TEST(Witness, RoundTripThroughText) {
    const Drawing d = gen_cylindrical(8);
    const auto w = find_bishell_witness(d);
    ASSERT_TRUE(w);
    const std::string text = serialize_witness(d, *w);
    const Witness back = resolve_witness(d, parse_witness(text));
    EXPECT_EQ(std::get<BishellWitness>(back), *w);
    const auto s = find_shell_witness(d);
    ASSERT_TRUE(s);
    EXPECT_EQ(std::get<ShellWitness>(resolve_witness(d, parse_witness(serialize_witness(d, *s)))), *s);
}

TEST(Svg, Examples) {
    const std::string k5 = export_svg(gen_convex(5));
    auto count = [](const std::string& s, const std::string& needle) {
        int c = 0;
        for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++c;
        return c;
    };
    EXPECT_EQ(count(k5, "class=\"vertex\""), 5);
    EXPECT_EQ(count(k5, "class=\"edge\""), 10);
    EXPECT_EQ(count(k5, "class=\"crossing\""), 5);
    EXPECT_EQ(count(k5, "<text"), 5);
    const std::string cyl = export_svg(gen_cylindrical(6));
    EXPECT_EQ(count(cyl, "class=\"guide\""), 2);
    EXPECT_THROW(export_svg(parse_drawing(serialize(gen_convex(5), Format::Map))), NoGeometry);
    EXPECT_NO_THROW(export_svg(gen_twopage(single_page_spec(5))));
}

TEST(Samples, ParseAndVerify) {
    const std::string dir = KNCROSS_SAMPLES;
    auto load = [&](const std::string& name) { return parse_drawing(cli::read_file(dir + "/" + name)); };
    EXPECT_EQ(load("planar_k4.txt").crossing_count(), 0);
    EXPECT_EQ(load("crossed_k4.txt").crossing_count(), 1);
    EXPECT_EQ(load("convex_k5.txt").crossing_count(), 5);
    EXPECT_EQ(load("twopage_k5.txt").crossing_count(), 5);
    EXPECT_EQ(load("cylindrical_k6.txt").crossing_count(), 3);
    EXPECT_EQ(load("random_k7_seed3.txt").crossing_count(), 19);
    const Drawing k8 = load("convex_k8.txt");
    for (const char* w : {"convex_k8.shell", "convex_k8.bishell"}) {
        const Witness x = resolve_witness(k8, parse_witness(cli::read_file(dir + "/" + w)));
        const WitnessCheck ok = std::visit(
            [&](const auto& y) {
                if constexpr (std::is_same_v<std::decay_t<decltype(y)>, ShellWitness>)
                    return verify_shell_witness(k8, y);
                else
                    return verify_bishell_witness(k8, y);
            },
            x);
        EXPECT_TRUE(ok) << w << ": " << ok.violation;
    }
}
