#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace kncross;
using namespace fixtures;

TEST(Planarize, ConvexFourPointsCrossOnce) {
    const Drawing d = planarize_points(square());
    EXPECT_EQ(d.crossing_count(), 1);
    EXPECT_EQ(d.face_count(), 5);
}

TEST(Planarize, PointInsideTriangleIsPlanar) {
    const Drawing d = planarize_points(triangle_with_centre());
    EXPECT_EQ(d.crossing_count(), 0);
    EXPECT_EQ(d.face_count(), 4);
}

TEST(Planarize, RationalPentagon) {
    std::vector<Point> pts;
    for (Rational u : {Rational(-3), Rational(-1, 2), Rational(1, 3), Rational(2), Rational(7)})
        pts.push_back(circle_point(u));
    const Drawing d = planarize_points({pts});
    EXPECT_EQ(d.crossing_count(), oracle::crossings(pts));
    EXPECT_EQ(d.crossing_count(), 5);
    EXPECT_EQ(d.face_count(), 12);
}

TEST(Planarize, DegeneraciesRejected) {
    auto kind = [](std::vector<Point> pts) {
        try {
            planarize_points({std::move(pts)});
        } catch (const DegenerateInput& e) {
            return e.kind();
        }
        ADD_FAILURE() << "accepted degenerate input";
        return DegeneracyKind::Collinear;
    };
    EXPECT_EQ(kind({P(0, 0), P(1, 0), P(2, 0), P(0, 1)}), DegeneracyKind::Collinear);
    EXPECT_EQ(kind({P(0, 0), P(1, 0), P(0, 0), P(0, 1)}), DegeneracyKind::CoincidentPoints);
    // the three main diagonals of a regular hexagon-like set meet at the centre
    EXPECT_EQ(kind({P(2, 0), P(1, 2), P(-1, 2), P(-2, 0), P(-1, -2), P(1, -2)}),
              DegeneracyKind::ConcurrentSegments);
}

TEST(Planarize, DegenerateWitnessTriple) {
    try {
        planarize_points({{P(0, 0), P(5, 1), P(1, 1), P(2, 2)}});
        FAIL();
    } catch (const DegenerateInput& e) {
        EXPECT_EQ(e.witness(), (std::array<int, 3>{0, 2, 3}));
    }
}

TEST(Planarize, CrossingsMatchBruteForceOnRandomSets) {
    for (int n = 4; n <= 9; ++n)
        for (std::uint64_t seed = 1; seed <= 15; ++seed) {
            const auto cfg = random_point_configuration(n, seed);
            const Drawing d = planarize_points(cfg);
            EXPECT_EQ(d.crossing_count(), oracle::crossings(cfg.points));
            EXPECT_TRUE(is_good(d));
        }
}

TEST(Planarize, ReferenceIsUnboundedFace) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const auto cfg = random_point_configuration(8, seed);
        const Drawing d = planarize_points(cfg);
        // hull vertices are exactly the vertices on the reference face
        VertexMask hull = 0;
        for (int i = 0; i < 8; ++i)
            for (int j = 0; j < 8; ++j) {
                if (i == j) continue;
                bool all_left = true;
                for (int k = 0; k < 8 && all_left; ++k)
                    if (k != i && k != j && oracle::turn(cfg.points[i], cfg.points[j], cfg.points[k]) < 0)
                        all_left = false;
                if (all_left) hull |= bit(i) | bit(j);
            }
        EXPECT_EQ(d.face_vertices(d.reference_face()), hull) << seed;
    }
}
