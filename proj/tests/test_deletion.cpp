#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "oracles.hpp"

using namespace kncross;
using namespace fixtures;

TEST(DeletionView, EmptyDeletionKeepsEveryFace) {
    const Drawing d = gen_convex(6);
    const DeletionView v(d);
    EXPECT_EQ(v.class_count(), d.face_count());
    for (int f = 0; f < d.face_count(); ++f) EXPECT_EQ(v.face_class(f), f);
}

TEST(DeletionView, ConvexK5MinusVertexMatchesConvexK4) {
    const Drawing d = gen_convex(5);
    EXPECT_EQ(oracle::compare_deletion(d, bit(0)), "");
    EXPECT_EQ(DeletionView(d, bit(0)).class_count(), 5);
}

TEST(DeletionView, TrianglesHaveTwoClasses) {
    for (const auto& s : oracle::generated_corpus()) {
        const Drawing& d = s.drawing;
        if (d.n() > 7) continue;
        for (int u = 0; u < d.n(); ++u)
            for (int v = u + 1; v < d.n(); ++v)
                for (int w = v + 1; w < d.n(); ++w) {
                    const DeletionView view(d, all_vertices(d.n()) & ~(bit(u) | bit(v) | bit(w)));
                    EXPECT_EQ(view.class_count(), 2) << s.name;
                }
    }
}

TEST(DeletionView, IncrementalEqualsOneShot) {
    const Drawing d = gen_random_points(8, 4);
    DeletionView step(d);
    step.remove_vertex(3);
    step = step.without(6);
    step.remove(bit(1));
    const DeletionView once(d, bit(1) | bit(3) | bit(6));
    for (int f = 0; f < d.face_count(); ++f) EXPECT_EQ(step.face_class(f), once.face_class(f));
    EXPECT_EQ(step.deleted(), once.deleted());
}

TEST(DeletionView, MatchesFreshReplanarization) {
    std::mt19937_64 rng(17);
    std::vector<Drawing> drawings;
    for (int n = 4; n <= 7; ++n) {
        drawings.push_back(gen_convex(n));
        drawings.push_back(gen_cylindrical(n));
        drawings.push_back(gen_twopage(single_page_spec(n)));
        drawings.push_back(gen_random_points(n, static_cast<std::uint64_t>(n) * 31));
    }
    for (const Drawing& d : drawings)
        for (int trial = 0; trial < 20; ++trial) {
            VertexMask del = static_cast<VertexMask>(rng()) & all_vertices(d.n());
            while (popcount(all_vertices(d.n()) & ~del) < 3) del &= del - 1;
            EXPECT_EQ(oracle::compare_deletion(d, del), "") << "n=" << d.n() << " mask=" << del;
        }
}

TEST(ReferenceClassVertices, Examples) {
    const Drawing k5 = gen_convex(5);
    EXPECT_EQ(reference_class_vertices(DeletionView(k5)), all_vertices(5));
    const Drawing k4 = build_drawing(planar_k4_map());
    EXPECT_EQ(reference_class_vertices(DeletionView(k4)), bit(0) | bit(1) | bit(2));
    const Drawing k6 = gen_convex(6);
    EXPECT_EQ(reference_class_vertices(DeletionView(k6, bit(0))), all_vertices(6) & ~bit(0));
}

TEST(ReferenceClassVertices, InnerVertexAppearsAfterHullVertexGoes) {
    const Drawing k4 = build_drawing(planar_k4_map());
    EXPECT_EQ(reference_class_vertices(DeletionView(k4, bit(0))), bit(1) | bit(2) | bit(3));
    // a lone survivor sits in the only face
    EXPECT_EQ(reference_class_vertices(DeletionView(k4, bit(0) | bit(1) | bit(2))), bit(3));
}

TEST(ReferenceClassVertices, AgreesWithMasksTable) {
    const Drawing d = gen_random_points(7, 12);
    for (VertexMask del : {0u, 1u, 6u, 40u, 65u}) {
        const DeletionView v(d, del);
        const auto masks = v.class_vertex_masks();
        for (int f = 0; f < d.face_count(); ++f) EXPECT_EQ(masks[f], v.class_vertices(f));
    }
}

TEST(MaskToVector, Lists) {
    EXPECT_EQ(mask_to_vector(0b10110), (std::vector<int>{1, 2, 4}));
    EXPECT_TRUE(mask_to_vector(0).empty());
}
