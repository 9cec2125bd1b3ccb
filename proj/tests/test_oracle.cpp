#include "gaussdiag/oracle.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace gaussdiag;
using namespace gaussdiag::oracle;
using namespace testing_support;

namespace {

RotationSystem from_bits(std::size_t n, std::size_t bits) {
    // Vertex 0 is the most significant bit, matching the search order.
    RotationSystem r;
    for (std::size_t v = 0; v < n; ++v) r.handedness.push_back((bits >> (n - 1 - v)) & 1);
    return r;
}

}  // namespace

TEST(Map, DartsAndTwins) {
    auto d = diagram("1 2 3 1 2 3");
    auto m = build_map(d);
    EXPECT_EQ(m.vertex_count, 3u);
    EXPECT_EQ(m.edge_count, 6u);
    ASSERT_EQ(m.twin.size(), 12u);
    for (Dart h = 0; h < m.twin.size(); ++h) {
        EXPECT_NE(m.twin[h], h);
        EXPECT_EQ(m.twin[m.twin[h]], h);
    }
    EXPECT_EQ(m.twin[outgoing(5)], incoming(0));
    for (std::size_t v = 0; v < 3; ++v) {
        for (auto h : m.strands[v]) EXPECT_EQ(m.vertex_of[h], v);
    }
}

TEST(Map, EmptyDiagramThrows) { EXPECT_THROW(build_map(ChordDiagram{}), EmptyDiagram); }

TEST(Rotation, SuccessorIsAFourCycle) {
    auto d = diagram("1 2 1 2");
    auto m = build_map(d);
    for (std::size_t bits = 0; bits < 4; ++bits) {
        auto next = rotation_successor(m, from_bits(2, bits));
        for (Dart h = 0; h < next.size(); ++h) {
            EXPECT_EQ(m.vertex_of[next[h]], m.vertex_of[h]);
            EXPECT_EQ(next[next[next[next[h]]]], h);
            EXPECT_NE(next[h], h);
        }
    }
}

TEST(Oracle, KinkIsPlanar) {
    auto d = diagram("1 1");
    auto w = oracle_realizable(d);
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->faces.size(), 3u);
    EXPECT_EQ(w->euler_characteristic, 2);
}

TEST(Oracle, VirtualTrefoilHasNoPlanarRotation) {
    auto d = diagram("1 2 1 2");
    auto m = build_map(d);
    for (std::size_t bits = 0; bits < 4; ++bits) EXPECT_LT(count_faces(m, from_bits(2, bits)), 4u);
    EXPECT_FALSE(oracle_realizable(d).has_value());
}

TEST(Oracle, TrefoilIsPlanar) {
    auto d = diagram("1 2 3 1 2 3");
    auto w = oracle_realizable(d);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(verify_embedding(d, *w));
    EXPECT_EQ(w->faces.size(), 5u);
}

TEST(Oracle, EmptyDiagramIsPlanar) {
    auto w = oracle_realizable(ChordDiagram{});
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->euler_characteristic, 2);
}

TEST(Oracle, FacesPartitionTheDarts) {
    std::mt19937 rng(1);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t n = 1 + trial % 7;
        auto d = from_ints(random_word(n, rng));
        auto m = build_map(d);
        auto r = from_bits(n, static_cast<std::size_t>(rng()) % (std::size_t{1} << n));
        std::vector<int> seen(4 * n, 0);
        std::size_t total = 0;
        for (const auto& f : trace_faces(m, r)) {
            total += f.size();
            for (auto h : f) ++seen[h];
        }
        EXPECT_EQ(total, 4 * n);
        for (int s : seen) EXPECT_EQ(s, 1);
        EXPECT_EQ(trace_faces(m, r).size(), count_faces(m, r));
    }
}

TEST(Oracle, ReturnsLeastPlanarRotation) {
    std::mt19937 rng(2);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + trial % 6;
        auto d = from_ints(random_word(n, rng));
        auto m = build_map(d);
        std::optional<std::size_t> least;
        for (std::size_t bits = 0; bits < (std::size_t{1} << n) && !least; ++bits) {
            if (count_faces(m, from_bits(n, bits)) == n + 2) least = bits;
        }
        auto w = oracle_realizable(d);
        ASSERT_EQ(w.has_value(), least.has_value());
        if (w) {
            EXPECT_EQ(w->rotation.handedness, from_bits(n, *least).handedness);
        }
    }
}

TEST(Oracle, ThreadedSearchMatchesSequential) {
    std::mt19937 rng(4);
    for (int trial = 0; trial < 30; ++trial) {
        auto d = from_ints(random_word(7 + trial % 3, rng));
        auto a = oracle_realizable(d, 1);
        auto b = oracle_realizable(d, 4);
        ASSERT_EQ(a.has_value(), b.has_value());
        if (a) {
            EXPECT_EQ(a->rotation.handedness, b->rotation.handedness);
        }
    }
}

TEST(Oracle, VerifyRejectsTamperedWitness) {
    auto d = diagram("1 2 3 1 2 3");
    auto w = *oracle_realizable(d);
    w.rotation.handedness[0] = !w.rotation.handedness[0];
    // Flipping one vertex of a planar trefoil cannot stay planar with the same faces.
    EXPECT_FALSE(verify_embedding(d, w));
}
