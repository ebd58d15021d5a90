#include "helpers.hpp"

#include "graphoplex/species.hpp"

#include <gtest/gtest.h>

using namespace gpx;
using gpx::test::vx;

namespace {

std::vector<int> iota_darts(int m) {
    std::vector<int> d(m);
    for (int i = 0; i < m; ++i) d[i] = i;
    return d;
}

long factorial(int m) { return m <= 1 ? 1 : m * factorial(m - 1); }
long double_factorial_odd(int m) { return m <= 1 ? 1 : m * double_factorial_odd(m - 2); }

} // namespace

TEST(Species, StructureCountsOnMDarts) {
    for (int m = 1; m <= 6; ++m) {
        // no univalent vertices
        EXPECT_EQ(list_structures(Species::cc(), iota_darts(m)).size(), m > 1 ? 1u : 0u) << m;
        EXPECT_EQ(static_cast<long>(list_structures(Species::aa(), iota_darts(m)).size()), m > 1 ? factorial(m - 1) : 0)
            << m;
        // perfect chord diagrams: (m-1)!! for even m, none for odd m
        long chords = m % 2 ? 0 : double_factorial_odd(m - 1);
        EXPECT_EQ(static_cast<long>(list_structures(Species::kk(), iota_darts(m)).size()), chords) << m;
    }
}

TEST(Species, GroupVerticesAreBivalent) {
    for (const char* name : {"group:trivial", "group:z2", "group:z3-inv", "group:s3-inv"}) {
        Species sp = species_from_name(name);
        EXPECT_EQ(static_cast<int>(list_structures(sp, {0, 1}).size()), sp.group->order()) << name;
        EXPECT_TRUE(list_structures(sp, {0, 1, 2}).empty()) << name;
    }
}

TEST(Species, AssociativeSpliceReadsInputsAroundTheGluedDarts) {
    // cyc(d1, x, y) glued to cyc(d2, z, w) is cyc(x, y, z, w)
    Vertex m = mate(Species::aa(), vx({10, 1, 2}), 10, vx({11, 3, 4}), 11);
    EXPECT_TRUE(same_structure(Species::aa(), m, vx({1, 2, 3, 4})));
    EXPECT_FALSE(same_structure(Species::aa(), m, vx({1, 3, 2, 4})));
}

TEST(Species, GroupMateMultipliesAlongTheReading) {
    Species s3 = species_from_name("group:s3-inv");
    const Group& g = *s3.group;
    for (int a = 0; a < g.order(); ++a)
        for (int b = 0; b < g.order(); ++b) {
            // x -a-> d1 glued to d2 -b-> y reads a*b from x to y
            Vertex m = mate(s3, vx({0, 10}, a), 10, vx({11, 1}, b), 11);
            EXPECT_TRUE(same_structure(s3, m, vx({0, 1}, g(a, b)))) << a << " " << b;
        }
}

TEST(Species, ReversedGroupReadingAppliesStar) {
    Species s3 = species_from_name("group:s3-inv");
    for (int a = 0; a < s3.group->order(); ++a)
        EXPECT_TRUE(same_structure(s3, vx({0, 1}, a), vx({1, 0}, s3.group->star[a])));
}

TEST(Species, FakeVertices) {
    EXPECT_TRUE(is_fake(Species::cc(), vx({0, 1})));
    EXPECT_FALSE(is_fake(Species::cc(), vx({0, 1, 2})));
    Species z2 = species_from_name("group:z2");
    EXPECT_TRUE(is_fake(z2, vx({0, 1}, z2.group->unit)));
    EXPECT_FALSE(is_fake(z2, vx({0, 1}, 1 - z2.group->unit)));
}

TEST(Species, SplitCounts) {
    for (int m = 2; m <= 6; ++m) {
        // unordered partitions of the darts into two nonempty sides
        EXPECT_EQ(static_cast<long>(ideal_expansions(Species::cc(), vx(iota_darts(m)), 100, 101).size()),
                  (1L << (m - 1)) - 1)
            << m;
        // a cyclic order is cut at two of its m gaps
        EXPECT_EQ(static_cast<long>(ideal_expansions(Species::aa(), vx(iota_darts(m)), 100, 101).size()),
                  m * (m - 1) / 2)
            << m;
    }
}

TEST(Species, GroupSplitsAreAllFactorizations) {
    for (const char* name : {"group:z2", "group:z3", "group:s3-inv"}) {
        Species sp = species_from_name(name);
        for (int g = 0; g < sp.group->order(); ++g)
            EXPECT_EQ(static_cast<int>(ideal_expansions(sp, vx({0, 1}, g), 100, 101).size()), sp.group->order());
    }
}

TEST(Species, KkHasNoIdealEdges) {
    try {
        ideal_expansions(Species::kk(), vx({0, 1, 2, 3}), 100, 101);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "NotSupported");
    }
}

TEST(Species, SplittingThenMatingRecoversTheVertex) {
    std::vector<Species> all = {Species::cc(), Species::aa(), Species::kk(), species_from_name("group:s3-inv")};
    for (const Species& sp : all)
        for (int m = 1; m <= 6; ++m)
            for (const Vertex& v : list_structures(sp, iota_darts(m)))
                for (const ExpansionSplit& s : enumeration_splits(sp, v, 100, 101)) {
                    Vertex back = mate(sp, s.a, 100, s.b, 101);
                    EXPECT_TRUE(same_structure(sp, back, v)) << sp.name() << " valence " << m;
                }
}

TEST(Species, MatingIsSymmetric) {
    for (const Species& sp : {Species::cc(), Species::aa(), Species::kk()})
        for (const Vertex& a : list_structures(sp, {0, 1, 2, 10}))
            for (const Vertex& b : list_structures(sp, {3, 4, 11, 5})) {
                Vertex ab = mate(sp, a, 10, b, 11), ba = mate(sp, b, 11, a, 10);
                EXPECT_TRUE(same_structure(sp, ab, ba)) << sp.name();
            }
}

TEST(Species, VertexIsomorphismCounts) {
    // |Aut| of a vertex: m! for sets, m for cycles
    for (int m = 1; m <= 5; ++m) {
        EXPECT_EQ(static_cast<long>(vertex_isomorphisms(Species::cc(), vx(iota_darts(m)), vx(iota_darts(m))).size()),
                  factorial(m));
        EXPECT_EQ(static_cast<int>(vertex_isomorphisms(Species::aa(), vx(iota_darts(m)), vx(iota_darts(m))).size()), m);
    }
}

TEST(Group, Validation) {
    EXPECT_TRUE(validate_group(cyclic_group(2, false)).empty());
    EXPECT_TRUE(validate_group(cyclic_group(5, true)).empty());
    EXPECT_FALSE(validate_group(symmetric_group3(false)).empty());
    EXPECT_TRUE(validate_group(symmetric_group3(true)).empty());

    Group broken = cyclic_group(3, false);
    broken.mul[1][1] = 1;
    EXPECT_FALSE(validate_group(broken).empty());
}

TEST(Group, JsonRoundTripAndRejection) {
    Group g = symmetric_group3(true);
    Group h = group_from_json(group_to_json(g));
    EXPECT_EQ(h.names, g.names);
    EXPECT_EQ(h.mul, g.mul);
    EXPECT_EQ(h.star, g.star);

    nlohmann::json j = group_to_json(g);
    j["star"] = nlohmann::json::array();
    for (int i = 0; i < g.order(); ++i) j["star"].push_back(i);
    try {
        group_from_json(j);
        FAIL() << "identity star on S3 must be rejected";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "InvalidGroup");
    }
}

TEST(Species, UnknownName) {
    try {
        species_from_name("group:nosuch");
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "UnknownSpecies");
    }
}
