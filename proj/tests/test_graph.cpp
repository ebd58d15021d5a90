#include "helpers.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <set>

using namespace gpx;
using gpx::test::polygon;

namespace {

std::vector<Species> small_species() {
    return {Species::cc(), Species::aa(), Species::kk(), species_from_name("group:z2"),
            species_from_name("group:s3-inv")};
}

// Dart permutations that preserve the edges and carry every vertex onto a
// vertex of the same structure, counted by brute force.
std::uint64_t brute_automorphisms(const Species& sp, const Graph& g) {
    int nd = g.num_darts();
    std::vector<int> phi(nd);
    for (int i = 0; i < nd; ++i) phi[i] = i;
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (int d = 0; d < nd && ok; ++d) ok = phi[g.partner[d]] == g.partner[phi[d]];
        for (int v = 0; v < g.num_vertices() && ok; ++v) {
            Vertex img = g.verts[v];
            for (int& d : img.darts) d = phi[d];
            int w = g.vert_of[img.darts.empty() ? 0 : img.darts[0]];
            ok = !img.darts.empty() && g.verts[w].valence() == img.valence() &&
                 same_structure(sp, img, g.verts[w]);
        }
        if (ok) ++count;
    } while (std::next_permutation(phi.begin(), phi.end()));
    return count;
}

// Dimension of the connected rank-1 chain group of a group species by
// orbit counting on label necklaces. A k-gon is a label sequence read along
// the traversal; rotation acts with sign (-1)^(k-1), and reflection (vertex
// i -> -i, every edge reversed, labels starred) with (-1)^k times the sign of
// i -> -i. A necklace survives iff no symmetry fixing it has sign -1.
std::size_t necklace_dimension(const Group& g, int k) {
    std::set<std::vector<int>> seen;
    std::size_t dim = 0;
    std::vector<int> labels(k, 0);
    int reflection_sign = ((k - 1) / 2) % 2 ? -1 : 1;
    reflection_sign *= k % 2 ? -1 : 1;
    int rotation_sign = (k - 1) % 2 ? -1 : 1;
    std::function<void(int)> rec = [&](int i) {
        if (i < k) {
            for (int a = 0; a < g.order(); ++a) {
                labels[i] = a;
                rec(i + 1);
            }
            return;
        }
        if (seen.count(labels)) return;
        bool zero = false;
        for (int refl = 0; refl < 2; ++refl)
            for (int rot = 0; rot < k; ++rot) {
                std::vector<int> img(k);
                int sign = 1;
                for (int v = 0; v < k; ++v) {
                    int w = refl ? (k - v) % k : v;
                    img[(w + rot) % k] = refl ? g.star[labels[v]] : labels[v];
                }
                if (refl) sign *= reflection_sign;
                if (rot % 2) sign *= rotation_sign;
                seen.insert(img);
                if (img == labels && sign < 0) zero = true;
            }
        if (!zero) ++dim;
    };
    rec(0);
    return dim;
}

} // namespace

TEST(Graph, CanonicalClassIgnoresLabellingAndTracksOrientation) {
    std::mt19937_64 rng(7);
    for (const Species& sp : small_species())
        for (int k = 1; k <= 4; ++k)
            for (int r = 0; r <= 2; ++r)
                for (const auto& [key, zero] : connected_classes(sp, k, r)) {
                    Graph g = graph_from_key(sp, key);
                    SignedClass base = canonical_class(sp, g);
                    EXPECT_EQ(base.key, key);
                    EXPECT_EQ(base.zero, zero);
                    for (int trial = 0; trial < 4; ++trial) {
                        auto copy = test::random_relabel(g, rng);
                        SignedClass c = canonical_class(sp, copy.graph);
                        ASSERT_EQ(c.key, key) << sp.name();
                        EXPECT_EQ(c.zero, zero);
                        EXPECT_EQ(c.aut, base.aut);
                        if (!zero) {
                            EXPECT_EQ(c.sign, base.sign * copy.sign) << sp.name() << " " << key;
                        }
                    }
                }
}

TEST(Graph, AutomorphismsAgainstBruteForce) {
    for (const Species& sp : small_species())
        for (int k = 1; k <= 4; ++k)
            for (int r = 0; r <= 2; ++r)
                for (const auto& [key, zero] : connected_classes(sp, k, r)) {
                    Graph g = graph_from_key(sp, key);
                    if (g.num_darts() > 8) continue;
                    EXPECT_EQ(automorphism_order(sp, g), brute_automorphisms(sp, g)) << sp.name() << " " << key;
                }
}

TEST(Graph, PolygonsHaveDihedralSymmetry) {
    Species tr = species_from_name("group:trivial");
    for (int k = 1; k <= 8; ++k) {
        std::uint64_t want = k == 1 ? 2 : 2 * static_cast<std::uint64_t>(k);
        EXPECT_EQ(automorphism_order(tr, polygon(std::vector<int>(k, 0))), want) << k;
    }
}

TEST(Graph, GroupPolygonDimensionsMatchNecklaceCount) {
    for (const char* name : {"group:trivial", "group:z2", "group:z2-inv", "group:z3", "group:z3-inv", "group:s3-inv"}) {
        Species sp = species_from_name(name);
        int kmax = sp.group->order() > 3 ? 5 : 8;
        for (int k = 1; k <= kmax; ++k)
            EXPECT_EQ(enumerate_basis(sp, k, 1, Filter::CONNECTED).size(), necklace_dimension(*sp.group, k))
                << name << " k=" << k;
    }
}

TEST(Graph, TrivialPolygonsSurviveInDegreesThreeModFour) {
    Species tr = species_from_name("group:trivial");
    for (int k = 1; k <= 12; ++k)
        EXPECT_EQ(canonical_class(tr, polygon(std::vector<int>(k, 0))).zero, k % 4 != 3) << k;
}

TEST(Graph, LoopsKillCommutativeClasses) {
    for (int k = 1; k <= 4; ++k)
        for (int r = 0; r <= 2; ++r)
            for (const auto& [key, zero] : connected_classes(Species::cc(), k, r)) {
                Graph g = graph_from_key(Species::cc(), key);
                bool loop = false;
                for (int d = 0; d < g.num_darts(); ++d) loop = loop || g.is_loop(d);
                if (loop) {
                    EXPECT_TRUE(zero) << key;
                }
            }
}

TEST(Graph, EnumeratedBasesAreSortedNonzeroAndFiltered) {
    for (const Species& sp : small_species())
        for (Filter f : {Filter::FULL, Filter::CONNECTED, Filter::QGRAPH, Filter::BIVALENT})
            for (int k = 1; k <= 4; ++k)
                for (int r = 0; r <= 2; ++r) {
                    auto basis = enumerate_basis(sp, k, r, f);
                    EXPECT_TRUE(std::is_sorted(basis.begin(), basis.end()));
                    for (const auto& key : basis) {
                        Graph g = graph_from_key(sp, key);
                        EXPECT_EQ(g.num_vertices(), k);
                        EXPECT_EQ(g.num_edges(), k + r - 1);
                        EXPECT_TRUE(filter_accepts(sp, f, g));
                        EXPECT_FALSE(canonical_class(sp, g).zero);
                    }
                }
}

TEST(Graph, FullBasisIsTheFreeAlgebraOnConnectedClasses) {
    // Swapping two components with k vertices each costs (-1)^(k*k), so
    // full classes at (k, e) are counted by prod over connected classes of
    // (1 + x^k y^e) for odd k and 1 / (1 - x^k y^e) for even k.
    const int K = 5, E = 6;
    for (const Species& sp : {Species::cc(), species_from_name("group:z2")}) {
        std::vector<std::vector<long>> series(K + 1, std::vector<long>(E + 1, 0));
        series[0][0] = 1;
        for (int k = 1; k <= K; ++k)
            for (int e = k; e <= E; ++e) {
                long gens = static_cast<long>(enumerate_basis(sp, k, e - k + 1, Filter::CONNECTED).size());
                for (long g = 0; g < gens; ++g) {
                    if (k % 2) {
                        for (int a = K; a >= k; --a)
                            for (int b = E; b >= e; --b) series[a][b] += series[a - k][b - e];
                    } else {
                        for (int a = k; a <= K; ++a)
                            for (int b = e; b <= E; ++b) series[a][b] += series[a - k][b - e];
                    }
                }
            }
        for (int k = 1; k <= K; ++k)
            for (int e = k; e <= E; ++e)
                EXPECT_EQ(static_cast<long>(enumerate_basis(sp, k, e - k + 1, Filter::FULL).size()), series[k][e])
                    << sp.name() << " k=" << k << " e=" << e;
    }
}

TEST(Graph, ResourceLimitIsReported) {
    setenv("GRAPHOPLEX_MAX_CELLS", "10", 1);
    try {
        enumerate_basis(Species::aa(), 6, 3, Filter::FULL);
        ADD_FAILURE() << "expected ResourceLimit";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "ResourceLimit");
    }
    unsetenv("GRAPHOPLEX_MAX_CELLS");
}

TEST(Graph, MalformedInputIsRejected) {
    Graph g = polygon({0, 0, 0});
    g.partner[0] = 0;
    try {
        validate_graph(Species::cc(), g);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "MalformedGraph");
    }
}
