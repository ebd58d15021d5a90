#include "helpers.hpp"

#include "graphoplex/complexes.hpp"
#include "graphoplex/verify.hpp"

#include <gtest/gtest.h>

using namespace gpx;
using gpx::test::polygon;

namespace {

// Every connected class with at most four vertices, zero ones included,
// in a few random orientations.
template <class F>
void for_small_graphs(const Species& sp, F body) {
    std::mt19937_64 rng(11);
    for (int k = 1; k <= 4; ++k)
        for (int r = 1; r <= 2; ++r)
            for (const auto& [key, zero] : connected_classes(sp, k, r)) {
                Graph g = graph_from_key(sp, key);
                body(g);
                for (int t = 0; t < 2; ++t) body(test::random_relabel(g, rng).graph);
            }
}

} // namespace

TEST(Complexes, ContractionAgreesWithRelabelingRule) {
    for (const Species& sp : {Species::cc(), Species::aa(), Species::kk(), species_from_name("group:s3-inv")}) {
        std::size_t checked = 0;
        for_small_graphs(sp, [&](const Graph& g) {
            for (int d = 0; d < g.num_darts(); ++d) {
                if (g.is_loop(d)) continue;
                Contracted a = contract_edge(sp, g, d), b = contract_edge_by_relabeling(sp, g, d);
                SignedClass ca = canonical_class(sp, a.graph), cb = canonical_class(sp, b.graph);
                ASSERT_EQ(ca.key, cb.key);
                if (!ca.zero) {
                    EXPECT_EQ(a.sign * ca.sign, b.sign * cb.sign) << sp.name();
                }
                ++checked;
            }
        });
        EXPECT_GT(checked, 0u);
    }
}

TEST(Complexes, ContractionOfEitherDartIsTheSame) {
    Species cc = Species::cc();
    for_small_graphs(cc, [&](const Graph& g) {
        for (int d = 0; d < g.num_darts(); ++d) {
            if (g.is_loop(d)) continue;
            ChainVector a, b;
            Contracted x = contract_edge(cc, g, d), y = contract_edge(cc, g, g.partner[d]);
            a.add_graph(cc, x.graph, x.sign);
            b.add_graph(cc, y.graph, y.sign);
            EXPECT_EQ(a, b);
        }
    });
}

TEST(Complexes, LoopContractionIsAnError) {
    Graph g = polygon({0});
    try {
        contract_edge(species_from_name("group:trivial"), g, 0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "LoopContraction");
    }
}

TEST(Complexes, QuasiEdgeErrors) {
    Species cc = Species::cc();
    Graph tri = polygon({0, 0, 0});
    try {
        contract_quasi_edge(cc, tri, 0, 1);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "IsActualEdge");
    }
    try {
        contract_quasi_edge(cc, tri, 0, 5); // both at vertex 0
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "QuasiLoop");
    }
}

TEST(Complexes, TrivialPolygonsAreCycles) {
    Species tr = species_from_name("group:trivial");
    for (int k = 2; k <= 12; ++k) {
        ChainVector c;
        c.add_graph(tr, polygon(std::vector<int>(k, 0)), 1);
        EXPECT_TRUE(boundary_E(tr, c).empty()) << k;
    }
}

TEST(Complexes, BoundariesPreserveRank) {
    for (const Species& sp : {Species::cc(), Species::aa(), species_from_name("group:z2")})
        for (int k = 2; k <= 5; ++k)
            for (int r = 1; r <= 3; ++r)
                for (const auto& key : enumerate_basis(sp, k, r, Filter::FULL)) {
                    for (const auto& term : {boundary_E(sp, ChainVector::of(key)), boundary_H(sp, ChainVector::of(key))})
                        for (const auto& [t, c] : term.terms()) {
                            Graph h = graph_from_key(sp, t);
                            EXPECT_EQ(h.num_vertices(), k - 1);
                            EXPECT_EQ(h.num_edges() - h.num_vertices() + 1, r);
                        }
                }
}

TEST(Complexes, SquaresVanish) {
    for (const Species& sp : {Species::cc(), Species::kk(), species_from_name("group:z2"), species_from_name("group:s3-inv")}) {
        Report r = verify_squares(sp, 5, 3);
        EXPECT_TRUE(r.pass) << r.to_json().dump();
        EXPECT_GT(r.checked, 0u);
    }
    Report aa = verify_squares(Species::aa(), 5, 2);
    EXPECT_TRUE(aa.pass) << aa.to_json().dump();
}

TEST(Complexes, CoboundarySquaresVanish) {
    for (const Species& sp : {Species::cc(), species_from_name("group:z2")})
        for (int k = 1; k <= 4; ++k)
            for (int e = k; e <= 5; ++e)
                for (const auto& key : pairing_basis(sp, k, e)) {
                    ChainVector once = coboundary_E(sp, ChainVector::of(key));
                    EXPECT_TRUE(coboundary_E(sp, once).empty()) << sp.name() << " " << key;
                }
}

TEST(Complexes, QGraphBoundaryStaysInQGraph) {
    Species cc = Species::cc();
    for (int k = 2; k <= 5; ++k)
        for (int r = 1; r <= 3; ++r)
            for (const auto& key : enumerate_basis(cc, k, r, Filter::QGRAPH)) {
                ChainVector b = boundary_E(cc, ChainVector::of(key), Filter::QGRAPH);
                for (const auto& [t, c] : b.terms()) EXPECT_TRUE(filter_accepts(cc, Filter::QGRAPH, graph_from_key(cc, t))) << t;
            }
}

TEST(Complexes, NumericBoundaryIsTheSymbolicOneEvaluated) {
    Species cc = Species::cc();
    for (int k = 2; k <= 5; ++k)
        for (const auto& key : enumerate_basis(cc, k, 2, Filter::FULL)) {
            PolyChain sym = boundary_N_symbolic(cc, ChainVector::of(key));
            for (long n : {1L, 3L}) {
                ChainVector num = boundary_N(cc, ChainVector::of(key), n), want;
                for (const auto& [t, p] : sym.terms()) want.add(t, p.eval(2 * n));
                EXPECT_EQ(num, want);
            }
        }
}

TEST(Complexes, MatrixColumnsAreBoundaries) {
    Species cc = Species::cc();
    auto src = enumerate_basis(cc, 4, 3, Filter::CONNECTED), dst = enumerate_basis(cc, 3, 3, Filter::CONNECTED);
    SparseMatrix m = boundary_matrix(cc, src, dst, BoundaryKind::E, Filter::CONNECTED, std::nullopt);
    EXPECT_EQ(m.num_cols(), static_cast<int>(src.size()));
    for (int j = 0; j < m.num_cols(); ++j) {
        ChainVector b = boundary_E(cc, ChainVector::of(src[j]), Filter::CONNECTED);
        for (int i = 0; i < m.num_rows(); ++i) {
            auto it = m.entries.find({i, j});
            Rational got = it == m.entries.end() ? Rational(0) : it->second.coeff(0);
            EXPECT_EQ(got, b.coeff(dst[i]));
        }
    }
}

TEST(Complexes, MissingTargetIsABasisMismatch) {
    Species cc = Species::cc();
    auto src = enumerate_basis(cc, 4, 3, Filter::CONNECTED);
    bool any = false;
    for (const auto& s : src) any = any || !boundary_E(cc, ChainVector::of(s)).empty();
    ASSERT_TRUE(any);
    try {
        boundary_matrix(cc, src, {}, BoundaryKind::E, Filter::CONNECTED, std::nullopt);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "BasisMismatch");
    }
}
