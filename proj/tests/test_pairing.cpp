#include "helpers.hpp"

#include "graphoplex/pairing.hpp"
#include "graphoplex/verify.hpp"

#include <gtest/gtest.h>

using namespace gpx;

namespace {

// Dart bijections carrying each vertex of a onto a vertex of b with the same
// structure, by brute force; edges are ignored.
std::size_t brute_matchings(const Species& sp, const Graph& a, const Graph& b) {
    if (a.num_darts() != b.num_darts() || a.num_vertices() != b.num_vertices()) return 0;
    int nd = a.num_darts();
    std::vector<int> phi(nd);
    for (int i = 0; i < nd; ++i) phi[i] = i;
    std::size_t count = 0;
    do {
        bool ok = true;
        for (int v = 0; v < a.num_vertices() && ok; ++v) {
            Vertex img = a.verts[v];
            for (int& d : img.darts) d = phi[d];
            const Vertex& w = b.verts[b.vert_of[img.darts[0]]];
            ok = w.valence() == img.valence() && same_structure(sp, img, w);
        }
        if (ok) ++count;
    } while (std::next_permutation(phi.begin(), phi.end()));
    return count;
}

Poly leibniz(const std::vector<std::vector<Poly>>& m) {
    int n = static_cast<int>(m.size());
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    Poly det;
    do {
        Poly term(permutation_sign(p));
        for (int i = 0; i < n; ++i) term = term * m[i][p[i]];
        det += term;
    } while (std::next_permutation(p.begin(), p.end()));
    return det;
}

} // namespace

TEST(Pairing, DeterminantAgreesWithLeibniz) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + rng() % 5;
        std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
        for (auto& row : m)
            for (auto& x : row)
                for (int d = 0; d <= static_cast<int>(rng() % 4); ++d)
                    x += Poly::monomial(static_cast<long>(rng() % 9) - 4, d);
        EXPECT_EQ(determinant(m), leibniz(m)) << trial;
    }
}

TEST(Pairing, LeadingTermAgreesWithTheFullDeterminant) {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 1 + rng() % 5;
        std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
        for (auto& row : m)
            for (auto& x : row)
                for (int d = 0; d <= static_cast<int>(rng() % 3); ++d)
                    x += Poly::monomial(static_cast<long>(rng() % 5) - 2, d);
        // every third trial: duplicate a row's top part so the shortcut is singular
        if (trial % 3 == 0 && n > 1) {
            m[1] = m[0];
            m[1][0] += Poly(Rational(static_cast<long>(rng() % 3)));
        }
        Poly det = determinant(m);
        LeadingTerm lt = determinant_leading_term(m);
        EXPECT_EQ(lt.degree, det.degree()) << trial;
        EXPECT_EQ(lt.coeff, det.leading()) << trial;
    }
}

TEST(Pairing, MatchingCountsAgainstBruteForce) {
    for (const Species& sp : {Species::cc(), Species::aa(), species_from_name("group:z2")})
        for (int k = 1; k <= 4; ++k)
            for (int e = k; e <= 4; ++e) {
                auto basis = pairing_basis(sp, k, e);
                for (const auto& x : basis)
                    for (const auto& y : basis) {
                        Graph a = graph_from_key(sp, x), b = graph_from_key(sp, y);
                        EXPECT_EQ(matchings(sp, a, b).size(), brute_matchings(sp, a, b)) << sp.name() << " " << x << " / " << y;
                    }
            }
}

TEST(Pairing, SymmetricWithAutomorphismsOnTheDiagonal) {
    for (const Species& sp : {Species::cc(), Species::aa(), species_from_name("group:z2")})
        for (int k = 1; k <= 4; ++k)
            for (int e = k; e <= 5; ++e) {
                auto basis = pairing_basis(sp, k, e);
                for (const auto& x : basis) {
                    Poly d = pairing_M(sp, x, x);
                    EXPECT_EQ(d.degree(), e) << x;
                    EXPECT_EQ(d.leading(), Rational(static_cast<long>(canonical_class(sp, graph_from_key(sp, x)).aut)));
                    for (const auto& y : basis) {
                        EXPECT_EQ(pairing_M(sp, x, y), pairing_M(sp, y, x));
                        if (x != y) {
                            EXPECT_LT(pairing_M(sp, x, y).degree(), e);
                        }
                    }
                }
            }
}

TEST(Pairing, OrientationFlipNegatesThePairing) {
    Species z2 = species_from_name("group:z2");
    std::mt19937_64 rng(9);
    for (int k = 2; k <= 5; ++k)
        for (const auto& x : pairing_basis(z2, k, k)) {
            Graph g = graph_from_key(z2, x);
            auto copy = test::random_relabel(g, rng);
            EXPECT_EQ(pairing_M(z2, copy.graph, g), pairing_M(z2, g, g) * Rational(copy.sign));
        }
}

TEST(Pairing, Nondegeneracy) {
    for (const Species& sp : {Species::cc(), Species::aa(), species_from_name("group:z2")}) {
        Report r = verify_nondegeneracy(sp, 4, 5);
        EXPECT_TRUE(r.pass) << r.to_json().dump();
        EXPECT_GT(r.checked, 0u);
    }
}

TEST(Pairing, DeformationAgreesWithRewiring) {
    for (const Species& sp : {Species::cc(), Species::aa(), species_from_name("group:z2")})
        for (int k = 1; k <= 4; ++k)
            for (int e = k; e <= 5; ++e) {
                auto basis = pairing_basis(sp, k, e);
                for (const auto& x : basis)
                    EXPECT_EQ(deformation_D(sp, x, basis), deformation_D_by_rewiring(sp, x)) << sp.name() << " " << x;
            }
}

TEST(Pairing, DeformationNeedsTheWholeBlock) {
    Species z2 = species_from_name("group:z2");
    auto basis = pairing_basis(z2, 3, 3);
    ASSERT_GT(basis.size(), 1u);
    try {
        for (const auto& x : basis) deformation_D(z2, x, {x});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "BasisIncomplete");
    }
}

TEST(Pairing, AdjointnessCommutative) {
    Report r = verify_adjoint(Species::cc(), 5, 7);
    EXPECT_TRUE(r.pass) << r.to_json().dump();
    EXPECT_GT(r.checked, 0u);
}

TEST(Pairing, AdjointnessZ2) {
    Report r = verify_adjoint(species_from_name("group:z2"), 7, 7);
    EXPECT_TRUE(r.pass) << r.to_json().dump();
    EXPECT_GT(r.checked, 0u);
}

TEST(Pairing, AdjointnessNonabelian) {
    Report r = verify_adjoint(species_from_name("group:s3-inv"), 5, 5);
    EXPECT_TRUE(r.pass) << r.to_json().dump();
    EXPECT_GT(r.checked, 0u);
}

TEST(Pairing, HomotopyIdentities) {
    struct Window {
        const char* species;
        int k, r;
    };
    for (Window w : {Window{"group:trivial", 7, 1}, Window{"group:z2", 6, 1}, Window{"cc", 4, 2}, Window{"aa", 4, 2}}) {
        Report r = verify_homotopy(species_from_name(w.species), w.k, w.r);
        EXPECT_TRUE(r.pass) << r.to_json().dump();
        EXPECT_GT(r.checked, 0u) << w.species;
    }
}

TEST(Pairing, DisjointUnionIsGradedCommutative) {
    Species cc = Species::cc();
    std::vector<std::pair<std::string, int>> xs;
    for (int k = 2; k <= 4; ++k)
        for (int r = 1; r <= 2; ++r)
            for (const auto& x : enumerate_basis(cc, k, r, Filter::CONNECTED)) xs.emplace_back(x, k);
    ASSERT_FALSE(xs.empty());
    for (const auto& [x, kx] : xs)
        for (const auto& [y, ky] : xs) {
            ChainVector ab = disjoint_union(cc, ChainVector::of(x), ChainVector::of(y)), ba;
            ba.add(disjoint_union(cc, ChainVector::of(y), ChainVector::of(x)), (kx * ky) % 2 ? -1 : 1);
            EXPECT_EQ(ab, ba);
        }
}

TEST(Pairing, BoundaryIsADerivationOfTheUnion) {
    Species z2 = species_from_name("group:z2");
    std::vector<std::pair<std::string, int>> xs;
    for (int k = 2; k <= 4; ++k)
        for (const auto& x : enumerate_basis(z2, k, 1, Filter::CONNECTED)) xs.emplace_back(x, k);
    for (const auto& [x, kx] : xs)
        for (const auto& [y, ky] : xs) {
            ChainVector a = ChainVector::of(x), b = ChainVector::of(y);
            ChainVector lhs = boundary_E(z2, disjoint_union(z2, a, b)), rhs;
            rhs.add(disjoint_union(z2, boundary_E(z2, a), b));
            rhs.add(disjoint_union(z2, a, boundary_E(z2, b)), kx % 2 ? -1 : 1);
            EXPECT_EQ(lhs, rhs);
        }
}
