#include "helpers.hpp"

#include "graphoplex/io.hpp"
#include "graphoplex/linalg.hpp"

#include <gtest/gtest.h>

using namespace gpx;

namespace {

using SparseRows = std::vector<std::vector<std::pair<int, Rational>>>;

SparseRows to_sparse(const std::vector<std::vector<Rational>>& a) {
    SparseRows rows(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != 0) rows[i].emplace_back(static_cast<int>(j), a[i][j]);
    return rows;
}

} // namespace

TEST(Linalg, RankAgreesWithDenseElimination) {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        int m = 1 + rng() % 9, n = 1 + rng() % 9;
        std::vector<std::vector<Rational>> a(m, std::vector<Rational>(n, 0));
        int density = 1 + rng() % 4;
        for (auto& row : a)
            for (auto& x : row)
                if (rng() % 4 < static_cast<unsigned>(density)) x = test::frac(static_cast<long>(rng() % 7) - 3, 1 + rng() % 3);
        // plant dependencies
        if (m > 2 && rng() % 2)
            for (int j = 0; j < n; ++j) a[m - 1][j] = a[0][j] * Rational(2, 3) - a[1][j];
        EXPECT_EQ(rank(to_sparse(a)), test::dense_rank(a)) << trial;
    }
}

TEST(Linalg, RankOfBoundaryMatricesAgreesWithDense) {
    Species cc = Species::cc();
    for (int k = 2; k <= 6; ++k) {
        auto src = enumerate_basis(cc, k, 3, Filter::CONNECTED), dst = enumerate_basis(cc, k - 1, 3, Filter::CONNECTED);
        SparseMatrix m = boundary_matrix(cc, src, dst, BoundaryKind::E, Filter::CONNECTED, std::nullopt);
        std::vector<std::vector<Rational>> dense(m.num_rows(), std::vector<Rational>(m.num_cols(), 0));
        for (const auto& [ij, p] : m.entries) dense[ij.first][ij.second] = p.coeff(0);
        EXPECT_EQ(rank(m), test::dense_rank(dense)) << k;
    }
}

TEST(Linalg, SymbolicMatrixHasNoRank) {
    Species cc = Species::cc();
    auto src = enumerate_basis(cc, 4, 3, Filter::FULL), dst = enumerate_basis(cc, 3, 3, Filter::FULL);
    SparseMatrix m = boundary_matrix(cc, src, dst, BoundaryKind::N, Filter::FULL, std::nullopt);
    try {
        rank(m);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), "Symbolic");
    }
}

TEST(Linalg, TrivialGroupHomology) {
    BettiTable t = betti_table(species_from_name("group:trivial"), Filter::CONNECTED, 1, 12, BoundaryKind::E);
    for (int k = 0; k <= 12; ++k) {
        bool live = k == 3 || k == 7 || k == 11;
        EXPECT_EQ(t.betti(k), live ? 1 : 0) << k;
        EXPECT_TRUE(t.exact(k)) << k;
    }
}

TEST(Linalg, Z2GroupHomology) {
    BettiTable t = betti_table(species_from_name("group:z2"), Filter::CONNECTED, 1, 7, BoundaryKind::E);
    for (int k = 0; k <= 7; ++k) {
        EXPECT_EQ(t.betti(k), k == 3 || k == 7 ? 2 : 0) << k;
        EXPECT_TRUE(t.exact(k)) << k;
    }
}

TEST(Linalg, EulerCharacteristicMatchesChainDimensions) {
    // sum (-1)^k betti_k = sum (-1)^k dim C_k once every row is exact; with
    // all vertices at least trivalent the complex stops at k = 2r - 2
    Species cc = Species::cc();
    for (int r = 1; r <= 4; ++r) {
        BettiTable t = betti_table(cc, Filter::QGRAPH, r, 2 * r, BoundaryKind::E);
        long chi_b = 0, chi_c = 0;
        for (const auto& row : t.rows) {
            ASSERT_TRUE(row.exact);
            long sgn = row.k % 2 ? -1 : 1;
            chi_b += sgn * row.betti;
            chi_c += sgn * static_cast<long>(row.dim);
        }
        EXPECT_EQ(chi_b, chi_c) << r;
        EXPECT_TRUE(enumerate_basis(cc, 2 * r - 1, r, Filter::QGRAPH).empty());
    }
}

TEST(Linalg, RowsAreConsistent) {
    BettiTable t = betti_table(Species::cc(), Filter::CONNECTED, 2, 6, BoundaryKind::E);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        const BettiRow& row = t.rows[i];
        EXPECT_EQ(row.betti, static_cast<long>(row.dim) - static_cast<long>(row.rank_out) - static_cast<long>(row.rank_in));
        if (i + 1 < t.rows.size()) {
            EXPECT_EQ(row.rank_in, t.rows[i + 1].rank_out);
        }
    }
}

TEST(Linalg, CsvLayout) {
    BettiTable t = betti_table(species_from_name("group:trivial"), Filter::CONNECTED, 1, 4, BoundaryKind::E);
    std::string csv = betti_csv(t);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "k,dim,rank_out,rank_in,betti,exact");
    nlohmann::json j = betti_to_json(t);
    EXPECT_EQ(j["schema"], "graphoplex.betti/1");
}
