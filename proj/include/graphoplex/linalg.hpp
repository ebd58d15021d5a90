#pragma once

#include "graphoplex/complexes.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gpx {

/// Exact rank over Q. Rows are cleared to integers and eliminated
/// fraction-free (row combinations with integer multipliers, content
/// removed after every step), sparsest rows first.
std::size_t rank(const std::vector<std::vector<std::pair<int, Rational>>>& rows);
/// Rank of a numeric matrix. Throws Error("Symbolic") on polynomial entries.
std::size_t rank(const SparseMatrix& m);

struct BettiRow {
    int k = 0;
    std::size_t dim = 0;
    std::size_t rank_out = 0; // rank of the boundary leaving degree k
    std::size_t rank_in = 0;  // rank of the boundary arriving in degree k
    long betti = 0;
    bool exact = true; // false when rank_in is unknown; betti is then an upper bound
};

struct BettiTable {
    std::string species;
    std::string complex;
    std::string boundary;
    int r = 0;
    std::vector<BettiRow> rows;

    long betti(int k) const;
    bool exact(int k) const;
};

/// Betti numbers of the filtered complex at rank r for degrees 0..k_max,
/// with `kind` the boundary (E, H, or N at the given n). Degree k_max is
/// exact only if degree k_max + 1 fits under the resource limit.
BettiTable betti_table(const Species& sp, Filter f, int r, int k_max, BoundaryKind kind, long n = 1);

std::string betti_csv(const BettiTable& t);

} // namespace gpx
