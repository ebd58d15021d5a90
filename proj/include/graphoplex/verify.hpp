#pragma once

#include "graphoplex/linalg.hpp"
#include "graphoplex/pairing.hpp"

#include <cstdint>
#include <vector>

namespace gpx {

/// dE^2 = 0, dH^2 = 0 and dE dH + dH dE = 0 on every full basis class with
/// k <= k_max, r <= r_max.
Report verify_squares(const Species& sp, int k_max, int r_max);

/// Every nonempty (k, e) pairing block with k <= k_max, e <= e_max has a
/// nonzero determinant whose leading coefficient is +- the product of the
/// automorphism orders.
Report verify_nondegeneracy(const Species& sp, int k_max, int e_max);

/// State-sum pairing against the matching pairing, on all commutative
/// graphs (zero classes included) with k <= k_max, e <= e_max: M'(I(a), I(b))
/// = M(a, b) at s = 2n, and the value does not change from n to n + 1.
Report verify_pairing_restriction(int k_max, int e_max, const std::vector<int>& ns);

/// ce_boundary(I(G)) = I((2n dE + dH) G) and sp(2n)-invariance of I(G) on
/// every nonzero commutative class with k <= k_max, e <= e_max.
Report verify_invariant_diagram(int k_max, int e_max, const std::vector<int>& ns);

/// Moyal product: order 0 is the product, order 1 the bracket, the picture
/// formula agrees with iterating B, and the product is associative through
/// order t^order on `triples` random triples.
Report verify_moyal(std::uint64_t seed, int triples, int n, int max_degree, int order);

/// Bigraded dims of H(full complex) against the free graded-commutative
/// algebra on H(connected complex), generators of odd vertex count being
/// exterior. Only exact rows are compared.
Report verify_hopf_dims(const Species& sp, int k_max, int r_max);

/// dim H_k(connected) = dim H_k(qgraph) + dim H_k(bivalent) on exact rows.
Report verify_pss_sum(const Species& sp, int k_max, int r_max);

} // namespace gpx
