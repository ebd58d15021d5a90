#pragma once

#include "graphoplex/complexes.hpp"

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

namespace gpx {

/// A decoration-preserving overlay of g1 onto g2: vertex_map[v] is the image
/// position of vertex v, dart_map[d] the image of dart d.
struct Matching {
    std::vector<int> vertex_map;
    std::vector<int> dart_map;
    int sign = 1;
    int components = 0; // alternating polygons left after deleting vertices
};

/// All matchings. The sign is that of the vertex bijection times, for each
/// alternating polygon, the product over its edges of +1 when the edge's
/// tail carries p and -1 otherwise, for an alternating p/q labeling of the
/// polygon's darts. This is exactly the sign with which the pair of edge
/// states appears in the state-sum pairing, which is why M agrees with it.
std::vector<Matching> matchings(const Species& sp, const Graph& g1, const Graph& g2);

/// Sum of sign(m) s^c(m) over all matchings.
Poly pairing_M(const Species& sp, const Graph& g1, const Graph& g2);
Poly pairing_M(const Species& sp, const std::string& k1, const std::string& k2);
Poly pairing_M(const Species& sp, const ChainVector& a, const ChainVector& b);
Poly pairing_M(const Species& sp, const PolyChain& a, const ChainVector& b);

/// Determinant of a square polynomial matrix, exact.
Poly determinant(const std::vector<std::vector<Poly>>& m);

struct LeadingTerm {
    int degree = -1; // -1 when the determinant vanishes
    Rational coeff;
};

/// Leading term of the determinant without expanding it: read off the rows'
/// top coefficients, interpolating in full only when those are singular.
LeadingTerm determinant_leading_term(const std::vector<std::vector<Poly>>& m);

/// Basis of all nonzero classes with k vertices and e edges (any number of
/// components), the block on which the pairing is diagonal-dominant.
std::vector<std::string> pairing_basis(const Species& sp, int k, int e);

/// Matrix of M on a basis.
std::vector<std::vector<Poly>> pairing_matrix(const Species& sp, const std::vector<std::string>& basis);

/// D(n) = A^-1 M(n) applied to a class, as a polynomial in s. `basis` must be
/// the full (k, e) block containing the class; a matching onto a class
/// outside it raises Error("BasisIncomplete").
PolyChain deformation_D(const Species& sp, const std::string& key, const std::vector<std::string>& basis);
/// D(n) with the block chosen automatically.
PolyChain deformation_D(const Species& sp, const ChainVector& c);
/// D_i, the coefficient of s^(e - i) in D(n), extended linearly.
ChainVector deformation_coefficient(const Species& sp, const ChainVector& c, int i);

/// The same D(n) computed without a basis: sum over every re-pairing of the
/// darts of the class. Used as an independent check.
PolyChain deformation_D_by_rewiring(const Species& sp, const std::string& key);

/// Disjoint union, bilinear; classes that become zero are dropped.
ChainVector disjoint_union(const Species& sp, const ChainVector& a, const ChainVector& b);
PolyChain disjoint_union(const Species& sp, const PolyChain& a, const PolyChain& b);

/// [a, b] = dH mu(a, b) - mu(dH a, b) - (-1)^|V(a)| mu(a, dH b), termwise.
ChainVector bracket(const Species& sp, const ChainVector& a, const ChainVector& b);

/// mu_1(a, b) = D_1 mu(a, b) - mu(D_1 a, b) - mu(a, D_1 b).
ChainVector mu1(const Species& sp, const ChainVector& a, const ChainVector& b);
/// mu_1 read off as the subleading coefficient of D(n) mu - mu (D(n) x D(n)).
ChainVector mu1_from_deformation(const Species& sp, const std::string& a, const std::string& b);

struct Report {
    std::string suite;
    std::string species;
    std::string window;
    bool pass = true;
    std::vector<std::string> failures;
    std::size_t checked = 0;

    void fail(const std::string& why);
    nlohmann::json to_json() const;
};

/// M(dn x, y) = M(x, dE y) as polynomials, for x in the (k, e) block and y in
/// the (k-1, e-1) block, over all k <= k_max, e <= e_max.
Report verify_adjoint(const Species& sp, int k_max, int e_max);

/// D_0 = id, dH = dE D_1 - D_1 dE, mu_1 = D_1 mu - mu D_1 (against the
/// deformation route) and [,] = dE mu_1 - mu_1 dE on the window k <= k_max,
/// r <= r_max of the full complex.
Report verify_homotopy(const Species& sp, int k_max, int r_max);

} // namespace gpx
