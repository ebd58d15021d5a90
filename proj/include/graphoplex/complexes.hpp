#pragma once

#include "graphoplex/graph.hpp"
#include "graphoplex/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gpx {

/// Sparse combination of nonzero canonical classes (keys), sign folded into
/// the coefficient. Zero coefficients and zero classes are never stored.
class ChainVector {
public:
    ChainVector() = default;
    static ChainVector of(const std::string& key, const Rational& c = 1);

    /// Adds c times the class of an arbitrary oriented graph.
    void add_graph(const Species& sp, const Graph& g, const Rational& c);
    void add(const std::string& key, const Rational& c);
    void add(const ChainVector& o, const Rational& c = 1);

    const std::map<std::string, Rational>& terms() const { return t_; }
    bool empty() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    Rational coeff(const std::string& key) const;
    friend bool operator==(const ChainVector& a, const ChainVector& b) { return a.t_ == b.t_; }

private:
    std::map<std::string, Rational> t_;
};

/// Same, with polynomial coefficients in s = 2n.
class PolyChain {
public:
    void add(const std::string& key, const Poly& p);
    void add(const ChainVector& v, const Poly& p);
    void add(const PolyChain& o, const Poly& p = Poly(1));
    const std::map<std::string, Poly>& terms() const { return t_; }
    bool empty() const { return t_.empty(); }
    /// Coefficient of s^i in every term.
    ChainVector coefficient(int i) const;
    friend bool operator==(const PolyChain& a, const PolyChain& b) { return a.t_ == b.t_; }

private:
    std::map<std::string, Poly> t_;
};

/// Result of a single contraction: the oriented contracted graph plus the
/// sign picked up by the relabeling rule.
struct Contracted {
    Graph graph;
    int sign = 1;
};

/// Contracts the edge through dart d. Endpoints at positions i < j collapse
/// into position i, later labels shift down, and the orientation picks up
/// (-1)^j (1-based j) when the edge points i -> j, (-1)^(j+1) otherwise.
/// Throws Error("LoopContraction") on a loop.
Contracted contract_edge(const Species& sp, const Graph& g, int d);

/// The same contraction described by relabeling: move the endpoints to
/// positions 1 and 2 with the edge pointing 1 -> 2, merge into position 1.
/// Exposed as an independent cross-check of contract_edge.
Contracted contract_edge_by_relabeling(const Species& sp, const Graph& g, int d);

/// Contracts the quasi-edge {d1, d2}: rewire so that d1-d2 and the two
/// partner darts become edges, then contract d1-d2. Throws
/// Error("QuasiLoop") when both darts sit on one vertex and
/// Error("IsActualEdge") when they form an edge.
Contracted contract_quasi_edge(const Species& sp, const Graph& g, int d1, int d2);

enum class BoundaryKind { E, H, N };

/// Under QGRAPH, edge contractions that create a fake vertex are dropped.
ChainVector boundary_E(const Species& sp, const ChainVector& c, Filter f = Filter::FULL);
ChainVector boundary_H(const Species& sp, const ChainVector& c);
/// 2n dE + dH for a numeric n.
ChainVector boundary_N(const Species& sp, const ChainVector& c, long n);
/// s dE + dH with s = 2n left formal.
PolyChain boundary_N_symbolic(const Species& sp, const ChainVector& c);

/// Sum over ideal edges of every vertex. Throws Error("NotSupported") for
/// species without ideal edges.
ChainVector coboundary_E(const Species& sp, const ChainVector& c);

/// Matrix of an operator in ordered bases: entry (row = target index,
/// col = source index). Polynomial entries when the operator is symbolic.
struct SparseMatrix {
    std::vector<std::string> rows, cols;
    std::map<std::pair<int, int>, Poly> entries;
    bool symbolic = false;

    int num_rows() const { return static_cast<int>(rows.size()); }
    int num_cols() const { return static_cast<int>(cols.size()); }
};

/// Assembles the boundary from degree k (source basis) to k-1 (target).
/// `n` is used for kind N; std::nullopt keeps s symbolic. Throws
/// Error("BasisMismatch") when a term leaves the target basis.
SparseMatrix boundary_matrix(const Species& sp, const std::vector<std::string>& source,
                             const std::vector<std::string>& target, BoundaryKind kind, Filter f,
                             std::optional<long> n);

} // namespace gpx
