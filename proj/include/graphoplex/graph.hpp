#pragma once

#include "graphoplex/species.hpp"

#include <map>
#include <string>
#include <vector>

namespace gpx {

/// A species-decorated graph together with an orientation representative.
///
/// Darts are 0..2e-1. The orientation is the vertex order (position in
/// `verts`) plus, for every edge including loops, which dart is the tail.
struct Graph {
    std::vector<int> vert_of;  // dart -> vertex position
    std::vector<int> partner;  // fixed-point-free involution (the edges)
    std::vector<char> is_tail; // exactly one dart per edge is the tail
    std::vector<Vertex> verts;

    int num_vertices() const { return static_cast<int>(verts.size()); }
    int num_darts() const { return static_cast<int>(partner.size()); }
    int num_edges() const { return num_darts() / 2; }
    bool is_loop(int d) const { return vert_of[d] == vert_of[partner[d]]; }
    /// Tail darts, one per edge, in increasing order.
    std::vector<int> edge_tails() const;
};

/// Throws Error("MalformedGraph") on inconsistent incidence data or a vertex
/// structure the species does not admit.
void validate_graph(const Species& sp, const Graph& g);

/// Builds a graph from (tail, head) dart pairs and vertex structures. Vertex
/// positions give the vertex order. Darts must be exactly 0..2e-1.
Graph make_graph(const std::vector<std::pair<int, int>>& edges, std::vector<Vertex> verts);

/// Canonical class of an oriented graph. `key` identifies the unoriented
/// isomorphism class and also encodes a reference orientation; `sign` relates
/// the given orientation to it. `zero` marks classes with an
/// orientation-reversing automorphism. `aut` counts dart-level automorphisms.
struct SignedClass {
    std::string key;
    int sign = 1;
    bool zero = false;
    std::uint64_t aut = 1;
};

SignedClass canonical_class(const Species& sp, const Graph& g);
std::uint64_t automorphism_order(const Species& sp, const Graph& g);

/// The canonical representative with its reference orientation.
Graph graph_from_key(const Species& sp, const std::string& key);

/// Disjoint union: a's vertices first, then b's, orientations inherited.
Graph disjoint_union(const Graph& a, const Graph& b);

/// Connected components as vertex-position lists, each sorted.
std::vector<std::vector<int>> components(const Graph& g);

enum class Filter { FULL, CONNECTED, QGRAPH, BIVALENT, FAKE_ALL, POLY, T_ALL };

Filter filter_from_name(const std::string& s);
std::string filter_name(Filter f);
bool filter_accepts(const Species& sp, Filter f, const Graph& g);
/// FULL, FAKE_ALL and T_ALL admit disconnected graphs.
bool filter_is_connected(Filter f);

/// Sorted canonical keys of all nonzero classes with k vertices and rank
/// r = 1 - (k - e) that satisfy the filter. Throws Error("ResourceLimit")
/// when the enumeration grows past max_cells().
std::vector<std::string> enumerate_basis(const Species& sp, int k, int r, Filter f);

/// All connected unoriented classes (zero ones included) with k vertices and
/// rank r, as canonical keys mapped to their zero flag.
const std::map<std::string, bool>& connected_classes(const Species& sp, int k, int r);

/// Species-independent summary used in reports: "k=3 e=4 [v3 v3 v2]".
std::string describe(const Species& sp, const std::string& key);

} // namespace gpx
