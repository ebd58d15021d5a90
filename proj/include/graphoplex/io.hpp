#pragma once

#include "graphoplex/linalg.hpp"

#include <nlohmann/json.hpp>

#include <string>

namespace gpx {

/// Graph interchange:
///   {"species", "darts": [...], "edges": [[d, d'], ...],
///    "vertices": {"name": {"darts": [...], "payload": ...}},
///    "orientation": {"vertex_order": [names], "directions": [[tail, head], ...]}}
/// Payload: null for cc, the cyclic order for aa, chord pairs for kk, the
/// element name (read from the first dart to the second) for groups. Every
/// edge, loops included, needs a direction. Dart ids may be any distinct
/// integers; they are renumbered in increasing order.
nlohmann::json graph_to_json(const Species& sp, const Graph& g);
Graph graph_from_json(const Species& sp, const nlohmann::json& j);

nlohmann::json chain_to_json(const Species& sp, const ChainVector& c);
nlohmann::json chain_to_json(const Species& sp, const PolyChain& c);

/// Coordinate triplets "row,col,value" with a header line; values are
/// rationals, or polynomials in s for symbolic matrices.
std::string matrix_csv(const SparseMatrix& m);
/// Matrix with both bases inline as class keys.
nlohmann::json matrix_to_json(const Species& sp, const SparseMatrix& m);

nlohmann::json betti_to_json(const BettiTable& t);

} // namespace gpx
