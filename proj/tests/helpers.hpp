#pragma once

#include "graphoplex/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

namespace gpx::test {

// gmp leaves a/b as given; arithmetic needs lowest terms.
inline Rational frac(long a, long b) {
    Rational q(a, b);
    q.canonicalize();
    return q;
}

inline Vertex vx(std::vector<int> darts, int label = 0) { return Vertex{std::move(darts), label}; }

// k-gon with edge i running from vertex i to vertex i+1 (darts 2i, 2i+1);
// each vertex lists its incoming dart first, so a group label is read along
// the traversal.
inline Graph polygon(const std::vector<int>& labels) {
    int k = static_cast<int>(labels.size());
    std::vector<std::pair<int, int>> edges;
    std::vector<Vertex> verts;
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(2 * i, (2 * i + 1) % (2 * k));
        verts.push_back(vx({(2 * i + 2 * k - 1) % (2 * k), 2 * i}, labels[i]));
    }
    return make_graph(edges, verts);
}

struct Relabeled {
    Graph graph;
    int sign = 1; // orientation of the copy relative to the original
};

// Random copy: vertices permuted, darts renamed, some edges reversed.
inline Relabeled random_relabel(const Graph& g, std::mt19937_64& rng) {
    int nv = g.num_vertices(), nd = g.num_darts();
    std::vector<int> vperm(nv), dperm(nd);
    std::iota(vperm.begin(), vperm.end(), 0);
    std::iota(dperm.begin(), dperm.end(), 0);
    std::shuffle(vperm.begin(), vperm.end(), rng);
    std::shuffle(dperm.begin(), dperm.end(), rng);

    Relabeled out;
    out.sign = permutation_sign(vperm);
    std::vector<std::pair<int, int>> edges;
    for (int t : g.edge_tails()) {
        int a = dperm[t], b = dperm[g.partner[t]];
        if (rng() % 2) {
            std::swap(a, b);
            out.sign = -out.sign;
        }
        edges.emplace_back(a, b);
    }
    std::vector<Vertex> verts(nv);
    for (int v = 0; v < nv; ++v) {
        Vertex w = g.verts[v];
        for (int& d : w.darts) d = dperm[d];
        verts[vperm[v]] = w;
    }
    out.graph = make_graph(edges, verts);
    return out;
}

// Dense Gaussian elimination over Q, the naive way.
inline std::size_t dense_rank(std::vector<std::vector<Rational>> a) {
    std::size_t r = 0;
    if (a.empty()) return 0;
    std::size_t cols = a[0].size();
    for (std::size_t c = 0; c < cols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c] / a[r][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

} // namespace gpx::test
