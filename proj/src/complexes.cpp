#include "graphoplex/complexes.hpp"

#include <algorithm>

namespace gpx {

ChainVector ChainVector::of(const std::string& key, const Rational& c) {
    ChainVector v;
    v.add(key, c);
    return v;
}

void ChainVector::add(const std::string& key, const Rational& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

void ChainVector::add(const ChainVector& o, const Rational& c) {
    if (c == 0) return;
    for (const auto& [k, v] : o.t_) add(k, v * c);
}

void ChainVector::add_graph(const Species& sp, const Graph& g, const Rational& c) {
    SignedClass cls = canonical_class(sp, g);
    if (!cls.zero) add(cls.key, c * cls.sign);
}

Rational ChainVector::coeff(const std::string& key) const {
    auto it = t_.find(key);
    return it == t_.end() ? Rational(0) : it->second;
}

void PolyChain::add(const std::string& key, const Poly& p) {
    if (p.is_zero()) return;
    auto [it, fresh] = t_.emplace(key, p);
    if (!fresh) {
        it->second += p;
        if (it->second.is_zero()) t_.erase(it);
    }
}

void PolyChain::add(const ChainVector& v, const Poly& p) {
    for (const auto& [k, c] : v.terms()) add(k, p * c);
}

void PolyChain::add(const PolyChain& o, const Poly& p) {
    for (const auto& [k, q] : o.t_) add(k, q * p);
}

ChainVector PolyChain::coefficient(int i) const {
    ChainVector v;
    for (const auto& [k, p] : t_) v.add(k, p.coeff(i));
    return v;
}

namespace {

// Rebuilds a graph from vertices that still use old dart ids; darts not
// held by any vertex disappear and the rest are renumbered in order.
Graph compact(const std::vector<int>& partner, const std::vector<char>& is_tail,
              const std::vector<Vertex>& verts) {
    std::vector<int> alive(partner.size(), -1);
    for (const Vertex& v : verts)
        for (int d : v.darts) alive[d] = 0;
    int next = 0;
    for (std::size_t d = 0; d < partner.size(); ++d)
        if (alive[d] == 0) alive[d] = next++;
    Graph g;
    g.vert_of.assign(next, -1);
    g.partner.assign(next, -1);
    g.is_tail.assign(next, 0);
    for (std::size_t d = 0; d < partner.size(); ++d) {
        if (alive[d] < 0) continue;
        g.partner[alive[d]] = alive[partner[d]];
        g.is_tail[alive[d]] = is_tail[d];
    }
    for (std::size_t v = 0; v < verts.size(); ++v) {
        Vertex w = verts[v];
        for (int& d : w.darts) {
            d = alive[d];
            g.vert_of[d] = static_cast<int>(v);
        }
        g.verts.push_back(std::move(w));
    }
    return g;
}

} // namespace

Contracted contract_edge(const Species& sp, const Graph& g, int d) {
    int t = g.is_tail[d] ? d : g.partner[d];
    int h = g.partner[t];
    int u = g.vert_of[t], w = g.vert_of[h];
    if (u == w) throw Error("LoopContraction", "loops are never contracted");
    int i = std::min(u, w), j = std::max(u, w);
    int J = j + 1;
    Contracted out;
    out.sign = ((u < w ? J : J + 1) % 2 == 0) ? 1 : -1;
    int di = (u == i) ? t : h, dj = (u == i) ? h : t;
    Vertex merged = mate(sp, g.verts[i], di, g.verts[j], dj);
    std::vector<Vertex> verts;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (v == j) continue;
        verts.push_back(v == i ? merged : g.verts[v]);
    }
    out.graph = compact(g.partner, g.is_tail, verts);
    return out;
}

Contracted contract_edge_by_relabeling(const Species& sp, const Graph& g, int d) {
    int t = g.is_tail[d] ? d : g.partner[d];
    int h = g.partner[t];
    int u = g.vert_of[t], w = g.vert_of[h];
    if (u == w) throw Error("LoopContraction", "loops are never contracted");
    // new order: tail vertex, head vertex, then the rest in their old order
    std::vector<int> order{u, w};
    for (int v = 0; v < g.num_vertices(); ++v)
        if (v != u && v != w) order.push_back(v);
    std::vector<int> pos(g.num_vertices());
    for (int p = 0; p < g.num_vertices(); ++p) pos[order[p]] = p;
    Contracted out;
    out.sign = permutation_sign(pos);
    std::vector<Vertex> verts{mate(sp, g.verts[u], t, g.verts[w], h)};
    for (std::size_t p = 2; p < order.size(); ++p) verts.push_back(g.verts[order[p]]);
    out.graph = compact(g.partner, g.is_tail, verts);
    return out;
}

Contracted contract_quasi_edge(const Species& sp, const Graph& g, int d1, int d2) {
    if (d1 == d2) throw Error("QuasiLoop", "a quasi-edge needs two distinct darts");
    if (g.partner[d1] == d2) throw Error("IsActualEdge", "the darts form an edge");
    if (g.vert_of[d1] == g.vert_of[d2]) throw Error("QuasiLoop", "quasi-loops are never contracted");
    Graph h = g;
    int sign = 1;
    // representative: the edge through d1 leaves v1, the edge through d2 enters v2
    if (!h.is_tail[d1]) {
        h.is_tail[d1] = 1;
        h.is_tail[h.partner[d1]] = 0;
        sign = -sign;
    }
    if (h.is_tail[d2]) {
        h.is_tail[d2] = 0;
        h.is_tail[h.partner[d2]] = 1;
        sign = -sign;
    }
    int p1 = h.partner[d1], p2 = h.partner[d2];
    h.partner[d1] = d2;
    h.partner[d2] = d1;
    h.partner[p1] = p2;
    h.partner[p2] = p1;
    // the new edge d1 -> d2, and the leftover edge runs from p2 to p1
    h.is_tail[d1] = 1;
    h.is_tail[d2] = 0;
    h.is_tail[p2] = 1;
    h.is_tail[p1] = 0;
    Contracted out = contract_edge(sp, h, d1);
    out.sign *= sign;
    return out;
}

ChainVector boundary_E(const Species& sp, const ChainVector& c, Filter f) {
    ChainVector out;
    for (const auto& [key, coef] : c.terms()) {
        Graph g = graph_from_key(sp, key);
        for (int t : g.edge_tails()) {
            if (g.is_loop(t)) continue;
            Contracted r = contract_edge(sp, g, t);
            if (f == Filter::QGRAPH) {
                int i = std::min(g.vert_of[t], g.vert_of[g.partner[t]]);
                if (is_fake(sp, r.graph.verts[i])) continue;
            }
            out.add_graph(sp, r.graph, coef * r.sign);
        }
    }
    return out;
}

ChainVector boundary_H(const Species& sp, const ChainVector& c) {
    ChainVector out;
    for (const auto& [key, coef] : c.terms()) {
        Graph g = graph_from_key(sp, key);
        for (int a = 0; a < g.num_darts(); ++a)
            for (int b = a + 1; b < g.num_darts(); ++b) {
                if (g.vert_of[a] == g.vert_of[b] || g.partner[a] == b) continue;
                Contracted r = contract_quasi_edge(sp, g, a, b);
                out.add_graph(sp, r.graph, coef * r.sign);
            }
    }
    return out;
}

ChainVector boundary_N(const Species& sp, const ChainVector& c, long n) {
    ChainVector out = boundary_H(sp, c);
    out.add(boundary_E(sp, c), Rational(2 * n));
    return out;
}

PolyChain boundary_N_symbolic(const Species& sp, const ChainVector& c) {
    PolyChain out;
    out.add(boundary_E(sp, c), Poly::monomial(1, 1));
    out.add(boundary_H(sp, c), Poly(1));
    return out;
}

ChainVector coboundary_E(const Species& sp, const ChainVector& c) {
    ChainVector out;
    for (const auto& [key, coef] : c.terms()) {
        Graph g = graph_from_key(sp, key);
        const int D = g.num_darts();
        for (int i = 0; i < g.num_vertices(); ++i) {
            // moving vertex i to the front costs i transpositions
            Rational sign = (i % 2 == 0) ? 1 : -1;
            for (const ExpansionSplit& s : ideal_expansions(sp, g.verts[i], D, D + 1)) {
                std::vector<int> partner = g.partner;
                std::vector<char> is_tail = g.is_tail;
                partner.push_back(D + 1);
                partner.push_back(D);
                is_tail.push_back(1);
                is_tail.push_back(0);
                std::vector<Vertex> verts{s.a, s.b};
                for (int v = 0; v < g.num_vertices(); ++v)
                    if (v != i) verts.push_back(g.verts[v]);
                out.add_graph(sp, compact(partner, is_tail, verts), coef * sign * s.multiplicity);
            }
        }
    }
    return out;
}

SparseMatrix boundary_matrix(const Species& sp, const std::vector<std::string>& source,
                             const std::vector<std::string>& target, BoundaryKind kind, Filter f,
                             std::optional<long> n) {
    SparseMatrix m;
    m.cols = source;
    m.rows = target;
    m.symbolic = (kind == BoundaryKind::N && !n);
    std::map<std::string, int> row_of;
    for (std::size_t i = 0; i < target.size(); ++i) row_of[target[i]] = static_cast<int>(i);
    auto place = [&](int col, const std::string& key, const Poly& p) {
        auto it = row_of.find(key);
        if (it == row_of.end())
            throw Error("BasisMismatch", "boundary term " + describe(sp, key) + " is outside the target basis");
        m.entries[{it->second, col}] = p;
    };
    for (std::size_t j = 0; j < source.size(); ++j) {
        ChainVector src = ChainVector::of(source[j]);
        int col = static_cast<int>(j);
        if (m.symbolic) {
            PolyChain img = boundary_N_symbolic(sp, src);
            for (const auto& [key, p] : img.terms()) place(col, key, p);
            continue;
        }
        ChainVector img;
        switch (kind) {
        case BoundaryKind::E: img = boundary_E(sp, src, f); break;
        case BoundaryKind::H: img = boundary_H(sp, src); break;
        case BoundaryKind::N: img = boundary_N(sp, src, *n); break;
        }
        for (const auto& [key, c] : img.terms()) place(col, key, Poly(c));
    }
    return m;
}

} // namespace gpx
