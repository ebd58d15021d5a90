#include "graphoplex/graph.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>

namespace gpx {

std::vector<int> Graph::edge_tails() const {
    std::vector<int> out;
    for (int d = 0; d < num_darts(); ++d)
        if (is_tail[d]) out.push_back(d);
    return out;
}

void validate_graph(const Species& sp, const Graph& g) {
    const int D = g.num_darts();
    if (static_cast<int>(g.vert_of.size()) != D || static_cast<int>(g.is_tail.size()) != D)
        throw Error("MalformedGraph", "dart arrays have inconsistent sizes");
    for (int d = 0; d < D; ++d) {
        int p = g.partner[d];
        if (p < 0 || p >= D || p == d || g.partner[p] != d)
            throw Error("MalformedGraph", "edge involution broken at dart " + std::to_string(d));
        if (g.is_tail[d] == g.is_tail[p])
            throw Error("MalformedGraph", "edge at dart " + std::to_string(d) + " has no direction");
        if (g.vert_of[d] < 0 || g.vert_of[d] >= g.num_vertices())
            throw Error("MalformedGraph", "dangling dart " + std::to_string(d));
    }
    std::vector<int> seen(D, 0);
    for (int v = 0; v < g.num_vertices(); ++v) {
        const Vertex& x = g.verts[v];
        if (x.darts.size() < 2) throw Error("MalformedGraph", "vertex with fewer than two darts");
        for (int d : x.darts) {
            if (d < 0 || d >= D || g.vert_of[d] != v || seen[d]++)
                throw Error("MalformedGraph", "vertex " + std::to_string(v) + " dart list mismatch");
        }
        bool ok = false;
        for (const Vertex& s : list_structures(sp, x.darts))
            if (same_structure(sp, s, x)) ok = true;
        if (!ok) throw Error("MalformedGraph", "vertex structure not admitted by the species");
    }
    for (int d = 0; d < D; ++d)
        if (!seen[d]) throw Error("MalformedGraph", "dart " + std::to_string(d) + " at no vertex");
}

Graph make_graph(const std::vector<std::pair<int, int>>& edges, std::vector<Vertex> verts) {
    Graph g;
    const int D = 2 * static_cast<int>(edges.size());
    g.vert_of.assign(D, -1);
    g.partner.assign(D, -1);
    g.is_tail.assign(D, 0);
    for (auto [t, h] : edges) {
        if (t < 0 || t >= D || h < 0 || h >= D)
            throw Error("MalformedGraph", "dart out of range");
        g.partner[t] = h;
        g.partner[h] = t;
        g.is_tail[t] = 1;
    }
    for (int v = 0; v < static_cast<int>(verts.size()); ++v)
        for (int d : verts[v].darts) {
            if (d < 0 || d >= D) throw Error("MalformedGraph", "dart out of range");
            g.vert_of[d] = v;
        }
    g.verts = std::move(verts);
    return g;
}

std::vector<std::vector<int>> components(const Graph& g) {
    const int k = g.num_vertices();
    std::vector<int> comp(k, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < k; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> members{s}, stack{s};
        comp[s] = static_cast<int>(out.size());
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int d : g.verts[v].darts) {
                int w = g.vert_of[g.partner[d]];
                if (comp[w] < 0) {
                    comp[w] = comp[s];
                    members.push_back(w);
                    stack.push_back(w);
                }
            }
        }
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    return out;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    Graph g = a;
    const int off_d = a.num_darts(), off_v = a.num_vertices();
    for (int d = 0; d < b.num_darts(); ++d) {
        g.vert_of.push_back(b.vert_of[d] + off_v);
        g.partner.push_back(b.partner[d] + off_d);
        g.is_tail.push_back(b.is_tail[d]);
    }
    for (const Vertex& v : b.verts) {
        Vertex w = v;
        for (int& d : w.darts) d += off_d;
        g.verts.push_back(std::move(w));
    }
    return g;
}

namespace {

// A relabeling of one component: vertices in their new order (original
// positions), the reading chosen at each, and the new number of every dart.
struct Labeling {
    std::vector<int> order;
    std::vector<Reading> readings;
    std::map<int, int> dnum;
    std::vector<int> code; // per vertex: label, valence, partner numbers
};

struct ComponentCanon {
    std::vector<int> code;
    Labeling lab;
    bool zero = false;
    std::uint64_t aut = 1;
    int nverts = 0;
    int ndarts = 0;
};

std::vector<int> make_code(const Graph& g, const Labeling& lab) {
    std::vector<int> code;
    for (std::size_t i = 0; i < lab.order.size(); ++i) {
        code.push_back(lab.readings[i].label);
        code.push_back(static_cast<int>(lab.readings[i].seq.size()));
        for (int d : lab.readings[i].seq) code.push_back(lab.dnum.at(g.partner[d]));
    }
    return code;
}

// Orientation sign of a labeling relative to the reference orientation of
// the relabeled graph (tail = smaller dart number).
int labeling_sign(const Graph& g, const std::vector<int>& comp, const Labeling& lab) {
    std::vector<int> local(g.num_vertices(), -1);
    for (std::size_t i = 0; i < comp.size(); ++i) local[comp[i]] = static_cast<int>(i);
    std::vector<int> perm(comp.size());
    for (std::size_t i = 0; i < lab.order.size(); ++i) perm[local[lab.order[i]]] = static_cast<int>(i);
    int sign = permutation_sign(perm);
    for (const auto& [d, n] : lab.dnum)
        if (g.is_tail[d] && n > lab.dnum.at(g.partner[d])) sign = -sign;
    return sign;
}

void extend_labeling(const Species& sp, const Graph& g, Labeling& cur, std::vector<char>& visited,
                     const std::function<void(Labeling&)>& done) {
    for (std::size_t i = 0; i < cur.order.size(); ++i)
        for (int d : cur.readings[i].seq) {
            int p = g.partner[d];
            int w = g.vert_of[p];
            if (visited[w]) continue;
            visited[w] = 1;
            int base = static_cast<int>(cur.dnum.size());
            for (Reading& r : readings_from(sp, g.verts[w], p)) {
                cur.order.push_back(w);
                for (std::size_t t = 0; t < r.seq.size(); ++t)
                    cur.dnum[r.seq[t]] = base + static_cast<int>(t);
                cur.readings.push_back(std::move(r));
                extend_labeling(sp, g, cur, visited, done);
                for (int x : cur.readings.back().seq) cur.dnum.erase(x);
                cur.readings.pop_back();
                cur.order.pop_back();
            }
            visited[w] = 0;
            return;
        }
    done(cur);
}

ComponentCanon canon_by_search(const Species& sp, const Graph& g, const std::vector<int>& comp) {
    ComponentCanon best;
    bool have = false;
    std::vector<int> signs;
    std::vector<char> visited(g.num_vertices(), 0);
    auto done = [&](Labeling& lab) {
        lab.code = make_code(g, lab);
        if (!have || lab.code < best.code) {
            have = true;
            best.code = lab.code;
            best.lab = lab;
            signs.assign(1, labeling_sign(g, comp, lab));
        } else if (lab.code == best.code) {
            signs.push_back(labeling_sign(g, comp, lab));
        }
    };
    for (int v : comp)
        for (int entry : g.verts[v].darts)
            for (Reading& r : readings_from(sp, g.verts[v], entry)) {
                Labeling cur;
                cur.order.push_back(v);
                for (std::size_t t = 0; t < r.seq.size(); ++t) cur.dnum[r.seq[t]] = static_cast<int>(t);
                cur.readings.push_back(std::move(r));
                visited[v] = 1;
                extend_labeling(sp, g, cur, visited, done);
                visited[v] = 0;
            }
    best.aut = signs.size();
    best.zero = std::any_of(signs.begin(), signs.end(), [&](int s) { return s != signs[0]; });
    best.nverts = static_cast<int>(comp.size());
    best.ndarts = static_cast<int>(best.lab.dnum.size());
    return best;
}

std::uint64_t factorial(int n) {
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// Commutative vertices carry no internal structure, so the class is that of
// a multigraph and the search runs over vertex orders only.
ComponentCanon canon_multigraph(const Graph& g, const std::vector<int>& comp) {
    const int k = static_cast<int>(comp.size());
    std::vector<int> local(g.num_vertices(), -1);
    for (int i = 0; i < k; ++i) local[comp[i]] = i;
    std::vector<std::vector<int>> m(k, std::vector<int>(k, 0));
    for (int v : comp)
        for (int d : g.verts[v].darts)
            if (g.is_tail[d]) {
                int a = local[v], b = local[g.vert_of[g.partner[d]]];
                ++m[a][b];
                if (a != b) ++m[b][a];
            }
    std::vector<std::vector<int>> inv(k);
    for (int a = 0; a < k; ++a) {
        int deg = 0;
        for (int b = 0; b < k; ++b) deg += (a == b ? 2 : 1) * m[a][b];
        inv[a] = {deg, m[a][a]};
    }
    for (int a = 0; a < k; ++a) {
        std::vector<int> nb;
        for (int b = 0; b < k; ++b)
            for (int t = 0; t < (a == b ? 0 : m[a][b]); ++t) nb.push_back(inv[b][0]);
        std::sort(nb.begin(), nb.end());
        inv[a].insert(inv[a].end(), nb.begin(), nb.end());
    }
    std::vector<int> sorted(k);
    std::iota(sorted.begin(), sorted.end(), 0);
    std::stable_sort(sorted.begin(), sorted.end(), [&](int a, int b) { return inv[a] < inv[b]; });
    std::vector<std::pair<int, int>> cells; // [begin, end)
    for (int i = 0; i < k;) {
        int j = i;
        while (j < k && inv[sorted[j]] == inv[sorted[i]]) ++j;
        cells.emplace_back(i, j);
        i = j;
    }

    std::vector<int> order = sorted; // new position -> local vertex
    std::vector<int> best_order;
    std::vector<int> best_code;
    int count = 0;
    std::vector<int> signs;

    auto order_sign = [&](const std::vector<int>& ord) {
        std::vector<int> pos(k);
        for (int i = 0; i < k; ++i) pos[ord[i]] = i;
        int sign = permutation_sign(pos);
        for (int v : comp)
            for (int d : g.verts[v].darts)
                if (g.is_tail[d]) {
                    int a = pos[local[v]], b = pos[local[g.vert_of[g.partner[d]]]];
                    if (a > b) sign = -sign;
                }
        return sign;
    };

    std::function<void(std::size_t)> rec = [&](std::size_t c) {
        if (c == cells.size()) {
            std::vector<int> code;
            code.reserve(static_cast<std::size_t>(k * (k + 1) / 2));
            for (int i = 0; i < k; ++i)
                for (int j = i; j < k; ++j) code.push_back(m[order[i]][order[j]]);
            if (count == 0 || code < best_code) {
                best_code = code;
                best_order = order;
                count = 1;
                signs.assign(1, order_sign(order));
            } else if (code == best_code) {
                ++count;
                signs.push_back(order_sign(order));
            }
            return;
        }
        auto [b, e] = cells[c];
        std::sort(order.begin() + b, order.begin() + e);
        do rec(c + 1);
        while (std::next_permutation(order.begin() + b, order.begin() + e));
    };
    rec(0);

    ComponentCanon out;
    out.nverts = k;
    bool has_loop = false;
    std::uint64_t aut = static_cast<std::uint64_t>(count);
    for (int a = 0; a < k; ++a)
        for (int b = a; b < k; ++b) {
            aut *= factorial(m[a][b]);
            if (a == b && m[a][a] > 0) {
                has_loop = true;
                aut <<= m[a][a];
            }
        }
    out.aut = aut;
    out.zero = has_loop || std::any_of(signs.begin(), signs.end(), [&](int s) { return s != signs[0]; });

    // canonical darts: at new vertex i, the loop darts first (paired
    // consecutively) then the darts toward j = 0..k-1 in order
    std::vector<int> pos(k);
    for (int i = 0; i < k; ++i) pos[best_order[i]] = i;
    std::vector<std::vector<int>> first(k, std::vector<int>(k, 0));
    int next = 0;
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            first[i][j] = next;
            int mult = m[best_order[i]][best_order[j]];
            next += (i == j ? 2 : 1) * mult;
        }
    std::vector<std::vector<int>> used(k, std::vector<int>(k, 0));
    Labeling lab;
    lab.order.resize(k);
    for (int i = 0; i < k; ++i) lab.order[i] = comp[best_order[i]];
    for (int v : comp)
        for (int d : g.verts[v].darts)
            if (g.is_tail[d]) {
                int h = g.partner[d];
                int a = pos[local[v]], b = pos[local[g.vert_of[h]]];
                if (a == b) {
                    int s = used[a][a]++;
                    lab.dnum[d] = first[a][a] + 2 * s;
                    lab.dnum[h] = first[a][a] + 2 * s + 1;
                } else {
                    int s = used[std::min(a, b)][std::max(a, b)]++;
                    lab.dnum[d] = first[a][b] + s;
                    lab.dnum[h] = first[b][a] + s;
                }
            }
    lab.readings.resize(k);
    for (int i = 0; i < k; ++i) {
        std::vector<int> seq = g.verts[lab.order[i]].darts;
        std::sort(seq.begin(), seq.end(), [&](int x, int y) { return lab.dnum[x] < lab.dnum[y]; });
        lab.readings[i] = {0, seq};
    }
    out.lab = std::move(lab);
    out.code = make_code(g, out.lab);
    out.ndarts = next;
    return out;
}

} // namespace

SignedClass canonical_class(const Species& sp, const Graph& g) {
    SignedClass out;
    if (g.num_vertices() == 0) return out;
    auto comps = components(g);
    std::vector<ComponentCanon> cc;
    cc.reserve(comps.size());
    for (const auto& comp : comps)
        cc.push_back(sp.tag == SpeciesTag::CC ? canon_multigraph(g, comp) : canon_by_search(sp, g, comp));
    std::vector<int> idx(cc.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) {
        if (cc[a].nverts != cc[b].nverts) return cc[a].nverts < cc[b].nverts;
        return cc[a].code < cc[b].code;
    });

    std::vector<int> pos(g.num_vertices());
    std::vector<int> dnum(g.num_darts());
    int voff = 0, doff = 0;
    std::ostringstream key;
    out.aut = 1;
    for (std::size_t t = 0; t < idx.size(); ++t) {
        const ComponentCanon& c = cc[idx[t]];
        out.aut *= c.aut;
        if (c.zero) out.zero = true;
        for (std::size_t i = 0; i < c.lab.order.size(); ++i) pos[c.lab.order[i]] = voff + static_cast<int>(i);
        for (const auto& [d, n] : c.lab.dnum) dnum[d] = doff + n;
        for (std::size_t i = 0; i < c.lab.order.size(); ++i) {
            if (voff + i > 0) key << '|';
            const Reading& r = c.lab.readings[i];
            key << r.label << ':';
            for (std::size_t j = 0; j < r.seq.size(); ++j)
                key << (j ? "," : "") << doff + c.lab.dnum.at(g.partner[r.seq[j]]);
        }
        voff += c.nverts;
        doff += c.ndarts;
    }
    // repeated components
    for (std::size_t t = 0; t < idx.size();) {
        std::size_t u = t;
        while (u < idx.size() && cc[idx[u]].nverts == cc[idx[t]].nverts && cc[idx[u]].code == cc[idx[t]].code) ++u;
        std::size_t mult = u - t;
        out.aut *= factorial(static_cast<int>(mult));
        if (mult > 1 && cc[idx[t]].nverts % 2 == 1) out.zero = true;
        t = u;
    }
    int sign = permutation_sign(pos);
    for (int d = 0; d < g.num_darts(); ++d)
        if (g.is_tail[d] && dnum[d] > dnum[g.partner[d]]) sign = -sign;
    out.sign = sign;
    out.key = key.str();
    return out;
}

std::uint64_t automorphism_order(const Species& sp, const Graph& g) {
    validate_graph(sp, g);
    return canonical_class(sp, g).aut;
}

Graph graph_from_key(const Species& sp, const std::string& key) {
    Graph g;
    if (key.empty()) return g;
    std::vector<std::pair<int, std::vector<int>>> rows;
    std::size_t i = 0;
    while (i <= key.size()) {
        std::size_t bar = key.find('|', i);
        if (bar == std::string::npos) bar = key.size();
        std::string part = key.substr(i, bar - i);
        std::size_t colon = part.find(':');
        if (colon == std::string::npos) throw Error("MalformedGraph", "bad class key");
        std::pair<int, std::vector<int>> row;
        row.first = std::stoi(part.substr(0, colon));
        std::stringstream ss(part.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) row.second.push_back(std::stoi(tok));
        rows.push_back(std::move(row));
        i = bar + 1;
    }
    int next = 0;
    for (const auto& row : rows) next += static_cast<int>(row.second.size());
    g.vert_of.assign(next, -1);
    g.partner.assign(next, -1);
    g.is_tail.assign(next, 0);
    int d = 0;
    for (std::size_t v = 0; v < rows.size(); ++v) {
        Vertex x;
        x.label = rows[v].first;
        for (int p : rows[v].second) {
            g.vert_of[d] = static_cast<int>(v);
            g.partner[d] = p;
            g.is_tail[d] = d < p;
            x.darts.push_back(d++);
        }
        g.verts.push_back(normal_form(sp, x));
    }
    return g;
}

Filter filter_from_name(const std::string& s) {
    if (s == "full") return Filter::FULL;
    if (s == "connected") return Filter::CONNECTED;
    if (s == "qgraph") return Filter::QGRAPH;
    if (s == "bivalent") return Filter::BIVALENT;
    if (s == "fake") return Filter::FAKE_ALL;
    if (s == "poly") return Filter::POLY;
    if (s == "t") return Filter::T_ALL;
    throw Error("UnsupportedFilter", "unknown complex '" + s + "'");
}

std::string filter_name(Filter f) {
    switch (f) {
    case Filter::FULL: return "full";
    case Filter::CONNECTED: return "connected";
    case Filter::QGRAPH: return "qgraph";
    case Filter::BIVALENT: return "bivalent";
    case Filter::FAKE_ALL: return "fake";
    case Filter::POLY: return "poly";
    case Filter::T_ALL: return "t";
    }
    return "?";
}

bool filter_is_connected(Filter f) {
    return !(f == Filter::FULL || f == Filter::FAKE_ALL || f == Filter::T_ALL);
}

bool filter_accepts(const Species& sp, Filter f, const Graph& g) {
    if (filter_is_connected(f) && components(g).size() != 1) return false;
    auto all = [&](auto pred) {
        return std::all_of(g.verts.begin(), g.verts.end(), pred);
    };
    switch (f) {
    case Filter::FULL:
    case Filter::CONNECTED:
        return true;
    case Filter::QGRAPH:
        return all([&](const Vertex& v) { return !is_fake(sp, v); }) &&
               std::any_of(g.verts.begin(), g.verts.end(), [](const Vertex& v) { return v.valence() > 2; });
    case Filter::BIVALENT:
    case Filter::T_ALL:
        return all([](const Vertex& v) { return v.valence() == 2; });
    case Filter::FAKE_ALL:
    case Filter::POLY:
        return all([&](const Vertex& v) { return is_fake(sp, v); });
    }
    return false;
}

namespace {

std::string cache_id(const Species& sp) {
    std::string id = sp.name();
    if (sp.group) id += "#" + group_to_json(*sp.group).dump();
    return id;
}

std::mutex cache_mutex;
std::map<std::string, std::map<std::string, bool>> connected_cache;
std::map<std::string, std::vector<std::string>> basis_cache;

void check_limit(std::size_t n) {
    if (n > max_cells())
        throw Error("ResourceLimit", "basis enumeration exceeded " + std::to_string(max_cells()) +
                                         " cells (raise GRAPHOPLEX_MAX_CELLS)");
}

std::map<std::string, bool> build_connected(const Species& sp, int k, int r) {
    std::map<std::string, bool> out;
    if (k <= 0 || r <= 0) return out;
    if (k == 1) {
        std::vector<int> darts(2 * r);
        std::iota(darts.begin(), darts.end(), 0);
        std::vector<std::vector<int>> pairings;
        std::function<void(std::vector<int>, std::vector<int>)> rec = [&](std::vector<int> rest,
                                                                         std::vector<int> cur) {
            if (rest.empty()) {
                pairings.push_back(cur);
                return;
            }
            for (std::size_t i = 1; i < rest.size(); ++i) {
                std::vector<int> nr;
                for (std::size_t j = 1; j < rest.size(); ++j)
                    if (j != i) nr.push_back(rest[j]);
                auto nc = cur;
                nc.push_back(rest[0]);
                nc.push_back(rest[i]);
                rec(nr, nc);
            }
        };
        rec(darts, {});
        // Sets, cyclic orders and chord diagrams on m darts are all
        // relabelings of one another, so one structure meets every class.
        std::vector<Vertex> structures = list_structures(sp, darts);
        if (sp.tag != SpeciesTag::GROUP && !structures.empty()) structures.resize(1);
        for (const Vertex& v : structures)
            for (const auto& p : pairings) {
                std::vector<std::pair<int, int>> edges;
                for (std::size_t i = 0; i < p.size(); i += 2) edges.emplace_back(p[i], p[i + 1]);
                SignedClass c = canonical_class(sp, make_graph(edges, {v}));
                out.emplace(c.key, c.zero);
                check_limit(out.size());
            }
        return out;
    }
    const auto& prev = connected_classes(sp, k - 1, r);
    for (const auto& [key, zero] : prev) {
        (void)zero;
        Graph g = graph_from_key(sp, key);
        const int D = g.num_darts();
        for (int v = 0; v < g.num_vertices(); ++v)
            for (const ExpansionSplit& s : enumeration_splits(sp, g.verts[v], D, D + 1)) {
                Graph h = g;
                h.vert_of.push_back(v);
                h.vert_of.push_back(g.num_vertices());
                h.partner.push_back(D + 1);
                h.partner.push_back(D);
                h.is_tail.push_back(1);
                h.is_tail.push_back(0);
                for (int d : s.b.darts) h.vert_of[d] = g.num_vertices();
                h.verts[v] = s.a;
                h.verts.push_back(s.b);
                SignedClass c = canonical_class(sp, h);
                out.emplace(c.key, c.zero);
                check_limit(out.size());
            }
    }
    return out;
}

} // namespace

const std::map<std::string, bool>& connected_classes(const Species& sp, int k, int r) {
    const std::string id = cache_id(sp) + "/" + std::to_string(k) + "/" + std::to_string(r);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = connected_cache.find(id);
        if (it != connected_cache.end()) return it->second;
    }
    auto built = build_connected(sp, k, r);
    std::lock_guard<std::mutex> lock(cache_mutex);
    return connected_cache.emplace(id, std::move(built)).first->second;
}

namespace {

struct Piece {
    int k, r;
    std::string key;
};

std::vector<std::string> build_full(const Species& sp, int k, int r, Filter f) {
    std::vector<Piece> pieces;
    for (int kk = 1; kk <= k; ++kk)
        for (int rr = 1; rr <= r; ++rr)
            for (const auto& [key, zero] : connected_classes(sp, kk, rr))
                if (!zero) pieces.push_back({kk, rr, key});
    std::vector<std::string> out;
    std::vector<int> chosen;
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t from, int kleft, int rleft) {
        if (kleft == 0) {
            if (rleft != 0) return;
            Graph g;
            for (int i : chosen) g = disjoint_union(g, graph_from_key(sp, pieces[i].key));
            if (!filter_accepts(sp, f, g)) return;
            SignedClass c = canonical_class(sp, g);
            if (!c.zero) out.push_back(c.key);
            check_limit(out.size());
            return;
        }
        for (std::size_t i = from; i < pieces.size(); ++i) {
            if (pieces[i].k > kleft || pieces[i].r - 1 > rleft) continue;
            chosen.push_back(static_cast<int>(i));
            rec(i, kleft - pieces[i].k, rleft - (pieces[i].r - 1));
            chosen.pop_back();
        }
    };
    rec(0, k, r - 1);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace

std::vector<std::string> enumerate_basis(const Species& sp, int k, int r, Filter f) {
    if (k <= 0 || r <= 0) return {};
    const std::string id = cache_id(sp) + "/" + std::to_string(k) + "/" + std::to_string(r) + "/" +
                           filter_name(f);
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = basis_cache.find(id);
        if (it != basis_cache.end()) return it->second;
    }
    std::vector<std::string> out;
    if (filter_is_connected(f)) {
        for (const auto& [key, zero] : connected_classes(sp, k, r))
            if (!zero && filter_accepts(sp, f, graph_from_key(sp, key))) out.push_back(key);
    } else {
        out = build_full(sp, k, r, f);
    }
    std::sort(out.begin(), out.end());
    std::lock_guard<std::mutex> lock(cache_mutex);
    basis_cache.emplace(id, out);
    return out;
}

std::string describe(const Species& sp, const std::string& key) {
    Graph g = graph_from_key(sp, key);
    std::ostringstream os;
    os << "k=" << g.num_vertices() << " e=" << g.num_edges() << " [";
    for (int v = 0; v < g.num_vertices(); ++v) os << (v ? " " : "") << vertex_type(sp, g.verts[v]);
    os << "]";
    return os.str();
}

} // namespace gpx
