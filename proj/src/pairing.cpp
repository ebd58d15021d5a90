#include "graphoplex/pairing.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <set>

namespace gpx {

namespace {

struct SignCycles {
    int sign;
    int cycles;
};

// Walks the alternating polygons of the overlay. Each g1 dart carries p or q
// and shares it with its image; the far end of an edge carries the other.
SignCycles overlay(const Graph& g1, const Graph& g2, const std::vector<int>& dart_map) {
    const int D = g1.num_darts();
    std::vector<int> back(D);
    for (int d = 0; d < D; ++d) back[dart_map[d]] = d;
    std::vector<char> seen(D, 0);
    int sign = 1, cycles = 0;
    for (int x = 0; x < D; ++x) {
        if (seen[x]) continue;
        ++cycles;
        int cur = x; // carries p
        do {
            seen[cur] = 1;
            int y = g1.partner[cur];
            seen[y] = 1;
            if (!g1.is_tail[cur]) sign = -sign;
            int iy = dart_map[y]; // carries q
            int z = g2.partner[iy];
            if (!g2.is_tail[z]) sign = -sign;
            cur = back[z];
        } while (cur != x);
    }
    return {sign, cycles};
}

void enumerate_matchings(const Species& sp, const Graph& g1, const Graph& g2,
                         const std::function<void(const std::vector<int>&, const std::vector<int>&)>& visit) {
    const int k = g1.num_vertices();
    if (k != g2.num_vertices() || g1.num_darts() != g2.num_darts()) return;
    std::vector<std::string> t1(k), t2(k);
    for (int v = 0; v < k; ++v) {
        t1[v] = vertex_type(sp, g1.verts[v]);
        t2[v] = vertex_type(sp, g2.verts[v]);
    }
    {
        auto a = t1, b = t2;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return;
    }
    std::vector<int> vmap(k, -1), dmap(g1.num_darts(), -1);
    std::vector<char> used(k, 0);
    std::function<void(int)> rec = [&](int v) {
        if (v == k) {
            visit(vmap, dmap);
            return;
        }
        for (int w = 0; w < k; ++w) {
            if (used[w] || t1[v] != t2[w]) continue;
            auto isos = vertex_isomorphisms(sp, g1.verts[v], g2.verts[w]);
            if (isos.empty()) continue;
            used[w] = 1;
            vmap[v] = w;
            for (const auto& iso : isos) {
                for (std::size_t i = 0; i < iso.size(); ++i) dmap[g1.verts[v].darts[i]] = iso[i];
                rec(v + 1);
            }
            used[w] = 0;
        }
    };
    rec(0);
}

std::mutex cache_mutex;
std::map<std::string, Poly>& pairing_cache() {
    static std::map<std::string, Poly> c;
    return c;
}
std::map<std::string, std::uint64_t>& aut_cache() {
    static std::map<std::string, std::uint64_t> c;
    return c;
}

std::uint64_t aut_of(const Species& sp, const std::string& key) {
    std::string ck = sp.name() + "#" + key;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = aut_cache().find(ck);
        if (it != aut_cache().end()) return it->second;
    }
    std::uint64_t a = automorphism_order(sp, graph_from_key(sp, key));
    std::lock_guard<std::mutex> lock(cache_mutex);
    aut_cache()[ck] = a;
    return a;
}

int num_edges_of(const Species& sp, const std::string& key) {
    return graph_from_key(sp, key).num_edges();
}

} // namespace

std::vector<Matching> matchings(const Species& sp, const Graph& g1, const Graph& g2) {
    std::vector<Matching> out;
    enumerate_matchings(sp, g1, g2, [&](const std::vector<int>& vm, const std::vector<int>& dm) {
        Matching m;
        m.vertex_map = vm;
        m.dart_map = dm;
        SignCycles sc = overlay(g1, g2, dm);
        m.sign = sc.sign * permutation_sign(vm);
        m.components = sc.cycles;
        out.push_back(std::move(m));
    });
    return out;
}

Poly pairing_M(const Species& sp, const Graph& g1, const Graph& g2) {
    std::map<int, long long> by_cycles;
    enumerate_matchings(sp, g1, g2, [&](const std::vector<int>& vm, const std::vector<int>& dm) {
        SignCycles sc = overlay(g1, g2, dm);
        by_cycles[sc.cycles] += sc.sign * permutation_sign(vm);
    });
    Poly p;
    for (const auto& [c, n] : by_cycles)
        if (n != 0) p += Poly::monomial(Rational(static_cast<long>(n)), c);
    return p;
}

Poly pairing_M(const Species& sp, const std::string& k1, const std::string& k2) {
    // M is symmetric, so one cache slot serves both orders
    const std::string& a = std::min(k1, k2);
    const std::string& b = std::max(k1, k2);
    std::string ck = sp.name() + "#" + a + "#" + b;
    {
        std::lock_guard<std::mutex> lock(cache_mutex);
        auto it = pairing_cache().find(ck);
        if (it != pairing_cache().end()) return it->second;
    }
    Poly p = pairing_M(sp, graph_from_key(sp, a), graph_from_key(sp, b));
    std::lock_guard<std::mutex> lock(cache_mutex);
    pairing_cache()[ck] = p;
    return p;
}

Poly pairing_M(const Species& sp, const ChainVector& a, const ChainVector& b) {
    Poly p;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) p += pairing_M(sp, ka, kb) * (ca * cb);
    return p;
}

Poly pairing_M(const Species& sp, const PolyChain& a, const ChainVector& b) {
    Poly p;
    for (const auto& [ka, pa] : a.terms())
        for (const auto& [kb, cb] : b.terms()) p += pairing_M(sp, ka, kb) * pa * cb;
    return p;
}

namespace {

Rational rational_determinant(std::vector<std::vector<Rational>> a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && a[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (std::size_t j = c; j < n; ++j) a[r][j] -= f * a[c][j];
        }
    }
    return det;
}

} // namespace

Poly determinant(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return Poly(1);
    int bound = 0;
    for (const auto& row : m) {
        int d = 0;
        for (const auto& p : row) d = std::max(d, p.degree());
        bound += d;
    }
    // evaluate at bound + 1 integer points, then interpolate
    std::vector<Rational> xs, ys;
    for (int t = 0; t <= bound; ++t) {
        Rational x = t;
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j].eval(x);
        xs.push_back(x);
        ys.push_back(rational_determinant(std::move(a)));
    }
    Poly result;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (ys[i] == 0) continue;
        Poly basis(1);
        Rational denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * (Poly::monomial(1, 1) - Poly(xs[j]));
            denom *= xs[i] - xs[j];
        }
        result += basis * Rational(ys[i] / denom);
    }
    return result;
}

LeadingTerm determinant_leading_term(const std::vector<std::vector<Poly>>& m) {
    const std::size_t n = m.size();
    if (n == 0) return {0, 1};
    // With d_i the top degree of row i, the coefficient of s^(sum d_i) is the
    // determinant of the rows' top coefficients.
    std::vector<int> top(n, -1);
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& p : m[i]) top[i] = std::max(top[i], p.degree());
    int degree = 0;
    bool zero_row = false;
    for (int d : top) {
        zero_row = zero_row || d < 0;
        degree += d;
    }
    if (zero_row) return {-1, 0};
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a[i][j] = m[i][j].coeff(top[i]);
    Rational c = rational_determinant(std::move(a));
    if (c != 0) return {degree, c};
    Poly det = determinant(m);
    return {det.degree(), det.leading()};
}

std::vector<std::string> pairing_basis(const Species& sp, int k, int e) {
    int r = e - k + 1;
    if (k < 0 || e < 0) return {};
    return enumerate_basis(sp, k, r, Filter::FULL);
}

std::vector<std::vector<Poly>> pairing_matrix(const Species& sp, const std::vector<std::string>& basis) {
    std::vector<std::vector<Poly>> m(basis.size(), std::vector<Poly>(basis.size()));
    for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = i; j < basis.size(); ++j) m[i][j] = m[j][i] = pairing_M(sp, basis[i], basis[j]);
    return m;
}

PolyChain deformation_D(const Species& sp, const std::string& key, const std::vector<std::string>& basis) {
    Graph g = graph_from_key(sp, key);
    std::vector<std::string> full = pairing_basis(sp, g.num_vertices(), g.num_edges());
    std::set<std::string> have(basis.begin(), basis.end());
    if (!have.count(key)) throw Error("BasisIncomplete", "the class is not in the given basis");
    for (const auto& b : full)
        if (!have.count(b)) throw Error("BasisIncomplete", "basis misses " + describe(sp, b));
    PolyChain out;
    for (const auto& b : basis) {
        Poly p = pairing_M(sp, key, b);
        if (p.is_zero()) continue;
        out.add(b, p * Rational(1, static_cast<unsigned long>(aut_of(sp, b))));
    }
    return out;
}

PolyChain deformation_D(const Species& sp, const ChainVector& c) {
    PolyChain out;
    for (const auto& [key, coef] : c.terms()) {
        Graph g = graph_from_key(sp, key);
        out.add(deformation_D(sp, key, pairing_basis(sp, g.num_vertices(), g.num_edges())), Poly(coef));
    }
    return out;
}

ChainVector deformation_coefficient(const Species& sp, const ChainVector& c, int i) {
    ChainVector out;
    for (const auto& [key, coef] : c.terms()) {
        int e = num_edges_of(sp, key);
        PolyChain d = deformation_D(sp, ChainVector::of(key, coef));
        out.add(d.coefficient(e - i));
    }
    return out;
}

PolyChain deformation_D_by_rewiring(const Species& sp, const std::string& key) {
    Graph g = graph_from_key(sp, key);
    const int D = g.num_darts();
    PolyChain out;
    std::vector<int> tau(D, -1);
    std::vector<int> ident(D);
    for (int d = 0; d < D; ++d) ident[d] = d;
    std::function<void()> rec = [&]() {
        int a = 0;
        while (a < D && tau[a] >= 0) ++a;
        if (a == D) {
            Graph h = g;
            h.partner = tau;
            for (int d = 0; d < D; ++d) h.is_tail[d] = d < tau[d];
            SignCycles sc = overlay(g, h, ident);
            ChainVector v;
            v.add_graph(sp, h, sc.sign);
            out.add(v, Poly::monomial(1, sc.cycles));
            return;
        }
        for (int b = a + 1; b < D; ++b) {
            if (tau[b] >= 0) continue;
            tau[a] = b;
            tau[b] = a;
            rec();
            tau[a] = tau[b] = -1;
        }
    };
    rec();
    return out;
}

ChainVector disjoint_union(const Species& sp, const ChainVector& a, const ChainVector& b) {
    ChainVector out;
    for (const auto& [ka, ca] : a.terms()) {
        Graph ga = graph_from_key(sp, ka);
        for (const auto& [kb, cb] : b.terms())
            out.add_graph(sp, disjoint_union(ga, graph_from_key(sp, kb)), ca * cb);
    }
    return out;
}

PolyChain disjoint_union(const Species& sp, const PolyChain& a, const PolyChain& b) {
    PolyChain out;
    for (const auto& [ka, pa] : a.terms()) {
        Graph ga = graph_from_key(sp, ka);
        for (const auto& [kb, pb] : b.terms()) {
            ChainVector v;
            v.add_graph(sp, disjoint_union(ga, graph_from_key(sp, kb)), 1);
            out.add(v, pa * pb);
        }
    }
    return out;
}

ChainVector bracket(const Species& sp, const ChainVector& a, const ChainVector& b) {
    ChainVector out;
    for (const auto& [ka, ca] : a.terms()) {
        ChainVector A = ChainVector::of(ka);
        int va = graph_from_key(sp, ka).num_vertices();
        for (const auto& [kb, cb] : b.terms()) {
            ChainVector B = ChainVector::of(kb);
            Rational c = ca * cb;
            out.add(boundary_H(sp, disjoint_union(sp, A, B)), c);
            out.add(disjoint_union(sp, boundary_H(sp, A), B), -c);
            out.add(disjoint_union(sp, A, boundary_H(sp, B)), va % 2 == 0 ? -c : c);
        }
    }
    return out;
}

ChainVector mu1(const Species& sp, const ChainVector& a, const ChainVector& b) {
    ChainVector out = deformation_coefficient(sp, disjoint_union(sp, a, b), 1);
    out.add(disjoint_union(sp, deformation_coefficient(sp, a, 1), b), -1);
    out.add(disjoint_union(sp, a, deformation_coefficient(sp, b, 1)), -1);
    return out;
}

ChainVector mu1_from_deformation(const Species& sp, const std::string& a, const std::string& b) {
    Graph ga = graph_from_key(sp, a), gb = graph_from_key(sp, b);
    int e = ga.num_edges() + gb.num_edges();
    PolyChain whole = deformation_D(sp, disjoint_union(sp, ChainVector::of(a), ChainVector::of(b)));
    PolyChain parts = disjoint_union(sp, deformation_D(sp, ChainVector::of(a)), deformation_D(sp, ChainVector::of(b)));
    ChainVector out = whole.coefficient(e - 1);
    out.add(parts.coefficient(e - 1), -1);
    return out;
}

void Report::fail(const std::string& why) {
    pass = false;
    if (failures.size() < 20) failures.push_back(why);
}

nlohmann::json Report::to_json() const {
    nlohmann::json j;
    j["schema"] = "graphoplex.report/1";
    j["suite"] = suite;
    j["species"] = species;
    j["window"] = window;
    j["pass"] = pass;
    j["checked"] = checked;
    j["failures"] = failures;
    return j;
}

Report verify_adjoint(const Species& sp, int k_max, int e_max) {
    Report rep;
    rep.suite = "adjoint";
    rep.species = sp.name();
    rep.window = "k<=" + std::to_string(k_max) + " e<=" + std::to_string(e_max);
    for (int k = 1; k <= k_max; ++k)
        for (int e = 1; e <= e_max; ++e) {
            auto top = pairing_basis(sp, k, e);
            auto bottom = pairing_basis(sp, k - 1, e - 1);
            if (top.empty() || bottom.empty()) continue;
            std::map<std::string, PolyChain> dn;
            for (const auto& x : top) dn[x] = boundary_N_symbolic(sp, ChainVector::of(x));
            for (const auto& y : bottom) {
                ChainVector dy = coboundary_E(sp, ChainVector::of(y));
                for (const auto& x : top) {
                    ++rep.checked;
                    Poly lhs = pairing_M(sp, dn[x], ChainVector::of(y));
                    Poly rhs = pairing_M(sp, ChainVector::of(x), dy);
                    if (!(lhs == rhs))
                        rep.fail(describe(sp, x) + " vs " + describe(sp, y) + ": " + lhs.str() + " != " + rhs.str());
                }
            }
        }
    return rep;
}

Report verify_homotopy(const Species& sp, int k_max, int r_max) {
    Report rep;
    rep.suite = "homotopy";
    rep.species = sp.name();
    rep.window = "k<=" + std::to_string(k_max) + " r<=" + std::to_string(r_max);
    std::vector<std::pair<std::string, int>> window; // key, vertex count
    for (int k = 1; k <= k_max; ++k)
        for (int r = 0; r <= r_max; ++r)
            for (const auto& key : enumerate_basis(sp, k, r, Filter::FULL)) window.emplace_back(key, k);
    for (const auto& [key, k] : window) {
        ChainVector x = ChainVector::of(key);
        ++rep.checked;
        if (!(deformation_coefficient(sp, x, 0) == x)) rep.fail("D_0 != id on " + describe(sp, key));
        ChainVector lhs = boundary_H(sp, x);
        ChainVector rhs = boundary_E(sp, deformation_coefficient(sp, x, 1));
        rhs.add(deformation_coefficient(sp, boundary_E(sp, x), 1), -1);
        if (!(lhs == rhs)) rep.fail("dH != dE D1 - D1 dE on " + describe(sp, key));
    }
    // pairs whose union stays inside the window
    for (const auto& [a, ka] : window)
        for (const auto& [b, kb] : window) {
            if (ka + kb > k_max) continue;
            Graph ga = graph_from_key(sp, a), gb = graph_from_key(sp, b);
            int r = ga.num_edges() + gb.num_edges() - ka - kb + 1;
            if (r > r_max) continue;
            ++rep.checked;
            ChainVector A = ChainVector::of(a), B = ChainVector::of(b);
            ChainVector m1 = mu1(sp, A, B);
            if (!(m1 == mu1_from_deformation(sp, a, b)))
                rep.fail("mu1 mismatch on " + describe(sp, a) + " , " + describe(sp, b));
            ChainVector lhs = bracket(sp, A, B);
            ChainVector rhs = boundary_E(sp, m1);
            rhs.add(mu1(sp, boundary_E(sp, A), B), -1);
            rhs.add(mu1(sp, A, boundary_E(sp, B)), ka % 2 == 0 ? -1 : 1);
            if (!(lhs == rhs)) rep.fail("[,] != dE mu1 - mu1 dE on " + describe(sp, a) + " , " + describe(sp, b));
        }
    return rep;
}

} // namespace gpx
