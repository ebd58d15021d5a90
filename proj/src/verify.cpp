#include "graphoplex/verify.hpp"

#include "graphoplex/sympalg.hpp"

#include <map>
#include <random>

namespace gpx {

namespace {

std::string window_of(int k, const std::string& second, int v) {
    return "k<=" + std::to_string(k) + " " + second + "<=" + std::to_string(v);
}

} // namespace

Report verify_squares(const Species& sp, int k_max, int r_max) {
    Report rep;
    rep.suite = "squares";
    rep.species = sp.name();
    rep.window = window_of(k_max, "r", r_max);
    for (int r = 0; r <= r_max; ++r)
        for (int k = 1; k <= k_max; ++k)
            for (const auto& key : enumerate_basis(sp, k, r, Filter::FULL)) {
                ChainVector x = ChainVector::of(key);
                ChainVector dE = boundary_E(sp, x), dH = boundary_H(sp, x);
                ++rep.checked;
                if (!boundary_E(sp, dE).empty()) rep.fail("dE^2 != 0 on " + describe(sp, key));
                if (!boundary_H(sp, dH).empty()) rep.fail("dH^2 != 0 on " + describe(sp, key));
                ChainVector anti = boundary_E(sp, dH);
                anti.add(boundary_H(sp, dE));
                if (!anti.empty()) rep.fail("dE dH + dH dE != 0 on " + describe(sp, key));
            }
    return rep;
}

Report verify_nondegeneracy(const Species& sp, int k_max, int e_max) {
    Report rep;
    rep.suite = "nondegeneracy";
    rep.species = sp.name();
    rep.window = window_of(k_max, "e", e_max);
    for (int k = 1; k <= k_max; ++k)
        for (int e = 0; e <= e_max; ++e) {
            auto basis = pairing_basis(sp, k, e);
            if (basis.empty()) continue;
            ++rep.checked;
            LeadingTerm det = determinant_leading_term(pairing_matrix(sp, basis));
            Rational aut = 1;
            for (const auto& b : basis) aut *= Rational(static_cast<unsigned long>(automorphism_order(sp, graph_from_key(sp, b))));
            std::string where = "block k=" + std::to_string(k) + " e=" + std::to_string(e);
            if (det.degree < 0)
                rep.fail(where + ": determinant vanishes");
            else if (abs(det.coeff) != aut)
                rep.fail(where + ": leading coefficient " + det.coeff.get_str() + ", automorphisms " + aut.get_str());
        }
    return rep;
}

namespace {

// Every commutative graph with k <= k_max, e <= e_max: connected classes
// (zero ones included) and the nonzero disconnected ones.
std::vector<Graph> commutative_graphs(int k_max, int e_max, bool nonzero_only) {
    Species sp = Species::cc();
    std::map<std::string, bool> keys;
    for (int k = 1; k <= k_max; ++k)
        for (int e = 0; e <= e_max; ++e) {
            int r = e - k + 1;
            if (r >= 0)
                for (const auto& [key, zero] : connected_classes(sp, k, r)) keys[key] = zero;
            for (const auto& key : pairing_basis(sp, k, e)) keys[key] = false;
        }
    std::vector<Graph> out;
    for (const auto& [key, zero] : keys)
        if (!(zero && nonzero_only)) out.push_back(graph_from_key(sp, key));
    return out;
}

} // namespace

Report verify_pairing_restriction(int k_max, int e_max, const std::vector<int>& ns) {
    Species sp = Species::cc();
    Report rep;
    rep.suite = "pairing-restriction";
    rep.species = sp.name();
    rep.window = window_of(k_max, "e", e_max);
    std::vector<Graph> gs = commutative_graphs(k_max, e_max, false);
    for (int n : ns) {
        std::vector<WedgeElement> I, I_next;
        for (const Graph& g : gs) {
            I.push_back(invariant_state_sum(sp, g, n));
            I_next.push_back(invariant_state_sum(sp, g, n + 1));
        }
        for (std::size_t a = 0; a < gs.size(); ++a)
            for (std::size_t b = 0; b < gs.size(); ++b) {
                ++rep.checked;
                Rational mp = pairing_Mprime(I[a], I[b]);
                Rational m = pairing_M(sp, gs[a], gs[b]).eval(2 * n);
                std::string where = "graphs #" + std::to_string(a) + ", #" + std::to_string(b) + " n=" + std::to_string(n);
                if (mp != m) rep.fail(where + ": M' = " + mp.get_str() + ", M = " + m.get_str());
                // w = I_n(a) only uses indices <= n
                Rational next = pairing_Mprime(I[a].embed(n + 1), I_next[b]);
                if (next != mp) rep.fail(where + ": not stable, " + mp.get_str() + " -> " + next.get_str());
            }
    }
    return rep;
}

Report verify_invariant_diagram(int k_max, int e_max, const std::vector<int>& ns) {
    Species sp = Species::cc();
    Report rep;
    rep.suite = "invariant-diagram";
    rep.species = sp.name();
    rep.window = window_of(k_max, "e", e_max);
    for (const Graph& g : commutative_graphs(k_max, e_max, true)) {
        SignedClass cls = canonical_class(sp, g);
        ChainVector c = ChainVector::of(cls.key, cls.sign);
        for (int n : ns) {
            ++rep.checked;
            WedgeElement I = invariant_state_sum(sp, g, n);
            std::string where = describe(sp, cls.key) + " n=" + std::to_string(n);
            if (!(ce_boundary(I) == invariant_state_sum(sp, boundary_N(sp, c, n), n)))
                rep.fail(where + ": ce_boundary(I(G)) != I(dn G)");
            // sp(2n) generators: the quadratic monomials
            for (int u = 0; u < 2 * n; ++u)
                for (int v = u; v < 2 * n; ++v) {
                    PolyElement h = PolyElement::variable(n, u) * PolyElement::variable(n, v);
                    if (!hamiltonian_action(h, I).is_zero())
                        rep.fail(where + ": not invariant under " + h.str());
                }
        }
    }
    return rep;
}

namespace {

PolyElement random_poly(std::mt19937_64& rng, int n, int max_degree) {
    std::uniform_int_distribution<int> nterms(1, 4), coef(-3, 3), var(0, 2 * n - 1), deg(0, max_degree);
    PolyElement p(n);
    while (p.is_zero()) {
        int t = nterms(rng);
        for (int i = 0; i < t; ++i) {
            Monomial m = Monomial::one(n);
            int d = deg(rng);
            for (int j = 0; j < d; ++j) m.exp[var(rng)] += 1;
            p.add(m, coef(rng));
        }
    }
    return p;
}

} // namespace

Report verify_moyal(std::uint64_t seed, int triples, int n, int max_degree, int order) {
    Report rep;
    rep.suite = "moyal";
    rep.species = "cc";
    rep.window = "n=" + std::to_string(n) + " degree<=" + std::to_string(max_degree) + " order<=" + std::to_string(order);
    std::mt19937_64 rng(seed);
    for (int t = 0; t < triples; ++t) {
        PolyElement f = random_poly(rng, n, max_degree), g = random_poly(rng, n, max_degree),
                    h = random_poly(rng, n, max_degree);
        std::string where = "triple " + std::to_string(t);
        ++rep.checked;
        auto fg = moyal_star(f, g, order);
        if (!(fg[0] == f * g)) rep.fail(where + ": order 0 is not the product");
        if (order >= 1 && !(fg[1] == poisson_bracket(f, g))) rep.fail(where + ": order 1 is not the bracket");
        if (!(fg == moyal_star_by_iteration(f, g, order))) rep.fail(where + ": picture formula != iterated B");
        auto left = moyal_series_product(moyal_series_product({f}, {g}, order), {h}, order);
        auto right = moyal_series_product({f}, moyal_series_product({g}, {h}, order), order);
        for (int m = 0; m <= order; ++m)
            if (!(left[m] == right[m])) rep.fail(where + ": not associative at order " + std::to_string(m));
    }
    return rep;
}

Report verify_hopf_dims(const Species& sp, int k_max, int r_max) {
    Report rep;
    rep.suite = "hopf-dims";
    rep.species = sp.name();
    rep.window = window_of(k_max, "r", r_max);
    // series[k][w] with w = r - 1 shifted by one so that r = 0 fits
    const int W = r_max + 1;
    std::vector<std::vector<Integer>> series(k_max + 1, std::vector<Integer>(W + 1, 0));
    series[0][1] = 1; // the empty graph: k = 0, r = 1
    bool closed = true;
    int exact_conn_k = k_max;
    std::vector<BettiTable> full;
    for (int r = 0; r <= r_max; ++r) {
        BettiTable conn = betti_table(sp, Filter::CONNECTED, r, k_max, BoundaryKind::E);
        full.push_back(betti_table(sp, Filter::FULL, r, k_max, BoundaryKind::E));
        for (const auto& row : conn.rows) {
            if (!row.exact) exact_conn_k = std::min(exact_conn_k, row.k - 1);
            if (row.betti == 0 || row.k == 0) continue;
            if (r == 0) closed = false;
            for (long c = 0; c < row.betti; ++c) {
                // multiply by (1 + x^k y^(r-1)) or 1 / (1 - x^k y^(r-1))
                auto next = series;
                if (row.k % 2 == 1) {
                    for (int k = row.k; k <= k_max; ++k)
                        for (int w = 0; w <= W; ++w) {
                            int pw = w - (r - 1);
                            if (pw >= 0 && pw <= W) next[k][w] += series[k - row.k][pw];
                        }
                } else {
                    for (int k = row.k; k <= k_max; ++k)
                        for (int w = 0; w <= W; ++w) {
                            int pw = w - (r - 1);
                            if (pw >= 0 && pw <= W) next[k][w] += next[k - row.k][pw];
                        }
                }
                series = std::move(next);
            }
        }
    }
    if (!closed) {
        rep.fail("connected homology at r = 0 is nonzero, the window does not close under products");
        return rep;
    }
    for (int r = 0; r <= r_max; ++r)
        for (const auto& row : full[r].rows) {
            if (row.k == 0 || !row.exact || row.k > exact_conn_k) continue;
            ++rep.checked;
            Integer want = series[row.k][r];
            if (want != row.betti)
                rep.fail("k=" + std::to_string(row.k) + " r=" + std::to_string(r) + ": H has dim " +
                         std::to_string(row.betti) + ", free algebra " + want.get_str());
        }
    return rep;
}

Report verify_pss_sum(const Species& sp, int k_max, int r_max) {
    Report rep;
    rep.suite = "pss-sum";
    rep.species = sp.name();
    rep.window = window_of(k_max, "r", r_max);
    for (int r = 0; r <= r_max; ++r) {
        BettiTable c = betti_table(sp, Filter::CONNECTED, r, k_max, BoundaryKind::E);
        BettiTable q = betti_table(sp, Filter::QGRAPH, r, k_max, BoundaryKind::E);
        BettiTable b = betti_table(sp, Filter::BIVALENT, r, k_max, BoundaryKind::E);
        for (int k = 1; k <= k_max; ++k) {
            if (!c.exact(k) || !q.exact(k) || !b.exact(k)) continue;
            ++rep.checked;
            if (c.betti(k) != q.betti(k) + b.betti(k))
                rep.fail("k=" + std::to_string(k) + " r=" + std::to_string(r) + ": " + std::to_string(c.betti(k)) +
                         " != " + std::to_string(q.betti(k)) + " + " + std::to_string(b.betti(k)));
        }
    }
    return rep;
}

} // namespace gpx
