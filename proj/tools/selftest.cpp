#include "commands.hpp"

#include "graphoplex/io.hpp"
#include "graphoplex/sympalg.hpp"
#include "graphoplex/verify.hpp"

#include <functional>
#include <iostream>
#include <sstream>

namespace gpx::cli {

namespace {

struct Check {
    std::string name;
    std::function<bool()> body;
};

int quiet_run(std::vector<std::string> args) {
    std::vector<char*> argv;
    for (auto& a : args) argv.push_back(a.data());
    std::streambuf* err = std::cerr.rdbuf();
    std::ostringstream sink;
    std::cerr.rdbuf(sink.rdbuf());
    int code = run(static_cast<int>(argv.size()), argv.data());
    std::cerr.rdbuf(err);
    return code;
}

Vertex vx(std::vector<int> darts, int label = 0) { return Vertex{std::move(darts), label}; }

// Triangle of bivalent commutative vertices, edges 0->1 (darts 0,1), 1->2
// (2,3) and 2->0 (4,5).
Graph cc_triangle() { return make_graph({{0, 1}, {2, 3}, {4, 5}}, {vx({0, 5}), vx({1, 2}), vx({3, 4})}); }

Graph polygon(int k) {
    std::vector<std::pair<int, int>> edges;
    std::vector<Vertex> verts;
    for (int i = 0; i < k; ++i) {
        edges.emplace_back(2 * i, (2 * i + 1) % (2 * k));
        verts.push_back(vx({(2 * i + 2 * k - 1) % (2 * k), 2 * i}, 0));
    }
    return make_graph(edges, verts);
}

std::vector<Check> checks() {
    std::vector<Check> c;
    Species cc = Species::cc(), aa = Species::aa(), z2 = species_from_name("group:z2");
    c.push_back({"aa structures on 3 darts", [=] { return list_structures(aa, {0, 1, 2}).size() == 2; }});
    c.push_back({"cc mate of two trivalent vertices", [=] {
                     Vertex m = mate(cc, vx({0, 1, 2}), 2, vx({3, 4, 5}), 3);
                     return m.valence() == 4;
                 }});
    c.push_back({"cc trivalent vertex is real", [=] { return !is_fake(cc, vx({0, 1, 2})); }});
    c.push_back({"z2 with identity star is valid", [] { return validate_group(cyclic_group(2, false)).empty(); }});
    c.push_back({"s3 with identity star is invalid", [] { return !validate_group(symmetric_group3(false)).empty(); }});
    c.push_back({"s3 with inverse star is valid", [] { return validate_group(symmetric_group3(true)).empty(); }});
    c.push_back({"transposing two vertices and flipping an edge keeps the class", [=] {
                     Graph g = cc_triangle();
                     // swap vertices 0 and 1, reverse the edge 1->2
                     Graph h = make_graph({{0, 1}, {3, 2}, {4, 5}}, {vx({1, 2}), vx({0, 5}), vx({3, 4})});
                     SignedClass a = canonical_class(cc, g), b = canonical_class(cc, h);
                     return a.key == b.key && a.sign == b.sign;
                 }});
    c.push_back({"polygon automorphisms are dihedral", [=] {
                     Species tr = species_from_name("group:trivial");
                     for (int k = 2; k <= 7; ++k)
                         if (automorphism_order(tr, polygon(k)) != static_cast<std::uint64_t>(2 * k)) return false;
                     return automorphism_order(cc, cc_triangle()) == 6;
                 }});
    c.push_back({"asymmetric labelled triangle has one automorphism", [] {
                     Species z3 = species_from_name("group:z3");
                     Graph g = polygon(3);
                     for (int v = 0; v < 3; ++v) g.verts[v].label = v;
                     return automorphism_order(z3, g) == 1;
                 }});
    c.push_back({"no classes without vertices", [=] {
                     for (Species sp : {cc, aa, z2})
                         for (int r = 0; r <= 2; ++r)
                             if (!enumerate_basis(sp, 0, r, Filter::FULL).empty()) return false;
                     return true;
                 }});
    c.push_back({"quasi-edge on one edge is rejected", [=] {
                     try {
                         contract_quasi_edge(cc, cc_triangle(), 0, 1);
                     } catch (const Error& e) {
                         return e.kind() == "IsActualEdge";
                     }
                     return false;
                 }});
    c.push_back({"boundaries of the empty chain", [=] {
                     ChainVector e;
                     return boundary_E(cc, e).empty() && boundary_H(cc, e).empty() && coboundary_E(cc, e).empty();
                 }});
    c.push_back({"empty bases give a 0x0 matrix", [=] {
                     SparseMatrix m = boundary_matrix(cc, {}, {}, BoundaryKind::E, Filter::FULL, 1);
                     return m.num_rows() == 0 && m.num_cols() == 0 && rank(m) == 0;
                 }});
    c.push_back({"no matchings across vertex counts", [=] {
                     Graph a = polygon(3), b = polygon(4);
                     Species tr = species_from_name("group:trivial");
                     return matchings(tr, a, b).empty() && pairing_M(tr, a, b).is_zero();
                 }});
    c.push_back({"disjoint union is graded commutative", [=] {
                     std::vector<std::pair<std::string, int>> xs;
                     for (int k = 2; k <= 3; ++k)
                         for (const auto& x : enumerate_basis(z2, k, 1, Filter::CONNECTED)) xs.emplace_back(x, k);
                     for (const auto& [x, kx] : xs)
                         for (const auto& [y, ky] : xs) {
                             ChainVector ab = disjoint_union(z2, ChainVector::of(x), ChainVector::of(y));
                             ChainVector ba;
                             ba.add(disjoint_union(z2, ChainVector::of(y), ChainVector::of(x)), (kx * ky) % 2 ? -1 : 1);
                             if (!(ab == ba)) return false;
                         }
                     return true;
                 }});
    c.push_back({"bracket with the empty graph vanishes", [=] {
                     for (const auto& x : enumerate_basis(z2, 3, 1, Filter::FULL))
                         if (!bracket(z2, ChainVector::of(""), ChainVector::of(x)).empty()) return false;
                     return true;
                 }});
    c.push_back({"adjointness across incompatible sizes is zero on both sides", [=] {
                     auto x = enumerate_basis(z2, 3, 1, Filter::FULL), y = enumerate_basis(z2, 3, 1, Filter::FULL);
                     for (const auto& a : x)
                         for (const auto& b : y) {
                             if (!pairing_M(z2, boundary_N_symbolic(z2, ChainVector::of(a)), ChainVector::of(b)).is_zero()) return false;
                             if (!pairing_M(z2, ChainVector::of(a), coboundary_E(z2, ChainVector::of(b))).is_zero()) return false;
                         }
                     return true;
                 }});
    c.push_back({"adjointness on an empty window passes vacuously", [=] {
                     Report r = verify_adjoint(cc, 0, 0);
                     return r.pass && r.checked == 0;
                 }});
    c.push_back({"rank of zero and identity matrices", [] {
                     std::vector<std::vector<std::pair<int, Rational>>> zero(3), id(4);
                     for (int i = 0; i < 4; ++i) id[i].emplace_back(i, 1);
                     return rank(zero) == 0 && rank(id) == 4;
                 }});
    c.push_back({"empty complex has an all-zero table", [] {
                     BettiTable t = betti_table(species_from_name("group:trivial"), Filter::CONNECTED, 0, 5, BoundaryKind::E);
                     for (const auto& r : t.rows)
                         if (r.dim || r.betti) return false;
                     return true;
                 }});
    c.push_back({"derivative in an absent variable", [] {
                     PolyElement f = PolyElement::variable(2, 0) * PolyElement::variable(2, 2);
                     return partial_derivative(f, 1).is_zero();
                 }});
    c.push_back({"{F, F} = 0", [] {
                     PolyElement f = PolyElement::variable(2, 0) * PolyElement::variable(2, 2) + PolyElement::variable(2, 3) * PolyElement::variable(2, 3);
                     return poisson_bracket(f, f).is_zero();
                 }});
    c.push_back({"hamiltonian matrix of q1^2", [] {
                     PolyElement h = PolyElement::variable(1, 1) * PolyElement::variable(1, 1);
                     RationalMatrix m = hamiltonian_matrix(h);
                     // column 0 = xi(p1) = 2 q1, column 1 = xi(q1) = 0
                     return m[0][0] == 0 && m[1][0] == 2 && m[0][1] == 0 && m[1][1] == 0;
                 }});
    c.push_back({"boundary of a 2-wedge is the bracket", [] {
                     Monomial f = Monomial::var(2, 0) * Monomial::var(2, 1) * Monomial::var(2, 3);
                     Monomial h = Monomial::var(2, 1) * Monomial::var(2, 3);
                     WedgeElement w(2), want(2);
                     w.add({f, h}, 1);
                     want.add_product({poisson_bracket(PolyElement::monomial(f), PolyElement::monomial(h))}, 1);
                     return ce_boundary(w) == want;
                 }});
    c.push_back({"repeated wedge factor vanishes", [] {
                     Monomial f = Monomial::var(1, 0) * Monomial::var(1, 1);
                     WedgeElement w(1);
                     w.add({f, f}, 1);
                     return w.is_zero() && ce_boundary(w).is_zero();
                 }});
    c.push_back({"state count is (2n)^e", [=] {
                     std::size_t states = 0;
                     state_sum_tensor(cc_triangle(), 2, &states);
                     return states == 64;
                 }});
    c.push_back({"distinct wedges are orthogonal", [] {
                     WedgeElement a(1), b(1);
                     a.add({Monomial::var(1, 0) * Monomial::var(1, 1)}, 1);
                     b.add({Monomial::var(1, 0) * Monomial::var(1, 0)}, 1);
                     return pairing_Mprime(a, b) == 0 && pairing_Mprime(a, a) == 1;
                 }});
    c.push_back({"star product at order 0 is the product", [] {
                     PolyElement f = PolyElement::variable(2, 0) + PolyElement::variable(2, 3);
                     PolyElement g = PolyElement::variable(2, 2) * PolyElement::variable(2, 1);
                     return moyal_star(f, g, 2)[0] == f * g;
                 }});
    c.push_back({"squares suite on cc up to k = 5, r = 3", [] {
                     return quiet_run({"graphoplex", "verify", "--suite", "squares", "--species", "cc", "--kmax", "5",
                                       "--rmax", "3", "--out", "/dev/null"}) == kOk;
                 }});
    c.push_back({"unknown species is a usage error", [] {
                     return quiet_run({"graphoplex", "homology", "--species", "group:nosuch"}) == kUsage;
                 }});
    return c;
}

} // namespace

int selftest(std::ostream& out) {
    int failed = 0;
    for (const auto& c : checks()) {
        bool ok = false;
        try {
            ok = c.body();
        } catch (const std::exception& e) {
            out << "  exception: " << e.what() << '\n';
        }
        out << (ok ? "ok    " : "FAIL  ") << c.name << '\n';
        if (!ok) ++failed;
    }
    out << (failed ? std::to_string(failed) + " failed\n" : "all passed\n");
    return failed ? kFailed : kOk;
}

} // namespace gpx::cli
