// One PASS/FAIL line per acceptance criterion. Arithmetic is exact, so every
// comparison is equality; the only tolerances are the wall-clock limits.

#include "graphoplex/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

using namespace gpx;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string title;
    double limit_seconds; // 0: no limit stated
    std::function<Outcome()> body;
};

// Folds suite reports into one outcome, listing check counts.
Outcome from_reports(const std::vector<Report>& reports) {
    Outcome o;
    std::ostringstream d;
    for (const Report& r : reports) {
        o.pass = o.pass && r.pass;
        d << r.species << " " << r.window << ": " << r.checked << " checked";
        if (!r.failures.empty()) d << ", first failure: " << r.failures.front();
        d << "; ";
    }
    o.detail = d.str();
    return o;
}

Outcome betti_pattern(const std::string& species, int k_max, const std::vector<int>& live, long value) {
    BettiTable t = betti_table(species_from_name(species), Filter::CONNECTED, 1, k_max, BoundaryKind::E);
    Outcome o;
    std::ostringstream d;
    d << "betti";
    for (int k = 0; k <= k_max; ++k) {
        bool on = std::find(live.begin(), live.end(), k) != live.end();
        long want = on ? value : 0;
        d << " " << t.betti(k) << (t.exact(k) ? "" : "?");
        if (t.betti(k) != want || !t.exact(k)) o.pass = false;
    }
    o.detail = d.str();
    return o;
}

std::vector<Criterion> criteria() {
    Species cc = Species::cc(), aa = Species::aa(), z2 = species_from_name("group:z2"),
            trivial = species_from_name("group:trivial");
    return {
        {1, "trivial-group homology of connected graphs, k <= 12", 10,
         [] { return betti_pattern("group:trivial", 12, {3, 7, 11}, 1); }},
        {2, "Z2 homology of connected graphs, k <= 7", 120, [] { return betti_pattern("group:z2", 7, {3, 7}, 2); }},
        {3, "dE^2 = dH^2 = dE dH + dH dE = 0 for cc, aa, group:z2, k <= 6, r <= 3", 300,
         [=] { return from_reports({verify_squares(cc, 6, 3), verify_squares(aa, 6, 3), verify_squares(z2, 6, 3)}); }},
        // No two adjacent cc blocks are both nonzero below e = 6, so cc is also
        // run one step further to exercise the identity at all.
        {4, "M(dn x, y) = M(x, dE y) for cc and group:z2, k <= 4, e <= 5 (cc also k <= 5, e <= 7)", 300,
         [=] { return from_reports({verify_adjoint(cc, 4, 5), verify_adjoint(z2, 4, 5), verify_adjoint(cc, 5, 7)}); }},
        {5, "pairing blocks nondegenerate with |leading| = prod |Aut|, k <= 4, e <= 5", 0,
         [=] {
             return from_reports(
                 {verify_nondegeneracy(cc, 4, 5), verify_nondegeneracy(aa, 4, 5), verify_nondegeneracy(z2, 4, 5)});
         }},
        {6, "D0 = id, dH, mu1 and bracket identities: trivial k <= 7, cc k <= 4 r <= 2", 0,
         [=] { return from_reports({verify_homotopy(trivial, 7, 1), verify_homotopy(cc, 4, 2)}); }},
        {7, "ce_boundary I(G) = I(dn G), cc k <= 3, e <= 3, n = 1, 2", 0,
         [] { return from_reports({verify_invariant_diagram(3, 3, {1, 2})}); }},
        {8, "M' = M(n) at s = 2n and M'(n) = M'(n+1), cc e <= 3, n = 1, 2", 0,
         [] { return from_reports({verify_pairing_restriction(3, 3, {1, 2})}); }},
        {9, "H(connected) = H(qgraph) + H(bivalent) for cc and group:z2, k <= 6, r <= 3", 0,
         [=] { return from_reports({verify_pss_sum(cc, 6, 3), verify_pss_sum(z2, 6, 3)}); }},
        {10, "Moyal: orders 0 and 1, associativity through t^3, 20 triples, n = 2, degree <= 3", 30,
         [] { return from_reports({verify_moyal(20240601, 20, 2, 3, 3)}); }},
        {11, "H(full) is free graded-commutative on H(connected), trivial group, k <= 10", 0,
         [=] { return from_reports({verify_hopf_dims(trivial, 10, 1)}); }},
    };
}

} // namespace

int main() {
    int failed = 0;
    for (const Criterion& c : criteria()) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.body();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_time = c.limit_seconds <= 0 || secs < c.limit_seconds;
        bool ok = o.pass && in_time;
        if (!ok) ++failed;
        std::printf("%s criterion %d: %s [%.2f s%s] %s%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                    c.limit_seconds > 0 ? (" of " + std::to_string(static_cast<int>(c.limit_seconds)) + " s").c_str() : "",
                    in_time ? "" : "TOO SLOW ", o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of 11 criteria failed\n", failed);
    return failed ? 1 : 0;
}
