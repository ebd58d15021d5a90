#include "graphoplex/linalg.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gpx {

namespace {

using IntRow = std::vector<std::pair<int, Integer>>;

IntRow clear_denominators(const std::vector<std::pair<int, Rational>>& row) {
    Integer l = 1;
    for (const auto& [c, q] : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    IntRow out;
    for (const auto& [c, q] : row) {
        if (q == 0) continue;
        Integer v = q.get_num() * (l / q.get_den());
        out.emplace_back(c, v);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

void remove_content(IntRow& r) {
    Integer g = 0;
    for (const auto& [c, v] : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g > 1)
        for (auto& [c, v] : r) v /= g;
}

// r <- a*r - b*p, both sorted by column
IntRow combine(const IntRow& r, const Integer& a, const IntRow& p, const Integer& b) {
    IntRow out;
    out.reserve(r.size() + p.size());
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < p.size()) {
        if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
            out.emplace_back(r[i].first, a * r[i].second);
            ++i;
        } else if (i == r.size() || p[j].first < r[i].first) {
            out.emplace_back(p[j].first, -b * p[j].second);
            ++j;
        } else {
            Integer v = a * r[i].second - b * p[j].second;
            if (v != 0) out.emplace_back(r[i].first, v);
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

std::size_t rank(const std::vector<std::vector<std::pair<int, Rational>>>& rows) {
    std::vector<IntRow> work;
    for (const auto& r : rows) {
        IntRow ir = clear_denominators(r);
        if (!ir.empty()) work.push_back(std::move(ir));
    }
    std::stable_sort(work.begin(), work.end(),
                     [](const IntRow& a, const IntRow& b) { return a.size() < b.size(); });
    std::map<int, IntRow> pivots;
    for (IntRow& r : work) {
        remove_content(r);
        while (!r.empty()) {
            auto it = pivots.find(r.front().first);
            if (it == pivots.end()) {
                pivots.emplace(r.front().first, std::move(r));
                break;
            }
            const IntRow& p = it->second;
            Integer g;
            mpz_gcd(g.get_mpz_t(), r.front().second.get_mpz_t(), p.front().second.get_mpz_t());
            Integer a = p.front().second / g, b = r.front().second / g;
            r = combine(r, a, p, b);
            remove_content(r);
        }
    }
    return pivots.size();
}

std::size_t rank(const SparseMatrix& m) {
    if (m.symbolic) throw Error("Symbolic", "rank needs a numeric matrix");
    std::vector<std::vector<std::pair<int, Rational>>> rows(m.rows.size());
    for (const auto& [ij, p] : m.entries) {
        if (p.degree() > 0) throw Error("Symbolic", "rank needs a numeric matrix");
        rows[static_cast<std::size_t>(ij.first)].emplace_back(ij.second, p.coeff(0));
    }
    return rank(rows);
}

long BettiTable::betti(int k) const {
    for (const auto& r : rows)
        if (r.k == k) return r.betti;
    return 0;
}

bool BettiTable::exact(int k) const {
    for (const auto& r : rows)
        if (r.k == k) return r.exact;
    return false;
}

BettiTable betti_table(const Species& sp, Filter f, int r, int k_max, BoundaryKind kind, long n) {
    BettiTable t;
    t.species = sp.name();
    t.complex = filter_name(f);
    t.boundary = kind == BoundaryKind::E ? "dE" : kind == BoundaryKind::H ? "dH" : "dN(" + std::to_string(n) + ")";
    t.r = r;
    std::vector<std::vector<std::string>> bases;
    for (int k = 0; k <= k_max; ++k) bases.push_back(enumerate_basis(sp, k, r, f));
    bool top_ok = true;
    try {
        bases.push_back(enumerate_basis(sp, k_max + 1, r, f));
    } catch (const Error& e) {
        if (e.kind() != "ResourceLimit") throw;
        top_ok = false;
    }
    // ranks[k] = rank of the boundary C_k -> C_{k-1}
    std::vector<std::size_t> ranks(bases.size() + 1, 0);
    for (std::size_t k = 1; k < bases.size(); ++k) {
        if (bases[k].empty() || bases[k - 1].empty()) continue;
        ranks[k] = rank(boundary_matrix(sp, bases[k], bases[k - 1], kind, f, n));
    }
    for (int k = 0; k <= k_max; ++k) {
        BettiRow row;
        row.k = k;
        row.dim = bases[static_cast<std::size_t>(k)].size();
        row.rank_out = ranks[static_cast<std::size_t>(k)];
        row.rank_in = ranks[static_cast<std::size_t>(k) + 1];
        row.exact = (k < k_max) || top_ok;
        row.betti = static_cast<long>(row.dim) - static_cast<long>(row.rank_out) - static_cast<long>(row.rank_in);
        t.rows.push_back(row);
    }
    return t;
}

std::string betti_csv(const BettiTable& t) {
    std::ostringstream os;
    os << "k,dim,rank_out,rank_in,betti,exact\n";
    for (const auto& r : t.rows)
        os << r.k << ',' << r.dim << ',' << r.rank_out << ',' << r.rank_in << ',' << r.betti << ','
           << (r.exact ? "exact" : "upper_bound") << '\n';
    return os.str();
}

} // namespace gpx
