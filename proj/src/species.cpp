#include "graphoplex/species.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gpx {

int Group::inverse(int a) const {
    for (int b = 0; b < order(); ++b)
        if (mul[a][b] == unit) return b;
    throw Error("InvalidGroup", "element without inverse");
}

std::vector<std::string> validate_group(const Group& g) {
    std::vector<std::string> out;
    const int n = g.order();
    if (n == 0) {
        out.push_back("group has no elements");
        return out;
    }
    if (g.unit < 0 || g.unit >= n) {
        out.push_back("unit index out of range");
        return out;
    }
    if (static_cast<int>(g.mul.size()) != n) {
        out.push_back("multiplication table has wrong number of rows");
        return out;
    }
    for (const auto& row : g.mul) {
        if (static_cast<int>(row.size()) != n) {
            out.push_back("multiplication table row has wrong length");
            return out;
        }
        for (int x : row)
            if (x < 0 || x >= n) {
                out.push_back("multiplication table entry out of range");
                return out;
            }
    }
    if (static_cast<int>(g.star.size()) != n) {
        out.push_back("star map has wrong length");
        return out;
    }
    for (int x : g.star)
        if (x < 0 || x >= n) {
            out.push_back("star map entry out of range");
            return out;
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]]) {
                    out.push_back("not associative at (" + g.names[a] + "," + g.names[b] + "," +
                                  g.names[c] + ")");
                    goto assoc_done;
                }
assoc_done:
    for (int a = 0; a < n; ++a)
        if (g.mul[g.unit][a] != a || g.mul[a][g.unit] != a) {
            out.push_back("unit fails for " + g.names[a]);
            break;
        }
    for (int a = 0; a < n; ++a) {
        bool has_inverse = false;
        for (int b = 0; b < n; ++b)
            if (g.mul[a][b] == g.unit && g.mul[b][a] == g.unit) has_inverse = true;
        if (!has_inverse) out.push_back("no inverse for " + g.names[a]);
    }
    if (g.star[g.unit] != g.unit) out.push_back("star does not fix the unit");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.star[g.mul[a][b]] != g.mul[g.star[b]][g.star[a]]) {
                out.push_back("(gh)* != h*g* for g=" + g.names[a] + ", h=" + g.names[b]);
                return out;
            }
    return out;
}

Group trivial_group() {
    Group g;
    g.names = {"1"};
    g.unit = 0;
    g.mul = {{0}};
    g.star = {0};
    return g;
}

Group cyclic_group(int n, bool star_inverse) {
    Group g;
    for (int i = 0; i < n; ++i) g.names.push_back(i == 0 ? "1" : "g" + std::to_string(i));
    g.mul.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
    g.star.resize(n);
    for (int a = 0; a < n; ++a) g.star[a] = star_inverse ? (n - a) % n : a;
    return g;
}

Group symmetric_group3(bool star_inverse) {
    std::vector<std::vector<int>> perms;
    std::vector<int> p = {0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    Group g;
    for (const auto& q : perms) g.names.push_back(std::to_string(q[0]) + std::to_string(q[1]) +
                                                  std::to_string(q[2]));
    const int n = static_cast<int>(perms.size());
    g.mul.assign(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            // (ab)(i) = a(b(i))
            std::vector<int> c(3);
            for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
            g.mul[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    g.unit = 0;
    g.star.resize(n);
    for (int a = 0; a < n; ++a) g.star[a] = star_inverse ? g.inverse(a) : a;
    return g;
}

Group group_from_json(const nlohmann::json& j) {
    Group g;
    try {
        for (const auto& e : j.at("elements")) g.names.push_back(e.is_string() ? e.get<std::string>()
                                                                               : e.dump());
        g.unit = j.at("unit").get<int>();
        g.mul = j.at("mul").get<std::vector<std::vector<int>>>();
        g.star = j.at("star").get<std::vector<int>>();
    } catch (const nlohmann::json::exception& e) {
        throw Error("InvalidGroup", std::string("malformed group table: ") + e.what());
    }
    auto problems = validate_group(g);
    if (!problems.empty()) {
        std::string msg;
        for (const auto& p : problems) msg += (msg.empty() ? "" : "; ") + p;
        throw Error("InvalidGroup", msg);
    }
    return g;
}

nlohmann::json group_to_json(const Group& g) {
    return {{"elements", g.names}, {"unit", g.unit}, {"mul", g.mul}, {"star", g.star}};
}

Species Species::cc() { return {SpeciesTag::CC, nullptr, "cc"}; }
Species Species::aa() { return {SpeciesTag::AA, nullptr, "aa"}; }
Species Species::kk() { return {SpeciesTag::KK, nullptr, "kk"}; }

Species Species::group_species(Group g, std::string label) {
    auto problems = validate_group(g);
    if (!problems.empty()) throw Error("InvalidGroup", problems.front());
    return {SpeciesTag::GROUP, std::make_shared<const Group>(std::move(g)), std::move(label)};
}

Species species_from_name(const std::string& name) {
    if (name == "cc") return Species::cc();
    if (name == "aa") return Species::aa();
    if (name == "kk") return Species::kk();
    if (name == "group:trivial") return Species::group_species(trivial_group(), name);
    if (name == "group:z2") return Species::group_species(cyclic_group(2, false), name);
    if (name == "group:z2-inv") return Species::group_species(cyclic_group(2, true), name);
    if (name == "group:z3") return Species::group_species(cyclic_group(3, false), name);
    if (name == "group:z3-inv") return Species::group_species(cyclic_group(3, true), name);
    if (name == "group:s3-inv") return Species::group_species(symmetric_group3(true), name);
    throw Error("UnknownSpecies", "unknown species '" + name + "'");
}

namespace {

std::vector<int> rotate_to(const std::vector<int>& cyc, int d) {
    auto it = std::find(cyc.begin(), cyc.end(), d);
    if (it == cyc.end()) throw Error("MateIncompatible", "dart " + std::to_string(d) + " absent");
    std::vector<int> out(it, cyc.end());
    out.insert(out.end(), cyc.begin(), it);
    return out;
}

void require_dart(const Vertex& v, int d) {
    if (std::find(v.darts.begin(), v.darts.end(), d) == v.darts.end())
        throw Error("MateIncompatible", "dart " + std::to_string(d) + " absent");
}

int chord_partner(const Vertex& v, int d) {
    for (std::size_t i = 0; i < v.darts.size(); ++i)
        if (v.darts[i] == d) return v.darts[i ^ 1];
    throw Error("MateIncompatible", "dart " + std::to_string(d) + " absent");
}

// Group vertex with `d` as its head.
std::pair<int, int> group_head_at(const Group& g, const Vertex& v, int d, int& label) {
    if (v.darts[1] == d) {
        label = v.label;
        return {v.darts[0], v.darts[1]};
    }
    label = g.star[v.label];
    return {v.darts[1], v.darts[0]};
}

std::pair<int, int> group_tail_at(const Group& g, const Vertex& v, int d, int& label) {
    if (v.darts[0] == d) {
        label = v.label;
        return {v.darts[0], v.darts[1]};
    }
    label = g.star[v.label];
    return {v.darts[1], v.darts[0]};
}

void perfect_matchings(std::vector<int>& rest, std::vector<int>& cur,
                       std::vector<std::vector<int>>& out) {
    if (rest.empty()) {
        out.push_back(cur);
        return;
    }
    int first = rest[0];
    for (std::size_t i = 1; i < rest.size(); ++i) {
        int other = rest[i];
        std::vector<int> next;
        for (std::size_t j = 1; j < rest.size(); ++j)
            if (j != i) next.push_back(rest[j]);
        cur.push_back(first);
        cur.push_back(other);
        perfect_matchings(next, cur, out);
        cur.pop_back();
        cur.pop_back();
    }
}

} // namespace

std::vector<Vertex> list_structures(const Species& sp, const std::vector<int>& darts) {
    std::vector<Vertex> out;
    const std::size_t m = darts.size();
    switch (sp.tag) {
    case SpeciesTag::CC:
        if (m >= 2) out.push_back({darts, 0});
        break;
    case SpeciesTag::AA:
        if (m >= 2) {
            std::vector<int> rest(darts.begin() + 1, darts.end());
            std::sort(rest.begin(), rest.end());
            do {
                Vertex v{{darts[0]}, 0};
                v.darts.insert(v.darts.end(), rest.begin(), rest.end());
                out.push_back(v);
            } while (std::next_permutation(rest.begin(), rest.end()));
        }
        break;
    case SpeciesTag::KK:
        if (m >= 2 && m % 2 == 0) {
            std::vector<int> rest = darts, cur;
            std::vector<std::vector<int>> ms;
            perfect_matchings(rest, cur, ms);
            for (auto& mm : ms) out.push_back({mm, 0});
        }
        break;
    case SpeciesTag::GROUP:
        if (m == 2)
            for (int g = 0; g < sp.group->order(); ++g)
                out.push_back(normal_form(sp, {{darts[0], darts[1]}, g}));
        break;
    }
    return out;
}

Vertex mate(const Species& sp, const Vertex& a, int da, const Vertex& b, int db) {
    require_dart(a, da);
    require_dart(b, db);
    Vertex out;
    switch (sp.tag) {
    case SpeciesTag::CC:
        for (int d : a.darts)
            if (d != da) out.darts.push_back(d);
        for (int d : b.darts)
            if (d != db) out.darts.push_back(d);
        break;
    case SpeciesTag::AA: {
        auto ra = rotate_to(a.darts, da), rb = rotate_to(b.darts, db);
        out.darts.assign(ra.begin() + 1, ra.end());
        out.darts.insert(out.darts.end(), rb.begin() + 1, rb.end());
        break;
    }
    case SpeciesTag::KK: {
        int x = chord_partner(a, da), y = chord_partner(b, db);
        for (const Vertex* v : {&a, &b})
            for (std::size_t i = 0; i < v->darts.size(); i += 2) {
                int u = v->darts[i], w = v->darts[i + 1];
                if (u == da || w == da || u == db || w == db) continue;
                out.darts.push_back(u);
                out.darts.push_back(w);
            }
        out.darts.push_back(x);
        out.darts.push_back(y);
        break;
    }
    case SpeciesTag::GROUP: {
        const Group& g = *sp.group;
        int la = 0, lb = 0;
        auto pa = group_head_at(g, a, da, la);
        auto pb = group_tail_at(g, b, db, lb);
        out.darts = {pa.first, pb.second};
        out.label = g(la, lb);
        break;
    }
    }
    return normal_form(sp, out);
}

bool is_fake(const Species& sp, const Vertex& v) {
    if (sp.tag == SpeciesTag::GROUP) return v.label == sp.group->unit;
    return v.darts.size() == 2;
}

std::vector<ExpansionSplit> enumeration_splits(const Species& sp, const Vertex& v, int a_dart,
                                               int b_dart) {
    std::vector<ExpansionSplit> out;
    const std::size_t m = v.darts.size();
    switch (sp.tag) {
    case SpeciesTag::CC: {
        // side b always holds the last dart, so each bipartition appears once
        for (std::size_t mask = 1; mask < (std::size_t{1} << (m - 1)); ++mask) {
            ExpansionSplit s;
            for (std::size_t i = 0; i < m; ++i)
                ((i + 1 < m && (mask >> i & 1)) ? s.a : s.b).darts.push_back(v.darts[i]);
            s.a.darts.push_back(a_dart);
            s.b.darts.push_back(b_dart);
            s.a = normal_form(sp, s.a);
            s.b = normal_form(sp, s.b);
            out.push_back(std::move(s));
        }
        break;
    }
    case SpeciesTag::AA: {
        // gap i sits just before darts[i]
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j) {
                ExpansionSplit s;
                s.a.darts.push_back(a_dart);
                for (std::size_t t = i; t < j; ++t) s.a.darts.push_back(v.darts[t]);
                s.b.darts.push_back(b_dart);
                for (std::size_t t = j; t < m + i; ++t) s.b.darts.push_back(v.darts[t % m]);
                s.a = normal_form(sp, s.a);
                s.b = normal_form(sp, s.b);
                out.push_back(std::move(s));
            }
        break;
    }
    case SpeciesTag::KK: {
        const std::size_t c = m / 2;
        for (std::size_t cut = 0; cut < c; ++cut)
            for (int flip = 0; flip < 2; ++flip) {
                int x = v.darts[2 * cut + flip], y = v.darts[2 * cut + 1 - flip];
                for (std::size_t mask = 0; mask < (std::size_t{1} << c); ++mask) {
                    if (mask >> cut & 1) continue;
                    ExpansionSplit s;
                    for (std::size_t t = 0; t < c; ++t) {
                        if (t == cut) continue;
                        Vertex& side = (mask >> t & 1) ? s.a : s.b;
                        side.darts.push_back(v.darts[2 * t]);
                        side.darts.push_back(v.darts[2 * t + 1]);
                    }
                    s.a.darts.push_back(x);
                    s.a.darts.push_back(a_dart);
                    s.b.darts.push_back(y);
                    s.b.darts.push_back(b_dart);
                    s.a = normal_form(sp, s.a);
                    s.b = normal_form(sp, s.b);
                    out.push_back(std::move(s));
                }
            }
        break;
    }
    case SpeciesTag::GROUP: {
        const Group& g = *sp.group;
        for (int g1 = 0; g1 < g.order(); ++g1) {
            int g2 = g(g.inverse(g1), v.label);
            ExpansionSplit s;
            s.a = normal_form(sp, {{v.darts[0], a_dart}, g1});
            s.b = normal_form(sp, {{b_dart, v.darts[1]}, g2});
            out.push_back(std::move(s));
        }
        break;
    }
    }
    return out;
}

std::vector<ExpansionSplit> ideal_expansions(const Species& sp, const Vertex& v, int a_dart,
                                             int b_dart) {
    if (sp.tag == SpeciesTag::KK)
        throw Error("NotSupported", "the chord species has no ideal edge expansion rule");
    return enumeration_splits(sp, v, a_dart, b_dart);
}

Vertex normal_form(const Species& sp, const Vertex& v) {
    Vertex out = v;
    switch (sp.tag) {
    case SpeciesTag::CC:
        std::sort(out.darts.begin(), out.darts.end());
        out.label = 0;
        break;
    case SpeciesTag::AA:
        out.darts = rotate_to(v.darts, *std::min_element(v.darts.begin(), v.darts.end()));
        out.label = 0;
        break;
    case SpeciesTag::KK: {
        std::vector<std::pair<int, int>> chords;
        for (std::size_t i = 0; i + 1 < v.darts.size(); i += 2)
            chords.emplace_back(std::min(v.darts[i], v.darts[i + 1]),
                                std::max(v.darts[i], v.darts[i + 1]));
        std::sort(chords.begin(), chords.end());
        out.darts.clear();
        for (auto [x, y] : chords) {
            out.darts.push_back(x);
            out.darts.push_back(y);
        }
        out.label = 0;
        break;
    }
    case SpeciesTag::GROUP: {
        const Group& g = *sp.group;
        int lo = std::min(v.darts[0], v.darts[1]), hi = std::max(v.darts[0], v.darts[1]);
        int low_tail_label = v.darts[0] == lo ? v.label : g.star[v.label];
        int high_tail_label = g.star[low_tail_label];
        if (low_tail_label <= high_tail_label)
            out = {{lo, hi}, low_tail_label};
        else
            out = {{hi, lo}, high_tail_label};
        break;
    }
    }
    return out;
}

bool same_structure(const Species& sp, const Vertex& a, const Vertex& b) {
    return normal_form(sp, a) == normal_form(sp, b);
}

std::vector<Reading> readings_from(const Species& sp, const Vertex& v, int entry) {
    std::vector<Reading> out;
    switch (sp.tag) {
    case SpeciesTag::CC: {
        std::vector<int> rest;
        for (int d : v.darts)
            if (d != entry) rest.push_back(d);
        std::sort(rest.begin(), rest.end());
        do {
            Reading r{0, {entry}};
            r.seq.insert(r.seq.end(), rest.begin(), rest.end());
            out.push_back(std::move(r));
        } while (std::next_permutation(rest.begin(), rest.end()));
        break;
    }
    case SpeciesTag::AA:
        out.push_back({0, rotate_to(v.darts, entry)});
        break;
    case SpeciesTag::KK: {
        int partner = chord_partner(v, entry);
        std::vector<std::pair<int, int>> rest;
        for (std::size_t i = 0; i < v.darts.size(); i += 2)
            if (v.darts[i] != entry && v.darts[i + 1] != entry)
                rest.emplace_back(v.darts[i], v.darts[i + 1]);
        std::vector<int> order(rest.size());
        std::iota(order.begin(), order.end(), 0);
        do {
            for (std::size_t flips = 0; flips < (std::size_t{1} << rest.size()); ++flips) {
                Reading r{0, {entry, partner}};
                for (std::size_t t = 0; t < order.size(); ++t) {
                    auto [x, y] = rest[order[t]];
                    if (flips >> t & 1) std::swap(x, y);
                    r.seq.push_back(x);
                    r.seq.push_back(y);
                }
                out.push_back(std::move(r));
            }
        } while (std::next_permutation(order.begin(), order.end()));
        break;
    }
    case SpeciesTag::GROUP: {
        int label = 0;
        auto p = group_tail_at(*sp.group, v, entry, label);
        out.push_back({label, {p.first, p.second}});
        break;
    }
    }
    return out;
}

std::vector<Reading> all_readings(const Species& sp, const Vertex& v) {
    std::vector<Reading> out;
    for (int d : v.darts) {
        auto r = readings_from(sp, v, d);
        out.insert(out.end(), r.begin(), r.end());
    }
    return out;
}

std::vector<std::vector<int>> vertex_isomorphisms(const Species& sp, const Vertex& a,
                                                  const Vertex& b) {
    std::vector<std::vector<int>> out;
    if (a.darts.size() != b.darts.size() || a.darts.empty()) return out;
    Reading ra = readings_from(sp, a, a.darts[0]).front();
    for (const Reading& rb : all_readings(sp, b)) {
        if (rb.label != ra.label) continue;
        std::vector<int> img(a.darts.size());
        for (std::size_t i = 0; i < a.darts.size(); ++i) {
            auto pos = std::find(ra.seq.begin(), ra.seq.end(), a.darts[i]) - ra.seq.begin();
            img[i] = rb.seq[static_cast<std::size_t>(pos)];
        }
        out.push_back(std::move(img));
    }
    return out;
}

std::string vertex_type(const Species& sp, const Vertex& v) {
    if (sp.tag == SpeciesTag::GROUP) {
        int l = std::min(v.label, sp.group->star[v.label]);
        return "g" + std::to_string(l);
    }
    return "v" + std::to_string(v.darts.size());
}

} // namespace gpx
