#include "graphoplex/io.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gpx {

namespace {

nlohmann::json payload_of(const Species& sp, const Vertex& v) {
    switch (sp.tag) {
    case SpeciesTag::CC: return nullptr;
    case SpeciesTag::AA: return v.darts;
    case SpeciesTag::KK: {
        nlohmann::json chords = nlohmann::json::array();
        for (std::size_t i = 0; i + 1 < v.darts.size(); i += 2) chords.push_back({v.darts[i], v.darts[i + 1]});
        return chords;
    }
    case SpeciesTag::GROUP: return sp.group->names.at(static_cast<std::size_t>(v.label));
    }
    return nullptr;
}

int element_index(const Group& g, const nlohmann::json& name) {
    if (!name.is_string()) throw Error("MalformedGraph", "group payload must be an element name");
    auto it = std::find(g.names.begin(), g.names.end(), name.get<std::string>());
    if (it == g.names.end()) throw Error("MalformedGraph", "unknown group element " + name.get<std::string>());
    return static_cast<int>(it - g.names.begin());
}

} // namespace

nlohmann::json graph_to_json(const Species& sp, const Graph& g) {
    nlohmann::json j;
    j["species"] = sp.name();
    std::vector<int> darts(g.num_darts());
    for (int d = 0; d < g.num_darts(); ++d) darts[d] = d;
    j["darts"] = darts;
    nlohmann::json edges = nlohmann::json::array(), dirs = nlohmann::json::array();
    for (int t : g.edge_tails()) {
        edges.push_back({std::min(t, g.partner[t]), std::max(t, g.partner[t])});
        dirs.push_back({t, g.partner[t]});
    }
    j["edges"] = edges;
    nlohmann::json verts = nlohmann::json::object(), order = nlohmann::json::array();
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::string name = "v" + std::to_string(v);
        verts[name] = {{"darts", g.verts[v].darts}, {"payload", payload_of(sp, g.verts[v])}};
        order.push_back(name);
    }
    j["vertices"] = verts;
    j["orientation"] = {{"vertex_order", order}, {"directions", dirs}};
    return j;
}

Graph graph_from_json(const Species& sp, const nlohmann::json& j) {
    try {
        std::vector<int> ids = j.at("darts").get<std::vector<int>>();
        std::sort(ids.begin(), ids.end());
        if (std::adjacent_find(ids.begin(), ids.end()) != ids.end())
            throw Error("MalformedGraph", "repeated dart id");
        std::map<int, int> num;
        for (std::size_t i = 0; i < ids.size(); ++i) num[ids[i]] = static_cast<int>(i);
        auto dart = [&](const nlohmann::json& x) {
            auto it = num.find(x.get<int>());
            if (it == num.end()) throw Error("MalformedGraph", "unknown dart " + x.dump());
            return it->second;
        };
        const auto& orient = j.at("orientation");
        std::map<std::pair<int, int>, int> edge_seen;
        for (const auto& e : j.at("edges")) {
            int a = dart(e.at(0)), b = dart(e.at(1));
            edge_seen[{std::min(a, b), std::max(a, b)}] = 0;
        }
        std::vector<std::pair<int, int>> directed;
        for (const auto& d : orient.at("directions")) {
            int t = dart(d.at(0)), h = dart(d.at(1));
            auto it = edge_seen.find({std::min(t, h), std::max(t, h)});
            if (it == edge_seen.end() || it->second++) throw Error("MalformedGraph", "direction for a non-edge or repeated");
            directed.emplace_back(t, h);
        }
        if (directed.size() != edge_seen.size()) throw Error("MalformedGraph", "every edge needs a direction");
        std::vector<Vertex> verts;
        for (const auto& name : orient.at("vertex_order")) {
            const auto& v = j.at("vertices").at(name.get<std::string>());
            Vertex x;
            const auto& payload = v.contains("payload") ? v.at("payload") : nlohmann::json();
            switch (sp.tag) {
            case SpeciesTag::CC:
                for (const auto& d : v.at("darts")) x.darts.push_back(dart(d));
                break;
            case SpeciesTag::AA:
                for (const auto& d : (payload.is_array() ? payload : v.at("darts"))) x.darts.push_back(dart(d));
                break;
            case SpeciesTag::KK:
                for (const auto& c : payload) {
                    x.darts.push_back(dart(c.at(0)));
                    x.darts.push_back(dart(c.at(1)));
                }
                break;
            case SpeciesTag::GROUP:
                for (const auto& d : v.at("darts")) x.darts.push_back(dart(d));
                x.label = element_index(*sp.group, payload);
                break;
            }
            verts.push_back(std::move(x));
        }
        if (verts.size() != j.at("vertices").size()) throw Error("MalformedGraph", "vertex_order must list every vertex once");
        Graph g = make_graph(directed, std::move(verts));
        validate_graph(sp, g);
        return g;
    } catch (const nlohmann::json::exception& e) {
        throw Error("MalformedGraph", e.what());
    }
}

nlohmann::json chain_to_json(const Species& sp, const ChainVector& c) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, q] : c.terms()) terms.push_back({{"class", key}, {"summary", describe(sp, key)}, {"coeff", q.get_str()}});
    return {{"schema", "graphoplex.chain/1"}, {"species", sp.name()}, {"terms", terms}};
}

nlohmann::json chain_to_json(const Species& sp, const PolyChain& c) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, p] : c.terms()) terms.push_back({{"class", key}, {"summary", describe(sp, key)}, {"coeff", p.str()}});
    return {{"schema", "graphoplex.chain/1"}, {"species", sp.name()}, {"terms", terms}};
}

std::string matrix_csv(const SparseMatrix& m) {
    std::ostringstream os;
    os << "row,col,value\n";
    for (const auto& [rc, p] : m.entries) {
        if (p.is_zero()) continue;
        os << rc.first << ',' << rc.second << ',' << (m.symbolic ? p.str() : p.coeff(0).get_str()) << '\n';
    }
    return os.str();
}

nlohmann::json matrix_to_json(const Species& sp, const SparseMatrix& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [rc, p] : m.entries) {
        if (p.is_zero()) continue;
        entries.push_back({rc.first, rc.second, m.symbolic ? p.str() : p.coeff(0).get_str()});
    }
    return {{"schema", "graphoplex.matrix/1"},
            {"species", sp.name()},
            {"symbolic", m.symbolic},
            {"rows", m.rows},
            {"cols", m.cols},
            {"entries", entries}};
}

nlohmann::json betti_to_json(const BettiTable& t) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& r : t.rows)
        rows.push_back({{"k", r.k},
                        {"dim", r.dim},
                        {"rank_out", r.rank_out},
                        {"rank_in", r.rank_in},
                        {"betti", r.betti},
                        {"exact", r.exact}});
    return {{"schema", "graphoplex.betti/1"},
            {"species", t.species},
            {"complex", t.complex},
            {"boundary", t.boundary},
            {"r", t.r},
            {"rows", rows}};
}

} // namespace gpx
