#include "commands.hpp"

#include "graphoplex/io.hpp"
#include "graphoplex/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace gpx::cli {

namespace {

struct Options {
    std::string species = "cc";
    std::string group_table;
    std::string star = "table";
    std::string complex = "connected";
    std::string format;
    std::string out;
    std::string boundary = "dE";
    std::string n = "1";
    std::string suite;
    int k = 0, r = -1, kmax = 6, rmax = 1, emax = -1;
    std::vector<int> ns{1, 2};
    std::uint64_t seed = 20240601;
    int triples = 20, degree = 3, order = 3;
};

class UsageError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

Species resolve_species(const Options& o) {
    if (o.group_table.empty()) return species_from_name(o.species);
    std::ifstream in(o.group_table);
    if (!in) throw UsageError("cannot read group table " + o.group_table);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("group table is not JSON: ") + e.what());
    }
    if (o.star == "id" || o.star == "inv") {
        // replace the star before validating
        auto n = j.at("elements").size();
        std::vector<int> star(n);
        Group g;
        g.mul = j.at("mul").get<std::vector<std::vector<int>>>();
        g.unit = j.at("unit").get<int>();
        g.names = j.at("elements").get<std::vector<std::string>>();
        for (std::size_t a = 0; a < n; ++a) star[a] = o.star == "id" ? static_cast<int>(a) : g.inverse(static_cast<int>(a));
        j["star"] = star;
    } else if (o.star != "table") {
        throw UsageError("--star must be id, inv or table");
    }
    Group g = group_from_json(j);
    std::string label = "group:" + std::filesystem::path(o.group_table).stem().string() + "-" + o.star;
    return Species::group_species(std::move(g), label);
}

void emit(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot write " + o.out);
    f << text;
}

BoundaryKind kind_of(const std::string& s) {
    if (s == "dE") return BoundaryKind::E;
    if (s == "dH") return BoundaryKind::H;
    if (s == "dN" || s == "dn") return BoundaryKind::N;
    throw UsageError("--boundary must be dE, dH or dN");
}

std::optional<long> n_of(const std::string& s) {
    if (s == "sym") return std::nullopt;
    try {
        std::size_t used = 0;
        long n = std::stol(s, &used);
        if (used != s.size() || n < 1) throw UsageError("");
        return n;
    } catch (const std::exception&) {
        throw UsageError("--n must be a positive integer or sym");
    }
}

std::string want_format(const Options& o, const std::string& dflt) {
    std::string f = o.format.empty() ? dflt : o.format;
    if (f != "json" && f != "csv") throw UsageError("--format must be json or csv");
    return f;
}

int cmd_enumerate(const Options& o) {
    Species sp = resolve_species(o);
    Filter f = filter_from_name(o.complex);
    int r = o.r < 0 ? 1 : o.r;
    auto basis = enumerate_basis(sp, o.k, r, f);
    if (want_format(o, "json") == "csv") {
        std::ostringstream os;
        os << "index,class,summary,aut\n";
        for (std::size_t i = 0; i < basis.size(); ++i)
            os << i << ",\"" << basis[i] << "\",\"" << describe(sp, basis[i]) << "\","
               << automorphism_order(sp, graph_from_key(sp, basis[i])) << '\n';
        emit(o, os.str());
        return kOk;
    }
    nlohmann::json classes = nlohmann::json::array();
    for (const auto& key : basis) {
        Graph g = graph_from_key(sp, key);
        classes.push_back({{"class", key},
                           {"summary", describe(sp, key)},
                           {"aut", automorphism_order(sp, g)},
                           {"graph", graph_to_json(sp, g)}});
    }
    nlohmann::json j = {{"schema", "graphoplex.basis/1"}, {"species", sp.name()}, {"complex", filter_name(f)},
                        {"k", o.k},        {"r", r},                  {"classes", classes}};
    emit(o, j.dump(1) + "\n");
    return kOk;
}

int cmd_boundary(const Options& o) {
    Species sp = resolve_species(o);
    Filter f = filter_from_name(o.complex);
    int r = o.r < 0 ? 1 : o.r;
    BoundaryKind kind = kind_of(o.boundary);
    std::optional<long> n = kind == BoundaryKind::N ? n_of(o.n) : std::optional<long>(1);
    auto src = enumerate_basis(sp, o.k, r, f);
    auto dst = enumerate_basis(sp, o.k - 1, r, f);
    SparseMatrix m = boundary_matrix(sp, src, dst, kind, f, n);
    if (want_format(o, "csv") == "csv")
        emit(o, matrix_csv(m));
    else
        emit(o, matrix_to_json(sp, m).dump(1) + "\n");
    return kOk;
}

std::string tables_out(const Options& o, const std::vector<BettiTable>& tables) {
    if (want_format(o, "csv") == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& t : tables) arr.push_back(betti_to_json(t));
        return nlohmann::json{{"schema", "graphoplex.homology/1"}, {"tables", arr}}.dump(1) + "\n";
    }
    std::ostringstream os;
    os << "r,k,dim,rank_out,rank_in,betti,exact\n";
    for (const auto& t : tables)
        for (const auto& row : t.rows)
            os << t.r << ',' << row.k << ',' << row.dim << ',' << row.rank_out << ',' << row.rank_in << ','
               << row.betti << ',' << (row.exact ? "exact" : "upper_bound") << '\n';
    return os.str();
}

int cmd_homology(const Options& o) {
    Species sp = resolve_species(o);
    Filter f = filter_from_name(o.complex);
    BoundaryKind kind = kind_of(o.boundary);
    long n = 1;
    if (kind == BoundaryKind::N) {
        auto v = n_of(o.n);
        if (!v) throw UsageError("homology needs a numeric --n");
        n = *v;
    }
    std::vector<BettiTable> tables;
    int lo = o.r < 0 ? 0 : o.r, hi = o.r < 0 ? o.rmax : o.r;
    for (int r = lo; r <= hi; ++r) tables.push_back(betti_table(sp, f, r, o.kmax, kind, n));
    emit(o, tables_out(o, tables));
    return kOk;
}

int cmd_group_homology(const Options& o) {
    Species sp = resolve_species(o);
    if (sp.tag != SpeciesTag::GROUP) throw UsageError("group-homology needs a group species");
    Filter f = filter_from_name(o.complex);
    // bivalent vertices only, so every connected graph is a polygon with r = 1
    std::vector<BettiTable> tables{betti_table(sp, f, 1, o.kmax, BoundaryKind::E)};
    emit(o, tables_out(o, tables));
    return kOk;
}

int cmd_verify(const Options& o) {
    Report rep;
    const std::string& s = o.suite;
    auto sp = [&] { return resolve_species(o); };
    int emax = o.emax >= 0 ? o.emax : o.kmax + o.rmax - 1;
    if (s == "squares")
        rep = verify_squares(sp(), o.kmax, o.rmax);
    else if (s == "adjoint")
        rep = verify_adjoint(sp(), o.kmax, emax);
    else if (s == "nondegeneracy")
        rep = verify_nondegeneracy(sp(), o.kmax, emax);
    else if (s == "pairing-restriction")
        rep = verify_pairing_restriction(o.kmax, emax, o.ns);
    else if (s == "invariant-diagram")
        rep = verify_invariant_diagram(o.kmax, emax, o.ns);
    else if (s == "homotopy")
        rep = verify_homotopy(sp(), o.kmax, o.rmax);
    else if (s == "moyal")
        rep = verify_moyal(o.seed, o.triples, o.ns.empty() ? 2 : o.ns.back(), o.degree, o.order);
    else if (s == "hopf-dims")
        rep = verify_hopf_dims(sp(), o.kmax, o.rmax);
    else if (s == "pss-sum")
        rep = verify_pss_sum(sp(), o.kmax, o.rmax);
    else
        throw UsageError("unknown suite '" + s + "'");
    emit(o, rep.to_json().dump(1) + "\n");
    return rep.pass ? kOk : kFailed;
}

void species_flags(CLI::App* c, Options& o) {
    c->add_option("--species", o.species, "cc, aa, kk, group:trivial, group:z2, group:z2-inv, group:z3, group:z3-inv, group:s3-inv");
    c->add_option("--group-table", o.group_table, "JSON group table {elements, unit, mul, star}");
    c->add_option("--star", o.star, "with --group-table: id, inv or table");
}

void output_flags(CLI::App* c, Options& o) {
    c->add_option("--format", o.format, "json or csv");
    c->add_option("--out", o.out, "write to this file instead of stdout");
}

} // namespace

int run(int argc, char** argv) {
    CLI::App app{"Graph homology of mated species"};
    app.require_subcommand(1);
    Options o;

    auto* en = app.add_subcommand("enumerate", "list the basis of a chain group");
    species_flags(en, o);
    output_flags(en, o);
    en->add_option("--complex", o.complex, "full, connected, qgraph, bivalent, fake, poly, t");
    en->add_option("--k", o.k, "number of vertices")->required();
    en->add_option("--r", o.r, "rank r = 1 - (k - e)");

    auto* bd = app.add_subcommand("boundary", "export a boundary matrix C_k -> C_(k-1)");
    species_flags(bd, o);
    output_flags(bd, o);
    bd->add_option("--complex", o.complex);
    bd->add_option("--k", o.k)->required();
    bd->add_option("--r", o.r);
    bd->add_option("--boundary", o.boundary, "dE, dH or dN");
    bd->add_option("--n", o.n, "numeric n, or sym for s = 2n left formal");

    auto* ho = app.add_subcommand("homology", "Betti table of a complex");
    species_flags(ho, o);
    output_flags(ho, o);
    ho->add_option("--complex", o.complex);
    ho->add_option("--kmax", o.kmax);
    ho->add_option("--r", o.r, "a single rank (default: every rank up to --rmax)");
    ho->add_option("--rmax", o.rmax);
    ho->add_option("--boundary", o.boundary);
    ho->add_option("--n", o.n);

    auto* gh = app.add_subcommand("group-homology", "polygon homology of a group species");
    species_flags(gh, o);
    output_flags(gh, o);
    gh->add_option("--complex", o.complex);
    gh->add_option("--kmax", o.kmax);

    auto* ve = app.add_subcommand("verify", "run a verification suite");
    species_flags(ve, o);
    output_flags(ve, o);
    ve->add_option("--suite", o.suite,
                   "squares, adjoint, nondegeneracy, pairing-restriction, invariant-diagram, homotopy, moyal, "
                   "hopf-dims, pss-sum")
        ->required();
    ve->add_option("--kmax", o.kmax);
    ve->add_option("--rmax", o.rmax);
    ve->add_option("--emax", o.emax, "edge bound (default kmax + rmax - 1)");
    ve->add_option("--n", o.ns, "values of n")->delimiter(',');
    ve->add_option("--seed", o.seed);
    ve->add_option("--triples", o.triples);
    ve->add_option("--degree", o.degree);
    ve->add_option("--order", o.order);

    auto* st = app.add_subcommand("selftest", "run the built-in assertions");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }
    try {
        if (*en) return cmd_enumerate(o);
        if (*bd) return cmd_boundary(o);
        if (*ho) return cmd_homology(o);
        if (*gh) return cmd_group_homology(o);
        if (*ve) return cmd_verify(o);
        if (*st) return selftest(std::cout);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        std::cerr << e.what() << '\n';
        if (e.kind() == "ResourceLimit") return kResource;
        if (e.kind() == "UnknownSpecies" || e.kind() == "UnsupportedFilter" || e.kind() == "InvalidGroup" ||
            e.kind() == "NotSupported")
            return kUsage;
        return kFailed;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}

} // namespace gpx::cli
