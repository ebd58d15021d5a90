#pragma once

#include "graphoplex/common.hpp"

#include <nlohmann/json.hpp>

#include <memory>
#include <string>
#include <vector>

namespace gpx {

/// Finite group given by its full multiplication table, together with an
/// anti-involution-like map `star` used to reverse bivalent vertices.
struct Group {
    std::vector<std::string> names;
    int unit = 0;
    std::vector<std::vector<int>> mul;
    std::vector<int> star;

    int order() const { return static_cast<int>(names.size()); }
    int operator()(int a, int b) const { return mul[a][b]; }
    int inverse(int a) const;
};

/// Every violated axiom, one line each. Empty means valid.
std::vector<std::string> validate_group(const Group& g);

Group trivial_group();
/// Cyclic group of order n; star is the identity or the inverse map.
Group cyclic_group(int n, bool star_inverse);
/// S3 in one-line notation; star is the identity or the inverse map.
Group symmetric_group3(bool star_inverse);

/// Parses {"elements", "unit", "mul", "star"} and validates. Throws
/// Error("InvalidGroup") listing the violations.
Group group_from_json(const nlohmann::json& j);
nlohmann::json group_to_json(const Group& g);

enum class SpeciesTag { CC, AA, KK, GROUP };

struct Species {
    SpeciesTag tag = SpeciesTag::CC;
    std::shared_ptr<const Group> group; // set iff tag == GROUP
    std::string label;                  // "cc", "aa", "kk", "group:z2", ...

    static Species cc();
    static Species aa();
    static Species kk();
    static Species group_species(Group g, std::string label);

    const std::string& name() const { return label; }
    bool has_expansions() const { return tag != SpeciesTag::KK; }
};

/// Parses "cc", "aa", "kk", "group:trivial", "group:z2", "group:z2-inv",
/// "group:z3", "group:z3-inv", "group:s3-inv". Throws Error("UnknownSpecies").
Species species_from_name(const std::string& name);

/// A vertex decoration over exactly its incident darts.
///   CC: darts form a set, order carries no meaning.
///   AA: darts listed in cyclic order.
///   KK: consecutive pairs (darts[0], darts[1]), ... are the chords.
///   GROUP: darts = {tail, head}; label is the group element read tail to head.
struct Vertex {
    std::vector<int> darts;
    int label = 0;

    int valence() const { return static_cast<int>(darts.size()); }
    bool operator==(const Vertex&) const = default;
};

/// A way of reading a vertex as a dart sequence. Two vertices are isomorphic
/// under a dart bijection iff that bijection carries some reading of one onto
/// a reading of the other with the same label.
struct Reading {
    int label = 0;
    std::vector<int> seq;
};

/// One ideal edge: the vertex splits into `a` (holding new dart a_dart) and
/// `b` (holding b_dart); mating them along the new edge gives back the vertex.
struct ExpansionSplit {
    Vertex a;
    Vertex b;
    int multiplicity = 1;
};

std::vector<Vertex> list_structures(const Species& sp, const std::vector<int>& darts);

/// Glue a and b along darts da, db; the result lives on the remaining darts.
Vertex mate(const Species& sp, const Vertex& a, int da, const Vertex& b, int db);

bool is_fake(const Species& sp, const Vertex& v);

/// Ideal edges of v. The new darts are named a_dart (in the first child) and
/// b_dart (in the second). Throws Error("NotSupported") for KK.
std::vector<ExpansionSplit> ideal_expansions(const Species& sp, const Vertex& v, int a_dart,
                                             int b_dart);

/// Every (a, b) with mate(a, a_dart, b, b_dart) == v, used to grow graphs one
/// vertex at a time. Differs from ideal_expansions only for KK, which has no
/// ideal edges. Group splits include unit factors: contraction merges fake
/// vertices too, so the expansion has to produce them.
std::vector<ExpansionSplit> enumeration_splits(const Species& sp, const Vertex& v, int a_dart,
                                               int b_dart);

/// Normal form of a vertex: group vertices are reduced modulo the reversal
/// relation, chords and sets are sorted, cyclic orders rotated to the
/// smallest dart. Equality of normal forms is equality of structures.
Vertex normal_form(const Species& sp, const Vertex& v);
bool same_structure(const Species& sp, const Vertex& a, const Vertex& b);

/// All readings whose first dart is `entry`.
std::vector<Reading> readings_from(const Species& sp, const Vertex& v, int entry);
/// All readings of v.
std::vector<Reading> all_readings(const Species& sp, const Vertex& v);

/// Every structure-preserving bijection from a's darts to b's darts, as
/// parallel lists (a.darts order, image dart).
std::vector<std::vector<int>> vertex_isomorphisms(const Species& sp, const Vertex& a,
                                                  const Vertex& b);

/// Coarse invariant of the vertex structure, equal on isomorphic vertices.
std::string vertex_type(const Species& sp, const Vertex& v);

} // namespace gpx
