#pragma once

#include <string>

#include "json.hpp"

#include "aq/aut.hpp"
#include "aq/blocks.hpp"
#include "aq/cayley.hpp"
#include "aq/cliques.hpp"

// Machine-readable reports.  Each builder recomputes what it needs from the
// graph alone, re-verifies the certificates it prints, and carries an overall
// "pass" flag, so a report doubles as an audit record.

namespace aq {

using Json = nlohmann::ordered_json;

enum class Family { Augmented, Hypercube, Folded, Custom };

Family parse_family(const std::string& name);  // throws on unknown names
std::string family_name(Family f);
GeneratorSet family_generators(Family f, int n);  // Custom has none: throws
CayleyGraph family_graph(Family f, int n);

// Vertex count, degree, edge count, connectivity, generator strings and the
// distance-layer sizes around 0.
Json graph_json(const CayleyGraph& g);

// Automorphism group: order, stabilizer with recognized type, normality
// certificate, and the semidirect-product certificate when normal.
Json aut_json(const CayleyGraph& g, const SearchCaps& caps = {});

// Maximum cliques: size, count, orbit partition under the automorphism
// group, and for the 4-dimensional augmented cube the named cliques with
// their edge-count matrix and structure certificates.
Json cliques_json(const CayleyGraph& g, const SearchCaps& caps = {});

// Nontrivial blocks containing 0, their coset systems, and the
// block-subgroup correspondence when the stabilizer is linear.
Json blocks_json(const CayleyGraph& g, const SearchCaps& caps = {});

// Everything above plus an expected-versus-actual table for the families
// with known closed forms (augmented, hypercube).
Json structure_json(Family f, int n, const SearchCaps& caps = {});

// The top-level "pass" flag; false when absent.
bool json_pass(const Json& j);

// Indented key/value rendering of a report for terminal output.
std::string render_text(const Json& j);

}  // namespace aq
