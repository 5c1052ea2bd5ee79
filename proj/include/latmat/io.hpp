#pragma once

#include <memory>
#include <string>

#include <json.hpp>

#include "latmat/boolrel.hpp"
#include "latmat/fixpoint.hpp"
#include "latmat/lattice.hpp"
#include "latmat/matrix.hpp"

namespace latmat {

/// Lattice from JSON: {"elements": [names], "covers": [[lo, hi], ...]} or
/// {"elements": [names], "join": [[names]], "meet": [[names]]}.
std::shared_ptr<const Lattice> parse_lattice(const std::string& text);

/// Built-in name, otherwise JSON text.
std::shared_ptr<const Lattice> resolve_lattice(const std::string& name_or_json);

/// Canonical serialization (elements + covers); parse of the output
/// rebuilds an equal lattice.
nlohmann::json lattice_to_json(const Lattice& lattice);

/// Matrix from {"lattice": <name or inline object>, "entries": [[labels]]}.
/// When `expected` is given, the file's lattice (if any) must match it.
LatMatrix parse_matrix_file(const std::string& text,
                            std::shared_ptr<const Lattice> expected = nullptr);

/// Entries-only parse against a known lattice.
LatMatrix parse_matrix(const nlohmann::json& entries,
                       std::shared_ptr<const Lattice> lattice);

nlohmann::json matrix_to_json(const LatMatrix& a);
nlohmann::json matrix_file_to_json(const LatMatrix& a);

/// Relation from a 0/1 matrix [[0,1],...] or an edge list
/// {"n": k, "edges": [[i, j], ...]} with 1-based vertices.
BoolRel parse_relation(const std::string& text);
nlohmann::json relation_to_json(const BoolRel& a);

LatVector parse_vector(const nlohmann::json& entries,
                       std::shared_ptr<const Lattice> lattice);
nlohmann::json vector_to_json(const LatVector& x);

/// 1-based image list [pi(1), ..., pi(n)].
nlohmann::json permutation_to_json(const Permutation& pi);

/// GraphViz digraph of a relation.
std::string relation_to_dot(const BoolRel& a);

}  // namespace latmat
