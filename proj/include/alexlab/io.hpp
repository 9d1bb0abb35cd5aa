#pragma once

#include <string>
#include <vector>

#include "alexlab/group.hpp"
#include "alexlab/homology.hpp"
#include "alexlab/homotopy.hpp"
#include "alexlab/poset.hpp"
#include "alexlab/symmetry.hpp"

namespace alexlab {

// JSON formats (stable, round-trip tested):
//   Poset      {"elements":[...], "covers":[["a","b"],...]}   a < b
//   Group      {"order":n, "table":[[...]], "generators":[...]}
//   Hom        {"source":"g.json", "target":"h.json", "map":[...]}
//              (paths resolved relative to the hom file)
//   PermGroup  {"carrier":{poset}, "perms":[[...]]}
//   Trace      [{"element":"x8","kind":"up-weak"},...]

std::string poset_to_json(const Poset& p);
Poset poset_from_json(const std::string& text);

std::string group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const std::string& text);

std::string hom_to_json(const GroupHom& f, const std::string& source_ref,
                        const std::string& target_ref);
// Loads the hom and the two referenced group files.
GroupHom hom_from_json_file(const std::string& path);

std::string perm_group_to_json(const PermGroup& g);

std::string trace_to_json(const std::vector<RemovalStep>& trace);
std::vector<RemovalStep> trace_from_json(const std::string& text);

std::string homology_to_json(const HomologySummary& h);

// Graphviz export: one node per element, edges lower -> upper, elements of
// equal height share a rank.
std::string dot_export(const Poset& p);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace alexlab
