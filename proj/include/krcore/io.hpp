#pragma once

#include <string>
#include <vector>

#include "krcore/enumeration.hpp"
#include "krcore/graph.hpp"

namespace krcore {

enum class AttrMode { Keywords, Geo };

// Edge list: whitespace-separated id pairs, '#' starts a comment. Attribute
// file: one vertex per line, either "id token:weight ..." or "id x y".
// External ids are arbitrary tokens, remapped to dense ids in order of first
// appearance; the mapping is kept on the graph for output. Vertices present
// in edges but missing an attribute are a hard error; attributed vertices
// without edges are allowed.
AttributedGraph load_graph(const std::string& edge_path, const std::string& attr_path,
                           AttrMode mode);

// One core per line: {"vertices":[...],"size":n}, vertices as external ids.
// Ids render as numbers when every external id in the graph is an integer,
// as strings otherwise; lines ordered by size descending then lexicographic
// vertex list.
std::string format_cores(const std::vector<KrCore>& cores, const AttributedGraph& g);

}  // namespace krcore
