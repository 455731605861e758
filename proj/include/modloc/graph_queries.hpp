#pragma once

#include <string_view>

#include "modloc/invariance.hpp"
#include "modloc/structure.hpp"

namespace modloc::gen {

// t-ary queries over {E/2} computed directly from the graph.

// (x_0, ..., x_{t-1}) with a directed path (possibly empty) from x_i to x_{i+1}.
logic::QueryRelation reach_chain_query(const Structure& s, int t);
// x_0 lies on a directed cycle.
logic::QueryRelation cycle_query(const Structure& s, int t);
// x_{t-1} is reachable from a node of a directed triangle.
logic::QueryRelation triangle_reach_query(const Structure& s, int t);
// dist(x_{t-3}, x_{t-1}) = dist(x_{t-2}, x_{t-1}) in the Gaifman graph.
logic::QueryRelation same_distance_query(const Structure& s, int t);

// reach | cycle | triangle-reach | same-distance
logic::QueryRelation graph_query(std::string_view name, const Structure& s, int t);

}  // namespace modloc::gen
