#pragma once

#include <vector>

#include "onevis/planar_map.hpp"

namespace onevis {

struct StError : std::runtime_error {
    enum Code { not_biconnected, st_not_outer_edge } code;
    StError(Code c, const std::string& m) : std::runtime_error(m), code(c) {}
};

/// st-numbering of the map's non-isolated vertices: order[s] = 0,
/// order[t] = k-1, every other vertex has a lower and a higher neighbor.
/// Isolated vertices get -1. (s,t) must be joined by an edge.
/// DFS follows rotation order, so results are deterministic.
std::vector<int> st_number(const PlanarMap& m, VertexId s, VertexId t);

}  // namespace onevis
