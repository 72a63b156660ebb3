#pragma once

#include <array>
#include <vector>

#include "onevis/augment.hpp"
#include "onevis/graph.hpp"
#include "onevis/st_number.hpp"

namespace onevis {

struct LayoutError : std::runtime_error {
    enum Code { cycle_detected } code;
    LayoutError(Code c, const std::string& m) : std::runtime_error(m), code(c) {}
};

/// Longest-path levels and dual columns of an st-oriented plane skeleton.
/// The outer face acts as two dual nodes: s* (left of the st edge, column 0)
/// and t* (everything right). Levels and columns are whole units; the
/// rendered grid scales x by 4.
struct DistanceMaps {
    std::vector<int> level;   // per vertex; -1 for isolated slots
    std::vector<int> column;  // per skeleton face id; outer face entry unused
    int col_t_star = 0;       // dual longest path; used columns are 0..col_t_star-1
    int height = 0;           // level count h = level(t)+1
    int width = 0;            // column count w = col_t_star
    VertexId s = -1, t = -1;
    std::vector<int> st;      // the st-numbering used for orientation

    /// Directed dart of edge e pointing from the lower to the higher end.
    Dart up_dart(const PlanarMap& m, int e) const {
        Dart d0 = 2 * e;
        return st[m.tail(d0)] < st[m.head(d0)] ? d0 : twin(d0);
    }
};

/// Computes levels and columns. Middle vertices of diamond-shaped crossing
/// quadrangles are forced apart by virtual tie-break edges (levels above
/// shift as needed); throws CycleDetected on a broken orientation.
DistanceMaps dual_distances(const Skeleton& sk, const std::vector<int>& st, VertexId s, VertexId t);

/// Quarter-unit grid layout. y is 4*level; whole-unit x positions are
/// multiples of 4, crossing insertion uses the offsets in between.
struct LayoutVertex {
    VertexId id = -1;
    int y = 0;
    int x_lo = 0, x_hi = 0;
};

struct LayoutEdge {
    int id = -1;  // original graph edge id, or a fresh id for helper edges
    VertexId u = -1, v = -1;
    EdgeKind kind = EdgeKind::original;
    int x = 0, y_lo = 0, y_hi = 0;
    bool hidden = false;
};

struct CrossingRecord {
    int edge = -1;       // layout edge id crossing the bar
    VertexId vertex = -1;
};

struct VisibilityLayout {
    std::vector<LayoutVertex> vertices;
    std::vector<LayoutEdge> edges;
    std::vector<CrossingRecord> crossings;

    const LayoutVertex* find_vertex(VertexId v) const {
        for (const auto& b : vertices)
            if (b.id == v) return &b;
        return nullptr;
    }
};

/// Algorithm step: bars at y = 4*level spanning their incident face columns,
/// skeleton edges as vertical segments at their left face's column. Helper
/// edge ids start at first_free_edge_id.
VisibilityLayout planar_visibility(const Skeleton& sk, const DistanceMaps& d,
                                   int first_free_edge_id);

}  // namespace onevis
