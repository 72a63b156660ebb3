#pragma once

#include <vector>

#include "onevis/graph.hpp"

namespace onevis {

/// Dart id: 2*edge for the dart with tail at edge.u, 2*edge+1 for the twin.
using Dart = int;

inline Dart twin(Dart d) { return d ^ 1; }
inline int dart_edge(Dart d) { return d >> 1; }

struct MapEdge {
    VertexId u = -1;
    VertexId v = -1;
    EdgeKind kind = EdgeKind::original;
    EdgeId orig = -1;  // id in the source Graph, -1 for map-created edges
    int part = -1;     // for split crossing edges: 0 = u..dummy, 1 = dummy..v
    bool alive = false;
};

/// Mutable combinatorial map (rotation system). Rotations are clockwise
/// lists of darts around each vertex; the face of a dart lies to its left
/// and is traced by next_in_face(d) = rot_next(twin(d)). With that
/// convention interior faces of a plane map come out counterclockwise.
class PlanarMap {
public:
    explicit PlanarMap(int num_vertices = 0);

    int num_vertices() const { return static_cast<int>(vertex_dart_.size()); }
    int num_edges_alive() const { return alive_edges_; }
    const MapEdge& edge(int e) const { return edges_[e]; }
    int num_edge_slots() const { return static_cast<int>(edges_.size()); }

    VertexId add_vertex();

    /// Inserts edge (u,v); each new dart lands immediately before the given
    /// anchor dart in its endpoint's clockwise rotation (anchor -1 appends /
    /// starts the rotation). Returns the new edge id.
    int insert_edge(VertexId u, VertexId v, Dart before_at_u, Dart before_at_v,
                    EdgeKind kind, EdgeId orig = -1, int part = -1);
    void delete_edge(int e);

    /// Splits edge e = (u,v) at a fresh vertex x, preserving both rotation
    /// slots. The new edges are (u,x) and (x,v); the rotation at x is the
    /// cyclic pair [x->u, x->v]. Returns {edge_ux, edge_xv, x}.
    struct Subdivision {
        int edge_ux, edge_xv;
        VertexId x;
    };
    Subdivision subdivide_edge(int e);

    VertexId tail(Dart d) const { return tail_[d]; }
    VertexId head(Dart d) const { return tail_[twin(d)]; }
    bool dart_alive(Dart d) const { return edges_[dart_edge(d)].alive; }

    Dart rot_next(Dart d) const { return rot_next_[d]; }
    Dart rot_prev(Dart d) const { return rot_prev_[d]; }
    Dart next_in_face(Dart d) const { return rot_next_[twin(d)]; }
    Dart prev_in_face(Dart d) const { return twin(rot_prev_[d]); }

    /// Representative dart with tail v, or -1 if v is isolated.
    Dart vertex_dart(VertexId v) const { return vertex_dart_[v]; }
    int degree(VertexId v) const;

    /// All darts with tail v in clockwise order.
    std::vector<Dart> rotation(VertexId v) const;

    /// Overwrites v's cyclic rotation with the given darts (all must have
    /// tail v and be exactly v's current darts).
    void relink_rotation(VertexId v, const std::vector<Dart>& darts);

    int total_darts_alive() const { return 2 * alive_edges_; }

    // ── Faces ────────────────────────────────────────────────────────
    struct Faces {
        std::vector<std::vector<Dart>> cycle;  // dart cycles, face of dart on its left
        std::vector<int> face_of;              // indexed by dart, -1 for dead darts
        int outer = -1;
    };
    /// Traverses all faces. outer_dart (if >= 0) marks the outer face.
    Faces faces(Dart outer_dart = -1) const;

    /// Walks the face containing dart d; stops early after limit darts.
    std::vector<Dart> face_walk(Dart d, int limit = -1) const;

    /// Euler characteristic V - E + F summed over connected components must
    /// be 2 per component for a sphere map. Returns true if that holds.
    bool euler_ok() const;

    int num_components() const;

private:
    void rot_insert_before(VertexId v, Dart nd, Dart before);
    void rot_remove(Dart d);

    std::vector<MapEdge> edges_;
    std::vector<Dart> rot_next_, rot_prev_;
    std::vector<VertexId> tail_;
    std::vector<Dart> vertex_dart_;
    int alive_edges_ = 0;
};

}  // namespace onevis
