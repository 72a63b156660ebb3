#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "onevis/graph.hpp"
#include "onevis/planar_map.hpp"

namespace onevis {

/// A 1-planar embedding: rotation system over the graph's darts plus the
/// set of crossing edge pairs. Graph dart 2e has its tail at edge e's
/// endpoint u, dart 2e+1 at v; rotation[v] lists the darts with tail v in
/// clockwise order.
struct OnePlanarEmbedding {
    Graph graph;
    std::vector<std::vector<Dart>> rotation;
    std::vector<std::pair<EdgeId, EdgeId>> crossings;
    /// Optional graph dart whose left face in the planarization is the
    /// outer face; -1 picks the face with the longest boundary.
    Dart outer_dart = -1;
};

struct EmbeddingError : std::runtime_error {
    explicit EmbeddingError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Plane graph obtained by replacing every crossing with a degree-4 dummy
/// vertex. Original vertices keep their ids; dummies follow.
struct Planarization {
    PlanarMap map;
    int n_original = 0;
    std::vector<VertexId> dummy_of_pair;            // pair index -> dummy vertex
    std::vector<std::array<EdgeId, 2>> pair_edges;  // pair index -> graph edge ids
    std::vector<int> pair_of_dummy;                 // dummy vertex - n_original -> pair
    struct EdgeImage {
        int first = -1;   // map edge (whole edge, or the u..x half)
        int second = -1;  // the x..v half when split
        bool split = false;
    };
    std::vector<EdgeImage> image;  // indexed by graph edge id
    Dart outer_dart = -1;          // map dart; its face is the outer face

    bool is_dummy(VertexId v) const { return v >= n_original; }
    int pair_index(VertexId dummy) const { return pair_of_dummy[dummy - n_original]; }
    /// Map dart corresponding to a graph dart (the half at the same tail).
    Dart map_dart(Dart graph_dart) const;
};

/// Builds the planarization. Crossing pairs are inserted one at a time into
/// the face their rotation slots point at; the interleaving of the four
/// endpoints along that face fixes the rotation at the dummy.
/// Throws EmbeddingError when the slots do not describe a plane map.
Planarization planarize(const OnePlanarEmbedding& emb);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> violations;
    void fail(std::string v) {
        ok = false;
        violations.push_back(std::move(v));
    }
};

/// Checks the embedding invariants: each edge crossed at most once,
/// crossing edges share no endpoint, rotations cover every dart exactly
/// once, the planarization is a sphere map with degree-4 dummies, and the
/// graph is 2-connected (flagged, not fatal).
ValidationReport validate_embedding(const OnePlanarEmbedding& emb);

}  // namespace onevis
