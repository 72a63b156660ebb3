#pragma once

#include <vector>

#include "onevis/layout.hpp"

namespace onevis {

enum class FaceShapeKind { left_wing, right_wing, diamond };
const char* to_string(FaceShapeKind k);

struct MatchError : std::runtime_error {
    explicit MatchError(const std::string& m) : std::runtime_error(m) {}
};

/// Shape of the quadrangular face left behind by an extracted crossing pair.
/// a is the face source; wings climb a->b->c->d along one side with the
/// single edge (a,d) on the other, diamonds have middles b (left) and d
/// (right) under top c.
struct FaceShape {
    int pair = -1;
    int face = -1;  // skeleton face id
    FaceShapeKind kind = FaceShapeKind::diamond;
    VertexId a = -1, b = -1, c = -1, d = -1;

    std::array<VertexId, 2> inner() const {
        return kind == FaceShapeKind::diamond ? std::array<VertexId, 2>{b, d}
                                              : std::array<VertexId, 2>{b, c};
    }
};

FaceShape classify_face(const Skeleton& sk, const DistanceMaps& dm, int pair);

/// Assigns each crossing face one of its two inner vertices, injectively.
/// Degree-one vertices are matched first in ascending face id; the leftover
/// degree-two components are alternating cycles, oriented from their lowest
/// vertex id. Throws MatchError when saturation is impossible.
std::vector<VertexId> match_crossed_vertices(const std::vector<FaceShape>& faces);

/// Re-inserts one crossing pair into its face: extends the middle bars by
/// the quarter-unit offsets and adds both diagonal segments, producing
/// exactly one vertex-edge crossing. edge_ac/edge_bd are the layout ids for
/// the diagonals (a,c) and (b,d).
void insert_crossing(VisibilityLayout& layout, const DistanceMaps& dm, const FaceShape& f,
                     VertexId crossed, int edge_ac, int edge_bd, EdgeKind kind_ac,
                     EdgeKind kind_bd);

struct FinalizeCounts {
    int visible = 0;
    int hidden = 0;
};

/// Marks helper edges hidden and recounts. (Coordinates are already in the
/// scaled grid: quarter units are the final integer units.)
FinalizeCounts finalize(VisibilityLayout& layout);

}  // namespace onevis
