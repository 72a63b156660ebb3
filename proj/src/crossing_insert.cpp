#include "onevis/crossing_insert.hpp"

#include <algorithm>
#include <cassert>
#include <map>

namespace onevis {

const char* to_string(FaceShapeKind k) {
    switch (k) {
        case FaceShapeKind::left_wing: return "left_wing";
        case FaceShapeKind::right_wing: return "right_wing";
        case FaceShapeKind::diamond: return "diamond";
    }
    return "?";
}

FaceShape classify_face(const Skeleton& sk, const DistanceMaps& dm, int pair) {
    FaceShape out;
    out.pair = pair;
    out.face = sk.crossing_face_of_pair[pair];
    const auto& q = sk.quad_of_pair[pair];  // corners in face-walk order

    int lo = 0, hi = 0;
    for (int k = 1; k < 4; ++k) {
        if (dm.level[q[k]] < dm.level[q[lo]]) lo = k;
        if (dm.level[q[k]] > dm.level[q[hi]]) hi = k;
    }
    out.a = q[lo];
    int rel = (hi - lo + 4) % 4;
    if (rel == 2) {
        // interior faces walk counterclockwise, so the corner right after the
        // source is the right-side middle
        out.kind = FaceShapeKind::diamond;
        out.d = q[(lo + 1) % 4];
        out.c = q[(lo + 2) % 4];
        out.b = q[(lo + 3) % 4];
        if (dm.level[out.b] == dm.level[out.d])
            throw LayoutError(LayoutError::cycle_detected,
                              "diamond middles share a level; lifting failed");
    } else if (rel == 1) {
        // top adjacent in walk direction: the right boundary is the single
        // edge (a,d), the left path carries b and c
        out.kind = FaceShapeKind::left_wing;
        out.d = q[(lo + 1) % 4];
        out.c = q[(lo + 2) % 4];
        out.b = q[(lo + 3) % 4];
    } else {
        out.kind = FaceShapeKind::right_wing;
        out.b = q[(lo + 1) % 4];
        out.c = q[(lo + 2) % 4];
        out.d = q[(lo + 3) % 4];
    }
    return out;
}

std::vector<VertexId> match_crossed_vertices(const std::vector<FaceShape>& faces) {
    const int nf = static_cast<int>(faces.size());
    std::vector<VertexId> assigned(nf, -1);
    std::map<VertexId, std::vector<int>> at;  // inner vertex -> face indices
    for (int i = 0; i < nf; ++i)
        for (VertexId v : faces[i].inner()) at[v].push_back(i);
    for (auto& [v, fs] : at)
        if (fs.size() > 2)
            throw MatchError("vertex " + std::to_string(v) + " is inner to " +
                             std::to_string(fs.size()) + " crossing faces");

    std::vector<char> face_done(nf, 0);
    std::vector<char> vertex_used_flag;
    std::map<VertexId, char> used;
    auto degree = [&](VertexId v) {
        int d = 0;
        for (int f : at[v])
            if (!face_done[f]) ++d;
        return d;
    };

    // degree-one vertices first, in ascending face id
    bool progress = true;
    while (progress) {
        progress = false;
        int best_face = -1;
        VertexId best_vertex = -1;
        for (const auto& [v, fs] : at) {
            if (used.count(v) || degree(v) != 1) continue;
            for (int f : fs) {
                if (face_done[f]) continue;
                if (best_face < 0 || f < best_face ||
                    (f == best_face && v < best_vertex)) {
                    best_face = f;
                    best_vertex = v;
                }
            }
        }
        if (best_face >= 0) {
            assigned[best_face] = best_vertex;
            used[best_vertex] = 1;
            face_done[best_face] = 1;
            progress = true;
        }
    }

    // leftover components are alternating cycles of degree-2 vertices
    for (int f0 = 0; f0 < nf; ++f0) {
        if (face_done[f0]) continue;
        // lowest vertex id in this component
        std::vector<int> comp;
        std::vector<char> in_comp(nf, 0);
        std::vector<int> stack{f0};
        in_comp[f0] = 1;
        VertexId lowest = -1;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            comp.push_back(f);
            for (VertexId v : faces[f].inner()) {
                if (used.count(v)) continue;
                if (lowest < 0 || v < lowest) lowest = v;
                for (int g : at[v])
                    if (!face_done[g] && !in_comp[g]) {
                        in_comp[g] = 1;
                        stack.push_back(g);
                    }
            }
        }
        if (lowest < 0) throw MatchError("crossing face with no available inner vertex");
        // orient the cycle: start at the lowest vertex, walk via its
        // lowest-id incident face
        VertexId v = lowest;
        while (true) {
            int f = -1;
            for (int g : at[v])
                if (!face_done[g] && (f < 0 || g < f)) f = g;
            if (f < 0) break;
            assigned[f] = v;
            used[v] = 1;
            face_done[f] = 1;
            auto inn = faces[f].inner();
            v = inn[0] == v ? inn[1] : inn[0];
            if (used.count(v)) break;
        }
        for (int f : comp)
            if (!face_done[f]) throw MatchError("alternating cycle left a face unmatched");
    }
    return assigned;
}

namespace {

LayoutVertex& bar_of(VisibilityLayout& L, VertexId v) {
    for (auto& b : L.vertices)
        if (b.id == v) return b;
    throw MatchError("layout misses a vertex bar");
}

}  // namespace

void insert_crossing(VisibilityLayout& layout, const DistanceMaps& dm, const FaceShape& f,
                     VertexId crossed, int edge_ac, int edge_bd, EdgeKind kind_ac,
                     EdgeKind kind_bd) {
    const int X = 4 * dm.column[f.face];
    int x_ac = 0, x_bd = 0;
    switch (f.kind) {
        case FaceShapeKind::left_wing: {
            LayoutVertex& bb = bar_of(layout, f.b);
            LayoutVertex& bc = bar_of(layout, f.c);
            if (crossed == f.b) {
                bb.x_hi = std::max(bb.x_hi, X - 2);
                bc.x_hi = std::max(bc.x_hi, X - 3);
                x_ac = X - 3;
                x_bd = X - 2;
            } else {  // crossed == c, mirrored vertically
                bc.x_hi = std::max(bc.x_hi, X - 2);
                bb.x_hi = std::max(bb.x_hi, X - 3);
                x_bd = X - 3;
                x_ac = X - 2;
            }
            break;
        }
        case FaceShapeKind::right_wing: {
            LayoutVertex& bb = bar_of(layout, f.b);
            LayoutVertex& bc = bar_of(layout, f.c);
            if (crossed == f.b) {
                bb.x_lo = std::min(bb.x_lo, X - 2);
                bc.x_lo = std::min(bc.x_lo, X - 1);
                x_ac = X - 1;
                x_bd = X - 2;
            } else {
                bc.x_lo = std::min(bc.x_lo, X - 2);
                bb.x_lo = std::min(bb.x_lo, X - 1);
                x_bd = X - 1;
                x_ac = X - 2;
            }
            break;
        }
        case FaceShapeKind::diamond: {
            LayoutVertex& bb = bar_of(layout, f.b);
            LayoutVertex& bd = bar_of(layout, f.d);
            bb.x_hi = std::max(bb.x_hi, X - 2);
            bd.x_lo = std::min(bd.x_lo, X - 2);
            x_bd = X - 2;
            x_ac = crossed == f.b ? X - 3 : X - 1;
            break;
        }
    }
    auto push_edge = [&](int id, VertexId u, VertexId v, int x, EdgeKind kind) {
        LayoutEdge seg;
        seg.id = id;
        seg.u = u;
        seg.v = v;
        seg.kind = kind;
        seg.x = x;
        seg.y_lo = std::min(4 * dm.level[u], 4 * dm.level[v]);
        seg.y_hi = std::max(4 * dm.level[u], 4 * dm.level[v]);
        seg.hidden = kind != EdgeKind::original;
        layout.edges.push_back(seg);
    };
    push_edge(edge_ac, f.a, f.c, x_ac, kind_ac);
    push_edge(edge_bd, f.b, f.d, x_bd, kind_bd);

    // the crossing edge is the diagonal not incident to the crossed vertex
    int crossing_edge = (crossed == f.b || crossed == f.d) ? edge_ac : edge_bd;
    layout.crossings.push_back({crossing_edge, crossed});
}

FinalizeCounts finalize(VisibilityLayout& layout) {
    FinalizeCounts c;
    for (auto& e : layout.edges) {
        e.hidden = e.kind != EdgeKind::original;
        if (e.hidden) ++c.hidden;
        else ++c.visible;
    }
    return c;
}

}  // namespace onevis
