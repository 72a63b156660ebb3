#include "onevis/planar_map.hpp"

#include <cassert>

namespace onevis {

PlanarMap::PlanarMap(int num_vertices) : vertex_dart_(num_vertices, -1) {}

VertexId PlanarMap::add_vertex() {
    vertex_dart_.push_back(-1);
    return static_cast<VertexId>(vertex_dart_.size()) - 1;
}

int PlanarMap::degree(VertexId v) const {
    Dart d0 = vertex_dart_[v];
    if (d0 < 0) return 0;
    int deg = 0;
    Dart d = d0;
    do {
        ++deg;
        d = rot_next_[d];
    } while (d != d0);
    return deg;
}

std::vector<Dart> PlanarMap::rotation(VertexId v) const {
    std::vector<Dart> out;
    Dart d0 = vertex_dart_[v];
    if (d0 < 0) return out;
    Dart d = d0;
    do {
        out.push_back(d);
        d = rot_next_[d];
    } while (d != d0);
    return out;
}

void PlanarMap::rot_insert_before(VertexId v, Dart nd, Dart before) {
    tail_[nd] = v;
    if (vertex_dart_[v] < 0) {
        vertex_dart_[v] = nd;
        rot_next_[nd] = nd;
        rot_prev_[nd] = nd;
        return;
    }
    Dart b = before >= 0 ? before : vertex_dart_[v];
    assert(tail_[b] == v);
    Dart p = rot_prev_[b];
    rot_next_[p] = nd;
    rot_prev_[nd] = p;
    rot_next_[nd] = b;
    rot_prev_[b] = nd;
}

void PlanarMap::relink_rotation(VertexId v, const std::vector<Dart>& darts) {
    assert(static_cast<int>(darts.size()) == degree(v));
    if (darts.empty()) return;
    const size_t k = darts.size();
    for (size_t i = 0; i < k; ++i) {
        assert(tail_[darts[i]] == v);
        rot_next_[darts[i]] = darts[(i + 1) % k];
        rot_prev_[darts[(i + 1) % k]] = darts[i];
    }
    vertex_dart_[v] = darts[0];
}

void PlanarMap::rot_remove(Dart d) {
    VertexId v = tail_[d];
    if (rot_next_[d] == d) {
        vertex_dart_[v] = -1;
    } else {
        rot_next_[rot_prev_[d]] = rot_next_[d];
        rot_prev_[rot_next_[d]] = rot_prev_[d];
        if (vertex_dart_[v] == d) vertex_dart_[v] = rot_next_[d];
    }
    rot_next_[d] = rot_prev_[d] = -1;
}

int PlanarMap::insert_edge(VertexId u, VertexId v, Dart before_at_u, Dart before_at_v,
                           EdgeKind kind, EdgeId orig, int part) {
    int e = static_cast<int>(edges_.size());
    edges_.push_back({u, v, kind, orig, part, true});
    rot_next_.resize(2 * e + 2, -1);
    rot_prev_.resize(2 * e + 2, -1);
    tail_.resize(2 * e + 2, -1);
    rot_insert_before(u, 2 * e, before_at_u);
    rot_insert_before(v, 2 * e + 1, before_at_v);
    ++alive_edges_;
    return e;
}

void PlanarMap::delete_edge(int e) {
    assert(edges_[e].alive);
    rot_remove(2 * e);
    rot_remove(2 * e + 1);
    edges_[e].alive = false;
    --alive_edges_;
}

PlanarMap::Subdivision PlanarMap::subdivide_edge(int e) {
    assert(edges_[e].alive);
    const MapEdge old = edges_[e];
    VertexId x = add_vertex();
    // anchors: successor darts in each endpoint's rotation, before unlinking
    Dart du = 2 * e, dv = 2 * e + 1;
    Dart after_u = rot_next_[du] == du ? -1 : rot_next_[du];
    Dart after_v = rot_next_[dv] == dv ? -1 : rot_next_[dv];
    delete_edge(e);
    int eux = insert_edge(old.u, x, after_u, -1, old.kind, old.orig, 0);
    int exv = insert_edge(x, old.v, -1, after_v, old.kind, old.orig, 1);
    // rotation at x is now [x->u, x->v] in insertion order (cyclic pair)
    return {eux, exv, x};
}

PlanarMap::Faces PlanarMap::faces(Dart outer_dart) const {
    Faces f;
    f.face_of.assign(rot_next_.size(), -1);
    for (size_t d0 = 0; d0 < rot_next_.size(); ++d0) {
        if (!edges_[dart_edge(static_cast<Dart>(d0))].alive) continue;
        if (f.face_of[d0] != -1) continue;
        int id = static_cast<int>(f.cycle.size());
        std::vector<Dart> cyc;
        Dart d = static_cast<Dart>(d0);
        do {
            f.face_of[d] = id;
            cyc.push_back(d);
            d = next_in_face(d);
        } while (d != static_cast<Dart>(d0));
        f.cycle.push_back(std::move(cyc));
    }
    if (outer_dart >= 0 && outer_dart < static_cast<Dart>(f.face_of.size()))
        f.outer = f.face_of[outer_dart];
    return f;
}

std::vector<Dart> PlanarMap::face_walk(Dart d0, int limit) const {
    std::vector<Dart> out;
    Dart d = d0;
    do {
        out.push_back(d);
        d = next_in_face(d);
        if (limit >= 0 && static_cast<int>(out.size()) > limit) break;
    } while (d != d0);
    return out;
}

int PlanarMap::num_components() const {
    const int n = num_vertices();
    std::vector<int> comp(n, -1);
    int nc = 0;
    std::vector<VertexId> stack;
    for (VertexId s = 0; s < n; ++s) {
        if (comp[s] != -1 || vertex_dart_[s] < 0) continue;
        comp[s] = nc;
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (Dart d : rotation(v)) {
                VertexId w = head(d);
                if (comp[w] == -1) {
                    comp[w] = nc;
                    stack.push_back(w);
                }
            }
        }
        ++nc;
    }
    return nc;
}

bool PlanarMap::euler_ok() const {
    const int n = num_vertices();
    std::vector<int> comp(n, -1);
    int nc = 0;
    std::vector<VertexId> stack;
    std::vector<int> cv, ce;
    for (VertexId s = 0; s < n; ++s) {
        if (comp[s] != -1 || vertex_dart_[s] < 0) continue;
        comp[s] = nc;
        cv.push_back(0);
        ce.push_back(0);
        stack.push_back(s);
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            ++cv[nc];
            for (Dart d : rotation(v)) {
                VertexId w = head(d);
                if (comp[w] == -1) {
                    comp[w] = nc;
                    stack.push_back(w);
                }
            }
        }
        ++nc;
    }
    for (int e = 0; e < num_edge_slots(); ++e)
        if (edges_[e].alive) ++ce[comp[edges_[e].u]];
    // count faces per component
    Faces f = faces();
    std::vector<int> cf(nc, 0);
    for (const auto& cyc : f.cycle) ++cf[comp[tail_[cyc.front()]]];
    for (int c = 0; c < nc; ++c)
        if (cv[c] - ce[c] + cf[c] != 2) return false;
    return true;
}

}  // namespace onevis
