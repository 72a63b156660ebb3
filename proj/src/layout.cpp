#include "onevis/layout.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace onevis {

namespace {

/// Longest-path layering of a DAG given as adjacency (u -> v edges).
/// Returns false on a cycle.
bool longest_path_levels(int n, const std::vector<std::pair<int, int>>& arcs,
                         std::vector<int>& level, const std::vector<char>& active) {
    std::vector<std::vector<int>> out(n);
    std::vector<int> indeg(n, 0);
    for (auto [a, b] : arcs) {
        out[a].push_back(b);
        ++indeg[b];
    }
    level.assign(n, 0);
    std::vector<int> queue;
    for (int v = 0; v < n; ++v)
        if (active[v] && indeg[v] == 0) queue.push_back(v);
    size_t qi = 0;
    int seen = 0;
    while (qi < queue.size()) {
        int v = queue[qi++];
        ++seen;
        for (int w : out[v]) {
            level[w] = std::max(level[w], level[v] + 1);
            if (--indeg[w] == 0) queue.push_back(w);
        }
    }
    int total = 0;
    for (int v = 0; v < n; ++v)
        if (active[v]) ++total;
    return seen == total;
}

}  // namespace

DistanceMaps dual_distances(const Skeleton& sk, const std::vector<int>& st, VertexId s,
                            VertexId t) {
    const PlanarMap& m = sk.map;
    const int n = m.num_vertices();
    DistanceMaps d;
    d.st = st;
    d.s = s;
    d.t = t;

    std::vector<char> active(n, 0);
    for (int v = 0; v < n; ++v) active[v] = m.vertex_dart(v) >= 0;

    // primal arcs by st orientation
    std::vector<std::pair<int, int>> arcs;
    for (int e = 0; e < m.num_edge_slots(); ++e) {
        if (!m.edge(e).alive) continue;
        VertexId a = m.edge(e).u, b = m.edge(e).v;
        if (st[a] < st[b]) arcs.push_back({a, b});
        else arcs.push_back({b, a});
    }

    // iterate: lift the middle vertices of diamond quadrangles apart
    std::vector<std::pair<int, int>> virtuals;
    for (int round = 0; round <= static_cast<int>(sk.quad_of_pair.size()); ++round) {
        std::vector<std::pair<int, int>> all = arcs;
        all.insert(all.end(), virtuals.begin(), virtuals.end());
        if (!longest_path_levels(n, all, d.level, active))
            throw LayoutError(LayoutError::cycle_detected, "st orientation has a cycle");
        int added = 0;
        for (const auto& quad : sk.quad_of_pair) {
            int lo = 0;
            for (int k = 1; k < 4; ++k)
                if (d.level[quad[k]] < d.level[quad[lo]]) lo = k;
            int hi = 0;
            for (int k = 1; k < 4; ++k)
                if (d.level[quad[k]] > d.level[quad[hi]]) hi = k;
            if ((hi - lo + 4) % 4 != 2) continue;  // wing shape: middles on a path
            VertexId b = quad[(lo + 1) % 4], dd = quad[(lo + 3) % 4];
            if (d.level[b] != d.level[dd]) continue;
            VertexId from = std::min(b, dd), to = std::max(b, dd);
            if (std::find(virtuals.begin(), virtuals.end(), std::make_pair(from, to)) ==
                virtuals.end()) {
                virtuals.push_back({from, to});
                ++added;
            }
        }
        if (added == 0) break;
    }
    for (int v = 0; v < n; ++v)
        if (!active[v]) d.level[v] = -1;
    d.height = d.level[t] + 1;

    // dual: faces plus split outer (s* = left of the st edge, t* = the rest)
    const auto& F = sk.faces;
    const int nf = static_cast<int>(F.cycle.size());
    const int s_star = nf, t_star = nf + 1;
    std::vector<std::pair<int, int>> dual_arcs;
    for (int e = 0; e < m.num_edge_slots(); ++e) {
        if (!m.edge(e).alive) continue;
        Dart up = d.up_dart(m, e);
        int L = F.face_of[up], R = F.face_of[twin(up)];
        int Ln = L == F.outer ? s_star : L;
        int Rn = R == F.outer ? t_star : R;
        dual_arcs.push_back({Ln, Rn});
    }
    std::vector<char> dual_active(nf + 2, 1);
    if (F.outer >= 0) dual_active[F.outer] = 0;
    std::vector<int> col;
    std::vector<std::pair<int, int>> filtered;
    for (auto [a, b] : dual_arcs)
        if (dual_active[a] && dual_active[b]) filtered.push_back({a, b});
    if (!longest_path_levels(nf + 2, filtered, col, dual_active))
        throw LayoutError(LayoutError::cycle_detected, "dual orientation has a cycle");
    d.column.assign(nf, 0);
    for (int f = 0; f < nf; ++f) d.column[f] = col[f];
    d.col_t_star = col[t_star];
    d.width = d.col_t_star;
    return d;
}

VisibilityLayout planar_visibility(const Skeleton& sk, const DistanceMaps& d,
                                   int first_free_edge_id) {
    const PlanarMap& m = sk.map;
    const auto& F = sk.faces;
    VisibilityLayout out;
    const int t_col = d.col_t_star;

    for (VertexId v = 0; v < m.num_vertices(); ++v) {
        if (m.vertex_dart(v) < 0) continue;
        LayoutVertex bar;
        bar.id = v;
        bar.y = 4 * d.level[v];
        if (v == d.s || v == d.t) {
            bar.x_lo = 0;
            bar.x_hi = 4 * (t_col - 1);
        } else {
            int lo = t_col, hi = 0;
            for (Dart dd : m.rotation(v)) {
                int f = F.face_of[dd];
                int c = f == F.outer ? t_col : d.column[f];
                lo = std::min(lo, c);
                hi = std::max(hi, c);
            }
            bar.x_lo = 4 * lo;
            bar.x_hi = 4 * (hi - 1);
        }
        out.vertices.push_back(bar);
    }

    int fresh = first_free_edge_id;
    for (int e = 0; e < m.num_edge_slots(); ++e) {
        if (!m.edge(e).alive) continue;
        Dart up = d.up_dart(m, e);
        int L = F.face_of[up];
        int x = L == F.outer ? 0 : 4 * d.column[L];
        LayoutEdge seg;
        seg.id = m.edge(e).orig >= 0 ? m.edge(e).orig : fresh++;
        seg.u = m.tail(up);
        seg.v = m.head(up);
        seg.kind = m.edge(e).kind;
        seg.x = x;
        seg.y_lo = 4 * d.level[seg.u];
        seg.y_hi = 4 * d.level[seg.v];
        seg.hidden = seg.kind != EdgeKind::original;
        out.edges.push_back(seg);
    }
    return out;
}

}  // namespace onevis
