#include "onevis/st_number.hpp"

#include <algorithm>
#include <cassert>

namespace onevis {

namespace {

struct Dfs {
    std::vector<int> pre, low, parent, parent_edge, low_via;
    std::vector<char> tree_edge;  // per map edge slot
};

/// DFS from s taking st_edge first; rotation order everywhere else.
Dfs run_dfs(const PlanarMap& m, VertexId s, int st_edge) {
    const int n = m.num_vertices();
    Dfs d;
    d.pre.assign(n, -1);
    d.low.assign(n, -1);
    d.parent.assign(n, -1);
    d.parent_edge.assign(n, -1);
    d.low_via.assign(n, -1);
    d.tree_edge.assign(m.num_edge_slots(), 0);

    struct Frame {
        VertexId v;
        std::vector<Dart> rot;
        size_t next = 0;
    };
    int counter = 0;
    std::vector<Frame> stack;
    auto open = [&](VertexId v, VertexId par, int pedge) {
        d.pre[v] = counter++;
        d.low[v] = d.pre[v];
        d.parent[v] = par;
        d.parent_edge[v] = pedge;
        Frame f;
        f.v = v;
        f.rot = m.rotation(v);
        if (v == s) {
            // put the st edge's dart first
            auto it = std::find_if(f.rot.begin(), f.rot.end(),
                                   [&](Dart x) { return dart_edge(x) == st_edge; });
            if (it != f.rot.end()) std::rotate(f.rot.begin(), it, f.rot.end());
        }
        stack.push_back(std::move(f));
    };
    open(s, -1, -1);
    while (!stack.empty()) {
        Frame& f = stack.back();
        if (f.next >= f.rot.size()) {
            VertexId v = f.v;
            stack.pop_back();
            if (!stack.empty()) {
                VertexId p = stack.back().v;
                if (d.low[v] < d.low[p]) {
                    d.low[p] = d.low[v];
                    d.low_via[p] = d.parent_edge[v];
                }
            }
            continue;
        }
        Dart dart = f.rot[f.next++];
        int e = dart_edge(dart);
        VertexId w = m.head(dart);
        if (e == d.parent_edge[f.v]) continue;
        if (d.pre[w] == -1) {
            d.tree_edge[e] = 1;
            open(w, f.v, e);
        } else if (d.pre[w] < d.pre[f.v]) {
            if (d.pre[w] < d.low[f.v]) {
                d.low[f.v] = d.pre[w];
                d.low_via[f.v] = e;
            }
        }
    }
    return d;
}

}  // namespace

std::vector<int> st_number(const PlanarMap& m, VertexId s, VertexId t) {
    const int n = m.num_vertices();
    std::vector<int> num(n, -1);
    if (s == t) throw StError(StError::st_not_outer_edge, "s and t coincide");

    int st_edge = -1;
    for (Dart dd : m.rotation(s))
        if (m.head(dd) == t) {
            int e = dart_edge(dd);
            if (st_edge < 0 || e < st_edge) st_edge = e;
        }
    if (st_edge < 0) throw StError(StError::st_not_outer_edge, "s and t are not adjacent");

    Dfs d = run_dfs(m, s, st_edge);

    // classify remaining edges: per vertex a list of unused tree children,
    // up-going back edges, and incoming back edges from descendants
    std::vector<std::vector<int>> tree_out(n), back_up(n), back_down(n);
    for (VertexId v = 0; v < n; ++v) {
        if (d.pre[v] == -1) continue;
        for (Dart dd : m.rotation(v)) {
            int e = dart_edge(dd);
            VertexId w = m.head(dd);
            if (d.tree_edge[e]) {
                if (d.parent_edge[w] == e && d.parent[w] == v) tree_out[v].push_back(e);
            } else if (e != d.parent_edge[v] && d.pre[w] < d.pre[v]) {
                back_up[v].push_back(e);
                back_down[w].push_back(e);
            }
        }
    }
    // dedupe back_down entries added from the descendant side scan
    for (VertexId v = 0; v < n; ++v) {
        auto& b = back_down[v];
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }

    std::vector<char> vertex_old(n, 0), edge_used(m.num_edge_slots(), 0);
    std::vector<size_t> it_tree(n, 0), it_up(n, 0), it_down(n, 0);
    auto other = [&](int e, VertexId v) {
        return m.edge(e).u == v ? m.edge(e).v : m.edge(e).u;
    };

    auto find_path = [&](VertexId v) -> std::vector<VertexId> {
        // (a) unused back edge to an ancestor
        while (it_up[v] < back_up[v].size()) {
            int e = back_up[v][it_up[v]++];
            if (edge_used[e]) continue;
            edge_used[e] = 1;
            return {v, other(e, v)};
        }
        // (b) unused tree edge: descend along the lowpoint path
        while (it_tree[v] < tree_out[v].size()) {
            int e = tree_out[v][it_tree[v]++];
            if (edge_used[e]) continue;
            edge_used[e] = 1;
            std::vector<VertexId> path{v};
            VertexId u = other(e, v);
            while (!vertex_old[u]) {
                vertex_old[u] = 1;
                path.push_back(u);
                int via = d.low_via[u];
                if (via < 0) throw StError(StError::not_biconnected, "no lowpoint path");
                edge_used[via] = 1;
                u = other(via, u);
            }
            path.push_back(u);
            return path;
        }
        // (c) unused incoming back edge: climb parents to an old vertex
        while (it_down[v] < back_down[v].size()) {
            int e = back_down[v][it_down[v]++];
            if (edge_used[e]) continue;
            edge_used[e] = 1;
            std::vector<VertexId> path{v};
            VertexId u = other(e, v);
            while (!vertex_old[u]) {
                vertex_old[u] = 1;
                path.push_back(u);
                int pe = d.parent_edge[u];
                if (pe < 0) throw StError(StError::not_biconnected, "no parent path");
                edge_used[pe] = 1;
                u = other(pe, u);
            }
            path.push_back(u);
            return path;
        }
        return {};
    };

    std::vector<VertexId> stack{t, s};
    vertex_old[s] = vertex_old[t] = 1;
    edge_used[st_edge] = 1;
    int count = 0;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        std::vector<VertexId> path = find_path(v);
        if (path.empty()) {
            num[v] = count++;
        } else {
            for (size_t i = path.size() - 1; i >= 1; --i) stack.push_back(path[i - 1]);
        }
    }

    // sanity: bipolar property
    for (VertexId v = 0; v < n; ++v) {
        if (d.pre[v] == -1) continue;
        if (num[v] < 0)
            throw StError(StError::not_biconnected, "st-numbering did not reach every vertex");
        bool lower = v == s, higher = v == t;
        for (Dart dd : m.rotation(v)) {
            VertexId w = m.head(dd);
            if (num[w] < num[v]) lower = true;
            if (num[w] > num[v]) higher = true;
        }
        if (!lower || !higher)
            throw StError(StError::not_biconnected,
                          "vertex " + std::to_string(v) + " lacks a lower or higher neighbor");
    }
    return num;
}

}  // namespace onevis
