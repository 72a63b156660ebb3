#include "onevis/graph.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <utility>

namespace onevis {

const char* to_string(EdgeKind k) {
    switch (k) {
        case EdgeKind::original: return "original";
        case EdgeKind::augmented: return "augmented";
        case EdgeKind::separation: return "separation";
    }
    return "?";
}

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), adj_(n) {
    edges_.reserve(edges.size());
    for (const Edge& e : edges) add_edge(e.u, e.v, e.kind);
}

void Graph::check_edge(VertexId u, VertexId v, EdgeKind kind) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw GraphError(GraphError::endpoint_out_of_range,
                         "edge endpoint out of range: (" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
        throw GraphError(GraphError::self_loop, "self-loop at vertex " + std::to_string(u));
    if (kind != EdgeKind::separation && has_simple_edge(u, v))
        throw GraphError(GraphError::illegal_parallel_edge,
                         "parallel edge (" + std::to_string(u) + "," + std::to_string(v) +
                             ") without separation kind");
}

bool Graph::has_simple_edge(VertexId u, VertexId v) const {
    if (u < 0 || u >= n_) return false;
    for (EdgeId e : adj_[u])
        if (edges_[e].other(u) == v) return true;
    return false;
}

EdgeId Graph::add_edge(VertexId u, VertexId v, EdgeKind kind) {
    check_edge(u, v, kind);
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v, kind});
    adj_[u].push_back(id);
    adj_[v].push_back(id);
    return id;
}

Graph build_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

DensityReport check_density(const Graph& g) {
    DensityReport r;
    r.n = g.num_vertices();
    std::set<std::pair<VertexId, VertexId>> simple;
    for (const Edge& e : g.edges()) {
        if (e.kind == EdgeKind::separation) continue;
        simple.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
    }
    r.m = static_cast<int>(simple.size());
    if (r.n < 3) {
        r.bound = 0;
        r.pass = true;  // bound is meaningless below n=3; any simple graph passes
        return r;
    }
    r.bound = 4 * r.n - 8;
    r.pass = r.m <= r.bound;
    r.tight = r.m == r.bound;
    return r;
}

namespace {

struct BlockState {
    const Graph* g;
    std::vector<int> num, low;
    std::vector<bool> is_cut;
    std::vector<EdgeId> stack;
    std::vector<std::vector<EdgeId>> blocks;
    std::vector<int> block_of_edge;
    int counter = 0;

    void pop_block(EdgeId until) {
        std::vector<EdgeId> blk;
        while (true) {
            EdgeId e = stack.back();
            stack.pop_back();
            blk.push_back(e);
            if (e == until) break;
        }
        int bi = static_cast<int>(blocks.size());
        for (EdgeId e : blk) block_of_edge[e] = bi;
        blocks.push_back(std::move(blk));
    }
};

}  // namespace

BlockDecomposition blocks(const Graph& g) {
    const int n = g.num_vertices();
    BlockState st;
    st.g = &g;
    st.num.assign(n, -1);
    st.low.assign(n, 0);
    st.is_cut.assign(n, false);
    st.block_of_edge.assign(g.num_edges(), -1);

    // iterative DFS to survive deep graphs
    struct Frame {
        VertexId v;
        VertexId parent;
        EdgeId parent_edge;
        size_t next = 0;
        int child_count = 0;
    };
    for (VertexId root = 0; root < n; ++root) {
        if (st.num[root] != -1) continue;
        std::vector<Frame> stack{{root, -1, -1}};
        st.num[root] = st.low[root] = st.counter++;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto& inc = g.incident(f.v);
            if (f.next < inc.size()) {
                EdgeId e = inc[f.next++];
                if (e == f.parent_edge) continue;
                VertexId w = g.edge(e).other(f.v);
                if (st.num[w] == -1) {
                    st.stack.push_back(e);
                    st.num[w] = st.low[w] = st.counter++;
                    stack.push_back({w, f.v, e});
                } else if (st.num[w] < st.num[f.v]) {
                    st.stack.push_back(e);
                    st.low[f.v] = std::min(st.low[f.v], st.num[w]);
                }
            } else {
                Frame done = f;
                stack.pop_back();
                if (stack.empty()) {
                    if (done.child_count == 0 && g.degree(done.v) == 0) {
                        // isolated vertex: no block
                    }
                    continue;
                }
                Frame& p = stack.back();
                ++p.child_count;
                st.low[p.v] = std::min(st.low[p.v], st.low[done.v]);
                if (st.low[done.v] >= st.num[p.v]) {
                    bool is_root = stack.size() == 1;
                    if (!is_root || p.child_count > 1) {
                        // provisional; root rule fixed below
                    }
                    if (st.num[p.v] > 0 || p.child_count > 1) st.is_cut[p.v] = true;
                    if (stack.size() == 1 && p.child_count <= 1) st.is_cut[p.v] = false;
                    st.pop_block(done.parent_edge);
                }
            }
        }
    }

    BlockDecomposition out;
    out.blocks = std::move(st.blocks);
    out.block_of_edge = std::move(st.block_of_edge);
    // A vertex is a cut vertex exactly when it appears in >= 2 blocks.
    std::vector<int> seen(n, -1);
    std::vector<int> count(n, 0);
    for (size_t b = 0; b < out.blocks.size(); ++b) {
        for (EdgeId e : out.blocks[b]) {
            for (VertexId w : {g.edge(e).u, g.edge(e).v}) {
                if (seen[w] != static_cast<int>(b)) {
                    seen[w] = static_cast<int>(b);
                    ++count[w];
                }
            }
        }
    }
    for (VertexId v = 0; v < n; ++v)
        if (count[v] >= 2) out.cut_vertices.push_back(v);
    return out;
}

bool is_connected(const Graph& g) {
    const int n = g.num_vertices();
    if (n <= 1) return true;
    std::vector<bool> vis(n, false);
    std::vector<VertexId> q{0};
    vis[0] = true;
    int reached = 1;
    while (!q.empty()) {
        VertexId v = q.back();
        q.pop_back();
        for (EdgeId e : g.incident(v)) {
            VertexId w = g.edge(e).other(v);
            if (!vis[w]) {
                vis[w] = true;
                ++reached;
                q.push_back(w);
            }
        }
    }
    return reached == n;
}

bool is_biconnected(const Graph& g) {
    if (g.num_vertices() < 3) return is_connected(g) && g.num_edges() >= 1;
    if (!is_connected(g)) return false;
    return blocks(g).blocks.size() == 1;
}

}  // namespace onevis
