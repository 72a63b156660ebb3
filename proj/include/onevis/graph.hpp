#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace onevis {

using VertexId = int;
using EdgeId = int;

enum class EdgeKind : std::uint8_t { original, augmented, separation };

const char* to_string(EdgeKind k);

struct GraphError : std::runtime_error {
    enum Code {
        self_loop,
        endpoint_out_of_range,
        illegal_parallel_edge,
    } code;
    GraphError(Code c, const std::string& msg) : std::runtime_error(msg), code(c) {}
};

struct Edge {
    VertexId u = -1;
    VertexId v = -1;
    EdgeKind kind = EdgeKind::original;

    VertexId other(VertexId w) const { return w == u ? v : u; }
};

/// Undirected multigraph with provenance-tagged edges. Parallel edges are
/// admitted only when at least one copy of the pair is a separation edge.
/// Immutable by convention once handed to the pipeline.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<Edge> edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<EdgeId>& incident(VertexId v) const { return adj_[v]; }
    int degree(VertexId v) const { return static_cast<int>(adj_[v].size()); }

    /// Appends an edge, revalidating the parallel-edge rule. Returns its id.
    EdgeId add_edge(VertexId u, VertexId v, EdgeKind kind);
    bool has_simple_edge(VertexId u, VertexId v) const;

private:
    void check_edge(VertexId u, VertexId v, EdgeKind kind) const;

    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> adj_;
};

Graph build_graph(int n, const std::vector<Edge>& edges);

struct DensityReport {
    bool pass = false;
    bool tight = false;      // m == 4n-8
    int n = 0;
    int m = 0;               // distinct simple original+augmented edges
    int bound = 0;           // 4n-8 (n >= 3)
};

/// Checks m <= 4n-8 over distinct original+augmented edges; separation
/// copies are excluded so the bound matches the simple-graph statement.
DensityReport check_density(const Graph& g);

struct BlockDecomposition {
    std::vector<std::vector<EdgeId>> blocks;  // each edge in exactly one block
    std::vector<VertexId> cut_vertices;
    /// block index per edge id
    std::vector<int> block_of_edge;
};

/// Standard block-cut decomposition (2-connected components).
BlockDecomposition blocks(const Graph& g);

bool is_connected(const Graph& g);
bool is_biconnected(const Graph& g);

}  // namespace onevis
