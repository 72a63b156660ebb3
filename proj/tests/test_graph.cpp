#include "onevis/graph.hpp"

#include <algorithm>
#include <set>

#include "check.hpp"

using namespace onevis;

namespace {

Graph k7_minus_e() {
    // vertices 0..6 stand for the paper's 1..7; the missing pair is (2,7),
    // i.e. (1,6) zero-based
    std::vector<Edge> es;
    for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v)
            if (!(u == 1 && v == 6)) es.push_back({u, v, EdgeKind::original});
    return build_graph(7, es);
}

void test_build_triangle() {
    TEST_BEGIN("build triangle");
    Graph g = build_graph(3, {{0, 1, EdgeKind::original},
                              {1, 2, EdgeKind::original},
                              {0, 2, EdgeKind::original}});
    CHECK_EQ(g.num_vertices(), 3);
    CHECK_EQ(g.num_edges(), 3);
    CHECK_EQ(g.degree(1), 2);
}

void test_build_errors() {
    TEST_BEGIN("build errors");
    bool threw = false;
    try {
        build_graph(2, {{0, 1, EdgeKind::original}, {0, 1, EdgeKind::original}});
    } catch (const GraphError& e) {
        threw = e.code == GraphError::illegal_parallel_edge;
    }
    CHECK(threw);

    threw = false;
    try {
        build_graph(2, {{0, 0, EdgeKind::original}});
    } catch (const GraphError& e) {
        threw = e.code == GraphError::self_loop;
    }
    CHECK(threw);

    threw = false;
    try {
        build_graph(2, {{0, 5, EdgeKind::original}});
    } catch (const GraphError& e) {
        threw = e.code == GraphError::endpoint_out_of_range;
    }
    CHECK(threw);

    // a separation copy legitimizes the parallel pair
    Graph g = build_graph(2, {{0, 1, EdgeKind::original}, {0, 1, EdgeKind::separation}});
    CHECK_EQ(g.num_edges(), 2);
}

void test_k7_minus_e() {
    TEST_BEGIN("K7-e counts");
    Graph g = k7_minus_e();
    CHECK_EQ(g.num_edges(), 20);
    int deg5 = 0, deg6 = 0;
    for (int v = 0; v < 7; ++v) {
        if (g.degree(v) == 5) ++deg5;
        if (g.degree(v) == 6) ++deg6;
    }
    CHECK_EQ(deg5, 2);
    CHECK_EQ(deg6, 5);
}

void test_density() {
    TEST_BEGIN("density check");
    DensityReport r = check_density(k7_minus_e());
    CHECK(r.pass);
    CHECK(r.tight);
    CHECK_EQ(r.m, 20);
    CHECK_EQ(r.bound, 20);

    // K7 fails: 21 > 4*7-8
    std::vector<Edge> es;
    for (int u = 0; u < 7; ++u)
        for (int v = u + 1; v < 7; ++v) es.push_back({u, v, EdgeKind::original});
    DensityReport k7 = check_density(build_graph(7, es));
    CHECK(!k7.pass);
    CHECK_EQ(k7.m, 21);

    // small-n guard
    DensityReport tiny = check_density(build_graph(2, {{0, 1, EdgeKind::original}}));
    CHECK(tiny.pass);

    // separation copies are not counted
    Graph g = build_graph(3, {{0, 1, EdgeKind::original},
                              {1, 2, EdgeKind::original},
                              {0, 2, EdgeKind::original},
                              {0, 1, EdgeKind::separation}});
    CHECK_EQ(check_density(g).m, 3);
}

// brute-force connectivity oracle: would removing v disconnect the rest?
bool removal_disconnects(const Graph& g, VertexId cut) {
    const int n = g.num_vertices();
    std::vector<bool> vis(n, false);
    VertexId start = -1;
    for (VertexId v = 0; v < n; ++v)
        if (v != cut && g.degree(v) > 0) {
            start = v;
            break;
        }
    if (start < 0) return false;
    std::vector<VertexId> q{start};
    vis[start] = true;
    while (!q.empty()) {
        VertexId v = q.back();
        q.pop_back();
        for (EdgeId e : g.incident(v)) {
            VertexId w = g.edge(e).other(v);
            if (w == cut || vis[w]) continue;
            vis[w] = true;
            q.push_back(w);
        }
    }
    for (VertexId v = 0; v < n; ++v)
        if (v != cut && g.degree(v) > 0 && !vis[v]) return true;
    return false;
}

void test_blocks() {
    TEST_BEGIN("block decomposition");
    // bowtie: two triangles sharing vertex 2
    Graph bow = build_graph(5, {{0, 1, EdgeKind::original},
                                {1, 2, EdgeKind::original},
                                {0, 2, EdgeKind::original},
                                {2, 3, EdgeKind::original},
                                {3, 4, EdgeKind::original},
                                {2, 4, EdgeKind::original}});
    BlockDecomposition d = blocks(bow);
    CHECK_EQ(d.blocks.size(), 2u);
    CHECK_EQ(d.cut_vertices.size(), 1u);
    CHECK(d.cut_vertices.size() == 1 && d.cut_vertices[0] == 2);

    // C5: one block, no cut vertices
    Graph c5 = build_graph(5, {{0, 1, EdgeKind::original},
                               {1, 2, EdgeKind::original},
                               {2, 3, EdgeKind::original},
                               {3, 4, EdgeKind::original},
                               {4, 0, EdgeKind::original}});
    d = blocks(c5);
    CHECK_EQ(d.blocks.size(), 1u);
    CHECK(d.cut_vertices.empty());
    CHECK(is_biconnected(c5));

    // path with 3 edges: three single-edge blocks
    Graph path = build_graph(4, {{0, 1, EdgeKind::original},
                                 {1, 2, EdgeKind::original},
                                 {2, 3, EdgeKind::original}});
    d = blocks(path);
    CHECK_EQ(d.blocks.size(), 3u);
    CHECK_EQ(d.cut_vertices.size(), 2u);

    // edge partition property + oracle agreement on assorted graphs
    for (const Graph& g : {bow, c5, path, k7_minus_e()}) {
        BlockDecomposition bd = blocks(g);
        std::vector<int> owner(g.num_edges(), 0);
        for (const auto& blk : bd.blocks)
            for (EdgeId e : blk) ++owner[e];
        CHECK(std::all_of(owner.begin(), owner.end(), [](int c) { return c == 1; }));
        std::set<VertexId> cuts(bd.cut_vertices.begin(), bd.cut_vertices.end());
        for (VertexId v = 0; v < g.num_vertices(); ++v)
            CHECK_EQ(removal_disconnects(g, v), cuts.count(v) == 1);
    }
}

}  // namespace

int main() {
    test_build_triangle();
    test_build_errors();
    test_k7_minus_e();
    test_density();
    test_blocks();
    return testing::summary();
}
