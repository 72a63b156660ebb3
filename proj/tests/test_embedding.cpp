#include "onevis/embedding.hpp"

#include <algorithm>
#include <set>

#include "check.hpp"
#include "onevis/augment.hpp"

using namespace onevis;

namespace {

// Plane K4: triangle 0,1,2 with 3 inside.
OnePlanarEmbedding plane_k4() {
    OnePlanarEmbedding emb;
    emb.graph = build_graph(4, {{0, 1, EdgeKind::original},
                                {1, 2, EdgeKind::original},
                                {2, 0, EdgeKind::original},
                                {0, 3, EdgeKind::original},
                                {1, 3, EdgeKind::original},
                                {2, 3, EdgeKind::original}});
    emb.rotation = {
        {2 * 2 + 1, 2 * 3, 2 * 0},      // at 0: ->2, ->3, ->1
        {2 * 0 + 1, 2 * 4, 2 * 1},      // at 1: ->0, ->3, ->2
        {2 * 1 + 1, 2 * 5, 2 * 2},      // at 2: ->1, ->3, ->0
        {2 * 4 + 1, 2 * 3 + 1, 2 * 5 + 1},  // at 3: ->1, ->0, ->2
    };
    return emb;
}

// K5 drawn with vertex 4 outside the K4 triangle; edge (4,3) crosses (0,1).
OnePlanarEmbedding k5_one_crossing() {
    OnePlanarEmbedding emb;
    emb.graph = build_graph(5, {{0, 1, EdgeKind::original},    // e0, crossed
                                {1, 2, EdgeKind::original},    // e1
                                {2, 0, EdgeKind::original},    // e2
                                {0, 3, EdgeKind::original},    // e3
                                {1, 3, EdgeKind::original},    // e4
                                {2, 3, EdgeKind::original},    // e5
                                {4, 0, EdgeKind::original},    // e6
                                {4, 1, EdgeKind::original},    // e7
                                {4, 2, EdgeKind::original},    // e8
                                {4, 3, EdgeKind::original}});  // e9, crossed
    emb.rotation = {
        {2 * 2 + 1, 2 * 3, 2 * 0, 2 * 6 + 1},
        {2 * 7 + 1, 2 * 0 + 1, 2 * 4, 2 * 1},
        {2 * 1 + 1, 2 * 5, 2 * 2, 2 * 8 + 1},
        {2 * 4 + 1, 2 * 9 + 1, 2 * 3 + 1, 2 * 5 + 1},
        {2 * 8, 2 * 6, 2 * 9, 2 * 7},
    };
    emb.crossings = {{9, 0}};
    return emb;
}

// Augmented X-configuration: quadrangle 0-1-2-3 with crossed diagonals.
OnePlanarEmbedding x_gadget() {
    OnePlanarEmbedding emb;
    emb.graph = build_graph(4, {{0, 1, EdgeKind::original},    // e0
                                {1, 2, EdgeKind::original},    // e1
                                {2, 3, EdgeKind::original},    // e2
                                {3, 0, EdgeKind::original},    // e3
                                {0, 2, EdgeKind::original},    // e4 diagonal
                                {1, 3, EdgeKind::original}});  // e5 diagonal
    emb.rotation = {
        {2 * 3 + 1, 2 * 4, 2 * 0},
        {2 * 0 + 1, 2 * 5, 2 * 1},
        {2 * 1 + 1, 2 * 4 + 1, 2 * 2},
        {2 * 2 + 1, 2 * 5 + 1, 2 * 3},
    };
    emb.crossings = {{4, 5}};
    return emb;
}

void test_plane_k4() {
    TEST_BEGIN("planarize plane K4");
    Planarization p = planarize(plane_k4());
    CHECK_EQ(p.map.num_vertices(), 4);
    CHECK_EQ(p.map.num_edges_alive(), 6);
    auto f = p.map.faces();
    CHECK_EQ(f.cycle.size(), 4u);  // Euler: 4-6+F=2
    int total_darts = 0;
    for (const auto& c : f.cycle) total_darts += static_cast<int>(c.size());
    CHECK_EQ(total_darts, 12);
}

void test_k5() {
    TEST_BEGIN("planarize K5 with one crossing");
    Planarization p = planarize(k5_one_crossing());
    CHECK_EQ(p.map.num_vertices(), 6);
    CHECK_EQ(p.map.num_edges_alive(), 12);
    auto f = p.map.faces();
    CHECK_EQ(f.cycle.size(), 8u);  // Euler: 6-12+F=2
    VertexId x = p.dummy_of_pair[0];
    CHECK_EQ(p.map.degree(x), 4);
    // alternation: opposite darts around the dummy belong to the same edge
    auto rot = p.map.rotation(x);
    std::set<VertexId> odd{p.map.head(rot[0]), p.map.head(rot[2])};
    CHECK(odd == std::set<VertexId>({4, 3}) || odd == std::set<VertexId>({0, 1}));
}

void test_x_gadget() {
    TEST_BEGIN("planarize X gadget");
    Planarization p = planarize(x_gadget());
    CHECK_EQ(p.map.num_vertices(), 5);
    CHECK_EQ(p.map.num_edges_alive(), 8);
    auto f = p.map.faces();
    // Euler oracle: F = E - V + 2 = 8 - 5 + 2
    CHECK_EQ(f.cycle.size(), 5u);
    CHECK_EQ(p.map.degree(p.dummy_of_pair[0]), 4);
}

void test_roundtrip() {
    TEST_BEGIN("extract_embedding reproduces the edge set");
    for (OnePlanarEmbedding emb : {plane_k4(), k5_one_crossing(), x_gadget()}) {
        Planarization p = planarize(emb);
        OnePlanarEmbedding back = extract_embedding(p);
        auto key = [](const Graph& g) {
            std::multiset<std::pair<int, int>> s;
            for (const Edge& e : g.edges()) s.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
            return s;
        };
        CHECK(key(emb.graph) == key(back.graph));
        CHECK_EQ(back.crossings.size(), emb.crossings.size());
        // re-planarize: same face count
        Planarization p2 = planarize(back);
        CHECK_EQ(p2.map.faces().cycle.size(), p.map.faces().cycle.size());
    }
}

void test_validation_errors() {
    TEST_BEGIN("validation violations");
    OnePlanarEmbedding emb = x_gadget();
    emb.crossings = {{4, 5}, {4, 0}};  // edge 4 listed twice, and 4 meets 0
    ValidationReport r = validate_embedding(emb);
    CHECK(!r.ok);
    bool twice = false, adjacent = false;
    for (const auto& v : r.violations) {
        if (v.find("crossed twice") != std::string::npos) twice = true;
        if (v.find("adjacent edges cross") != std::string::npos) adjacent = true;
    }
    CHECK(twice);
    CHECK(adjacent);

    // non-interleaving "crossing": diagonals replaced by two sides
    OnePlanarEmbedding bad = x_gadget();
    bad.crossings = {{0, 2}};
    ValidationReport r2 = validate_embedding(bad);
    CHECK(!r2.ok);

    ValidationReport good = validate_embedding(k5_one_crossing());
    CHECK(good.ok);
}

void test_outer_face_choice() {
    TEST_BEGIN("outer face designation");
    OnePlanarEmbedding emb = plane_k4();
    emb.outer_dart = 2 * 0;  // dart of (0,1) at 0; its left face is the outer
    Planarization p = planarize(emb);
    auto f = p.map.faces(p.outer_dart);
    CHECK(f.outer >= 0);
    // default pick: the longest boundary
    OnePlanarEmbedding emb2 = plane_k4();
    Planarization p2 = planarize(emb2);
    CHECK(p2.outer_dart >= 0);
}

}  // namespace

int main() {
    test_plane_k4();
    test_k5();
    test_x_gadget();
    test_roundtrip();
    test_validation_errors();
    test_outer_face_choice();
    return testing::summary();
}
