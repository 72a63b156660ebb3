#include "onevis/embedding.hpp"

#include <algorithm>
#include <cassert>

namespace onevis {

Dart Planarization::map_dart(Dart graph_dart) const {
    EdgeId e = dart_edge(graph_dart);
    const EdgeImage& im = image[e];
    if (!im.split) return 2 * im.first + (graph_dart & 1);
    // tail side of the original dart: dart 2e sits at the u..x half,
    // dart 2e+1 at the x..v half (both at the original endpoint's tail).
    return (graph_dart & 1) == 0 ? 2 * im.first : 2 * im.second + 1;
}

namespace {

struct Builder {
    const OnePlanarEmbedding& emb;
    PlanarMap map;
    std::vector<Planarization::EdgeImage> image;
    // position of each graph dart inside its vertex's rotation list
    std::vector<int> pos_in_rotation;
    std::vector<char> is_crossing_edge;

    explicit Builder(const OnePlanarEmbedding& e)
        : emb(e), map(e.graph.num_vertices()), image(e.graph.num_edges()) {}

    /// First graph dart at or after position p (cyclically) in v's rotation
    /// whose map edge is already present; -1 when none is.
    Dart present_anchor(VertexId v, int p) const {
        const auto& rot = emb.rotation[v];
        if (rot.empty()) return -1;
        for (size_t k = 0; k < rot.size(); ++k) {
            Dart g = rot[(p + k) % rot.size()];
            EdgeId e = dart_edge(g);
            if (image[e].first >= 0 && !image[e].split && map.edge(image[e].first).alive)
                return 2 * image[e].first + (g & 1);
            if (image[e].split) {
                // a crossing edge already inserted: its half at this tail
                int half = (g & 1) == 0 ? image[e].first : image[e].second;
                return 2 * half + ((g & 1) == 0 ? 0 : 1);
            }
        }
        return -1;
    }

    Dart anchor_after(Dart graph_dart) const {
        VertexId v = (graph_dart & 1) == 0 ? emb.graph.edge(dart_edge(graph_dart)).u
                                           : emb.graph.edge(dart_edge(graph_dart)).v;
        int p = pos_in_rotation[graph_dart];
        const auto& rot = emb.rotation[v];
        return present_anchor(v, (p + 1) % static_cast<int>(rot.size()));
    }
};

}  // namespace

Planarization planarize(const OnePlanarEmbedding& emb) {
    const Graph& g = emb.graph;
    const int n = g.num_vertices();
    if (static_cast<int>(emb.rotation.size()) != n)
        throw EmbeddingError("rotation list size does not match vertex count");

    Builder b(emb);
    b.is_crossing_edge.assign(g.num_edges(), 0);
    for (auto [e1, e2] : emb.crossings) {
        if (e1 < 0 || e2 < 0 || e1 >= g.num_edges() || e2 >= g.num_edges() || e1 == e2)
            throw EmbeddingError("bad crossing pair");
        if (b.is_crossing_edge[e1] || b.is_crossing_edge[e2])
            throw EmbeddingError("edge listed in two crossing pairs");
        b.is_crossing_edge[e1] = b.is_crossing_edge[e2] = 1;
    }

    // dart -> index inside its vertex rotation; also completeness check
    b.pos_in_rotation.assign(2 * g.num_edges(), -1);
    for (VertexId v = 0; v < n; ++v) {
        for (size_t i = 0; i < emb.rotation[v].size(); ++i) {
            Dart d = emb.rotation[v][i];
            if (d < 0 || d >= 2 * g.num_edges())
                throw EmbeddingError("rotation lists unknown dart " + std::to_string(d));
            VertexId tail = (d & 1) == 0 ? g.edge(dart_edge(d)).u : g.edge(dart_edge(d)).v;
            if (tail != v)
                throw EmbeddingError("dart " + std::to_string(d) + " listed at wrong vertex");
            if (b.pos_in_rotation[d] != -1)
                throw EmbeddingError("dart " + std::to_string(d) + " listed twice");
            b.pos_in_rotation[d] = static_cast<int>(i);
        }
    }
    for (Dart d = 0; d < 2 * g.num_edges(); ++d)
        if (b.pos_in_rotation[d] == -1)
            throw EmbeddingError("dart " + std::to_string(d) + " missing from rotation");

    // 1. plane skeleton: all non-crossing edges, rotations from the input
    //    restricted to present darts. Insert edges in id order appending,
    //    then rewire the cyclic lists directly.
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        if (b.is_crossing_edge[e]) continue;
        b.image[e].first = b.map.insert_edge(g.edge(e).u, g.edge(e).v, -1, -1, g.edge(e).kind, e);
    }
    // rewiring pass: for each vertex, relink present darts in input order
    for (VertexId v = 0; v < n; ++v) {
        std::vector<Dart> present;
        for (Dart gd : emb.rotation[v]) {
            EdgeId e = dart_edge(gd);
            if (!b.is_crossing_edge[e]) present.push_back(2 * b.image[e].first + (gd & 1));
        }
        if (present.empty()) continue;
        // use insert order invariant: rebuild by deleting is overkill; the
        // map exposes no relink, so emulate via a fresh map? Instead we rely
        // on rot surgery below.
        b.map.relink_rotation(v, present);
    }

    // 2. crossing pairs one at a time
    Planarization out;
    out.n_original = n;
    for (auto [e1, e2] : emb.crossings) {
        VertexId a = g.edge(e1).u, c = g.edge(e1).v;
        VertexId p2u = g.edge(e2).u, p2v = g.edge(e2).v;
        if (a == p2u || a == p2v || c == p2u || c == p2v)
            throw EmbeddingError("crossing edges share an endpoint");

        Dart anch_a = b.anchor_after(2 * e1);
        Dart anch_c = b.anchor_after(2 * e1 + 1);
        Dart anch_u = b.anchor_after(2 * e2);
        Dart anch_v = b.anchor_after(2 * e2 + 1);

        // discover corner order along the face of corner a
        VertexId inner_first = p2u;  // default when geometry is under-determined
        Dart anch_inner = anch_u, anch_outer = anch_v;
        VertexId outer_second = p2v;
        if (anch_a >= 0) {
            auto walk = b.map.face_walk(anch_a);
            int ia = 0, ic = -1, iu = -1, iv = -1;
            for (size_t i = 0; i < walk.size(); ++i) {
                if (walk[i] == anch_c && b.map.tail(anch_c) == c) ic = static_cast<int>(i);
                if (walk[i] == anch_u && b.map.tail(anch_u) == p2u) iu = static_cast<int>(i);
                if (walk[i] == anch_v && b.map.tail(anch_v) == p2v) iv = static_cast<int>(i);
            }
            if (ic >= 0 && iu >= 0 && iv >= 0) {
                // corners share one face: require interleaving a,?,c,?
                bool u_inside = iu < ic, v_inside = iv < ic;
                if (u_inside == v_inside)
                    throw EmbeddingError("crossing edges " + std::to_string(e1) + "," +
                                         std::to_string(e2) + " do not interleave in their face");
                if (u_inside) {
                    inner_first = p2u;
                    anch_inner = anch_u;
                    outer_second = p2v;
                    anch_outer = anch_v;
                } else {
                    inner_first = p2v;
                    anch_inner = anch_v;
                    outer_second = p2u;
                    anch_outer = anch_u;
                }
            }
        }

        // chord (a,c), subdivide at the dummy, then the two spokes
        int me1 = b.map.insert_edge(a, c, anch_a, anch_c, g.edge(e1).kind, e1);
        auto sub = b.map.subdivide_edge(me1);
        Planarization::EdgeImage im1;
        im1.first = sub.edge_ux;
        im1.second = sub.edge_xv;
        im1.split = true;
        b.image[e1] = im1;
        // spokes: inner_first inserts before (x->a), the other before (x->c)
        Dart x_to_a = 2 * sub.edge_ux + 1;  // tail x on the (a,x) half
        Dart x_to_c = 2 * sub.edge_xv;      // tail x on the (x,c) half
        // the inner spoke's dart at x goes before (x->a), the outer one
        // before (x->c); the stored image keeps .first on e2's u side
        if (inner_first == p2u) {
            int hu = b.map.insert_edge(p2u, sub.x, anch_inner, x_to_a, g.edge(e2).kind, e2, 0);
            int hv = b.map.insert_edge(sub.x, p2v, x_to_c, anch_outer, g.edge(e2).kind, e2, 1);
            b.image[e2] = {hu, hv, true};
        } else {
            int hv = b.map.insert_edge(sub.x, p2v, x_to_a, anch_inner, g.edge(e2).kind, e2, 1);
            int hu = b.map.insert_edge(p2u, sub.x, anch_outer, x_to_c, g.edge(e2).kind, e2, 0);
            b.image[e2] = {hu, hv, true};
        }
        out.dummy_of_pair.push_back(sub.x);
        out.pair_edges.push_back({e1, e2});
        out.pair_of_dummy.push_back(static_cast<int>(out.dummy_of_pair.size()) - 1);
    }

    out.map = std::move(b.map);
    out.image = std::move(b.image);

    if (!out.map.euler_ok())
        throw EmbeddingError("rotation system and crossings do not describe a sphere map");
    for (VertexId x : out.dummy_of_pair)
        if (out.map.degree(x) != 4) throw EmbeddingError("crossing dummy without degree 4");

    // outer face designation
    if (emb.outer_dart >= 0) {
        out.outer_dart = out.map_dart(emb.outer_dart);
    } else if (out.map.num_edges_alive() > 0) {
        auto f = out.map.faces();
        size_t best = 0;
        Dart best_dart = -1;
        for (const auto& cyc : f.cycle) {
            Dart lead = *std::min_element(cyc.begin(), cyc.end());
            if (cyc.size() > best || (cyc.size() == best && (best_dart < 0 || lead < best_dart))) {
                best = cyc.size();
                best_dart = lead;
            }
        }
        out.outer_dart = best_dart;
    }
    return out;
}

ValidationReport validate_embedding(const OnePlanarEmbedding& emb) {
    ValidationReport r;
    const Graph& g = emb.graph;

    std::vector<int> cross_count(g.num_edges(), 0);
    for (auto [e1, e2] : emb.crossings) {
        if (e1 < 0 || e2 < 0 || e1 >= g.num_edges() || e2 >= g.num_edges()) {
            r.fail("crossing pair references unknown edge");
            continue;
        }
        ++cross_count[e1];
        ++cross_count[e2];
        VertexId a = g.edge(e1).u, c = g.edge(e1).v;
        VertexId u = g.edge(e2).u, v = g.edge(e2).v;
        if (a == u || a == v || c == u || c == v)
            r.fail("adjacent edges cross: edges " + std::to_string(e1) + "," + std::to_string(e2));
    }
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (cross_count[e] > 1) r.fail("edge " + std::to_string(e) + " crossed twice");

    // rotation completeness
    std::vector<int> seen(2 * g.num_edges(), 0);
    bool rot_ok = static_cast<int>(emb.rotation.size()) == g.num_vertices();
    if (!rot_ok) r.fail("rotation list size mismatch");
    for (VertexId v = 0; rot_ok && v < g.num_vertices(); ++v) {
        for (Dart d : emb.rotation[v]) {
            if (d < 0 || d >= 2 * g.num_edges()) {
                r.fail("rotation lists unknown dart");
                rot_ok = false;
                break;
            }
            ++seen[d];
        }
    }
    if (rot_ok)
        for (Dart d = 0; d < 2 * g.num_edges(); ++d)
            if (seen[d] != 1) {
                r.fail("dart multiplicity wrong in rotation");
                break;
            }

    if (r.ok) {
        try {
            Planarization p = planarize(emb);
            (void)p;
        } catch (const EmbeddingError& e) {
            r.fail(e.what());
        } catch (const GraphError& e) {
            r.fail(e.what());
        }
    }

    if (!is_biconnected(g)) r.fail("graph is not 2-connected (blocks are laid out side by side)");
    return r;
}

}  // namespace onevis
