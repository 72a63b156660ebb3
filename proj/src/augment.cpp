#include "onevis/augment.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>

namespace onevis {

const char* to_string(ConfigKind k) {
    switch (k) {
        case ConfigKind::B: return "B";
        case ConfigKind::W: return "W";
        case ConfigKind::X: return "X";
    }
    return "?";
}

namespace {

using VPair = std::pair<VertexId, VertexId>;

VPair norm_pair(VertexId a, VertexId b) { return {std::min(a, b), std::max(a, b)}; }

/// Endpoints of a crossing pair: {a,c} of the first edge, {b,d} of the second.
std::array<VertexId, 4> pair_endpoints(const Planarization& p, int pair) {
    auto [e1, e2] = std::pair{p.pair_edges[pair][0], p.pair_edges[pair][1]};
    const auto& i1 = p.image[e1];
    const auto& i2 = p.image[e2];
    return {p.map.edge(i1.first).u, p.map.edge(i1.second).v, p.map.edge(i2.first).u,
            p.map.edge(i2.second).v};
}

struct Gap {
    VertexId dummy;
    Dart d1, d2;  // d2 == rot_next(d1), both with tail dummy
    VertexId w1, w2;
};

std::vector<Gap> gaps_of_dummy(const PlanarMap& m, VertexId x) {
    std::vector<Gap> out;
    auto rot = m.rotation(x);
    for (size_t i = 0; i < rot.size(); ++i) {
        Dart d1 = rot[i], d2 = rot[(i + 1) % rot.size()];
        out.push_back({x, d1, d2, m.head(d1), m.head(d2)});
    }
    return out;
}

/// The gap face walk starts at twin(d1) = (w1 -> dummy). The gap is closed
/// when that face is the triangle (w1, dummy, w2) finished by an edge
/// between w2 and w1.
bool gap_closed(const PlanarMap& m, const Gap& g) {
    Dart t = twin(g.d1);
    Dart s = m.next_in_face(t);
    if (s != g.d2) return false;  // cannot happen in a consistent map
    Dart third = m.next_in_face(g.d2);
    return m.head(third) == g.w1 && m.next_in_face(third) == t;
}

/// Tracks the abstract simple-pair multiset of the evolving graph: whole map
/// edges plus the crossing edges (whose halves meet at dummies).
struct Augmenter {
    Planarization& p;
    PlanarMap& m;
    std::map<VPair, int> abstract_count;
    AugmentStats stats;
    std::vector<int> force_closed;  // map edges added by forced closure

    explicit Augmenter(Planarization& pl) : p(pl), m(pl.map) {
        for (int e = 0; e < m.num_edge_slots(); ++e) {
            if (!m.edge(e).alive) continue;
            const MapEdge& me = m.edge(e);
            if (me.part >= 0) continue;  // halves counted once via pair_edges
            ++abstract_count[norm_pair(me.u, me.v)];
        }
        for (size_t i = 0; i < p.pair_edges.size(); ++i) {
            auto ep = pair_endpoints(p, static_cast<int>(i));
            ++abstract_count[norm_pair(ep[0], ep[1])];
            ++abstract_count[norm_pair(ep[2], ep[3])];
        }
    }

    bool is_dummy(VertexId v) const { return p.is_dummy(v); }

    /// True when one of the edge's two faces is a closed crossing quadrant.
    bool load_bearing(int e) const {
        for (Dart d : {2 * e, 2 * e + 1}) {
            auto w = m.face_walk(d, 4);
            if (w.size() != 3) continue;
            for (Dart wd : w)
                if (is_dummy(m.tail(wd))) return true;
        }
        return false;
    }

    void move_outer_off_edge(int e) {
        if (p.outer_dart < 0 || dart_edge(p.outer_dart) != e) return;
        Dart d = p.outer_dart;
        for (int guard = 0; guard < m.total_darts_alive() + 2; ++guard) {
            d = m.next_in_face(d);
            if (dart_edge(d) != e) {
                p.outer_dart = d;
                return;
            }
        }
        throw EmbeddingError("cannot move outer face designation off a deleted edge");
    }

    int close_gap(const Gap& g, EdgeKind kind, EdgeId orig) {
        int ce = m.insert_edge(g.w2, g.w1, m.rot_next(twin(g.d2)), twin(g.d1), kind, orig);
        ++abstract_count[norm_pair(g.w1, g.w2)];
        return ce;
    }

    /// One pass over every crossing quadrant: close with the kite edge routed
    /// along the halves, rerouting an unneeded older duplicate when present.
    bool close_quadrants() {
        bool changed = false;
        for (size_t i = 0; i < p.dummy_of_pair.size(); ++i) {
            for (const Gap& g : gaps_of_dummy(m, p.dummy_of_pair[i])) {
                if (gap_closed(m, g)) continue;
                VPair key = norm_pair(g.w1, g.w2);
                auto it = abstract_count.find(key);
                if (it == abstract_count.end() || it->second == 0) {
                    close_gap(g, EdgeKind::augmented, -1);
                    ++stats.kite_added;
                    changed = true;
                    continue;
                }
                // duplicate exists; reroute the oldest whole copy if that
                // does not tear another quadrant open
                int victim = -1;
                for (Dart d : m.rotation(g.w1)) {
                    int e = dart_edge(d);
                    if (m.edge(e).part >= 0) continue;  // crossing halves stay put
                    if (m.edge(e).kind == EdgeKind::separation) continue;
                    if (m.head(d) != g.w2) continue;
                    if (load_bearing(e)) continue;
                    if (victim < 0 || e < victim) victim = e;
                }
                if (victim >= 0) {
                    MapEdge old = m.edge(victim);
                    move_outer_off_edge(victim);
                    m.delete_edge(victim);
                    --abstract_count[key];
                    int ce = close_gap(g, old.kind, old.orig);
                    if (old.orig >= 0 && !p.image[old.orig].split) p.image[old.orig].first = ce;
                    ++stats.rerouted;
                    changed = true;
                }
                // else: parallel copy territory; separation stage handles it
            }
        }
        return changed;
    }

    /// Force-close every still-open quadrant with a separation copy. Used
    /// after separation edges so extraction always finds its quadrangles.
    int force_close_quadrants() {
        int added = 0;
        for (size_t i = 0; i < p.dummy_of_pair.size(); ++i) {
            for (const Gap& g : gaps_of_dummy(m, p.dummy_of_pair[i])) {
                if (gap_closed(m, g)) continue;
                force_closed.push_back(close_gap(g, EdgeKind::separation, -1));
                ++stats.separation_copies;
                ++added;
            }
        }
        return added;
    }

    /// Ear-cuts a face walk until it is a triangle or no chord is legal.
    /// Chord endpoints must be original vertices and must not duplicate an
    /// existing abstract edge.
    void triangulate_walk(std::vector<Dart> walk) {
        bool progress = true;
        while (walk.size() > 3 && progress) {
            progress = false;
            const size_t k = walk.size();
            for (size_t j = 0; j < k; ++j) {
                Dart dA = walk[j], dB = walk[(j + 1) % k];
                VertexId x = m.tail(dA), y = m.head(dB);
                if (is_dummy(x) || is_dummy(y) || x == y) continue;
                VPair key = norm_pair(x, y);
                auto it = abstract_count.find(key);
                if (it != abstract_count.end() && it->second > 0) continue;
                Dart after = walk[(j + 2) % k];
                bool outer_in_ear =
                    p.outer_dart >= 0 && (p.outer_dart == dA || p.outer_dart == dB);
                int ce = m.insert_edge(x, y, dA, after, EdgeKind::augmented);
                ++abstract_count[key];
                ++stats.triangulation;
                // remaining face: the chord's x-side dart, then the walk
                // minus the two ear darts (cyclic order preserved)
                std::vector<Dart> next;
                next.reserve(k - 1);
                next.push_back(2 * ce);
                for (size_t t = (j + 2) % k; t != j; t = (t + 1) % k) next.push_back(walk[t]);
                if (outer_in_ear) p.outer_dart = 2 * ce;
                walk = std::move(next);
                progress = true;
                break;
            }
        }
    }

    void triangulate() {
        auto F = m.faces(p.outer_dart);
        for (const auto& cyc : F.cycle) triangulate_walk(cyc);
    }
};

}  // namespace

AugmentStats planar_maximal_augment(Planarization& p) {
    Augmenter a(p);
    a.close_quadrants();
    a.triangulate();
    return a.stats;
}

// ── configuration classification ───────────────────────────────────

namespace {

/// Partitions faces by the closed curve given as a set of map edges; returns
/// per-face region ids (0 = region of the outer face, 1 = the other side).
/// Returns false when the curve does not separate (not a simple closed curve).
bool curve_sides(const PlanarMap& m, const std::set<int>& curve_edges, Dart outer_dart,
                 std::vector<int>& side_of_face, PlanarMap::Faces& F) {
    F = m.faces(outer_dart);
    side_of_face.assign(F.cycle.size(), -1);
    std::vector<int> stack;
    int start = F.outer >= 0 ? F.outer : 0;
    side_of_face[start] = 0;
    stack.push_back(start);
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (Dart d : F.cycle[f]) {
            if (curve_edges.count(dart_edge(d))) continue;
            int g = F.face_of[twin(d)];
            if (side_of_face[g] == -1) {
                side_of_face[g] = side_of_face[f];
                stack.push_back(g);
            }
        }
    }
    bool any_unreached = false;
    for (size_t f = 0; f < F.cycle.size(); ++f)
        if (side_of_face[f] == -1) {
            side_of_face[f] = 1;
            any_unreached = true;
        }
    return any_unreached;
}

/// True when every face incident to v lies strictly on side 1.
bool vertex_inside(const PlanarMap& m, const PlanarMap::Faces& F,
                   const std::vector<int>& side_of_face, VertexId v) {
    for (Dart d : m.rotation(v))
        if (side_of_face[F.face_of[d]] == 0) return false;
    return true;
}

/// Map edges of the two halves of crossing edge `ge` in pair `pair`.
std::array<int, 2> half_edges_of(const Planarization& p, EdgeId ge) {
    return {p.image[ge].first, p.image[ge].second};
}

}  // namespace

ConfigKind classify_configuration(const Planarization& p, int pair_index) {
    const PlanarMap& m = p.map;
    auto ep = pair_endpoints(p, pair_index);
    VertexId a = ep[0], c = ep[1], b = ep[2], d = ep[3];

    // W: a partner pair shares one endpoint of each edge with this one, the
    // shared pair is an edge, and all four far ends lie inside the closed
    // curve through both dummies.
    for (size_t j = 0; j < p.pair_edges.size(); ++j) {
        if (static_cast<int>(j) == pair_index) continue;
        auto eq = pair_endpoints(p, static_cast<int>(j));
        std::set<VertexId> mine{a, c, b, d}, theirs{eq.begin(), eq.end()};
        std::vector<VertexId> common;
        for (VertexId w : theirs)
            if (mine.count(w)) common.push_back(w);
        if (common.size() != 2) continue;
        VertexId u = common[0], v = common[1];
        bool mine_split = ((u == a || u == c) && (v == b || v == d)) ||
                          ((v == a || v == c) && (u == b || u == d));
        bool theirs_split = ((u == eq[0] || u == eq[1]) && (v == eq[2] || v == eq[3])) ||
                            ((v == eq[0] || v == eq[1]) && (u == eq[2] || u == eq[3]));
        if (!mine_split || !theirs_split) continue;
        // curve: the four halves ending at u and v through both dummies
        std::set<int> curve;
        for (int pi : {pair_index, static_cast<int>(j)}) {
            for (EdgeId ge : p.pair_edges[pi]) {
                for (int he : half_edges_of(p, ge)) {
                    const MapEdge& e = m.edge(he);
                    VertexId orig_end = p.is_dummy(e.u) ? e.v : e.u;
                    if (orig_end == u || orig_end == v) curve.insert(he);
                }
            }
        }
        if (curve.size() != 4) continue;
        std::vector<int> side;
        PlanarMap::Faces F;
        if (!curve_sides(m, curve, p.outer_dart, side, F)) continue;
        bool all_inside = true;
        for (VertexId w : {a, c, b, d})
            if (w != u && w != v && !vertex_inside(m, F, side, w)) all_inside = false;
        for (VertexId w : eq)
            if (w != u && w != v && !vertex_inside(m, F, side, w)) all_inside = false;
        if (all_inside) return ConfigKind::W;
    }

    // B: some quadrant gap (w1,w2) of the dummy is spanned by a real edge
    // whose triangle with the two halves hides the far ends from the outer
    // face.
    VertexId x = p.dummy_of_pair[pair_index];
    for (const Gap& g : gaps_of_dummy(m, x)) {
        int base = -1;
        for (Dart dd : m.rotation(g.w1)) {
            int e = dart_edge(dd);
            if (m.edge(e).part >= 0) continue;
            if (m.head(dd) == g.w2) {
                base = e;
                break;
            }
        }
        if (base < 0) continue;
        std::set<int> curve{base, dart_edge(g.d1), dart_edge(g.d2)};
        std::vector<int> side;
        PlanarMap::Faces F;
        if (!curve_sides(m, curve, p.outer_dart, side, F)) continue;
        std::vector<VertexId> far;
        for (VertexId w : {a, c, b, d})
            if (w != g.w1 && w != g.w2) far.push_back(w);
        bool inside = far.size() == 2 && vertex_inside(m, F, side, far[0]) &&
                      vertex_inside(m, F, side, far[1]);
        if (inside) return ConfigKind::B;
    }
    return ConfigKind::X;
}

// ── triconnected decomposition ──────────────────────────────────────

namespace {

PlanarMap skeleton_map(const Planarization& p) {
    PlanarMap s = p.map;
    for (size_t i = 0; i < p.pair_edges.size(); ++i) {
        for (EdgeId ge : p.pair_edges[i])
            for (int he : half_edges_of(p, ge))
                if (s.edge(he).alive) s.delete_edge(he);
    }
    return s;
}

Dart planar_outer_dart(const Planarization& p) {
    if (p.outer_dart < 0) return -1;
    Dart d = p.outer_dart;
    for (int guard = 0; guard <= p.map.total_darts_alive(); ++guard) {
        if (p.map.edge(dart_edge(d)).part < 0) return d;
        d = p.map.next_in_face(d);
    }
    throw EmbeddingError("outer face has no planar dart");
}

/// Components of the augmented abstract graph minus {u,v}: plane skeleton
/// components merged along crossing edges. Returns component id per vertex
/// (-1 for u, v and for dummies).
int abstract_components(const Planarization& p, const PlanarMap& s, VertexId u, VertexId v,
                        std::vector<int>& comp) {
    const int n = p.n_original;
    comp.assign(p.map.num_vertices(), -1);
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    std::function<int(int)> find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (int e = 0; e < s.num_edge_slots(); ++e) {
        if (!s.edge(e).alive) continue;
        VertexId a = s.edge(e).u, b = s.edge(e).v;
        if (a == u || a == v || b == u || b == v) continue;
        unite(a, b);
    }
    for (size_t i = 0; i < p.pair_edges.size(); ++i) {
        auto ep = pair_endpoints(p, static_cast<int>(i));
        for (int k : {0, 2}) {
            VertexId a = ep[k], b = ep[k + 1];
            if (a == u || a == v || b == u || b == v) continue;
            unite(a, b);
        }
    }
    std::map<int, int> root_id;
    for (VertexId w = 0; w < n; ++w) {
        if (w == u || w == v) continue;
        int r = find(w);
        comp[w] = root_id.try_emplace(r, static_cast<int>(root_id.size())).first->second;
    }
    return static_cast<int>(root_id.size());
}

}  // namespace

SeparationStructure triconnected_components(const Planarization& p) {
    SeparationStructure out;
    PlanarMap s = skeleton_map(p);
    auto F = s.faces();

    std::map<VPair, int> common_faces, plane_parallel;
    for (const auto& cyc : F.cycle) {
        std::set<VertexId> verts;
        for (Dart d : cyc)
            if (!p.is_dummy(s.tail(d))) verts.insert(s.tail(d));
        for (auto it = verts.begin(); it != verts.end(); ++it)
            for (auto jt = std::next(it); jt != verts.end(); ++jt)
                ++common_faces[{*it, *jt}];
    }
    for (int e = 0; e < s.num_edge_slots(); ++e)
        if (s.edge(e).alive) ++plane_parallel[norm_pair(s.edge(e).u, s.edge(e).v)];

    for (const auto& [pr, cnt] : common_faces) {
        auto pit = plane_parallel.find(pr);
        int par = pit == plane_parallel.end() ? 0 : pit->second;
        if (cnt - par < 2) continue;  // not even a separation pair of the skeleton
        std::vector<int> comp;
        int nc = abstract_components(p, s, pr.first, pr.second, comp);
        if (nc < 2) continue;

        SeparationStructure::SepPair sp;
        sp.u = pr.first;
        sp.v = pr.second;
        sp.parallel_edges = par;
        // list components in the clockwise order of their first dart at u
        std::vector<int> order;
        std::vector<char> seen(nc, 0);
        for (Dart d : p.map.rotation(sp.u)) {
            VertexId h = p.map.head(d);
            int cid = -1;
            if (p.is_dummy(h)) {
                auto ep = pair_endpoints(p, p.pair_index(h));
                for (VertexId w : ep)
                    if (w != sp.u && w != sp.v && comp[w] >= 0) {
                        cid = comp[w];
                        break;
                    }
            } else if (h != sp.v) {
                cid = comp[h];
            }
            if (cid >= 0 && !seen[cid]) {
                seen[cid] = 1;
                order.push_back(cid);
            }
        }
        for (int c = 0; c < nc; ++c)
            if (!seen[c]) order.push_back(c);  // components not touching u
        std::vector<std::vector<VertexId>> comps(nc);
        for (VertexId w = 0; w < p.n_original; ++w)
            if (comp[w] >= 0) comps[comp[w]].push_back(w);
        for (int cid : order) sp.components.push_back(std::move(comps[cid]));
        out.pairs.push_back(std::move(sp));
    }
    return out;
}

std::vector<int> insert_separation_edges(Planarization& p, const SeparationStructure& s) {
    std::vector<int> added;
    Augmenter a(p);
    for (const auto& sp : s.pairs) {
        // (a) wall quadrants: gaps whose two heads are exactly {u, v}
        for (size_t i = 0; i < p.dummy_of_pair.size(); ++i) {
            for (const Gap& g : gaps_of_dummy(p.map, p.dummy_of_pair[i])) {
                if (norm_pair(g.w1, g.w2) != norm_pair(sp.u, sp.v)) continue;
                if (gap_closed(p.map, g)) continue;
                added.push_back(a.close_gap(g, EdgeKind::separation, -1));
                ++a.stats.separation_copies;
            }
        }
        // (b) gaps between components not separated by any crossing: a
        // skeleton face with u and v on its boundary whose two boundary arcs
        // hold vertices of different components
        PlanarMap sk = skeleton_map(p);
        auto F = sk.faces();
        std::vector<int> comp;
        abstract_components(p, sk, sp.u, sp.v, comp);
        for (const auto& cyc : F.cycle) {
            Dart du = -1, dv = -1;
            for (Dart d : cyc) {
                if (sk.tail(d) == sp.u) du = d;
                if (sk.tail(d) == sp.v) dv = d;
            }
            if (du < 0 || dv < 0) continue;
            // walk from u's corner; the boundary splits into the u->v arc
            // and the v->u arc, each of which must sit in one component
            size_t start = std::find(cyc.begin(), cyc.end(), du) - cyc.begin();
            int arc_comp[2] = {-1, -1};
            int arc = 0;
            bool clean = true;
            for (size_t t = 0; t < cyc.size(); ++t) {
                VertexId w = sk.tail(cyc[(start + t) % cyc.size()]);
                if (w == sp.u) arc = 0;
                else if (w == sp.v) arc = 1;
                else if (!p.is_dummy(w) && comp[w] >= 0) {
                    if (arc_comp[arc] == -1) arc_comp[arc] = comp[w];
                    else if (arc_comp[arc] != comp[w]) clean = false;
                }
            }
            if (!clean || arc_comp[0] < 0 || arc_comp[1] < 0 || arc_comp[0] == arc_comp[1])
                continue;
            // the copy must not land inside a crossing quadrant of the full
            // map, so both corner faces there have to be dummy-free
            bool safe = true;
            for (Dart d : {du, dv}) {
                auto w = p.map.face_walk(d);
                for (Dart wd : w)
                    if (p.is_dummy(p.map.tail(wd))) safe = false;
            }
            if (!safe) continue;
            int ce = p.map.insert_edge(sp.u, sp.v, du, dv, EdgeKind::separation);
            ++a.abstract_count[norm_pair(sp.u, sp.v)];
            added.push_back(ce);
            ++a.stats.separation_copies;
        }
    }
    return added;
}

int cover_outer_crossings(Planarization& p) {
    if (p.outer_dart < 0) return 0;
    Augmenter a(p);
    int covered = 0;
    int guard = static_cast<int>(p.dummy_of_pair.size()) + 2;
    while (guard-- > 0) {
        auto walk = p.map.face_walk(p.outer_dart);
        Dart into = -1;
        for (Dart d : walk)
            if (p.is_dummy(p.map.head(d))) {
                into = d;
                break;
            }
        if (into < 0) return covered;
        Gap g;
        g.d1 = twin(into);
        g.d2 = p.map.rot_next(g.d1);
        g.dummy = p.map.tail(g.d1);
        g.w1 = p.map.head(g.d1);
        g.w2 = p.map.head(g.d2);
        int ce = a.close_gap(g, EdgeKind::separation, -1);
        p.outer_dart = 2 * ce + 1;  // the copy's far side is the new outer face
        ++covered;
    }
    throw EmbeddingError("outer face kept a crossing after covering pass");
}

NormalizeReport normalize(Planarization& p) {
    NormalizeReport r;
    Augmenter a(p);
    r.changed = a.close_quadrants();
    int forced = a.force_close_quadrants();
    if (forced > 0) {
        r.changed = true;
        r.violations.push_back(std::to_string(forced) +
                               " crossing quadrant(s) required a parallel separation copy");
    }
    return r;
}

// ── extraction ──────────────────────────────────────────────────────

Skeleton extract_crossings(const Planarization& p) {
    Skeleton out;
    Dart keep = planar_outer_dart(p);
    out.map = skeleton_map(p);
    out.outer_dart = keep;
    out.faces = out.map.faces(keep);
    out.outer_face = out.faces.outer;

    std::set<int> used;
    for (size_t i = 0; i < p.pair_edges.size(); ++i) {
        // witness: the closing edge of the first quadrant gap survives
        VertexId x = p.dummy_of_pair[i];
        auto gaps = gaps_of_dummy(p.map, x);
        if (gaps.size() != 4) throw EmbeddingError("crossing dummy lost degree 4");
        Dart witness = -1;
        for (const Gap& g : gaps) {
            Dart third = p.map.next_in_face(g.d2);
            if (p.map.head(third) == g.w1 && p.map.next_in_face(third) == twin(g.d1)) {
                witness = third;
                break;
            }
        }
        if (witness < 0)
            throw EmbeddingError("crossing pair " + std::to_string(i) +
                                 " has no closed quadrant; augmentation incomplete");
        int f = out.faces.face_of[witness];
        const auto& cyc = out.faces.cycle[f];
        if (cyc.size() != 4)
            throw EmbeddingError("crossing pair " + std::to_string(i) +
                                 " does not own a quadrangular face after extraction");
        auto ep = pair_endpoints(p, static_cast<int>(i));
        std::set<VertexId> expect{ep.begin(), ep.end()};
        std::array<VertexId, 4> corners{};
        std::set<VertexId> got;
        for (int k = 0; k < 4; ++k) {
            corners[k] = out.map.tail(cyc[k]);
            got.insert(corners[k]);
        }
        if (got != expect)
            throw EmbeddingError("freed face of pair " + std::to_string(i) +
                                 " is not bounded by its endpoints");
        if (!used.insert(f).second)
            throw EmbeddingError("two crossing pairs share one freed face");
        out.crossing_face_of_pair.push_back(f);
        out.quad_of_pair.push_back(corners);
    }
    return out;
}

OnePlanarEmbedding extract_embedding(const Planarization& p) {
    OnePlanarEmbedding out;
    const int n = p.n_original;
    std::vector<Edge> edges;
    std::vector<int> new_id(p.map.num_edge_slots(), -1);  // whole map edge -> new id
    for (int e = 0; e < p.map.num_edge_slots(); ++e) {
        if (!p.map.edge(e).alive || p.map.edge(e).part >= 0) continue;
        new_id[e] = static_cast<int>(edges.size());
        edges.push_back({p.map.edge(e).u, p.map.edge(e).v, p.map.edge(e).kind});
    }
    std::vector<int> cross_id(p.pair_edges.size() * 2, -1);
    for (size_t i = 0; i < p.pair_edges.size(); ++i) {
        auto ep = pair_endpoints(p, static_cast<int>(i));
        int id1 = static_cast<int>(edges.size());
        edges.push_back({ep[0], ep[1], p.map.edge(p.image[p.pair_edges[i][0]].first).kind});
        int id2 = static_cast<int>(edges.size());
        edges.push_back({ep[2], ep[3], p.map.edge(p.image[p.pair_edges[i][1]].first).kind});
        cross_id[2 * i] = id1;
        cross_id[2 * i + 1] = id2;
        out.crossings.push_back({id1, id2});
    }
    out.graph = Graph(n, edges);

    // half map edge -> new crossing edge id
    std::vector<int> half_owner(p.map.num_edge_slots(), -1);
    for (size_t i = 0; i < p.pair_edges.size(); ++i)
        for (int k = 0; k < 2; ++k)
            for (int he : half_edges_of(p, p.pair_edges[i][k]))
                half_owner[he] = cross_id[2 * i + k];

    out.rotation.assign(n, {});
    for (VertexId v = 0; v < n; ++v) {
        for (Dart d : p.map.rotation(v)) {
            int e = dart_edge(d);
            if (p.map.edge(e).part < 0) {
                int ne = new_id[e];
                out.rotation[v].push_back(2 * ne + (d & 1));
            } else {
                int ne = half_owner[e];
                VertexId nu = out.graph.edge(ne).u;
                out.rotation[v].push_back(2 * ne + (nu == v ? 0 : 1));
            }
        }
    }
    // outer dart: first planar dart on the outer face translates directly
    Dart keep = planar_outer_dart(p);
    out.outer_dart = 2 * new_id[dart_edge(keep)] + (keep & 1);
    return out;
}

}  // namespace onevis
