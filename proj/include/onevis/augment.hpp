#pragma once

#include <string>
#include <vector>

#include "onevis/embedding.hpp"

namespace onevis {

enum class ConfigKind { B, W, X };
const char* to_string(ConfigKind k);

struct AugmentStats {
    int kite_added = 0;       // new augmented edges closing crossing quadrants
    int rerouted = 0;         // pre-existing duplicates removed in favor of kite routing
    int triangulation = 0;    // chords added to planar faces
    int separation_copies = 0;  // parallel copies emitted where rerouting was unsafe
};

/// Planar-maximal augmentation on the planarization: first closes every
/// quadrant around every crossing dummy with the kite edge routed along the
/// crossing halves (removing an older duplicate routing when that is safe),
/// then ear-triangulates the remaining faces. Dummies keep degree 4.
AugmentStats planar_maximal_augment(Planarization& p);

/// Classifies a crossing pair relative to the current outer face. W when two
/// pairs share base endpoints and all four far ends lie inside the closed
/// curve through both dummies; B when both far ends of a single pair lie
/// inside the base/half-edge triangle; X otherwise.
ConfigKind classify_configuration(const Planarization& p, int pair_index);

struct SeparationStructure {
    struct SepPair {
        VertexId u = -1, v = -1;
        /// components of the augmented graph minus {u,v}, in the clockwise
        /// order their first dart appears around u
        std::vector<std::vector<VertexId>> components;
        int parallel_edges = 0;  // plane (u,v) edges at decomposition time
    };
    std::vector<SepPair> pairs;
};

/// Separation pairs of the augmented 1-planar graph. Candidates come from
/// the common-face count in the planar skeleton (#common faces minus plane
/// parallel edges >= 2), verified on the abstract graph where crossing
/// edges connect their endpoints directly.
SeparationStructure triconnected_components(const Planarization& p);

/// Inserts separation copies of (u,v): one closing every open wall quadrant
/// whose crossing separates components at the pair, and one mid-gap copy
/// for adjacent components not separated by any crossing. Returns the map
/// edge ids of the copies.
std::vector<int> insert_separation_edges(Planarization& p, const SeparationStructure& s);

/// Algorithm step: while a crossing point lies on the outer face, cover it
/// with a separation copy of the gap's base edge; the outer face becomes
/// the lens outside the copy. Returns the number of copies added.
int cover_outer_crossings(Planarization& p);

struct NormalizeReport {
    bool changed = false;
    std::vector<std::string> violations;  // open quadrants etc.
};

/// Re-runs the quadrant-closure engine and audits normal form: every
/// crossing quadrant closed by an edge between its two endpoints, no vertex
/// inside any crossing quadrangle. Idempotent on already-normal embeddings.
NormalizeReport normalize(Planarization& p);

/// Plane skeleton: the planarization with every crossing pair extracted.
/// Each pair leaves behind a dedicated quadrangular face.
struct Skeleton {
    PlanarMap map;  // pair halves deleted; dummies isolated
    PlanarMap::Faces faces;
    std::vector<int> crossing_face_of_pair;         // pair -> face id
    std::vector<std::array<VertexId, 4>> quad_of_pair;  // cw corners as met on the walk
    Dart outer_dart = -1;
    int outer_face = -1;
};

/// Extracts all crossing pairs. Throws EmbeddingError when some pair's freed
/// face is not the expected quadrangle (augmentation/separation incomplete).
Skeleton extract_crossings(const Planarization& p);

/// Contracts the planarization back to an embedding over a rebuilt graph
/// (augmentation edges included); useful for debug output.
OnePlanarEmbedding extract_embedding(const Planarization& p);

}  // namespace onevis
