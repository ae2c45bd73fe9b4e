#pragma once

// Minimum exact face cover through maximum matching on the face-adjacency
// graph.
//
// Every face carries an implicit weight-0 loop (a Square gadget) and every
// pair of grid-adjacent faces a weight-1 edge (a two-face gadget). A perfect
// matching with loops is therefore a maximum-cardinality matching on the pair
// edges with the unmatched faces taking their loop, and the resulting cover
// has |faces| - |pairs| gadgets.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "kp/gadgets.hpp"
#include "kp/grid.hpp"

namespace kp {

struct FaceGraph {
    std::vector<Face> faces;  // sorted
    /// Index pairs (a < b) into faces, sorted; each joins faces whose anchors
    /// differ by one unit in one coordinate.
    std::vector<std::pair<std::size_t, std::size_t>> pair_edges;
};

struct Matching {
    std::vector<std::pair<Face, Face>> pairs;
};

struct ExactCover {
    std::vector<Gadget> gadgets;

    std::size_t size() const { return gadgets.size(); }
};

FaceGraph build_face_graph(std::vector<Face> faces);

/// Maximum-cardinality matching on the pair edges.
Matching max_matching(const FaceGraph& fg);

/// Matched pairs become two-face gadgets, unmatched faces Squares.
/// Throws InvariantError if a pair is not grid-adjacent or a face repeats.
ExactCover matching_to_cover(const std::vector<Face>& faces, const Matching& m);

ExactCover optimal_cover(const BlockSet& cleaned);

/// The two-face gadget whose faces are exactly {a, b}, if a and b are adjacent.
std::optional<Gadget> gadget_for_pair(Face a, Face b);

/// True iff the gadgets' faces are pairwise disjoint and union to `faces`.
bool is_exact_cover(const std::vector<Face>& faces, const ExactCover& cover);

namespace blossom {

inline constexpr int kUnmatched = -1;

/// Edmonds' maximum-cardinality matching on a general graph with vertices
/// 0..n-1. Returns mate[v] or kUnmatched. Deterministic: vertices are rooted
/// in index order and neighbours scanned in edge-list order.
std::vector<int> maximum_matching(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace blossom

}  // namespace kp
