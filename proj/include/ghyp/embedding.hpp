#pragma once

#include <vector>

#include "ghyp/graph.hpp"

namespace ghyp {

enum class EdgeEnd { Tail, Head };

struct HalfEdge {
    int edge_id;
    EdgeEnd end;
    friend bool operator==(const HalfEdge&, const HalfEdge&) = default;
};

// Combinatorial sphere embedding: a cyclic order of half-edges at each vertex.
// A non-loop edge contributes one half-edge at each endpoint; a loop
// contributes both of its half-edges at its vertex.
class RotationSystem {
  public:
    RotationSystem(Multigraph graph, std::vector<std::vector<HalfEdge>> rotation);

    const Multigraph& graph() const { return graph_; }
    const std::vector<std::vector<HalfEdge>>& rotation() const { return rotation_; }

  private:
    Multigraph graph_;
    std::vector<std::vector<HalfEdge>> rotation_;
};

struct FaceSet {
    // One cyclic walk per face, each starting at its smallest half-edge.
    std::vector<std::vector<HalfEdge>> walks;
};

// Face tracing: from a half-edge, jump to its twin, then take the successor in
// the rotation at that vertex. Fails unless Euler's formula v - n + f = 2 holds.
FaceSet faces(const RotationSystem& r);

// One dual vertex per face; each edge keeps its id and joins the faces on its
// two sides. The dual rotation at a face is the order of edge crossings along
// the face walk, which makes the construction an involution.
RotationSystem dual(const RotationSystem& r);

// Canonical plane rotations for the graph families.
RotationSystem family_rotation(FamilyKind kind, int n);
RotationSystem wheel_rotation(int k);

}  // namespace ghyp
