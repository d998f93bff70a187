#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "ghyp/errors.hpp"

namespace ghyp {

// Edges carry ids 1..n; the id doubles as the polynomial variable index.
struct Edge {
    int id;
    int tail;
    int head;

    bool is_loop() const { return tail == head; }
    int other(int v) const { return v == tail ? head : tail; }
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Edge subset as a bitmask: bit (id-1) is set iff edge `id` is in the subset.
using EdgeSubset = std::uint64_t;

constexpr EdgeSubset edge_bit(int id) { return EdgeSubset{1} << (id - 1); }

constexpr EdgeSubset all_edges_mask(int n) {
    return n == 64 ? ~EdgeSubset{0} : (EdgeSubset{1} << n) - 1;
}

inline int subset_size(EdgeSubset s) { return std::popcount(s); }

// Labeled multigraph; loops and parallel edges are allowed.
class Multigraph {
  public:
    Multigraph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int id) const { return edges_[static_cast<size_t>(id) - 1]; }

    friend bool operator==(const Multigraph&, const Multigraph&) = default;

  private:
    int vertex_count_;
    std::vector<Edge> edges_;  // sorted by id; ids are exactly 1..n
};

struct BlockDecomposition {
    std::vector<EdgeSubset> blocks;  // partition of the edge set, ascending masks
    std::vector<int> cut_vertices;   // ascending; vertices shared by two or more blocks
};

enum class FamilyKind { Star, Flower, Polygon, Banana };

FamilyKind parse_family(const std::string& name);
std::string family_name(FamilyKind kind);

bool is_connected(const Multigraph& g);

// All spanning trees as edge subsets, ascending by bitmask.
std::vector<EdgeSubset> spanning_trees(const Multigraph& g);

// Spanning trees of the subgraph spanned by the edges in `sub` (its vertices are
// the touched endpoints), returned as masks in the full edge-id space. An empty
// subset yields the single empty tree.
std::vector<EdgeSubset> spanning_trees_of_subset(const Multigraph& g, EdgeSubset sub);

// Matrix-tree count: determinant of a Laplacian minor, evaluated exactly.
// Independent of the subset enumeration above.
std::int64_t spanning_tree_count(const Multigraph& g);

BlockDecomposition blocks(const Multigraph& g);

// A block contains a cycle iff it is a loop or has at least two edges.
bool is_cyclic_block(EdgeSubset block, const Multigraph& g);

Multigraph family(FamilyKind kind, int n);

// Hub plus a k-cycle; spokes get ids 1..k, rim edges k+1..2k.
Multigraph wheel(int k);

}  // namespace ghyp
