#pragma once

#include <optional>
#include <string>

#include "ghyp/embedding.hpp"
#include "ghyp/graph.hpp"
#include "ghyp/multipoly.hpp"

namespace ghyp {

enum class VerdictKind { EmptyHypersurface, Irreducible, Reducible };

std::string to_string(VerdictKind kind);

struct ReducibleWitness {
    std::optional<int> separating_vertex;  // absent on the polynomial route
    EdgeSubset component_a = 0;
    EdgeSubset component_b = 0;
    SubsetPoly factor_a;
    SubsetPoly factor_b;
};

struct Verdict {
    VerdictKind kind = VerdictKind::EmptyHypersurface;
    std::optional<ReducibleWitness> witness;  // Reducible only
    std::string note;                         // EmptyHypersurface only
};

// Graph route: counts blocks containing a cycle. None: the polynomial is the
// constant 1 and the hypersurface is empty. One: irreducible. Two or more:
// reducible, witnessed by the lowest cut vertex that separates two cyclic
// blocks and the polynomial factors on the two sides.
Verdict classify_graph(const Multigraph& g);

// Polynomial route: requires a spanning-tree shape (all coefficients 1,
// homogeneous) and searches for a variable-disjoint factorization.
Verdict classify_poly(const SubsetPoly& p);

// A graph and its dual classify the same way, except for the degenerate case
// where one side's polynomial is constant; such pairs pass by convention.
bool duality_irreducibility_check(const RotationSystem& r);

}  // namespace ghyp
