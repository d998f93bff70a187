#pragma once

#include "ghyp/embedding.hpp"
#include "ghyp/graph.hpp"
#include "ghyp/multipoly.hpp"

namespace ghyp {

// Sum over spanning trees of the monomial on the complement edge set.
// Homogeneous of degree n - v + 1 with all coefficients 1.
SubsetPoly psi(const Multigraph& g);

// Same sum restricted to the subgraph spanned by `sub`, in the full variable
// space; complements are taken inside `sub`. Used for blocks and separations.
SubsetPoly psi_of_subgraph(const Multigraph& g, EdgeSubset sub);

// Closed forms built directly, with no tree enumeration:
// star 1, flower t1*...*tn, polygon t1+...+tn, banana the elementary
// symmetric polynomial of degree n-1.
SubsetPoly psi_family(FamilyKind kind, int n);

// Exact identity between a graph polynomial and the reciprocal transform of
// its dual's polynomial. Holds for every valid sphere embedding.
bool cremona_identity_check(const RotationSystem& r);

// The graph polynomial equals the variable-disjoint product of its blocks'
// polynomials.
bool psi_block_product_check(const Multigraph& g);

}  // namespace ghyp
