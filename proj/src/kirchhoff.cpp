#include "ghyp/kirchhoff.hpp"

namespace ghyp {

SubsetPoly psi_of_subgraph(const Multigraph& g, EdgeSubset sub) {
    SubsetPoly p(g.edge_count());
    for (EdgeSubset tree : spanning_trees_of_subset(g, sub)) p.add_term(sub ^ tree, 1);
    return p;
}

SubsetPoly psi(const Multigraph& g) {
    if (!is_connected(g)) throw invalid_input("not connected");
    return psi_of_subgraph(g, all_edges_mask(g.edge_count()));
}

SubsetPoly psi_family(FamilyKind kind, int n) {
    if (n < 1) throw invalid_input("family size must be positive");
    if ((kind == FamilyKind::Polygon || kind == FamilyKind::Banana) && n < 2)
        throw invalid_input(family_name(kind) + " requires n >= 2");
    SubsetPoly p(n);
    const EdgeSubset full = all_edges_mask(n);
    switch (kind) {
        case FamilyKind::Star:
            p.add_term(0, 1);
            break;
        case FamilyKind::Flower:
            p.add_term(full, 1);
            break;
        case FamilyKind::Polygon:
            for (int i = 1; i <= n; ++i) p.add_term(edge_bit(i), 1);
            break;
        case FamilyKind::Banana:
            for (int i = 1; i <= n; ++i) p.add_term(full ^ edge_bit(i), 1);
            break;
    }
    return p;
}

bool cremona_identity_check(const RotationSystem& r) {
    RotationSystem dl = dual(r);
    return psi(r.graph()) == reciprocal_transform(psi(dl.graph()));
}

bool psi_block_product_check(const Multigraph& g) {
    BlockDecomposition bd = blocks(g);
    SubsetPoly product = SubsetPoly::constant(g.edge_count(), 1);
    for (EdgeSubset b : bd.blocks) product = mul_disjoint(product, psi_of_subgraph(g, b));
    return product == psi(g);
}

}  // namespace ghyp
