#include "ghyp/irred.hpp"

#include <numeric>
#include <stdexcept>

#include "ghyp/kirchhoff.hpp"

namespace ghyp {

std::string to_string(VerdictKind kind) {
    switch (kind) {
        case VerdictKind::EmptyHypersurface: return "EmptyHypersurface";
        case VerdictKind::Irreducible: return "Irreducible";
        case VerdictKind::Reducible: return "Reducible";
    }
    throw invalid_input("unknown verdict kind");
}

namespace {

std::vector<int> block_vertices(const Multigraph& g, EdgeSubset b) {
    std::vector<char> touched(static_cast<size_t>(g.vertex_count()), 0);
    EdgeSubset rest = b;
    while (rest) {
        int id = std::countr_zero(rest) + 1;
        rest &= rest - 1;
        touched[static_cast<size_t>(g.edge(id).tail)] = 1;
        touched[static_cast<size_t>(g.edge(id).head)] = 1;
    }
    std::vector<int> out;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (touched[static_cast<size_t>(u)]) out.push_back(u);
    return out;
}

struct BlockDsu {
    std::vector<int> parent;
    explicit BlockDsu(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x)
            x = parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

Verdict classify_graph(const Multigraph& g) {
    BlockDecomposition bd = blocks(g);
    const int nb = static_cast<int>(bd.blocks.size());
    std::vector<char> cyclic(static_cast<size_t>(nb), 0);
    int cyclic_count = 0;
    for (int i = 0; i < nb; ++i)
        if (is_cyclic_block(bd.blocks[static_cast<size_t>(i)], g)) {
            cyclic[static_cast<size_t>(i)] = 1;
            ++cyclic_count;
        }

    if (cyclic_count == 0)
        return Verdict{VerdictKind::EmptyHypersurface, std::nullopt,
                       "every block is a bridge; the graph polynomial is the constant 1"};
    if (cyclic_count == 1) return Verdict{VerdictKind::Irreducible, std::nullopt, ""};

    std::vector<std::vector<int>> bverts(static_cast<size_t>(nb));
    for (int i = 0; i < nb; ++i)
        bverts[static_cast<size_t>(i)] = block_vertices(g, bd.blocks[static_cast<size_t>(i)]);

    for (int a : bd.cut_vertices) {
        // sides at a: blocks glued through any shared vertex other than a
        BlockDsu dsu(nb);
        for (int c : bd.cut_vertices) {
            if (c == a) continue;
            int first = -1;
            for (int i = 0; i < nb; ++i) {
                const auto& vs = bverts[static_cast<size_t>(i)];
                if (!std::binary_search(vs.begin(), vs.end(), c)) continue;
                if (first < 0)
                    first = i;
                else
                    dsu.unite(first, i);
            }
        }
        std::vector<int> side_of(static_cast<size_t>(nb));
        for (int i = 0; i < nb; ++i) side_of[static_cast<size_t>(i)] = dsu.find(i);

        // does some side with a cycle leave another cyclic side behind?
        int chosen = -1;
        int cyclic_sides = 0;
        std::vector<char> seen_side(static_cast<size_t>(nb), 0);
        for (int i = 0; i < nb; ++i) {
            if (!cyclic[static_cast<size_t>(i)]) continue;
            int s = side_of[static_cast<size_t>(i)];
            if (seen_side[static_cast<size_t>(s)]) continue;
            seen_side[static_cast<size_t>(s)] = 1;
            ++cyclic_sides;
            if (chosen < 0) chosen = s;  // blocks are mask-ascending, so this is deterministic
        }
        if (cyclic_sides < 2) continue;

        EdgeSubset comp_a = 0;
        for (int i = 0; i < nb; ++i)
            if (side_of[static_cast<size_t>(i)] == chosen) comp_a |= bd.blocks[static_cast<size_t>(i)];
        EdgeSubset comp_b = all_edges_mask(g.edge_count()) & ~comp_a;

        ReducibleWitness w;
        w.separating_vertex = a;
        w.component_a = comp_a;
        w.component_b = comp_b;
        w.factor_a = psi_of_subgraph(g, comp_a);
        w.factor_b = psi_of_subgraph(g, comp_b);
        return Verdict{VerdictKind::Reducible, std::move(w), ""};
    }
    throw std::logic_error("cyclic blocks exist but no cut vertex separates them");
}

Verdict classify_poly(const SubsetPoly& p) {
    if (p.is_zero()) throw invalid_input("not a spanning-tree polynomial: zero");
    for (const auto& [vars, c] : p.terms())
        if (c != 1) throw invalid_input("not a spanning-tree polynomial: coefficients must be 1");
    if (!is_homogeneous(p)) throw invalid_input("not a spanning-tree polynomial: not homogeneous");

    if (p.is_constant())
        return Verdict{VerdictKind::EmptyHypersurface, std::nullopt,
                       "the polynomial is the constant 1"};
    if (auto split = find_disjoint_factorization(p)) {
        ReducibleWitness w;
        w.component_a = split->first.support_vars();
        w.component_b = split->second.support_vars();
        w.factor_a = std::move(split->first);
        w.factor_b = std::move(split->second);
        return Verdict{VerdictKind::Reducible, std::move(w), ""};
    }
    return Verdict{VerdictKind::Irreducible, std::nullopt, ""};
}

bool duality_irreducibility_check(const RotationSystem& r) {
    Verdict primal = classify_poly(psi(r.graph()));
    Verdict dual_v = classify_poly(psi(dual(r).graph()));
    if (primal.kind == VerdictKind::EmptyHypersurface ||
        dual_v.kind == VerdictKind::EmptyHypersurface)
        return true;  // degenerate pair: one side is constant
    return primal.kind == dual_v.kind;
}

}  // namespace ghyp
