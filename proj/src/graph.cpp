#include "ghyp/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "ghyp/checked.hpp"

namespace ghyp {

Multigraph::Multigraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ <= 0) throw invalid_input("vertex_count must be positive");
    const int n = static_cast<int>(edges_.size());
    if (n > 64) throw invalid_input("at most 64 edges supported");
    std::sort(edges_.begin(), edges_.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    for (int i = 0; i < n; ++i) {
        const Edge& e = edges_[static_cast<size_t>(i)];
        if (e.id != i + 1) throw invalid_input("edge ids must be exactly 1..n");
        if (e.tail < 0 || e.tail >= vertex_count_ || e.head < 0 || e.head >= vertex_count_)
            throw invalid_input("edge endpoint out of range");
    }
}

FamilyKind parse_family(const std::string& name) {
    if (name == "star") return FamilyKind::Star;
    if (name == "flower") return FamilyKind::Flower;
    if (name == "polygon") return FamilyKind::Polygon;
    if (name == "banana") return FamilyKind::Banana;
    throw invalid_input("unknown family: " + name);
}

std::string family_name(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::Star: return "star";
        case FamilyKind::Flower: return "flower";
        case FamilyKind::Polygon: return "polygon";
        case FamilyKind::Banana: return "banana";
    }
    throw invalid_input("unknown family kind");
}

bool is_connected(const Multigraph& g) {
    const int v = g.vertex_count();
    std::vector<std::vector<int>> adj(static_cast<size_t>(v));
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        adj[static_cast<size_t>(e.tail)].push_back(e.head);
        adj[static_cast<size_t>(e.head)].push_back(e.tail);
    }
    std::vector<char> seen(static_cast<size_t>(v), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int w : adj[static_cast<size_t>(u)])
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == v;
}

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x)
            x = parent[static_cast<size_t>(x)] =
                parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[static_cast<size_t>(a)] = b;
        return true;
    }
};

}  // namespace

std::vector<EdgeSubset> spanning_trees_of_subset(const Multigraph& g, EdgeSubset sub) {
    std::vector<int> ids;
    for (int id = 1; id <= g.edge_count(); ++id)
        if (sub & edge_bit(id)) ids.push_back(id);
    if (ids.empty()) return {EdgeSubset{0}};

    std::vector<int> vmap(static_cast<size_t>(g.vertex_count()), -1);
    int nv = 0;
    for (int id : ids) {
        const Edge& e = g.edge(id);
        if (vmap[static_cast<size_t>(e.tail)] < 0) vmap[static_cast<size_t>(e.tail)] = nv++;
        if (vmap[static_cast<size_t>(e.head)] < 0) vmap[static_cast<size_t>(e.head)] = nv++;
    }

    const int m = static_cast<int>(ids.size());
    const int t = nv - 1;
    if (t == 0) return {EdgeSubset{0}};  // single touched vertex: the empty tree
    if (t > m) return {};

    // exact candidate count C(m, t), guarded against runaway enumeration
    unsigned long long candidates = 1;
    for (int i = 0; i < t; ++i) {
        candidates = candidates * static_cast<unsigned long long>(m - i) /
                     static_cast<unsigned long long>(i + 1);
        if (candidates > 50'000'000ULL)
            throw size_limit_error("too many spanning-tree candidates");
    }

    std::vector<EdgeSubset> out;
    std::uint64_t pm = (t == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << t) - 1;
    for (unsigned long long it = 0; it < candidates; ++it) {
        Dsu dsu(nv);
        bool ok = true;
        EdgeSubset tree = 0;
        std::uint64_t rest = pm;
        while (rest) {
            int pos = std::countr_zero(rest);
            rest &= rest - 1;
            const Edge& e = g.edge(ids[static_cast<size_t>(pos)]);
            if (e.is_loop() ||
                !dsu.unite(vmap[static_cast<size_t>(e.tail)], vmap[static_cast<size_t>(e.head)])) {
                ok = false;
                break;
            }
            tree |= edge_bit(ids[static_cast<size_t>(pos)]);
        }
        if (ok) out.push_back(tree);
        // Gosper: next subset of the same size; ascending, so output stays sorted
        std::uint64_t c = pm & (~pm + 1);
        std::uint64_t r = pm + c;
        pm = r | (((r ^ pm) >> 2) / c);
    }
    return out;
}

std::vector<EdgeSubset> spanning_trees(const Multigraph& g) {
    if (!is_connected(g)) throw invalid_input("not connected");
    return spanning_trees_of_subset(g, all_edges_mask(g.edge_count()));
}

namespace {

using i128 = __int128;

i128 cmul128(i128 a, i128 b) {
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw arithmetic_overflow("determinant overflow");
    return r;
}

i128 csub128(i128 a, i128 b) {
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw arithmetic_overflow("determinant overflow");
    return r;
}

}  // namespace

std::int64_t spanning_tree_count(const Multigraph& g) {
    if (!is_connected(g)) throw invalid_input("not connected");
    const int v = g.vertex_count();
    if (v == 1) return 1;
    const int m = v - 1;  // Laplacian minor: drop vertex 0
    std::vector<i128> a(static_cast<size_t>(m) * static_cast<size_t>(m), 0);
    auto at = [&](int r, int c) -> i128& {
        return a[static_cast<size_t>(r) * static_cast<size_t>(m) + static_cast<size_t>(c)];
    };
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        int i = e.tail - 1, j = e.head - 1;
        if (i >= 0) at(i, i) += 1;
        if (j >= 0) at(j, j) += 1;
        if (i >= 0 && j >= 0) {
            at(i, j) -= 1;
            at(j, i) -= 1;
        }
    }
    // Bareiss fraction-free elimination; every division is exact
    i128 prev = 1;
    int sign = 1;
    for (int k = 0; k < m; ++k) {
        int piv = -1;
        for (int r = k; r < m; ++r)
            if (at(r, k) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != k) {
            for (int c = 0; c < m; ++c) std::swap(at(piv, c), at(k, c));
            sign = -sign;
        }
        for (int r = k + 1; r < m; ++r)
            for (int c = k + 1; c < m; ++c)
                at(r, c) = csub128(cmul128(at(r, c), at(k, k)), cmul128(at(r, k), at(k, c))) / prev;
        prev = at(k, k);
    }
    i128 det = sign > 0 ? at(m - 1, m - 1) : -at(m - 1, m - 1);
    if (det < 0 || det > i128{INT64_MAX}) throw arithmetic_overflow("tree count out of range");
    return static_cast<std::int64_t>(det);
}

BlockDecomposition blocks(const Multigraph& g) {
    if (!is_connected(g)) throw invalid_input("not connected");
    const int v = g.vertex_count();
    std::vector<std::vector<int>> inc(static_cast<size_t>(v));  // non-loop edge ids per vertex
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) continue;
        inc[static_cast<size_t>(e.tail)].push_back(e.id);
        inc[static_cast<size_t>(e.head)].push_back(e.id);
    }

    std::vector<int> disc(static_cast<size_t>(v), -1), low(static_cast<size_t>(v), 0);
    std::vector<int> estack;
    std::vector<EdgeSubset> out;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent_edge) {
        disc[static_cast<size_t>(u)] = low[static_cast<size_t>(u)] = timer++;
        for (int eid : inc[static_cast<size_t>(u)]) {
            if (eid == parent_edge) continue;  // skip only the tree edge; parallels are back edges
            const Edge& e = g.edge(eid);
            int w = e.other(u);
            if (disc[static_cast<size_t>(w)] < 0) {
                estack.push_back(eid);
                dfs(w, eid);
                low[static_cast<size_t>(u)] =
                    std::min(low[static_cast<size_t>(u)], low[static_cast<size_t>(w)]);
                if (low[static_cast<size_t>(w)] >= disc[static_cast<size_t>(u)]) {
                    EdgeSubset b = 0;
                    int top;
                    do {
                        top = estack.back();
                        estack.pop_back();
                        b |= edge_bit(top);
                    } while (top != eid);
                    out.push_back(b);
                }
            } else if (disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(u)]) {
                estack.push_back(eid);
                low[static_cast<size_t>(u)] =
                    std::min(low[static_cast<size_t>(u)], disc[static_cast<size_t>(w)]);
            }
        }
    };
    for (int s = 0; s < v; ++s)
        if (disc[static_cast<size_t>(s)] < 0 && !inc[static_cast<size_t>(s)].empty()) dfs(s, -1);

    for (const Edge& e : g.edges())
        if (e.is_loop()) out.push_back(edge_bit(e.id));
    std::sort(out.begin(), out.end());

    // cut vertices: incident to two or more blocks
    std::vector<int> block_count(static_cast<size_t>(v), 0);
    for (EdgeSubset b : out) {
        std::vector<char> touched(static_cast<size_t>(v), 0);
        EdgeSubset rest = b;
        while (rest) {
            int id = std::countr_zero(rest) + 1;
            rest &= rest - 1;
            touched[static_cast<size_t>(g.edge(id).tail)] = 1;
            touched[static_cast<size_t>(g.edge(id).head)] = 1;
        }
        for (int u = 0; u < v; ++u)
            if (touched[static_cast<size_t>(u)]) ++block_count[static_cast<size_t>(u)];
    }
    BlockDecomposition bd;
    bd.blocks = std::move(out);
    for (int u = 0; u < v; ++u)
        if (block_count[static_cast<size_t>(u)] >= 2) bd.cut_vertices.push_back(u);
    return bd;
}

bool is_cyclic_block(EdgeSubset block, const Multigraph& g) {
    int k = subset_size(block);
    if (k >= 2) return true;
    if (k == 0) return false;
    int id = std::countr_zero(block) + 1;
    return g.edge(id).is_loop();
}

Multigraph family(FamilyKind kind, int n) {
    if (n < 1) throw invalid_input("family size must be positive");
    if ((kind == FamilyKind::Polygon || kind == FamilyKind::Banana) && n < 2)
        throw invalid_input(family_name(kind) + " requires n >= 2");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(n));
    switch (kind) {
        case FamilyKind::Star:
            for (int i = 1; i <= n; ++i) edges.push_back({i, 0, i});
            return Multigraph(n + 1, std::move(edges));
        case FamilyKind::Flower:
            for (int i = 1; i <= n; ++i) edges.push_back({i, 0, 0});
            return Multigraph(1, std::move(edges));
        case FamilyKind::Polygon:
            for (int i = 1; i <= n; ++i) edges.push_back({i, i - 1, i % n});
            return Multigraph(n, std::move(edges));
        case FamilyKind::Banana:
            for (int i = 1; i <= n; ++i) edges.push_back({i, 0, 1});
            return Multigraph(2, std::move(edges));
    }
    throw invalid_input("unknown family kind");
}

Multigraph wheel(int k) {
    if (k < 3) throw invalid_input("wheel requires k >= 3");
    std::vector<Edge> edges;
    for (int i = 1; i <= k; ++i) edges.push_back({i, 0, i});              // spokes
    for (int i = 1; i <= k; ++i) edges.push_back({k + i, i, i % k + 1});  // rim
    return Multigraph(k + 1, std::move(edges));
}

}  // namespace ghyp
