#include "ghyp/embedding.hpp"

namespace ghyp {

namespace {

// darts 0..2n-1: dart 2(id-1) is the tail side, 2(id-1)+1 the head side
int dart_of(const HalfEdge& h) {
    return 2 * (h.edge_id - 1) + (h.end == EdgeEnd::Head ? 1 : 0);
}

HalfEdge halfedge_of(int dart) {
    return HalfEdge{dart / 2 + 1, (dart & 1) ? EdgeEnd::Head : EdgeEnd::Tail};
}

int vertex_of_dart(const Multigraph& g, int dart) {
    const Edge& e = g.edge(dart / 2 + 1);
    return (dart & 1) ? e.head : e.tail;
}

}  // namespace

RotationSystem::RotationSystem(Multigraph graph, std::vector<std::vector<HalfEdge>> rotation)
    : graph_(std::move(graph)), rotation_(std::move(rotation)) {
    const int v = graph_.vertex_count();
    const int n = graph_.edge_count();
    if (static_cast<int>(rotation_.size()) != v)
        throw embedding_error("rotation must list every vertex");
    std::vector<char> seen(static_cast<size_t>(2 * n), 0);
    for (int u = 0; u < v; ++u) {
        for (const HalfEdge& h : rotation_[static_cast<size_t>(u)]) {
            if (h.edge_id < 1 || h.edge_id > n) throw embedding_error("rotation names unknown edge");
            int d = dart_of(h);
            if (vertex_of_dart(graph_, d) != u)
                throw embedding_error("half-edge listed at the wrong vertex");
            if (seen[static_cast<size_t>(d)]) throw embedding_error("half-edge listed twice");
            seen[static_cast<size_t>(d)] = 1;
        }
    }
    for (int d = 0; d < 2 * n; ++d)
        if (!seen[static_cast<size_t>(d)]) throw embedding_error("half-edge missing from rotation");
}

FaceSet faces(const RotationSystem& r) {
    const Multigraph& g = r.graph();
    if (!is_connected(g)) throw invalid_input("not connected");
    const int n = g.edge_count();
    FaceSet fs;
    if (n == 0) {
        fs.walks.push_back({});  // lone vertex on the sphere: one face
        return fs;
    }
    std::vector<int> sigma(static_cast<size_t>(2 * n), -1);
    for (const auto& order : r.rotation()) {
        const int k = static_cast<int>(order.size());
        for (int i = 0; i < k; ++i)
            sigma[static_cast<size_t>(dart_of(order[static_cast<size_t>(i)]))] =
                dart_of(order[static_cast<size_t>((i + 1) % k)]);
    }
    std::vector<char> used(static_cast<size_t>(2 * n), 0);
    for (int d0 = 0; d0 < 2 * n; ++d0) {
        if (used[static_cast<size_t>(d0)]) continue;
        std::vector<HalfEdge> walk;
        int d = d0;
        do {
            used[static_cast<size_t>(d)] = 1;
            walk.push_back(halfedge_of(d));
            d = sigma[static_cast<size_t>(d ^ 1)];  // twin, then rotation successor
        } while (d != d0);
        fs.walks.push_back(std::move(walk));
    }
    const int f = static_cast<int>(fs.walks.size());
    if (g.vertex_count() - n + f != 2) throw embedding_error("not a sphere embedding");
    return fs;
}

RotationSystem dual(const RotationSystem& r) {
    FaceSet fs = faces(r);
    const Multigraph& g = r.graph();
    const int n = g.edge_count();
    std::vector<int> face_of(static_cast<size_t>(2 * n), -1);
    for (int f = 0; f < static_cast<int>(fs.walks.size()); ++f)
        for (const HalfEdge& h : fs.walks[static_cast<size_t>(f)])
            face_of[static_cast<size_t>(dart_of(h))] = f;
    std::vector<Edge> dual_edges;
    dual_edges.reserve(static_cast<size_t>(n));
    for (int id = 1; id <= n; ++id)
        dual_edges.push_back(Edge{id, face_of[static_cast<size_t>(2 * (id - 1))],
                                  face_of[static_cast<size_t>(2 * (id - 1) + 1)]});
    Multigraph dg(static_cast<int>(fs.walks.size()), std::move(dual_edges));
    // the face walks are exactly the dual rotation lists
    return RotationSystem(std::move(dg), std::move(fs.walks));
}

RotationSystem family_rotation(FamilyKind kind, int n) {
    Multigraph g = family(kind, n);
    std::vector<std::vector<HalfEdge>> rot(static_cast<size_t>(g.vertex_count()));
    switch (kind) {
        case FamilyKind::Star:
            for (int i = 1; i <= n; ++i) {
                rot[0].push_back({i, EdgeEnd::Tail});
                rot[static_cast<size_t>(i)].push_back({i, EdgeEnd::Head});
            }
            break;
        case FamilyKind::Flower:
            for (int i = 1; i <= n; ++i) {
                rot[0].push_back({i, EdgeEnd::Tail});
                rot[0].push_back({i, EdgeEnd::Head});
            }
            break;
        case FamilyKind::Polygon:
            rot[0] = {{1, EdgeEnd::Tail}, {n, EdgeEnd::Head}};
            for (int j = 1; j < n; ++j)
                rot[static_cast<size_t>(j)] = {{j + 1, EdgeEnd::Tail}, {j, EdgeEnd::Head}};
            break;
        case FamilyKind::Banana:
            for (int i = 1; i <= n; ++i) rot[0].push_back({i, EdgeEnd::Tail});
            for (int i = n; i >= 1; --i) rot[1].push_back({i, EdgeEnd::Head});
            break;
    }
    return RotationSystem(std::move(g), std::move(rot));
}

RotationSystem wheel_rotation(int k) {
    Multigraph g = wheel(k);
    std::vector<std::vector<HalfEdge>> rot(static_cast<size_t>(k + 1));
    for (int i = 1; i <= k; ++i) rot[0].push_back({i, EdgeEnd::Tail});
    for (int i = 1; i <= k; ++i) {
        int prev_rim = k + (i == 1 ? k : i - 1);
        rot[static_cast<size_t>(i)] = {
            {i, EdgeEnd::Head}, {prev_rim, EdgeEnd::Head}, {k + i, EdgeEnd::Tail}};
    }
    return RotationSystem(std::move(g), std::move(rot));
}

}  // namespace ghyp
