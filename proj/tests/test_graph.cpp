#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "ghyp/graph.hpp"
#include "testutil.hpp"

using namespace ghyp;
namespace tu = ghyp::testutil;

TEST_CASE("multigraph validation") {
    CHECK_THROWS_AS(Multigraph(0, {}), invalid_input);
    CHECK_THROWS_AS(Multigraph(2, {{1, 0, 1}, {1, 0, 1}}), invalid_input);  // duplicate id
    CHECK_THROWS_AS(Multigraph(2, {{2, 0, 1}}), invalid_input);             // gap
    CHECK_THROWS_AS(Multigraph(2, {{1, 0, 2}}), invalid_input);             // endpoint range
    std::vector<Edge> too_many;
    for (int i = 1; i <= 65; ++i) too_many.push_back({i, 0, 1});
    CHECK_THROWS_AS(Multigraph(2, std::move(too_many)), invalid_input);
    // out-of-order ids are normalized
    Multigraph g(3, {{2, 1, 2}, {1, 0, 1}});
    CHECK(g.edge(1).tail == 0);
    CHECK(g.edge(2).tail == 1);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(family(FamilyKind::Banana, 3)));
    CHECK(is_connected(family(FamilyKind::Polygon, 4)));
    CHECK(is_connected(Multigraph(1, {})));
    CHECK_FALSE(is_connected(Multigraph(2, {})));
    CHECK_FALSE(is_connected(Multigraph(3, {{1, 0, 1}})));
    // a loop does not connect anything
    CHECK_FALSE(is_connected(Multigraph(2, {{1, 0, 0}})));
}

TEST_CASE("spanning trees of small graphs") {
    CHECK(spanning_trees(Multigraph(2, {{1, 0, 1}})) == std::vector<EdgeSubset>{0b1});
    CHECK(spanning_trees(family(FamilyKind::Banana, 3)) ==
          std::vector<EdgeSubset>{0b001, 0b010, 0b100});
    CHECK(spanning_trees(family(FamilyKind::Polygon, 3)) ==
          std::vector<EdgeSubset>{0b011, 0b101, 0b110});
    CHECK_THROWS_AS(spanning_trees(Multigraph(2, {})), invalid_input);
    // loops never appear in a tree
    Multigraph loopy(2, {{1, 0, 1}, {2, 1, 1}});
    CHECK(spanning_trees(loopy) == std::vector<EdgeSubset>{0b01});
}

TEST_CASE("spanning trees match the all-subsets filter") {
    for (auto kind : {FamilyKind::Star, FamilyKind::Flower, FamilyKind::Polygon,
                      FamilyKind::Banana})
        for (int n = (kind == FamilyKind::Polygon || kind == FamilyKind::Banana) ? 2 : 1; n <= 8;
             ++n) {
            Multigraph g = family(kind, n);
            CHECK(spanning_trees(g) == tu::naive_spanning_trees(g));
        }
    CHECK(spanning_trees(wheel(4)) == tu::naive_spanning_trees(wheel(4)));
    std::mt19937 rng(1234);
    for (int i = 0; i < 50; ++i) {
        Multigraph g = tu::random_connected_multigraph(rng, 3 + i % 6);
        CHECK(spanning_trees(g) == tu::naive_spanning_trees(g));
    }
}

TEST_CASE("tree size and ordering invariants") {
    std::mt19937 rng(99);
    for (int i = 0; i < 60; ++i) {
        Multigraph g = tu::random_connected_multigraph(rng, 2 + i % 9);
        auto trees = spanning_trees(g);
        for (size_t k = 0; k < trees.size(); ++k) {
            CHECK(subset_size(trees[k]) == g.vertex_count() - 1);
            if (k > 0) CHECK(trees[k - 1] < trees[k]);
        }
    }
}

TEST_CASE("matrix-tree count agrees with enumeration") {
    CHECK(spanning_tree_count(family(FamilyKind::Polygon, 4)) == 4);
    CHECK(spanning_tree_count(family(FamilyKind::Banana, 5)) == 5);
    CHECK(spanning_tree_count(family(FamilyKind::Star, 6)) == 1);
    CHECK(spanning_tree_count(Multigraph(1, {})) == 1);
    CHECK(spanning_tree_count(wheel(3)) == 16);
    CHECK_THROWS_AS(spanning_tree_count(Multigraph(3, {{1, 0, 1}})), invalid_input);
    std::mt19937 rng(4242);
    for (int i = 0; i < 80; ++i) {
        Multigraph g = tu::random_connected_multigraph(rng, 2 + i % 9);
        CHECK(spanning_tree_count(g) ==
              static_cast<std::int64_t>(spanning_trees(g).size()));
    }
}

TEST_CASE("block decomposition") {
    SUBCASE("two triangles sharing a vertex") {
        auto bd = blocks(tu::two_triangles());
        REQUIRE(bd.blocks.size() == 2);
        CHECK(subset_size(bd.blocks[0]) == 3);
        CHECK(subset_size(bd.blocks[1]) == 3);
        CHECK(bd.cut_vertices == std::vector<int>{0});
    }
    SUBCASE("a cycle is a single block") {
        auto bd = blocks(family(FamilyKind::Polygon, 5));
        CHECK(bd.blocks.size() == 1);
        CHECK(bd.cut_vertices.empty());
    }
    SUBCASE("each loop is its own block") {
        auto bd = blocks(family(FamilyKind::Flower, 2));
        REQUIRE(bd.blocks.size() == 2);
        CHECK(bd.blocks[0] == 0b01);
        CHECK(bd.blocks[1] == 0b10);
        CHECK(bd.cut_vertices == std::vector<int>{0});
    }
    SUBCASE("path has a cut vertex in the middle") {
        Multigraph path(3, {{1, 0, 1}, {2, 1, 2}});
        auto bd = blocks(path);
        CHECK(bd.blocks.size() == 2);
        CHECK(bd.cut_vertices == std::vector<int>{1});
    }
    SUBCASE("parallel edges stay in one block") {
        auto bd = blocks(family(FamilyKind::Banana, 4));
        CHECK(bd.blocks.size() == 1);
        CHECK(bd.cut_vertices.empty());
    }
}

TEST_CASE("blocks partition the edges and cut vertices disconnect") {
    std::mt19937 rng(7);
    for (int i = 0; i < 60; ++i) {
        Multigraph g = tu::random_connected_multigraph(rng, 2 + i % 7);
        auto bd = blocks(g);
        EdgeSubset all = 0;
        int total = 0;
        for (EdgeSubset b : bd.blocks) {
            CHECK((all & b) == 0);
            all |= b;
            total += subset_size(b);
        }
        CHECK(all == all_edges_mask(g.edge_count()));
        CHECK(total == g.edge_count());

        if (g.vertex_count() < 3) continue;
        for (int u = 0; u < g.vertex_count(); ++u) {
            // delete u: keep edges avoiding u, check the rest stays connected
            std::vector<Edge> kept;
            int id = 1;
            for (const Edge& e : g.edges())
                if (e.tail != u && e.head != u)
                    kept.push_back({id++, e.tail < u ? e.tail : e.tail - 1,
                                    e.head < u ? e.head : e.head - 1});
            Multigraph h(g.vertex_count() - 1, std::move(kept));
            bool still_connected = is_connected(h);
            bool is_cut = std::binary_search(bd.cut_vertices.begin(), bd.cut_vertices.end(), u);
            // a vertex carrying a loop separates the loop without disconnecting
            // anything, so the removal equivalence only applies off loops
            bool u_has_loop = false;
            for (const Edge& e : g.edges())
                if (e.is_loop() && e.tail == u) u_has_loop = true;
            if (!u_has_loop) CHECK(still_connected == !is_cut);
        }
    }
}

TEST_CASE("separability matches the common-cycle characterization") {
    // exhaustive over every labeled connected multigraph with up to 6 edges
    for (int n = 1; n <= 6; ++n) {
        long long mismatches = 0, seen = 0;
        tu::for_each_connected_multigraph(n, [&](const Multigraph& g) {
            ++seen;
            bool separable = !blocks(g).cut_vertices.empty();
            // all cycle subsets once, then pair coverage by mask tests
            std::vector<EdgeSubset> cycles;
            for (EdgeSubset s = 0; s < (EdgeSubset{1} << n); ++s)
                if (tu::subset_is_cycle(g, s)) cycles.push_back(s);
            bool bad_pair = false;
            for (int e = 1; e <= n && !bad_pair; ++e)
                for (int f = e + 1; f <= n && !bad_pair; ++f) {
                    EdgeSubset need = edge_bit(e) | edge_bit(f);
                    bool common = false;
                    for (EdgeSubset c : cycles)
                        if ((c & need) == need) {
                            common = true;
                            break;
                        }
                    if (!common) bad_pair = true;
                }
            if (separable != bad_pair) ++mismatches;
        });
        CHECK(seen > 0);
        CHECK(mismatches == 0);
    }
}

TEST_CASE("cyclic block detection") {
    Multigraph g(3, {{1, 0, 1}, {2, 1, 2}, {3, 2, 1}, {4, 2, 2}});
    // edge 1 is a bridge, edges 2+3 a two-cycle, edge 4 a loop
    auto bd = blocks(g);
    REQUIRE(bd.blocks.size() == 3);
    CHECK_FALSE(is_cyclic_block(edge_bit(1), g));
    CHECK(is_cyclic_block(edge_bit(2) | edge_bit(3), g));
    CHECK(is_cyclic_block(edge_bit(4), g));
}

TEST_CASE("family constructors") {
    Multigraph b3 = family(FamilyKind::Banana, 3);
    CHECK(b3.vertex_count() == 2);
    CHECK(b3.edges() == std::vector<Edge>{{1, 0, 1}, {2, 0, 1}, {3, 0, 1}});
    Multigraph f2 = family(FamilyKind::Flower, 2);
    CHECK(f2.vertex_count() == 1);
    CHECK(f2.edges() == std::vector<Edge>{{1, 0, 0}, {2, 0, 0}});
    Multigraph p2 = family(FamilyKind::Polygon, 2);
    CHECK(p2.vertex_count() == 2);
    CHECK(p2.edge(1).tail != p2.edge(1).head);
    CHECK_THROWS_AS(family(FamilyKind::Polygon, 1), invalid_input);
    CHECK_THROWS_AS(family(FamilyKind::Banana, 1), invalid_input);
    CHECK_THROWS_AS(family(FamilyKind::Star, 0), invalid_input);
    CHECK(wheel(3).edge_count() == 6);
    CHECK_THROWS_AS(wheel(2), invalid_input);
}

TEST_CASE("family name round trip") {
    for (auto kind : {FamilyKind::Star, FamilyKind::Flower, FamilyKind::Polygon,
                      FamilyKind::Banana})
        CHECK(parse_family(family_name(kind)) == kind);
    CHECK_THROWS_AS(parse_family("pentagon"), invalid_input);
}
