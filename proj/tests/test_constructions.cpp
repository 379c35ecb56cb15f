#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "oracles.hpp"
#include "pathchrom/constructions.hpp"
#include "pathchrom/dp.hpp"

using namespace pathchrom;

TEST_CASE("r_product small cases") {
    SUBCASE("R_1(K_1) is a single edge") {
        RmGraph r = r_product(make_complete(1), 1);
        CHECK(r.order() == 2);
        CHECK(r.graph.edge_count() == 1);
        CHECK(r.graph.has_edge(0, 1));
    }
    SUBCASE("R_2(K_1) is two disjoint edges") {
        RmGraph r = r_product(make_complete(1), 2);
        CHECK(r.order() == 4);
        CHECK(r.graph.edge_count() == 2);
        CHECK(r.graph.has_edge(0, 1));
        CHECK(r.graph.has_edge(2, 3));
        CHECK(!r.graph.has_edge(1, 3));
    }
    SUBCASE("order is m(n+1)") {
        CHECK(r_product(make_cycle(5), 9).order() == 54);
        CHECK(r_product(make_cycle(7), 11).order() == 88);
    }
    CHECK_THROWS_AS(r_product(make_complete(2), 0), invalid_parameter);
}

TEST_CASE("r_product adjacency matches the definition exactly") {
    Graph g = oracles::graph_from_edge_mask(4, 0b010110);
    const int m = 3;
    RmGraph r = r_product(g, m);
    for (int v1 = 0; v1 < r.order(); ++v1)
        for (int v2 = v1 + 1; v2 < r.order(); ++v2) {
            RmLabel a = r.label_of(v1), b = r.label_of(v2);
            bool expect;
            if (a.row == b.row)
                expect = a.is_apex() != b.is_apex();
            else
                expect = !a.is_apex() && !b.is_apex() && g.has_edge(a.base, b.base);
            CHECK(r.graph.has_edge(v1, v2) == expect);
        }
}

TEST_CASE("apex degree is exactly n") {
    for (int m : {1, 2, 4})
        for (int n : {3, 5}) {
            RmGraph r = r_product(make_cycle(n), m);
            for (int i = 1; i <= m; ++i) {
                int apex = r.index_of(i, -1);
                CHECK(r.graph.degree(apex) == n);
                // adjacent exactly to its own row's base copies
                for (int b = 0; b < n; ++b) CHECK(r.graph.has_edge(apex, r.index_of(i, b)));
            }
        }
}

TEST_CASE("blocks") {
    RmGraph r = r_product(make_cycle(5), 4);
    std::vector<int> all_rows = {1, 2, 3, 4};
    std::vector<int> apex_only = {-1};
    VertexSet apex_col = block(r, all_rows, apex_only);
    CHECK(apex_col.count() == 4);
    CHECK(induced_subgraph(r.graph, apex_col).graph.edge_count() == 0);

    std::vector<int> one_row = {1};
    std::vector<int> bases = {0, 1, 2, 3, 4};
    VertexSet row1 = block(r, one_row, bases);
    CHECK(row1.count() == 5);
    CHECK(induced_subgraph(r.graph, row1).graph.edge_count() == 0);

    std::vector<int> two_rows = {2, 4}, two_bases = {0, 3};
    CHECK(block(r, two_rows, two_bases).count() == 4);

    std::vector<int> bad_row = {5};
    CHECK_THROWS_AS(block(r, bad_row, apex_only), invalid_parameter);
}

TEST_CASE("block chromatic number equals the base chromatic number once rows suffice") {
    RmGraph r3 = r_product(make_cycle(5), 3);
    RmGraph r4 = r_product(make_cycle(5), 4);
    std::vector<int> bases = {0, 1, 2, 3, 4};
    std::vector<int> rows3 = {1, 2, 3}, rows4 = {1, 2, 3, 4};
    CHECK(chromatic_number(induced_subgraph(r3.graph, block(r3, rows3, bases)).graph) == 3);
    CHECK(chromatic_number(induced_subgraph(r4.graph, block(r4, rows4, bases)).graph) == 3);
}

TEST_CASE("embed_into_block produces induced copies") {
    Graph c5 = make_cycle(5);
    SUBCASE("independent set into a single row") {
        RmGraph r = r_product(c5, 2);
        VertexSet u = VertexSet::of(5, {0, 2});
        std::vector<int> rows = {2};
        std::vector<int> map = embed_into_block(c5, r, u, rows);
        InducedSubgraph sub = induced_subgraph(c5, u);
        std::vector<int> small_map(sub.graph.order());
        for (int i = 0; i < sub.graph.order(); ++i) small_map[i] = map[sub.to_parent[i]];
        CHECK(check_induced_embedding(sub.graph, r.graph, small_map));
    }
    SUBCASE("whole C_5 into three rows") {
        RmGraph r = r_product(c5, 5);
        VertexSet u = VertexSet::full(5);
        std::vector<int> rows = {1, 3, 4};
        std::vector<int> map = embed_into_block(c5, r, u, rows);
        CHECK(check_induced_embedding(c5, r.graph, map));
        for (int v = 0; v < 5; ++v) {
            RmLabel l = r.label_of(map[v]);
            CHECK(l.base == v);  // f(v) stays in [I, {v}]
            CHECK((l.row == 1 || l.row == 3 || l.row == 4));
        }
    }
    SUBCASE("extension by an outside vertex stays induced") {
        Graph c6 = make_cycle(6);
        RmGraph r = r_product(c6, 4);
        VertexSet u = VertexSet::of(6, {0, 1, 2, 3, 4});
        std::vector<int> rows = {1, 2};
        std::vector<int> map = embed_into_block(c6, r, u, rows);
        map[5] = r.index_of(4, 5);  // (i*, v*) with i* outside I, v* outside U
        CHECK(check_induced_embedding(c6, r.graph, map));
    }
    SUBCASE("too few rows is a precondition error") {
        RmGraph r = r_product(c5, 3);
        std::vector<int> rows = {1, 2};
        CHECK_THROWS_AS(embed_into_block(c5, r, VertexSet::full(5), rows), invalid_parameter);
    }
}

TEST_CASE("mycielski construction") {
    CHECK_THROWS_AS(mycielski(1), invalid_parameter);
    SUBCASE("M_2 is a single edge") {
        MycielskiGraph m2 = mycielski(2);
        CHECK(m2.graph.order() == 2);
        CHECK(m2.graph.edge_count() == 1);
    }
    SUBCASE("M_3 is isomorphic to C_5") {
        Graph m3 = mycielski(3).graph;
        Graph c5 = make_cycle(5);
        CHECK(m3.order() == 5);
        std::vector<int> perm = {0, 1, 2, 3, 4};
        bool iso = false;
        do {
            if (check_induced_embedding(m3, c5, perm)) iso = true;
        } while (!iso && std::next_permutation(perm.begin(), perm.end()));
        CHECK(iso);
    }
    SUBCASE("orders, triangle-freeness, chromatic numbers") {
        for (int k = 2; k <= 5; ++k) {
            MycielskiGraph mg = mycielski(k);
            CHECK(mg.graph.order() == 3 * (1 << (k - 2)) - 1);
            CHECK(is_triangle_free(mg.graph));
            CHECK(chromatic_number(mg.graph) == k);
        }
    }
    SUBCASE("shadow bookkeeping: shadows copy base adjacency") {
        MycielskiGraph m4 = mycielski(4);
        for (int v = 0; v < m4.graph.order(); ++v) {
            int base = m4.shadow_of[v];
            if (base < 0) continue;
            int prev = MycielskiGraph::order_of(m4.stage[v] - 1);
            for (int w = 0; w < prev; ++w) CHECK(m4.graph.has_edge(v, w) == m4.graph.has_edge(base, w));
        }
    }
}

TEST_CASE("star decomposition of R_m(C_n)") {
    SUBCASE("valid with chromatic number 2 across the grid") {
        for (int n = 4; n <= 7; ++n)
            for (int m : {1, 2, 5, 11}) {
                StarDecomposition sd = star_decomposition_rm_cycle(n, m);
                auto r = validate_tree_decomposition(sd.rm.graph, sd.decomposition);
                CHECK_MESSAGE(r.ok, "n=", n, " m=", m, ": ", r.violation);
                CHECK(decomposition_chromatic_number(sd.rm.graph, sd.decomposition) == 2);
            }
    }
    SUBCASE("n=3 is rejected") { CHECK_THROWS_AS(star_decomposition_rm_cycle(3, 2), invalid_parameter); }
    SUBCASE("bags match the stated shape") {
        StarDecomposition sd = star_decomposition_rm_cycle(5, 2);
        CHECK(sd.decomposition.bags.size() == 3);
        CHECK(sd.decomposition.bags[0].count() == 2 * 4);       // [[m], {v_2..v_n}]
        CHECK(sd.decomposition.bags[1].count() == 6 + 2);       // row + [[m],{v_2,v_n}] minus overlap
    }
}

TEST_CASE("mu enumeration") {
    SUBCASE("K_1 with m=2 gives the displayed order") {
        Enumeration mu = mu_enumeration(make_complete(1), {0}, 2);
        CHECK(mu == Enumeration{1, 3, 0, 2});
    }
    SUBCASE("length is always m(n+1) and a permutation") {
        Graph g = make_cycle(4);
        Enumeration mu = mu_enumeration(g, {2, 0, 3, 1}, 3);
        CHECK(mu.size() == 15);
        RmGraph r = r_product(g, 3);
        CHECK(is_permutation_of_vertices(r.graph, mu));
    }
    SUBCASE("rows sweep fastest, apexes last") {
        Graph g = make_cycle(4);
        RmGraph r = r_product(g, 3);
        Enumeration sigma = {2, 0, 3, 1};
        Enumeration mu = mu_enumeration(g, sigma, 3);
        for (int t = 0; t < 4; ++t)
            for (int i = 1; i <= 3; ++i) {
                RmLabel l = r.label_of(mu[t * 3 + (i - 1)]);
                CHECK(l.row == i);
                CHECK(l.base == sigma[t]);
            }
        for (int i = 1; i <= 3; ++i) CHECK(r.label_of(mu[12 + i - 1]).is_apex());
    }
    CHECK_THROWS_AS(mu_enumeration(make_cycle(4), {0, 1, 2}, 2), invalid_parameter);
}

TEST_CASE("mu enumeration of R_m(C_5) keeps bags 3-colorable") {
    Graph c5 = make_cycle(5);
    Enumeration sigma = {0, 1, 2, 3, 4};
    for (int m : {2, 4}) {
        RmGraph r = r_product(c5, m);
        Enumeration mu = mu_enumeration(c5, sigma, m);
        CHECK(enumeration_chromatic_number(r.graph, mu) <= 3);
    }
}

TEST_CASE("mycielski embedding grid") {
    for (int n : {2, 3})
        for (int m : {1, 2, 3}) {
            int r = n + m;
            std::vector<int> map = mycielski_embedding(n, m, r);
            RmGraph pattern = r_product(mycielski(n).graph, m);
            MycielskiGraph host = mycielski(r);
            CHECK_MESSAGE(check_induced_embedding(pattern.graph, host.graph, map), "n=", n, " m=", m, " r=", r);
        }
    CHECK_THROWS_AS(mycielski_embedding(2, 2, 3), invalid_parameter);
}

TEST_CASE("index layout round-trips") {
    RmGraph r = r_product(make_cycle(6), 4);
    for (int v = 0; v < r.order(); ++v) {
        RmLabel l = r.label_of(v);
        CHECK(r.index_of(l.row, l.base) == v);
    }
    CHECK_THROWS_AS(r.index_of(0, 0), invalid_parameter);
    CHECK_THROWS_AS(r.index_of(1, 6), invalid_parameter);
    CHECK(r.graph.labels()[r.index_of(2, -1)] == "(2,v0)");
}
