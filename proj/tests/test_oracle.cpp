#include <doctest.h>

#include "bbk/oracle.hpp"
#include "test_support.hpp"

using namespace bbk;
using namespace bbk::test;

TEST_CASE("brute force oracle: example graph, frozen expectation") {
    auto g = example_graph();
    // subsets over the 3-vertex number side
    auto got = brute_force_maximal_bicliques(g, Side::Left, true);
    CHECK(got == example_bicliques());
    // same answer from the 5-vertex letter side
    CHECK(brute_force_maximal_bicliques(g, Side::Right, true) == example_bicliques());
    // without the one-sided sets only the letter-side full set drops out
    CHECK(brute_force_maximal_bicliques(g, Side::Left, false).size() == 4);
}

TEST_CASE("clique-extended oracle: example graph, frozen expectation") {
    auto g = example_graph();
    RunStatistics st;
    auto got = clique_extended_enumerate(g, true, &st);
    CHECK(got == example_bicliques());
    CHECK(st.maximal_count == 4);
    CHECK(st.emitted_trivial == 1);
    CHECK(st.q_observed == 5);  // {2,3} x {B,C,D}
    CHECK(clique_extended_enumerate(g, false).size() == 4);
}

TEST_CASE("oracles: tiny closed forms") {
    SUBCASE("complete 3x3: a single biclique") {
        auto g = complete_graph(3, 3);
        std::vector<Biclique> want = {{{0, 1, 2}, {0, 1, 2}}};
        CHECK(brute_force_maximal_bicliques(g, Side::Left, true) == want);
        CHECK(clique_extended_enumerate(g, true) == want);
    }
    SUBCASE("single edge") {
        auto g = BipartiteGraph::from_edges(1, 1, {{0, 0}});
        std::vector<Biclique> want = {{{0}, {0}}};
        CHECK(brute_force_maximal_bicliques(g, Side::Left, true) == want);
        CHECK(clique_extended_enumerate(g, true) == want);
    }
    SUBCASE("edgeless: both full sides, nothing else") {
        auto g = BipartiteGraph::from_edges(3, 4, {});
        std::vector<Biclique> want = {{{}, {0, 1, 2, 3}}, {{0, 1, 2}, {}}};
        std::sort(want.begin(), want.end());
        CHECK(brute_force_maximal_bicliques(g, Side::Left, true) == want);
        CHECK(clique_extended_enumerate(g, true) == want);
        CHECK(brute_force_maximal_bicliques(g, Side::Left, false).empty());
    }
    SUBCASE("star: center side is dominated, leaf side is covered") {
        auto g = BipartiteGraph::from_edges(1, 4, {{0, 0}, {0, 1}, {0, 2}, {0, 3}});
        std::vector<Biclique> want = {{{0}, {0, 1, 2, 3}}};
        CHECK(brute_force_maximal_bicliques(g, Side::Left, true) == want);
        CHECK(clique_extended_enumerate(g, true) == want);
    }
    SUBCASE("two disjoint 2x2 blocks plus both trivial sides") {
        auto g = BipartiteGraph::from_edges(
            4, 4, {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 2}, {2, 3}, {3, 2}, {3, 3}});
        std::vector<Biclique> want = {{{0, 1}, {0, 1}},
                                      {{2, 3}, {2, 3}},
                                      {{0, 1, 2, 3}, {}},
                                      {{}, {0, 1, 2, 3}}};
        std::sort(want.begin(), want.end());
        CHECK(brute_force_maximal_bicliques(g, Side::Left, true) == want);
        CHECK(clique_extended_enumerate(g, true) == want);
    }
}

TEST_CASE("oracles: capacity limits") {
    CHECK_THROWS_AS(brute_force_maximal_bicliques(BipartiteGraph::from_edges(21, 1, {}),
                                                  Side::Left, true),
                    CapacityError);
    // the other side may be large
    CHECK_NOTHROW(brute_force_maximal_bicliques(BipartiteGraph::from_edges(30, 2, {{0, 0}}),
                                                Side::Right, true));
    CHECK_THROWS_AS(clique_extended_enumerate(BipartiteGraph::from_edges(2501, 2500, {})),
                    CapacityError);
}

TEST_CASE("oracle cross-check: subset sweep vs brute force vs clique-extended") {
    std::mt19937 rng(77001);
    int nonempty = 0;
    for (int iter = 0; iter < 50; ++iter) {
        const std::size_t nl = 1 + rng() % 6, nr = 1 + rng() % 6;
        auto g = random_graph(nl, nr, 0.3, rng);
        auto sweep = subset_sweep_oracle(g);
        auto galois = brute_force_maximal_bicliques(g, Side::Left, true);
        auto ext = clique_extended_enumerate(g, true);
        CHECK(galois == sweep);
        CHECK(ext == sweep);
        if (g.edge_count() > 0) ++nonempty;
    }
    CHECK(nonempty > 30);  // the sweep saw real graphs, not a parade of empties
}

TEST_CASE("oracle outputs are maximal bicliques, first principles") {
    std::mt19937 rng(77002);
    for (int iter = 0; iter < 30; ++iter) {
        auto g = random_graph(1 + rng() % 8, 1 + rng() % 10, 0.15 + 0.1 * (rng() % 6), rng);
        auto out = clique_extended_enumerate(g, true);
        for (const auto& b : out) CHECK(is_maximal_biclique(g, b));
        // no duplicates: sorted output must be strictly increasing
        for (std::size_t i = 1; i < out.size(); ++i) CHECK(out[i - 1] < out[i]);
        // same side-independence for the galois oracle
        CHECK(brute_force_maximal_bicliques(g, Side::Left, true) ==
              brute_force_maximal_bicliques(g, Side::Right, true));
    }
}
