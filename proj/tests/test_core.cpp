#include "besk/canonical.hpp"
#include "besk/hypergraph.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace besk;

TEST_CASE("parse: direct encoding") {
    auto g = parse_hypergraph("3 4 2\n0 1 2\n1 2 3\n");
    CHECK(g.vertex_count() == 4);
    CHECK(g.uniformity() == 3);
    CHECK(g.edge_count() == 2);
}

TEST_CASE("parse: rejects duplicates, bad vertices, bad arity") {
    CHECK_THROWS_WITH_AS(parse_hypergraph("3 4 2\n0 1 2\n0 1 2\n"), doctest::Contains("duplicate"),
                         error);
    CHECK_THROWS_AS(parse_hypergraph("3 4 1\n0 1 5\n"), error);
    CHECK_THROWS_AS(parse_hypergraph("3 4 1\n0 1\n"), error);
    CHECK_THROWS_AS(parse_hypergraph("3 4 1\n0 0 1\n"), error);
    CHECK_THROWS_AS(parse_hypergraph("nonsense\n"), error);
    CHECK_THROWS_AS(parse_hypergraph("3 4\n"), error);
    CHECK_THROWS_AS(parse_hypergraph("3 4 2\n0 1 2\n"), error);
    try {
        parse_hypergraph("3 4 1\n0 1 5\n");
        CHECK(false);
    } catch (const error& e) {
        CHECK(e.code() == errc::vertex_out_of_range);
    }
}

TEST_CASE("parse: comments and blank lines are skipped") {
    auto g = parse_hypergraph("# triple system\n\n3 4 2\n# body\n0 1 2\n1 2 3\n");
    CHECK(g.edge_count() == 2);
}

TEST_CASE("serialize: bit-exact round trip") {
    auto g = parse_hypergraph("3 5 3\n0 1 2\n1 2 3\n2 3 4\n");
    auto text = serialize_hypergraph(g);
    CHECK(text == "3 5 3\n0 1 2\n1 2 3\n2 3 4\n");
    CHECK(parse_hypergraph(text) == g);
}

TEST_CASE("round trip on random graphs") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto g = oracle::random_graph(8, 3, 6, seed);
        CHECK(parse_hypergraph(serialize_hypergraph(g)) == g);
    }
}

TEST_CASE("span of edge subsets") {
    hyper_graph g(8, 3, {{0, 1, 2}, {1, 2, 3}, {3, 4, 5}});
    CHECK(edge_subset(g, {0}).span() == 3);
    CHECK(edge_subset(g, {0, 1}).span() == 4);
    CHECK(edge_subset(g, {0, 2}).span() == 6);
    CHECK(edge_subset(g, {}).span() == 0);
}

TEST_CASE("pair index matches membership") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        auto g = oracle::random_graph(9, 4, 7, seed + 100);
        for (std::int32_t u = 0; u < g.vertex_count(); ++u)
            for (std::int32_t v = u + 1; v < g.vertex_count(); ++v) {
                auto list = g.pair_edges(u, v);
                for (std::int32_t e = 0; e < g.edge_count(); ++e) {
                    bool in_list = std::find(list.begin(), list.end(), e) != list.end();
                    bool contains =
                        g.edge_mask(e).contains(u) && g.edge_mask(e).contains(v);
                    CHECK(in_list == contains);
                }
            }
    }
}

TEST_CASE("canonical: label-free equalities") {
    hyper_graph a(3, 3, {{0, 1, 2}});
    hyper_graph b(3, 3, {{2, 1, 0}});
    CHECK(canonical_form(a) == canonical_form(b));

    hyper_graph c(4, 3, {{0, 1, 2}});
    hyper_graph d(4, 3, {{1, 2, 3}});
    CHECK(canonical_form(c) == canonical_form(d));
    CHECK(canonical_form(a) != canonical_form(c)); // different n

    hyper_graph diamond(6, 3, {{0, 1, 2}, {1, 2, 3}});
    hyper_graph disjoint(6, 3, {{0, 1, 2}, {3, 4, 5}});
    CHECK(canonical_form(diamond) != canonical_form(disjoint));
}

TEST_CASE("canonical: permutation invariance on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        std::int32_t n = 5 + static_cast<std::int32_t>(rng() % 4);
        auto g = oracle::random_graph(n, 3, 2 + static_cast<std::int32_t>(rng() % 6),
                                      rng());
        auto base = canonical_form(g);
        for (int p = 0; p < 10; ++p) {
            std::vector<std::int32_t> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::vector<std::int32_t>> mapped;
            for (std::int32_t i = 0; i < g.edge_count(); ++i) {
                std::vector<std::int32_t> e;
                for (auto v : g.edge(i)) e.push_back(perm[v]);
                mapped.push_back(std::move(e));
            }
            hyper_graph h(n, 3, std::move(mapped));
            CHECK(canonical_form(h) == base);
        }
    }
}

TEST_CASE("canonical: agreement with brute-force isomorphism at n <= 6") {
    std::mt19937_64 rng(11);
    int nontrivial = 0;
    for (int trial = 0; trial < 60; ++trial) {
        auto a = oracle::random_graph(6, 3, 2 + static_cast<std::int32_t>(rng() % 4), rng());
        auto b = oracle::random_graph(6, 3, 2 + static_cast<std::int32_t>(rng() % 4), rng());
        bool iso = oracle::naive_isomorphic(a, b);
        bool same = canonical_form(a) == canonical_form(b);
        CHECK(iso == same);
        if (iso) ++nontrivial;
    }
    // also check known-isomorphic pairs so the equality direction is exercised
    hyper_graph a(6, 3, {{0, 1, 2}, {2, 3, 4}});
    hyper_graph b(6, 3, {{5, 4, 3}, {3, 2, 1}});
    CHECK(oracle::naive_isomorphic(a, b));
    CHECK(canonical_form(a) == canonical_form(b));
}

TEST_CASE("canonical: too many vertices") {
    hyper_graph g(17, 3, {{0, 1, 2}});
    CHECK_THROWS_AS(canonical_form(g), error);
}

TEST_CASE("with_edge and without_edge") {
    hyper_graph g(5, 3, {{0, 1, 2}});
    auto h = g.with_edge({2, 3, 4});
    CHECK(h.edge_count() == 2);
    CHECK(h.has_edge({2, 3, 4}));
    auto back = h.without_edge(1);
    CHECK(back == g);
}

TEST_CASE("max pair overlap") {
    hyper_graph linear(7, 3, {{0, 1, 2}, {2, 3, 4}});
    CHECK(linear.max_pair_overlap() == 1);
    hyper_graph diamond(6, 3, {{0, 1, 2}, {1, 2, 3}});
    CHECK(diamond.max_pair_overlap() == 2);
    hyper_graph disjoint(6, 3, {{0, 1, 2}, {3, 4, 5}});
    CHECK(disjoint.max_pair_overlap() == 0);
    hyper_graph deep(6, 4, {{0, 1, 2, 3}, {0, 1, 2, 4}});
    CHECK(deep.max_pair_overlap() == 3);
}
