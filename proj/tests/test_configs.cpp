#include "besk/configs.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <random>

using namespace besk;

TEST_CASE("contains_config: frozen examples") {
    hyper_graph diamond(4, 3, {{0, 1, 2}, {1, 2, 3}});
    auto res = contains_config(diamond, 4, 2);
    REQUIRE(res.found());
    CHECK(res.witness->span == 4);
    CHECK(res.witness->edge_indices == std::vector<std::int32_t>{0, 1});

    hyper_graph chain(6, 3, {{0, 1, 2}, {2, 3, 4}, {0, 4, 5}});
    auto res2 = contains_config(chain, 6, 3);
    REQUIRE(res2.found());
    CHECK(res2.witness->span == 6);

    auto sts = oracle::fano_plane();
    CHECK_FALSE(contains_config(sts, 4, 2).found());
}

TEST_CASE("contains_config: oracle equivalence on random graphs") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 120; ++trial) {
        std::int32_t r = 3 + static_cast<std::int32_t>(rng() % 2);
        std::int32_t n = 7 + static_cast<std::int32_t>(rng() % 4);
        auto g = oracle::random_graph(n, r, 3 + static_cast<std::int32_t>(rng() % 8), rng());
        for (std::int32_t k = 2; k <= 4; ++k) {
            std::int32_t s = r + static_cast<std::int32_t>(rng() % (2 * r));
            bool naive = oracle::naive_contains_config(g, s, k).has_value();
            auto fast = contains_config(g, s, k);
            REQUIRE(fast.verd != verdict::unknown);
            CHECK(naive == fast.found());
            if (fast.found()) {
                CHECK(fast.witness->span <= s);
                CHECK(static_cast<std::int32_t>(fast.witness->edge_indices.size()) == k);
            }
        }
    }
}

TEST_CASE("contains_config: monotone in s") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        auto g = oracle::random_graph(8, 3, 6, rng());
        for (std::int32_t k = 2; k <= 3; ++k)
            for (std::int32_t s = 3; s < 8; ++s)
                if (contains_config(g, s, k).found()) CHECK(contains_config(g, s + 1, k).found());
    }
}

TEST_CASE("is_family_free: frozen examples") {
    hyper_graph single(5, 3, {{0, 1, 2}});
    CHECK(is_family_free(single, 2).free());
    CHECK(is_family_free(single, 6).free());

    hyper_graph diamond4(6, 4, {{0, 1, 2, 3}, {2, 3, 4, 5}});
    CHECK(is_family_free(diamond4, 4).free());

    hyper_graph diamond3(4, 3, {{0, 1, 2}, {1, 2, 3}});
    auto rep = is_family_free(diamond3, 2);
    REQUIRE_FALSE(rep.free());
    CHECK(rep.violation->family.s == 4);
    CHECK(rep.violation->family.k == 2);
}

TEST_CASE("is_family_free: matches the naive oracle") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        std::int32_t r = 3 + static_cast<std::int32_t>(rng() % 2);
        auto g = oracle::random_graph(9, r, 3 + static_cast<std::int32_t>(rng() % 6), rng());
        for (std::int32_t k = 2; k <= 5; ++k) {
            auto rep = is_family_free(g, k);
            REQUIRE(rep.verd != verdict::unknown);
            CHECK(rep.free() == oracle::naive_is_free(g, k));
        }
    }
}

TEST_CASE("incremental check: frozen examples") {
    hyper_graph g1(5, 3, {{0, 1, 2}});
    CHECK_FALSE(incremental_free_check(g1, {1, 2, 3}, 2).free());
    CHECK(incremental_free_check(g1, {2, 3, 4}, 2).free());
    CHECK_THROWS_AS(incremental_free_check(g1, {0, 1, 2}, 2), error);
}

TEST_CASE("incremental check equals the full recheck") {
    std::mt19937_64 rng(1234);
    int done = 0;
    while (done < 500) {
        std::int32_t r = 3 + static_cast<std::int32_t>(rng() % 2);
        std::int32_t n = 8 + static_cast<std::int32_t>(rng() % 4);
        std::int32_t k = 2 + static_cast<std::int32_t>(rng() % 4);
        auto g = oracle::random_graph(n, r, 2 + static_cast<std::int32_t>(rng() % 6), rng());
        if (!is_family_free(g, k).free()) continue; // precondition

        std::vector<std::int32_t> e;
        while (static_cast<std::int32_t>(e.size()) < r) {
            auto v = static_cast<std::int32_t>(rng() % n);
            if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
        }
        std::sort(e.begin(), e.end());
        if (g.has_edge(e)) continue;

        auto inc = incremental_free_check(g, e, k);
        auto full = is_family_free(g.with_edge(e), k);
        REQUIRE(inc.verd != verdict::unknown);
        CHECK(inc.free() == full.free());
        ++done;
    }
}

TEST_CASE("incremental witness indices refer to the extended graph") {
    hyper_graph g(6, 3, {{0, 1, 2}, {3, 4, 5}});
    auto rep = incremental_free_check(g, {1, 2, 3}, 2);
    REQUIRE_FALSE(rep.free());
    auto ext = g.with_edge({1, 2, 3});
    edge_subset w(ext, rep.violation->edge_indices);
    CHECK(w.span() == rep.violation->span);
    CHECK(rep.violation->span <= 4);
}

TEST_CASE("node budget produces unknown, never a wrong answer") {
    auto g = oracle::random_graph(10, 3, 12, 7);
    auto res = contains_config(g, 7, 5, budget{3});
    CHECK(res.verd == verdict::unknown);
    auto rep = is_family_free(g, 5, budget{2});
    CHECK(rep.verd != verdict::free);
}

TEST_CASE("forbidden family membership list") {
    auto fam = forbidden_family(4, 4);
    REQUIRE(fam.size() == 3);
    CHECK(fam[0].s == 5);
    CHECK(fam[0].k == 2);
    CHECK(fam[1].s == 7);
    CHECK(fam[1].k == 3);
    CHECK(fam[2].s == 10);
    CHECK(fam[2].k == 4);
}
