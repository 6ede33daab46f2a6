#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pfu/constructions.hpp"
#include "pfu/criteria.hpp"
#include "pfu/harness.hpp"
#include "pfu/sun.hpp"

using namespace pfu;

TEST_SUITE("criteria")
{
    TEST_CASE("kaneko_check examples")
    {
        auto k1 = kaneko_check(complete_graph(1));
        CHECK_FALSE(k1.holds);
        REQUIRE(k1.witness_x);
        CHECK(k1.witness_x->empty());
        CHECK(k1.sun_count == 1);
        CHECK(k1.bound == 0);

        auto star = kaneko_check(complete_bipartite(1, 3));
        CHECK_FALSE(star.holds);
        CHECK(*star.witness_x == VertexSet::single(0));
        CHECK(star.sun_count == 3);
        CHECK(star.bound == 2);

        CHECK(kaneko_check(path_graph(3)).holds);
    }

    TEST_CASE("covered_check_criterion examples")
    {
        auto g1 = delete_edge(remark1_graph(0), EdgeRef(3, 4));
        auto v1 = covered_check_criterion(g1);
        CHECK_FALSE(v1.holds);
        // A smaller violating X may exist; the clique itself must violate too.
        CHECK(witness_is_sound(g1, v1, true));
        CriterionVerdict at_clique;
        at_clique.holds = false;
        at_clique.witness_x = VertexSet::range(3);
        at_clique.sun_count = 5;
        at_clique.epsilon = 2;
        at_clique.bound = 4;
        CHECK(witness_is_sound(g1, at_clique, true));

        CHECK(covered_check_criterion(path_graph(3)).holds);
        CHECK(sun_count(path_graph(3), VertexSet::of({0, 2})) == 2);

        auto g2 = delete_edge(remark2_graph(1), EdgeRef(2, 3));
        CHECK_FALSE(covered_check_criterion(g2).holds);
        CHECK(sun_count(g2, VertexSet::range(8) - VertexSet::range(2)) == 4);
        CHECK(epsilon(g2, VertexSet::range(2)) == 2);

        CHECK_THROWS_AS(covered_check_criterion(Graph::empty(2)), GraphError);
    }

    TEST_CASE("covered_check_bruteforce examples")
    {
        CHECK(covered_check_bruteforce(complete_graph(3)).covered);
        auto e = covered_check_bruteforce(Graph::empty(2));
        CHECK_FALSE(e.covered);
        CHECK(e.edgeless);
        CHECK_FALSE(e.uncovered_edge);
        CHECK(covered_check_bruteforce(cycle_graph(4)).covered);
        CHECK(covered_check_bruteforce(path_graph(5)).covered);
        // Triangle with pendants at 0 and 1: the only factor is 3-0-2-1-4.
        auto bull = Graph::from_edges(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 4}});
        auto b = covered_check_bruteforce(bull);
        CHECK_FALSE(b.covered);
        CHECK(b.uncovered_edge == std::optional<EdgeRef>(EdgeRef(0, 1)));
        CHECK_FALSE(covered_check_criterion(bull).holds);
    }

    TEST_CASE("is_uniform examples")
    {
        auto r = is_uniform(remark1_graph(0));
        CHECK_FALSE(r.uniform);
        REQUIRE(r.witness_edge);
        CHECK(r.witness_edge->u >= 3);
        CHECK_FALSE(r.inner.covered);

        CHECK(is_uniform(cycle_graph(4)).uniform);

        auto k2 = is_uniform(complete_graph(2));
        CHECK_FALSE(k2.uniform);
        CHECK(k2.inner.edgeless);

        CHECK_THROWS_AS(is_uniform(Graph::empty(3)), GraphError);
    }

    TEST_CASE("uniformity agrees with pairwise form and oracle")
    {
        std::mt19937_64 rng(53);
        int uniform = 0;
        for (int trial = 0; trial < 300; ++trial) {
            auto g = oracle::random_graph(3 + trial % 4, rng, 0.7);
            if (g.size() < 2) continue;
            const bool u = is_uniform(g).uniform;
            CHECK(u == is_uniform_pairwise(g));
            CHECK(u == oracle::uniform(g));
            if (u) {
                ++uniform;
                CHECK(covered_check_bruteforce(g).covered);
            }
        }
        CHECK(uniform > 10);
    }

    TEST_CASE("coveredness agrees with oracle")
    {
        std::mt19937_64 rng(59);
        for (int trial = 0; trial < 300; ++trial) {
            auto g = oracle::random_graph(2 + trial % 5, rng, 0.6);
            CHECK(covered_check_bruteforce(g).covered == oracle::covered(g));
        }
    }

    TEST_CASE("witnesses are sound and pruning is harmless for n <= 6")
    {
        for (int n = 1; n <= 6; ++n) {
            GraphEnumerator all(n, EnumerationMode::all);
            while (auto g = all.next()) {
                auto pruned = kaneko_check(*g);
                auto full = kaneko_check(*g, {false});
                CHECK(pruned.holds == full.holds);
                CHECK(pruned.witness_x == full.witness_x);
                if (!pruned.holds) CHECK(witness_is_sound(*g, pruned, false));
                if (!is_connected(*g)) continue;
                auto cp = covered_check_criterion(*g);
                auto cf = covered_check_criterion(*g, {false});
                CHECK(cp.holds == cf.holds);
                CHECK(cp.witness_x == cf.witness_x);
                if (!cp.holds) CHECK(witness_is_sound(*g, cp, true));
            }
        }
    }

    TEST_CASE("witness is of minimum size")
    {
        std::mt19937_64 rng(61);
        for (int trial = 0; trial < 200; ++trial) {
            auto g = oracle::random_graph(2 + trial % 6, rng, 0.4);
            auto v = kaneko_check(g);
            if (v.holds) continue;
            const int size = v.witness_x->size();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask) {
                VertexSet x{mask};
                if (x.size() >= size) continue;
                const int suns = x == g.vertices() ? 0 : oracle::sun_count(delete_vertices(g, x));
                CHECK(suns <= 2 * x.size());
            }
        }
    }

    TEST_CASE("cross_validate")
    {
        auto k1 = cross_validate(complete_graph(1));
        CHECK_FALSE(k1.has_factor);
        CHECK_FALSE(k1.kaneko_holds);
        CHECK(k1.consistent());
        auto c = cross_validate(cycle_graph(6));
        CHECK(c.has_factor);
        CHECK(c.covered_bruteforce == std::optional<bool>(true));
        CHECK(c.covered_criterion == std::optional<bool>(true));
        auto d = cross_validate(Graph::empty(3));
        CHECK_FALSE(d.covered_bruteforce);
        CHECK(d.consistent());
    }
}
