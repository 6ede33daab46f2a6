#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "pfu/constructions.hpp"
#include "pfu/parameters.hpp"

using namespace pfu;

TEST_SUITE("rational")
{
    TEST_CASE("arithmetic and parsing")
    {
        CHECK(Rational(2, 6) == Rational(1, 3));
        CHECK(Rational(1, -3) == Rational(-1, 3));
        CHECK(Rational::parse("2/3") == Rational(2, 3));
        CHECK(Rational::parse("1") == Rational(1));
        CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
        CHECK(Rational(1, 3) * Rational(3) == Rational(1));
        CHECK(Rational(1, 3) < Rational(10, 29));
        CHECK(Rational(7, 2).to_string() == "7/2");
        CHECK(Rational(4, 2).to_string() == "2");
        CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
        CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
        CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    }

    TEST_CASE("floor_times is exact")
    {
        for (int k = 1; k <= 20; ++k)
            for (int b = 0; b <= 2 * k + 1; ++b) CHECK(Rational(b, 2 * k + 1).floor_times(2 * k + 1) == b);
        CHECK(Rational(-1, 2).floor_times(1) == -1);
        CHECK(Rational(2, 3).floor_times(4) == 2);
    }
}

TEST_SUITE("parameters")
{
    TEST_CASE("min_degree and independence number")
    {
        CHECK(min_degree(remark1_graph(0)) == 4);
        CHECK(min_degree(remark1_graph(1)) == 5);
        CHECK(min_degree(cycle_graph(5)) == 2);
        CHECK(min_degree(complete_bipartite(3, 3)) == 3);

        CHECK(independence_number(remark1_graph(0)).alpha == 4);
        CHECK(independence_number(remark1_graph(1)).alpha == 6);
        CHECK(independence_number(complete_graph(7)).alpha == 1);
        CHECK(independence_number(cycle_graph(5)).alpha == 2);
    }

    TEST_CASE("independence number agrees with brute force")
    {
        std::mt19937_64 rng(67);
        for (int trial = 0; trial < 300; ++trial) {
            auto g = oracle::random_graph(1 + trial % 12, rng, 0.2 + 0.1 * (trial % 6));
            auto r = independence_number(g);
            CHECK(r.alpha == oracle::independence_number(g));
            CHECK(r.witness.size() == r.alpha);
            CHECK(g.is_independent(r.witness));
            for (int v : g.vertices() - r.witness) {
                auto bigger = r.witness;
                bigger.insert(v);
                CHECK_FALSE(g.is_independent(bigger));
            }
        }
    }

    TEST_CASE("neighborhood")
    {
        CHECK(neighborhood(remark2_graph(1), VertexSet::single(2)).size() == 3);
        CHECK(neighborhood(cycle_graph(5), VertexSet{}).empty());
        CHECK(neighborhood(complete_bipartite(1, 3), VertexSet::single(0)) == VertexSet::of({1, 2, 3}));
    }

    TEST_CASE("edge connectivity")
    {
        CHECK(edge_connectivity_at_least(cycle_graph(4), 2));
        CHECK_FALSE(edge_connectivity_at_least(path_graph(4), 2));
        CHECK(edge_connectivity_at_least(path_graph(4), 1));
        CHECK(edge_connectivity_at_least(remark1_graph(0), 2));
        CHECK(edge_connectivity_at_least(remark1_graph(0), 4));
        CHECK_FALSE(edge_connectivity_at_least(remark1_graph(0), 5));
        CHECK_FALSE(edge_connectivity_at_least(Graph::empty(2), 1));
        CHECK_THROWS_AS(edge_connectivity_at_least(cycle_graph(4), 0), std::invalid_argument);
    }

    TEST_CASE("vertex connectivity")
    {
        CHECK(vertex_connectivity(remark2_graph(1)) == 2);
        CHECK(vertex_connectivity(remark2_graph(2)) == 3);
        CHECK(vertex_connectivity(remark1_graph(0)) == 3);
        CHECK(vertex_connectivity(complete_graph(5)) == 4);
        CHECK(vertex_connectivity(path_graph(4)) == 1);
        CHECK(vertex_connectivity(Graph::empty(3)) == 0);
        CHECK_THROWS_AS(vertex_connectivity(complete_graph(1)), GraphError);

        std::mt19937_64 rng(71);
        for (int trial = 0; trial < 300; ++trial) {
            auto g = oracle::random_graph(2 + trial % 8, rng, 0.3 + 0.1 * (trial % 6));
            const int kappa = vertex_connectivity(g);
            CHECK(kappa == oracle::vertex_connectivity(g));
            CHECK(kappa <= min_degree(g));
            if (edge_connectivity_at_least(g, 1)) CHECK(components(g).size() == 1);
        }
    }

    TEST_CASE("independent set enumeration")
    {
        CHECK(enumerate_independent_sets(cycle_graph(7), 1).size() == 7);
        CHECK(enumerate_independent_sets(complete_graph(3), 2).empty());
        auto pairs = enumerate_independent_sets(cycle_graph(5), 2);
        CHECK(pairs.size() == 5);
        CHECK(pairs.front() == VertexSet::of({0, 2}));
        CHECK(std::is_sorted(pairs.begin(), pairs.end(),
                             [](VertexSet a, VertexSet b) { return a.to_vector() < b.to_vector(); }));
        CHECK(enumerate_independent_sets(cycle_graph(5), 0).size() == 1);

        std::mt19937_64 rng(73);
        for (int trial = 0; trial < 100; ++trial) {
            auto g = oracle::random_graph(1 + trial % 9, rng, 0.4);
            for (int size = 0; size <= g.order(); ++size) {
                std::size_t expect = 0;
                for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()); ++mask)
                    if (std::popcount(mask) == size && g.is_independent(VertexSet{mask})) ++expect;
                auto sets = enumerate_independent_sets(g, size);
                CHECK(sets.size() == expect);
                for (auto a : sets) CHECK_FALSE(a.intersects(neighborhood(g, a)));
            }
        }
    }

    TEST_CASE("first sufficient condition")
    {
        auto r1 = check_thm13_hypothesis(remark1_graph(0));
        CHECK_FALSE(r1.satisfied);
        REQUIRE(r1.witness);
        CHECK(r1.witness->size() == 4);
        CHECK(check_thm13_hypothesis(complete_graph(5)).satisfied);
        auto p4 = check_thm13_hypothesis(path_graph(4));
        CHECK_FALSE(p4.satisfied);
        CHECK_FALSE(p4.checks.at(0).pass);

        std::mt19937_64 rng(79);
        for (int trial = 0; trial < 300; ++trial) {
            auto g = oracle::random_graph(3 + trial % 8, rng, 0.8);
            auto rep = check_thm13_hypothesis(g);
            const bool direct = edge_connectivity_at_least(g, 2) &&
                                2 * min_degree(g) > oracle::independence_number(g) + 4;
            CHECK(rep.satisfied == direct);
            CHECK(thm13_hypothesis_holds(g) == direct);
        }
    }

    TEST_CASE("second sufficient condition")
    {
        Thm14Params p{1, Rational(1, 3)};
        CHECK(p.b() == 1);
        auto r2 = check_thm14_hypothesis(remark2_graph(1), p);
        CHECK_FALSE(r2.satisfied);
        CHECK_FALSE(r2.checks.at(0).pass);
        // At A = one K2 vertex: |N| = 3 against the bound 1/3 * 3 + 3 = 4.
        CHECK(Rational(1, 3) * Rational(8 - 5) + Rational(3) == Rational(4));
        CHECK_FALSE(r2.checks.at(2).pass);
        REQUIRE(r2.witness);
        CHECK(r2.witness->size() == 1);

        auto k6 = check_thm14_hypothesis(complete_graph(6), p);
        CHECK(k6.satisfied);
        CHECK_FALSE(k6.vacuous);
        CHECK(thm14_hypothesis_holds(complete_graph(6), p));

        // K6 has no independent pair, so b = 2 is vacuous.
        Thm14Params q{1, Rational(2, 3)};
        CHECK(q.b() == 2);
        auto vac = check_thm14_hypothesis(complete_graph(6), q);
        CHECK(vac.vacuous);

        CHECK_THROWS_AS(check_thm14_hypothesis(complete_graph(6), Thm14Params{1, Rational(1, 4)}), std::invalid_argument);
        CHECK_THROWS_AS(check_thm14_hypothesis(complete_graph(6), Thm14Params{0, Rational(1, 3)}), std::invalid_argument);
        CHECK_THROWS_AS(check_thm14_hypothesis(complete_graph(6), Thm14Params{1, Rational(4, 3)}), std::invalid_argument);
    }

    TEST_CASE("second condition report re-derives from scratch")
    {
        std::mt19937_64 rng(83);
        const Thm14Params settings[] = {{1, Rational(1, 3)}, {1, Rational(2, 3)}, {1, Rational(1)}, {2, Rational(1, 2)}};
        for (int trial = 0; trial < 200; ++trial) {
            auto g = oracle::random_graph(6 + trial % 7, rng, 0.75);
            for (const auto& p : settings) {
                const int n = g.order();
                const int b = p.b();
                bool ok = oracle::vertex_connectivity(g) >= p.k + 2;
                // n >= 5k + 3 - 3 / (5 gamma - 1)
                ok = ok && Rational(n) >= Rational(5 * p.k + 3) - Rational(3) / (Rational(5) * p.gamma - Rational(1));
                const Rational bound = p.gamma * Rational(n - 3 * p.k - 2) + Rational(p.k + 2);
                for (std::uint64_t mask = 0; ok && mask < (std::uint64_t{1} << n); ++mask) {
                    VertexSet a{mask};
                    if (a.size() != b || !g.is_independent(a)) continue;
                    if (!(Rational(neighborhood(g, a).size()) > bound)) ok = false;
                }
                CHECK(check_thm14_hypothesis(g, p).satisfied == ok);
                CHECK(thm14_hypothesis_holds(g, p) == ok);
            }
        }
    }
}
