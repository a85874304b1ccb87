#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "snclab/blowup.hpp"
#include "snclab/fixtures.hpp"
#include "snclab/search.hpp"
#include "support.hpp"

using namespace snclab;
using namespace snclab::test;

TEST_CASE("an isolated vertex blows up into isolated copies")
{
    Relation g(1);
    auto [blown, map] = blow_up_oriented(g, weights_of({5}));
    CHECK(blown.size() == 5);
    CHECK(blown.edge_count() == 0);
    CHECK(map.total_size() == 5);
}

TEST_CASE("one edge becomes a complete bipartite orientation")
{
    Relation g(2);
    g.add(0, 1);
    auto [blown, map] = blow_up_oriented(g, weights_of({2, 3}));
    CHECK(blown.size() == 5);
    CHECK(blown.edge_count() == 6);
    for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 3; ++j)
            CHECK(blown.contains(map.copy_id(0, i), map.copy_id(1, j)));
    CHECK(is_oriented(blown));
}

TEST_CASE("weights must be positive integers")
{
    Relation g(2);
    g.add(0, 1);
    WeightVector zero = weights_of({1, 0});
    CHECK_THROWS_AS(blow_up_oriented(g, zero), PreconditionError);

    WeightVector fractional(2);
    fractional(0) = Rational(3, 2);
    fractional(1) = 1;
    CHECK_THROWS_AS(blow_up_oriented(g, fractional), PreconditionError);

    CHECK_THROWS_AS(blow_up_oriented(identity(2), weights_of({1, 1})), PreconditionError);
}

TEST_CASE("blow-up map bookkeeping")
{
    BlowupMap map(std::vector<Eigen::Index>{2, 1, 3});
    CHECK(map.original_size() == 3);
    CHECK(map.total_size() == 6);
    CHECK(map.copy_begin(2) == 3);
    CHECK(map.copy_id(2, 2) == 5);
    CHECK(map.origin(0) == 0);
    CHECK(map.origin(1) == 0);
    CHECK(map.origin(2) == 1);
    CHECK(map.origin(5) == 2);
    CHECK_THROWS_AS((void)map.copy_id(1, 1), DimensionError);
    CHECK_THROWS_AS((void)map.origin(6), DimensionError);
}

TEST_CASE("vertex count is the total weight and orientedness survives")
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Relation g = random_oriented(5, seed);
        WeightVector w = random_integer_weights(5, seed + 50, 1, 4);
        auto [blown, map] = blow_up_oriented(g, w);
        Rational total{0};
        for (Eigen::Index v = 0; v < 5; ++v)
            total += w(v);
        CHECK(Rational(static_cast<long>(blown.size())) == total);
        CHECK(is_oriented(blown));
    }
}

TEST_CASE("weighted wsnp verdicts equal per-copy snp verdicts")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Relation g = random_oriented(5, 100 + seed);
        WeightVector w = random_integer_weights(5, 200 + seed, 1, 4);
        auto [blown, map] = blow_up_oriented(g, w);

        InequalityReport weighted = wsnp_report(g, w);
        InequalityReport unweighted = wsnp_report(blown, uniform_weights(blown.size()));
        for (Vertex v = 0; v < 5; ++v)
            for (Eigen::Index i = 0; i < map.copy_count(v); ++i)
                CHECK(unweighted.rows[map.copy_id(v, i)].satisfied ==
                    weighted.rows[v].satisfied);
    }
}

TEST_CASE("pair blow-up keeps the identity hypothesis")
{
    for (std::uint64_t index = 0; index < 40; ++index) {
        DigraphPair p = sample_pair(4, HypothesisMode::Identity, 77, index);
        WeightVector w = random_integer_weights(4, 300 + index, 1, 4);
        auto [blown, map] = blow_up_pair(p, w);
        CHECK(check_identity_hypothesis(blown));
    }
}

TEST_CASE("pair blow-up needs the identity hypothesis")
{
    Relation a = identity(2), b = identity(2);
    a.add(0, 1);
    b.add(1, 0);
    CHECK_THROWS_AS(blow_up_pair(DigraphPair(a, b), weights_of({1, 2})), PreconditionError);
}

TEST_CASE("unit weights reproduce the pair")
{
    Fixture f = load_fixture(1);
    auto [blown, map] = blow_up_pair(f.pair, uniform_weights(6));
    CHECK(blown.a == f.pair.a);
    CHECK(blown.b == f.pair.b);
    CHECK(map.total_size() == 6);
}

TEST_CASE("margins of copies equal the weighted margins of the originals")
{
    // fixtures first
    for (int id : {1, 2}) {
        Fixture f = load_fixture(id);
        auto [blown, map] = blow_up_pair(f.pair, f.weights);
        for (Variant variant : {Variant::Product, Variant::Union}) {
            InequalityReport weighted = product_inequality_report(f.pair, f.weights, variant);
            InequalityReport unweighted =
                product_inequality_report(blown, uniform_weights(blown.size()), variant);
            for (Vertex v = 0; v < 6; ++v)
                for (Eigen::Index i = 0; i < map.copy_count(v); ++i)
                    CHECK(unweighted.rows[map.copy_id(v, i)].margin ==
                        weighted.rows[v].margin);
        }
    }

    // then random valid pairs
    for (std::uint64_t index = 0; index < 100; ++index) {
        DigraphPair p = sample_pair(4, HypothesisMode::Identity, 1234, index);
        WeightVector w = random_integer_weights(4, 400 + index, 1, 4);
        auto [blown, map] = blow_up_pair(p, w);
        for (Variant variant : {Variant::Product, Variant::Union}) {
            InequalityReport weighted = product_inequality_report(p, w, variant);
            InequalityReport unweighted =
                product_inequality_report(blown, uniform_weights(blown.size()), variant);
            for (Vertex v = 0; v < 4; ++v)
                for (Eigen::Index i = 0; i < map.copy_count(v); ++i)
                    CHECK(unweighted.rows[map.copy_id(v, i)].margin ==
                        weighted.rows[v].margin);
        }
    }
}

TEST_CASE("scaling the weights scales the blow-up consistently")
{
    Fixture f = load_fixture(1);
    const long k = 3;
    WeightVector scaled = f.weights * Rational(k);
    auto [blown, map] = blow_up_pair(f.pair, scaled);
    CHECK(map.total_size() == k * 36);

    InequalityReport weighted = product_inequality_report(f.pair, scaled, Variant::Product);
    InequalityReport unweighted =
        product_inequality_report(blown, uniform_weights(blown.size()), Variant::Product);
    for (Vertex v = 0; v < 6; ++v) {
        CHECK(weighted.rows[v].margin == -k); // margins scale with the weights
        for (Eigen::Index i = 0; i < map.copy_count(v); ++i)
            CHECK(unweighted.rows[map.copy_id(v, i)].margin == weighted.rows[v].margin);
    }
}
