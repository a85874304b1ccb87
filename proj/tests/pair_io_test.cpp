#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "snclab/fixtures.hpp"
#include "snclab/pair_io.hpp"
#include "snclab/search.hpp"
#include "support.hpp"

using namespace snclab;
using namespace snclab::test;

namespace {
    const char * fixture1_json = R"({
      "n": 6,
      "a": [[1,2,5,6],[2,3],[1,3,4,5],[1,4],[2,5,6],[2,3,6]],
      "b": [[1,2,5,6],[2,3,4],[1,3,4,5],[1,4,6],[2,4,5,6],[2,3,6]],
      "weights": ["7","3","11","3","3","9"]
    })";
}

TEST_CASE("parsing the first table")
{
    PairDocument doc = parse_pair_document(fixture1_json);
    CHECK(doc.n == 6);
    DigraphPair pair = document_to_pair(doc);
    Fixture f = load_fixture(1);
    CHECK(pair.a == f.pair.a);
    CHECK(pair.b == f.pair.b);
    CHECK(document_weights(doc) == f.weights);
}

TEST_CASE("round trip is the identity")
{
    for (std::uint64_t index = 0; index < 30; ++index) {
        DigraphPair p = sample_pair(5, HypothesisMode::Identity, 12, index);
        WeightVector w = random_rational_weights(5, 300 + index);
        PairDocument doc = make_document(p, &w);
        PairDocument again = parse_pair_document(serialize_pair_document(doc));
        CHECK(again == doc);
        DigraphPair q = document_to_pair(again);
        CHECK(q.a == p.a);
        CHECK(q.b == p.b);
        CHECK(document_weights(again) == w);
    }
}

TEST_CASE("weights are canonicalised on input")
{
    PairDocument doc = parse_pair_document(
        R"({"n":1,"a":[[1]],"b":[[1]],"weights":["3/6"]})");
    CHECK((*doc.weights)[0] == "1/2");
    CHECK(document_weights(doc)(0) == Rational(1, 2));
}

TEST_CASE("missing weights default to all ones")
{
    PairDocument doc = parse_pair_document(R"({"n":2,"a":[[1],[2]],"b":[[1],[2]]})");
    CHECK(document_weights(doc) == uniform_weights(2));
}

TEST_CASE("labels survive the round trip")
{
    DigraphPair p(identity(2), identity(2));
    std::vector<std::string> labels{"left", "right"};
    PairDocument doc = make_document(p, nullptr, &labels);
    PairDocument again = parse_pair_document(serialize_pair_document(doc));
    REQUIRE(again.labels.has_value());
    CHECK((*again.labels)[1] == "right");
}

TEST_CASE("diagnostics carry document positions")
{
    auto where_of = [](const std::string & text) {
        try {
            parse_pair_document(text);
        }
        catch (const ParseError & e) {
            return e.where();
        }
        return std::string("(no error)");
    };

    CHECK(where_of(R"({"n":2,"a":[[1],[3]],"b":[[1],[2]]})") == "a[1][0]");
    CHECK(where_of(R"({"n":2,"a":[[1],[0]],"b":[[1],[2]]})") == "a[1][0]");
    CHECK(where_of(R"({"n":2,"a":[[1],[2]],"b":[[1],[2,2]]})") == "b[1][1]");
    CHECK(where_of(R"({"n":2,"a":[[1]],"b":[[1],[2]]})") == "a");
    CHECK(where_of(R"({"n":2,"a":[[1],[2]],"b":[[1],[2]],"weights":["1"]})") == "weights");
    CHECK(where_of(R"({"n":2,"a":[[1],[2]],"b":[[1],[2]],"weights":["1","-2"]})") ==
        "weights[1]");
    CHECK(where_of(R"({"n":2,"a":[[1],[2]],"b":[[1],[2]],"weights":["1","1/0"]})") ==
        "weights[1]");
    CHECK(where_of(R"({"n":2,"a":[[1],[2]],"b":[[1],[2]],"extra":1})") == "extra");
    CHECK(where_of(R"({"n":-1,"a":[],"b":[]})") == "n");
    CHECK(where_of(R"({"n":2,"a":[[1],[2]],"b":[[1],[2]],"weights":[1,2]})") ==
        "weights[0]");
}

TEST_CASE("json syntax errors are wrapped")
{
    CHECK_THROWS_AS(parse_pair_document("{"), ParseError);
    CHECK_THROWS_AS(parse_pair_document("[1,2]"), ParseError);
    CHECK_THROWS_AS(parse_pair_document(""), ParseError);
}

TEST_CASE("adjacency lists come back sorted")
{
    PairDocument doc = parse_pair_document(R"({"n":3,"a":[[3,1],[2],[3]],"b":[[1],[2],[3]]})");
    CHECK(doc.a[0] == std::vector<Eigen::Index>{1, 3});
    DigraphPair p = document_to_pair(doc);
    PairDocument out = make_document(p);
    CHECK(out.a[0] == std::vector<Eigen::Index>{1, 3});
}

TEST_CASE("empty graphs serialize")
{
    PairDocument doc = parse_pair_document(R"({"n":0,"a":[],"b":[]})");
    CHECK(doc.n == 0);
    DigraphPair p = document_to_pair(doc);
    CHECK(p.size() == 0);
    CHECK(parse_pair_document(serialize_pair_document(make_document(p))) == make_document(p));
}
