#include <doctest.h>

#include <random>

#include "gndb/canonical.hpp"
#include "gndb/families.hpp"
#include "gndb/graph6.hpp"
#include "oracles.hpp"

using namespace gndb;

TEST_CASE("graph6 golden vectors") {
  CHECK(graph6_encode(complete(3)) == "Bw");
  CHECK(graph6_encode(complete(4)) == "C~");
  CHECK(graph6_encode(Graph(1)) == "@");
  CHECK(graph6_decode("Bw") == complete(3));
  CHECK(graph6_decode("C~") == complete(4));
  CHECK(graph6_decode("@") == Graph(1));
}

TEST_CASE("decode tolerates the optional header and trailing newline") {
  CHECK(graph6_decode(">>graph6<<Bw") == complete(3));
  CHECK(graph6_decode("Bw\n") == complete(3));
}

TEST_CASE("malformed inputs raise distinct errors") {
  auto kind_of = [](std::string_view s) {
    try {
      graph6_decode(s);
    } catch (const DecodeError& e) {
      return e.kind();
    }
    FAIL("expected DecodeError for: ", s);
    return DecodeError::Kind::kEmpty;
  };
  CHECK(kind_of("") == DecodeError::Kind::kEmpty);
  CHECK(kind_of("B!") == DecodeError::Kind::kBadCharacter);      // '!' = 33 in the bit field
  CHECK(kind_of("Bw!") == DecodeError::Kind::kTrailingGarbage);  // length checked first
  CHECK(kind_of("C") == DecodeError::Kind::kTruncated);          // K_4 needs one bit byte
  CHECK(kind_of("~?") == DecodeError::Kind::kTruncated);         // long form cut short
  CHECK(kind_of("Bww") == DecodeError::Kind::kTrailingGarbage);
  CHECK(kind_of("Ao") == DecodeError::Kind::kDirtyPadding);      // n=2: pad bits set
  CHECK(kind_of("?") == DecodeError::Kind::kUnsupportedOrder);   // n = 0
  CHECK(kind_of("~~????") == DecodeError::Kind::kUnsupportedOrder);  // 8-byte form
  CHECK(kind_of(":Bw") == DecodeError::Kind::kUnsupportedVariant);   // sparse6
}

TEST_CASE("decode rejects orders above the 64-vertex cap") {
  // long form for n = 65: 65 = 0,1,2 in 6-bit chunks -> '?', '@', 'A'
  std::string s = "~?@A";
  CHECK_THROWS_AS(graph6_decode(s), DecodeError);
}

TEST_CASE("round-trip identity on random graphs") {
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> size(1, 16);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int iter = 0; iter < 500; ++iter) {
    int n = size(rng);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng)) g.add_edge(u, v);
    CHECK(graph6_decode(graph6_encode(g)) == g);
  }
}

TEST_CASE("long-form orders 63 and 64 round-trip") {
  for (const Graph& g : {path(63), path(64), complete(64), cycle(63)}) {
    std::string s = graph6_encode(g);
    CHECK(s[0] == '~');
    CHECK(graph6_decode(s) == g);
  }
}

TEST_CASE("canonical graph6 of isomorphic inputs is identical") {
  std::mt19937 rng(37);
  Graph g = oracle::random_connected_graph(7, rng);
  Graph h = oracle::relabel(g, oracle::random_permutation(7, rng));
  CHECK(canonical_form(g) == canonical_form(h));
  // labeled encodings usually differ; canonical ones never do
  CHECK((graph6_encode(g) != graph6_encode(h) || g == h));
}

TEST_CASE("adjacency list parsing") {
  CHECK(adjlist_parse("0: 1\n1: 2") == path(3));
  Graph single(2);
  single.add_edge(0, 1);
  CHECK(adjlist_parse("0: 1 1\n1: 0") == single);  // duplicates collapse
  CHECK_THROWS_AS(adjlist_parse("0: 0"), std::invalid_argument);
  CHECK_THROWS_AS(adjlist_parse("0: x"), std::invalid_argument);
  CHECK_THROWS_AS(adjlist_parse("n 2\n0: 5"), std::invalid_argument);
  CHECK_THROWS_AS(adjlist_parse(""), std::invalid_argument);

  // comments, blank lines, explicit order with a trailing isolated vertex
  Graph with_isolated = adjlist_parse("# a comment\n\nn 3\n0: 1\n");
  CHECK(with_isolated.order() == 3);
  CHECK(with_isolated.edge_count() == 1);
}

TEST_CASE("adjlist emit/parse round-trip keeps isolated vertices") {
  std::mt19937 rng(41);
  for (int iter = 0; iter < 100; ++iter) {
    std::uniform_int_distribution<int> size(1, 10);
    std::uniform_int_distribution<int> coin(0, 3);
    int n = size(rng);
    Graph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v)
        if (coin(rng) == 0) g.add_edge(u, v);
    CHECK(adjlist_parse(adjlist_emit(g)) == g);
  }
}
