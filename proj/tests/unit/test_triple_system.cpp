#include <doctest.h>

#include <stdexcept>

#include "t5census/constructions.hpp"
#include "t5census/triple_system.hpp"

using namespace t5census;

namespace {
TripleSystem make_t5() { return TripleSystem(5, {{0, 1, 2}, {0, 1, 3}, {0, 1, 4}, {2, 3, 4}}); }
}  // namespace

TEST_CASE("colex ranks and round-trips") {
  CHECK(triple_index(0, 1, 2) == 0);
  CHECK(triple_index(0, 1, 3) == 1);
  CHECK(triple_index(0, 2, 3) == 2);
  CHECK(triple_index(1, 2, 3) == 3);
  CHECK(triple_index(0, 1, 4) == 4);
  CHECK(triple_index(2, 3, 4) == 9);
  for (std::uint64_t t = 0; t < choose3(12); ++t) {
    auto e = triple_unrank(t);
    CHECK(e[0] < e[1]);
    CHECK(e[1] < e[2]);
    CHECK(triple_index(e[0], e[1], e[2]) == t);
  }
  CHECK(pair_index(0, 1) == 0);
  CHECK(pair_index(0, 2) == 1);
  CHECK(pair_index(1, 2) == 2);
  for (std::uint64_t q = 0; q < choose2(12); ++q) {
    auto e = pair_unrank(q);
    CHECK(pair_index(e[0], e[1]) == q);
  }
  CHECK_THROWS_AS(triple_index(1, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(triple_index(2, 1, 3), std::invalid_argument);
  CHECK_THROWS_AS(triple_index(-1, 1, 2), std::invalid_argument);
}

TEST_CASE("construction, membership and immutability") {
  TripleSystem h = make_t5();
  CHECK(h.n() == 5);
  CHECK(h.edge_count() == 4);
  CHECK(h.has(0, 1, 2));
  CHECK(h.has(2, 3, 4));
  CHECK_FALSE(h.has(0, 2, 3));
  TripleSystem g = h.with_edge(0, 2, 3);
  CHECK(g.edge_count() == 5);
  CHECK_FALSE(h.has(0, 2, 3));
  CHECK(g.without_edge(0, 2, 3) == h);
  auto edges = h.edges();
  REQUIRE(edges.size() == 4);
  CHECK(edges[0] == std::array<int, 3>{0, 1, 2});
  CHECK(edges[3] == std::array<int, 3>{2, 3, 4});
  CHECK(h.edge_indices() == std::vector<std::uint64_t>{0, 1, 4, 9});
  CHECK_THROWS_AS(TripleSystem(2), std::invalid_argument);
  CHECK_THROWS_AS(TripleSystem(65), std::invalid_argument);
  CHECK_THROWS_AS(h.has(0, 1, 5), std::invalid_argument);
}

TEST_CASE("serialization golden strings and round-trips") {
  TripleSystem h = make_t5();
  CHECK(h.to_hex_string() == "n=5;edges=0000000000000213");
  CHECK(h.to_triples_string() == "n=5;triples=0-1-2,0-1-3,0-1-4,2-3-4");
  CHECK(TripleSystem::from_string(h.to_hex_string()) == h);
  CHECK(TripleSystem::from_string(h.to_triples_string()) == h);
  CHECK(TripleSystem::from_string("n=5;triples=") == TripleSystem(5));

  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    TripleSystem r = random_triple_system(12, 0.3, seed);  // 220 bits, 4 words
    CHECK(TripleSystem::from_string(r.to_hex_string()) == r);
    CHECK(TripleSystem::from_string(r.to_triples_string()) == r);
  }
  TripleSystem big(64);
  CHECK(TripleSystem::from_string(big.to_hex_string()) == big);
}

TEST_CASE("serialization rejects malformed input") {
  CHECK_THROWS_AS(TripleSystem::from_string("edges=00"), std::invalid_argument);
  CHECK_THROWS_AS(TripleSystem::from_string("n=2;edges=0000000000000000"),
                  std::invalid_argument);
  CHECK_THROWS_AS(TripleSystem::from_string("n=5;edges=213"), std::invalid_argument);
  CHECK_THROWS_AS(TripleSystem::from_string("n=5;edges=00000000000zzz13"),
                  std::invalid_argument);
  CHECK_THROWS_AS(TripleSystem::from_string("n=5;edges=8000000000000213"),
                  std::invalid_argument);  // bit beyond C(5,3)
  CHECK_THROWS_AS(TripleSystem::from_string("n=5;triples=0-1"), std::invalid_argument);
  CHECK_THROWS_AS(TripleSystem::from_string("n=5;triples=0-1-5"), std::invalid_argument);
  CHECK_THROWS_AS(TripleSystem::from_string("n=5;triples=0-1-2,0-1-2"), std::invalid_argument);
  CHECK_THROWS_AS(TripleSystem::from_string("n=5;stuff=00"), std::invalid_argument);
}

TEST_CASE("partitions, classification and neighborhoods") {
  TripleSystem h = make_t5();
  OrderedPartition p = make_partition(5, 0b00011);  // X = {0,1}
  CHECK(p.x_size() == 2);
  CHECK(p.y_size() == 3);
  CHECK(p.x_vertices() == std::vector<int>{0, 1});
  CHECK(p.y_vertices() == std::vector<int>{2, 3, 4});
  CHECK(partition_from_prefix(5, 2) == p);

  EdgeClassification c = classify_edges(h, p);
  CHECK(c.consistent == std::vector<std::uint64_t>{0, 1, 4});
  CHECK(c.inconsistent == std::vector<std::uint64_t>{9});
  CHECK(c.d_p == 1);

  CHECK(neighborhood(h, 0, 1) == VertexMask{0b11100});
  CHECK(neighborhood(h, 2, 3) == VertexMask{0b10000});
  CHECK(neighborhood(h, 3, 4) == VertexMask{0b00100});

  PairGraph xy = link(h, 0, p, LinkSides::XY);
  CHECK(xy.edge_count() == 3);  // {1,2}, {1,3}, {1,4}
  CHECK(xy.has(1, 2));
  CHECK(xy.has(1, 4));
  CHECK(link(h, 0, p, LinkSides::YY).edge_count() == 0);
  CHECK(link(h, 2, p, LinkSides::YY).edge_count() == 1);  // {3,4}

  CHECK(pair_link_restricted(h, 0, 1, 0b11111) == VertexMask{0b11100});
  CHECK(pair_link_restricted(h, 0, 1, 0b01100) == VertexMask{0b01100});
}

TEST_CASE("shadow graph collects X-Y pairs of 1-in-X edges") {
  TripleSystem h(4, {{0, 1, 3}});
  OrderedPartition p = make_partition(4, 0b0101);  // X = {0,2}
  PairGraph sg = shadow_graph(h, p);
  CHECK(sg.edge_count() == 2);
  CHECK(sg.has(0, 1));
  CHECK(sg.has(0, 3));
  CHECK_FALSE(sg.has(1, 3));

  // 2-in-X edges contribute nothing
  OrderedPartition q = make_partition(4, 0b1001);  // X = {0,3}
  CHECK(shadow_graph(h, q).edge_count() == 0);
}

TEST_CASE("pair graph basics") {
  PairGraph g(5);
  CHECK(g.edge_count() == 0);
  g.add(1, 3);
  g.add(0, 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.has(1, 3));
  CHECK(g.has(3, 1));
  CHECK_FALSE(g.has(0, 1));
  auto edges = g.edges();
  REQUIRE(edges.size() == 2);
  CHECK(edges[0] == std::array<int, 2>{1, 3});  // colex order
  CHECK(edges[1] == std::array<int, 2>{0, 4});
  CHECK_THROWS_AS(g.add(0, 5), std::invalid_argument);
  CHECK_THROWS_AS(PairGraph(-1), std::invalid_argument);
}
