#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "trigraph/gen.hpp"
#include "trigraph/oracle.hpp"
#include "trigraph/structure.hpp"

using namespace trigraph;

namespace {

Trigraph tri_plus_universal() {
  return Trigraph(4, {{0, 1, Adjacency::Strong},
                      {0, 2, Adjacency::Strong},
                      {1, 2, Adjacency::Strong},
                      {0, 3, Adjacency::Strong},
                      {1, 3, Adjacency::Strong},
                      {2, 3, Adjacency::Strong}});
}

}  // namespace

TEST_CASE("squares") {
  const Trigraph c4 = gen::gen_named("C4S");
  CHECK(is_square(c4, 0, 1, 2, 3));
  CHECK_FALSE(is_square(c4, 0, 2, 1, 3));
  CHECK(is_square(gen::gen_named("T8"), 0, 1, 3, 2));
  CHECK_THROWS_AS(is_square(c4, 0, 1, 2, 2), std::invalid_argument);
}

TEST_CASE("least square witness") {
  CHECK_FALSE(contains_square(gen::gen_named("C6S"), VertexSet::full(6)));
  const auto w = contains_square(gen::gen_named("C4S"), VertexSet::full(4));
  REQUIRE(w);
  CHECK(*w == std::array<Vertex, 4>{0, 1, 2, 3});
  const auto cm = contains_square(gen::gen_cliques_matching(3),
                                  VertexSet::full(6));
  REQUIRE(cm);
  CHECK(*cm == std::array<Vertex, 4>{0, 1, 4, 3});
}

TEST_CASE("homogeneous sets") {
  CHECK_FALSE(is_homogeneous_set(gen::gen_named("C6S"), VertexSet{0, 1}));
  CHECK(is_homogeneous_set(tri_plus_universal(), VertexSet{0, 1, 2}));
  CHECK_FALSE(is_homogeneous_set(gen::gen_named("C6S"), VertexSet::full(6)));
  CHECK_FALSE(is_homogeneous_set(gen::gen_named("C6S"), VertexSet{2}));
}

TEST_CASE("homogeneous pairs of strong cliques") {
  const Trigraph cm3 = gen::gen_cliques_matching(3);
  CHECK(is_hposc(cm3, CliquePair(VertexSet{0, 1}, VertexSet{3, 4})));
  const Trigraph c6 = gen::gen_named("C6S");
  CHECK_FALSE(is_hposc(c6, CliquePair(VertexSet{0}, VertexSet{1})));
  CHECK_FALSE(is_hposc(c6, CliquePair(VertexSet{0, 1}, VertexSet{3, 4})));
  CHECK_THROWS_AS(CliquePair(VertexSet{0, 1}, VertexSet{1, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(CliquePair(VertexSet{}, VertexSet{1}),
                  std::invalid_argument);
}

TEST_CASE("deletion-minimal pairs") {
  const Trigraph cm3 = gen::gen_cliques_matching(3);
  CHECK(is_deletion_minimal(cm3, CliquePair(VertexSet{0, 1}, VertexSet{3, 4})));
  CHECK(is_deletion_minimal(
      cm3, CliquePair(VertexSet{0, 1, 2}, VertexSet{3, 4, 5})));
  const Trigraph dm8 = gen::gen_named("DM8");
  CHECK(is_deletion_minimal(
      dm8, CliquePair(VertexSet{0, 1, 2, 3}, VertexSet{4, 5, 6, 7})));
}

TEST_CASE("square-connected pairs") {
  const Trigraph cm3 = gen::gen_cliques_matching(3);
  CHECK(is_square_connected(cm3, CliquePair(VertexSet{0, 1}, VertexSet{3, 4})));

  const Trigraph dm8 = gen::gen_named("DM8");
  const CliquePair whole(VertexSet{0, 1, 2, 3}, VertexSet{4, 5, 6, 7});
  CHECK_FALSE(is_square_connected(dm8, whole));
  CHECK(is_square_connected(dm8, CliquePair(VertexSet{0, 1}, VertexSet{4, 5})));
  CHECK(is_square_connected(dm8, CliquePair(VertexSet{2, 3}, VertexSet{6, 7})));

  // square-free pair
  const Trigraph tu = tri_plus_universal();
  CHECK_FALSE(is_square_connected(tu, CliquePair(VertexSet{0, 1}, VertexSet{2})));

  // non-HPOSC input is rejected
  const Trigraph c6 = gen::gen_named("C6S");
  CHECK_THROWS_AS(
      is_square_connected(c6, CliquePair(VertexSet{0, 1}, VertexSet{3, 4})),
      std::invalid_argument);
}

TEST_CASE("square-connectivity matches the bipartition definition") {
  // covers part sizes up to 6 via the matched-clique families
  const std::vector<Trigraph> fixtures = {
      gen::gen_cliques_matching(3), gen::gen_cliques_matching(5),
      gen::gen_cliques_matching(6), gen::gen_named("DM8"),
      gen::gen_named("T8"), gen::gen_named("C4S")};
  for (const Trigraph& g : fixtures) {
    for (const CliquePair& p :
         oracle::enumerate_hposcs(g, oracle::HposcKind::All)) {
      CHECK(is_square_connected(g, p) ==
            testutil::square_connected_by_bipartitions(g, p));
    }
  }
  oracle::for_each_connected_trigraph(4, [](const Trigraph& g) {
    for (const CliquePair& p :
         oracle::enumerate_hposcs(g, oracle::HposcKind::All))
      CHECK(is_square_connected(g, p) ==
            testutil::square_connected_by_bipartitions(g, p));
  });
}

TEST_CASE("square-connected implies deletion-minimal on fixtures") {
  const std::vector<Trigraph> fixtures = {
      gen::gen_cliques_matching(3), gen::gen_cliques_matching(4),
      gen::gen_named("DM8"), gen::gen_named("T8"), gen::gen_named("C4S")};
  for (const Trigraph& g : fixtures)
    for (const CliquePair& p :
         oracle::enumerate_hposcs(g, oracle::HposcKind::SquareConnected))
      CHECK(is_deletion_minimal(g, p));
}

TEST_CASE("skew intersection") {
  const CliquePair p1(VertexSet{1, 2}, VertexSet{3, 4});
  CHECK(have_skew_intersection(p1, CliquePair(VertexSet{2, 3}, VertexSet{5, 6})));
  CHECK_FALSE(
      have_skew_intersection(p1, CliquePair(VertexSet{1, 5}, VertexSet{3, 6})));
  CHECK_FALSE(
      have_skew_intersection(p1, CliquePair(VertexSet{7, 8}, VertexSet{9})));
}
