#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "helpers.hpp"
#include "trigraph/antithicken.hpp"
#include "trigraph/gen.hpp"
#include "trigraph/oracle.hpp"

using namespace trigraph;

TEST_CASE("pair enumeration on fixtures") {
  CHECK(oracle::enumerate_hposcs(gen::gen_named("C6S"),
                                 oracle::HposcKind::SquareConnected)
            .empty());

  const Trigraph cm3 = gen::gen_cliques_matching(3);
  const auto sc = oracle::enumerate_hposcs(cm3,
                                           oracle::HposcKind::SquareConnected);
  REQUIRE(sc.size() == 4);
  CHECK(std::count(sc.begin(), sc.end(),
                   CliquePair(VertexSet{0, 1}, VertexSet{3, 4})) == 1);
  CHECK(std::count(sc.begin(), sc.end(),
                   CliquePair(VertexSet{0, 2}, VertexSet{3, 5})) == 1);
  CHECK(std::count(sc.begin(), sc.end(),
                   CliquePair(VertexSet{1, 2}, VertexSet{4, 5})) == 1);
  CHECK(std::count(sc.begin(), sc.end(),
                   CliquePair(VertexSet{0, 1, 2}, VertexSet{3, 4, 5})) == 1);

  const Trigraph dm8 = gen::gen_named("DM8");
  const auto dm8sc = oracle::enumerate_hposcs(
      dm8, oracle::HposcKind::SquareConnected);
  const CliquePair whole(VertexSet{0, 1, 2, 3}, VertexSet{4, 5, 6, 7});
  CHECK(std::count(dm8sc.begin(), dm8sc.end(), whole) == 0);
  CHECK(std::count(dm8sc.begin(), dm8sc.end(),
                   CliquePair(VertexSet{0, 1}, VertexSet{4, 5})) == 1);
  CHECK(std::count(dm8sc.begin(), dm8sc.end(),
                   CliquePair(VertexSet{2, 3}, VertexSet{6, 7})) == 1);
  const auto dm8dm = oracle::enumerate_hposcs(
      dm8, oracle::HposcKind::DeletionMinimal);
  CHECK(std::count(dm8dm.begin(), dm8dm.end(), whole) == 1);
}

TEST_CASE("canonical orientation and sorting") {
  const Trigraph cm3 = gen::gen_cliques_matching(3);
  const auto all = oracle::enumerate_hposcs(cm3);
  CHECK(std::is_sorted(all.begin(), all.end()));
  for (const CliquePair& p : all) {
    CHECK(p.a()[0] < p.b()[0]);  // least vertex sits in A
    CHECK(is_hposc(cm3, p));
  }
}

TEST_CASE("minimal pair containing a seed") {
  const Trigraph cm3 = gen::gen_cliques_matching(3);
  const auto r = oracle::minimal_hposc_containing(cm3, 0, 1);
  REQUIRE(r);
  CHECK(*r == CliquePair(VertexSet{0, 1}, VertexSet{3, 4}));
  CHECK_FALSE(oracle::minimal_hposc_containing(gen::gen_named("C6S"), 0, 1));
  const auto t8 = oracle::minimal_hposc_containing(gen::gen_named("T8"), 0, 1);
  REQUIRE(t8);
  CHECK(*t8 == CliquePair(VertexSet{0, 1}, VertexSet{2, 3}));
  CHECK_THROWS_AS(oracle::minimal_hposc_containing(cm3, 0, 4),
                  std::invalid_argument);
}

TEST_CASE("seeds outside every square have no minimal pair") {
  // A four-clique {0,1,2,3} over a strong edge {4,5}: the pair
  // ({0,1,2,3},{4,5}) is a homogeneous pair of strong cliques whose union
  // contains the square 2 3 5 4, yet no square passes through the strongly
  // adjacent seed {0,1}.  Growth and oracle must both report absent.
  const Trigraph g(6, {{0, 1, Adjacency::Strong}, {0, 2, Adjacency::Strong},
                       {0, 3, Adjacency::Strong}, {1, 2, Adjacency::Strong},
                       {1, 3, Adjacency::Strong}, {2, 3, Adjacency::Strong},
                       {4, 5, Adjacency::Strong}, {2, 4, Adjacency::Strong},
                       {3, 5, Adjacency::Strong}});
  const CliquePair big(VertexSet{0, 1, 2, 3}, VertexSet{4, 5});
  REQUIRE(is_hposc(g, big));
  REQUIRE(contains_square(g, big.both()).has_value());
  CHECK_FALSE(oracle::square_through(g, 0, 1));
  CHECK_FALSE(schposc(g, 0, 1));
  CHECK_FALSE(oracle::minimal_hposc_containing(g, 0, 1));
  // seeds that do sit in the square recover the pair that hosts it
  const auto r = schposc(g, 2, 3);
  REQUIRE(r);
  CHECK(*r == *oracle::minimal_hposc_containing(g, 2, 3));
}

TEST_CASE("laminarity by enumeration") {
  CHECK(oracle::laminar_by_enumeration(gen::gen_named("C6S")));
  CHECK(oracle::laminar_by_enumeration(gen::gen_named("C6SEMI")));
  CHECK_FALSE(oracle::laminar_by_enumeration(gen::gen_named("T8")));
}

TEST_CASE("antithickening enumeration") {
  const Trigraph c6semi = gen::gen_named("C6SEMI");
  const auto all = oracle::enumerate_antithickenings(c6semi);
  bool has_identity = false;
  for (const auto& [gp, map] : all) {
    CHECK(verify_thickening(gp, map, c6semi));
    if (gp == c6semi && map == ThickeningMap::identity(6)) has_identity = true;
  }
  CHECK(has_identity);

  const Trigraph c4 = gen::gen_named("C4S");
  const auto c4all = oracle::enumerate_antithickenings(c4);
  CHECK(c4all.size() == 3);  // identity plus the two opposite-edge splits
  int laminar_two_part = 0;
  for (const auto& [gp, map] : c4all) {
    if (map.source_size() == 2) {
      CHECK(gp.theta(0, 1) == Adjacency::Semi);
      CHECK(oracle::laminar_by_enumeration(gp));
      ++laminar_two_part;
    } else {
      CHECK_FALSE(oracle::laminar_by_enumeration(gp));
    }
  }
  CHECK(laminar_two_part == 2);
}

TEST_CASE("the thickened fixture has one vertex-maximal laminar quotient") {
  const Trigraph t8 = gen::gen_named("T8");
  const auto all = oracle::enumerate_antithickenings(t8);
  int best = -1;
  std::vector<Trigraph> winners;
  for (const auto& [gp, map] : all) {
    if (!oracle::laminar_by_enumeration(gp)) continue;
    if (map.source_size() > best) {
      best = map.source_size();
      winners.clear();
    }
    if (map.source_size() == best) winners.push_back(gp);
  }
  REQUIRE(best == 6);
  REQUIRE(winners.size() == 1);
  CHECK(oracle::are_isomorphic(winners[0], gen::gen_named("C6SEMI")));
}

TEST_CASE("chained antithickenings compose") {
  const Trigraph t8 = gen::gen_named("T8");
  const auto first = oracle::enumerate_antithickenings(t8);
  int checked = 0;
  for (const auto& [gp, i1] : first) {
    if (gp.vertex_count() == t8.vertex_count()) continue;
    for (const auto& [gpp, i2] : oracle::enumerate_antithickenings(gp)) {
      CHECK(verify_thickening(gpp, compose_thickenings(i2, i1), t8));
      if (++checked >= 50) return;
    }
  }
}

TEST_CASE("isomorphism") {
  const Trigraph t8 = gen::gen_named("T8");
  CHECK(oracle::are_isomorphic(t8, t8));
  CHECK_FALSE(oracle::are_isomorphic(gen::gen_named("C6S"),
                                     gen::gen_named("C6SEMI")));
  CHECK(oracle::are_isomorphic(gen::gen_cliques_matching(2),
                               gen::gen_named("C4S")));
  // relabelling invariance
  const Trigraph rev = testutil::reversed(gen::gen_named("DM8"));
  CHECK(oracle::are_isomorphic(gen::gen_named("DM8"), rev));
  CHECK_FALSE(oracle::are_isomorphic(gen::gen_named("C6S"),
                                     gen::gen_named("TRI")));
}

TEST_CASE("caps refuse oversized inputs") {
  const Trigraph big(15);
  CHECK_THROWS_AS(oracle::enumerate_hposcs(big), CapExceeded);
  CHECK_THROWS_AS(oracle::enumerate_antithickenings(gen::gen_named("C4_JOIN_C5")),
                  CapExceeded);
  const Trigraph eleven(11);
  CHECK_THROWS_AS(oracle::are_isomorphic(eleven, eleven), CapExceeded);
  // explicit caps relax the default
  CHECK_NOTHROW(oracle::enumerate_hposcs(big, oracle::HposcKind::All, 15));
}

TEST_CASE("catalog enumeration visits connected trigraphs once") {
  int count2 = 0;
  oracle::for_each_connected_trigraph(2, [&](const Trigraph& g) {
    CHECK(is_connected(g));
    ++count2;
  });
  CHECK(count2 == 2);  // strong edge, semiedge

  int count3 = 0;
  oracle::for_each_connected_trigraph(3, [&](const Trigraph&) { ++count3; });
  // 20 matching-valid assignments on 3 vertices; 7 of them disconnected
  CHECK(count3 == 13);
}

TEST_CASE("sampling is deterministic") {
  std::mt19937_64 a(99), b(99);
  const Trigraph g1 = oracle::sample_trigraph(7, a);
  const Trigraph g2 = oracle::sample_trigraph(7, b);
  CHECK(g1 == g2);
}
