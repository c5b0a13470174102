#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "trigraph/gen.hpp"
#include "trigraph/thickening.hpp"

using namespace trigraph;

namespace {

ThickeningMap t8_map() {
  return ThickeningMap(
      8, {VertexSet{0, 1}, VertexSet{2, 3}, VertexSet{4}, VertexSet{5},
          VertexSet{6}, VertexSet{7}});
}

}  // namespace

TEST_CASE("identity maps verify") {
  for (const char* name : {"C4S", "C6S", "C6SEMI", "T8", "DM8"}) {
    const Trigraph g = gen::gen_named(name);
    CHECK(verify_thickening(g, ThickeningMap::identity(g.vertex_count()), g));
  }
}

TEST_CASE("the thickened fixture verifies against its base") {
  const Trigraph base = gen::gen_named("C6SEMI");
  const Trigraph t8 = gen::gen_named("T8");
  CHECK(verify_thickening(base, t8_map(), t8));
}

TEST_CASE("a collapsed semiedge relation fails verification") {
  // making part 0 strongly complete to part 1 contradicts their semiedge
  const Trigraph t8 = gen::gen_named("T8");
  std::vector<PairValue> pairs;
  for (const PairValue& p : t8.pairs()) pairs.push_back(p);
  pairs.push_back({0, 3, Adjacency::Strong});
  pairs.push_back({1, 2, Adjacency::Strong});
  const Trigraph collapsed(8, pairs);
  CHECK_FALSE(verify_thickening(gen::gen_named("C6SEMI"), t8_map(), collapsed));
}

TEST_CASE("verification rejects structural defects") {
  const Trigraph base = gen::gen_named("C6SEMI");
  const Trigraph t8 = gen::gen_named("T8");
  // overlapping parts
  const ThickeningMap overlap(
      8, {VertexSet{0, 1}, VertexSet{1, 2, 3}, VertexSet{4}, VertexSet{5},
          VertexSet{6}, VertexSet{7}});
  CHECK_FALSE(verify_thickening(base, overlap, t8));
  // a non-covering map
  const ThickeningMap gap(
      8, {VertexSet{0, 1}, VertexSet{2, 3}, VertexSet{4}, VertexSet{5},
          VertexSet{6}, VertexSet{6}});
  CHECK_FALSE(verify_thickening(base, gap, t8));
  // arity mismatch throws
  CHECK_THROWS_AS(verify_thickening(gen::gen_named("C4S"), t8_map(), t8),
                  std::invalid_argument);
}

TEST_CASE("composition identities") {
  const ThickeningMap m = t8_map();
  CHECK(compose_thickenings(ThickeningMap::identity(6), m) == m);
  CHECK(compose_thickenings(m, ThickeningMap::identity(8)) == m);
  CHECK_THROWS_AS(compose_thickenings(m, ThickeningMap::identity(6)),
                  std::invalid_argument);
}

TEST_CASE("composed maps verify across a chain") {
  // C6SEMI -> T8 -> T8 with one untouched vertex inflated
  const Trigraph base = gen::gen_named("C6SEMI");
  const Trigraph t8 = gen::gen_named("T8");
  gen::ThickenSpec spec;
  spec.part_sizes = {1, 1, 1, 1, 2, 1, 1, 1};  // inflate vertex 4 of t8
  const auto out = gen::thicken(t8, spec);
  REQUIRE(verify_thickening(t8, out.map, out.g));
  const ThickeningMap chained = compose_thickenings(t8_map(), out.map);
  CHECK(verify_thickening(base, chained, out.g));
}
