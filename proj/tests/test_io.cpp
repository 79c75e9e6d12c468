#include "doctest.h"
#include "pforge/corpus.hpp"
#include "pforge/io.hpp"
#include "pforge/preimage.hpp"

using namespace pforge;

TEST_CASE("permutation text forms") {
  CHECK(perm_to_string({3, 2, 4, 1}) == "3241");
  CHECK(parse_perm("3241") == Perm{3, 2, 4, 1});
  CHECK(parse_perm(" 3241\n") == Perm{3, 2, 4, 1});
  const Perm big = {10, 9, 8, 7, 6, 5, 4, 3, 2, 1};
  CHECK(perm_to_string(big) == "10 9 8 7 6 5 4 3 2 1");
  CHECK(parse_perm(perm_to_string(big)) == big);
  CHECK_THROWS_AS(parse_perm(""), Error);
  CHECK_THROWS_AS(parse_perm("132x"), Error);
  CHECK_THROWS_AS(parse_perm("122"), Error);
  CHECK_THROWS_AS(parse_perm("1 2 4"), Error);
}

TEST_CASE("mesh pattern notation") {
  const MeshPattern mp{{3, 2, 4, 1}, cell_mask(4, 1, 4)};
  CHECK(pattern_to_string(mp) == "3241|{(1,4)}");
  CHECK(parse_pattern("3241|{(1,4)}") == as_decorated(mp));
  CHECK(pattern_to_string(DecoratedPattern{{2, 3, 1}, 0, {}, {}, {}}) == "231");
  CHECK(parse_pattern("231") == DecoratedPattern{{2, 3, 1}, 0, {}, {}, {}});
}

TEST_CASE("round trips are bit exact") {
  std::vector<DecoratedPattern> samples;
  for (const MarkedMeshPattern& p : shape32_patterns()) {
    samples.push_back(as_decorated(p));  // non-rectangular mark regions
  }
  for (const DecoratedPattern& p :
       preimage_basis(DeviceSpec{Device::stack_depth, 3}, {{2, 3, 1}}).patterns) {
    samples.push_back(p);
  }
  for (const DecoratedPattern& p :
       preimage_basis(DeviceSpec{Device::queue, 0}, {{2, 1}, {3, 1, 2}}).patterns) {
    samples.push_back(p);
  }
  for (const DecoratedPattern& dp : samples) {
    CHECK(parse_pattern(pattern_to_string(dp)) == dp);
  }
}

TEST_CASE("pattern parse errors") {
  CHECK_THROWS_AS(parse_pattern(""), Error);
  CHECK_THROWS_AS(parse_pattern("123|{(4,0)}"), Error);
  CHECK_THROWS_AS(parse_pattern("12|{(0,0)"), Error);
  CHECK_THROWS_AS(parse_pattern("12[3..1,0..0:1]"), Error);
  CHECK_THROWS_AS(parse_pattern("122"), Error);
  CHECK_THROWS_AS(parse_pattern("12Z[0..0,0..0:21]"), Error);
}

TEST_CASE("pattern lists") {
  const auto ps = parse_pattern_list("231; 12|{(1,1)} ;21[0..1,0..0:2]");
  REQUIRE(ps.size() == 3);
  CHECK(ps[0].pat == Perm{2, 3, 1});
  CHECK(ps[1].shading == cell_mask(2, 1, 1));
  CHECK(ps[2].marks == std::vector<Mark>{Mark{cell_rect(2, 0, 1, 0, 0), 2}});
}

TEST_CASE("JSON serialization has the stable field order") {
  DecoratedPattern dp{{1, 2}, cell_mask(2, 2, 0), {Mark{cell_mask(2, 0, 0), 1}}, {}, {}};
  const std::string j = pattern_to_json(dp);
  CHECK(j ==
        R"({"pattern":[1,2],"shading":[[2,0]],"marks":[{"region":[[0,0]],"min_count":1}],)"
        R"("avoid_dec":[],"contain_dec":[]})");
  const std::string arr = patterns_to_json({dp});
  CHECK(arr.front() == '[');
  CHECK(arr.find(j) != std::string::npos);
}
