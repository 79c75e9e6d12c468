#include <algorithm>

#include "doctest.h"
#include "pforge/bisc.hpp"
#include "pforge/io.hpp"
#include "pforge/preimage.hpp"

using namespace pforge;

namespace {

CellSet cells(int k, std::initializer_list<std::pair<int, int>> cs) {
  CellSet out = 0;
  for (auto [c, r] : cs) out |= cell_mask(k, c, r);
  return out;
}

std::vector<std::string> basis_strings(const PreimageBasis& b) {
  std::vector<std::string> out;
  for (const DecoratedPattern& p : b.patterns) out.push_back(pattern_to_string(p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("V_d staircase patterns") {
  CHECK(make_vd(0) == MeshPattern{{}, 0});
  CHECK(make_vd(1) == MeshPattern{{1}, cells(1, {{1, 1}})});
  CHECK(make_vd(2) == MeshPattern{{2, 1}, cells(2, {{1, 2}, {2, 1}, {2, 2}})});
  CHECK_THROWS_AS(make_vd(-1), Error);
}

TEST_CASE("stack candidates") {
  const std::set<Word> want231 = {{2, 3, 1}, {3, 2, 1}};
  CHECK(cand_stack({2, 3, 1}, 2) == want231);
  CHECK(cand_stack({2, 3, 1}, 3) == want231);
  CHECK(cand_stack({2, 3, 1}, kUnboundedDepth) == want231);
  CHECK(cand_stack({2, 3, 1}, 1) == std::set<Word>{{2, 3, 1}});
  CHECK(cand_stack({2, 1}, 2) == std::set<Word>{{2, 1}});
  // Stabilization: cand_d(p) is constant once d >= |p|.
  for (const Perm& p : all_perms(4)) {
    CHECK(cand_stack(p, 4) == cand_stack(p, 7));
    CHECK(cand_stack(p, 4) == cand_stack(p, kUnboundedDepth));
  }
}

TEST_CASE("stack candidates are complete") {
  for (int d : {2, 3}) {
    for (int k = 1; k <= 4; ++k) {
      for (const Perm& lam : all_perms(k)) {
        const Perm image = flatten(stack_sort_depth_rec(lam, d));
        CHECK(cand_stack(image, d).contains(lam));
      }
    }
  }
}

TEST_CASE("queue candidates") {
  CHECK(cand_queue({1, 2}) == std::set<Perm>{{1, 2}, {2, 1}});
  CHECK(cand_queue({2, 1}) == std::set<Perm>{{2, 1}});
  CHECK(cand_queue({4, 3, 1, 2}) == std::set<Perm>{{4, 3, 1, 2}, {4, 3, 2, 1}});
}

TEST_CASE("decorating a candidate without inversions is trivial") {
  const auto out = decorate_stack_candidate(3, {1, 2}, {1, 2});
  CHECK(out == std::vector<DecoratedPattern>{DecoratedPattern{{1, 2}, 0, {}, {}, {}}});
}

TEST_CASE("non-candidates are rejected") {
  CHECK_THROWS_AS(decorate_stack_candidate(2, {2, 3, 1}, {1, 2, 3}), Error);
  CHECK_THROWS_AS(decorate_queue_candidate({2, 1}, {1, 2}), Error);
}

TEST_CASE("decorated outputs share the candidate's classical pattern") {
  for (const Perm& lam : cand_stack({2, 3, 1}, 3)) {
    for (const DecoratedPattern& dp : decorate_stack_candidate(3, {2, 3, 1}, flatten(lam))) {
      CHECK(dp.pat == flatten(lam));
    }
  }
}

TEST_CASE("the three displayed patterns for the 231-preimage of a depth-3 stack") {
  const PreimageBasis b =
      preimage_basis(DeviceSpec{Device::stack_depth, 3}, {{2, 3, 1}});
  CHECK(basis_strings(b) ==
        std::vector<std::string>{
            "231[2..2,3..3:1]",
            "231|{(2,3)}C[0..1,3..3:21|{(1,2),(2,1),(2,2)}]",
            "321|{(1,3)}[2..2,3..3:1]A[0..0,3..3:21|{(1,2),(2,1),(2,2)}]",
        });
}

TEST_CASE("queue preimage of 21 matches the Table 3 case patterns") {
  const PreimageBasis b = preimage_basis(DeviceSpec{Device::queue, 0}, {{2, 1}});
  CHECK(basis_strings(b) ==
        std::vector<std::string>{"21[0..0,2..2:1]", "21|{(0,2)}C[1..1,2..2:21]"});
}

TEST_CASE("unbounded stack degenerates to shaded/marked patterns") {
  const PreimageBasis b = preimage_basis(DeviceSpec{Device::stack, kUnboundedDepth},
                                         {{2, 1}});
  for (const DecoratedPattern& dp : b.patterns) {
    CHECK(dp.avoid.empty());
    CHECK(dp.contain.empty());
  }
  // Semantically the basis is {231}: same avoiders.
  for (int n = 1; n <= 6; ++n) {
    const auto got = enumerate_avoiders(b.patterns, n, false, 9);
    std::size_t want = 0;
    for (const Perm& pi : all_perms(n)) {
      if (!contains_classical(pi, {2, 3, 1})) ++want;
    }
    CHECK(got.size() == want);
  }
}

TEST_CASE("stack preimage oracle equivalence at small lengths") {
  for (int d : {2, 3}) {
    const DeviceSpec dev{Device::stack_depth, d};
    const PreimageBasis b = preimage_basis(dev, {{2, 1}});
    for (int n = 1; n <= 6; ++n) {
      CHECK(enumerate_avoiders(b.patterns, n, false, 9) ==
            brute_force_preimage(dev, {{2, 1}}, n));
    }
  }
}

TEST_CASE("brute force preimage") {
  const DeviceSpec dev{Device::stack_depth, 3};
  // Prop. 5 at d = 3: sortable = Av(231, 4321).
  std::vector<Perm> want;
  for (const Perm& pi : all_perms(5)) {
    if (!contains_classical(pi, {2, 3, 1}) && !contains_classical(pi, {4, 3, 2, 1})) {
      want.push_back(pi);
    }
  }
  CHECK(brute_force_preimage(dev, {{2, 1}}, 5) == want);
  CHECK(brute_force_preimage(DeviceSpec{Device::stack, kUnboundedDepth}, {}, 3) ==
        all_perms(3));
  CHECK_THROWS_AS(brute_force_preimage(dev, {{2, 1}}, 12), Error);
}
