#include <algorithm>

#include "doctest.h"
#include "pforge/corpus.hpp"
#include "pforge/sorters.hpp"

using namespace pforge;

namespace {

// Longest increasing subsequence length, as an independent cross-check.
int lis(const Perm& pi) {
  std::vector<int> tails;
  for (int v : pi) {
    auto it = std::lower_bound(tails.begin(), tails.end(), v);
    if (it == tails.end()) {
      tails.push_back(v);
    } else {
      *it = v;
    }
  }
  return static_cast<int>(tails.size());
}

}  // namespace

TEST_CASE("rsk_shape basics") {
  CHECK(rsk_shape({1, 2, 3, 4}) == TableauShape{4});
  CHECK(rsk_shape({4, 3, 2, 1}) == TableauShape{1, 1, 1, 1});
  CHECK(rsk_shape({2, 1, 4, 3}) == TableauShape{2, 2});
  CHECK(rsk_shape({}) == TableauShape{});
}

TEST_CASE("rsk_shape first row equals the LIS length") {
  for (const Perm& pi : all_perms_upto(6)) {
    const TableauShape shape = rsk_shape(pi);
    int total = 0;
    for (int row : shape) total += row;
    CHECK(total == static_cast<int>(pi.size()));
    if (!pi.empty()) CHECK(shape[0] == lis(pi));
    CHECK(std::is_sorted(shape.rbegin(), shape.rend()));
  }
}

TEST_CASE("shape containment") {
  CHECK(shape_contains({3, 3, 1}, {3, 2}));
  CHECK_FALSE(shape_contains({7}, {2, 2}));
  CHECK(shape_contains({2, 2}, {}));
  // Hooks are exactly the shapes avoiding (2,2).
  for (const Perm& pi : all_perms_upto(5)) {
    const TableauShape s = rsk_shape(pi);
    const bool hook = s.size() <= 1 || s[1] <= 1;
    CHECK(hook == !shape_contains(s, {2, 2}));
  }
}

TEST_CASE("named class registry") {
  CHECK(named_class_names().size() == 9);
  CHECK(is_named_class("west_3"));
  CHECK_FALSE(is_named_class("bogus"));
  CHECK_THROWS_AS(named_class("bogus", 4), Error);
  CHECK_THROWS_AS(named_class("smooth", 12), Error);
}

TEST_CASE("named class memberships") {
  // S_{<=3} minus 231.
  CHECK(named_class("stack_sortable", 3).size() == 8);
  // All of S_4 and shorter except 2341 and 3241.
  CHECK(named_class("west_2", 4).size() == 31);
  const auto qs = named_class("quicksort_1pass", 4);
  const std::vector<std::size_t> counts = {1, 2, 5, 12};
  for (int n = 1; n <= 4; ++n) {
    CHECK(static_cast<std::size_t>(std::count_if(
              qs.begin(), qs.end(),
              [&](const Perm& p) { return static_cast<int>(p.size()) == n; })) ==
          counts[n - 1]);
  }
}

TEST_CASE("named classes are downward consistent") {
  for (const std::string& name : named_class_names()) {
    const auto big = named_class(name, 5);
    const auto small = named_class(name, 4);
    std::vector<Perm> restricted;
    for (const Perm& pi : big) {
      if (pi.size() <= 4) restricted.push_back(pi);
    }
    CHECK(restricted == small);
  }
}

TEST_CASE("hook_rsk matches the rsk predicate") {
  for (const Perm& pi : named_class("hook_rsk", 4)) {
    CHECK_FALSE(shape_contains(rsk_shape(pi), {2, 2}));
  }
}

TEST_CASE("the four (3,2)-shape marked patterns") {
  const auto pats = shape32_patterns();
  REQUIRE(pats.size() == 4);
  CHECK(pats[0].base.pat == Perm{2, 1, 4, 3});
  CHECK(pats[1].base.pat == Perm{3, 4, 1, 2});
  CHECK(pats[2].base.pat == Perm{3, 1, 4, 2});
  CHECK(pats[3].base.pat == Perm{2, 4, 1, 3});
  for (const MarkedMeshPattern& p : pats) {
    REQUIRE(p.marks.size() == 1);
    CHECK(p.marks[0].min_count == 1);
    CHECK(p.marks[0].region != 0);
  }
  // The identity of length 6 has a single-row shape, so no pattern fires.
  CHECK_FALSE(contains_marked({1, 2, 3, 4, 5, 6}, pats[0]));
  // Avoider set at n <= 5 equals the shape predicate.
  for (const Perm& pi : all_perms_upto(5)) {
    bool any = false;
    for (const MarkedMeshPattern& p : pats) any = any || contains_marked(pi, p);
    CHECK(any == shape_contains(rsk_shape(pi), {3, 2}));
  }
}

TEST_CASE("the first (3,2) pattern expands to 9 classical patterns") {
  const MarkedMeshPattern first = shape32_patterns()[0];
  // Insert one point into each marked square of 2143 and flatten.
  std::set<Perm> expansions;
  for (auto [c, r] : cells_of(first.marks[0].region, 4)) {
    Word w;
    const Perm& p = first.base.pat;
    for (int i = 0; i < 4; ++i) {
      if (i == c) w.push_back(2 * r + 1);
      w.push_back(2 * p[i]);
    }
    if (c == 4) w.push_back(2 * r + 1);
    expansions.insert(flatten(w));
  }
  CHECK(expansions.size() == 9);
  // Containing the marked pattern == containing one of the expansions.
  for (const Perm& pi : all_perms_upto(6)) {
    bool any = false;
    for (const Perm& e : expansions) any = any || contains_classical(pi, e);
    CHECK(any == contains_marked(pi, first));
  }
}
