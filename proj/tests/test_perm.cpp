#include "doctest.h"
#include "pforge/perm.hpp"

using namespace pforge;

TEST_CASE("flatten replaces the i-th smallest letter with i") {
  CHECK(flatten({2, 4, 3}) == Perm{1, 3, 2});
  CHECK(flatten({2, 4}) == Perm{1, 2});
  CHECK(flatten({1, 2, 3, 4, 5}) == Perm{1, 2, 3, 4, 5});
  CHECK(flatten({}) == Perm{});
  CHECK(flatten({7, -2, 40}) == Perm{2, 1, 3});
}

TEST_CASE("flatten rejects duplicate letters") {
  CHECK_THROWS_AS(flatten({1, 2, 1}), Error);
}

TEST_CASE("flatten is idempotent") {
  for (const Perm& w : all_perms_upto(5)) CHECK(flatten(w) == w);
}

TEST_CASE("is_permutation") {
  CHECK(is_permutation({2, 1, 3}));
  CHECK(is_permutation({}));
  CHECK_FALSE(is_permutation({1, 1}));
  CHECK_FALSE(is_permutation({2, 3}));
}

TEST_CASE("subwords_leq counts") {
  CHECK(subwords_leq({1, 3, 2, 4}, 2).size() == 10);
  CHECK(subwords_leq({1}, 3).size() == 1);
  CHECK(subwords_leq({1, 2, 3, 4, 5}, 3).size() == 25);
}

TEST_CASE("subwords_leq at full length contains the identity occurrence once") {
  const Perm pi{2, 4, 1, 3};
  int full = 0;
  for (const auto& occ : subwords_leq(pi, 4)) {
    if (occ.size() == 4) ++full;
  }
  CHECK(full == 1);
}

TEST_CASE("inversions are value pairs (larger, smaller)") {
  CHECK(inversions({1, 2, 3}).empty());
  CHECK(inversions({2, 3, 1}) == std::set<Inversion>{{2, 1}, {3, 1}});
  CHECK(inversions({3, 2, 1}) == std::set<Inversion>{{3, 2}, {3, 1}, {2, 1}});
}

TEST_CASE("reverse and complement") {
  CHECK(reverse({4, 3, 1, 2}) == Perm{2, 1, 3, 4});
  CHECK(complement({4, 3, 1, 2}) == Perm{1, 2, 4, 3});
  CHECK(is_identity({1, 2, 3, 4, 5}));
  CHECK_FALSE(is_identity({2, 1}));
  for (const Perm& pi : all_perms_upto(6)) {
    CHECK(reverse(reverse(pi)) == pi);
    CHECK(complement(complement(pi)) == pi);
  }
}

TEST_CASE("inversion count of a permutation and its reverse sum to C(n,2)") {
  for (int n = 1; n <= 6; ++n) {
    for (const Perm& pi : all_perms(n)) {
      CHECK(static_cast<int>(inversions(pi).size() + inversions(reverse(pi)).size()) ==
            n * (n - 1) / 2);
    }
  }
}

TEST_CASE("all_perms sizes") {
  CHECK(all_perms(0).size() == 1);
  CHECK(all_perms(4).size() == 24);
  CHECK(all_perms_upto(4).size() == 1 + 2 + 6 + 24);
}
