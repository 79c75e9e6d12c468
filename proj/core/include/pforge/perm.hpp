#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pforge {

// A permutation of {1..n} in one-line notation.  The empty permutation is valid.
using Perm = std::vector<int>;

// A word of pairwise-distinct integers (not necessarily 1..k).
using Word = std::vector<int>;

// Value pair (a, b) with a > b and a preceding b.
using Inversion = std::pair<int, int>;

class Error : public std::runtime_error {
 public:
  enum class Kind { invalid_input, resource_limit, unknown_name, unsupported };

  Error(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Replaces the i-th smallest letter of w with i (1-based).  Throws on duplicates.
Perm flatten(const Word& w);

bool is_permutation(const std::vector<int>& values);

// All permutations of length exactly n, in lexicographic order.
std::vector<Perm> all_perms(int n);

// All permutations of length 1..n, shorter lengths first.
std::vector<Perm> all_perms_upto(int n);

// All index subsequences of length 1..m (0-based indices, increasing).
std::vector<std::vector<int>> subwords_leq(const Perm& pi, int m);

std::set<Inversion> inversions(const Perm& pi);

Perm reverse(const Perm& pi);
Perm complement(const Perm& pi);
bool is_identity(const Perm& pi);

Perm identity_perm(int n);

}  // namespace pforge
