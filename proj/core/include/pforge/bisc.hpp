#pragma once

#include <map>
#include <optional>
#include <vector>

#include "pforge/pattern.hpp"
#include "pforge/perm.hpp"

namespace pforge {

// Output of Mine: for every classical pattern p of length <= m, the antichain
// sh_p of maximal observed shadings.
struct MineResult {
  int m = 0;
  std::map<Perm, ShadingFamily> entries;
};

// Output of Forb: for every pattern, the antichain forb_p of minimal
// forbidden shadings after consequence pruning.
struct ForbResult {
  std::map<Perm, std::vector<CellSet>> entries;
};

// Algorithm 1.  threads <= 1 runs sequentially; any thread count yields a
// bitwise identical result (families are canonical antichains, kept sorted).
MineResult mine(const std::vector<Perm>& A, int m, int threads = 1);

// Algorithm 2: minimal blockers per pattern, processed by increasing length
// then lexicographically, with structural-consequence pruning.
ForbResult forb(const MineResult& S);

// BiSC(A, m) = Forb(Mine(A, m)), flattened to mesh patterns sorted by
// (length, pattern, shading).
std::vector<MeshPattern> bisc(const std::vector<Perm>& A, int m, int threads = 1);

// All permutations of length n (or 1..n when upto) avoiding every basis
// element.  Throws a resource-limit error when n exceeds the guard.
std::vector<Perm> enumerate_avoiders(const std::vector<DecoratedPattern>& basis,
                                     int n, bool upto = false, int guard = 10);

struct VerifyReport {
  bool ok = true;
  // Set when !ok: the shortest counterexample and its direction.
  Perm counterexample;
  // True when the counterexample is in Av(basis) but not in A ("extra"
  // avoider); false when it is in A but contains a basis pattern ("missing").
  bool extra = false;
};

// Compares A restricted to each length 1..n against Av(basis).
VerifyReport verify_basis(const std::function<bool(const Perm&)>& membership,
                          const std::vector<DecoratedPattern>& basis, int n);

}  // namespace pforge
