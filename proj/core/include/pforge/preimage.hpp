#pragma once

#include <set>
#include <vector>

#include "pforge/pattern.hpp"
#include "pforge/perm.hpp"
#include "pforge/sorters.hpp"

namespace pforge {

// V_d: the decreasing pattern d(d-1)...1 with the staircase shading above and
// to the right of the chain ({(i,j) : i+j > d} in this library's coordinate
// convention), encoding a full stack of left-to-right maxima.
MeshPattern make_vd(int d);

enum class Device { stack, stack_depth, queue };

struct DeviceSpec {
  Device device = Device::stack;
  int depth = kUnboundedDepth;  // for stack_depth

  Perm apply(const Perm& pi) const;
};

// Proposition 3 recursion; returns every classical pattern that one pass of
// S_d can map to p.  Defined on words for the recursive sub-calls.
std::set<Word> cand_stack(const Word& p, int d);

// Queue candidates {lambda : inv(p) subset of inv(lambda)}.
std::set<Perm> cand_queue(const Perm& p);

// Algorithm 3 for a depth-d stack.  Throws when lambda is not a candidate.
std::vector<DecoratedPattern> decorate_stack_candidate(int d, const Perm& p,
                                                       const Perm& lambda);

// The queue analogue (Table 3): the roles of the two regions swap — the
// region left of and above the inversion's larger element is shaded or
// marked, the region between the two elements is decorated with 21.
std::vector<DecoratedPattern> decorate_queue_candidate(const Perm& p,
                                                       const Perm& lambda);

struct PreimageBasis {
  DeviceSpec device;
  std::vector<Perm> targets;
  std::vector<DecoratedPattern> patterns;
};

// Union over targets and candidates of the decorated outputs.  For the
// unbounded stack the V_infinity branches degenerate: containment branches are
// dropped, avoidance branches keep only their shading.
PreimageBasis preimage_basis(const DeviceSpec& device, const std::vector<Perm>& targets);

// The oracle: {pi in S_n : device(pi) avoids all targets}.  Throws a
// resource-limit error past the guard.
std::vector<Perm> brute_force_preimage(const DeviceSpec& device,
                                       const std::vector<Perm>& targets, int n,
                                       int guard = 9);

}  // namespace pforge
