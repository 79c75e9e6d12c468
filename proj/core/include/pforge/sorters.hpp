#pragma once

#include <limits>
#include <string>
#include <vector>

#include "pforge/perm.hpp"

namespace pforge {

// Depth value meaning an unbounded stack (S = S_infinity).
inline constexpr int kUnboundedDepth = std::numeric_limits<int>::max();

// One pass through an unbounded stack (the classical operator S).
Perm stack_sort(const Perm& pi);

// One pass through a depth-d stack: the stack holds d-1 elements plus the
// pass-through slot; elements bypass a full stack.  d = kUnboundedDepth means
// stack_sort.  Throws on d < 1.
Perm stack_sort_depth(const Perm& pi, int d);

// The recursion S_d(alpha n beta) = S_d(alpha) S_{d-1}(beta) n; must agree
// with the simulation (tested).  Operates on words for the recursive calls.
Word stack_sort_depth_rec(const Word& w, int d);

// One pass through a queue with bypass (the operator Q).
Perm queue_sort(const Perm& pi);

// A single pass of quicksort: recurse at the rightmost strong fixed point;
// otherwise stably move all letters smaller than the first letter to the
// front and stop.
Perm quicksort_pass(const Perm& pi);

// True iff k applications of S sort pi.
bool west_sortable(const Perm& pi, int k);

// O(n) recognizer: pi avoids 4312 iff (S o r o c o Q)(pi) is sorted.
bool avoids_4312_linear(const Perm& pi);

enum class Stage { stack, stack_depth, queue, reverse, complement, quicksort_pass };

struct PipelineStage {
  Stage op;
  int depth = 0;  // for stack_depth
};

using Pipeline = std::vector<PipelineStage>;

// Parses the comma-separated stage syntax: stack, stackd:<d>, queue, rev,
// comp, qpass.  Throws on unknown stages.
Pipeline parse_pipeline(const std::string& text);

Perm apply_stage(const Perm& pi, const PipelineStage& stage);

// Applies stages left to right.  When trace is non-null it receives each
// intermediate permutation (one entry per stage).
Perm run_pipeline(const Perm& pi, const Pipeline& pipeline,
                  std::vector<Perm>* trace = nullptr);

}  // namespace pforge
