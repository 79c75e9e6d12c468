#include "pforge/preimage.hpp"

#include <algorithm>

namespace pforge {

namespace {

bool subset(CellSet a, CellSet b) { return (a & ~b) == 0; }

// True when some pattern point of lam lies strictly inside the region: a
// point (position x, value v), both 1-based, is interior iff all four
// adjacent squares belong to the region.
bool elem_in_region(const Perm& lam, CellSet region) {
  const int k = static_cast<int>(lam.size());
  for (int t = 0; t < k; ++t) {
    const int x = t + 1, v = lam[t];
    if (cell_in(region, k, x - 1, v - 1) && cell_in(region, k, x - 1, v) &&
        cell_in(region, k, x, v - 1) && cell_in(region, k, x, v)) {
      return true;
    }
  }
  return false;
}

struct RegionPair {
  CellSet mark_shade;  // shaded or marked by the case table
  CellSet decorate;    // carries the V_{d-1} / 21 decoration
};

RegionPair stack_regions(const Inversion& inv, const Perm& lam) {
  const int n = static_cast<int>(lam.size());
  const auto [i, j] = inv;
  const int pi = static_cast<int>(std::find(lam.begin(), lam.end(), i) - lam.begin()) + 1;
  const int pj = static_cast<int>(std::find(lam.begin(), lam.end(), j) - lam.begin()) + 1;
  // R1 = [lam^-1(i), lam^-1(j)-1] x [i, n];  R2 = [0, lam^-1(i)-1] x [i, n].
  return RegionPair{cell_rect(n, pi, pj - 1, i, n), cell_rect(n, 0, pi - 1, i, n)};
}

RegionPair queue_regions(const Inversion& inv, const Perm& lam) {
  const RegionPair s = stack_regions(inv, lam);
  // The queue shades/marks the region left of the larger element and
  // decorates the region between the two elements.
  return RegionPair{s.decorate, s.mark_shade};
}

void canonicalize(DecoratedPattern& dp) {
  std::sort(dp.marks.begin(), dp.marks.end());
  std::sort(dp.avoid.begin(), dp.avoid.end());
  std::sort(dp.contain.begin(), dp.contain.end());
}

// The shared Algorithm-3 branching engine.  region_fn supplies the case
// table's two regions per inversion; dec_q the decoration pattern (V_{d-1}
// for stacks, 21 for queues); infinite drops the containment branch and makes
// the avoidance branch pure shading (the unbounded-stack degeneration).
std::vector<DecoratedPattern> decorate(
    const Perm& p, const Perm& lam,
    RegionPair (*region_fn)(const Inversion&, const Perm&),
    const MeshPattern& dec_q, bool infinite) {
  if (lam.size() > static_cast<std::size_t>(kMaxPatternLen)) {
    throw Error(Error::Kind::resource_limit, "candidate longer than the grid limit");
  }
  std::vector<DecoratedPattern> T = {DecoratedPattern{lam, 0, {}, {}, {}}};
  const std::set<Inversion> inv_p = inversions(p);
  for (const Inversion& inv : inversions(lam)) {  // std::set: sorted order
    const auto [Rm, Rd] = region_fn(inv, lam);
    std::vector<DecoratedPattern> next;
    for (const DecoratedPattern& r : T) {
      const CellSet S = r.shading;
      if (inv_p.contains(inv)) {
        // Stays inverted via a point or marking in the mark region.
        if (!subset(Rm, S)) {
          if (elem_in_region(lam, Rm)) {
            next.push_back(r);
          } else {
            DecoratedPattern e = r;
            e.marks.push_back(Mark{Rm & ~S, 1});
            next.push_back(std::move(e));
          }
        }
        // Stays inverted via a decoration containment in the other region.
        const CellSet RmS = Rm | S;
        const bool guard =
            !elem_in_region(lam, RmS) &&
            std::none_of(r.marks.begin(), r.marks.end(),
                         [&](const Mark& m) { return subset(m.region, RmS); }) &&
            std::none_of(r.contain.begin(), r.contain.end(),
                         [&](const Decoration& d) { return subset(d.region, RmS); }) &&
            std::none_of(r.avoid.begin(), r.avoid.end(),
                         [&](const Decoration& d) { return subset(Rd, d.region); });
        if (guard && !infinite) {
          DecoratedPattern e = r;
          e.shading = S | Rm;
          e.contain.push_back(Decoration{Rd, dec_q});
          next.push_back(std::move(e));
        }
      } else {
        // The inversion is destroyed.
        const CellSet RmS = Rm | S;
        const bool guard =
            !elem_in_region(lam, RmS) &&
            std::none_of(r.marks.begin(), r.marks.end(),
                         [&](const Mark& m) { return subset(m.region, RmS); }) &&
            std::none_of(r.contain.begin(), r.contain.end(),
                         [&](const Decoration& d) { return subset(d.region, RmS); }) &&
            std::none_of(r.contain.begin(), r.contain.end(),
                         [&](const Decoration& d) { return subset(d.region, Rd); });
        if (guard) {
          DecoratedPattern e = r;
          e.shading = S | Rm;
          if (!infinite) e.avoid.push_back(Decoration{Rd, dec_q});
          next.push_back(std::move(e));
        }
      }
    }
    // Deduplicate (order-insensitive in the mark/decoration lists).
    std::vector<DecoratedPattern> canon = next;
    for (DecoratedPattern& dp : canon) canonicalize(dp);
    T.clear();
    std::vector<DecoratedPattern> seen;
    for (std::size_t i = 0; i < next.size(); ++i) {
      if (std::find(seen.begin(), seen.end(), canon[i]) == seen.end()) {
        seen.push_back(canon[i]);
        T.push_back(std::move(next[i]));
      }
    }
  }
  // Simplify: clip mark regions to unshaded squares, then drop marks
  // dominated by a mark on a subset region with at least the same count.
  std::vector<DecoratedPattern> out;
  for (DecoratedPattern& r : T) {
    std::vector<Mark> clipped;
    for (const Mark& m : r.marks) clipped.push_back(Mark{m.region & ~r.shading, m.min_count});
    std::vector<Mark> kept;
    for (std::size_t i = 0; i < clipped.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < clipped.size() && !dominated; ++j) {
        if (j == i) continue;
        const Mark& a = clipped[i];
        const Mark& b = clipped[j];
        const bool proper_sub = subset(b.region, a.region) && b.region != a.region;
        if ((proper_sub && b.min_count >= a.min_count) ||
            (b.region == a.region && b.min_count > a.min_count) ||
            (b.region == a.region && b.min_count == a.min_count && j < i)) {
          dominated = true;
        }
      }
      if (!dominated) kept.push_back(clipped[i]);
    }
    r.marks = std::move(kept);
    canonicalize(r);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

MeshPattern make_vd(int d) {
  if (d < 0) throw Error(Error::Kind::invalid_input, "make_vd: d must be >= 0");
  MeshPattern mp;
  for (int v = d; v >= 1; --v) mp.pat.push_back(v);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j)
      if (i + j > d) mp.shading |= cell_mask(d, i, j);
  return mp;
}

Perm DeviceSpec::apply(const Perm& pi) const {
  switch (device) {
    case Device::stack: return stack_sort(pi);
    case Device::stack_depth: return stack_sort_depth(pi, depth);
    case Device::queue: return queue_sort(pi);
  }
  throw Error(Error::Kind::unsupported, "unsupported device");
}

std::set<Word> cand_stack(const Word& p, int d) {
  if (d < 1) throw Error(Error::Kind::invalid_input, "cand_stack: d must be >= 1");
  if (p.empty()) return {Word{}};
  if (d == 1) return {p};
  const auto it = std::max_element(p.begin(), p.end());
  const Word alpha(p.begin(), it), beta(it + 1, p.end());
  const int n = *it;
  std::set<Word> out;
  for (std::size_t j = 0; j <= alpha.size(); ++j) {
    Word left(alpha.begin(), alpha.begin() + j);
    Word right(alpha.begin() + j, alpha.end());
    right.insert(right.end(), beta.begin(), beta.end());
    for (const Word& g : cand_stack(left, d)) {
      for (const Word& dl :
           cand_stack(right, d == kUnboundedDepth ? d : d - 1)) {
        Word cand = g;
        cand.push_back(n);
        cand.insert(cand.end(), dl.begin(), dl.end());
        out.insert(cand);
      }
    }
  }
  return out;
}

std::set<Perm> cand_queue(const Perm& p) {
  const std::set<Inversion> inv_p = inversions(p);
  std::set<Perm> out;
  for (const Perm& lam : all_perms(static_cast<int>(p.size()))) {
    const std::set<Inversion> inv_lam = inversions(lam);
    if (std::includes(inv_lam.begin(), inv_lam.end(), inv_p.begin(), inv_p.end())) {
      out.insert(lam);
    }
  }
  return out;
}

std::vector<DecoratedPattern> decorate_stack_candidate(int d, const Perm& p,
                                                       const Perm& lambda) {
  if (!cand_stack(p, d).contains(lambda)) {
    throw Error(Error::Kind::invalid_input, "lambda is not a stack candidate for p");
  }
  const bool infinite = d == kUnboundedDepth;
  const MeshPattern dec_q = infinite ? MeshPattern{} : make_vd(d - 1);
  return decorate(p, lambda, stack_regions, dec_q, infinite);
}

std::vector<DecoratedPattern> decorate_queue_candidate(const Perm& p,
                                                       const Perm& lambda) {
  if (!cand_queue(p).contains(lambda)) {
    throw Error(Error::Kind::invalid_input, "lambda is not a queue candidate for p");
  }
  const MeshPattern p21{Perm{2, 1}, 0};
  return decorate(p, lambda, queue_regions, p21, false);
}

PreimageBasis preimage_basis(const DeviceSpec& device, const std::vector<Perm>& targets) {
  PreimageBasis out;
  out.device = device;
  out.targets = targets;
  for (const Perm& p : targets) {
    switch (device.device) {
      case Device::stack:
      case Device::stack_depth: {
        const int d = device.device == Device::stack ? kUnboundedDepth : device.depth;
        for (const Word& lam : cand_stack(p, d)) {
          for (DecoratedPattern& dp : decorate_stack_candidate(d, p, flatten(lam))) {
            out.patterns.push_back(std::move(dp));
          }
        }
        break;
      }
      case Device::queue: {
        for (const Perm& lam : cand_queue(p)) {
          for (DecoratedPattern& dp : decorate_queue_candidate(p, lam)) {
            out.patterns.push_back(std::move(dp));
          }
        }
        break;
      }
    }
  }
  std::sort(out.patterns.begin(), out.patterns.end());
  out.patterns.erase(std::unique(out.patterns.begin(), out.patterns.end()),
                     out.patterns.end());
  return out;
}

std::vector<Perm> brute_force_preimage(const DeviceSpec& device,
                                       const std::vector<Perm>& targets, int n,
                                       int guard) {
  if (n > guard) {
    throw Error(Error::Kind::resource_limit,
                "brute_force_preimage: n exceeds the guard bound");
  }
  std::vector<Perm> out;
  for (const Perm& pi : all_perms(n)) {
    const Perm image = device.apply(pi);
    const bool avoids = std::none_of(
        targets.begin(), targets.end(),
        [&](const Perm& t) { return contains_classical(image, t); });
    if (avoids) out.push_back(pi);
  }
  return out;
}

}  // namespace pforge
