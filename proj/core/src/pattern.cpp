#include "pforge/pattern.hpp"

#include <algorithm>
#include <bit>

namespace pforge {

namespace {

void check_pattern_len(int k) {
  if (k > kMaxPatternLen) {
    throw Error(Error::Kind::resource_limit,
                "pattern length exceeds the bitmask grid limit of 7");
  }
}

// Enumerates occurrences of p in pi as 0-based index vectors; stops early
// when visit returns true.  Returns whether any visit returned true.
bool for_each_occurrence(const Perm& pi, const Perm& p,
                         const std::function<bool(const std::vector<int>&)>& visit) {
  const int n = static_cast<int>(pi.size());
  const int k = static_cast<int>(p.size());
  if (k > n) return false;
  std::vector<int> occ;
  occ.reserve(k);
  bool found = false;
  auto rec = [&](auto&& self, int start) -> bool {
    if (static_cast<int>(occ.size()) == k) return visit(occ);
    for (int i = start; i < n; ++i) {
      if (n - i < k - static_cast<int>(occ.size())) break;
      occ.push_back(i);
      bool ok = true;
      // Only the new element needs checking against previous ones.
      const int t = static_cast<int>(occ.size()) - 1;
      for (int a = 0; a < t && ok; ++a) {
        if ((pi[occ[a]] < pi[occ[t]]) != (p[a] < p[t])) ok = false;
      }
      if (ok && self(self, i + 1)) {
        found = true;
        occ.pop_back();
        return true;
      }
      occ.pop_back();
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

}  // namespace

CellSet full_grid(int k) {
  check_pattern_len(k);
  const int bits = (k + 1) * (k + 1);
  return bits >= 64 ? ~CellSet{0} : (CellSet{1} << bits) - 1;
}

CellSet cell_rect(int k, int c1, int c2, int r1, int r2) {
  CellSet out = 0;
  for (int c = std::max(0, c1); c <= std::min(k, c2); ++c)
    for (int r = std::max(0, r1); r <= std::min(k, r2); ++r)
      out |= cell_mask(k, c, r);
  return out;
}

std::vector<std::pair<int, int>> cells_of(CellSet s, int k) {
  std::vector<std::pair<int, int>> out;
  for (int c = 0; c <= k; ++c)
    for (int r = 0; r <= k; ++r)
      if (cell_in(s, k, c, r)) out.emplace_back(c, r);
  return out;
}

DecoratedPattern as_decorated(const MeshPattern& mp) {
  return DecoratedPattern{mp.pat, mp.shading, {}, {}, {}};
}

DecoratedPattern as_decorated(const MarkedMeshPattern& mmp) {
  return DecoratedPattern{mmp.base.pat, mmp.base.shading, mmp.marks, {}, {}};
}

bool ShadingFamily::insert_maximal(CellSet s) {
  for (CellSet t : shadings) {
    if ((s & ~t) == 0) return false;  // dominated
  }
  std::erase_if(shadings, [&](CellSet t) { return (t & ~s) == 0; });
  shadings.push_back(s);
  return true;
}

void ShadingFamily::sort() { std::sort(shadings.begin(), shadings.end()); }

std::vector<std::vector<int>> occurrences_classical(const Perm& pi, const Perm& p) {
  std::vector<std::vector<int>> out;
  for_each_occurrence(pi, p, [&](const std::vector<int>& occ) {
    out.push_back(occ);
    return false;
  });
  return out;
}

std::pair<int, int> cell_of(const Perm& pi, const std::vector<int>& occ, int t) {
  int c = 0, r = 0;
  for (int i : occ) {
    if (i < t) ++c;
    if (pi[i] < pi[t]) ++r;
  }
  return {c, r};
}

CellSet maximal_shading(const Perm& pi, const std::vector<int>& occ, int k) {
  check_pattern_len(k);
  CellSet occupied = 0;
  for (int t = 0; t < static_cast<int>(pi.size()); ++t) {
    if (std::find(occ.begin(), occ.end(), t) != occ.end()) continue;
    auto [c, r] = cell_of(pi, occ, t);
    occupied |= cell_mask(k, c, r);
  }
  return full_grid(k) & ~occupied;
}

bool contains_classical(const Perm& pi, const Perm& p) {
  return for_each_occurrence(pi, p, [](const std::vector<int>&) { return true; });
}

bool contains_mesh(const Perm& pi, const MeshPattern& mp) {
  const int k = mp.k();
  check_pattern_len(k);
  return for_each_occurrence(pi, mp.pat, [&](const std::vector<int>& occ) {
    return (mp.shading & ~maximal_shading(pi, occ, k)) == 0;
  });
}

bool contains_marked(const Perm& pi, const MarkedMeshPattern& mmp) {
  return contains_decorated(pi, as_decorated(mmp));
}

namespace {

// The flattening of the points of pi lying inside the region, including
// occurrence points strictly interior to it (all four adjacent squares in the
// region) — they participate in decoration patterns (e.g. a queue's flushing
// 21 may use a candidate point).
Perm window_word(const Perm& pi, const std::vector<int>& occ, CellSet region, int k) {
  std::vector<int> positions;
  for (int t = 0; t < static_cast<int>(pi.size()); ++t) {
    if (std::find(occ.begin(), occ.end(), t) != occ.end()) continue;
    auto [c, r] = cell_of(pi, occ, t);
    if (cell_in(region, k, c, r)) positions.push_back(t);
  }
  std::vector<int> sorted_vals;
  for (int i : occ) sorted_vals.push_back(pi[i]);
  std::sort(sorted_vals.begin(), sorted_vals.end());
  for (int x = 1; x <= static_cast<int>(occ.size()); ++x) {
    const int t = occ[x - 1];
    const int v = static_cast<int>(std::lower_bound(sorted_vals.begin(),
                                                    sorted_vals.end(), pi[t]) -
                                   sorted_vals.begin()) +
                  1;
    if (cell_in(region, k, x - 1, v - 1) && cell_in(region, k, x - 1, v) &&
        cell_in(region, k, x, v - 1) && cell_in(region, k, x, v)) {
      positions.push_back(t);
    }
  }
  std::sort(positions.begin(), positions.end());
  Word w;
  for (int t : positions) w.push_back(pi[t]);
  return flatten(w);
}

}  // namespace

bool contains_decorated(const Perm& pi, const DecoratedPattern& dp) {
  const int k = dp.k();
  check_pattern_len(k);
  return for_each_occurrence(pi, dp.pat, [&](const std::vector<int>& occ) {
    if ((dp.shading & ~maximal_shading(pi, occ, k)) != 0) return false;
    for (const Mark& m : dp.marks) {
      int count = 0;
      for (int t = 0; t < static_cast<int>(pi.size()); ++t) {
        if (std::find(occ.begin(), occ.end(), t) != occ.end()) continue;
        auto [c, r] = cell_of(pi, occ, t);
        if (cell_in(m.region, k, c, r)) ++count;
      }
      if (count < m.min_count) return false;
    }
    for (const Decoration& d : dp.avoid) {
      if (contains_mesh(window_word(pi, occ, d.region, k), d.q)) return false;
    }
    for (const Decoration& d : dp.contain) {
      if (!contains_mesh(window_word(pi, occ, d.region, k), d.q)) return false;
    }
    return true;
  });
}

bool contains_any(const Perm& pi, const std::vector<DecoratedPattern>& basis) {
  for (const DecoratedPattern& dp : basis) {
    if (contains_decorated(pi, dp)) return true;
  }
  return false;
}

std::vector<CellSet> minimal_blockers(const std::vector<CellSet>& family, int k) {
  const CellSet grid = full_grid(k);
  // Berge-style incremental minimal hitting sets of the complements.
  std::vector<CellSet> hitting = {0};
  for (CellSet allowed : family) {
    const CellSet target = grid & ~allowed;
    if (target == 0) return {};
    std::vector<CellSet> grown;
    for (CellSet h : hitting) {
      if (h & target) {
        grown.push_back(h);
      } else {
        for (CellSet bits = target; bits; bits &= bits - 1) {
          grown.push_back(h | (bits & ~(bits - 1)));
        }
      }
    }
    std::sort(grown.begin(), grown.end(), [](CellSet a, CellSet b) {
      const int pa = std::popcount(a), pb = std::popcount(b);
      return pa != pb ? pa < pb : a < b;
    });
    grown.erase(std::unique(grown.begin(), grown.end()), grown.end());
    std::vector<CellSet> minimal;
    for (CellSet h : grown) {
      bool dominated = false;
      for (CellSet g : minimal) {
        if (g != h && (g & ~h) == 0) {
          dominated = true;
          break;
        }
      }
      if (!dominated) minimal.push_back(h);
    }
    hitting = std::move(minimal);
  }
  std::sort(hitting.begin(), hitting.end());
  return hitting;
}

bool shading_consequence(const Perm& p, CellSet R, const Perm& q, CellSet Rq) {
  const int kp = static_cast<int>(p.size());
  const int kq = static_cast<int>(q.size());
  if (kq > kp) return false;
  return for_each_occurrence(p, q, [&](const std::vector<int>& occ) {
    // Position and value boundaries (1-based with sentinels) of the
    // occurrence of q inside p.
    std::vector<int> js(kq + 2), vs(kq + 2);
    js[0] = 0;
    vs[0] = 0;
    std::vector<int> vals;
    for (int i : occ) vals.push_back(p[i]);
    std::sort(vals.begin(), vals.end());
    for (int t = 0; t < kq; ++t) {
      js[t + 1] = occ[t] + 1;
      vs[t + 1] = vals[t];
    }
    js[kq + 1] = kp + 1;
    vs[kq + 1] = kp + 1;
    for (auto [c, r] : cells_of(Rq, kq)) {
      // The block of p-squares square (c,r) of q maps onto.
      for (int cc = js[c]; cc < js[c + 1]; ++cc) {
        for (int rr = vs[r]; rr < vs[r + 1]; ++rr) {
          if (!cell_in(R, kp, cc, rr)) return false;
        }
      }
      // No point of p strictly inside the block.
      for (int t = 0; t < kp; ++t) {
        if (std::find(occ.begin(), occ.end(), t) != occ.end()) continue;
        if (js[c] < t + 1 && t + 1 < js[c + 1] && vs[r] < p[t] && p[t] < vs[r + 1]) {
          return false;
        }
      }
    }
    return true;
  });
}

}  // namespace pforge
