#include "pforge/bisc.hpp"

#include <algorithm>
#include <thread>

namespace pforge {

namespace {

using FamilyMap = std::map<Perm, ShadingFamily>;

void mine_into(FamilyMap& sh, const std::vector<Perm>& chunk, int m) {
  for (const Perm& pi : chunk) {
    for (const std::vector<int>& occ : subwords_leq(pi, m)) {
      Word w;
      for (int i : occ) w.push_back(pi[i]);
      const Perm p = flatten(w);
      const CellSet R = maximal_shading(pi, occ, static_cast<int>(p.size()));
      sh[p].insert_maximal(R);
    }
  }
}

std::vector<std::pair<int, int>> sorted_cells(CellSet s, int k) {
  return cells_of(s, k);  // already ordered by (c, r)
}

}  // namespace

MineResult mine(const std::vector<Perm>& A, int m, int threads) {
  if (m < 1) throw Error(Error::Kind::invalid_input, "mine: m must be >= 1");
  if (m > kMaxPatternLen) {
    throw Error(Error::Kind::resource_limit, "mine: m exceeds the grid limit of 7");
  }
  // Deduplicate the input set.
  std::vector<Perm> input = A;
  std::sort(input.begin(), input.end());
  input.erase(std::unique(input.begin(), input.end()), input.end());

  MineResult result;
  result.m = m;
  for (int k = 1; k <= m; ++k) {
    for (const Perm& p : all_perms(k)) result.entries[p] = ShadingFamily{p, {}};
  }

  const int nthreads = std::max(1, threads);
  if (nthreads == 1 || input.size() < 2) {
    FamilyMap sh;
    mine_into(sh, input, m);
    for (auto& [p, fam] : sh) result.entries[p] = std::move(fam);
  } else {
    std::vector<FamilyMap> partial(nthreads);
    std::vector<std::thread> workers;
    const std::size_t chunk = (input.size() + nthreads - 1) / nthreads;
    for (int t = 0; t < nthreads; ++t) {
      const std::size_t lo = std::min(input.size(), t * chunk);
      const std::size_t hi = std::min(input.size(), lo + chunk);
      workers.emplace_back([&, t, lo, hi] {
        std::vector<Perm> part(input.begin() + lo, input.begin() + hi);
        mine_into(partial[t], part, m);
      });
    }
    for (auto& w : workers) w.join();
    // Union then antichain-prune: the set of maximal elements of the union is
    // canonical, so the merged result is independent of chunking.
    for (FamilyMap& part : partial) {
      for (auto& [p, fam] : part) {
        for (CellSet s : fam.shadings) result.entries[p].insert_maximal(s);
      }
    }
  }
  for (auto& [p, fam] : result.entries) {
    fam.pat = p;
    fam.sort();
  }
  return result;
}

ForbResult forb(const MineResult& S) {
  ForbResult out;
  // Patterns by increasing length, then lexicographically (std::map order on
  // Perm is length-compatible only within a length; enforce explicitly).
  std::vector<Perm> keys;
  for (const auto& [p, fam] : S.entries) keys.push_back(p);
  std::sort(keys.begin(), keys.end(), [](const Perm& a, const Perm& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  for (const Perm& p : keys) {
    const int k = static_cast<int>(p.size());
    std::vector<CellSet> candidates =
        minimal_blockers(S.entries.at(p).shadings, k);
    std::sort(candidates.begin(), candidates.end(), [&](CellSet a, CellSet b) {
      return sorted_cells(a, k) < sorted_cells(b, k);
    });
    std::vector<CellSet> kept;
    for (CellSet R : candidates) {
      bool redundant = false;
      for (const Perm& q : keys) {
        if (q.size() >= p.size()) break;
        auto it = out.entries.find(q);
        if (it == out.entries.end()) continue;
        for (CellSet Rq : it->second) {
          if (shading_consequence(p, R, q, Rq)) {
            redundant = true;
            break;
          }
        }
        if (redundant) break;
      }
      if (!redundant) kept.push_back(R);
    }
    out.entries[p] = std::move(kept);
  }
  return out;
}

std::vector<MeshPattern> bisc(const std::vector<Perm>& A, int m, int threads) {
  const ForbResult fb = forb(mine(A, m, threads));
  std::vector<Perm> keys;
  for (const auto& [p, fams] : fb.entries) keys.push_back(p);
  std::sort(keys.begin(), keys.end(), [](const Perm& a, const Perm& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  std::vector<MeshPattern> out;
  for (const Perm& p : keys) {
    std::vector<CellSet> shadings = fb.entries.at(p);
    std::sort(shadings.begin(), shadings.end());
    for (CellSet R : shadings) out.push_back(MeshPattern{p, R});
  }
  return out;
}

std::vector<Perm> enumerate_avoiders(const std::vector<DecoratedPattern>& basis,
                                     int n, bool upto, int guard) {
  if (n < 0) throw Error(Error::Kind::invalid_input, "enumerate_avoiders: n < 0");
  if (n > guard) {
    throw Error(Error::Kind::resource_limit,
                "enumerate_avoiders: n exceeds the guard bound");
  }
  std::vector<Perm> out;
  const std::vector<Perm> source = upto ? all_perms_upto(n) : all_perms(n);
  for (const Perm& pi : source) {
    if (!contains_any(pi, basis)) out.push_back(pi);
  }
  return out;
}

VerifyReport verify_basis(const std::function<bool(const Perm&)>& membership,
                          const std::vector<DecoratedPattern>& basis, int n) {
  for (int len = 1; len <= n; ++len) {
    for (const Perm& pi : all_perms(len)) {
      const bool avoider = !contains_any(pi, basis);
      const bool member = membership(pi);
      if (avoider != member) {
        return VerifyReport{false, pi, avoider};
      }
    }
  }
  return VerifyReport{};
}

}  // namespace pforge
