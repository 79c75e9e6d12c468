#include "pforge/perm.hpp"

#include <algorithm>
#include <numeric>

namespace pforge {

Perm flatten(const Word& w) {
  Word sorted_letters = w;
  std::sort(sorted_letters.begin(), sorted_letters.end());
  if (std::adjacent_find(sorted_letters.begin(), sorted_letters.end()) !=
      sorted_letters.end()) {
    throw Error(Error::Kind::invalid_input, "flatten: duplicate letters in word");
  }
  Perm out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    out[i] = static_cast<int>(std::lower_bound(sorted_letters.begin(),
                                               sorted_letters.end(), w[i]) -
                              sorted_letters.begin()) +
             1;
  }
  return out;
}

bool is_permutation(const std::vector<int>& values) {
  const int n = static_cast<int>(values.size());
  std::vector<bool> seen(n, false);
  for (int v : values) {
    if (v < 1 || v > n || seen[v - 1]) return false;
    seen[v - 1] = true;
  }
  return true;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = identity_perm(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<Perm> all_perms_upto(int n) {
  std::vector<Perm> out;
  for (int k = 1; k <= n; ++k) {
    auto pk = all_perms(k);
    out.insert(out.end(), pk.begin(), pk.end());
  }
  return out;
}

std::vector<std::vector<int>> subwords_leq(const Perm& pi, int m) {
  const int n = static_cast<int>(pi.size());
  std::vector<std::vector<int>> out;
  std::vector<int> idx;
  auto rec = [&](auto&& self, int start) -> void {
    if (!idx.empty()) out.push_back(idx);
    if (static_cast<int>(idx.size()) == m) return;
    for (int i = start; i < n; ++i) {
      idx.push_back(i);
      self(self, i + 1);
      idx.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

std::set<Inversion> inversions(const Perm& pi) {
  std::set<Inversion> out;
  const int n = static_cast<int>(pi.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (pi[i] > pi[j]) out.insert({pi[i], pi[j]});
  return out;
}

Perm reverse(const Perm& pi) { return Perm(pi.rbegin(), pi.rend()); }

Perm complement(const Perm& pi) {
  const int n = static_cast<int>(pi.size());
  Perm out(pi.size());
  for (std::size_t i = 0; i < pi.size(); ++i) out[i] = n + 1 - pi[i];
  return out;
}

bool is_identity(const Perm& pi) {
  for (std::size_t i = 0; i < pi.size(); ++i)
    if (pi[i] != static_cast<int>(i) + 1) return false;
  return true;
}

Perm identity_perm(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 1);
  return p;
}

}  // namespace pforge
