#include "pforge/corpus.hpp"

#include <algorithm>
#include <functional>

#include "pforge/sorters.hpp"

namespace pforge {

TableauShape rsk_shape(const Perm& pi) {
  std::vector<std::vector<int>> rows;
  for (int x : pi) {
    int cur = x;
    bool placed = false;
    for (auto& row : rows) {
      auto it = std::upper_bound(row.begin(), row.end(), cur);
      if (it == row.end()) {
        row.push_back(cur);
        placed = true;
        break;
      }
      std::swap(cur, *it);
    }
    if (!placed) rows.push_back({cur});
  }
  TableauShape shape;
  for (const auto& row : rows) shape.push_back(static_cast<int>(row.size()));
  return shape;
}

bool shape_contains(const TableauShape& outer, const TableauShape& inner) {
  if (inner.size() > outer.size()) return false;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    if (outer[i] < inner[i]) return false;
  }
  return true;
}

std::vector<std::string> named_class_names() {
  return {"stack_sortable", "west_2",    "west_3",
          "simsun_basis_class", "smooth",    "forest_like_basis_class",
          "hook_rsk",       "shape32_avoiding_rsk", "quicksort_1pass"};
}

bool is_named_class(const std::string& name) {
  const auto names = named_class_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

namespace {

std::function<bool(const Perm&)> membership_of(const std::string& name) {
  if (name == "stack_sortable") {
    return [](const Perm& pi) { return is_identity(stack_sort(pi)); };
  }
  if (name == "west_2") {
    return [](const Perm& pi) { return west_sortable(pi, 2); };
  }
  if (name == "west_3") {
    return [](const Perm& pi) { return west_sortable(pi, 3); };
  }
  if (name == "quicksort_1pass") {
    return [](const Perm& pi) { return is_identity(quicksort_pass(pi)); };
  }
  if (name == "smooth") {
    return [](const Perm& pi) {
      return !contains_classical(pi, {1, 3, 2, 4}) &&
             !contains_classical(pi, {2, 1, 4, 3});
    };
  }
  if (name == "simsun_basis_class") {
    const MeshPattern q{Perm{3, 2, 1},
                        cell_mask(3, 1, 0) | cell_mask(3, 1, 1) | cell_mask(3, 2, 2)};
    return [q](const Perm& pi) { return !contains_mesh(pi, q); };
  }
  if (name == "forest_like_basis_class") {
    const MeshPattern q{Perm{2, 1, 4, 3}, cell_mask(4, 2, 2)};
    return [q](const Perm& pi) {
      return !contains_classical(pi, {1, 3, 2, 4}) && !contains_mesh(pi, q);
    };
  }
  if (name == "hook_rsk") {
    return [](const Perm& pi) { return !shape_contains(rsk_shape(pi), {2, 2}); };
  }
  if (name == "shape32_avoiding_rsk") {
    return [](const Perm& pi) { return !shape_contains(rsk_shape(pi), {3, 2}); };
  }
  throw Error(Error::Kind::unknown_name, "unknown named class: " + name);
}

// Insert an extra point into square (c, r) of p: position between c and c+1,
// value between r and r+1.
Perm insert_at(const Perm& p, int c, int r) {
  Word w;
  for (int i = 0; i < static_cast<int>(p.size()); ++i) {
    if (i == c) w.push_back(2 * r + 1);
    w.push_back(2 * p[i]);
  }
  if (c == static_cast<int>(p.size())) w.push_back(2 * r + 1);
  return flatten(w);
}

}  // namespace

std::vector<Perm> named_class(const std::string& name, int n, int guard) {
  const auto member = membership_of(name);
  if (n > guard) {
    throw Error(Error::Kind::resource_limit, "named_class: n exceeds the guard bound");
  }
  std::vector<Perm> out;
  for (const Perm& pi : all_perms_upto(n)) {
    if (member(pi)) out.push_back(pi);
  }
  return out;
}

std::vector<MarkedMeshPattern> shape32_patterns() {
  const std::vector<std::pair<Perm, CellSet>> bases = {
      {{2, 1, 4, 3}, 0},
      {{3, 4, 1, 2}, 0},
      {{3, 1, 4, 2}, cell_mask(4, 2, 2)},
      {{2, 4, 1, 3}, cell_mask(4, 2, 2)},
  };
  std::vector<MarkedMeshPattern> out;
  for (const auto& [p, shd] : bases) {
    const int k = static_cast<int>(p.size());
    CellSet region = 0;
    for (int c = 0; c <= k; ++c) {
      for (int r = 0; r <= k; ++r) {
        if (cell_in(shd, k, c, r)) continue;
        if (shape_contains(rsk_shape(insert_at(p, c, r)), {3, 2})) {
          region |= cell_mask(k, c, r);
        }
      }
    }
    out.push_back(MarkedMeshPattern{MeshPattern{p, shd}, {Mark{region, 1}}});
  }
  return out;
}

}  // namespace pforge
