#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "pforge/perm.hpp"

namespace pforge {

// Grid squares of a length-k pattern live on the (k+1)x(k+1) grid.  Square
// (c, r) is the open region strictly between pattern positions c and c+1
// (c = 0: left of all points, c = k: right of all) and strictly between
// pattern values r and r+1.  A set of squares is a bitmask with bit
// c*(k+1)+r; this limits pattern length to kMaxPatternLen.
using CellSet = std::uint64_t;

inline constexpr int kMaxPatternLen = 7;

inline int cell_bit(int k, int c, int r) { return c * (k + 1) + r; }
inline CellSet cell_mask(int k, int c, int r) {
  return CellSet{1} << cell_bit(k, c, r);
}
inline bool cell_in(CellSet s, int k, int c, int r) {
  return (s >> cell_bit(k, c, r)) & 1;
}
CellSet full_grid(int k);
// Axis-aligned rectangle of squares, both bounds inclusive.
CellSet cell_rect(int k, int c1, int c2, int r1, int r2);
std::vector<std::pair<int, int>> cells_of(CellSet s, int k);

struct MeshPattern {
  Perm pat;
  CellSet shading = 0;

  int k() const { return static_cast<int>(pat.size()); }
  friend bool operator==(const MeshPattern&, const MeshPattern&) = default;
  friend auto operator<=>(const MeshPattern&, const MeshPattern&) = default;
};

// Region of grid squares that must contain at least min_count points.  The
// region may be any union of squares (the (3,2)-shape proposition needs
// non-rectangular unions).
struct Mark {
  CellSet region = 0;
  int min_count = 1;

  friend bool operator==(const Mark&, const Mark&) = default;
  friend auto operator<=>(const Mark&, const Mark&) = default;
};

struct MarkedMeshPattern {
  MeshPattern base;
  std::vector<Mark> marks;

  friend bool operator==(const MarkedMeshPattern&, const MarkedMeshPattern&) = default;
};

// Region that must avoid (D) or contain (C) a mesh pattern, evaluated on the
// flattening of the points inside the region.
struct Decoration {
  CellSet region = 0;
  MeshPattern q;

  friend bool operator==(const Decoration&, const Decoration&) = default;
  friend auto operator<=>(const Decoration&, const Decoration&) = default;
};

// The 5-tuple (p, S, M, D, C).  Mesh patterns are the special case
// M = D = C = {}; marked mesh patterns the case D = C = {}.
struct DecoratedPattern {
  Perm pat;
  CellSet shading = 0;
  std::vector<Mark> marks;
  std::vector<Decoration> avoid;
  std::vector<Decoration> contain;

  int k() const { return static_cast<int>(pat.size()); }
  friend bool operator==(const DecoratedPattern&, const DecoratedPattern&) = default;
  friend auto operator<=>(const DecoratedPattern&, const DecoratedPattern&) = default;
};

DecoratedPattern as_decorated(const MeshPattern& mp);
DecoratedPattern as_decorated(const MarkedMeshPattern& mmp);

// An antichain of shadings of one classical pattern (sh_p / forb_p).
struct ShadingFamily {
  Perm pat;
  std::vector<CellSet> shadings;  // kept sorted, pairwise incomparable

  // Inserts unless dominated by an existing member; removes members the new
  // shading dominates.  Returns true if inserted.
  bool insert_maximal(CellSet s);
  void sort();
};

// All 0-based index sequences in pi flattening to p.
std::vector<std::vector<int>> occurrences_classical(const Perm& pi, const Perm& p);

// Grid cell of pi's point at position t (t not in occ) relative to occ.
std::pair<int, int> cell_of(const Perm& pi, const std::vector<int>& occ, int t);

// The maximal shading of the length-k pattern for the occurrence occ in pi:
// every square whose induced region contains no point of pi.
CellSet maximal_shading(const Perm& pi, const std::vector<int>& occ, int k);

bool contains_classical(const Perm& pi, const Perm& p);
bool contains_mesh(const Perm& pi, const MeshPattern& mp);
bool contains_marked(const Perm& pi, const MarkedMeshPattern& mmp);
bool contains_decorated(const Perm& pi, const DecoratedPattern& dp);

bool contains_any(const Perm& pi, const std::vector<DecoratedPattern>& basis);

// Inclusion-minimal shadings R with R not a subset of any member of the
// family: the minimal hitting sets of the complement sets.
std::vector<CellSet> minimal_blockers(const std::vector<CellSet>& family, int k);

// Structural consequence: some occurrence of q in p maps every square of Rq
// onto a block of squares of p that is fully inside R and point-free.
bool shading_consequence(const Perm& p, CellSet R, const Perm& q, CellSet Rq);

}  // namespace pforge
