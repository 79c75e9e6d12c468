#pragma once

#include <string>
#include <vector>

#include "pforge/pattern.hpp"
#include "pforge/perm.hpp"

namespace pforge {

// Weakly decreasing row lengths of a Young-tableau shape.
using TableauShape = std::vector<int>;

// Common shape of the RSK insertion/recording tableaux (Schensted row
// insertion).
TableauShape rsk_shape(const Perm& pi);

// Componentwise containment of shapes.
bool shape_contains(const TableauShape& outer, const TableauShape& inner);

// Named classes used as BiSC inputs and acceptance fixtures.
// Valid names: stack_sortable, west_2, west_3, simsun_basis_class, smooth,
// forest_like_basis_class, hook_rsk, shape32_avoiding_rsk, quicksort_1pass.
std::vector<std::string> named_class_names();
bool is_named_class(const std::string& name);

// All members of length 1..n.  Throws unknown-class / resource-limit errors.
std::vector<Perm> named_class(const std::string& name, int n, int guard = 9);

// The four marked mesh patterns of the (3,2)-shape proposition.  Each mark
// region is the set of grid squares where inserting an extra point into the
// base keeps the tableau shape containing (3,2).
std::vector<MarkedMeshPattern> shape32_patterns();

}  // namespace pforge
