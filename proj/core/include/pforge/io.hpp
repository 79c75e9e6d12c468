#pragma once

#include <string>
#include <vector>

#include "pforge/pattern.hpp"
#include "pforge/perm.hpp"

namespace pforge {

// One-line form: concatenated digits for n <= 9, space-separated otherwise.
std::string perm_to_string(const Perm& pi);

// Auto-detects the two forms.  Throws a parse error on malformed input.
Perm parse_perm(const std::string& text);

// Pattern text notation (bit-exact round trip):
//   classical        ->  one-line form, e.g. 231
//   mesh             ->  p|{(c,r),(c,r),...}
//   marked mesh      ->  adds [c1..c2,r1..r2:k] regions; a non-rectangular
//                        region is a union of rectangles joined by '+'
//   decorated        ->  adds A[region:pattern] and C[region:pattern]
// Example: 3241|{(1,4)}
std::string pattern_to_string(const DecoratedPattern& dp);
std::string pattern_to_string(const MeshPattern& mp);
std::string pattern_to_string(const MarkedMeshPattern& mmp);

DecoratedPattern parse_pattern(const std::string& text);

// Semicolon-separated list of patterns.
std::vector<DecoratedPattern> parse_pattern_list(const std::string& text);

// JSON object with stable field order:
// {"pattern": [...], "shading": [[c,r]...], "marks": [...],
//  "avoid_dec": [...], "contain_dec": [...]}
std::string pattern_to_json(const DecoratedPattern& dp);
std::string patterns_to_json(const std::vector<DecoratedPattern>& dps);

}  // namespace pforge
