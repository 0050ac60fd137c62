#pragma once

#include <optional>
#include <vector>

#include "constelloid/core.hpp"

namespace constelloid {

struct IsoResult {
  bool isomorphic = false;
  // Witness bijection source id -> target id.
  std::optional<std::vector<ElementId>> witness;
};

// Backtracking search over bijections preserving table, dmap, and, when
// present on both sides, rmap, order, insertion and surjection sets.
// The two structures must have the same kind and optional-field shape.
IsoResult are_isomorphic(const StructureDef& a, const StructureDef& b);

// Relabel by perm (perm[old] = new id).  Labels travel with their elements.
StructureDef apply_permutation(const StructureDef& def,
                               const std::vector<ElementId>& perm);

// Lexicographically least (dmap, table) encoding over all relabellings.
std::vector<ElementId> canonical_key(const StructureDef& def);
StructureDef canonical_form(const StructureDef& def);

int automorphism_count(const StructureDef& def);

}  // namespace constelloid
