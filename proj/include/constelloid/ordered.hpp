#pragma once

#include <array>
#include <optional>
#include <vector>

#include "constelloid/category.hpp"
#include "constelloid/constellation.hpp"
#include "constelloid/core.hpp"

namespace constelloid {

// O1: a <= b and c <= d with ac, bd defined imply ac <= bd.
// O2: a <= b implies D(a) <= D(b).
// O2': a <= b implies R(a) <= R(b) (only when a range map is present).
// OO: a <= b with D(a) = D(b) and R(a) = R(b) implies a = b (informative;
//     holds in some settings and not others).
std::vector<AxiomReport> check_ordered_axioms(const StructureDef& def,
                                              const Relation& order);

struct RestrictionTable {
  // cells.at(e, s) is the unique x <= s with D(x) = e, for projections e
  // with e <= D(s); kUndefined elsewhere.
  OpTable cells;
  bool total = true;
  std::optional<std::array<ElementId, 2>> missing;
  std::optional<std::array<ElementId, 2>> ambiguous;
  // Whether e|s = e*s wherever the restriction is defined.
  bool matches_left_multiplication = false;
};

RestrictionTable restriction_table(const StructureDef& def,
                                   const Relation& order);

// RL: R(e|s)|t = R(e|s)|(R(s)|t), and e|(s o t) = (e|s) o (R(e|s)|t) when
//     s o t exists.
AxiomReport check_restriction_composition(const StructureDef& cat,
                                          const Relation& order,
                                          const RestrictionTable& rt);

// OR: s <= t iff D(s) <= D(t) and s = D(s)|t.
AxiomReport check_order_recovery(const StructureDef& cat,
                                 const Relation& order,
                                 const RestrictionTable& rt);

// Keep only the products with R(s) = D(t); the natural order of the input
// is attached to the result.
StructureDef derived_category(const StructureDef& def);

// Rebuild the full product s*t = s o (R(s)|t) whenever R(s) <= D(t).
StructureDef constellation_of_ordered_category(const StructureDef& cat,
                                               const Relation& order);

// Apply the two constructions in both orders and compare on the nose.
bool roundtrip_check(const StructureDef& def);

}  // namespace constelloid
