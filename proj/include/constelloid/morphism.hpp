#pragma once

#include <optional>
#include <vector>

#include "constelloid/core.hpp"

namespace constelloid {

struct RadiantFlags {
  bool well_formed = false;
  bool radiant = false;
  bool full = false;
  bool surjective = false;
  bool star_injective = false;
  bool range_radiant = false;
  bool canonical = false;
};

// A total map between two structures, stored with copies of both ends.
// Treated as immutable once built; the flag cache relies on that.
struct Morphism {
  StructureDef source;
  StructureDef target;
  std::vector<ElementId> map;
  mutable std::optional<RadiantFlags> cached_flags;

  ElementId apply(ElementId x) const { return map[static_cast<std::size_t>(x)]; }
};

// All flags decided exhaustively on first use and cached on the value.
// range_radiant requires range maps on both ends; canonical requires one on
// the source.
RadiantFlags check_radiant(const Morphism& m);

// Every target element is hit from every source projection's fibre.
bool covering_condition(const Morphism& m);

bool is_injective(const Morphism& m);
bool is_bijective(const Morphism& m);

// Bijective radiant whose inverse is a radiant, preserving ranges when both
// ends carry them.
bool is_structure_isomorphism(const Morphism& m);

Morphism identity_morphism(const StructureDef& def);
Morphism compose_morphisms(const Morphism& first, const Morphism& second);
Morphism inverse_morphism(const Morphism& m);

}  // namespace constelloid
