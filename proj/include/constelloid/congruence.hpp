#pragma once

#include <optional>
#include <vector>

#include "constelloid/core.hpp"
#include "constelloid/extension.hpp"
#include "constelloid/morphism.hpp"

namespace constelloid {

struct CongruenceFlags {
  bool congruence = false;
  bool strong = false;
  bool canonical = false;
};

// Decides congruence / strong / canonical exhaustively.  On categories the
// canonical property is decided through its three-condition form; on plain
// constellations through the projection-separation form.
CongruenceFlags check_congruence(const StructureDef& def, const Relation& rel);

// Kernel of a morphism as an equivalence relation on its source.
Relation kernel_relation(const Morphism& m);

struct QuotientResult {
  StructureDef quotient;        // a constellation
  std::vector<IdSet> classes;   // per quotient id, the source elements
  Morphism projection;          // source -> quotient
  bool reconstruction_ok = false;
  Morphism reconstruction;      // source -> canonical extension of quotient
};

// Quotient of a category by a canonical congruence, with the reconstruction
// isomorphism onto the canonical extension of the quotient verified.
QuotientResult quotient(const StructureDef& cat, const Relation& delta);

// For a canonical radiant rho : K -> Q, the map s -> (s rho, R(s) rho) into
// the canonical extension of Q, verified to be a bijective functor.
struct ReconstructionResult {
  Morphism morphism;
  bool isomorphism = false;
};

ReconstructionResult canonical_reconstruction(const Morphism& rho);

}  // namespace constelloid
