#pragma once

#include "constelloid/congruence.hpp"
#include "constelloid/extension.hpp"
#include "constelloid/isstruct.hpp"
#include "constelloid/morphism.hpp"

namespace constelloid {

struct ExtensionFunctorResult {
  Morphism functor;  // between the two canonical extensions
  bool functorial = false;
  bool preserves_insertions = false;
  bool preserves_surjections = false;
  bool ok = false;
};

// (s, e) -> (s rho, e rho) for a range radiant rho.
ExtensionFunctorResult extension_functor(const Morphism& rho);

struct RestrictionRadiantResult {
  Morphism radiant;  // between the two surjection constellations
  bool range_radiant = false;
};

// Restriction of an IS-functor to the surjection constellations.
RestrictionRadiantResult restriction_radiant(const Morphism& f,
                                             const ISWitness& source_w,
                                             const ISWitness& target_w);

// Canonical IS-structure of a canonical extension: its insertion and
// surjection parts, witnessed.
ISWitness extension_is_witness(const StructureDef& q,
                               const CanonicalExtension& ext);

struct EtaResult {
  Morphism eta;  // q -> surjection constellation of its extension
  bool isomorphism = false;
};

EtaResult eta_embedding(const StructureDef& q);

struct NaturalityResult {
  bool eta_isomorphisms = false;
  bool eta_square = false;
  bool tau_isomorphisms = false;
  bool tau_square = false;
  bool all = false;
};

// For a range radiant rho, the square linking rho with the radiant induced
// by its extension functor.
struct EtaSquareResult {
  bool isomorphisms = false;
  bool commutes = false;
  // The induced radiant agrees with rho transported along the embeddings.
  bool recovers_rho = false;
};

EtaSquareResult eta_square(const Morphism& rho);

struct TauSquareResult {
  bool isomorphisms = false;
  bool commutes = false;
};

TauSquareResult tau_square(const Morphism& f, const ISWitness& source_w,
                           const ISWitness& target_w);

NaturalityResult naturality_check(const Morphism& rho, const Morphism& f,
                                  const ISWitness& source_w,
                                  const ISWitness& target_w);

}  // namespace constelloid
