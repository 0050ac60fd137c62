#pragma once

#include <optional>
#include <vector>

#include "constelloid/core.hpp"

namespace constelloid {

// C1: x(yz) defined iff (xy)z defined, and then equal.
// C2: xy and yz defined imply x(yz) defined.
// C3: D(x) and R(x) are identities with D(x)x = x = xR(x).
// CC: composability rule: xy defined iff R(x) = D(y); then D(xy) = D(x)
//     and R(xy) = R(y).
std::vector<AxiomReport> check_category_axioms(const StructureDef& def);

bool is_category(const StructureDef& def);

struct ArrowFlags {
  bool epi = false;
  bool mono = false;
  bool iso = false;
  bool bimorphism = false;
};

struct MorphismClassification {
  std::vector<ArrowFlags> arrows;
  std::vector<ElementId> inverse;  // kUndefined where not an isomorphism
};

MorphismClassification classify_morphisms(const StructureDef& cat);

bool is_epimorphism(const StructureDef& cat, ElementId a);
bool is_monomorphism(const StructureDef& cat, ElementId a);
std::optional<ElementId> iso_inverse(const StructureDef& cat, ElementId a);

// All equalisers of the parallel pair (a, b), by exhaustive search over
// candidates and factorisations.
IdSet equalisers(const StructureDef& cat, ElementId a, ElementId b);

bool has_equalisers(const StructureDef& cat);

struct SubobjectStructure {
  IdSet monos;               // monomorphisms with range e
  Relation factors_through;  // a <= b iff a = x o b for some x
  std::vector<IdSet> blocks; // equivalence classes under mutual factorisation
};

SubobjectStructure subobject_structure(const StructureDef& cat, ElementId e);

struct BalanceResult {
  bool balanced = true;
  std::optional<ElementId> witness;  // a bimorphism without inverse
};

BalanceResult is_balanced(const StructureDef& cat);

// FS1: both classes contain all isomorphisms and are composition-closed.
// FS2: every arrow factors as s o m with s in S, m in M.
// FS3: unique diagonal for every bordering 6-tuple.
// FSI: on pass, S intersect M is exactly the isomorphism set.
struct FactorizationReport {
  bool pass = false;
  std::vector<AxiomReport> conditions;
};

FactorizationReport check_factorization_system(const StructureDef& cat,
                                               const IdSet& s_class,
                                               const IdSet& m_class);

struct SubcategoryView {
  StructureDef sub;
  std::vector<ElementId> to_parent;
  std::vector<ElementId> from_parent;  // kUndefined where absent
};

// Restrict a category to a composition-closed subset of arrows whose domain
// and range identities all lie in the subset.
SubcategoryView subcategory(const StructureDef& cat, const IdSet& members);

IdSet identity_arrows(const StructureDef& cat);

}  // namespace constelloid
