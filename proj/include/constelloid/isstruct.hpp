#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "constelloid/category.hpp"
#include "constelloid/core.hpp"
#include "constelloid/extension.hpp"
#include "constelloid/morphism.hpp"
#include "constelloid/ordered.hpp"

namespace constelloid {

// I0: the insertion set is an identity-containing subcategory.
// I1: between any two identities, at most one insertion in either direction.
// I2: s o i an insertion (i an insertion) forces s to be an insertion.
std::vector<AxiomReport> check_i_category(const StructureDef& cat,
                                          const IdSet& insertions);

struct IOrderResult {
  Relation order;
  // IPO: the relation is a partial order.
  // O1/O2/O2': the category is ordered by it.
  // IE: restricted to identities it matches insertion existence.
  // IL: membership in the insertion set is equivalent to D(s) <= s.
  std::vector<AxiomReport> reports;
};

// s <= t iff s o i = j o t for some insertions i, j.
IOrderResult i_order(const StructureDef& cat, const IdSet& insertions);

struct ISWitness {
  IdSet insertions;
  IdSet surjections;
  std::vector<ElementId> surjection_factor;  // s_a per arrow
  std::vector<ElementId> insertion_factor;   // i_a per arrow
};

struct ISCheckResult {
  bool ok = false;
  std::vector<AxiomReport> reports;
  std::optional<ISWitness> witness;
};

// IS0: both classes are identity-containing subcategories.
// IS1: as I1.
// IS2: every arrow factors uniquely as surjection-then-insertion.
// Cross-checks on success: I2 holds, the two classes meet in the
// identities, insertions are monomorphisms, and a o i landing in the
// surjections forces a surjective with i = R(a).
ISCheckResult check_is_category(const StructureDef& cat, const IdSet& insertions,
                                const IdSet& surjections);

StructureDef with_is_subsets(const StructureDef& cat, const IdSet& insertions,
                             const IdSet& surjections);

struct RegularityResult {
  bool regular = false;
  // Epimorphy inside the surjection subcategory agrees with epimorphy in
  // the whole category, member by member.
  bool transfer_agrees = false;
  std::optional<ElementId> witness;
};

RegularityResult is_regular(const StructureDef& cat, const ISWitness& w);

struct WfsResult {
  bool wfs = false;
  bool routes_agree = false;
  bool monos_in_s_iso = false;   // every monomorphism in S is an isomorphism
  bool pairwise_route = false;   // a ~ b iff i_a = i_b on same-range monos
  bool insertion_route = false;  // a ~ i_a for every monomorphism
  std::optional<ElementId> witness;
};

WfsResult has_well_founded_subobjects(const StructureDef& cat,
                                      const ISWitness& w);

struct ISFunctorResult {
  bool functor = false;
  bool preserves_insertions = false;
  bool preserves_surjections = false;
  bool ok = false;
  // Insertion preservation matches I-order preservation.
  bool order_preservation_agrees = false;
};

ISFunctorResult check_is_functor(const Morphism& f, const ISWitness& source_w,
                                 const ISWitness& target_w);

struct FunctorialityOutcome {
  ElementId diagonal = kUndefined;
  bool equations_hold = false;
  bool unique = false;
};

// For a o s o i = t o j o b with s, t surjections and i, j insertions,
// produce the unique c with a o s = t o c and j o b = c o i.
FunctorialityOutcome functoriality_witness(const StructureDef& cat,
                                           const ISWitness& w, ElementId a,
                                           ElementId s, ElementId i,
                                           ElementId t, ElementId j,
                                           ElementId b);

enum class TriState { kHolds, kFails, kNotApplicable };

struct EqualiserEquivalence {
  TriState status = TriState::kNotApplicable;
  bool insertion_equalisers = false;
  bool regular = false;
};

// In a category with equalisers: every parallel pair has an insertion
// equaliser iff the structure is regular.  Both sides evaluated
// independently and compared.
EqualiserEquivalence insertion_equaliser_check(const StructureDef& cat,
                                               const ISWitness& w);

struct BalancedEquivalence {
  bool agree = false;
  bool balanced = false;
  bool s_is_epis = false;
  bool wfs = false;
};

// On a regular structure: balanced iff the surjections are exactly the
// epimorphisms and subobjects are well-founded.
BalancedEquivalence balanced_equivalence_check(const StructureDef& cat,
                                               const ISWitness& w);

struct SurjectionConstellation {
  StructureDef sprime;  // constellation with range, ordered by the I-order
  std::vector<ElementId> to_parent;
  std::vector<ElementId> from_parent;
};

SurjectionConstellation surjection_constellation(const StructureDef& cat,
                                                 const ISWitness& w);

struct PsiResult {
  SurjectionConstellation sc;
  CanonicalExtension ext;  // canonical extension of sprime
  Morphism psi;            // cat -> ext.category, a -> (s_a, R(a))
  Morphism rho;            // cat -> sprime, a -> s_a
  bool psi_isomorphism_ok = false;
  bool surjections_match = false;
  bool insertions_match = false;
  bool rho_canonical = false;
  bool verdict = false;
};

PsiResult psi_isomorphism(const StructureDef& cat, const ISWitness& w);

// Search tools for the open questions about I-categories.  Neither answer
// is assumed anywhere; these only search.

// Exhaustive search for a surjection class turning the I-category into an
// IS-category with the same insertions.
std::optional<ISWitness> find_is_extension(const StructureDef& cat,
                                           const IdSet& insertions);

struct ExtensionMatch {
  std::optional<StructureDef> constellation;
  int max_size_searched = -1;
};

// Search the census for a constellation whose canonical extension is
// isomorphic to the given I-category, insertions corresponding.
ExtensionMatch find_matching_extension(const StructureDef& cat,
                                       const IdSet& insertions, int n_max);

}  // namespace constelloid
