#pragma once

#include <optional>
#include <vector>

#include "constelloid/category.hpp"
#include "constelloid/constellation.hpp"
#include "constelloid/core.hpp"
#include "constelloid/morphism.hpp"
#include "constelloid/ordered.hpp"

namespace constelloid {

// One arrow of the canonical extension: an element together with a
// projection it composes with.
struct PairElement {
  ElementId underlying;
  ElementId cod;

  bool operator==(const PairElement&) const = default;
};

struct CanonicalExtension {
  StructureDef category;
  std::vector<PairElement> pairs;  // indexed by extension id, lex order

  ElementId pair_id(ElementId underlying, ElementId cod) const;
};

// All pairs (s, e) with s*e defined, e a projection; composition
// (s, e) o (t, f) = (s*t, f) when e = D(t).
CanonicalExtension canonical_extension(const StructureDef& q);

// Pairs whose underlying element is a projection.
IdSet insertion_part(const CanonicalExtension& ext);

struct SurjectionPart {
  IdSet ids;  // the pairs (s, R(s))
  bool subcategory = false;
  std::optional<std::array<ElementId, 2>> closure_witness;
  bool isomorphic_to_derived = false;
};

// Requires a pre-range (the structure's own rmap, or inferred).
SurjectionPart surjection_part(const StructureDef& q,
                               const CanonicalExtension& ext);

struct ISFactorization {
  bool ok = false;
  std::vector<ElementId> surjection_factor;  // per extension element
  std::vector<ElementId> insertion_factor;
  std::optional<ElementId> failure;
};

// Every (s, e) factors uniquely as (s, R(s)) o (R(s), e); verified by
// scanning all candidate pairs.
ISFactorization unique_is_factorization(const StructureDef& q,
                                        const CanonicalExtension& ext);

// e*f = e whenever e <= f; domain and range maps are the identity.
StructureDef constellation_from_poset(const Relation& order,
                                      const std::vector<std::string>& labels,
                                      const std::string& name = "poset");

// One arrow per related pair, composed by transitivity.
StructureDef thin_category(const Relation& order,
                           const std::vector<std::string>& labels,
                           const std::string& name = "thin");

struct CxConstellation {
  StructureDef def;
  // Per element: the value vector of the partial self-map, kUndefined for
  // points outside the domain.
  std::vector<std::vector<ElementId>> maps;

  ElementId id_of(const std::vector<ElementId>& map) const;
};

inline constexpr int kDefaultCxCap = 4;

// All partial self-maps of an n-point set; composition defined when the
// image of the first lies inside the domain of the second.
CxConstellation cx_constellation(int n, int cap = kDefaultCxCap);

struct MonoidDef {
  OpTable table;  // total
  ElementId identity = 0;
  std::vector<std::string> labels;
};

StructureDef monoid_as_constellation(const MonoidDef& monoid,
                                     const std::string& name = "monoid");

struct ActionConstellation {
  StructureDef def;
  Morphism projection;  // (x, m) -> m, into the monoid structure
  std::vector<std::pair<ElementId, ElementId>> points;  // per id: (x, m)
};

// Elements X x M with (x, m)*(y, n) = (x, mn) when x.m <= y; the monoid
// and action laws are verified, not trusted.
ActionConstellation action_constellation(const Relation& poset,
                                         const std::vector<std::string>& x_labels,
                                         const MonoidDef& monoid,
                                         const std::vector<std::vector<ElementId>>& action,
                                         const std::string& name = "action");

struct DrSemigroupResult {
  StructureDef def;
  std::vector<AxiomReport> constellation_reports;
  std::vector<AxiomReport> range_reports;
};

// Restricted product a*b = ab exactly when R(a) <= D(b), the order on
// projection values being e <= f iff ef = e in the semigroup.
DrSemigroupResult constellation_from_dr_semigroup(
    const OpTable& semigroup, const std::vector<ElementId>& dmap,
    const std::vector<ElementId>& rmap,
    const std::vector<std::string>& labels,
    const std::string& name = "dr-semigroup");

}  // namespace constelloid
