#pragma once

#include <array>
#include <optional>
#include <vector>

#include "constelloid/core.hpp"

namespace constelloid {

// Q1: x(yz) defined implies (xy)z defined and equal.
// Q2: xy and yz defined imply x(yz) defined.
// Q3: D(x) is the unique right identity that fixes x from the left.
// QC: derived law: s*t defined iff s*D(t) defined, and then D(s*t) = D(s).
std::vector<AxiomReport> check_constellation_axioms(const StructureDef& def);

bool is_constellation(const StructureDef& def);

struct Quasiorders {
  Relation standard;  // on projections: e <= f iff e*f defined
  Relation natural;   // on all elements: s <= t iff s = D(s)*t
  bool standard_quasiorder = false;
  bool natural_quasiorder = false;
};

Quasiorders quasiorders(const StructureDef& def);

Relation natural_order(const StructureDef& def);

struct ConstellationClass {
  bool normal = false;
  bool composable = false;
  bool categorial = false;
  // When categorial, the unique projection each element composes with.
  std::optional<std::vector<ElementId>> induced_rmap;
};

ConstellationClass classify(const StructureDef& def);

struct RangeInference {
  // Per element: the set of least projections it composes with.
  std::vector<IdSet> sd;
  std::optional<std::vector<ElementId>> rmap;
  std::optional<ElementId> failure;  // first element whose sd is not a singleton
};

RangeInference infer_pre_range(const StructureDef& def);

// R1: D(R(s)) = R(s).
// R2: s*R(s) defined.
// R3: s*t defined implies R(s)*t defined.
// R4: normality of projections.
// RC: right congruence condition R(R(s)*t) = R(s*t) whenever s*t defined.
// Rconv: R(s)*t defined implies s*t defined.
// Rmin: the given range map equals the inferred least-projection map.
std::vector<AxiomReport> check_range_axioms(const StructureDef& def);

bool has_pre_range(const StructureDef& def);
bool has_range(const StructureDef& def);

struct CancellativityResult {
  bool cancellative = true;
  std::optional<std::array<ElementId, 3>> witness;
};

CancellativityResult is_left_cancellative(const StructureDef& def);

}  // namespace constelloid
