#pragma once

#include <string>
#include <utility>
#include <vector>

#include "constelloid/core.hpp"
#include "constelloid/extension.hpp"

namespace constelloid {

// Shared test fixtures used across the suite.

// One element e0 with e0*e0 = e0.
StructureDef fixture_triv();

// Two-chain poset constellation: a*a = a, a*b = a, b*b = b, ranges identity.
StructureDef fixture_chain2();

// Four elements s, e, f, g with D(s) = g and products e*e, f*f, g*g, g*s,
// s*e, s*f only.  Normal, composable, no pre-range.
StructureDef fixture_q4();

// All partial self-maps of a two-point set.
StructureDef fixture_cx2();

// Two-element monoid acting on the two-chain poset.
StructureDef fixture_act();
ActionConstellation fixture_act_full();

MonoidDef fixture_monoid2();

std::vector<std::pair<std::string, StructureDef>> fixture_catalogue();

}  // namespace constelloid
