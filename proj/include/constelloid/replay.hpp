#pragma once

#include "constelloid/core.hpp"

namespace constelloid {

// Re-evaluates a failed report's first witness directly against the table
// and confirms it still exhibits the violation.  Passing reports replay
// trivially.
bool replay_witness(const StructureDef& def, const AxiomReport& report);

}  // namespace constelloid
