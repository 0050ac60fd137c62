#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "constelloid/core.hpp"
#include "constelloid/iso.hpp"
#include "constelloid/morphism.hpp"

namespace constelloid {

inline constexpr int kDefaultEnumerationCap = 4;

enum CensusFlag : std::uint32_t {
  kFlagConstellation = 1u << 0,
  kFlagNormal = 1u << 1,
  kFlagComposable = 1u << 2,
  kFlagCategorial = 1u << 3,
  kFlagPreRange = 1u << 4,
  kFlagRange = 1u << 5,
  kFlagLeftCancellative = 1u << 6,
};

struct CensusRecord {
  StructureDef canonical;  // carries the inferred range map when pre-range
  int size = 0;
  std::uint32_t flags = 0;
  int automorphisms = 1;
};

std::uint32_t census_flags(const StructureDef& def);

// One representative per isomorphism class of size-n constellations, in a
// deterministic order.  The callback may return false to stop early.
void enumerate_constellations(
    int n, const std::function<bool(const CensusRecord&)>& yield,
    int cap = kDefaultEnumerationCap);

std::vector<CensusRecord> all_constellations(int n,
                                             int cap = kDefaultEnumerationCap);

// size, dmap and row-major cells ('-' for undefined), flag bitmask.
// Bit order: constellation, normal, composable, categorial, pre-range,
// range, left-cancellative (least significant first).
std::string census_line(const CensusRecord& record);

struct PropertyDef {
  std::string id;
  std::string description;
  // Whether the property speaks about this census record at all.
  std::function<bool(const CensusRecord&)> applicable;
  // Evaluated on the canonical structure (with its inferred range map).
  std::function<bool(const StructureDef&)> holds;
};

const std::vector<PropertyDef>& property_catalogue();
const PropertyDef* find_property(const std::string& id);

struct MiningResult {
  std::optional<StructureDef> witness;
  int max_size_searched = -1;
};

// First structure (in enumeration order, sizes ascending) violating the
// property, or exhausted up to n_max.
MiningResult find_counterexample(const std::string& property_id, int n_max);

struct EmbeddingResult {
  std::optional<Morphism> embedding;
  int found_n = -1;
  int max_n_searched = -1;
};

// Injective range radiant from q into the partial-map constellation on an
// n-point set, for the least n <= n_max admitting one.
EmbeddingResult bounded_embedding_search(const StructureDef& q, int n_max);

}  // namespace constelloid
