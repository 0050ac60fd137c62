#include "constelloid/morphism.hpp"

#include <stdexcept>

namespace constelloid {

namespace {

bool map_well_formed(const Morphism& m) {
  if (static_cast<int>(m.map.size()) != m.source.size()) {
    return false;
  }
  for (ElementId v : m.map) {
    if (v < 0 || v >= m.target.size()) {
      return false;
    }
  }
  return true;
}

}  // namespace

RadiantFlags check_radiant(const Morphism& m) {
  if (m.cached_flags) {
    return *m.cached_flags;
  }
  RadiantFlags flags;
  flags.well_formed = map_well_formed(m);
  if (!flags.well_formed) {
    m.cached_flags = flags;
    return flags;
  }
  const StructureDef& src = m.source;
  const StructureDef& tgt = m.target;
  const int n = src.size();

  flags.radiant = true;
  for (ElementId s = 0; s < n && flags.radiant; ++s) {
    if (tgt.dom(m.apply(s)) != m.apply(src.dom(s))) {
      flags.radiant = false;
    }
    for (ElementId t = 0; t < n && flags.radiant; ++t) {
      if (!src.defined(s, t)) {
        continue;
      }
      if (!tgt.defined(m.apply(s), m.apply(t)) ||
          tgt.product(m.apply(s), m.apply(t)) != m.apply(src.product(s, t))) {
        flags.radiant = false;
      }
    }
  }

  std::vector<bool> hit(static_cast<std::size_t>(tgt.size()), false);
  for (ElementId s = 0; s < n; ++s) {
    hit[static_cast<std::size_t>(m.apply(s))] = true;
  }
  flags.surjective = true;
  for (bool h : hit) {
    flags.surjective = flags.surjective && h;
  }

  flags.full = true;
  for (ElementId s = 0; s < n && flags.full; ++s) {
    for (ElementId t = 0; t < n && flags.full; ++t) {
      if (!tgt.defined(m.apply(s), m.apply(t))) {
        continue;
      }
      const ElementId product = tgt.product(m.apply(s), m.apply(t));
      if (!hit[static_cast<std::size_t>(product)]) {
        continue;
      }
      bool witnessed = false;
      for (ElementId s2 = 0; s2 < n && !witnessed; ++s2) {
        if (m.apply(s2) != m.apply(s)) {
          continue;
        }
        for (ElementId t2 = 0; t2 < n && !witnessed; ++t2) {
          if (m.apply(t2) == m.apply(t) && src.defined(s2, t2)) {
            witnessed = true;
          }
        }
      }
      if (!witnessed) {
        flags.full = false;
      }
    }
  }

  flags.star_injective = true;
  for (ElementId s = 0; s < n && flags.star_injective; ++s) {
    for (ElementId t = 0; t < s; ++t) {
      if (m.apply(s) == m.apply(t) && src.dom(s) == src.dom(t)) {
        flags.star_injective = false;
        break;
      }
    }
  }

  if (src.rmap && tgt.rmap && flags.radiant) {
    flags.range_radiant = true;
    for (ElementId s = 0; s < n; ++s) {
      if (m.apply(src.ran(s)) != tgt.ran(m.apply(s))) {
        flags.range_radiant = false;
        break;
      }
    }
  }

  if (src.rmap && flags.radiant && flags.full && flags.surjective) {
    flags.canonical = true;
    for (ElementId a = 0; a < n && flags.canonical; ++a) {
      for (ElementId b = 0; b < n && flags.canonical; ++b) {
        if (m.apply(a) != m.apply(b)) {
          continue;
        }
        if (src.dom(a) != src.dom(b)) {
          flags.canonical = false;
        } else if (a != b && src.ran(a) == src.ran(b)) {
          flags.canonical = false;
        }
      }
    }
  }

  m.cached_flags = flags;
  return flags;
}

bool covering_condition(const Morphism& m) {
  const StructureDef& src = m.source;
  for (ElementId y = 0; y < m.target.size(); ++y) {
    for (ElementId e = 0; e < src.size(); ++e) {
      if (!is_projection(src, e)) {
        continue;
      }
      bool found = false;
      for (ElementId x = 0; x < src.size(); ++x) {
        if (m.apply(x) == y && src.dom(x) == e) {
          found = true;
          break;
        }
      }
      if (!found) {
        return false;
      }
    }
  }
  return true;
}

bool is_injective(const Morphism& m) {
  std::vector<bool> seen(static_cast<std::size_t>(m.target.size()), false);
  for (ElementId x = 0; x < m.source.size(); ++x) {
    const ElementId y = m.apply(x);
    if (seen[static_cast<std::size_t>(y)]) {
      return false;
    }
    seen[static_cast<std::size_t>(y)] = true;
  }
  return true;
}

bool is_bijective(const Morphism& m) {
  return m.source.size() == m.target.size() && is_injective(m);
}

Morphism inverse_morphism(const Morphism& m) {
  if (!is_bijective(m)) {
    throw std::invalid_argument("inverse_morphism: map is not a bijection");
  }
  Morphism out{m.target, m.source,
               std::vector<ElementId>(m.map.size(), kUndefined)};
  for (ElementId x = 0; x < m.source.size(); ++x) {
    out.map[static_cast<std::size_t>(m.apply(x))] = x;
  }
  return out;
}

bool is_structure_isomorphism(const Morphism& m) {
  if (!is_bijective(m)) {
    return false;
  }
  const RadiantFlags forward = check_radiant(m);
  if (!forward.radiant) {
    return false;
  }
  const bool ranges = m.source.rmap && m.target.rmap;
  if (ranges && !forward.range_radiant) {
    return false;
  }
  const RadiantFlags backward = check_radiant(inverse_morphism(m));
  if (!backward.radiant) {
    return false;
  }
  return !ranges || backward.range_radiant;
}

Morphism identity_morphism(const StructureDef& def) {
  return Morphism{def, def, identity_map(def.size())};
}

Morphism compose_morphisms(const Morphism& first, const Morphism& second) {
  if (first.target.size() != second.source.size()) {
    throw std::invalid_argument("compose_morphisms: size mismatch");
  }
  Morphism out{first.source, second.target,
               std::vector<ElementId>(first.map.size())};
  for (std::size_t i = 0; i < first.map.size(); ++i) {
    out.map[i] = second.apply(first.map[i]);
  }
  return out;
}

}  // namespace constelloid
