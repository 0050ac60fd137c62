#include "constelloid/congruence.hpp"

#include <stdexcept>

#include "constelloid/category.hpp"
#include "constelloid/constellation.hpp"

namespace constelloid {

CongruenceFlags check_congruence(const StructureDef& def,
                                 const Relation& rel) {
  if (rel.size() != def.size() || !rel.is_equivalence()) {
    throw std::invalid_argument("check_congruence: not an equivalence");
  }
  const int n = def.size();
  CongruenceFlags flags;

  flags.congruence = true;
  for (ElementId s1 = 0; s1 < n && flags.congruence; ++s1) {
    for (ElementId s2 = 0; s2 < n && flags.congruence; ++s2) {
      if (!rel.contains(s1, s2)) {
        continue;
      }
      if (!rel.contains(def.dom(s1), def.dom(s2))) {
        flags.congruence = false;
        break;
      }
      for (ElementId t1 = 0; t1 < n && flags.congruence; ++t1) {
        for (ElementId t2 = 0; t2 < n; ++t2) {
          if (rel.contains(t1, t2) && def.defined(s1, t1) &&
              def.defined(s2, t2) &&
              !rel.contains(def.product(s1, t1), def.product(s2, t2))) {
            flags.congruence = false;
            break;
          }
        }
      }
    }
  }

  flags.strong = flags.congruence;
  for (ElementId s1 = 0; s1 < n && flags.strong; ++s1) {
    for (ElementId s2 = 0; s2 < n && flags.strong; ++s2) {
      if (!rel.contains(s1, s2)) {
        continue;
      }
      for (ElementId t1 = 0; t1 < n && flags.strong; ++t1) {
        for (ElementId t2 = 0; t2 < n; ++t2) {
          if (rel.contains(t1, t2) &&
              def.defined(s1, t1) != def.defined(s2, t2)) {
            flags.strong = false;
            break;
          }
        }
      }
    }
  }

  const bool category_form = def.rmap && all_pass(check_category_axioms(def));
  if (category_form) {
    flags.canonical = true;
    for (ElementId a = 0; a < n && flags.canonical; ++a) {
      for (ElementId b = 0; b < n && flags.canonical; ++b) {
        if (!rel.contains(a, b)) {
          continue;
        }
        if (def.dom(a) != def.dom(b)) {
          flags.canonical = false;
          break;
        }
        if (a != b && def.ran(a) == def.ran(b)) {
          flags.canonical = false;
          break;
        }
        for (ElementId x = 0; x < n; ++x) {
          if (def.defined(x, a) && def.defined(x, b) &&
              !rel.contains(def.product(x, a), def.product(x, b))) {
            flags.canonical = false;
            break;
          }
        }
      }
    }
  } else {
    flags.canonical = flags.congruence;
    for (ElementId e = 0; e < n && flags.canonical; ++e) {
      for (ElementId f = 0; f < n; ++f) {
        if (e != f && is_projection(def, e) && is_projection(def, f) &&
            rel.contains(e, f)) {
          flags.canonical = false;
          break;
        }
      }
    }
    for (ElementId a = 0; a < n && flags.canonical; ++a) {
      for (ElementId b = 0; b < n && flags.canonical; ++b) {
        if (a == b || !rel.contains(a, b)) {
          continue;
        }
        for (ElementId e = 0; e < n; ++e) {
          if (is_projection(def, e) && def.defined(a, e) &&
              def.defined(b, e)) {
            flags.canonical = false;
            break;
          }
        }
      }
    }
  }
  return flags;
}

Relation kernel_relation(const Morphism& m) {
  const int n = m.source.size();
  Relation rel(n);
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (m.apply(a) == m.apply(b)) {
        rel.set(a, b);
      }
    }
  }
  return rel;
}

QuotientResult quotient(const StructureDef& cat, const Relation& delta) {
  if (!all_pass(check_category_axioms(cat))) {
    throw std::invalid_argument("quotient: source is not a category");
  }
  const CongruenceFlags flags = check_congruence(cat, delta);
  if (!flags.canonical) {
    throw std::invalid_argument("quotient: relation is not canonical");
  }
  const int n = cat.size();

  QuotientResult out;
  std::vector<ElementId> class_of(static_cast<std::size_t>(n), kUndefined);
  for (ElementId a = 0; a < n; ++a) {
    if (class_of[static_cast<std::size_t>(a)] != kUndefined) {
      continue;
    }
    const ElementId id = static_cast<ElementId>(out.classes.size());
    IdSet block;
    for (ElementId b = a; b < n; ++b) {
      if (delta.contains(a, b)) {
        block.push_back(b);
        class_of[static_cast<std::size_t>(b)] = id;
      }
    }
    out.classes.push_back(block);
  }

  const int m = static_cast<int>(out.classes.size());
  StructureDef& q = out.quotient;
  q.name = cat.name.empty() ? "quotient" : cat.name + "/~";
  q.kind = Kind::kConstellation;
  q.table = OpTable(m);
  q.dmap.resize(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const ElementId rep = out.classes[static_cast<std::size_t>(i)].front();
    std::string label = "[" + cat.label(rep) + "]";
    q.labels.push_back(label);
    q.dmap[static_cast<std::size_t>(i)] =
        class_of[static_cast<std::size_t>(cat.dom(rep))];
  }
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (!cat.defined(a, b)) {
        continue;
      }
      const ElementId i = class_of[static_cast<std::size_t>(a)];
      const ElementId j = class_of[static_cast<std::size_t>(b)];
      const ElementId value = class_of[static_cast<std::size_t>(cat.product(a, b))];
      const ElementId existing = q.table.at(i, j);
      if (existing != kUndefined && existing != value) {
        throw std::logic_error("quotient: product not well defined");
      }
      q.table.set(i, j, value);
    }
  }

  if (!all_pass(check_constellation_axioms(q))) {
    throw std::logic_error("quotient: result fails the constellation laws");
  }

  out.projection = Morphism{cat, q, class_of};

  const CanonicalExtension ext = canonical_extension(q);
  std::vector<ElementId> recon(static_cast<std::size_t>(n));
  for (ElementId s = 0; s < n; ++s) {
    recon[static_cast<std::size_t>(s)] =
        ext.pair_id(class_of[static_cast<std::size_t>(s)],
                    class_of[static_cast<std::size_t>(cat.ran(s))]);
    if (recon[static_cast<std::size_t>(s)] == kUndefined) {
      throw std::logic_error("quotient: reconstruction pair missing");
    }
  }
  out.reconstruction = Morphism{cat, ext.category, recon};
  out.reconstruction_ok = is_structure_isomorphism(out.reconstruction);
  return out;
}

ReconstructionResult canonical_reconstruction(const Morphism& rho) {
  const RadiantFlags flags = check_radiant(rho);
  if (!flags.canonical) {
    throw std::invalid_argument(
        "canonical_reconstruction: morphism is not canonical");
  }
  const CanonicalExtension ext = canonical_extension(rho.target);
  const int n = rho.source.size();
  std::vector<ElementId> map(static_cast<std::size_t>(n));
  for (ElementId s = 0; s < n; ++s) {
    map[static_cast<std::size_t>(s)] =
        ext.pair_id(rho.apply(s), rho.apply(rho.source.ran(s)));
    if (map[static_cast<std::size_t>(s)] == kUndefined) {
      throw std::logic_error("canonical_reconstruction: pair missing");
    }
  }
  ReconstructionResult out{Morphism{rho.source, ext.category, map}, false};
  out.isomorphism = is_structure_isomorphism(out.morphism);
  return out;
}

}  // namespace constelloid
