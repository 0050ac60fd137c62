#include "constelloid/category.hpp"

#include <stdexcept>

namespace constelloid {

namespace {

void record(AxiomReport& report, std::vector<ElementId> witness,
            const std::string& note = "") {
  if (report.pass) {
    report.pass = false;
    report.witnesses.push_back(std::move(witness));
    report.note = note;
  }
}

}  // namespace

std::vector<AxiomReport> check_category_axioms(const StructureDef& def) {
  if (!def.rmap) {
    throw std::invalid_argument("check_category_axioms: range map required");
  }
  const int n = def.size();
  AxiomReport c1{"C1"};
  AxiomReport c2{"C2"};
  AxiomReport c3{"C3"};
  AxiomReport cc{"CC"};

  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      const bool xy = def.defined(x, y);
      for (ElementId z = 0; z < n; ++z) {
        const bool yz = def.defined(y, z);
        const bool left = yz && def.defined(x, def.product(y, z));
        const bool right = xy && def.defined(def.product(x, y), z);
        if (left != right) {
          record(c1, {x, y, z}, "one association exists without the other");
        } else if (left && def.product(x, def.product(y, z)) !=
                               def.product(def.product(x, y), z)) {
          record(c1, {x, y, z}, "associations disagree");
        }
        if (xy && yz && !left) {
          record(c2, {x, y, z});
        }
      }
    }
  }

  const auto identity = classify_identities(def);
  for (ElementId x = 0; x < n; ++x) {
    const ElementId d = def.dom(x);
    const ElementId r = def.ran(x);
    if (!identity[static_cast<std::size_t>(d)].identity ||
        !def.defined(d, x) || def.product(d, x) != x) {
      record(c3, {x}, "domain element is not a fixing identity");
      continue;
    }
    if (!identity[static_cast<std::size_t>(r)].identity ||
        !def.defined(x, r) || def.product(x, r) != x) {
      record(c3, {x}, "range element is not a fixing identity");
    }
  }

  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      const bool defined = def.defined(x, y);
      const bool matched = def.ran(x) == def.dom(y);
      if (defined != matched) {
        record(cc, {x, y}, "existence disagrees with R(x) = D(y)");
      } else if (defined) {
        const ElementId xy = def.product(x, y);
        if (def.dom(xy) != def.dom(x) || def.ran(xy) != def.ran(y)) {
          record(cc, {x, y}, "composite has wrong domain or range");
        }
      }
    }
  }

  return {c1, c2, c3, cc};
}

bool is_category(const StructureDef& def) {
  return is_well_formed(def) && all_pass(check_category_axioms(def));
}

bool is_epimorphism(const StructureDef& cat, ElementId a) {
  const int n = cat.size();
  for (ElementId x = 0; x < n; ++x) {
    if (!cat.defined(a, x)) {
      continue;
    }
    for (ElementId y = 0; y < n; ++y) {
      if (x != y && cat.defined(a, y) &&
          cat.product(a, x) == cat.product(a, y)) {
        return false;
      }
    }
  }
  return true;
}

bool is_monomorphism(const StructureDef& cat, ElementId a) {
  const int n = cat.size();
  for (ElementId x = 0; x < n; ++x) {
    if (!cat.defined(x, a)) {
      continue;
    }
    for (ElementId y = 0; y < n; ++y) {
      if (x != y && cat.defined(y, a) &&
          cat.product(x, a) == cat.product(y, a)) {
        return false;
      }
    }
  }
  return true;
}

std::optional<ElementId> iso_inverse(const StructureDef& cat, ElementId a) {
  const int n = cat.size();
  for (ElementId b = 0; b < n; ++b) {
    if (cat.defined(a, b) && cat.product(a, b) == cat.dom(a) &&
        cat.defined(b, a) && cat.product(b, a) == cat.dom(b)) {
      return b;
    }
  }
  return std::nullopt;
}

MorphismClassification classify_morphisms(const StructureDef& cat) {
  const int n = cat.size();
  MorphismClassification out;
  out.arrows.resize(static_cast<std::size_t>(n));
  out.inverse.assign(static_cast<std::size_t>(n), kUndefined);
  for (ElementId a = 0; a < n; ++a) {
    ArrowFlags flags;
    flags.epi = is_epimorphism(cat, a);
    flags.mono = is_monomorphism(cat, a);
    flags.bimorphism = flags.epi && flags.mono;
    if (auto inverse = iso_inverse(cat, a)) {
      flags.iso = true;
      out.inverse[static_cast<std::size_t>(a)] = *inverse;
    }
    out.arrows[static_cast<std::size_t>(a)] = flags;
  }
  return out;
}

IdSet equalisers(const StructureDef& cat, ElementId a, ElementId b) {
  if (cat.dom(a) != cat.dom(b) || cat.ran(a) != cat.ran(b)) {
    throw std::invalid_argument("equalisers: arrows are not parallel");
  }
  const int n = cat.size();
  IdSet out;
  for (ElementId c = 0; c < n; ++c) {
    if (!cat.defined(c, a) || !cat.defined(c, b) ||
        cat.product(c, a) != cat.product(c, b)) {
      continue;
    }
    bool universal = true;
    for (ElementId v = 0; v < n && universal; ++v) {
      if (!cat.defined(v, a) || !cat.defined(v, b) ||
          cat.product(v, a) != cat.product(v, b)) {
        continue;
      }
      int factorisations = 0;
      for (ElementId h = 0; h < n; ++h) {
        if (cat.defined(h, c) && cat.product(h, c) == v) {
          ++factorisations;
        }
      }
      if (factorisations != 1) {
        universal = false;
      }
    }
    if (universal) {
      out.push_back(c);
    }
  }
  return out;
}

bool has_equalisers(const StructureDef& cat) {
  const int n = cat.size();
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (cat.dom(a) == cat.dom(b) && cat.ran(a) == cat.ran(b) &&
          equalisers(cat, a, b).empty()) {
        return false;
      }
    }
  }
  return true;
}

SubobjectStructure subobject_structure(const StructureDef& cat, ElementId e) {
  if (cat.dom(e) != e) {
    throw std::invalid_argument("subobject_structure: not an identity");
  }
  const int n = cat.size();
  SubobjectStructure out;
  for (ElementId a = 0; a < n; ++a) {
    if (cat.ran(a) == e && is_monomorphism(cat, a)) {
      out.monos.push_back(a);
    }
  }
  out.factors_through = Relation(n);
  for (ElementId a : out.monos) {
    for (ElementId b : out.monos) {
      for (ElementId x = 0; x < n; ++x) {
        if (cat.defined(x, b) && cat.product(x, b) == a) {
          out.factors_through.set(a, b);
          break;
        }
      }
    }
  }
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (ElementId a : out.monos) {
    if (used[static_cast<std::size_t>(a)]) {
      continue;
    }
    IdSet block;
    for (ElementId b : out.monos) {
      if (out.factors_through.contains(a, b) &&
          out.factors_through.contains(b, a)) {
        block.push_back(b);
        used[static_cast<std::size_t>(b)] = true;
      }
    }
    out.blocks.push_back(block);
  }
  return out;
}

BalanceResult is_balanced(const StructureDef& cat) {
  BalanceResult out;
  const auto classes = classify_morphisms(cat);
  for (ElementId a = 0; a < cat.size(); ++a) {
    const auto& flags = classes.arrows[static_cast<std::size_t>(a)];
    if (flags.bimorphism && !flags.iso) {
      out.balanced = false;
      out.witness = a;
      return out;
    }
  }
  return out;
}

FactorizationReport check_factorization_system(const StructureDef& cat,
                                               const IdSet& s_class,
                                               const IdSet& m_class) {
  const int n = cat.size();
  FactorizationReport out;
  AxiomReport fs1{"FS1"};
  AxiomReport fs2{"FS2"};
  AxiomReport fs3{"FS3"};
  AxiomReport fsi{"FSI"};

  const auto classes = classify_morphisms(cat);
  for (ElementId a = 0; a < n; ++a) {
    if (classes.arrows[static_cast<std::size_t>(a)].iso) {
      if (!id_set_contains(s_class, a)) {
        record(fs1, {a}, "isomorphism missing from the first class");
      }
      if (!id_set_contains(m_class, a)) {
        record(fs1, {a}, "isomorphism missing from the second class");
      }
    }
  }
  for (const IdSet* cls : {&s_class, &m_class}) {
    for (ElementId a : *cls) {
      for (ElementId b : *cls) {
        if (cat.defined(a, b) && !id_set_contains(*cls, cat.product(a, b))) {
          record(fs1, {a, b}, "class not closed under composition");
        }
      }
    }
  }

  for (ElementId a = 0; a < n; ++a) {
    bool found = false;
    for (ElementId s : s_class) {
      for (ElementId m : m_class) {
        if (cat.defined(s, m) && cat.product(s, m) == a) {
          found = true;
        }
      }
    }
    if (!found) {
      record(fs2, {a}, "arrow admits no factorisation");
    }
  }

  // Unique diagonal: for a.s.m = t.n.b with s, t in S and m, n in M there is
  // exactly one c with a.s = t.c and n.b = c.m.
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId s : s_class) {
      if (!cat.defined(a, s)) {
        continue;
      }
      const ElementId as = cat.product(a, s);
      for (ElementId m : m_class) {
        if (!cat.defined(as, m)) {
          continue;
        }
        const ElementId asm_value = cat.product(as, m);
        for (ElementId t : s_class) {
          for (ElementId nn : m_class) {
            if (!cat.defined(t, nn)) {
              continue;
            }
            const ElementId tn = cat.product(t, nn);
            for (ElementId b = 0; b < n; ++b) {
              if (!cat.defined(tn, b) || cat.product(tn, b) != asm_value) {
                continue;
              }
              int count = 0;
              for (ElementId c = 0; c < n; ++c) {
                if (cat.defined(t, c) && cat.product(t, c) == as &&
                    cat.defined(nn, b) && cat.defined(c, m) &&
                    cat.product(c, m) == cat.product(nn, b)) {
                  ++count;
                }
              }
              if (count != 1) {
                record(fs3, {a, s, m, t, nn, b},
                       count == 0 ? "no diagonal" : "diagonal not unique");
              }
            }
          }
        }
      }
    }
  }

  out.pass = fs1.pass && fs2.pass && fs3.pass;
  if (out.pass) {
    for (ElementId a = 0; a < n; ++a) {
      const bool in_both =
          id_set_contains(s_class, a) && id_set_contains(m_class, a);
      if (in_both != classes.arrows[static_cast<std::size_t>(a)].iso) {
        record(fsi, {a}, "intersection differs from the isomorphisms");
        out.pass = false;
      }
    }
  }

  out.conditions = {fs1, fs2, fs3, fsi};
  return out;
}

SubcategoryView subcategory(const StructureDef& cat, const IdSet& members) {
  for (ElementId a : members) {
    if (!id_set_contains(members, cat.dom(a)) ||
        (cat.rmap && !id_set_contains(members, cat.ran(a)))) {
      throw std::invalid_argument(
          "subcategory: member identities must lie in the subset");
    }
    for (ElementId b : members) {
      if (cat.defined(a, b) && !id_set_contains(members, cat.product(a, b))) {
        throw std::invalid_argument(
            "subcategory: subset not closed under composition");
      }
    }
  }

  const int n = cat.size();
  SubcategoryView view;
  view.from_parent.assign(static_cast<std::size_t>(n), kUndefined);
  view.to_parent = members;
  for (std::size_t i = 0; i < members.size(); ++i) {
    view.from_parent[static_cast<std::size_t>(members[i])] =
        static_cast<ElementId>(i);
  }

  const int m = static_cast<int>(members.size());
  view.sub.name = cat.name.empty() ? "sub" : cat.name + ".sub";
  view.sub.kind = cat.kind;
  view.sub.table = OpTable(m);
  view.sub.dmap.resize(static_cast<std::size_t>(m));
  if (cat.rmap) {
    view.sub.rmap = std::vector<ElementId>(static_cast<std::size_t>(m));
  }
  for (int i = 0; i < m; ++i) {
    const ElementId a = members[static_cast<std::size_t>(i)];
    view.sub.labels.push_back(cat.label(a));
    view.sub.dmap[static_cast<std::size_t>(i)] =
        view.from_parent[static_cast<std::size_t>(cat.dom(a))];
    if (cat.rmap) {
      (*view.sub.rmap)[static_cast<std::size_t>(i)] =
          view.from_parent[static_cast<std::size_t>(cat.ran(a))];
    }
    for (int j = 0; j < m; ++j) {
      const ElementId b = members[static_cast<std::size_t>(j)];
      if (cat.defined(a, b)) {
        view.sub.table.set(
            i, j, view.from_parent[static_cast<std::size_t>(cat.product(a, b))]);
      }
    }
  }
  if (cat.order) {
    Relation restricted(m);
    for (int i = 0; i < m; ++i) {
      for (int j = 0; j < m; ++j) {
        if (cat.order->contains(members[static_cast<std::size_t>(i)],
                                members[static_cast<std::size_t>(j)])) {
          restricted.set(i, j);
        }
      }
    }
    view.sub.order = restricted;
  }
  return view;
}

IdSet identity_arrows(const StructureDef& cat) {
  IdSet out;
  for (ElementId a = 0; a < cat.size(); ++a) {
    if (cat.dom(a) == a) {
      out.push_back(a);
    }
  }
  return out;
}

}  // namespace constelloid
