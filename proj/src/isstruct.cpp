#include "constelloid/isstruct.hpp"

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

AxiomReport check_subcategory_with_identities(const StructureDef& cat,
                                              const IdSet& members,
                                              const std::string& axiom) {
  AxiomReport report{axiom};
  for (ElementId e : identity_arrows(cat)) {
    if (!id_set_contains(members, e)) {
      record(report, {e}, "identity missing from the class");
    }
  }
  for (ElementId a : members) {
    for (ElementId b : members) {
      if (cat.defined(a, b) && !id_set_contains(members, cat.product(a, b))) {
        record(report, {a, b}, "class not closed under composition");
      }
    }
  }
  return report;
}

AxiomReport check_insertion_uniqueness(const StructureDef& cat,
                                       const IdSet& insertions,
                                       const std::string& axiom) {
  AxiomReport report{axiom};
  for (std::size_t p = 0; p < insertions.size(); ++p) {
    for (std::size_t q = 0; q < p; ++q) {
      const ElementId i1 = insertions[p];
      const ElementId i2 = insertions[q];
      const bool same_direction =
          cat.dom(i1) == cat.dom(i2) && cat.ran(i1) == cat.ran(i2);
      const bool opposite =
          cat.dom(i1) == cat.ran(i2) && cat.ran(i1) == cat.dom(i2);
      if (same_direction || opposite) {
        record(report, {i2, i1},
               "two insertions share an unordered pair of endpoints");
      }
    }
  }
  return report;
}

}  // namespace

std::vector<AxiomReport> check_i_category(const StructureDef& cat,
                                          const IdSet& insertions) {
  std::vector<AxiomReport> reports;
  reports.push_back(check_subcategory_with_identities(cat, insertions, "I0"));
  reports.push_back(check_insertion_uniqueness(cat, insertions, "I1"));

  AxiomReport i2{"I2"};
  for (ElementId s = 0; s < cat.size(); ++s) {
    if (id_set_contains(insertions, s)) {
      continue;
    }
    for (ElementId i : insertions) {
      if (cat.defined(s, i) &&
          id_set_contains(insertions, cat.product(s, i))) {
        record(i2, {s, i}, "composite is an insertion but the factor is not");
      }
    }
  }
  reports.push_back(i2);
  return reports;
}

IOrderResult i_order(const StructureDef& cat, const IdSet& insertions) {
  const int n = cat.size();
  IOrderResult out;
  out.order = Relation(n);
  for (ElementId s = 0; s < n; ++s) {
    for (ElementId t = 0; t < n; ++t) {
      bool related = false;
      for (ElementId i : insertions) {
        if (!cat.defined(s, i)) {
          continue;
        }
        for (ElementId j : insertions) {
          if (cat.defined(j, t) &&
              cat.product(s, i) == cat.product(j, t)) {
            related = true;
            break;
          }
        }
        if (related) {
          break;
        }
      }
      if (related) {
        out.order.set(s, t);
      }
    }
  }

  AxiomReport ipo{"IPO"};
  if (!out.order.is_reflexive()) {
    record(ipo, {}, "not reflexive");
  } else if (!out.order.is_antisymmetric()) {
    record(ipo, {}, "not antisymmetric");
  } else if (!out.order.is_transitive()) {
    record(ipo, {}, "not transitive");
  }
  out.reports.push_back(ipo);

  if (ipo.pass) {
    for (auto& report : check_ordered_axioms(cat, out.order)) {
      if (report.axiom != "OO") {
        out.reports.push_back(report);
      }
    }
  }

  AxiomReport ie{"IE"};
  for (ElementId e : identity_arrows(cat)) {
    for (ElementId f : identity_arrows(cat)) {
      bool has_insertion = false;
      for (ElementId i : insertions) {
        if (cat.dom(i) == e && cat.ran(i) == f) {
          has_insertion = true;
          break;
        }
      }
      if (has_insertion != out.order.contains(e, f)) {
        record(ie, {e, f}, "identity order disagrees with insertions");
      }
    }
  }
  out.reports.push_back(ie);

  AxiomReport il{"IL"};
  for (ElementId s = 0; s < n; ++s) {
    const bool member = id_set_contains(insertions, s);
    if (member != out.order.contains(cat.dom(s), s)) {
      record(il, {s}, "membership disagrees with D(s) <= s");
    }
  }
  out.reports.push_back(il);
  return out;
}

ISCheckResult check_is_category(const StructureDef& cat,
                                const IdSet& insertions,
                                const IdSet& surjections) {
  ISCheckResult out;
  out.reports.push_back(
      check_subcategory_with_identities(cat, insertions, "IS0"));
  {
    AxiomReport s_side =
        check_subcategory_with_identities(cat, surjections, "IS0");
    if (!s_side.pass && out.reports.back().pass) {
      out.reports.back() = s_side;
    }
  }
  out.reports.push_back(check_insertion_uniqueness(cat, insertions, "IS1"));

  const int n = cat.size();
  ISWitness witness;
  witness.insertions = insertions;
  witness.surjections = surjections;
  witness.surjection_factor.assign(static_cast<std::size_t>(n), kUndefined);
  witness.insertion_factor.assign(static_cast<std::size_t>(n), kUndefined);

  AxiomReport is2{"IS2"};
  for (ElementId a = 0; a < n; ++a) {
    int count = 0;
    for (ElementId s : surjections) {
      for (ElementId i : insertions) {
        if (cat.defined(s, i) && cat.product(s, i) == a) {
          ++count;
          witness.surjection_factor[static_cast<std::size_t>(a)] = s;
          witness.insertion_factor[static_cast<std::size_t>(a)] = i;
        }
      }
    }
    if (count != 1) {
      record(is2, {a},
             count == 0 ? "no factorisation" : "factorisation not unique");
    }
  }
  out.reports.push_back(is2);

  bool base_ok = true;
  for (const auto& report : out.reports) {
    base_ok = base_ok && report.pass;
  }
  if (!base_ok) {
    return out;
  }

  for (auto& report : check_i_category(cat, insertions)) {
    if (report.axiom == "I2") {
      report.axiom = "IS-I2";
      out.reports.push_back(report);
    }
  }

  AxiomReport meet{"IS-meet"};
  for (ElementId a = 0; a < n; ++a) {
    const bool in_both = id_set_contains(insertions, a) &&
                         id_set_contains(surjections, a);
    if (in_both != (cat.dom(a) == a)) {
      record(meet, {a}, "intersection differs from the identities");
    }
  }
  out.reports.push_back(meet);

  AxiomReport mono{"IS-mono"};
  for (ElementId i : insertions) {
    if (!is_monomorphism(cat, i)) {
      record(mono, {i}, "insertion is not a monomorphism");
    }
  }
  out.reports.push_back(mono);

  AxiomReport absorb{"IS-absorb"};
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId i : insertions) {
      if (!cat.defined(a, i) ||
          !id_set_contains(surjections, cat.product(a, i))) {
        continue;
      }
      if (!id_set_contains(surjections, a) || i != cat.ran(a)) {
        record(absorb, {a, i},
               "a o i surjective without a surjective and i = R(a)");
      }
    }
  }
  out.reports.push_back(absorb);

  out.ok = all_pass(out.reports);
  if (out.ok) {
    out.witness = std::move(witness);
  }
  return out;
}

StructureDef with_is_subsets(const StructureDef& cat, const IdSet& insertions,
                             const IdSet& surjections) {
  StructureDef out = cat;
  out.kind = Kind::kIsCategory;
  out.insertions = insertions;
  out.surjections = surjections;
  return out;
}

RegularityResult is_regular(const StructureDef& cat, const ISWitness& w) {
  RegularityResult out;
  out.regular = true;
  out.transfer_agrees = true;
  for (ElementId s : w.surjections) {
    const bool epi_in_cat = is_epimorphism(cat, s);
    bool epi_in_s = true;
    for (ElementId x : w.surjections) {
      if (!cat.defined(s, x)) {
        continue;
      }
      for (ElementId y : w.surjections) {
        if (x != y && cat.defined(s, y) &&
            cat.product(s, x) == cat.product(s, y)) {
          epi_in_s = false;
        }
      }
    }
    if (epi_in_s != epi_in_cat) {
      out.transfer_agrees = false;
    }
    if (!epi_in_cat) {
      out.regular = false;
      if (!out.witness) {
        out.witness = s;
      }
    }
  }
  return out;
}

namespace {

bool factors_through(const StructureDef& cat, ElementId a, ElementId b) {
  for (ElementId x = 0; x < cat.size(); ++x) {
    if (cat.defined(x, b) && cat.product(x, b) == a) {
      return true;
    }
  }
  return false;
}

bool subobject_equivalent(const StructureDef& cat, ElementId a, ElementId b) {
  return factors_through(cat, a, b) && factors_through(cat, b, a);
}

}  // namespace

WfsResult has_well_founded_subobjects(const StructureDef& cat,
                                      const ISWitness& w) {
  const int n = cat.size();
  WfsResult out;
  IdSet monos;
  for (ElementId a = 0; a < n; ++a) {
    if (is_monomorphism(cat, a)) {
      monos.push_back(a);
    }
  }

  out.monos_in_s_iso = true;
  for (ElementId a : monos) {
    if (id_set_contains(w.surjections, a) && !iso_inverse(cat, a)) {
      out.monos_in_s_iso = false;
      if (!out.witness) {
        out.witness = a;
      }
    }
  }

  out.pairwise_route = true;
  for (ElementId a : monos) {
    for (ElementId b : monos) {
      if (cat.ran(a) != cat.ran(b)) {
        continue;
      }
      const bool same_insertion =
          w.insertion_factor[static_cast<std::size_t>(a)] ==
          w.insertion_factor[static_cast<std::size_t>(b)];
      if (subobject_equivalent(cat, a, b) != same_insertion) {
        out.pairwise_route = false;
      }
    }
  }

  out.insertion_route = true;
  for (ElementId a : monos) {
    if (!subobject_equivalent(
            cat, a, w.insertion_factor[static_cast<std::size_t>(a)])) {
      out.insertion_route = false;
    }
  }

  out.wfs = out.monos_in_s_iso;
  out.routes_agree = out.monos_in_s_iso == out.pairwise_route &&
                     out.pairwise_route == out.insertion_route;
  return out;
}

ISFunctorResult check_is_functor(const Morphism& f, const ISWitness& source_w,
                                 const ISWitness& target_w) {
  ISFunctorResult out;
  const RadiantFlags flags = check_radiant(f);
  out.functor = flags.radiant && flags.range_radiant;

  out.preserves_insertions = true;
  for (ElementId i : source_w.insertions) {
    if (!id_set_contains(target_w.insertions, f.apply(i))) {
      out.preserves_insertions = false;
    }
  }
  out.preserves_surjections = true;
  for (ElementId s : source_w.surjections) {
    if (!id_set_contains(target_w.surjections, f.apply(s))) {
      out.preserves_surjections = false;
    }
  }
  out.ok = out.functor && out.preserves_insertions && out.preserves_surjections;

  if (out.functor) {
    const Relation source_order =
        i_order(f.source, source_w.insertions).order;
    const Relation target_order =
        i_order(f.target, target_w.insertions).order;
    bool order_preserving = true;
    for (ElementId s = 0; s < f.source.size(); ++s) {
      for (ElementId t = 0; t < f.source.size(); ++t) {
        if (source_order.contains(s, t) &&
            !target_order.contains(f.apply(s), f.apply(t))) {
          order_preserving = false;
        }
      }
    }
    out.order_preservation_agrees =
        order_preserving == out.preserves_insertions;
  }
  return out;
}

FunctorialityOutcome functoriality_witness(const StructureDef& cat,
                                           const ISWitness& w, ElementId a,
                                           ElementId s, ElementId i,
                                           ElementId t, ElementId j,
                                           ElementId b) {
  if (!id_set_contains(w.surjections, s) ||
      !id_set_contains(w.surjections, t) ||
      !id_set_contains(w.insertions, i) ||
      !id_set_contains(w.insertions, j)) {
    throw std::invalid_argument("functoriality_witness: class membership");
  }
  if (!cat.defined(a, s) || !cat.defined(cat.product(a, s), i) ||
      !cat.defined(t, j) || !cat.defined(cat.product(t, j), b)) {
    throw std::invalid_argument("functoriality_witness: products undefined");
  }
  const ElementId as = cat.product(a, s);
  const ElementId jb = cat.product(j, b);
  if (cat.product(as, i) != cat.product(cat.product(t, j), b)) {
    throw std::invalid_argument("functoriality_witness: hypothesis fails");
  }

  FunctorialityOutcome out;
  const ElementId s_jb = w.surjection_factor[static_cast<std::size_t>(jb)];
  const ElementId i_as = w.insertion_factor[static_cast<std::size_t>(as)];
  if (!cat.defined(s_jb, i_as)) {
    return out;
  }
  out.diagonal = cat.product(s_jb, i_as);
  out.equations_hold = cat.defined(t, out.diagonal) &&
                       cat.product(t, out.diagonal) == as &&
                       cat.defined(out.diagonal, i) &&
                       cat.product(out.diagonal, i) == jb;

  int count = 0;
  for (ElementId c = 0; c < cat.size(); ++c) {
    if (cat.defined(t, c) && cat.product(t, c) == as && cat.defined(c, i) &&
        cat.product(c, i) == jb) {
      ++count;
    }
  }
  out.unique = count == 1;
  return out;
}

EqualiserEquivalence insertion_equaliser_check(const StructureDef& cat,
                                               const ISWitness& w) {
  EqualiserEquivalence out;
  if (!has_equalisers(cat)) {
    out.status = TriState::kNotApplicable;
    return out;
  }
  out.insertion_equalisers = true;
  for (ElementId a = 0; a < cat.size() && out.insertion_equalisers; ++a) {
    for (ElementId b = 0; b < cat.size(); ++b) {
      if (cat.dom(a) != cat.dom(b) || cat.ran(a) != cat.ran(b)) {
        continue;
      }
      const IdSet all = equalisers(cat, a, b);
      bool has_insertion_equaliser = false;
      for (ElementId c : all) {
        if (id_set_contains(w.insertions, c)) {
          has_insertion_equaliser = true;
          break;
        }
      }
      if (!has_insertion_equaliser) {
        out.insertion_equalisers = false;
        break;
      }
    }
  }
  out.regular = is_regular(cat, w).regular;
  out.status = out.insertion_equalisers == out.regular ? TriState::kHolds
                                                       : TriState::kFails;
  return out;
}

BalancedEquivalence balanced_equivalence_check(const StructureDef& cat,
                                               const ISWitness& w) {
  if (!is_regular(cat, w).regular) {
    throw std::invalid_argument("balanced_equivalence_check: not regular");
  }
  BalancedEquivalence out;
  out.balanced = is_balanced(cat).balanced;
  IdSet epis;
  for (ElementId a = 0; a < cat.size(); ++a) {
    if (is_epimorphism(cat, a)) {
      epis.push_back(a);
    }
  }
  out.s_is_epis = epis == w.surjections;
  out.wfs = has_well_founded_subobjects(cat, w).wfs;
  out.agree = out.balanced == (out.s_is_epis && out.wfs);
  return out;
}

SurjectionConstellation surjection_constellation(const StructureDef& cat,
                                                 const ISWitness& w) {
  const IOrderResult io = i_order(cat, w.insertions);
  if (!all_pass(io.reports)) {
    throw std::invalid_argument(
        "surjection_constellation: the I-order is not an order for the "
        "category");
  }
  StructureDef ordered_cat = cat;
  ordered_cat.order = io.order;
  ordered_cat.insertions.reset();
  ordered_cat.surjections.reset();
  const SubcategoryView view = subcategory(ordered_cat, w.surjections);

  SurjectionConstellation out;
  out.sprime = constellation_of_ordered_category(view.sub, *view.sub.order);
  out.sprime.name = cat.name.empty() ? "sprime" : cat.name + ".sprime";
  out.to_parent = view.to_parent;
  out.from_parent = view.from_parent;
  return out;
}

PsiResult psi_isomorphism(const StructureDef& cat, const ISWitness& w) {
  PsiResult out;
  out.sc = surjection_constellation(cat, w);
  out.ext = canonical_extension(out.sc.sprime);

  const int n = cat.size();
  std::vector<ElementId> psi_map(static_cast<std::size_t>(n));
  std::vector<ElementId> rho_map(static_cast<std::size_t>(n));
  for (ElementId a = 0; a < n; ++a) {
    const ElementId s_a = w.surjection_factor[static_cast<std::size_t>(a)];
    const ElementId s_local =
        out.sc.from_parent[static_cast<std::size_t>(s_a)];
    const ElementId cod_local =
        out.sc.from_parent[static_cast<std::size_t>(cat.ran(a))];
    rho_map[static_cast<std::size_t>(a)] = s_local;
    psi_map[static_cast<std::size_t>(a)] =
        out.ext.pair_id(s_local, cod_local);
    if (s_local == kUndefined || cod_local == kUndefined ||
        psi_map[static_cast<std::size_t>(a)] == kUndefined) {
      throw std::logic_error("psi_isomorphism: image pair missing");
    }
  }
  out.psi = Morphism{cat, out.ext.category, psi_map};
  out.rho = Morphism{cat, out.sc.sprime, rho_map};

  StructureDef cat_plain = cat;
  cat_plain.order.reset();
  cat_plain.insertions.reset();
  cat_plain.surjections.reset();
  out.psi.source = cat_plain;
  out.rho.source = cat_plain;
  StructureDef sprime_plain = out.sc.sprime;
  sprime_plain.order.reset();
  out.rho.target = sprime_plain;

  out.psi_isomorphism_ok = is_structure_isomorphism(out.psi);
  out.rho_canonical = check_radiant(out.rho).canonical;

  IdSet surjection_image;
  for (ElementId s : w.surjections) {
    surjection_image.push_back(psi_map[static_cast<std::size_t>(s)]);
  }
  surjection_image = make_id_set(std::move(surjection_image));
  IdSet insertion_image;
  for (ElementId i : w.insertions) {
    insertion_image.push_back(psi_map[static_cast<std::size_t>(i)]);
  }
  insertion_image = make_id_set(std::move(insertion_image));

  out.surjections_match =
      surjection_image == surjection_part(out.sc.sprime, out.ext).ids;
  out.insertions_match = insertion_image == insertion_part(out.ext);

  out.verdict = out.psi_isomorphism_ok && out.surjections_match &&
                out.insertions_match && out.rho_canonical;
  return out;
}


std::optional<ISWitness> find_is_extension(const StructureDef& cat,
                                           const IdSet& insertions) {
  if (!all_pass(check_i_category(cat, insertions))) {
    throw std::invalid_argument("find_is_extension: not an I-category");
  }
  IdSet loose;
  for (ElementId a = 0; a < cat.size(); ++a) {
    if (cat.dom(a) != a) {
      loose.push_back(a);
    }
  }
  if (loose.size() > 20) {
    throw std::runtime_error("find_is_extension: too many arrows to search");
  }
  const std::uint32_t limit = 1u << loose.size();
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    IdSet surjections = identity_arrows(cat);
    for (std::size_t bit = 0; bit < loose.size(); ++bit) {
      if (mask & (1u << bit)) {
        surjections.push_back(loose[bit]);
      }
    }
    surjections = make_id_set(std::move(surjections));
    bool closed = true;
    for (ElementId a : surjections) {
      for (ElementId b : surjections) {
        if (cat.defined(a, b) &&
            !id_set_contains(surjections, cat.product(a, b))) {
          closed = false;
        }
      }
    }
    if (!closed) {
      continue;
    }
    ISCheckResult result = check_is_category(cat, insertions, surjections);
    if (result.ok) {
      return result.witness;
    }
  }
  return std::nullopt;
}

}  // namespace constelloid
