#include "constelloid/search.hpp"

#include <array>
#include <set>
#include <stdexcept>

#include "constelloid/category.hpp"
#include "constelloid/congruence.hpp"
#include "constelloid/constellation.hpp"
#include "constelloid/extension.hpp"
#include "constelloid/isstruct.hpp"
#include "constelloid/naturality.hpp"
#include "constelloid/ordered.hpp"

namespace constelloid {

namespace {

StructureDef generic_labels(StructureDef def) {
  for (int x = 0; x < def.size(); ++x) {
    def.labels[static_cast<std::size_t>(x)] = "x" + std::to_string(x);
  }
  return def;
}

// Backtracking над the value cells of one (dmap, support) choice.  The
// definedness pattern is fixed up front: column c is defined exactly on the
// support of D(c), values stay inside the dmap fibre of their row, and the
// projection columns are forced.  Q2, Q3 and the domain-composability rule
// hold by construction; Q1 is enforced incrementally.
class TableSearch {
 public:
  TableSearch(int n, std::vector<ElementId> dmap,
              std::vector<std::uint32_t> support,
              const std::function<bool(const OpTable&)>& yield)
      : n_(n), dmap_(std::move(dmap)), yield_(yield), table_(n) {
    col_support_.resize(static_cast<std::size_t>(n));
    for (ElementId c = 0; c < n; ++c) {
      col_support_[static_cast<std::size_t>(c)] =
          support[static_cast<std::size_t>(dmap_[static_cast<std::size_t>(c)])];
    }
    for (ElementId c = 0; c < n; ++c) {
      const bool projection_column = dmap_[static_cast<std::size_t>(c)] == c;
      for (ElementId r = 0; r < n; ++r) {
        if (!defined(r, c)) {
          continue;
        }
        if (projection_column) {
          table_.set(r, c, r);
        } else if (r == dmap_[static_cast<std::size_t>(c)]) {
          table_.set(r, c, c);
        } else {
          free_cells_.emplace_back(r, c);
        }
      }
    }
    for (ElementId v = 0; v < n; ++v) {
      fibres_[static_cast<std::size_t>(dmap_[static_cast<std::size_t>(v)])]
          .push_back(v);
    }
  }

  bool run() { return dfs(0); }

 private:
  bool defined(ElementId r, ElementId c) const {
    return (col_support_[static_cast<std::size_t>(c)] >>
            static_cast<unsigned>(r)) &
           1u;
  }

  bool known(ElementId r, ElementId c) const {
    return table_.at(r, c) != kUndefined;
  }

  bool q1_consistent() const {
    for (ElementId y = 0; y < n_; ++y) {
      for (ElementId z = 0; z < n_; ++z) {
        if (!defined(y, z)) {
          continue;
        }
        for (ElementId x = 0; x < n_; ++x) {
          // x*(y*z) is defined iff x*y is, because values stay in the
          // dmap fibre of their left factor.
          if (!defined(x, y)) {
            continue;
          }
          if (!known(x, y)) {
            continue;
          }
          const ElementId xy = table_.at(x, y);
          if (!defined(xy, z)) {
            return false;
          }
          if (!known(xy, z) || !known(y, z)) {
            continue;
          }
          const ElementId yz = table_.at(y, z);
          if (!known(x, yz)) {
            continue;
          }
          if (table_.at(xy, z) != table_.at(x, yz)) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool dfs(std::size_t index) {
    if (index == free_cells_.size()) {
      return yield_(table_);
    }
    const auto [r, c] = free_cells_[index];
    for (ElementId v :
         fibres_[static_cast<std::size_t>(dmap_[static_cast<std::size_t>(r)])]) {
      table_.set(r, c, v);
      if (q1_consistent() && !dfs(index + 1)) {
        return false;
      }
      table_.unset(r, c);
    }
    return true;
  }

  int n_;
  std::vector<ElementId> dmap_;
  std::vector<std::uint32_t> col_support_;
  std::function<bool(const OpTable&)> yield_;
  OpTable table_;
  std::vector<std::pair<ElementId, ElementId>> free_cells_;
  std::array<std::vector<ElementId>, 32> fibres_;
};

StructureDef assemble(int n, const std::vector<ElementId>& dmap,
                      const OpTable& table) {
  StructureDef def;
  def.kind = Kind::kConstellation;
  def.table = table;
  def.dmap = dmap;
  for (int x = 0; x < n; ++x) {
    def.labels.push_back("x" + std::to_string(x));
  }
  return def;
}

}  // namespace

std::uint32_t census_flags(const StructureDef& def) {
  std::uint32_t flags = 0;
  if (all_pass(check_constellation_axioms(def))) {
    flags |= kFlagConstellation;
  }
  const ConstellationClass cls = classify(def);
  if (cls.normal) flags |= kFlagNormal;
  if (cls.composable) flags |= kFlagComposable;
  if (cls.categorial) flags |= kFlagCategorial;
  const RangeInference inferred = infer_pre_range(def);
  if (inferred.rmap) {
    flags |= kFlagPreRange;
    StructureDef with_range = def;
    with_range.rmap = inferred.rmap;
    if (all_pass(check_range_axioms(with_range))) {
      flags |= kFlagRange;
      if (is_left_cancellative(with_range).cancellative) {
        flags |= kFlagLeftCancellative;
      }
    }
  }
  return flags;
}

void enumerate_constellations(
    int n, const std::function<bool(const CensusRecord&)>& yield, int cap) {
  if (n < 0 || n > cap) {
    throw std::invalid_argument(
        "enumerate_constellations: size outside the configured cap");
  }
  if (n > 31) {
    throw std::invalid_argument("enumerate_constellations: size too large");
  }
  int emitted = 0;
  if (n == 0) {
    CensusRecord record;
    record.canonical.kind = Kind::kConstellation;
    record.canonical.name = "n0_0";
    record.size = 0;
    record.flags = census_flags(record.canonical);
    record.automorphisms = 1;
    if (record.flags & kFlagPreRange) {
      record.canonical.rmap = infer_pre_range(record.canonical).rmap;
    }
    yield(record);
    return;
  }

  std::set<std::vector<ElementId>> seen;
  bool keep_going = true;

  auto consider = [&](const std::vector<ElementId>& dmap,
                      const OpTable& table) -> bool {
    StructureDef def = assemble(n, dmap, table);
    if (!all_pass(check_constellation_axioms(def))) {
      return true;
    }
    std::vector<ElementId> key = canonical_key(def);
    if (!seen.insert(std::move(key)).second) {
      return true;
    }
    CensusRecord record;
    record.canonical = generic_labels(canonical_form(def));
    record.canonical.name = "n" + std::to_string(n) + "_" +
                            std::to_string(emitted);
    record.size = n;
    record.flags = census_flags(record.canonical);
    record.automorphisms = automorphism_count(record.canonical);
    if (record.flags & kFlagPreRange) {
      record.canonical.rmap = infer_pre_range(record.canonical).rmap;
    }
    ++emitted;
    keep_going = yield(record);
    return keep_going;
  };

  // Projections form an initial segment; every class has such a member.
  for (int p = 1; p <= n && keep_going; ++p) {
    std::vector<ElementId> dmap(static_cast<std::size_t>(n));
    for (ElementId x = 0; x < p; ++x) {
      dmap[static_cast<std::size_t>(x)] = x;
    }
    const int loose = n - p;
    std::vector<ElementId> choice(static_cast<std::size_t>(loose), 0);
    while (keep_going) {
      for (int k = 0; k < loose; ++k) {
        dmap[static_cast<std::size_t>(p + k)] = choice[static_cast<std::size_t>(k)];
      }
      // Supports: per projection e, the rows on which column e is defined.
      std::vector<std::uint32_t> support(static_cast<std::size_t>(p));
      std::vector<std::uint32_t> extras(static_cast<std::size_t>(p), 0);
      const std::uint32_t extras_limit = 1u << (n - 1);
      bool support_done = false;
      while (!support_done && keep_going) {
        for (int e = 0; e < p; ++e) {
          // Insert the mandatory self-bit into the free bit pattern.
          const std::uint32_t low =
              extras[static_cast<std::size_t>(e)] &
              ((1u << static_cast<unsigned>(e)) - 1u);
          const std::uint32_t high =
              extras[static_cast<std::size_t>(e)] >> static_cast<unsigned>(e);
          support[static_cast<std::size_t>(e)] =
              low | (1u << static_cast<unsigned>(e)) |
              (high << static_cast<unsigned>(e + 1));
        }
        TableSearch search(n, dmap, support, [&](const OpTable& table) {
          return consider(dmap, table);
        });
        if (!search.run()) {
          keep_going = false;
        }
        int pos = p - 1;
        while (pos >= 0) {
          if (++extras[static_cast<std::size_t>(pos)] < extras_limit) {
            break;
          }
          extras[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        support_done = pos < 0;
      }
      int pos = loose - 1;
      while (pos >= 0) {
        if (++choice[static_cast<std::size_t>(pos)] < p) {
          break;
        }
        choice[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) {
        break;
      }
    }
  }
}

std::vector<CensusRecord> all_constellations(int n, int cap) {
  std::vector<CensusRecord> out;
  enumerate_constellations(
      n,
      [&](const CensusRecord& record) {
        out.push_back(record);
        return true;
      },
      cap);
  return out;
}

std::string census_line(const CensusRecord& record) {
  std::string out = std::to_string(record.size) + " ";
  for (std::size_t i = 0; i < record.canonical.dmap.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += std::to_string(record.canonical.dmap[i]);
  }
  out += ":";
  const auto& cells = record.canonical.table.cells();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    out += cells[i] == kUndefined ? "-" : std::to_string(cells[i]);
  }
  out += " " + std::to_string(record.flags);
  return out;
}

namespace {

StructureDef with_inferred_range(const StructureDef& def) {
  StructureDef out = def;
  if (!out.rmap) {
    out.rmap = infer_pre_range(def).rmap;
  }
  return out;
}

bool roundtrip_holds(const StructureDef& def) {
  return roundtrip_check(with_inferred_range(def));
}

bool range_bound_holds(const StructureDef& q0) {
  const StructureDef q = with_inferred_range(q0);
  for (ElementId s = 0; s < q.size(); ++s) {
    for (ElementId t = 0; t < q.size(); ++t) {
      if (!q.defined(s, t)) {
        continue;
      }
      const ElementId rst = q.ran(q.product(s, t));
      if (!q.defined(rst, q.ran(t))) {
        return false;
      }
      if (q.ran(s) == q.dom(t) && rst != q.ran(t)) {
        return false;
      }
    }
  }
  return true;
}

bool derived_cancellative_holds(const StructureDef& q0) {
  const StructureDef q = with_inferred_range(q0);
  const StructureDef derived = derived_category(q);
  return is_left_cancellative(q).cancellative ==
         is_left_cancellative(derived).cancellative;
}

bool cs_subcat_iff_rc_holds(const StructureDef& q0) {
  const StructureDef q = with_inferred_range(q0);
  const CanonicalExtension ext = canonical_extension(q);
  const bool subcat = surjection_part(q, ext).subcategory;
  const bool rc = find_report(check_range_axioms(q), "RC")->pass;
  return subcat == rc;
}

bool insertion_subcategory_holds(const StructureDef& def) {
  const CanonicalExtension ext = canonical_extension(def);
  const IdSet ins = insertion_part(ext);
  for (ElementId e : identity_arrows(ext.category)) {
    if (!id_set_contains(ins, e)) {
      return false;
    }
  }
  for (ElementId a : ins) {
    for (ElementId b : ins) {
      if (ext.category.defined(a, b) &&
          !id_set_contains(ins, ext.category.product(a, b))) {
        return false;
      }
    }
  }
  return true;
}

bool extension_i_category_holds(const StructureDef& def) {
  const CanonicalExtension ext = canonical_extension(def);
  return all_pass(check_i_category(ext.category, insertion_part(ext)));
}

bool i_order_holds(const StructureDef& def) {
  const CanonicalExtension ext = canonical_extension(def);
  return all_pass(i_order(ext.category, insertion_part(ext)).reports);
}

bool unique_factorization_holds(const StructureDef& q0) {
  const StructureDef q = with_inferred_range(q0);
  const CanonicalExtension ext = canonical_extension(q);
  return unique_is_factorization(q, ext).ok;
}

ISWitness witness_of(const StructureDef& q, const CanonicalExtension& ext) {
  return extension_is_witness(q, ext);
}

bool extension_is_category_holds(const StructureDef& q0) {
  const StructureDef q = with_inferred_range(q0);
  const CanonicalExtension ext = canonical_extension(q);
  return check_is_category(ext.category, insertion_part(ext),
                           surjection_part(q, ext).ids)
      .ok;
}

bool epi_transfer_holds(const StructureDef& q0) {
  const StructureDef q = with_inferred_range(q0);
  const CanonicalExtension ext = canonical_extension(q);
  return is_regular(ext.category, witness_of(q, ext)).transfer_agrees;
}

bool regular_iff_cancellative_holds(const StructureDef& q0) {
  const StructureDef q = with_inferred_range(q0);
  const CanonicalExtension ext = canonical_extension(q);
  return is_regular(ext.category, witness_of(q, ext)).regular ==
         is_left_cancellative(q).cancellative;
}

bool wfs_three_way_holds(const StructureDef& q0) {
  const StructureDef q = with_inferred_range(q0);
  const CanonicalExtension ext = canonical_extension(q);
  return has_well_founded_subobjects(ext.category, witness_of(q, ext))
      .routes_agree;
}

bool wfs_factorization_holds(const StructureDef& q0) {
  const StructureDef q = with_inferred_range(q0);
  const CanonicalExtension ext = canonical_extension(q);
  const ISWitness w = witness_of(q, ext);
  IdSet monos;
  for (ElementId a = 0; a < ext.category.size(); ++a) {
    if (is_monomorphism(ext.category, a)) {
      monos.push_back(a);
    }
  }
  const bool system =
      check_factorization_system(ext.category, w.surjections, monos).pass;
  return system == has_well_founded_subobjects(ext.category, w).wfs;
}

bool wfs_subobject_order_holds(const StructureDef& q0) {
  const StructureDef q = with_inferred_range(q0);
  const CanonicalExtension ext = canonical_extension(q);
  const ISWitness w = witness_of(q, ext);
  const StructureDef& cat = ext.category;
  if (!has_well_founded_subobjects(cat, w).wfs) {
    return true;
  }
  const Relation order = i_order(cat, w.insertions).order;
  for (ElementId a = 0; a < cat.size(); ++a) {
    if (!is_monomorphism(cat, a)) {
      continue;
    }
    for (ElementId b = 0; b < cat.size(); ++b) {
      if (!is_monomorphism(cat, b) || cat.ran(a) != cat.ran(b)) {
        continue;
      }
      bool factors = false;
      for (ElementId x = 0; x < cat.size(); ++x) {
        if (cat.defined(x, b) && cat.product(x, b) == a) {
          factors = true;
          break;
        }
      }
      const ElementId ra =
          cat.ran(w.surjection_factor[static_cast<std::size_t>(a)]);
      const ElementId rb =
          cat.ran(w.surjection_factor[static_cast<std::size_t>(b)]);
      if (factors != order.contains(ra, rb)) {
        return false;
      }
    }
  }
  return true;
}

bool balanced_equivalence_holds(const StructureDef& q0) {
  const StructureDef q = with_inferred_range(q0);
  const CanonicalExtension ext = canonical_extension(q);
  return balanced_equivalence_check(ext.category, witness_of(q, ext)).agree;
}

bool equaliser_equivalence_holds(const StructureDef& q0) {
  const StructureDef q = with_inferred_range(q0);
  const CanonicalExtension ext = canonical_extension(q);
  return insertion_equaliser_check(ext.category, witness_of(q, ext)).status !=
         TriState::kFails;
}

bool psi_holds(const StructureDef& q0) {
  const StructureDef q = with_inferred_range(q0);
  const CanonicalExtension ext = canonical_extension(q);
  return psi_isomorphism(ext.category, witness_of(q, ext)).verdict;
}

bool eta_holds(const StructureDef& q0) {
  return eta_embedding(with_inferred_range(q0)).isomorphism;
}

bool quotient_reconstruction_holds(const StructureDef& q0) {
  const StructureDef q = with_inferred_range(q0);
  const CanonicalExtension ext = canonical_extension(q);
  std::vector<ElementId> projection(ext.pairs.size());
  for (std::size_t i = 0; i < ext.pairs.size(); ++i) {
    projection[i] = ext.pairs[i].underlying;
  }
  const Morphism rho{ext.category, q, projection};
  if (!check_radiant(rho).canonical) {
    return false;
  }
  if (!canonical_reconstruction(rho).isomorphism) {
    return false;
  }
  const QuotientResult quot = quotient(ext.category, kernel_relation(rho));
  if (!quot.reconstruction_ok) {
    return false;
  }
  return are_isomorphic(quot.quotient, constellation_reduct(q)).isomorphic;
}

bool functoriality_holds(const StructureDef& q0) {
  const StructureDef q = with_inferred_range(q0);
  const CanonicalExtension ext = canonical_extension(q);
  const ISWitness w = witness_of(q, ext);
  const StructureDef& cat = ext.category;
  for (ElementId a = 0; a < cat.size(); ++a) {
    for (ElementId s : w.surjections) {
      if (!cat.defined(a, s)) {
        continue;
      }
      const ElementId as = cat.product(a, s);
      for (ElementId i : w.insertions) {
        if (!cat.defined(as, i)) {
          continue;
        }
        const ElementId lhs = cat.product(as, i);
        for (ElementId t : w.surjections) {
          for (ElementId j : w.insertions) {
            if (!cat.defined(t, j)) {
              continue;
            }
            const ElementId tj = cat.product(t, j);
            for (ElementId b = 0; b < cat.size(); ++b) {
              if (!cat.defined(tj, b) || cat.product(tj, b) != lhs) {
                continue;
              }
              const FunctorialityOutcome outcome =
                  functoriality_witness(cat, w, a, s, i, t, j, b);
              if (!outcome.equations_hold || !outcome.unique) {
                return false;
              }
            }
          }
        }
      }
    }
  }
  return true;
}

bool natural_order_restrictions_holds(const StructureDef& def) {
  const Relation order = natural_order(def);
  if (!order.is_partial_order()) {
    return false;
  }
  const RestrictionTable rt = restriction_table(def, order);
  return rt.total && rt.matches_left_multiplication;
}

bool ordered_axioms_natural_holds(const StructureDef& q0) {
  const StructureDef q = with_inferred_range(q0);
  const Relation order = natural_order(q);
  if (!order.is_partial_order()) {
    return false;
  }
  for (const auto& report : check_ordered_axioms(q, order)) {
    if (!report.pass && report.axiom != "OO") {
      return false;
    }
  }
  return true;
}

bool restriction_lemma_holds(const StructureDef& q0) {
  const StructureDef q = with_inferred_range(q0);
  const StructureDef derived = derived_category(q);
  const RestrictionTable rt = restriction_table(derived, *derived.order);
  if (!rt.total) {
    return false;
  }
  return check_restriction_composition(derived, *derived.order, rt).pass &&
         check_order_recovery(derived, *derived.order, rt).pass;
}

bool natural_quasiorder_holds(const StructureDef& def) {
  const Quasiorders orders = quasiorders(def);
  return orders.standard_quasiorder && orders.natural_quasiorder;
}

bool normal_iff_partial_order_holds(const StructureDef& def) {
  return natural_order(def).is_partial_order() == classify(def).normal;
}

bool categorial_range_holds(const StructureDef& def) {
  const ConstellationClass cls = classify(def);
  if (!cls.categorial) {
    return false;
  }
  StructureDef with_range = def;
  with_range.rmap = cls.induced_rmap;
  return all_pass(check_range_axioms(with_range));
}

bool applicable_all(const CensusRecord&) { return true; }

std::function<bool(const CensusRecord&)> needs(std::uint32_t mask) {
  return [mask](const CensusRecord& record) {
    return (record.flags & mask) == mask;
  };
}

}  // namespace

const std::vector<PropertyDef>& property_catalogue() {
  static const std::vector<PropertyDef> catalogue = {
      {"natural-quasiorder",
       "the standard and natural relations are quasiorders", applicable_all,
       natural_quasiorder_holds},
      {"normal-iff-partial-order",
       "the natural quasiorder is a partial order exactly on normal "
       "structures",
       applicable_all, normal_iff_partial_order_holds},
      {"normal-implies-pre-range",
       "every normal constellation has a pre-range (expected to fail)",
       needs(kFlagNormal),
       [](const StructureDef& def) { return has_pre_range(def); }},
      {"pre-range-implies-range",
       "every pre-range satisfies the right congruence condition (expected "
       "to fail)",
       needs(kFlagPreRange),
       [](const StructureDef& def) {
         return all_pass(check_range_axioms(with_inferred_range(def)));
       }},
      {"pre-range-laws",
       "the least-projection map satisfies the four range laws",
       needs(kFlagPreRange),
       [](const StructureDef& def) {
         const auto reports = check_range_axioms(with_inferred_range(def));
         for (const char* id : {"R1", "R2", "R3", "R4"}) {
           if (!find_report(reports, id)->pass) {
             return false;
           }
         }
         return true;
       }},
      {"categorial-range",
       "categorial structures carry a range via their unique right "
       "composition",
       needs(kFlagCategorial), categorial_range_holds},
      {"natural-order-restrictions",
       "normal structures have restrictions e|s = e*s under the natural "
       "order",
       needs(kFlagNormal), natural_order_restrictions_holds},
      {"ordered-axioms-natural",
       "ranged structures are ordered by their natural order",
       needs(kFlagRange), ordered_axioms_natural_holds},
      {"restriction-lemma",
       "nested restrictions compose and recover the order",
       needs(kFlagRange), restriction_lemma_holds},
      {"roundtrip", "the two correspondence constructions are inverse",
       needs(kFlagRange), roundtrip_holds},
      {"range-bound",
       "R(s*t) lies below R(t), with equality when R(s) = D(t)",
       needs(kFlagRange), range_bound_holds},
      {"derived-cancellative",
       "left cancellativity transfers to and from the derived category",
       needs(kFlagRange), derived_cancellative_holds},
      {"insertion-subcategory",
       "the insertion part is an identity-containing subcategory",
       applicable_all, insertion_subcategory_holds},
      {"extension-i-category",
       "the extension of a normal structure is an I-category",
       needs(kFlagNormal), extension_i_category_holds},
      {"i-order",
       "the I-order is a partial order making the extension ordered",
       needs(kFlagNormal), i_order_holds},
      {"cs-subcat-iff-rc",
       "the surjection part is a subcategory exactly under the right "
       "congruence condition",
       needs(kFlagPreRange), cs_subcat_iff_rc_holds},
      {"unique-factorization",
       "every extension arrow factors uniquely as surjection then insertion",
       needs(kFlagRange), unique_factorization_holds},
      {"extension-is-category",
       "the extension of a ranged structure is an IS-category",
       needs(kFlagRange), extension_is_category_holds},
      {"epi-transfer",
       "epimorphy of surjections agrees inside and outside the subcategory",
       needs(kFlagRange), epi_transfer_holds},
      {"regular-iff-cancellative",
       "the extension is regular exactly for left cancellative structures",
       needs(kFlagRange), regular_iff_cancellative_holds},
      {"wfs-three-way",
       "the three descriptions of well-founded subobjects agree",
       needs(kFlagRange), wfs_three_way_holds},
      {"wfs-factorization",
       "surjections with all monomorphisms form a factorization system "
       "exactly under well-founded subobjects",
       needs(kFlagRange), wfs_factorization_holds},
      {"wfs-subobject-order",
       "under well-founded subobjects, mono factorisation matches the "
       "I-order of images",
       needs(kFlagRange), wfs_subobject_order_holds},
      {"balanced-equivalence",
       "regular extensions are balanced exactly when surjections are the "
       "epimorphisms and subobjects are well-founded",
       needs(kFlagRange | kFlagLeftCancellative), balanced_equivalence_holds},
      {"equaliser-insertion",
       "insertion equalisers exist for all pairs exactly on regular "
       "structures",
       needs(kFlagRange), equaliser_equivalence_holds},
      {"functoriality-diagonal",
       "every bordered factorisation square has a unique diagonal",
       needs(kFlagRange), functoriality_holds},
      {"psi-isomorphism",
       "the extension is isomorphic to the extension of its surjection "
       "constellation",
       needs(kFlagRange), psi_holds},
      {"eta-isomorphism",
       "a ranged structure embeds isomorphically into the surjection "
       "constellation of its extension",
       needs(kFlagRange), eta_holds},
      {"quotient-reconstruction",
       "the extension quotients back onto the structure and rebuilds "
       "itself",
       needs(kFlagRange), quotient_reconstruction_holds},
  };
  return catalogue;
}

const PropertyDef* find_property(const std::string& id) {
  for (const auto& property : property_catalogue()) {
    if (property.id == id) {
      return &property;
    }
  }
  return nullptr;
}

MiningResult find_counterexample(const std::string& property_id, int n_max) {
  const PropertyDef* property = find_property(property_id);
  if (property == nullptr) {
    throw std::invalid_argument("find_counterexample: unknown property " +
                                property_id);
  }
  MiningResult out;
  for (int n = 0; n <= n_max; ++n) {
    bool found = false;
    enumerate_constellations(
        n,
        [&](const CensusRecord& record) {
          if (!property->applicable(record)) {
            return true;
          }
          if (!property->holds(record.canonical)) {
            out.witness = record.canonical;
            found = true;
            return false;
          }
          return true;
        },
        n_max);
    out.max_size_searched = n;
    if (found) {
      return out;
    }
  }
  return out;
}

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const StructureDef& q, const StructureDef& target)
      : q_(q),
        target_(target),
        map_(static_cast<std::size_t>(q.size()), kUndefined),
        used_(static_cast<std::size_t>(target.size()), false) {}

  std::optional<std::vector<ElementId>> run() {
    if (place(0)) {
      return map_;
    }
    return std::nullopt;
  }

 private:
  bool consistent(ElementId x, ElementId t) const {
    const ElementId dx = map_[static_cast<std::size_t>(q_.dom(x))];
    if (dx != kUndefined && target_.dom(t) != dx) {
      return false;
    }
    const ElementId rx = map_[static_cast<std::size_t>(q_.ran(x))];
    if (rx != kUndefined && target_.ran(t) != rx) {
      return false;
    }
    for (ElementId y = 0; y < q_.size(); ++y) {
      const ElementId ty = map_[static_cast<std::size_t>(y)];
      if (ty == kUndefined) {
        continue;
      }
      if (q_.defined(x, y)) {
        if (!target_.defined(t, ty)) {
          return false;
        }
        const ElementId v = map_[static_cast<std::size_t>(q_.product(x, y))];
        if (v != kUndefined && target_.product(t, ty) != v) {
          return false;
        }
      }
      if (q_.defined(y, x)) {
        if (!target_.defined(ty, t)) {
          return false;
        }
        const ElementId v = map_[static_cast<std::size_t>(q_.product(y, x))];
        if (v != kUndefined && target_.product(ty, t) != v) {
          return false;
        }
      }
    }
    return true;
  }

  bool verify() const {
    Morphism m{q_, target_, map_};
    const RadiantFlags flags = check_radiant(m);
    return is_injective(m) && flags.range_radiant;
  }

  bool place(ElementId x) {
    if (x == q_.size()) {
      return verify();
    }
    for (ElementId t = 0; t < target_.size(); ++t) {
      if (used_[static_cast<std::size_t>(t)] || !consistent(x, t)) {
        continue;
      }
      map_[static_cast<std::size_t>(x)] = t;
      used_[static_cast<std::size_t>(t)] = true;
      if (place(x + 1)) {
        return true;
      }
      map_[static_cast<std::size_t>(x)] = kUndefined;
      used_[static_cast<std::size_t>(t)] = false;
    }
    return false;
  }

  const StructureDef& q_;
  const StructureDef& target_;
  std::vector<ElementId> map_;
  std::vector<bool> used_;
};

}  // namespace

EmbeddingResult bounded_embedding_search(const StructureDef& q, int n_max) {
  if (!q.rmap) {
    throw std::invalid_argument(
        "bounded_embedding_search: range map required");
  }
  EmbeddingResult out;
  for (int n = 0; n <= n_max; ++n) {
    const CxConstellation cx = cx_constellation(n, n_max > kDefaultCxCap
                                                       ? n_max
                                                       : kDefaultCxCap);
    EmbeddingSearch search(q, cx.def);
    if (auto map = search.run()) {
      out.embedding = Morphism{q, cx.def, *map};
      out.found_n = n;
      out.max_n_searched = n;
      return out;
    }
    out.max_n_searched = n;
  }
  return out;
}

}  // namespace constelloid
