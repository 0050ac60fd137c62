#include "constelloid/extension.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace constelloid {

namespace {

std::string pair_label(const StructureDef& q, ElementId s, ElementId e) {
  return "(" + q.label(s) + "," + q.label(e) + ")";
}

std::vector<ElementId> require_pre_range(const StructureDef& q) {
  if (q.rmap) {
    return *q.rmap;
  }
  const RangeInference inferred = infer_pre_range(q);
  if (!inferred.rmap) {
    throw std::invalid_argument("structure has no pre-range");
  }
  return *inferred.rmap;
}

void require_quasiorder(const Relation& order) {
  if (!order.is_quasiorder()) {
    throw std::invalid_argument("relation is not reflexive and transitive");
  }
}

void validate_monoid(const MonoidDef& monoid) {
  const int n = monoid.table.size();
  if (static_cast<int>(monoid.labels.size()) != n || n == 0) {
    throw std::invalid_argument("monoid: label count mismatch");
  }
  if (monoid.identity < 0 || monoid.identity >= n) {
    throw std::invalid_argument("monoid: identity out of range");
  }
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      const ElementId ab = monoid.table.at(a, b);
      if (ab < 0 || ab >= n) {
        throw std::invalid_argument("monoid: operation not total");
      }
      for (ElementId c = 0; c < n; ++c) {
        if (monoid.table.at(monoid.table.at(a, b), c) !=
            monoid.table.at(a, monoid.table.at(b, c))) {
          throw std::invalid_argument("monoid: operation not associative");
        }
      }
    }
    if (monoid.table.at(monoid.identity, a) != a ||
        monoid.table.at(a, monoid.identity) != a) {
      throw std::invalid_argument("monoid: identity law fails");
    }
  }
}

}  // namespace

ElementId CanonicalExtension::pair_id(ElementId underlying,
                                      ElementId cod) const {
  const PairElement probe{underlying, cod};
  auto it = std::lower_bound(pairs.begin(), pairs.end(), probe,
                             [](const PairElement& a, const PairElement& b) {
                               return a.underlying != b.underlying
                                          ? a.underlying < b.underlying
                                          : a.cod < b.cod;
                             });
  if (it != pairs.end() && *it == probe) {
    return static_cast<ElementId>(it - pairs.begin());
  }
  return kUndefined;
}

CanonicalExtension canonical_extension(const StructureDef& q) {
  const int n = q.size();
  CanonicalExtension ext;
  for (ElementId s = 0; s < n; ++s) {
    for (ElementId e = 0; e < n; ++e) {
      if (is_projection(q, e) && q.defined(s, e)) {
        ext.pairs.push_back({s, e});
      }
    }
  }

  const int m = static_cast<int>(ext.pairs.size());
  StructureDef& cat = ext.category;
  cat.name = q.name.empty() ? "extension" : "C(" + q.name + ")";
  cat.kind = Kind::kCategory;
  cat.table = OpTable(m);
  cat.dmap.resize(static_cast<std::size_t>(m));
  cat.rmap = std::vector<ElementId>(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const PairElement& p = ext.pairs[static_cast<std::size_t>(i)];
    cat.labels.push_back(pair_label(q, p.underlying, p.cod));
    cat.dmap[static_cast<std::size_t>(i)] =
        ext.pair_id(q.dom(p.underlying), q.dom(p.underlying));
    (*cat.rmap)[static_cast<std::size_t>(i)] = ext.pair_id(p.cod, p.cod);
  }
  for (int i = 0; i < m; ++i) {
    const PairElement& a = ext.pairs[static_cast<std::size_t>(i)];
    for (int j = 0; j < m; ++j) {
      const PairElement& b = ext.pairs[static_cast<std::size_t>(j)];
      if (a.cod != q.dom(b.underlying)) {
        continue;
      }
      const ElementId product =
          ext.pair_id(q.product(a.underlying, b.underlying), b.cod);
      if (product == kUndefined) {
        throw std::logic_error("canonical_extension: composite pair missing");
      }
      cat.table.set(i, j, product);
    }
  }
  return ext;
}

IdSet insertion_part(const CanonicalExtension& ext) {
  IdSet out;
  for (std::size_t i = 0; i < ext.pairs.size(); ++i) {
    const PairElement& p = ext.pairs[i];
    const ElementId dom_of_underlying =
        ext.category.dom(static_cast<ElementId>(i));
    // Underlying element is a projection exactly when the pair equals its
    // own domain identity's underlying.
    if (ext.pairs[static_cast<std::size_t>(dom_of_underlying)].underlying ==
        p.underlying) {
      out.push_back(static_cast<ElementId>(i));
    }
  }
  return out;
}

SurjectionPart surjection_part(const StructureDef& q,
                               const CanonicalExtension& ext) {
  const std::vector<ElementId> rmap = require_pre_range(q);
  SurjectionPart out;
  std::vector<ElementId> ids;
  for (ElementId s = 0; s < q.size(); ++s) {
    const ElementId id = ext.pair_id(s, rmap[static_cast<std::size_t>(s)]);
    if (id == kUndefined) {
      throw std::logic_error("surjection_part: pair (s, R(s)) missing");
    }
    ids.push_back(id);
  }
  out.ids = make_id_set(std::move(ids));

  out.subcategory = true;
  for (ElementId a : out.ids) {
    for (ElementId b : out.ids) {
      if (ext.category.defined(a, b) &&
          !id_set_contains(out.ids, ext.category.product(a, b))) {
        out.subcategory = false;
        if (!out.closure_witness) {
          out.closure_witness = {a, b};
        }
      }
    }
  }

  if (out.subcategory) {
    StructureDef with_range = q;
    with_range.rmap = rmap;
    if (all_pass(check_range_axioms(with_range))) {
      const StructureDef derived = derived_category(with_range);
      const SubcategoryView view = subcategory(ext.category, out.ids);
      std::vector<ElementId> map(static_cast<std::size_t>(q.size()));
      for (ElementId s = 0; s < q.size(); ++s) {
        map[static_cast<std::size_t>(s)] = view.from_parent[static_cast<std::size_t>(
            ext.pair_id(s, rmap[static_cast<std::size_t>(s)]))];
      }
      StructureDef derived_plain = derived;
      derived_plain.order.reset();
      out.isomorphic_to_derived =
          is_structure_isomorphism(Morphism{derived_plain, view.sub, map});
    }
  }
  return out;
}

ISFactorization unique_is_factorization(const StructureDef& q,
                                        const CanonicalExtension& ext) {
  const std::vector<ElementId> rmap = require_pre_range(q);
  const IdSet insertions = insertion_part(ext);
  SurjectionPart surjections = surjection_part(q, ext);

  const int m = static_cast<int>(ext.pairs.size());
  ISFactorization out;
  out.ok = true;
  out.surjection_factor.assign(static_cast<std::size_t>(m), kUndefined);
  out.insertion_factor.assign(static_cast<std::size_t>(m), kUndefined);

  for (ElementId a = 0; a < m; ++a) {
    const PairElement& p = ext.pairs[static_cast<std::size_t>(a)];
    const ElementId r = rmap[static_cast<std::size_t>(p.underlying)];
    const ElementId expected_s = ext.pair_id(p.underlying, r);
    const ElementId expected_i = ext.pair_id(r, p.cod);
    int count = 0;
    ElementId found_s = kUndefined;
    ElementId found_i = kUndefined;
    for (ElementId u : surjections.ids) {
      for (ElementId v : insertions) {
        if (ext.category.defined(u, v) && ext.category.product(u, v) == a) {
          ++count;
          found_s = u;
          found_i = v;
        }
      }
    }
    if (count != 1 || found_s != expected_s || found_i != expected_i) {
      out.ok = false;
      if (!out.failure) {
        out.failure = a;
      }
    }
    out.surjection_factor[static_cast<std::size_t>(a)] = expected_s;
    out.insertion_factor[static_cast<std::size_t>(a)] = expected_i;
  }
  return out;
}

StructureDef constellation_from_poset(const Relation& order,
                                      const std::vector<std::string>& labels,
                                      const std::string& name) {
  require_quasiorder(order);
  const int n = order.size();
  if (static_cast<int>(labels.size()) != n) {
    throw std::invalid_argument("constellation_from_poset: label mismatch");
  }
  StructureDef out;
  out.name = name;
  out.kind = Kind::kConstellation;
  out.labels = labels;
  out.table = OpTable(n);
  out.dmap = identity_map(n);
  out.rmap = identity_map(n);
  for (ElementId e = 0; e < n; ++e) {
    for (ElementId f = 0; f < n; ++f) {
      if (order.contains(e, f)) {
        out.table.set(e, f, e);
      }
    }
  }
  return out;
}

StructureDef thin_category(const Relation& order,
                           const std::vector<std::string>& labels,
                           const std::string& name) {
  require_quasiorder(order);
  const int n = order.size();
  if (static_cast<int>(labels.size()) != n) {
    throw std::invalid_argument("thin_category: label mismatch");
  }
  std::vector<std::pair<ElementId, ElementId>> arrows;
  std::map<std::pair<ElementId, ElementId>, ElementId> arrow_id;
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (order.contains(x, y)) {
        arrow_id[{x, y}] = static_cast<ElementId>(arrows.size());
        arrows.emplace_back(x, y);
      }
    }
  }
  const int m = static_cast<int>(arrows.size());
  StructureDef out;
  out.name = name;
  out.kind = Kind::kCategory;
  out.table = OpTable(m);
  out.dmap.resize(static_cast<std::size_t>(m));
  out.rmap = std::vector<ElementId>(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    const auto [x, y] = arrows[static_cast<std::size_t>(i)];
    out.labels.push_back("(" + labels[static_cast<std::size_t>(x)] + "," +
                         labels[static_cast<std::size_t>(y)] + ")");
    out.dmap[static_cast<std::size_t>(i)] = arrow_id.at({x, x});
    (*out.rmap)[static_cast<std::size_t>(i)] = arrow_id.at({y, y});
    for (int j = 0; j < m; ++j) {
      const auto [x2, y2] = arrows[static_cast<std::size_t>(j)];
      if (y == x2) {
        out.table.set(i, j, arrow_id.at({x, y2}));
      }
    }
  }
  return out;
}

ElementId CxConstellation::id_of(const std::vector<ElementId>& map) const {
  auto it = std::lower_bound(maps.begin(), maps.end(), map);
  if (it != maps.end() && *it == map) {
    return static_cast<ElementId>(it - maps.begin());
  }
  return kUndefined;
}

CxConstellation cx_constellation(int n, int cap) {
  if (n < 0) {
    throw std::invalid_argument("cx_constellation: negative size");
  }
  if (n > cap) {
    throw std::runtime_error("cx_constellation: size exceeds the element cap");
  }
  CxConstellation out;
  std::vector<ElementId> counter(static_cast<std::size_t>(n), kUndefined);
  while (true) {
    out.maps.push_back(counter);
    int pos = n - 1;
    while (pos >= 0) {
      ElementId& digit = counter[static_cast<std::size_t>(pos)];
      if (digit + 1 < n) {
        ++digit;
        break;
      }
      digit = kUndefined;
      --pos;
    }
    if (pos < 0) {
      break;
    }
  }

  const int m = static_cast<int>(out.maps.size());
  StructureDef& def = out.def;
  def.name = "cx" + std::to_string(n);
  def.kind = Kind::kConstellation;
  def.table = OpTable(m);
  def.dmap.resize(static_cast<std::size_t>(m));
  def.rmap = std::vector<ElementId>(static_cast<std::size_t>(m));

  for (int i = 0; i < m; ++i) {
    const auto& v = out.maps[static_cast<std::size_t>(i)];
    std::string label;
    for (ElementId value : v) {
      label += value == kUndefined
                   ? '-'
                   : static_cast<char>('1' + static_cast<char>(value));
    }
    if (label.empty()) {
      label = "e";
    }
    def.labels.push_back(label);

    std::vector<ElementId> dom_vec(static_cast<std::size_t>(n), kUndefined);
    std::vector<ElementId> ran_vec(static_cast<std::size_t>(n), kUndefined);
    for (int p = 0; p < n; ++p) {
      if (v[static_cast<std::size_t>(p)] != kUndefined) {
        dom_vec[static_cast<std::size_t>(p)] = p;
        ran_vec[static_cast<std::size_t>(v[static_cast<std::size_t>(p)])] =
            v[static_cast<std::size_t>(p)];
      }
    }
    def.dmap[static_cast<std::size_t>(i)] = out.id_of(dom_vec);
    (*def.rmap)[static_cast<std::size_t>(i)] = out.id_of(ran_vec);
  }

  for (int i = 0; i < m; ++i) {
    const auto& v = out.maps[static_cast<std::size_t>(i)];
    for (int j = 0; j < m; ++j) {
      const auto& w = out.maps[static_cast<std::size_t>(j)];
      bool composable = true;
      std::vector<ElementId> composite(static_cast<std::size_t>(n),
                                       kUndefined);
      for (int p = 0; p < n && composable; ++p) {
        const ElementId mid = v[static_cast<std::size_t>(p)];
        if (mid == kUndefined) {
          continue;
        }
        if (w[static_cast<std::size_t>(mid)] == kUndefined) {
          composable = false;
        } else {
          composite[static_cast<std::size_t>(p)] =
              w[static_cast<std::size_t>(mid)];
        }
      }
      if (composable) {
        def.table.set(i, j, out.id_of(composite));
      }
    }
  }
  return out;
}

StructureDef monoid_as_constellation(const MonoidDef& monoid,
                                     const std::string& name) {
  validate_monoid(monoid);
  const int n = monoid.table.size();
  StructureDef out;
  out.name = name;
  out.kind = Kind::kConstellation;
  out.labels = monoid.labels;
  out.table = monoid.table;
  out.dmap.assign(static_cast<std::size_t>(n), monoid.identity);
  out.rmap = std::vector<ElementId>(static_cast<std::size_t>(n),
                                    monoid.identity);
  return out;
}

ActionConstellation action_constellation(
    const Relation& poset, const std::vector<std::string>& x_labels,
    const MonoidDef& monoid, const std::vector<std::vector<ElementId>>& action,
    const std::string& name) {
  if (!poset.is_partial_order()) {
    throw std::invalid_argument("action_constellation: not a partial order");
  }
  validate_monoid(monoid);
  const int nx = poset.size();
  const int nm = monoid.table.size();
  if (static_cast<int>(x_labels.size()) != nx ||
      static_cast<int>(action.size()) != nx) {
    throw std::invalid_argument("action_constellation: size mismatch");
  }
  for (ElementId x = 0; x < nx; ++x) {
    if (static_cast<int>(action[static_cast<std::size_t>(x)].size()) != nm) {
      throw std::invalid_argument("action_constellation: action not total");
    }
    for (ElementId m = 0; m < nm; ++m) {
      const ElementId xm = action[static_cast<std::size_t>(x)]
                                 [static_cast<std::size_t>(m)];
      if (xm < 0 || xm >= nx) {
        throw std::invalid_argument("action_constellation: action not total");
      }
    }
    if (action[static_cast<std::size_t>(x)]
              [static_cast<std::size_t>(monoid.identity)] != x) {
      throw std::invalid_argument(
          "action_constellation: action not unital at " +
          x_labels[static_cast<std::size_t>(x)]);
    }
    for (ElementId m = 0; m < nm; ++m) {
      for (ElementId k = 0; k < nm; ++k) {
        const ElementId via_product =
            action[static_cast<std::size_t>(x)]
                  [static_cast<std::size_t>(monoid.table.at(m, k))];
        const ElementId stepwise =
            action[static_cast<std::size_t>(
                action[static_cast<std::size_t>(x)][static_cast<std::size_t>(m)])]
                  [static_cast<std::size_t>(k)];
        if (via_product != stepwise) {
          throw std::invalid_argument(
              "action_constellation: action not associative at " +
              x_labels[static_cast<std::size_t>(x)]);
        }
      }
    }
    for (ElementId y = 0; y < nx; ++y) {
      if (!poset.contains(x, y)) {
        continue;
      }
      for (ElementId m = 0; m < nm; ++m) {
        if (!poset.contains(
                action[static_cast<std::size_t>(x)][static_cast<std::size_t>(m)],
                action[static_cast<std::size_t>(y)]
                      [static_cast<std::size_t>(m)])) {
          throw std::invalid_argument(
              "action_constellation: action not monotone at (" +
              x_labels[static_cast<std::size_t>(x)] + "," +
              x_labels[static_cast<std::size_t>(y)] + ")");
        }
      }
    }
  }

  const int total = nx * nm;
  ActionConstellation out;
  StructureDef& def = out.def;
  def.name = name;
  def.kind = Kind::kConstellation;
  def.table = OpTable(total);
  def.dmap.resize(static_cast<std::size_t>(total));
  def.rmap = std::vector<ElementId>(static_cast<std::size_t>(total));

  auto id_of = [nm](ElementId x, ElementId m) { return x * nm + m; };
  std::vector<ElementId> projection_map(static_cast<std::size_t>(total));
  for (ElementId x = 0; x < nx; ++x) {
    for (ElementId m = 0; m < nm; ++m) {
      const ElementId id = id_of(x, m);
      out.points.emplace_back(x, m);
      def.labels.push_back("(" + x_labels[static_cast<std::size_t>(x)] + "," +
                           monoid.labels[static_cast<std::size_t>(m)] + ")");
      def.dmap[static_cast<std::size_t>(id)] = id_of(x, monoid.identity);
      (*def.rmap)[static_cast<std::size_t>(id)] =
          id_of(action[static_cast<std::size_t>(x)][static_cast<std::size_t>(m)],
                monoid.identity);
      projection_map[static_cast<std::size_t>(id)] = m;
    }
  }
  for (ElementId x = 0; x < nx; ++x) {
    for (ElementId m = 0; m < nm; ++m) {
      const ElementId xm =
          action[static_cast<std::size_t>(x)][static_cast<std::size_t>(m)];
      for (ElementId y = 0; y < nx; ++y) {
        if (!poset.contains(xm, y)) {
          continue;
        }
        for (ElementId k = 0; k < nm; ++k) {
          def.table.set(id_of(x, m), id_of(y, k),
                        id_of(x, monoid.table.at(m, k)));
        }
      }
    }
  }

  out.projection =
      Morphism{def, monoid_as_constellation(monoid), projection_map};
  return out;
}

DrSemigroupResult constellation_from_dr_semigroup(
    const OpTable& semigroup, const std::vector<ElementId>& dmap,
    const std::vector<ElementId>& rmap,
    const std::vector<std::string>& labels, const std::string& name) {
  const int n = semigroup.size();
  if (static_cast<int>(dmap.size()) != n ||
      static_cast<int>(rmap.size()) != n ||
      static_cast<int>(labels.size()) != n) {
    throw std::invalid_argument("constellation_from_dr_semigroup: size mismatch");
  }
  for (ElementId a = 0; a < n; ++a) {
    if (dmap[static_cast<std::size_t>(a)] < 0 ||
        dmap[static_cast<std::size_t>(a)] >= n ||
        rmap[static_cast<std::size_t>(a)] < 0 ||
        rmap[static_cast<std::size_t>(a)] >= n) {
      throw std::invalid_argument(
          "constellation_from_dr_semigroup: unary map out of range");
    }
    for (ElementId b = 0; b < n; ++b) {
      if (semigroup.at(a, b) < 0 || semigroup.at(a, b) >= n) {
        throw std::invalid_argument(
            "constellation_from_dr_semigroup: operation not total");
      }
      for (ElementId c = 0; c < n; ++c) {
        if (semigroup.at(semigroup.at(a, b), c) !=
            semigroup.at(a, semigroup.at(b, c))) {
          throw std::invalid_argument(
              "constellation_from_dr_semigroup: not associative");
        }
      }
    }
  }

  DrSemigroupResult out;
  StructureDef& def = out.def;
  def.name = name;
  def.kind = Kind::kConstellation;
  def.labels = labels;
  def.table = OpTable(n);
  def.dmap = dmap;
  def.rmap = rmap;
  // e <= f iff ef = e, on the projection values.
  for (ElementId a = 0; a < n; ++a) {
    const ElementId ra = rmap[static_cast<std::size_t>(a)];
    for (ElementId b = 0; b < n; ++b) {
      const ElementId db = dmap[static_cast<std::size_t>(b)];
      if (semigroup.at(ra, db) == ra) {
        def.table.set(a, b, semigroup.at(a, b));
      }
    }
  }
  out.constellation_reports = check_constellation_axioms(def);
  out.range_reports = check_range_axioms(def);
  return out;
}

}  // namespace constelloid
