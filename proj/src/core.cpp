#include "constelloid/core.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace constelloid {

IdSet make_id_set(std::vector<ElementId> ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

bool id_set_contains(const IdSet& set, ElementId id) {
  return std::binary_search(set.begin(), set.end(), id);
}

Relation Relation::identity(int n) {
  Relation rel(n);
  for (ElementId a = 0; a < n; ++a) {
    rel.set(a, a);
  }
  return rel;
}

bool Relation::is_reflexive() const {
  for (ElementId a = 0; a < size_; ++a) {
    if (!contains(a, a)) {
      return false;
    }
  }
  return true;
}

bool Relation::is_symmetric() const {
  for (ElementId a = 0; a < size_; ++a) {
    for (ElementId b = 0; b < size_; ++b) {
      if (contains(a, b) && !contains(b, a)) {
        return false;
      }
    }
  }
  return true;
}

bool Relation::is_antisymmetric() const {
  for (ElementId a = 0; a < size_; ++a) {
    for (ElementId b = 0; b < size_; ++b) {
      if (a != b && contains(a, b) && contains(b, a)) {
        return false;
      }
    }
  }
  return true;
}

bool Relation::is_transitive() const {
  for (ElementId a = 0; a < size_; ++a) {
    for (ElementId b = 0; b < size_; ++b) {
      if (!contains(a, b)) {
        continue;
      }
      for (ElementId c = 0; c < size_; ++c) {
        if (contains(b, c) && !contains(a, c)) {
          return false;
        }
      }
    }
  }
  return true;
}

Relation Relation::reflexive_closure() const {
  Relation out = *this;
  for (ElementId a = 0; a < size_; ++a) {
    out.set(a, a);
  }
  return out;
}

Relation Relation::transitive_closure() const {
  Relation out = *this;
  for (ElementId k = 0; k < size_; ++k) {
    for (ElementId a = 0; a < size_; ++a) {
      if (!out.contains(a, k)) {
        continue;
      }
      for (ElementId b = 0; b < size_; ++b) {
        if (out.contains(k, b)) {
          out.set(a, b);
        }
      }
    }
  }
  return out;
}

std::vector<std::pair<ElementId, ElementId>> Relation::pairs() const {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (ElementId a = 0; a < size_; ++a) {
    for (ElementId b = 0; b < size_; ++b) {
      if (contains(a, b)) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

std::string kind_name(Kind kind) {
  switch (kind) {
    case Kind::kRaw:
      return "raw";
    case Kind::kConstellation:
      return "constellation";
    case Kind::kCategory:
      return "category";
    case Kind::kOrdered:
      return "ordered";
    case Kind::kIsCategory:
      return "is-category";
  }
  return "raw";
}

std::optional<Kind> kind_from_name(const std::string& name) {
  if (name == "raw") return Kind::kRaw;
  if (name == "constellation") return Kind::kConstellation;
  if (name == "category") return Kind::kCategory;
  if (name == "ordered") return Kind::kOrdered;
  if (name == "is-category") return Kind::kIsCategory;
  return std::nullopt;
}

bool all_pass(const std::vector<AxiomReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const AxiomReport& r) { return r.pass; });
}

const AxiomReport* find_report(const std::vector<AxiomReport>& reports,
                               const std::string& axiom) {
  for (const auto& report : reports) {
    if (report.axiom == axiom) {
      return &report;
    }
  }
  return nullptr;
}

std::vector<std::string> failing_axioms(
    const std::vector<AxiomReport>& reports) {
  std::vector<std::string> out;
  for (const auto& report : reports) {
    if (!report.pass) {
      out.push_back(report.axiom);
    }
  }
  return out;
}

namespace {

bool valid_id(const StructureDef& def, ElementId x) {
  return x >= 0 && x < def.size();
}

void fail(AxiomReport& report, std::vector<ElementId> witness,
          const std::string& note) {
  report.pass = false;
  if (report.witnesses.empty()) {
    report.witnesses.push_back(std::move(witness));
    report.note = note;
  }
}

void check_map_field(const StructureDef& def,
                     const std::vector<ElementId>& map, AxiomReport& report) {
  const int n = def.size();
  if (static_cast<int>(map.size()) != n) {
    fail(report, {static_cast<ElementId>(map.size())}, "map is not total");
    return;
  }
  for (ElementId x = 0; x < n; ++x) {
    if (!valid_id(def, map[static_cast<std::size_t>(x)])) {
      fail(report, {map[static_cast<std::size_t>(x)]}, "map value out of range");
      return;
    }
  }
}

void check_id_set_field(const StructureDef& def, const IdSet& set,
                        AxiomReport& report) {
  ElementId previous = kUndefined;
  for (ElementId x : set) {
    if (!valid_id(def, x)) {
      fail(report, {x}, "set member out of range");
      return;
    }
    if (previous != kUndefined && x <= previous) {
      fail(report, {x}, "set not sorted or has duplicates");
      return;
    }
    previous = x;
  }
}

}  // namespace

std::vector<AxiomReport> validate_structure(const StructureDef& def) {
  std::vector<AxiomReport> reports;
  const int n = def.size();

  AxiomReport shape{"wf-table"};
  if (def.table.size() != n) {
    fail(shape, {static_cast<ElementId>(def.table.size())},
         "table size does not match element count");
  }
  reports.push_back(shape);

  AxiomReport cells{"wf-cells"};
  if (shape.pass) {
    for (ElementId x = 0; x < n && cells.pass; ++x) {
      for (ElementId y = 0; y < n && cells.pass; ++y) {
        const ElementId v = def.table.at(x, y);
        if (v != kUndefined && !valid_id(def, v)) {
          fail(cells, {v}, "table cell references an id out of range");
        }
      }
    }
  }
  reports.push_back(cells);

  AxiomReport labels{"wf-labels"};
  {
    std::set<std::string> seen;
    for (ElementId x = 0; x < n; ++x) {
      const std::string& label = def.label(x);
      if (label.empty()) {
        fail(labels, {x}, "empty label");
        break;
      }
      if (!seen.insert(label).second) {
        fail(labels, {x}, "duplicate label: " + label);
        break;
      }
    }
  }
  reports.push_back(labels);

  AxiomReport dmap{"wf-dmap"};
  check_map_field(def, def.dmap, dmap);
  reports.push_back(dmap);

  AxiomReport rmap{"wf-rmap"};
  if (def.rmap) {
    check_map_field(def, *def.rmap, rmap);
  }
  reports.push_back(rmap);

  AxiomReport order{"wf-order"};
  if (def.order && def.order->size() != n) {
    fail(order, {static_cast<ElementId>(def.order->size())},
         "order relation size does not match element count");
  }
  reports.push_back(order);

  AxiomReport subsets{"wf-subsets"};
  if (def.insertions) {
    check_id_set_field(def, *def.insertions, subsets);
  }
  if (def.surjections && subsets.pass) {
    check_id_set_field(def, *def.surjections, subsets);
  }
  reports.push_back(subsets);

  AxiomReport kind{"wf-kind"};
  switch (def.kind) {
    case Kind::kRaw:
      break;
    case Kind::kConstellation:
      if (def.insertions || def.surjections) {
        fail(kind, {}, "constellation carries arrow subsets");
      }
      break;
    case Kind::kCategory:
      if (!def.rmap) {
        fail(kind, {}, "category requires a range map");
      }
      break;
    case Kind::kOrdered:
      if (!def.rmap) {
        fail(kind, {}, "ordered category requires a range map");
      } else if (!def.order) {
        fail(kind, {}, "ordered category requires an order");
      }
      break;
    case Kind::kIsCategory:
      if (!def.rmap) {
        fail(kind, {}, "is-category requires a range map");
      } else if (!def.insertions || !def.surjections) {
        fail(kind, {}, "is-category requires insertion and surjection sets");
      }
      break;
  }
  reports.push_back(kind);

  return reports;
}

bool is_well_formed(const StructureDef& def) {
  return all_pass(validate_structure(def));
}

ElementId compose(const StructureDef& def, ElementId x, ElementId y) {
  if (!valid_id(def, x) || !valid_id(def, y)) {
    throw std::invalid_argument("compose: element id out of range");
  }
  return def.table.at(x, y);
}

std::vector<IdentityFlags> classify_identities(const StructureDef& def) {
  const int n = def.size();
  std::vector<IdentityFlags> flags(static_cast<std::size_t>(n));
  for (ElementId e = 0; e < n; ++e) {
    bool right = true;
    bool left = true;
    for (ElementId x = 0; x < n; ++x) {
      if (def.defined(x, e) && def.product(x, e) != x) {
        right = false;
      }
      if (def.defined(e, x) && def.product(e, x) != x) {
        left = false;
      }
    }
    flags[static_cast<std::size_t>(e)] = {left, right, left && right};
  }
  return flags;
}

IdSet projections(const StructureDef& def) {
  return make_id_set(def.dmap);
}

bool is_projection(const StructureDef& def, ElementId x) {
  return def.dom(x) == x;
}

StructureDef constellation_reduct(const StructureDef& def) {
  StructureDef out;
  out.name = def.name;
  out.kind = Kind::kConstellation;
  out.labels = def.labels;
  out.table = def.table;
  out.dmap = def.dmap;
  return out;
}

bool same_algebra(const StructureDef& a, const StructureDef& b) {
  return a.size() == b.size() && a.table == b.table && a.dmap == b.dmap &&
         a.rmap == b.rmap && a.order == b.order;
}

std::vector<ElementId> identity_map(int n) {
  std::vector<ElementId> map(static_cast<std::size_t>(n));
  for (ElementId x = 0; x < n; ++x) {
    map[static_cast<std::size_t>(x)] = x;
  }
  return map;
}

std::string format_tuple(const StructureDef& def,
                         const std::vector<ElementId>& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) {
      out += ",";
    }
    const ElementId x = tuple[i];
    if (x >= 0 && x < def.size()) {
      out += def.label(x);
    } else {
      out += std::to_string(x);
    }
  }
  out += ")";
  return out;
}

}  // namespace constelloid
