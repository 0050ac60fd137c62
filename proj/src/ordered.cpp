#include "constelloid/ordered.hpp"

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

void require_partial_order(const Relation& order) {
  if (!order.is_partial_order()) {
    throw std::invalid_argument("order is not a partial order");
  }
}

std::string first_failing(const std::vector<AxiomReport>& reports) {
  for (const auto& report : reports) {
    if (!report.pass) {
      return report.axiom;
    }
  }
  return "";
}

}  // namespace

std::vector<AxiomReport> check_ordered_axioms(const StructureDef& def,
                                              const Relation& order) {
  require_partial_order(order);
  if (order.size() != def.size()) {
    throw std::invalid_argument("order size does not match structure");
  }
  const int n = def.size();
  AxiomReport o1{"O1"};
  AxiomReport o2{"O2"};
  AxiomReport o2p{"O2'"};
  AxiomReport oo{"OO"};
  oo.note = "informative";

  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = 0; b < n; ++b) {
      if (!order.contains(a, b)) {
        continue;
      }
      if (!order.contains(def.dom(a), def.dom(b))) {
        record(o2, {a, b});
      }
      if (def.rmap && !order.contains(def.ran(a), def.ran(b))) {
        record(o2p, {a, b});
      }
      if (a != b && def.dom(a) == def.dom(b) && def.rmap &&
          def.ran(a) == def.ran(b)) {
        record(oo, {a, b}, "informative");
      }
      for (ElementId c = 0; c < n; ++c) {
        if (!def.defined(a, c)) {
          continue;
        }
        for (ElementId d = 0; d < n; ++d) {
          if (order.contains(c, d) && def.defined(b, d) &&
              !order.contains(def.product(a, c), def.product(b, d))) {
            record(o1, {a, b, c, d});
          }
        }
      }
    }
  }

  std::vector<AxiomReport> reports{o1, o2};
  if (def.rmap) {
    reports.push_back(o2p);
  }
  reports.push_back(oo);
  return reports;
}

RestrictionTable restriction_table(const StructureDef& def,
                                   const Relation& order) {
  require_partial_order(order);
  const int n = def.size();
  RestrictionTable out;
  out.cells = OpTable(n);
  out.matches_left_multiplication = true;

  for (ElementId e = 0; e < n; ++e) {
    if (!is_projection(def, e)) {
      continue;
    }
    for (ElementId s = 0; s < n; ++s) {
      if (!order.contains(e, def.dom(s))) {
        continue;
      }
      ElementId found = kUndefined;
      bool unique = true;
      for (ElementId x = 0; x < n; ++x) {
        if (order.contains(x, s) && def.dom(x) == e) {
          if (found == kUndefined) {
            found = x;
          } else {
            unique = false;
          }
        }
      }
      if (found == kUndefined) {
        out.total = false;
        if (!out.missing) {
          out.missing = {e, s};
        }
        continue;
      }
      if (!unique) {
        out.total = false;
        if (!out.ambiguous) {
          out.ambiguous = {e, s};
        }
        continue;
      }
      out.cells.set(e, s, found);
      if (!def.defined(e, s) || def.product(e, s) != found) {
        out.matches_left_multiplication = false;
      }
    }
  }
  return out;
}

AxiomReport check_restriction_composition(const StructureDef& cat,
                                          const Relation& order,
                                          const RestrictionTable& rt) {
  AxiomReport report{"RL"};
  const int n = cat.size();
  if (!cat.rmap) {
    throw std::invalid_argument(
        "check_restriction_composition: range map required");
  }
  for (ElementId e = 0; e < n; ++e) {
    if (!is_projection(cat, e)) {
      continue;
    }
    for (ElementId s = 0; s < n; ++s) {
      if (!order.contains(e, cat.dom(s))) {
        continue;
      }
      const ElementId es = rt.cells.at(e, s);
      if (es == kUndefined) {
        continue;
      }
      for (ElementId t = 0; t < n; ++t) {
        if (!order.contains(cat.ran(s), cat.dom(t))) {
          continue;
        }
        const ElementId res = cat.ran(es);
        const ElementId rst = rt.cells.at(cat.ran(s), t);
        const ElementId lhs = rt.cells.at(res, t);
        if (rst == kUndefined || lhs == kUndefined ||
            rt.cells.at(res, rst) != lhs) {
          record(report, {e, s, t}, "nested restrictions disagree");
          continue;
        }
        if (cat.defined(s, t)) {
          const ElementId st = cat.product(s, t);
          const ElementId rhs_left = es;
          if (!order.contains(e, cat.dom(st)) ||
              rt.cells.at(e, st) == kUndefined ||
              !cat.defined(rhs_left, lhs) ||
              cat.product(rhs_left, lhs) != rt.cells.at(e, st)) {
            record(report, {e, s, t}, "restriction of a composite disagrees");
          }
        }
      }
    }
  }
  return report;
}

AxiomReport check_order_recovery(const StructureDef& cat,
                                 const Relation& order,
                                 const RestrictionTable& rt) {
  AxiomReport report{"OR"};
  const int n = cat.size();
  for (ElementId s = 0; s < n; ++s) {
    for (ElementId t = 0; t < n; ++t) {
      const bool lhs = order.contains(s, t);
      const bool rhs = order.contains(cat.dom(s), cat.dom(t)) &&
                       rt.cells.at(cat.dom(s), t) == s;
      if (lhs != rhs) {
        record(report, {s, t}, "order does not match restriction recovery");
      }
    }
  }
  return report;
}

StructureDef derived_category(const StructureDef& def) {
  if (!def.rmap) {
    throw std::invalid_argument("derived_category: range map required");
  }
  const auto range_reports = check_range_axioms(def);
  if (!all_pass(range_reports)) {
    throw std::invalid_argument("derived_category: range law fails: " +
                                first_failing(range_reports));
  }
  const int n = def.size();
  StructureDef out = def;
  out.kind = Kind::kCategory;
  out.name = def.name.empty() ? "derived" : def.name + ".derived";
  out.table = OpTable(n);
  for (ElementId s = 0; s < n; ++s) {
    for (ElementId t = 0; t < n; ++t) {
      if (def.defined(s, t) && def.ran(s) == def.dom(t)) {
        out.table.set(s, t, def.product(s, t));
      }
    }
  }
  out.order = natural_order(def);
  out.insertions.reset();
  out.surjections.reset();
  return out;
}

StructureDef constellation_of_ordered_category(const StructureDef& cat,
                                               const Relation& order) {
  const auto cat_reports = check_category_axioms(cat);
  if (!all_pass(cat_reports)) {
    throw std::invalid_argument(
        "constellation_of_ordered_category: category law fails: " +
        first_failing(cat_reports));
  }
  const auto ordered_reports = check_ordered_axioms(cat, order);
  for (const auto& report : ordered_reports) {
    if (!report.pass && report.axiom != "OO") {
      throw std::invalid_argument(
          "constellation_of_ordered_category: order law fails: " +
          report.axiom);
    }
  }
  const RestrictionTable rt = restriction_table(cat, order);
  if (!rt.total) {
    throw std::invalid_argument(
        "constellation_of_ordered_category: restrictions missing: O3");
  }

  const int n = cat.size();
  StructureDef out = cat;
  out.kind = Kind::kConstellation;
  out.name = cat.name.empty() ? "constellation" : cat.name + ".const";
  out.table = OpTable(n);
  out.insertions.reset();
  out.surjections.reset();
  for (ElementId s = 0; s < n; ++s) {
    for (ElementId t = 0; t < n; ++t) {
      if (!order.contains(cat.ran(s), cat.dom(t))) {
        continue;
      }
      const ElementId restricted = rt.cells.at(cat.ran(s), t);
      if (restricted == kUndefined || !cat.defined(s, restricted)) {
        throw std::logic_error(
            "constellation_of_ordered_category: restriction unusable");
      }
      out.table.set(s, t, cat.product(s, restricted));
    }
  }
  out.order = order;

  if (!all_pass(check_constellation_axioms(out)) ||
      !all_pass(check_range_axioms(out))) {
    throw std::logic_error(
        "constellation_of_ordered_category: output fails range laws");
  }
  if (natural_order(out) != order) {
    throw std::logic_error(
        "constellation_of_ordered_category: order is not the natural order");
  }
  return out;
}

bool roundtrip_check(const StructureDef& def) {
  if (!def.rmap) {
    throw std::invalid_argument("roundtrip_check: range map required");
  }
  const bool category_like = all_pass(check_category_axioms(def));
  if (category_like && def.order) {
    const StructureDef constellation =
        constellation_of_ordered_category(def, *def.order);
    const StructureDef back = derived_category(constellation);
    return back.table == def.table && back.dmap == def.dmap &&
           back.rmap == def.rmap && back.order == def.order;
  }
  if (!all_pass(check_constellation_axioms(def)) ||
      !all_pass(check_range_axioms(def))) {
    throw std::invalid_argument(
        "roundtrip_check: neither a constellation with range nor an ordered "
        "category with restrictions");
  }
  const StructureDef derived = derived_category(def);
  const StructureDef back =
      constellation_of_ordered_category(derived, *derived.order);
  return back.table == def.table && back.dmap == def.dmap &&
         back.rmap == def.rmap && *back.order == natural_order(def);
}

}  // namespace constelloid
