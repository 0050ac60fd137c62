#include "constelloid/replay.hpp"

#include "constelloid/category.hpp"
#include "constelloid/constellation.hpp"
#include "constelloid/isstruct.hpp"
#include "constelloid/ordered.hpp"

namespace constelloid {

namespace {

bool right_identity(const StructureDef& def, ElementId e) {
  for (ElementId x = 0; x < def.size(); ++x) {
    if (def.defined(x, e) && def.product(x, e) != x) {
      return false;
    }
  }
  return true;
}

bool q3_violated_at(const StructureDef& def, ElementId x) {
  const ElementId d = def.dom(x);
  if (!right_identity(def, d) || !def.defined(d, x) ||
      def.product(d, x) != x) {
    return true;
  }
  for (ElementId e = 0; e < def.size(); ++e) {
    if (e != d && right_identity(def, e) && def.defined(e, x) &&
        def.product(e, x) == x) {
      return true;
    }
  }
  return false;
}

// The set- and suite-level axioms have no pure table replay; rerunning the
// matching suite and finding the same axiom red is the replay.
bool suite_reproduces(const StructureDef& def, const std::string& axiom) {
  std::vector<AxiomReport> reports = validate_structure(def);
  if (all_pass(reports)) {
    for (auto& report : check_constellation_axioms(def)) {
      reports.push_back(std::move(report));
    }
    if (def.rmap) {
      for (auto& report : check_category_axioms(def)) {
        reports.push_back(std::move(report));
      }
      for (auto& report : check_range_axioms(def)) {
        reports.push_back(std::move(report));
      }
    }
    if (def.order && def.order->is_partial_order()) {
      for (auto& report : check_ordered_axioms(def, *def.order)) {
        reports.push_back(std::move(report));
      }
    }
    if (def.insertions && def.surjections) {
      for (auto& report :
           check_is_category(def, *def.insertions, *def.surjections).reports) {
        reports.push_back(std::move(report));
      }
    }
  }
  const AxiomReport* found = find_report(reports, axiom);
  return found != nullptr && !found->pass;
}

}  // namespace

bool replay_witness(const StructureDef& def, const AxiomReport& report) {
  if (report.pass) {
    return report.witnesses.empty();
  }
  if (report.witnesses.empty()) {
    return false;
  }
  const std::vector<ElementId>& w = report.witnesses.front();
  const std::string& axiom = report.axiom;

  auto at = [&](std::size_t i) { return w[i]; };

  if (axiom == "Q1" && w.size() >= 3) {
    const ElementId x = at(0), y = at(1), z = at(2);
    if (!def.defined(y, z) || !def.defined(x, def.product(y, z))) {
      return false;
    }
    return !def.defined(x, y) ||
           !def.defined(def.product(x, y), z) ||
           def.product(def.product(x, y), z) !=
               def.product(x, def.product(y, z));
  }
  if (axiom == "Q2" && w.size() >= 3) {
    const ElementId x = at(0), y = at(1), z = at(2);
    return def.defined(x, y) && def.defined(y, z) &&
           !def.defined(x, def.product(y, z));
  }
  if (axiom == "Q3" && !w.empty()) {
    return q3_violated_at(def, at(0));
  }
  if (axiom == "QC" && w.size() >= 2) {
    const ElementId s = at(0), t = at(1);
    if (def.defined(s, t) != def.defined(s, def.dom(t))) {
      return true;
    }
    return def.defined(s, t) &&
           def.dom(def.product(s, t)) != def.dom(s);
  }
  if (def.rmap) {
    if (axiom == "R1" && !w.empty()) {
      return def.dom(def.ran(at(0))) != def.ran(at(0));
    }
    if (axiom == "R2" && !w.empty()) {
      return !def.defined(at(0), def.ran(at(0)));
    }
    if (axiom == "R3" && w.size() >= 2) {
      return def.defined(at(0), at(1)) &&
             !def.defined(def.ran(at(0)), at(1));
    }
    if (axiom == "R4" && w.size() >= 2) {
      const ElementId e = at(0), f = at(1);
      return e != f && is_projection(def, e) && is_projection(def, f) &&
             def.defined(e, f) && def.defined(f, e);
    }
    if (axiom == "RC" && w.size() >= 2) {
      const ElementId s = at(0), t = at(1);
      return def.defined(s, t) && def.defined(def.ran(s), t) &&
             def.ran(def.product(def.ran(s), t)) !=
                 def.ran(def.product(s, t));
    }
    if (axiom == "Rconv" && w.size() >= 2) {
      return def.defined(def.ran(at(0)), at(1)) &&
             !def.defined(at(0), at(1));
    }
    if (axiom == "C1" && w.size() >= 3) {
      const ElementId x = at(0), y = at(1), z = at(2);
      const bool left = def.defined(y, z) &&
                        def.defined(x, def.product(y, z));
      const bool right = def.defined(x, y) &&
                         def.defined(def.product(x, y), z);
      if (left != right) {
        return true;
      }
      return left && def.product(x, def.product(y, z)) !=
                         def.product(def.product(x, y), z);
    }
    if (axiom == "C2" && w.size() >= 3) {
      return def.defined(at(0), at(1)) && def.defined(at(1), at(2)) &&
             !def.defined(at(0), def.product(at(1), at(2)));
    }
    if (axiom == "C3" && !w.empty()) {
      const ElementId x = at(0);
      const auto identity = classify_identities(def);
      const ElementId d = def.dom(x);
      const ElementId r = def.ran(x);
      return !identity[static_cast<std::size_t>(d)].identity ||
             !def.defined(d, x) || def.product(d, x) != x ||
             !identity[static_cast<std::size_t>(r)].identity ||
             !def.defined(x, r) || def.product(x, r) != x;
    }
    if (axiom == "CC" && w.size() >= 2) {
      const ElementId x = at(0), y = at(1);
      if (def.defined(x, y) != (def.ran(x) == def.dom(y))) {
        return true;
      }
      if (!def.defined(x, y)) {
        return false;
      }
      const ElementId xy = def.product(x, y);
      return def.dom(xy) != def.dom(x) || def.ran(xy) != def.ran(y);
    }
  }
  if (def.order) {
    const Relation& order = *def.order;
    if (axiom == "O1" && w.size() >= 4) {
      const ElementId a = at(0), b = at(1), c = at(2), d = at(3);
      return order.contains(a, b) && order.contains(c, d) &&
             def.defined(a, c) && def.defined(b, d) &&
             !order.contains(def.product(a, c), def.product(b, d));
    }
    if (axiom == "O2" && w.size() >= 2) {
      return order.contains(at(0), at(1)) &&
             !order.contains(def.dom(at(0)), def.dom(at(1)));
    }
    if (axiom == "O2'" && w.size() >= 2 && def.rmap) {
      return order.contains(at(0), at(1)) &&
             !order.contains(def.ran(at(0)), def.ran(at(1)));
    }
    if (axiom == "OO" && w.size() >= 2 && def.rmap) {
      const ElementId a = at(0), b = at(1);
      return a != b && order.contains(a, b) && def.dom(a) == def.dom(b) &&
             def.ran(a) == def.ran(b);
    }
  }
  return suite_reproduces(def, axiom);
}

}  // namespace constelloid
