#include "constelloid/constellation.hpp"

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

std::vector<bool> right_identities(const StructureDef& def) {
  const auto flags = classify_identities(def);
  std::vector<bool> out(flags.size());
  for (std::size_t i = 0; i < flags.size(); ++i) {
    out[i] = flags[i].right_identity;
  }
  return out;
}

}  // namespace

std::vector<AxiomReport> check_constellation_axioms(const StructureDef& def) {
  const int n = def.size();
  AxiomReport q1{"Q1"};
  AxiomReport q2{"Q2"};
  AxiomReport q3{"Q3"};
  AxiomReport qc{"QC"};

  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      for (ElementId z = 0; z < n; ++z) {
        if (!def.defined(y, z)) {
          continue;
        }
        const ElementId yz = def.product(y, z);
        const bool xy_defined = def.defined(x, y);
        if (def.defined(x, yz)) {
          if (!xy_defined || !def.defined(def.product(x, y), z) ||
              def.product(def.product(x, y), z) != def.product(x, yz)) {
            record(q1, {x, y, z});
          }
        }
        if (xy_defined && !def.defined(x, yz)) {
          record(q2, {x, y, z});
        }
      }
    }
  }

  const auto right = right_identities(def);
  for (ElementId x = 0; x < n; ++x) {
    const ElementId d = def.dom(x);
    if (!right[static_cast<std::size_t>(d)] || !def.defined(d, x) ||
        def.product(d, x) != x) {
      record(q3, {x}, "domain element does not fix the element");
      continue;
    }
    for (ElementId e = 0; e < n; ++e) {
      if (e != d && right[static_cast<std::size_t>(e)] && def.defined(e, x) &&
          def.product(e, x) == x) {
        record(q3, {x, e}, "second right identity fixes the element");
        break;
      }
    }
  }

  for (ElementId s = 0; s < n; ++s) {
    for (ElementId t = 0; t < n; ++t) {
      const bool st = def.defined(s, t);
      const bool sdt = def.defined(s, def.dom(t));
      if (st != sdt) {
        record(qc, {s, t}, "s*t and s*D(t) disagree on existence");
      } else if (st && def.dom(def.product(s, t)) != def.dom(s)) {
        record(qc, {s, t}, "D(s*t) differs from D(s)");
      }
    }
  }

  return {q1, q2, q3, qc};
}

bool is_constellation(const StructureDef& def) {
  return is_well_formed(def) && all_pass(check_constellation_axioms(def));
}

Quasiorders quasiorders(const StructureDef& def) {
  const int n = def.size();
  Quasiorders out;
  out.standard = Relation(n);
  out.natural = Relation(n);
  for (ElementId e = 0; e < n; ++e) {
    if (!is_projection(def, e)) {
      continue;
    }
    for (ElementId f = 0; f < n; ++f) {
      if (is_projection(def, f) && def.defined(e, f)) {
        out.standard.set(e, f);
      }
    }
  }
  for (ElementId s = 0; s < n; ++s) {
    for (ElementId t = 0; t < n; ++t) {
      if (def.defined(def.dom(s), t) && def.product(def.dom(s), t) == s) {
        out.natural.set(s, t);
      }
    }
  }
  // Reflexivity and transitivity follow from the constellation laws; verify
  // rather than assume.
  out.standard_quasiorder = out.standard.is_transitive();
  for (ElementId e = 0; e < n; ++e) {
    if (is_projection(def, e) && !out.standard.contains(e, e)) {
      out.standard_quasiorder = false;
    }
  }
  out.natural_quasiorder = out.natural.is_quasiorder();
  return out;
}

Relation natural_order(const StructureDef& def) {
  return quasiorders(def).natural;
}

ConstellationClass classify(const StructureDef& def) {
  const int n = def.size();
  ConstellationClass out;
  out.normal = true;
  out.composable = true;
  out.categorial = true;

  for (ElementId e = 0; e < n; ++e) {
    if (!is_projection(def, e)) {
      continue;
    }
    for (ElementId f = 0; f < e; ++f) {
      if (is_projection(def, f) && def.defined(e, f) && def.defined(f, e)) {
        out.normal = false;
      }
    }
  }

  std::vector<ElementId> induced(static_cast<std::size_t>(n), kUndefined);
  for (ElementId a = 0; a < n; ++a) {
    int count = 0;
    for (ElementId e = 0; e < n; ++e) {
      if (is_projection(def, e) && def.defined(a, e)) {
        ++count;
        induced[static_cast<std::size_t>(a)] = e;
      }
    }
    if (count == 0) {
      out.composable = false;
      out.categorial = false;
    } else if (count > 1) {
      out.categorial = false;
    }
  }
  if (out.categorial) {
    out.induced_rmap = induced;
  }
  return out;
}

RangeInference infer_pre_range(const StructureDef& def) {
  const int n = def.size();
  RangeInference out;
  out.sd.resize(static_cast<std::size_t>(n));
  std::vector<ElementId> rmap(static_cast<std::size_t>(n), kUndefined);
  bool total = true;

  for (ElementId s = 0; s < n; ++s) {
    IdSet candidates;
    for (ElementId e = 0; e < n; ++e) {
      if (!is_projection(def, e) || !def.defined(s, e)) {
        continue;
      }
      bool least = true;
      for (ElementId f = 0; f < n; ++f) {
        if (is_projection(def, f) && def.defined(s, f) &&
            !def.defined(e, f)) {
          least = false;
          break;
        }
      }
      if (least) {
        candidates.push_back(e);
      }
    }
    out.sd[static_cast<std::size_t>(s)] = candidates;
    if (candidates.size() == 1) {
      rmap[static_cast<std::size_t>(s)] = candidates.front();
    } else {
      total = false;
      if (!out.failure) {
        out.failure = s;
      }
    }
  }
  if (total) {
    out.rmap = rmap;
  }
  return out;
}

std::vector<AxiomReport> check_range_axioms(const StructureDef& def) {
  if (!def.rmap) {
    throw std::invalid_argument("check_range_axioms: range map required");
  }
  const int n = def.size();
  AxiomReport r1{"R1"};
  AxiomReport r2{"R2"};
  AxiomReport r3{"R3"};
  AxiomReport r4{"R4"};
  AxiomReport rc{"RC"};
  AxiomReport rconv{"Rconv"};
  AxiomReport rmin{"Rmin"};

  for (ElementId s = 0; s < n; ++s) {
    const ElementId r = def.ran(s);
    if (def.dom(r) != r) {
      record(r1, {s});
    }
    if (!def.defined(s, r)) {
      record(r2, {s});
    }
  }

  for (ElementId e = 0; e < n; ++e) {
    if (!is_projection(def, e)) {
      continue;
    }
    for (ElementId f = 0; f < e; ++f) {
      if (is_projection(def, f) && def.defined(e, f) && def.defined(f, e)) {
        record(r4, {f, e});
      }
    }
  }

  for (ElementId s = 0; s < n; ++s) {
    for (ElementId t = 0; t < n; ++t) {
      const bool st = def.defined(s, t);
      const bool rst = def.defined(def.ran(s), t);
      if (st && !rst) {
        record(r3, {s, t});
      }
      if (rst && !st) {
        record(rconv, {s, t});
      }
      if (st && rst &&
          def.ran(def.product(def.ran(s), t)) != def.ran(def.product(s, t))) {
        record(rc, {s, t});
      }
    }
  }

  const RangeInference inferred = infer_pre_range(def);
  for (ElementId s = 0; s < n; ++s) {
    const auto& sd = inferred.sd[static_cast<std::size_t>(s)];
    if (sd.size() != 1 || sd.front() != def.ran(s)) {
      record(rmin, {s}, "range map is not the least-projection map");
      break;
    }
  }

  return {r1, r2, r3, r4, rc, rconv, rmin};
}

bool has_pre_range(const StructureDef& def) {
  return infer_pre_range(def).rmap.has_value();
}

bool has_range(const StructureDef& def) {
  const RangeInference inferred = infer_pre_range(def);
  if (!inferred.rmap) {
    return false;
  }
  StructureDef with_range = def;
  with_range.rmap = inferred.rmap;
  return all_pass(check_range_axioms(with_range));
}

CancellativityResult is_left_cancellative(const StructureDef& def) {
  if (!def.rmap) {
    throw std::invalid_argument("is_left_cancellative: range map required");
  }
  const int n = def.size();
  CancellativityResult out;
  for (ElementId a = 0; a < n; ++a) {
    const ElementId r = def.ran(a);
    for (ElementId b = 0; b < n; ++b) {
      if (!def.defined(a, b)) {
        continue;
      }
      for (ElementId c = 0; c < n; ++c) {
        if (!def.defined(a, c) || def.product(a, b) != def.product(a, c)) {
          continue;
        }
        if (!def.defined(r, b) || !def.defined(r, c) ||
            def.product(r, b) != def.product(r, c)) {
          out.cancellative = false;
          out.witness = {a, b, c};
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace constelloid
