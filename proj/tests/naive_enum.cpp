#include "naive_enum.hpp"

#include "constelloid/iso.hpp"

namespace constelloid::testing {

namespace {

bool naive_right_identity(const OpTable& table, ElementId e) {
  for (ElementId x = 0; x < table.size(); ++x) {
    if (table.defined(x, e) && table.at(x, e) != x) {
      return false;
    }
  }
  return true;
}

// Q3 with the domain map derived, not given: every element must be fixed
// from the left by exactly one right identity.
bool naive_derive_dmap(const OpTable& table, std::vector<ElementId>& dmap) {
  const int n = table.size();
  dmap.assign(static_cast<std::size_t>(n), kUndefined);
  std::vector<bool> right(static_cast<std::size_t>(n));
  for (ElementId e = 0; e < n; ++e) {
    right[static_cast<std::size_t>(e)] = naive_right_identity(table, e);
  }
  for (ElementId x = 0; x < n; ++x) {
    int fixers = 0;
    for (ElementId e = 0; e < n; ++e) {
      if (right[static_cast<std::size_t>(e)] && table.defined(e, x) &&
          table.at(e, x) == x) {
        ++fixers;
        dmap[static_cast<std::size_t>(x)] = e;
      }
    }
    if (fixers != 1) {
      return false;
    }
  }
  return true;
}

bool naive_q1_q2(const OpTable& table) {
  const int n = table.size();
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      for (ElementId z = 0; z < n; ++z) {
        if (!table.defined(y, z)) {
          continue;
        }
        const ElementId yz = table.at(y, z);
        if (table.defined(x, yz)) {
          if (!table.defined(x, y) ||
              !table.defined(table.at(x, y), z) ||
              table.at(table.at(x, y), z) != table.at(x, yz)) {
            return false;
          }
        }
        if (table.defined(x, y) && !table.defined(x, yz)) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace

NaiveCensus naive_enumerate(int n) {
  NaiveCensus census;
  if (n == 0) {
    census.canonical_keys.insert(std::vector<ElementId>{});
    census.tables_scanned = 1;
    return census;
  }
  const std::size_t cells = static_cast<std::size_t>(n) *
                            static_cast<std::size_t>(n);
  std::vector<ElementId> digits(cells, kUndefined);
  while (true) {
    ++census.tables_scanned;
    OpTable table(n);
    {
      std::size_t index = 0;
      for (ElementId x = 0; x < n; ++x) {
        for (ElementId y = 0; y < n; ++y) {
          if (digits[index] != kUndefined) {
            table.set(x, y, digits[index]);
          }
          ++index;
        }
      }
    }
    std::vector<ElementId> dmap;
    if (naive_derive_dmap(table, dmap) && naive_q1_q2(table)) {
      StructureDef def;
      def.kind = Kind::kConstellation;
      def.table = table;
      def.dmap = dmap;
      for (int x = 0; x < n; ++x) {
        def.labels.push_back("x" + std::to_string(x));
      }
      census.canonical_keys.insert(canonical_key(def));
    }
    std::size_t pos = cells;
    while (pos > 0) {
      ElementId& digit = digits[pos - 1];
      if (digit + 1 < n) {
        ++digit;
        break;
      }
      digit = kUndefined;
      --pos;
    }
    if (pos == 0) {
      break;
    }
  }
  return census;
}

}  // namespace constelloid::testing
