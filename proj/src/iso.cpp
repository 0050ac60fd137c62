#include "constelloid/iso.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace constelloid {

namespace {

struct Invariant {
  bool projection = false;
  bool in_insertions = false;
  bool in_surjections = false;
  int row_defined = 0;
  int col_defined = 0;
  int dom_fibre = 0;
  bool loop_defined = false;

  bool operator==(const Invariant&) const = default;
};

std::vector<Invariant> invariants(const StructureDef& def) {
  const int n = def.size();
  std::vector<Invariant> out(static_cast<std::size_t>(n));
  std::vector<int> fibre(static_cast<std::size_t>(n), 0);
  for (ElementId x = 0; x < n; ++x) {
    ++fibre[static_cast<std::size_t>(def.dom(x))];
  }
  for (ElementId x = 0; x < n; ++x) {
    Invariant& inv = out[static_cast<std::size_t>(x)];
    inv.projection = def.dom(x) == x;
    inv.in_insertions = def.insertions && id_set_contains(*def.insertions, x);
    inv.in_surjections =
        def.surjections && id_set_contains(*def.surjections, x);
    inv.dom_fibre = fibre[static_cast<std::size_t>(def.dom(x))];
    inv.loop_defined = def.defined(x, x);
    for (ElementId y = 0; y < n; ++y) {
      inv.row_defined += def.defined(x, y) ? 1 : 0;
      inv.col_defined += def.defined(y, x) ? 1 : 0;
    }
  }
  return out;
}

class IsoSearch {
 public:
  IsoSearch(const StructureDef& a, const StructureDef& b)
      : a_(a),
        b_(b),
        inv_a_(invariants(a)),
        inv_b_(invariants(b)),
        map_(static_cast<std::size_t>(a.size()), kUndefined),
        used_(static_cast<std::size_t>(b.size()), false) {}

  std::optional<std::vector<ElementId>> run() {
    if (search(0)) {
      return map_;
    }
    return std::nullopt;
  }

 private:
  bool consistent(ElementId x, ElementId p) const {
    if (!(inv_a_[static_cast<std::size_t>(x)] ==
          inv_b_[static_cast<std::size_t>(p)])) {
      return false;
    }
    const ElementId dx = map_[static_cast<std::size_t>(a_.dom(x))];
    if (dx != kUndefined && dx != b_.dom(p)) {
      return false;
    }
    if (a_.rmap) {
      const ElementId rx = map_[static_cast<std::size_t>(a_.ran(x))];
      if (rx != kUndefined && rx != b_.ran(p)) {
        return false;
      }
    }
    for (ElementId y = 0; y < a_.size(); ++y) {
      const ElementId q = map_[static_cast<std::size_t>(y)];
      if (q == kUndefined) {
        continue;
      }
      if (a_.defined(x, y) != b_.defined(p, q) ||
          a_.defined(y, x) != b_.defined(q, p)) {
        return false;
      }
      if (a_.defined(x, y)) {
        const ElementId v = map_[static_cast<std::size_t>(a_.product(x, y))];
        if (v != kUndefined && v != b_.product(p, q)) {
          return false;
        }
      }
      if (a_.defined(y, x)) {
        const ElementId v = map_[static_cast<std::size_t>(a_.product(y, x))];
        if (v != kUndefined && v != b_.product(q, p)) {
          return false;
        }
      }
      if (a_.order) {
        if (a_.order->contains(x, y) != b_.order->contains(p, q) ||
            a_.order->contains(y, x) != b_.order->contains(q, p)) {
          return false;
        }
      }
    }
    return true;
  }

  bool verify_full() const {
    for (ElementId x = 0; x < a_.size(); ++x) {
      const ElementId p = map_[static_cast<std::size_t>(x)];
      if (b_.dom(p) != map_[static_cast<std::size_t>(a_.dom(x))]) {
        return false;
      }
      if (a_.rmap && b_.ran(p) != map_[static_cast<std::size_t>(a_.ran(x))]) {
        return false;
      }
      for (ElementId y = 0; y < a_.size(); ++y) {
        const ElementId q = map_[static_cast<std::size_t>(y)];
        if (a_.defined(x, y) != b_.defined(p, q)) {
          return false;
        }
        if (a_.defined(x, y) &&
            map_[static_cast<std::size_t>(a_.product(x, y))] !=
                b_.product(p, q)) {
          return false;
        }
        if (a_.order && a_.order->contains(x, y) != b_.order->contains(p, q)) {
          return false;
        }
      }
    }
    return true;
  }

  bool search(ElementId x) {
    if (x == a_.size()) {
      return verify_full();
    }
    if (map_[static_cast<std::size_t>(x)] != kUndefined) {
      return search(x + 1);
    }
    for (ElementId p = 0; p < b_.size(); ++p) {
      if (used_[static_cast<std::size_t>(p)] || !consistent(x, p)) {
        continue;
      }
      map_[static_cast<std::size_t>(x)] = p;
      used_[static_cast<std::size_t>(p)] = true;
      if (search(x + 1)) {
        return true;
      }
      map_[static_cast<std::size_t>(x)] = kUndefined;
      used_[static_cast<std::size_t>(p)] = false;
    }
    return false;
  }

  const StructureDef& a_;
  const StructureDef& b_;
  std::vector<Invariant> inv_a_;
  std::vector<Invariant> inv_b_;
  std::vector<ElementId> map_;
  std::vector<bool> used_;
};

void check_comparable(const StructureDef& a, const StructureDef& b) {
  if (a.kind != b.kind) {
    throw std::invalid_argument("are_isomorphic: kind mismatch");
  }
  if (a.rmap.has_value() != b.rmap.has_value() ||
      a.order.has_value() != b.order.has_value() ||
      a.insertions.has_value() != b.insertions.has_value() ||
      a.surjections.has_value() != b.surjections.has_value()) {
    throw std::invalid_argument("are_isomorphic: field shape mismatch");
  }
}

std::vector<ElementId> encode(const StructureDef& def) {
  std::vector<ElementId> key = def.dmap;
  key.insert(key.end(), def.table.cells().begin(), def.table.cells().end());
  return key;
}

void all_permutations(int n, const std::function<void(
                                 const std::vector<ElementId>&)>& visit) {
  std::vector<ElementId> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    visit(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

constexpr int kCanonicalSizeLimit = 8;

}  // namespace

IsoResult are_isomorphic(const StructureDef& a, const StructureDef& b) {
  check_comparable(a, b);
  IsoResult out;
  if (a.size() != b.size()) {
    return out;
  }
  if (a.insertions && a.insertions->size() != b.insertions->size()) {
    return out;
  }
  if (a.surjections && a.surjections->size() != b.surjections->size()) {
    return out;
  }
  IsoSearch search(a, b);
  if (auto witness = search.run()) {
    out.isomorphic = true;
    out.witness = std::move(witness);
  }
  return out;
}

StructureDef apply_permutation(const StructureDef& def,
                               const std::vector<ElementId>& perm) {
  const int n = def.size();
  StructureDef out = def;
  out.table = OpTable(n);
  for (ElementId x = 0; x < n; ++x) {
    const ElementId px = perm[static_cast<std::size_t>(x)];
    out.labels[static_cast<std::size_t>(px)] = def.label(x);
    out.dmap[static_cast<std::size_t>(px)] =
        perm[static_cast<std::size_t>(def.dom(x))];
    if (def.rmap) {
      (*out.rmap)[static_cast<std::size_t>(px)] =
          perm[static_cast<std::size_t>(def.ran(x))];
    }
    for (ElementId y = 0; y < n; ++y) {
      if (def.defined(x, y)) {
        out.table.set(px, perm[static_cast<std::size_t>(y)],
                      perm[static_cast<std::size_t>(def.product(x, y))]);
      }
    }
  }
  if (def.order) {
    Relation order(n);
    for (ElementId x = 0; x < n; ++x) {
      for (ElementId y = 0; y < n; ++y) {
        if (def.order->contains(x, y)) {
          order.set(perm[static_cast<std::size_t>(x)],
                    perm[static_cast<std::size_t>(y)]);
        }
      }
    }
    out.order = order;
  }
  for (auto* set : {&out.insertions, &out.surjections}) {
    if (*set) {
      IdSet mapped;
      for (ElementId x : **set) {
        mapped.push_back(perm[static_cast<std::size_t>(x)]);
      }
      *set = make_id_set(std::move(mapped));
    }
  }
  return out;
}

std::vector<ElementId> canonical_key(const StructureDef& def) {
  const int n = def.size();
  if (n > kCanonicalSizeLimit) {
    throw std::runtime_error("canonical_key: size exceeds the configured cap");
  }
  std::optional<std::vector<ElementId>> best;
  all_permutations(n, [&](const std::vector<ElementId>& perm) {
    std::vector<ElementId> key = encode(apply_permutation(def, perm));
    if (!best || key < *best) {
      best = std::move(key);
    }
  });
  return best ? *best : std::vector<ElementId>{};
}

StructureDef canonical_form(const StructureDef& def) {
  const int n = def.size();
  if (n > kCanonicalSizeLimit) {
    throw std::runtime_error(
        "canonical_form: size exceeds the configured cap");
  }
  std::optional<std::vector<ElementId>> best_key;
  StructureDef best = def;
  all_permutations(n, [&](const std::vector<ElementId>& perm) {
    StructureDef candidate = apply_permutation(def, perm);
    std::vector<ElementId> key = encode(candidate);
    if (!best_key || key < *best_key) {
      best_key = std::move(key);
      best = std::move(candidate);
    }
  });
  return best;
}

int automorphism_count(const StructureDef& def) {
  const int n = def.size();
  if (n > kCanonicalSizeLimit) {
    throw std::runtime_error(
        "automorphism_count: size exceeds the configured cap");
  }
  const std::vector<ElementId> self = encode(def);
  int count = 0;
  all_permutations(n, [&](const std::vector<ElementId>& perm) {
    if (encode(apply_permutation(def, perm)) == self) {
      ++count;
    }
  });
  return count;
}

}  // namespace constelloid
