#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace constelloid {

using ElementId = std::int32_t;

// Sentinel for an undefined product; never a valid ElementId.
inline constexpr ElementId kUndefined = -1;

// Sorted, duplicate-free set of element ids.
using IdSet = std::vector<ElementId>;

IdSet make_id_set(std::vector<ElementId> ids);
bool id_set_contains(const IdSet& set, ElementId id);

// Dense n-by-n partial binary operation table.
class OpTable {
 public:
  OpTable() = default;
  explicit OpTable(int n)
      : size_(n),
        cells_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n),
               kUndefined) {}

  int size() const { return size_; }

  ElementId at(ElementId x, ElementId y) const {
    return cells_[index(x, y)];
  }
  bool defined(ElementId x, ElementId y) const {
    return at(x, y) != kUndefined;
  }
  void set(ElementId x, ElementId y, ElementId value) {
    cells_[index(x, y)] = value;
  }
  void unset(ElementId x, ElementId y) { set(x, y, kUndefined); }

  const std::vector<ElementId>& cells() const { return cells_; }

  bool operator==(const OpTable&) const = default;
  bool operator<(const OpTable& other) const { return cells_ < other.cells_; }

 private:
  std::size_t index(ElementId x, ElementId y) const {
    return static_cast<std::size_t>(x) * static_cast<std::size_t>(size_) +
           static_cast<std::size_t>(y);
  }

  int size_ = 0;
  std::vector<ElementId> cells_;
};

// Binary relation on {0..n-1} as a dense boolean matrix.
class Relation {
 public:
  Relation() = default;
  explicit Relation(int n)
      : size_(n),
        bits_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0) {}

  static Relation identity(int n);

  int size() const { return size_; }
  bool contains(ElementId a, ElementId b) const {
    return bits_[index(a, b)] != 0;
  }
  void set(ElementId a, ElementId b, bool value = true) {
    bits_[index(a, b)] = value ? 1 : 0;
  }

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_antisymmetric() const;
  bool is_transitive() const;
  bool is_quasiorder() const { return is_reflexive() && is_transitive(); }
  bool is_partial_order() const {
    return is_quasiorder() && is_antisymmetric();
  }
  bool is_equivalence() const {
    return is_reflexive() && is_symmetric() && is_transitive();
  }

  Relation reflexive_closure() const;
  Relation transitive_closure() const;

  std::vector<std::pair<ElementId, ElementId>> pairs() const;

  bool operator==(const Relation&) const = default;

 private:
  std::size_t index(ElementId a, ElementId b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(size_) +
           static_cast<std::size_t>(b);
  }

  int size_ = 0;
  std::vector<std::uint8_t> bits_;
};

enum class Kind { kRaw, kConstellation, kCategory, kOrdered, kIsCategory };

std::string kind_name(Kind kind);
std::optional<Kind> kind_from_name(const std::string& name);

// A finite partial binary algebra with domain map and optional range map,
// order, and distinguished arrow subsets.
struct StructureDef {
  std::string name;
  Kind kind = Kind::kRaw;
  std::vector<std::string> labels;
  OpTable table;
  std::vector<ElementId> dmap;
  std::optional<std::vector<ElementId>> rmap;
  std::optional<Relation> order;
  std::optional<IdSet> insertions;
  std::optional<IdSet> surjections;

  int size() const { return static_cast<int>(labels.size()); }

  ElementId product(ElementId x, ElementId y) const { return table.at(x, y); }
  bool defined(ElementId x, ElementId y) const {
    return table.defined(x, y);
  }
  ElementId dom(ElementId x) const { return dmap[static_cast<std::size_t>(x)]; }
  ElementId ran(ElementId x) const {
    return (*rmap)[static_cast<std::size_t>(x)];
  }
  const std::string& label(ElementId x) const {
    return labels[static_cast<std::size_t>(x)];
  }

  bool operator==(const StructureDef&) const = default;
};

// Pass/fail result of one axiom check, with violating tuples on failure.
struct AxiomReport {
  std::string axiom;
  bool pass = true;
  std::vector<std::vector<ElementId>> witnesses;
  std::string note;
};

bool all_pass(const std::vector<AxiomReport>& reports);
const AxiomReport* find_report(const std::vector<AxiomReport>& reports,
                               const std::string& axiom);
std::vector<std::string> failing_axioms(const std::vector<AxiomReport>& reports);

// Well-formedness only: id ranges, totality of dmap, sentinel discipline,
// label uniqueness, per-kind field discipline.  No algebraic laws.
std::vector<AxiomReport> validate_structure(const StructureDef& def);

bool is_well_formed(const StructureDef& def);

// Checked table lookup.
ElementId compose(const StructureDef& def, ElementId x, ElementId y);

struct IdentityFlags {
  bool left_identity = false;
  bool right_identity = false;
  bool identity = false;
};

std::vector<IdentityFlags> classify_identities(const StructureDef& def);

// Image of the domain map, sorted.
IdSet projections(const StructureDef& def);
bool is_projection(const StructureDef& def, ElementId x);

// Forget everything beyond (table, dmap); kind becomes constellation.
StructureDef constellation_reduct(const StructureDef& def);

// Equality of the algebraic content (table, dmap, rmap, order), ignoring
// name, labels, kind tag and arrow subsets.
bool same_algebra(const StructureDef& a, const StructureDef& b);

std::vector<ElementId> identity_map(int n);

std::string format_tuple(const StructureDef& def,
                         const std::vector<ElementId>& tuple);

}  // namespace constelloid
