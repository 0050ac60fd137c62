// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Usage: acceptance [source-root]

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "constelloid/category.hpp"
#include "constelloid/congruence.hpp"
#include "constelloid/constellation.hpp"
#include "constelloid/extension.hpp"
#include "constelloid/fixtures.hpp"
#include "constelloid/iso.hpp"
#include "constelloid/isstruct.hpp"
#include "constelloid/morphism.hpp"
#include "constelloid/naturality.hpp"
#include "constelloid/ordered.hpp"
#include "constelloid/replay.hpp"
#include "constelloid/search.hpp"
#include "constelloid/textio.hpp"
#include "naive_enum.hpp"

using namespace constelloid;

namespace {

int failures = 0;

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void report(int criterion, bool pass, const std::string& detail,
            double seconds, double budget) {
  const bool in_budget = seconds <= budget;
  if (!pass || !in_budget) {
    ++failures;
  }
  std::cout << (pass && in_budget ? "[PASS]" : "[FAIL]") << " criterion "
            << criterion << ": " << detail << " (" << seconds << "s";
  if (!in_budget) {
    std::cout << ", over the " << budget << "s budget";
  }
  std::cout << ")\n";
}

int size_cap() {
  if (const char* env = std::getenv("CONSTELLOID_CAP")) {
    const int value = std::atoi(env);
    if (value > 0 && value < kDefaultEnumerationCap) {
      return value;
    }
  }
  return kDefaultEnumerationCap;
}

// 1. The four-element example and its extension.
void criterion_extension_example(const std::string& root) {
  Timer timer;
  bool pass = true;
  std::string detail = "q4 extension reproduces the known five-arrow category";

  const StructureDef q4 = parse_structure_file(root + "/fixtures/q4.cst");
  pass = pass && q4 == fixture_q4();

  const CanonicalExtension ext = canonical_extension(q4);
  pass = pass && ext.category.size() == 5;
  const std::set<std::string> labels(ext.category.labels.begin(),
                                     ext.category.labels.end());
  pass = pass && labels == std::set<std::string>{"(s,e)", "(s,f)", "(e,e)",
                                                 "(f,f)", "(g,g)"};
  pass = pass && insertion_part(ext) == identity_arrows(ext.category);
  pass = pass && insertion_part(ext).size() == 3;

  pass = pass &&
         !are_isomorphic(q4, constellation_reduct(ext.category)).isomorphic;

  StructureDef once = ext.category;
  once.insertions = insertion_part(ext);
  const CanonicalExtension twice =
      canonical_extension(constellation_reduct(ext.category));
  StructureDef twice_cat = twice.category;
  twice_cat.insertions = insertion_part(twice);
  pass = pass && are_isomorphic(twice_cat, once).isomorphic;

  report(1, pass, detail, timer.seconds(), 1.0);
}

// 2. Axiom-suite soundness under single-cell mutations.
std::vector<AxiomReport> fixture_suite(const StructureDef& def) {
  std::vector<AxiomReport> reports = validate_structure(def);
  if (!all_pass(reports)) {
    return reports;
  }
  for (auto& report : check_constellation_axioms(def)) {
    reports.push_back(std::move(report));
  }
  if (all_pass(reports) && def.rmap) {
    for (auto& report : check_range_axioms(def)) {
      reports.push_back(std::move(report));
    }
  }
  return reports;
}

void criterion_mutations() {
  Timer timer;
  bool pass = true;
  int mutations_exercised = 0;
  int valid_mutants = 0;

  for (const auto& [name, fx] : fixture_catalogue()) {
    const int n = fx.size();
    int taken = 0;
    // Deterministic sweep: every cell, every alternative content.
    for (ElementId x = 0; x < n && taken < 20; ++x) {
      for (ElementId y = 0; y < n && taken < 20; ++y) {
        for (ElementId value = kUndefined; value < n && taken < 20; ++value) {
          if (value == fx.product(x, y)) {
            continue;
          }
          StructureDef mutant = fx;
          mutant.table.set(x, y, value);
          const std::vector<AxiomReport> reports = fixture_suite(mutant);
          if (all_pass(reports)) {
            // The flip produced another lawful structure; nothing to catch.
            ++valid_mutants;
            continue;
          }
          ++taken;
          ++mutations_exercised;
          bool replayed = false;
          for (const AxiomReport& report : reports) {
            if (!report.pass) {
              if (!replay_witness(mutant, report)) {
                pass = false;
              }
              replayed = true;
            }
          }
          pass = pass && replayed;
        }
      }
    }
  }
  pass = pass && mutations_exercised >= 20;
  report(2, pass,
         "each law-breaking single-cell mutation is reported with a "
         "replayable witness (" +
             std::to_string(mutations_exercised) + " mutants caught, " +
             std::to_string(valid_mutants) + " flips stayed lawful)",
         timer.seconds(), 5.0);
}

// 3. Theorem regression over every enumerated instance up to the cap.
void criterion_theorem_regression() {
  Timer timer;
  const int cap = size_cap();
  // (a) round trips  (b) surjection part vs congruence condition
  // (c) unique factorisation  (d) the extension isomorphism
  // (e) cancellativity transfer  (f) well-founded subobject routes
  // (g) the balanced equivalence on regular instances
  const char* ids[] = {"roundtrip",
                       "cs-subcat-iff-rc",
                       "unique-factorization",
                       "extension-is-category",
                       "psi-isomorphism",
                       "derived-cancellative",
                       "wfs-three-way",
                       "balanced-equivalence"};
  long long checked = 0;
  long long counterexamples = 0;
  for (int n = 0; n <= cap; ++n) {
    for (const CensusRecord& record : all_constellations(n, cap)) {
      for (const char* id : ids) {
        const PropertyDef* property = find_property(id);
        if (property == nullptr || !property->applicable(record)) {
          continue;
        }
        ++checked;
        if (!property->holds(record.canonical)) {
          ++counterexamples;
        }
      }
    }
  }
  report(3, counterexamples == 0,
         "zero counterexamples across " + std::to_string(checked) +
             " theorem checks on every instance up to size " +
             std::to_string(cap),
         timer.seconds(), 600.0);
}

// 4. Oracle duality.
void criterion_oracle_duality() {
  Timer timer;
  bool pass = true;
  for (int n = 0; n <= 3; ++n) {
    const testing::NaiveCensus naive = testing::naive_enumerate(n);
    std::set<std::vector<ElementId>> optimized;
    for (const CensusRecord& record : all_constellations(n)) {
      optimized.insert(canonical_key(record.canonical));
    }
    pass = pass && naive.canonical_keys == optimized;
  }
  report(4, pass,
         "generate-and-filter and backtracking enumerations agree on counts "
         "and canonical sets up to size 3",
         timer.seconds(), 30.0);
}

// 5. Derived counts, recomputed set-theoretically before any table exists.
void criterion_derived_counts() {
  Timer timer;
  // Partial self-maps of a 2-point set, counted by domain subset.
  long long maps = 0;
  for (int dom = 0; dom < 4; ++dom) {
    long long count = 1;
    for (int p = 0; p < 2; ++p) {
      if (dom & (1 << p)) {
        count *= 2;
      }
    }
    maps += count;
  }
  // Extension arrows: one per map and codomain superset of its image;
  // counted over raw value vectors, no structure involved.
  long long arrows = 0;
  for (int v0 = -1; v0 < 2; ++v0) {
    for (int v1 = -1; v1 < 2; ++v1) {
      int image = 0;
      if (v0 >= 0) image |= 1 << v0;
      if (v1 >= 0) image |= 1 << v1;
      for (int cod = 0; cod < 4; ++cod) {
        if ((image & cod) == image) {
          ++arrows;
        }
      }
    }
  }
  // Insertions: containment pairs of subsets, 3^n.
  long long insertions = 0;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      if ((a & b) == a) {
        ++insertions;
      }
    }
  }

  const StructureDef cx2 = fixture_cx2();
  const CanonicalExtension ext = canonical_extension(cx2);
  const bool pass = maps == 9 && cx2.size() == 9 && arrows == 18 &&
                    ext.category.size() == 18 && insertions == 9 &&
                    static_cast<long long>(insertion_part(ext).size()) == 9;
  report(5, pass,
         "|cx2| = 9, |C(cx2)| = 18, |insertions| = 9, each matching its "
         "set-theoretic pre-count",
         timer.seconds(), 30.0);
}

// 6. Mining the pre-range/range gap.  The least witness has four elements,
// so this one always searches the full default cap; only the theorem
// regression's sweep is cap-adjustable.
void criterion_mining(const std::string& root) {
  Timer timer;
  bool pass = true;
  const MiningResult mined =
      find_counterexample("pre-range-implies-range", kDefaultEnumerationCap);
  pass = pass && mined.witness.has_value();
  if (mined.witness) {
    const std::vector<AxiomReport> reports = check_range_axioms(*mined.witness);
    for (const char* law : {"R1", "R2", "R3", "R4"}) {
      pass = pass && find_report(reports, law)->pass;
    }
    const AxiomReport* rc = find_report(reports, "RC");
    pass = pass && rc != nullptr && !rc->pass;
    pass = pass && replay_witness(*mined.witness, *rc);
    // Stored once, replayed identically ever after.
    const StructureDef stored = parse_structure_file(
        root + "/tests/data/mined_pre_range_not_range.cst");
    pass = pass && same_algebra(stored, *mined.witness);
  }
  report(6, pass,
         "a pre-range structure violating the congruence condition is mined, "
         "replayed, and matches the recorded corpus entry",
         timer.seconds(), 600.0);
}

// 7. Naturality of the correspondence.
void criterion_naturality() {
  Timer timer;
  bool pass = true;
  const StructureDef chain2 = fixture_chain2();
  const StructureDef triv = fixture_triv();
  const StructureDef cx2 = fixture_cx2();
  const ActionConstellation act = fixture_act_full();

  ElementId id1 = kUndefined, id12 = kUndefined;
  for (ElementId i = 0; i < cx2.size(); ++i) {
    if (cx2.label(i) == "1-") id1 = i;
    if (cx2.label(i) == "12") id12 = i;
  }

  const std::vector<Morphism> radiants = {
      identity_morphism(chain2),
      Morphism{chain2, triv, {0, 0}},
      Morphism{triv, chain2, {0}},
      Morphism{chain2, cx2, {id1, id12}},
      act.projection,
      identity_morphism(cx2),
  };
  int squares = 0;
  for (const Morphism& rho : radiants) {
    if (!check_radiant(rho).range_radiant) {
      pass = false;
      continue;
    }
    const EtaSquareResult eta = eta_square(rho);
    pass = pass && eta.isomorphisms && eta.commutes && eta.recovers_rho;

    const ExtensionFunctorResult functor = extension_functor(rho);
    pass = pass && functor.ok;
    const CanonicalExtension source_ext = canonical_extension(rho.source);
    const CanonicalExtension target_ext = canonical_extension(rho.target);
    const TauSquareResult tau =
        tau_square(functor.functor, extension_is_witness(rho.source, source_ext),
                   extension_is_witness(rho.target, target_ext));
    pass = pass && tau.isomorphisms && tau.commutes;
    ++squares;
  }
  pass = pass && squares >= 5;
  report(7, pass,
         "both naturality squares commute for a catalogue of " +
             std::to_string(squares) + " range radiants",
         timer.seconds(), 1.0);
}

// 8. The monoid-action instance.
void criterion_action_instance() {
  Timer timer;
  const ActionConstellation act = fixture_act_full();
  bool pass = all_pass(check_range_axioms(act.def));
  // Ranges are the translates (x.m, 1).
  for (std::size_t i = 0; i < act.points.size(); ++i) {
    const auto [x, m] = act.points[i];
    const ElementId xm = x == 0 && m == 1 ? 1 : (m == 0 ? x : 1);
    const ElementId expected = xm * 2;  // (xm, identity)
    pass = pass && act.def.ran(static_cast<ElementId>(i)) == expected;
  }
  const RadiantFlags theta = check_radiant(act.projection);
  pass = pass && theta.radiant && theta.star_injective;
  pass = pass && covering_condition(act.projection);
  report(8, pass,
         "the poset-action instance has the expected ranges and a "
         "star-injective covering projection",
         timer.seconds(), 30.0);
}

}  // namespace

int main(int argc, char** argv) {
  const std::string root = argc > 1 ? argv[1] : ".";
  try {
    criterion_extension_example(root);
    criterion_mutations();
    criterion_theorem_regression();
    criterion_oracle_duality();
    criterion_derived_counts();
    criterion_mining(root);
    criterion_naturality();
    criterion_action_instance();
  } catch (const std::exception& error) {
    std::cout << "[FAIL] unexpected error: " << error.what() << "\n";
    ++failures;
  }
  std::cout << (failures == 0 ? "acceptance: all criteria pass"
                              : "acceptance: FAILURES") << "\n";
  return failures == 0 ? 0 : 1;
}
