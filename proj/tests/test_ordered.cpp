#include "doctest.h"

#include <stdexcept>

#include "constelloid/constellation.hpp"
#include "constelloid/extension.hpp"
#include "constelloid/fixtures.hpp"
#include "constelloid/isstruct.hpp"
#include "constelloid/iso.hpp"
#include "constelloid/naturality.hpp"
#include "constelloid/ordered.hpp"
#include "constelloid/search.hpp"

using namespace constelloid;

TEST_CASE("ordered axioms under the natural order") {
  const StructureDef chain2 = fixture_chain2();
  const Relation natural = natural_order(chain2);
  const auto reports = check_ordered_axioms(chain2, natural);
  for (const char* law : {"O1", "O2", "O2'"}) {
    CAPTURE(law);
    CHECK(find_report(reports, law)->pass);
  }
}

TEST_CASE("the extension of q4 is ordered by its I-order, including the "
          "separation law") {
  const CanonicalExtension ext = canonical_extension(fixture_q4());
  const IOrderResult io = i_order(ext.category, insertion_part(ext));
  REQUIRE(all_pass(io.reports));
  const auto reports = check_ordered_axioms(ext.category, io.order);
  CHECK(all_pass(reports));  // includes OO
}

TEST_CASE("the discrete order is ordered but trivial") {
  const StructureDef chain2 = fixture_chain2();
  const Relation discrete = Relation::identity(2);
  const auto reports = check_ordered_axioms(chain2, discrete);
  CHECK(all_pass(reports));
  // Restrictions only ever asked for along the given order, so the table is
  // total with nothing below the diagonal.
  const RestrictionTable rt = restriction_table(chain2, discrete);
  CHECK(rt.total);
  CHECK(rt.cells.at(0, 0) == 0);
  CHECK(rt.cells.at(0, 1) == kUndefined);
}

TEST_CASE("a quasiorder is rejected as an order") {
  Relation loop(2);
  loop.set(0, 0);
  loop.set(1, 1);
  loop.set(0, 1);
  loop.set(1, 0);
  CHECK_THROWS_AS(check_ordered_axioms(fixture_chain2(), loop),
                  std::invalid_argument);
}

TEST_CASE("restrictions under the natural order are left multiplications") {
  const StructureDef chain2 = fixture_chain2();
  const RestrictionTable rt = restriction_table(chain2, natural_order(chain2));
  CHECK(rt.total);
  CHECK(rt.cells.at(0, 1) == 0);  // a|b = a
  CHECK(rt.matches_left_multiplication);
}

TEST_CASE("restriction laws in the surjection part of the extension of cx2 "
          "under its inherited I-order") {
  // The full extension is ordered by its I-order but lacks restrictions:
  // below the insertion ({1}) -> ({1,2}) both (--,12) and (--,1-) restrict
  // to the empty domain.  The surjection subcategory does have them.
  const StructureDef cx2 = fixture_cx2();
  const CanonicalExtension ext = canonical_extension(cx2);
  const IOrderResult io = i_order(ext.category, insertion_part(ext));
  REQUIRE(all_pass(io.reports));

  const RestrictionTable full = restriction_table(ext.category, io.order);
  CHECK_FALSE(full.total);
  CHECK(full.ambiguous.has_value());

  const ISWitness w = extension_is_witness(cx2, ext);
  StructureDef ordered_cat = ext.category;
  ordered_cat.order = io.order;
  const SubcategoryView view = subcategory(ordered_cat, w.surjections);
  const RestrictionTable rt = restriction_table(view.sub, *view.sub.order);
  CHECK(rt.total);
  CHECK(check_order_recovery(view.sub, *view.sub.order, rt).pass);
  CHECK(check_restriction_composition(view.sub, *view.sub.order, rt).pass);
}

TEST_CASE("derived categories") {
  SUBCASE("triv stays itself") {
    const StructureDef derived = derived_category(fixture_triv());
    CHECK(derived.table == fixture_triv().table);
  }
  SUBCASE("cx2 keeps exactly the matched products") {
    const StructureDef cx2 = fixture_cx2();
    const StructureDef derived = derived_category(cx2);
    CHECK(all_pass(check_category_axioms(derived)));
    for (ElementId s = 0; s < cx2.size(); ++s) {
      for (ElementId t = 0; t < cx2.size(); ++t) {
        CHECK(derived.defined(s, t) ==
              (cx2.defined(s, t) && cx2.ran(s) == cx2.dom(t)));
      }
    }
  }
  SUBCASE("a failing congruence condition is rejected") {
    StructureDef bad;
    bad.kind = Kind::kConstellation;
    bad.labels = {"r1", "r2", "s", "t"};
    bad.table = OpTable(4);
    bad.dmap = {0, 1, 0, 0};
    bad.rmap = std::vector<ElementId>{0, 1, 0, 1};
    bad.table.set(0, 0, 0);
    bad.table.set(0, 1, 0);
    bad.table.set(0, 2, 2);
    bad.table.set(0, 3, 3);
    bad.table.set(1, 1, 1);
    bad.table.set(2, 0, 2);
    bad.table.set(2, 1, 2);
    bad.table.set(2, 2, 2);
    bad.table.set(2, 3, 2);
    bad.table.set(3, 1, 3);
    REQUIRE(all_pass(check_constellation_axioms(bad)));
    CHECK_THROWS_WITH_AS(derived_category(bad),
                         "derived_category: range law fails: RC",
                         std::invalid_argument);
  }
}

TEST_CASE("rebuilding the constellation from the ordered category") {
  SUBCASE("chain2 comes back on the nose") {
    const StructureDef chain2 = fixture_chain2();
    const StructureDef derived = derived_category(chain2);
    const StructureDef back =
        constellation_of_ordered_category(derived, *derived.order);
    CHECK(back.table == chain2.table);
    CHECK(back.dmap == chain2.dmap);
    CHECK(back.rmap == chain2.rmap);
  }
  SUBCASE("a discrete category with the discrete order gains nothing") {
    const StructureDef derived = derived_category(fixture_chain2());
    const StructureDef back =
        constellation_of_ordered_category(derived, Relation::identity(2));
    CHECK(back.table == derived.table);
  }
  SUBCASE("the surjection part of the extension of cx2 rebuilds cx2") {
    const StructureDef cx2 = fixture_cx2();
    const CanonicalExtension ext = canonical_extension(cx2);
    const ISWitness w = extension_is_witness(cx2, ext);
    const SurjectionConstellation sc =
        surjection_constellation(ext.category, w);
    StructureDef sprime = sc.sprime;
    sprime.order.reset();
    sprime.kind = Kind::kConstellation;
    CHECK(are_isomorphic(sprime, cx2).isomorphic);
  }
}

TEST_CASE("round trips on the fixtures") {
  CHECK(roundtrip_check(fixture_chain2()));
  CHECK(roundtrip_check(fixture_cx2()));
  CHECK(roundtrip_check(fixture_act()));
  CHECK(roundtrip_check(fixture_triv()));
  CHECK_THROWS_AS(roundtrip_check(fixture_q4()), std::invalid_argument);
}

TEST_CASE("round trip starting from an ordered category") {
  const StructureDef derived = derived_category(fixture_cx2());
  CHECK(roundtrip_check(derived));
}

TEST_CASE("restriction laws across the ranged census") {
  for (const char* id :
       {"natural-order-restrictions", "ordered-axioms-natural",
        "restriction-lemma"}) {
    const PropertyDef* property = find_property(id);
    REQUIRE(property != nullptr);
    for (int n = 0; n <= 3; ++n) {
      for (const CensusRecord& record : all_constellations(n)) {
        if (property->applicable(record)) {
          CAPTURE(id);
          CAPTURE(record.canonical.name);
          CHECK(property->holds(record.canonical));
        }
      }
    }
  }
}
