#include "doctest.h"

#include <set>
#include <stdexcept>

#include "constelloid/category.hpp"
#include "constelloid/extension.hpp"
#include "constelloid/fixtures.hpp"
#include "constelloid/iso.hpp"
#include "constelloid/morphism.hpp"
#include "constelloid/search.hpp"

using namespace constelloid;

TEST_CASE("the canonical extension of q4 has exactly the five known arrows") {
  const CanonicalExtension ext = canonical_extension(fixture_q4());
  REQUIRE(ext.category.size() == 5);
  const std::set<std::string> labels(ext.category.labels.begin(),
                                     ext.category.labels.end());
  CHECK(labels == std::set<std::string>{"(s,e)", "(s,f)", "(e,e)", "(f,f)",
                                        "(g,g)"});
}

TEST_CASE("extension sizes") {
  CHECK(canonical_extension(fixture_triv()).category.size() == 1);
  CHECK(canonical_extension(fixture_cx2()).category.size() == 18);
  CHECK(canonical_extension(fixture_chain2()).category.size() == 3);
}

TEST_CASE("insertion parts") {
  SUBCASE("for q4 they are exactly the identities") {
    const CanonicalExtension ext = canonical_extension(fixture_q4());
    CHECK(insertion_part(ext) == identity_arrows(ext.category));
    CHECK(insertion_part(ext).size() == 3);
  }
  SUBCASE("for cx2 they count the containment pairs of subsets") {
    CHECK(insertion_part(canonical_extension(fixture_cx2())).size() == 9);
  }
  SUBCASE("for triv a single identity") {
    CHECK(insertion_part(canonical_extension(fixture_triv())).size() == 1);
  }
}

TEST_CASE("surjection parts") {
  SUBCASE("cx2: nine arrows forming a subcategory isomorphic to the derived "
          "category") {
    const StructureDef cx2 = fixture_cx2();
    const SurjectionPart part = surjection_part(cx2, canonical_extension(cx2));
    CHECK(part.ids.size() == 9);
    CHECK(part.subcategory);
    CHECK(part.isomorphic_to_derived);
  }
  SUBCASE("chain2: the two identity pairs") {
    const StructureDef chain2 = fixture_chain2();
    const CanonicalExtension ext = canonical_extension(chain2);
    const SurjectionPart part = surjection_part(chain2, ext);
    CHECK(part.ids.size() == 2);
    CHECK(part.subcategory);
  }
  SUBCASE("without the congruence condition the part is not closed") {
    StructureDef bad;
    bad.kind = Kind::kConstellation;
    bad.labels = {"r1", "r2", "s", "t"};
    bad.table = OpTable(4);
    bad.dmap = {0, 1, 0, 0};
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
    const SurjectionPart part = surjection_part(bad, canonical_extension(bad));
    CHECK_FALSE(part.subcategory);
    CHECK(part.closure_witness.has_value());
  }
  SUBCASE("no pre-range, no surjection part") {
    CHECK_THROWS_AS(
        surjection_part(fixture_q4(), canonical_extension(fixture_q4())),
        std::invalid_argument);
  }
}

TEST_CASE("unique factorisation through surjection then insertion") {
  const StructureDef cx2 = fixture_cx2();
  const CanonicalExtension ext = canonical_extension(cx2);
  const ISFactorization fact = unique_is_factorization(cx2, ext);
  CHECK(fact.ok);
  for (ElementId a = 0; a < ext.category.size(); ++a) {
    const PairElement& p = ext.pairs[static_cast<std::size_t>(a)];
    const ElementId r = cx2.ran(p.underlying);
    CHECK(fact.surjection_factor[static_cast<std::size_t>(a)] ==
          ext.pair_id(p.underlying, r));
    CHECK(fact.insertion_factor[static_cast<std::size_t>(a)] ==
          ext.pair_id(r, p.cod));
    // Identities factor through themselves twice over.
    if (ext.category.dom(a) == a) {
      CHECK(fact.surjection_factor[static_cast<std::size_t>(a)] == a);
      CHECK(fact.insertion_factor[static_cast<std::size_t>(a)] == a);
    }
  }
}

TEST_CASE("poset constellations") {
  Relation chain(2);
  chain.set(0, 0);
  chain.set(0, 1);
  chain.set(1, 1);
  SUBCASE("the two-chain gives chain2") {
    const StructureDef built = constellation_from_poset(chain, {"a", "b"});
    CHECK(same_algebra(built, fixture_chain2()));
    CHECK(all_pass(check_range_axioms(built)));
    CHECK(is_left_cancellative(built).cancellative);
  }
  SUBCASE("an antichain gives a discrete constellation") {
    const StructureDef built =
        constellation_from_poset(Relation::identity(3), {"p", "q", "r"});
    for (ElementId x = 0; x < 3; ++x) {
      for (ElementId y = 0; y < 3; ++y) {
        CHECK(built.defined(x, y) == (x == y));
      }
    }
  }
  SUBCASE("a non-antisymmetric quasiorder is accepted but abnormal") {
    Relation loop(2);
    loop.set(0, 0);
    loop.set(1, 1);
    loop.set(0, 1);
    loop.set(1, 0);
    const StructureDef built = constellation_from_poset(loop, {"e", "f"});
    CHECK(all_pass(check_constellation_axioms(built)));
    CHECK_FALSE(classify(built).normal);
    StructureDef bare = built;
    bare.rmap.reset();
    CHECK_FALSE(infer_pre_range(bare).rmap.has_value());
  }
  SUBCASE("irreflexive input is rejected") {
    CHECK_THROWS_AS(constellation_from_poset(Relation(2), {"a", "b"}),
                    std::invalid_argument);
  }
}

TEST_CASE("thin categories") {
  Relation chain(2);
  chain.set(0, 0);
  chain.set(0, 1);
  chain.set(1, 1);
  SUBCASE("the two-chain has three arrows") {
    const StructureDef thin = thin_category(chain, {"a", "b"});
    CHECK(thin.size() == 3);
    CHECK(all_pass(check_category_axioms(thin)));
  }
  SUBCASE("an antichain has identities only") {
    const StructureDef thin =
        thin_category(Relation::identity(2), {"a", "b"});
    CHECK(thin.size() == 2);
  }
  SUBCASE("the thin category of a poset is the extension of its "
          "constellation") {
    StructureDef thin = thin_category(chain, {"a", "b"});
    StructureDef ext = canonical_extension(fixture_chain2()).category;
    thin.kind = Kind::kCategory;
    ext.kind = Kind::kCategory;
    CHECK(are_isomorphic(thin, ext).isomorphic);
  }
}

TEST_CASE("partial-map constellations") {
  CHECK(cx_constellation(0).def.size() == 1);
  CHECK(cx_constellation(1).def.size() == 2);
  const CxConstellation cx = cx_constellation(2);
  CHECK(cx.def.size() == 9);
  CHECK(all_pass(check_range_axioms(cx.def)));
  CHECK(is_left_cancellative(cx.def).cancellative);
  SUBCASE("domain and range are identity restrictions") {
    for (ElementId i = 0; i < cx.def.size(); ++i) {
      const auto& v = cx.maps[static_cast<std::size_t>(i)];
      const auto& dom = cx.maps[static_cast<std::size_t>(cx.def.dom(i))];
      for (std::size_t p = 0; p < v.size(); ++p) {
        CHECK((dom[p] != kUndefined) == (v[p] != kUndefined));
        if (dom[p] != kUndefined) {
          CHECK(dom[p] == static_cast<ElementId>(p));
        }
      }
    }
  }
  SUBCASE("the element cap is a resource guard") {
    CHECK_THROWS_AS(cx_constellation(5), std::runtime_error);
    CHECK_NOTHROW(cx_constellation(3));
  }
}

TEST_CASE("action constellations") {
  SUBCASE("the fixture passes all range laws with the expected ranges") {
    const ActionConstellation act = fixture_act_full();
    CHECK(all_pass(check_range_axioms(act.def)));
    // R((x, m)) = (x.m, 1): the m-translate of the base point.
    for (std::size_t i = 0; i < act.points.size(); ++i) {
      const auto [x, m] = act.points[i];
      const auto [rx, rm] = act.points[static_cast<std::size_t>(
          act.def.ran(static_cast<ElementId>(i)))];
      CHECK(rm == 0);
      if (m == 0) {
        CHECK(rx == x);
      }
    }
    const RadiantFlags theta = check_radiant(act.projection);
    CHECK(theta.radiant);
    CHECK(theta.star_injective);
    CHECK(covering_condition(act.projection));
  }
  SUBCASE("the trivial monoid reproduces the poset constellation") {
    Relation chain(2);
    chain.set(0, 0);
    chain.set(0, 1);
    chain.set(1, 1);
    MonoidDef trivial;
    trivial.table = OpTable(1);
    trivial.table.set(0, 0, 0);
    trivial.identity = 0;
    trivial.labels = {"1"};
    const ActionConstellation act =
        action_constellation(chain, {"x", "y"}, trivial, {{0}, {1}});
    StructureDef flat = act.def;
    flat.order.reset();
    CHECK(are_isomorphic(flat, constellation_from_poset(chain, {"x", "y"}))
              .isomorphic);
  }
  SUBCASE("the identity action on an antichain is a covering too") {
    const ActionConstellation act = action_constellation(
        Relation::identity(2), {"x", "y"}, fixture_monoid2(),
        {{0, 0}, {1, 1}});
    CHECK(all_pass(check_range_axioms(act.def)));
    CHECK(covering_condition(act.projection));
  }
  SUBCASE("a non-monotone action is rejected with a witness") {
    // x <= y, z isolated; m sends x to z but fixes y, breaking monotony
    // while staying unital, associative and total.
    Relation order = Relation::identity(3);
    order.set(0, 1);
    CHECK_THROWS_WITH_AS(
        action_constellation(order, {"x", "y", "z"}, fixture_monoid2(),
                             {{0, 2}, {1, 1}, {2, 2}}),
        "action_constellation: action not monotone at (x,y)",
        std::invalid_argument);
  }
}

TEST_CASE("restricted products of bi-unary semigroups") {
  SUBCASE("a two-chain meet semilattice gives the poset constellation") {
    OpTable meet(2);
    meet.set(0, 0, 0);
    meet.set(0, 1, 0);
    meet.set(1, 0, 0);
    meet.set(1, 1, 1);
    const DrSemigroupResult result = constellation_from_dr_semigroup(
        meet, {0, 1}, {0, 1}, {"a", "b"});
    CHECK(all_pass(result.constellation_reports));
    CHECK(all_pass(result.range_reports));
    CHECK(same_algebra(result.def, fixture_chain2()));
  }
  SUBCASE("a monoid with constant maps becomes a one-object category") {
    OpTable table(2);
    table.set(0, 0, 0);
    table.set(0, 1, 1);
    table.set(1, 0, 1);
    table.set(1, 1, 1);
    const DrSemigroupResult result = constellation_from_dr_semigroup(
        table, {0, 0}, {0, 0}, {"1", "m"});
    CHECK(all_pass(result.constellation_reports));
    CHECK(classify(result.def).categorial);
    for (ElementId a = 0; a < 2; ++a) {
      for (ElementId b = 0; b < 2; ++b) {
        CHECK(result.def.defined(a, b));
      }
    }
  }
  SUBCASE("a one-element semigroup gives triv") {
    OpTable table(1);
    table.set(0, 0, 0);
    const DrSemigroupResult result =
        constellation_from_dr_semigroup(table, {0}, {0}, {"e0"});
    CHECK(same_algebra(result.def, fixture_triv()));
  }
  SUBCASE("non-associative input is rejected") {
    OpTable table(2);
    table.set(0, 0, 1);
    table.set(0, 1, 1);
    table.set(1, 0, 0);
    table.set(1, 1, 0);
    CHECK_THROWS_AS(
        constellation_from_dr_semigroup(table, {0, 0}, {0, 0}, {"a", "b"}),
        std::invalid_argument);
  }
}

TEST_CASE("the insertion part is a subcategory on every small instance") {
  const PropertyDef* property = find_property("insertion-subcategory");
  REQUIRE(property != nullptr);
  for (int n = 0; n <= 3; ++n) {
    for (const CensusRecord& record : all_constellations(n)) {
      CHECK(property->holds(record.canonical));
    }
  }
}
