#include "doctest.h"

#include <stdexcept>

#include "constelloid/category.hpp"
#include "constelloid/extension.hpp"
#include "constelloid/fixtures.hpp"
#include "constelloid/ordered.hpp"

using namespace constelloid;

namespace {

// Two objects with a parallel pair of distinct arrows between them.
StructureDef parallel_pair_category() {
  StructureDef def;
  def.name = "parallel";
  def.kind = Kind::kCategory;
  def.labels = {"ex", "ey", "a", "b"};
  def.table = OpTable(4);
  def.dmap = {0, 1, 0, 0};
  def.rmap = std::vector<ElementId>{0, 1, 1, 1};
  def.table.set(0, 0, 0);
  def.table.set(1, 1, 1);
  def.table.set(0, 2, 2);
  def.table.set(2, 1, 2);
  def.table.set(0, 3, 3);
  def.table.set(3, 1, 3);
  return def;
}

ElementId pair_of(const CanonicalExtension& ext, const StructureDef& q,
                  const std::string& underlying, const std::string& cod) {
  ElementId u = kUndefined, c = kUndefined;
  for (ElementId x = 0; x < q.size(); ++x) {
    if (q.label(x) == underlying) u = x;
    if (q.label(x) == cod) c = x;
  }
  REQUIRE(u != kUndefined);
  REQUIRE(c != kUndefined);
  const ElementId id = ext.pair_id(u, c);
  REQUIRE(id != kUndefined);
  return id;
}

}  // namespace

TEST_CASE("category laws") {
  SUBCASE("the derived category of chain2 is the discrete two-object one") {
    const StructureDef derived = derived_category(fixture_chain2());
    CHECK(all_pass(check_category_axioms(derived)));
    CHECK(derived.product(0, 0) == 0);
    CHECK(derived.product(1, 1) == 1);
    CHECK_FALSE(derived.defined(0, 1));
  }
  SUBCASE("the canonical extension of q4 is a category") {
    CHECK(all_pass(
        check_category_axioms(canonical_extension(fixture_q4()).category)));
  }
  SUBCASE("chain2 under its full product is not a category") {
    const auto reports = check_category_axioms(fixture_chain2());
    CHECK_FALSE(find_report(reports, "CC")->pass);  // a*b with R(a) != D(b)
  }
  SUBCASE("a range map is required") {
    CHECK_THROWS_AS(check_category_axioms(fixture_q4()),
                    std::invalid_argument);
  }
}

TEST_CASE("morphism classification in the extension of cx2") {
  const StructureDef cx2 = fixture_cx2();
  const CxConstellation cx = cx_constellation(2);
  const CanonicalExtension ext = canonical_extension(cx2);
  const MorphismClassification cls = classify_morphisms(ext.category);

  // An arrow (s, e) is invertible exactly when s is injective on its
  // domain and e is the identity on its image.
  for (ElementId i = 0; i < ext.category.size(); ++i) {
    const PairElement& p = ext.pairs[static_cast<std::size_t>(i)];
    const auto& values = cx.maps[static_cast<std::size_t>(p.underlying)];
    bool injective = true;
    for (std::size_t a = 0; a < values.size(); ++a) {
      for (std::size_t b = 0; b < a; ++b) {
        if (values[a] != kUndefined && values[a] == values[b]) {
          injective = false;
        }
      }
    }
    const bool tight = p.cod == cx2.ran(p.underlying);
    CAPTURE(ext.category.label(i));
    CHECK(cls.arrows[static_cast<std::size_t>(i)].iso == (injective && tight));
    if (cls.arrows[static_cast<std::size_t>(i)].iso) {
      CHECK(cls.arrows[static_cast<std::size_t>(i)].bimorphism);
      const ElementId inv = cls.inverse[static_cast<std::size_t>(i)];
      CHECK(ext.category.product(i, inv) == ext.category.dom(i));
    }
  }
}

TEST_CASE("the arrow (s,e) in the extension of q4 is a monomorphism") {
  const StructureDef q4 = fixture_q4();
  const CanonicalExtension ext = canonical_extension(q4);
  const MorphismClassification cls = classify_morphisms(ext.category);
  const ElementId se = pair_of(ext, q4, "s", "e");
  CHECK(cls.arrows[static_cast<std::size_t>(se)].mono);
}

TEST_CASE("the single element of triv is invertible") {
  const StructureDef triv = fixture_triv();
  const MorphismClassification cls = classify_morphisms(triv);
  CHECK(cls.arrows[0].iso);
}

TEST_CASE("equalisers") {
  const StructureDef cx2 = fixture_cx2();
  const CanonicalExtension ext = canonical_extension(cx2);
  SUBCASE("the domain identity equalises every reflexive pair") {
    for (ElementId a = 0; a < ext.category.size(); ++a) {
      CHECK(id_set_contains(equalisers(ext.category, a, a),
                            ext.category.dom(a)));
    }
  }
  SUBCASE("the two total constant maps are equalised exactly by the empty "
          "insertion") {
    const ElementId c1 = pair_of(ext, cx2, "11", "12");
    const ElementId c2 = pair_of(ext, cx2, "22", "12");
    const IdSet found = equalisers(ext.category, c1, c2);
    CHECK(found == IdSet{pair_of(ext, cx2, "--", "12")});
  }
  SUBCASE("a parallel pair may have no equaliser at all") {
    const StructureDef cat = parallel_pair_category();
    REQUIRE(all_pass(check_category_axioms(cat)));
    CHECK(equalisers(cat, 2, 3).empty());
    CHECK_FALSE(has_equalisers(cat));
  }
  SUBCASE("non-parallel arrows are rejected") {
    const ElementId c1 = pair_of(ext, cx2, "11", "12");
    const ElementId e = pair_of(ext, cx2, "--", "--");
    CHECK_THROWS_AS(equalisers(ext.category, c1, e), std::invalid_argument);
  }
}

TEST_CASE("subobjects") {
  SUBCASE("the top identity of the extension of cx2 has four subobjects") {
    const StructureDef cx2 = fixture_cx2();
    const CanonicalExtension ext = canonical_extension(cx2);
    const ElementId top = pair_of(ext, cx2, "12", "12");
    const SubobjectStructure sub = subobject_structure(ext.category, top);
    CHECK(sub.monos.size() == 7);
    CHECK(sub.blocks.size() == 4);  // one per subset of a two-point set
  }
  SUBCASE("triv has a single subobject") {
    const SubobjectStructure sub = subobject_structure(fixture_triv(), 0);
    CHECK(sub.blocks.size() == 1);
  }
  SUBCASE("every invertible arrow with the right range joins the identity's "
          "block") {
    const StructureDef cx2 = fixture_cx2();
    const CanonicalExtension ext = canonical_extension(cx2);
    const ElementId top = pair_of(ext, cx2, "12", "12");
    const SubobjectStructure sub = subobject_structure(ext.category, top);
    const MorphismClassification cls = classify_morphisms(ext.category);
    for (const IdSet& block : sub.blocks) {
      if (!id_set_contains(block, top)) {
        continue;
      }
      for (ElementId a : sub.monos) {
        if (cls.arrows[static_cast<std::size_t>(a)].iso) {
          CHECK(id_set_contains(block, a));
        }
      }
    }
  }
  SUBCASE("non-identities are rejected") {
    const StructureDef cx2 = fixture_cx2();
    const CanonicalExtension ext = canonical_extension(cx2);
    const ElementId arrow = pair_of(ext, cx2, "11", "12");
    CHECK_THROWS_AS(subobject_structure(ext.category, arrow),
                    std::invalid_argument);
  }
}

TEST_CASE("balance") {
  SUBCASE("the extension of cx2 is balanced") {
    CHECK(is_balanced(canonical_extension(fixture_cx2()).category).balanced);
  }
  SUBCASE("a one-object group is balanced") {
    StructureDef z2;
    z2.name = "z2";
    z2.kind = Kind::kCategory;
    z2.labels = {"1", "g"};
    z2.table = OpTable(2);
    z2.table.set(0, 0, 0);
    z2.table.set(0, 1, 1);
    z2.table.set(1, 0, 1);
    z2.table.set(1, 1, 0);
    z2.dmap = {0, 0};
    z2.rmap = std::vector<ElementId>{0, 0};
    REQUIRE(all_pass(check_category_axioms(z2)));
    CHECK(is_balanced(z2).balanced);
  }
  SUBCASE("the thin category of the two-chain is not balanced") {
    Relation chain(2);
    chain.set(0, 0);
    chain.set(0, 1);
    chain.set(1, 1);
    const StructureDef thin = thin_category(chain, {"a", "b"});
    const BalanceResult result = is_balanced(thin);
    CHECK_FALSE(result.balanced);
    REQUIRE(result.witness.has_value());
    CHECK(thin.label(*result.witness) == "(a,b)");
  }
  SUBCASE("every invertible arrow is a bimorphism") {
    const MorphismClassification cls =
        classify_morphisms(canonical_extension(fixture_q4()).category);
    for (const ArrowFlags& flags : cls.arrows) {
      if (flags.iso) {
        CHECK(flags.bimorphism);
      }
    }
  }
}

TEST_CASE("factorization systems") {
  const StructureDef cx2 = fixture_cx2();
  const CanonicalExtension ext = canonical_extension(cx2);
  const MorphismClassification cls = classify_morphisms(ext.category);
  IdSet isos, all, monos;
  for (ElementId a = 0; a < ext.category.size(); ++a) {
    all.push_back(a);
    if (cls.arrows[static_cast<std::size_t>(a)].iso) {
      isos.push_back(a);
    }
    if (cls.arrows[static_cast<std::size_t>(a)].mono) {
      monos.push_back(a);
    }
  }
  SUBCASE("(isomorphisms, all arrows) is a factorization system") {
    const FactorizationReport report =
        check_factorization_system(ext.category, isos, all);
    CHECK(report.pass);
    CHECK(find_report(report.conditions, "FSI")->pass);
  }
  SUBCASE("(surjection part, monomorphisms) is a factorization system") {
    const IdSet surjections = surjection_part(cx2, ext).ids;
    CHECK(check_factorization_system(ext.category, surjections, monos).pass);
  }
  SUBCASE("dropping an identity from a class fails the closure condition") {
    IdSet chopped = isos;
    chopped.erase(std::find(chopped.begin(), chopped.end(),
                            ext.category.dom(0)));
    const FactorizationReport report =
        check_factorization_system(ext.category, chopped, all);
    CHECK_FALSE(report.pass);
    CHECK_FALSE(find_report(report.conditions, "FS1")->pass);
  }
}

TEST_CASE("subcategory views") {
  const StructureDef cx2 = fixture_cx2();
  const CanonicalExtension ext = canonical_extension(cx2);
  const IdSet surjections = surjection_part(cx2, ext).ids;
  const SubcategoryView view = subcategory(ext.category, surjections);
  CHECK(view.sub.size() == static_cast<int>(surjections.size()));
  CHECK(all_pass(check_category_axioms(view.sub)));
  CHECK_THROWS_AS(subcategory(ext.category, IdSet{ext.category.size() > 0
                                                      ? surjections.back()
                                                      : 0}),
                  std::invalid_argument);
}
