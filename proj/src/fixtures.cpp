#include "constelloid/fixtures.hpp"

namespace constelloid {

StructureDef fixture_triv() {
  StructureDef def;
  def.name = "triv";
  def.kind = Kind::kConstellation;
  def.labels = {"e0"};
  def.table = OpTable(1);
  def.table.set(0, 0, 0);
  def.dmap = {0};
  def.rmap = std::vector<ElementId>{0};
  return def;
}

StructureDef fixture_chain2() {
  StructureDef def;
  def.name = "chain2";
  def.kind = Kind::kConstellation;
  def.labels = {"a", "b"};
  def.table = OpTable(2);
  def.table.set(0, 0, 0);
  def.table.set(0, 1, 0);
  def.table.set(1, 1, 1);
  def.dmap = {0, 1};
  def.rmap = std::vector<ElementId>{0, 1};
  return def;
}

StructureDef fixture_q4() {
  StructureDef def;
  def.name = "q4";
  def.kind = Kind::kConstellation;
  def.labels = {"s", "e", "f", "g"};
  def.table = OpTable(4);
  def.table.set(1, 1, 1);  // e*e = e
  def.table.set(2, 2, 2);  // f*f = f
  def.table.set(3, 3, 3);  // g*g = g
  def.table.set(3, 0, 0);  // g*s = s
  def.table.set(0, 1, 0);  // s*e = s
  def.table.set(0, 2, 0);  // s*f = s
  def.dmap = {3, 1, 2, 3};
  return def;
}

StructureDef fixture_cx2() {
  return cx_constellation(2).def;
}

MonoidDef fixture_monoid2() {
  MonoidDef monoid;
  monoid.table = OpTable(2);
  monoid.table.set(0, 0, 0);
  monoid.table.set(0, 1, 1);
  monoid.table.set(1, 0, 1);
  monoid.table.set(1, 1, 1);
  monoid.identity = 0;
  monoid.labels = {"1", "m"};
  return monoid;
}

ActionConstellation fixture_act_full() {
  Relation chain(2);
  chain.set(0, 0);
  chain.set(0, 1);
  chain.set(1, 1);
  // x.m = y, y.m = y
  std::vector<std::vector<ElementId>> action = {{0, 1}, {1, 1}};
  ActionConstellation out =
      action_constellation(chain, {"x", "y"}, fixture_monoid2(), action, "act");
  return out;
}

StructureDef fixture_act() {
  return fixture_act_full().def;
}

std::vector<std::pair<std::string, StructureDef>> fixture_catalogue() {
  return {
      {"triv", fixture_triv()},   {"chain2", fixture_chain2()},
      {"q4", fixture_q4()},       {"cx2", fixture_cx2()},
      {"act", fixture_act()},
  };
}

}  // namespace constelloid
