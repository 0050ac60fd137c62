#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "constelloid/cli.hpp"
#include "constelloid/fixtures.hpp"
#include "constelloid/replay.hpp"
#include "constelloid/search.hpp"
#include "constelloid/textio.hpp"

using namespace constelloid;

namespace {

std::string fixture_path(const std::string& name) {
  return std::string(FIXTURE_DIR) + "/" + name;
}

int run(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run_command(args, out, err);
  if (out_text != nullptr) {
    *out_text = out.str() + err.str();
  }
  return code;
}

std::string temp_file(const std::string& name, const std::string& content) {
  const std::filesystem::path path =
      std::filesystem::temp_directory_path() / name;
  std::ofstream stream(path);
  stream << content;
  return path.string();
}

}  // namespace

TEST_CASE("the q4 file parses to the q4 fixture") {
  const StructureDef parsed = parse_structure_file(fixture_path("q4.cst"));
  CHECK(parsed == fixture_q4());
}

TEST_CASE("printing and parsing is the identity on every fixture") {
  for (const auto& [name, fx] : fixture_catalogue()) {
    CAPTURE(name);
    CHECK(parse_structure(print_structure(fx)) == fx);
  }
}

TEST_CASE("printing and parsing is the identity on census records") {
  for (const CensusRecord& record : all_constellations(3)) {
    CHECK(parse_structure(print_structure(record.canonical)) ==
          record.canonical);
  }
}

TEST_CASE("structures with orders and arrow subsets round-trip") {
  StructureDef def = canonical_extension(fixture_chain2()).category;
  def.name = "withbits";
  def.kind = Kind::kIsCategory;
  def.order = Relation::identity(def.size());
  def.insertions = IdSet{0, 1, 2};
  def.surjections = IdSet{0, 2};
  CHECK(parse_structure(print_structure(def)) == def);
}

TEST_CASE("a header-only file is the empty structure") {
  const StructureDef def = parse_structure("structure nothing : raw\n");
  CHECK(def.size() == 0);
  CHECK(def.name == "nothing");
}

TEST_CASE("parse errors carry line numbers") {
  SUBCASE("contradictory product declarations") {
    const std::string text =
        "structure x : raw\n"
        "elements e f s\n"
        "D e=e f=f s=e\n"
        "prod e f = s\n"
        "prod e f = e\n";
    try {
      parse_structure(text);
      FAIL("expected a parse error");
    } catch (const ParseError& error) {
      CHECK(error.line() == 5);
    }
  }
  SUBCASE("unknown labels") {
    CHECK_THROWS_AS(parse_structure("structure x : raw\nelements a\nD a=z\n"),
                    ParseError);
  }
  SUBCASE("missing domain entries") {
    CHECK_THROWS_AS(parse_structure("structure x : raw\nelements a\n"),
                    ParseError);
  }
  SUBCASE("missing header") {
    CHECK_THROWS_AS(parse_structure("elements a\n"), ParseError);
  }
  SUBCASE("unknown kind") {
    CHECK_THROWS_AS(parse_structure("structure x : blob\n"), ParseError);
  }
}

TEST_CASE("check command") {
  CHECK(run({"check", fixture_path("q4.cst")}) == cli::kExitPass);
  CHECK(run({"check", fixture_path("q4.cst"), "--as", "constellation"}) ==
        cli::kExitPass);
  CHECK(run({"check", fixture_path("chain2.cst")}) == cli::kExitPass);
  // q4 has no range map, so it cannot pass as a category.
  CHECK(run({"check", fixture_path("q4.cst"), "--as", "category"}) ==
        cli::kExitFail);
  const std::string broken = temp_file(
      "constelloid_broken.cst",
      "structure broken : constellation\n"
      "elements a b\n"
      "D a=a b=b\n"
      "prod a b = a\n");
  std::string output;
  CHECK(run({"check", broken}, &output) == cli::kExitFail);
  CHECK(output.find("[FAIL]") != std::string::npos);
}

TEST_CASE("construct command") {
  std::string output;
  CHECK(run({"construct", "canonical-extension", fixture_path("q4.cst")},
            &output) == cli::kExitPass);
  CHECK(output.find("(s,e)") != std::string::npos);
  CHECK(output.find("(s,f)") != std::string::npos);
  CHECK(output.find("(g,g)") != std::string::npos);

  CHECK(run({"construct", "derived-category", fixture_path("chain2.cst")},
            &output) == cli::kExitPass);
  CHECK(run({"construct", "cx", "--size", "2"}, &output) == cli::kExitPass);
  const StructureDef printed = parse_structure(output);
  CHECK(printed.size() == 9);
}

TEST_CASE("verify command") {
  CHECK(run({"verify", "roundtrip", fixture_path("chain2.cst")}) ==
        cli::kExitPass);
  // q4 has no range, so the round-trip property does not speak about it.
  CHECK(run({"verify", "roundtrip", fixture_path("q4.cst")}) ==
        cli::kExitUsage);
  CHECK(run({"verify", "no-such-property", fixture_path("q4.cst")}) ==
        cli::kExitUsage);
  CHECK(run({"verify", "natural-quasiorder", fixture_path("q4.cst")}) ==
        cli::kExitPass);
}

TEST_CASE("iso command") {
  std::string output;
  CHECK(run({"iso", fixture_path("chain2.cst"), fixture_path("chain2.cst")},
            &output) == cli::kExitPass);
  CHECK(output.find("isomorphic:") != std::string::npos);
  CHECK(run({"iso", fixture_path("chain2.cst"), fixture_path("triv.cst")}) ==
        cli::kExitFail);
}

TEST_CASE("enumerate command") {
  std::string output;
  CHECK(run({"enumerate", "--size", "2"}, &output) == cli::kExitPass);
  CHECK(output.find("6 classes") != std::string::npos);
  CHECK(run({"enumerate", "--size", "2", "--predicate", "pre-range,!range",
             "--format", "census"},
            &output) == cli::kExitPass);
  CHECK(output.empty());  // no such structure this small
}

TEST_CASE("mine command") {
  std::string output;
  CHECK(run({"mine", "--predicate", "pre-range-implies-range", "--cap", "4"},
            &output) == cli::kExitFail);
  CHECK(output.find("counterexample found") != std::string::npos);
  CHECK(run({"mine", "--predicate", "natural-quasiorder", "--cap", "3"},
            &output) == cli::kExitPass);
  CHECK(output.find("exhausted") != std::string::npos);
}

TEST_CASE("usage errors exit with code two") {
  CHECK(run({}) == cli::kExitUsage);
  CHECK(run({"frobnicate"}) == cli::kExitUsage);
  CHECK(run({"check"}) == cli::kExitUsage);
  CHECK(run({"check", "/no/such/file.cst"}) == cli::kExitUsage);
  CHECK(run({"enumerate"}) == cli::kExitUsage);
  CHECK(run({"enumerate", "--size"}) == cli::kExitUsage);
}

TEST_CASE("failed reports replay against the table") {
  const std::string text =
      "structure broken : constellation\n"
      "elements a b\n"
      "D a=a b=b\n"
      "prod a b = a\n";
  const StructureDef def = parse_structure(text);
  bool saw_failure = false;
  for (const AxiomReport& report : check_constellation_axioms(def)) {
    if (!report.pass) {
      saw_failure = true;
      CHECK(replay_witness(def, report));
    }
  }
  CHECK(saw_failure);
}
