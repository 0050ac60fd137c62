#include "constelloid/cli.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>

#include "constelloid/category.hpp"
#include "constelloid/constellation.hpp"
#include "constelloid/core.hpp"
#include "constelloid/extension.hpp"
#include "constelloid/isstruct.hpp"
#include "constelloid/ordered.hpp"
#include "constelloid/search.hpp"
#include "constelloid/textio.hpp"

namespace constelloid::cli {

namespace {

struct Usage {
  std::string message;
};

struct Options {
  std::vector<std::string> positional;
  std::string as_kind;
  std::string predicate;
  std::string format = "text";
  int size = -1;
  int cap;
};

int default_cap() {
  if (const char* env = std::getenv("CONSTELLOID_CAP")) {
    const int value = std::atoi(env);
    if (value > 0) {
      return value;
    }
  }
  return kDefaultEnumerationCap;
}

Options parse_options(const std::vector<std::string>& args,
                      std::size_t start) {
  Options options;
  options.cap = default_cap();
  for (std::size_t i = start; i < args.size(); ++i) {
    const std::string& arg = args[i];
    auto next = [&](const std::string& flag) -> const std::string& {
      if (i + 1 >= args.size()) {
        throw Usage{flag + " requires a value"};
      }
      return args[++i];
    };
    if (arg == "--as") {
      options.as_kind = next(arg);
    } else if (arg == "--predicate" || arg == "--theorem") {
      options.predicate = next(arg);
    } else if (arg == "--format") {
      options.format = next(arg);
      if (options.format != "text" && options.format != "census") {
        throw Usage{"--format must be text or census"};
      }
    } else if (arg == "--size") {
      options.size = std::atoi(next(arg).c_str());
    } else if (arg == "--cap") {
      options.cap = std::atoi(next(arg).c_str());
    } else if (!arg.empty() && arg[0] == '-') {
      throw Usage{"unknown flag: " + arg};
    } else {
      options.positional.push_back(arg);
    }
  }
  return options;
}

void print_reports(const StructureDef& def,
                   const std::vector<AxiomReport>& reports,
                   std::ostream& out) {
  for (const auto& report : reports) {
    out << (report.pass ? "[PASS] " : "[FAIL] ") << report.axiom;
    if (!report.pass && !report.witnesses.empty()) {
      out << " witness=" << format_tuple(def, report.witnesses.front());
    }
    if (!report.note.empty() && !report.pass) {
      out << " (" << report.note << ")";
    }
    out << "\n";
  }
}

std::vector<AxiomReport> suite_for_kind(const StructureDef& def, Kind kind) {
  std::vector<AxiomReport> reports = validate_structure(def);
  if (!all_pass(reports)) {
    return reports;
  }
  auto append = [&reports](std::vector<AxiomReport> more) {
    for (auto& report : more) {
      reports.push_back(std::move(report));
    }
  };
  switch (kind) {
    case Kind::kRaw:
      break;
    case Kind::kConstellation:
      append(check_constellation_axioms(def));
      if (all_pass(reports) && def.rmap) {
        append(check_range_axioms(def));
      }
      if (all_pass(reports) && def.order) {
        append(check_ordered_axioms(def, *def.order));
      }
      break;
    case Kind::kCategory:
      append(check_category_axioms(def));
      break;
    case Kind::kOrdered: {
      append(check_category_axioms(def));
      if (all_pass(reports) && def.order) {
        append(check_ordered_axioms(def, *def.order));
        const RestrictionTable rt = restriction_table(def, *def.order);
        AxiomReport o3{"O3"};
        if (!rt.total) {
          o3.pass = false;
          const auto witness = rt.missing ? *rt.missing : *rt.ambiguous;
          o3.witnesses.push_back({witness[0], witness[1]});
          o3.note = rt.missing ? "no restriction" : "restriction not unique";
        }
        reports.push_back(o3);
      }
      break;
    }
    case Kind::kIsCategory: {
      append(check_category_axioms(def));
      if (all_pass(reports) && def.insertions && def.surjections) {
        append(check_is_category(def, *def.insertions, *def.surjections)
                   .reports);
      }
      break;
    }
  }
  return reports;
}

int command_check(const Options& options, std::ostream& out) {
  if (options.positional.size() != 1) {
    throw Usage{"check expects one structure file"};
  }
  StructureDef def = parse_structure_file(options.positional.front());
  Kind kind = def.kind;
  if (!options.as_kind.empty()) {
    const auto parsed = kind_from_name(options.as_kind);
    if (!parsed) {
      throw Usage{"unknown kind: " + options.as_kind};
    }
    kind = *parsed;
    def.kind = kind;
  }
  const std::vector<AxiomReport> reports = suite_for_kind(def, kind);
  print_reports(def, reports, out);
  out << (all_pass(reports) ? "ok" : "failed") << ": " << def.name << " as "
      << kind_name(kind) << "\n";
  return all_pass(reports) ? kExitPass : kExitFail;
}

int command_construct(const Options& options, std::ostream& out) {
  if (options.positional.empty()) {
    throw Usage{"construct expects a construction name"};
  }
  const std::string& what = options.positional.front();
  auto input = [&]() -> StructureDef {
    if (options.positional.size() != 2) {
      throw Usage{"construct " + what + " expects one structure file"};
    }
    return parse_structure_file(options.positional[1]);
  };

  if (what == "canonical-extension") {
    const StructureDef q = input();
    const CanonicalExtension ext = canonical_extension(q);
    StructureDef result = with_is_subsets(ext.category, insertion_part(ext),
                                          has_pre_range(q)
                                              ? surjection_part(q, ext).ids
                                              : IdSet{});
    if (!has_pre_range(q)) {
      result.kind = Kind::kCategory;
      result.insertions.reset();
      result.surjections.reset();
    }
    out << print_structure(result);
    return kExitPass;
  }
  if (what == "derived-category") {
    out << print_structure(derived_category(input()));
    return kExitPass;
  }
  if (what == "constellation-of") {
    const StructureDef cat = input();
    if (!cat.order) {
      throw Usage{"constellation-of requires an order in the file"};
    }
    out << print_structure(constellation_of_ordered_category(cat, *cat.order));
    return kExitPass;
  }
  if (what == "cx") {
    if (options.size < 0) {
      throw Usage{"construct cx requires --size"};
    }
    out << print_structure(cx_constellation(options.size, options.cap).def);
    return kExitPass;
  }
  if (what == "poset" || what == "thin") {
    const StructureDef base = input();
    if (!base.order) {
      throw Usage{"construct " + what + " requires an order in the file"};
    }
    if (what == "poset") {
      out << print_structure(
          constellation_from_poset(*base.order, base.labels, base.name));
    } else {
      out << print_structure(thin_category(*base.order, base.labels,
                                           base.name + ".thin"));
    }
    return kExitPass;
  }
  throw Usage{"unknown construction: " + what};
}

int command_verify(const Options& options, std::ostream& out) {
  std::string id;
  std::string file;
  if (options.positional.size() == 2) {
    id = options.positional[0];
    file = options.positional[1];
  } else if (options.positional.size() == 1 && !options.predicate.empty()) {
    id = options.predicate;
    file = options.positional[0];
  } else {
    throw Usage{"verify expects a property id and a structure file"};
  }
  const PropertyDef* property = find_property(id);
  if (property == nullptr) {
    throw Usage{"unknown property: " + id + " (see the catalogue)"};
  }
  const StructureDef def = parse_structure_file(file);
  CensusRecord record;
  record.canonical = def;
  record.size = def.size();
  record.flags = census_flags(def);
  if (!property->applicable(record)) {
    out << "not applicable: " << property->id << " on " << def.name << "\n";
    return kExitUsage;
  }
  const bool holds = property->holds(def);
  out << (holds ? "[PASS] " : "[FAIL] ") << property->id << " on " << def.name
      << "\n";
  return holds ? kExitPass : kExitFail;
}

std::uint32_t flag_of(const std::string& name) {
  if (name == "constellation") return kFlagConstellation;
  if (name == "normal") return kFlagNormal;
  if (name == "composable") return kFlagComposable;
  if (name == "categorial") return kFlagCategorial;
  if (name == "pre-range") return kFlagPreRange;
  if (name == "range") return kFlagRange;
  if (name == "left-cancellative") return kFlagLeftCancellative;
  throw Usage{"unknown census flag: " + name};
}

// Comma-separated flag terms, '!' negating one, e.g. "pre-range,!range".
bool matches_predicate(const CensusRecord& record,
                       const std::string& predicate) {
  std::istringstream stream(predicate);
  std::string term;
  while (std::getline(stream, term, ',')) {
    if (term.empty()) {
      continue;
    }
    const bool negated = term[0] == '!';
    const std::uint32_t flag = flag_of(negated ? term.substr(1) : term);
    const bool present = (record.flags & flag) != 0;
    if (present == negated) {
      return false;
    }
  }
  return true;
}

int command_enumerate(const Options& options, std::ostream& out) {
  if (options.size < 0) {
    throw Usage{"enumerate requires --size"};
  }
  int count = 0;
  enumerate_constellations(
      options.size,
      [&](const CensusRecord& record) {
        if (!options.predicate.empty() &&
            !matches_predicate(record, options.predicate)) {
          return true;
        }
        ++count;
        if (options.format == "census") {
          out << census_line(record) << "\n";
        } else {
          out << record.canonical.name << " aut=" << record.automorphisms
              << " flags=" << record.flags << "\n";
        }
        return true;
      },
      options.cap);
  if (options.format == "text") {
    out << count << " classes\n";
  }
  return kExitPass;
}

int command_iso(const Options& options, std::ostream& out) {
  if (options.positional.size() != 2) {
    throw Usage{"iso expects two structure files"};
  }
  const StructureDef a = parse_structure_file(options.positional[0]);
  const StructureDef b = parse_structure_file(options.positional[1]);
  const IsoResult result = are_isomorphic(a, b);
  if (!result.isomorphic) {
    out << "not isomorphic\n";
    return kExitFail;
  }
  out << "isomorphic:";
  for (ElementId x = 0; x < a.size(); ++x) {
    out << " " << a.label(x) << "->"
        << b.label((*result.witness)[static_cast<std::size_t>(x)]);
  }
  out << "\n";
  return kExitPass;
}

int command_mine(const Options& options, std::ostream& out) {
  if (options.predicate.empty()) {
    throw Usage{"mine requires --predicate"};
  }
  if (find_property(options.predicate) == nullptr) {
    throw Usage{"unknown property: " + options.predicate};
  }
  const MiningResult result =
      find_counterexample(options.predicate, options.cap);
  if (result.witness) {
    out << "counterexample found:\n" << print_structure(*result.witness);
    return kExitFail;
  }
  out << "exhausted: no counterexample up to size "
      << result.max_size_searched << "\n";
  return kExitPass;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
  if (args.empty()) {
    err << "usage: constelloid <check|construct|verify|enumerate|iso|mine> "
           "[files] [--as KIND] [--size N] [--predicate P] [--cap N] "
           "[--format text|census]\n";
    return kExitUsage;
  }
  try {
    const Options options = parse_options(args, 1);
    const std::string& command = args.front();
    if (command == "check") return command_check(options, out);
    if (command == "construct") return command_construct(options, out);
    if (command == "verify") return command_verify(options, out);
    if (command == "enumerate") return command_enumerate(options, out);
    if (command == "iso") return command_iso(options, out);
    if (command == "mine") return command_mine(options, out);
    throw Usage{"unknown command: " + command};
  } catch (const Usage& usage) {
    err << "error: " << usage.message << "\n";
    return kExitUsage;
  } catch (const ParseError& error) {
    err << "parse error: " << error.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& error) {
    err << "error: " << error.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace constelloid::cli
