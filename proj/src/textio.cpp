#include "constelloid/textio.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace constelloid {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) {
    tokens.push_back(token);
  }
  return tokens;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  StructureDef run() {
    std::istringstream stream(text_);
    std::string line;
    while (std::getline(stream, line)) {
      ++line_number_;
      const auto hash = line.find('#');
      if (hash != std::string::npos) {
        line.resize(hash);
      }
      const std::vector<std::string> tokens = tokenize(line);
      if (tokens.empty()) {
        continue;
      }
      dispatch(tokens);
    }
    finish();
    return def_;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_number_, message);
  }

  ElementId lookup(const std::string& label) const {
    auto it = ids_.find(label);
    if (it == ids_.end()) {
      fail("unknown element label: " + label);
    }
    return it->second;
  }

  void dispatch(const std::vector<std::string>& tokens) {
    const std::string& head = tokens.front();
    if (head == "structure") {
      parse_header(tokens);
    } else if (head == "elements") {
      parse_elements(tokens);
    } else if (head == "D") {
      parse_map(tokens, dmap_entries_);
    } else if (head == "R") {
      parse_map(tokens, rmap_entries_);
      has_rmap_ = true;
    } else if (head == "prod") {
      parse_prod(tokens);
    } else if (head == "order") {
      parse_order(tokens);
    } else if (head == "insertions") {
      parse_set(tokens, insertions_);
      has_insertions_ = true;
    } else if (head == "surjections") {
      parse_set(tokens, surjections_);
      has_surjections_ = true;
    } else {
      fail("unknown directive: " + head);
    }
  }

  void parse_header(const std::vector<std::string>& tokens) {
    if (seen_header_) {
      fail("duplicate structure line");
    }
    if (tokens.size() != 4 || tokens[2] != ":") {
      fail("expected: structure <name> : <kind>");
    }
    const auto kind = kind_from_name(tokens[3]);
    if (!kind) {
      fail("unknown kind: " + tokens[3]);
    }
    def_.name = tokens[1];
    def_.kind = *kind;
    seen_header_ = true;
  }

  void parse_elements(const std::vector<std::string>& tokens) {
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      if (ids_.count(tokens[i]) != 0) {
        fail("duplicate element label: " + tokens[i]);
      }
      ids_[tokens[i]] = static_cast<ElementId>(def_.labels.size());
      def_.labels.push_back(tokens[i]);
    }
  }

  void parse_map(const std::vector<std::string>& tokens,
                 std::map<ElementId, ElementId>& entries) {
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      const auto eq = tokens[i].find('=');
      if (eq == std::string::npos) {
        fail("expected <label>=<label>, got: " + tokens[i]);
      }
      const ElementId from = lookup(tokens[i].substr(0, eq));
      const ElementId to = lookup(tokens[i].substr(eq + 1));
      if (entries.count(from) != 0) {
        fail("re-declared map entry for " + tokens[i].substr(0, eq));
      }
      entries[from] = to;
    }
  }

  void parse_prod(const std::vector<std::string>& tokens) {
    if (tokens.size() != 5 || tokens[3] != "=") {
      fail("expected: prod <a> <b> = <c>");
    }
    const ElementId a = lookup(tokens[1]);
    const ElementId b = lookup(tokens[2]);
    const ElementId c = lookup(tokens[4]);
    if (products_.count({a, b}) != 0) {
      fail("re-declared product " + tokens[1] + " " + tokens[2]);
    }
    products_[{a, b}] = c;
  }

  void parse_order(const std::vector<std::string>& tokens) {
    if (tokens.size() != 4 || tokens[2] != "<=") {
      fail("expected: order <a> <= <b>");
    }
    order_pairs_.emplace_back(lookup(tokens[1]), lookup(tokens[3]));
    has_order_ = true;
  }

  void parse_set(const std::vector<std::string>& tokens, IdSet& set) {
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      set.push_back(lookup(tokens[i]));
    }
  }

  void finish() {
    if (!seen_header_) {
      throw ParseError(line_number_ == 0 ? 1 : line_number_,
                       "missing structure line");
    }
    const int n = def_.size();
    def_.table = OpTable(n);
    for (const auto& [cell, value] : products_) {
      def_.table.set(cell.first, cell.second, value);
    }
    def_.dmap.resize(static_cast<std::size_t>(n));
    for (ElementId x = 0; x < n; ++x) {
      auto it = dmap_entries_.find(x);
      if (it == dmap_entries_.end()) {
        throw ParseError(line_number_,
                         "missing D entry for " + def_.label(x));
      }
      def_.dmap[static_cast<std::size_t>(x)] = it->second;
    }
    if (has_rmap_) {
      std::vector<ElementId> rmap(static_cast<std::size_t>(n));
      for (ElementId x = 0; x < n; ++x) {
        auto it = rmap_entries_.find(x);
        if (it == rmap_entries_.end()) {
          throw ParseError(line_number_,
                           "missing R entry for " + def_.label(x));
        }
        rmap[static_cast<std::size_t>(x)] = it->second;
      }
      def_.rmap = std::move(rmap);
    }
    if (has_order_) {
      Relation order(n);
      for (const auto& [a, b] : order_pairs_) {
        order.set(a, b);
      }
      def_.order = order.reflexive_closure();
    }
    if (has_insertions_) {
      def_.insertions = make_id_set(insertions_);
    }
    if (has_surjections_) {
      def_.surjections = make_id_set(surjections_);
    }
  }

  const std::string& text_;
  int line_number_ = 0;
  bool seen_header_ = false;
  bool has_rmap_ = false;
  bool has_order_ = false;
  bool has_insertions_ = false;
  bool has_surjections_ = false;
  StructureDef def_;
  std::map<std::string, ElementId> ids_;
  std::map<ElementId, ElementId> dmap_entries_;
  std::map<ElementId, ElementId> rmap_entries_;
  std::map<std::pair<ElementId, ElementId>, ElementId> products_;
  std::vector<std::pair<ElementId, ElementId>> order_pairs_;
  IdSet insertions_;
  IdSet surjections_;
};

}  // namespace

StructureDef parse_structure(const std::string& text) {
  return Parser(text).run();
}

StructureDef parse_structure_file(const std::string& path) {
  std::ifstream stream(path);
  if (!stream) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << stream.rdbuf();
  return parse_structure(buffer.str());
}

std::string print_structure(const StructureDef& def) {
  std::ostringstream out;
  out << "structure " << (def.name.empty() ? "unnamed" : def.name) << " : "
      << kind_name(def.kind) << "\n";
  const int n = def.size();
  if (n == 0) {
    return out.str();
  }
  out << "elements";
  for (const std::string& label : def.labels) {
    out << " " << label;
  }
  out << "\nD";
  for (ElementId x = 0; x < n; ++x) {
    out << " " << def.label(x) << "=" << def.label(def.dom(x));
  }
  out << "\n";
  if (def.rmap) {
    out << "R";
    for (ElementId x = 0; x < n; ++x) {
      out << " " << def.label(x) << "=" << def.label(def.ran(x));
    }
    out << "\n";
  }
  for (ElementId x = 0; x < n; ++x) {
    for (ElementId y = 0; y < n; ++y) {
      if (def.defined(x, y)) {
        out << "prod " << def.label(x) << " " << def.label(y) << " = "
            << def.label(def.product(x, y)) << "\n";
      }
    }
  }
  if (def.order) {
    // Diagonal pairs included so that a discrete order still round-trips.
    for (const auto& [a, b] : def.order->pairs()) {
      out << "order " << def.label(a) << " <= " << def.label(b) << "\n";
    }
  }
  if (def.insertions) {
    out << "insertions";
    for (ElementId x : *def.insertions) {
      out << " " << def.label(x);
    }
    out << "\n";
  }
  if (def.surjections) {
    out << "surjections";
    for (ElementId x : *def.surjections) {
      out << " " << def.label(x);
    }
    out << "\n";
  }
  return out.str();
}

void write_structure_file(const StructureDef& def, const std::string& path) {
  std::ofstream stream(path);
  if (!stream) {
    throw std::runtime_error("cannot open " + path + " for writing");
  }
  stream << print_structure(def);
}

}  // namespace constelloid
