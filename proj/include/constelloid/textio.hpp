#pragma once

#include <stdexcept>
#include <string>

#include "constelloid/core.hpp"

namespace constelloid {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Line-oriented structure format.  '#' starts a comment line.
//
//   structure <name> : <kind>
//   elements <label> <label> ...
//   D <label>=<label> ...
//   R <label>=<label> ...
//   prod <a> <b> = <c>
//   order <a> <= <b>
//   insertions <label> ...
//   surjections <label> ...
//
// The order is closed reflexively after parsing.  Re-declared products and
// duplicate map entries are rejected with their line number.
StructureDef parse_structure(const std::string& text);

StructureDef parse_structure_file(const std::string& path);

// Inverse of parse_structure: parse(print(def)) == def.
std::string print_structure(const StructureDef& def);

void write_structure_file(const StructureDef& def, const std::string& path);

}  // namespace constelloid
