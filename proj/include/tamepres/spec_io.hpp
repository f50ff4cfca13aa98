#pragma once

#include <string>

#include "tamepres/tameness.hpp"

namespace tamepres {

struct Options {
  std::size_t cert_cap = 64;
  long long model_mod = 5;
  long long model_quot = 3;
  long long collection_fuel = 1'000'000;

  friend bool operator==(const Options&, const Options&) = default;
};

struct ParsedSpec {
  GroupSpec group;
  ModuleSpec module;
  Options options;
};

// Spec file grammar (UTF-8, '#' comments):
//
//   group {
//     layers 2
//     ranks 2 1
//     gens x1 y1 z
//     comm [x1, y1] = z
//   }
//   module {
//     gens a
//     ann layer=1 gen=a 1 + x1 - y1
//     ann layer=2 gen=a z - 2
//     rel gen=a 1 + x1 - y1
//     rel gen=a z - 2
//   }
//   options {
//     cert_cap 64
//     model_mod 5
//     model_quot 3
//   }
//
// Omitted generator pairs commute. A comm line may give either
// orientation of a pair; the table entry is derived by exact collection.
ParsedSpec parse_spec_file(const std::string& text,
                           const std::string& filename = "<spec>");
ParsedSpec load_spec_file(const std::string& path);

// Ring expressions: signed integer-coefficient sums of group-word
// monomials, e.g. "1 + x1 - y1", "2 z^-1", "3 x1^2 y1^-1".
RingElement parse_ring_expression(const GroupSpec& spec,
                                  const std::string& text,
                                  const std::string& filename = "<expr>",
                                  int line = 0);

}  // namespace tamepres
