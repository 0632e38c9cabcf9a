#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gp/cayley.hpp"
#include "gp/words.hpp"

namespace gp {

// A parsed product description file. Line-oriented grammar, one
// directive per line, '#' starting a comment:
//
//   vertex <name> <C<n> | Z | table:<path>>
//   edge <a> <b>
//   gens <vertex> <k1,k2,...>
//   word <name> <expression>
//
// Vertex declaration order is the canonical vertex order. Table paths
// are resolved against the directory handed to the parser and must
// hold the group's order followed by its row-major multiplication
// table, whitespace-separated.
struct SpecFile {
  GraphProductSpec spec;
  // Group field of each vertex line, verbatim, so printing a parsed
  // file reproduces it.
  std::vector<std::string> group_texts;
  // gens overrides by vertex index, ascending.
  std::vector<std::pair<int, std::vector<GroupElement>>> gens_overrides;
  // Named words in declaration order, stored in canonical form.
  std::vector<std::pair<std::string, NormalWord>> words;
};

// Fails with "line N: ..." diagnostics. table_dir is prepended to
// relative table paths.
SpecFile parse_spec_file(const std::string& text,
                         const std::string& table_dir = "");

// Canonical text form: vertices, edges, gens, words. Parsing the
// result reproduces the SpecFile, and printing a file that is already
// canonical reproduces it byte for byte.
std::string format_spec_file(const SpecFile& f);

// The word metric generators declared by the file: the group defaults
// with the gens lines applied.
GeneratingSets generating_sets(const SpecFile& f);

// The named word if one matches, otherwise the parsed and reduced
// expression.
NormalWord resolve_word(const SpecFile& f, const std::string& token);

} // namespace gp
