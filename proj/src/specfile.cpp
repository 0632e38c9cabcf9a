#include "gp/specfile.hpp"

#include "gp/error.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace gp {

namespace {

[[noreturn]] void fail(int line, const std::string& msg) {
  throw parse_error("line " + std::to_string(line) + ": " + msg);
}

struct Line {
  int no = 0;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(const std::string& text) {
  std::vector<Line> lines;
  std::istringstream in(text);
  std::string raw;
  for (int no = 1; std::getline(in, raw); ++no) {
    size_t hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    Line line;
    line.no = no;
    std::string tok;
    while (ls >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

GroupDescriptor load_table_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot read table file '" + path + "'");
  long long n = 0;
  if (!(in >> n) || n < 1)
    throw parse_error("table file '" + path +
                      "' must start with the group order");
  if (n > 512)
    throw parse_error("table file '" + path + "' order is too large");
  std::vector<std::vector<long long>> mul(n, std::vector<long long>(n));
  for (long long r = 0; r < n; ++r)
    for (long long c = 0; c < n; ++c)
      if (!(in >> mul[r][c]))
        throw parse_error("table file '" + path + "' has too few entries");
  long long extra = 0;
  if (in >> extra)
    throw parse_error("table file '" + path + "' has trailing entries");
  try {
    return GroupDescriptor::table(mul);
  } catch (const domain_error& e) {
    throw parse_error("table file '" + path + "': " + e.what());
  }
}

GroupDescriptor parse_group(const std::string& text,
                            const std::string& table_dir, int line) {
  if (text == "Z") return GroupDescriptor::integers();
  if (text.size() > 1 && text[0] == 'C') {
    const std::string digits = text.substr(1);
    if (!std::all_of(digits.begin(), digits.end(),
                     [](unsigned char c) { return std::isdigit(c); }))
      fail(line, "malformed group '" + text + "'");
    long long n = 0;
    try {
      n = std::stoll(digits);
    } catch (const std::exception&) {
      fail(line, "malformed group '" + text + "'");
    }
    if (n == 1) fail(line, "trivial vertex group");
    if (n < 1) fail(line, "malformed group '" + text + "'");
    return GroupDescriptor::cyclic(n);
  }
  if (text.rfind("table:", 0) == 0) {
    std::string path = text.substr(6);
    if (path.empty()) fail(line, "malformed group '" + text + "'");
    if (!table_dir.empty() && path.front() != '/')
      path = table_dir + "/" + path;
    try {
      // Order-1 tables are rejected by the descriptor itself.
      return load_table_group(path);
    } catch (const parse_error& e) {
      std::string what = e.what();
      if (what.rfind("line ", 0) == 0) throw;
      fail(line, what);
    }
  }
  fail(line, "malformed group '" + text + "'");
}

} // namespace

SpecFile parse_spec_file(const std::string& text,
                         const std::string& table_dir) {
  std::vector<Line> lines = tokenize(text);

  // First pass builds the graph and groups; word and gens lines wait
  // until the whole spec exists so they can reference any vertex.
  SimplicialGraph graph;
  std::vector<GroupDescriptor> groups;
  std::vector<std::string> group_texts;
  std::vector<const Line*> deferred;
  for (const Line& line : lines) {
    const std::vector<std::string>& tok = line.tokens;
    if (tok[0] == "vertex") {
      if (tok.size() < 3) fail(line.no, "vertex needs a name and a group");
      if (tok.size() > 3)
        fail(line.no, "unexpected trailing input '" + tok[3] + "'");
      if (graph.find_vertex(tok[1]) != -1)
        fail(line.no, "duplicate vertex '" + tok[1] + "'");
      groups.push_back(parse_group(tok[2], table_dir, line.no));
      group_texts.push_back(tok[2]);
      graph.add_vertex(tok[1]);
    } else if (tok[0] == "edge") {
      if (tok.size() < 3) fail(line.no, "edge needs two vertices");
      if (tok.size() > 3)
        fail(line.no, "unexpected trailing input '" + tok[3] + "'");
      int a = graph.find_vertex(tok[1]);
      if (a == -1) fail(line.no, "unknown vertex '" + tok[1] + "'");
      int b = graph.find_vertex(tok[2]);
      if (b == -1) fail(line.no, "unknown vertex '" + tok[2] + "'");
      try {
        graph.add_edge(a, b);
      } catch (const domain_error& e) {
        fail(line.no, e.what());
      }
    } else if (tok[0] == "word" || tok[0] == "gens") {
      deferred.push_back(&line);
    } else {
      fail(line.no, "unknown directive '" + tok[0] + "'");
    }
  }

  SpecFile f{GraphProductSpec(std::move(graph), std::move(groups)),
             std::move(group_texts),
             {},
             {}};
  GeneratingSets sets(f.spec);
  for (const Line* linep : deferred) {
    const Line& line = *linep;
    const std::vector<std::string>& tok = line.tokens;
    if (tok.size() < 3)
      fail(line.no, std::string(tok[0]) + (tok[0] == "word"
                                               ? " needs a name and an expression"
                                               : " needs a vertex and a list"));
    if (tok.size() > 3)
      fail(line.no, "unexpected trailing input '" + tok[3] + "'");
    if (tok[0] == "word") {
      if (tok[1] == "e") fail(line.no, "word name 'e' is reserved");
      for (const auto& [name, word] : f.words)
        if (name == tok[1]) fail(line.no, "duplicate word '" + tok[1] + "'");
      try {
        f.words.emplace_back(tok[1], reduce(f.spec, parse_word(f.spec, tok[2])));
      } catch (const parse_error& e) {
        fail(line.no, e.what());
      } catch (const domain_error& e) {
        fail(line.no, e.what());
      }
    } else {
      int v = f.spec.graph().find_vertex(tok[1]);
      if (v == -1) fail(line.no, "unknown vertex '" + tok[1] + "'");
      for (const auto& [seen, list] : f.gens_overrides)
        if (seen == v) fail(line.no, "duplicate gens for vertex '" + tok[1] + "'");
      std::vector<GroupElement> ks;
      std::istringstream ls(tok[2]);
      std::string piece;
      while (std::getline(ls, piece, ',')) {
        try {
          size_t used = 0;
          ks.push_back(std::stoll(piece, &used));
          if (used != piece.size()) throw std::invalid_argument(piece);
        } catch (const std::exception&) {
          fail(line.no, "malformed generator list '" + tok[2] + "'");
        }
      }
      if (ks.empty()) fail(line.no, "malformed generator list '" + tok[2] + "'");
      try {
        sets.set(v, ks);
      } catch (const domain_error& e) {
        fail(line.no, e.what());
      }
      f.gens_overrides.emplace_back(v, std::move(ks));
    }
  }
  std::sort(f.gens_overrides.begin(), f.gens_overrides.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return f;
}

std::string format_spec_file(const SpecFile& f) {
  const SimplicialGraph& g = f.spec.graph();
  std::ostringstream out;
  for (int v = 0; v < g.vertex_count(); ++v)
    out << "vertex " << g.vertex_name(v) << " " << f.group_texts[v] << "\n";
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int w : g.neighbors(v))
      if (v < w)
        out << "edge " << g.vertex_name(v) << " " << g.vertex_name(w) << "\n";
  for (const auto& [v, ks] : f.gens_overrides) {
    out << "gens " << g.vertex_name(v) << " ";
    for (size_t i = 0; i < ks.size(); ++i)
      out << (i ? "," : "") << ks[i];
    out << "\n";
  }
  for (const auto& [name, word] : f.words)
    out << "word " << name << " " << format_word(f.spec, word) << "\n";
  return out.str();
}

GeneratingSets generating_sets(const SpecFile& f) {
  GeneratingSets sets(f.spec);
  for (const auto& [v, ks] : f.gens_overrides) sets.set(v, ks);
  return sets;
}

NormalWord resolve_word(const SpecFile& f, const std::string& token) {
  for (const auto& [name, word] : f.words)
    if (name == token) return word;
  return reduce(f.spec, parse_word(f.spec, token));
}

} // namespace gp
