#pragma once

#include <array>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace gp {

// Finite simplicial graph with named vertices. Declaration order is
// significant: it is the tie-breaking order used by every downstream
// consumer (canonical word forms, ball enumeration, report output), so
// vertices are exposed through stable integer indices.
class SimplicialGraph {
public:
  // Returns the index of the new vertex. Names must be unique.
  int add_vertex(const std::string& name);

  // Endpoints must be distinct, declared vertices; an edge may be
  // declared only once.
  void add_edge(const std::string& a, const std::string& b);
  void add_edge(int a, int b);

  int vertex_count() const { return static_cast<int>(names_.size()); }
  const std::string& vertex_name(int v) const { return names_.at(v); }
  const std::vector<std::string>& vertex_names() const { return names_; }

  // Index lookup; -1 when the name is not declared.
  int find_vertex(const std::string& name) const;
  // As above but throws domain_error("no such vertex: ...").
  int require_vertex(const std::string& name) const;

  bool adjacent(int a, int b) const { return adj_.at(a).at(b) != 0; }
  const std::vector<int>& neighbors(int v) const { return nbr_.at(v); }
  int edge_count() const { return edge_count_; }

  // Neighbors of v, ascending. Unknown names throw.
  std::vector<int> link(int v) const;
  // link(v) plus v itself, ascending.
  std::vector<int> star(int v) const;

  bool is_complete(const std::vector<int>& subset) const;

  // Connected components of the complement of the induced subgraph on
  // `subset`. Components are listed by smallest member, members ascending.
  std::vector<std::vector<int>> complement_components(
      const std::vector<int>& subset) const;

private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<std::vector<char>> adj_;
  std::vector<std::vector<int>> nbr_;
  int edge_count_ = 0;
};

struct SquareFreeResult {
  bool square_free = true;
  // An induced 4-cycle in cyclic order, filled in when square_free is false.
  std::array<int, 4> witness{{-1, -1, -1, -1}};
};

// True iff the graph has no induced 4-cycle.
SquareFreeResult is_square_free(const SimplicialGraph& g);

// Exact maximum clique size via branch and bound. Graphs above the cap
// are rejected ("graph too large for exact clique").
int clique_number(const SimplicialGraph& g, int cap = 24);

struct Coloring {
  int colors = 0;
  std::vector<int> color;  // one entry per vertex, values in [0, colors)
};

// Exact chromatic number via backtracking, together with a proper
// coloring using exactly that many colors. Graphs above the cap are
// rejected.
Coloring chromatic_number(const SimplicialGraph& g, int cap = 16);

// All unordered partitions of `subset` into halves (L1, L2) such that
// every L1-vertex is adjacent to every L2-vertex, i.e. the induced
// subgraph is the join L1 * L2. Empty when the induced subgraph is not
// a join (equivalently: its complement is connected).
std::vector<std::pair<std::vector<int>, std::vector<int>>> join_decompositions(
    const SimplicialGraph& g, const std::vector<int>& subset);

} // namespace gp
