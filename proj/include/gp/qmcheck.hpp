#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gp {

// Plain finite graph used by the verification layer. Vertices are
// indices; `labels` is optional decoration for reports. The interior
// masks matter for graphs that are windows into an infinite graph
// (balls): axioms are only asserted on configurations whose quantified
// vertices are interior, and the deep mask tightens that by one more
// step for the quadrangle condition.
class FiniteGraph {
public:
  explicit FiniteGraph(int n = 0);

  int add_vertices(int k);
  void add_edge(int a, int b);

  int size() const { return static_cast<int>(nbr_.size()); }
  int edge_count() const { return edge_count_; }
  bool adjacent(int a, int b) const;
  const std::vector<int>& neighbors(int v) const { return nbr_[v]; }

  void set_interior(std::vector<char> mask);
  void set_deep_interior(std::vector<char> mask);
  bool interior(int v) const {
    return interior_.empty() || interior_[v] != 0;
  }
  bool deep_interior(int v) const {
    return deep_interior_.empty() ? interior(v) : deep_interior_[v] != 0;
  }

  std::vector<int> distances_from(int source) const;  // -1 when unreachable
  std::vector<std::vector<int>> all_distances() const;
  bool connected() const;

  std::vector<std::string> labels;

private:
  // Sorted neighbor lists only; an adjacency matrix would be quadratic
  // in memory and balls can hold 10^5 vertices.
  std::vector<std::vector<int>> nbr_;
  std::vector<char> interior_;
  std::vector<char> deep_interior_;
  int edge_count_ = 0;
};

FiniteGraph induced_subgraph(const FiniteGraph& g,
                             const std::vector<int>& verts);

// Lines of "a b" or "a -- b"; '#' starts a comment. Vertex names are
// indexed in order of first appearance.
FiniteGraph parse_edge_list(const std::string& text);

struct AxiomReport {
  bool triangle_ok = true;
  bool quadrangle_ok = true;
  bool k4minus_free = true;
  bool k32_free = true;
  // Filled in on failure.
  std::array<int, 3> triangle_witness{{-1, -1, -1}};    // u, v, w
  std::array<int, 4> quadrangle_witness{{-1, -1, -1, -1}};  // u, z, v, w
  std::array<int, 4> k4minus_witness{{-1, -1, -1, -1}};  // edge a,b; nonedge x,y
  std::array<int, 5> k32_witness{{-1, -1, -1, -1, -1}};  // part {a,b}; part {x,y,z}
  bool ok() const {
    return triangle_ok && quadrangle_ok && k4minus_free && k32_free;
  }
};

// Weak modularity (triangle and quadrangle conditions) plus the two
// forbidden induced subgraphs.
AxiomReport check_axioms(const FiniteGraph& g);

// One hyperplane: an equivalence class of edges under "two sides of a
// triangle" and "opposite sides of an induced square", together with
// the sector decomposition it induces.
struct EdgeClass {
  std::pair<int, int> representative;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> sectors;
  std::vector<int> sector_index;  // per vertex, index into sectors
  std::vector<int> carrier;       // endpoints of member edges, ascending

  bool separates(int x, int y) const {
    return sector_index[x] != sector_index[y];
  }
};

std::vector<EdgeClass> hyperplanes(const FiniteGraph& g);

// The unique vertex of Y through which every geodesic from x into Y can
// be routed, when it exists.
std::optional<int> gate(const FiniteGraph& g, const std::vector<int>& Y,
                        int x);

// Gate existence for every vertex, cross-checked against the criterion
// "connected, locally convex, contains its triangles". The two answers
// match on quasi-median graphs; a mismatch throws.
bool is_gated(const FiniteGraph& g, const std::vector<int>& Y);

// Intersection of all sectors containing S. Postcondition (gated,
// contains S) is verified.
std::vector<int> gated_hull(const FiniteGraph& g, const std::vector<int>& S);

// Interval-closure fixpoint, cross-checked against the intersection of
// all minimal multisectors containing S.
std::vector<int> convex_hull(const FiniteGraph& g, const std::vector<int>& S);

std::vector<int> interval(const FiniteGraph& g, int x, int y);
bool is_interval_median(const FiniteGraph& g, int x, int y);

struct Prism {
  std::vector<int> classes;   // indices into hyperplanes(g)
  std::vector<int> vertices;  // intersection of the carriers
};

struct PrismReport {
  std::vector<Prism> prisms;
  int dimension = 0;
};

// Maximal families of pairwise-transverse hyperplanes and their
// carriers' intersections. Each prism is verified to be a product of
// cliques (adjacency = Hamming distance one on sector coordinates).
PrismReport maximal_prisms(const FiniteGraph& g);
int cubical_dimension(const FiniteGraph& g);

struct ProjectionReport {
  bool lipschitz_ok = true;
  bool separation_ok = true;
};

// For gated Y: the gate map is 1-Lipschitz, and the hyperplanes
// separating two gates are exactly those separating the originals and
// crossing Y.
ProjectionReport projection_checks(const FiniteGraph& g,
                                   const std::vector<int>& Y);

// Pairwise intersecting gated subgraphs have a common vertex.
bool helly_check(const FiniteGraph& g,
                 const std::vector<std::vector<int>>& family);

// Exact isomorphism via color refinement plus backtracking. Rejects
// graphs above 200 vertices.
bool graphs_isomorphic(const FiniteGraph& a, const FiniteGraph& b);

} // namespace gp
