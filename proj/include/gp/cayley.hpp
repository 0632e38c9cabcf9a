#pragma once

#include "gp/qmcheck.hpp"
#include "gp/words.hpp"

#include <array>
#include <compare>
#include <map>
#include <string>
#include <vector>

namespace gp {

// A labelled edge of a ball: to = from * (vertex : elem).
struct BallEdge {
  int from = -1;
  int to = -1;
  int vertex = -1;
  GroupElement elem = 0;
};

// Finite window of the product's Cayley graph around the identity.
// Holds every element g of length <= radius whose syllable values (for
// integer vertex groups) stay within the enumeration bound. Edges join any two stored words differing by a single
// syllable, so the visible part of every clique stays complete and the
// ball is an induced subgraph of the full Cayley graph. A vertex is
// flagged truncated when some within-radius clique neighbor was
// dropped by the bound.
class Ball {
public:
  // The ball and the words it stores point back into the spec, so the
  // spec must outlive the ball. Rvalue specs are rejected outright.
  Ball(const GraphProductSpec& spec, int radius, long long bound,
       int size_cap);
  Ball(GraphProductSpec&&, int, long long, int) = delete;

  const GraphProductSpec& spec() const { return *spec_; }
  const NormalWord& center() const { return vertices_[0]; }
  int radius() const { return radius_; }
  long long bound() const { return bound_; }

  int size() const { return static_cast<int>(vertices_.size()); }
  const NormalWord& word(int v) const { return vertices_[v]; }
  int index_of(const NormalWord& w) const;  // -1 when absent
  int layer(int v) const { return layer_[v]; }
  bool truncated(int v) const { return truncated_[v] != 0; }
  const std::vector<BallEdge>& edges() const { return edges_; }

private:
  const GraphProductSpec* spec_;
  int radius_;
  long long bound_;
  std::vector<NormalWord> vertices_;
  std::map<NormalWord, int> index_;
  std::vector<int> layer_;
  std::vector<char> truncated_;
  std::vector<BallEdge> edges_;
};

Ball ball(const GraphProductSpec& spec, int radius, long long bound,
          int size_cap = 200000);
Ball ball(GraphProductSpec&&, int, long long, int = 200000) = delete;

FiniteGraph to_graph(const Ball& b);  // labels are formatted words

// Mask selecting vertices at distance <= radius - margin from the
// center, optionally dropping truncated ones.
std::vector<char> interior_mask(const Ball& b, int margin,
                                bool exclude_truncated = false);

int distance(const GraphProductSpec& spec, const NormalWord& g,
             const NormalWord& h);

// Vertices of the geodesic from g to h read off the canonical form of
// g^-1 h, endpoints included.
std::vector<NormalWord> geodesic(const GraphProductSpec& spec,
                                 const NormalWord& g, const NormalWord& h);

// Identifies the hyperplane an edge is dual to. Two edges are dual to
// the same hyperplane exactly when their keys are equal.
struct HyperplaneKey {
  int label = -1;
  NormalWord base;

  friend bool operator==(const HyperplaneKey& a, const HyperplaneKey& b) {
    return a.label == b.label && a.base == b.base;
  }
  friend std::strong_ordering operator<=>(const HyperplaneKey& a,
                                          const HyperplaneKey& b) {
    if (auto c = a.label <=> b.label; c != 0) return c;
    return a.base <=> b.base;
  }
};

HyperplaneKey hyperplane_of_edge(const GraphProductSpec& spec,
                                 const NormalWord& g, Syllable s);

// Keys collected along a geodesic; their number equals the distance.
std::vector<HyperplaneKey> separating_hyperplanes(const GraphProductSpec& spec,
                                                  const NormalWord& g,
                                                  const NormalWord& h);

// Whether two hyperplanes cross. This needs adjacent labels plus a
// vertex common to both carriers; the latter is a double-coset
// membership question answered by greedily stripping head syllables.
bool transverse(const GraphProductSpec& spec, const HyperplaneKey& a,
                const HyperplaneKey& b);

// Projection of g onto the clique base<G_u>: base times the head
// syllable of base^-1 g at u, when present.
NormalWord gate_in_clique(const GraphProductSpec& spec, const NormalWord& g,
                          const NormalWord& base, int u);

// Per-vertex generating sets for the weighted (word) metric. Copies
// the spec's descriptors; overrides are validated on assignment.
class GeneratingSets {
public:
  explicit GeneratingSets(const GraphProductSpec& spec);
  void set(int vertex, const std::vector<GroupElement>& gens);
  const GroupDescriptor& group(int v) const;

private:
  std::vector<GroupDescriptor> groups_;
};

long long weighted_distance(const GraphProductSpec& spec,
                            const GeneratingSets& gens, const NormalWord& g,
                            const NormalWord& h);

struct QuasiMedianTriple {
  int x = -1;
  int y = -1;
  int z = -1;
  int size = 0;
};

// The unique minimal-size equilateral median triangle of (x, y, z),
// found by brute force over the gated hull inside the ball. Errors
// with "increase radius" when the hull cannot be trusted to fit.
QuasiMedianTriple quasi_median(const Ball& b, int x, int y, int z);

// An (n+1) x (n+1) vertex grid spanned by alternating syllables along
// an induced square of the graph, verified isometric for the L1
// metric.
std::vector<std::vector<NormalWord>> flat_square_witness(
    const GraphProductSpec& spec, const std::array<int, 4>& square, int n);

std::string ball_dot(const Ball& b);
std::string ball_json(const Ball& b);

} // namespace gp
