#pragma once

#include <string>
#include <vector>

#include "gp/cayley.hpp"
#include "gp/qmcheck.hpp"

namespace gp {

// A finite ground set together with a family of partitions (walls),
// each wall splitting the ground into at least two nonempty sectors.
// Construction validates the nesting condition: whenever a sector of
// one wall is properly contained in a sector of a distinguishable
// wall, the two walls must be nested. Sectors are kept sorted; walls
// keep their declaration order (duplicates are allowed and stay
// distinct).
class SpaceWithPartitions {
public:
  SpaceWithPartitions(int ground,
                      std::vector<std::vector<std::vector<int>>> walls);

  int ground() const { return ground_; }
  int wall_count() const { return static_cast<int>(walls_.size()); }
  const std::vector<std::vector<int>>& wall(int w) const { return walls_[w]; }
  int sector_of(int w, int point) const { return sector_of_[w][point]; }
  bool distinguishable(int w1, int w2) const;

private:
  int ground_;
  std::vector<std::vector<std::vector<int>>> walls_;
  std::vector<std::vector<int>> sector_of_;
};

// A choice of one sector per wall, stored as sector indices.
using Orientation = std::vector<int>;

// Valid iff choosing a sector forces the choice of every properly
// larger sector across distinguishable walls.
bool valid_orientation(const SpaceWithPartitions& S, const Orientation& o);

// Orients every wall toward the sector containing x. Always valid.
Orientation principal_orientation(const SpaceWithPartitions& S, int x);

struct Cubulation {
  FiniteGraph graph;  // the component containing the principal orientations
  std::vector<Orientation> orientations;  // one per graph vertex
  std::vector<int> point_vertex;          // ground point -> graph vertex
};

// Graph on all valid orientations, edges between orientations that
// differ on exactly one wall, restricted to the connected component of
// the principal orientations. The embedded point distances equal the
// number of separating walls. Throws when more than cap orientations
// get materialized.
Cubulation quasi_cubulate(const SpaceWithPartitions& S,
                          long long cap = 1000000);

// Binary walls {D, complement} for every sector D of every hyperplane
// of a quasi-median graph. The two walls arising from a 2-sector
// hyperplane coincide and are emitted once.
SpaceWithPartitions sector_walls(const FiniteGraph& g);

// quasi_cubulate(sector_walls(g)): a median graph whose embedded
// distances lie between the original ones and twice them.
Cubulation cubulate_sector_walls(const FiniteGraph& g,
                                 long long cap = 1000000);

// Quasi-cubulating the full sector decompositions (one wall per
// hyperplane, all its sectors as parts) must reproduce the graph.
bool self_cubulation_check(const FiniteGraph& g, long long cap = 1000000);

struct TreeFactors {
  std::vector<FiniteGraph> factors;  // one per color, each a tree
  // embedding[k][v]: factor-k vertex of ball vertex v
  std::vector<std::vector<int>> embedding;
};

// Splits the ball's binary wall system by a proper coloring of the
// defining graph (every hyperplane inherits the color of its label)
// and cubulates each color class separately. Same-colored hyperplanes
// are never transverse, so each factor is a tree.
TreeFactors tree_embedding(const GraphProductSpec& spec, const Ball& ball,
                           const std::vector<int>& coloring);

long long tree_distance(const TreeFactors& t, int x, int y);

// Line format: `point <id>` declarations first, then
// `wall <sector>|<sector>|...` with comma-separated point ids.
struct WallFile {
  std::vector<std::string> points;
  SpaceWithPartitions space;
};

WallFile parse_walls(const std::string& text);
std::string format_walls(const WallFile& f);

} // namespace gp
