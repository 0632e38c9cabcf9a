#include "gp/walls.hpp"

#include "gp/error.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace gp {

namespace {

using Mask = std::vector<unsigned long long>;

Mask make_mask(const std::vector<int>& sector, int ground) {
  Mask m((ground + 63) / 64, 0);
  for (int p : sector) m[p / 64] |= 1ull << (p % 64);
  return m;
}

// Proper inclusion; sector sizes stand in for a popcount.
bool proper_subset(const Mask& a, size_t na, const Mask& b, size_t nb) {
  if (na >= nb) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

std::vector<std::vector<Mask>> sector_masks(const SpaceWithPartitions& S) {
  std::vector<std::vector<Mask>> masks(S.wall_count());
  for (int w = 0; w < S.wall_count(); ++w)
    for (const auto& sector : S.wall(w))
      masks[w].push_back(make_mask(sector, S.ground()));
  return masks;
}

} // namespace

SpaceWithPartitions::SpaceWithPartitions(
    int ground, std::vector<std::vector<std::vector<int>>> walls)
    : ground_(ground), walls_(std::move(walls)) {
  if (ground_ < 1) throw domain_error("ground set must be nonempty");
  sector_of_.resize(walls_.size());
  for (size_t w = 0; w < walls_.size(); ++w) {
    const std::string tag = "wall " + std::to_string(w) + ": ";
    auto& sectors = walls_[w];
    if (sectors.size() < 2)
      throw domain_error(tag + "needs at least two sectors");
    auto& where = sector_of_[w];
    where.assign(ground_, -1);
    for (size_t s = 0; s < sectors.size(); ++s) {
      if (sectors[s].empty()) throw domain_error(tag + "empty sector");
      std::sort(sectors[s].begin(), sectors[s].end());
      for (int p : sectors[s]) {
        if (p < 0 || p >= ground_)
          throw domain_error(tag + "point out of range");
        if (where[p] != -1) throw domain_error(tag + "sectors overlap");
        where[p] = static_cast<int>(s);
      }
    }
    for (int p = 0; p < ground_; ++p)
      if (where[p] == -1)
        throw domain_error(tag + "sectors do not cover the ground set");
  }

  // Whenever a sector of one wall sits properly inside a sector A2 of
  // another, all but one remaining sector of the first wall must sit
  // inside A2 as well, and the exception must contain every other
  // sector of the second wall. Same-wall and indistinguishable pairs
  // have no proper inclusions, so they are skipped implicitly.
  auto masks = sector_masks(*this);
  for (size_t w1 = 0; w1 < walls_.size(); ++w1)
    for (size_t w2 = 0; w2 < walls_.size(); ++w2) {
      if (w1 == w2) continue;
      for (size_t j = 0; j < walls_[w2].size(); ++j) {
        int outside = -1;
        bool witness = false, split = false;
        for (size_t i = 0; i < walls_[w1].size(); ++i) {
          if (proper_subset(masks[w1][i], walls_[w1][i].size(), masks[w2][j],
                            walls_[w2][j].size())) {
            witness = true;
          } else if (outside == -1) {
            outside = static_cast<int>(i);
          } else {
            split = true;
          }
        }
        if (!witness) continue;
        bool ok = !split && outside != -1;
        for (size_t k = 0; ok && k < walls_[w2].size(); ++k)
          if (k != j)
            ok = proper_subset(masks[w2][k], walls_[w2][k].size(),
                               masks[w1][outside], walls_[w1][outside].size());
        if (!ok)
          throw domain_error("walls " + std::to_string(w1) + " and " +
                             std::to_string(w2) +
                             " violate the nesting condition");
      }
    }
}

bool SpaceWithPartitions::distinguishable(int w1, int w2) const {
  auto normal = [](std::vector<std::vector<int>> sectors) {
    std::sort(sectors.begin(), sectors.end());
    return sectors;
  };
  return normal(walls_[w1]) != normal(walls_[w2]);
}

bool valid_orientation(const SpaceWithPartitions& S, const Orientation& o) {
  if (static_cast<int>(o.size()) != S.wall_count())
    throw domain_error("orientation size mismatch");
  for (int w = 0; w < S.wall_count(); ++w)
    if (o[w] < 0 || o[w] >= static_cast<int>(S.wall(w).size()))
      throw domain_error("orientation sector out of range");
  auto masks = sector_masks(S);
  for (int w1 = 0; w1 < S.wall_count(); ++w1)
    for (int w2 = 0; w2 < S.wall_count(); ++w2) {
      if (w1 == w2) continue;
      const auto& chosen = S.wall(w1)[o[w1]];
      for (size_t j = 0; j < S.wall(w2).size(); ++j)
        if (proper_subset(masks[w1][o[w1]], chosen.size(), masks[w2][j],
                          S.wall(w2)[j].size()) &&
            o[w2] != static_cast<int>(j))
          return false;
    }
  return true;
}

Orientation principal_orientation(const SpaceWithPartitions& S, int x) {
  if (x < 0 || x >= S.ground()) throw domain_error("point out of range");
  Orientation o(S.wall_count());
  for (int w = 0; w < S.wall_count(); ++w) o[w] = S.sector_of(w, x);
  return o;
}

Cubulation quasi_cubulate(const SpaceWithPartitions& S, long long cap) {
  if (cap < 1) throw domain_error("orientation cap must be positive");
  const int W = S.wall_count();
  auto masks = sector_masks(S);

  // forced[w1][s1 * W + w2] is the unique sector of w2 containing
  // sector s1 of w1, or -1. Uniqueness holds because sectors of one
  // wall are disjoint.
  std::vector<std::vector<int>> forced(W);
  for (int w = 0; w < W; ++w)
    forced[w].assign(S.wall(w).size() * W, -1);
  for (int w1 = 0; w1 < W; ++w1)
    for (int w2 = 0; w2 < W; ++w2) {
      if (w1 == w2) continue;
      for (size_t i = 0; i < S.wall(w1).size(); ++i)
        for (size_t j = 0; j < S.wall(w2).size(); ++j)
          if (proper_subset(masks[w1][i], S.wall(w1)[i].size(), masks[w2][j],
                            S.wall(w2)[j].size()))
            forced[w1][i * W + w2] = static_cast<int>(j);
    }

  // Breadth-first closure of the principal orientations under valid
  // single-wall mutations. This materializes exactly the connected
  // component the result is defined on, instead of filtering the full
  // product of sector choices, which explodes on large wall systems.
  std::vector<Orientation> verts;
  std::map<Orientation, int> index;
  std::vector<std::pair<int, int>> edges;
  auto intern = [&](const Orientation& o) {
    auto [it, fresh] = index.emplace(o, static_cast<int>(verts.size()));
    if (fresh) {
      if (static_cast<long long>(verts.size()) >= cap)
        throw domain_error("cubulation exceeds the orientation cap");
      verts.push_back(o);
    }
    return it->second;
  };
  for (int x = 0; x < S.ground(); ++x) intern(principal_orientation(S, x));

  for (size_t head = 0; head < verts.size(); ++head) {
    Orientation o = verts[head];
    for (int w = 0; w < W; ++w) {
      const int keep = o[w];
      for (int s = 0; s < static_cast<int>(S.wall(w).size()); ++s) {
        if (s == keep) continue;
        // The source is valid, so only constraints touching w matter.
        bool ok = true;
        for (int w2 = 0; ok && w2 < W; ++w2) {
          if (w2 == w) continue;
          int f = forced[w][s * W + w2];
          if (f != -1 && o[w2] != f) ok = false;
          int f2 = forced[w2][o[w2] * W + w];
          if (f2 != -1 && f2 != s) ok = false;
        }
        if (!ok) continue;
        o[w] = s;
        edges.emplace_back(static_cast<int>(head), intern(o));
        o[w] = keep;
      }
    }
  }

  Cubulation out;
  out.graph = FiniteGraph(static_cast<int>(verts.size()));
  for (auto [a, b] : edges) out.graph.add_edge(a, b);
  if (!out.graph.connected())
    throw domain_error("principal orientations are not connected");
  out.graph.labels.resize(verts.size());
  for (size_t i = 0; i < verts.size(); ++i) {
    std::string label;
    for (size_t w = 0; w < verts[i].size(); ++w) {
      if (w) label += '|';
      label += std::to_string(verts[i][w]);
    }
    out.graph.labels[i] = label;
  }
  out.orientations = std::move(verts);
  out.point_vertex.resize(S.ground());
  for (int x = 0; x < S.ground(); ++x)
    out.point_vertex[x] = index.at(principal_orientation(S, x));
  return out;
}

namespace {

void append_binary_walls(const EdgeClass& c, int n,
                         std::vector<std::vector<std::vector<int>>>& walls) {
  if (c.sectors.size() == 2) {
    walls.push_back({c.sectors[0], c.sectors[1]});
    return;
  }
  for (size_t s = 0; s < c.sectors.size(); ++s) {
    std::vector<int> rest;
    for (int v = 0; v < n; ++v)
      if (c.sector_index[v] != static_cast<int>(s)) rest.push_back(v);
    walls.push_back({c.sectors[s], rest});
  }
}

} // namespace

SpaceWithPartitions sector_walls(const FiniteGraph& g) {
  std::vector<std::vector<std::vector<int>>> walls;
  for (const EdgeClass& c : hyperplanes(g))
    append_binary_walls(c, g.size(), walls);
  return SpaceWithPartitions(g.size(), std::move(walls));
}

Cubulation cubulate_sector_walls(const FiniteGraph& g, long long cap) {
  return quasi_cubulate(sector_walls(g), cap);
}

bool self_cubulation_check(const FiniteGraph& g, long long cap) {
  std::vector<std::vector<std::vector<int>>> walls;
  for (const EdgeClass& c : hyperplanes(g)) walls.push_back(c.sectors);
  Cubulation cub =
      quasi_cubulate(SpaceWithPartitions(g.size(), std::move(walls)), cap);
  return graphs_isomorphic(cub.graph, g);
}

TreeFactors tree_embedding(const GraphProductSpec& spec, const Ball& ball,
                           const std::vector<int>& coloring) {
  const SimplicialGraph& gamma = spec.graph();
  if (static_cast<int>(coloring.size()) != gamma.vertex_count())
    throw domain_error("coloring size mismatch");
  int colors = 0;
  for (int c : coloring) {
    if (c < 0) throw domain_error("negative color");
    colors = std::max(colors, c + 1);
  }
  for (int v = 0; v < gamma.vertex_count(); ++v)
    for (int w : gamma.neighbors(v))
      if (coloring[v] == coloring[w])
        throw domain_error("coloring is not proper");

  FiniteGraph g = to_graph(ball);
  std::vector<EdgeClass> classes = hyperplanes(g);
  std::map<std::pair<int, int>, int> edge_label;
  for (const BallEdge& e : ball.edges())
    edge_label[{e.from, e.to}] = e.vertex;

  TreeFactors out;
  for (int k = 0; k < colors; ++k) {
    std::vector<std::vector<std::vector<int>>> walls;
    for (const EdgeClass& c : classes)
      if (coloring[edge_label.at(c.edges[0])] == k)
        append_binary_walls(c, g.size(), walls);
    Cubulation cub =
        quasi_cubulate(SpaceWithPartitions(ball.size(), std::move(walls)));
    if (cub.graph.edge_count() != cub.graph.size() - 1)
      throw domain_error("tree factor has a cycle");
    out.factors.push_back(std::move(cub.graph));
    out.embedding.push_back(std::move(cub.point_vertex));
  }
  return out;
}

long long tree_distance(const TreeFactors& t, int x, int y) {
  long long total = 0;
  for (size_t k = 0; k < t.factors.size(); ++k) {
    const auto& emb = t.embedding[k];
    if (x < 0 || y < 0 || x >= static_cast<int>(emb.size()) ||
        y >= static_cast<int>(emb.size()))
      throw domain_error("point out of range");
    total += t.factors[k].distances_from(emb[x])[emb[y]];
  }
  return total;
}

WallFile parse_walls(const std::string& text) {
  std::vector<std::string> points;
  std::map<std::string, int> id;
  std::vector<std::vector<std::vector<int>>> walls;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& msg) -> void {
    throw parse_error("line " + std::to_string(lineno) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "point") {
      std::string name;
      if (!(ls >> name)) fail("point needs an id");
      if (id.count(name)) fail("duplicate point '" + name + "'");
      id.emplace(name, static_cast<int>(points.size()));
      points.push_back(name);
    } else if (tok == "wall") {
      std::string body;
      if (!(ls >> body)) fail("wall needs sectors");
      std::vector<std::vector<int>> sectors;
      std::stringstream sectors_in(body);
      std::string sector_text;
      while (std::getline(sectors_in, sector_text, '|')) {
        std::vector<int> sector;
        std::stringstream ids_in(sector_text);
        std::string one;
        while (std::getline(ids_in, one, ',')) {
          if (one.empty()) fail("empty point id");
          auto it = id.find(one);
          if (it == id.end()) fail("unknown point '" + one + "'");
          sector.push_back(it->second);
        }
        if (sector.empty()) fail("empty sector");
        sectors.push_back(std::move(sector));
      }
      walls.push_back(std::move(sectors));
    } else {
      fail("unknown directive '" + tok + "'");
    }
    std::string extra;
    if (ls >> extra) fail("unexpected trailing input '" + extra + "'");
  }
  try {
    return WallFile{std::move(points),
                    SpaceWithPartitions(static_cast<int>(id.size()),
                                        std::move(walls))};
  } catch (const domain_error& e) {
    throw parse_error(e.what());
  }
}

std::string format_walls(const WallFile& f) {
  std::string out;
  for (const std::string& p : f.points) out += "point " + p + "\n";
  for (int w = 0; w < f.space.wall_count(); ++w) {
    out += "wall ";
    const auto& sectors = f.space.wall(w);
    for (size_t s = 0; s < sectors.size(); ++s) {
      if (s) out += '|';
      for (size_t i = 0; i < sectors[s].size(); ++i) {
        if (i) out += ',';
        out += f.points[sectors[s][i]];
      }
    }
    out += '\n';
  }
  return out;
}

} // namespace gp
