#include "gp/qmcheck.hpp"

#include "gp/error.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace gp {

namespace {

constexpr int kPrismVertexCap = 1 << 14;
constexpr int kIsoVertexCap = 200;

void check_range(const FiniteGraph& g, int v) {
  if (v < 0 || v >= g.size()) throw domain_error("vertex out of range");
}

std::vector<int> sorted_unique(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Visits every induced square exactly once as (a, b, c, d) with edges
// ab, bc, cd, da and non-edges ac, bd. Uniqueness comes from forcing a
// to be the smallest corner and b < d.
template <typename F>
void for_each_induced_square(const FiniteGraph& g, F&& visit) {
  for (int a = 0; a < g.size(); ++a) {
    const auto& na = g.neighbors(a);
    for (size_t i = 0; i < na.size(); ++i) {
      int b = na[i];
      if (b <= a) continue;
      for (size_t j = i + 1; j < na.size(); ++j) {
        int d = na[j];
        if (g.adjacent(b, d)) continue;
        for (int c : g.neighbors(b)) {
          if (c <= a || c == d) continue;
          if (!g.adjacent(c, d) || g.adjacent(a, c)) continue;
          visit(a, b, c, d);
        }
      }
    }
  }
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Edge ids in lexicographic order of (min, max) endpoint pairs.
struct EdgeIndex {
  std::vector<std::pair<int, int>> edges;
  std::map<std::pair<int, int>, int> id;

  explicit EdgeIndex(const FiniteGraph& g) {
    for (int a = 0; a < g.size(); ++a)
      for (int b : g.neighbors(a))
        if (a < b) {
          id.emplace(std::pair{a, b}, static_cast<int>(edges.size()));
          edges.emplace_back(a, b);
        }
  }
  int of(int a, int b) const {
    if (a > b) std::swap(a, b);
    return id.at({a, b});
  }
};

} // namespace

FiniteGraph::FiniteGraph(int n) {
  if (n < 0) throw domain_error("negative vertex count");
  nbr_.resize(n);
}

int FiniteGraph::add_vertices(int k) {
  if (k < 0) throw domain_error("negative vertex count");
  int old = size();
  nbr_.resize(old + k);
  return old;
}

void FiniteGraph::add_edge(int a, int b) {
  if (a < 0 || b < 0 || a >= size() || b >= size())
    throw domain_error("vertex out of range");
  if (a == b) throw domain_error("loop edge");
  if (adjacent(a, b)) return;
  nbr_[a].insert(std::lower_bound(nbr_[a].begin(), nbr_[a].end(), b), b);
  nbr_[b].insert(std::lower_bound(nbr_[b].begin(), nbr_[b].end(), a), a);
  ++edge_count_;
}

bool FiniteGraph::adjacent(int a, int b) const {
  return std::binary_search(nbr_[a].begin(), nbr_[a].end(), b);
}

void FiniteGraph::set_interior(std::vector<char> mask) {
  if (static_cast<int>(mask.size()) != size())
    throw domain_error("mask size mismatch");
  interior_ = std::move(mask);
}

void FiniteGraph::set_deep_interior(std::vector<char> mask) {
  if (static_cast<int>(mask.size()) != size())
    throw domain_error("mask size mismatch");
  deep_interior_ = std::move(mask);
}

std::vector<int> FiniteGraph::distances_from(int source) const {
  check_range(*this, source);
  std::vector<int> dist(size(), -1);
  std::queue<int> queue;
  dist[source] = 0;
  queue.push(source);
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop();
    for (int w : nbr_[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push(w);
      }
  }
  return dist;
}

std::vector<std::vector<int>> FiniteGraph::all_distances() const {
  std::vector<std::vector<int>> dist;
  dist.reserve(size());
  for (int v = 0; v < size(); ++v) dist.push_back(distances_from(v));
  return dist;
}

bool FiniteGraph::connected() const {
  if (size() == 0) return true;
  auto dist = distances_from(0);
  return std::none_of(dist.begin(), dist.end(),
                      [](int d) { return d < 0; });
}

FiniteGraph induced_subgraph(const FiniteGraph& g,
                             const std::vector<int>& verts) {
  auto vs = sorted_unique(verts);
  for (int v : vs) check_range(g, v);
  FiniteGraph sub(static_cast<int>(vs.size()));
  for (size_t i = 0; i < vs.size(); ++i) {
    if (!g.labels.empty()) {
      if (sub.labels.empty()) sub.labels.resize(vs.size());
      sub.labels[i] = g.labels[vs[i]];
    }
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (g.adjacent(vs[i], vs[j]))
        sub.add_edge(static_cast<int>(i), static_cast<int>(j));
  }
  return sub;
}

FiniteGraph parse_edge_list(const std::string& text) {
  FiniteGraph g;
  std::map<std::string, int> index;
  auto intern = [&](const std::string& name) {
    auto it = index.find(name);
    if (it != index.end()) return it->second;
    int v = g.add_vertices(1);
    g.labels.push_back(name);
    index.emplace(name, v);
    return v;
  };

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream tokens(line);
    std::vector<std::string> words;
    std::string word;
    while (tokens >> word) words.push_back(word);
    if (words.empty()) continue;
    if (words.size() == 3 && words[1] == "--") words.erase(words.begin() + 1);
    if (words.size() == 1) {
      intern(words[0]);
      continue;
    }
    if (words.size() != 2)
      throw parse_error("line " + std::to_string(lineno) +
                        ": expected 'a b' or 'a -- b'");
    int a = intern(words[0]);
    int b = intern(words[1]);
    if (a == b)
      throw parse_error("line " + std::to_string(lineno) + ": loop edge");
    g.add_edge(a, b);
  }
  return g;
}

AxiomReport check_axioms(const FiniteGraph& g) {
  AxiomReport report;
  auto dist = g.all_distances();
  int n = g.size();

  auto common_neighbor_at = [&](int v, int w, int u, int k) {
    for (int x : g.neighbors(v))
      if (dist[u][x] == k && g.adjacent(x, w)) return true;
    return false;
  };

  // Triangle condition: adjacent v, w equidistant from u need a common
  // neighbor one step closer to u.
  for (int v = 0; v < n && report.triangle_ok; ++v) {
    if (!g.interior(v)) continue;
    for (int w : g.neighbors(v)) {
      if (w <= v || !g.interior(w)) continue;
      for (int u = 0; u < n; ++u) {
        if (!g.interior(u)) continue;
        int k = dist[u][v];
        if (k <= 0 || dist[u][w] != k) continue;
        if (!common_neighbor_at(v, w, u, k - 1)) {
          report.triangle_ok = false;
          report.triangle_witness = {u, v, w};
          break;
        }
      }
      if (!report.triangle_ok) break;
    }
  }

  // Quadrangle condition: two neighbors of z that are both one step
  // closer to u need a common neighbor two steps closer.
  for (int z = 0; z < n && report.quadrangle_ok; ++z) {
    if (!g.deep_interior(z)) continue;
    const auto& nz = g.neighbors(z);
    for (size_t i = 0; i < nz.size() && report.quadrangle_ok; ++i) {
      int v = nz[i];
      if (!g.deep_interior(v)) continue;
      for (size_t j = i + 1; j < nz.size(); ++j) {
        int w = nz[j];
        if (!g.deep_interior(w)) continue;
        for (int u = 0; u < n; ++u) {
          if (!g.deep_interior(u)) continue;
          int k = dist[u][z];
          if (k < 2 || dist[u][v] != k - 1 || dist[u][w] != k - 1) continue;
          if (!common_neighbor_at(v, w, u, k - 2)) {
            report.quadrangle_ok = false;
            report.quadrangle_witness = {u, z, v, w};
            break;
          }
        }
        if (!report.quadrangle_ok) break;
      }
    }
  }

  // Induced K4 minus an edge: an edge plus two non-adjacent common
  // neighbors.
  for (int a = 0; a < n && report.k4minus_free; ++a) {
    if (!g.interior(a)) continue;
    for (int b : g.neighbors(a)) {
      if (b <= a || !g.interior(b)) continue;
      const auto& na = g.neighbors(a);
      for (size_t i = 0; i < na.size() && report.k4minus_free; ++i) {
        int x = na[i];
        if (x == b || !g.interior(x) || !g.adjacent(x, b)) continue;
        for (size_t j = i + 1; j < na.size(); ++j) {
          int y = na[j];
          if (y == b || !g.interior(y) || !g.adjacent(y, b)) continue;
          if (!g.adjacent(x, y)) {
            report.k4minus_free = false;
            report.k4minus_witness = {a, b, x, y};
            break;
          }
        }
      }
      if (!report.k4minus_free) break;
    }
  }

  // Induced K32: a non-adjacent pair with three pairwise non-adjacent
  // common neighbors.
  for (int a = 0; a < n && report.k32_free; ++a) {
    if (!g.interior(a)) continue;
    for (int b = a + 1; b < n && report.k32_free; ++b) {
      if (!g.interior(b) || g.adjacent(a, b)) continue;
      std::vector<int> common;
      for (int x : g.neighbors(a))
        if (g.interior(x) && g.adjacent(x, b)) common.push_back(x);
      for (size_t i = 0; i < common.size() && report.k32_free; ++i)
        for (size_t j = i + 1; j < common.size() && report.k32_free; ++j)
          for (size_t l = j + 1; l < common.size(); ++l) {
            int x = common[i], y = common[j], z = common[l];
            if (!g.adjacent(x, y) && !g.adjacent(x, z) &&
                !g.adjacent(y, z)) {
              report.k32_free = false;
              report.k32_witness = {a, b, x, y, z};
              break;
            }
          }
    }
  }

  return report;
}

std::vector<EdgeClass> hyperplanes(const FiniteGraph& g) {
  EdgeIndex ei(g);
  int m = static_cast<int>(ei.edges.size());
  Dsu dsu(m);

  // Two sides of a triangle lie in one class.
  for (int e = 0; e < m; ++e) {
    auto [a, b] = ei.edges[e];
    for (int c : g.neighbors(a))
      if (c != b && g.adjacent(b, c)) {
        dsu.unite(e, ei.of(a, c));
        dsu.unite(e, ei.of(b, c));
      }
  }
  // Opposite sides of an induced square lie in one class.
  for_each_induced_square(g, [&](int a, int b, int c, int d) {
    dsu.unite(ei.of(a, b), ei.of(d, c));
    dsu.unite(ei.of(b, c), ei.of(a, d));
  });

  // Group by root, ordered by smallest member edge.
  std::map<int, std::vector<int>> members;
  for (int e = 0; e < m; ++e) members[dsu.find(e)].push_back(e);
  std::vector<std::vector<int>> groups;
  for (auto& [root, es] : members) groups.push_back(es);
  std::sort(groups.begin(), groups.end(),
            [](const auto& x, const auto& y) { return x[0] < y[0]; });

  std::vector<EdgeClass> classes;
  classes.reserve(groups.size());
  for (const auto& es : groups) {
    EdgeClass cls;
    std::set<std::pair<int, int>> member_set;
    std::vector<int> carrier;
    for (int e : es) {
      cls.edges.push_back(ei.edges[e]);
      member_set.insert(ei.edges[e]);
      carrier.push_back(ei.edges[e].first);
      carrier.push_back(ei.edges[e].second);
    }
    cls.representative = cls.edges.front();
    cls.carrier = sorted_unique(carrier);

    // Sectors: connected components once member edges are removed.
    cls.sector_index.assign(g.size(), -1);
    for (int start = 0; start < g.size(); ++start) {
      if (cls.sector_index[start] >= 0) continue;
      int id = static_cast<int>(cls.sectors.size());
      cls.sectors.emplace_back();
      std::queue<int> queue;
      cls.sector_index[start] = id;
      queue.push(start);
      while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        cls.sectors[id].push_back(v);
        for (int w : g.neighbors(v)) {
          if (cls.sector_index[w] >= 0) continue;
          if (member_set.count({std::min(v, w), std::max(v, w)})) continue;
          cls.sector_index[w] = id;
          queue.push(w);
        }
      }
      std::sort(cls.sectors[id].begin(), cls.sectors[id].end());
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::optional<int> gate(const FiniteGraph& g, const std::vector<int>& Y,
                        int x) {
  if (Y.empty()) throw domain_error("empty subset");
  check_range(g, x);
  auto ys = sorted_unique(Y);
  for (int y : ys) check_range(g, y);

  auto from_x = g.distances_from(x);
  std::optional<int> found;
  for (int p : ys) {
    if (from_x[p] < 0) continue;
    auto from_p = g.distances_from(p);
    bool ok = true;
    for (int y : ys)
      if (from_x[y] < 0 || from_x[y] != from_x[p] + from_p[y]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    // Two distinct gates would lie on geodesics through each other,
    // forcing distance zero, so this is a pure sanity guard.
    if (found) throw domain_error("multiple gates");
    found = p;
  }
  return found;
}

bool is_gated(const FiniteGraph& g, const std::vector<int>& Y) {
  if (Y.empty()) throw domain_error("empty subset");
  auto ys = sorted_unique(Y);
  for (int y : ys) check_range(g, y);
  std::vector<char> in(g.size(), 0);
  for (int y : ys) in[y] = 1;

  // (a) every vertex admits a gate
  bool all_gates = true;
  for (int x = 0; x < g.size() && all_gates; ++x)
    if (!gate(g, ys, x)) all_gates = false;

  // (b) connected, contains its triangles, locally convex
  bool criterion = true;
  FiniteGraph sub = induced_subgraph(g, ys);
  if (!sub.connected()) criterion = false;
  for (size_t i = 0; i < ys.size() && criterion; ++i) {
    int a = ys[i];
    for (size_t j = i + 1; j < ys.size() && criterion; ++j) {
      int b = ys[j];
      if (!g.adjacent(a, b)) continue;
      for (int c : g.neighbors(a))
        if (g.adjacent(b, c) && !in[c]) {
          criterion = false;
          break;
        }
    }
  }
  if (criterion) {
    // A square with two adjacent sides inside must close up inside.
    for (int b : ys) {
      for (int a : g.neighbors(b)) {
        if (!in[a]) continue;
        for (int c : g.neighbors(b)) {
          if (c == a || !in[c] || g.adjacent(a, c)) continue;
          for (int d : g.neighbors(a)) {
            if (d == b || g.adjacent(d, b)) continue;
            if (g.adjacent(d, c) && !in[d]) {
              criterion = false;
              break;
            }
          }
          if (!criterion) break;
        }
        if (!criterion) break;
      }
      if (!criterion) break;
    }
  }

  if (all_gates != criterion)
    throw domain_error("gated characterization mismatch");
  return all_gates;
}

std::vector<int> gated_hull(const FiniteGraph& g, const std::vector<int>& S) {
  if (S.empty()) throw domain_error("empty subset");
  auto ss = sorted_unique(S);
  for (int s : ss) check_range(g, s);

  std::vector<char> keep(g.size(), 1);
  for (const auto& cls : hyperplanes(g)) {
    int sector = cls.sector_index[ss[0]];
    bool split = false;
    for (int s : ss)
      if (cls.sector_index[s] != sector) {
        split = true;
        break;
      }
    if (split) continue;  // no sector of this class contains all of S
    for (int v = 0; v < g.size(); ++v)
      if (cls.sector_index[v] != sector) keep[v] = 0;
  }

  std::vector<int> hull;
  for (int v = 0; v < g.size(); ++v)
    if (keep[v]) hull.push_back(v);
  if (!is_gated(g, hull))
    throw domain_error("gated hull postcondition failed");
  return hull;
}

std::vector<int> interval(const FiniteGraph& g, int x, int y) {
  check_range(g, x);
  check_range(g, y);
  auto from_x = g.distances_from(x);
  auto from_y = g.distances_from(y);
  if (from_x[y] < 0) throw domain_error("no path between vertices");
  std::vector<int> result;
  for (int v = 0; v < g.size(); ++v)
    if (from_x[v] >= 0 && from_x[v] + from_y[v] == from_x[y])
      result.push_back(v);
  return result;
}

std::vector<int> convex_hull(const FiniteGraph& g, const std::vector<int>& S) {
  if (S.empty()) throw domain_error("empty subset");
  auto hull = sorted_unique(S);
  for (int s : hull) check_range(g, s);

  // Interval closure to a fixpoint.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<char> in(g.size(), 0);
    for (int v : hull) in[v] = 1;
    for (size_t i = 0; i < hull.size(); ++i)
      for (size_t j = i + 1; j < hull.size(); ++j)
        for (int v : interval(g, hull[i], hull[j]))
          if (!in[v]) {
            in[v] = 1;
            grew = true;
          }
    if (grew) {
      hull.clear();
      for (int v = 0; v < g.size(); ++v)
        if (in[v]) hull.push_back(v);
    }
  }

  // Independent characterization: intersect, over every class, the
  // union of sectors that meet S.
  std::vector<char> keep(g.size(), 1);
  std::vector<char> seed(g.size(), 0);
  for (int s : sorted_unique(S)) seed[s] = 1;
  for (const auto& cls : hyperplanes(g)) {
    std::vector<char> touched(cls.sectors.size(), 0);
    for (int v = 0; v < g.size(); ++v)
      if (seed[v]) touched[cls.sector_index[v]] = 1;
    for (int v = 0; v < g.size(); ++v)
      if (!touched[cls.sector_index[v]]) keep[v] = 0;
  }
  std::vector<int> other;
  for (int v = 0; v < g.size(); ++v)
    if (keep[v]) other.push_back(v);
  if (other != hull) throw domain_error("convex hull invariant failure");
  return hull;
}

bool is_interval_median(const FiniteGraph& g, int x, int y) {
  FiniteGraph sub = induced_subgraph(g, interval(g, x, y));
  if (!check_axioms(sub).ok()) return false;
  for (int a = 0; a < sub.size(); ++a)
    for (int b : sub.neighbors(a)) {
      if (b <= a) continue;
      for (int c : sub.neighbors(a))
        if (c > b && sub.adjacent(b, c)) return false;  // triangle
    }
  return true;
}

namespace {

// Checks that `sub` is a product of cliques: hyperplane sector indices
// give coordinates that must separate vertices, realize the full
// product, and make adjacency equal to Hamming distance one.
bool clique_product_check(const FiniteGraph& sub, size_t expected_classes) {
  auto classes = hyperplanes(sub);
  if (classes.size() != expected_classes) return false;
  int n = sub.size();
  std::vector<std::vector<int>> coord(n);
  for (int v = 0; v < n; ++v)
    for (const auto& cls : classes) coord[v].push_back(cls.sector_index[v]);

  long long product = 1;
  for (const auto& cls : classes)
    product *= static_cast<long long>(cls.sectors.size());
  if (product != n) return false;

  for (int v = 0; v < n; ++v)
    for (int w = v + 1; w < n; ++w) {
      int hamming = 0;
      for (size_t i = 0; i < coord[v].size(); ++i)
        if (coord[v][i] != coord[w][i]) ++hamming;
      if (hamming == 0) return false;  // coordinates must separate
      if ((hamming == 1) != sub.adjacent(v, w)) return false;
    }
  return true;
}

void bron_kerbosch(const std::vector<std::vector<char>>& adj,
                   std::vector<int>& R, std::vector<int> P,
                   std::vector<int> X,
                   std::vector<std::vector<int>>& out) {
  if (P.empty() && X.empty()) {
    out.push_back(R);
    return;
  }
  // Pivot on the candidate covering most of P.
  int pivot = -1, best = -1;
  for (int u : P) {
    int cover = 0;
    for (int v : P) cover += adj[u][v];
    if (cover > best) best = cover, pivot = u;
  }
  for (int u : X) {
    int cover = 0;
    for (int v : P) cover += adj[u][v];
    if (cover > best) best = cover, pivot = u;
  }
  std::vector<int> candidates;
  for (int v : P)
    if (!adj[pivot][v]) candidates.push_back(v);
  for (int v : candidates) {
    std::vector<int> P2, X2;
    for (int w : P)
      if (adj[v][w]) P2.push_back(w);
    for (int w : X)
      if (adj[v][w]) X2.push_back(w);
    R.push_back(v);
    bron_kerbosch(adj, R, std::move(P2), std::move(X2), out);
    R.pop_back();
    P.erase(std::find(P.begin(), P.end(), v));
    X.push_back(v);
  }
}

} // namespace

PrismReport maximal_prisms(const FiniteGraph& g) {
  if (g.size() > kPrismVertexCap)
    throw domain_error("graph too large for prism factorization");
  PrismReport report;
  if (g.size() == 0) return report;

  auto classes = hyperplanes(g);
  int c = static_cast<int>(classes.size());
  EdgeIndex ei(g);
  std::vector<int> class_of(ei.edges.size());
  for (int i = 0; i < c; ++i)
    for (auto [a, b] : classes[i].edges) class_of[ei.of(a, b)] = i;

  // Transversality: adjacent sides of an induced square.
  std::vector<std::vector<char>> transverse(c, std::vector<char>(c, 0));
  for_each_induced_square(g, [&](int a, int b, int cc, int d) {
    int c1 = class_of[ei.of(a, b)];
    int c2 = class_of[ei.of(a, d)];
    if (c1 == c2) throw domain_error("hyperplane crosses itself");
    transverse[c1][c2] = transverse[c2][c1] = 1;
  });

  std::vector<int> all(c);
  std::iota(all.begin(), all.end(), 0);
  std::vector<int> R;
  std::vector<std::vector<int>> families;
  bron_kerbosch(transverse, R, all, {}, families);
  for (auto& f : families) std::sort(f.begin(), f.end());
  std::sort(families.begin(), families.end());

  std::set<std::vector<int>> seen;
  for (const auto& family : families) {
    std::vector<char> keep(g.size(), 1);
    for (int i : family) {
      std::vector<char> mark(g.size(), 0);
      for (int v : classes[i].carrier) mark[v] = 1;
      for (int v = 0; v < g.size(); ++v)
        if (!mark[v]) keep[v] = 0;
    }
    Prism prism;
    prism.classes = family;
    for (int v = 0; v < g.size(); ++v)
      if (keep[v]) prism.vertices.push_back(v);
    if (!clique_product_check(induced_subgraph(g, prism.vertices),
                              family.size()))
      throw domain_error("prism verification failed");
    if (!seen.insert(prism.vertices).second)
      throw domain_error("prism correspondence is not injective");
    report.dimension =
        std::max(report.dimension, static_cast<int>(family.size()));
    report.prisms.push_back(std::move(prism));
  }
  std::sort(report.prisms.begin(), report.prisms.end(),
            [](const Prism& x, const Prism& y) {
              return x.vertices < y.vertices;
            });
  return report;
}

int cubical_dimension(const FiniteGraph& g) {
  return maximal_prisms(g).dimension;
}

ProjectionReport projection_checks(const FiniteGraph& g,
                                   const std::vector<int>& Y) {
  if (!is_gated(g, Y)) throw domain_error("subgraph is not gated");
  auto ys = sorted_unique(Y);

  int n = g.size();
  std::vector<int> proj(n);
  for (int x = 0; x < n; ++x) {
    auto p = gate(g, ys, x);
    if (!p) throw domain_error("gate missing on gated subgraph");
    proj[x] = *p;
  }

  auto dist = g.all_distances();
  auto classes = hyperplanes(g);
  std::vector<char> crosses(classes.size(), 0);
  for (size_t i = 0; i < classes.size(); ++i)
    for (int y : ys)
      if (classes[i].sector_index[y] != classes[i].sector_index[ys[0]]) {
        crosses[i] = 1;
        break;
      }

  ProjectionReport report;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (dist[proj[x]][proj[y]] > dist[x][y]) report.lipschitz_ok = false;
      for (size_t i = 0; i < classes.size(); ++i) {
        bool gates_split = classes[i].separates(proj[x], proj[y]);
        bool expected = classes[i].separates(x, y) && crosses[i];
        if (gates_split != expected) report.separation_ok = false;
      }
    }
  return report;
}

bool helly_check(const FiniteGraph& g,
                 const std::vector<std::vector<int>>& family) {
  std::vector<std::vector<int>> sets;
  for (const auto& member : family) {
    if (!is_gated(g, member)) throw domain_error("subgraph is not gated");
    sets.push_back(sorted_unique(member));
  }
  for (size_t i = 0; i < sets.size(); ++i)
    for (size_t j = i + 1; j < sets.size(); ++j) {
      std::vector<int> meet;
      std::set_intersection(sets[i].begin(), sets[i].end(), sets[j].begin(),
                            sets[j].end(), std::back_inserter(meet));
      if (meet.empty()) return true;  // hypothesis fails, vacuously true
    }
  if (sets.empty()) return true;
  std::vector<int> total = sets[0];
  for (size_t i = 1; i < sets.size(); ++i) {
    std::vector<int> meet;
    std::set_intersection(total.begin(), total.end(), sets[i].begin(),
                          sets[i].end(), std::back_inserter(meet));
    total = std::move(meet);
  }
  return !total.empty();
}

namespace {

bool extend_isomorphism(const FiniteGraph& a, const FiniteGraph& b,
                        const std::vector<int>& order, size_t pos,
                        const std::vector<int>& color_a,
                        const std::vector<int>& color_b,
                        std::vector<int>& image, std::vector<char>& used) {
  if (pos == order.size()) return true;
  int v = order[pos];
  for (int w = 0; w < b.size(); ++w) {
    if (used[w] || color_b[w] != color_a[v]) continue;
    bool ok = true;
    for (size_t i = 0; i < pos; ++i) {
      int prev = order[i];
      if (a.adjacent(v, prev) != b.adjacent(w, image[prev])) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    image[v] = w;
    used[w] = 1;
    if (extend_isomorphism(a, b, order, pos + 1, color_a, color_b, image,
                           used))
      return true;
    used[w] = 0;
  }
  return false;
}

} // namespace

bool graphs_isomorphic(const FiniteGraph& a, const FiniteGraph& b) {
  if (a.size() > kIsoVertexCap || b.size() > kIsoVertexCap)
    throw domain_error("graph too large for isomorphism check");
  if (a.size() != b.size() || a.edge_count() != b.edge_count()) return false;
  int n = a.size();
  if (n == 0) return true;

  // Neighborhood color refinement through a palette shared by both
  // graphs, so equal structure receives equal color ids. Distinctions
  // are never merged, hence n rounds reach the stable partition.
  std::map<std::vector<int>, int> palette;
  auto refine = [&](const FiniteGraph& g) {
    std::vector<int> color(n, 0);
    for (int round = 0; round < n; ++round) {
      std::vector<int> next(n);
      for (int v = 0; v < n; ++v) {
        std::vector<int> sig{color[v]};
        std::vector<int> around;
        for (int w : g.neighbors(v)) around.push_back(color[w]);
        std::sort(around.begin(), around.end());
        sig.insert(sig.end(), around.begin(), around.end());
        next[v] =
            palette.emplace(sig, static_cast<int>(palette.size())).first->second;
      }
      color = std::move(next);
    }
    return color;
  };
  auto color_a = refine(a);
  auto color_b = refine(b);

  auto histogram = [](const std::vector<int>& color) {
    std::map<int, int> h;
    for (int c : color) ++h[c];
    std::vector<std::pair<int, int>> counts(h.begin(), h.end());
    return counts;
  };
  if (histogram(color_a) != histogram(color_b)) return false;

  // Match rarest colors first to prune early.
  std::map<int, int> freq;
  for (int c : color_a) ++freq[c];
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    if (freq[color_a[x]] != freq[color_a[y]])
      return freq[color_a[x]] < freq[color_a[y]];
    return x < y;
  });

  std::vector<int> image(n, -1);
  std::vector<char> used(n, 0);
  return extend_isomorphism(a, b, order, 0, color_a, color_b, image, used);
}

} // namespace gp
