#include "gp/graph.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "gp/error.hpp"

namespace gp {

int SimplicialGraph::add_vertex(const std::string& name) {
  if (index_.count(name))
    throw domain_error("duplicate vertex: " + name);
  int v = vertex_count();
  names_.push_back(name);
  index_[name] = v;
  for (auto& row : adj_) row.push_back(0);
  adj_.emplace_back(names_.size(), 0);
  nbr_.emplace_back();
  return v;
}

int SimplicialGraph::find_vertex(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

int SimplicialGraph::require_vertex(const std::string& name) const {
  int v = find_vertex(name);
  if (v < 0) throw domain_error("no such vertex: " + name);
  return v;
}

void SimplicialGraph::add_edge(const std::string& a, const std::string& b) {
  add_edge(require_vertex(a), require_vertex(b));
}

void SimplicialGraph::add_edge(int a, int b) {
  if (a < 0 || b < 0 || a >= vertex_count() || b >= vertex_count())
    throw domain_error("no such vertex");
  if (a == b)
    throw domain_error("loop edge at vertex: " + names_[a]);
  if (adj_[a][b])
    throw domain_error("duplicate edge: " + names_[a] + " " + names_[b]);
  adj_[a][b] = adj_[b][a] = 1;
  nbr_[a].push_back(b);
  nbr_[b].push_back(a);
  std::sort(nbr_[a].begin(), nbr_[a].end());
  std::sort(nbr_[b].begin(), nbr_[b].end());
  ++edge_count_;
}

std::vector<int> SimplicialGraph::link(int v) const {
  if (v < 0 || v >= vertex_count()) throw domain_error("no such vertex");
  return nbr_[v];
}

std::vector<int> SimplicialGraph::star(int v) const {
  std::vector<int> s = link(v);
  s.insert(std::lower_bound(s.begin(), s.end(), v), v);
  return s;
}

bool SimplicialGraph::is_complete(const std::vector<int>& subset) const {
  for (size_t i = 0; i < subset.size(); ++i)
    for (size_t j = i + 1; j < subset.size(); ++j)
      if (!adjacent(subset[i], subset[j])) return false;
  return true;
}

std::vector<std::vector<int>> SimplicialGraph::complement_components(
    const std::vector<int>& subset) const {
  std::vector<int> verts = subset;
  std::sort(verts.begin(), verts.end());
  int n = static_cast<int>(verts.size());
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> stack{s};
    comp[s] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y = 0; y < n; ++y) {
        if (comp[y] < 0 && !adjacent(verts[x], verts[y])) {
          comp[y] = ncomp;
          stack.push_back(y);
        }
      }
    }
    ++ncomp;
  }
  std::vector<std::vector<int>> out(ncomp);
  for (int i = 0; i < n; ++i) out[comp[i]].push_back(verts[i]);
  return out;
}

SquareFreeResult is_square_free(const SimplicialGraph& g) {
  // An induced 4-cycle a-b-c-d-a is a non-adjacent pair {a,c} plus a
  // non-adjacent pair {b,d} of their common neighbors.
  int n = g.vertex_count();
  for (int a = 0; a < n; ++a) {
    for (int c = a + 1; c < n; ++c) {
      if (g.adjacent(a, c)) continue;
      std::vector<int> common;
      for (int x : g.neighbors(a))
        if (x != c && g.adjacent(x, c)) common.push_back(x);
      for (size_t i = 0; i < common.size(); ++i) {
        for (size_t j = i + 1; j < common.size(); ++j) {
          if (!g.adjacent(common[i], common[j])) {
            SquareFreeResult r;
            r.square_free = false;
            r.witness = {a, common[i], c, common[j]};
            return r;
          }
        }
      }
    }
  }
  return SquareFreeResult{};
}

namespace {

struct CliqueSearch {
  std::vector<uint32_t> adj;
  int best = 0;

  void expand(uint32_t cand, int size) {
    if (size > best) best = size;
    while (cand) {
      if (size + std::popcount(cand) <= best) return;
      int v = std::countr_zero(cand);
      cand &= cand - 1;
      expand(cand & adj[v], size + 1);
    }
  }
};

} // namespace

int clique_number(const SimplicialGraph& g, int cap) {
  int n = g.vertex_count();
  if (n > cap || n > 32)
    throw domain_error("graph too large for exact clique");
  if (n == 0) return 0;
  CliqueSearch s;
  s.adj.assign(n, 0);
  for (int a = 0; a < n; ++a)
    for (int b : g.neighbors(a)) s.adj[a] |= uint32_t{1} << b;
  s.expand(n == 32 ? ~uint32_t{0} : (uint32_t{1} << n) - 1, 0);
  return s.best;
}

namespace {

bool color_with(const SimplicialGraph& g, int k, std::vector<int>& color,
                int v) {
  int n = g.vertex_count();
  if (v == n) return true;
  // Only the first unused color may be opened, which kills the color
  // permutation symmetry.
  int high = 0;
  for (int u = 0; u < v; ++u) high = std::max(high, color[u] + 1);
  int limit = std::min(k, high + 1);
  for (int c = 0; c < limit; ++c) {
    bool ok = true;
    for (int u : g.neighbors(v))
      if (u < v && color[u] == c) {
        ok = false;
        break;
      }
    if (!ok) continue;
    color[v] = c;
    if (color_with(g, k, color, v + 1)) return true;
  }
  color[v] = -1;
  return false;
}

} // namespace

Coloring chromatic_number(const SimplicialGraph& g, int cap) {
  int n = g.vertex_count();
  if (n > cap)
    throw domain_error("graph too large for exact chromatic number");
  Coloring result;
  if (n == 0) return result;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> color(n, -1);
    if (color_with(g, k, color, 0)) {
      result.colors = k;
      result.color = std::move(color);
      return result;
    }
  }
  throw domain_error("chromatic search failed");  // unreachable: n colors always work
}

std::vector<std::pair<std::vector<int>, std::vector<int>>> join_decompositions(
    const SimplicialGraph& g, const std::vector<int>& subset) {
  if (subset.empty()) throw domain_error("empty vertex subset");
  auto comps = g.complement_components(subset);
  int c = static_cast<int>(comps.size());
  std::vector<std::pair<std::vector<int>, std::vector<int>>> out;
  if (c < 2) return out;
  // The two halves of a join decomposition are unions of complement
  // components. Pin the first component to the left half so each
  // unordered split is produced once.
  for (uint32_t mask = 0; mask + 1 < (uint32_t{1} << (c - 1)); ++mask) {
    std::vector<int> left = comps[0], right;
    for (int i = 1; i < c; ++i) {
      auto& side = (mask >> (i - 1)) & 1 ? left : right;
      side.insert(side.end(), comps[i].begin(), comps[i].end());
    }
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    out.emplace_back(std::move(left), std::move(right));
  }
  return out;
}

} // namespace gp
