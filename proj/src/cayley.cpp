#include "gp/cayley.hpp"

#include "gp/error.hpp"
#include "gp/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <tuple>

namespace gp {

namespace {

void check_vertex(const GraphProductSpec& spec, int v) {
  if (v < 0 || v >= spec.vertex_count())
    throw domain_error("vertex index out of range");
}

void check_syllable(const GraphProductSpec& spec, Syllable s) {
  check_vertex(spec, s.vertex);
  const GroupDescriptor& G = spec.group(s.vertex);
  if (!G.valid(s.value)) throw domain_error("invalid group element");
  if (G.is_identity(s.value)) throw domain_error("identity syllable");
}

// Tail syllable of w at vertex u, if any. At most one syllable per
// vertex can shuffle to the end of a reduced word.
std::optional<Syllable> tail_at(const GraphProductSpec& spec,
                                const NormalWord& w, int u) {
  for (Syllable s : tail_syllables(spec, w.syllables()))
    if (s.vertex == u) return s;
  return std::nullopt;
}

// Words adjacent to w along cliques of the vertex group at u, keeping
// only those whose u-syllable value stays within `bound` for integer
// groups. `expand` additionally admits neighbors one syllable longer.
std::vector<NormalWord> clique_neighbors(const GraphProductSpec& spec,
                                         const NormalWord& w, int u,
                                         long long bound, bool expand) {
  const GroupDescriptor& G = spec.group(u);
  std::vector<NormalWord> out;
  if (auto t = tail_at(spec, w, u)) {
    // Replace the value t by every other admissible target, identity
    // included (which deletes the syllable).
    if (G.finite()) {
      for (GroupElement m = 0; m < G.order(); ++m) {
        if (m == t->value) continue;
        Syllable step{u, G.multiply(G.inverse(t->value), m)};
        out.push_back(multiply(w, step));
      }
    } else {
      for (GroupElement m = -bound; m <= bound; ++m) {
        if (m == t->value) continue;
        out.push_back(multiply(w, Syllable{u, m - t->value}));
      }
    }
  } else if (expand) {
    // Finite groups ignore the bound; keep it valid for them anyway.
    for (GroupElement m : G.enumerate(G.finite() ? std::max(bound, 1LL) : bound))
      out.push_back(multiply(w, Syllable{u, m}));
  }
  return out;
}

NormalWord recanonicalize(const GraphProductSpec& spec, const NormalWord& w) {
  return canonicalize(spec, w.syllables());
}

} // namespace

Ball::Ball(const GraphProductSpec& spec, int radius, long long bound,
           int size_cap)
    : spec_(&spec), radius_(radius), bound_(bound) {
  if (radius < 0) throw domain_error("radius must be non-negative");
  if (size_cap < 1) throw domain_error("size cap must be positive");
  bool has_integers = false;
  for (int v = 0; v < spec.vertex_count(); ++v)
    if (!spec.group(v).finite()) has_integers = true;
  if (has_integers && bound < 1)
    throw domain_error(
        "enumeration bound must be at least 1 when an integer factor is "
        "present");

  // Discovery: breadth first from the identity, so indices come out in
  // distance order and index 0 is the center.
  vertices_.push_back(empty_word(spec));
  index_.emplace(vertices_[0], 0);
  layer_.push_back(0);
  for (int head = 0; head < static_cast<int>(vertices_.size()); ++head) {
    if (layer_[head] == radius_) continue;
    NormalWord w = vertices_[head];  // copy: vertices_ may reallocate
    for (int u = 0; u < spec.vertex_count(); ++u) {
      for (const NormalWord& nb : clique_neighbors(spec, w, u, bound, true)) {
        NormalWord c = recanonicalize(spec, nb);
        if (index_.count(c)) continue;
        if (static_cast<int>(vertices_.size()) == size_cap)
          throw domain_error("ball exceeds vertex cap");
        index_.emplace(c, static_cast<int>(vertices_.size()));
        vertices_.push_back(c);
        layer_.push_back(layer_[head] + 1);
      }
    }
  }

  // Edges and truncation flags. An edge is recorded whenever both
  // endpoints are stored, which keeps the visible part of each clique
  // complete; a vertex is flagged when a within-radius clique neighbor
  // was dropped by the bound.
  truncated_.assign(vertices_.size(), 0);
  for (int v = 0; v < static_cast<int>(vertices_.size()); ++v) {
    const NormalWord& w = vertices_[v];
    for (int u = 0; u < spec.vertex_count(); ++u) {
      bool expand = layer_[v] < radius_;
      if (!spec.group(u).finite()) {
        bool has_tail = tail_at(spec, w, u).has_value();
        if (has_tail || expand) truncated_[v] = 1;
      }
      for (const NormalWord& nb : clique_neighbors(spec, w, u, bound, true)) {
        NormalWord c = recanonicalize(spec, nb);
        auto it = index_.find(c);
        if (it == index_.end() || it->second <= v) continue;
        Syllable step{u, 0};
        // Recover the multiplier from the value change at u.
        auto t = tail_at(spec, w, u);
        auto t2 = tail_at(spec, c, u);
        const GroupDescriptor& G = spec.group(u);
        GroupElement from = t ? t->value : G.identity();
        GroupElement to = t2 ? t2->value : G.identity();
        step.value = G.multiply(G.inverse(from), to);
        edges_.push_back(BallEdge{v, it->second, u, step.value});
      }
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const BallEdge& a,
                                             const BallEdge& b) {
    return std::tie(a.from, a.to) < std::tie(b.from, b.to);
  });
}

int Ball::index_of(const NormalWord& w) const {
  auto it = index_.find(w);
  return it == index_.end() ? -1 : it->second;
}

Ball ball(const GraphProductSpec& spec, int radius, long long bound,
          int size_cap) {
  return Ball(spec, radius, bound, size_cap);
}

FiniteGraph to_graph(const Ball& b) {
  FiniteGraph g(b.size());
  g.labels.resize(b.size());
  for (int v = 0; v < b.size(); ++v)
    g.labels[v] = format_word(b.spec(), b.word(v));
  for (const BallEdge& e : b.edges()) g.add_edge(e.from, e.to);
  return g;
}

std::vector<char> interior_mask(const Ball& b, int margin,
                                bool exclude_truncated) {
  std::vector<char> mask(b.size(), 0);
  for (int v = 0; v < b.size(); ++v)
    mask[v] = b.layer(v) <= b.radius() - margin &&
              !(exclude_truncated && b.truncated(v));
  return mask;
}

int distance(const GraphProductSpec& spec, const NormalWord& g,
             const NormalWord& h) {
  (void)spec;
  return multiply(inverse(g), h).length();
}

std::vector<NormalWord> geodesic(const GraphProductSpec& spec,
                                 const NormalWord& g, const NormalWord& h) {
  NormalWord rel = recanonicalize(spec, multiply(inverse(g), h));
  std::vector<NormalWord> path{recanonicalize(spec, g)};
  for (Syllable s : rel.syllables())
    path.push_back(recanonicalize(spec, multiply(path.back(), s)));
  if (!(path.back() == recanonicalize(spec, h)))
    throw domain_error("geodesic endpoint mismatch");
  return path;
}

HyperplaneKey hyperplane_of_edge(const GraphProductSpec& spec,
                                 const NormalWord& g, Syllable s) {
  check_syllable(spec, s);
  std::vector<int> star = spec.graph().star(s.vertex);
  NormalWord w = recanonicalize(spec, g);
  // Push the word into the minimal representative of its carrier
  // coset: any tail syllable supported in the star can be dropped.
  for (;;) {
    bool dropped = false;
    for (Syllable t : tail_syllables(spec, w.syllables())) {
      if (!std::binary_search(star.begin(), star.end(), t.vertex)) continue;
      const GroupDescriptor& G = spec.group(t.vertex);
      w = multiply(w, Syllable{t.vertex, G.inverse(t.value)});
      dropped = true;
      break;
    }
    if (!dropped) break;
  }
  return HyperplaneKey{s.vertex, recanonicalize(spec, w)};
}

std::vector<HyperplaneKey> separating_hyperplanes(const GraphProductSpec& spec,
                                                  const NormalWord& g,
                                                  const NormalWord& h) {
  std::vector<NormalWord> path = geodesic(spec, g, h);
  std::set<HyperplaneKey> keys;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    NormalWord rel = multiply(inverse(path[i]), path[i + 1]);
    if (rel.length() != 1)
      throw domain_error("geodesic step is not a syllable");
    keys.insert(hyperplane_of_edge(spec, path[i], rel.syllables()[0]));
  }
  if (static_cast<int>(keys.size()) + 1 != static_cast<int>(path.size()))
    throw domain_error("geodesic crossed a hyperplane twice");
  return std::vector<HyperplaneKey>(keys.begin(), keys.end());
}

bool transverse(const GraphProductSpec& spec, const HyperplaneKey& a,
                const HyperplaneKey& b) {
  check_vertex(spec, a.label);
  check_vertex(spec, b.label);
  if (a.label == b.label) return false;
  if (!spec.graph().adjacent(a.label, b.label)) return false;
  // The carriers meet iff base_a^-1 base_b lies in <star(a)> <star(b)>.
  // Stripping a head syllable supported in star(a) preserves that
  // membership in both directions, so the greedy residue decides it.
  NormalWord q = multiply(inverse(a.base), b.base);
  std::vector<int> star_a = spec.graph().star(a.label);
  for (;;) {
    bool stripped = false;
    for (Syllable s : head_syllables(spec, q.syllables())) {
      if (!std::binary_search(star_a.begin(), star_a.end(), s.vertex))
        continue;
      const GroupDescriptor& G = spec.group(s.vertex);
      std::vector<Syllable> seq{Syllable{s.vertex, G.inverse(s.value)}};
      seq.insert(seq.end(), q.syllables().begin(), q.syllables().end());
      q = reduce(spec, seq);
      stripped = true;
      break;
    }
    if (!stripped) break;
  }
  std::vector<int> star_b = spec.graph().star(b.label);
  for (Syllable s : q.syllables())
    if (!std::binary_search(star_b.begin(), star_b.end(), s.vertex))
      return false;
  return true;
}

NormalWord gate_in_clique(const GraphProductSpec& spec, const NormalWord& g,
                          const NormalWord& base, int u) {
  check_vertex(spec, u);
  if (tail_at(spec, base, u))
    throw domain_error("clique base has a tail syllable at the clique vertex");
  NormalWord rel = multiply(inverse(base), g);
  for (Syllable s : head_syllables(spec, rel.syllables()))
    if (s.vertex == u)
      return recanonicalize(spec, multiply(base, s));
  return recanonicalize(spec, base);
}

GeneratingSets::GeneratingSets(const GraphProductSpec& spec) {
  for (int v = 0; v < spec.vertex_count(); ++v)
    groups_.push_back(spec.group(v));
}

void GeneratingSets::set(int vertex, const std::vector<GroupElement>& gens) {
  if (vertex < 0 || vertex >= static_cast<int>(groups_.size()))
    throw domain_error("vertex index out of range");
  groups_[vertex].set_generators(gens);
}

const GroupDescriptor& GeneratingSets::group(int v) const {
  if (v < 0 || v >= static_cast<int>(groups_.size()))
    throw domain_error("vertex index out of range");
  return groups_[v];
}

long long weighted_distance(const GraphProductSpec& spec,
                            const GeneratingSets& gens, const NormalWord& g,
                            const NormalWord& h) {
  NormalWord rel = multiply(inverse(g), h);
  long long total = 0;
  for (Syllable s : rel.syllables()) {
    check_vertex(spec, s.vertex);
    total += gens.group(s.vertex).word_length(s.value);
  }
  return total;
}

QuasiMedianTriple quasi_median(const Ball& b, int x, int y, int z) {
  const GraphProductSpec& spec = b.spec();
  for (int v : {x, y, z})
    if (v < 0 || v >= b.size()) throw domain_error("vertex index out of range");
  if (x == y && y == z) return QuasiMedianTriple{x, x, x, 0};

  // Ground truth for the size: hyperplanes separating all three pairs.
  auto keyset = [&](int p, int q) {
    std::vector<HyperplaneKey> k =
        separating_hyperplanes(spec, b.word(p), b.word(q));
    return std::set<HyperplaneKey>(k.begin(), k.end());
  };
  std::set<HyperplaneKey> common;
  {
    std::set<HyperplaneKey> xy = keyset(x, y);
    std::set<HyperplaneKey> xz = keyset(x, z);
    std::set<HyperplaneKey> yz = keyset(y, z);
    for (const HyperplaneKey& k : xy)
      if (xz.count(k) && yz.count(k)) common.insert(k);
  }
  int target = static_cast<int>(common.size());

  FiniteGraph g = to_graph(b);
  std::vector<int> seed{x, y, z};
  std::sort(seed.begin(), seed.end());
  seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
  std::vector<int> hull;
  try {
    hull = gated_hull(g, seed);
  } catch (const domain_error&) {
    // Hull computation can only break where the window cuts cliques
    // and sectors apart, so the remedy is a bigger window.
    throw domain_error("gated hull is distorted by the ball boundary, "
                       "increase radius");
  }

  // Distances are exact word computations, so anything the scan finds
  // is genuine; the hull only bounds where to look.
  int m = static_cast<int>(hull.size());
  auto wdist = [&](int p, int q) {
    return distance(spec, b.word(p), b.word(q));
  };
  std::vector<std::vector<int>> D(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) D[i][j] = D[j][i] = wdist(hull[i], hull[j]);
  std::vector<int> dx(m), dy(m), dz(m);
  for (int i = 0; i < m; ++i) {
    dx[i] = wdist(x, hull[i]);
    dy[i] = wdist(y, hull[i]);
    dz[i] = wdist(z, hull[i]);
  }
  int dxy = wdist(x, y), dxz = wdist(x, z), dyz = wdist(y, z);

  int best = -1;
  QuasiMedianTriple found;
  int count = 0;
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c) {
      if (dx[a] + D[a][c] + dy[c] != dxy) continue;
      for (int e = 0; e < m; ++e) {
        if (dx[a] + D[a][e] + dz[e] != dxz) continue;
        if (dy[c] + D[c][e] + dz[e] != dyz) continue;
        if (D[a][c] != D[a][e] || D[a][e] != D[c][e]) continue;
        int size = D[a][c];
        if (best == -1 || size < best) {
          best = size;
          found = QuasiMedianTriple{hull[a], hull[c], hull[e], size};
          count = 1;
        } else if (size == best) {
          ++count;
        }
      }
    }
  if (best != target || count != 1)
    throw domain_error("quasi-median search failed, increase radius");
  return found;
}

std::vector<std::vector<NormalWord>> flat_square_witness(
    const GraphProductSpec& spec, const std::array<int, 4>& square, int n) {
  if (n < 0) throw domain_error("side length must be non-negative");
  for (int v : square) check_vertex(spec, v);
  const auto& gr = spec.graph();
  int a = square[0], b = square[1], c = square[2], d = square[3];
  std::set<int> distinct(square.begin(), square.end());
  bool induced = distinct.size() == 4 && gr.adjacent(a, b) &&
                 gr.adjacent(b, c) && gr.adjacent(c, d) && gr.adjacent(d, a) &&
                 !gr.adjacent(a, c) && !gr.adjacent(b, d);
  if (!induced) throw domain_error("vertices do not span an induced square");

  // One side alternates between the two non-adjacent corners a, c; the
  // other between b, d. Every side-1 vertex commutes with every side-2
  // vertex, so the prefixes fill an isometric grid.
  auto side = [&](int p, int q) {
    std::vector<Syllable> s;
    for (int i = 0; i < n; ++i) {
      int v = i % 2 == 0 ? p : q;
      s.push_back(Syllable{v, spec.group(v).canonical_nontrivial()});
    }
    return s;
  };
  std::vector<Syllable> s1 = side(a, c), s2 = side(b, d);
  std::vector<std::vector<NormalWord>> grid(n + 1,
                                            std::vector<NormalWord>(n + 1));
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j) {
      std::vector<Syllable> w(s1.begin(), s1.begin() + i);
      w.insert(w.end(), s2.begin(), s2.begin() + j);
      grid[i][j] = reduce(spec, w);
      if (grid[i][j].length() != i + j)
        throw domain_error("flat square word is not reduced");
      grid[i][j] = recanonicalize(spec, grid[i][j]);
    }
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int i2 = 0; i2 <= n; ++i2)
        for (int j2 = 0; j2 <= n; ++j2) {
          int want = std::abs(i - i2) + std::abs(j - j2);
          if (distance(spec, grid[i][j], grid[i2][j2]) != want)
            throw domain_error("flat square verification failed");
        }
  return grid;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    if (ch == '"' || ch == '\\') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

} // namespace

std::string ball_dot(const Ball& b) {
  const GraphProductSpec& spec = b.spec();
  std::ostringstream out;
  out << "graph ball {\n";
  for (int v = 0; v < b.size(); ++v)
    out << "  v" << v << " [label=\""
        << dot_escape(format_word(spec, b.word(v))) << "\"];\n";
  for (const BallEdge& e : b.edges())
    out << "  v" << e.from << " -- v" << e.to << " [label=\""
        << dot_escape(format_syllable(spec, Syllable{e.vertex, e.elem}))
        << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string ball_json(const Ball& b) {
  const GraphProductSpec& spec = b.spec();
  const SimplicialGraph& gr = spec.graph();
  nlohmann::ordered_json j;
  j["schema"] = 1;
  j["spec"] = spec_json(spec);
  j["radius"] = b.radius();
  j["bound"] = b.bound();
  j["vertices"] = nlohmann::ordered_json::array();
  for (int v = 0; v < b.size(); ++v)
    j["vertices"].push_back(format_word(spec, b.word(v)));
  j["truncated"] = nlohmann::ordered_json::array();
  for (int v = 0; v < b.size(); ++v)
    if (b.truncated(v)) j["truncated"].push_back(v);
  j["edges"] = nlohmann::ordered_json::array();
  for (const BallEdge& e : b.edges()) {
    nlohmann::ordered_json ej;
    ej["from"] = e.from;
    ej["to"] = e.to;
    ej["vertex"] = gr.vertex_name(e.vertex);
    ej["elem"] = e.elem;
    j["edges"].push_back(ej);
  }
  return j.dump(2) + "\n";
}

} // namespace gp
