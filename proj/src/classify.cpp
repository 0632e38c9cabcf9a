#include "gp/classify.hpp"

#include "gp/error.hpp"
#include "gp/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

namespace gp {

namespace {

void check_subset(const GraphProductSpec& spec, const VertexSet& subset) {
  int n = spec.vertex_count();
  for (size_t i = 0; i < subset.size(); ++i) {
    if (subset[i] < 0 || subset[i] >= n)
      throw domain_error("subset vertex out of range");
    if (i > 0 && subset[i] <= subset[i - 1])
      throw domain_error("subset must be strictly ascending");
  }
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

bool subset_of(const VertexSet& a, const VertexSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

void sort_and_dedupe(std::vector<VertexSet>& collection) {
  std::sort(collection.begin(), collection.end());
  collection.erase(std::unique(collection.begin(), collection.end()),
                   collection.end());
}

} // namespace

bool is_narrow(const GraphProductSpec& spec, const VertexSet& subset) {
  check_subset(spec, subset);
  if (!spec.graph().is_complete(subset)) return false;
  for (int v : subset)
    if (!spec.group(v).finite()) return false;
  return true;
}

GraphProductSpec induced_spec(const GraphProductSpec& spec,
                              const VertexSet& subset) {
  check_subset(spec, subset);
  SimplicialGraph g;
  std::vector<GroupDescriptor> groups;
  for (int v : subset) {
    g.add_vertex(spec.graph().vertex_name(v));
    groups.push_back(spec.group(v));
  }
  for (size_t i = 0; i < subset.size(); ++i)
    for (size_t k = i + 1; k < subset.size(); ++k)
      if (spec.graph().adjacent(subset[i], subset[k]))
        g.add_edge(static_cast<int>(i), static_cast<int>(k));
  return GraphProductSpec(std::move(g), std::move(groups));
}

std::vector<std::pair<VertexSet, VertexSet>> large_joins(
    const GraphProductSpec& spec, bool maximal_only) {
  int n = spec.vertex_count();
  if (!maximal_only && n > 16)
    throw domain_error(
        "graph too large for full join enumeration (cap 16 vertices); "
        "retry with maximal joins only");
  if (maximal_only && n > 18)
    throw domain_error("graph too large for join enumeration (cap 18 vertices)");

  // A subset splits into two vast join-sides exactly when the
  // complement of its induced subgraph has at least two components
  // that are themselves vast: components are fully adjacent to each
  // other, so a union of components is narrow precisely when every
  // member component is. The witness puts the first vast component on
  // one side and everything else on the other.
  std::vector<std::pair<VertexSet, VertexSet>> out;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << n); ++mask) {
    if (std::popcount(mask) < 2) continue;
    VertexSet subset;
    for (int v = 0; v < n; ++v)
      if (mask & (std::uint32_t{1} << v)) subset.push_back(v);
    auto components = spec.graph().complement_components(subset);
    if (components.size() < 2) continue;
    int first_vast = -1;
    int vast_count = 0;
    for (size_t i = 0; i < components.size(); ++i)
      if (!is_narrow(spec, components[i])) {
        ++vast_count;
        if (first_vast < 0) first_vast = static_cast<int>(i);
      }
    if (vast_count < 2) continue;
    VertexSet side = components[first_vast];
    VertexSet rest;
    std::set_difference(subset.begin(), subset.end(), side.begin(), side.end(),
                        std::back_inserter(rest));
    out.emplace_back(std::move(side), std::move(rest));
  }

  if (maximal_only) {
    // Scan by decreasing size so every entry only has to be compared
    // against already-accepted maximal subsets.
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return a.first.size() + a.second.size() > b.first.size() + b.second.size();
    });
    std::vector<std::pair<VertexSet, VertexSet>> maximal;
    std::vector<VertexSet> kept;
    for (auto& entry : out) {
      VertexSet whole = set_union(entry.first, entry.second);
      bool dominated = false;
      for (const VertexSet& big : kept)
        if (subset_of(whole, big)) {
          dominated = true;
          break;
        }
      if (dominated) continue;
      kept.push_back(std::move(whole));
      maximal.push_back(std::move(entry));
    }
    out = std::move(maximal);
  }
  return out;
}

VertexSet cp(const GraphProductSpec& spec, const VertexSet& subset) {
  check_subset(spec, subset);
  VertexSet out = subset;
  for (int v = 0; v < spec.vertex_count(); ++v) {
    if (std::binary_search(subset.begin(), subset.end(), v)) continue;
    VertexSet link = spec.graph().link(v);
    if (!is_narrow(spec, set_intersection(link, subset))) out.push_back(v);
  }
  std::sort(out.begin(), out.end());
  return out;
}

MeierVerdict meier(const GraphProductSpec& spec) {
  const SimplicialGraph& g = spec.graph();
  MeierVerdict verdict;
  auto fail = [&](int index, const char* name) {
    verdict.hyperbolic = false;
    verdict.failed_condition = index;
    verdict.failed_condition_name = name;
  };

  // Condition 1 (every vertex group hyperbolic) cannot fail: the
  // supported descriptors are finite groups and the integers.
  for (int u = 0; u < g.vertex_count() && verdict.hyperbolic; ++u) {
    if (spec.group(u).finite()) continue;
    for (int v : g.neighbors(u))
      if (!spec.group(v).finite() && v > u) {
        fail(2, "no two infinite vertex-groups are adjacent");
        break;
      }
  }
  for (int w = 0; w < g.vertex_count() && verdict.hyperbolic; ++w) {
    if (spec.group(w).finite()) continue;
    const std::vector<int>& nbrs = g.neighbors(w);
    for (size_t i = 0; i < nbrs.size() && verdict.hyperbolic; ++i)
      for (size_t k = i + 1; k < nbrs.size(); ++k)
        if (!g.adjacent(nbrs[i], nbrs[k])) {
          fail(3,
               "two vertex-groups adjacent to a common infinite vertex-group "
               "must be adjacent");
          break;
        }
  }
  if (verdict.hyperbolic && !is_square_free(g).square_free)
    fail(4, "square-free");
  return verdict;
}

bool x_hyperbolic(const GraphProductSpec& spec) {
  return is_square_free(spec.graph()).square_free;
}

RelHypReport j_sequence(const GraphProductSpec& spec, bool maximal_joins,
                        bool iterated_cp) {
  int n = spec.vertex_count();
  if (n > 16)
    throw domain_error(
        "graph too large for the relative-hyperbolicity fixpoint "
        "(cap 16 vertices)");

  RelHypReport report;
  std::vector<VertexSet> current;
  for (const auto& [left, right] : large_joins(spec, maximal_joins))
    current.push_back(set_union(left, right));
  sort_and_dedupe(current);
  report.j_sequence.push_back(current);

  // Each round merges members with vast pairwise intersections and then
  // absorbs vertices whose link meets the merged subset in a vast set.
  const long long step_guard = (1LL << n) + 2;
  while (true) {
    if (static_cast<long long>(report.j_sequence.size()) > step_guard)
      throw internal_error(
          "relative-hyperbolicity iteration failed to stabilize");
    std::vector<int> root(current.size());
    std::iota(root.begin(), root.end(), 0);
    auto find = [&](int i) {
      while (root[i] != i) i = root[i] = root[root[i]];
      return i;
    };
    for (size_t i = 0; i < current.size(); ++i)
      for (size_t k = i + 1; k < current.size(); ++k)
        if (!is_narrow(spec, set_intersection(current[i], current[k])))
          root[find(static_cast<int>(i))] = find(static_cast<int>(k));

    std::vector<VertexSet> merged(current.size());
    for (size_t i = 0; i < current.size(); ++i) {
      int r = find(static_cast<int>(i));
      merged[r] = set_union(merged[r], current[i]);
    }
    std::vector<VertexSet> next;
    for (size_t i = 0; i < current.size(); ++i) {
      if (find(static_cast<int>(i)) != static_cast<int>(i)) continue;
      VertexSet grown = cp(spec, merged[i]);
      while (iterated_cp) {
        VertexSet again = cp(spec, grown);
        if (again == grown) break;
        grown = std::move(again);
      }
      next.push_back(std::move(grown));
    }
    sort_and_dedupe(next);
    report.j_sequence.push_back(next);
    if (next == current) break;
    current = std::move(next);
  }

  report.j_infinity = current;
  report.j_final = current;
  std::vector<char> covered(n, 0);
  for (const VertexSet& member : current)
    for (int v : member) covered[v] = 1;
  for (int v = 0; v < n; ++v)
    if (!covered[v]) report.j_final.push_back({v});
  sort_and_dedupe(report.j_final);

  VertexSet whole(n);
  std::iota(whole.begin(), whole.end(), 0);
  report.is_relatively_hyperbolic =
      !(report.j_final.size() == 1 && report.j_final[0] == whole);
  for (const VertexSet& member : report.j_final)
    report.peripherals.push_back(induced_spec(spec, member));
  return report;
}

std::string classification_json(const GraphProductSpec& spec,
                                bool maximal_joins) {
  const SimplicialGraph& g = spec.graph();
  auto names = [&](const VertexSet& subset) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (int v : subset) arr.push_back(g.vertex_name(v));
    return arr;
  };

  nlohmann::ordered_json j;
  j["schema"] = 1;
  MeierVerdict m = meier(spec);
  j["meier"]["verdict"] = m.hyperbolic;
  if (m.hyperbolic)
    j["meier"]["failed_condition"] = nullptr;
  else
    j["meier"]["failed_condition"] = m.failed_condition_name;
  j["x_hyperbolic"] = x_hyperbolic(spec);

  RelHypReport r = j_sequence(spec, maximal_joins);
  j["rel_hyp"]["verdict"] = r.is_relatively_hyperbolic;
  j["rel_hyp"]["j_sequence"] = nlohmann::ordered_json::array();
  for (const std::vector<VertexSet>& collection : r.j_sequence) {
    nlohmann::ordered_json stage = nlohmann::ordered_json::array();
    for (const VertexSet& member : collection) stage.push_back(names(member));
    j["rel_hyp"]["j_sequence"].push_back(stage);
  }
  j["rel_hyp"]["peripherals"] = nlohmann::ordered_json::array();
  for (const GraphProductSpec& p : r.peripherals)
    j["rel_hyp"]["peripherals"].push_back(spec_json(p));
  return j.dump(2) + "\n";
}

} // namespace gp
