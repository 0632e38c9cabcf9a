#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gp/words.hpp"

namespace gp {

// A subset of the defining graph's vertices, as strictly ascending
// indices. Collections of subsets are kept sorted and duplicate-free so
// that equality of collections is plain vector comparison.
using VertexSet = std::vector<int>;

// Whether the subgroup generated by the subset's vertex groups is
// finite. That happens exactly when the subset induces a complete graph
// and every group on it is finite; the empty subset counts as finite.
// The complementary notion (an infinite subgroup) is called vast below.
bool is_narrow(const GraphProductSpec& spec, const VertexSet& subset);

// Restriction of the product data to a subset of its vertices, keeping
// names, groups, and induced edges.
GraphProductSpec induced_spec(const GraphProductSpec& spec,
                              const VertexSet& subset);

// All subsets splitting as a join L1 * L2 (every L1-vertex adjacent to
// every L2-vertex) with both sides vast. One entry per subset, carrying
// a witness split. Full mode enumerates every subset and is capped at
// 16 vertices; maximal mode keeps only the entries whose subset is
// inclusion-maximal among all such joins and stretches the cap to 18.
std::vector<std::pair<VertexSet, VertexSet>> large_joins(
    const GraphProductSpec& spec, bool maximal_only = false);

// The subset together with every vertex whose link meets it in a vast
// set. Applied once; it is not a closure operator here.
VertexSet cp(const GraphProductSpec& spec, const VertexSet& subset);

// Word-hyperbolicity of the product group, decided from the defining
// data alone. All built-in vertex groups (finite ones and the integers)
// are hyperbolic, so the first condition can never fail; the remaining
// three are checked in order and the first failure is reported.
struct MeierVerdict {
  bool hyperbolic = true;
  int failed_condition = 0;            // 1..4, or 0 when hyperbolic
  std::string failed_condition_name;   // empty when hyperbolic
};
MeierVerdict meier(const GraphProductSpec& spec);

// Whether the product's canonical Cayley graph is hyperbolic as a
// metric space: true exactly when the defining graph has no induced
// 4-cycle. For products of finite groups this coincides with meier().
bool x_hyperbolic(const GraphProductSpec& spec);

struct RelHypReport {
  // The collections produced by the merge-and-absorb iteration, seeded
  // with the large joins. The last two entries are equal.
  std::vector<std::vector<VertexSet>> j_sequence;
  // The stabilized collection; every member is vast.
  std::vector<VertexSet> j_infinity;
  // j_infinity plus a singleton for each vertex it misses, so the
  // members always cover the vertex set.
  std::vector<VertexSet> j_final;
  // True exactly when j_final is not the single whole-graph subset.
  bool is_relatively_hyperbolic = false;
  // Induced sub-spec for every member of j_final, in the same order.
  // These generate the peripheral subgroups when the verdict is true.
  std::vector<GraphProductSpec> peripherals;
};

// Runs the fixpoint iteration behind the relative-hyperbolicity
// verdict: start from the large joins, repeatedly merge members with
// vast intersection and absorb vertices with vast links, and stop when
// the collection repeats. Capped at 16 vertices. iterated_cp re-applies
// the absorption step until it stalls within each round; it is an
// experiment knob, off for the official verdict.
RelHypReport j_sequence(const GraphProductSpec& spec,
                        bool maximal_joins = false, bool iterated_cp = false);

// The three verdicts above in one JSON document.
std::string classification_json(const GraphProductSpec& spec,
                                bool maximal_joins = false);

} // namespace gp
