#pragma once

#include <compare>
#include <string>
#include <vector>

#include "gp/graph.hpp"
#include "gp/groups.hpp"

namespace gp {

// A graph product instance: the defining simplicial graph together with
// one group descriptor per vertex, in vertex order.
class GraphProductSpec {
public:
  GraphProductSpec(SimplicialGraph graph, std::vector<GroupDescriptor> groups);

  const SimplicialGraph& graph() const { return graph_; }
  const GroupDescriptor& group(int v) const;
  GroupDescriptor& group(int v);
  int vertex_count() const { return graph_.vertex_count(); }

private:
  SimplicialGraph graph_;
  std::vector<GroupDescriptor> groups_;
};

// One letter of a word: a non-identity element of the vertex group at
// `vertex`. Identity-valued syllables may appear in raw input but never
// inside a NormalWord.
struct Syllable {
  int vertex = -1;
  GroupElement value = 0;
  friend auto operator<=>(const Syllable&, const Syllable&) = default;
};

// A word in canonical normal form: reduced (no cancellation or
// amalgamation applies, even after shuffling) and shuffled into the
// deterministic representative picked by canonicalize(). Words are only
// created by the factories below, so equality is plain syllable
// comparison.
class NormalWord {
public:
  NormalWord() = default;

  const std::vector<Syllable>& syllables() const { return sylls_; }
  const GraphProductSpec* spec() const { return spec_; }
  int length() const { return static_cast<int>(sylls_.size()); }
  bool empty() const { return sylls_.empty(); }

  friend bool operator==(const NormalWord& a, const NormalWord& b) {
    return a.sylls_ == b.sylls_;
  }
  friend std::strong_ordering operator<=>(const NormalWord& a,
                                          const NormalWord& b) {
    return a.sylls_ <=> b.sylls_;
  }

private:
  friend NormalWord make_word_unchecked(const GraphProductSpec&,
                                        std::vector<Syllable>);
  const GraphProductSpec* spec_ = nullptr;
  std::vector<Syllable> sylls_;
};

NormalWord empty_word(const GraphProductSpec& spec);

// True iff no cancellation and no shuffle-then-amalgamate move applies:
// every value is non-identity and any two same-vertex syllables have a
// non-adjacent syllable strictly between them.
bool is_reduced(const GraphProductSpec& spec, const std::vector<Syllable>& w);

// Rewrites an arbitrary syllable sequence (identity syllables allowed,
// silently dropped) into the canonical normal form by right-multiplying
// one syllable at a time. The result has minimal length among all words
// representing the same element.
NormalWord reduce(const GraphProductSpec& spec,
                  const std::vector<Syllable>& input);

// Deterministic representative of the shuffle class of a reduced word:
// repeatedly emit, among the syllables that can shuffle to the front,
// the one whose vertex is smallest in declaration order.
NormalWord canonicalize(const GraphProductSpec& spec,
                        const std::vector<Syllable>& reduced);

NormalWord multiply(const NormalWord& a, const NormalWord& b);
NormalWord multiply(const NormalWord& a, Syllable s);
NormalWord inverse(const NormalWord& a);

// The word problem: do two raw sequences represent the same element?
bool equal(const GraphProductSpec& spec, const std::vector<Syllable>& a,
           const std::vector<Syllable>& b);

// Syllables that appear as the first (resp. last) syllable of some word
// obtained from `reduced` by shuffling. Sorted, duplicate-free.
std::vector<Syllable> head_syllables(const GraphProductSpec& spec,
                                     const std::vector<Syllable>& reduced);
std::vector<Syllable> tail_syllables(const GraphProductSpec& spec,
                                     const std::vector<Syllable>& reduced);

struct WordAttributes {
  int length = 0;
  std::vector<int> support;  // vertices used, ascending
  std::vector<Syllable> head;
  std::vector<Syllable> tail;
};

WordAttributes attributes(const NormalWord& w);

// Word expression syntax: syllables `vertex:k` joined by `*`, the empty
// word spelled `e`. k is reduced mod n for cyclic groups, taken raw for
// Z, and must be a valid index for table groups.
std::vector<Syllable> parse_word(const GraphProductSpec& spec,
                                 const std::string& text);
std::string format_word(const GraphProductSpec& spec, const NormalWord& w);
std::string format_syllable(const GraphProductSpec& spec, Syllable s);

} // namespace gp
