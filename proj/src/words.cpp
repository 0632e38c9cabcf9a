#include "gp/words.hpp"

#include <algorithm>
#include <cstdlib>

#include "gp/error.hpp"

namespace gp {

GraphProductSpec::GraphProductSpec(SimplicialGraph graph,
                                   std::vector<GroupDescriptor> groups)
    : graph_(std::move(graph)), groups_(std::move(groups)) {
  if (static_cast<int>(groups_.size()) != graph_.vertex_count())
    throw domain_error("one group descriptor required per vertex");
}

const GroupDescriptor& GraphProductSpec::group(int v) const {
  if (v < 0 || v >= vertex_count()) throw domain_error("no such vertex");
  return groups_[v];
}

GroupDescriptor& GraphProductSpec::group(int v) {
  if (v < 0 || v >= vertex_count()) throw domain_error("no such vertex");
  return groups_[v];
}

NormalWord make_word_unchecked(const GraphProductSpec& spec,
                               std::vector<Syllable> sylls) {
  NormalWord w;
  w.spec_ = &spec;
  w.sylls_ = std::move(sylls);
  return w;
}

NormalWord empty_word(const GraphProductSpec& spec) {
  return make_word_unchecked(spec, {});
}

namespace {

void check_syllable(const GraphProductSpec& spec, Syllable s) {
  if (s.vertex < 0 || s.vertex >= spec.vertex_count())
    throw domain_error("no such vertex in syllable");
  if (!spec.group(s.vertex).valid(s.value))
    throw domain_error("group element out of range");
}

// Right-multiplication of a reduced word by one non-identity syllable.
// Scanning from the back, the first same-vertex syllable wins if every
// syllable behind it commutes with s; a non-adjacent syllable blocks the
// scan. Three outcomes: plain append, cancellation, or amalgamation
// (merged syllable lands at the back, where s was headed).
void right_multiply(const GraphProductSpec& spec, std::vector<Syllable>& w,
                    Syllable s) {
  const GroupDescriptor& d = spec.group(s.vertex);
  if (d.is_identity(s.value)) return;
  int cand = -1;
  for (int i = static_cast<int>(w.size()) - 1; i >= 0; --i) {
    if (w[i].vertex == s.vertex) {
      cand = i;
      break;
    }
    if (!spec.graph().adjacent(w[i].vertex, s.vertex)) break;
  }
  if (cand < 0) {
    w.push_back(s);
    return;
  }
  GroupElement merged = d.multiply(w[cand].value, s.value);
  w.erase(w.begin() + cand);
  if (!d.is_identity(merged)) w.push_back({s.vertex, merged});
}

std::vector<Syllable> canonical_order(const GraphProductSpec& spec,
                                      std::vector<Syllable> w) {
  std::vector<Syllable> out;
  out.reserve(w.size());
  while (!w.empty()) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(w.size()); ++i) {
      bool front = true;
      for (int j = 0; j < i; ++j)
        if (!spec.graph().adjacent(w[j].vertex, w[i].vertex)) {
          front = false;
          break;
        }
      if (front && (best < 0 || w[i].vertex < w[best].vertex)) best = i;
    }
    out.push_back(w[best]);
    w.erase(w.begin() + best);
  }
  return out;
}

} // namespace

bool is_reduced(const GraphProductSpec& spec, const std::vector<Syllable>& w) {
  for (Syllable s : w) {
    check_syllable(spec, s);
    if (spec.group(s.vertex).is_identity(s.value)) return false;
  }
  int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (w[i].vertex != w[j].vertex) continue;
      bool blocked = false;
      for (int k = i + 1; k < j && !blocked; ++k)
        if (!spec.graph().adjacent(w[k].vertex, w[i].vertex)) blocked = true;
      if (!blocked) return false;
    }
  return true;
}

NormalWord reduce(const GraphProductSpec& spec,
                  const std::vector<Syllable>& input) {
  std::vector<Syllable> w;
  for (Syllable s : input) {
    check_syllable(spec, s);
    right_multiply(spec, w, s);
  }
  return make_word_unchecked(spec, canonical_order(spec, std::move(w)));
}

NormalWord canonicalize(const GraphProductSpec& spec,
                        const std::vector<Syllable>& reduced) {
  if (!is_reduced(spec, reduced)) throw domain_error("word is not reduced");
  return make_word_unchecked(spec, canonical_order(spec, reduced));
}

NormalWord multiply(const NormalWord& a, const NormalWord& b) {
  if (!a.spec() || a.spec() != b.spec())
    throw domain_error("word spec mismatch");
  std::vector<Syllable> w = a.syllables();
  for (Syllable s : b.syllables()) right_multiply(*a.spec(), w, s);
  return make_word_unchecked(*a.spec(), canonical_order(*a.spec(), std::move(w)));
}

NormalWord multiply(const NormalWord& a, Syllable s) {
  if (!a.spec()) throw domain_error("word spec mismatch");
  check_syllable(*a.spec(), s);
  std::vector<Syllable> w = a.syllables();
  right_multiply(*a.spec(), w, s);
  return make_word_unchecked(*a.spec(), canonical_order(*a.spec(), std::move(w)));
}

NormalWord inverse(const NormalWord& a) {
  if (!a.spec()) throw domain_error("word spec mismatch");
  const GraphProductSpec& spec = *a.spec();
  std::vector<Syllable> w;
  w.reserve(a.syllables().size());
  for (auto it = a.syllables().rbegin(); it != a.syllables().rend(); ++it)
    w.push_back({it->vertex, spec.group(it->vertex).inverse(it->value)});
  return make_word_unchecked(spec, canonical_order(spec, std::move(w)));
}

bool equal(const GraphProductSpec& spec, const std::vector<Syllable>& a,
           const std::vector<Syllable>& b) {
  return reduce(spec, a) == reduce(spec, b);
}

std::vector<Syllable> head_syllables(const GraphProductSpec& spec,
                                     const std::vector<Syllable>& reduced) {
  std::vector<Syllable> out;
  for (int i = 0; i < static_cast<int>(reduced.size()); ++i) {
    bool front = true;
    for (int j = 0; j < i; ++j)
      if (!spec.graph().adjacent(reduced[j].vertex, reduced[i].vertex)) {
        front = false;
        break;
      }
    if (front) out.push_back(reduced[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Syllable> tail_syllables(const GraphProductSpec& spec,
                                     const std::vector<Syllable>& reduced) {
  int n = static_cast<int>(reduced.size());
  std::vector<Syllable> out;
  for (int i = n - 1; i >= 0; --i) {
    bool back = true;
    for (int j = i + 1; j < n; ++j)
      if (!spec.graph().adjacent(reduced[j].vertex, reduced[i].vertex)) {
        back = false;
        break;
      }
    if (back) out.push_back(reduced[i]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

WordAttributes attributes(const NormalWord& w) {
  if (!w.spec()) throw domain_error("word spec mismatch");
  WordAttributes a;
  a.length = w.length();
  for (Syllable s : w.syllables()) a.support.push_back(s.vertex);
  std::sort(a.support.begin(), a.support.end());
  a.support.erase(std::unique(a.support.begin(), a.support.end()),
                  a.support.end());
  a.head = head_syllables(*w.spec(), w.syllables());
  a.tail = tail_syllables(*w.spec(), w.syllables());
  return a;
}

std::vector<Syllable> parse_word(const GraphProductSpec& spec,
                                 const std::string& text) {
  if (text == "e") return {};
  if (text.empty()) throw parse_error("empty word expression (use 'e')");
  std::vector<Syllable> out;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t star = text.find('*', pos);
    std::string token = text.substr(
        pos, star == std::string::npos ? std::string::npos : star - pos);
    size_t colon = token.find(':');
    if (colon == std::string::npos || colon == 0 || colon + 1 == token.size())
      throw parse_error("malformed syllable: '" + token + "'");
    std::string name = token.substr(0, colon);
    std::string num = token.substr(colon + 1);
    int v = spec.graph().find_vertex(name);
    if (v < 0) throw parse_error("unknown vertex in word: " + name);
    errno = 0;
    char* end = nullptr;
    long long k = std::strtoll(num.c_str(), &end, 10);
    if (errno != 0 || end == num.c_str() || *end != '\0')
      throw parse_error("malformed syllable value: '" + num + "'");
    const GroupDescriptor& d = spec.group(v);
    if (d.kind() == GroupKind::finite_cyclic) {
      long long n = d.order();
      k = ((k % n) + n) % n;
    } else if (d.kind() == GroupKind::finite_table) {
      if (!d.valid(k))
        throw parse_error("table index out of range in word: " + token);
    }
    out.push_back({v, k});
    if (star == std::string::npos) break;
    pos = star + 1;
    if (pos == text.size()) throw parse_error("trailing '*' in word");
  }
  return out;
}

std::string format_syllable(const GraphProductSpec& spec, Syllable s) {
  return spec.graph().vertex_name(s.vertex) + ":" + std::to_string(s.value);
}

std::string format_word(const GraphProductSpec& spec, const NormalWord& w) {
  if (w.empty()) return "e";
  std::string out;
  for (size_t i = 0; i < w.syllables().size(); ++i) {
    if (i) out += '*';
    out += format_syllable(spec, w.syllables()[i]);
  }
  return out;
}

} // namespace gp
