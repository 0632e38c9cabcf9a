#include "gp/groups.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <numeric>

#include "gp/error.hpp"

namespace gp {

GroupDescriptor GroupDescriptor::cyclic(long long n) {
  if (n < 2) throw domain_error("trivial vertex group");
  GroupDescriptor d;
  d.kind_ = GroupKind::finite_cyclic;
  d.order_ = n;
  d.identity_ = 0;
  d.gens_ = {1};
  return d;
}

GroupDescriptor GroupDescriptor::integers() {
  GroupDescriptor d;
  d.kind_ = GroupKind::integers;
  d.order_ = 0;
  d.identity_ = 0;
  d.gens_ = {1};
  return d;
}

GroupDescriptor GroupDescriptor::table(
    const std::vector<std::vector<long long>>& mul) {
  long long n = static_cast<long long>(mul.size());
  if (n < 2) throw domain_error("trivial vertex group");
  for (auto& row : mul) {
    if (static_cast<long long>(row.size()) != n)
      throw domain_error("multiplication table is not square");
    for (long long x : row)
      if (x < 0 || x >= n)
        throw domain_error("multiplication table entry out of range");
  }

  long long id = -1;
  for (long long e = 0; e < n; ++e) {
    bool ok = true;
    for (long long x = 0; x < n; ++x)
      if (mul[e][x] != x || mul[x][e] != x) ok = false;
    if (ok) {
      id = e;
      break;
    }
  }
  if (id < 0) throw domain_error("multiplication table has no identity");

  std::vector<long long> inv(n, -1);
  for (long long a = 0; a < n; ++a) {
    for (long long b = 0; b < n; ++b)
      if (mul[a][b] == id && mul[b][a] == id) inv[a] = b;
    if (inv[a] < 0)
      throw domain_error("multiplication table has no inverse for element " +
                         std::to_string(a));
  }

  for (long long a = 0; a < n; ++a)
    for (long long b = 0; b < n; ++b)
      for (long long c = 0; c < n; ++c)
        if (mul[mul[a][b]][c] != mul[a][mul[b][c]])
          throw domain_error("multiplication table is not associative");

  GroupDescriptor d;
  d.kind_ = GroupKind::finite_table;
  d.order_ = n;
  d.identity_ = id;
  d.mul_ = mul;
  d.inv_ = inv;
  for (long long a = 0; a < n; ++a)
    if (a != id) d.gens_.push_back(a);
  d.wordlen_ = d.bfs_word_lengths(d.gens_);
  return d;
}

bool GroupDescriptor::valid(GroupElement a) const {
  if (kind_ == GroupKind::integers) return true;
  return a >= 0 && a < order_;
}

GroupElement GroupDescriptor::multiply(GroupElement a, GroupElement b) const {
  if (!valid(a) || !valid(b)) throw domain_error("group element out of range");
  switch (kind_) {
    case GroupKind::finite_cyclic:
      return (a + b) % order_;
    case GroupKind::integers:
      return a + b;
    case GroupKind::finite_table:
      return mul_[a][b];
  }
  throw domain_error("bad group kind");
}

GroupElement GroupDescriptor::inverse(GroupElement a) const {
  if (!valid(a)) throw domain_error("group element out of range");
  switch (kind_) {
    case GroupKind::finite_cyclic:
      return (order_ - a) % order_;
    case GroupKind::integers:
      return -a;
    case GroupKind::finite_table:
      return inv_[a];
  }
  throw domain_error("bad group kind");
}

std::vector<GroupElement> GroupDescriptor::enumerate(long long bound) const {
  if (bound < 1) throw domain_error("enumeration bound must be at least 1");
  std::vector<GroupElement> out;
  if (kind_ == GroupKind::integers) {
    for (long long k = -bound; k <= bound; ++k)
      if (k != 0) out.push_back(k);
  } else {
    for (long long a = 0; a < order_; ++a)
      if (a != identity_) out.push_back(a);
  }
  return out;
}

GroupElement GroupDescriptor::canonical_nontrivial() const {
  if (kind_ == GroupKind::integers) return 1;
  return identity_ == 0 ? 1 : 0;
}

long long GroupDescriptor::word_length(GroupElement a) const {
  if (!valid(a)) throw domain_error("group element out of range");
  if (kind_ == GroupKind::integers) {
    if (gens_.size() == 1 && gens_[0] == 1) return std::llabs(a);
    // Steps +-g commute, so some optimal sequence keeps every partial
    // sum within one max-generator of [min(0,a), max(0,a)].
    long long maxg = 0;
    for (long long g : gens_) maxg = std::max(maxg, std::llabs(g));
    long long lo = std::min<long long>(0, a) - maxg;
    long long hi = std::max<long long>(0, a) + maxg;
    std::vector<long long> dist(hi - lo + 1, -1);
    std::deque<long long> queue{0};
    dist[0 - lo] = 0;
    while (!queue.empty()) {
      long long x = queue.front();
      queue.pop_front();
      if (x == a) return dist[x - lo];
      for (long long g : gens_) {
        for (long long step : {g, -g}) {
          long long y = x + step;
          if (y < lo || y > hi || dist[y - lo] >= 0) continue;
          dist[y - lo] = dist[x - lo] + 1;
          queue.push_back(y);
        }
      }
    }
    throw domain_error("generators do not generate the group");
  }
  if (!wordlen_.empty()) return wordlen_[a];
  // Cyclic group over the default generating set {1}.
  return std::min(a, order_ - a);
}

std::vector<long long> GroupDescriptor::bfs_word_lengths(
    const std::vector<GroupElement>& gens) const {
  std::vector<long long> dist(order_, -1);
  dist[identity_] = 0;
  std::deque<long long> queue{identity_};
  while (!queue.empty()) {
    long long x = queue.front();
    queue.pop_front();
    for (GroupElement g : gens) {
      for (GroupElement step : {g, inverse(g)}) {
        long long y = multiply(x, step);
        if (dist[y] >= 0) continue;
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  for (long long v : dist)
    if (v < 0) throw domain_error("generators do not generate the group");
  return dist;
}

void GroupDescriptor::set_generators(const std::vector<GroupElement>& gens) {
  if (gens.empty()) throw domain_error("empty generating set");
  for (GroupElement g : gens) {
    if (!valid(g)) throw domain_error("group element out of range");
    if (is_identity(g))
      throw domain_error("identity is not allowed as a generator");
  }
  std::vector<GroupElement> sorted = gens;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (kind_ == GroupKind::integers) {
    long long g = 0;
    for (long long x : sorted) g = std::gcd(g, std::llabs(x));
    if (g != 1) throw domain_error("generators do not generate the group");
    gens_ = sorted;
    return;
  }
  if (order_ > 1'000'000)
    throw domain_error("vertex group too large for generator override");
  std::vector<long long> lengths = bfs_word_lengths(sorted);
  gens_ = sorted;
  wordlen_ = std::move(lengths);
}

bool GroupDescriptor::operator==(const GroupDescriptor& other) const {
  return kind_ == other.kind_ && order_ == other.order_ &&
         identity_ == other.identity_ && mul_ == other.mul_ &&
         gens_ == other.gens_;
}

} // namespace gp
