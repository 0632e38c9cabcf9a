#pragma once

#include <string>
#include <vector>

namespace gp {

// Elements are plain integers: a residue in [0,n) for finite cyclic
// groups, an arbitrary integer for Z, a row index for table groups.
using GroupElement = long long;

enum class GroupKind { finite_cyclic, integers, finite_table };

// A concrete vertex group with decidable arithmetic. Three kinds are
// supported: Z/nZ, Z, and explicit finite multiplication tables. All of
// them are hyperbolic, which the classifier relies on.
class GroupDescriptor {
public:
  static GroupDescriptor cyclic(long long n);
  static GroupDescriptor integers();
  // mul[a][b] is the product ab. Associativity, a two-sided identity
  // and inverses are verified; violations throw domain_error.
  static GroupDescriptor table(const std::vector<std::vector<long long>>& mul);

  GroupKind kind() const { return kind_; }
  bool finite() const { return kind_ != GroupKind::integers; }
  // Only meaningful for finite kinds.
  long long order() const { return order_; }
  bool is_hyperbolic() const { return true; }

  GroupElement identity() const { return identity_; }
  bool is_identity(GroupElement a) const { return a == identity_; }
  bool valid(GroupElement a) const;
  GroupElement multiply(GroupElement a, GroupElement b) const;
  GroupElement inverse(GroupElement a) const;

  // Non-identity elements, ascending. The bound restricts Z to
  // {-bound..-1, 1..bound} and is ignored by finite kinds.
  std::vector<GroupElement> enumerate(long long bound) const;

  // Smallest non-identity element, used wherever a deterministic
  // representative syllable is needed.
  GroupElement canonical_nontrivial() const;

  // Geodesic word length over the generating set (generators count with
  // their inverses).
  long long word_length(GroupElement a) const;

  // Default generating sets: {1} for cyclic and Z, every non-identity
  // element for tables. Overrides must still generate the group.
  void set_generators(const std::vector<GroupElement>& gens);
  const std::vector<GroupElement>& generators() const { return gens_; }

  bool operator==(const GroupDescriptor& other) const;

private:
  GroupKind kind_ = GroupKind::finite_cyclic;
  long long order_ = 0;       // 0 for Z
  GroupElement identity_ = 0;
  std::vector<std::vector<long long>> mul_;
  std::vector<long long> inv_;
  std::vector<GroupElement> gens_;
  std::vector<long long> wordlen_;  // indexed by element; lazy for cyclic

  std::vector<long long> bfs_word_lengths(
      const std::vector<GroupElement>& gens) const;
};

} // namespace gp
