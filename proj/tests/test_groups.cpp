#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "gp/error.hpp"
#include "gp/groups.hpp"

using gp::GroupDescriptor;
using gp::GroupElement;

namespace {

// Independent construction of the S3 multiplication table from
// permutation composition, (ab)(x) = a(b(x)). Lexicographic order puts
// the identity permutation at index 0.
std::vector<std::vector<long long>> s3_table() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::map<std::vector<int>, long long> index;
  for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  std::vector<std::vector<long long>> mul(6, std::vector<long long>(6));
  for (size_t a = 0; a < 6; ++a)
    for (size_t b = 0; b < 6; ++b) {
      std::vector<int> ab(3);
      for (int x = 0; x < 3; ++x) ab[x] = perms[a][perms[b][x]];
      mul[a][b] = index[ab];
    }
  return mul;
}

void check_group_axioms(const GroupDescriptor& d) {
  auto elems = d.enumerate(1);
  elems.push_back(d.identity());
  for (GroupElement a : elems) {
    CHECK(d.multiply(a, d.identity()) == a);
    CHECK(d.multiply(d.identity(), a) == a);
    CHECK(d.is_identity(d.multiply(a, d.inverse(a))));
    CHECK(d.is_identity(d.multiply(d.inverse(a), a)));
    for (GroupElement b : elems)
      for (GroupElement c : elems)
        CHECK(d.multiply(d.multiply(a, b), c) ==
              d.multiply(a, d.multiply(b, c)));
  }
}

} // namespace

TEST_CASE("multiply examples") {
  auto c3 = GroupDescriptor::cyclic(3);
  CHECK(c3.multiply(2, 2) == 1);

  auto z = GroupDescriptor::integers();
  CHECK(z.multiply(5, -2) == 3);

  CHECK_THROWS_AS(c3.multiply(2, 3), gp::domain_error);
}

TEST_CASE("group axioms hold exhaustively for finite kinds") {
  for (long long n = 2; n <= 6; ++n) check_group_axioms(GroupDescriptor::cyclic(n));
  check_group_axioms(GroupDescriptor::table(s3_table()));

  auto z = GroupDescriptor::integers();
  std::mt19937 rng(42);
  std::uniform_int_distribution<long long> pick(-50, 50);
  for (int i = 0; i < 100; ++i) {
    long long a = pick(rng), b = pick(rng), c = pick(rng);
    CHECK(z.multiply(z.multiply(a, b), c) == z.multiply(a, z.multiply(b, c)));
    CHECK(z.is_identity(z.multiply(a, z.inverse(a))));
  }
}

TEST_CASE("enumerate") {
  CHECK(GroupDescriptor::cyclic(2).enumerate(5) ==
        std::vector<GroupElement>{1});
  CHECK(GroupDescriptor::integers().enumerate(2) ==
        std::vector<GroupElement>{-2, -1, 1, 2});
  CHECK(GroupDescriptor::cyclic(4).enumerate(1) ==
        std::vector<GroupElement>{1, 2, 3});
  CHECK_THROWS_AS(GroupDescriptor::integers().enumerate(0), gp::domain_error);
}

TEST_CASE("word length of an integer is its absolute value") {
  auto z = GroupDescriptor::integers();
  for (long long k = -10; k <= 10; ++k) CHECK(z.word_length(k) == std::abs(k));
}

TEST_CASE("word length over cyclic default generators wraps around") {
  auto c5 = GroupDescriptor::cyclic(5);
  CHECK(c5.word_length(0) == 0);
  CHECK(c5.word_length(1) == 1);
  CHECK(c5.word_length(2) == 2);
  CHECK(c5.word_length(3) == 2);
  CHECK(c5.word_length(4) == 1);
}

TEST_CASE("trivial groups are rejected") {
  CHECK_THROWS_WITH_AS(GroupDescriptor::cyclic(1),
                       doctest::Contains("trivial vertex group"),
                       gp::domain_error);
  CHECK_THROWS_AS(GroupDescriptor::cyclic(0), gp::domain_error);
  CHECK_THROWS_AS(GroupDescriptor::table({{0}}), gp::domain_error);
}

TEST_CASE("malformed tables are rejected with the failing axiom") {
  CHECK_THROWS_WITH_AS(GroupDescriptor::table({{0, 1}, {1}}),
                       doctest::Contains("not square"), gp::domain_error);
  CHECK_THROWS_WITH_AS(GroupDescriptor::table({{0, 1}, {1, 7}}),
                       doctest::Contains("out of range"), gp::domain_error);
  CHECK_THROWS_WITH_AS(GroupDescriptor::table({{0, 0}, {0, 0}}),
                       doctest::Contains("no identity"), gp::domain_error);
  CHECK_THROWS_WITH_AS(
      GroupDescriptor::table({{0, 1, 2}, {1, 1, 2}, {2, 2, 1}}),
      doctest::Contains("no inverse"), gp::domain_error);
  CHECK_THROWS_WITH_AS(
      GroupDescriptor::table(
          {{0, 1, 2, 3}, {1, 3, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}}),
      doctest::Contains("not associative"), gp::domain_error);
}

TEST_CASE("table identity does not have to sit at index 0") {
  auto d = GroupDescriptor::table({{1, 0}, {0, 1}});
  CHECK(d.identity() == 1);
  CHECK(d.canonical_nontrivial() == 0);
  CHECK(d.enumerate(1) == std::vector<GroupElement>{0});
  CHECK(d.is_identity(d.multiply(0, 0)));
}

TEST_CASE("generator overrides") {
  auto c4 = GroupDescriptor::cyclic(4);
  CHECK_THROWS_WITH_AS(c4.set_generators({2}),
                       doctest::Contains("do not generate"), gp::domain_error);
  c4.set_generators({3});
  CHECK(c4.word_length(2) == 2);
  CHECK(c4.word_length(3) == 1);
  CHECK(c4.word_length(1) == 1);  // 1 = 3^{-1}

  auto c6 = GroupDescriptor::cyclic(6);
  c6.set_generators({2, 3});
  CHECK(c6.word_length(1) == 2);
  CHECK(c6.word_length(5) == 2);

  auto z = GroupDescriptor::integers();
  CHECK_THROWS_AS(z.set_generators({2}), gp::domain_error);
  z.set_generators({2, 3});
  CHECK(z.word_length(0) == 0);
  CHECK(z.word_length(1) == 2);
  CHECK(z.word_length(5) == 2);
  CHECK(z.word_length(6) == 2);
  CHECK(z.word_length(7) == 3);

  CHECK_THROWS_AS(c4.set_generators({0}), gp::domain_error);
  CHECK_THROWS_AS(c4.set_generators({}), gp::domain_error);
}

TEST_CASE("s3 table loads and behaves like S3") {
  auto s3 = GroupDescriptor::table(s3_table());
  CHECK(s3.order() == 6);
  CHECK(s3.identity() == 0);
  CHECK(s3.is_hyperbolic());
  // S3 is non-abelian, so some pair must fail to commute.
  bool commutative = true;
  for (GroupElement a : s3.enumerate(1))
    for (GroupElement b : s3.enumerate(1))
      if (s3.multiply(a, b) != s3.multiply(b, a)) commutative = false;
  CHECK_FALSE(commutative);
}
