#include <doctest.h>

#include <random>
#include <sstream>

#include "fixtures.hpp"
#include "hadamard/gram.hpp"
#include "hadamard/io.hpp"
#include "hadamard/partition.hpp"
#include "oracles.hpp"

using namespace hadamard;

namespace {

GroupList gl(int depth, std::vector<Group> groups) { return GroupList{depth, std::move(groups)}; }

PartitionMatrix listing15() {
  std::istringstream in(fixtures::matrix15_listing());
  return io::read_grouplist(in).at(0).matrix;
}

}  // namespace

TEST_CASE("decode_row") {
  CHECK(bits_to_string(decode_row(gl(1, {{0, 8}, {1, 7}}))) == "111111110000000");
  CHECK(bits_to_string(decode_row(gl(3, {{1, 1}, {2, 1}, {4, 1}}))) == "011");
  CHECK(bits_to_string(decode_row(root_group_list(7))) == "1111111");
}

TEST_CASE("encode_row") {
  const BitMatrix t = fixtures::matrix15();
  const GroupList r1 = gl(1, {{0, 8}, {1, 7}});
  const GroupList r2 = encode_row(t.row(1), r1);
  CHECK(r2 == gl(2, {{0, 4}, {1, 4}, {2, 4}, {3, 3}}));
  CHECK(encode_row(t.row(2), r2) == gl(3, {{0, 3}, {1, 1}, {2, 1}, {3, 3}, {4, 1}, {5, 3}, {6, 3}}));

  const GroupList zeros = encode_row(BitVector(15, 0), r2);
  REQUIRE(zeros.groups.size() == r2.groups.size());
  for (std::size_t s = 0; s < r2.groups.size(); ++s)
    CHECK(zeros.groups[s] == Group{2 * r2.groups[s].label + 1, r2.groups[s].count});
  CHECK(zeros.depth == 3);
}

TEST_CASE("encode_row rejects rows that are not ones-first within a span") {
  const GroupList r1 = gl(1, {{0, 2}, {1, 1}});
  CHECK_THROWS_AS(encode_row(bits_from_string("011"), r1, 1), NonCanonicalRow);
  CHECK_FALSE(is_canonical_row(bits_from_string("011"), r1));
  CHECK(is_canonical_row(bits_from_string("101"), r1));
  CHECK_THROWS_AS(encode_row(bits_from_string("10"), r1), LengthMismatch);
  try {
    encode_matrix(BitMatrix{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    FAIL("expected NonCanonicalRow");
  } catch (const NonCanonicalRow& e) {
    CHECK(e.row() == 1);
  }
}

TEST_CASE("encode_matrix and decode_matrix") {
  CHECK(encode_matrix(fixtures::matrix15()) == listing15());
  CHECK(decode_matrix(listing15()) == fixtures::matrix15());

  const PartitionMatrix p3{3,
                           {gl(1, {{0, 2}, {1, 1}}), gl(2, {{0, 1}, {1, 1}, {2, 1}}),
                            gl(3, {{1, 1}, {2, 1}, {4, 1}})}};
  CHECK(encode_matrix(fixtures::matrix3()) == p3);
  CHECK(decode_matrix(p3) == fixtures::matrix3());
  CHECK(is_hadamard_zo(decode_matrix(p3)));

  CHECK(decode_matrix(PartitionMatrix{1, {root_group_list(1)}}) == BitMatrix{{1}});
  CHECK(bits_to_string(decode_row(PartitionMatrix{7, {root_group_list(7)}}.rows[0])) == "1111111");
}

TEST_CASE("label bits record the column history") {
  const BitMatrix t = fixtures::matrix15();
  const PartitionMatrix p = encode_matrix(t);
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    std::size_t col = 0;
    for (const Group& g : p.rows[i].groups) {
      for (int c = 0; c < g.count; ++c, ++col) {
        for (std::size_t j = 0; j <= i; ++j) {
          const std::uint64_t qq = std::uint64_t{1} << (i - j);
          // Even quotient <=> the column carries a 1 in row j.
          CHECK(((g.label / qq) % 2 == 0) == (t(j, col) == 1));
        }
      }
    }
    CHECK(p.rows[i].total() == 15);
    CHECK(p.rows[i].groups.size() <= std::min<std::size_t>(std::size_t{1} << (i + 1), 15));
  }
}

TEST_CASE("encode inverts decode on group lists") {
  const PartitionMatrix p = listing15();
  GroupList parent = root_group_list(15);
  for (const GroupList& g : p.rows) {
    CHECK(encode_row(decode_row(g), parent) == g);
    parent = g;
  }
}

TEST_CASE("canonicalize") {
  std::mt19937_64 rng(23);
  const BitMatrix t = fixtures::matrix15();
  CHECK(canonicalize(t) == t);
  for (int trial = 0; trial < 100; ++trial) {
    const BitMatrix shuffled = oracles::permute(t, rng);
    const BitMatrix c = canonicalize(shuffled);
    CHECK(canonicalize(c) == c);
    CHECK(decode_matrix(encode_matrix(c)) == c);
    CHECK(is_hadamard_zo(c));
  }
  for (int trial = 0; trial < 200; ++trial) {
    const BitMatrix r = oracles::random_bit_matrix(1 + trial % 10, rng);
    const BitMatrix c = canonicalize(r);
    CHECK(decode_matrix(encode_matrix(c)) == c);
  }
}

TEST_CASE("check_partition_matrix") {
  PartitionMatrix p = listing15();
  CHECK_NOTHROW(check_partition_matrix(p));

  SUBCASE("count mismatch") {
    p.rows[1].groups[0].count = 5;
    CHECK_THROWS_AS(check_partition_matrix(p), InvalidPartition);
  }
  SUBCASE("label with no parent") {
    // Row 1 is all zeros, so row 2 can only use labels 2 and 3.
    const GroupList r1 = gl(1, {{1, 3}});
    CHECK_THROWS_AS(check_refines(gl(2, {{0, 1}, {3, 2}}), r1), InvalidPartition);
    CHECK_NOTHROW(check_refines(gl(2, {{2, 1}, {3, 2}}), r1));
  }
  SUBCASE("labels out of order") {
    std::swap(p.rows[0].groups[0], p.rows[0].groups[1]);
    CHECK_THROWS_AS(check_partition_matrix(p), InvalidPartition);
  }
  SUBCASE("label too wide for its depth") {
    CHECK_THROWS_AS(check_group_list(gl(1, {{0, 1}, {2, 1}}), 2), InvalidPartition);
  }
  SUBCASE("zero count") {
    CHECK_THROWS_AS(check_group_list(gl(1, {{0, 2}, {1, 0}}), 2), InvalidPartition);
  }
  SUBCASE("missing rows") {
    p.rows.pop_back();
    CHECK_THROWS_AS(check_partition_matrix(p), InvalidPartition);
  }
}
