#include <set>

#include "doctest.h"
#include "syv/superindex.hpp"

using syv::PartitionData;
using syv::SuperIndexSet;

TEST_CASE("superindex: parity and cyclic labels") {
  SuperIndexSet I(2, 3);
  CHECK(I.parity(2) == 0);
  CHECK(I.parity(-3) == 1);
  CHECK(I.parity_cyclic(0) == 1);
  CHECK_THROWS_AS(I.parity(0), syv::IndexError);
  CHECK_THROWS_AS(I.parity(3), syv::IndexError);
  CHECK(I.cyclic(-1) == 3);
  CHECK(I.cyclic(-3) == 0);
  std::vector<int> seen(5, 0);
  for (int lab : {1, 2, -1, -2, -3}) {
    int c = I.cyclic(lab);
    seen[static_cast<size_t>(c)]++;
    CHECK(I.from_cyclic(c) == lab);
    CHECK(I.parity_cyclic(c) == I.parity(lab));
  }
  for (int v : seen) CHECK(v == 1);
  CHECK(I.next(2) == -1);
  CHECK(I.next(-3) == 1);
}

TEST_CASE("superindex: alternating sum") {
  SuperIndexSet I(2, 3);
  CHECK(I.alt_hat(1) == 1);
  CHECK(I.alt_hat(2) == 2);
  CHECK(I.alt_hat(3) == 1);
  CHECK(I.alt_hat(4) == 0);
  CHECK(I.supertrace_coeffs() == std::vector<int>{1, 1, -1, -1, -1});
}

TEST_CASE("superindex: rows and columns") {
  PartitionData P({5, 2}, {4, 2});
  CHECK(P.col(6) == 2);
  CHECK(P.row(6) == 4);
  CHECK(P.col(1) == 1);
  CHECK(P.row(1) == 1);
  CHECK(P.col(-5) == 2);
  CHECK(P.row(-5) == -3);
  CHECK_FALSE(P.hat(1).has_value());
  CHECK(P.hat(4) == std::optional<int>(6));
  CHECK(P.tilde(6) == std::optional<int>(4));
  CHECK(P.hat(-3) == std::optional<int>(-5));
  PartitionData single({3}, {1});
  for (int i : single.labels()) CHECK_FALSE(single.hat(i).has_value());
}

TEST_CASE("superindex: row/col bijectivity and hat/tilde inverse") {
  for (auto [u, q] : {std::pair{std::vector<int>{3, 1}, std::vector<int>{2, 1}},
                      std::pair{std::vector<int>{5, 2}, std::vector<int>{4, 2}},
                      std::pair{std::vector<int>{4, 2, 1}, std::vector<int>{3, 3, 0}}}) {
    PartitionData P(u, q);
    std::set<std::pair<int, int>> pairs;
    for (int i : P.labels()) {
      CHECK(pairs.insert({P.row(i), P.col(i)}).second);
      CHECK(P.at(P.row(i), P.col(i)) == std::optional<int>(i));
      CHECK(P.row_in_column(P.row(i), P.col(i)));
      if (auto h = P.hat(i)) CHECK(P.tilde(*h) == std::optional<int>(i));
      if (auto t = P.tilde(i)) CHECK(P.hat(*t) == std::optional<int>(i));
    }
  }
  CHECK_THROWS_AS(PartitionData({2, 1}, {2, 1}), syv::IndexError);
  CHECK_THROWS_AS(PartitionData({1, 2}, {0, 0}), syv::IndexError);
}

TEST_CASE("superindex: new rows of a column") {
  PartitionData P({5, 2}, {4, 2});
  CHECK(P.new_rows(1) == std::vector<int>{1, 2, 3, -1, -2});
  CHECK(P.new_rows(2) == std::vector<int>{4, 5, -3, -4});
}
