#include <doctest.h>

#include "ag/linalg.hpp"
#include "test_support.hpp"

using namespace ag;

namespace {

RatMatrix from_longs(std::vector<std::vector<long>> rows) {
  RatMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = Rational(rows[i][j]);
  return m;
}

}  // namespace

TEST_CASE("row reduction, rank and kernel") {
  const RatMatrix m = from_longs({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  CHECK(m.rank() == 2);
  const auto kernel = m.kernel();
  REQUIRE(kernel.size() == 1);
  for (const auto& v : kernel) CHECK(is_zero_vector(m.apply(v)));

  const Echelon e = m.row_reduce();
  CHECK(e.pivot_cols == std::vector<std::size_t>{0, 1});
  // RREF is canonical: x - z = 0, y + z = 0
  CHECK(e.reduced.at(0, 2) == Rational(1));
  CHECK(e.reduced.at(1, 2) == Rational(1));
}

TEST_CASE("inverse and singular detection") {
  const RatMatrix m = from_longs({{2, 1}, {1, 1}});
  const RatMatrix inv = m.inverse();
  CHECK(m * inv == RatMatrix::identity(2));
  CHECK_THROWS_AS(from_longs({{1, 2}, {2, 4}}).inverse(), SingularMatrixError);
  CHECK_FALSE(from_longs({{1, 2}, {2, 4}}).invertible());
}

TEST_CASE("solve with particular solutions and inconsistency") {
  const RatMatrix m = from_longs({{1, 1}, {1, -1}});
  const auto x = m.solve({Rational(3), Rational(1)});
  REQUIRE(x);
  CHECK((*x)[0] == Rational(2));
  CHECK((*x)[1] == Rational(1));

  const RatMatrix wide = from_longs({{1, 1, 0}});
  const auto y = wide.solve({Rational(5)});
  REQUIRE(y);
  CHECK(wide.apply(*y) == RatVec{Rational(5)});

  const RatMatrix bad = from_longs({{1, 1}, {1, 1}});
  CHECK_FALSE(bad.solve({Rational(0), Rational(1)}));
}

TEST_CASE("random inverse round trip") {
  auto& engine = testing::rng();
  for (int trial = 0; trial < 10; ++trial) {
    RatMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = testing::random_rational(engine);
    if (!m.invertible()) continue;
    CHECK(m * m.inverse() == RatMatrix::identity(4));
    CHECK(m.inverse() * m == RatMatrix::identity(4));
  }
}

TEST_CASE("row span closure bookkeeping") {
  RowSpan span(3);
  CHECK(span.insert({Rational(1), Rational(2), Rational(0)}));
  CHECK_FALSE(span.insert({Rational(2), Rational(4), Rational(0)}));
  CHECK(span.insert({Rational(0), Rational(0), Rational(7)}));
  CHECK(span.rank() == 2);
  CHECK(span.contains({Rational(3), Rational(6), Rational(-7)}));
  CHECK_FALSE(span.contains({Rational(0), Rational(1), Rational(0)}));
}
