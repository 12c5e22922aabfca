#include <gtest/gtest.h>

#include "mfl/error.hpp"
#include "mfl/linalg.hpp"
#include "mfl/rational.hpp"
#include "support.hpp"

using namespace mfl;

namespace {

linalg::Matrix random_matrix(std::mt19937_64& gen, std::size_t rows, std::size_t cols) {
  std::uniform_int_distribution<int> shape(0, 3);
  linalg::Matrix m(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    linalg::Vector row(cols);
    for (auto& x : row) {
      // Mostly zeros, as in the presentations.
      if (shape(gen) == 0) {
        x = Rational(test::random_rational(gen, -9, 9).get_num(), 1 + shape(gen));
        x.canonicalize();
      }
    }
    m.append_row(std::move(row));
  }
  // Duplicate a combination of rows now and then to force rank deficiency.
  if (rows >= 2 && shape(gen) < 2) {
    linalg::Vector row(cols);
    for (std::size_t c = 0; c < cols; ++c) row[c] = 2 * m(0, c) - Rational(1, 3) * m(1, c);
    m.append_row(std::move(row));
  }
  return m;
}

}  // namespace

TEST(Rational, TextForm) {
  EXPECT_EQ(to_string(Rational(6, 4)), "3/2");
  EXPECT_EQ(to_string(Rational(-6, 4)), "-3/2");
  EXPECT_EQ(to_string(Rational(4, -2)), "-2");
  EXPECT_EQ(to_string(Rational(0)), "0");
  EXPECT_EQ(parse_rational("-10/4"), Rational(-5, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), SyntaxError);
  EXPECT_THROW(parse_rational("1/"), SyntaxError);
  EXPECT_THROW(parse_rational("x"), SyntaxError);
}

TEST(Linalg, RankMatchesBareiss) {
  auto gen = test::rng(21);
  std::uniform_int_distribution<std::size_t> dim(1, 9);
  for (int s = 0; s < 300; ++s) {
    const auto m = random_matrix(gen, dim(gen), dim(gen));
    ASSERT_EQ(linalg::rank(m), test::bareiss_rank(m)) << "seed " << test::seed() << " sample " << s;
  }
}

TEST(Linalg, NullSpaceIsKernel) {
  auto gen = test::rng(22);
  std::uniform_int_distribution<std::size_t> dim(1, 9);
  for (int s = 0; s < 200; ++s) {
    const auto m = random_matrix(gen, dim(gen), dim(gen));
    const auto kernel = linalg::null_space(m);
    ASSERT_EQ(kernel.size() + linalg::rank(m), m.cols()) << "seed " << test::seed();
    for (const auto& x : kernel) {
      for (std::size_t r = 0; r < m.rows(); ++r) {
        Rational v;
        for (std::size_t c = 0; c < m.cols(); ++c) v += m(r, c) * x[c];
        ASSERT_EQ(v, 0) << "seed " << test::seed();
      }
    }
    linalg::Matrix k(m.cols());
    for (const auto& x : kernel) k.append_row(x);
    EXPECT_EQ(test::bareiss_rank(k), kernel.size());
  }
}

TEST(Linalg, ReduceModuloIsCanonical) {
  auto gen = test::rng(23);
  std::uniform_int_distribution<std::size_t> dim(1, 7);
  for (int s = 0; s < 100; ++s) {
    const auto m = random_matrix(gen, dim(gen), dim(gen));
    const auto e = linalg::row_echelon(m);
    linalg::Vector v(m.cols());
    for (auto& x : v) x = test::random_rational(gen, -5, 5);
    const auto r = linalg::reduce_modulo(e, v);
    EXPECT_EQ(linalg::reduce_modulo(e, r), r);
    for (std::size_t pc : e.pivots) EXPECT_EQ(r[pc], 0);
    // Adding a row of m does not change the representative.
    if (m.rows() > 0) {
      auto w = v;
      for (std::size_t c = 0; c < m.cols(); ++c) w[c] += 3 * m(0, c);
      EXPECT_EQ(linalg::reduce_modulo(e, w), r) << "seed " << test::seed();
    }
  }
}

TEST(Linalg, EchelonShape) {
  linalg::Matrix m(3);
  m.append_row({Rational(0), Rational(2), Rational(4)});
  m.append_row({Rational(1), Rational(1), Rational(1)});
  m.append_row({Rational(1), Rational(2), Rational(3)});
  const auto e = linalg::row_echelon(m);
  EXPECT_EQ(e.rank(), 2u);
  EXPECT_EQ(e.pivots, (std::vector<std::size_t>{0, 1}));
  EXPECT_EQ(e.free_columns(), (std::vector<std::size_t>{2}));
  EXPECT_EQ(e.reduced(0, 2), -1);
  EXPECT_EQ(e.reduced(1, 2), 2);
}
