#include <gtest/gtest.h>

#include <cstdint>
#include <numeric>
#include <random>

#include "ncat/intlinalg.hpp"

namespace ncat {
namespace {

using Small = std::vector<std::vector<std::int64_t>>;

IntMatrix to_matrix(const Small& a, std::size_t cols) {
  IntMatrix m(a.size(), cols);
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<long>(a[r][c]);
  }
  return m;
}

Small random_small(std::mt19937& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  Small a(rows, std::vector<std::int64_t>(cols));
  for (auto& row : a) {
    for (auto& x : row) x = d(rng);
  }
  return a;
}

// Cofactor expansion; only for the tiny matrices used here.
std::int64_t laplace(const Small& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  std::int64_t total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    Small minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<std::int64_t> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) row.push_back(a[r][k]);
      }
      minor.push_back(row);
    }
    total += (c % 2 ? -1 : 1) * a[0][c] * laplace(minor);
  }
  return total;
}

void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors from determinantal divisors: d_k = gcd of k×k minors.
std::vector<std::int64_t> invariant_factors(const Small& a, std::size_t cols) {
  const std::size_t rows = a.size();
  std::vector<std::int64_t> factors;
  std::int64_t previous = 1;
  for (std::size_t k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<std::size_t>> rs, cs;
    std::vector<std::size_t> cur;
    subsets(rows, k, 0, cur, rs);
    subsets(cols, k, 0, cur, cs);
    std::int64_t g = 0;
    for (const auto& r : rs) {
      for (const auto& c : cs) {
        Small m(k, std::vector<std::int64_t>(k));
        for (std::size_t i = 0; i < k; ++i) {
          for (std::size_t j = 0; j < k; ++j) m[i][j] = a[r[i]][c[j]];
        }
        g = std::gcd(g, laplace(m));
      }
    }
    if (g == 0) break;
    factors.push_back(g / previous);
    previous = g;
  }
  return factors;
}

bool unimodular(const IntMatrix& m) {
  const Integer d = determinant(m);
  return d == 1 || d == -1;
}

TEST(IntMatrix, Arithmetic) {
  IntMatrix a{{1, 2}, {3, 4}};
  IntMatrix b{{0, 1}, {1, 0}};
  EXPECT_EQ(a * b, (IntMatrix{{2, 1}, {4, 3}}));
  EXPECT_EQ(a + b, (IntMatrix{{1, 3}, {4, 4}}));
  EXPECT_EQ(a - a, IntMatrix::zero(2, 2));
  EXPECT_EQ(a.transpose(), (IntMatrix{{1, 3}, {2, 4}}));
  EXPECT_EQ(a.hconcat(b).columns(2, 4), b);
  EXPECT_EQ(a.submatrix({1}, {0}), (IntMatrix{{3}}));
  EXPECT_EQ(Integer(2) * a, (IntMatrix{{2, 4}, {6, 8}}));
  EXPECT_TRUE(IntMatrix::zero(3, 0).is_zero());
}

TEST(Determinant, Examples) {
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {3, 4}}), -2);
  EXPECT_EQ(determinant(IntMatrix{{0, 1}, {1, 0}}), -1);
  EXPECT_EQ(determinant(IntMatrix{{2, 0, 0}, {0, 3, 0}, {0, 0, 4}}), 24);
  EXPECT_EQ(determinant(IntMatrix::identity(0)), 1);
  EXPECT_EQ(determinant(IntMatrix{{1, 2}, {2, 4}}), 0);
}

TEST(Determinant, MatchesCofactorExpansion) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 5;
    auto a = random_small(rng, n, n, 6);
    EXPECT_EQ(determinant(to_matrix(a, n)), laplace(a));
  }
}

TEST(Snf, Examples) {
  auto s = snf(IntMatrix{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  EXPECT_EQ(s.S, (IntMatrix{{2, 0, 0}, {0, 6, 0}, {0, 0, 12}}));
  EXPECT_EQ(s.rank, 3u);
  auto z = snf(IntMatrix::zero(2, 3));
  EXPECT_EQ(z.rank, 0u);
  EXPECT_TRUE(z.S.is_zero());
  auto e = snf(IntMatrix(0, 2));
  EXPECT_EQ(e.V.rows(), 2u);
}

// 500 random shapes up to 4×5: U A V = S, U and V unimodular, divisibility
// chain, and the diagonal equals the invariant factors from minors.
TEST(Snf, RandomAgainstDeterminantalDivisors) {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> dim(1, 4);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t rows = dim(rng);
    const std::size_t cols = dim(rng) + (trial % 2);
    auto small = random_small(rng, rows, cols, trial % 3 == 0 ? 1 : 9);
    const auto a = to_matrix(small, cols);
    const auto s = snf(a);
    ASSERT_EQ(s.U * a * s.V, s.S);
    ASSERT_TRUE(unimodular(s.U));
    ASSERT_TRUE(unimodular(s.V));
    const auto expected = invariant_factors(small, cols);
    ASSERT_EQ(s.rank, expected.size());
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        if (r != c) ASSERT_EQ(s.S(r, c), 0);
      }
    }
    for (std::size_t k = 0; k < std::min(rows, cols); ++k) {
      if (k < expected.size()) {
        ASSERT_EQ(s.S(k, k), static_cast<long>(expected[k])) << trial;
      } else {
        ASSERT_EQ(s.S(k, k), 0);
      }
    }
    ASSERT_EQ(rank(a), expected.size());
  }
}

TEST(Kernel, RandomProperties) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 3;
    const std::size_t cols = 2 + trial % 4;
    const auto a = to_matrix(random_small(rng, rows, cols, 4), cols);
    const auto k = kernel_basis(a);
    ASSERT_EQ(k.rows(), cols);
    ASSERT_EQ(k.cols(), cols - rank(a));
    ASSERT_TRUE((a * k).is_zero());
    // Saturated: every invariant factor of a kernel basis is 1.
    const auto s = snf(k);
    for (std::size_t i = 0; i < s.rank; ++i) ASSERT_EQ(s.S(i, i), 1);
  }
}

TEST(Kernel, Example) {
  auto k = kernel_basis(IntMatrix{{2, 4}});
  ASSERT_EQ(k.cols(), 1u);
  EXPECT_TRUE(k == (IntMatrix{{2}, {-1}}) || k == (IntMatrix{{-2}, {1}}));
}

TEST(LatticeBasis, SpansTheSameLattice) {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t rows = 1 + trial % 4;
    const std::size_t cols = 1 + (trial / 4) % 5;
    const auto m = to_matrix(random_small(rng, rows, cols, 5), cols);
    const auto b = lattice_basis(m);
    ASSERT_EQ(b.cols(), rank(m));
    EXPECT_NO_THROW(solve_integer(b, m));
    if (b.cols() > 0) EXPECT_NO_THROW(solve_integer(m, b));
  }
}

TEST(SolveInteger, RandomAndFailure) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t rows = 1 + trial % 4;
    const std::size_t cols = 1 + (trial / 3) % 4;
    const auto a = to_matrix(random_small(rng, rows, cols, 5), cols);
    const auto x = to_matrix(random_small(rng, cols, 2, 5), 2);
    const auto b = a * x;
    const auto y = solve_integer(a, b);
    ASSERT_EQ(a * y, b);
  }
  try {
    solve_integer(IntMatrix{{2}}, IntMatrix{{1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::containment);
  }
  EXPECT_THROW(solve_integer(IntMatrix{{1, 0}}, IntMatrix{{1}, {0}}), Error);
}

TEST(AbelianGroup, Normalisation) {
  auto g = AbelianGroup::from_orders({4, 6, 0, 1});
  EXPECT_EQ(g.free_rank, 1u);
  EXPECT_EQ(g.torsion, (std::vector<Integer>{2, 12}));
  EXPECT_TRUE(g.valid());
  EXPECT_EQ(g.to_string(), "Z ⊕ Z/2 ⊕ Z/12");
  EXPECT_EQ(AbelianGroup::from_orders({2, 3}).to_string(), "Z/6");
  EXPECT_EQ(AbelianGroup::free(2).to_string(), "Z^2");
  EXPECT_EQ(AbelianGroup().to_string(), "0");
  EXPECT_EQ(AbelianGroup::cyclic(1), AbelianGroup());
  EXPECT_EQ(AbelianGroup::cyclic(0), AbelianGroup::free(1));
  EXPECT_FALSE((AbelianGroup{0, {3, 2}}).valid());
  EXPECT_EQ(g.generator_order(0), 0);
  EXPECT_EQ(g.generator_order(2), 12);
}

TEST(AbelianGroup, Parsing) {
  for (const char* text : {"0", "Z", "Z^3", "Z/2", "Z^2 ⊕ Z/2 ⊕ Z/4"}) {
    EXPECT_EQ(parse_group(text).to_string(), text);
  }
  EXPECT_EQ(parse_group("Z/2 + Z/3"), AbelianGroup::cyclic(6));
  EXPECT_EQ(parse_group("Z + Z"), AbelianGroup::free(2));
  for (const char* bad : {"", "Q", "Z/", "Z^x", "Z/0", "Z ⊕"}) {
    EXPECT_THROW(parse_group(bad), Error) << bad;
  }
}

TEST(Subquotient, Examples) {
  EXPECT_EQ(subquotient(IntMatrix::identity(2), IntMatrix{{2, 0}, {0, 0}}).to_string(), "Z ⊕ Z/2");
  EXPECT_EQ(subquotient(IntMatrix{{2}, {0}}, IntMatrix{{4}, {0}}), AbelianGroup::cyclic(2));
  EXPECT_EQ(subquotient(IntMatrix{{1}}, IntMatrix(1, 0)), AbelianGroup::free(1));
  EXPECT_EQ(subquotient(IntMatrix(3, 0), IntMatrix(3, 0)), AbelianGroup());
  try {
    subquotient(IntMatrix{{2}}, IntMatrix{{1}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::containment);
  }
}

TEST(Relations, TorsionHelpers) {
  const auto g = AbelianGroup::from_orders({0, 2, 4});
  EXPECT_EQ(relation_matrix(g), (IntMatrix{{0, 0}, {2, 0}, {0, 4}}));
  EXPECT_TRUE(in_relations(IntMatrix{{0}, {4}, {-8}}, g));
  EXPECT_FALSE(in_relations(IntMatrix{{1}, {0}, {0}}, g));
  EXPECT_EQ(reduce_mod_relations(IntMatrix{{5}, {3}, {-1}}, g), (IntMatrix{{5}, {1}, {3}}));
  // Z/2 → Z/4, 1 ↦ 2 respects torsion; 1 ↦ 1 does not.
  EXPECT_TRUE(respects_torsion(IntMatrix{{2}}, AbelianGroup::cyclic(2), AbelianGroup::cyclic(4)));
  EXPECT_FALSE(respects_torsion(IntMatrix{{1}}, AbelianGroup::cyclic(2), AbelianGroup::cyclic(4)));
}

}  // namespace
}  // namespace ncat
