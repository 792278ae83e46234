#include <gtest/gtest.h>

#include <numeric>

#include "coarse/density.hpp"

using namespace coarse;

namespace {

Element r(std::int64_t i) { return Element({i}); }

std::vector<Element> residues(std::initializer_list<std::int64_t> xs) {
  std::vector<Element> out;
  for (auto x : xs) out.push_back(r(x));
  return out;
}

std::vector<Element> from_mask(std::uint64_t m, std::size_t n) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < n; ++i)
    if (m >> i & 1) out.push_back(r(static_cast<std::int64_t>(i)));
  return out;
}

// inf_F sup_x |F ∩ (x + A)| / |F| in Z_n, by plain modular arithmetic.
Rational oracle_sigma_left_zn(std::uint64_t A, std::size_t n) {
  Rational best(2);
  for (std::uint64_t F = 1; F < (1ULL << n); ++F) {
    std::int64_t top = 0, size = 0;
    for (std::size_t f = 0; f < n; ++f) size += F >> f & 1;
    for (std::size_t x = 0; x < n; ++x) {
      std::int64_t c = 0;
      for (std::size_t a = 0; a < n; ++a)
        if ((A >> a & 1) && (F >> ((x + a) % n) & 1)) ++c;
      top = std::max(top, c);
    }
    best = std::min(best, Rational(top, size));
  }
  return best;
}

// Least |X| with X + A = Z_n, trying subsets by size.
std::size_t oracle_cov_zn(std::uint64_t A, std::size_t n) {
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::uint64_t X = 1; X < (1ULL << n); ++X) {
      if (static_cast<std::size_t>(__builtin_popcountll(X)) != k) continue;
      std::uint64_t cov = 0;
      for (std::size_t x = 0; x < n; ++x)
        if (X >> x & 1)
          for (std::size_t a = 0; a < n; ++a)
            if (A >> a & 1) cov |= 1ULL << ((x + a) % n);
      if (cov == (1ULL << n) - 1) return k;
    }
  }
  return 0;
}

}  // namespace

TEST(SigmaExact, Examples) {
  auto Z2 = cyclic(2);
  auto d = sigma_exact_finite(*Z2, residues({0}));
  EXPECT_EQ(d.value, Rational(1, 2));
  EXPECT_EQ(d.mode, DensityMode::exact);
  EXPECT_EQ(sigma_exact_finite(*Z2, {}).value, Rational(0));
  EXPECT_EQ(sigma_exact_finite(*Z2, residues({0, 1})).value, Rational(1));
  EXPECT_THROW(sigma_exact_finite(*cyclic(13), {}), Error);
  EXPECT_THROW(sigma_exact_finite(*integers(), {}), Error);
}

TEST(SigmaExact, CyclicGroupsAgainstOracle) {
  for (std::size_t n = 2; n <= 6; ++n) {
    auto G = cyclic(static_cast<std::int64_t>(n));
    for (std::uint64_t A = 0; A < (1ULL << n); ++A) {
      auto v = sigma_exact_finite(*G, from_mask(A, n)).value;
      ASSERT_EQ(v, oracle_sigma_left_zn(A, n));
      ASSERT_EQ(v, Rational(__builtin_popcountll(A), static_cast<std::int64_t>(n)));
    }
  }
}

TEST(SigmaExact, AmenableValueAndSubadditivityOnS3) {
  auto G = symmetric_group_3();
  auto elems = all_elements(*G);
  std::vector<Rational> sigma(64);
  for (std::uint64_t A = 0; A < 64; ++A) {
    std::vector<Element> sub;
    for (std::size_t i = 0; i < 6; ++i)
      if (A >> i & 1) sub.push_back(elems[i]);
    EXPECT_EQ(sigma_exact_finite(*G, sub).value, Rational(__builtin_popcountll(A), 6));
    EXPECT_EQ(sigma_exact_finite(*G, sub, DensityVariant::right).value, Rational(__builtin_popcountll(A), 6));
    sigma[A] = sigma_exact_finite(*G, sub, DensityVariant::two_sided).value;
  }
  for (std::uint64_t A = 0; A < 64; ++A)
    for (std::uint64_t B = 0; B < 64; ++B) EXPECT_LE(sigma[A | B], sigma[A] + sigma[B]);
}

TEST(SigmaEstimate, Examples) {
  auto Z = integers();
  std::vector<Radius> intervals;
  for (std::int64_t len = 1; len <= 10; ++len) {
    Radius F;
    for (std::int64_t x = 0; x < len; ++x) F.push_back(z(x));
    intervals.push_back(F);
  }
  auto d = sigma_estimate(subsets::evens(Z), intervals, interval_window(Z, -50, 50));
  EXPECT_EQ(d.value, Rational(1, 2));
  EXPECT_EQ(d.F_used.size() % 2, 0u);
  EXPECT_EQ(d.mode, DensityMode::upper_evidence);

  auto sq = sigma_estimate(subsets::squares(Z), ball_family(Z, 32), interval_window(Z, 0, 100000));
  EXPECT_LE(sq.value, Rational(7, 65));

  EXPECT_EQ(sigma_estimate(subsets::all(Z), ball_family(Z, 4), interval_window(Z, -5, 5)).value, Rational(1));
}

TEST(SigmaEstimate, LargerFamilyNeverIncreases) {
  auto Z = integers();
  auto W = interval_window(Z, 0, 2000);
  Rational prev(2);
  for (std::size_t r = 1; r <= 12; ++r) {
    auto v = sigma_estimate(subsets::multiples(Z, 3), ball_family(Z, r), W).value;
    EXPECT_LE(v, prev);
    prev = v;
  }
}

TEST(Cov, Examples) {
  auto Z6 = cyclic(6);
  auto c = cov_exact(*Z6, residues({0, 1}));
  EXPECT_EQ(c.count, std::optional<std::size_t>{3});
  EXPECT_EQ(c.witness.size(), 3u);
  EXPECT_EQ(cov_exact(*Z6, all_elements(*Z6)).count, std::optional<std::size_t>{1});
  EXPECT_EQ(cov_exact(*cyclic(4), residues({0, 2})).count, std::optional<std::size_t>{2});
  EXPECT_FALSE(cov_exact(*Z6, {}).count);
}

TEST(Cov, AgreesWithOracleAndBounds) {
  for (std::size_t n = 2; n <= 8; ++n) {
    auto G = cyclic(static_cast<std::int64_t>(n));
    for (std::uint64_t A = 1; A < (1ULL << n); ++A) {
      auto c = cov_exact(*G, from_mask(A, n));
      ASSERT_EQ(*c.count, oracle_cov_zn(A, n));
      ASSERT_GE(*c.count * static_cast<std::size_t>(__builtin_popcountll(A)), n);
    }
  }
}

TEST(Cov, SubgroupsOfZ12HaveIndex) {
  auto G = cyclic(12);
  for (std::int64_t d : {1, 2, 3, 4, 6, 12}) {
    std::vector<Element> H;
    for (std::int64_t x = 0; x < 12; x += d) H.push_back(r(x));
    EXPECT_EQ(cov_exact(*G, H).count, std::optional<std::size_t>(static_cast<std::size_t>(d)));
  }
}

TEST(Pack, Examples) {
  auto Z6 = cyclic(6);
  auto p = pack_lower(SubsetView::finite("A", residues({0, 1})), whole_group(Z6));
  EXPECT_TRUE(p.exact);
  EXPECT_EQ(p.count, 3u);
  EXPECT_EQ(p.witness, residues({0, 2, 4}));
  EXPECT_EQ(pack_lower(SubsetView::finite("G", all_elements(*Z6)), whole_group(Z6)).count, 1u);

  auto Z = integers();
  auto q = pack_lower(subsets::evens(Z), interval_window(Z, -100, 100));
  EXPECT_EQ(q.count, 2u);
  EXPECT_EQ(q.witness, (std::vector<Element>{z(0), z(1)}));
}

TEST(Pack, TimesSizeBoundedByOrder) {
  for (std::size_t n = 2; n <= 8; ++n) {
    auto G = cyclic(static_cast<std::int64_t>(n));
    for (std::uint64_t A = 1; A < (1ULL << n); ++A) {
      auto p = pack_lower(SubsetView::finite("A", from_mask(A, n)), whole_group(G));
      ASSERT_LE(p.count * static_cast<std::size_t>(__builtin_popcountll(A)), n);
    }
  }
}

TEST(Kourovka, Examples) {
  auto Z4 = cyclic(4);
  auto k = kourovka_check(*Z4, {residues({0, 2}), residues({1, 3})});
  ASSERT_TRUE(k.found);
  EXPECT_EQ(k.cell, 0u);
  EXPECT_EQ(k.F, residues({0, 1}));

  auto one = kourovka_check(*Z4, {all_elements(*Z4)});
  ASSERT_TRUE(one.found);
  EXPECT_EQ(one.F, residues({0}));

  // A A^-1 A = {0,2} for {0,2}, so F needs two elements here.
  auto s4 = statement4_check(*Z4, {residues({0, 2}), residues({1, 3})});
  ASSERT_TRUE(s4.found);
  EXPECT_EQ(s4.F, residues({0, 1}));
  EXPECT_FALSE(statement4_check(*Z4, {residues({0, 2}), residues({1, 3})}, 1).found);

  auto Z6 = cyclic(6);
  auto s6 = statement4_check(*Z6, {residues({0, 3}), residues({1, 4}), residues({2, 5})});
  ASSERT_TRUE(s6.found);
  EXPECT_LE(s6.F.size(), 3u);
}

TEST(Kourovka, AllTwoCellPartitionsOfS3) {
  auto G = symmetric_group_3();
  auto elems = all_elements(*G);
  for (std::uint64_t m = 1; m < 63; ++m) {
    std::vector<std::vector<Element>> cells(2);
    for (std::size_t i = 0; i < 6; ++i) cells[m >> i & 1].push_back(elems[i]);
    EXPECT_TRUE(kourovka_check(*G, cells).found) << m;
    EXPECT_TRUE(statement4_check(*G, cells).found) << m;
  }
}
