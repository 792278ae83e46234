#include <gtest/gtest.h>

#include <random>

#include "coarse/classify.hpp"
#include "oracles.hpp"

using namespace coarse;

namespace {

Radius interval_radius(std::int64_t lo, std::int64_t hi) {
  Radius r;
  for (std::int64_t x = lo; x <= hi; ++x) r.push_back(z(x));
  return r;
}

std::vector<std::int64_t> ints(const std::vector<Element>& xs) {
  std::vector<std::int64_t> out;
  for (const auto& x : xs) out.push_back(x.code[0]);
  return out;
}

// ⋃ [n², n² + n]
SubsetView square_runs(const GroupView& Z) {
  return subsets::predicate(Z, "runs", [](const Element& g) {
    auto x = g.code[0];
    if (x < 0) return false;
    std::int64_t n = 0;
    while ((n + 1) * (n + 1) <= x) ++n;
    return x <= n * n + n;
  });
}

}  // namespace

TEST(LeftLarge, Examples) {
  auto Z = integers();
  EXPECT_TRUE(check_left_large(subsets::evens(Z), {z(0), z(1)}, interval_window(Z, -50, 50)).ok());
  auto v = check_left_large(subsets::explicit_set(Z, {z(0)}), {z(0)}, interval_window(Z, -5, 5));
  ASSERT_TRUE(v.failed());
  EXPECT_EQ(v.witness, std::vector<Element>{z(1)});

  auto F = free_group(2);
  auto W = enumerate_ball(F, 6);
  EXPECT_TRUE(check_left_large(subsets::first_letter(F, 0), {F->identity(), F->parse("a")}, W).ok());
}

TEST(LeftLarge, AgreesWithDirectCoverage) {
  auto Z = integers();
  std::mt19937 rng(3);
  auto W = interval_window(Z, -40, 40, 5);
  for (int t = 0; t < 200; ++t) {
    std::vector<Element> A, F;
    for (std::int64_t x = -60; x <= 60; ++x)
      if (rng() % 4 == 0) A.push_back(z(x));
    for (int i = 0; i < 3; ++i) F.push_back(z(static_cast<std::int64_t>(rng() % 9) - 4));
    std::set<std::int64_t> FA;
    for (const auto& f : F)
      for (const auto& a : A) FA.insert(f.code[0] + a.code[0]);
    bool expect = true;
    for (std::int64_t x = -35; x <= 35; ++x) expect = expect && FA.count(x);
    EXPECT_EQ(check_left_large(subsets::explicit_set(Z, A), F, W).ok(), expect);
  }
}

TEST(LargeWitness, Examples) {
  auto Z = integers();
  auto v = find_large_witness(subsets::multiples(Z, 3), 4, interval_window(Z, 0, 299));
  ASSERT_TRUE(v.ok());
  EXPECT_EQ(ints(v.witness), (std::vector<std::int64_t>{0, 1, 2}));

  auto all = find_large_witness(subsets::all(Z), 2, interval_window(Z, -20, 20));
  ASSERT_TRUE(all.ok());
  EXPECT_EQ(all.witness, std::vector<Element>{z(0)});

  auto sq = find_large_witness(subsets::squares(Z), 3, interval_window(Z, 0, 10000));
  EXPECT_TRUE(sq.failed());
  EXPECT_EQ(sq.witness.size(), 2u);
}

TEST(Interior, Examples) {
  auto Z = integers();
  auto W = interval_window(Z, 0, 10000);
  EXPECT_TRUE(interior(subsets::evens(Z), {z(1)}, W).empty());
  auto everything = interior(subsets::all(Z), {z(3)}, interval_window(Z, -10, 10, 2));
  EXPECT_EQ(everything.size(), 17u);
  auto in = interior(square_runs(Z), {z(0), z(1), z(2)}, W);
  EXPECT_NE(std::find(in.begin(), in.end(), z(9)), in.end());
  // Oracle: a, a+1, a+2 all in a run.
  std::size_t expect = 0;
  auto runs = square_runs(Z);
  for (std::int64_t a = 0; a <= 10000; ++a) {
    expect += runs.contains(z(a)) && runs.contains(z(a + 1)) && runs.contains(z(a + 2));
  }
  EXPECT_EQ(in.size(), expect);
}

TEST(LeftThick, Examples) {
  auto Z = integers();
  auto W = interval_window(Z, 0, 10000);
  std::vector<Radius> balls;
  for (std::int64_t r = 1; r <= 10; ++r) balls.push_back(interval_radius(-r, r));
  EXPECT_TRUE(check_left_thick(square_runs(Z), balls, W).ok());
  auto v = check_left_thick(subsets::evens(Z), {{z(0), z(1)}}, W);
  ASSERT_TRUE(v.failed());
  EXPECT_EQ(v.witness, (Radius{z(0), z(1)}));
  EXPECT_TRUE(check_left_thick(subsets::all(Z), balls, W).ok());
}

TEST(LeftThick, ComplementOfThickIsNotLarge) {
  auto Z = integers();
  auto W = interval_window(Z, 0, 3000);
  auto A = square_runs(Z);
  auto rest = subsets::complement(Z, A);
  for (std::int64_t r = 1; r <= 6; ++r) {
    Radius F = interval_radius(-r, r);
    ASSERT_FALSE(interior(A, F, W).empty());
    // A contains a full F-ball Fa, so no translate of F⁻¹ covers a from the complement.
    EXPECT_TRUE(check_left_large(rest, F, W).failed());
  }
}

TEST(LeftSmall, Examples) {
  auto Z = integers();
  std::vector<Radius> balls;
  for (std::int64_t r = 1; r <= 10; ++r) balls.push_back(interval_radius(-r, r));
  EXPECT_TRUE(check_left_small(subsets::squares(Z), balls, 3, interval_window(Z, 0, 100000)).ok());
  auto v = check_left_small(subsets::evens(Z), balls, 2, interval_window(Z, -100, 100));
  ASSERT_TRUE(v.failed());
  std::set<std::int64_t> T;
  for (auto x : ints(v.witness)) T.insert(x % 2 == 0 ? 0 : 1);
  EXPECT_EQ(T, (std::set<std::int64_t>{0, 1}));
  EXPECT_TRUE(check_left_small(subsets::explicit_set(Z, {z(1), z(5)}), balls, 3,
                               interval_window(Z, -50, 50)).ok());
  EXPECT_TRUE(check_left_prethick(subsets::evens(Z), balls, 2, interval_window(Z, -100, 100)).ok());
}

TEST(NThin, Examples) {
  auto Z = integers();
  auto W = interval_window(Z, 0, 1 << 20, 0, 1 << 21);
  Radius F = interval_radius(-8, 8);
  auto H = interval_window(Z, 0, 32).elements();
  auto pow2 = subsets::powers(Z, 2);
  auto r1 = check_n_thin(pow2, F, W, 1, H);
  EXPECT_EQ(r1.max_count, 1u);
  EXPECT_TRUE(r1.verdict.ok());
  auto paired = subsets::set_union(pow2, subsets::translate(Z, z(1), pow2));
  auto r2 = check_n_thin(paired, F, W, 2, H);
  EXPECT_EQ(r2.max_count, 2u);
  auto r3 = check_n_thin(subsets::evens(Z), {z(0), z(2), z(4)}, interval_window(Z, -100, 100), 2);
  EXPECT_EQ(r3.max_count, 3u);
  EXPECT_TRUE(r3.verdict.failed());
  EXPECT_TRUE(check_n_thin(subsets::none(Z), F, W).verdict.ok());
}

TEST(NThin, UnionOfThinSetsIsMThin) {
  auto Z = integers();
  auto W = interval_window(Z, 0, 1 << 16);
  Radius F = interval_radius(-5, 5);
  auto H = interval_window(Z, 0, 64).elements();
  SubsetView acc = subsets::none(Z);
  for (std::int64_t m = 1; m <= 4; ++m) {
    auto piece = subsets::translate(Z, z(11 * m), subsets::powers(Z, 2));
    EXPECT_EQ(check_n_thin(piece, F, W, 1, H).max_count, 1u);
    acc = subsets::set_union(acc, piece);
    EXPECT_LE(check_n_thin(acc, F, W, 1, H).max_count, static_cast<std::size_t>(m));
  }
}

TEST(Sparse, Examples) {
  auto Z = integers();
  auto W = interval_window(Z, 0, 2000);
  std::vector<Element> S;
  for (std::int64_t i = 0; i < 8; ++i) S.push_back(z(i));
  EXPECT_TRUE(check_sparse(subsets::naturals(Z), S, 3, W).failed());
  auto v = check_sparse(subsets::powers(Z, 2), S, 2, W, 3);
  EXPECT_TRUE(v.ok());
  EXPECT_LE(v.witness.size(), 2u);
  EXPECT_TRUE(check_sparse(subsets::none(Z), S, 1, W).ok());
}

TEST(Derivation, Examples) {
  auto Z = integers();
  auto W = interval_window(Z, -1000, 1000);
  auto d = combinatorial_derivation(subsets::evens(Z), IdealSpec::window(10), W);
  auto dv = ints(d);
  std::set<std::int64_t> got(dv.begin(), dv.end());
  std::set<std::int64_t> evens;
  for (std::int64_t x = -1000; x <= 1000; x += 2) evens.insert(x);
  EXPECT_EQ(got, evens);
  auto finite = subsets::explicit_set(Z, {z(1), z(2), z(3)});
  EXPECT_TRUE(combinatorial_derivation(finite, IdealSpec::window(5), W).empty());
  EXPECT_TRUE(combinatorial_derivation(finite, IdealSpec::finite_sets(), W).empty());
  auto d3 = combinatorial_derivation(subsets::multiples(Z, 3), IdealSpec::window(10), W);
  for (const auto& g : d3) EXPECT_EQ(g.code[0] % 3, 0);
  EXPECT_EQ(d3.size(), 667u);
}

TEST(Derivation, SymmetricForSymmetricSets) {
  auto Z = integers();
  auto W = interval_window(Z, -300, 300);
  auto A = subsets::set_union(subsets::squares(Z), subsets::inverse(Z, subsets::squares(Z)));
  auto d = combinatorial_derivation(A, IdealSpec::window(4), W);
  auto dv = ints(d);
  std::set<std::int64_t> s(dv.begin(), dv.end());
  for (auto x : s) EXPECT_TRUE(s.count(-x)) << x;
  EXPECT_TRUE(s.count(0));
}

TEST(FpSet, Examples) {
  auto Z = integers();
  EXPECT_EQ(ints(fp_products(*Z, {z(1), z(2), z(4)}, 3)),
            (std::vector<std::int64_t>{1, 2, 4, 3, 5, 6, 7}));
  EXPECT_EQ(ints(fp_products(*Z, {z(5), z(9)}, 1)), (std::vector<std::int64_t>{5}));
  auto F = free_group(2);
  auto xs = fp_products(*F, {F->parse("a"), F->parse("b")}, 2);
  std::vector<std::string> got;
  for (const auto& x : xs) got.push_back(F->format(x));
  EXPECT_EQ(got, (std::vector<std::string>{"a", "b", "ab"}));
  try {
    fp_products(*Z, {z(1), z(2), z(1)}, 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_sequence);
  }
}

TEST(Scattered, Examples) {
  auto Z = integers();
  ShiftedPattern p;
  auto v = check_scattered(subsets::naturals(Z), 4, interval_window(Z, -64, 64), kScatteredBudget, &p);
  ASSERT_TRUE(v.failed());
  EXPECT_TRUE(pattern_inside(*Z, p, subsets::naturals(Z)));
  EXPECT_EQ(p.gs.size(), 4u);
  // The pattern from the documentation: gs = (1,2,4,8), bs = 0.
  ShiftedPattern doc{{z(1), z(2), z(4), z(8)}, {z(0), z(0), z(0), z(0)}};
  EXPECT_TRUE(pattern_inside(*Z, doc, subsets::naturals(Z)));

  EXPECT_TRUE(check_scattered(subsets::powers(Z, 2), 3, interval_window(Z, 0, 1 << 16)).ok());
  EXPECT_TRUE(check_scattered(subsets::none(Z), 3, interval_window(Z, -5, 5)).ok());
}

TEST(Scattered, FpSetsAreTheirOwnPatterns) {
  auto Z = integers();
  auto F = free_group(2);
  auto A = fp_set(Z, {z(1), z(2), z(4), z(8)}, 4);
  for (std::size_t d = 1; d <= 4; ++d) {
    EXPECT_TRUE(check_scattered(A, d, interval_window(Z, -40, 40)).failed()) << d;
  }
  auto B = fp_set(F, {F->parse("a"), F->parse("ba"), F->parse("bb")}, 3);
  EXPECT_TRUE(check_scattered(B, 3, enumerate_ball(F, 6)).failed());
}

TEST(Scattered, BudgetGivesInconclusive) {
  auto Z = integers();
  auto v = check_scattered(subsets::powers(Z, 2), 5, interval_window(Z, 0, 1 << 16), 3);
  EXPECT_EQ(v.status, Status::inconclusive);
}

TEST(Scattered, PatternSearchMatchesBruteForceOnSmallSets) {
  // Exhaustive over subsets of [0,7] and depth 2: pattern iff ∃ g ≠ 0, c1, c2
  // with c1 ∈ A, c2 ∈ A, c2 + g ∈ A (window [-8,15] holds every translate).
  auto Z = integers();
  auto W = interval_window(Z, -8, 15);
  for (unsigned mask = 0; mask < 256; ++mask) {
    std::set<std::int64_t> S;
    std::vector<Element> xs;
    for (std::int64_t i = 0; i < 8; ++i)
      if (mask >> i & 1) S.insert(i), xs.push_back(z(i));
    bool expect = false;
    for (auto c : S)
      for (auto c2 : S)
        if (c != c2) expect = true;
    auto v = check_scattered(subsets::explicit_set(Z, xs), 2, W);
    EXPECT_EQ(v.failed(), expect) << mask;
  }
}
