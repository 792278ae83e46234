#include <gtest/gtest.h>

#include <random>
#include <set>

#include "coarse/classify.hpp"
#include "coarse/constructions.hpp"
#include "oracles.hpp"

using namespace coarse;

namespace {

Element word(const std::vector<int>& w) {
  std::vector<std::int64_t> c(w.begin(), w.end());
  return Element(c);
}

std::size_t first_index(const std::vector<int>& w) { return static_cast<std::size_t>(std::abs(w.front()) - 1); }
std::size_t last_index(const std::vector<int>& w) { return static_cast<std::size_t>(std::abs(w.back()) - 1); }

std::vector<int> concat(std::vector<int> a, const std::vector<int>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return oracle::reduce_by_rescan(a);
}

std::vector<int> invert(const std::vector<int>& w) {
  std::vector<int> out(w.rbegin(), w.rend());
  for (auto& x : out) x = -x;
  return out;
}

// Membership in L_alpha and R_alpha from the letter definitions.
bool oracle_L(const std::vector<int>& w, std::size_t alpha) {
  if (w.empty()) return false;
  auto l = first_index(w), r = last_index(w);
  return (l == 2 * alpha && r % 2 == 0) || (l == 2 * alpha + 1 && r % 2 == 1);
}

bool oracle_R(const std::vector<int>& w, std::size_t alpha) {
  if (w.empty()) return false;
  auto l = first_index(w), r = last_index(w);
  return (r == 2 * alpha && (l % 2 == 1 || l == 2 * alpha)) || (r == 2 * alpha + 1 && (l % 2 == 0 || l == 2 * alpha + 1));
}

std::vector<std::int64_t> ints(const std::vector<Element>& xs) {
  std::vector<std::int64_t> out;
  for (const auto& x : xs) out.push_back(x.code[0]);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t longest_run(std::vector<std::int64_t> xs) {
  std::sort(xs.begin(), xs.end());
  std::size_t best = 0, run = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    run = (i > 0 && xs[i] == xs[i - 1] + 1) ? run + 1 : 1;
    best = std::max(best, run);
  }
  return best;
}

}  // namespace

TEST(LambdaRho, Examples) {
  auto F = free_group(2);
  auto p = lambda_rho(*F, word({1, 2, -1}));
  EXPECT_EQ(p.first, 0u);
  EXPECT_EQ(p.last, 0u);
  p = lambda_rho(*F, word({-2}));
  EXPECT_EQ(p.first, 1u);
  EXPECT_EQ(p.last, 1u);
  p = lambda_rho(*F, word({-1, 2}));
  EXPECT_EQ(p.first, 0u);
  EXPECT_EQ(p.last, 1u);
  EXPECT_THROW(lambda_rho(*F, F->identity()), Error);
  EXPECT_FALSE(free_3large_cell(*F, F->identity()).has_value());
}

TEST(Free3Large, PartitionMatchesFirstLetter) {
  auto F = free_group(2);
  auto W = enumerate_ball(F, 6);
  auto P = free_3large_partition(F, W);
  ASSERT_TRUE(P.covers_window_disjointly());
  ASSERT_EQ(P.cells.size(), 3u);
  EXPECT_EQ(P.cells[2].label, "e");
  EXPECT_EQ(P.cells[2].elements, std::vector<Element>{F->identity()});
  EXPECT_TRUE(P.fully_certified());
  for (const auto& w : oracle::free_ball_by_words(2, 6)) {
    auto c = P.cell_of(word(w));
    ASSERT_TRUE(c.has_value());
    EXPECT_EQ(*c, w.empty() ? 2u : first_index(w));
  }
}

TEST(Free3Large, BallInsideTwoTranslates) {
  // Every x of length <= 5 lies in P_a or in a P_a, i.e. x or a^-1 x starts with a.
  for (const auto& w : oracle::free_ball_by_words(2, 5)) {
    bool direct = !w.empty() && w.front() == 1;
    auto shifted = concat({-1}, w);
    bool translated = !shifted.empty() && std::abs(shifted.front()) == 1;
    EXPECT_TRUE(direct || translated);
  }
}

TEST(Free4Large, MembershipAgainstOracle) {
  auto F = free_group(4);
  for (const auto& w : oracle::free_ball_by_words(4, 3)) {
    auto g = word(w);
    for (std::size_t a = 0; a < 2; ++a) {
      EXPECT_EQ(in_free_L(*F, g, a), oracle_L(w, a));
      EXPECT_EQ(in_free_R(*F, g, a), oracle_R(w, a));
    }
    std::size_t hits = 0;
    for (std::size_t a = 0; a < 2; ++a) hits += (oracle_L(w, a) || oracle_R(w, a)) ? 1 : 0;
    // Cells are disjoint and cover everything except e.
    EXPECT_EQ(hits, w.empty() ? 0u : 1u);
  }
}

TEST(Free4Large, LargeOnBothSides) {
  auto F = free_group(4);
  auto W = enumerate_ball(F, 5, 1);
  for (std::size_t a = 0; a < 2; ++a) EXPECT_TRUE(check_free_4large(*F, a, W).ok());
  // Independent check of left largeness on words: some t in {e,x,y} puts t w in L.
  for (const auto& w : oracle::free_ball_by_words(4, 3)) {
    for (int a = 0; a < 2; ++a) {
      bool left = oracle_L(w, a) || oracle_L(concat({2 * a + 1}, w), a) || oracle_L(concat({2 * a + 2}, w), a);
      bool right = oracle_R(w, a) || oracle_R(concat(w, {2 * a + 1}), a) || oracle_R(concat(w, {2 * a + 2}), a);
      EXPECT_TRUE(left && right);
    }
  }
  auto P = free_4large_partition(F, enumerate_ball(F, 4));
  EXPECT_TRUE(P.covers_window_disjointly());
  EXPECT_TRUE(P.fully_certified());
  EXPECT_EQ(P.cells.size(), 3u);
  EXPECT_THROW(free_4large_partition(free_group(3), enumerate_ball(free_group(3), 2)), Error);
}

TEST(FreeBipartition, CellsAndCertificates) {
  auto F = free_group(3);
  std::vector<std::size_t> A1{0};
  EXPECT_EQ(free_non_large_bipartition(*F, word({2, 3}), A1), 2);
  EXPECT_EQ(free_non_large_bipartition(*F, F->identity(), A1), 2);
  EXPECT_EQ(free_non_large_bipartition(*F, word({3, 1}), A1), 1);
  auto P = free_bipartition(F, A1, enumerate_ball(F, 4));
  ASSERT_TRUE(P.covers_window_disjointly());
  EXPECT_TRUE(P.fully_certified());
  for (const auto& w : oracle::free_ball_by_words(3, 4)) {
    std::size_t expect = (!w.empty() && last_index(w) == 0) ? 0 : 1;
    EXPECT_EQ(P.cell_of(word(w)), expect);
  }
}

TEST(FreeBipartition, SeparatingLetter) {
  auto F3 = free_group(3);
  EXPECT_EQ(separating_letter(*F3, {word({1}), word({1, 2})}, {1, 2}), 2u);
  EXPECT_EQ(separating_letter(*F3, {}, {2, 1}), 1u);
  auto F2 = free_group(2);
  try {
    separating_letter(*F2, {word({2})}, {1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::no_witness);
  }
}

TEST(Thick, IntegersTwoAndThreeCells) {
  auto Z = integers();
  auto W = interval_window(Z, 0, 100000);
  for (std::size_t m : {2u, 3u}) {
    auto P = thick_partition(Z, m, W, {40});
    ASSERT_TRUE(P.covers_window_disjointly());
    ASSERT_EQ(P.cells.size(), m);
    EXPECT_TRUE(P.fully_certified()) << m;
    // F x F with F = [-40, 40] is an interval of 161 integers.
    for (const auto& c : P.cells) EXPECT_GE(longest_run(ints(c.elements)), 161u);
  }
}

TEST(Thick, SingleCellIsEverything) {
  auto Z = integers();
  auto W = interval_window(Z, 0, 200);
  auto P = thick_partition(Z, 1, W);
  ASSERT_EQ(P.cells.size(), 1u);
  EXPECT_EQ(P.cells[0].elements.size(), W.size());
  EXPECT_TRUE(P.fully_certified());
}

TEST(Thick, FreeGroupTwoCells) {
  auto F = free_group(2);
  auto W = enumerate_ball(F, 9);
  auto P = thick_partition(F, 2, W, {2});
  ASSERT_TRUE(P.covers_window_disjointly());
  EXPECT_TRUE(P.fully_certified());
  auto B = oracle::free_ball_by_words(2, 2);
  for (const auto& c : P.cells) {
    std::set<std::vector<std::int64_t>> in;
    for (const auto& g : c.elements) in.insert(g.code);
    bool found = false;
    for (const auto& w : oracle::free_ball_by_words(2, 5)) {
      bool ok = true;
      for (const auto& h1 : B) {
        for (const auto& h2 : B) {
          auto v = concat(concat(h1, w), h2);
          if (!in.count(std::vector<std::int64_t>(v.begin(), v.end()))) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
      }
      if (ok) {
        found = true;
        break;
      }
    }
    EXPECT_TRUE(found) << c.label;
  }
}

TEST(Thick, SmallWindowIsInconclusive) {
  auto Z = integers();
  auto P = thick_partition(Z, 3, interval_window(Z, 0, 4), {5});
  EXPECT_TRUE(P.covers_window_disjointly());
  EXPECT_FALSE(P.fully_certified());
  EXPECT_TRUE(P.certified());
}

TEST(PSmall, Singleton) {
  auto Z = integers();
  auto g = p_small_witness(subsets::explicit_set(Z, {z(0)}), 5, PSmallMode::disjoint, interval_window(Z, -10, 10));
  EXPECT_EQ(g.size(), 5u);
  std::set<std::int64_t> distinct;
  for (const auto& x : g) distinct.insert(x.code[0]);
  EXPECT_EQ(distinct.size(), 5u);
}

TEST(PSmall, MultiplesOfThreeGiveThree) {
  auto Z = integers();
  auto g = p_small_witness(subsets::multiples(Z, 3), 4, PSmallMode::disjoint, interval_window(Z, 0, 300));
  EXPECT_EQ(ints(g), (std::vector<std::int64_t>{0, 1, 2}));
}

TEST(PSmall, PowersAlmostDisjoint) {
  auto Z = integers();
  auto W = interval_window(Z, 0, 1000);
  auto g = p_small_witness(subsets::powers(Z, 2), 4, PSmallMode::almost, W);
  ASSERT_EQ(g.size(), 4u);
  std::size_t limit = 0;
  while (limit * limit < W.size()) ++limit;
  auto shifted = [](std::int64_t t) {
    std::set<std::int64_t> s;
    for (std::int64_t p = 1; p + t <= 1000; p *= 2) s.insert(p + t);
    return s;
  };
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      auto a = shifted(g[i].code[0]), b = shifted(g[j].code[0]);
      std::size_t common = 0;
      for (auto x : a) common += b.count(x);
      EXPECT_LE(common, limit);
    }
}

TEST(MThin, PowerPairsSplitIntoTwoThinCells) {
  auto Z = integers();
  std::vector<Element> A;
  for (std::int64_t p = 4; p <= 4096; p *= 2) {
    A.push_back(z(p));
    A.push_back(z(p + 1));
  }
  auto W = interval_window(Z, 0, 5000);
  Radius F{z(-1), z(0), z(1)};
  auto P = m_thin_partition(subsets::explicit_set(Z, A), 2, {F}, W);
  ASSERT_EQ(P.cells.size(), 2u);
  EXPECT_TRUE(P.fully_certified());
  for (const auto& c : P.cells) {
    auto xs = ints(c.elements);
    for (std::size_t i = 1; i < xs.size(); ++i) EXPECT_GT(xs[i] - xs[i - 1], 1);
  }
  EXPECT_EQ(P.cells[0].elements.size() + P.cells[1].elements.size(), A.size());
}

TEST(MThin, OneColourForThinSet) {
  auto Z = integers();
  auto P = m_thin_partition(subsets::powers(Z, 2), 1, {{z(-1), z(0), z(1)}}, interval_window(Z, 4, 5000));
  ASSERT_EQ(P.cells.size(), 1u);
  EXPECT_TRUE(P.fully_certified());
}

TEST(MThin, RejectsThickInput) {
  auto Z = integers();
  try {
    m_thin_partition(subsets::evens(Z), 2, {{z(-2), z(0), z(2)}}, interval_window(Z, 0, 100));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::precondition);
  }
}

TEST(MThin, RandomTwoThinSetsAgreeWithExactSearch) {
  auto Z = integers();
  std::mt19937_64 rng(7);
  Radius F{z(-1), z(0), z(1)};
  auto W = interval_window(Z, 0, 30);
  int tested = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::int64_t> xs;
    for (std::int64_t x = 0; x <= 30; ++x)
      if (rng() % 3 == 0) xs.push_back(x);
    // 2-thin for F: no three consecutive integers.
    std::set<std::int64_t> s(xs.begin(), xs.end());
    bool thin = true;
    for (auto x : xs) thin = thin && !(s.count(x - 1) && s.count(x + 1));
    if (!thin) continue;
    std::vector<Element> A;
    for (auto x : xs) A.push_back(z(x));
    std::vector<std::vector<std::size_t>> adj(xs.size());
    for (std::size_t i = 0; i + 1 < xs.size(); ++i)
      if (xs[i + 1] == xs[i] + 1) {
        adj[i].push_back(i + 1);
        adj[i + 1].push_back(i);
      }
    bool colourable = exact_colouring(adj, 2).has_value();
    EXPECT_TRUE(colourable);
    auto P = m_thin_partition(subsets::explicit_set(Z, A), 2, {F}, W);
    EXPECT_TRUE(P.fully_certified());
    ++tested;
  }
  EXPECT_GT(tested, 50);
}

TEST(MThin, ColouringHelpers) {
  std::vector<std::vector<std::size_t>> triangle{{1, 2}, {0, 2}, {0, 1}};
  EXPECT_FALSE(exact_colouring(triangle, 2).has_value());
  EXPECT_TRUE(exact_colouring(triangle, 3).has_value());
  // Path 0-3-2-1: greedy in index order gives 0 and 1 the same colour and gets stuck.
  std::vector<std::vector<std::size_t>> path{{3}, {2}, {1, 3}, {0, 2}};
  EXPECT_FALSE(greedy_colouring(path, 2).has_value());
  auto c = exact_colouring(path, 2);
  ASSERT_TRUE(c.has_value());
  for (std::size_t v = 0; v < path.size(); ++v)
    for (auto u : path[v]) EXPECT_NE((*c)[v], (*c)[u]);
}

TEST(MThin, InfeasibleNamesConflictCore) {
  // Each radius alone keeps {0,1,2} 2-thin; together they force a triangle.
  auto Z = integers();
  auto A = subsets::explicit_set(Z, {z(0), z(1), z(2), z(10)});
  try {
    m_thin_partition(A, 2, {{z(0), z(1)}, {z(0), z(2)}}, interval_window(Z, 0, 20));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::infeasible);
    EXPECT_NE(std::string(e.what()).find("{0, 1, 2}"), std::string::npos) << e.what();
  }
}
