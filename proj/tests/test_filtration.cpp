#include <gtest/gtest.h>

#include <random>
#include <map>
#include <set>

#include "coarse/classify.hpp"
#include "coarse/filtration.hpp"
#include "coarse/subset.hpp"

using namespace coarse;

namespace {

Element sum_element(std::vector<std::int64_t> c) { return Element(std::move(c)); }

// Factors of a direct-sum element read straight off its coordinates.
std::vector<Element> oracle_factors(const Element& g) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < g.code.size(); ++i) {
    if (g.code[i] == 0) continue;
    std::vector<std::int64_t> c(i + 1, 0);
    c[i] = g.code[i];
    out.emplace_back(std::move(c));
  }
  return out;
}

GroupView k_plus_h() { return product(countable_direct_sum(2), countable_direct_sum(2)); }

Element kh(const GroupView& G, std::vector<std::int64_t> k, std::vector<std::int64_t> h) {
  return product_pair(*G, Element(std::move(k)), Element(std::move(h)));
}

}  // namespace

TEST(Filtration, StandardRepresentatives) {
  auto F2 = Filtration::build(countable_direct_sum(2));
  for (std::size_t n = 0; n < 6; ++n) {
    auto X = F2.representatives(n);
    ASSERT_EQ(X.size(), 1u);
    std::vector<std::int64_t> c(n + 1, 0);
    c[n] = 1;
    EXPECT_EQ(X[0], Element(c));
  }
  auto F3 = Filtration::build(countable_direct_sum(3));
  EXPECT_EQ(F3.representatives(2), (std::vector<Element>{sum_element({0, 0, 1}), sum_element({0, 0, 2})}));
}

TEST(Filtration, CosetCountsMatchRepresentatives) {
  for (std::int64_t k : {2, 3}) {
    auto G = countable_direct_sum(k);
    auto F = Filtration::build(G);
    std::size_t size_n = 1;  // |G_n|
    for (std::size_t n = 0; n < 5; ++n) {
      // Count elements of G_{n+1} \ G_n by scanning the enumeration.
      std::size_t fresh = 0, total = size_n * static_cast<std::size_t>(k);
      for (std::uint64_t i = 0; i < total; ++i)
        if (F.rank_of(*G->element_at(i)) == n + 1) ++fresh;
      EXPECT_EQ(fresh, size_n * F.representatives(n).size());
      size_n = total;
    }
  }
}

TEST(Filtration, FinitelyGeneratedRejected) {
  try {
    Filtration::build(integers());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::no_filtration);
  }
  EXPECT_THROW(Filtration::build(direct_sum({2, 2})), Error);
  EXPECT_THROW(Filtration::build(free_group(2)), Error);
  EXPECT_THROW(Filtration::build(countable_direct_sum(2), FiltrationScheme::product_K_H), Error);
}

TEST(CanonicalForm, Examples) {
  auto F = Filtration::build(countable_direct_sum(2));
  auto c = canonical_form(sum_element({1, 0, 1}), F);
  EXPECT_EQ(c.factors, (std::vector<Element>{sum_element({1}), sum_element({0, 0, 1})}));
  EXPECT_EQ(c.levels, (std::vector<std::size_t>{0, 2}));
  EXPECT_EQ(canonical_form(Element(), F).s(), 0u);
  auto b2 = canonical_form(sum_element({0, 1}), F);
  EXPECT_EQ(b2.levels, std::vector<std::size_t>{1});
}

TEST(CanonicalForm, RecomposesAndAgreesWithCoordinates) {
  for (std::int64_t k : {2, 3}) {
    auto G = countable_direct_sum(k);
    auto F = Filtration::build(G);
    std::set<std::vector<std::int64_t>> encodings;
    for (std::uint64_t i = 0; i < 10000; ++i) {
      auto g = *G->element_at(i);
      auto c = canonical_form(g, F);
      ASSERT_EQ(recompose(*G, c), g);
      ASSERT_EQ(c.factors, oracle_factors(g));
      for (std::size_t j = 1; j < c.s(); ++j) ASSERT_LT(c.levels[j - 1], c.levels[j]);
      std::vector<std::int64_t> enc;
      for (const auto& x : c.factors) enc.insert(enc.end(), x.code.begin(), x.code.end()), enc.push_back(-1);
      encodings.insert(enc);
    }
    EXPECT_EQ(encodings.size(), 10000u);
  }
}

TEST(CanonicalForm, ProductScheme) {
  auto G = k_plus_h();
  auto F = Filtration::build(G);
  EXPECT_EQ(F.scheme(), FiltrationScheme::product_K_H);
  EXPECT_TRUE(F.first_level_infinite());
  auto g = kh(G, {1, 1}, {0, 1, 0, 0, 1});
  auto c = canonical_form(g, F);
  EXPECT_EQ(c.levels, (std::vector<std::size_t>{0, 2, 5}));
  EXPECT_EQ(recompose(*G, c), g);
  for (std::uint64_t i = 0; i < 3000; ++i) {
    auto x = *G->element_at(i);
    ASSERT_EQ(recompose(*G, canonical_form(x, F)), x);
  }
}

TEST(SmallCells, Examples) {
  auto F2 = Filtration::build(countable_direct_sum(2));
  EXPECT_EQ(small_partition_cell(sum_element({1, 0, 1}), F2), "(2,2)");
  EXPECT_EQ(small_partition_cell(Element(), F2), "e");
  auto F3 = Filtration::build(countable_direct_sum(3));
  EXPECT_EQ(small_partition_cell(sum_element({1}), F3), "(1,1)");
  EXPECT_EQ(small_partition_cell(sum_element({2, 1}), F3), "(2,2)");
}

TEST(SmallCells, PartitionWindowAndPassSmallness) {
  for (std::int64_t k : {2, 3}) {
    auto G = countable_direct_sum(k);
    auto F = Filtration::build(G);
    auto W = first_elements(G, 2000);
    auto P = filtration_small_partition(F, W);
    EXPECT_TRUE(P.covers_window_disjointly());
    EXPECT_TRUE(P.fully_certified()) << "k=" << k;
    auto radii = level_radii(F, 2, 5);
    for (std::size_t n = 0; n <= 4; ++n) {
      auto D = subsets::predicate(G, "D", [&F, n](const Element& g) { return canonical_form(g, F).s() == n; });
      EXPECT_TRUE(check_left_small(D, radii, 3, W).ok()) << "n=" << n;
    }
  }
}

TEST(SmallCells, UnionOfCellsIsNotSmall) {
  // Sanity check on the verifier: the whole group is never small.
  auto G = countable_direct_sum(2);
  auto F = Filtration::build(G);
  auto W = first_elements(G, 2000);
  EXPECT_TRUE(check_left_small(subsets::all(G), level_radii(F, 2, 5), 3, W).failed());
}

TEST(Aleph1, RuleEvaluation) {
  auto G = k_plus_h();
  auto F = Filtration::build(G);
  // Γ = {2,5}; γ_1 = 5, γ_2 = 2.
  EXPECT_EQ(aleph1_large_cell(kh(G, {}, {0, 1, 0, 0, 1}), F), std::optional<std::size_t>{5});
  EXPECT_EQ(aleph1_large_cell(kh(G, {1}, {0, 1, 0, 0, 1}), F), std::optional<std::size_t>{2});
  EXPECT_EQ(aleph1_large_cell(kh(G, {0, 1}, {0, 1, 0, 0, 1}), F), std::nullopt);
  EXPECT_EQ(aleph1_large_cell(kh(G, {1, 1}, {}), F), std::nullopt);
  auto S = Filtration::build(countable_direct_sum(2));
  EXPECT_THROW(aleph1_large_cell(sum_element({1}), S), Error);
}

TEST(Aleph1, CoverageOnFirstElements) {
  auto G = k_plus_h();
  auto F = Filtration::build(G);
  auto W = first_elements(G, 2000);
  EXPECT_EQ(F.first_level_elements(32).size(), 32u);
  for (std::size_t alpha = 1; alpha <= 4; ++alpha) {
    EXPECT_TRUE(check_aleph1_coverage(F, alpha, W).ok()) << "alpha=" << alpha;
  }
}

TEST(ChiCov, Examples) {
  auto F = Filtration::build(countable_direct_sum(2));
  EXPECT_EQ(chi_cov_cell(sum_element({1, 0, 1}), F), (std::vector<std::size_t>{0, 2}));
  EXPECT_TRUE(chi_cov_cell(Element(), F).empty());
  EXPECT_EQ(chi_cov_cell(sum_element({0, 1}), F), std::vector<std::size_t>{1});
}

TEST(ChiCov, SeparatingElement) {
  auto F = Filtration::build(countable_direct_sum(2));
  EXPECT_EQ(separating_element({sum_element({1}), sum_element({0, 1})}, {0}, F), sum_element({0, 0, 0, 1}));
  EXPECT_EQ(separating_element({}, {0, 1}, F), sum_element({0, 0, 1}));
  EXPECT_EQ(separating_element({}, {}, F), sum_element({1}));
}

TEST(ChiCov, SeparationOnWindow) {
  auto G = countable_direct_sum(2);
  auto F = Filtration::build(G);
  auto W = first_elements(G, 512);
  std::map<std::vector<std::size_t>, std::vector<Element>> cells;
  for (const auto& g : W.elements())
    if (!G->is_identity(g)) cells[chi_cov_cell(g, F)].push_back(g);
  std::mt19937 rng(4);
  for (const auto& [s, H] : cells) {
    for (int t = 0; t < 5; ++t) {
      std::vector<Element> K;
      for (std::size_t i = 0, n = rng() % 6; i < n; ++i) K.push_back(W.elements()[rng() % W.size()]);
      auto h = separating_element(K, s, F);
      std::set<Element> KH;
      for (const auto& k : K)
        for (const auto& x : H) KH.insert(G->multiply(k, x));
      for (const auto& x : H) ASSERT_FALSE(KH.count(G->multiply(h, x)));
    }
  }
  auto P = chi_cov_partition(F, W);
  EXPECT_TRUE(P.covers_window_disjointly());
  EXPECT_TRUE(P.fully_certified());
}

TEST(ScatteredCells, Examples) {
  auto G = countable_direct_sum(2);
  auto F = Filtration::build(G);
  auto chi = singleton_colouring(F);
  EXPECT_EQ(scattered_partition_cell(sum_element({1, 0, 1}), F, chi),
            (std::vector<std::uint64_t>{*G->index_of(sum_element({1})), *G->index_of(sum_element({1, 0, 1}))}));
  EXPECT_TRUE(scattered_partition_cell(Element(), F, chi).empty());
  LevelColouring partial = [](std::size_t level, const Element&) -> std::optional<std::uint64_t> {
    if (level < 2) return 0;
    return std::nullopt;
  };
  try {
    scattered_partition_cell(sum_element({1, 0, 1}), F, partial);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::configuration);
  }
}

TEST(ScatteredCells, WindowAudit) {
  auto G = countable_direct_sum(2);
  auto F = Filtration::build(G);
  auto W = first_elements(G, 128);
  auto P = scattered_filtration_partition(F, W, singleton_colouring(F), 3);
  EXPECT_TRUE(P.covers_window_disjointly());
  EXPECT_TRUE(P.fully_certified());
}

TEST(ScatteredCells, ConstantColouringGivesLevelCounts) {
  // With every level coloured 0 the cells are the sets D_n. These are
  // scattered, yet contain finite shifted patterns of depth 3, so the window
  // audit reports them; the audit is evidence, not a proof.
  auto G = countable_direct_sum(2);
  auto F = Filtration::build(G);
  auto W = first_elements(G, 128);
  auto P = scattered_filtration_partition(F, W, constant_colouring(), 3);
  EXPECT_TRUE(P.covers_window_disjointly());
  for (const auto& c : P.cells) {
    if (c.label == "e") continue;
    std::size_t n = (c.label.size() - 1) / 2;
    for (const auto& g : c.elements) EXPECT_EQ(canonical_form(g, F).s(), n);
  }
  ASSERT_TRUE(P.cell_of(sum_element({1, 1})));
  EXPECT_EQ(P.cells[*P.cell_of(sum_element({1, 1}))].certificates[0].status, Status::fails);
}
