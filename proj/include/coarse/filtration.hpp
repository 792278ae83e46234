#pragma once

// Filtrations {e} = G_0 ⊂ G_1 ⊂ ... of countable groups that are not
// finitely generated, canonical factorisations g = x_{α_s} ... x_{α_1}, and
// the cell labellings built from them.
//
// Level α holds the representatives X_α ⊂ G_{α+1} \ G_α of the right cosets
// of G_α, each the least element of its coset.
//
//   standard-direct-sum  G = ⊕ Z_k, G_n = <b_1..b_n>, X_α = {v b_{α+1}}
//   product-K-H          G = K ⊕ H with H a countable direct sum; G_1 = K,
//                        G_{n+1} = K ⊕ <b_1..b_n>, X_0 = K \ {e}

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coarse/group.hpp"
#include "coarse/partition.hpp"
#include "coarse/verdict.hpp"
#include "coarse/window.hpp"

namespace coarse {

enum class FiltrationScheme { standard_direct_sum, product_K_H };

FiltrationScheme parse_scheme(const std::string& name);
const char* to_string(FiltrationScheme s) noexcept;

class Filtration {
 public:
  // Throws no_filtration for finitely generated groups and descriptor
  // mismatch when the group does not have the shape the scheme needs.
  static Filtration build(const GroupView& G, FiltrationScheme scheme);
  // Picks the scheme from the group's shape.
  static Filtration build(const GroupView& G);

  const GroupView& group_view() const noexcept { return G_; }
  const Group& group() const noexcept { return *G_; }
  FiltrationScheme scheme() const noexcept { return scheme_; }

  // Smallest n with g ∈ G_n.
  std::size_t rank_of(const Element& g) const;
  // The factor x ∈ X_α with g ∈ G_α x, where α = rank_of(g) - 1; g ≠ e.
  Element top_factor(const Element& g) const;
  // X_α, at most `limit` elements.
  std::vector<Element> representatives(std::size_t level, std::size_t limit = 64) const;
  bool first_level_infinite() const;
  // Index of g ∈ G_1 in the enumeration of G_1.
  std::uint64_t first_level_index(const Element& g) const;
  // The first n elements of G_1.
  std::vector<Element> first_level_elements(std::size_t n) const;

 private:
  Filtration(GroupView G, FiltrationScheme s) : G_(std::move(G)), scheme_(s) {}
  GroupView G_;
  FiltrationScheme scheme_;
};

struct CanonicalForm {
  // Product order: x_{α_s} first, so levels are strictly increasing.
  std::vector<Element> factors;
  std::vector<std::size_t> levels;
  std::size_t s() const noexcept { return factors.size(); }
};

CanonicalForm canonical_form(const Element& g, const Filtration& F);
Element recompose(const Group& G, const CanonicalForm& c);

// "e" for the identity, otherwise "(s(g),s(g^-1))".
std::string small_partition_cell(const Element& g, const Filtration& F);

// The α with g ∈ A_α, or nullopt when g lies in no A_α (g ∈ G_1, or π(g_1)
// exceeds the number of levels above 0). Levels above 0 are read from the
// top: γ_1 is the highest. π(g_1) is the G_1 index of g_1 plus one.
std::optional<std::size_t> aleph1_large_cell(const Element& g, const Filtration& F);
// Checks W ⊆ F_α A_α with F_α = {e, a_α} K_n, K_n the first n elements of
// G_1 and a_α the least element of X_α.
Verdict check_aleph1_coverage(const Filtration& F, std::size_t alpha, const Window& W,
                              std::size_t n = 32);

// f(γ_s) ... f(γ_1) with f(α) = α; empty for e.
std::vector<std::size_t> chi_cov_cell(const Element& g, const Filtration& F);
// x_γ for the least γ exceeding rank_of(k) for every k ∈ K with γ ∉ s.
Element separating_element(const std::vector<Element>& K, const std::vector<std::size_t>& s,
                           const Filtration& F);
// KH ∩ hH = ∅ for the given finite H.
Verdict check_separation(const Group& G, const std::vector<Element>& K, const Element& h,
                         const std::vector<Element>& H);

// χ_α(x) for x ∈ G_{α+1} \ G_α; nullopt when the level has no colouring.
using LevelColouring = std::function<std::optional<std::uint64_t>(std::size_t, const Element&)>;
// Injective colouring by enumeration index.
LevelColouring singleton_colouring(const Filtration& F);
// Everything colour 0. Valid when every G_{α+1} is finite.
LevelColouring constant_colouring();
// (χ_{α_n}(x_{α_n}), χ_{α_{n-1}}(x_{α_n} x_{α_{n-1}}), ...); empty for e.
std::vector<std::uint64_t> scattered_partition_cell(const Element& g, const Filtration& F,
                                                    const LevelColouring& chi);

std::string format_label(const std::vector<std::size_t>& s);

// Radii spanning the first levels, used for smallness checks: spans of
// b_1..b_j for direct sums, initial segments of the enumeration otherwise.
std::vector<Radius> level_radii(const Filtration& F, std::size_t first, std::size_t last);

// Window partitions with certificates attached.
Partition filtration_small_partition(const Filtration& F, const Window& W, std::size_t b = 3);
Partition chi_cov_partition(const Filtration& F, const Window& W, std::size_t k_sample = 8);
Partition scattered_filtration_partition(const Filtration& F, const Window& W,
                                         const LevelColouring& chi, std::size_t depth = 3);

}  // namespace coarse
