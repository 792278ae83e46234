#pragma once

// Explicit partitions: free groups split by first and last letters, thick
// cells from disjoint blocks along a chain of balls, and thin colourings.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "coarse/group.hpp"
#include "coarse/partition.hpp"
#include "coarse/subset.hpp"
#include "coarse/window.hpp"

namespace coarse {

// Alphabet indices of the first and last letters, ignoring sign.
struct LetterProjection {
  std::size_t first = 0;
  std::size_t last = 0;
};

// Throws precondition for e, whose projections are undefined.
LetterProjection lambda_rho(const Group& G, const Element& g);

// λ(g); nullopt for e (the reserved cell).
std::optional<std::size_t> free_3large_cell(const Group& G, const Element& g);

// Letters 2α and 2α+1 form the pair (x_α, y_α); X holds the even letters and
// Y the odd ones.
//   L_α: λ(g) = x_α and ρ(g) ∈ X, or λ(g) = y_α and ρ(g) ∈ Y
//   R_α: ρ(g) = x_α and λ(g) ∈ Y ∪ {x_α}, or ρ(g) = y_α and λ(g) ∈ X ∪ {y_α}
bool in_free_L(const Group& G, const Element& g, std::size_t alpha);
bool in_free_R(const Group& G, const Element& g, std::size_t alpha);
// The α with g ∈ L_α ∪ R_α; nullopt for e.
std::optional<std::size_t> free_4large_cell(const Group& G, const Element& g);
// For every g in the inner window: {e,x_α,y_α}g meets L_α and g{e,x_α,y_α}
// meets R_α. Fails with the first g that does not.
Verdict check_free_4large(const Group& G, std::size_t alpha, const Window& W);

// 1 when ρ(g) ∈ A_1, else 2 (e included).
int free_non_large_bipartition(const Group& G, const Element& g, const std::vector<std::size_t>& A1);
// The least letter of `A2` occurring in no word of H; no_witness when all do.
std::size_t separating_letter(const Group& G, const std::vector<Element>& H,
                              const std::vector<std::size_t>& A2);

Partition free_3large_partition(const GroupView& G, const Window& W);
Partition free_4large_partition(const GroupView& G, const Window& W);
Partition free_bipartition(const GroupView& G, const std::vector<std::size_t>& A1, const Window& W);

struct ThickOptions {
  // Radii 1..test_radius are certified; 0 certifies up to the largest block
  // radius every cell reached.
  std::size_t test_radius = 0;
};

// Blocks H_α x_α H_α with H_α = ball(⌈α/m⌉), chosen greedily in window order
// to be pairwise disjoint and inside the window. Block α goes to cell α mod m;
// elements outside every block go to cell 0.
Partition thick_partition(const GroupView& G, std::size_t m, const Window& W, ThickOptions opts = {});

enum class PSmallMode { disjoint, almost };

// Greedy translates g_1 A, g_2 A, ... inside W, pairwise disjoint (or with
// intersections of at most `threshold` points, default ⌈√|W|⌉), up to n.
std::vector<Element> p_small_witness(const SubsetView& A, std::size_t n, PSmallMode mode, const Window& W,
                                     std::optional<std::size_t> threshold = std::nullopt);

// Colours A ∩ W with m colours so that each colour class is thin for every
// radius of the family: a and fa (f ∈ F) never share a colour. Greedy in
// window order with smallest colour first, then exact backtracking when
// |A ∩ W| <= 15. Throws precondition when A is not m-thin on the window and
// infeasible (naming a conflict core) when no colouring exists.
Partition m_thin_partition(const SubsetView& A, std::size_t m, const std::vector<Radius>& family,
                           const Window& W);

// Plain colouring helpers over a conflict graph given as adjacency lists.
std::optional<std::vector<int>> greedy_colouring(const std::vector<std::vector<std::size_t>>& adj, std::size_t m);
std::optional<std::vector<int>> exact_colouring(const std::vector<std::vector<std::size_t>>& adj, std::size_t m);

inline constexpr std::size_t kExactColouringCap = 15;

}  // namespace coarse
