#pragma once

// Window-scale deciders for the size types of subsets of a group.
//
// None of these settle a statement about the whole group. A `holds` verdict
// means the property was observed on the inner part of the window, a `fails`
// verdict carries a concrete finite obstruction found inside it.

#include <cstddef>
#include <optional>
#include <vector>

#include "coarse/ballean.hpp"
#include "coarse/group.hpp"
#include "coarse/subset.hpp"
#include "coarse/verdict.hpp"
#include "coarse/window.hpp"

namespace coarse {

// Inner(W) ⊆ FA (left) or Inner(W) ⊆ AF (right). F is used as given.
Verdict check_left_large(const SubsetView& A, const Radius& F, const Window& W);
Verdict check_right_large(const SubsetView& A, const Radius& F, const Window& W);
Verdict check_large(const SubsetView& A, const Radius& F, const Window& W, Side side);

// Greedy cover of Inner(W) by translates fA with f drawn from `candidates`
// (default: the window). Among equally good translates the smallest encoding
// wins. Holds with F, |F| < k, or fails with the best cover reached.
Verdict find_large_witness(const SubsetView& A, std::size_t k, const Window& W,
                           std::optional<std::vector<Element>> candidates = std::nullopt);

// {a ∈ A ∩ Inner(W) : Fa ⊆ A} (left) or aF ⊆ A (right), in window order.
std::vector<Element> interior(const SubsetView& A, const Radius& F, const Window& W,
                              Side side = Side::left);
std::optional<Element> first_interior_point(const SubsetView& A, const Radius& F, const Window& W,
                                            Side side = Side::left);

// Holds when every radius has a nonempty interior; the witness lists one
// interior point per radius. Fails with the blocking radius as witness.
Verdict check_left_thick(const SubsetView& A, const std::vector<Radius>& radii, const Window& W);
Verdict check_thick(const SubsetView& A, const std::vector<Radius>& radii, const Window& W, Side side);
// One point a per radius with Fa ⊆ A and aF ⊆ A simultaneously.
Verdict check_two_sided_thick(const SubsetView& A, const std::vector<Radius>& radii,
                              const Window& W);

// A is small when no union TA of at most b translates is thick. The translate
// sets T range over subsets of `pool` (default: the first radius plus e).
// Holds when every such TA has some radius with empty interior; fails with
// the T that makes TA thick at every radius.
Verdict check_left_small(const SubsetView& A, const std::vector<Radius>& radii, std::size_t b,
                         const Window& W, std::optional<std::vector<Element>> pool = std::nullopt);
Verdict check_left_prethick(const SubsetView& A, const std::vector<Radius>& radii, std::size_t b,
                            const Window& W,
                            std::optional<std::vector<Element>> pool = std::nullopt);

struct ThinReport {
  std::size_t max_count = 0;       // max |(F ∪ {e})a ∩ A| over the tail
  std::optional<Element> argmax;   // the a attaining it
  std::vector<Element> crowd;      // (F ∪ {e})a ∩ A at the argmax
  Radius F;
  Verdict verdict;                 // against the requested n
};

// Scans a ∈ A ∩ Inner(W) outside the head H (default: W.head()).
ThinReport check_n_thin(const SubsetView& A, const Radius& F, const Window& W, std::size_t n = 1,
                        std::optional<std::vector<Element>> head = std::nullopt);

// Looks for F ⊆ S, 1 <= |F| <= d, with |⋂_{g∈F} gA ∩ Inner(W)| < threshold
// (default ⌈√|W|⌉). Holds with that F; fails with the sample S.
Verdict check_sparse(const SubsetView& A, const std::vector<Element>& S, std::size_t d,
                     const Window& W, std::optional<std::size_t> threshold = std::nullopt);

struct IdealSpec {
  enum class Kind { finite_sets, window_threshold };
  Kind kind = Kind::window_threshold;
  std::optional<std::size_t> threshold;  // default ⌈√|W|⌉

  static IdealSpec finite_sets() { return {Kind::finite_sets, std::nullopt}; }
  static IdealSpec window(std::size_t t) { return {Kind::window_threshold, t}; }
};

std::size_t default_threshold(const Window& W);

// Δ_J(A) = {g ∈ W : gA ∩ A ∉ J}: under the window threshold, |gA ∩ A ∩ W| > t.
// Under the ideal of finite sets a known-finite A gives ∅ and other sets fall
// back to the default threshold.
std::vector<Element> combinatorial_derivation(const SubsetView& A, const IdealSpec& J,
                                              const Window& W);

// Products g_{i1}···g_{ik}, i1 < ... < ik < n, listed by k and then by the
// index tuple. Rejects a sequence whose first n terms repeat.
std::vector<Element> fp_products(const Group& G, const std::vector<Element>& gs, std::size_t n);
SubsetView fp_set(const GroupView& G, const std::vector<Element>& gs, std::size_t n);

struct ShiftedPattern {
  std::vector<Element> gs;
  std::vector<Element> bs;
};

// Whether every product g_{i1}···g_{ik} b_{ik} lies in A.
bool pattern_inside(const Group& G, const ShiftedPattern& p, const SubsetView& A);

inline constexpr std::size_t kScatteredBudget = 2'000'000;

// Backtracking search for a piecewise shifted FP pattern of length d with
// all g_i ≠ e and pairwise distinct. Holds when none exists at window scale;
// fails with the pattern (witness gs followed by bs). Budget exhaustion gives
// inconclusive.
Verdict check_scattered(const SubsetView& A, std::size_t d, const Window& W,
                        std::size_t budget = kScatteredBudget,
                        ShiftedPattern* found = nullptr);

}  // namespace coarse
