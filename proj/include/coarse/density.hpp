#pragma once

// Densities sigma(A) = inf_F sup_g |F ∩ gA| / |F|, covering and packing
// numbers, and the finite checks of the partition statements G = F A A^-1
// and G = F A A^-1 A.

#include <cstdint>
#include <optional>
#include <vector>

#include <boost/rational.hpp>
#include <json.hpp>

#include "coarse/group.hpp"
#include "coarse/subset.hpp"
#include "coarse/window.hpp"

namespace coarse {

using Rational = boost::rational<std::int64_t>;

// left: |F ∩ xA|, right: |F ∩ Ax|, two-sided: |F ∩ xAy|.
enum class DensityVariant { left, right, two_sided };
enum class DensityMode { exact, upper_evidence };

struct DensityReport {
  Rational value{0};
  DensityMode mode = DensityMode::exact;
  Radius F_used;  // a minimising F

  nlohmann::json to_json(const Group& G) const;
};

inline constexpr std::size_t kSigmaExactCap = 12;
inline constexpr std::size_t kCovExactCap = 24;

// inf over nonempty F ⊆ G of sup over translates, by trying every F.
DensityReport sigma_exact_finite(const Group& G, const std::vector<Element>& A,
                                 DensityVariant v = DensityVariant::left);
// min over the family of max over x (and y) in W; an upper bound for the
// infimum over all finite F.
DensityReport sigma_estimate(const SubsetView& A, const std::vector<Radius>& family, const Window& W,
                             DensityVariant v = DensityVariant::left);
// ball(1), ..., ball(r).
std::vector<Radius> ball_family(const GroupView& G, std::size_t r);

struct CoverResult {
  std::optional<std::size_t> count;  // nullopt: no cover exists (A empty)
  std::vector<Element> witness;
};

// Least |X| with G = XA, by branch and bound seeded with the greedy cover.
CoverResult cov_exact(const Group& G, const std::vector<Element>& A);

struct PackResult {
  std::size_t count = 0;
  std::vector<Element> witness;
  bool exact = false;
};

// Disjoint left translates sA, s ∈ S ⊆ W, compared inside W. Greedy in
// window order; exact search when W is a whole finite group of at most
// kSigmaExactCap elements and A is finite.
PackResult pack_lower(const SubsetView& A, const Window& W);

struct KourovkaResult {
  bool found = false;
  std::size_t cell = 0;  // index into the cell list
  std::vector<Element> F;
  std::size_t smallest = 0;  // least |F| over all cells; 0 when none found
};

// Looks for a cell A and F with |F| <= bound (default: number of cells) and
// G = F A A^-1. Cells are tried in order and F by increasing size.
KourovkaResult kourovka_check(const Group& G, const std::vector<std::vector<Element>>& cells,
                              std::optional<std::size_t> bound = std::nullopt);
// Same with G = F A A^-1 A.
KourovkaResult statement4_check(const Group& G, const std::vector<std::vector<Element>>& cells,
                                std::optional<std::size_t> bound = std::nullopt);

// All elements of a finite group in enumeration order.
std::vector<Element> all_elements(const Group& G);

}  // namespace coarse
