#pragma once

// Left and right group balleans with finite radii.
//   left:  B(x, F) = (F ∪ {e}) x
//   right: B(x, F) = x (F ∪ {e})

#include <functional>
#include <vector>

#include "coarse/group.hpp"
#include "coarse/subset.hpp"
#include "coarse/verdict.hpp"
#include "coarse/window.hpp"

namespace coarse {

enum class Side { left, right };

const char* to_string(Side s) noexcept;

// Elements in order x, then the F-translates in the order of F.
std::vector<Element> ball(const Group& G, const Element& x, const Radius& F, Side side = Side::left);
// {y : x ∈ B(y, F)}, which is (F ∪ {e})⁻¹ x on the left.
std::vector<Element> dual_ball(const Group& G, const Element& x, const Radius& F,
                               Side side = Side::left);

struct BallOfSet {
  std::vector<Element> elements;
  // Elements of the union that fall outside the window; membership of their
  // neighbourhoods is not known at this scale.
  std::vector<Element> boundary;
};

BallOfSet ball_of_set(const SubsetView& A, const Radius& F, const Window& W, Side side = Side::left);

// Radius sets compose as γ = α ∪ β ∪ βα on the left (α ∪ β ∪ αβ on the right).
Radius compose_radii(const Group& G, const Radius& alpha, const Radius& beta, Side side = Side::left);

using BallFunction = std::function<std::vector<Element>(const Element&, const Radius&)>;

// Checks x ∈ B(x,α), duality and B(B(x,α),β) ⊆ B(x,γ) over the sample and
// every ordered pair of radii. The ball function can be replaced so that a
// faulty implementation is caught; a counterexample lists x, α and β.
Verdict check_ballean_axioms(const Window& sample, const std::vector<Radius>& radii,
                             Side side = Side::left, BallFunction ball_fn = {});

}  // namespace coarse
