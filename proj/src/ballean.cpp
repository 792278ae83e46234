#include "coarse/ballean.hpp"

#include <algorithm>

namespace coarse {

const char* to_string(Side s) noexcept { return s == Side::left ? "left" : "right"; }

namespace {

void push_unique(std::vector<Element>& out, ElementSet& seen, Element g) {
  if (seen.insert(g).second) out.push_back(std::move(g));
}

}  // namespace

std::vector<Element> ball(const Group& G, const Element& x, const Radius& F, Side side) {
  G.require(x);
  std::vector<Element> out;
  ElementSet seen;
  push_unique(out, seen, x);
  for (const auto& f : F) {
    G.require(f);
    push_unique(out, seen, side == Side::left ? G.multiply(f, x) : G.multiply(x, f));
  }
  return out;
}

std::vector<Element> dual_ball(const Group& G, const Element& x, const Radius& F, Side side) {
  G.require(x);
  std::vector<Element> out;
  ElementSet seen;
  push_unique(out, seen, x);
  for (const auto& f : F) {
    G.require(f);
    Element fi = G.inverse(f);
    push_unique(out, seen, side == Side::left ? G.multiply(fi, x) : G.multiply(x, fi));
  }
  return out;
}

BallOfSet ball_of_set(const SubsetView& A, const Radius& F, const Window& W, Side side) {
  const Group& G = W.group();
  BallOfSet r;
  ElementSet seen;
  for (const auto& a : A.in(W)) {
    for (auto& y : ball(G, a, F, side)) {
      if (!seen.insert(y).second) continue;
      if (!W.contains(y)) r.boundary.push_back(y);
      r.elements.push_back(std::move(y));
    }
  }
  return r;
}

Radius compose_radii(const Group& G, const Radius& alpha, const Radius& beta, Side side) {
  Radius out;
  ElementSet seen;
  for (const auto& a : alpha) push_unique(out, seen, a);
  for (const auto& b : beta) push_unique(out, seen, b);
  for (const auto& b : beta)
    for (const auto& a : alpha)
      push_unique(out, seen, side == Side::left ? G.multiply(b, a) : G.multiply(a, b));
  return out;
}

Verdict check_ballean_axioms(const Window& sample, const std::vector<Radius>& radii, Side side,
                             BallFunction ball_fn) {
  const Group& G = sample.group();
  if (!ball_fn) {
    ball_fn = [&G, side](const Element& x, const Radius& F) { return ball(G, x, F, side); };
  }
  for (const auto& x : sample.elements()) {
    for (std::size_t i = 0; i < radii.size(); ++i) {
      const auto& alpha = radii[i];
      auto bx = ball_fn(x, alpha);
      if (std::find(bx.begin(), bx.end(), x) == bx.end()) {
        return Verdict::fails({x}, "x is missing from its own ball");
      }
      // Duality: y ∈ B(x, α) iff x ∈ B*(y, α).
      for (const auto& y : bx) {
        auto d = dual_ball(G, y, alpha, side);
        if (std::find(d.begin(), d.end(), x) == d.end()) {
          return Verdict::fails({x, y}, "dual ball of y misses x although y is in B(x)");
        }
      }
      for (std::size_t j = 0; j < radii.size(); ++j) {
        const auto& beta = radii[j];
        Radius gamma = compose_radii(G, alpha, beta, side);
        auto big = ball_fn(x, gamma);
        ElementSet target(big.begin(), big.end());
        for (const auto& y : bx) {
          for (const auto& w : ball_fn(y, beta)) {
            if (!target.count(w)) {
              std::vector<Element> witness{x, w};
              return Verdict::fails(witness, "B(B(x,alpha),beta) escapes B(x,gamma) for alpha = radius " +
                                                 std::to_string(i) + ", beta = radius " +
                                                 std::to_string(j));
            }
          }
        }
      }
    }
  }
  return Verdict::holds({}, "composition with gamma = alpha u beta u beta*alpha");
}

}  // namespace coarse
