#include "coarse/classify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

namespace coarse {

namespace {

bool shortlex_less(const Group& G, const Element& a, const Element& b) {
  auto la = G.word_length(a), lb = G.word_length(b);
  if (la != lb) return la < lb;
  return a < b;
}

bool is_integer_group(const Group& G) {
  return G.kind() == GroupKind::free_abelian && G.descriptor().rank == 1;
}

// x ∈ FA (left) or x ∈ AF (right) with F taken as given.
bool covered(const Group& G, const SubsetView& A, const std::vector<Element>& Finv,
             const Element& x, Side side) {
  for (const auto& fi : Finv) {
    if (A.contains(side == Side::left ? G.multiply(fi, x) : G.multiply(x, fi))) return true;
  }
  return false;
}

std::vector<Element> inverses(const Group& G, const Radius& F) {
  std::vector<Element> out;
  out.reserve(F.size());
  for (const auto& f : F) {
    G.require(f);
    out.push_back(G.inverse(f));
  }
  return out;
}

bool ball_inside(const Group& G, const SubsetView& A, const Radius& F, const Element& a,
                 Side side) {
  for (const auto& f : F) {
    if (!A.contains(side == Side::left ? G.multiply(f, a) : G.multiply(a, f))) return false;
  }
  return true;
}

std::string radius_note(std::size_t i) { return "radius #" + std::to_string(i); }

}  // namespace

// ---- largeness ---------------------------------------------------------------

Verdict check_large(const SubsetView& A, const Radius& F, const Window& W, Side side) {
  const Group& G = W.group();
  auto Finv = inverses(G, F);
  if (W.inner().empty()) return Verdict::inconclusive("window has an empty inner part");
  for (const auto& x : W.inner()) {
    if (!covered(G, A, Finv, x, side)) {
      return Verdict::fails({x}, G.format(x) + " is not covered by the translates");
    }
  }
  return Verdict::holds(F, "inner window of " + std::to_string(W.inner().size()) +
                               " elements covered");
}

Verdict check_left_large(const SubsetView& A, const Radius& F, const Window& W) {
  return check_large(A, F, W, Side::left);
}

Verdict check_right_large(const SubsetView& A, const Radius& F, const Window& W) {
  return check_large(A, F, W, Side::right);
}

Verdict find_large_witness(const SubsetView& A, std::size_t k, const Window& W,
                           std::optional<std::vector<Element>> candidates) {
  if (k < 1) throw Error(Errc::precondition, "the translate bound k must be at least 1");
  const Group& G = W.group();
  const auto& U = W.inner();
  std::vector<Element> C = candidates ? *candidates : W.elements();
  if (U.empty()) return Verdict::inconclusive("window has an empty inner part");
  std::sort(C.begin(), C.end(), [&G](const Element& a, const Element& b) { return shortlex_less(G, a, b); });
  C.erase(std::unique(C.begin(), C.end()), C.end());

  // cover[c] lists the indices of U covered by the translate C[c] A.
  std::vector<std::vector<std::uint32_t>> cover(C.size());
  bool fast = is_integer_group(G);
  if (fast) {
    std::int64_t umin = std::numeric_limits<std::int64_t>::max(), umax = std::numeric_limits<std::int64_t>::min();
    std::int64_t cmin = umin, cmax = umax;
    for (const auto& x : U) umin = std::min(umin, x.code[0]), umax = std::max(umax, x.code[0]);
    for (const auto& c : C) cmin = std::min(cmin, c.code[0]), cmax = std::max(cmax, c.code[0]);
    std::int64_t lo = umin - cmax, hi = umax - cmin;
    if (hi - lo > 8'000'000) {
      fast = false;
    } else {
      std::vector<char> member(static_cast<std::size_t>(hi - lo + 1));
      for (std::int64_t y = lo; y <= hi; ++y) member[static_cast<std::size_t>(y - lo)] = A.contains(z(y));
      for (std::size_t c = 0; c < C.size(); ++c) {
        for (std::size_t i = 0; i < U.size(); ++i) {
          if (member[static_cast<std::size_t>(U[i].code[0] - C[c].code[0] - lo)]) {
            cover[c].push_back(static_cast<std::uint32_t>(i));
          }
        }
      }
    }
  }
  if (!fast) {
    for (std::size_t c = 0; c < C.size(); ++c) {
      Element ci = G.inverse(C[c]);
      for (std::size_t i = 0; i < U.size(); ++i) {
        if (A.contains(G.multiply(ci, U[i]))) cover[c].push_back(static_cast<std::uint32_t>(i));
      }
    }
  }

  std::vector<char> done(U.size(), 0);
  std::size_t remaining = U.size();
  std::vector<Element> F;
  std::vector<char> used(C.size(), 0);
  while (remaining > 0 && F.size() + 1 < k) {
    std::size_t best = C.size(), best_gain = 0;
    for (std::size_t c = 0; c < C.size(); ++c) {
      if (used[c] || cover[c].size() <= best_gain) continue;
      std::size_t gain = 0;
      for (auto i : cover[c]) gain += !done[i];
      if (gain > best_gain) {
        best_gain = gain;
        best = c;
      }
    }
    if (best == C.size()) break;
    used[best] = 1;
    F.push_back(C[best]);
    for (auto i : cover[best]) {
      if (!done[i]) {
        done[i] = 1;
        --remaining;
      }
    }
  }
  std::string note = "covered " + std::to_string(U.size() - remaining) + " of " +
                     std::to_string(U.size()) + " inner elements with " +
                     std::to_string(F.size()) + " translates";
  if (remaining == 0) return Verdict::holds(F, note);
  return Verdict::fails(F, note);
}

// ---- thickness -------------------------------------------------------------

std::vector<Element> interior(const SubsetView& A, const Radius& F, const Window& W, Side side) {
  const Group& G = W.group();
  for (const auto& f : F) G.require(f);
  std::vector<Element> out;
  for (const auto& a : W.inner()) {
    if (A.contains(a) && ball_inside(G, A, F, a, side)) out.push_back(a);
  }
  return out;
}

std::optional<Element> first_interior_point(const SubsetView& A, const Radius& F, const Window& W,
                                            Side side) {
  const Group& G = W.group();
  for (const auto& f : F) G.require(f);
  for (const auto& a : W.inner()) {
    if (A.contains(a) && ball_inside(G, A, F, a, side)) return a;
  }
  return std::nullopt;
}

Verdict check_thick(const SubsetView& A, const std::vector<Radius>& radii, const Window& W,
                    Side side) {
  std::vector<Element> points;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    auto a = first_interior_point(A, radii[i], W, side);
    if (!a) return Verdict::fails(radii[i], "empty interior at " + radius_note(i));
    points.push_back(*a);
  }
  return Verdict::holds(points, "one interior point per radius");
}

Verdict check_left_thick(const SubsetView& A, const std::vector<Radius>& radii, const Window& W) {
  return check_thick(A, radii, W, Side::left);
}

Verdict check_two_sided_thick(const SubsetView& A, const std::vector<Radius>& radii,
                              const Window& W) {
  const Group& G = W.group();
  std::vector<Element> points;
  for (std::size_t i = 0; i < radii.size(); ++i) {
    for (const auto& f : radii[i]) G.require(f);
    std::optional<Element> hit;
    for (const auto& a : W.inner()) {
      if (A.contains(a) && ball_inside(G, A, radii[i], a, Side::left) &&
          ball_inside(G, A, radii[i], a, Side::right)) {
        hit = a;
        break;
      }
    }
    if (!hit) {
      return Verdict::fails(radii[i], "no two-sided interior point at " + radius_note(i));
    }
    points.push_back(*hit);
  }
  return Verdict::holds(points, "one two-sided interior point per radius");
}

// ---- smallness ---------------------------------------------------------------

Verdict check_left_small(const SubsetView& A, const std::vector<Radius>& radii, std::size_t b,
                         const Window& W, std::optional<std::vector<Element>> pool) {
  const Group& G = W.group();
  if (radii.empty()) throw Error(Errc::precondition, "smallness needs at least one radius");
  if (b < 1) throw Error(Errc::precondition, "translate bound must be at least 1");
  std::vector<Element> P;
  if (pool) {
    P = *pool;
  } else {
    P.push_back(G.identity());
    for (const auto& f : radii.front()) {
      if (std::find(P.begin(), P.end(), f) == P.end()) P.push_back(f);
    }
  }
  if (A.known_finite()) {
    return Verdict::holds({}, "finite sets are small");
  }
  // Enumerate subsets T of the pool with 1 <= |T| <= b.
  std::vector<std::size_t> idx;
  std::function<std::optional<Verdict>(std::size_t)> rec = [&](std::size_t start) -> std::optional<Verdict> {
    if (!idx.empty()) {
      std::vector<Element> T;
      for (auto i : idx) T.push_back(P[i]);
      auto TA = subsets::translates(W.group_view(), T, A);
      bool thick_everywhere = true;
      for (const auto& F : radii) {
        if (!first_interior_point(TA, F, W, Side::left)) {
          thick_everywhere = false;
          break;
        }
      }
      if (thick_everywhere) {
        return Verdict::fails(T, "the union of these translates is thick at every radius");
      }
    }
    if (idx.size() == b) return std::nullopt;
    for (std::size_t i = start; i < P.size(); ++i) {
      idx.push_back(i);
      if (auto v = rec(i + 1)) return v;
      idx.pop_back();
    }
    return std::nullopt;
  };
  if (auto v = rec(0)) return *v;
  return Verdict::holds({}, "no union of at most " + std::to_string(b) +
                                " pool translates is thick at every radius");
}

Verdict check_left_prethick(const SubsetView& A, const std::vector<Radius>& radii, std::size_t b,
                            const Window& W, std::optional<std::vector<Element>> pool) {
  return negate(check_left_small(A, radii, b, W, std::move(pool)));
}

// ---- thinness ----------------------------------------------------------------

ThinReport check_n_thin(const SubsetView& A, const Radius& F, const Window& W, std::size_t n,
                        std::optional<std::vector<Element>> head) {
  const Group& G = W.group();
  for (const auto& f : F) G.require(f);
  ElementSet H;
  {
    auto h = head ? *head : W.head();
    H.insert(h.begin(), h.end());
  }
  ThinReport r;
  r.F = F;
  for (const auto& a : A.in_inner(W)) {
    if (H.count(a)) continue;
    std::vector<Element> crowd{a};
    for (const auto& f : F) {
      Element y = G.multiply(f, a);
      if (A.contains(y) && std::find(crowd.begin(), crowd.end(), y) == crowd.end()) crowd.push_back(y);
    }
    if (crowd.size() > r.max_count) {
      r.max_count = crowd.size();
      r.argmax = a;
      r.crowd = std::move(crowd);
    }
  }
  std::string note = "max |(F u {e})a n A| = " + std::to_string(r.max_count) + " outside the head";
  if (r.max_count <= n) {
    r.verdict = Verdict::holds(F, note);
  } else {
    r.verdict = Verdict::fails(r.crowd, note);
  }
  return r;
}

// ---- sparseness --------------------------------------------------------------

std::size_t default_threshold(const Window& W) {
  return static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(W.size()))));
}

Verdict check_sparse(const SubsetView& A, const std::vector<Element>& S, std::size_t d,
                     const Window& W, std::optional<std::size_t> threshold) {
  const Group& G = W.group();
  std::size_t t = threshold ? *threshold : default_threshold(W);
  if (d < 1) throw Error(Errc::precondition, "depth must be at least 1");
  std::vector<Element> Sinv = inverses(G, S);
  // Intersections shrink as F grows, so deeper subsets are only tried when
  // the shallower ones stay at or above the threshold.
  std::vector<std::size_t> idx;
  std::optional<std::vector<Element>> found;
  std::function<void(std::size_t, const std::vector<Element>&)> rec =
      [&](std::size_t start, const std::vector<Element>& current) {
        if (found) return;
        for (std::size_t i = start; i < S.size() && !found; ++i) {
          std::vector<Element> next;
          for (const auto& x : current) {
            if (A.contains(G.multiply(Sinv[i], x))) next.push_back(x);
          }
          idx.push_back(i);
          if (next.size() < t) {
            std::vector<Element> F;
            for (auto j : idx) F.push_back(S[j]);
            found = F;
          } else if (idx.size() < d) {
            rec(i + 1, next);
          }
          idx.pop_back();
        }
      };
  rec(0, W.inner());
  if (found) {
    return Verdict::holds(*found, "intersection of these translates meets the window in fewer than " +
                                      std::to_string(t) + " elements");
  }
  return Verdict::fails(S, "every F of size <= " + std::to_string(d) +
                               " keeps the intersection at or above " + std::to_string(t));
}

// ---- combinatorial derivation ------------------------------------------------

std::vector<Element> combinatorial_derivation(const SubsetView& A, const IdealSpec& J,
                                              const Window& W) {
  if (J.kind == IdealSpec::Kind::finite_sets && A.known_finite()) return {};
  const Group& G = W.group();
  std::size_t t = J.threshold ? *J.threshold : default_threshold(W);
  auto AW = A.in(W);
  std::vector<Element> out;
  if (AW.size() <= t) return out;
  for (const auto& g : W.elements()) {
    Element gi = G.inverse(g);
    std::size_t count = 0;
    for (const auto& x : AW) {
      if (A.contains(G.multiply(gi, x)) && ++count > t) break;
    }
    if (count > t) out.push_back(g);
  }
  return out;
}

// ---- FP-sets and scattered sets ----------------------------------------------

std::vector<Element> fp_products(const Group& G, const std::vector<Element>& gs, std::size_t n) {
  if (n > gs.size()) {
    throw Error(Errc::invalid_sequence, "sequence has fewer than " + std::to_string(n) + " terms");
  }
  if (n > 24) throw Error(Errc::precondition, "FP-set depth above 24 is out of reach");
  for (std::size_t i = 0; i < n; ++i) {
    G.require(gs[i]);
    for (std::size_t j = 0; j < i; ++j) {
      if (gs[i] == gs[j]) {
        throw Error(Errc::invalid_sequence, "sequence is not injective: terms " + std::to_string(j) +
                                                " and " + std::to_string(i) + " coincide");
      }
    }
  }
  std::vector<Element> out;
  std::vector<std::size_t> idx;
  std::function<void(std::size_t, std::size_t, const Element&)> rec =
      [&](std::size_t k, std::size_t start, const Element& prefix) {
        if (idx.size() == k) {
          out.push_back(prefix);
          return;
        }
        for (std::size_t i = start; i < n; ++i) {
          idx.push_back(i);
          rec(k, i + 1, G.multiply(prefix, gs[i]));
          idx.pop_back();
        }
      };
  for (std::size_t k = 1; k <= n; ++k) rec(k, 0, G.identity());
  return out;
}

SubsetView fp_set(const GroupView& G, const std::vector<Element>& gs, std::size_t n) {
  auto xs = fp_products(*G, gs, n);
  std::string name = "fp(";
  for (std::size_t i = 0; i < n; ++i) name += (i ? "," : "") + G->format(gs[i]);
  return SubsetView::finite(name + ")", std::move(xs));
}

bool pattern_inside(const Group& G, const ShiftedPattern& p, const SubsetView& A) {
  const std::size_t d = p.gs.size();
  if (p.bs.size() != d) return false;
  for (std::uint64_t mask = 1; mask < (1ULL << d); ++mask) {
    Element x = G.identity();
    std::size_t last = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (mask >> i & 1) {
        x = G.multiply(x, p.gs[i]);
        last = i;
      }
    }
    if (!A.contains(G.multiply(x, p.bs[last]))) return false;
  }
  return true;
}

// With c_j = g_j b_j, the pattern condition at level j reads P c_j ∈ A for
// every P in FP(g_1..g_{j-1}) ∪ {e}. The search keeps C_j, the set of window
// points satisfying it, and only tries g_j = c' c⁻¹ with c, c' ∈ C_j since
// otherwise C_{j+1} would be empty.
Verdict check_scattered(const SubsetView& A, std::size_t d, const Window& W, std::size_t budget,
                        ShiftedPattern* found) {
  if (d > 12) throw Error(Errc::precondition, "scattered search depth is capped at 12");
  if (d == 0) return Verdict::holds({}, "depth 0 is vacuous");
  const Group& G = W.group();
  std::vector<Element> C1 = A.in(W);
  if (C1.empty()) return Verdict::holds({}, "A misses the window");

  std::size_t spent = 0;
  bool exhausted = false;
  std::vector<Element> gs;
  std::vector<Element> cs;

  std::function<bool(const std::vector<Element>&)> rec = [&](const std::vector<Element>& C) -> bool {
    // C is nonempty: level gs.size()+1 can be realized with c = C.front().
    cs.push_back(C.front());
    if (gs.size() + 1 == d) {
      // The last g only has to be new and nontrivial.
      for (const auto& g : W.elements()) {
        if (G.is_identity(g) || std::find(gs.begin(), gs.end(), g) != gs.end()) continue;
        gs.push_back(g);
        return true;
      }
      cs.pop_back();
      return false;
    }
    ElementSet inC(C.begin(), C.end());
    std::vector<Element> cand;
    ElementSet seen;
    for (const auto& c : C) {
      Element ci = G.inverse(c);
      for (const auto& c2 : C) {
        if (c2 == c) continue;
        Element g = G.multiply(c2, ci);
        if (std::find(gs.begin(), gs.end(), g) != gs.end()) continue;
        if (seen.insert(g).second) cand.push_back(g);
      }
    }
    std::sort(cand.begin(), cand.end(), [&G](const Element& a, const Element& b) { return shortlex_less(G, a, b); });
    for (const auto& g : cand) {
      if (++spent > budget) {
        exhausted = true;
        break;
      }
      std::vector<Element> next;
      for (const auto& c : C) {
        if (inC.count(G.multiply(g, c))) next.push_back(c);
      }
      if (next.empty()) continue;
      gs.push_back(g);
      if (rec(next)) return true;
      gs.pop_back();
      if (exhausted) break;
    }
    cs.pop_back();
    return false;
  };
  if (rec(C1)) {
    ShiftedPattern p;
    p.gs = gs;
    for (std::size_t j = 0; j < d; ++j) p.bs.push_back(G.multiply(G.inverse(gs[j]), cs[j]));
    if (!pattern_inside(G, p, A)) {
      throw Error(Errc::infeasible, "internal error: scattered search produced an invalid pattern");
    }
    if (found) *found = p;
    std::vector<Element> w = p.gs;
    w.insert(w.end(), p.bs.begin(), p.bs.end());
    return Verdict::fails(w, "piecewise shifted FP pattern of length " + std::to_string(d) +
                                 " (first half g, second half b)");
  }
  if (exhausted) return Verdict::inconclusive("search budget of " + std::to_string(budget) + " exhausted");
  return Verdict::holds({}, "no piecewise shifted FP pattern of length " + std::to_string(d) +
                                " inside the window");
}

}  // namespace coarse
