#include "coarse/density.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "coarse/verdict.hpp"

namespace coarse {

using Mask = std::uint64_t;

namespace {

std::size_t finite_order(const Group& G, std::size_t cap, const char* what) {
  auto n = G.order();
  if (!n) throw Error(Errc::precondition, std::string(what) + " needs a finite group");
  if (*n > cap) {
    throw Error(Errc::precondition, std::string(what) + " is limited to groups of order " +
                                        std::to_string(cap) + "; use an estimate instead");
  }
  return static_cast<std::size_t>(*n);
}

struct Indexed {
  std::vector<Element> elems;
  ElementMap<std::size_t> index;

  explicit Indexed(const Group& G) : elems(all_elements(G)) {
    for (std::size_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  }
  Mask mask(const std::vector<Element>& xs) const {
    Mask m = 0;
    for (const auto& x : xs) m |= Mask{1} << index.at(x);
    return m;
  }
  std::vector<Element> unmask(Mask m) const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < elems.size(); ++i)
      if (m >> i & 1) out.push_back(elems[i]);
    return out;
  }
  // Mask of {x a y : a ∈ A}.
  Mask translate(const Group& G, const Element& x, const std::vector<Element>& A, const Element& y) const {
    Mask m = 0;
    for (const auto& a : A) m |= Mask{1} << index.at(G.multiply(G.multiply(x, a), y));
    return m;
  }
};

std::size_t count(Mask m) { return static_cast<std::size_t>(std::popcount(m)); }

}  // namespace

std::vector<Element> all_elements(const Group& G) {
  auto n = G.order();
  if (!n) throw Error(Errc::precondition, G.name() + " is infinite");
  std::vector<Element> out;
  for (std::uint64_t i = 0; i < *n; ++i) out.push_back(*G.element_at(i));
  return out;
}

nlohmann::json DensityReport::to_json(const Group& G) const {
  return {{"value_num", value.numerator()},
          {"value_den", value.denominator()},
          {"mode", mode == DensityMode::exact ? "exact" : "upper-evidence"},
          {"witness", format_all(G, F_used)}};
}

DensityReport sigma_exact_finite(const Group& G, const std::vector<Element>& A, DensityVariant v) {
  const std::size_t n = finite_order(G, kSigmaExactCap, "exact density");
  Indexed I(G);
  std::vector<Mask> shifts;
  for (const auto& x : I.elems) {
    if (v == DensityVariant::two_sided) {
      for (const auto& y : I.elems) shifts.push_back(I.translate(G, x, A, y));
    } else if (v == DensityVariant::left) {
      shifts.push_back(I.translate(G, x, A, G.identity()));
    } else {
      shifts.push_back(I.translate(G, G.identity(), A, x));
    }
  }
  std::sort(shifts.begin(), shifts.end());
  shifts.erase(std::unique(shifts.begin(), shifts.end()), shifts.end());
  DensityReport best;
  best.value = Rational(2);
  Mask best_F = 0;
  for (Mask F = 1; F < (Mask{1} << n); ++F) {
    std::size_t top = 0;
    for (auto s : shifts) top = std::max(top, count(F & s));
    Rational r(static_cast<std::int64_t>(top), static_cast<std::int64_t>(count(F)));
    if (r < best.value) {
      best.value = r;
      best_F = F;
    }
  }
  best.F_used = I.unmask(best_F);
  return best;
}

DensityReport sigma_estimate(const SubsetView& A, const std::vector<Radius>& family, const Window& W,
                             DensityVariant v) {
  const Group& G = W.group();
  DensityReport best;
  best.mode = DensityMode::upper_evidence;
  best.value = Rational(2);
  for (const auto& F : family) {
    if (F.empty()) continue;
    std::size_t top = 0;
    auto hits = [&](const Element& x, const Element& y) {
      // f ∈ xAy iff x^-1 f y^-1 ∈ A
      std::size_t c = 0;
      Element xi = G.inverse(x), yi = G.inverse(y);
      for (const auto& f : F) c += A.contains(G.multiply(G.multiply(xi, f), yi));
      return c;
    };
    for (const auto& x : W.elements()) {
      if (v == DensityVariant::left) top = std::max(top, hits(x, G.identity()));
      else if (v == DensityVariant::right) top = std::max(top, hits(G.identity(), x));
      else
        for (const auto& y : W.elements()) top = std::max(top, hits(x, y));
      if (top == F.size()) break;
    }
    Rational r(static_cast<std::int64_t>(top), static_cast<std::int64_t>(F.size()));
    if (r < best.value) {
      best.value = r;
      best.F_used = F;
    }
  }
  if (best.value > 1) throw Error(Errc::precondition, "the F family has no nonempty member");
  return best;
}

std::vector<Radius> ball_family(const GroupView& G, std::size_t r) {
  std::vector<Radius> out;
  for (std::size_t k = 1; k <= r; ++k) out.push_back(enumerate_ball(G, k).elements());
  return out;
}

CoverResult cov_exact(const Group& G, const std::vector<Element>& A) {
  const std::size_t n = finite_order(G, kCovExactCap, "exact covering number");
  if (A.empty()) return {};
  Indexed I(G);
  const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  std::vector<Mask> t(n);
  for (std::size_t x = 0; x < n; ++x) t[x] = I.translate(G, I.elems[x], A, G.identity());
  const std::size_t a = count(t[0]);

  // Greedy start.
  std::vector<std::size_t> best;
  for (Mask covered = 0; covered != full;) {
    std::size_t pick = 0, gain = 0;
    for (std::size_t x = 0; x < n; ++x) {
      if (count(t[x] & ~covered) > gain) {
        gain = count(t[x] & ~covered);
        pick = x;
      }
    }
    best.push_back(pick);
    covered |= t[pick];
  }
  std::vector<std::size_t> cur;
  std::function<void(Mask)> search = [&](Mask covered) {
    if (covered == full) {
      if (cur.size() < best.size()) best = cur;
      return;
    }
    std::size_t left = count(full & ~covered);
    if (cur.size() + (left + a - 1) / a >= best.size()) return;
    std::size_t u = static_cast<std::size_t>(std::countr_zero(full & ~covered));
    std::vector<std::size_t> options;
    for (std::size_t x = 0; x < n; ++x)
      if (t[x] >> u & 1) options.push_back(x);
    std::sort(options.begin(), options.end(), [&](std::size_t p, std::size_t q) {
      return count(t[p] & ~covered) > count(t[q] & ~covered);
    });
    for (auto x : options) {
      cur.push_back(x);
      search(covered | t[x]);
      cur.pop_back();
    }
  };
  search(0);
  CoverResult r;
  r.count = best.size();
  for (auto x : best) r.witness.push_back(I.elems[x]);
  return r;
}

PackResult pack_lower(const SubsetView& A, const Window& W) {
  const Group& G = W.group();
  PackResult r;
  auto order = G.order();
  if (A.known_finite() && W.kind() == Window::Kind::whole && order && *order <= kSigmaExactCap) {
    Indexed I(G);
    const auto& elems = A.elements();
    const std::size_t n = I.elems.size();
    std::vector<Mask> t(n);
    for (std::size_t x = 0; x < n; ++x) t[x] = I.translate(G, I.elems[x], elems, G.identity());
    std::vector<std::size_t> best, cur;
    std::function<void(std::size_t, Mask)> search = [&](std::size_t start, Mask used) {
      if (cur.size() > best.size()) best = cur;
      for (std::size_t x = start; x < n; ++x) {
        if (t[x] & used) continue;
        cur.push_back(x);
        search(x + 1, used | t[x]);
        cur.pop_back();
      }
    };
    search(0, 0);
    for (auto x : best) r.witness.push_back(I.elems[x]);
    r.count = best.size();
    r.exact = true;
    return r;
  }
  ElementSet used;
  for (const auto& s : W.elements()) {
    // sA ∩ W
    std::vector<Element> sA;
    Element si = G.inverse(s);
    bool clash = false;
    for (const auto& y : W.elements()) {
      if (!A.contains(G.multiply(si, y))) continue;
      if (used.count(y)) {
        clash = true;
        break;
      }
      sA.push_back(y);
    }
    if (clash || sA.empty()) continue;
    used.insert(sA.begin(), sA.end());
    r.witness.push_back(s);
  }
  r.count = r.witness.size();
  return r;
}

namespace {

KourovkaResult statement_check(const Group& G, const std::vector<std::vector<Element>>& cells,
                               std::optional<std::size_t> bound, bool times_a) {
  const std::size_t n = finite_order(G, kCovExactCap, "partition statement check");
  Indexed I(G);
  const Mask full = n == 64 ? ~Mask{0} : (Mask{1} << n) - 1;
  const std::size_t limit = bound ? *bound : cells.size();
  KourovkaResult result;
  for (std::size_t ci = 0; ci < cells.size(); ++ci) {
    const auto& A = cells[ci];
    std::vector<Element> B;  // A A^-1 or A A^-1 A
    {
      ElementSet seen;
      for (const auto& a : A)
        for (const auto& b : A) {
          Element d = G.multiply(a, G.inverse(b));
          if (!times_a) {
            if (seen.insert(d).second) B.push_back(d);
            continue;
          }
          for (const auto& c : A) {
            Element e = G.multiply(d, c);
            if (seen.insert(e).second) B.push_back(e);
          }
        }
    }
    if (B.empty()) continue;
    std::vector<Mask> t(n);
    for (std::size_t x = 0; x < n; ++x) t[x] = I.translate(G, I.elems[x], B, G.identity());
    // F by increasing size, lexicographic in enumeration order.
    std::vector<std::size_t> pick;
    std::function<bool(std::size_t, std::size_t, Mask)> choose = [&](std::size_t start, std::size_t k,
                                                                     Mask covered) {
      if (pick.size() == k) return covered == full;
      for (std::size_t x = start; x < n; ++x) {
        pick.push_back(x);
        if (choose(x + 1, k, covered | t[x])) return true;
        pick.pop_back();
      }
      return false;
    };
    for (std::size_t k = 1; k <= limit && k <= n; ++k) {
      pick.clear();
      if (!choose(0, k, 0)) continue;
      if (!result.found) {
        result.found = true;
        result.cell = ci;
        for (auto x : pick) result.F.push_back(I.elems[x]);
      }
      if (result.smallest == 0 || k < result.smallest) result.smallest = k;
      break;
    }
  }
  return result;
}

}  // namespace

KourovkaResult kourovka_check(const Group& G, const std::vector<std::vector<Element>>& cells,
                              std::optional<std::size_t> bound) {
  return statement_check(G, cells, bound, false);
}

KourovkaResult statement4_check(const Group& G, const std::vector<std::vector<Element>>& cells,
                                std::optional<std::size_t> bound) {
  return statement_check(G, cells, bound, true);
}

}  // namespace coarse
