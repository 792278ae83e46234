#include "coarse/subset.hpp"

#include <algorithm>
#include <cmath>

namespace coarse {

SubsetView SubsetView::finite(std::string name, std::vector<Element> elements) {
  ElementSet seen;
  std::vector<Element> uniq;
  for (auto& g : elements) {
    if (seen.insert(g).second) uniq.push_back(std::move(g));
  }
  auto shared = std::make_shared<const std::vector<Element>>(std::move(uniq));
  auto set = std::make_shared<const ElementSet>(std::move(seen));
  SubsetView v(std::move(name), [set](const Element& g) { return set->count(g) > 0; });
  v.finite_ = std::move(shared);
  return v;
}

const std::vector<Element>& SubsetView::elements() const {
  if (!finite_) throw Error(Errc::precondition, "subset '" + name_ + "' is not known to be finite");
  return *finite_;
}

std::vector<Element> SubsetView::in(const Window& W) const {
  std::vector<Element> out;
  if (finite_ && finite_->size() < W.size()) {
    std::vector<std::pair<std::size_t, Element>> hits;
    for (const auto& g : *finite_) {
      if (auto p = W.position(g)) hits.emplace_back(*p, g);
    }
    std::sort(hits.begin(), hits.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [p, g] : hits) out.push_back(std::move(g));
    return out;
  }
  for (const auto& g : W.elements()) {
    if (contains(g)) out.push_back(g);
  }
  return out;
}

std::vector<Element> SubsetView::in_inner(const Window& W) const {
  std::vector<Element> out;
  for (auto& g : in(W)) {
    if (W.in_inner(g)) out.push_back(std::move(g));
  }
  return out;
}

SubsetView SubsetView::renamed(std::string name) const {
  SubsetView v = *this;
  v.name_ = std::move(name);
  return v;
}

namespace subsets {

namespace {

void require_integers(const GroupView& G, const std::string& atom) {
  if (G->kind() != GroupKind::free_abelian || G->descriptor().rank != 1) {
    throw Error(Errc::descriptor_mismatch, "'" + atom + "' is defined on Z, not on " + G->name());
  }
}

std::int64_t isqrt(std::int64_t x) {
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

SubsetView evens(const GroupView& G) { return multiples(G, 2).renamed("evens"); }

SubsetView multiples(const GroupView& G, std::int64_t k) {
  require_integers(G, "multiples");
  if (k == 0) return explicit_set(G, {z(0)}).renamed("multiples(0)");
  return SubsetView("multiples(" + std::to_string(k) + ")",
                    [k](const Element& g) { return g.code.size() == 1 && g.code[0] % k == 0; });
}

SubsetView squares(const GroupView& G) {
  require_integers(G, "squares");
  return SubsetView("squares", [](const Element& g) {
    if (g.code.size() != 1 || g.code[0] < 0) return false;
    auto r = isqrt(g.code[0]);
    return r * r == g.code[0];
  });
}

SubsetView powers(const GroupView& G, std::int64_t base) {
  require_integers(G, "powers");
  if (base < 2) throw Error(Errc::configuration, "powers needs a base of at least 2");
  return SubsetView("powers(" + std::to_string(base) + ")", [base](const Element& g) {
    if (g.code.size() != 1 || g.code[0] < 1) return false;
    auto x = g.code[0];
    while (x % base == 0) x /= base;
    return x == 1;
  });
}

SubsetView naturals(const GroupView& G) {
  require_integers(G, "naturals");
  return SubsetView("naturals", [](const Element& g) { return g.code.size() == 1 && g.code[0] >= 0; });
}

SubsetView all(const GroupView& G) {
  return SubsetView("all", [G](const Element& g) { return G->is_valid(g); });
}

SubsetView none(const GroupView&) { return SubsetView::finite("empty", {}); }

SubsetView sphere(const GroupView& G, std::size_t k) {
  return SubsetView("weight=" + std::to_string(k),
                    [G, k](const Element& g) { return G->is_valid(g) && G->word_length(g) == k; });
}

SubsetView explicit_set(const GroupView& G, std::vector<Element> elements) {
  std::string name = "explicit[";
  for (std::size_t i = 0; i < elements.size(); ++i) {
    G->require(elements[i]);
    if (i) name += ",";
    name += G->format(elements[i]);
  }
  return SubsetView::finite(name + "]", std::move(elements));
}

SubsetView predicate(const GroupView&, std::string name, SubsetView::Predicate p) {
  return SubsetView(std::move(name), std::move(p));
}

SubsetView first_letter(const GroupView& G, std::size_t letter) {
  const auto& F = as_free(*G);
  if (letter >= F.rank()) throw Error(Errc::invalid_letter, "letter outside the alphabet");
  auto v = static_cast<std::int64_t>(letter + 1);
  return SubsetView("lambda=" + FreeGroup::letter_name(letter), [v](const Element& g) {
    return !g.code.empty() && (g.code.front() == v || g.code.front() == -v);
  });
}

SubsetView last_letter(const GroupView& G, std::size_t letter) {
  const auto& F = as_free(*G);
  if (letter >= F.rank()) throw Error(Errc::invalid_letter, "letter outside the alphabet");
  auto v = static_cast<std::int64_t>(letter + 1);
  return SubsetView("rho=" + FreeGroup::letter_name(letter), [v](const Element& g) {
    return !g.code.empty() && (g.code.back() == v || g.code.back() == -v);
  });
}

SubsetView set_union(const SubsetView& a, const SubsetView& b) {
  std::string name = "(" + a.name() + " union " + b.name() + ")";
  if (a.known_finite() && b.known_finite()) {
    auto xs = a.elements();
    xs.insert(xs.end(), b.elements().begin(), b.elements().end());
    return SubsetView::finite(name, std::move(xs));
  }
  return SubsetView(name, [a, b](const Element& g) { return a.contains(g) || b.contains(g); });
}

SubsetView set_inter(const SubsetView& a, const SubsetView& b) {
  std::string name = "(" + a.name() + " inter " + b.name() + ")";
  if (a.known_finite() || b.known_finite()) {
    const auto& small = a.known_finite() ? a : b;
    const auto& other = a.known_finite() ? b : a;
    std::vector<Element> xs;
    for (const auto& g : small.elements()) {
      if (other.contains(g)) xs.push_back(g);
    }
    return SubsetView::finite(name, std::move(xs));
  }
  return SubsetView(name, [a, b](const Element& g) { return a.contains(g) && b.contains(g); });
}

SubsetView set_diff(const SubsetView& a, const SubsetView& b) {
  std::string name = "(" + a.name() + " diff " + b.name() + ")";
  if (a.known_finite()) {
    std::vector<Element> xs;
    for (const auto& g : a.elements()) {
      if (!b.contains(g)) xs.push_back(g);
    }
    return SubsetView::finite(name, std::move(xs));
  }
  return SubsetView(name, [a, b](const Element& g) { return a.contains(g) && !b.contains(g); });
}

SubsetView complement(const GroupView& G, const SubsetView& a) {
  return SubsetView("complement(" + a.name() + ")",
                    [G, a](const Element& g) { return G->is_valid(g) && !a.contains(g); });
}

SubsetView translate(const GroupView& G, const Element& g, const SubsetView& a) {
  G->require(g);
  std::string name = "translate(" + G->format(g) + ") " + a.name();
  if (a.known_finite()) {
    std::vector<Element> xs;
    for (const auto& x : a.elements()) xs.push_back(G->multiply(g, x));
    return SubsetView::finite(name, std::move(xs));
  }
  Element gi = G->inverse(g);
  return SubsetView(name, [G, gi, a](const Element& x) {
    return G->is_valid(x) && a.contains(G->multiply(gi, x));
  });
}

SubsetView right_translate(const GroupView& G, const SubsetView& a, const Element& g) {
  G->require(g);
  std::string name = a.name() + "*" + G->format(g);
  if (a.known_finite()) {
    std::vector<Element> xs;
    for (const auto& x : a.elements()) xs.push_back(G->multiply(x, g));
    return SubsetView::finite(name, std::move(xs));
  }
  Element gi = G->inverse(g);
  return SubsetView(name, [G, gi, a](const Element& x) {
    return G->is_valid(x) && a.contains(G->multiply(x, gi));
  });
}

SubsetView inverse(const GroupView& G, const SubsetView& a) {
  std::string name = "inverse " + a.name();
  if (a.known_finite()) {
    std::vector<Element> xs;
    for (const auto& x : a.elements()) xs.push_back(G->inverse(x));
    return SubsetView::finite(name, std::move(xs));
  }
  return SubsetView(name, [G, a](const Element& x) {
    return G->is_valid(x) && a.contains(G->inverse(x));
  });
}

SubsetView translates(const GroupView& G, const std::vector<Element>& F, const SubsetView& a) {
  std::string name = "{";
  std::vector<Element> inv;
  for (std::size_t i = 0; i < F.size(); ++i) {
    G->require(F[i]);
    if (i) name += ",";
    name += G->format(F[i]);
    inv.push_back(G->inverse(F[i]));
  }
  name += "}" + a.name();
  if (a.known_finite()) {
    std::vector<Element> xs;
    for (const auto& f : F)
      for (const auto& x : a.elements()) xs.push_back(G->multiply(f, x));
    return SubsetView::finite(name, std::move(xs));
  }
  return SubsetView(name, [G, inv, a](const Element& x) {
    if (!G->is_valid(x)) return false;
    for (const auto& fi : inv) {
      if (a.contains(G->multiply(fi, x))) return true;
    }
    return false;
  });
}

}  // namespace subsets

}  // namespace coarse
