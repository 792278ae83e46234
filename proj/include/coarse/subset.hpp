#pragma once

// Subsets of a group given by a membership predicate. Finite subsets also
// carry their element list so that window intersections need no scan.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "coarse/group.hpp"
#include "coarse/window.hpp"

namespace coarse {

class SubsetView {
 public:
  using Predicate = std::function<bool(const Element&)>;

  SubsetView() = default;
  SubsetView(std::string name, Predicate contains)
      : name_(std::move(name)), contains_(std::move(contains)) {}

  // A finite subset listed explicitly (order preserved, duplicates dropped).
  static SubsetView finite(std::string name, std::vector<Element> elements);

  const std::string& name() const noexcept { return name_; }
  bool contains(const Element& g) const { return contains_ && contains_(g); }
  bool operator()(const Element& g) const { return contains(g); }

  bool known_finite() const noexcept { return finite_ != nullptr; }
  // All elements of a known-finite subset.
  const std::vector<Element>& elements() const;

  // A ∩ W in window order.
  std::vector<Element> in(const Window& W) const;
  // A ∩ (W minus margin) in window order.
  std::vector<Element> in_inner(const Window& W) const;

  SubsetView renamed(std::string name) const;

 private:
  std::string name_;
  Predicate contains_;
  std::shared_ptr<const std::vector<Element>> finite_;
};

namespace subsets {

// Atoms over Z.
SubsetView evens(const GroupView& G);
SubsetView multiples(const GroupView& G, std::int64_t k);
SubsetView squares(const GroupView& G);
SubsetView powers(const GroupView& G, std::int64_t base);
SubsetView naturals(const GroupView& G);

// Atoms over any group.
SubsetView all(const GroupView& G);
SubsetView none(const GroupView& G);
SubsetView sphere(const GroupView& G, std::size_t k);  // word length exactly k
SubsetView explicit_set(const GroupView& G, std::vector<Element> elements);
SubsetView predicate(const GroupView& G, std::string name, SubsetView::Predicate p);

// Free groups: first / last letter equal to the given letter up to sign.
SubsetView first_letter(const GroupView& G, std::size_t letter);
SubsetView last_letter(const GroupView& G, std::size_t letter);

SubsetView set_union(const SubsetView& a, const SubsetView& b);
SubsetView set_inter(const SubsetView& a, const SubsetView& b);
SubsetView set_diff(const SubsetView& a, const SubsetView& b);
SubsetView complement(const GroupView& G, const SubsetView& a);
// gA = {g x : x ∈ A}
SubsetView translate(const GroupView& G, const Element& g, const SubsetView& a);
// Ag = {x g : x ∈ A}
SubsetView right_translate(const GroupView& G, const SubsetView& a, const Element& g);
SubsetView inverse(const GroupView& G, const SubsetView& a);
// FA = ⋃_{f∈F} fA (F used as given).
SubsetView translates(const GroupView& G, const std::vector<Element>& F, const SubsetView& a);

}  // namespace subsets

}  // namespace coarse
