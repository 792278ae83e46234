#pragma once

// Finite enumerated portions of a group. Window-scale checks scan the inner
// part (the window minus its margin) and treat anything beyond it as unknown.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coarse/group.hpp"

namespace coarse {

inline constexpr std::size_t kDefaultBudget = 1'000'000;

class Window {
 public:
  enum class Kind { ball, interval, whole, first_n, explicit_set };

  Window() = default;

  Kind kind() const noexcept { return kind_; }
  const GroupView& group_view() const noexcept { return group_; }
  const Group& group() const noexcept { return *group_; }

  // Largest word length in the window (ball radius for ball windows).
  std::size_t radius() const noexcept { return radius_; }
  std::size_t margin() const noexcept { return margin_; }

  const std::vector<Element>& elements() const noexcept { return state_->elements; }
  std::size_t size() const noexcept { return state_->elements.size(); }
  const std::vector<Element>& inner() const noexcept { return state_->inner; }

  bool contains(const Element& g) const;
  bool in_inner(const Element& g) const;
  std::optional<std::size_t> position(const Element& g) const;

  // The finite head excluded by "all but finitely many" checks: the ball of
  // half the radius for ball and interval windows, the first half of a
  // first_n window, nothing for finite groups and explicit windows.
  std::vector<Element> head() const;

  std::string describe() const;
  nlohmann::json to_json() const;
  static Window from_json(const GroupView& G, const nlohmann::json& j);

  friend Window enumerate_ball(const GroupView& G, std::size_t r, std::size_t margin,
                               std::size_t budget);
  friend Window interval_window(const GroupView& G, std::int64_t lo, std::int64_t hi,
                                std::int64_t margin, std::size_t budget);
  friend Window whole_group(const GroupView& G, std::size_t budget);
  friend Window first_elements(const GroupView& G, std::uint64_t n, std::size_t budget);
  friend Window explicit_window(const GroupView& G, std::vector<Element> elements,
                                std::vector<Element> inner);

 private:
  struct State {
    std::vector<Element> elements;
    std::vector<Element> inner;
    ElementMap<std::size_t> index;
    std::vector<std::size_t> lengths;  // ball windows only
    ElementSet inner_set;              // explicit windows with a proper inner part
  };

  Kind kind_ = Kind::explicit_set;
  GroupView group_;
  std::size_t radius_ = 0;
  std::size_t margin_ = 0;
  std::int64_t lo_ = 0, hi_ = 0;
  std::uint64_t count_ = 0;
  std::shared_ptr<State> state_ = std::make_shared<State>();

  void index_elements();
};

// Breadth-first ball {g : |g|_S <= r}, ordered by sphere and then by generator
// order. Throws BudgetError once more than `budget` elements are produced.
Window enumerate_ball(const GroupView& G, std::size_t r, std::size_t margin = 0,
                      std::size_t budget = kDefaultBudget);
// Integer interval [lo, hi] in Z, ordered by |x| with positives first.
Window interval_window(const GroupView& G, std::int64_t lo, std::int64_t hi,
                       std::int64_t margin = 0, std::size_t budget = kDefaultBudget);
Window whole_group(const GroupView& G, std::size_t budget = kDefaultBudget);
// The first n elements of the group's countable enumeration.
Window first_elements(const GroupView& G, std::uint64_t n, std::size_t budget = kDefaultBudget);
// Explicit elements; an empty `inner` means the whole list is inner.
Window explicit_window(const GroupView& G, std::vector<Element> elements,
                       std::vector<Element> inner = {});

}  // namespace coarse
