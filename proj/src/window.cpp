#include "coarse/window.hpp"

#include <algorithm>
#include <deque>

#include "coarse/verdict.hpp"

namespace coarse {

const char* to_string(Status s) noexcept {
  switch (s) {
    case Status::holds: return "holds";
    case Status::fails: return "fails";
    case Status::inconclusive: return "inconclusive";
  }
  return "unknown";
}

std::vector<std::string> format_all(const Group& G, const std::vector<Element>& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(G.format(x));
  return out;
}

nlohmann::json Verdict::to_json(const Group& G) const {
  return {{"status", to_string(status)}, {"witness", format_all(G, witness)}, {"note", note}};
}

Verdict meet(const Verdict& a, const Verdict& b) {
  auto rank = [](Status s) { return s == Status::fails ? 0 : s == Status::inconclusive ? 1 : 2; };
  return rank(b.status) < rank(a.status) ? b : a;
}

Verdict negate(Verdict v) {
  if (v.status == Status::holds) {
    v.status = Status::fails;
  } else if (v.status == Status::fails) {
    v.status = Status::holds;
  }
  return v;
}

// ---- Window -----------------------------------------------------------------

void Window::index_elements() {
  auto& st = *state_;
  st.index.reserve(st.elements.size());
  for (std::size_t i = 0; i < st.elements.size(); ++i) {
    if (!st.index.emplace(st.elements[i], i).second) {
      throw Error(Errc::precondition, "window elements must be pairwise distinct");
    }
  }
}

bool Window::contains(const Element& g) const {
  if (kind_ == Kind::interval) {
    return g.code.size() == 1 && g.code[0] >= lo_ && g.code[0] <= hi_;
  }
  return state_->index.count(g) > 0;
}

bool Window::in_inner(const Element& g) const {
  switch (kind_) {
    case Kind::interval:
      return g.code.size() == 1 && g.code[0] >= lo_ + static_cast<std::int64_t>(margin_) &&
             g.code[0] <= hi_ - static_cast<std::int64_t>(margin_);
    case Kind::ball: {
      auto it = state_->index.find(g);
      return it != state_->index.end() && state_->lengths[it->second] + margin_ <= radius_;
    }
    case Kind::explicit_set:
      if (!state_->inner_set.empty()) return state_->inner_set.count(g) > 0;
      return contains(g);
    default:
      return contains(g);
  }
}

std::optional<std::size_t> Window::position(const Element& g) const {
  auto it = state_->index.find(g);
  if (it == state_->index.end()) return std::nullopt;
  return it->second;
}

std::vector<Element> Window::head() const {
  std::vector<Element> h;
  switch (kind_) {
    case Kind::ball:
      for (std::size_t i = 0; i < size(); ++i) {
        if (2 * state_->lengths[i] <= radius_) h.push_back(state_->elements[i]);
      }
      break;
    case Kind::interval:
      for (const auto& g : elements()) {
        auto x = g.code[0] < 0 ? -g.code[0] : g.code[0];
        if (2 * static_cast<std::size_t>(x) <= radius_) h.push_back(g);
      }
      break;
    case Kind::first_n:
      h.assign(elements().begin(), elements().begin() + static_cast<std::ptrdiff_t>(size() / 2));
      break;
    default:
      break;
  }
  return h;
}

std::string Window::describe() const {
  switch (kind_) {
    case Kind::ball:
      return "ball(" + std::to_string(radius_) + ") margin " + std::to_string(margin_);
    case Kind::interval:
      return "[" + std::to_string(lo_) + "," + std::to_string(hi_) + "] margin " +
             std::to_string(margin_);
    case Kind::whole:
      return "whole group (" + std::to_string(size()) + ")";
    case Kind::first_n:
      return "first " + std::to_string(count_) + " elements";
    case Kind::explicit_set:
      return "explicit (" + std::to_string(size()) + ")";
  }
  return "window";
}

nlohmann::json Window::to_json() const {
  nlohmann::json j;
  switch (kind_) {
    case Kind::ball:
      j = {{"kind", "ball"}, {"radius", radius_}, {"margin", margin_}};
      break;
    case Kind::interval:
      j = {{"kind", "interval"}, {"lo", lo_}, {"hi", hi_}, {"margin", margin_}};
      break;
    case Kind::whole:
      j = {{"kind", "whole"}};
      break;
    case Kind::first_n:
      j = {{"kind", "first_n"}, {"count", count_}};
      break;
    case Kind::explicit_set:
      j = {{"kind", "explicit"}, {"elements", format_all(*group_, elements())}};
      break;
  }
  return j;
}

Window Window::from_json(const GroupView& G, const nlohmann::json& j) {
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "ball") {
    return enumerate_ball(G, j.at("radius").get<std::size_t>(), j.value("margin", std::size_t{0}));
  }
  if (kind == "interval") {
    return interval_window(G, j.at("lo").get<std::int64_t>(), j.at("hi").get<std::int64_t>(),
                           j.value("margin", std::int64_t{0}));
  }
  if (kind == "whole") return whole_group(G);
  if (kind == "first_n") return first_elements(G, j.at("count").get<std::uint64_t>());
  if (kind == "explicit") {
    std::vector<Element> xs;
    for (const auto& s : j.at("elements")) xs.push_back(G->parse(s.get<std::string>()));
    return explicit_window(G, std::move(xs));
  }
  throw Error(Errc::configuration, "unknown window kind '" + kind + "'");
}

Window enumerate_ball(const GroupView& G, std::size_t r, std::size_t margin, std::size_t budget) {
  const auto& S = G->generators();
  if (S.empty() && !G->order()) {
    throw Error(Errc::unsupported, G->name() + " has no finite generating set to grow balls from");
  }
  if (margin > r) throw Error(Errc::configuration, "margin must not exceed the radius");
  Window w;
  w.kind_ = Window::Kind::ball;
  w.group_ = G;
  w.radius_ = r;
  w.margin_ = margin;
  auto& st = *w.state_;
  st.elements.push_back(G->identity());
  st.lengths.push_back(0);
  st.index.emplace(G->identity(), 0);
  std::size_t frontier_begin = 0;
  for (std::size_t len = 1; len <= r; ++len) {
    std::size_t frontier_end = st.elements.size();
    if (frontier_begin == frontier_end) break;
    for (std::size_t i = frontier_begin; i < frontier_end; ++i) {
      for (const auto& s : S) {
        Element y = G->multiply(st.elements[i], s);
        if (st.index.count(y)) continue;
        if (st.elements.size() >= budget) {
          throw BudgetError("ball of radius " + std::to_string(r) + " exceeds the budget of " +
                                std::to_string(budget) + " elements",
                            st.elements.size());
        }
        st.index.emplace(y, st.elements.size());
        st.elements.push_back(std::move(y));
        st.lengths.push_back(len);
      }
    }
    frontier_begin = frontier_end;
  }
  for (std::size_t i = 0; i < st.elements.size(); ++i) {
    if (st.lengths[i] + margin <= r) st.inner.push_back(st.elements[i]);
  }
  return w;
}

Window interval_window(const GroupView& G, std::int64_t lo, std::int64_t hi, std::int64_t margin,
                       std::size_t budget) {
  if (G->kind() != GroupKind::free_abelian || G->descriptor().rank != 1) {
    throw Error(Errc::descriptor_mismatch, "interval windows live in Z, not " + G->name());
  }
  if (lo > hi) throw Error(Errc::configuration, "empty interval");
  if (margin < 0 || 2 * margin > hi - lo + 1) {
    throw Error(Errc::configuration, "margin too large for the interval");
  }
  auto n = static_cast<std::size_t>(hi - lo + 1);
  if (n > budget) {
    throw BudgetError("interval of " + std::to_string(n) + " elements exceeds the budget of " +
                          std::to_string(budget),
                      budget);
  }
  Window w;
  w.kind_ = Window::Kind::interval;
  w.group_ = G;
  w.lo_ = lo;
  w.hi_ = hi;
  w.margin_ = static_cast<std::size_t>(margin);
  w.radius_ = static_cast<std::size_t>(std::max(lo < 0 ? -lo : lo, hi < 0 ? -hi : hi));
  auto& st = *w.state_;
  st.elements.reserve(n);
  for (std::int64_t x = lo; x <= hi; ++x) st.elements.push_back(z(x));
  std::stable_sort(st.elements.begin(), st.elements.end(), [](const Element& a, const Element& b) {
    auto x = a.code[0], y = b.code[0];
    auto ax = x < 0 ? -x : x, ay = y < 0 ? -y : y;
    if (ax != ay) return ax < ay;
    return x > y;
  });
  w.index_elements();
  for (const auto& g : st.elements) {
    if (w.in_inner(g)) st.inner.push_back(g);
  }
  return w;
}

Window whole_group(const GroupView& G, std::size_t budget) {
  auto order = G->order();
  if (!order) throw Error(Errc::precondition, G->name() + " is infinite");
  if (*order > budget) {
    throw BudgetError(G->name() + " has more elements than the budget allows", budget);
  }
  Window w;
  w.kind_ = Window::Kind::whole;
  w.group_ = G;
  auto& st = *w.state_;
  for (std::uint64_t i = 0; i < *order; ++i) st.elements.push_back(*G->element_at(i));
  w.index_elements();
  for (const auto& g : st.elements) w.radius_ = std::max(w.radius_, G->word_length(g));
  st.inner = st.elements;
  return w;
}

Window first_elements(const GroupView& G, std::uint64_t n, std::size_t budget) {
  if (n > budget) {
    throw BudgetError("window of " + std::to_string(n) + " elements exceeds the budget of " +
                          std::to_string(budget),
                      budget);
  }
  Window w;
  w.kind_ = Window::Kind::first_n;
  w.group_ = G;
  w.count_ = n;
  auto& st = *w.state_;
  for (std::uint64_t i = 0; i < n; ++i) {
    auto g = G->element_at(i);
    if (!g) {
      if (i == 0) throw Error(Errc::unsupported, G->name() + " has no countable enumeration");
      break;
    }
    st.elements.push_back(std::move(*g));
  }
  w.index_elements();
  for (const auto& g : st.elements) w.radius_ = std::max(w.radius_, G->word_length(g));
  st.inner = st.elements;
  return w;
}

Window explicit_window(const GroupView& G, std::vector<Element> elements,
                       std::vector<Element> inner) {
  Window w;
  w.kind_ = Window::Kind::explicit_set;
  w.group_ = G;
  auto& st = *w.state_;
  for (const auto& g : elements) G->require(g);
  st.elements = std::move(elements);
  w.index_elements();
  if (inner.empty()) {
    st.inner = st.elements;
  } else {
    for (const auto& g : inner) {
      if (!w.contains(g)) throw Error(Errc::precondition, "inner elements must lie in the window");
    }
    st.inner = std::move(inner);
    st.inner_set.insert(st.inner.begin(), st.inner.end());
  }
  for (const auto& g : st.elements) w.radius_ = std::max(w.radius_, G->word_length(g));
  return w;
}

}  // namespace coarse
