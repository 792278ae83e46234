#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "coarse/group.hpp"

namespace coarse {

enum class Status { holds, fails, inconclusive };

const char* to_string(Status s) noexcept;

// Outcome of a window-scale check. `witness` holds the finite set that makes
// the verdict checkable: the radius F for a positive answer, the uncovered
// element or offending pattern for a negative one.
struct Verdict {
  Status status = Status::inconclusive;
  std::vector<Element> witness;
  std::string note;

  static Verdict holds(std::vector<Element> w = {}, std::string note = {}) {
    return {Status::holds, std::move(w), std::move(note)};
  }
  static Verdict fails(std::vector<Element> w = {}, std::string note = {}) {
    return {Status::fails, std::move(w), std::move(note)};
  }
  static Verdict inconclusive(std::string note, std::vector<Element> w = {}) {
    return {Status::inconclusive, std::move(w), std::move(note)};
  }

  bool ok() const noexcept { return status == Status::holds; }
  bool failed() const noexcept { return status == Status::fails; }

  nlohmann::json to_json(const Group& G) const;
};

// holds > inconclusive > fails; combining keeps the weakest.
Verdict meet(const Verdict& a, const Verdict& b);
Verdict negate(Verdict v);

std::vector<std::string> format_all(const Group& G, const std::vector<Element>& xs);

}  // namespace coarse
