#pragma once

// Window partitions with per-cell verification certificates, plus the JSON
// form used by the command-line tool.
//
// Certificate kinds and their parameters:
//   left-large / right-large   F: radius; window: optional verification window
//   two-sided-thick            radii: list of radii
//   left-thick                 radii: list of radii
//   thin                       F: radius, n: bound, head: excluded elements
//   displacement               g: element with g·x outside the cell for x in it
//   left-small                 radii, b: translate bound, pool: optional translates
//   separation                 K: finite set, h: element with KA ∩ hA = ∅
//   scattered                  depth
//   translate-miss             H: finite set, c: element with c ∉ HA
//   cycle-reach                informational, re-checked as recorded

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coarse/group.hpp"
#include "coarse/verdict.hpp"
#include "coarse/window.hpp"

namespace coarse {

inline constexpr int kSchemaVersion = 1;

struct Certificate {
  std::string kind;
  Status status = Status::inconclusive;
  std::string note;
  nlohmann::json params = nlohmann::json::object();
};

struct Cell {
  std::string label;
  std::vector<Element> elements;
  std::vector<Certificate> certificates;
};

struct Partition {
  std::string method;
  std::uint64_t seed = 0;
  Window window;
  std::vector<Cell> cells;
  nlohmann::json info = nlohmann::json::object();

  // Index of the cell holding g, if any.
  std::optional<std::size_t> cell_of(const Element& g) const;
  // Cells are pairwise disjoint and their union is exactly the window.
  bool covers_window_disjointly() const;
  // No certificate failed (inconclusive ones are allowed).
  bool certified() const;
  // Every certificate holds.
  bool fully_certified() const;
  std::size_t nonempty_cells() const;

  nlohmann::json to_json() const;
  static Partition from_json(const GroupView& G, const nlohmann::json& j);
};

// Builds a cell list from a label per window element (window order kept).
std::vector<Cell> cells_from_labels(const Window& W, const std::vector<std::string>& labels,
                                    const std::vector<std::string>& order = {});

Radius parse_radius(const Group& G, const nlohmann::json& j);
nlohmann::json radius_json(const Group& G, const Radius& F);

// Re-runs a certificate against the cell. The certificate's own window
// parameter wins over `W` when present.
Verdict verify_certificate(const Certificate& c, const Cell& cell, const Window& W);
// Re-verifies every certificate and returns the refreshed statuses.
std::vector<std::vector<Status>> reverify(const Partition& P);

Certificate make_certificate(std::string kind, const Verdict& v, nlohmann::json params);

}  // namespace coarse
