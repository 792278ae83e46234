#include "coarse/partition.hpp"

#include <algorithm>
#include <unordered_map>

#include "coarse/classify.hpp"
#include "coarse/filtration.hpp"
#include "coarse/subset.hpp"

namespace coarse {

std::optional<std::size_t> Partition::cell_of(const Element& g) const {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (std::find(cells[i].elements.begin(), cells[i].elements.end(), g) != cells[i].elements.end()) {
      return i;
    }
  }
  return std::nullopt;
}

bool Partition::covers_window_disjointly() const {
  ElementSet seen;
  std::size_t total = 0;
  for (const auto& c : cells) {
    for (const auto& g : c.elements) {
      if (!window.contains(g) || !seen.insert(g).second) return false;
      ++total;
    }
  }
  return total == window.size();
}

bool Partition::certified() const {
  for (const auto& c : cells)
    for (const auto& cert : c.certificates)
      if (cert.status == Status::fails) return false;
  return true;
}

bool Partition::fully_certified() const {
  for (const auto& c : cells)
    for (const auto& cert : c.certificates)
      if (cert.status != Status::holds) return false;
  return true;
}

std::size_t Partition::nonempty_cells() const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [](const Cell& c) { return !c.elements.empty(); }));
}

nlohmann::json Partition::to_json() const {
  const Group& G = window.group();
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["method"] = method;
  j["seed"] = seed;
  j["group"] = G.descriptor().to_json();
  j["window"] = window.to_json();
  j["info"] = info;
  j["cells"] = nlohmann::json::array();
  for (const auto& c : cells) {
    nlohmann::json jc;
    jc["label"] = c.label;
    jc["elements"] = format_all(G, c.elements);
    jc["certificates"] = nlohmann::json::array();
    for (const auto& cert : c.certificates) {
      jc["certificates"].push_back(
          {{"kind", cert.kind}, {"status", to_string(cert.status)}, {"note", cert.note}, {"params", cert.params}});
    }
    j["cells"].push_back(jc);
  }
  return j;
}

namespace {

Status status_from(const std::string& s) {
  if (s == "holds") return Status::holds;
  if (s == "fails") return Status::fails;
  return Status::inconclusive;
}

}  // namespace

Partition Partition::from_json(const GroupView& G, const nlohmann::json& j) {
  if (j.value("schema_version", 0) != kSchemaVersion) {
    throw Error(Errc::configuration, "unsupported partition schema version");
  }
  Partition P;
  P.method = j.at("method").get<std::string>();
  P.seed = j.value("seed", std::uint64_t{0});
  P.window = Window::from_json(G, j.at("window"));
  P.info = j.value("info", nlohmann::json::object());
  for (const auto& jc : j.at("cells")) {
    Cell c;
    c.label = jc.at("label").get<std::string>();
    for (const auto& s : jc.at("elements")) c.elements.push_back(G->parse(s.get<std::string>()));
    for (const auto& jcert : jc.at("certificates")) {
      Certificate cert;
      cert.kind = jcert.at("kind").get<std::string>();
      cert.status = status_from(jcert.at("status").get<std::string>());
      cert.note = jcert.value("note", std::string{});
      cert.params = jcert.value("params", nlohmann::json::object());
      c.certificates.push_back(std::move(cert));
    }
    P.cells.push_back(std::move(c));
  }
  return P;
}

std::vector<Cell> cells_from_labels(const Window& W, const std::vector<std::string>& labels,
                                    const std::vector<std::string>& order) {
  std::vector<Cell> cells;
  std::unordered_map<std::string, std::size_t> where;
  for (const auto& l : order) {
    where.emplace(l, cells.size());
    cells.push_back({l, {}, {}});
  }
  for (std::size_t i = 0; i < W.size(); ++i) {
    auto [it, fresh] = where.emplace(labels[i], cells.size());
    if (fresh) cells.push_back({labels[i], {}, {}});
    cells[it->second].elements.push_back(W.elements()[i]);
  }
  return cells;
}

Radius parse_radius(const Group& G, const nlohmann::json& j) {
  Radius F;
  for (const auto& s : j) F.push_back(G.parse(s.get<std::string>()));
  return F;
}

nlohmann::json radius_json(const Group& G, const Radius& F) { return format_all(G, F); }

Certificate make_certificate(std::string kind, const Verdict& v, nlohmann::json params) {
  return {std::move(kind), v.status, v.note, std::move(params)};
}

Verdict verify_certificate(const Certificate& c, const Cell& cell, const Window& W0) {
  const GroupView& G = W0.group_view();
  Window W = c.params.contains("window") ? Window::from_json(G, c.params.at("window")) : W0;
  auto A = SubsetView::finite(cell.label, cell.elements);
  if (c.kind == "left-large" || c.kind == "right-large") {
    auto F = parse_radius(*G, c.params.at("F"));
    return check_large(A, F, W, c.kind == "left-large" ? Side::left : Side::right);
  }
  if (c.kind == "two-sided-thick" || c.kind == "left-thick") {
    std::vector<Radius> radii;
    for (const auto& r : c.params.at("radii")) radii.push_back(parse_radius(*G, r));
    return c.kind == "left-thick" ? check_left_thick(A, radii, W) : check_two_sided_thick(A, radii, W);
  }
  if (c.kind == "thin") {
    auto F = parse_radius(*G, c.params.at("F"));
    std::vector<Element> head;
    if (c.params.contains("head")) head = parse_radius(*G, c.params.at("head"));
    return check_n_thin(A, F, W, c.params.value("n", std::size_t{1}), head).verdict;
  }
  if (c.kind == "displacement") {
    Element g = G->parse(c.params.at("g").get<std::string>());
    ElementSet in(cell.elements.begin(), cell.elements.end());
    for (const auto& x : cell.elements) {
      if (in.count(G->multiply(g, x))) return Verdict::fails({x}, "g x stays in the cell");
    }
    return Verdict::holds({g}, "g moves every point out of the cell");
  }
  if (c.kind == "left-small") {
    // Membership is exact on the cell so the check is not short-circuited as finite.
    ElementSet in(cell.elements.begin(), cell.elements.end());
    auto P = subsets::predicate(G, cell.label, [in](const Element& g) { return in.count(g) > 0; });
    std::vector<Radius> radii;
    for (const auto& r : c.params.at("radii")) radii.push_back(parse_radius(*G, r));
    std::optional<std::vector<Element>> pool;
    if (c.params.contains("pool")) pool = parse_radius(*G, c.params.at("pool"));
    return check_left_small(P, radii, c.params.value("b", std::size_t{3}), W, pool);
  }
  if (c.kind == "separation") {
    auto K = parse_radius(*G, c.params.at("K"));
    return check_separation(*G, K, G->parse(c.params.at("h").get<std::string>()), cell.elements);
  }
  if (c.kind == "scattered") {
    return check_scattered(A, c.params.value("depth", std::size_t{3}), W);
  }
  if (c.kind == "translate-miss") {
    auto H = parse_radius(*G, c.params.at("H"));
    Element target = G->parse(c.params.at("c").get<std::string>());
    ElementSet in(cell.elements.begin(), cell.elements.end());
    for (const auto& h : H) {
      Element y = G->multiply(G->inverse(h), target);
      if (!W.contains(y)) return Verdict::inconclusive("h^-1 c lies outside the window", {h});
      if (in.count(y)) return Verdict::fails({h}, "h^-1 c lies in the cell");
    }
    return Verdict::holds({target}, "c is outside HA");
  }
  if (c.kind == "cycle-reach") {
    return {c.status, {}, c.note};
  }
  throw Error(Errc::configuration, "unknown certificate kind '" + c.kind + "'");
}

std::vector<std::vector<Status>> reverify(const Partition& P) {
  std::vector<std::vector<Status>> out;
  for (const auto& cell : P.cells) {
    std::vector<Status> row;
    for (const auto& cert : cell.certificates) row.push_back(verify_certificate(cert, cell, P.window).status);
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace coarse
