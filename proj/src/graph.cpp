#include "coarse/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

#include "coarse/classify.hpp"

namespace coarse {

// ---- simple graphs ---------------------------------------------------------

SimpleGraph SimpleGraph::from_edges(std::size_t n,
                                    const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
  SimpleGraph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void SimpleGraph::add_edge(std::size_t u, std::size_t v) {
  if (u >= size() || v >= size()) throw Error(Errc::precondition, "edge endpoint out of range");
  if (u == v) throw Error(Errc::precondition, "loops are not allowed");
  if (has_edge(u, v)) throw Error(Errc::precondition, "duplicate edge");
  adj_[u].insert(std::lower_bound(adj_[u].begin(), adj_[u].end(), v), v);
  adj_[v].insert(std::lower_bound(adj_[v].begin(), adj_[v].end(), u), u);
}

bool SimpleGraph::has_edge(std::size_t u, std::size_t v) const {
  return std::binary_search(adj_[u].begin(), adj_[u].end(), v);
}

std::size_t SimpleGraph::edge_count() const noexcept {
  std::size_t n = 0;
  for (const auto& a : adj_) n += a.size();
  return n / 2;
}

SimpleGraph SimpleGraph::parse_edge_list(const std::string& text, std::vector<long long>* labels) {
  std::map<long long, std::size_t> id;
  std::vector<long long> order;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  auto intern = [&](long long x) {
    auto [it, fresh] = id.emplace(x, order.size());
    if (fresh) order.push_back(x);
    return it->second;
  };
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long u, v;
    if (!(ls >> u)) continue;
    if (!(ls >> v)) throw Error(Errc::parse, "edge list line " + std::to_string(lineno) + " needs two vertices");
    auto a = intern(u);
    edges.emplace_back(a, intern(v));
  }
  SimpleGraph g(order.size());
  for (auto [u, v] : edges) g.add_edge(u, v);
  if (labels) *labels = order;
  return g;
}

namespace {

std::vector<std::size_t> bfs_from(const SimpleGraph& g, std::size_t s, std::size_t limit = kUnreachable) {
  std::vector<std::size_t> d(g.size(), kUnreachable);
  std::deque<std::size_t> q{s};
  d[s] = 0;
  while (!q.empty()) {
    auto u = q.front();
    q.pop_front();
    if (d[u] >= limit) continue;
    for (auto v : g.neighbours(u)) {
      if (d[v] == kUnreachable) {
        d[v] = d[u] + 1;
        q.push_back(v);
      }
    }
  }
  return d;
}

// Distance from u to v if at most `limit`, else kUnreachable.
std::size_t bounded_distance(const SimpleGraph& g, std::size_t u, std::size_t v, std::size_t limit) {
  if (u == v) return 0;
  std::unordered_map<std::size_t, std::size_t> d{{u, 0}};
  std::deque<std::size_t> q{u};
  while (!q.empty()) {
    auto x = q.front();
    q.pop_front();
    if (d[x] >= limit) continue;
    for (auto y : g.neighbours(x)) {
      if (d.emplace(y, d[x] + 1).second) {
        if (y == v) return d[y];
        q.push_back(y);
      }
    }
  }
  return kUnreachable;
}

}  // namespace

DistanceTable path_metric(const SimpleGraph& g) {
  DistanceTable d;
  d.reserve(g.size());
  for (std::size_t s = 0; s < g.size(); ++s) d.push_back(bfs_from(g, s));
  return d;
}

std::vector<std::vector<std::size_t>> components(const SimpleGraph& g) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<char> seen(g.size(), 0);
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    std::vector<std::size_t> comp;
    std::deque<std::size_t> q{s};
    seen[s] = 1;
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      comp.push_back(u);
      for (auto v : g.neighbours(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          q.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_grasshopper_cycle(const DistanceTable& d, const std::vector<std::size_t>& order,
                          std::size_t jump) {
  std::vector<char> seen(d.size(), 0);
  for (auto v : order) {
    if (v >= d.size() || seen[v]) return false;
    seen[v] = 1;
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    auto u = order[i], v = order[(i + 1) % order.size()];
    if (d[u][v] > jump) return false;
  }
  return true;
}

GrasshopperResult grasshopper_cycle(const SimpleGraph& g) {
  GrasshopperResult result;
  auto comps = components(g);
  result.disconnected = comps.size() > 1;
  std::vector<std::size_t> depth(g.size(), kUnreachable), parent(g.size(), kUnreachable);
  for (const auto& comp : comps) {
    const std::size_t root = comp.front();
    // Breadth-first spanning tree; children kept in increasing order.
    std::unordered_map<std::size_t, std::vector<std::size_t>> children;
    std::deque<std::size_t> q{root};
    depth[root] = 0;
    while (!q.empty()) {
      auto u = q.front();
      q.pop_front();
      for (auto v : g.neighbours(u)) {
        if (depth[v] == kUnreachable) {
          depth[v] = depth[u] + 1;
          parent[v] = u;
          children[u].push_back(v);
          q.push_back(v);
        }
      }
    }
    std::vector<std::size_t> order;
    order.reserve(comp.size());
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    order.push_back(root);
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      const auto& ch = children[v];
      if (next < ch.size()) {
        auto c = ch[next++];
        if (depth[c] % 2 == 0) order.push_back(c);
        stack.emplace_back(c, 0);
      } else {
        if (depth[v] % 2 == 1) order.push_back(v);
        stack.pop_back();
      }
    }
    for (std::size_t i = 0; i < order.size() && order.size() > 1; ++i) {
      auto u = order[i], v = order[(i + 1) % order.size()];
      if (bounded_distance(g, u, v, 3) == kUnreachable) {
        throw Error(Errc::infeasible, "internal error: grasshopper jump longer than 3");
      }
    }
    result.cycles.push_back(std::move(order));
  }
  return result;
}

// ---- joint transversals ------------------------------------------------------

std::vector<std::size_t> joint_transversal(const std::vector<std::vector<std::size_t>>& P,
                                           const std::vector<std::vector<std::size_t>>& Q) {
  std::unordered_map<std::size_t, std::size_t> qcell;
  std::size_t n = P.empty() ? 0 : P.front().size();
  std::size_t items = 0;
  for (const auto& c : P) {
    if (c.size() != n) throw Error(Errc::precondition, "cells of the first partition differ in size");
    items += c.size();
  }
  for (std::size_t j = 0; j < Q.size(); ++j) {
    if (Q[j].size() != n) throw Error(Errc::precondition, "cells of the two partitions differ in size");
    for (auto x : Q[j]) {
      if (!qcell.emplace(x, j).second) throw Error(Errc::precondition, "second partition repeats an item");
    }
  }
  if (qcell.size() != items) throw Error(Errc::precondition, "partitions cover different sets");
  {
    std::unordered_map<std::size_t, char> seen;
    for (const auto& c : P)
      for (auto x : c) {
        if (!qcell.count(x)) throw Error(Errc::precondition, "partitions cover different sets");
        if (!seen.emplace(x, 1).second) throw Error(Errc::precondition, "first partition repeats an item");
      }
  }
  if (n == 0) return {};
  const std::size_t k = P.size();
  // Smallest common item of each intersecting (P_i, Q_j).
  std::vector<std::map<std::size_t, std::size_t>> common(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (auto x : P[i]) {
      auto j = qcell[x];
      auto it = common[i].find(j);
      if (it == common[i].end() || x < it->second) common[i][j] = x;
    }
  }
  std::vector<std::size_t> match_p(k, kUnreachable), match_q(k, kUnreachable);
  for (std::size_t i = 0; i < k; ++i) {
    for (const auto& [j, x] : common[i]) {
      if (match_q[j] == kUnreachable) {
        match_p[i] = j;
        match_q[j] = i;
        break;
      }
    }
  }
  std::vector<char> visited;
  std::function<bool(std::size_t)> augment = [&](std::size_t i) {
    for (const auto& [j, x] : common[i]) {
      if (visited[j]) continue;
      visited[j] = 1;
      if (match_q[j] == kUnreachable || augment(match_q[j])) {
        match_p[i] = j;
        match_q[j] = i;
        return true;
      }
    }
    return false;
  };
  for (std::size_t i = 0; i < k; ++i) {
    if (match_p[i] != kUnreachable) continue;
    visited.assign(k, 0);
    if (!augment(i)) throw Error(Errc::infeasible, "no perfect matching between the partitions");
  }
  std::vector<std::size_t> T;
  for (std::size_t i = 0; i < k; ++i) T.push_back(common[i][match_p[i]]);
  std::sort(T.begin(), T.end());
  return T;
}

bool is_joint_transversal(const std::vector<std::vector<std::size_t>>& P,
                          const std::vector<std::vector<std::size_t>>& Q,
                          const std::vector<std::size_t>& T) {
  auto once = [&T](const std::vector<std::vector<std::size_t>>& R) {
    std::size_t covered = 0;
    for (const auto& c : R) {
      std::size_t hits = 0;
      for (auto x : c) hits += static_cast<std::size_t>(std::count(T.begin(), T.end(), x));
      if (hits != 1) return false;
      covered += hits;
    }
    return covered == T.size();
  };
  return once(P) && once(Q);
}

// ---- three sets ----------------------------------------------------------------

std::vector<std::vector<std::size_t>> functional_cycles(const std::vector<std::size_t>& f) {
  const std::size_t n = f.size();
  for (auto y : f) {
    if (y >= n) throw Error(Errc::precondition, "map is not total on its domain");
  }
  std::vector<int> state(n, 0);  // 0 new, 1 on current path, 2 done
  std::vector<std::vector<std::size_t>> cycles;
  for (std::size_t s = 0; s < n; ++s) {
    if (state[s]) continue;
    std::vector<std::size_t> path;
    std::size_t x = s;
    while (state[x] == 0) {
      state[x] = 1;
      path.push_back(x);
      x = f[x];
    }
    if (state[x] == 1) {
      auto it = std::find(path.begin(), path.end(), x);
      std::vector<std::size_t> cyc(it, path.end());
      if (cyc.size() > 1) {
        std::rotate(cyc.begin(), std::min_element(cyc.begin(), cyc.end()), cyc.end());
        cycles.push_back(std::move(cyc));
      }
    }
    for (auto v : path) state[v] = 2;
  }
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

ThreeSets three_sets_partition(const std::vector<std::size_t>& f) {
  const std::size_t n = f.size();
  auto cycles = functional_cycles(f);
  ThreeSets t;
  t.cls.assign(n, -1);
  std::deque<std::size_t> q;
  for (std::size_t x = 0; x < n; ++x) {
    if (f[x] == x) {
      t.cls[x] = 0;
      q.push_back(x);
    }
  }
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) t.cls[cyc[i]] = i % 2 == 0 ? 1 : 2;
    if (cyc.size() % 2 == 1) t.cls[cyc.back()] = 3;
    for (auto v : cyc) q.push_back(v);
  }
  // Trees hanging off the cycles, coloured away from their image.
  std::vector<std::vector<std::size_t>> pre(n);
  for (std::size_t x = 0; x < n; ++x) pre[f[x]].push_back(x);
  while (!q.empty()) {
    auto y = q.front();
    q.pop_front();
    for (auto x : pre[y]) {
      if (t.cls[x] != -1) continue;
      t.cls[x] = t.cls[y] == 1 ? 2 : 1;
      q.push_back(x);
    }
  }
  t.classes.assign(4, {});
  for (std::size_t x = 0; x < n; ++x) t.classes[static_cast<std::size_t>(t.cls[x])].push_back(x);
  return t;
}

ThreeSets three_sets_partition_3(const std::vector<std::size_t>& f) {
  for (const auto& cyc : functional_cycles(f)) {
    if (cyc.size() % 2 == 1) {
      std::string s;
      for (auto v : cyc) s += (s.empty() ? "" : " -> ") + std::to_string(v);
      throw Error(Errc::precondition, "odd cycle of length " + std::to_string(cyc.size()) + ": " + s);
    }
  }
  return three_sets_partition(f);
}

bool displaces(const std::vector<std::size_t>& f, const ThreeSets& t) {
  for (std::size_t x = 0; x < f.size(); ++x) {
    if ((t.cls[x] == 0) != (f[x] == x)) return false;
    if (t.cls[x] != 0 && t.cls[f[x]] == t.cls[x]) return false;
  }
  return true;
}

std::vector<std::size_t> parse_functional_graph(const std::string& text, std::vector<long long>* labels) {
  std::map<long long, std::size_t> id;
  std::vector<long long> order;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  auto intern = [&](long long x) {
    auto [it, fresh] = id.emplace(x, order.size());
    if (fresh) order.push_back(x);
    return it->second;
  };
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    long long x, y;
    if (!(ls >> x)) continue;
    if (!(ls >> y)) throw Error(Errc::parse, "map line " + std::to_string(lineno) + " needs 'x f(x)'");
    auto a = intern(x);
    pairs.emplace_back(a, intern(y));
  }
  std::vector<std::size_t> f(order.size(), kUnreachable);
  for (auto [x, y] : pairs) {
    if (f[x] != kUnreachable) {
      throw Error(Errc::parse, "point " + std::to_string(order[x]) + " has two images");
    }
    f[x] = y;
  }
  for (std::size_t x = 0; x < f.size(); ++x) {
    if (f[x] == kUnreachable) {
      throw Error(Errc::parse, "point " + std::to_string(order[x]) + " has no image");
    }
  }
  if (labels) *labels = order;
  return f;
}

// ---- partitions of groups --------------------------------------------------

Partition non_thick_partition(const GroupView& G, const Element& g, const Window& W) {
  G->require(g);
  if (G->is_identity(g)) throw Error(Errc::precondition, "the displacing element must not be e");
  const std::size_t n = W.size();
  std::vector<std::size_t> f(n + 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    auto p = W.position(G->multiply(g, W.elements()[i]));
    f[i] = p ? *p : n;
  }
  auto t = three_sets_partition(f);
  Partition P;
  P.method = "three-sets";
  P.window = W;
  P.info = {{"g", G->format(g)}};
  for (int c = 1; c <= 3; ++c) {
    Cell cell;
    cell.label = "X" + std::to_string(c);
    for (auto i : t.classes[static_cast<std::size_t>(c)]) {
      if (i < n) cell.elements.push_back(W.elements()[i]);
    }
    if (cell.elements.empty()) continue;
    Certificate cert;
    cert.kind = "displacement";
    cert.params = {{"g", G->format(g)}};
    cert.status = verify_certificate(cert, cell, W).status;
    cert.note = "{e,g}x is not inside the cell for any x in it";
    cell.certificates.push_back(std::move(cert));
    P.cells.push_back(std::move(cell));
  }
  return P;
}

std::vector<std::vector<Element>> subgroup_chain(const Group& G, const Window& W) {
  std::vector<std::vector<Element>> chain{{G.identity()}};
  ElementSet H{G.identity()};
  std::vector<Element> gens;
  for (const auto& w : W.elements()) {
    if (H.count(w)) continue;
    gens.push_back(w);
    std::vector<Element> level = chain.back();
    std::deque<Element> q(level.begin(), level.end());
    while (!q.empty()) {
      Element x = q.front();
      q.pop_front();
      for (const auto& s : gens) {
        Element y = G.multiply(x, s);
        if (H.count(y)) continue;
        if (!W.contains(y)) {
          throw Error(Errc::precondition, "window is not closed under multiplication");
        }
        H.insert(y);
        level.push_back(y);
        q.push_back(y);
      }
    }
    chain.push_back(std::move(level));
  }
  return chain;
}

namespace {

Partition cayley_large_partition(const GroupView& G, std::size_t m, const Window& W,
                                 RayColouring colouring) {
  const auto& S = G->generators();
  if (S.empty()) {
    throw Error(Errc::descriptor_mismatch, G->name() + " has no finite generating set for a Cayley graph");
  }
  const std::size_t n = W.size();
  SimpleGraph cay(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& s : S) {
      auto p = W.position(G->multiply(s, W.elements()[i]));
      if (p && *p != i && !cay.has_edge(i, *p)) cay.add_edge(i, *p);
    }
  }
  auto gh = grasshopper_cycle(cay);
  if (gh.disconnected) {
    throw Error(Errc::precondition, "window is not connected in the Cayley graph");
  }
  const auto& cycle = gh.cycles.front();
  std::vector<std::string> labels(n);
  std::vector<std::size_t> colour_of(n);
  std::size_t colours = m;
  for (std::size_t pos = 0; pos < cycle.size(); ++pos) {
    std::size_t c = pos % m;
    if (colouring == RayColouring::dyadic) {
      c = 0;
      for (std::size_t k = pos + 1; k % 2 == 0; k /= 2) ++c;
    }
    colour_of[cycle[pos]] = c;
    labels[cycle[pos]] = std::to_string(c);
  }
  if (colouring == RayColouring::dyadic) {
    colours = 0;
    for (auto c : colour_of) colours = std::max(colours, c + 1);
  }
  std::vector<std::string> order;
  for (std::size_t c = 0; c < colours; ++c) order.push_back(std::to_string(c));
  Partition P;
  P.method = "grasshopper-large";
  P.window = W;
  P.cells = cells_from_labels(W, labels, order);
  P.info = {{"case", "cayley"}, {"colouring", colouring == RayColouring::cyclic ? "cyclic" : "dyadic"}};

  for (std::size_t c = 0; c < colours; ++c) {
    Cell& cell = P.cells[c];
    // Steps along the cycle from any position to the nearest one of this colour.
    std::vector<std::size_t> positions;
    for (std::size_t pos = 0; pos < cycle.size(); ++pos) {
      if (colour_of[cycle[pos]] == c) positions.push_back(pos);
    }
    std::size_t reach = 0;
    for (std::size_t pos = 0, k = 0; pos < cycle.size(); ++pos) {
      while (k + 1 < positions.size() && positions[k + 1] <= pos) ++k;
      std::size_t back = positions[k] <= pos ? pos - positions[k] : kUnreachable;
      std::size_t fwd = kUnreachable;
      auto it = std::lower_bound(positions.begin(), positions.end(), pos);
      if (it != positions.end()) fwd = *it - pos;
      reach = std::max(reach, std::min(back, fwd));
    }
    std::size_t bound = colouring == RayColouring::cyclic ? m - 1 : (std::size_t{2} << c) - 1;
    Certificate gapc;
    gapc.kind = "cycle-reach";
    gapc.status = reach <= bound ? Status::holds : Status::fails;
    gapc.note = "every position is within " + std::to_string(reach) + " steps of this colour along the cycle";
    gapc.params = {{"reach", reach}, {"bound", bound}};
    cell.certificates.push_back(gapc);

    if (colouring == RayColouring::cyclic) {
      std::size_t r = m == 1 ? 0 : 3 * m;
      Certificate cert;
      cert.kind = "left-large";
      try {
        auto F = enumerate_ball(G, r).elements();
        cert.params = {{"F", radius_json(*G, F)}, {"ball_radius", r}};
        auto v = check_left_large(SubsetView::finite(cell.label, cell.elements), F, W);
        cert.status = v.status;
        cert.note = v.note;
      } catch (const BudgetError& e) {
        cert.status = Status::inconclusive;
        cert.note = e.what();
        cert.params = {{"F", nlohmann::json::array()}, {"ball_radius", r}};
      }
      cell.certificates.push_back(std::move(cert));
    }
  }
  return P;
}

Partition chain_large_partition(const GroupView& G, std::size_t m, const Window& W) {
  auto chain = subgroup_chain(*G, W);
  std::size_t level = 0;
  while (level < chain.size() && chain[level].size() < m) ++level;
  if (level == chain.size()) {
    throw Error(Errc::precondition, "window has fewer than m elements; cannot form m cells");
  }
  const auto& H = chain[level];
  const std::size_t k = H.size();
  const std::size_t n = W.size();
  std::vector<std::vector<std::size_t>> left, right;
  {
    std::vector<char> seenL(n, 0), seenR(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      const Element& x = W.elements()[i];
      if (!seenL[i]) {
        std::vector<std::size_t> c;
        for (const auto& h : H) {
          auto p = *W.position(G->multiply(x, h));
          seenL[p] = 1;
          c.push_back(p);
        }
        left.push_back(std::move(c));
      }
      if (!seenR[i]) {
        std::vector<std::size_t> c;
        for (const auto& h : H) {
          auto p = *W.position(G->multiply(h, x));
          seenR[p] = 1;
          c.push_back(p);
        }
        right.push_back(std::move(c));
      }
    }
  }
  std::vector<std::string> labels(n);
  for (std::size_t j = 0; j < k; ++j) {
    auto T = joint_transversal(left, right);
    std::vector<char> inT(n, 0);
    for (auto t : T) {
      inT[t] = 1;
      labels[t] = std::to_string(j % m);
    }
    for (auto* part : {&left, &right}) {
      for (auto& c : *part) c.erase(std::remove_if(c.begin(), c.end(), [&](std::size_t x) { return inT[x]; }), c.end());
    }
  }
  std::vector<std::string> order;
  for (std::size_t c = 0; c < m; ++c) order.push_back(std::to_string(c));
  Partition P;
  P.method = "grasshopper-large";
  P.window = W;
  P.cells = cells_from_labels(W, labels, order);
  P.info = {{"case", "chain"}, {"level", level}, {"subgroup_order", k}};
  for (auto& cell : P.cells) {
    auto A = SubsetView::finite(cell.label, cell.elements);
    for (Side side : {Side::left, Side::right}) {
      auto v = check_large(A, H, W, side);
      cell.certificates.push_back(make_certificate(side == Side::left ? "left-large" : "right-large", v,
                                                   {{"F", radius_json(*G, H)}}));
    }
  }
  return P;
}

}  // namespace

Partition large_partition(const GroupView& G, std::size_t m, const Window& W, LargePartitionOptions opts) {
  if (m < 1) throw Error(Errc::precondition, "need at least one cell");
  LargeCase which = opts.which;
  if (which == LargeCase::automatic) {
    bool chain_ok = G->locally_finite() &&
                    (W.kind() == Window::Kind::whole || W.kind() == Window::Kind::first_n);
    if (chain_ok) {
      which = LargeCase::chain;
    } else if (!G->generators().empty()) {
      which = LargeCase::cayley;
    } else {
      throw Error(Errc::descriptor_mismatch,
                  "neither a Cayley ball nor a finite-subgroup chain is available for " + G->name());
    }
  }
  if (which == LargeCase::chain) {
    if (!G->locally_finite()) throw Error(Errc::descriptor_mismatch, G->name() + " is not locally finite");
    return chain_large_partition(G, m, W);
  }
  return cayley_large_partition(G, m, W, opts.colouring);
}

}  // namespace coarse
