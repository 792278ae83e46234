#include "coarse/constructions.hpp"

#include <algorithm>
#include <functional>

#include "coarse/classify.hpp"

namespace coarse {

LetterProjection lambda_rho(const Group& G, const Element& g) {
  const auto& F = as_free(G);
  G.require(g);
  if (G.is_identity(g)) throw Error(Errc::precondition, "first and last letters of e are undefined");
  auto ls = F.letters(g);
  return {ls.front().index, ls.back().index};
}

std::optional<std::size_t> free_3large_cell(const Group& G, const Element& g) {
  if (G.is_identity(g)) return std::nullopt;
  return lambda_rho(G, g).first;
}

namespace {

bool in_X(std::size_t letter) { return letter % 2 == 0; }
bool in_Y(std::size_t letter) { return letter % 2 == 1; }

void require_pairs(const Group& G) {
  if (as_free(G).rank() % 2 != 0) {
    throw Error(Errc::precondition, "the alphabet must split into pairs; rank is odd");
  }
}

Radius pair_radius(const Group& G, std::size_t alpha, bool inverted) {
  const auto& F = as_free(G);
  return {G.identity(), F.letter(2 * alpha, inverted), F.letter(2 * alpha + 1, inverted)};
}

// Verification window for radius-one certificates: the same ball with a
// margin of one, so translates of the inner part stay inside.
nlohmann::json margin_window(const GroupView& G, const Window& W) {
  if (W.kind() == Window::Kind::ball && W.margin() == 0 && W.radius() > 0) {
    return enumerate_ball(G, W.radius(), 1).to_json();
  }
  return W.to_json();
}

Certificate checked(Certificate cert, const Cell& cell, const Window& W) {
  auto v = verify_certificate(cert, cell, W);
  cert.status = v.status;
  cert.note = v.note;
  return cert;
}

}  // namespace

bool in_free_L(const Group& G, const Element& g, std::size_t alpha) {
  if (G.is_identity(g)) return false;
  auto [l, r] = lambda_rho(G, g);
  return (l == 2 * alpha && in_X(r)) || (l == 2 * alpha + 1 && in_Y(r));
}

bool in_free_R(const Group& G, const Element& g, std::size_t alpha) {
  if (G.is_identity(g)) return false;
  auto [l, r] = lambda_rho(G, g);
  return (r == 2 * alpha && (in_Y(l) || l == 2 * alpha)) || (r == 2 * alpha + 1 && (in_X(l) || l == 2 * alpha + 1));
}

std::optional<std::size_t> free_4large_cell(const Group& G, const Element& g) {
  require_pairs(G);
  if (G.is_identity(g)) return std::nullopt;
  auto [l, r] = lambda_rho(G, g);
  if (in_free_L(G, g, l / 2)) return l / 2;
  if (in_free_R(G, g, r / 2)) return r / 2;
  return std::nullopt;
}

Verdict check_free_4large(const Group& G, std::size_t alpha, const Window& W) {
  require_pairs(G);
  auto T = pair_radius(G, alpha, false);
  for (const auto& g : W.inner()) {
    bool left = false, right = false;
    for (const auto& t : T) {
      left = left || in_free_L(G, G.multiply(t, g), alpha);
      right = right || in_free_R(G, G.multiply(g, t), alpha);
    }
    if (!left) return Verdict::fails({g}, "{e,x,y}g misses L");
    if (!right) return Verdict::fails({g}, "g{e,x,y} misses R");
  }
  return Verdict::holds(T, std::to_string(W.inner().size()) + " elements checked");
}

int free_non_large_bipartition(const Group& G, const Element& g, const std::vector<std::size_t>& A1) {
  if (G.is_identity(g)) return 2;
  auto r = lambda_rho(G, g).last;
  return std::find(A1.begin(), A1.end(), r) != A1.end() ? 1 : 2;
}

std::size_t separating_letter(const Group& G, const std::vector<Element>& H,
                              const std::vector<std::size_t>& A2) {
  const auto& F = as_free(G);
  std::vector<std::size_t> sorted = A2;
  std::sort(sorted.begin(), sorted.end());
  for (auto c : sorted) {
    bool used = false;
    for (const auto& h : H) {
      for (const auto& l : F.letters(h)) used = used || l.index == c;
    }
    if (!used) return c;
  }
  throw Error(Errc::no_witness, "every letter of the second part occurs in H; a finite alphabet is exhausted");
}

Partition free_3large_partition(const GroupView& G, const Window& W) {
  const auto& F = as_free(*G);
  std::vector<std::string> labels, order;
  for (std::size_t a = 0; a < F.rank(); ++a) order.push_back(FreeGroup::letter_name(a));
  order.push_back("e");
  for (const auto& g : W.elements()) {
    auto c = free_3large_cell(*G, g);
    labels.push_back(c ? FreeGroup::letter_name(*c) : "e");
  }
  Partition P;
  P.method = "free-3large";
  P.window = W;
  P.cells = cells_from_labels(W, labels, order);
  auto vw = margin_window(G, W);
  for (std::size_t a = 0; a < F.rank(); ++a) {
    Certificate cert;
    cert.kind = "left-large";
    cert.params = {{"F", radius_json(*G, {G->identity(), F.letter(a)})}, {"window", vw}};
    P.cells[a].certificates.push_back(checked(cert, P.cells[a], W));
  }
  return P;
}

Partition free_4large_partition(const GroupView& G, const Window& W) {
  require_pairs(*G);
  const std::size_t pairs = as_free(*G).rank() / 2;
  std::vector<std::string> labels, order;
  for (std::size_t a = 0; a < pairs; ++a) order.push_back("P" + std::to_string(a));
  order.push_back("e");
  for (const auto& g : W.elements()) {
    auto c = free_4large_cell(*G, g);
    labels.push_back(c ? "P" + std::to_string(*c) : "e");
  }
  Partition P;
  P.method = "free-4large";
  P.window = W;
  P.cells = cells_from_labels(W, labels, order);
  auto vw = margin_window(G, W);
  for (std::size_t a = 0; a < pairs; ++a) {
    auto T = radius_json(*G, pair_radius(*G, a, true));
    for (const char* kind : {"left-large", "right-large"}) {
      Certificate cert;
      cert.kind = kind;
      cert.params = {{"F", T}, {"window", vw}};
      P.cells[a].certificates.push_back(checked(cert, P.cells[a], W));
    }
  }
  return P;
}

Partition free_bipartition(const GroupView& G, const std::vector<std::size_t>& A1, const Window& W) {
  const auto& F = as_free(*G);
  std::vector<std::size_t> A2;
  for (std::size_t a = 0; a < F.rank(); ++a)
    if (std::find(A1.begin(), A1.end(), a) == A1.end()) A2.push_back(a);
  std::vector<std::string> labels;
  for (const auto& g : W.elements()) labels.push_back("B" + std::to_string(free_non_large_bipartition(*G, g, A1)));
  Partition P;
  P.method = "free-bipartition";
  P.window = W;
  P.cells = cells_from_labels(W, labels, {"B1", "B2"});
  nlohmann::json split = nlohmann::json::array();
  for (auto a : A1) split.push_back(FreeGroup::letter_name(a));
  P.info = {{"A1", split}};
  for (int i = 0; i < 2; ++i) {
    const auto& own = i == 0 ? A1 : A2;
    const auto& other = i == 0 ? A2 : A1;
    // H: words of length <= 2 over the cell's own letters.
    std::vector<Element> H{G->identity()};
    std::vector<Element> letters;
    for (auto a : own) {
      letters.push_back(F.letter(a));
      letters.push_back(F.letter(a, true));
    }
    for (const auto& x : letters) H.push_back(x);
    for (const auto& x : letters)
      for (const auto& y : letters) {
        auto w = G->multiply(x, y);
        if (G->word_length(w) == 2) H.push_back(w);
      }
    Certificate cert;
    cert.kind = "translate-miss";
    try {
      auto c = separating_letter(*G, H, other);
      cert.params = {{"H", radius_json(*G, H)}, {"c", G->format(F.letter(c))}};
      cert = checked(cert, P.cells[static_cast<std::size_t>(i)], W);
    } catch (const Error& e) {
      if (e.code() != Errc::no_witness) throw;
      cert.status = Status::inconclusive;
      cert.note = e.what();
    }
    P.cells[static_cast<std::size_t>(i)].certificates.push_back(std::move(cert));
  }
  return P;
}

Partition thick_partition(const GroupView& G, std::size_t m, const Window& W, ThickOptions opts) {
  if (m < 1) throw Error(Errc::precondition, "need at least one cell");
  const Group& g = *G;
  const auto& elems = W.elements();
  std::vector<int> owner(W.size(), -1);
  std::vector<std::size_t> best_radius(m, 0);
  std::vector<bool> has_block(m, false);
  std::size_t cursor = 0, blocks = 0;
  for (std::size_t alpha = 0; cursor < elems.size(); ++alpha) {
    const std::size_t r = (alpha + m - 1) / m;
    Radius H;
    try {
      H = enumerate_ball(G, r).elements();
      // Longest elements first: a clash with an earlier block shows up on the rim.
      std::reverse(H.begin(), H.end());
    } catch (const BudgetError&) {
      break;
    }
    bool placed = false;
    // Rejections are permanent: H only grows and blocks only accumulate.
    for (; cursor < elems.size() && !placed; ++cursor) {
      if (owner[cursor] != -1) continue;
      const Element& x = elems[cursor];
      std::vector<std::size_t> block;
      bool ok = true;
      for (const auto& h1 : H) {
        Element hx = g.multiply(h1, x);
        for (const auto& h2 : H) {
          auto p = W.position(g.multiply(hx, h2));
          if (!p || owner[*p] != -1) {
            ok = false;
            break;
          }
          block.push_back(*p);
        }
        if (!ok) break;
      }
      if (!ok) continue;
      for (auto p : block) owner[p] = static_cast<int>(alpha % m);
      best_radius[alpha % m] = std::max(best_radius[alpha % m], r);
      has_block[alpha % m] = true;
      placed = true;
      ++blocks;
    }
    if (!placed) break;
  }
  std::vector<std::string> labels, order;
  for (std::size_t c = 0; c < m; ++c) order.push_back(std::to_string(c));
  for (auto o : owner) labels.push_back(std::to_string(o < 0 ? 0 : o));
  Partition P;
  P.method = "thick";
  P.window = W;
  P.cells = cells_from_labels(W, labels, order);
  P.info = {{"blocks", blocks}, {"chain", "ball(ceil(alpha/m))"}};
  std::size_t common = *std::min_element(best_radius.begin(), best_radius.end());
  std::size_t want = opts.test_radius ? opts.test_radius : common;
  for (std::size_t c = 0; c < m; ++c) {
    Certificate cert;
    cert.kind = "two-sided-thick";
    if (m == 1) want = std::max<std::size_t>(want, 1);
    std::vector<Radius> radii;
    nlohmann::json jr = nlohmann::json::array();
    for (std::size_t k = 1; k <= want; ++k) {
      radii.push_back(enumerate_ball(G, k).elements());
      jr.push_back(radius_json(g, radii.back()));
    }
    cert.params = {{"radii", jr}, {"block_radius", best_radius[c]}};
    if (want == 0 || (m > 1 && best_radius[c] < want)) {
      cert.status = Status::inconclusive;
      cert.note = "window too small: largest block radius for this cell is " + std::to_string(best_radius[c]);
    } else {
      cert = checked(cert, P.cells[c], W);
    }
    P.cells[c].certificates.push_back(std::move(cert));
  }
  return P;
}

std::vector<Element> p_small_witness(const SubsetView& A, std::size_t n, PSmallMode mode, const Window& W,
                                     std::optional<std::size_t> threshold) {
  const Group& G = W.group();
  const std::size_t limit = mode == PSmallMode::disjoint ? 0 : (threshold ? *threshold : default_threshold(W));
  std::vector<Element> chosen;
  std::vector<ElementSet> translates;
  for (const auto& g : W.elements()) {
    if (chosen.size() == n) break;
    ElementSet gA;
    Element gi = G.inverse(g);
    for (const auto& y : W.elements())
      if (A.contains(G.multiply(gi, y))) gA.insert(y);
    if (gA.empty()) continue;
    bool ok = true;
    for (const auto& other : translates) {
      std::size_t common = 0;
      for (const auto& y : gA) common += other.count(y);
      if (common > limit) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    chosen.push_back(g);
    translates.push_back(std::move(gA));
  }
  return chosen;
}

std::optional<std::vector<int>> greedy_colouring(const std::vector<std::vector<std::size_t>>& adj, std::size_t m) {
  std::vector<int> colour(adj.size(), -1);
  for (std::size_t v = 0; v < adj.size(); ++v) {
    std::vector<bool> used(m, false);
    for (auto u : adj[v])
      if (colour[u] >= 0) used[static_cast<std::size_t>(colour[u])] = true;
    auto it = std::find(used.begin(), used.end(), false);
    if (it == used.end()) return std::nullopt;
    colour[v] = static_cast<int>(it - used.begin());
  }
  return colour;
}

std::optional<std::vector<int>> exact_colouring(const std::vector<std::vector<std::size_t>>& adj, std::size_t m) {
  std::vector<int> colour(adj.size(), -1);
  std::function<bool(std::size_t)> place = [&](std::size_t v) {
    if (v == adj.size()) return true;
    for (std::size_t c = 0; c < m; ++c) {
      bool ok = true;
      for (auto u : adj[v]) ok = ok && colour[u] != static_cast<int>(c);
      if (!ok) continue;
      colour[v] = static_cast<int>(c);
      if (place(v + 1)) return true;
      colour[v] = -1;
    }
    return false;
  };
  if (place(0)) return colour;
  return std::nullopt;
}

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

std::vector<std::vector<std::size_t>> induced(const std::vector<std::vector<std::size_t>>& adj,
                                              const std::vector<std::size_t>& keep) {
  std::vector<std::size_t> pos(adj.size(), kNone);
  for (std::size_t i = 0; i < keep.size(); ++i) pos[keep[i]] = i;
  std::vector<std::vector<std::size_t>> out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (auto u : adj[keep[i]])
      if (pos[u] != kNone) out[i].push_back(pos[u]);
  return out;
}

}  // namespace

Partition m_thin_partition(const SubsetView& A, std::size_t m, const std::vector<Radius>& family,
                           const Window& W) {
  if (m < 1) throw Error(Errc::precondition, "need at least one colour");
  const Group& G = W.group();
  for (const auto& F : family) {
    auto rep = check_n_thin(A, F, W, m, std::vector<Element>{});
    if (rep.verdict.failed()) {
      throw Error(Errc::precondition, "set is not " + std::to_string(m) + "-thin on the window: " + rep.verdict.note);
    }
  }
  std::vector<Element> pts = A.in(W);
  ElementMap<std::size_t> where;
  for (std::size_t i = 0; i < pts.size(); ++i) where.emplace(pts[i], i);
  std::vector<std::vector<std::size_t>> adj(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (const auto& F : family)
      for (const auto& f : F) {
        auto it = where.find(G.multiply(f, pts[i]));
        if (it == where.end() || it->second == i) continue;
        auto j = it->second;
        if (std::find(adj[i].begin(), adj[i].end(), j) == adj[i].end()) {
          adj[i].push_back(j);
          adj[j].push_back(i);
        }
      }
  }
  bool exact = false;
  auto colour = greedy_colouring(adj, m);
  if (!colour) {
    if (pts.size() > kExactColouringCap) {
      throw Error(Errc::infeasible, "greedy colouring failed and the set is too large for exact search");
    }
    colour = exact_colouring(adj, m);
    exact = true;
    if (!colour) {
      // Shrink to a minimal set of points that still cannot be coloured.
      std::vector<std::size_t> core(pts.size());
      for (std::size_t i = 0; i < core.size(); ++i) core[i] = i;
      for (std::size_t k = core.size(); k-- > 0;) {
        auto trial = core;
        trial.erase(trial.begin() + static_cast<std::ptrdiff_t>(k));
        if (!exact_colouring(induced(adj, trial), m)) core = trial;
      }
      std::string names;
      for (auto i : core) names += (names.empty() ? "" : ", ") + G.format(pts[i]);
      throw Error(Errc::infeasible, "no " + std::to_string(m) + "-colouring; conflict core {" + names + "}");
    }
  }
  std::vector<std::string> labels(W.size());
  Partition P;
  P.method = "m-thin";
  P.window = W;
  P.info = {{"exact", exact}, {"points", pts.size()}};
  for (std::size_t c = 0; c < m; ++c) P.cells.push_back({std::to_string(c), {}, {}});
  for (std::size_t i = 0; i < pts.size(); ++i) P.cells[static_cast<std::size_t>((*colour)[i])].elements.push_back(pts[i]);
  for (auto& cell : P.cells) {
    for (const auto& F : family) {
      Certificate cert;
      cert.kind = "thin";
      cert.params = {{"F", radius_json(G, F)}, {"n", 1}, {"head", nlohmann::json::array()}};
      cell.certificates.push_back(checked(cert, cell, W));
    }
  }
  return P;
}

}  // namespace coarse
