#include "coarse/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "coarse/classify.hpp"
#include "coarse/constructions.hpp"
#include "coarse/density.hpp"
#include "coarse/filtration.hpp"
#include "coarse/graph.hpp"

namespace coarse {

namespace {

struct Outcome {
  Status status;
  std::string detail;
};

Outcome pass(std::string d) { return {Status::holds, std::move(d)}; }
Outcome fail(std::string d) { return {Status::fails, std::move(d)}; }
Outcome judge(bool ok, const std::string& d) { return {ok ? Status::holds : Status::fails, d}; }

// ---- 1, 2: free groups ------------------------------------------------------

Outcome free_largeness_identity(const AcceptanceConfig& cfg) {
  auto F = free_group(2);
  auto W = enumerate_ball(F, 8, 0, cfg.budget);
  std::size_t uncovered = 0, checked = 0;
  for (const auto& x : W.elements()) {
    if (F->word_length(x) > 7) continue;
    ++checked;
    for (std::size_t a = 0; a < 2; ++a) {
      const auto la = as_free(*F).letter(a);
      bool in = free_3large_cell(*F, x) == a || free_3large_cell(*F, F->multiply(F->inverse(la), x)) == a;
      uncovered += in ? 0 : 1;
    }
  }
  auto P = free_3large_partition(F, W);
  bool ok = uncovered == 0 && P.covers_window_disjointly() && P.fully_certified();
  return judge(ok, std::to_string(checked) + " elements of ball(7), " + std::to_string(uncovered) +
                       " uncovered; partition certificates " + (P.fully_certified() ? "hold" : "do not all hold"));
}

Outcome free_4large_conditions(const AcceptanceConfig& cfg) {
  auto F = free_group(4);
  auto W = enumerate_ball(F, 6, 1, cfg.budget);
  const auto& FG = as_free(*F);
  std::size_t passed = 0;
  for (const auto& g : W.inner()) {
    bool left = false, right = false;
    for (const auto& t : {F->identity(), FG.letter(0), FG.letter(1)}) {
      left = left || in_free_L(*F, F->multiply(t, g), 0);
      right = right || in_free_R(*F, F->multiply(g, t), 0);
    }
    passed += (left && right) ? 1 : 0;
  }
  bool ok = passed == W.inner().size() && check_free_4large(*F, 1, W).ok();
  return judge(ok, std::to_string(passed) + "/" + std::to_string(W.inner().size()) + " elements of ball(5) pass");
}

// ---- 3: grasshopper ---------------------------------------------------------

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

std::vector<std::vector<std::size_t>> floyd(std::size_t n, const Edges& e) {
  const std::size_t inf = n + 1;
  std::vector<std::vector<std::size_t>> d(n, std::vector<std::size_t>(n, inf));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (auto [u, v] : e) d[u][v] = d[v][u] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
  return d;
}

bool connected(const std::vector<std::vector<std::size_t>>& d) {
  for (const auto& row : d)
    for (auto x : row)
      if (x > d.size()) return false;
  return true;
}

bool certified_cycle(std::size_t n, const Edges& e) {
  auto d = floyd(n, e);
  auto res = grasshopper_cycle(SimpleGraph::from_edges(n, e));
  if (res.cycles.size() != 1) return false;
  const auto& c = res.cycles.front();
  if (c.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (auto v : c) {
    if (v >= n || seen[v]) return false;
    seen[v] = true;
  }
  for (std::size_t i = 0; i < n && n > 1; ++i)
    if (d[c[i]][c[(i + 1) % n]] > 3) return false;
  return true;
}

// Graphs on n vertices as bitmasks over the pairs (i<j), pair index by rows.
struct PairIndex {
  std::size_t n;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  explicit PairIndex(std::size_t n_) : n(n_) {
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::size_t index(std::size_t a, std::size_t b) const {
    if (a > b) std::swap(a, b);
    return b * (b - 1) / 2 + a;
  }
};

// Canonical form: least mask over all vertex relabellings.
std::set<std::uint64_t> iso_classes(const PairIndex& P, const std::vector<std::uint64_t>& graphs) {
  std::vector<std::size_t> perm(P.n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<std::size_t>> maps;
  do {
    std::vector<std::size_t> m;
    for (auto [i, j] : P.pairs) m.push_back(P.index(perm[i], perm[j]));
    maps.push_back(std::move(m));
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::set<std::uint64_t> out;
  for (auto g : graphs) {
    std::uint64_t best = ~0ULL;
    for (const auto& m : maps) {
      std::uint64_t h = 0;
      for (std::size_t k = 0; k < m.size(); ++k)
        if (g >> k & 1) h |= 1ULL << m[k];
      best = std::min(best, h);
    }
    out.insert(best);
  }
  return out;
}

Edges edges_of(const PairIndex& P, std::uint64_t g) {
  Edges e;
  for (std::size_t k = 0; k < P.pairs.size(); ++k)
    if (g >> k & 1) e.push_back(P.pairs[k]);
  return e;
}

Outcome grasshopper_suite(const AcceptanceConfig& cfg) {
  std::size_t tested = 0, failures = 0;
  // Isomorphism classes up to 7 vertices, grown one vertex at a time; on 8
  // vertices every class appears among the one-vertex extensions.
  std::vector<std::uint64_t> classes{0};
  // Numbers of graphs on 1..7 vertices up to isomorphism.
  const std::size_t known[] = {1, 2, 4, 11, 34, 156, 1044};
  bool counts_match = true;
  for (std::size_t n = 1; n <= 8; ++n) {
    PairIndex P(n);
    std::vector<std::uint64_t> grown;
    const std::size_t prev_pairs = (n - 1) * (n - 2) / 2;
    for (auto g : classes)
      for (std::uint64_t nb = 0; nb < (1ULL << (n - 1)); ++nb)
        grown.push_back(g | (nb << prev_pairs));
    if (n == 1) grown = {0};
    for (auto g : grown) {
      auto e = edges_of(P, g);
      if (!connected(floyd(n, e))) continue;
      ++tested;
      failures += certified_cycle(n, e) ? 0 : 1;
    }
    if (n < 8) {
      auto c = iso_classes(P, grown);
      classes.assign(c.begin(), c.end());
      counts_match = counts_match && classes.size() == known[n - 1];
    }
  }
  std::mt19937_64 rng(cfg.seed);
  for (int t = 0; t < 500; ++t) {
    std::size_t n = 2 + rng() % 39;
    Edges e;
    std::set<std::pair<std::size_t, std::size_t>> have;
    for (std::size_t v = 1; v < n; ++v) {
      std::size_t u = rng() % v;
      e.emplace_back(u, v);
      have.emplace(u, v);
    }
    std::size_t extra = rng() % (2 * n);
    for (std::size_t k = 0; k < extra; ++k) {
      std::size_t u = rng() % n, v = rng() % n;
      if (u == v) continue;
      if (u > v) std::swap(u, v);
      if (have.emplace(u, v).second) e.emplace_back(u, v);
    }
    ++tested;
    failures += certified_cycle(n, e) ? 0 : 1;
  }
  return judge(failures == 0 && counts_match,
               std::to_string(tested) + " connected graphs, " + std::to_string(failures) + " failures; class counts " +
                   (counts_match ? "match" : "do not match") + " the known values");
}

// ---- 4: joint transversals ----------------------------------------------------

void block_partitions(std::vector<std::size_t> rest, std::size_t k, std::vector<std::vector<std::size_t>>& cur,
                      std::vector<std::vector<std::vector<std::size_t>>>& out) {
  if (rest.empty()) {
    out.push_back(cur);
    return;
  }
  std::size_t head = rest.front();
  std::vector<std::size_t> tail(rest.begin() + 1, rest.end());
  // Choose k-1 companions for the least remaining item.
  std::vector<bool> pick(tail.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k - 1), true);
  do {
    std::vector<std::size_t> block{head}, left;
    for (std::size_t i = 0; i < tail.size(); ++i) (pick[i] ? block : left).push_back(tail[i]);
    cur.push_back(block);
    block_partitions(left, k, cur, out);
    cur.pop_back();
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

bool brute_transversal_exists(const std::vector<std::vector<std::size_t>>& P,
                              const std::vector<std::vector<std::size_t>>& Q, std::size_t n) {
  std::vector<std::size_t> qcell(n);
  for (std::size_t j = 0; j < Q.size(); ++j)
    for (auto x : Q[j]) qcell[x] = j;
  std::vector<bool> used(Q.size(), false);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == P.size()) return true;
    for (auto x : P[i]) {
      if (used[qcell[x]]) continue;
      used[qcell[x]] = true;
      if (go(i + 1)) return true;
      used[qcell[x]] = false;
    }
    return false;
  };
  return go(0);
}

bool valid_transversal(const std::vector<std::vector<std::size_t>>& P, const std::vector<std::vector<std::size_t>>& Q,
                       const std::vector<std::size_t>& T) {
  auto once = [&](const std::vector<std::vector<std::size_t>>& cells) {
    for (const auto& c : cells) {
      std::size_t hits = 0;
      for (auto x : c) hits += static_cast<std::size_t>(std::count(T.begin(), T.end(), x));
      if (hits != 1) return false;
    }
    return T.size() == cells.size();
  };
  return once(P) && once(Q);
}

Outcome transversal_suite(const AcceptanceConfig&) {
  std::size_t pairs = 0, bad = 0;
  for (std::size_t k : {2u, 3u}) {
    for (std::size_t n = k; n <= 9; n += k) {
      std::vector<std::size_t> items(n);
      std::iota(items.begin(), items.end(), 0);
      std::vector<std::vector<std::vector<std::size_t>>> parts;
      std::vector<std::vector<std::size_t>> cur;
      block_partitions(items, k, cur, parts);
      for (const auto& P : parts)
        for (const auto& Q : parts) {
          ++pairs;
          bool exists = brute_transversal_exists(P, Q, n);
          bool ok = false;
          try {
            ok = valid_transversal(P, Q, joint_transversal(P, Q));
          } catch (const Error&) {
            ok = false;
          }
          bad += (ok == exists && ok) ? 0 : 1;
        }
    }
  }
  return judge(bad == 0, std::to_string(pairs) + " partition pairs, " + std::to_string(bad) + " disagreements");
}

// ---- 5: three sets ------------------------------------------------------------

bool has_odd_cycle(const std::vector<std::size_t>& f) {
  const std::size_t n = f.size();
  for (std::size_t x = 0; x < n; ++x) {
    std::size_t y = f[x];
    for (std::size_t k = 1; k <= n; ++k, y = f[y]) {
      if (y == x) {
        if (k > 1 && k % 2 == 1) return true;
        break;
      }
    }
  }
  return false;
}

bool valid_classes(const std::vector<std::size_t>& f, const std::vector<int>& cls, int max_class) {
  for (std::size_t x = 0; x < f.size(); ++x) {
    if ((cls[x] == 0) != (f[x] == x)) return false;
    if (cls[x] < 0 || cls[x] > max_class) return false;
    if (cls[x] != 0 && cls[f[x]] == cls[x]) return false;
  }
  return true;
}

Outcome three_sets_suite(const AcceptanceConfig&) {
  std::size_t maps = 0, bad = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    std::vector<std::size_t> f(n, 0);
    for (;;) {
      ++maps;
      if (!valid_classes(f, three_sets_partition(f).cls, 3)) ++bad;
      bool odd = has_odd_cycle(f);
      try {
        auto t = three_sets_partition_3(f);
        if (odd || !valid_classes(f, t.cls, 2)) ++bad;
      } catch (const Error&) {
        if (!odd) ++bad;
      }
      std::size_t i = 0;
      while (i < n && ++f[i] == n) f[i++] = 0;
      if (i == n) break;
    }
  }
  return judge(bad == 0, std::to_string(maps) + " maps on at most 7 points, " + std::to_string(bad) + " failures");
}

// ---- 6: filtrations -------------------------------------------------------------

Outcome filtration_suite(const AcceptanceConfig& cfg) {
  std::string detail;
  bool ok = true;
  for (std::int64_t p : {2, 3}) {
    auto G = countable_direct_sum(p);
    auto F = Filtration::build(G);
    auto W = first_elements(G, 10000, cfg.budget);
    std::set<std::string> codes;
    std::size_t mismatches = 0;
    for (const auto& g : W.elements()) {
      auto c = canonical_form(g, F);
      if (recompose(*G, c) != g) ++mismatches;
      std::string key;
      for (std::size_t i = 0; i < c.factors.size(); ++i)
        key += G->format(c.factors[i]) + "@" + std::to_string(c.levels[i]) + ";";
      codes.insert(key);
    }
    bool unique = codes.size() == W.size();
    auto P = filtration_small_partition(F, W);
    auto radii = level_radii(F, 2, 5);
    std::size_t small = 0;
    for (std::size_t n = 0; n <= 4; ++n) {
      auto D = subsets::predicate(G, "D", [&F, n](const Element& g) { return canonical_form(g, F).s() == n; });
      small += check_left_small(D, radii, 3, W).ok() ? 1 : 0;
    }
    bool here = mismatches == 0 && unique && P.covers_window_disjointly() && small == 5;
    ok = ok && here;
    detail += "Z" + std::to_string(p) + ": " + std::to_string(mismatches) + " recomposition errors, " +
              (unique ? "unique" : "repeated") + " encodings, " + std::to_string(small) + "/5 D_n small; ";
  }
  return judge(ok, detail);
}

// ---- 7: thick partitions ----------------------------------------------------------

Outcome thick_suite(const AcceptanceConfig& cfg) {
  auto Z = integers();
  auto PZ = thick_partition(Z, 3, interval_window(Z, 0, 100000, 0, cfg.budget), {40});
  auto F = free_group(2);
  auto PF = thick_partition(F, 2, enumerate_ball(F, 9, 0, cfg.budget), {2});
  bool ok = PZ.covers_window_disjointly() && PZ.fully_certified() && PF.covers_window_disjointly() &&
            PF.fully_certified();
  return judge(ok, std::string("Z, 3 cells, radii <= 40: ") + (PZ.fully_certified() ? "certified" : "not certified") +
                       "; F2, 2 cells, radii <= 2: " + (PF.fully_certified() ? "certified" : "not certified"));
}

// ---- 8-10: densities ----------------------------------------------------------------

Outcome density_suite(const AcceptanceConfig&) {
  std::vector<std::pair<std::string, GroupView>> groups{
      {"Z2", cyclic(2)}, {"Z3", cyclic(3)}, {"Z4", cyclic(4)}, {"Z2^2", direct_sum({2, 2})},
      {"Z5", cyclic(5)}, {"Z6", cyclic(6)}, {"S3", symmetric_group_3()}};
  std::size_t subsets_checked = 0, pairs = 0, bad = 0;
  for (const auto& [name, G] : groups) {
    auto all = all_elements(*G);
    const std::size_t n = all.size();
    std::vector<Rational> sigma(1ULL << n);
    for (std::uint64_t m = 0; m < (1ULL << n); ++m) {
      std::vector<Element> A;
      for (std::size_t i = 0; i < n; ++i)
        if (m >> i & 1) A.push_back(all[i]);
      sigma[m] = sigma_exact_finite(*G, A).value;
      ++subsets_checked;
      if (sigma[m] != Rational(static_cast<std::int64_t>(A.size()), static_cast<std::int64_t>(n))) ++bad;
    }
    for (std::uint64_t a = 0; a < sigma.size(); ++a)
      for (std::uint64_t b = 0; b < sigma.size(); ++b) {
        ++pairs;
        if (sigma[a | b] > sigma[a] + sigma[b]) ++bad;
      }
  }
  return judge(bad == 0, std::to_string(subsets_checked) + " subsets, " + std::to_string(pairs) +
                             " pairs for subadditivity, " + std::to_string(bad) + " failures");
}

Outcome kourovka_suite(const AcceptanceConfig&) {
  std::size_t partitions = 0, misses = 0, max_f = 0;
  for (const auto& G : {cyclic(4), cyclic(6), symmetric_group_3()}) {
    auto all = all_elements(*G);
    const std::size_t n = all.size();
    for (std::uint64_t m = 1; m + 1 < (1ULL << n); ++m) {
      std::vector<std::vector<Element>> cells(2);
      for (std::size_t i = 0; i < n; ++i) cells[m >> i & 1].push_back(all[i]);
      ++partitions;
      auto k = kourovka_check(*G, cells, 2);
      auto s = statement4_check(*G, cells, 2);
      if (!k.found || !s.found) ++misses;
      max_f = std::max({max_f, k.F.size(), s.F.size()});
    }
  }
  return judge(misses == 0, std::to_string(partitions) + " two-cell partitions, " + std::to_string(misses) +
                                " exceptions, largest F used " + std::to_string(max_f));
}

Outcome cov_pack_suite(const AcceptanceConfig& cfg) {
  auto Z6 = cyclic(6);
  std::vector<Element> A{Z6->parse("0"), Z6->parse("1")};
  auto cov = cov_exact(*Z6, A).count.value_or(0);
  auto pack = pack_lower(subsets::explicit_set(Z6, A), whole_group(Z6, cfg.budget));
  bool ok = cov == 3 && pack.count == 3 && pack.exact;
  std::string detail = "cov(Z6,{0,1}) = " + std::to_string(cov) + ", pack = " + std::to_string(pack.count);
  auto Z12 = cyclic(12);
  std::size_t wrong = 0;
  for (std::int64_t d : {1, 2, 3, 4, 6, 12}) {
    std::vector<Element> H;
    for (std::int64_t x = 0; x < 12; x += d) H.push_back(Z12->parse(std::to_string(x)));
    if (cov_exact(*Z12, H).count.value_or(0) != static_cast<std::size_t>(d)) ++wrong;
  }
  detail += "; Z12 subgroups with cov != index: " + std::to_string(wrong);
  return judge(ok && wrong == 0, detail);
}

// ---- 11: m-thin ---------------------------------------------------------------------

Outcome m_thin_suite(const AcceptanceConfig& cfg) {
  auto Z = integers();
  auto W = interval_window(Z, 0, 40, 0, cfg.budget);
  std::mt19937_64 rng(cfg.seed);
  std::size_t sets = 0, disagree = 0, uncertified = 0;
  while (sets < 200) {
    // Radius {0, d} or {-d, 0, d}; sets of size <= 15 that are 2-thin for it.
    std::int64_t d = 1 + static_cast<std::int64_t>(rng() % 4);
    Radius F = rng() % 2 ? Radius{z(0), z(d)} : Radius{z(-d), z(0), z(d)};
    std::set<std::int64_t> s;
    std::size_t size = 2 + rng() % 14;
    while (s.size() < size) s.insert(static_cast<std::int64_t>(rng() % 41));
    bool thin = true;
    for (auto a : s) {
      std::size_t c = 0;
      for (const auto& f : F) c += s.count(a + f.code[0]);
      thin = thin && c <= 2;
    }
    if (!thin) continue;
    ++sets;
    std::vector<std::int64_t> xs(s.begin(), s.end());
    std::vector<std::vector<std::size_t>> adj(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i)
      for (std::size_t j = 0; j < xs.size(); ++j)
        for (const auto& f : F)
          if (i != j && xs[j] == xs[i] + f.code[0]) {
            adj[i].push_back(j);
            adj[j].push_back(i);
          }
    if (greedy_colouring(adj, 2).has_value() != exact_colouring(adj, 2).has_value()) ++disagree;
    std::vector<Element> A;
    for (auto x : xs) A.push_back(z(x));
    try {
      auto P = m_thin_partition(subsets::explicit_set(Z, A), 2, {F}, W);
      if (!P.fully_certified()) ++uncertified;
    } catch (const Error&) {
      ++uncertified;
    }
  }
  auto rep = check_n_thin(subsets::evens(Z), {z(0), z(2), z(4)}, interval_window(Z, -100, 100, 0, cfg.budget), 2);
  bool rejected = rep.verdict.failed();
  return judge(disagree == 0 && uncertified == 0 && rejected,
               std::to_string(sets) + " random 2-thin sets, " + std::to_string(disagree) + " disagreements, " +
                   std::to_string(uncertified) + " uncertified; 2Z " + (rejected ? "rejected" : "accepted") +
                   " with F = {0,2,4}");
}

// ---- 12: scattered and derivation ---------------------------------------------------

Outcome scattered_suite(const AcceptanceConfig& cfg) {
  auto Z = integers();
  auto fp = fp_set(Z, {z(1), z(2), z(4), z(8)}, 4);
  auto v1 = check_scattered(fp, 4, interval_window(Z, 0, 64, 0, cfg.budget));
  auto v2 = check_scattered(subsets::powers(Z, 2), 3, interval_window(Z, 0, 1 << 12, 0, cfg.budget));
  auto W = interval_window(Z, -1000, 1000, 0, cfg.budget);
  auto delta = combinatorial_derivation(subsets::evens(Z), IdealSpec::window(10), W);
  std::set<std::int64_t> got, want;
  for (const auto& g : delta) got.insert(g.code[0]);
  for (std::int64_t x = -1000; x <= 1000; x += 2) want.insert(x);
  bool ok = v1.failed() && v2.ok() && got == want;
  return judge(ok, std::string("FP set ") + to_string(v1.status) + ", powers of 2 " + to_string(v2.status) +
                       ", derivation of 2Z has " + std::to_string(got.size()) + " points" +
                       (got == want ? " (all evens)" : " (mismatch)"));
}

struct Criterion {
  int id;
  const char* name;
  Outcome (*run)(const AcceptanceConfig&);
  double limit_seconds;  // 0: no runtime bound
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {1, "free-group largeness identity", free_largeness_identity, 30},
      {2, "free 4-large partition", free_4large_conditions, 0},
      {3, "grasshopper cycles", grasshopper_suite, 300},
      {4, "joint transversals", transversal_suite, 0},
      {5, "three-sets partitions", three_sets_suite, 0},
      {6, "filtration canonical forms", filtration_suite, 0},
      {7, "thick partitions", thick_suite, 0},
      {8, "finite-group densities", density_suite, 600},
      {9, "Kourovka checks", kourovka_suite, 0},
      {10, "cov and pack oracles", cov_pack_suite, 0},
      {11, "m-thin partitioning", m_thin_suite, 0},
      {12, "scattered sets and derivation", scattered_suite, 0},
  };
  return list;
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg) {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) {
    if (!cfg.only.empty() && std::find(cfg.only.begin(), cfg.only.end(), c.id) == cfg.only.end()) continue;
    CriterionResult r;
    r.id = c.id;
    r.name = c.name;
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto o = c.run(cfg);
      r.status = o.status;
      r.detail = o.detail;
    } catch (const BudgetError& e) {
      r.status = Status::inconclusive;
      r.detail = std::string("budget exceeded: ") + e.what();
    } catch (const Error& e) {
      r.status = Status::fails;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && r.seconds > c.limit_seconds && r.status == Status::holds) {
      r.status = Status::fails;
      r.detail += "; over the time limit";
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string format_line(const CriterionResult& r) {
  const char* tag = r.status == Status::holds ? "PASS" : r.status == Status::fails ? "FAIL" : "INCONCLUSIVE";
  char time[32];
  std::snprintf(time, sizeof time, "%.2f s", r.seconds);
  return std::string(tag) + "  " + std::to_string(r.id) + "  " + r.name + "  (" + time + ")  " + r.detail;
}

nlohmann::json to_json(const std::vector<CriterionResult>& results, const AcceptanceConfig& cfg) {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["seed"] = cfg.seed;
  j["budget"] = cfg.budget;
  j["criteria"] = nlohmann::json::array();
  for (const auto& r : results) {
    j["criteria"].push_back({{"id", r.id},
                             {"name", r.name},
                             {"status", r.status == Status::holds ? "pass" : r.status == Status::fails ? "fail" : "inconclusive"},
                             {"detail", r.detail},
                             {"seconds", r.seconds}});
  }
  return j;
}

}  // namespace coarse
