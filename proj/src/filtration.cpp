#include "coarse/filtration.hpp"

#include <algorithm>
#include <map>

#include "coarse/classify.hpp"
#include "coarse/subset.hpp"

namespace coarse {

FiltrationScheme parse_scheme(const std::string& name) {
  if (name == "standard-direct-sum") return FiltrationScheme::standard_direct_sum;
  if (name == "product-K-H") return FiltrationScheme::product_K_H;
  throw Error(Errc::configuration, "unknown filtration scheme '" + name + "'");
}

const char* to_string(FiltrationScheme s) noexcept {
  return s == FiltrationScheme::standard_direct_sum ? "standard-direct-sum" : "product-K-H";
}

namespace {

bool countable_sum(const GroupDescriptor& d) {
  return d.kind == GroupKind::direct_sum_cyclic && d.infinite;
}

std::int64_t modulus(const GroupDescriptor& d, std::size_t i) { return d.moduli[i % d.moduli.size()]; }

// Rank of a direct-sum code: one past the last nonzero coordinate.
std::size_t sum_rank(const Element& g) {
  std::size_t n = g.code.size();
  while (n > 0 && g.code[n - 1] == 0) --n;
  return n;
}

Element basis_multiple(std::size_t i, std::int64_t v) {
  std::vector<std::int64_t> c(i + 1, 0);
  c[i] = v;
  return Element(std::move(c));
}

Element sum_top(const Element& g) {
  auto r = sum_rank(g);
  return basis_multiple(r - 1, g.code[r - 1]);
}

[[noreturn]] void finitely_generated(const Group& G) {
  throw Error(Errc::no_filtration, G.name() + " is finitely generated and admits no filtration");
}

}  // namespace

Filtration Filtration::build(const GroupView& G, FiltrationScheme scheme) {
  const auto& d = G->descriptor();
  if (scheme == FiltrationScheme::standard_direct_sum) {
    if (countable_sum(d)) return Filtration(G, scheme);
    if (G->kind() != GroupKind::product) finitely_generated(*G);
    throw Error(Errc::descriptor_mismatch, "standard-direct-sum needs a countable direct sum");
  }
  if (G->kind() != GroupKind::product) {
    if (countable_sum(d)) throw Error(Errc::descriptor_mismatch, "product-K-H needs a product group");
    finitely_generated(*G);
  }
  if (!countable_sum(d.factors[1])) {
    throw Error(Errc::descriptor_mismatch, "product-K-H needs a countable direct sum as second factor");
  }
  if (!product_factor(*G, 0)->element_at(0)) {
    throw Error(Errc::descriptor_mismatch, "the first factor has no enumeration");
  }
  return Filtration(G, scheme);
}

Filtration Filtration::build(const GroupView& G) {
  if (G->kind() == GroupKind::product) {
    const auto& d = G->descriptor();
    if (!countable_sum(d.factors[1]) && !G->generators().empty()) finitely_generated(*G);
    return build(G, FiltrationScheme::product_K_H);
  }
  return build(G, FiltrationScheme::standard_direct_sum);
}

std::size_t Filtration::rank_of(const Element& g) const {
  G_->require(g);
  if (scheme_ == FiltrationScheme::standard_direct_sum) return sum_rank(g);
  auto [k, h] = product_split(*G_, g);
  if (auto r = sum_rank(h)) return 1 + r;
  return product_factor(*G_, 0)->is_identity(k) ? 0 : 1;
}

Element Filtration::top_factor(const Element& g) const {
  if (G_->is_identity(g)) throw Error(Errc::precondition, "the identity has no top factor");
  if (scheme_ == FiltrationScheme::standard_direct_sum) return sum_top(g);
  auto [k, h] = product_split(*G_, g);
  auto K = product_factor(*G_, 0), H = product_factor(*G_, 1);
  if (sum_rank(h)) return product_pair(*G_, K->identity(), sum_top(h));
  return product_pair(*G_, k, H->identity());
}

std::vector<Element> Filtration::representatives(std::size_t level, std::size_t limit) const {
  std::vector<Element> out;
  if (scheme_ == FiltrationScheme::standard_direct_sum) {
    for (std::int64_t v = 1; v < modulus(G_->descriptor(), level) && out.size() < limit; ++v) {
      out.push_back(basis_multiple(level, v));
    }
    return out;
  }
  auto K = product_factor(*G_, 0), H = product_factor(*G_, 1);
  if (level == 0) {
    for (std::uint64_t i = 1; out.size() < limit; ++i) {
      auto k = K->element_at(i);
      if (!k) break;
      out.push_back(product_pair(*G_, *k, H->identity()));
    }
    return out;
  }
  for (std::int64_t v = 1; v < modulus(H->descriptor(), level - 1) && out.size() < limit; ++v) {
    out.push_back(product_pair(*G_, K->identity(), basis_multiple(level - 1, v)));
  }
  return out;
}

bool Filtration::first_level_infinite() const {
  return scheme_ == FiltrationScheme::product_K_H && !product_factor(*G_, 0)->order();
}

std::uint64_t Filtration::first_level_index(const Element& g) const {
  if (rank_of(g) > 1) throw Error(Errc::precondition, "element is not in the first level");
  if (scheme_ == FiltrationScheme::standard_direct_sum) {
    return g.code.empty() ? 0 : static_cast<std::uint64_t>(g.code[0]);
  }
  return *product_factor(*G_, 0)->index_of(product_split(*G_, g).first);
}

std::vector<Element> Filtration::first_level_elements(std::size_t n) const {
  std::vector<Element> out{G_->identity()};
  auto rest = representatives(0, n - 1);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

CanonicalForm canonical_form(const Element& g, const Filtration& F) {
  const Group& G = F.group();
  CanonicalForm c;
  Element rest = g;
  std::size_t rank = F.rank_of(rest);
  while (rank > 0) {
    Element x = F.top_factor(rest);
    c.factors.push_back(x);
    c.levels.push_back(rank - 1);
    rest = G.multiply(rest, G.inverse(x));
    auto next = F.rank_of(rest);
    if (next >= rank) throw Error(Errc::infeasible, "internal error: stripping did not lower the level");
    rank = next;
  }
  std::reverse(c.factors.begin(), c.factors.end());
  std::reverse(c.levels.begin(), c.levels.end());
  return c;
}

Element recompose(const Group& G, const CanonicalForm& c) {
  Element g = G.identity();
  for (const auto& x : c.factors) g = G.multiply(g, x);
  return g;
}

std::string format_label(const std::vector<std::size_t>& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

std::string small_partition_cell(const Element& g, const Filtration& F) {
  if (F.group().is_identity(g)) return "e";
  return format_label(std::vector<std::size_t>{canonical_form(g, F).s(),
                                               canonical_form(F.group().inverse(g), F).s()});
}

std::optional<std::size_t> aleph1_large_cell(const Element& g, const Filtration& F) {
  if (!F.first_level_infinite()) throw Error(Errc::precondition, "the first level of the filtration is finite");
  auto c = canonical_form(g, F);
  Element g1 = F.group().identity();
  std::vector<std::size_t> gamma;  // γ_1 > γ_2 > ...
  for (std::size_t i = c.s(); i-- > 0;) {
    if (c.levels[i] == 0) g1 = c.factors[i];
    else gamma.push_back(c.levels[i]);
  }
  if (gamma.empty()) return std::nullopt;
  auto pi = F.first_level_index(g1) + 1;
  if (pi > gamma.size()) return std::nullopt;
  return gamma[pi - 1];
}

Verdict check_aleph1_coverage(const Filtration& F, std::size_t alpha, const Window& W, std::size_t n) {
  if (alpha == 0) throw Error(Errc::precondition, "cells are indexed by levels above 0");
  const Group& G = F.group();
  auto a = F.representatives(alpha, 1).at(0);
  Radius Fa;
  for (const auto& k : F.first_level_elements(n)) {
    Fa.push_back(k);
    Fa.push_back(G.multiply(a, k));
  }
  auto A = subsets::predicate(F.group_view(), "A_" + std::to_string(alpha), [&F, alpha](const Element& g) {
    auto c = aleph1_large_cell(g, F);
    return c && *c == alpha;
  });
  return check_left_large(A, Fa, W);
}

std::vector<std::size_t> chi_cov_cell(const Element& g, const Filtration& F) {
  return canonical_form(g, F).levels;
}

Element separating_element(const std::vector<Element>& K, const std::vector<std::size_t>& s,
                           const Filtration& F) {
  std::size_t gamma = 0;
  bool bounded = false;
  for (const auto& k : K) {
    gamma = std::max(gamma, F.rank_of(k) + 1);
    bounded = true;
  }
  if (!bounded) gamma = 0;
  while (std::find(s.begin(), s.end(), gamma) != s.end()) ++gamma;
  return F.representatives(gamma, 1).at(0);
}

Verdict check_separation(const Group& G, const std::vector<Element>& K, const Element& h,
                         const std::vector<Element>& H) {
  ElementSet KH;
  for (const auto& k : K)
    for (const auto& x : H) KH.insert(G.multiply(k, x));
  for (const auto& x : H) {
    auto y = G.multiply(h, x);
    if (KH.count(y)) return Verdict::fails({y}, "element lies in both KH and hH");
  }
  return Verdict::holds({h}, "KH and hH are disjoint");
}

LevelColouring singleton_colouring(const Filtration& F) {
  auto G = F.group_view();
  return [G](std::size_t, const Element& x) -> std::optional<std::uint64_t> { return G->index_of(x); };
}

LevelColouring constant_colouring() {
  return [](std::size_t, const Element&) -> std::optional<std::uint64_t> { return 0; };
}

std::vector<std::uint64_t> scattered_partition_cell(const Element& g, const Filtration& F,
                                                    const LevelColouring& chi) {
  auto c = canonical_form(g, F);
  std::vector<std::uint64_t> out;
  Element p = F.group().identity();
  for (std::size_t i = 0; i < c.s(); ++i) {
    p = F.group().multiply(p, c.factors[i]);
    auto colour = chi(c.levels[i], p);
    if (!colour) {
      throw Error(Errc::configuration, "no colouring given for level " + std::to_string(c.levels[i]));
    }
    out.push_back(*colour);
  }
  return out;
}

std::vector<Radius> level_radii(const Filtration& F, std::size_t first, std::size_t last) {
  const Group& G = F.group();
  std::vector<Radius> out;
  for (std::size_t j = first; j <= last; ++j) {
    std::uint64_t size = std::uint64_t{1} << j;
    if (F.scheme() == FiltrationScheme::standard_direct_sum) {
      size = 1;
      for (std::size_t i = 0; i < j; ++i) size *= static_cast<std::uint64_t>(modulus(G.descriptor(), i));
    }
    Radius r;
    for (std::uint64_t i = 0; i < size; ++i) r.push_back(*G.element_at(i));
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

nlohmann::json radii_json(const Group& G, const std::vector<Radius>& radii) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : radii) j.push_back(radius_json(G, r));
  return j;
}

std::vector<std::string> sorted_labels(std::vector<std::string> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  auto e = std::find(labels.begin(), labels.end(), "e");
  if (e != labels.end()) std::rotate(labels.begin(), e, e + 1);
  return labels;
}

}  // namespace

Partition filtration_small_partition(const Filtration& F, const Window& W, std::size_t b) {
  const Group& G = F.group();
  std::vector<std::string> labels;
  for (const auto& g : W.elements()) labels.push_back(small_partition_cell(g, F));
  Partition P;
  P.method = "filtration-small";
  P.window = W;
  P.cells = cells_from_labels(W, labels, sorted_labels(labels));
  P.info = {{"scheme", to_string(F.scheme())}};
  auto radii = level_radii(F, 2, 5);
  for (auto& cell : P.cells) {
    Certificate cert;
    cert.kind = "left-small";
    cert.params = {{"radii", radii_json(G, radii)}, {"b", b}};
    auto v = verify_certificate(cert, cell, W);
    cert.status = v.status;
    cert.note = v.note;
    cell.certificates.push_back(std::move(cert));
  }
  return P;
}

Partition chi_cov_partition(const Filtration& F, const Window& W, std::size_t k_sample) {
  const Group& G = F.group();
  std::vector<std::string> labels;
  std::map<std::string, std::vector<std::size_t>> seq;
  for (const auto& g : W.elements()) {
    if (G.is_identity(g)) {
      labels.push_back("e");
      continue;
    }
    auto s = chi_cov_cell(g, F);
    labels.push_back(format_label(s));
    seq[labels.back()] = s;
  }
  std::vector<Element> K(W.elements().begin(),
                         W.elements().begin() + static_cast<std::ptrdiff_t>(std::min(k_sample, W.size())));
  Partition P;
  P.method = "chi-cov";
  P.window = W;
  P.cells = cells_from_labels(W, labels, sorted_labels(labels));
  P.info = {{"scheme", to_string(F.scheme())}, {"K", radius_json(G, K)}};
  for (auto& cell : P.cells) {
    if (cell.label == "e") continue;
    Element h = separating_element(K, seq[cell.label], F);
    Certificate cert;
    cert.kind = "separation";
    cert.params = {{"K", radius_json(G, K)}, {"h", G.format(h)}};
    auto v = verify_certificate(cert, cell, W);
    cert.status = v.status;
    cert.note = v.note;
    cell.certificates.push_back(std::move(cert));
  }
  return P;
}

Partition scattered_filtration_partition(const Filtration& F, const Window& W,
                                         const LevelColouring& chi, std::size_t depth) {
  std::vector<std::string> labels;
  for (const auto& g : W.elements()) {
    labels.push_back(F.group().is_identity(g) ? "e" : format_label(scattered_partition_cell(g, F, chi)));
  }
  Partition P;
  P.method = "scattered";
  P.window = W;
  P.cells = cells_from_labels(W, labels, sorted_labels(labels));
  P.info = {{"scheme", to_string(F.scheme())}};
  for (auto& cell : P.cells) {
    Certificate cert;
    cert.kind = "scattered";
    cert.params = {{"depth", depth}};
    auto v = verify_certificate(cert, cell, W);
    cert.status = v.status;
    cert.note = v.note;
    cell.certificates.push_back(std::move(cert));
  }
  return P;
}

}  // namespace coarse
