#include "coarse/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <fstream>
#include <numeric>
#include <sstream>

namespace coarse {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::descriptor_mismatch: return "descriptor-mismatch";
    case Errc::invalid_descriptor: return "invalid-descriptor";
    case Errc::invalid_letter: return "invalid-letter";
    case Errc::invalid_sequence: return "invalid-sequence";
    case Errc::budget_exceeded: return "budget-exceeded";
    case Errc::precondition: return "precondition";
    case Errc::parse: return "parse";
    case Errc::no_filtration: return "no-filtration";
    case Errc::configuration: return "configuration";
    case Errc::no_witness: return "no-witness";
    case Errc::unsupported: return "unsupported";
    case Errc::infeasible: return "infeasible";
  }
  return "unknown";
}

const char* to_string(GroupKind kind) noexcept {
  switch (kind) {
    case GroupKind::free: return "free";
    case GroupKind::free_abelian: return "free-abelian";
    case GroupKind::direct_sum_cyclic: return "direct-sum-cyclic";
    case GroupKind::finite_table: return "finite-table";
    case GroupKind::product: return "product";
  }
  return "unknown";
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

[[noreturn]] void bad_literal(std::string_view text, const std::string& group) {
  throw Error(Errc::parse, "cannot parse '" + std::string(text) + "' as an element of " + group);
}

std::int64_t parse_int(std::string_view text, const std::string& group) {
  std::string t = trim(text);
  if (t.empty()) bad_literal(text, group);
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    bad_literal(text, group);
  }
  if (used != t.size()) bad_literal(text, group);
  return v;
}

// Splits "(a,b,c)" into its comma separated parts.
std::vector<std::string> tuple_parts(std::string_view text, const std::string& group) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')') bad_literal(text, group);
  std::vector<std::string> parts;
  std::string cur;
  for (std::size_t i = 1; i + 1 < t.size(); ++i) {
    if (t[i] == ',') {
      parts.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(t[i]);
    }
  }
  if (!trim(cur).empty() || !parts.empty()) parts.push_back(trim(cur));
  return parts;
}

std::int64_t mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

// ---- free abelian ----------------------------------------------------------

class FreeAbelianGroup final : public Group {
 public:
  explicit FreeAbelianGroup(std::size_t rank) : rank_(rank) {
    if (rank == 0) throw Error(Errc::invalid_descriptor, "free-abelian rank must be positive");
    desc_.kind = GroupKind::free_abelian;
    desc_.rank = rank;
    for (std::size_t i = 0; i < rank; ++i) {
      for (std::int64_t s : {1, -1}) {
        std::vector<std::int64_t> c(rank, 0);
        c[i] = s;
        gens_.emplace_back(std::move(c));
      }
    }
  }

  GroupKind kind() const noexcept override { return GroupKind::free_abelian; }
  std::string name() const override { return rank_ == 1 ? "Z" : "Z^" + std::to_string(rank_); }
  const GroupDescriptor& descriptor() const noexcept override { return desc_; }
  Element identity() const override { return Element(std::vector<std::int64_t>(rank_, 0)); }

  Element multiply(const Element& g, const Element& h) const override {
    Element r = g;
    for (std::size_t i = 0; i < rank_; ++i) r.code[i] += h.code[i];
    return r;
  }
  Element inverse(const Element& g) const override {
    Element r = g;
    for (auto& v : r.code) v = -v;
    return r;
  }
  bool is_valid(const Element& g) const override { return g.code.size() == rank_; }
  const std::vector<Element>& generators() const override { return gens_; }
  std::size_t word_length(const Element& g) const override {
    std::size_t n = 0;
    for (auto v : g.code) n += static_cast<std::size_t>(v < 0 ? -v : v);
    return n;
  }
  std::optional<std::uint64_t> order() const override { return std::nullopt; }
  bool locally_finite() const override { return false; }

  // Rank one only: 0, 1, -1, 2, -2, ...
  std::optional<Element> element_at(std::uint64_t n) const override {
    if (rank_ != 1) return std::nullopt;
    auto k = static_cast<std::int64_t>((n + 1) / 2);
    return z(n % 2 == 1 ? k : -k);
  }
  std::optional<std::uint64_t> index_of(const Element& g) const override {
    if (rank_ != 1) return std::nullopt;
    std::int64_t x = g.code[0];
    return x > 0 ? static_cast<std::uint64_t>(2 * x - 1) : static_cast<std::uint64_t>(-2 * x);
  }

  std::string format(const Element& g) const override {
    if (rank_ == 1) return std::to_string(g.code[0]);
    std::string s = "(";
    for (std::size_t i = 0; i < rank_; ++i) {
      if (i) s += ",";
      s += std::to_string(g.code[i]);
    }
    return s + ")";
  }
  Element parse(std::string_view text) const override {
    std::string t = trim(text);
    if (t == "e") return identity();
    if (rank_ == 1 && (t.empty() || t.front() != '(')) return z(parse_int(t, name()));
    auto parts = tuple_parts(t, name());
    if (parts.size() != rank_) bad_literal(text, name());
    std::vector<std::int64_t> c;
    for (auto& p : parts) c.push_back(parse_int(p, name()));
    return Element(std::move(c));
  }

 private:
  std::size_t rank_;
  GroupDescriptor desc_;
  std::vector<Element> gens_;
};

// ---- direct sums of cyclic groups ------------------------------------------

class DirectSumGroup final : public Group {
 public:
  DirectSumGroup(std::vector<std::int64_t> moduli, bool infinite)
      : moduli_(std::move(moduli)), infinite_(infinite) {
    if (moduli_.empty()) throw Error(Errc::invalid_descriptor, "direct-sum-cyclic needs moduli");
    for (auto m : moduli_) {
      if (m < 2) throw Error(Errc::invalid_descriptor, "cyclic moduli must be >= 2");
    }
    desc_.kind = GroupKind::direct_sum_cyclic;
    desc_.moduli = moduli_;
    desc_.infinite = infinite_;
    if (!infinite_) {
      for (std::size_t i = 0; i < moduli_.size(); ++i) {
        std::vector<std::int64_t> up(moduli_.size(), 0), down(moduli_.size(), 0);
        up[i] = 1;
        down[i] = moduli_[i] - 1;
        gens_.emplace_back(up);
        if (moduli_[i] > 2) gens_.emplace_back(down);
      }
    }
  }

  GroupKind kind() const noexcept override { return GroupKind::direct_sum_cyclic; }
  std::string name() const override {
    std::string s;
    if (infinite_) {
      s = "(+)";
      for (auto m : moduli_) s += "Z" + std::to_string(m);
      return s;
    }
    for (std::size_t i = 0; i < moduli_.size(); ++i) {
      if (i) s += "x";
      s += "Z" + std::to_string(moduli_[i]);
    }
    return s;
  }
  const GroupDescriptor& descriptor() const noexcept override { return desc_; }

  std::int64_t modulus(std::size_t i) const { return moduli_[i % moduli_.size()]; }

  Element identity() const override {
    return infinite_ ? Element{} : Element(std::vector<std::int64_t>(moduli_.size(), 0));
  }

  Element multiply(const Element& g, const Element& h) const override {
    std::size_t n = std::max(g.code.size(), h.code.size());
    std::vector<std::int64_t> c(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      std::int64_t a = i < g.code.size() ? g.code[i] : 0;
      std::int64_t b = i < h.code.size() ? h.code[i] : 0;
      c[i] = (a + b) % modulus(i);
    }
    return normalize(std::move(c));
  }
  Element inverse(const Element& g) const override {
    std::vector<std::int64_t> c(g.code.size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (modulus(i) - g.code[i]) % modulus(i);
    return normalize(std::move(c));
  }
  bool is_valid(const Element& g) const override {
    if (!infinite_ && g.code.size() != moduli_.size()) return false;
    if (infinite_ && !g.code.empty() && g.code.back() == 0) return false;
    for (std::size_t i = 0; i < g.code.size(); ++i) {
      if (g.code[i] < 0 || g.code[i] >= modulus(i)) return false;
    }
    return true;
  }
  const std::vector<Element>& generators() const override { return gens_; }
  std::size_t word_length(const Element& g) const override {
    std::size_t n = 0;
    for (std::size_t i = 0; i < g.code.size(); ++i) {
      std::int64_t r = g.code[i];
      n += static_cast<std::size_t>(std::min(r, modulus(i) - r));
    }
    return n;
  }
  std::optional<std::uint64_t> order() const override {
    if (infinite_) return std::nullopt;
    std::uint64_t n = 1;
    for (auto m : moduli_) n *= static_cast<std::uint64_t>(m);
    return n;
  }
  bool locally_finite() const override { return true; }

  // Mixed-radix digits, least significant coordinate first, so that the first
  // m_1 * ... * m_n indices are exactly span(b_1, ..., b_n).
  std::optional<Element> element_at(std::uint64_t n) const override {
    if (auto o = order(); o && n >= *o) return std::nullopt;
    std::vector<std::int64_t> c;
    std::size_t i = 0;
    while (n > 0 || (!infinite_ && i < moduli_.size())) {
      auto m = static_cast<std::uint64_t>(modulus(i));
      c.push_back(static_cast<std::int64_t>(n % m));
      n /= m;
      ++i;
    }
    return normalize(std::move(c));
  }
  std::optional<std::uint64_t> index_of(const Element& g) const override {
    std::uint64_t n = 0;
    for (std::size_t i = g.code.size(); i-- > 0;) {
      n = n * static_cast<std::uint64_t>(modulus(i)) + static_cast<std::uint64_t>(g.code[i]);
    }
    return n;
  }

  std::string format(const Element& g) const override {
    std::string s;
    for (std::size_t i = 0; i < g.code.size(); ++i) {
      if (g.code[i] == 0) continue;
      if (!s.empty()) s += "+";
      if (g.code[i] != 1) s += std::to_string(g.code[i]);
      s += "b" + std::to_string(i + 1);
    }
    return s.empty() ? "e" : s;
  }

  // Accepts "e", "(r1,r2,...)" or sums of basis terms such as "b1+2b3".
  Element parse(std::string_view text) const override {
    std::string t = trim(text);
    if (t == "e" || t == "0") return identity();
    std::vector<std::int64_t> c;
    if (!t.empty() && t.front() == '(') {
      for (auto& p : tuple_parts(t, name())) c.push_back(parse_int(p, name()));
      if (!infinite_ && c.size() != moduli_.size()) bad_literal(text, name());
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = mod(c[i], modulus(i));
      return normalize(std::move(c));
    }
    std::stringstream ss(t);
    std::string term;
    while (std::getline(ss, term, '+')) {
      term = trim(term);
      auto bpos = term.find('b');
      if (bpos == std::string::npos || bpos + 1 >= term.size()) bad_literal(text, name());
      std::int64_t coeff = bpos == 0 ? 1 : parse_int(term.substr(0, bpos), name());
      std::int64_t idx = parse_int(term.substr(bpos + 1), name());
      if (idx < 1 || (!infinite_ && static_cast<std::size_t>(idx) > moduli_.size())) {
        bad_literal(text, name());
      }
      auto i = static_cast<std::size_t>(idx - 1);
      if (c.size() <= i) c.resize(i + 1, 0);
      c[i] = mod(c[i] + coeff, modulus(i));
    }
    if (!infinite_) c.resize(moduli_.size(), 0);
    return normalize(std::move(c));
  }

 private:
  Element normalize(std::vector<std::int64_t> c) const {
    if (infinite_) {
      while (!c.empty() && c.back() == 0) c.pop_back();
    }
    return Element(std::move(c));
  }

  std::vector<std::int64_t> moduli_;
  bool infinite_;
  GroupDescriptor desc_;
  std::vector<Element> gens_;
};

// ---- finite groups given by a multiplication table -------------------------

class TableGroup final : public Group {
 public:
  TableGroup(std::vector<std::vector<std::size_t>> table, std::vector<std::size_t> gens)
      : table_(std::move(table)) {
    const std::size_t n = table_.size();
    if (n == 0) throw Error(Errc::invalid_descriptor, "empty multiplication table");
    for (const auto& row : table_) {
      if (row.size() != n) throw Error(Errc::invalid_descriptor, "table must be square");
      for (auto v : row) {
        if (v >= n) throw Error(Errc::invalid_descriptor, "table entry out of range");
      }
    }
    // Identity.
    std::optional<std::size_t> id;
    for (std::size_t e = 0; e < n && !id; ++e) {
      bool ok = true;
      for (std::size_t x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
      if (ok) id = e;
    }
    if (!id) throw Error(Errc::invalid_descriptor, "table has no two-sided identity");
    identity_ = *id;
    // Inverses.
    inverse_.assign(n, n);
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (table_[x][y] == identity_ && table_[y][x] == identity_) {
          inverse_[x] = y;
          break;
        }
      }
      if (inverse_[x] == n) {
        throw Error(Errc::invalid_descriptor, "element " + std::to_string(x) + " has no inverse");
      }
    }
    // Associativity, exhaustively.
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          if (table_[table_[a][b]][c] != table_[a][table_[b][c]]) {
            throw Error(Errc::invalid_descriptor,
                        "table is not associative at (" + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c) + ")");
          }

    std::vector<bool> in_s(n, false);
    if (gens.empty()) {
      for (std::size_t x = 0; x < n; ++x) in_s[x] = x != identity_;
    } else {
      for (auto g : gens) {
        if (g >= n) throw Error(Errc::invalid_descriptor, "generator index out of range");
        if (g == identity_) continue;
        in_s[g] = true;
        in_s[inverse_[g]] = true;
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (in_s[x]) {
        gens_.push_back(Element({static_cast<std::int64_t>(x)}));
        desc_.generators.push_back(x);
      }
    }
    // Word lengths by breadth-first search from the identity.
    length_.assign(n, SIZE_MAX);
    length_[identity_] = 0;
    std::deque<std::size_t> queue{identity_};
    while (!queue.empty()) {
      auto x = queue.front();
      queue.pop_front();
      for (const auto& s : gens_) {
        auto y = table_[x][static_cast<std::size_t>(s.code[0])];
        if (length_[y] == SIZE_MAX) {
          length_[y] = length_[x] + 1;
          queue.push_back(y);
        }
      }
    }
    if (std::find(length_.begin(), length_.end(), SIZE_MAX) != length_.end()) {
      throw Error(Errc::invalid_descriptor, "generators do not generate the group");
    }
    desc_.kind = GroupKind::finite_table;
    desc_.table = table_;
  }

  GroupKind kind() const noexcept override { return GroupKind::finite_table; }
  std::string name() const override { return "table(" + std::to_string(table_.size()) + ")"; }
  const GroupDescriptor& descriptor() const noexcept override { return desc_; }
  Element identity() const override { return Element({static_cast<std::int64_t>(identity_)}); }
  Element multiply(const Element& g, const Element& h) const override {
    return Element({static_cast<std::int64_t>(
        table_[static_cast<std::size_t>(g.code[0])][static_cast<std::size_t>(h.code[0])])});
  }
  Element inverse(const Element& g) const override {
    return Element({static_cast<std::int64_t>(inverse_[static_cast<std::size_t>(g.code[0])])});
  }
  bool is_valid(const Element& g) const override {
    return g.code.size() == 1 && g.code[0] >= 0 &&
           static_cast<std::size_t>(g.code[0]) < table_.size();
  }
  const std::vector<Element>& generators() const override { return gens_; }
  std::size_t word_length(const Element& g) const override {
    return length_[static_cast<std::size_t>(g.code[0])];
  }
  std::optional<std::uint64_t> order() const override { return table_.size(); }
  bool locally_finite() const override { return true; }
  std::optional<Element> element_at(std::uint64_t n) const override {
    if (n >= table_.size()) return std::nullopt;
    return Element({static_cast<std::int64_t>(n)});
  }
  std::optional<std::uint64_t> index_of(const Element& g) const override {
    return static_cast<std::uint64_t>(g.code[0]);
  }
  std::string format(const Element& g) const override { return std::to_string(g.code[0]); }
  Element parse(std::string_view text) const override {
    std::string t = trim(text);
    if (t == "e") return identity();
    auto v = parse_int(t, name());
    if (v < 0 || static_cast<std::size_t>(v) >= table_.size()) bad_literal(text, name());
    return Element({v});
  }

 private:
  std::vector<std::vector<std::size_t>> table_;
  std::size_t identity_ = 0;
  std::vector<std::size_t> inverse_;
  std::vector<std::size_t> length_;
  std::vector<Element> gens_;
  GroupDescriptor desc_;
};

// ---- direct products of two groups -----------------------------------------

class ProductGroup final : public Group {
 public:
  ProductGroup(GroupView first, GroupView second)
      : first_(std::move(first)), second_(std::move(second)) {
    desc_.kind = GroupKind::product;
    desc_.factors = {first_->descriptor(), second_->descriptor()};
    for (const auto& s : first_->generators()) gens_.push_back(join(s, second_->identity()));
    for (const auto& s : second_->generators()) gens_.push_back(join(first_->identity(), s));
    if (first_->generators().empty() || second_->generators().empty()) gens_.clear();
  }

  const Group& first() const { return *first_; }
  const Group& second() const { return *second_; }
  const GroupView& factor(std::size_t i) const { return i == 0 ? first_ : second_; }

  Element join(const Element& a, const Element& b) const {
    std::vector<std::int64_t> c;
    c.reserve(1 + a.code.size() + b.code.size());
    c.push_back(static_cast<std::int64_t>(a.code.size()));
    c.insert(c.end(), a.code.begin(), a.code.end());
    c.insert(c.end(), b.code.begin(), b.code.end());
    return Element(std::move(c));
  }
  std::pair<Element, Element> split(const Element& g) const {
    auto n = static_cast<std::size_t>(g.code.at(0));
    return {Element({g.code.begin() + 1, g.code.begin() + 1 + static_cast<std::ptrdiff_t>(n)}),
            Element({g.code.begin() + 1 + static_cast<std::ptrdiff_t>(n), g.code.end()})};
  }

  GroupKind kind() const noexcept override { return GroupKind::product; }
  std::string name() const override { return first_->name() + " (+) " + second_->name(); }
  const GroupDescriptor& descriptor() const noexcept override { return desc_; }
  Element identity() const override { return join(first_->identity(), second_->identity()); }
  Element multiply(const Element& g, const Element& h) const override {
    auto [g1, g2] = split(g);
    auto [h1, h2] = split(h);
    return join(first_->multiply(g1, h1), second_->multiply(g2, h2));
  }
  Element inverse(const Element& g) const override {
    auto [g1, g2] = split(g);
    return join(first_->inverse(g1), second_->inverse(g2));
  }
  bool is_valid(const Element& g) const override {
    if (g.code.empty() || g.code[0] < 0 ||
        static_cast<std::size_t>(g.code[0]) + 1 > g.code.size()) {
      return false;
    }
    auto [a, b] = split(g);
    return first_->is_valid(a) && second_->is_valid(b);
  }
  const std::vector<Element>& generators() const override { return gens_; }
  std::size_t word_length(const Element& g) const override {
    auto [a, b] = split(g);
    return first_->word_length(a) + second_->word_length(b);
  }
  std::optional<std::uint64_t> order() const override {
    auto a = first_->order(), b = second_->order();
    if (!a || !b) return std::nullopt;
    return *a * *b;
  }
  bool locally_finite() const override {
    return first_->locally_finite() && second_->locally_finite();
  }

  // A finite factor is enumerated in mixed radix with the other one. When both
  // are infinite the first factor takes the odd bits of the index and the
  // second factor the even bits.
  std::optional<Element> element_at(std::uint64_t n) const override {
    auto oa = first_->order(), ob = second_->order();
    std::uint64_t ia = 0, ib = 0;
    if (oa) {
      ia = n % *oa;
      ib = n / *oa;
    } else if (ob) {
      ib = n % *ob;
      ia = n / *ob;
    } else {
      for (int bit = 0; bit < 32; ++bit) {
        ib |= ((n >> (2 * bit)) & 1ULL) << bit;
        ia |= ((n >> (2 * bit + 1)) & 1ULL) << bit;
      }
    }
    auto a = first_->element_at(ia);
    auto b = second_->element_at(ib);
    if (!a || !b) return std::nullopt;
    return join(*a, *b);
  }
  std::optional<std::uint64_t> index_of(const Element& g) const override {
    auto [a, b] = split(g);
    auto ia = first_->index_of(a), ib = second_->index_of(b);
    if (!ia || !ib) return std::nullopt;
    auto oa = first_->order(), ob = second_->order();
    if (oa) return *ia + *oa * *ib;
    if (ob) return *ib + *ob * *ia;
    std::uint64_t n = 0;
    for (int bit = 0; bit < 32; ++bit) {
      n |= ((*ib >> bit) & 1ULL) << (2 * bit);
      n |= ((*ia >> bit) & 1ULL) << (2 * bit + 1);
    }
    return n;
  }

  std::string format(const Element& g) const override {
    auto [a, b] = split(g);
    return "<" + first_->format(a) + ";" + second_->format(b) + ">";
  }
  Element parse(std::string_view text) const override {
    std::string t = trim(text);
    if (t == "e") return identity();
    if (t.size() < 2 || t.front() != '<' || t.back() != '>') bad_literal(text, name());
    auto semi = t.find(';');
    if (semi == std::string::npos) bad_literal(text, name());
    return join(first_->parse(t.substr(1, semi - 1)),
                second_->parse(t.substr(semi + 1, t.size() - semi - 2)));
  }

 private:
  GroupView first_, second_;
  GroupDescriptor desc_;
  std::vector<Element> gens_;
};

}  // namespace

namespace {

const ProductGroup& as_product(const Group& P) {
  if (P.kind() != GroupKind::product) {
    throw Error(Errc::descriptor_mismatch, P.name() + " is not a product group");
  }
  return static_cast<const ProductGroup&>(P);
}

}  // namespace

GroupView product_factor(const Group& P, std::size_t i) {
  if (i > 1) throw Error(Errc::precondition, "a product has two factors");
  return as_product(P).factor(i);
}

Element product_pair(const Group& P, const Element& a, const Element& b) { return as_product(P).join(a, b); }

std::pair<Element, Element> product_split(const Group& P, const Element& g) {
  return as_product(P).split(g);
}

// ---- Group defaults ---------------------------------------------------------

bool Group::is_abelian() const {
  switch (kind()) {
    case GroupKind::free:
      return as_free(*this).rank() <= 1;
    case GroupKind::free_abelian:
    case GroupKind::direct_sum_cyclic:
      return true;
    case GroupKind::finite_table: {
      auto n = *order();
      for (std::uint64_t a = 0; a < n; ++a)
        for (std::uint64_t b = a + 1; b < n; ++b) {
          Element x({static_cast<std::int64_t>(a)}), y({static_cast<std::int64_t>(b)});
          if (multiply(x, y) != multiply(y, x)) return false;
        }
      return true;
    }
    case GroupKind::product: {
      const auto& p = static_cast<const ProductGroup&>(*this);
      return p.first().is_abelian() && p.second().is_abelian();
    }
  }
  return false;
}

std::optional<Element> Group::element_at(std::uint64_t) const { return std::nullopt; }
std::optional<std::uint64_t> Group::index_of(const Element&) const { return std::nullopt; }

Element Group::power(const Element& g, std::int64_t n) const {
  Element base = n < 0 ? inverse(g) : g;
  std::uint64_t k = static_cast<std::uint64_t>(n < 0 ? -n : n);
  Element r = identity();
  while (k) {
    if (k & 1) r = multiply(r, base);
    base = multiply(base, base);
    k >>= 1;
  }
  return r;
}

Element Group::conjugate_by(const Element& g, const Element& x) const {
  return multiply(multiply(x, g), inverse(x));
}

void Group::require(const Element& g) const {
  if (!is_valid(g)) {
    std::string code;
    for (auto v : g.code) code += std::to_string(v) + " ";
    throw Error(Errc::descriptor_mismatch,
                "element [" + code + "] does not belong to " + name());
  }
}

Element multiply(const Group& G, const Element& g, const Element& h) {
  G.require(g);
  G.require(h);
  return G.multiply(g, h);
}

Element inverse(const Group& G, const Element& g) {
  G.require(g);
  return G.inverse(g);
}

std::size_t word_length(const Group& G, const Element& g) {
  G.require(g);
  return G.word_length(g);
}

Element product_of(const Group& G, const std::vector<Element>& factors) {
  Element r = G.identity();
  for (const auto& f : factors) r = G.multiply(r, f);
  return r;
}

// ---- free groups ------------------------------------------------------------

namespace {
constexpr std::string_view kLetters = "abcdfghijklmnopqrstuvwxyz";
}

FreeGroup::FreeGroup(std::size_t rank) : rank_(rank) {
  if (rank == 0) throw Error(Errc::invalid_descriptor, "free group rank must be positive");
  desc_.kind = GroupKind::free;
  desc_.rank = rank;
  for (std::size_t i = 0; i < rank; ++i) {
    gens_.push_back(letter(i, false));
    gens_.push_back(letter(i, true));
  }
}

std::string FreeGroup::name() const { return "F" + std::to_string(rank_); }

std::string FreeGroup::letter_name(std::size_t index) {
  if (index < kLetters.size()) return std::string(1, kLetters[index]);
  return "x" + std::to_string(index);
}

Element FreeGroup::letter(std::size_t index, bool inverted) const {
  if (index >= rank_) {
    throw Error(Errc::invalid_letter, "letter index " + std::to_string(index) +
                                          " outside alphabet of " + name());
  }
  auto v = static_cast<std::int64_t>(index + 1);
  return Element({inverted ? -v : v});
}

Element FreeGroup::reduce(const std::vector<Letter>& word) const {
  std::vector<std::int64_t> out;
  out.reserve(word.size());
  for (const auto& l : word) {
    if (l.index >= rank_) {
      throw Error(Errc::invalid_letter, "letter index " + std::to_string(l.index) +
                                            " outside alphabet of " + name());
    }
    auto v = static_cast<std::int64_t>(l.index + 1) * (l.inverted ? -1 : 1);
    if (!out.empty() && out.back() == -v) {
      out.pop_back();
    } else {
      out.push_back(v);
    }
  }
  return Element(std::move(out));
}

Element reduce_word(const FreeGroup& F, const std::vector<Letter>& letters) {
  return F.reduce(letters);
}

std::vector<Letter> FreeGroup::letters(const Element& g) const {
  std::vector<Letter> out;
  out.reserve(g.code.size());
  for (auto v : g.code) {
    out.push_back({static_cast<std::size_t>((v < 0 ? -v : v) - 1), v < 0});
  }
  return out;
}

Element FreeGroup::multiply(const Element& g, const Element& h) const {
  std::size_t k = 0;
  const std::size_t n = g.code.size();
  while (k < n && k < h.code.size() && g.code[n - 1 - k] == -h.code[k]) ++k;
  std::vector<std::int64_t> c;
  c.reserve(n + h.code.size() - 2 * k);
  c.insert(c.end(), g.code.begin(), g.code.end() - static_cast<std::ptrdiff_t>(k));
  c.insert(c.end(), h.code.begin() + static_cast<std::ptrdiff_t>(k), h.code.end());
  return Element(std::move(c));
}

Element FreeGroup::inverse(const Element& g) const {
  std::vector<std::int64_t> c(g.code.rbegin(), g.code.rend());
  for (auto& v : c) v = -v;
  return Element(std::move(c));
}

bool FreeGroup::is_valid(const Element& g) const {
  for (std::size_t i = 0; i < g.code.size(); ++i) {
    auto v = g.code[i];
    if (v == 0 || static_cast<std::size_t>(v < 0 ? -v : v) > rank_) return false;
    if (i > 0 && g.code[i - 1] == -v) return false;
  }
  return true;
}

std::string FreeGroup::format(const Element& g) const {
  if (g.code.empty()) return "e";
  std::string s;
  for (const auto& l : letters(g)) {
    std::string name = letter_name(l.index);
    if (l.inverted) name[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
    s += name;
  }
  return s;
}

// Letters a..z (skipping e), uppercase for inverses, x<k>/X<k> for large
// indices, optionally followed by an exponent ^n.
Element FreeGroup::parse(std::string_view text) const {
  std::string t = trim(text);
  if (t == "e" || t.empty()) return identity();
  std::vector<Letter> word;
  std::size_t i = 0;
  while (i < t.size()) {
    char ch = t[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    bool inv = std::isupper(static_cast<unsigned char>(ch)) != 0;
    std::size_t index = 0;
    if (lower == 'x' && i + 1 < t.size() && std::isdigit(static_cast<unsigned char>(t[i + 1]))) {
      std::size_t j = i + 1;
      while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
      index = static_cast<std::size_t>(std::stoull(t.substr(i + 1, j - i - 1)));
      i = j;
    } else {
      auto pos = kLetters.find(lower);
      if (pos == std::string_view::npos) bad_literal(text, name());
      index = pos;
      ++i;
    }
    std::int64_t exponent = 1;
    if (i < t.size() && t[i] == '^') {
      std::size_t j = i + 1;
      if (j < t.size() && (t[j] == '-' || t[j] == '+')) ++j;
      while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
      exponent = parse_int(t.substr(i + 1, j - i - 1), name());
      i = j;
    }
    if (exponent < 0) {
      inv = !inv;
      exponent = -exponent;
    }
    for (std::int64_t k = 0; k < exponent; ++k) word.push_back({index, inv});
  }
  return reduce(word);
}

const FreeGroup& as_free(const Group& G) {
  auto* f = dynamic_cast<const FreeGroup*>(&G);
  if (!f) throw Error(Errc::descriptor_mismatch, G.name() + " is not a free group");
  return *f;
}

// ---- descriptors and factories --------------------------------------------

GroupDescriptor GroupDescriptor::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw Error(Errc::invalid_descriptor, "group descriptor must be an object with a kind");
  }
  GroupDescriptor d;
  std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "free") {
      d.kind = GroupKind::free;
      d.rank = j.at("rank").get<std::size_t>();
    } else if (kind == "free-abelian") {
      d.kind = GroupKind::free_abelian;
      d.rank = j.value("rank", std::size_t{1});
    } else if (kind == "direct-sum-cyclic") {
      d.kind = GroupKind::direct_sum_cyclic;
      d.moduli = j.at("moduli").get<std::vector<std::int64_t>>();
      d.infinite = j.value("infinite", false);
    } else if (kind == "finite-table") {
      d.kind = GroupKind::finite_table;
      d.table = j.at("table").get<std::vector<std::vector<std::size_t>>>();
      if (j.contains("generators")) d.generators = j.at("generators").get<std::vector<std::size_t>>();
    } else if (kind == "product") {
      d.kind = GroupKind::product;
      const auto& f = j.at("factors");
      if (!f.is_array() || f.size() != 2) {
        throw Error(Errc::invalid_descriptor, "product needs exactly two factors");
      }
      d.factors = {from_json(f[0]), from_json(f[1])};
    } else {
      throw Error(Errc::invalid_descriptor, "unknown group kind '" + kind + "'");
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::invalid_descriptor, std::string("malformed group descriptor: ") + e.what());
  }
  return d;
}

nlohmann::json GroupDescriptor::to_json() const {
  nlohmann::json j;
  j["kind"] = to_string(kind);
  switch (kind) {
    case GroupKind::free:
    case GroupKind::free_abelian:
      j["rank"] = rank;
      break;
    case GroupKind::direct_sum_cyclic:
      j["moduli"] = moduli;
      if (infinite) j["infinite"] = true;
      break;
    case GroupKind::finite_table:
      j["table"] = table;
      j["generators"] = generators;
      break;
    case GroupKind::product:
      j["factors"] = {factors.at(0).to_json(), factors.at(1).to_json()};
      break;
  }
  return j;
}

GroupView make_group(const GroupDescriptor& d) {
  switch (d.kind) {
    case GroupKind::free: return std::make_shared<FreeGroup>(d.rank);
    case GroupKind::free_abelian: return std::make_shared<FreeAbelianGroup>(d.rank);
    case GroupKind::direct_sum_cyclic: return std::make_shared<DirectSumGroup>(d.moduli, d.infinite);
    case GroupKind::finite_table: return std::make_shared<TableGroup>(d.table, d.generators);
    case GroupKind::product:
      return std::make_shared<ProductGroup>(make_group(d.factors.at(0)), make_group(d.factors.at(1)));
  }
  throw Error(Errc::invalid_descriptor, "unknown group kind");
}

GroupView make_group(const nlohmann::json& j) { return make_group(GroupDescriptor::from_json(j)); }

GroupView load_group(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::invalid_descriptor, "cannot open group descriptor '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::invalid_descriptor, "'" + path + "' is not valid JSON: " + e.what());
  }
  return make_group(j);
}

GroupView free_group(std::size_t rank) { return std::make_shared<FreeGroup>(rank); }
GroupView free_abelian(std::size_t rank) { return std::make_shared<FreeAbelianGroup>(rank); }
GroupView integers() { return free_abelian(1); }
GroupView direct_sum(std::vector<std::int64_t> moduli) {
  return std::make_shared<DirectSumGroup>(std::move(moduli), false);
}
GroupView countable_direct_sum(std::int64_t modulus) {
  return std::make_shared<DirectSumGroup>(std::vector<std::int64_t>{modulus}, true);
}

GroupView cyclic(std::int64_t n) {
  auto m = static_cast<std::size_t>(n);
  std::vector<std::vector<std::size_t>> t(m, std::vector<std::size_t>(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) t[a][b] = (a + b) % m;
  return finite_table(std::move(t), m > 1 ? std::vector<std::size_t>{1} : std::vector<std::size_t>{});
}

GroupView symmetric_group_3() {
  std::vector<std::array<int, 3>> perms;
  std::array<int, 3> p{0, 1, 2};
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t a = 0; a < 6; ++a) {
    for (std::size_t b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];  // (ab)(i) = a(b(i))
      t[a][b] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  }
  return finite_table(std::move(t));
}

GroupView finite_table(std::vector<std::vector<std::size_t>> table, std::vector<std::size_t> gens) {
  return std::make_shared<TableGroup>(std::move(table), std::move(gens));
}

GroupView product(const GroupView& first, const GroupView& second) {
  return std::make_shared<ProductGroup>(first, second);
}

}  // namespace coarse
