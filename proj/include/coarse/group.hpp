#pragma once

// Concrete computable groups with canonical element encodings.
//
// Every element is a vector of 64-bit integers whose meaning depends on the
// group kind:
//   free               signed letters +(i+1) / -(i+1), freely reduced
//   free-abelian       integer coordinate vector of length `rank`
//   direct-sum-cyclic  residue vector; for the countable sum trailing zeros
//                      are trimmed so that e is the empty vector
//   finite-table       a single row index into the multiplication table
//   product            [size of first code, first code..., second code...]
// Encodings are canonical, so equality of elements is equality of codes.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "coarse/error.hpp"

namespace coarse {

struct Element {
  std::vector<std::int64_t> code;

  Element() = default;
  explicit Element(std::vector<std::int64_t> c) : code(std::move(c)) {}

  bool is_empty_code() const noexcept { return code.empty(); }

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

// Shorthand for an element of a rank-one free abelian group.
inline Element z(std::int64_t x) { return Element({x}); }

struct ElementHash {
  std::size_t operator()(const Element& g) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL ^ g.code.size();
    for (auto v : g.code) {
      h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL + (h << 6) +
           (h >> 2);
    }
    return h;
  }
};

using ElementSet = std::unordered_set<Element, ElementHash>;
template <class V>
using ElementMap = std::unordered_map<Element, V, ElementHash>;

// A finite set of group elements used as a ball radius or translate set.
using Radius = std::vector<Element>;

enum class GroupKind { free, free_abelian, direct_sum_cyclic, finite_table, product };

const char* to_string(GroupKind kind) noexcept;

struct GroupDescriptor {
  GroupKind kind = GroupKind::free_abelian;
  std::size_t rank = 1;
  // Orders of the cyclic summands. With `infinite` set the pattern repeats
  // forever, giving a countable direct sum.
  std::vector<std::int64_t> moduli;
  bool infinite = false;
  std::vector<std::vector<std::size_t>> table;
  std::vector<std::size_t> generators;  // finite-table only; empty = all
  std::vector<GroupDescriptor> factors;  // product only

  static GroupDescriptor from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;
};

class Group {
 public:
  virtual ~Group() = default;

  virtual GroupKind kind() const noexcept = 0;
  virtual std::string name() const = 0;
  virtual const GroupDescriptor& descriptor() const noexcept = 0;

  virtual Element identity() const = 0;
  virtual Element multiply(const Element& g, const Element& h) const = 0;
  virtual Element inverse(const Element& g) const = 0;
  // True when `g` is a canonical encoding of an element of this group.
  virtual bool is_valid(const Element& g) const = 0;

  // The symmetric generating set S; empty when the group is not finitely
  // generated (the word length is then taken over a lazily indexed basis).
  virtual const std::vector<Element>& generators() const = 0;
  virtual std::size_t word_length(const Element& g) const = 0;

  virtual std::optional<std::uint64_t> order() const = 0;
  virtual bool locally_finite() const = 0;
  bool is_abelian() const;

  // Countable enumeration by index. Groups without one return nullopt.
  virtual std::optional<Element> element_at(std::uint64_t n) const;
  virtual std::optional<std::uint64_t> index_of(const Element& g) const;

  virtual std::string format(const Element& g) const = 0;
  // Parses a literal in this group's notation; "e" is always the identity.
  virtual Element parse(std::string_view text) const = 0;

  bool is_identity(const Element& g) const { return g == identity(); }
  Element power(const Element& g, std::int64_t n) const;
  Element conjugate_by(const Element& g, const Element& x) const;

  // Checks `g` belongs to this group, throwing descriptor_mismatch otherwise.
  void require(const Element& g) const;
};

using GroupView = std::shared_ptr<const Group>;

GroupView make_group(const GroupDescriptor& desc);
GroupView make_group(const nlohmann::json& j);
GroupView load_group(const std::string& path);

GroupView free_group(std::size_t rank);
GroupView free_abelian(std::size_t rank);
GroupView integers();
GroupView direct_sum(std::vector<std::int64_t> moduli);
GroupView countable_direct_sum(std::int64_t modulus);
GroupView cyclic(std::int64_t n);  // finite-table presentation of Z_n
GroupView symmetric_group_3();     // finite-table presentation of S_3
GroupView finite_table(std::vector<std::vector<std::size_t>> table,
                       std::vector<std::size_t> generators = {});
GroupView product(const GroupView& first, const GroupView& second);

// Components of a product group. These throw descriptor_mismatch for other kinds.
GroupView product_factor(const Group& P, std::size_t i);
Element product_pair(const Group& P, const Element& a, const Element& b);
std::pair<Element, Element> product_split(const Group& P, const Element& g);

// Validated group operations. These reject elements of other groups.
Element multiply(const Group& G, const Element& g, const Element& h);
Element inverse(const Group& G, const Element& g);
std::size_t word_length(const Group& G, const Element& g);
Element product_of(const Group& G, const std::vector<Element>& factors);

// ---- free groups ----------------------------------------------------------

struct Letter {
  std::size_t index = 0;
  bool inverted = false;

  friend bool operator==(const Letter&, const Letter&) = default;
};

class FreeGroup;
const FreeGroup& as_free(const Group& G);

class FreeGroup final : public Group {
 public:
  explicit FreeGroup(std::size_t rank);

  GroupKind kind() const noexcept override { return GroupKind::free; }
  std::string name() const override;
  const GroupDescriptor& descriptor() const noexcept override { return desc_; }
  Element identity() const override { return Element{}; }
  Element multiply(const Element& g, const Element& h) const override;
  Element inverse(const Element& g) const override;
  bool is_valid(const Element& g) const override;
  const std::vector<Element>& generators() const override { return gens_; }
  std::size_t word_length(const Element& g) const override { return g.code.size(); }
  std::optional<std::uint64_t> order() const override { return std::nullopt; }
  bool locally_finite() const override { return false; }
  std::string format(const Element& g) const override;
  Element parse(std::string_view text) const override;

  std::size_t rank() const noexcept { return rank_; }
  Element letter(std::size_t index, bool inverted = false) const;
  // Freely reduces a letter sequence; rejects letters outside the alphabet.
  Element reduce(const std::vector<Letter>& letters) const;
  std::vector<Letter> letters(const Element& g) const;

  static std::string letter_name(std::size_t index);

 private:
  std::size_t rank_;
  GroupDescriptor desc_;
  std::vector<Element> gens_;
};

Element reduce_word(const FreeGroup& F, const std::vector<Letter>& letters);

}  // namespace coarse
