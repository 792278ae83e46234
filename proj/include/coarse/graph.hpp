#pragma once

// Finite graph algorithms: grasshopper cycles, joint transversals and the
// three-sets colouring of functional graphs, together with the partitions of
// groups they produce.

#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "coarse/group.hpp"
#include "coarse/partition.hpp"
#include "coarse/window.hpp"

namespace coarse {

class SimpleGraph {
 public:
  explicit SimpleGraph(std::size_t n = 0) : adj_(n) {}

  // Rejects loops, duplicate edges and vertices out of range.
  static SimpleGraph from_edges(std::size_t n,
                                const std::vector<std::pair<std::size_t, std::size_t>>& edges);
  // One "u v" pair per line; labels are arbitrary integers, mapped to 0..n-1
  // in order of first appearance. `labels` receives the original labels.
  static SimpleGraph parse_edge_list(const std::string& text, std::vector<long long>* labels = nullptr);

  std::size_t size() const noexcept { return adj_.size(); }
  std::size_t edge_count() const noexcept;
  void add_edge(std::size_t u, std::size_t v);
  bool has_edge(std::size_t u, std::size_t v) const;
  const std::vector<std::size_t>& neighbours(std::size_t v) const { return adj_[v]; }

 private:
  std::vector<std::vector<std::size_t>> adj_;
};

inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();

using DistanceTable = std::vector<std::vector<std::size_t>>;

// All-pairs shortest path lengths by breadth-first search; kUnreachable
// between components.
DistanceTable path_metric(const SimpleGraph& g);
std::vector<std::vector<std::size_t>> components(const SimpleGraph& g);

struct GrasshopperResult {
  // One cycle per connected component.
  std::vector<std::vector<std::size_t>> cycles;
  bool disconnected = false;
};

// Orders a breadth-first spanning tree by a depth-first walk that emits
// vertices of even depth on entry and vertices of odd depth on exit.
// Every output is checked against the path metric before it is returned.
GrasshopperResult grasshopper_cycle(const SimpleGraph& g);
// True when `order` visits each vertex of `vertices` once and consecutive
// jumps, wraparound included, have path distance <= 3.
bool is_grasshopper_cycle(const DistanceTable& d, const std::vector<std::size_t>& order,
                          std::size_t jump = 3);

// Cells are lists of item ids. Both partitions must cover the same items and
// every cell must have the same size. The transversal is built from a
// perfect matching of the cell-intersection graph (greedy start, then
// augmenting paths), taking the smallest item of each matched pair.
std::vector<std::size_t> joint_transversal(const std::vector<std::vector<std::size_t>>& P,
                                           const std::vector<std::vector<std::size_t>>& Q);
bool is_joint_transversal(const std::vector<std::vector<std::size_t>>& P,
                          const std::vector<std::vector<std::size_t>>& Q,
                          const std::vector<std::size_t>& T);

// f[x] is the image of x. Class 0 holds exactly the fixed points; classes
// 1..3 satisfy f(X_i) ∩ X_i = ∅. Class 3 is used only on odd cycles.
struct ThreeSets {
  std::vector<int> cls;
  std::vector<std::vector<std::size_t>> classes;  // four entries
};

ThreeSets three_sets_partition(const std::vector<std::size_t>& f);
// Same with two moving classes; throws precondition naming an odd cycle of
// length > 1 when there is one.
ThreeSets three_sets_partition_3(const std::vector<std::size_t>& f);
// Cycles of length > 1, each listed from its smallest vertex along f.
std::vector<std::vector<std::size_t>> functional_cycles(const std::vector<std::size_t>& f);
bool displaces(const std::vector<std::size_t>& f, const ThreeSets& t);
std::vector<std::size_t> parse_functional_graph(const std::string& text,
                                                std::vector<long long>* labels = nullptr);

// Cells X_1..X_3 of f(x) = g x on the window (points leaving the window map
// to a fixed sink), each certified by {e,g}x ⊄ X_i.
Partition non_thick_partition(const GroupView& G, const Element& g, const Window& W);

enum class LargeCase { automatic, cayley, chain };
enum class RayColouring { cyclic, dyadic };

struct LargePartitionOptions {
  LargeCase which = LargeCase::automatic;
  RayColouring colouring = RayColouring::cyclic;
};

// Partition of the window into m cells that are large at window scale.
//   cayley: grasshopper cycle on the left Cayley graph of the window,
//           position i gets colour i mod m; certificate F = ball(3m).
//   chain:  window is a finite subgroup of a locally finite group; with H
//           the first subgroup of the chain of order >= m, the window splits
//           into |H| joint transversals of the left and right H-cosets and
//           cell c collects transversals c, c+m, ...; certificate F = H on
//           both sides.
Partition large_partition(const GroupView& G, std::size_t m, const Window& W,
                          LargePartitionOptions opts = {});

// Increasing chain {e} = H_0 ⊂ H_1 ⊂ ... of subgroups exhausting the window,
// each step adjoining the first window element not yet covered. Throws
// precondition if the window is not a subgroup.
std::vector<std::vector<Element>> subgroup_chain(const Group& G, const Window& W);

}  // namespace coarse
