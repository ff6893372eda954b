#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "switchmix/random.hpp"

namespace switchmix {

/// Unordered vertex pair, stored with u < v. Vertices are 0-indexed.
struct Edge {
  int u = 0;
  int v = 0;
  auto operator<=>(const Edge&) const = default;
};

/// Normalizes the endpoint order.
inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Ordered vertex pair (tail -> head).
struct Arc {
  int tail = 0;
  int head = 0;
  auto operator<=>(const Arc&) const = default;
};

namespace detail {

/// Indexed array of vertex pairs with a hash index for O(1) membership,
/// O(1) uniform draws and O(1) swap-with-last deletion.
template <class Pair>
class PairSet {
 public:
  static std::uint64_t key(const Pair& p) {
    const auto [a, b] = as_ints(p);
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) | static_cast<std::uint32_t>(b);
  }
  static std::pair<int, int> as_ints(const Edge& e) { return {e.u, e.v}; }
  static std::pair<int, int> as_ints(const Arc& a) { return {a.tail, a.head}; }

  bool contains(const Pair& p) const { return index_.contains(key(p)); }
  std::size_t size() const { return items_.size(); }
  const Pair& operator[](std::size_t i) const { return items_[i]; }
  std::span<const Pair> items() const { return items_; }

  void insert(const Pair& p) {
    index_.emplace(key(p), items_.size());
    items_.push_back(p);
  }

  void erase(const Pair& p) {
    const auto it = index_.find(key(p));
    const std::size_t slot = it->second;
    index_.erase(it);
    const std::size_t last = items_.size() - 1;
    if (slot != last) {
      items_[slot] = items_[last];
      index_[key(items_[slot])] = slot;
    }
    items_.pop_back();
  }

  /// True iff the array and the hash index describe the same set.
  bool consistent() const {
    if (index_.size() != items_.size()) return false;
    for (std::size_t i = 0; i < items_.size(); ++i) {
      const auto it = index_.find(key(items_[i]));
      if (it == index_.end() || it->second != i) return false;
    }
    return true;
  }

 private:
  std::vector<Pair> items_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

}  // namespace detail

/// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  explicit Graph(int n = 0);
  /// Throws std::invalid_argument on loops, duplicates or out-of-range vertices.
  Graph(int n, std::span<const Edge> edges);

  int n() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const Edge& edge(std::size_t i) const { return edges_[i]; }
  /// Edges in storage order. Storage order changes under removal.
  std::span<const Edge> edges() const { return edges_.items(); }
  int degree(int v) const { return degree_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& degrees() const { return degree_; }

  bool has_edge(int a, int b) const;
  void add_edge(int a, int b);
  void remove_edge(int a, int b);

  /// Removes the two edges in `remove` and inserts the two in `add`. The
  /// endpoint multisets must agree so every degree is preserved. On any
  /// violated precondition throws std::invalid_argument and leaves the graph
  /// untouched.
  void replace_edges(const std::array<Edge, 2>& remove, const std::array<Edge, 2>& add);

  /// Canonical form: edges sorted lexicographically.
  std::vector<Edge> sorted_edges() const;

  /// Recomputes degrees and re-checks the hash index; throws std::logic_error
  /// on any disagreement, loop or duplicate.
  void audit() const;

  friend bool operator==(const Graph& x, const Graph& y);

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  detail::PairSet<Edge> edges_;
  std::vector<int> degree_;
};

/// Simple digraph on vertices 0..n-1. No loops or repeated arcs;
/// antiparallel pairs (u,v),(v,u) are allowed.
class Digraph {
 public:
  explicit Digraph(int n = 0);
  Digraph(int n, std::span<const Arc> arcs);

  int n() const { return n_; }
  std::size_t arc_count() const { return arcs_.size(); }
  const Arc& arc(std::size_t i) const { return arcs_[i]; }
  std::span<const Arc> arcs() const { return arcs_.items(); }
  int in_degree(int v) const { return in_degree_[static_cast<std::size_t>(v)]; }
  int out_degree(int v) const { return out_degree_[static_cast<std::size_t>(v)]; }

  bool has_arc(int tail, int head) const;
  void add_arc(int tail, int head);
  void remove_arc(int tail, int head);

  /// Same contract as Graph::replace_edges, for in- and out-degrees.
  void replace_arcs(const std::array<Arc, 2>& remove, const std::array<Arc, 2>& add);

  std::vector<Arc> sorted_arcs() const;
  void audit() const;

  friend bool operator==(const Digraph& x, const Digraph& y);

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  detail::PairSet<Arc> arcs_;
  std::vector<int> in_degree_;
  std::vector<int> out_degree_;
};

/// Uniformly random unordered pair of distinct edge indices, returned with
/// first < second. Throws std::invalid_argument with fewer than two edges.
std::pair<std::size_t, std::size_t> random_distinct_edge_pair(const Graph& g, Rng& rng);
std::pair<std::size_t, std::size_t> random_distinct_arc_pair(const Digraph& g, Rng& rng);

/// Uniform unordered pair of distinct indices out of `count`.
std::pair<std::size_t, std::size_t> random_distinct_index_pair(std::size_t count, Rng& rng);

}  // namespace switchmix
