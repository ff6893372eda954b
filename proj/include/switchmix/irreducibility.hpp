#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "switchmix/degseq.hpp"
#include "switchmix/enumerate.hpp"
#include "switchmix/graph.hpp"

namespace switchmix {

/// LaMar's classes of the vertices outside a directed 3-cycle U.
struct LamarPartition {
  std::array<int, 3> U{};
  /// No arcs between x and U in either direction.
  std::vector<int> U0;
  /// All arcs from x into U, none back.
  std::vector<int> Uminus;
  /// No arcs from x into U, all arcs back.
  std::vector<int> Uplus;
  /// All six arcs.
  std::vector<int> Upm;
  /// Everything else outside U.
  std::vector<int> leftover;
};

/// True iff the digraph induced on U is exactly a directed 3-cycle.
bool induces_directed_triangle(const Digraph& g, const std::array<int, 3>& U);

/// Vertex triples (ascending) whose induced digraph is a directed 3-cycle.
std::vector<std::array<int, 3>> directed_triangles(const Digraph& g);

/// Throws std::invalid_argument unless U induces a directed 3-cycle.
LamarPartition lamar_classes(const Digraph& g, const std::array<int, 3>& U);

struct UsefulWitness {
  enum class Kind { neighbour, arc };
  Kind kind = Kind::neighbour;
  /// The vertex (neighbour) or the tail (arc).
  int x = -1;
  /// The head; -1 for a neighbour.
  int y = -1;
  /// 1 for a present arc from U0/U+ into U0/U-, 2 for a missing arc from
  /// U-/U+- to U+/U+-; 0 for a neighbour.
  int condition = 0;
};

std::string describe(const UsefulWitness& w);

/// Least leftover vertex if any, else the first useful arc in lexicographic
/// order of (x, y), else nothing. Same precondition as lamar_classes.
std::optional<UsefulWitness> find_useful(const Digraph& g, const std::array<int, 3>& U);

struct ConnectivityReport {
  std::size_t state_count = 0;
  /// Unordered pairs of states one switch apart.
  std::size_t transition_count = 0;
  std::size_t component_count = 0;
  /// Descending.
  std::vector<std::size_t> component_sizes;
  /// Component id of each enumerated state (ids follow first appearance).
  std::vector<std::size_t> component_of;
  bool irreducible = false;
};

/// Connected components of the switch graph on a complete state space.
ConnectivityReport switch_components(const std::vector<std::vector<std::uint32_t>>& adjacency);

/// Enumerates the space and finds its components. Throws CapExceeded, and
/// NotRealizable for sequences without realizations.
ConnectivityReport switch_connectivity(const DegreeSequence& d, std::size_t cap = kDefaultStateCap);
ConnectivityReport switch_connectivity(const DirectedDegreeSequence& dd, std::size_t cap = kDefaultStateCap);

/// A decision procedure working from the sequence alone. Returning nothing
/// defers to enumeration.
using IrreducibilityDecider = std::function<std::optional<bool>(const DirectedDegreeSequence&)>;

bool is_switch_irreducible(const DirectedDegreeSequence& dd, std::size_t cap = kDefaultStateCap,
                           const IrreducibilityDecider& decider = {});

}  // namespace switchmix
