#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "switchmix/chain.hpp"
#include "switchmix/degseq.hpp"
#include "switchmix/encoding.hpp"
#include "switchmix/graph.hpp"
#include "switchmix/numeric.hpp"

namespace switchmix {

inline constexpr std::size_t kDefaultStateCap = 1'000'000;

/// All realizations, each exactly once, sorted by their sorted edge (arc)
/// lists. Throws CapExceeded as soon as more than `cap` states are found.
std::vector<Graph> enum_states(const DegreeSequence& d, std::size_t cap = kDefaultStateCap);
std::vector<Digraph> enum_states(const DirectedDegreeSequence& dd, std::size_t cap = kDefaultStateCap);

/// Adjacency bit set of a state: bit u*n+v for every edge {u<v} or arc (u,v).
using StateKey = std::vector<std::uint64_t>;

StateKey state_key(const Graph& g);
StateKey state_key(const Digraph& g);

struct StateKeyHash {
  std::size_t operator()(const StateKey& k) const noexcept;
};

/// Index of each state by key, for neighbour lookups.
class StateIndex {
 public:
  template <class State>
  explicit StateIndex(const std::vector<State>& states) {
    index_.reserve(states.size());
    for (std::size_t i = 0; i < states.size(); ++i) index_.emplace(state_key(states[i]), i);
  }

  std::optional<std::size_t> find(const StateKey& key) const {
    const auto it = index_.find(key);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t size() const { return index_.size(); }

 private:
  std::unordered_map<StateKey, std::size_t, StateKeyHash> index_;
};

/// Switch neighbours of every state, as indices into `states` (ascending).
/// The states must be the complete space of one degree sequence.
std::vector<std::vector<std::uint32_t>> switch_adjacency(const std::vector<Graph>& states);
std::vector<std::vector<std::uint32_t>> switch_adjacency(const std::vector<Digraph>& states);

/// The chain's one-step law on an enumerated space in integer form: each
/// switch neighbour gets numerator 1, the diagonal gets
/// denominator - (neighbour count).
struct SparseTransitions {
  BigInt denominator = 1;
  std::vector<std::vector<std::uint32_t>> neighbours;
  std::vector<BigInt> diagonal;

  std::size_t size() const { return neighbours.size(); }
  Rational at(std::size_t i, std::size_t j) const;
  /// Dense exact matrix. Intended for small spaces.
  std::vector<std::vector<Rational>> dense() const;
};

/// Frozen or single-state spaces get the 1x1 identity with denominator 1.
SparseTransitions transitions(const std::vector<Graph>& states, Variant variant = Variant::exact_nonadjacent);
SparseTransitions transitions(const std::vector<Digraph>& states);

struct AnalyzeOptions {
  std::size_t start = 0;
  double eps = 0.01;
  /// Length of the TV curve from `start`. When 0 the curve runs until it
  /// first drops to eps or below.
  std::size_t horizon = 0;
  Variant variant = Variant::exact_nonadjacent;
  std::size_t cap = kDefaultStateCap;
  /// Worst-start mixing time is computed exactly up to this many states and
  /// in double precision above it.
  std::size_t exact_mixing_limit = 512;
  /// Safety stop for the TV iterations.
  std::size_t max_steps = 1'000'000;
};

template <class State>
struct StateSpaceAnalysis {
  std::vector<State> states;
  SparseTransitions P;
  std::size_t start = 0;
  /// TV(t) for t = 0, 1, ..., exact.
  std::vector<Rational> tv_curve;
  /// 1 - lambda_2, by power iteration on the lazy matrix (P + I) / 2.
  double spectral_gap = 0.0;
  /// Least T with TV(t) <= eps for all t >= T, worst start.
  std::size_t mixing_time = 0;
  bool mixing_time_exact = true;
  /// The start that attains mixing_time.
  std::size_t worst_start = 0;
};

StateSpaceAnalysis<Graph> analyze(const DegreeSequence& d, const AnalyzeOptions& options = {});
StateSpaceAnalysis<Digraph> analyze(const DirectedDegreeSequence& dd, const AnalyzeOptions& options = {});

/// Building blocks of analyze, usable on any SparseTransitions.

/// TV(t) from `start` for t = 0..horizon (inclusive).
std::vector<Rational> tv_curve(const SparseTransitions& P, std::size_t start, std::size_t horizon);
/// Least T with TV(T) <= eps from `start`, exact. Throws std::runtime_error
/// after max_steps.
std::size_t mixing_time_from(const SparseTransitions& P, std::size_t start, const Rational& eps, std::size_t max_steps);
/// Same in double precision.
std::size_t mixing_time_from_approx(const SparseTransitions& P, std::size_t start, double eps, std::size_t max_steps);
double spectral_gap(const SparseTransitions& P, double tolerance = 1e-12);

struct EncodingEnumLimits {
  int max_vertices = 6;
  /// Undirected: degree sum. Directed: arc count.
  int max_size = 14;
  std::size_t cap = kDefaultStateCap;
};

/// Every encoding L with L + Z in {0,1,2} entrywise, the degrees of Z and
/// good defects (catalog match, plus the degree conditions when
/// undirected), in lexicographic order of the upper triangle (undirected)
/// or of the off-diagonal entries (directed). Z must be defect-free.
/// Throws std::invalid_argument beyond the limits and CapExceeded past
/// the cap.
std::vector<Encoding> enum_good_encodings(const Encoding& Z, const EncodingEnumLimits& limits = {});

/// Exact rational value of a double.
Rational exact_rational(double x);

}  // namespace switchmix
