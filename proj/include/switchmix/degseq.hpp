#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "switchmix/numeric.hpp"

namespace switchmix {

/// Target degrees of an undirected simple graph on vertices 0..n-1.
/// Immutable; the summary statistics are computed once at construction.
class DegreeSequence {
 public:
  /// Throws std::invalid_argument if empty or any degree is negative.
  explicit DegreeSequence(std::vector<int> degrees);

  int n() const { return static_cast<int>(degrees_.size()); }
  int operator[](int v) const { return degrees_[static_cast<std::size_t>(v)]; }
  std::span<const int> degrees() const { return degrees_; }

  /// M, the sum of the degrees.
  std::int64_t total() const { return total_; }
  /// M2 = sum of d_j (d_j - 1).
  std::int64_t m2() const { return m2_; }
  int min_degree() const { return min_; }
  int max_degree() const { return max_; }

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<int> degrees_;
  std::int64_t total_ = 0;
  std::int64_t m2_ = 0;
  int min_ = 0;
  int max_ = 0;
};

struct DegreeStats {
  std::int64_t M = 0;
  std::int64_t M2 = 0;
  /// Number of unordered pairs of distinct non-adjacent edges in any
  /// realization, C(M/2, 2) - M2/2. Empty when M is odd.
  std::optional<BigInt> a;
  int d_min = 0;
  int d_max = 0;
};

DegreeStats stats(const DegreeSequence& d);

/// Erdős–Gallai test.
bool is_graphical(const DegreeSequence& d);

struct Classification {
  bool graphical = false;
  /// Graphical and (d_max - d_min + 1)^2 <= 4 d_min (n - d_max + 1).
  bool stable = false;
  /// Graphical, d_min >= 1, d_max >= 3 and 9 d_max^2 <= M.
  bool theorem1_applicable = false;
};

Classification classify(const DegreeSequence& d);

struct DegreePair {
  int in = 0;
  int out = 0;
  friend bool operator==(const DegreePair&, const DegreePair&) = default;
};

/// Target (in, out) degrees of a simple digraph on vertices 0..n-1.
class DirectedDegreeSequence {
 public:
  /// Throws std::invalid_argument if empty or any semi-degree is negative.
  /// Unequal in/out totals are accepted here and rejected by classify_directed.
  explicit DirectedDegreeSequence(std::vector<DegreePair> pairs);

  int n() const { return static_cast<int>(pairs_.size()); }
  const DegreePair& operator[](int v) const { return pairs_[static_cast<std::size_t>(v)]; }
  std::span<const DegreePair> pairs() const { return pairs_; }
  int in(int v) const { return (*this)[v].in; }
  int out(int v) const { return (*this)[v].out; }

  std::int64_t in_total() const { return in_total_; }
  std::int64_t out_total() const { return out_total_; }
  bool balanced() const { return in_total_ == out_total_; }
  /// Number of arcs m (the out-degree total).
  std::int64_t arcs() const { return out_total_; }
  /// Minimum / maximum over all 2n semi-degrees.
  int r_min() const { return r_min_; }
  int r_max() const { return r_max_; }

  friend bool operator==(const DirectedDegreeSequence&, const DirectedDegreeSequence&) = default;

 private:
  std::vector<DegreePair> pairs_;
  std::int64_t in_total_ = 0;
  std::int64_t out_total_ = 0;
  int r_min_ = 0;
  int r_max_ = 0;
};

/// Fulkerson–Chen–Anstee test. False when the totals differ.
bool is_digraphical(const DirectedDegreeSequence& dd);

struct DirectedClassification {
  bool digraphical = false;
  /// r_min >= 1, r_max >= 2 and 16 r_max^2 <= m. Switch-irreducibility is
  /// decided separately (see irreducibility.hpp).
  bool theorem2_degree_ok = false;
};

/// Throws std::invalid_argument when the in- and out-degree totals differ.
DirectedClassification classify_directed(const DirectedDegreeSequence& dd);

}  // namespace switchmix
