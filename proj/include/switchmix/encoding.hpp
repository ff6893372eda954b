#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "switchmix/graph.hpp"

namespace switchmix {

enum class Mode { undirected, directed };

const char* to_string(Mode m);

/// Square matrix with entries in {-1, 0, 1, 2} and zero diagonal. In
/// undirected mode the matrix is kept symmetric: set(i, j, x) writes both
/// (i, j) and (j, i). Degrees are the row sums (undirected), or the row sums
/// (out) and column sums (in) for directed encodings.
class Encoding {
 public:
  Encoding() = default;
  Encoding(Mode mode, int n);

  static Encoding from_graph(const Graph& g);
  static Encoding from_digraph(const Digraph& g);

  Mode mode() const { return mode_; }
  int n() const { return n_; }
  int at(int i, int j) const { return entries_[index(i, j)]; }
  /// Throws std::invalid_argument for values outside {-1,0,1,2}, diagonal
  /// writes of a non-zero value, or out-of-range vertices.
  void set(int i, int j, int value);

  /// Row sums. For undirected encodings these are the degrees.
  std::vector<int> row_sums() const;
  std::vector<int> column_sums() const;
  std::int64_t total() const;

  bool defect_free() const;
  /// Reads a defect-free encoding as a (di)graph. Throws std::logic_error
  /// when defects remain or the mode does not match.
  Graph to_graph() const;
  Digraph to_digraph() const;

  friend bool operator==(const Encoding&, const Encoding&) = default;

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j);
  }
  void check_vertex(int v) const;

  Mode mode_ = Mode::undirected;
  int n_ = 0;
  std::vector<std::int8_t> entries_;
};

/// L = G + G' - Z entrywise. Throws std::invalid_argument when the three
/// states do not share a vertex count and degree sequence.
Encoding encode(const Graph& G, const Graph& Gp, const Graph& Z);
Encoding encode(const Digraph& G, const Digraph& Gp, const Digraph& Z);

struct DefectProfile {
  /// Number of 2-defects (edges counted once, arcs individually).
  int p = 0;
  /// Number of (-1)-defects.
  int q = 0;
  /// Defect positions; undirected pairs are stored with first < second.
  std::vector<std::pair<int, int>> two_defects;
  std::vector<std::pair<int, int>> minus_defects;
  /// Undirected: incident 2-defects / (-1)-defects per vertex.
  std::vector<int> zeta, eta;
  /// Directed: defects per vertex as head (in) and as tail (out).
  std::vector<int> zeta_in, zeta_out, eta_in, eta_out;
};

DefectProfile defect_profile(const Encoding& L);

struct Validation {
  /// The labelled defect graph embeds into one of the catalog configurations.
  bool valid = false;
  /// Valid, plus the degree conditions on defect endpoints (undirected).
  bool good = false;
  /// Every entry of L + Z lies in {0, 1, 2}.
  bool consistent = false;
};

/// Z must have the same mode and size as L.
Validation validate(const Encoding& L, const Encoding& Z);

/// Catalog check only (valid / good), for callers without a Z.
bool is_valid_encoding(const Encoding& L);
bool is_good_encoding(const Encoding& L);

using SwitchTuple = std::array<int, 6>;

/// (a1,b1,a2,b2,a3,b3): decrements (a1,b1), (a2,b2), (a3,b3) and increments
/// (a2,b1), (a3,b2), (a1,b3). Throws std::invalid_argument, leaving L
/// unchanged, unless the six vertices are distinct and every touched entry
/// stays in {-1,0,1,2}.
void apply_3switch(Encoding& L, const SwitchTuple& t);

enum class Stage { second_pair, third_pair };

struct ChoiceCount {
  std::int64_t exact = 0;
  std::int64_t bound = 0;
};

/// anchors = {a1, b1} for second_pair, {a1, b1, a2, b2} for third_pair.
/// second_pair counts ordered (a2, b2) with L(a2,b2) = 1, L(a2,b1) = 0 and
/// a1, b1, a2, b2 distinct. third_pair counts ordered (a3, b3) with
/// L(a3,b3) = 1, L(a1,b3) = L(a3,b2) = 0 and all six distinct. Both stages
/// need L(a1,b1) != 0; third_pair also needs L(a2,b2) = 1 and distinct
/// anchors. Violations throw std::invalid_argument.
ChoiceCount choice_count_and_bound(const Encoding& L, std::span<const int> anchors, Stage stage);

enum class Phase { P1, P2, P3, A, B };

const char* to_string(Phase p);

/// Lexicographically least tuple of the phase's shape, or nothing.
/// P1: L(a1,b1) = 2, L(a2,b1) = -1.  P2 / A: L(a1,b1) = 2, L(a2,b1) = 0.
/// P3 / B: L(a1,b1) = 1, L(a2,b1) = -1. Every phase also needs
/// L(a2,b2) = L(a3,b3) = 1 and L(a3,b2) = L(a1,b3) = 0. P1-P3 are for
/// undirected encodings, A and B for directed ones; the profile
/// precondition of each phase is checked and nothing is returned if it fails.
std::optional<SwitchTuple> find_phase_switch(const Encoding& L, Phase phase);

struct RepairStep {
  Phase phase;
  SwitchTuple tuple;
};

struct RepairResult {
  Encoding encoding;
  std::vector<RepairStep> log;
  /// Set when no phase could make progress; holds the (p, q) reached.
  std::optional<std::pair<int, int>> stuck;
  bool ok() const { return !stuck.has_value(); }
};

/// Undirected: P1 while p + q = 4, then P2 while p >= 1, then P3; a phase
/// that finds nothing falls through to the next one whose precondition
/// holds. Directed: A while p >= 1, then B.
RepairResult repair(const Encoding& L);

/// Checks the edge-count and per-vertex neighbourhood identities. Returns an
/// empty string on success, otherwise a description of the first failure.
std::string check_counting_identities(const Encoding& L);

/// Dense CSV, one row per line.
void write_encoding_csv(std::ostream& out, const Encoding& L);
/// Reads the CSV; the mode is not stored in the CSV and must be supplied.
/// Undirected input must be symmetric.
Encoding read_encoding_csv(std::istream& in, Mode mode);

/// JSON sidecar: {"schema_version", "mode", degrees or in/out degrees,
/// "profile": {"p", "q"}}.
std::string encoding_sidecar(const Encoding& L);
/// Parses a sidecar and checks it against the matrix; throws
/// std::invalid_argument on any mismatch. Returns the sidecar's mode.
Mode check_sidecar(const std::string& sidecar, const Encoding& L);
/// Mode named in a sidecar, without a matrix to compare against.
Mode sidecar_mode(const std::string& sidecar);

}  // namespace switchmix
