#pragma once

#include <optional>
#include <vector>

#include "switchmix/encoding.hpp"
#include "switchmix/random.hpp"

namespace switchmix {

/// Reverse of a phase switch: undoes P1 / P2 / P3 (or A / B) and so adds
/// defects instead of removing them.
enum class ReverseOp { two_and_minus, two, minus };

struct InjectOptions {
  /// Keep only results whose defects match the catalog (and, undirected,
  /// satisfy the degree conditions). When false any consistent result goes.
  bool require_good = true;
  /// Random completions tried per defect position.
  int trials_per_position = 50;
};

struct InjectedEncoding {
  Encoding L;
  /// Reverse operations in the order applied, with their tuples.
  std::vector<std::pair<ReverseOp, SwitchTuple>> ops;
};

/// Starting from W (defect-free, consistent with the defect-free Z, same
/// mode and degrees), applies `ops` one after another. Every intermediate
/// encoding stays consistent with Z, and good when requested. Returns
/// nothing when some operation has no admissible placement.
std::optional<InjectedEncoding> inject_defects(const Encoding& W, const Encoding& Z, const std::vector<ReverseOp>& ops,
                                               Rng& rng, const InjectOptions& options = {});

/// A random operation list reaching profile (p, q) with `both` operations of
/// kind two_and_minus (undirected only), shuffled.
std::vector<ReverseOp> reverse_plan(int p, int q, int both, Rng& rng);

}  // namespace switchmix
