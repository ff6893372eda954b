#pragma once

// Random test instances built from the library's own constructors and
// chains. These produce inputs; they are not oracles.

#include <optional>
#include <vector>

#include "switchmix/degseq.hpp"
#include "switchmix/encoding.hpp"
#include "switchmix/encoding_generator.hpp"
#include "switchmix/graph.hpp"
#include "switchmix/random.hpp"

namespace instances {

/// Degrees of a G(n, p) graph; always graphical.
switchmix::DegreeSequence random_graphical(int n, double p, switchmix::Rng& rng);

/// A realization after `steps` chain transitions from the deterministic one.
switchmix::Graph scrambled(const switchmix::DegreeSequence& d, std::uint64_t steps, switchmix::Rng& rng);
switchmix::Digraph scrambled(const switchmix::DirectedDegreeSequence& dd, std::uint64_t steps, switchmix::Rng& rng);

/// Degrees with d_min >= 1, d_max = dmax and 9 d_max^2 <= M: a random
/// dmax-regular graph with some edges removed.
switchmix::DegreeSequence theorem1_degrees(int dmax, switchmix::Rng& rng);

/// Semi-degrees with r_min >= 1, r_max = 2 and 16 r_max^2 <= m.
switchmix::DirectedDegreeSequence theorem2_degrees(switchmix::Rng& rng);

struct EncodingInstance {
  switchmix::Encoding Z;
  switchmix::Encoding L;
  int p = 0;
  int q = 0;
};

/// A consistent encoding with profile (p, q) over a random Z. Tries fresh W
/// starts up to `attempts` times.
std::optional<EncodingInstance> encoding_with_profile(const switchmix::Graph& Z, int p, int q, int both,
                                                      switchmix::Rng& rng, bool require_good = true,
                                                      int attempts = 20);
std::optional<EncodingInstance> encoding_with_profile(const switchmix::Digraph& Z, int p, int q,
                                                      switchmix::Rng& rng, int attempts = 20);

}  // namespace instances
