#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "switchmix/graph.hpp"
#include "switchmix/numeric.hpp"
#include "switchmix/random.hpp"

namespace switchmix {

enum class Variant {
  /// Draw uniformly among the a(d) pairs of distinct non-adjacent edges.
  exact_nonadjacent,
  /// Draw among all pairs of distinct edges and hold on adjacent pairs.
  all_pairs,
};

const char* to_string(Variant v);
/// Accepts "exact" / "exact_nonadjacent" and "all-pairs" / "all_pairs".
Variant parse_variant(const std::string& text);

/// Switch chain on Ω(d). The degree sequence is taken from the start state
/// handed to the constructor; the step functions assume every later state
/// has the same degrees.
class UndirectedChain {
 public:
  /// Throws FrozenChain when no proposal can ever move: a(d) = 0 for the
  /// exact variant, or fewer than two edges for either variant.
  UndirectedChain(const Graph& start, Variant variant);

  Variant variant() const { return variant_; }
  const BigInt& nonadjacent_pairs() const { return a_; }
  const BigInt& all_pairs() const { return all_; }
  /// Common denominator of every off-diagonal transition probability:
  /// 3 a(d) (exact) or 3 C(M/2, 2) (all_pairs).
  const BigInt& denominator() const { return denominator_; }
  std::uint64_t retry_cap() const { return retry_cap_; }

  /// One transition, in place. Returns true when the state changed.
  bool step(Graph& g, Rng& rng) const;

 private:
  std::pair<std::size_t, std::size_t> draw_nonadjacent(const Graph& g, Rng& rng) const;

  Variant variant_;
  BigInt a_;
  BigInt all_;
  BigInt denominator_;
  std::uint64_t retry_cap_ = 0;
};

/// Switch chain on Ω(d⃗).
class DirectedChain {
 public:
  /// Throws FrozenChain with fewer than two arcs.
  explicit DirectedChain(const Digraph& start);

  /// C(m, 2).
  const BigInt& denominator() const { return denominator_; }

  bool step(Digraph& g, Rng& rng) const;

 private:
  BigInt denominator_;
};

/// Convenience wrappers that build the chain on every call.
bool step_undirected(Graph& g, Rng& rng, Variant variant = Variant::exact_nonadjacent);
bool step_directed(Digraph& g, Rng& rng);

template <class State>
struct ChainRun {
  State start;
  /// Burn-in before the first sample.
  std::uint64_t steps = 0;
  std::uint64_t seed = 0;
  /// Ignored for digraphs.
  Variant variant = Variant::exact_nonadjacent;
  std::uint64_t thinning = 1;
  /// When non-zero, re-audit the state every this many steps.
  std::uint64_t audit_interval = 0;
};

/// Sample k (0-based) is the state after steps + k * thinning transitions.
/// Throws std::invalid_argument when thinning is 0 and propagates FrozenChain.
void run_chain(const ChainRun<Graph>& run, std::size_t count, const std::function<void(const Graph&)>& emit);
void run_chain(const ChainRun<Digraph>& run, std::size_t count, const std::function<void(const Digraph&)>& emit);

std::vector<Graph> sample(const ChainRun<Graph>& run, std::size_t count);
std::vector<Digraph> sample(const ChainRun<Digraph>& run, std::size_t count);

/// Exact one-step probability. Off the diagonal: 1/denominator for states
/// one switch apart, 0 otherwise. On the diagonal: 1 minus the off-diagonal
/// mass. Throws std::invalid_argument when the degrees differ and
/// FrozenChain as the chain constructors do.
Rational transition_probability(const Graph& from, const Graph& to, Variant variant = Variant::exact_nonadjacent);
Rational transition_probability(const Digraph& from, const Digraph& to);

/// Calls f(removed, added) once per distinct switch neighbour of g.
template <class F>
void for_each_switch(const Graph& g, F&& f) {
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const Edge e = edges[i], h = edges[j];
      if (e.u == h.u || e.u == h.v || e.v == h.u || e.v == h.v) continue;
      const std::array<std::array<Edge, 2>, 2> matchings{{{make_edge(e.u, h.u), make_edge(e.v, h.v)},
                                                          {make_edge(e.u, h.v), make_edge(e.v, h.u)}}};
      for (const auto& m : matchings) {
        if (!g.has_edge(m[0].u, m[0].v) && !g.has_edge(m[1].u, m[1].v)) f(std::array<Edge, 2>{e, h}, m);
      }
    }
  }
}

template <class F>
void for_each_switch(const Digraph& g, F&& f) {
  const auto arcs = g.arcs();
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    for (std::size_t j = i + 1; j < arcs.size(); ++j) {
      const Arc x = arcs[i], y = arcs[j];
      if (x.tail == y.tail || x.tail == y.head || x.head == y.tail || x.head == y.head) continue;
      if (g.has_arc(x.tail, y.head) || g.has_arc(y.tail, x.head)) continue;
      f(std::array<Arc, 2>{x, y}, std::array<Arc, 2>{Arc{x.tail, y.head}, Arc{y.tail, x.head}});
    }
  }
}

std::size_t count_switches(const Graph& g);
std::size_t count_switches(const Digraph& g);

}  // namespace switchmix
