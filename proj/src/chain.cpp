#include "switchmix/chain.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "switchmix/degseq.hpp"
#include "switchmix/errors.hpp"

namespace switchmix {

const char* to_string(Variant v) { return v == Variant::exact_nonadjacent ? "exact" : "all-pairs"; }

Variant parse_variant(const std::string& text) {
  if (text == "exact" || text == "exact_nonadjacent") return Variant::exact_nonadjacent;
  if (text == "all-pairs" || text == "all_pairs") return Variant::all_pairs;
  throw std::invalid_argument("unknown variant '" + text + "' (expected exact or all-pairs)");
}

namespace {

bool disjoint(const Edge& e, const Edge& h) { return e.u != h.u && e.u != h.v && e.v != h.u && e.v != h.v; }

}  // namespace

UndirectedChain::UndirectedChain(const Graph& start, Variant variant) : variant_(variant) {
  BigInt m2 = 0;
  for (int d : start.degrees()) m2 += BigInt(d) * (d - 1);
  all_ = choose2(BigInt(start.edge_count()));
  a_ = all_ - m2 / 2;
  if (all_ == 0) throw FrozenChain("fewer than two edges: the switch chain cannot move");
  if (variant_ == Variant::exact_nonadjacent && a_ == 0) {
    throw FrozenChain("a(d) = 0: every pair of edges shares a vertex, so the switch chain cannot move");
  }
  denominator_ = 3 * (variant_ == Variant::exact_nonadjacent ? a_ : all_);
  if (a_ > 0) {
    const BigInt cap = 10 * ((all_ + a_ - 1) / a_);
    retry_cap_ = cap > std::numeric_limits<std::uint64_t>::max() ? std::numeric_limits<std::uint64_t>::max()
                                                                  : cap.convert_to<std::uint64_t>();
  }
}

std::pair<std::size_t, std::size_t> UndirectedChain::draw_nonadjacent(const Graph& g, Rng& rng) const {
  for (std::uint64_t attempt = 0; attempt < retry_cap_; ++attempt) {
    const auto pick = random_distinct_edge_pair(g, rng);
    if (disjoint(g.edge(pick.first), g.edge(pick.second))) return pick;
  }
  // Rejection was unlucky; draw from the explicit list instead.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    for (std::size_t j = i + 1; j < g.edge_count(); ++j) {
      if (disjoint(g.edge(i), g.edge(j))) pairs.emplace_back(i, j);
    }
  }
  if (pairs.empty()) throw FrozenChain("no pair of non-adjacent edges in the current state");
  return pairs[static_cast<std::size_t>(uniform_below(rng, pairs.size()))];
}

bool UndirectedChain::step(Graph& g, Rng& rng) const {
  std::pair<std::size_t, std::size_t> pick;
  if (variant_ == Variant::exact_nonadjacent) {
    pick = draw_nonadjacent(g, rng);
  } else {
    pick = random_distinct_edge_pair(g, rng);
  }
  const Edge e = g.edge(pick.first), h = g.edge(pick.second);
  const auto matching = uniform_below(rng, 3);
  if (!disjoint(e, h) || matching == 0) return false;

  const std::array<Edge, 2> add = matching == 1 ? std::array<Edge, 2>{make_edge(e.u, h.u), make_edge(e.v, h.v)}
                                                : std::array<Edge, 2>{make_edge(e.u, h.v), make_edge(e.v, h.u)};
  if (g.has_edge(add[0].u, add[0].v) || g.has_edge(add[1].u, add[1].v)) return false;
  g.replace_edges({e, h}, add);
  return true;
}

DirectedChain::DirectedChain(const Digraph& start) : denominator_(choose2(BigInt(start.arc_count()))) {
  if (denominator_ == 0) throw FrozenChain("fewer than two arcs: the switch chain cannot move");
}

bool DirectedChain::step(Digraph& g, Rng& rng) const {
  const auto [i, j] = random_distinct_arc_pair(g, rng);
  const Arc x = g.arc(i), y = g.arc(j);
  if (x.tail == y.tail || x.tail == y.head || x.head == y.tail || x.head == y.head) return false;
  if (g.has_arc(x.tail, y.head) || g.has_arc(y.tail, x.head)) return false;
  g.replace_arcs({x, y}, {Arc{x.tail, y.head}, Arc{y.tail, x.head}});
  return true;
}

bool step_undirected(Graph& g, Rng& rng, Variant variant) { return UndirectedChain(g, variant).step(g, rng); }

bool step_directed(Digraph& g, Rng& rng) { return DirectedChain(g).step(g, rng); }

namespace {

void check_degrees(const Graph& g, const std::vector<int>& target) {
  g.audit();
  if (g.degrees() != target) throw std::logic_error("degree sequence drifted during the run");
}

void check_degrees(const Digraph& g, const std::vector<DegreePair>& target) {
  g.audit();
  for (int v = 0; v < g.n(); ++v) {
    if (g.in_degree(v) != target[v].in || g.out_degree(v) != target[v].out) {
      throw std::logic_error("semi-degrees drifted during the run");
    }
  }
}

std::vector<int> degree_snapshot(const Graph& g) { return g.degrees(); }

std::vector<DegreePair> degree_snapshot(const Digraph& g) {
  std::vector<DegreePair> out;
  for (int v = 0; v < g.n(); ++v) out.push_back({g.in_degree(v), g.out_degree(v)});
  return out;
}

template <class State, class Chain>
void drive(const ChainRun<State>& run, const Chain& chain, std::size_t count, const std::function<void(const State&)>& emit) {
  if (run.thinning == 0) throw std::invalid_argument("thinning must be at least 1");
  Rng rng(run.seed);
  State state = run.start;
  const auto target = degree_snapshot(state);
  std::uint64_t t = 0;
  auto advance = [&](std::uint64_t k) {
    for (std::uint64_t s = 0; s < k; ++s) {
      chain.step(state, rng);
      ++t;
      if (run.audit_interval != 0 && t % run.audit_interval == 0) check_degrees(state, target);
    }
  };
  advance(run.steps);
  for (std::size_t k = 0; k < count; ++k) {
    if (k > 0) advance(run.thinning);
    emit(state);
  }
}

}  // namespace

void run_chain(const ChainRun<Graph>& run, std::size_t count, const std::function<void(const Graph&)>& emit) {
  drive(run, UndirectedChain(run.start, run.variant), count, emit);
}

void run_chain(const ChainRun<Digraph>& run, std::size_t count, const std::function<void(const Digraph&)>& emit) {
  drive(run, DirectedChain(run.start), count, emit);
}

std::vector<Graph> sample(const ChainRun<Graph>& run, std::size_t count) {
  std::vector<Graph> out;
  out.reserve(count);
  run_chain(run, count, [&](const Graph& g) { out.push_back(g); });
  return out;
}

std::vector<Digraph> sample(const ChainRun<Digraph>& run, std::size_t count) {
  std::vector<Digraph> out;
  out.reserve(count);
  run_chain(run, count, [&](const Digraph& g) { out.push_back(g); });
  return out;
}

std::size_t count_switches(const Graph& g) {
  std::size_t k = 0;
  for_each_switch(g, [&](const auto&, const auto&) { ++k; });
  return k;
}

std::size_t count_switches(const Digraph& g) {
  std::size_t k = 0;
  for_each_switch(g, [&](const auto&, const auto&) { ++k; });
  return k;
}

namespace {

// Number of edges of x missing from y (same edge count assumed).
std::size_t missing(const Graph& x, const Graph& y) {
  return static_cast<std::size_t>(
      std::count_if(x.edges().begin(), x.edges().end(), [&](const Edge& e) { return !y.has_edge(e.u, e.v); }));
}

std::size_t missing(const Digraph& x, const Digraph& y) {
  return static_cast<std::size_t>(
      std::count_if(x.arcs().begin(), x.arcs().end(), [&](const Arc& a) { return !y.has_arc(a.tail, a.head); }));
}

bool same_degrees(const Graph& x, const Graph& y) { return x.n() == y.n() && x.degrees() == y.degrees(); }

bool same_degrees(const Digraph& x, const Digraph& y) {
  return x.n() == y.n() && degree_snapshot(x) == degree_snapshot(y);
}

// With equal degrees, two states whose edge sets differ in exactly two edges
// each way are always related by a single switch: removing two edges that
// share a vertex leaves no other way to restore the degrees, and a directed
// exchange that is not a switch would need a loop.
template <class State>
Rational probability(const State& from, const State& to, const BigInt& denominator) {
  if (from == to) return Rational(1) - Rational(BigInt(count_switches(from)), denominator);
  return missing(from, to) == 2 ? Rational(BigInt(1), denominator) : Rational(0);
}

}  // namespace

Rational transition_probability(const Graph& from, const Graph& to, Variant variant) {
  if (!same_degrees(from, to)) throw std::invalid_argument("states have different degree sequences");
  return probability(from, to, UndirectedChain(from, variant).denominator());
}

Rational transition_probability(const Digraph& from, const Digraph& to) {
  if (!same_degrees(from, to)) throw std::invalid_argument("states have different degree sequences");
  return probability(from, to, DirectedChain(from).denominator());
}

}  // namespace switchmix
