#include "switchmix/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/container_hash/hash.hpp>

#include "switchmix/errors.hpp"

namespace switchmix {

namespace {

[[noreturn]] void cap_exceeded(std::size_t cap) {
  throw CapExceeded("state space has more than " + std::to_string(cap) + " states");
}

class UndirectedSearch {
 public:
  UndirectedSearch(const DegreeSequence& d, std::size_t cap)
      : n_(d.n()), residual_(d.degrees().begin(), d.degrees().end()), cap_(cap) {}

  std::vector<Graph> run() {
    vertex(0);
    return std::move(found_);
  }

 private:
  void vertex(int v) {
    if (v == n_) {
      if (found_.size() >= cap_) cap_exceeded(cap_);
      found_.emplace_back(n_, edges_);
      return;
    }
    std::vector<int> candidates;
    for (int u = v + 1; u < n_; ++u) {
      if (residual_[u] > 0) candidates.push_back(u);
    }
    const int need = residual_[v];
    if (static_cast<int>(candidates.size()) < need) return;
    residual_[v] = 0;
    choose(v, candidates, 0, need);
    residual_[v] = need;
  }

  void choose(int v, const std::vector<int>& candidates, std::size_t i, int need) {
    if (need == 0) {
      if (feasible_after(v)) vertex(v + 1);
      return;
    }
    if (candidates.size() - i < static_cast<std::size_t>(need)) return;
    const int u = candidates[i];
    --residual_[u];
    edges_.push_back(Edge{v, u});
    choose(v, candidates, i + 1, need - 1);
    edges_.pop_back();
    ++residual_[u];
    choose(v, candidates, i + 1, need);
  }

  // Vertices after v can only meet each other from now on.
  bool feasible_after(int v) const {
    for (int w = v + 1; w < n_; ++w) {
      if (residual_[w] > n_ - v - 2) return false;
    }
    return true;
  }

  int n_;
  std::vector<int> residual_;
  std::size_t cap_;
  std::vector<Edge> edges_;
  std::vector<Graph> found_;
};

class DirectedSearch {
 public:
  DirectedSearch(const DirectedDegreeSequence& dd, std::size_t cap) : n_(dd.n()), cap_(cap) {
    for (const auto& p : dd.pairs()) {
      in_.push_back(p.in);
      out_.push_back(p.out);
    }
  }

  std::vector<Digraph> run() {
    vertex(0);
    return std::move(found_);
  }

 private:
  void vertex(int v) {
    if (v == n_) {
      if (found_.size() >= cap_) cap_exceeded(cap_);
      found_.emplace_back(n_, arcs_);
      return;
    }
    std::vector<int> candidates;
    for (int u = 0; u < n_; ++u) {
      if (u != v && in_[u] > 0) candidates.push_back(u);
    }
    if (static_cast<int>(candidates.size()) < out_[v]) return;
    choose(v, candidates, 0, out_[v]);
  }

  void choose(int v, const std::vector<int>& candidates, std::size_t i, int need) {
    if (need == 0) {
      if (feasible_after(v)) vertex(v + 1);
      return;
    }
    if (candidates.size() - i < static_cast<std::size_t>(need)) return;
    const int u = candidates[i];
    --in_[u];
    arcs_.push_back(Arc{v, u});
    choose(v, candidates, i + 1, need - 1);
    arcs_.pop_back();
    ++in_[u];
    choose(v, candidates, i + 1, need);
  }

  // Remaining in-degree of u must come from tails after v other than u.
  bool feasible_after(int v) const {
    for (int u = 0; u < n_; ++u) {
      const int tails_left = n_ - v - 1 - (u > v ? 1 : 0);
      if (in_[u] > tails_left) return false;
    }
    return true;
  }

  int n_;
  std::vector<int> in_, out_;
  std::size_t cap_;
  std::vector<Arc> arcs_;
  std::vector<Digraph> found_;
};

template <class State, class Canonical>
void sort_canonically(std::vector<State>& states, Canonical canonical) {
  using Key = decltype(canonical(states.front()));
  std::vector<std::pair<Key, std::size_t>> keyed;
  keyed.reserve(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) keyed.emplace_back(canonical(states[i]), i);
  std::sort(keyed.begin(), keyed.end());
  std::vector<State> sorted;
  sorted.reserve(states.size());
  for (const auto& [key, i] : keyed) sorted.push_back(std::move(states[i]));
  states = std::move(sorted);
}

}  // namespace

std::vector<Graph> enum_states(const DegreeSequence& d, std::size_t cap) {
  if (!is_graphical(d)) return {};
  auto states = UndirectedSearch(d, cap).run();
  if (!states.empty()) sort_canonically(states, [](const Graph& g) { return g.sorted_edges(); });
  return states;
}

std::vector<Digraph> enum_states(const DirectedDegreeSequence& dd, std::size_t cap) {
  if (!is_digraphical(dd)) return {};
  auto states = DirectedSearch(dd, cap).run();
  if (!states.empty()) sort_canonically(states, [](const Digraph& g) { return g.sorted_arcs(); });
  return states;
}

namespace {

std::size_t bit(int n, int u, int v) { return static_cast<std::size_t>(u) * static_cast<std::size_t>(n) + static_cast<std::size_t>(v); }

void flip(StateKey& key, std::size_t b) { key[b / 64] ^= std::uint64_t{1} << (b % 64); }

StateKey blank_key(int n) { return StateKey((static_cast<std::size_t>(n) * static_cast<std::size_t>(n) + 63) / 64, 0); }

}  // namespace

StateKey state_key(const Graph& g) {
  StateKey key = blank_key(g.n());
  for (const auto& e : g.edges()) flip(key, bit(g.n(), e.u, e.v));
  return key;
}

StateKey state_key(const Digraph& g) {
  StateKey key = blank_key(g.n());
  for (const auto& a : g.arcs()) flip(key, bit(g.n(), a.tail, a.head));
  return key;
}

std::size_t StateKeyHash::operator()(const StateKey& k) const noexcept { return boost::hash_range(k.begin(), k.end()); }

namespace {

int first(const Edge& e) { return e.u; }
int second(const Edge& e) { return e.v; }
int first(const Arc& a) { return a.tail; }
int second(const Arc& a) { return a.head; }

template <class State>
std::vector<std::vector<std::uint32_t>> adjacency(const std::vector<State>& states) {
  const StateIndex index(states);
  std::vector<std::vector<std::uint32_t>> out(states.size());
  for (std::size_t i = 0; i < states.size(); ++i) {
    const State& s = states[i];
    StateKey scratch = state_key(s);
    auto toggle = [&](const auto& removed, const auto& added) {
      for (const auto& p : removed) flip(scratch, bit(s.n(), first(p), second(p)));
      for (const auto& p : added) flip(scratch, bit(s.n(), first(p), second(p)));
    };
    for_each_switch(s, [&](const auto& removed, const auto& added) {
      toggle(removed, added);
      const auto j = index.find(scratch);
      if (!j) throw std::logic_error("switch leaves the enumerated state space");
      out[i].push_back(static_cast<std::uint32_t>(*j));
      toggle(removed, added);
    });
    std::sort(out[i].begin(), out[i].end());
  }
  return out;
}

}  // namespace

std::vector<std::vector<std::uint32_t>> switch_adjacency(const std::vector<Graph>& states) { return adjacency(states); }

std::vector<std::vector<std::uint32_t>> switch_adjacency(const std::vector<Digraph>& states) { return adjacency(states); }

Rational SparseTransitions::at(std::size_t i, std::size_t j) const {
  if (i == j) return Rational(diagonal[i], denominator);
  const auto& row = neighbours[i];
  return std::binary_search(row.begin(), row.end(), static_cast<std::uint32_t>(j)) ? Rational(BigInt(1), denominator)
                                                                                  : Rational(0);
}

std::vector<std::vector<Rational>> SparseTransitions::dense() const {
  std::vector<std::vector<Rational>> m(size(), std::vector<Rational>(size(), Rational(0)));
  for (std::size_t i = 0; i < size(); ++i) {
    m[i][i] = Rational(diagonal[i], denominator);
    for (auto j : neighbours[i]) m[i][j] = Rational(BigInt(1), denominator);
  }
  return m;
}

namespace {

template <class State, class MakeDenominator>
SparseTransitions build(const std::vector<State>& states, MakeDenominator make_denominator) {
  if (states.empty()) throw std::invalid_argument("empty state space");
  SparseTransitions t;
  try {
    t.denominator = make_denominator(states.front());
  } catch (const FrozenChain&) {
    // A frozen chain only arises when every edge pair meets, which pins down
    // the graph; the space is a single state.
    if (states.size() != 1) throw std::logic_error("frozen chain on a space with several states");
    t.denominator = 1;
  }
  t.neighbours = switch_adjacency(states);
  t.diagonal.reserve(states.size());
  for (const auto& row : t.neighbours) t.diagonal.push_back(t.denominator - BigInt(row.size()));
  return t;
}

}  // namespace

SparseTransitions transitions(const std::vector<Graph>& states, Variant variant) {
  return build(states, [&](const Graph& g) { return UndirectedChain(g, variant).denominator(); });
}

SparseTransitions transitions(const std::vector<Digraph>& states) {
  return build(states, [](const Digraph& g) { return DirectedChain(g).denominator(); });
}

namespace {

/// Distribution after t steps in integer form: probabilities are x / D^t.
struct ExactWalk {
  const SparseTransitions& P;
  std::vector<BigInt> x;
  BigInt scale = 1;

  ExactWalk(const SparseTransitions& p, std::size_t start) : P(p), x(p.size(), BigInt(0)) { x.at(start) = 1; }

  void step() {
    std::vector<BigInt> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      BigInt acc = P.diagonal[i] * x[i];
      for (auto j : P.neighbours[i]) acc += x[j];
      y[i] = std::move(acc);
    }
    x = std::move(y);
    scale *= P.denominator;
  }

  // Sum of |S x_i - D^t|; TV = this / (2 S D^t).
  BigInt tv_numerator() const {
    const BigInt s(x.size());
    BigInt sum = 0;
    for (const auto& xi : x) sum += abs(s * xi - scale);
    return sum;
  }

  Rational tv() const { return Rational(tv_numerator(), 2 * BigInt(x.size()) * scale); }

  bool within(const Rational& eps) const {
    return tv_numerator() * denominator(eps) <= numerator(eps) * 2 * BigInt(x.size()) * scale;
  }
};

struct ApproxWalk {
  const SparseTransitions& P;
  std::vector<double> x;
  std::vector<double> diag;
  double inv_d;

  ApproxWalk(const SparseTransitions& p, std::size_t start) : P(p), x(p.size(), 0.0), inv_d(1.0 / p.denominator.convert_to<double>()) {
    x.at(start) = 1.0;
    for (const auto& d : p.diagonal) diag.push_back(d.convert_to<double>() * inv_d);
  }

  void step() {
    std::vector<double> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
      double acc = diag[i] * x[i];
      for (auto j : P.neighbours[i]) acc += x[j] * inv_d;
      y[i] = acc;
    }
    x = std::move(y);
  }

  double tv() const {
    const double u = 1.0 / static_cast<double>(x.size());
    double sum = 0.0;
    for (double xi : x) sum += std::abs(xi - u);
    return sum / 2.0;
  }
};

}  // namespace

std::vector<Rational> tv_curve(const SparseTransitions& P, std::size_t start, std::size_t horizon) {
  ExactWalk walk(P, start);
  std::vector<Rational> curve;
  curve.reserve(horizon + 1);
  curve.push_back(walk.tv());
  for (std::size_t t = 1; t <= horizon; ++t) {
    walk.step();
    curve.push_back(walk.tv());
  }
  return curve;
}

std::size_t mixing_time_from(const SparseTransitions& P, std::size_t start, const Rational& eps, std::size_t max_steps) {
  ExactWalk walk(P, start);
  for (std::size_t t = 0; t <= max_steps; ++t) {
    if (walk.within(eps)) return t;
    walk.step();
  }
  throw std::runtime_error("total variation did not reach eps within " + std::to_string(max_steps) + " steps");
}

std::size_t mixing_time_from_approx(const SparseTransitions& P, std::size_t start, double eps, std::size_t max_steps) {
  ApproxWalk walk(P, start);
  for (std::size_t t = 0; t <= max_steps; ++t) {
    if (walk.tv() <= eps) return t;
    walk.step();
  }
  throw std::runtime_error("total variation did not reach eps within " + std::to_string(max_steps) + " steps");
}

double spectral_gap(const SparseTransitions& P, double tolerance) {
  const std::size_t n = P.size();
  if (n <= 1) return 1.0;
  const double inv_d = 1.0 / P.denominator.convert_to<double>();
  std::vector<double> diag;
  for (const auto& d : P.diagonal) diag.push_back(d.convert_to<double>() * inv_d);

  auto deflate_and_normalize = [](std::vector<double>& v) {
    const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
    double norm = 0.0;
    for (double& x : v) {
      x -= mean;
      norm += x * x;
    }
    norm = std::sqrt(norm);
    if (norm > 0.0) {
      for (double& x : v) x /= norm;
    }
    return norm;
  };

  std::vector<double> v(n);
  std::uint64_t s = 0x5eed;
  for (auto& x : v) {
    s = splitmix64(s);
    x = static_cast<double>(s >> 11) / 9007199254740992.0 - 0.5;
  }
  deflate_and_normalize(v);

  double mu = 0.0;
  std::vector<double> w(n);
  for (std::size_t it = 0; it < 1'000'000; ++it) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = diag[i] * v[i];
      for (auto j : P.neighbours[i]) acc += v[j] * inv_d;
      w[i] = 0.5 * (v[i] + acc);
    }
    double next = 0.0;
    for (std::size_t i = 0; i < n; ++i) next += v[i] * w[i];
    const double norm = deflate_and_normalize(w);
    v.swap(w);
    if (norm == 0.0) {
      mu = 0.0;
      break;
    }
    const bool settled = it > 0 && std::abs(next - mu) < tolerance;
    mu = next;
    if (settled) break;
  }
  const double lambda2 = 2.0 * mu - 1.0;
  return 1.0 - lambda2;
}

Rational exact_rational(double x) {
  if (!std::isfinite(x)) throw std::invalid_argument("non-finite value has no exact rational form");
  int exponent = 0;
  const double fraction = std::frexp(x, &exponent);
  const auto mantissa = static_cast<std::int64_t>(std::ldexp(fraction, 53));
  const int shift = exponent - 53;
  if (shift >= 0) return Rational(BigInt(mantissa) << shift);
  return Rational(BigInt(mantissa), BigInt(1) << -shift);
}

namespace {

template <class State>
StateSpaceAnalysis<State> analyze_states(std::vector<State> states, SparseTransitions P, const AnalyzeOptions& options) {
  StateSpaceAnalysis<State> out;
  out.states = std::move(states);
  out.P = std::move(P);
  const std::size_t n = out.states.size();
  if (options.start >= n) throw std::invalid_argument("start index " + std::to_string(options.start) + " out of range");
  if (!(options.eps > 0.0 && options.eps < 1.0)) throw std::invalid_argument("eps must lie in (0, 1)");
  out.start = options.start;

  const Rational eps = exact_rational(options.eps);
  const std::size_t horizon =
      options.horizon != 0 ? options.horizon : mixing_time_from(out.P, options.start, eps, options.max_steps);
  out.tv_curve = tv_curve(out.P, options.start, horizon);
  out.spectral_gap = spectral_gap(out.P);

  out.mixing_time_exact = n <= options.exact_mixing_limit;
  out.mixing_time = 0;
  out.worst_start = 0;
  for (std::size_t s = 0; s < n; ++s) {
    const std::size_t t = out.mixing_time_exact ? mixing_time_from(out.P, s, eps, options.max_steps)
                                                : mixing_time_from_approx(out.P, s, options.eps, options.max_steps);
    if (t > out.mixing_time) {
      out.mixing_time = t;
      out.worst_start = s;
    }
  }
  return out;
}

}  // namespace

StateSpaceAnalysis<Graph> analyze(const DegreeSequence& d, const AnalyzeOptions& options) {
  auto states = enum_states(d, options.cap);
  if (states.empty()) throw NotRealizable("degree sequence is not graphical");
  auto P = transitions(states, options.variant);
  return analyze_states(std::move(states), std::move(P), options);
}

StateSpaceAnalysis<Digraph> analyze(const DirectedDegreeSequence& dd, const AnalyzeOptions& options) {
  if (!dd.balanced()) throw NotRealizable("in-degree and out-degree totals differ");
  auto states = enum_states(dd, options.cap);
  if (states.empty()) throw NotRealizable("directed degree sequence is not digraphical");
  auto P = transitions(states);
  return analyze_states(std::move(states), std::move(P), options);
}

}  // namespace switchmix
