#include "switchmix/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace switchmix {

namespace {

std::string describe(const Edge& e) { return "{" + std::to_string(e.u) + "," + std::to_string(e.v) + "}"; }
std::string describe(const Arc& a) { return "(" + std::to_string(a.tail) + "," + std::to_string(a.head) + ")"; }

}  // namespace

Graph::Graph(int n) : n_(n), degree_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
  for (const auto& e : edges) add_edge(e.u, e.v);
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

bool Graph::has_edge(int a, int b) const { return a != b && edges_.contains(make_edge(a, b)); }

void Graph::add_edge(int a, int b) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw std::invalid_argument("loop at vertex " + std::to_string(a));
  const Edge e = make_edge(a, b);
  if (edges_.contains(e)) throw std::invalid_argument("duplicate edge " + describe(e));
  edges_.insert(e);
  ++degree_[static_cast<std::size_t>(a)];
  ++degree_[static_cast<std::size_t>(b)];
}

void Graph::remove_edge(int a, int b) {
  const Edge e = make_edge(a, b);
  if (a == b || !edges_.contains(e)) throw std::invalid_argument("edge " + describe(e) + " not present");
  edges_.erase(e);
  --degree_[static_cast<std::size_t>(a)];
  --degree_[static_cast<std::size_t>(b)];
}

void Graph::replace_edges(const std::array<Edge, 2>& remove, const std::array<Edge, 2>& add) {
  std::array<Edge, 2> out{make_edge(remove[0].u, remove[0].v), make_edge(remove[1].u, remove[1].v)};
  std::array<Edge, 2> in{make_edge(add[0].u, add[0].v), make_edge(add[1].u, add[1].v)};
  if (out[0] == out[1]) throw std::invalid_argument("removed edges must be distinct");
  if (in[0] == in[1]) throw std::invalid_argument("added edges must be distinct");
  for (const auto& e : out) {
    if (e.u == e.v || !edges_.contains(e)) throw std::invalid_argument("edge " + describe(e) + " not present");
  }
  for (const auto& e : in) {
    check_vertex(e.u);
    check_vertex(e.v);
    if (e.u == e.v) throw std::invalid_argument("loop " + describe(e));
    const bool being_removed = e == out[0] || e == out[1];
    if (edges_.contains(e) && !being_removed) throw std::invalid_argument("edge " + describe(e) + " already present");
  }
  std::array<int, 4> before{out[0].u, out[0].v, out[1].u, out[1].v};
  std::array<int, 4> after{in[0].u, in[0].v, in[1].u, in[1].v};
  std::sort(before.begin(), before.end());
  std::sort(after.begin(), after.end());
  if (before != after) throw std::invalid_argument("edge exchange does not preserve degrees");

  for (const auto& e : out) edges_.erase(e);
  for (const auto& e : in) edges_.insert(e);
}

std::vector<Edge> Graph::sorted_edges() const {
  std::vector<Edge> es(edges_.items().begin(), edges_.items().end());
  std::sort(es.begin(), es.end());
  return es;
}

void Graph::audit() const {
  if (!edges_.consistent()) throw std::logic_error("edge array and adjacency index disagree");
  std::vector<int> recount(static_cast<std::size_t>(n_), 0);
  for (const auto& e : edges_.items()) {
    if (e.u >= e.v || e.u < 0 || e.v >= n_) throw std::logic_error("malformed edge " + describe(e));
    ++recount[static_cast<std::size_t>(e.u)];
    ++recount[static_cast<std::size_t>(e.v)];
  }
  if (recount != degree_) throw std::logic_error("degree counters out of sync");
}

bool operator==(const Graph& x, const Graph& y) {
  if (x.n_ != y.n_ || x.edge_count() != y.edge_count()) return false;
  return std::all_of(x.edges().begin(), x.edges().end(), [&](const Edge& e) { return y.edges_.contains(e); });
}

Digraph::Digraph(int n)
    : n_(n), in_degree_(static_cast<std::size_t>(std::max(n, 0)), 0), out_degree_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
}

Digraph::Digraph(int n, std::span<const Arc> arcs) : Digraph(n) {
  for (const auto& a : arcs) add_arc(a.tail, a.head);
}

void Digraph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

bool Digraph::has_arc(int tail, int head) const { return tail != head && arcs_.contains(Arc{tail, head}); }

void Digraph::add_arc(int tail, int head) {
  check_vertex(tail);
  check_vertex(head);
  if (tail == head) throw std::invalid_argument("loop at vertex " + std::to_string(tail));
  const Arc a{tail, head};
  if (arcs_.contains(a)) throw std::invalid_argument("duplicate arc " + describe(a));
  arcs_.insert(a);
  ++out_degree_[static_cast<std::size_t>(tail)];
  ++in_degree_[static_cast<std::size_t>(head)];
}

void Digraph::remove_arc(int tail, int head) {
  const Arc a{tail, head};
  if (!arcs_.contains(a)) throw std::invalid_argument("arc " + describe(a) + " not present");
  arcs_.erase(a);
  --out_degree_[static_cast<std::size_t>(tail)];
  --in_degree_[static_cast<std::size_t>(head)];
}

void Digraph::replace_arcs(const std::array<Arc, 2>& remove, const std::array<Arc, 2>& add) {
  if (remove[0] == remove[1]) throw std::invalid_argument("removed arcs must be distinct");
  if (add[0] == add[1]) throw std::invalid_argument("added arcs must be distinct");
  for (const auto& a : remove) {
    if (!arcs_.contains(a)) throw std::invalid_argument("arc " + describe(a) + " not present");
  }
  for (const auto& a : add) {
    check_vertex(a.tail);
    check_vertex(a.head);
    if (a.tail == a.head) throw std::invalid_argument("loop " + describe(a));
    const bool being_removed = a == remove[0] || a == remove[1];
    if (arcs_.contains(a) && !being_removed) throw std::invalid_argument("arc " + describe(a) + " already present");
  }
  std::array<int, 2> tails_before{remove[0].tail, remove[1].tail}, tails_after{add[0].tail, add[1].tail};
  std::array<int, 2> heads_before{remove[0].head, remove[1].head}, heads_after{add[0].head, add[1].head};
  std::sort(tails_before.begin(), tails_before.end());
  std::sort(tails_after.begin(), tails_after.end());
  std::sort(heads_before.begin(), heads_before.end());
  std::sort(heads_after.begin(), heads_after.end());
  if (tails_before != tails_after || heads_before != heads_after) {
    throw std::invalid_argument("arc exchange does not preserve semi-degrees");
  }

  for (const auto& a : remove) arcs_.erase(a);
  for (const auto& a : add) arcs_.insert(a);
}

std::vector<Arc> Digraph::sorted_arcs() const {
  std::vector<Arc> as(arcs_.items().begin(), arcs_.items().end());
  std::sort(as.begin(), as.end());
  return as;
}

void Digraph::audit() const {
  if (!arcs_.consistent()) throw std::logic_error("arc array and adjacency index disagree");
  std::vector<int> in(static_cast<std::size_t>(n_), 0), out(static_cast<std::size_t>(n_), 0);
  for (const auto& a : arcs_.items()) {
    if (a.tail == a.head || a.tail < 0 || a.head < 0 || a.tail >= n_ || a.head >= n_) {
      throw std::logic_error("malformed arc " + describe(a));
    }
    ++out[static_cast<std::size_t>(a.tail)];
    ++in[static_cast<std::size_t>(a.head)];
  }
  if (in != in_degree_ || out != out_degree_) throw std::logic_error("semi-degree counters out of sync");
}

bool operator==(const Digraph& x, const Digraph& y) {
  if (x.n_ != y.n_ || x.arc_count() != y.arc_count()) return false;
  return std::all_of(x.arcs().begin(), x.arcs().end(), [&](const Arc& a) { return y.arcs_.contains(a); });
}

std::pair<std::size_t, std::size_t> random_distinct_index_pair(std::size_t count, Rng& rng) {
  if (count < 2) throw std::invalid_argument("need at least two items to draw a distinct pair");
  const auto i = static_cast<std::size_t>(uniform_below(rng, count));
  auto j = static_cast<std::size_t>(uniform_below(rng, count - 1));
  if (j >= i) ++j;
  return {std::min(i, j), std::max(i, j)};
}

std::pair<std::size_t, std::size_t> random_distinct_edge_pair(const Graph& g, Rng& rng) {
  return random_distinct_index_pair(g.edge_count(), rng);
}

std::pair<std::size_t, std::size_t> random_distinct_arc_pair(const Digraph& g, Rng& rng) {
  return random_distinct_index_pair(g.arc_count(), rng);
}

}  // namespace switchmix
