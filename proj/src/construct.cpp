#include "switchmix/construct.hpp"

#include <algorithm>
#include <numeric>

#include "switchmix/errors.hpp"

namespace switchmix {

Graph realize(const DegreeSequence& d) {
  if (!is_graphical(d)) throw NotRealizable("degree sequence is not graphical");
  const int n = d.n();
  std::vector<int> residual(d.degrees().begin(), d.degrees().end());
  Graph g(n);
  std::vector<int> order(static_cast<std::size_t>(n));

  while (true) {
    int v = -1;
    for (int u = 0; u < n; ++u) {
      if (residual[u] > 0 && (v < 0 || residual[u] > residual[v])) v = u;
    }
    if (v < 0) break;

    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return residual[x] > residual[y]; });
    int need = residual[v];
    residual[v] = 0;
    for (int u : order) {
      if (need == 0) break;
      if (u == v) continue;
      if (residual[u] <= 0) throw NotRealizable("degree sequence is not graphical");
      g.add_edge(v, u);
      --residual[u];
      --need;
    }
    if (need > 0) throw NotRealizable("degree sequence is not graphical");
  }
  return g;
}

Digraph realize_directed(const DirectedDegreeSequence& dd) {
  if (!dd.balanced()) throw NotRealizable("in-degree and out-degree totals differ");
  if (!is_digraphical(dd)) throw NotRealizable("directed degree sequence is not digraphical");
  const int n = dd.n();
  std::vector<int> in(static_cast<std::size_t>(n)), out(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    in[v] = dd.in(v);
    out[v] = dd.out(v);
  }
  Digraph g(n);
  std::vector<int> order(static_cast<std::size_t>(n));

  for (int v = 0; v < n; ++v) {
    if (out[v] == 0) continue;
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
      return in[x] != in[y] ? in[x] > in[y] : out[x] > out[y];
    });
    int need = out[v];
    out[v] = 0;
    for (int u : order) {
      if (need == 0) break;
      if (u == v) continue;
      if (in[u] <= 0) throw NotRealizable("directed degree sequence is not digraphical");
      g.add_arc(v, u);
      --in[u];
      --need;
    }
    if (need > 0) throw NotRealizable("directed degree sequence is not digraphical");
  }
  return g;
}

}  // namespace switchmix
