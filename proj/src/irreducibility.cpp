#include "switchmix/irreducibility.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "switchmix/errors.hpp"

namespace switchmix {

bool induces_directed_triangle(const Digraph& g, const std::array<int, 3>& U) {
  const auto [a, b, c] = U;
  if (a == b || b == c || a == c) return false;
  for (int v : U) {
    if (v < 0 || v >= g.n()) return false;
  }
  const bool forward = g.has_arc(a, b) && g.has_arc(b, c) && g.has_arc(c, a);
  const bool backward = g.has_arc(b, a) && g.has_arc(c, b) && g.has_arc(a, c);
  int arcs = 0;
  for (int x : U) {
    for (int y : U) arcs += x != y && g.has_arc(x, y) ? 1 : 0;
  }
  return arcs == 3 && (forward || backward);
}

std::vector<std::array<int, 3>> directed_triangles(const Digraph& g) {
  std::vector<std::array<int, 3>> out;
  for (int a = 0; a < g.n(); ++a) {
    for (int b = a + 1; b < g.n(); ++b) {
      for (int c = b + 1; c < g.n(); ++c) {
        if (induces_directed_triangle(g, {a, b, c})) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

LamarPartition lamar_classes(const Digraph& g, const std::array<int, 3>& U) {
  if (!induces_directed_triangle(g, U)) throw std::invalid_argument("U does not induce a directed 3-cycle");
  LamarPartition part;
  part.U = U;
  for (int x = 0; x < g.n(); ++x) {
    if (std::find(U.begin(), U.end(), x) != U.end()) continue;
    int into = 0, back = 0;
    for (int u : U) {
      into += g.has_arc(x, u) ? 1 : 0;
      back += g.has_arc(u, x) ? 1 : 0;
    }
    if (into == 0 && back == 0) {
      part.U0.push_back(x);
    } else if (into == 3 && back == 0) {
      part.Uminus.push_back(x);
    } else if (into == 0 && back == 3) {
      part.Uplus.push_back(x);
    } else if (into == 3 && back == 3) {
      part.Upm.push_back(x);
    } else {
      part.leftover.push_back(x);
    }
  }
  return part;
}

std::string describe(const UsefulWitness& w) {
  if (w.kind == UsefulWitness::Kind::neighbour) return "neighbour " + std::to_string(w.x);
  return "arc (" + std::to_string(w.x) + "," + std::to_string(w.y) + ") condition " + (w.condition == 1 ? "i" : "ii");
}

std::optional<UsefulWitness> find_useful(const Digraph& g, const std::array<int, 3>& U) {
  const LamarPartition part = lamar_classes(g, U);
  if (!part.leftover.empty()) return UsefulWitness{UsefulWitness::Kind::neighbour, part.leftover.front(), -1, 0};

  enum Class { kNone, k0, kMinus, kPlus, kPm };
  std::vector<Class> cls(static_cast<std::size_t>(g.n()), kNone);
  for (int x : part.U0) cls[x] = k0;
  for (int x : part.Uminus) cls[x] = kMinus;
  for (int x : part.Uplus) cls[x] = kPlus;
  for (int x : part.Upm) cls[x] = kPm;

  for (int x = 0; x < g.n(); ++x) {
    if (cls[x] == kNone) continue;
    for (int y = 0; y < g.n(); ++y) {
      if (cls[y] == kNone || x == y) continue;
      const bool arc = g.has_arc(x, y);
      if (arc && (cls[x] == k0 || cls[x] == kPlus) && (cls[y] == k0 || cls[y] == kMinus)) {
        return UsefulWitness{UsefulWitness::Kind::arc, x, y, 1};
      }
      if (!arc && (cls[x] == kMinus || cls[x] == kPm) && (cls[y] == kPlus || cls[y] == kPm)) {
        return UsefulWitness{UsefulWitness::Kind::arc, x, y, 2};
      }
    }
  }
  return std::nullopt;
}

ConnectivityReport switch_components(const std::vector<std::vector<std::uint32_t>>& adjacency) {
  ConnectivityReport r;
  const std::size_t n = adjacency.size();
  constexpr auto unseen = static_cast<std::size_t>(-1);
  r.state_count = n;
  r.component_of.assign(n, unseen);
  std::size_t degree_sum = 0;
  for (const auto& row : adjacency) degree_sum += row.size();
  r.transition_count = degree_sum / 2;

  std::queue<std::size_t> frontier;
  for (std::size_t s = 0; s < n; ++s) {
    if (r.component_of[s] != unseen) continue;
    const std::size_t id = r.component_count++;
    std::size_t size = 0;
    r.component_of[s] = id;
    frontier.push(s);
    while (!frontier.empty()) {
      const std::size_t v = frontier.front();
      frontier.pop();
      ++size;
      for (auto w : adjacency[v]) {
        if (r.component_of[w] == unseen) {
          r.component_of[w] = id;
          frontier.push(w);
        }
      }
    }
    r.component_sizes.push_back(size);
  }
  std::sort(r.component_sizes.rbegin(), r.component_sizes.rend());
  r.irreducible = r.component_count == 1;
  return r;
}

ConnectivityReport switch_connectivity(const DegreeSequence& d, std::size_t cap) {
  const auto states = enum_states(d, cap);
  if (states.empty()) throw NotRealizable("degree sequence is not graphical");
  return switch_components(switch_adjacency(states));
}

ConnectivityReport switch_connectivity(const DirectedDegreeSequence& dd, std::size_t cap) {
  if (!dd.balanced()) throw NotRealizable("in-degree and out-degree totals differ");
  const auto states = enum_states(dd, cap);
  if (states.empty()) throw NotRealizable("directed degree sequence is not digraphical");
  return switch_components(switch_adjacency(states));
}

bool is_switch_irreducible(const DirectedDegreeSequence& dd, std::size_t cap, const IrreducibilityDecider& decider) {
  if (decider) {
    if (const auto verdict = decider(dd)) return *verdict;
  }
  return switch_connectivity(dd, cap).irreducible;
}

}  // namespace switchmix
