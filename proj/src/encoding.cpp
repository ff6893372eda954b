#include "switchmix/encoding.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "switchmix/catalog.hpp"

namespace switchmix {

const char* to_string(Mode m) { return m == Mode::undirected ? "undirected" : "directed"; }

const char* to_string(Phase p) {
  switch (p) {
    case Phase::P1: return "P1";
    case Phase::P2: return "P2";
    case Phase::P3: return "P3";
    case Phase::A: return "A";
    case Phase::B: return "B";
  }
  return "?";
}

Encoding::Encoding(Mode mode, int n) : mode_(mode), n_(n) {
  if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
  entries_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Encoding Encoding::from_graph(const Graph& g) {
  Encoding L(Mode::undirected, g.n());
  for (const auto& e : g.edges()) L.set(e.u, e.v, 1);
  return L;
}

Encoding Encoding::from_digraph(const Digraph& g) {
  Encoding L(Mode::directed, g.n());
  for (const auto& a : g.arcs()) L.set(a.tail, a.head, 1);
  return L;
}

void Encoding::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

void Encoding::set(int i, int j, int value) {
  check_vertex(i);
  check_vertex(j);
  if (value < -1 || value > 2) throw std::invalid_argument("entry " + std::to_string(value) + " outside {-1,0,1,2}");
  if (i == j && value != 0) throw std::invalid_argument("diagonal entries must be zero");
  entries_[index(i, j)] = static_cast<std::int8_t>(value);
  if (mode_ == Mode::undirected) entries_[index(j, i)] = static_cast<std::int8_t>(value);
}

std::vector<int> Encoding::row_sums() const {
  std::vector<int> s(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) s[i] += at(i, j);
  }
  return s;
}

std::vector<int> Encoding::column_sums() const {
  std::vector<int> s(static_cast<std::size_t>(n_), 0);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) s[j] += at(i, j);
  }
  return s;
}

std::int64_t Encoding::total() const {
  return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

bool Encoding::defect_free() const {
  return std::all_of(entries_.begin(), entries_.end(), [](std::int8_t x) { return x == 0 || x == 1; });
}

Graph Encoding::to_graph() const {
  if (mode_ != Mode::undirected) throw std::logic_error("directed encoding read as a graph");
  if (!defect_free()) throw std::logic_error("encoding still has defects");
  Graph g(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = i + 1; j < n_; ++j) {
      if (at(i, j) == 1) g.add_edge(i, j);
    }
  }
  return g;
}

Digraph Encoding::to_digraph() const {
  if (mode_ != Mode::directed) throw std::logic_error("undirected encoding read as a digraph");
  if (!defect_free()) throw std::logic_error("encoding still has defects");
  Digraph g(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (at(i, j) == 1) g.add_arc(i, j);
    }
  }
  return g;
}

namespace {

Encoding as_encoding(const Graph& g) { return Encoding::from_graph(g); }
Encoding as_encoding(const Digraph& g) { return Encoding::from_digraph(g); }

template <class State>
Encoding encode_states(Mode mode, const State& G, const State& Gp, const State& Z) {
  const Encoding g = as_encoding(G), gp = as_encoding(Gp), z = as_encoding(Z);
  if (g.n() != gp.n() || g.n() != z.n()) throw std::invalid_argument("states have different vertex counts");
  if (g.row_sums() != gp.row_sums() || g.row_sums() != z.row_sums() || g.column_sums() != gp.column_sums() ||
      g.column_sums() != z.column_sums()) {
    throw std::invalid_argument("states have different degree sequences");
  }
  Encoding L(mode, g.n());
  for (int i = 0; i < g.n(); ++i) {
    for (int j = 0; j < g.n(); ++j) {
      if (mode == Mode::undirected && j < i) continue;
      L.set(i, j, g.at(i, j) + gp.at(i, j) - z.at(i, j));
    }
  }
  return L;
}

}  // namespace

Encoding encode(const Graph& G, const Graph& Gp, const Graph& Z) { return encode_states(Mode::undirected, G, Gp, Z); }

Encoding encode(const Digraph& G, const Digraph& Gp, const Digraph& Z) { return encode_states(Mode::directed, G, Gp, Z); }

DefectProfile defect_profile(const Encoding& L) {
  DefectProfile d;
  const auto n = static_cast<std::size_t>(L.n());
  if (L.mode() == Mode::undirected) {
    d.zeta.assign(n, 0);
    d.eta.assign(n, 0);
    for (int i = 0; i < L.n(); ++i) {
      for (int j = i + 1; j < L.n(); ++j) {
        const int x = L.at(i, j);
        if (x == 2) {
          d.two_defects.emplace_back(i, j);
          ++d.zeta[i];
          ++d.zeta[j];
        } else if (x == -1) {
          d.minus_defects.emplace_back(i, j);
          ++d.eta[i];
          ++d.eta[j];
        }
      }
    }
  } else {
    d.zeta_in.assign(n, 0);
    d.zeta_out.assign(n, 0);
    d.eta_in.assign(n, 0);
    d.eta_out.assign(n, 0);
    for (int i = 0; i < L.n(); ++i) {
      for (int j = 0; j < L.n(); ++j) {
        const int x = L.at(i, j);
        if (x == 2) {
          d.two_defects.emplace_back(i, j);
          ++d.zeta_out[i];
          ++d.zeta_in[j];
        } else if (x == -1) {
          d.minus_defects.emplace_back(i, j);
          ++d.eta_out[i];
          ++d.eta_in[j];
        }
      }
    }
  }
  d.p = static_cast<int>(d.two_defects.size());
  d.q = static_cast<int>(d.minus_defects.size());
  return d;
}

namespace {

std::vector<LabelledPair> labelled_defects(const DefectProfile& d) {
  std::vector<LabelledPair> out;
  for (const auto& [x, y] : d.two_defects) out.push_back({x, y, 2});
  for (const auto& [x, y] : d.minus_defects) out.push_back({x, y, -1});
  return out;
}

// Degree conditions on the endpoints of undirected defects.
bool structure_ok(const Encoding& L, const DefectProfile& d) {
  const auto deg = L.row_sums();
  for (int y = 0; y < L.n(); ++y) {
    if (d.zeta[y] >= 1 && deg[y] < 2) return false;
    if (d.zeta[y] >= 2 && deg[y] < 4) return false;
    if (d.zeta[y] >= 1 && d.eta[y] >= 1 && deg[y] < 3) return false;
  }
  return true;
}

bool catalog_ok(const Encoding& L, const DefectProfile& d) {
  const std::size_t limit = L.mode() == Mode::undirected ? 4 : 5;
  if (static_cast<std::size_t>(d.p + d.q) > limit) return false;
  return matches_catalog(labelled_defects(d), L.mode() == Mode::directed);
}

}  // namespace

bool is_valid_encoding(const Encoding& L) { return catalog_ok(L, defect_profile(L)); }

bool is_good_encoding(const Encoding& L) {
  const DefectProfile d = defect_profile(L);
  if (!catalog_ok(L, d)) return false;
  return L.mode() == Mode::directed || structure_ok(L, d);
}

Validation validate(const Encoding& L, const Encoding& Z) {
  if (L.mode() != Z.mode() || L.n() != Z.n()) throw std::invalid_argument("encoding and Z differ in mode or size");
  Validation v;
  const DefectProfile d = defect_profile(L);
  v.valid = catalog_ok(L, d);
  v.good = v.valid && (L.mode() == Mode::directed || structure_ok(L, d));
  v.consistent = true;
  for (int i = 0; i < L.n() && v.consistent; ++i) {
    for (int j = 0; j < L.n(); ++j) {
      const int s = L.at(i, j) + Z.at(i, j);
      if (s < 0 || s > 2) {
        v.consistent = false;
        break;
      }
    }
  }
  return v;
}

void apply_3switch(Encoding& L, const SwitchTuple& t) {
  for (int v : t) {
    if (v < 0 || v >= L.n()) throw std::invalid_argument("3-switch vertex out of range");
  }
  auto sorted = t;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("3-switch needs six distinct vertices");
  }
  const auto [a1, b1, a2, b2, a3, b3] = t;
  const std::array<std::array<int, 3>, 6> changes{{{a1, b1, -1}, {a2, b2, -1}, {a3, b3, -1},
                                                   {a2, b1, +1}, {a3, b2, +1}, {a1, b3, +1}}};
  for (const auto& [x, y, delta] : changes) {
    const int after = L.at(x, y) + delta;
    if (after < -1 || after > 2) throw std::invalid_argument("3-switch would leave an entry outside {-1,0,1,2}");
  }
  for (const auto& [x, y, delta] : changes) L.set(x, y, L.at(x, y) + delta);
}

namespace {

// Per-vertex counters seen through one orientation. For undirected
// encodings every view is the same pair of vectors.
struct Counters {
  const std::vector<int>& zeta;
  const std::vector<int>& eta;
};

std::int64_t defect_sum(const Encoding& L, int v, bool as_head, const Counters& c) {
  // Sum of (eta_w - 2 zeta_w) over w with L(w,v) != 0 (as_head) or
  // L(v,w) != 0 (otherwise).
  std::int64_t s = 0;
  for (int w = 0; w < L.n(); ++w) {
    if (w == v) continue;
    const int x = as_head ? L.at(w, v) : L.at(v, w);
    if (x != 0) s += c.eta[w] - 2 * c.zeta[w];
  }
  return s;
}

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

ChoiceCount choice_count_and_bound(const Encoding& L, std::span<const int> anchors, Stage stage) {
  const int n = L.n();
  const std::size_t expected = stage == Stage::second_pair ? 2 : 4;
  require(anchors.size() == expected, "wrong number of anchors for this stage");
  for (int v : anchors) require(v >= 0 && v < n, "anchor out of range");
  const int a1 = anchors[0], b1 = anchors[1];
  require(a1 != b1, "a1 and b1 must differ");
  require(L.at(a1, b1) != 0, "L(a1,b1) must be non-zero");

  const DefectProfile d = defect_profile(L);
  const bool directed = L.mode() == Mode::directed;
  std::int64_t dmax = 0;
  for (int v : L.row_sums()) dmax = std::max<std::int64_t>(dmax, v);
  if (directed) {
    for (int v : L.column_sums()) dmax = std::max<std::int64_t>(dmax, v);
  }
  // M - 4p + 2q (undirected, ordered pairs) or m - 2p + q (directed).
  const std::int64_t base = directed ? L.total() - 2 * d.p + d.q : L.total() - 4 * d.p + 2 * d.q;

  // Undirected: every view uses zeta/eta. Directed: "in" counts defects by
  // head, "out" by tail.
  const Counters in = directed ? Counters{d.zeta_in, d.eta_in} : Counters{d.zeta, d.eta};
  const Counters out = directed ? Counters{d.zeta_out, d.eta_out} : Counters{d.zeta, d.eta};

  ChoiceCount result;
  if (stage == Stage::second_pair) {
    for (int a2 = 0; a2 < n; ++a2) {
      if (a2 == a1 || a2 == b1 || L.at(a2, b1) != 0) continue;
      for (int b2 = 0; b2 < n; ++b2) {
        if (b2 == a1 || b2 == b1 || b2 == a2) continue;
        if (L.at(a2, b2) == 1) ++result.exact;
      }
    }
    const std::int64_t bad = dmax * (dmax - in.zeta[b1] + 2 * in.eta[b1] + 2) + in.eta[a1] + out.eta[b1] -
                             2 * (in.zeta[a1] + out.zeta[b1]) + defect_sum(L, b1, true, out);
    result.bound = base - bad;
    return result;
  }

  const int a2 = anchors[2], b2 = anchors[3];
  std::array<int, 4> four{a1, b1, a2, b2};
  std::sort(four.begin(), four.end());
  require(std::adjacent_find(four.begin(), four.end()) == four.end(), "anchors must be distinct");
  require(L.at(a2, b2) == 1, "L(a2,b2) must be 1");

  for (int a3 = 0; a3 < n; ++a3) {
    if (std::find(four.begin(), four.end(), a3) != four.end() || L.at(a3, b2) != 0) continue;
    for (int b3 = 0; b3 < n; ++b3) {
      if (b3 == a3 || std::find(four.begin(), four.end(), b3) != four.end()) continue;
      if (L.at(a3, b3) == 1 && L.at(a1, b3) == 0) ++result.exact;
    }
  }
  const std::int64_t eta_star = in.eta[a1] + out.eta[b1] + in.eta[a2] + out.eta[b2];
  const std::int64_t zeta_star = in.zeta[a1] + out.zeta[b1] + in.zeta[a2] + out.zeta[b2];
  const std::int64_t bad =
      dmax * (2 * dmax - (out.zeta[a1] + in.zeta[b2]) + 2 * (out.eta[a1] + in.eta[b2]) + 4) + eta_star -
      2 * zeta_star + defect_sum(L, a1, false, in) + defect_sum(L, b2, true, out);
  result.bound = base - bad;
  return result;
}

std::optional<SwitchTuple> find_phase_switch(const Encoding& L, Phase phase) {
  const bool directed = L.mode() == Mode::directed;
  const bool undirected_phase = phase == Phase::P1 || phase == Phase::P2 || phase == Phase::P3;
  if (directed == undirected_phase) return std::nullopt;

  const DefectProfile d = defect_profile(L);
  int first = 0, second = 0;
  switch (phase) {
    case Phase::P1:
      if (d.p + d.q != 4 || d.p < 1 || d.q < 1) return std::nullopt;
      first = 2, second = -1;
      break;
    case Phase::P2:
    case Phase::A:
      if (d.p < 1) return std::nullopt;
      first = 2, second = 0;
      break;
    case Phase::P3:
    case Phase::B:
      if (d.p != 0 || d.q < 1) return std::nullopt;
      first = 1, second = -1;
      break;
  }

  const int n = L.n();
  for (int a1 = 0; a1 < n; ++a1) {
    for (int b1 = 0; b1 < n; ++b1) {
      if (b1 == a1 || L.at(a1, b1) != first) continue;
      for (int a2 = 0; a2 < n; ++a2) {
        if (a2 == a1 || a2 == b1 || L.at(a2, b1) != second) continue;
        for (int b2 = 0; b2 < n; ++b2) {
          if (b2 == a1 || b2 == b1 || b2 == a2 || L.at(a2, b2) != 1) continue;
          for (int a3 = 0; a3 < n; ++a3) {
            if (a3 == a1 || a3 == b1 || a3 == a2 || a3 == b2 || L.at(a3, b2) != 0) continue;
            for (int b3 = 0; b3 < n; ++b3) {
              if (b3 == a1 || b3 == b1 || b3 == a2 || b3 == b2 || b3 == a3) continue;
              if (L.at(a3, b3) == 1 && L.at(a1, b3) == 0) return SwitchTuple{a1, b1, a2, b2, a3, b3};
            }
          }
        }
      }
    }
  }
  return std::nullopt;
}

RepairResult repair(const Encoding& L) {
  RepairResult r{L, {}, std::nullopt};
  const bool directed = L.mode() == Mode::directed;
  while (true) {
    const DefectProfile d = defect_profile(r.encoding);
    if (d.p == 0 && d.q == 0) return r;
    std::vector<Phase> order;
    if (directed) {
      order = {d.p >= 1 ? Phase::A : Phase::B};
    } else {
      if (d.p + d.q == 4) order.push_back(Phase::P1);
      if (d.p >= 1) order.push_back(Phase::P2);
      if (d.p == 0) order.push_back(Phase::P3);
    }
    bool moved = false;
    for (Phase phase : order) {
      if (const auto t = find_phase_switch(r.encoding, phase)) {
        apply_3switch(r.encoding, *t);
        r.log.push_back({phase, *t});
        moved = true;
        break;
      }
    }
    if (!moved) {
      r.stuck = std::make_pair(d.p, d.q);
      return r;
    }
  }
}

std::string check_counting_identities(const Encoding& L) {
  const DefectProfile d = defect_profile(L);
  const int n = L.n();
  if (L.mode() == Mode::undirected) {
    const auto deg = L.row_sums();
    std::int64_t ones = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) ones += L.at(i, j) == 1 ? 1 : 0;
    }
    const std::int64_t M = L.total();
    if (M % 2 != 0) return "degree total is odd";
    if (ones != M / 2 - 2 * d.p + d.q) return "non-defect edge count differs from M/2 - 2p + q";
    for (int v = 0; v < n; ++v) {
      int good = 0, all = 0;
      for (int w = 0; w < n; ++w) {
        if (w == v) continue;
        good += L.at(v, w) == 1 ? 1 : 0;
        all += L.at(v, w) != 0 ? 1 : 0;
      }
      if (good != deg[v] - 2 * d.zeta[v] + d.eta[v]) return "good-neighbour count fails at vertex " + std::to_string(v);
      if (all != deg[v] - d.zeta[v] + 2 * d.eta[v]) return "neighbour count fails at vertex " + std::to_string(v);
    }
    return {};
  }

  const auto out = L.row_sums();
  const auto in = L.column_sums();
  std::int64_t ones = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) ones += L.at(i, j) == 1 ? 1 : 0;
  }
  if (ones != L.total() - 2 * d.p + d.q) return "non-defect arc count differs from m - 2p + q";
  for (int v = 0; v < n; ++v) {
    int good_in = 0, good_out = 0, all_in = 0, all_out = 0;
    for (int w = 0; w < n; ++w) {
      if (w == v) continue;
      good_out += L.at(v, w) == 1 ? 1 : 0;
      all_out += L.at(v, w) != 0 ? 1 : 0;
      good_in += L.at(w, v) == 1 ? 1 : 0;
      all_in += L.at(w, v) != 0 ? 1 : 0;
    }
    const std::string at = " at vertex " + std::to_string(v);
    if (good_in != in[v] - 2 * d.zeta_in[v] + d.eta_in[v]) return "good in-neighbour count fails" + at;
    if (good_out != out[v] - 2 * d.zeta_out[v] + d.eta_out[v]) return "good out-neighbour count fails" + at;
    if (all_in != in[v] - d.zeta_in[v] + 2 * d.eta_in[v]) return "in-neighbour count fails" + at;
    if (all_out != out[v] - d.zeta_out[v] + 2 * d.eta_out[v]) return "out-neighbour count fails" + at;
  }
  return {};
}

}  // namespace switchmix
