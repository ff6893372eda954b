// One line per acceptance criterion. Expected values come from the oracles in
// tests/support or are computed here from first principles.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "instances.hpp"
#include "oracles.hpp"
#include "switchmix/bounds.hpp"
#include "switchmix/chain.hpp"
#include "switchmix/construct.hpp"
#include "switchmix/encoding.hpp"
#include "switchmix/enumerate.hpp"
#include "switchmix/irreducibility.hpp"

using namespace switchmix;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Collects every encoding the criteria touch, for the counting identities.
struct IdentityLog {
  std::size_t touched = 0;
  std::size_t library_failures = 0;
  std::size_t oracle_failures = 0;
  std::string first_failure;

  void check(const Encoding& L) {
    ++touched;
    const std::string lib = check_counting_identities(L);
    const std::string ora = oracle::counting_identities(L);
    if (!lib.empty()) ++library_failures;
    if (!ora.empty()) ++oracle_failures;
    if ((!lib.empty() || !ora.empty()) && first_failure.empty()) first_failure = lib.empty() ? ora : lib;
  }
};

IdentityLog identities;

std::string fmt(double x, int precision = 4) {
  std::ostringstream s;
  s.precision(precision);
  s << x;
  return s.str();
}

Outcome criterion1() {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  const DegreeSequence d({1, 2, 2, 1});
  const auto states = enum_states(d);
  if (states.size() != 2) return {false, "expected 2 states, got " + std::to_string(states.size())};
  const auto P = transitions(states).dense();
  const std::vector<std::vector<Rational>> expected{{Rational(2, 3), Rational(1, 3)}, {Rational(1, 3), Rational(2, 3)}};
  if (P != expected) return {false, "transition matrix differs from [[2/3,1/3],[1/3,2/3]]"};

  // Eigenvalues 1 and 1/3: the mass on the start is 1/2 + 1/2 (1/3)^t, so
  // TV(t) = 1/2 (1/3)^t.
  AnalyzeOptions options;
  options.horizon = 12;
  const auto a = analyze(d, options);
  Rational tv(1, 2);
  std::size_t first_below = 0;
  bool found = false;
  for (std::size_t t = 0; t <= 12; ++t) {
    if (a.tv_curve[t] != tv) return {false, "TV(" + std::to_string(t) + ") = " + a.tv_curve[t].str()};
    if (!found && tv <= Rational(1, 100)) {
      first_below = t;
      found = true;
    }
    tv /= 3;
  }
  if (a.mixing_time != first_below || a.mixing_time != 4 || !a.mixing_time_exact) {
    return {false, "mixing time " + std::to_string(a.mixing_time) + ", expected 4"};
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  o.pass = seconds < 1.0;
  o.detail = "P = [[2/3,1/3],[1/3,2/3]], TV(t) = 1/2 (1/3)^t for t <= 12, mixing time 4, " + fmt(seconds, 3) + " s";
  return o;
}

Outcome criterion2() {
  const auto start = std::chrono::steady_clock::now();
  const DegreeSequence d(std::vector<int>(6, 2));
  const auto states = enum_states(d);
  const auto hist = oracle::graph_degree_histogram(6);
  const auto count = hist.at(std::vector<int>(6, 2));
  if (static_cast<std::int64_t>(states.size()) != count || count != 70) {
    return {false, "state count " + std::to_string(states.size()) + ", exhaustive count " + std::to_string(count)};
  }
  const auto T = transitions(states);
  const auto P = T.dense();
  const std::size_t n = P.size();
  for (std::size_t i = 0; i < n; ++i) {
    Rational row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (P[i][j] != P[j][i]) return {false, "P is not symmetric"};
      row += P[i][j];
    }
    if (row != 1) return {false, "row " + std::to_string(i) + " sums to " + row.str()};
    if (P[i][i] < Rational(1, 3)) return {false, "diagonal entry below 1/3"};
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational col = 0;
    for (std::size_t i = 0; i < n; ++i) col += P[i][j] / n;
    if (col != Rational(1, static_cast<long>(n))) return {false, "uniform is not stationary"};
  }
  const auto tv = tv_curve(T, 0, 200);
  for (std::size_t t = 1; t < tv.size(); ++t) {
    if (tv[t] > tv[t - 1]) return {false, "TV increases at t = " + std::to_string(t)};
  }
  if (!(tv[200] < Rational(1, 100))) return {false, "TV(200) = " + fmt(tv[200].convert_to<double>())};
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {seconds < 30.0, "70 states, P symmetric and stochastic, diagonal >= 1/3, uniform stationary, TV(200) = " +
                              fmt(tv[200].convert_to<double>()) + ", " + fmt(seconds, 3) + " s"};
}

Outcome criterion3() {
  const auto start = std::chrono::steady_clock::now();
  const DegreeSequence d(std::vector<int>(6, 2));
  const auto states = enum_states(d);
  const StateIndex index(states);
  std::vector<std::int64_t> hits(states.size(), 0);
  const std::size_t samples = 70000;
  ChainRun<Graph> run{states.front(), 1000, 20240601, Variant::exact_nonadjacent, 100, 0};
  bool lost = false;
  run_chain(run, samples, [&](const Graph& g) {
    const auto i = index.find(state_key(g));
    if (!i) {
      lost = true;
      return;
    }
    ++hits[*i];
  });
  if (lost) return {false, "a sample left the enumerated space"};
  const double expected = static_cast<double>(samples) / static_cast<double>(states.size());
  double tv = 0.0, chi2 = 0.0;
  for (auto h : hits) {
    tv += std::abs(static_cast<double>(h) / samples - 1.0 / static_cast<double>(states.size()));
    chi2 += (h - expected) * (h - expected) / expected;
  }
  tv /= 2.0;
  const boost::math::chi_squared dist(static_cast<double>(states.size() - 1));
  const double p = boost::math::cdf(boost::math::complement(dist, chi2));
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {tv < 0.05 && p > 0.001 && seconds < 60.0,
          "70000 samples, thinning 100: TV " + fmt(tv) + ", chi-square " + fmt(chi2) + " on 69 df, p = " + fmt(p) +
              ", " + fmt(seconds, 3) + " s"};
}

Outcome criterion4() {
  Rng rng(404);
  int checked = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(uniform_below(rng, 9));
    const double p = 0.2 + 0.6 * static_cast<double>(uniform_below(rng, 1000)) / 1000.0;
    const DegreeSequence d = instances::random_graphical(n, p, rng);
    const Graph g = instances::scrambled(d, 100, rng);
    std::int64_t M = 0, M2 = 0;
    for (int v = 0; v < n; ++v) {
      M += g.degree(v);
      M2 += static_cast<std::int64_t>(g.degree(v)) * (g.degree(v) - 1);
    }
    const std::int64_t E = M / 2;
    const std::int64_t formula = E * (E - 1) / 2 - M2 / 2;
    const std::int64_t brute = oracle::nonadjacent_pairs(g);
    const auto lib = stats(d).a;
    if (brute != formula || !lib || *lib != formula) {
      return {false, "n=" + std::to_string(n) + ": brute " + std::to_string(brute) + ", formula " +
                         std::to_string(formula)};
    }
    ++checked;
  }
  return {checked == 100, std::to_string(checked) + " random sequences (n <= 10): brute count = C(M/2,2) - M2/2"};
}

Outcome criterion5() {
  std::size_t sequences = 0, largest = 0;
  for (int n = 1; n <= 7; ++n) {
    const auto hist = oracle::graph_degree_histogram(n);
    for (const auto& [degrees, count] : hist) {
      if (!std::is_sorted(degrees.rbegin(), degrees.rend())) continue;
      const auto r = switch_connectivity(DegreeSequence(degrees));
      if (static_cast<std::int64_t>(r.state_count) != count) return {false, "state count mismatch"};
      if (!r.irreducible) {
        std::string s;
        for (int x : degrees) s += std::to_string(x) + " ";
        return {false, "disconnected switch graph for " + s};
      }
      ++sequences;
      largest = std::max(largest, r.state_count);
    }
  }
  return {true, std::to_string(sequences) + " sorted graphical sequences with n <= 7, all connected (largest space " +
                    std::to_string(largest) + " states)"};
}

Outcome criterion6() {
  const DirectedDegreeSequence dd({{1, 1}, {1, 1}, {1, 1}});
  const auto r = switch_connectivity(dd);
  if (r.state_count != 2 || r.transition_count != 0 || r.irreducible) {
    return {false, std::to_string(r.state_count) + " states, " + std::to_string(r.transition_count) + " transitions"};
  }
  for (const auto& g : enum_states(dd)) {
    const auto triangles = directed_triangles(g);
    if (triangles.size() != 1) return {false, "expected one directed triangle per state"};
    if (find_useful(g, triangles.front())) return {false, "find_useful returned a witness"};
  }
  return {true, "2 states, 0 transitions, irreducible = false, no useful witness in either state"};
}

Outcome criterion7() {
  std::size_t sequences = 0, connected = 0, triangles = 0, counterexamples = 0, disconnected_without_obstruction = 0;
  for (int n = 1; n <= 5; ++n) {
    for (const auto& [key, count] : oracle::digraph_degree_histogram(n)) {
      if (!std::is_sorted(key.rbegin(), key.rend())) continue;
      std::vector<DegreePair> pairs;
      for (const auto& [in, out] : key) pairs.push_back({in, out});
      const DirectedDegreeSequence dd(pairs);
      const auto states = enum_states(dd);
      if (static_cast<std::int64_t>(states.size()) != count) return {false, "state count mismatch"};
      const auto r = switch_components(switch_adjacency(states));
      ++sequences;
      bool obstruction = false;
      for (const auto& g : states) {
        for (const auto& U : directed_triangles(g)) {
          const bool witness = find_useful(g, U).has_value();
          if (r.irreducible) {
            ++triangles;
            counterexamples += witness ? 0 : 1;
          } else {
            obstruction = obstruction || !witness;
          }
        }
      }
      connected += r.irreducible ? 1 : 0;
      if (!r.irreducible && !obstruction) ++disconnected_without_obstruction;
    }
  }
  return {counterexamples == 0, std::to_string(sequences) + " sorted digraphical sequences with n <= 5, " +
                                    std::to_string(connected) + " connected; " + std::to_string(triangles) +
                                    " induced directed triangles checked, " + std::to_string(counterexamples) +
                                    " without a useful witness (" + std::to_string(disconnected_without_obstruction) +
                                    " disconnected spaces lack an obstruction)"};
}

struct Plan {
  int p, q, both;
};

const std::vector<Plan> kUndirectedPlans{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {1, 1, 1}, {2, 0, 0}, {0, 2, 0},
                                         {2, 1, 0}, {2, 1, 1}, {1, 2, 0}, {1, 2, 1}, {0, 3, 0}, {1, 3, 0},
                                         {1, 3, 1}, {2, 2, 0}, {2, 2, 1}, {2, 2, 2}};
const std::vector<Plan> kDirectedPlans{{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {2, 0, 0}, {0, 2, 0}, {2, 1, 0},
                                       {1, 2, 0}, {0, 3, 0}, {1, 3, 0}, {2, 2, 0}, {2, 3, 0}};

std::vector<instances::EncodingInstance> undirected_encodings(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<instances::EncodingInstance> out;
  while (out.size() < count) {
    const int dmax = 3 + static_cast<int>(uniform_below(rng, 2));
    const DegreeSequence d = instances::theorem1_degrees(dmax, rng);
    const Graph Z = instances::scrambled(d, 10 * static_cast<std::uint64_t>(d.total()), rng);
    const Plan& plan = kUndirectedPlans[out.size() % kUndirectedPlans.size()];
    if (auto inst = instances::encoding_with_profile(Z, plan.p, plan.q, plan.both, rng)) out.push_back(*inst);
  }
  return out;
}

std::vector<instances::EncodingInstance> directed_encodings(std::size_t count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<instances::EncodingInstance> out;
  while (out.size() < count) {
    const DirectedDegreeSequence dd = instances::theorem2_degrees(rng);
    const Digraph Z = instances::scrambled(dd, 10 * static_cast<std::uint64_t>(dd.arcs()), rng);
    const Plan& plan = kDirectedPlans[out.size() % kDirectedPlans.size()];
    if (auto inst = instances::encoding_with_profile(Z, plan.p, plan.q, rng)) out.push_back(*inst);
  }
  return out;
}

Outcome criterion8() {
  Rng rng(808);
  std::size_t encodings = 0, second_checks = 0, third_checks = 0;
  std::int64_t tightest = std::numeric_limits<std::int64_t>::max();
  std::string failure;
  const auto check = [&](const Encoding& L) {
    identities.check(L);
    ++encodings;
    const int n = L.n();
    std::vector<std::pair<int, int>> anchors, plain;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if (L.at(i, j) == 2 || (L.at(i, j) == 1 && uniform_below(rng, 40) == 0)) anchors.emplace_back(i, j);
        if (L.at(i, j) == 1) plain.emplace_back(i, j);
      }
    }
    for (const auto& [a1, b1] : anchors) {
      const std::array<int, 2> two{a1, b1};
      const auto s = choice_count_and_bound(L, two, Stage::second_pair);
      ++second_checks;
      if (s.exact != oracle::second_pair_choices(L, a1, b1) || s.bound != oracle::second_pair_bound(L, a1, b1) ||
          s.exact < s.bound) {
        if (failure.empty()) failure = "second stage at (" + std::to_string(a1) + "," + std::to_string(b1) + ")";
      }
      tightest = std::min(tightest, s.exact - s.bound);
      for (int k = 0; k < 3; ++k) {
        const auto [a2, b2] = plain[uniform_below(rng, plain.size())];
        if (std::set<int>{a1, b1, a2, b2}.size() != 4) continue;
        const std::array<int, 4> four{a1, b1, a2, b2};
        const auto t = choice_count_and_bound(L, four, Stage::third_pair);
        ++third_checks;
        if (t.exact != oracle::third_pair_choices(L, a1, b1, a2, b2) ||
            t.bound != oracle::third_pair_bound(L, a1, b1, a2, b2) || t.exact < t.bound) {
          if (failure.empty()) failure = "third stage";
        }
        tightest = std::min(tightest, t.exact - t.bound);
      }
    }
  };
  for (const auto& inst : undirected_encodings(500, 8001)) check(inst.L);
  for (const auto& inst : directed_encodings(500, 8002)) check(inst.L);
  return {failure.empty() && encodings == 1000,
          failure.empty() ? std::to_string(encodings) + " encodings, " + std::to_string(second_checks) +
                                " second-pair and " + std::to_string(third_checks) +
                                " third-pair anchor sets: exact >= bound, both equal the oracle (least slack " +
                                std::to_string(tightest) + ")"
                          : failure};
}

Outcome criterion9() {
  std::size_t undirected_ok = 0, directed_ok = 0, longest_u = 0, longest_d = 0;
  std::map<std::pair<int, int>, std::size_t> profiles;
  std::string failure;
  for (const auto& inst : undirected_encodings(500, 9001)) {
    ++profiles[{inst.p, inst.q}];
    identities.check(inst.L);
    const auto r = repair(inst.L);
    Encoding L = inst.L;
    for (const auto& step : r.log) {
      apply_3switch(L, step.tuple);
      identities.check(L);
    }
    if (!r.ok() || r.log.size() > 3 || !(L == r.encoding) || !r.encoding.defect_free()) {
      if (failure.empty()) failure = "undirected repair failed or took " + std::to_string(r.log.size()) + " steps";
      continue;
    }
    const Graph g = r.encoding.to_graph();
    g.audit();
    if (g.degrees() != inst.Z.row_sums()) {
      if (failure.empty()) failure = "undirected degrees changed";
      continue;
    }
    longest_u = std::max(longest_u, r.log.size());
    ++undirected_ok;
  }
  for (const auto& inst : directed_encodings(500, 9002)) {
    identities.check(inst.L);
    const auto r = repair(inst.L);
    Encoding L = inst.L;
    for (const auto& step : r.log) {
      apply_3switch(L, step.tuple);
      identities.check(L);
    }
    if (!r.ok() || r.log.size() > 5 || !(L == r.encoding) || !r.encoding.defect_free()) {
      if (failure.empty()) failure = "directed repair failed or took " + std::to_string(r.log.size()) + " steps";
      continue;
    }
    const Digraph g = r.encoding.to_digraph();
    g.audit();
    bool same = true;
    for (int v = 0; v < g.n(); ++v) {
      same = same && g.out_degree(v) == inst.Z.row_sums()[v] && g.in_degree(v) == inst.Z.column_sums()[v];
    }
    if (!same) {
      if (failure.empty()) failure = "directed degrees changed";
      continue;
    }
    longest_d = std::max(longest_d, r.log.size());
    ++directed_ok;
  }
  return {failure.empty() && undirected_ok == 500 && directed_ok == 500,
          failure.empty() ? "500 undirected encodings (" + std::to_string(profiles.size()) +
                                " defect profiles) repaired in <= " + std::to_string(longest_u) +
                                " 3-switches; 500 directed in <= " + std::to_string(longest_d) +
                                "; degrees exact, results simple"
                          : failure};
}

Outcome criterion10() {
  Rng rng(1010);
  // Product identity on a spread of inputs.
  std::size_t products = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const DegreeSequence d = instances::theorem1_degrees(3 + trial % 3, rng);
    const auto c = flow_components(d);
    const auto report = mixing_bound(d, 0.01);
    if (report.polynomial != c.load_bound * c.path_length_bound || report.value != compose_bound(c, 0.01)) {
      return {false, "undirected bound is not the product of its components"};
    }
    ++products;
  }
  for (int trial = 0; trial < 10; ++trial) {
    const DirectedDegreeSequence dd = instances::theorem2_degrees(rng);
    const auto c = flow_components(dd);
    const auto report = mixing_bound(dd, 0.01);
    if (report.polynomial != c.load_bound * c.path_length_bound || report.value != compose_bound(c, 0.01)) {
      return {false, "directed bound is not the product of its components"};
    }
    ++products;
  }

  // State counts against the closed-form size bound.
  std::size_t sizes = 0;
  for (int trial = 0; sizes < 35; ++trial) {
    const int n = 3 + static_cast<int>(uniform_below(rng, 5));
    const DegreeSequence d = instances::random_graphical(n, 0.5, rng);
    if (d.total() == 0) continue;
    const auto count = enum_states(d).size();
    if (Rational(count) > flow_components(d).state_count_bound) return {false, "state count exceeds its bound"};
    ++sizes;
  }
  while (sizes < 50) {
    const int n = 3 + static_cast<int>(uniform_below(rng, 3));
    std::vector<int> out(static_cast<std::size_t>(n)), in(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j && uniform_below(rng, 2) == 0) {
          ++out[i];
          ++in[j];
        }
      }
    }
    std::vector<DegreePair> pairs;
    for (int v = 0; v < n; ++v) pairs.push_back({in[v], out[v]});
    const DirectedDegreeSequence dd(pairs);
    if (dd.arcs() == 0) continue;
    if (Rational(enum_states(dd).size()) > flow_components(dd).state_count_bound) {
      return {false, "directed state count exceeds its bound"};
    }
    ++sizes;
  }

  // d_max = 3, M = 84: the cubic sequence on 28 vertices.
  const auto report = mixing_bound(DegreeSequence(std::vector<int>(28, 3)), 0.01);
  const long double expected =
      std::pow(3.0L, 14.0L) * std::pow(84.0L, 9.0L) * (42.0L * std::log(84.0L) + std::log(100.0L));
  const long double got = report.value.convert_to<long double>();
  const bool close = std::fabs(got - expected) <= 1e-12L * expected;
  std::ostringstream s;
  s.precision(15);
  s << products << " product identities, " << sizes << " state counts within the size bound; cubic n=28 value "
    << static_cast<double>(got) << " vs " << static_cast<double>(expected);
  return {close && report.applicable, s.str()};
}

Outcome criterion11() {
  // Desk-scale encodings straight from enumeration, on top of everything the
  // earlier criteria recorded.
  for (const auto& degrees : {std::vector<int>{2, 2, 2, 2, 2}, std::vector<int>{3, 3, 2, 2, 2},
                              std::vector<int>{2, 2, 1, 1, 1, 1}, std::vector<int>{3, 2, 2, 2, 1}}) {
    const Encoding Z = Encoding::from_graph(enum_states(DegreeSequence(degrees)).front());
    for (const auto& L : enum_good_encodings(Z)) identities.check(L);
  }
  for (const auto& pairs : {std::vector<DegreePair>{{1, 1}, {1, 1}, {1, 1}, {1, 1}},
                            std::vector<DegreePair>{{2, 2}, {2, 2}, {1, 1}, {1, 1}}}) {
    const Encoding Z = Encoding::from_digraph(enum_states(DirectedDegreeSequence(pairs)).front());
    for (const auto& L : enum_good_encodings(Z)) identities.check(L);
  }
  const bool ok = identities.library_failures == 0 && identities.oracle_failures == 0 && identities.touched > 0;
  return {ok, std::to_string(identities.touched) + " encodings: " + std::to_string(identities.library_failures) +
                  " library and " + std::to_string(identities.oracle_failures) + " oracle identity failures" +
                  (identities.first_failure.empty() ? "" : " (" + identities.first_failure + ")")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"exact chain law", criterion1},
      {"uniform stationarity and symmetry", criterion2},
      {"empirical uniformity", criterion3},
      {"non-adjacent pair count", criterion4},
      {"undirected irreducibility", criterion5},
      {"directed reducibility witness", criterion6},
      {"directed triangle witnesses", criterion7},
      {"choice-bound soundness", criterion8},
      {"repair caps", criterion9},
      {"bound calculators", criterion10},
      {"counting identities", criterion11},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, body] = criteria[i];
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += o.pass ? 0 : 1;
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "criterion " << i + 1 << " " << name << ": " << o.detail << " ["
              << fmt(seconds, 3) << " s]" << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criteria fail") << std::endl;
  return failures == 0 ? 0 : 1;
}
