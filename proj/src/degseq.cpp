#include "switchmix/degseq.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace switchmix {

DegreeSequence::DegreeSequence(std::vector<int> degrees) : degrees_(std::move(degrees)) {
  if (degrees_.empty()) throw std::invalid_argument("degree sequence must have at least one vertex");
  min_ = degrees_.front();
  max_ = degrees_.front();
  for (int d : degrees_) {
    if (d < 0) throw std::invalid_argument("degrees must be non-negative, got " + std::to_string(d));
    total_ += d;
    m2_ += static_cast<std::int64_t>(d) * (d - 1);
    min_ = std::min(min_, d);
    max_ = std::max(max_, d);
  }
}

DegreeStats stats(const DegreeSequence& d) {
  DegreeStats s;
  s.M = d.total();
  s.M2 = d.m2();
  s.d_min = d.min_degree();
  s.d_max = d.max_degree();
  if (s.M % 2 == 0) s.a = choose2(BigInt(s.M / 2)) - BigInt(s.M2 / 2);
  return s;
}

bool is_graphical(const DegreeSequence& d) {
  if (d.total() % 2 != 0) return false;
  std::vector<std::int64_t> sorted(d.degrees().begin(), d.degrees().end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  const auto n = static_cast<std::int64_t>(sorted.size());
  if (sorted.front() > n - 1) return false;

  std::int64_t lhs = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    lhs += sorted[static_cast<std::size_t>(k - 1)];
    std::int64_t rhs = k * (k - 1);
    for (std::int64_t i = k; i < n; ++i) rhs += std::min(sorted[static_cast<std::size_t>(i)], k);
    if (lhs > rhs) return false;
  }
  return true;
}

Classification classify(const DegreeSequence& d) {
  Classification c;
  c.graphical = is_graphical(d);
  const std::int64_t dmin = d.min_degree();
  const std::int64_t dmax = d.max_degree();
  const std::int64_t spread = dmax - dmin + 1;
  c.stable = c.graphical && spread * spread <= 4 * dmin * (d.n() - dmax + 1);
  c.theorem1_applicable = c.graphical && dmin >= 1 && dmax >= 3 && 9 * dmax * dmax <= d.total();
  return c;
}

DirectedDegreeSequence::DirectedDegreeSequence(std::vector<DegreePair> pairs) : pairs_(std::move(pairs)) {
  if (pairs_.empty()) throw std::invalid_argument("directed degree sequence must have at least one vertex");
  r_min_ = std::min(pairs_.front().in, pairs_.front().out);
  r_max_ = std::max(pairs_.front().in, pairs_.front().out);
  for (const auto& p : pairs_) {
    if (p.in < 0 || p.out < 0) throw std::invalid_argument("semi-degrees must be non-negative");
    in_total_ += p.in;
    out_total_ += p.out;
    r_min_ = std::min({r_min_, p.in, p.out});
    r_max_ = std::max({r_max_, p.in, p.out});
  }
}

bool is_digraphical(const DirectedDegreeSequence& dd) {
  if (!dd.balanced()) return false;
  // Pairs sorted by out-degree, then in-degree, both non-increasing.
  std::vector<DegreePair> sorted(dd.pairs().begin(), dd.pairs().end());
  std::sort(sorted.begin(), sorted.end(), [](const DegreePair& x, const DegreePair& y) {
    return x.out != y.out ? x.out > y.out : x.in > y.in;
  });
  const auto n = static_cast<std::int64_t>(sorted.size());
  std::int64_t lhs = 0;
  for (std::int64_t k = 1; k <= n; ++k) {
    lhs += sorted[static_cast<std::size_t>(k - 1)].out;
    std::int64_t rhs = 0;
    for (std::int64_t i = 0; i < k; ++i) rhs += std::min<std::int64_t>(sorted[static_cast<std::size_t>(i)].in, k - 1);
    for (std::int64_t i = k; i < n; ++i) rhs += std::min<std::int64_t>(sorted[static_cast<std::size_t>(i)].in, k);
    if (lhs > rhs) return false;
  }
  return true;
}

DirectedClassification classify_directed(const DirectedDegreeSequence& dd) {
  if (!dd.balanced()) {
    throw std::invalid_argument("in-degree total " + std::to_string(dd.in_total()) +
                                " differs from out-degree total " + std::to_string(dd.out_total()));
  }
  DirectedClassification c;
  c.digraphical = is_digraphical(dd);
  const std::int64_t r = dd.r_max();
  c.theorem2_degree_ok = dd.r_min() >= 1 && r >= 2 && 16 * r * r <= dd.arcs();
  return c;
}

}  // namespace switchmix
