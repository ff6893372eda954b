#include "switchmix/encoding_generator.hpp"

#include <stdexcept>

namespace switchmix {

namespace {

template <class T>
const T& pick(const std::vector<T>& v, Rng& rng) {
  return v[uniform_below(rng, v.size())];
}

template <class T>
void shuffle(std::vector<T>& v, Rng& rng) {
  for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform_below(rng, i)]);
}

// Inverse of apply_3switch: (a1,b1), (a2,b2), (a3,b3) go up by one and
// (a2,b1), (a3,b2), (a1,b3) go down.
Encoding reversed(const Encoding& L, const SwitchTuple& t) {
  const auto [a1, b1, a2, b2, a3, b3] = t;
  Encoding out = L;
  out.set(a1, b1, L.at(a1, b1) + 1);
  out.set(a2, b2, L.at(a2, b2) + 1);
  out.set(a3, b3, L.at(a3, b3) + 1);
  out.set(a2, b1, L.at(a2, b1) - 1);
  out.set(a3, b2, L.at(a3, b2) - 1);
  out.set(a1, b3, L.at(a1, b3) - 1);
  return out;
}

class Injector {
 public:
  Injector(const Encoding& Z, Rng& rng, const InjectOptions& options) : Z_(Z), rng_(rng), options_(options) {}

  std::optional<std::pair<Encoding, SwitchTuple>> apply(const Encoding& L, ReverseOp op) {
    const int n = L.n();
    // First-stage triples (a1, b1, a2); only the defect entries are fixed here.
    std::vector<std::array<int, 3>> starts;
    for (int a1 = 0; a1 < n; ++a1) {
      for (int b1 = 0; b1 < n; ++b1) {
        if (a1 == b1) continue;
        const bool two_ok = L.at(a1, b1) == 1 && Z_.at(a1, b1) == 0;
        const bool plain_ok = L.at(a1, b1) == 0;
        if (op == ReverseOp::minus ? !plain_ok : !two_ok) continue;
        for (int a2 = 0; a2 < n; ++a2) {
          if (a2 == a1 || a2 == b1) continue;
          const bool minus_ok = L.at(a2, b1) == 0 && Z_.at(a2, b1) == 1;
          const bool ok = op == ReverseOp::two ? L.at(a2, b1) == 1 : minus_ok;
          if (ok) starts.push_back({a1, b1, a2});
        }
      }
    }
    shuffle(starts, rng_);
    for (const auto& [a1, b1, a2] : starts) {
      if (options_.require_good && !defects_admissible(L, op, a1, b1, a2)) continue;
      for (int trial = 0; trial < options_.trials_per_position; ++trial) {
        const auto t = complete(L, a1, b1, a2);
        if (!t) continue;
        Encoding next = reversed(L, *t);
        if (accept(next)) return std::make_pair(std::move(next), *t);
      }
    }
    return std::nullopt;
  }

 private:
  // The new defects alone must already embed in the catalog.
  bool defects_admissible(const Encoding& L, ReverseOp op, int a1, int b1, int a2) const {
    Encoding probe = L;
    if (op != ReverseOp::minus) probe.set(a1, b1, 2);
    if (op != ReverseOp::two) probe.set(a2, b1, -1);
    return is_valid_encoding(probe);
  }

  std::optional<SwitchTuple> complete(const Encoding& L, int a1, int b1, int a2) {
    const int n = L.n();
    std::vector<int> c;
    for (int w = 0; w < n; ++w) {
      if (w != a1 && w != b1 && w != a2 && L.at(a2, w) == 0) c.push_back(w);
    }
    if (c.empty()) return std::nullopt;
    const int b2 = pick(c, rng_);
    c.clear();
    for (int w = 0; w < n; ++w) {
      if (w != a1 && w != b1 && w != a2 && w != b2 && L.at(w, b2) == 1) c.push_back(w);
    }
    if (c.empty()) return std::nullopt;
    const int a3 = pick(c, rng_);
    c.clear();
    for (int w = 0; w < n; ++w) {
      if (w != a1 && w != b1 && w != a2 && w != b2 && w != a3 && L.at(a1, w) == 1 && L.at(a3, w) == 0) c.push_back(w);
    }
    if (c.empty()) return std::nullopt;
    return SwitchTuple{a1, b1, a2, b2, a3, pick(c, rng_)};
  }

  bool accept(const Encoding& next) const {
    const Validation v = validate(next, Z_);
    if (!v.consistent) return false;
    return !options_.require_good || v.good;
  }

  const Encoding& Z_;
  Rng& rng_;
  const InjectOptions& options_;
};

}  // namespace

std::optional<InjectedEncoding> inject_defects(const Encoding& W, const Encoding& Z, const std::vector<ReverseOp>& ops,
                                               Rng& rng, const InjectOptions& options) {
  if (W.mode() != Z.mode() || W.n() != Z.n()) throw std::invalid_argument("W and Z differ in mode or size");
  if (!W.defect_free() || !Z.defect_free()) throw std::invalid_argument("W and Z must be defect-free");
  if (W.row_sums() != Z.row_sums() || W.column_sums() != Z.column_sums()) {
    throw std::invalid_argument("W and Z have different degrees");
  }
  InjectedEncoding out{W, {}};
  Injector injector(Z, rng, options);
  for (ReverseOp op : ops) {
    auto step = injector.apply(out.L, op);
    if (!step) return std::nullopt;
    out.L = std::move(step->first);
    out.ops.emplace_back(op, step->second);
  }
  return out;
}

std::vector<ReverseOp> reverse_plan(int p, int q, int both, Rng& rng) {
  if (p < 0 || q < 0 || both < 0 || both > p || both > q) throw std::invalid_argument("bad reverse plan counts");
  std::vector<ReverseOp> ops;
  ops.insert(ops.end(), static_cast<std::size_t>(both), ReverseOp::two_and_minus);
  ops.insert(ops.end(), static_cast<std::size_t>(p - both), ReverseOp::two);
  ops.insert(ops.end(), static_cast<std::size_t>(q - both), ReverseOp::minus);
  shuffle(ops, rng);
  return ops;
}

}  // namespace switchmix
