#include <stdexcept>
#include <string>

#include "switchmix/catalog.hpp"
#include "switchmix/enumerate.hpp"
#include "switchmix/errors.hpp"

namespace switchmix {

namespace {

class EncodingSearch {
 public:
  EncodingSearch(const Encoding& Z, std::size_t cap) : Z_(Z), cap_(cap), L_(Z.mode(), Z.n()) {
    const int n = Z.n();
    directed_ = Z.mode() == Mode::directed;
    for (int i = 0; i < n; ++i) {
      for (int j = directed_ ? 0 : i + 1; j < n; ++j) {
        if (i != j) positions_.push_back({i, j});
      }
    }
    out_target_ = Z.row_sums();
    in_target_ = Z.column_sums();
    out_sum_.assign(n, 0);
    in_sum_.assign(n, 0);
    out_min_.assign(n, 0);
    out_max_.assign(n, 0);
    in_min_.assign(n, 0);
    in_max_.assign(n, 0);
    for (const auto& [i, j] : positions_) add_range(i, j, +1);
  }

  std::vector<Encoding> run() {
    place(0);
    return std::move(found_);
  }

 private:
  // Z = 0 allows {0,1,2}, Z = 1 allows {-1,0,1}.
  int low(int i, int j) const { return Z_.at(i, j) == 1 ? -1 : 0; }
  int high(int i, int j) const { return Z_.at(i, j) == 1 ? 1 : 2; }

  void add_range(int i, int j, int sign) {
    const int lo = sign * low(i, j), hi = sign * high(i, j);
    out_min_[i] += lo;
    out_max_[i] += hi;
    if (directed_) {
      in_min_[j] += lo;
      in_max_[j] += hi;
    } else {
      out_min_[j] += lo;
      out_max_[j] += hi;
    }
  }

  void add_value(int i, int j, int value) {
    out_sum_[i] += value;
    (directed_ ? in_sum_ : out_sum_)[j] += value;
  }

  bool feasible(int v) const {
    const int need = out_target_[v] - out_sum_[v];
    if (need < out_min_[v] || need > out_max_[v]) return false;
    if (!directed_) return true;
    const int need_in = in_target_[v] - in_sum_[v];
    return need_in >= in_min_[v] && need_in <= in_max_[v];
  }

  void place(std::size_t k) {
    if (k == positions_.size()) {
      if (is_good_encoding(L_)) {
        if (found_.size() >= cap_) throw CapExceeded("more than " + std::to_string(cap_) + " encodings");
        found_.push_back(L_);
      }
      return;
    }
    const auto [i, j] = positions_[k];
    add_range(i, j, -1);
    for (int value = low(i, j); value <= high(i, j); ++value) {
      const bool defect = value == 2 || value == -1;
      if (defect) {
        defects_.push_back({i, j, value});
        if (defects_.size() > (directed_ ? 5u : 4u) || !matches_catalog(defects_, directed_)) {
          defects_.pop_back();
          continue;
        }
      }
      add_value(i, j, value);
      if (feasible(i) && feasible(j)) {
        L_.set(i, j, value);
        place(k + 1);
        L_.set(i, j, 0);
      }
      add_value(i, j, -value);
      if (defect) defects_.pop_back();
    }
    add_range(i, j, +1);
  }

  const Encoding& Z_;
  std::size_t cap_;
  bool directed_ = false;
  Encoding L_;
  std::vector<std::pair<int, int>> positions_;
  std::vector<int> out_target_, in_target_, out_sum_, in_sum_;
  // Bounds on what the unplaced positions can still add, per vertex.
  std::vector<int> out_min_, out_max_, in_min_, in_max_;
  std::vector<LabelledPair> defects_;
  std::vector<Encoding> found_;
};

}  // namespace

std::vector<Encoding> enum_good_encodings(const Encoding& Z, const EncodingEnumLimits& limits) {
  if (!Z.defect_free()) throw std::invalid_argument("Z must be defect-free");
  const std::int64_t size = Z.total();
  if (Z.n() > limits.max_vertices || size > limits.max_size) {
    throw std::invalid_argument("instance too large for encoding enumeration (n=" + std::to_string(Z.n()) +
                                ", size=" + std::to_string(size) + ")");
  }
  return EncodingSearch(Z, limits.cap).run();
}

}  // namespace switchmix
