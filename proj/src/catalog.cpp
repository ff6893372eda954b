#include "switchmix/catalog.hpp"

#include <algorithm>
#include <map>

namespace switchmix {

namespace {

// Shapes with a free label marked 0; instantiated below.
struct Shape {
  const char* name;
  int vertices;
  std::vector<LabelledPair> pairs;
};

std::vector<DefectTemplate> build_undirected() {
  const std::vector<Shape> shapes{
      {"star-plus-edge", 6, {{0, 1, 2}, {1, 2, -1}, {1, 3, -1}, {4, 5, 0}}},
      {"star-plus-tail", 5, {{0, 1, 2}, {1, 2, -1}, {1, 3, -1}, {3, 4, 0}}},
      {"star-plus-tail-on-two", 5, {{0, 1, -1}, {1, 2, -1}, {1, 3, 2}, {3, 4, 0}}},
      {"triangle-with-pendant", 4, {{0, 3, 2}, {0, 2, -1}, {0, 1, -1}, {2, 3, 0}}},
      {"triangle-with-pendant-two", 4, {{0, 3, -1}, {0, 2, -1}, {0, 1, 2}, {2, 3, 0}}},
  };
  std::vector<DefectTemplate> out;
  for (const auto& s : shapes) {
    for (int free : {2, -1}) {
      DefectTemplate t{std::string(s.name) + (free == 2 ? "/2" : "/-1"), s.vertices, s.pairs};
      for (auto& p : t.pairs) {
        if (p.label == 0) p.label = free;
      }
      out.push_back(std::move(t));
    }
  }
  return out;
}

// Labels: 'm' = mu, 'n' = nu, 'x' = xi, 'w' = omega.
struct Arrow {
  int tail, head;
  char label;
};

std::vector<DefectTemplate> build_directed() {
  const std::vector<std::pair<const char*, std::vector<Arrow>>> shapes{
      {"D1", {{0, 1, 'm'}, {0, 2, 'm'}, {0, 3, 'n'}, {4, 0, 'w'}, {4, 5, 'x'}}},
      {"D2", {{0, 1, 'm'}, {0, 2, 'm'}, {0, 3, 'n'}, {4, 0, 'w'}, {4, 3, 'x'}}},
      {"D3", {{0, 1, 'n'}, {0, 2, 'm'}, {0, 3, 'm'}, {4, 0, 'w'}, {4, 3, 'x'}}},
      {"D4", {{0, 1, 'm'}, {0, 2, 'm'}, {0, 3, 'n'}, {3, 0, 'w'}, {3, 4, 'x'}}},
      {"D5", {{0, 1, 'n'}, {0, 2, 'm'}, {0, 3, 'm'}, {3, 0, 'w'}, {3, 4, 'x'}}},
      {"D6", {{0, 1, 'm'}, {0, 2, 'm'}, {0, 3, 'n'}, {3, 0, 'w'}, {3, 1, 'x'}}},
      {"D7", {{0, 1, 'n'}, {0, 2, 'm'}, {0, 3, 'm'}, {3, 0, 'w'}, {3, 1, 'x'}}},
      {"D8", {{0, 1, 'm'}, {0, 2, 'n'}, {0, 3, 'm'}, {3, 0, 'w'}, {3, 1, 'x'}}},
  };
  std::vector<DefectTemplate> out;
  for (const auto& [name, arrows] : shapes) {
    int vertices = 0;
    for (const auto& a : arrows) vertices = std::max({vertices, a.tail + 1, a.head + 1});
    for (int mu : {2, -1}) {
      for (int xi : {2, -1}) {
        for (bool reversed : {false, true}) {
          const std::map<char, int> value{{'m', mu}, {'n', mu == 2 ? -1 : 2}, {'x', xi}, {'w', xi == 2 ? -1 : 2}};
          DefectTemplate t;
          t.name = std::string(name) + (mu == 2 ? " mu=2" : " mu=-1") + (xi == 2 ? " xi=2" : " xi=-1") +
                   (reversed ? " reversed" : "");
          t.vertices = vertices;
          for (const auto& a : arrows) {
            const int label = value.at(a.label);
            t.pairs.push_back(reversed ? LabelledPair{a.head, a.tail, label} : LabelledPair{a.tail, a.head, label});
          }
          out.push_back(std::move(t));
        }
      }
    }
  }
  return out;
}

class Embedder {
 public:
  Embedder(const std::vector<LabelledPair>& defects, const DefectTemplate& t, bool directed)
      : defects_(defects), t_(t), directed_(directed), used_(static_cast<std::size_t>(t.vertices), false) {
    for (const auto& p : defects) {
      for (int v : {p.x, p.y}) {
        if (!image_.contains(v)) image_[v] = -1;
      }
    }
  }

  bool run() { return place(0); }

 private:
  int label_at(int a, int b) const {
    for (const auto& p : t_.pairs) {
      if (p.x == a && p.y == b) return p.label;
      if (!directed_ && p.x == b && p.y == a) return p.label;
    }
    return 0;
  }

  bool place(std::size_t k) {
    if (k == defects_.size()) return true;
    const auto& d = defects_[k];
    const int fx = image_[d.x], fy = image_[d.y];
    for (int a = 0; a < t_.vertices; ++a) {
      if (fx >= 0 ? a != fx : used_[a]) continue;
      for (int b = 0; b < t_.vertices; ++b) {
        if (b == a || (fy >= 0 ? b != fy : used_[b])) continue;
        if (label_at(a, b) != d.label) continue;
        const bool fresh_x = fx < 0, fresh_y = fy < 0;
        if (fresh_x) bind(d.x, a);
        if (fresh_y) bind(d.y, b);
        if (place(k + 1)) return true;
        if (fresh_x) unbind(d.x, a);
        if (fresh_y) unbind(d.y, b);
      }
    }
    return false;
  }

  void bind(int v, int a) {
    image_[v] = a;
    used_[a] = true;
  }
  void unbind(int v, int a) {
    image_[v] = -1;
    used_[a] = false;
  }

  const std::vector<LabelledPair>& defects_;
  const DefectTemplate& t_;
  bool directed_;
  std::vector<bool> used_;
  std::map<int, int> image_;
};

}  // namespace

const std::vector<DefectTemplate>& undirected_catalog() {
  static const std::vector<DefectTemplate> catalog = build_undirected();
  return catalog;
}

const std::vector<DefectTemplate>& directed_catalog() {
  static const std::vector<DefectTemplate> catalog = build_directed();
  return catalog;
}

bool embeds(const std::vector<LabelledPair>& defects, const DefectTemplate& t, bool directed) {
  if (defects.size() > t.pairs.size()) return false;
  return Embedder(defects, t, directed).run();
}

bool matches_catalog(const std::vector<LabelledPair>& defects, bool directed) {
  const auto& catalog = directed ? directed_catalog() : undirected_catalog();
  return std::any_of(catalog.begin(), catalog.end(), [&](const DefectTemplate& t) { return embeds(defects, t, directed); });
}

}  // namespace switchmix
