#include "switchmix/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace switchmix {

namespace {

bool skippable(const std::string& line) {
  const auto first = line.find_first_not_of(" \t\r");
  return first == std::string::npos || line[first] == '#';
}

[[noreturn]] void fail(std::size_t line_no, const std::string& why) {
  throw std::invalid_argument("line " + std::to_string(line_no) + ": " + why);
}

template <class... Ts>
bool read_exact(const std::string& line, Ts&... values) {
  std::istringstream ss(line);
  (ss >> ... >> values);
  if (!ss) return false;
  std::string rest;
  return !(ss >> rest);
}

int parse_int(std::string_view token) {
  std::size_t used = 0;
  const std::string s(token);
  int value = 0;
  try {
    value = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("not an integer: '" + s + "'");
  }
  if (used != s.size()) throw std::invalid_argument("not an integer: '" + s + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    auto part = text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    parts.push_back(part);
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

DegreeSequence read_degree_sequence(std::istream& in) {
  std::vector<int> degrees;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (skippable(line)) continue;
    int d = 0;
    if (!read_exact(line, d)) fail(line_no, "expected one integer degree");
    degrees.push_back(d);
  }
  return DegreeSequence(std::move(degrees));
}

DirectedDegreeSequence read_directed_degree_sequence(std::istream& in) {
  std::vector<DegreePair> pairs;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (skippable(line)) continue;
    DegreePair p;
    if (!read_exact(line, p.in, p.out)) fail(line_no, "expected \"in out\"");
    pairs.push_back(p);
  }
  return DirectedDegreeSequence(std::move(pairs));
}

DegreeSequence parse_degree_sequence(std::string_view text) {
  std::vector<int> degrees;
  for (auto token : split(text, ',')) degrees.push_back(parse_int(token));
  return DegreeSequence(std::move(degrees));
}

DirectedDegreeSequence parse_directed_degree_sequence(std::string_view text) {
  std::vector<DegreePair> pairs;
  for (auto token : split(text, ',')) {
    const auto halves = split(token, ':');
    if (halves.size() != 2) throw std::invalid_argument("expected in:out, got '" + std::string(token) + "'");
    pairs.push_back({parse_int(halves[0]), parse_int(halves[1])});
  }
  return DirectedDegreeSequence(std::move(pairs));
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << "n " << g.n() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_edge_list(std::ostream& out, const Digraph& g) {
  out << "n " << g.n() << '\n';
  for (const auto& a : g.arcs()) out << a.tail << ' ' << a.head << '\n';
}

namespace {

template <class Header, class Add>
void read_pairs(std::istream& in, Header&& on_header, Add&& add) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    if (!have_header) {
      std::string tag;
      int n = 0;
      if (!read_exact(line, tag, n) || tag != "n" || n < 0) fail(line_no, "expected header \"n <count>\"");
      on_header(n);
      have_header = true;
      continue;
    }
    int u = 0, v = 0;
    if (!read_exact(line, u, v)) fail(line_no, "expected \"u v\"");
    try {
      add(u, v);
    } catch (const std::invalid_argument& e) {
      fail(line_no, e.what());
    }
  }
  if (!have_header) throw std::invalid_argument("missing header \"n <count>\"");
}

}  // namespace

Graph read_graph(std::istream& in) {
  Graph g;
  read_pairs(in, [&](int n) { g = Graph(n); }, [&](int u, int v) { g.add_edge(u, v); });
  return g;
}

Digraph read_digraph(std::istream& in) {
  Digraph g;
  read_pairs(in, [&](int n) { g = Digraph(n); }, [&](int u, int v) { g.add_arc(u, v); });
  return g;
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream ss;
  write_edge_list(ss, g);
  return ss.str();
}

std::string to_edge_list(const Digraph& g) {
  std::ostringstream ss;
  write_edge_list(ss, g);
  return ss.str();
}

}  // namespace switchmix
