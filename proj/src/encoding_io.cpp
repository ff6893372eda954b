#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "switchmix/encoding.hpp"
#include "switchmix/schema.hpp"

namespace switchmix {

void write_encoding_csv(std::ostream& out, const Encoding& L) {
  for (int i = 0; i < L.n(); ++i) {
    for (int j = 0; j < L.n(); ++j) {
      if (j > 0) out << ',';
      out << L.at(i, j);
    }
    out << '\n';
  }
}

Encoding read_encoding_csv(std::istream& in, Mode mode) {
  std::vector<std::vector<int>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<int> row;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != cell.size()) {
        throw std::invalid_argument("row " + std::to_string(rows.size() + 1) + ": bad entry '" + cell + "'");
      }
      row.push_back(value);
    }
    rows.push_back(std::move(row));
  }
  const int n = static_cast<int>(rows.size());
  Encoding L(mode, n);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw std::invalid_argument("row " + std::to_string(i + 1) + " has " + std::to_string(rows[i].size()) +
                                  " entries, expected " + std::to_string(n));
    }
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (mode == Mode::undirected && rows[i][j] != rows[j][i]) {
        throw std::invalid_argument("undirected encoding is not symmetric at (" + std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      }
      L.set(i, j, rows[i][j]);
    }
  }
  return L;
}

namespace {

nlohmann::json sidecar_json(const Encoding& L) {
  const DefectProfile d = defect_profile(L);
  nlohmann::json j;
  j["schema_version"] = kSchemaVersion;
  j["mode"] = to_string(L.mode());
  if (L.mode() == Mode::undirected) {
    j["degrees"] = L.row_sums();
  } else {
    j["in_degrees"] = L.column_sums();
    j["out_degrees"] = L.row_sums();
  }
  j["profile"] = {{"p", d.p}, {"q", d.q}};
  return j;
}

Mode parse_mode(const nlohmann::json& j) {
  const auto mode = j.at("mode").get<std::string>();
  if (mode == "undirected") return Mode::undirected;
  if (mode == "directed") return Mode::directed;
  throw std::invalid_argument("unknown mode '" + mode + "'");
}

nlohmann::json parse_sidecar(const std::string& text) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("sidecar is not valid JSON: ") + e.what());
  }
}

}  // namespace

std::string encoding_sidecar(const Encoding& L) { return sidecar_json(L).dump(2) + "\n"; }

Mode sidecar_mode(const std::string& sidecar) {
  const auto j = parse_sidecar(sidecar);
  try {
    return parse_mode(j);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("sidecar: ") + e.what());
  }
}

Mode check_sidecar(const std::string& sidecar, const Encoding& L) {
  const auto j = parse_sidecar(sidecar);
  try {
    if (j.at("schema_version").get<std::string>() != kSchemaVersion) {
      throw std::invalid_argument("unsupported sidecar schema '" + j.at("schema_version").get<std::string>() + "'");
    }
    const Mode mode = parse_mode(j);
    if (mode != L.mode()) throw std::invalid_argument("sidecar mode does not match the matrix");
    if (mode == Mode::undirected) {
      if (j.at("degrees").get<std::vector<int>>() != L.row_sums()) {
        throw std::invalid_argument("matrix row sums differ from the sidecar degrees");
      }
    } else {
      if (j.at("in_degrees").get<std::vector<int>>() != L.column_sums() ||
          j.at("out_degrees").get<std::vector<int>>() != L.row_sums()) {
        throw std::invalid_argument("matrix row/column sums differ from the sidecar degrees");
      }
    }
    if (j.contains("profile")) {
      const DefectProfile d = defect_profile(L);
      if (j["profile"].at("p").get<int>() != d.p || j["profile"].at("q").get<int>() != d.q) {
        throw std::invalid_argument("sidecar profile differs from the matrix");
      }
    }
    return mode;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("sidecar: ") + e.what());
  }
}

}  // namespace switchmix
