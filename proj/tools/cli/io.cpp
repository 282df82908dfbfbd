#include "cli/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

namespace cyclebuy::cli {

namespace {

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return in;
}

// Strips comments; returns false for blank lines.
bool content_of(std::string& line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  return line.find_first_not_of(" \t\r") != std::string::npos;
}

std::string where(const std::string& path, std::size_t line_no) {
  return path + ":" + std::to_string(line_no);
}

class JsonConfig final : public CLI::Config {
 public:
  explicit JsonConfig(std::vector<std::string> parents) : parents_(std::move(parents)) {}

  std::string to_config(const CLI::App*, bool, bool, std::string) const override { return {}; }

  std::vector<CLI::ConfigItem> from_config(std::istream& input) const override {
    nlohmann::json doc;
    try {
      input >> doc;
    } catch (const nlohmann::json::exception& e) {
      throw CLI::ConversionError("config is not valid JSON: " + std::string(e.what()));
    }
    const nlohmann::json& flat = doc.contains("config") ? doc.at("config") : doc;
    if (!flat.is_object()) throw CLI::ConversionError("config must be a JSON object");
    std::vector<CLI::ConfigItem> items;
    for (const auto& [key, value] : flat.items()) {
      if (value.is_null()) continue;
      CLI::ConfigItem item;
      item.parents = parents_;
      item.name = key;
      if (value.is_array()) {
        for (const auto& v : value) item.inputs.push_back(scalar(v));
      } else {
        item.inputs.push_back(scalar(value));
      }
      items.push_back(std::move(item));
    }
    return items;
  }

 private:
  static std::string scalar(const nlohmann::json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
  }

  std::vector<std::string> parents_;
};

}  // namespace

EdgeList read_edge_list(const std::string& path, std::optional<std::uint32_t> n) {
  std::ifstream in = open_input(path);
  EdgeList list;
  std::uint32_t max_vertex = 0;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (!content_of(line)) continue;
    std::istringstream fields(line);
    long long a = -1, b = -1;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra) || a < 0 || b < 0 || a == b) {
      throw InputError(where(path, line_no) + ": expected two distinct vertices 'u v'");
    }
    const Edge e = make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    max_vertex = std::max(max_vertex, e.v);
    list.edges.push_back(e);
  }
  list.n = n.value_or(list.edges.empty() ? 0 : max_vertex + 1);
  if (!list.edges.empty() && max_vertex >= list.n) {
    throw InputError(path + ": vertex " + std::to_string(max_vertex) + " outside n=" +
                     std::to_string(list.n));
  }
  return list;
}

CostAssignment read_cost_file(const std::string& path) {
  std::ifstream in = open_input(path);
  struct Entry {
    Edge e;
    double cost;
  };
  std::vector<Entry> entries;
  std::uint32_t max_vertex = 0;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    if (!content_of(line)) continue;
    std::istringstream fields(line);
    long long a = -1, b = -1;
    double cost = -1.0;
    std::string extra;
    if (!(fields >> a >> b >> cost) || (fields >> extra) || a < 0 || b < 0 || a == b) {
      throw InputError(where(path, line_no) + ": expected 'u v cost'");
    }
    const Edge e = make_edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
    max_vertex = std::max(max_vertex, e.v);
    entries.push_back({e, cost});
  }
  const std::uint32_t n = max_vertex + 1;
  if (n < 2) throw InputError(path + ": no edges");
  const std::uint64_t N = edge_count(n);
  std::vector<double> costs(N, -1.0);
  for (const Entry& entry : entries) {
    double& slot = costs[edge_index(entry.e, n)];
    if (slot >= 0.0) {
      throw InputError(path + ": edge " + std::to_string(entry.e.u) + " " +
                       std::to_string(entry.e.v) + " listed twice");
    }
    slot = entry.cost;
  }
  if (std::find(costs.begin(), costs.end(), -1.0) != costs.end()) {
    throw InputError(path + ": every edge of K_" + std::to_string(n) + " needs a cost");
  }
  try {
    return CostAssignment(n, std::move(costs));
  } catch (const std::invalid_argument& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::size_t CsvTable::column(const std::string& name) const {
  const auto it = std::find(header.begin(), header.end(), name);
  if (it == header.end()) throw InputError("CSV has no column '" + name + "'");
  return static_cast<std::size_t>(it - header.begin());
}

CsvTable read_csv(const std::string& path) {
  std::ifstream in = open_input(path);
  const auto split = [](const std::string& line) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream s(line);
    while (std::getline(s, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
  };
  CsvTable table;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (table.header.empty()) {
      table.header = split(line);
    } else {
      table.rows.push_back(split(line));
    }
  }
  if (table.header.empty()) throw InputError(path + ": empty CSV");
  return table;
}

void add_json_config(CLI::App& app, std::vector<std::string> subcommand_path) {
  app.config_formatter(std::make_shared<JsonConfig>(std::move(subcommand_path)));
  app.set_config("--config", "", "JSON file of option values (flags override)");
}

nlohmann::json edge_json(const Edge& e) { return nlohmann::json::array({e.u, e.v}); }

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << content;
  if (!out) throw InputError("failed writing '" + path + "'");
}

}  // namespace cyclebuy::cli
