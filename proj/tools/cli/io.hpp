#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cyclebuy/costs.hpp"
#include "cyclebuy/edge.hpp"

namespace CLI {
class App;
}

namespace cyclebuy::cli {

// Thrown for malformed inputs; mapped to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EdgeList {
  std::uint32_t n = 0;
  std::vector<Edge> edges;
};

// One "u v" pair per line, 0-based, '#' starts a comment. n defaults to
// max vertex + 1.
EdgeList read_edge_list(const std::string& path, std::optional<std::uint32_t> n);

// One "u v cost" triple per line covering every edge of K_n exactly once.
CostAssignment read_cost_file(const std::string& path);

// Header-keyed CSV table (no quoting).
struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  // Throws InputError if `name` is not a column.
  std::size_t column(const std::string& name) const;
};
CsvTable read_csv(const std::string& path);

// Adds --config FILE to the root app: a flat JSON object whose keys are
// long option names of the subcommand at `subcommand_path`. A "config"
// member, as written in manifests, is used in place of the top level.
// Explicit flags win.
void add_json_config(CLI::App& app, std::vector<std::string> subcommand_path);

nlohmann::json edge_json(const Edge& e);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace cyclebuy::cli
