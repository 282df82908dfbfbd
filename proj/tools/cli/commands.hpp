#pragma once

#include <optional>
#include <ostream>
#include <string>

#include <nlohmann/json.hpp>

namespace CLI {
class App;
}

namespace cyclebuy::cli {

struct Context {
  std::ostream& out;
  std::ostream& err;
  int exit_code = 0;
};

void register_simulate(CLI::App& root, Context& ctx);
void register_fit(CLI::App& root, Context& ctx);
void register_check_lemmas(CLI::App& root, Context& ctx);
void register_oracle(CLI::App& root, Context& ctx);

// Writes `body` to `out_path` (or the context's stdout when empty). A
// manifest goes next to every file: `manifest_path`, else
// "<out_path>.manifest.json". `config` must reload through --config.
void emit(Context& ctx, const std::string& subcommand, const std::string& out_path,
          const std::string& manifest_path, const std::string& body,
          const nlohmann::json& config, const nlohmann::json& summary,
          std::optional<std::uint64_t> master_seed, double seconds);

}  // namespace cyclebuy::cli
