#include "cli/app.hpp"

#include <algorithm>
#include <stdexcept>

#include <CLI11.hpp>

#include "cli/commands.hpp"
#include "cli/io.hpp"
#include "cyclebuy/rng.hpp"

namespace cyclebuy::cli {

void emit(Context& ctx, const std::string& subcommand, const std::string& out_path,
          const std::string& manifest_path, const std::string& body,
          const nlohmann::json& config, const nlohmann::json& summary,
          std::optional<std::uint64_t> master_seed, double seconds) {
  if (out_path.empty()) {
    ctx.out << body;
  } else {
    write_text_file(out_path, body);
  }
  std::string target = manifest_path;
  if (target.empty() && !out_path.empty()) target = out_path + ".manifest.json";
  if (target.empty()) return;

  nlohmann::json manifest;
  manifest["tool"] = "cyclebuy";
  manifest["version"] = CYCLEBUY_VERSION;
  manifest["subcommand"] = subcommand;
  manifest["config"] = config;
  if (master_seed) {
    manifest["master_seed"] = *master_seed;
  } else {
    manifest["master_seed"] = nullptr;
  }
  manifest["rng"] = std::string(kRngAlgorithm);
  manifest["duration_seconds"] = seconds;
  manifest["summary"] = summary;
  write_text_file(target, manifest.dump(2) + "\n");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Online purchasing of small subgraphs under random edge costs", "cyclebuy"};
  app.require_subcommand(1);
  app.set_version_flag("--version", CYCLEBUY_VERSION);

  // Subcommands hand unknown options such as --config to the root.
  app.fallthrough();

  Context ctx{out, err};
  register_simulate(app, ctx);
  register_fit(app, ctx);
  register_check_lemmas(app, ctx);
  register_oracle(app, ctx);

  std::vector<std::string> path;
  const CLI::App* level = &app;
  for (const std::string& arg : args) {
    if (arg.starts_with("-")) continue;
    const CLI::App* sub = level->get_subcommand_no_throw(arg);
    if (sub == nullptr) break;
    path.push_back(arg);
    level = sub;
  }
  add_json_config(app, path);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return ctx.exit_code;
}

}  // namespace cyclebuy::cli
