#include <chrono>
#include <memory>

#include <CLI11.hpp>

#include "cli/app.hpp"
#include "cli/commands.hpp"
#include "cli/io.hpp"
#include "cyclebuy/fit.hpp"

namespace cyclebuy::cli {

namespace {

struct FitOptions {
  std::string in;
  std::string x = "n";
  std::string y = "mean_cost";
  std::string out;
  std::string manifest;
};

double parse_cell(const std::string& cell, const std::string& column, std::size_t row) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(cell, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != cell.size()) {
    throw InputError("row " + std::to_string(row + 1) + ": column '" + column +
                     "' is not a number: '" + cell + "'");
  }
  return value;
}

void execute(Context& ctx, const FitOptions& o) {
  const auto start = std::chrono::steady_clock::now();
  const CsvTable table = read_csv(o.in);
  const std::size_t xi = table.column(o.x);
  const std::size_t yi = table.column(o.y);
  std::vector<std::pair<double, double>> points;
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row.size() != table.header.size()) {
      throw InputError("row " + std::to_string(r + 1) + " has " + std::to_string(row.size()) +
                       " cells, header has " + std::to_string(table.header.size()));
    }
    points.emplace_back(parse_cell(row[xi], o.x, r), parse_cell(row[yi], o.y, r));
  }
  const FitResult fit = fit_exponent(points);

  nlohmann::json result;
  result["x"] = o.x;
  result["y"] = o.y;
  result["slope"] = fit.slope;
  result["intercept"] = fit.intercept;
  result["r_squared"] = fit.r_squared;
  result["points"] = fit.points;
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  nlohmann::json echo{{"in", o.in}, {"x", o.x}, {"y", o.y}};
  nlohmann::json summary{{"slope", fit.slope}, {"r_squared", fit.r_squared}};
  emit(ctx, "fit", o.out, o.manifest, result.dump(2) + "\n", echo, summary, std::nullopt,
       seconds);
  ctx.exit_code = kOk;
}

}  // namespace

void register_fit(CLI::App& root, Context& ctx) {
  auto o = std::make_shared<FitOptions>();
  CLI::App* sub = root.add_subcommand("fit", "Fit a power law y = a x^b to two CSV columns");
  sub->add_option("--in", o->in, "Input CSV")->required();
  sub->add_option("--x", o->x, "Column for x")->capture_default_str();
  sub->add_option("--y", o->y, "Column for y")->capture_default_str();
  sub->add_option("--out", o->out, "JSON output path (stdout if omitted)");
  sub->add_option("--manifest", o->manifest, "Manifest path (default <out>.manifest.json)");
  sub->callback([&ctx, o] { execute(ctx, *o); });
}

}  // namespace cyclebuy::cli
