#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "commands.hpp"

namespace {

using namespace liouville;
using namespace liouville::cli;

std::optional<RectSpec> parse_rect(const std::vector<double>& r) {
  if (r.empty()) return std::nullopt;
  return RectSpec{{r[0], r[1]}, {r[2], r[3]}};
}

// Opens --out / --svg, or falls back to stdout.
int with_output(const std::string& path, const std::function<int(std::ostream&)>& body) {
  if (path.empty() || path == "-") {
    const int rc = body(std::cout);
    std::cout.flush();
    return std::cout ? rc : kIo;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    fmt::print(stderr, "error: cannot open '{}' for writing\n", path);
    return kIo;
  }
  const int rc = body(f);
  f.close();
  if (!f) {
    fmt::print(stderr, "error: failed writing '{}'\n", path);
    return kIo;
  }
  return rc;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diagonal energies on Liouville surfaces"};
  app.set_config("--config", "", "INI file with flag defaults; command-line flags win");
  app.require_subcommand(1);

  RunConfig cfg;
  std::vector<double> axes, rect;
  std::string out, svg;
  bool no_timestamp = false;

  // Options live on the top-level app so a flat INI file reaches all of them;
  // fallthrough lets them follow the subcommand on the command line.
  app.add_option("--chart", cfg.chart, "catalog chart name, or 'ellipsoid'")->capture_default_str();
  app.add_option("--axes", axes, "ellipsoid semi-axes a,b,c")->delimiter(',')->expected(3);
  app.add_option("--helicoid-t", cfg.helicoid_t, "helicoid-catenoid family parameter")->check(CLI::Range(0.0, 1.0));
  app.add_option("--rect", rect, "rectangle cu,cv,du,dv")->delimiter(',')->expected(4);
  app.add_option("--rects", cfg.rects, "random rectangles in a sweep")->check(CLI::NonNegativeNumber);
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--k", cfg.k, "polygon subdivisions / k-sweep bound")->check(CLI::PositiveNumber);
  app.add_option("--quad-order", cfg.quad_order, "Gauss-Legendre order")->check(CLI::Range(1, 1024));
  app.add_option("--tol", cfg.tol, "relative gap tolerance")->check(CLI::PositiveNumber);
  app.add_option("--out", out, "CSV output path (default stdout)");
  app.add_option("--svg", svg, "SVG output path for net (default stdout)");
  app.add_option("--lines", cfg.net_lines, "net: parameter lines per direction")->check(CLI::PositiveNumber);
  app.add_flag("--discrete", cfg.discrete, "net: draw k-segment polygonal diagonals");
  app.add_option("--project", cfg.project, "net: projection axis for surfaces in space")
      ->check(CLI::IsMember({'x', 'y', 'z'}));
  app.add_flag("--no-timestamp", no_timestamp, "net: omit the generation comment");
  app.add_option("--kind", cfg.kind, "table: k-sweep|rects|geodesic|ellipsoid|special")
      ->check(CLI::IsMember({"k-sweep", "rects", "geodesic", "ellipsoid", "special"}));
  app.add_option("--dim", cfg.dim, "nd-verify: dimension n")->check(CLI::Range(2, kMaxNdDimension));

  auto* verify = app.add_subcommand("verify", "run the verification suite on one chart");
  auto* net = app.add_subcommand("net", "SVG of the parameter net with a rectangle and its diagonals");
  auto* table = app.add_subcommand("table", "numeric tables");
  app.add_subcommand("nd-verify", "equal diagonal energies in n dimensions");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kOk : kUsage;
  }

  try {
    if (!axes.empty()) {
      cfg.axes = {axes[0], axes[1], axes[2]};
      cfg.axes.validate();
    }
    cfg.rect = parse_rect(rect);
    cfg.timestamp = !no_timestamp;

    if (verify->parsed()) return with_output(out, [&](std::ostream& o) { return cmd_verify(cfg, o); });
    if (net->parsed()) {
      return with_output(svg, [&](std::ostream& o) {
        cmd_net(cfg, o);
        return int{kOk};
      });
    }
    if (table->parsed()) {
      return with_output(out, [&](std::ostream& o) {
        cmd_table(cfg, o);
        return int{kOk};
      });
    }
    return with_output(out, [&](std::ostream& o) { return cmd_nd_verify(cfg, o); });
  } catch (const LookupError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kUsage;
  } catch (const std::invalid_argument& e) {  // ArgumentError, UsageError
    fmt::print(stderr, "error: {}\n", e.what());
    return kUsage;
  } catch (const DomainError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kUsage;
  } catch (const UnsupportedError& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kUsage;
  } catch (const std::exception& e) {
    fmt::print(stderr, "error: {}\n", e.what());
    return kVerifyFailed;
  }
}
