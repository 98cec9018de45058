// shortrange: phase-shift scans and S-matrix pole reports for a small
// spherical obstacle with a Robin surface condition.
//
// Exit codes: 0 success, 1 I/O failure, 2 configuration error,
// 3 numerical failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shortrange/cli.hpp"

namespace {

namespace cli = shortrange::cli;

struct FlagValues {
  std::optional<std::string> config, preset, l, lambda, chi, c, kmin, kmax, n, out, outputs;
};

void add_channel_flags(CLI::App* app, FlagValues& f) {
  app->add_option("--config", f.config, "key = value config file (flags override it)");
  app->add_option("--preset", f.preset, "named parameter set (see `presets`)");
  app->add_option("--l", f.l, "angular momentum l");
  app->add_option("--lambda", f.lambda, "cutoff radius");
  app->add_option("--chi", f.chi, "rescaled coupling chi_l (exclusive with --c)");
  app->add_option("--c", f.c, "surface parameter C_l, or 'inf' for Dirichlet (exclusive with --chi)");
}

std::vector<cli::Layer> layers_from(const FlagValues& f) {
  std::vector<cli::Layer> layers;
  if (f.config) layers.push_back(cli::parse_config_file(*f.config));
  cli::Layer flags{"command line", {}};
  auto put = [&flags](const char* key, const std::optional<std::string>& v) {
    if (v) flags.set(key, *v, std::string("--") + key);
  };
  put("preset", f.preset);
  put("l", f.l);
  put("lambda", f.lambda);
  put("chi", f.chi);
  put("c", f.c);
  put("kmin", f.kmin);
  put("kmax", f.kmax);
  put("n", f.n);
  put("out", f.out);
  put("outputs", f.outputs);
  layers.push_back(std::move(flags));
  return layers;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Low-energy scattering off a small sphere with a Robin surface condition"};
  app.require_subcommand(1);

  FlagValues scan_flags;
  auto* scan = app.add_subcommand("scan", "phase shifts over a momentum grid, written as CSV");
  add_channel_flags(scan, scan_flags);
  scan->add_option("--kmin", scan_flags.kmin, "smallest momentum (> 0)");
  scan->add_option("--kmax", scan_flags.kmax, "largest momentum");
  scan->add_option("--n", scan_flags.n, "number of grid points (>= 2)");
  scan->add_option("--out", scan_flags.out, "CSV path (a .gp plot script is written beside it); default stdout");
  scan->add_option("--outputs", scan_flags.outputs, "comma list of full,eff,zero");

  FlagValues pole_flags;
  auto* poles = app.add_subcommand("poles", "roots of the S-matrix pole equation");
  add_channel_flags(poles, pole_flags);
  poles->add_option("--out", pole_flags.out, "also write the pole table as CSV");

  app.add_subcommand("presets", "list the named parameter sets");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (scan->parsed()) {
      const auto cfg = cli::build_scan_config(layers_from(scan_flags));
      cli::run_scan(cfg, std::cout);
      if (!cfg.output_path.empty()) std::cerr << "wrote " << cfg.output_path << " and " << cfg.output_path << ".gp\n";
    } else if (poles->parsed()) {
      const auto spec = cli::resolve_channel(layers_from(pole_flags));
      if (!spec.channel) throw shortrange::ConfigError("pole report needs a finite C (chi is undefined for Dirichlet)");
      if (pole_flags.out) {
        std::ofstream csv(*pole_flags.out);
        if (!csv) {
          std::cerr << "error: cannot write '" << *pole_flags.out << "'\n";
          return 1;
        }
        cli::run_pole_report(*spec.channel, std::cout, &csv);
      } else {
        cli::run_pole_report(*spec.channel, std::cout);
      }
    } else {
      cli::print_presets(std::cout);
    }
  } catch (const shortrange::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const shortrange::DomainError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const shortrange::NumericError& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
