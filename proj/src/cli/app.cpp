#include "spintherm/cli/app.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "spintherm/cli/commands.hpp"
#include "spintherm/errors.hpp"

namespace spintherm::cli {

namespace {

// Config files are flat `key = value` lists naming the long flags of the
// chosen subcommand. Their entries are spliced in ahead of the command-line
// flags; every option keeps its last value, so flags override the file.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 == args.size()) {
        throw ConfigError("--config requires a file name");
      }
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (path.empty()) {
    return rest;
  }
  const auto sub = std::find_if(rest.begin(), rest.end(),
                                [](const std::string& a) { return a.empty() || a[0] != '-'; });
  if (sub == rest.end()) {
    throw ConfigError("--config needs a subcommand");
  }
  std::vector<std::string> injected;
  for (const auto& item : CLI::ConfigTOML().from_file(path)) {
    if (item.name == "++" || item.name == "--") {
      continue;  // section markers
    }
    if (!item.parents.empty() && !(item.parents.size() == 1 && item.parents[0] == *sub)) {
      continue;
    }
    injected.push_back("--" + item.name);
    if (!item.inputs.empty()) {
      std::string joined;
      for (std::size_t k = 0; k < item.inputs.size(); ++k) {
        joined += (k ? "," : "") + item.inputs[k];
      }
      injected.push_back(joined);
    }
  }
  rest.insert(sub + 1, injected.begin(), injected.end());
  return rest;
}

struct OutputOptions {
  std::string format = "csv";
  std::string path;
};

struct GridOptions {
  TauGrid grid;
  std::string spacing = "linear";
  std::string explicit_values;

  [[nodiscard]] std::vector<double> values() const {
    if (!explicit_values.empty()) {
      auto v = parse_real_list(explicit_values);
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (!(v[i] > 0.0) || (i > 0 && !(v[i] > v[i - 1]))) {
          throw ConfigError("--tau values must be positive and strictly increasing");
        }
      }
      return v;
    }
    TauGrid g = grid;
    if (spacing == "log") {
      g.log_spacing = true;
    } else if (spacing != "linear") {
      throw ConfigError("--tau-spacing must be linear or log, got '" + spacing + "'");
    }
    return g.values();
  }
};

void add_output(CLI::App* cmd, OutputOptions& o) {
  cmd->add_option("--format", o.format, "csv or json")->capture_default_str();
  cmd->add_option("--out", o.path, "write data to this file instead of stdout");
}

void add_grid(CLI::App* cmd, GridOptions& g) {
  cmd->add_option("--tau", g.explicit_values, "explicit comma-separated tau values");
  cmd->add_option("--tau-start", g.grid.start)->capture_default_str();
  cmd->add_option("--tau-stop", g.grid.stop)->capture_default_str();
  cmd->add_option("--tau-count", g.grid.count)->capture_default_str();
  cmd->add_option("--tau-spacing", g.spacing, "linear or log")->capture_default_str();
}

struct BatteryFlags {
  BatteryOptions options;
  std::string d_s = "0";
  std::string tau_batt = "0.3";

  void add_to(CLI::App* cmd) {
    auto& b = options.base;
    cmd->add_option("--tau-env", b.tau_env, "environment initial temperature")
        ->capture_default_str();
    cmd->add_option("--tau-batt", tau_batt, "battery initial temperatures, e.g. 0.3,0.367")
        ->capture_default_str();
    cmd->add_option("--ds", d_s, "spin-bath state counts, e.g. 0..8 (0 = no spin bath)")
        ->capture_default_str();
    cmd->add_option("--d-env", b.d_env)->capture_default_str();
    cmd->add_option("--d-e", b.d_E)->capture_default_str();
    cmd->add_option("--weight-env", b.weight_env)->capture_default_str();
    cmd->add_option("--weight-e", b.weight_E)->capture_default_str();
    cmd->add_option("--weight-s", b.weight_s)->capture_default_str();
    cmd->add_option("--threads", options.threads, "sweep workers, 0 = all cores")
        ->capture_default_str();
  }

  BatteryOptions resolve() {
    options.d_s = parse_int_list(d_s);
    options.tau_batt = parse_real_list(tau_batt);
    return options;
  }
};

int emit(const CommandOutput& result, const OutputOptions& o, std::ostream& out) {
  const Format format = parse_format(o.format);
  if (o.path.empty()) {
    write_table(out, result.table, format);
  } else {
    std::ofstream file(o.path);
    if (!file) {
      throw ConfigError("cannot open '" + o.path + "' for writing");
    }
    write_table(file, result.table, format);
  }
  return result.status;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    std::vector<std::string> argv = expand_config(args);

    CLI::App app{"Spin thermodynamics and entropy-battery calculator", "spintherm"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.set_help_all_flag("--help-all");

    OutputOptions output;
    GridOptions grid;
    std::function<CommandOutput()> action;

    BatteryFlags battery;
    auto* bat = app.add_subcommand("battery", "solve entropy-battery scenarios over a sweep");
    battery.add_to(bat);
    add_output(bat, output);
    bat->callback([&] { action = [&] { return cmd_battery(battery.resolve()); }; });

    auto* conv = app.add_subcommand("convergence",
                                    "re-solve battery scenarios with doubled energy baths");
    battery.add_to(conv);
    add_output(conv, output);
    conv->callback([&] { action = [&] { return cmd_convergence(battery.resolve()); }; });

    ResponseOptions response;
    std::string models = "boson";
    auto* resp = app.add_subcommand("response", "waste and entropic responses over tau");
    resp->add_option("--model", models, "distinguishable, boson, einstein, debye (comma list)")
        ->capture_default_str();
    resp->add_option("--states", response.states, "d = 2S+1")->capture_default_str();
    resp->add_option("--cutoff", response.cutoff, "Debye cutoff 2S (default d-1)");
    add_grid(resp, grid);
    add_output(resp, output);
    resp->callback([&] {
      action = [&] {
        response.models.clear();
        for (const auto& m : CLI::detail::split(models, ',')) {
          response.models.push_back(CLI::detail::trim_copy(m));
        }
        response.tau = grid.values();
        return cmd_response(response);
      };
    });

    EntropyOptions ent;
    std::string statistics = "boson";
    auto* entc = app.add_subcommand("entropy", "finite-N entropy and heat over tau");
    entc->add_option("--statistics", statistics, "distinguishable, boson or fermion")
        ->capture_default_str();
    entc->add_option("--particles", ent.particles, "N")->capture_default_str();
    entc->add_option("--states", ent.states, "d = 2S+1")->capture_default_str();
    add_grid(entc, grid);
    add_output(entc, output);
    entc->callback([&] {
      action = [&] {
        ent.statistics = parse_statistics(statistics);
        ent.tau = grid.values();
        return cmd_entropy(ent);
      };
    });

    PolarizationOptions pol;
    std::string spins = "0.5";
    std::string alphas;
    TauGrid alpha_grid{0.01, 0.99, 99, false};
    auto* polc = app.add_subcommand("polarization", "spin temperature of a polarization");
    polc->add_option("--spin", spins, "spin values S, e.g. 0.5,1,200")->capture_default_str();
    polc->add_option("--alpha", alphas, "explicit comma-separated alpha values");
    polc->add_option("--alpha-start", alpha_grid.start)->capture_default_str();
    polc->add_option("--alpha-stop", alpha_grid.stop)->capture_default_str();
    polc->add_option("--alpha-count", alpha_grid.count)->capture_default_str();
    add_output(polc, output);
    polc->callback([&] {
      action = [&] {
        pol.spins = parse_real_list(spins);
        pol.alphas = alphas.empty() ? alpha_grid.values() : parse_real_list(alphas);
        return cmd_polarization(pol);
      };
    });

    try {
      std::reverse(argv.begin(), argv.end());
      app.parse(argv);
    } catch (const CLI::CallForHelp& e) {
      return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
      return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
      app.exit(e, err, err);
      return kExitConfig;
    }
    return emit(action(), output, out);
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const CLI::FileError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::length_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitConfig;
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args(argv + std::min(argc, 1), argv + argc);
  return run(args, out, err);
}

}  // namespace spintherm::cli
