// tfl - finite time-frequency localization toolkit CLI.
#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>

#include "commands.hpp"
#include "config.hpp"

namespace {

using namespace tflcli;

int read_thread_cap() {
  const char* env = std::getenv("TFL_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (end == nullptr || *end != '\0' || v < 1) {
    throw ConfigError("TFL_THREADS must be a positive integer");
  }
  return static_cast<int>(v);
}

int run(const std::string& command, const GlobalOptions& options) {
  RunConfig cfg;
  try {
    GlobalOptions opts = options;
    opts.max_threads = read_thread_cap();
    cfg = load_config(command, opts);
  } catch (const tfl::DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDimension;
  } catch (const std::exception& e) {
    // Everything raised while materializing the config counts as a config error.
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (command == "stft") return cmd_stft(cfg, options);
    if (command == "frame-check") return cmd_frame_check(cfg, options);
    if (command == "construct") return cmd_construct(cfg, options);
    if (command == "norms") return cmd_norms(cfg, options);
    if (command == "equivalence") return cmd_equivalence(cfg, options);
    if (command == "duality") return cmd_duality(cfg, options);
    if (command == "partition-check") return cmd_partition_check(cfg, options);
    std::cerr << "error: unknown command\n";
    return kExitConfig;
  } catch (const tfl::DimensionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDimension;
  } catch (const tfl::PartitionError& e) {
    std::cerr << "negative: " << e.what() << "\n";
    return kExitNegative;
  } catch (const tfl::ExhaustedError& e) {
    std::cerr << "negative: " << e.what() << "\n";
    return kExitNegative;
  } catch (const tfl::NotAFrameError& e) {
    std::cerr << "negative: " << e.what() << "\n";
    return kExitNegative;
  } catch (const tfl::NotHermitianError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const tfl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite time-frequency localization toolkit"};
  app.require_subcommand(1);

  GlobalOptions options;
  std::uint64_t seed_value = 0;
  bool seed_given = false;

  const std::pair<const char*, const char*> commands[] = {
      {"stft", "short-time Fourier transform of a signal file (forward or adjoint)"},
      {"frame-check", "frame bounds and the frame-criteria cross-check"},
      {"construct", "multi-window frame from localization-operator eigenfunctions"},
      {"norms", "modulation / localization / multi-window norms per signal"},
      {"equivalence", "two-sided norm equivalence over a seeded ensemble"},
      {"duality", "Janssen, Wexler-Raz and Ron-Shen duality report"},
      {"partition-check", "covering bounds of the lattice-translated symbol"},
  };
  for (const auto& [name, blurb] : commands) {
    CLI::App* sub = app.add_subcommand(name, blurb);
    sub->add_option("--config", options.config_path, "path to the run configuration (JSON)")
        ->required();
    sub->add_option("--out", options.out_dir, "output directory (default: current)");
    sub->add_option("--seed", seed_value, "override the ensemble seed")
        ->each([&](const std::string&) { seed_given = true; });
    sub->add_option("--format", options.format, "json | csv (csv adds CSV outputs)")
        ->check(CLI::IsMember({"json", "csv"}));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;  // command-line misuse is a config error
  }

  if (seed_given) options.seed_override = seed_value;
  const std::string command = app.get_subcommands().front()->get_name();
  return run(command, options);
}
