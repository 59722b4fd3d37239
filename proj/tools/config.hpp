#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tfl/ensemble.hpp"
#include "tfl/gabor.hpp"
#include "tfl/lattice.hpp"
#include "tfl/types.hpp"
#include "tfl/weights.hpp"

namespace tflcli {

struct ConfigError : tfl::Error {
  using tfl::Error::Error;
};

// Global flags shared by all subcommands.
struct GlobalOptions {
  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed_override;
  std::string format = "json";  // json | csv (csv adds CSV outputs)
  int max_threads = 1;          // from TFL_THREADS; modules run within this cap
};

// Parsed and validated run configuration. Unknown keys anywhere in the
// config are rejected before any computation happens.
struct RunConfig {
  int n = 0;
  nlohmann::json raw;

  std::optional<tfl::WindowBundle> windows;  // from "window" or "windows"
  std::optional<tfl::Lattice> lattice;
  std::optional<tfl::RMatrix> symbol;
  tfl::NormSpec norm;
  std::optional<tfl::EnsembleSpec> ensemble;
  std::vector<tfl::Signal> input_signals;  // from "signals" file list

  // Command-specific options.
  std::string stft_mode = "forward";  // forward | adjoint
  std::string input_path;             // stft input file
  std::string strategy = "first";     // construct: first | conditioned
  double condition_target = 0.0;
  std::string norm_a = "modulation";     // equivalence
  std::string norm_b = "localization";   // equivalence
  int grow_count = 0;                    // equivalence: optional second ensemble size
};

// Loads, schema-validates and materializes the config for `command`.
// Throws ConfigError for malformed/unknown content, DimensionError for
// mismatched dimensions.
RunConfig load_config(const std::string& command, const GlobalOptions& options);

// Builders shared with tests.
tfl::Window window_from_spec(const nlohmann::json& spec, int n);
tfl::Lattice lattice_from_spec(const nlohmann::json& spec, int n);
tfl::RMatrix symbol_from_spec(const nlohmann::json& spec, int n,
                              const std::optional<tfl::Lattice>& lattice);

}  // namespace tflcli
