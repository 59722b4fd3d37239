#include "config.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <set>

#include "tfl/phase_space.hpp"
#include "tfl/serialization.hpp"

namespace tflcli {

using nlohmann::json;
using namespace tfl;

namespace {

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

json parse_json(const std::string& text, const std::string& where) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ConfigError(where + ": malformed JSON");
  return j;
}

int require_int(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw ConfigError(where + ": missing integer '" + std::string(key) + "'");
  return j.at(key).get<int>();
}

std::string require_string(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key) || !j.at(key).is_string())
    throw ConfigError(where + ": missing string '" + std::string(key) + "'");
  return j.at(key).get<std::string>();
}

Weight weight_from_spec(const json& spec, const std::string& where) {
  const std::string kind = require_string(spec, "kind", where);
  if (kind == "constant") {
    reject_unknown(spec, {"kind", "value"}, where);
    return Weight::constant(spec.value("value", 1.0));
  }
  if (kind == "polynomial") {
    reject_unknown(spec, {"kind", "s"}, where);
    if (!spec.contains("s")) throw ConfigError(where + ": polynomial weight needs 's'");
    return Weight::polynomial(spec.at("s").get<double>());
  }
  if (kind == "exponential") {
    reject_unknown(spec, {"kind", "a", "b"}, where);
    if (!spec.contains("a") || !spec.contains("b"))
      throw ConfigError(where + ": exponential weight needs 'a' and 'b'");
    return Weight::exponential(spec.at("a").get<double>(), spec.at("b").get<double>());
  }
  throw ConfigError(where + ": unknown weight kind '" + kind + "'");
}

double exponent_from_spec(const json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
    throw ConfigError(where + ": exponent must be a number >= 1 or \"inf\"");
  }
  if (!j.is_number()) throw ConfigError(where + ": exponent must be a number >= 1 or \"inf\"");
  const double p = j.get<double>();
  if (!(p >= 1.0)) throw ConfigError(where + ": exponent must be >= 1");
  return p;
}

NormSpec norm_from_spec(const json& spec) {
  reject_unknown(spec, {"p", "q", "m", "nu"}, "norm");
  NormSpec out;
  if (spec.contains("p")) out.p = exponent_from_spec(spec.at("p"), "norm.p");
  out.q = spec.contains("q") ? exponent_from_spec(spec.at("q"), "norm.q") : out.p;
  if (spec.contains("m")) out.m = weight_from_spec(spec.at("m"), "norm.m");
  if (spec.contains("nu")) out.nu = weight_from_spec(spec.at("nu"), "norm.nu");
  return out;
}

EnsembleSpec ensemble_from_spec(const json& spec, int n) {
  reject_unknown(spec, {"count", "seed", "mix"}, "ensemble");
  EnsembleSpec out;
  out.n = n;
  out.count = require_int(spec, "count", "ensemble");
  if (out.count <= 0) throw ConfigError("ensemble: count must be positive");
  if (spec.contains("seed")) {
    if (!spec.at("seed").is_number_unsigned() && !spec.at("seed").is_number_integer())
      throw ConfigError("ensemble: seed must be an unsigned integer");
    out.seed = spec.at("seed").get<std::uint64_t>();
  }
  if (spec.contains("mix")) {
    if (!spec.at("mix").is_array() || spec.at("mix").empty())
      throw ConfigError("ensemble: mix must be a nonempty array of family names");
    out.mix.clear();
    for (const auto& fam : spec.at("mix")) {
      if (!fam.is_string()) throw ConfigError("ensemble: mix entries must be strings");
      const std::string name = fam.get<std::string>();
      if (name != "noise" && name != "tfgauss" && name != "chirp" && name != "spikes")
        throw ConfigError("ensemble: unknown generator family '" + name + "'");
      out.mix.push_back(name);
    }
  }
  return out;
}

}  // namespace

Window window_from_spec(const json& spec, int n) {
  const std::string kind = require_string(spec, "kind", "window");
  if (kind == "gaussian") {
    reject_unknown(spec, {"kind"}, "window");
    return gaussian_window(n);
  }
  if (kind == "box") {
    reject_unknown(spec, {"kind", "width"}, "window");
    return box_window(n, require_int(spec, "width", "window"));
  }
  if (kind == "delta") {
    reject_unknown(spec, {"kind"}, "window");
    return box_window(n, 1);
  }
  if (kind == "file") {
    reject_unknown(spec, {"kind", "path", "normalize"}, "window");
    Signal s = signal_from_json(read_text_file(require_string(spec, "path", "window")));
    require_same_dim(s.dim(), n, "window file");
    const bool normalize = spec.value("normalize", true);
    if (normalize) {
      const double norm = s.l2norm();
      if (norm == 0.0) throw ZeroWindowError("window file: zero window");
      s.v /= norm;
      return Window{std::move(s), WindowNorm::UnitL2};
    }
    return Window{std::move(s), WindowNorm::Raw};
  }
  throw ConfigError("window: unknown kind '" + kind + "'");
}

Lattice lattice_from_spec(const json& spec, int n) {
  const std::string kind = require_string(spec, "kind", "lattice");
  if (kind == "separable") {
    reject_unknown(spec, {"kind", "a", "b"}, "lattice");
    return Lattice::separable(n, require_int(spec, "a", "lattice"),
                              require_int(spec, "b", "lattice"));
  }
  if (kind == "full") {
    reject_unknown(spec, {"kind"}, "lattice");
    return Lattice::full(n);
  }
  if (kind == "trivial") {
    reject_unknown(spec, {"kind"}, "lattice");
    return Lattice::trivial(n);
  }
  if (kind == "generators") {
    reject_unknown(spec, {"kind", "generators"}, "lattice");
    if (!spec.contains("generators") || !spec.at("generators").is_array())
      throw ConfigError("lattice: 'generators' must be an array of [k,l] pairs");
    std::vector<PhasePoint> gens;
    for (const auto& g : spec.at("generators")) {
      if (!g.is_array() || g.size() != 2)
        throw ConfigError("lattice: generators must be [k,l] pairs");
      gens.push_back(reduce(g[0].get<long long>(), g[1].get<long long>(), n));
    }
    return Lattice::from_generators(n, std::move(gens));
  }
  if (kind == "file") {
    reject_unknown(spec, {"kind", "path"}, "lattice");
    Lattice lat = lattice_from_json(read_text_file(require_string(spec, "path", "lattice")));
    require_same_dim(lat.ambient_dim(), n, "lattice file");
    return lat;
  }
  throw ConfigError("lattice: unknown kind '" + kind + "'");
}

RMatrix symbol_from_spec(const json& spec, int n, const std::optional<Lattice>& lattice) {
  const std::string kind = require_string(spec, "kind", "symbol");
  const double scale = spec.value("scale", 1.0);
  if (scale < 0.0) throw SymbolSignError("symbol: scale must be >= 0");

  if (kind == "constant") {
    reject_unknown(spec, {"kind", "scale"}, "symbol");
    return RMatrix::Constant(n, n, scale);
  }
  if (kind == "indicator-box") {
    reject_unknown(spec, {"kind", "k0", "l0", "w", "h", "scale"}, "symbol");
    const int k0 = require_int(spec, "k0", "symbol");
    const int l0 = require_int(spec, "l0", "symbol");
    const int w = require_int(spec, "w", "symbol");
    const int h = require_int(spec, "h", "symbol");
    if (w < 0 || h < 0) throw ConfigError("symbol: box extent must be >= 0");
    RMatrix sigma = RMatrix::Zero(n, n);
    for (int dk = 0; dk < w; ++dk)
      for (int dl = 0; dl < h; ++dl) {
        const PhasePoint z = reduce(k0 + dk, l0 + dl, n);
        sigma(z.k, z.l) = scale;
      }
    return sigma;
  }
  if (kind == "gaussian-bump") {
    reject_unknown(spec, {"kind", "center", "width", "scale"}, "symbol");
    if (!spec.contains("center") || !spec.at("center").is_array() || spec.at("center").size() != 2)
      throw ConfigError("symbol: gaussian-bump needs center [k,l]");
    const double width = spec.value("width", 1.0);
    if (width <= 0.0) throw ConfigError("symbol: gaussian-bump width must be positive");
    const PhasePoint c =
        reduce(spec.at("center")[0].get<long long>(), spec.at("center")[1].get<long long>(), n);
    RMatrix sigma(n, n);
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        const double d = wrapped_abs(subtract(PhasePoint{k, l}, c, n), n);
        sigma(k, l) = scale * std::exp(-d * d / (width * width));
      }
    return sigma;
  }
  if (kind == "fundamental-cell") {
    reject_unknown(spec, {"kind", "scale"}, "symbol");
    if (!lattice) throw ConfigError("symbol: fundamental-cell requires a lattice in the config");
    RMatrix sigma = RMatrix::Zero(n, n);
    const CellMap cells(*lattice);
    for (const PhasePoint& q : cells.cell_representatives()) sigma(q.k, q.l) = scale;
    return sigma;
  }
  if (kind == "file") {
    reject_unknown(spec, {"kind", "path", "scale"}, "symbol");
    const TFMatrix F = tfmatrix_from_json(read_text_file(require_string(spec, "path", "symbol")));
    require_same_dim(F.dim(), n, "symbol file");
    RMatrix sigma(n, n);
    for (int k = 0; k < n; ++k)
      for (int l = 0; l < n; ++l) {
        const Complex v = F.m(k, l);
        if (std::abs(v.imag()) > 1e-12 * (1.0 + std::abs(v.real())))
          throw SymbolSignError("symbol file: entries must be real");
        if (v.real() < 0.0) throw SymbolSignError("symbol file: entries must be >= 0");
        sigma(k, l) = scale * v.real();
      }
    return sigma;
  }
  throw ConfigError("symbol: unknown kind '" + kind + "'");
}

RunConfig load_config(const std::string& command, const GlobalOptions& options) {
  RunConfig cfg;
  cfg.raw = parse_json(read_text_file(options.config_path), "config");
  const json& j = cfg.raw;

  static const std::set<std::string> kCommon = {"n", "window", "windows", "lattice",
                                                "symbol",  "norm",  "ensemble"};
  std::set<std::string> allowed = kCommon;
  if (command == "stft") {
    allowed.insert({"input", "mode"});
  } else if (command == "construct") {
    allowed.insert({"strategy", "condition_target"});
  } else if (command == "norms") {
    allowed.insert({"signals"});
  } else if (command == "equivalence") {
    allowed.insert({"norm_a", "norm_b", "grow_count"});
  }
  reject_unknown(j, allowed, "config");

  if (!j.contains("n")) throw ConfigError("config: missing ambient dimension 'n'");
  cfg.n = require_int(j, "n", "config");
  if (cfg.n < 2) throw ConfigError("config: need n >= 2");

  if (j.contains("window") && j.contains("windows"))
    throw ConfigError("config: give either 'window' or 'windows', not both");
  if (j.contains("window")) {
    cfg.windows = WindowBundle::single(window_from_spec(j.at("window"), cfg.n));
  } else if (j.contains("windows")) {
    if (!j.at("windows").is_array() || j.at("windows").empty())
      throw ConfigError("config: 'windows' must be a nonempty array");
    WindowBundle bundle;
    for (const auto& spec : j.at("windows")) bundle.windows.push_back(window_from_spec(spec, cfg.n));
    cfg.windows = std::move(bundle);
  }

  if (j.contains("lattice")) cfg.lattice = lattice_from_spec(j.at("lattice"), cfg.n);
  if (j.contains("symbol")) cfg.symbol = symbol_from_spec(j.at("symbol"), cfg.n, cfg.lattice);
  if (j.contains("norm")) cfg.norm = norm_from_spec(j.at("norm"));
  if (j.contains("ensemble")) {
    cfg.ensemble = ensemble_from_spec(j.at("ensemble"), cfg.n);
    if (options.seed_override) cfg.ensemble->seed = *options.seed_override;
  }

  if (command == "stft") {
    if (!j.contains("input")) throw ConfigError("stft: missing 'input' file path");
    cfg.input_path = require_string(j, "input", "stft");
    if (j.contains("mode")) {
      cfg.stft_mode = require_string(j, "mode", "stft");
      if (cfg.stft_mode != "forward" && cfg.stft_mode != "adjoint")
        throw ConfigError("stft: mode must be 'forward' or 'adjoint'");
    }
    if (!cfg.windows) throw ConfigError("stft: missing 'window'");
  } else if (command == "frame-check" || command == "duality") {
    if (!cfg.windows) throw ConfigError(command + ": missing 'window' or 'windows'");
    if (!cfg.lattice) throw ConfigError(command + ": missing 'lattice'");
  } else if (command == "construct") {
    if (!cfg.windows || cfg.windows->count() != 1)
      throw ConfigError("construct: needs exactly one 'window'");
    if (!cfg.lattice) throw ConfigError("construct: missing 'lattice'");
    if (!cfg.symbol) throw ConfigError("construct: missing 'symbol'");
    if (j.contains("strategy")) {
      cfg.strategy = require_string(j, "strategy", "construct");
      if (cfg.strategy != "first" && cfg.strategy != "conditioned")
        throw ConfigError("construct: strategy must be 'first' or 'conditioned'");
    }
    if (cfg.strategy == "conditioned") {
      if (!j.contains("condition_target"))
        throw ConfigError("construct: conditioned strategy needs 'condition_target'");
      cfg.condition_target = j.at("condition_target").get<double>();
      if (!(cfg.condition_target >= 1.0))
        throw ConfigError("construct: condition_target must be >= 1");
    }
  } else if (command == "norms") {
    if (!cfg.windows) throw ConfigError("norms: missing 'window'");
    if (!cfg.lattice) throw ConfigError("norms: missing 'lattice'");
    if (!cfg.symbol) throw ConfigError("norms: missing 'symbol'");
    if (!j.contains("signals") && !cfg.ensemble)
      throw ConfigError("norms: need 'signals' files or an 'ensemble'");
    if (j.contains("signals")) {
      if (!j.at("signals").is_array()) throw ConfigError("norms: 'signals' must be an array");
      for (const auto& path : j.at("signals")) {
        if (!path.is_string()) throw ConfigError("norms: 'signals' entries must be paths");
        Signal s = signal_from_json(read_text_file(path.get<std::string>()));
        require_same_dim(s.dim(), cfg.n, "norms signal file");
        if (s.l2norm() == 0.0)
          throw ConfigError("norms: zero signal rejected (" + path.get<std::string>() + ")");
        cfg.input_signals.push_back(std::move(s));
      }
    }
  } else if (command == "equivalence") {
    if (!cfg.windows) throw ConfigError("equivalence: missing 'window'");
    if (!cfg.lattice) throw ConfigError("equivalence: missing 'lattice'");
    if (!cfg.symbol) throw ConfigError("equivalence: missing 'symbol'");
    if (!cfg.ensemble) throw ConfigError("equivalence: missing 'ensemble'");
    const std::set<std::string> known = {"modulation", "localization", "multiwindow"};
    if (j.contains("norm_a")) cfg.norm_a = require_string(j, "norm_a", "equivalence");
    if (j.contains("norm_b")) cfg.norm_b = require_string(j, "norm_b", "equivalence");
    if (!known.count(cfg.norm_a) || !known.count(cfg.norm_b))
      throw ConfigError("equivalence: norms must be modulation|localization|multiwindow");
    if (j.contains("grow_count")) {
      cfg.grow_count = require_int(j, "grow_count", "equivalence");
      if (cfg.grow_count < 0) throw ConfigError("equivalence: grow_count must be >= 0");
    }
  } else if (command == "partition-check") {
    if (!cfg.lattice) throw ConfigError("partition-check: missing 'lattice'");
    if (!cfg.symbol) throw ConfigError("partition-check: missing 'symbol'");
  }

  return cfg;
}

}  // namespace tflcli
