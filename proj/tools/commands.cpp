#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <iostream>
#include <limits>
#include <memory>

#include "tfl/json_writer.hpp"
#include "tfl/locop.hpp"
#include "tfl/modnorm.hpp"
#include "tfl/phase_space.hpp"
#include "tfl/serialization.hpp"

namespace tflcli {

using namespace tfl;

namespace {

std::string out_path(const GlobalOptions& options, const std::string& name) {
  std::filesystem::create_directories(options.out_dir);
  return (std::filesystem::path(options.out_dir) / name).string();
}

JValue criteria_to_jvalue(const FrameCriteriaReport& report) {
  JValue items = JValue::array();
  for (const auto& item : report.items) {
    JValue entry = JValue::object();
    entry.set("name", item.name);
    entry.set("satisfied", item.satisfied);
    entry.set("evidence", item.evidence);
    entry.set("method", item.method);
    entry.set("collapsed", item.collapsed);
    items.push_back(std::move(entry));
  }
  JValue obj = JValue::object();
  obj.set("all_agree", report.all_agree);
  obj.set("is_frame", report.is_frame);
  obj.set("items", std::move(items));
  return obj;
}

NormFn make_norm_fn(const std::string& which, const RunConfig& cfg,
                    const std::shared_ptr<LocOp>& base, const std::shared_ptr<CellMap>& cells) {
  const Window phi = cfg.windows->windows.front();
  const NormSpec spec = cfg.norm;
  if (which == "modulation") {
    return [phi, spec](const Signal& f) { return modulation_norm(f, phi, spec); };
  }
  if (which == "localization") {
    return [base, cells, spec](const Signal& f) {
      return localization_norm(f, *base, *cells, spec);
    };
  }
  const WindowBundle bundle = *cfg.windows;
  return [bundle, cells, spec](const Signal& f) {
    return multiwindow_coefficient_norm(f, bundle, *cells, spec);
  };
}

std::string csv_row(std::initializer_list<double> values) {
  std::string row;
  bool first = true;
  for (double v : values) {
    if (!first) row += ",";
    first = false;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    row += buf;
  }
  return row;
}

}  // namespace

int cmd_stft(const RunConfig& cfg, const GlobalOptions& options) {
  const Window& phi = cfg.windows->windows.front();
  const std::string input = read_text_file(cfg.input_path);

  if (cfg.stft_mode == "forward") {
    const Signal f = signal_from_json(input);
    require_same_dim(f.dim(), cfg.n, "stft input");
    const TFMatrix v = stft(phi, f);
    write_text_file(out_path(options, "stft.json"), tfmatrix_to_json(v, 2));
    if (options.format == "csv") {
      std::string csv = "k,l,magnitude\n";
      for (int k = 0; k < cfg.n; ++k)
        for (int l = 0; l < cfg.n; ++l)
          csv += std::to_string(k) + "," + std::to_string(l) + "," +
                 csv_row({std::abs(v.m(k, l))}) + "\n";
      write_text_file(out_path(options, "stft_magnitude.csv"), csv);
    }
    std::cout << "stft: wrote " << cfg.n << "x" << cfg.n << " transform\n";
  } else {
    const TFMatrix F = tfmatrix_from_json(input);
    require_same_dim(F.dim(), cfg.n, "stft input");
    const Signal f = stft_adjoint(phi, F);
    write_text_file(out_path(options, "stft.json"), signal_to_json(f, 2));
    std::cout << "stft: wrote adjoint of " << cfg.n << "x" << cfg.n << " array\n";
  }
  return kExitOk;
}

int cmd_frame_check(const RunConfig& cfg, const GlobalOptions& options) {
  const WindowBundle& bundle = *cfg.windows;
  const FrameReport report = frame_bounds(frame_operator(bundle, *cfg.lattice));
  const FrameCriteriaReport criteria = frame_criteria_report(bundle, *cfg.lattice);

  JValue obj = JValue::object();
  obj.set("report", frame_report_to_jvalue(report));
  obj.set("criteria", criteria_to_jvalue(criteria));
  write_text_file(out_path(options, "frame_check.json"), obj.dump(2));

  std::cout << "frame-check: A=" << format_double(report.lower)
            << " B=" << format_double(report.upper) << " is_frame=" << report.is_frame
            << " criteria_agree=" << criteria.all_agree << "\n";
  if (!criteria.all_agree) return kExitNumerical;
  return report.is_frame ? kExitOk : kExitNegative;
}

int cmd_construct(const RunConfig& cfg, const GlobalOptions& options) {
  const SearchStrategy strategy =
      cfg.strategy == "first" ? SearchStrategy::FirstFrame : SearchStrategy::Conditioned;
  const ConstructionResult result = construct_multiwindow_frame(
      *cfg.symbol, cfg.windows->windows.front(), *cfg.lattice, strategy, cfg.condition_target);

  // Decay profile of the search's source operator, as a picking aid for n.
  const LocOp op = localization_operator(*cfg.symbol, cfg.windows->windows.front());
  const DecayProfile profile = eigenvalue_decay_profile(spectral_decomposition(op), op.symbol);
  JValue decay = JValue::object();
  {
    JValue eigenvalues = JValue::array();
    for (Eigen::Index i = 0; i < profile.eigenvalues.size(); ++i)
      eigenvalues.push_back(profile.eigenvalues[i]);
    JValue counts = JValue::array();
    for (const auto& [threshold, count] : profile.counts_above) {
      JValue entry = JValue::object();
      entry.set("threshold", threshold);
      entry.set("count", count);
      counts.push_back(std::move(entry));
    }
    decay.set("eigenvalues", std::move(eigenvalues));
    decay.set("trace", profile.trace);
    decay.set("symbol_mass", profile.symbol_mass);
    decay.set("counts_above", std::move(counts));
  }

  JValue tried = JValue::array();
  for (size_t i = 0; i < result.tried_counts.size(); ++i) {
    JValue step = JValue::object();
    step.set("n", result.tried_counts[i]);
    step.set("condition", result.tried_conditions[i]);
    tried.push_back(std::move(step));
  }
  // Post-hoc verification of the returned bundle through the duality route.
  const WindowBundle duals = dual_windows(result.bundle, *cfg.lattice);
  const WexlerRazResult wr = wexler_raz_check(result.bundle, duals, *cfg.lattice);
  JValue verified = JValue::object();
  verified.set("is_frame", result.report.is_frame);
  verified.set("wexler_raz_passes", wr.passes);
  verified.set("wexler_raz_max_residual", wr.max_residual);

  JValue obj = JValue::object();
  obj.set("n", result.n_windows);
  obj.set("strategy", cfg.strategy);
  obj.set("report", frame_report_to_jvalue(result.report));
  obj.set("verified", std::move(verified));
  obj.set("tried", std::move(tried));
  obj.set("decay_profile", std::move(decay));
  obj.set("windows_file", "construct_windows.json");
  write_text_file(out_path(options, "construct.json"), obj.dump(2));
  write_text_file(out_path(options, "construct_windows.json"),
                  window_bundle_to_json(result.bundle, 2));

  std::cout << "construct: n=" << result.n_windows << " A=" << format_double(result.report.lower)
            << " B=" << format_double(result.report.upper)
            << " wexler_raz=" << (wr.passes ? "pass" : "fail") << "\n";
  if (!wr.passes) return kExitNumerical;
  return kExitOk;
}

int cmd_norms(const RunConfig& cfg, const GlobalOptions& options) {
  std::vector<Signal> signals = cfg.input_signals;
  if (cfg.ensemble) {
    const std::vector<Signal> extra = make_ensemble(*cfg.ensemble);
    signals.insert(signals.end(), extra.begin(), extra.end());
  }

  const auto base = std::make_shared<LocOp>(
      localization_operator(*cfg.symbol, cfg.windows->windows.front()));
  const auto cells = std::make_shared<CellMap>(*cfg.lattice);
  const NormFn f_mod = make_norm_fn("modulation", cfg, base, cells);
  const NormFn f_loc = make_norm_fn("localization", cfg, base, cells);
  const NormFn f_mw = make_norm_fn("multiwindow", cfg, base, cells);

  JValue rows = JValue::array();
  std::string csv = "index,modulation,localization,multiwindow\n";
  for (size_t i = 0; i < signals.size(); ++i) {
    const double nm = f_mod(signals[i]);
    const double nl = f_loc(signals[i]);
    const double nw = f_mw(signals[i]);
    JValue row = JValue::object();
    row.set("index", static_cast<long long>(i));
    row.set("modulation", nm);
    row.set("localization", nl);
    row.set("multiwindow", nw);
    rows.push_back(std::move(row));
    csv += std::to_string(i) + "," + csv_row({nm, nl, nw}) + "\n";
  }
  JValue obj = JValue::object();
  obj.set("count", static_cast<long long>(signals.size()));
  obj.set("rows", std::move(rows));
  write_text_file(out_path(options, "norms.json"), obj.dump(2));
  if (options.format == "csv") write_text_file(out_path(options, "norms.csv"), csv);

  std::cout << "norms: " << signals.size() << " signals\n";
  return kExitOk;
}

int cmd_equivalence(const RunConfig& cfg, const GlobalOptions& options) {
  const auto base = std::make_shared<LocOp>(
      localization_operator(*cfg.symbol, cfg.windows->windows.front()));
  const auto cells = std::make_shared<CellMap>(*cfg.lattice);
  const NormFn norm_a = make_norm_fn(cfg.norm_a, cfg, base, cells);
  const NormFn norm_b = make_norm_fn(cfg.norm_b, cfg, base, cells);

  const EquivalenceReport report = equivalence_estimate(norm_a, norm_b, *cfg.ensemble);

  JValue obj = JValue::object();
  obj.set("norm_a", cfg.norm_a);
  obj.set("norm_b", cfg.norm_b);
  obj.set("report", equivalence_report_to_jvalue(report));
  if (cfg.grow_count > 0) {
    EnsembleSpec grown = *cfg.ensemble;
    grown.count = cfg.grow_count;
    const EquivalenceReport big = equivalence_estimate(norm_a, norm_b, grown);
    JValue growth = JValue::object();
    growth.set("count", cfg.grow_count);
    growth.set("r_min", big.r_min);
    growth.set("r_max", big.r_max);
    growth.set("condition", big.condition);
    growth.set("r_min_drift", std::abs(big.r_min - report.r_min) / report.r_min);
    growth.set("r_max_drift", std::abs(big.r_max - report.r_max) / report.r_max);
    obj.set("growth", std::move(growth));
  }
  write_text_file(out_path(options, "equivalence.json"), obj.dump(2));
  if (options.format == "csv") {
    std::string csv = "index,ratio\n";
    for (size_t i = 0; i < report.ratios.size(); ++i)
      csv += std::to_string(i) + "," + csv_row({report.ratios[i]}) + "\n";
    write_text_file(out_path(options, "equivalence.csv"), csv);
  }

  std::cout << "equivalence: condition=" << format_double(report.condition) << " over "
            << report.ratios.size() << " signals\n";
  return kExitOk;
}

int cmd_duality(const RunConfig& cfg, const GlobalOptions& options) {
  const WindowBundle& bundle = *cfg.windows;
  const Lattice& lattice = *cfg.lattice;

  const CMatrix s = frame_operator(bundle, lattice);
  const FrameReport fb = frame_bounds(s);
  const Lattice adjoint = adjoint_lattice(lattice);

  const bool volume_ok =
      static_cast<long long>(lattice.size()) * adjoint.size() ==
      static_cast<long long>(cfg.n) * cfg.n;
  const bool involution_ok = adjoint_lattice(adjoint) == lattice;

  const JanssenResult janssen = janssen_representation(bundle, bundle, lattice);

  const RieszBounds rb = riesz_bounds(gramian(bundle, adjoint));
  const bool ron_shen_agree =
      fb.is_frame == (rb.lower > kFrameTolRel * std::max(rb.upper, 0.0));

  bool wexler_ok = false;
  double wexler_residual = std::numeric_limits<double>::infinity();
  bool is_frame = fb.is_frame;
  if (is_frame) {
    const WindowBundle duals = dual_windows(bundle, lattice);
    const WexlerRazResult wr = wexler_raz_check(bundle, duals, lattice);
    wexler_ok = wr.passes;
    wexler_residual = wr.max_residual;
  }

  JValue obj = JValue::object();
  obj.set("is_frame", is_frame);
  JValue jj = JValue::object();
  jj.set("kappa", janssen.kappa);
  jj.set("residual", janssen.residual);
  jj.set("adjoint_size", adjoint.size());
  obj.set("janssen", std::move(jj));
  JValue jw = JValue::object();
  jw.set("passes", wexler_ok);
  jw.set("max_residual", wexler_residual);
  obj.set("wexler_raz", std::move(jw));
  JValue jr = JValue::object();
  jr.set("frame_lower", fb.lower);
  jr.set("frame_upper", fb.upper);
  jr.set("riesz_lower", rb.lower);
  jr.set("riesz_upper", rb.upper);
  jr.set("agree", ron_shen_agree);
  obj.set("ron_shen", std::move(jr));
  JValue jl = JValue::object();
  jl.set("lattice_size", lattice.size());
  jl.set("adjoint_size", adjoint.size());
  jl.set("volume_product_ok", volume_ok);
  jl.set("involution_ok", involution_ok);
  obj.set("lattice", std::move(jl));
  write_text_file(out_path(options, "duality.json"), obj.dump(2));

  const bool all_ok = volume_ok && involution_ok && ron_shen_agree &&
                      janssen.residual < 1e-10 && (!is_frame || wexler_ok);
  std::cout << "duality: janssen_residual=" << format_double(janssen.residual)
            << " wexler_raz=" << (is_frame ? (wexler_ok ? "pass" : "fail") : "n/a (not a frame)")
            << " ron_shen_agree=" << ron_shen_agree << "\n";
  if (!all_ok) return kExitNegative;
  return is_frame ? kExitOk : kExitNegative;
}

int cmd_partition_check(const RunConfig& cfg, const GlobalOptions& options) {
  const PartitionBounds bounds = partition_check(*cfg.symbol, *cfg.lattice);

  JValue obj = JValue::object();
  obj.set("A", bounds.lower);
  obj.set("B", bounds.upper);
  obj.set("passes", bounds.lower > 0.0);
  write_text_file(out_path(options, "partition.json"), obj.dump(2));

  std::cout << "partition-check: A=" << format_double(bounds.lower)
            << " B=" << format_double(bounds.upper) << "\n";
  return bounds.lower > 0.0 ? kExitOk : kExitNegative;
}

}  // namespace tflcli
