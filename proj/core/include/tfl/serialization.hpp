#pragma once

#include <string>

#include "tfl/ensemble.hpp"
#include "tfl/gabor.hpp"
#include "tfl/json_writer.hpp"
#include "tfl/lattice.hpp"
#include "tfl/modnorm.hpp"
#include "tfl/types.hpp"
#include "tfl/weights.hpp"

namespace tfl {

// JSON wire formats shared by all modules and the CLI.
//   Signal / TFMatrix: {"n": N, "re": [...], "im": [...]}
//     (row-major (k,l) order for TFMatrix: index k*N + l)
//   Lattice:           {"n": N, "generators": [[k,l], ...]}; elements are
//                      recomputed on load
//   Window bundle:     array of Signal objects
//   NormSpec:          {"p": number|"inf", "q": number|"inf",
//                       "m": {"kind": ..., ...}, "nu": {...}}
//   Weight:            {"kind": "constant", "value": c}
//                      {"kind": "polynomial", "s": s}
//                      {"kind": "exponential", "a": a, "b": b}
// Parsers throw tfl::Error subclasses on malformed input.

Signal signal_from_json(const std::string& text);
std::string signal_to_json(const Signal& s, int indent = 0);
JValue signal_to_jvalue(const Signal& s);

TFMatrix tfmatrix_from_json(const std::string& text);
std::string tfmatrix_to_json(const TFMatrix& F, int indent = 0);
JValue tfmatrix_to_jvalue(const TFMatrix& F);

Lattice lattice_from_json(const std::string& text);
std::string lattice_to_json(const Lattice& lattice, int indent = 0);
JValue lattice_to_jvalue(const Lattice& lattice);

WindowBundle window_bundle_from_json(const std::string& text);
std::string window_bundle_to_json(const WindowBundle& bundle, int indent = 0);

Weight weight_from_json(const std::string& text);
NormSpec norm_spec_from_json(const std::string& text);

JValue frame_report_to_jvalue(const FrameReport& report);
std::string frame_report_to_json(const FrameReport& report, int indent = 0);

JValue equivalence_report_to_jvalue(const EquivalenceReport& report);

// File helpers.
std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace tfl
