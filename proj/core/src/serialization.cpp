#include "tfl/serialization.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

namespace tfl {

namespace {

using nlohmann::json;

json parse(const std::string& text, const char* what) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(std::string(what) + ": malformed JSON");
  return j;
}

std::pair<CVector, int> complex_array_from(const json& j, const char* what) {
  if (!j.is_object() || !j.contains("n") || !j.contains("re") || !j.contains("im"))
    throw Error(std::string(what) + ": expected object with n, re, im");
  const int n = j.at("n").get<int>();
  const auto& re = j.at("re");
  const auto& im = j.at("im");
  if (!re.is_array() || !im.is_array() || re.size() != im.size())
    throw Error(std::string(what) + ": re/im must be arrays of equal length");
  CVector v(static_cast<Eigen::Index>(re.size()));
  for (size_t i = 0; i < re.size(); ++i)
    v[static_cast<Eigen::Index>(i)] = Complex(re[i].get<double>(), im[i].get<double>());
  return {std::move(v), n};
}

JValue complex_array_to(const CVector& v, int n) {
  JValue re = JValue::array();
  JValue im = JValue::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    re.push_back(v[i].real());
    im.push_back(v[i].imag());
  }
  JValue obj = JValue::object();
  obj.set("n", n);
  obj.set("re", std::move(re));
  obj.set("im", std::move(im));
  return obj;
}

Weight weight_from(const json& j) {
  if (!j.is_object() || !j.contains("kind")) throw Error("weight: expected object with kind");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "constant") return Weight::constant(j.value("value", 1.0));
  if (kind == "polynomial") return Weight::polynomial(j.at("s").get<double>());
  if (kind == "exponential")
    return Weight::exponential(j.at("a").get<double>(), j.at("b").get<double>());
  throw Error("weight: unknown kind '" + kind + "'");
}

double exponent_from(const json& j, const char* name) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return std::numeric_limits<double>::infinity();
    throw Error(std::string("norm spec: ") + name + " must be a number or \"inf\"");
  }
  const double p = j.get<double>();
  if (!(p >= 1.0)) throw Error(std::string("norm spec: ") + name + " must be >= 1");
  return p;
}

}  // namespace

Signal signal_from_json(const std::string& text) {
  const json j = parse(text, "signal");
  auto [v, n] = complex_array_from(j, "signal");
  if (v.size() != n) throw DimensionError("signal: value count does not match n");
  return Signal(std::move(v));
}

JValue signal_to_jvalue(const Signal& s) { return complex_array_to(s.v, s.dim()); }

std::string signal_to_json(const Signal& s, int indent) {
  return signal_to_jvalue(s).dump(indent);
}

TFMatrix tfmatrix_from_json(const std::string& text) {
  const json j = parse(text, "tfmatrix");
  auto [v, n] = complex_array_from(j, "tfmatrix");
  if (v.size() != static_cast<Eigen::Index>(n) * n)
    throw DimensionError("tfmatrix: value count does not match n*n");
  CMatrix m(n, n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) m(k, l) = v[static_cast<Eigen::Index>(k) * n + l];
  return TFMatrix(std::move(m));
}

JValue tfmatrix_to_jvalue(const TFMatrix& F) {
  const int n = F.dim();
  CVector flat(static_cast<Eigen::Index>(n) * n);
  for (int k = 0; k < n; ++k)
    for (int l = 0; l < n; ++l) flat[static_cast<Eigen::Index>(k) * n + l] = F.m(k, l);
  return complex_array_to(flat, n);
}

std::string tfmatrix_to_json(const TFMatrix& F, int indent) {
  return tfmatrix_to_jvalue(F).dump(indent);
}

Lattice lattice_from_json(const std::string& text) {
  const json j = parse(text, "lattice");
  if (!j.is_object() || !j.contains("n") || !j.contains("generators"))
    throw Error("lattice: expected object with n, generators");
  const int n = j.at("n").get<int>();
  std::vector<PhasePoint> gens;
  for (const auto& g : j.at("generators")) {
    if (!g.is_array() || g.size() != 2) throw Error("lattice: generators must be [k,l] pairs");
    gens.push_back(reduce(g[0].get<long long>(), g[1].get<long long>(), n));
  }
  return Lattice::from_generators(n, std::move(gens));
}

JValue lattice_to_jvalue(const Lattice& lattice) {
  JValue gens = JValue::array();
  for (const PhasePoint& g : lattice.generators()) {
    JValue pair = JValue::array();
    pair.push_back(g.k);
    pair.push_back(g.l);
    gens.push_back(std::move(pair));
  }
  JValue obj = JValue::object();
  obj.set("n", lattice.ambient_dim());
  obj.set("generators", std::move(gens));
  return obj;
}

std::string lattice_to_json(const Lattice& lattice, int indent) {
  return lattice_to_jvalue(lattice).dump(indent);
}

WindowBundle window_bundle_from_json(const std::string& text) {
  const json j = parse(text, "window bundle");
  if (!j.is_array()) throw Error("window bundle: expected array of signals");
  WindowBundle bundle;
  for (const auto& item : j) {
    auto [v, n] = complex_array_from(item, "window bundle");
    if (v.size() != n) throw DimensionError("window bundle: value count does not match n");
    bundle.windows.push_back(Window{Signal(std::move(v)), WindowNorm::Raw});
  }
  bundle.validate();
  return bundle;
}

std::string window_bundle_to_json(const WindowBundle& bundle, int indent) {
  JValue arr = JValue::array();
  for (const Window& w : bundle.windows) arr.push_back(signal_to_jvalue(w.s));
  return arr.dump(indent);
}

Weight weight_from_json(const std::string& text) {
  return weight_from(parse(text, "weight"));
}

NormSpec norm_spec_from_json(const std::string& text) {
  const json j = parse(text, "norm spec");
  if (!j.is_object()) throw Error("norm spec: expected object");
  NormSpec spec;
  spec.p = j.contains("p") ? exponent_from(j.at("p"), "p") : 2.0;
  spec.q = j.contains("q") ? exponent_from(j.at("q"), "q") : spec.p;
  if (j.contains("m")) spec.m = weight_from(j.at("m"));
  if (j.contains("nu")) spec.nu = weight_from(j.at("nu"));
  return spec;
}

JValue frame_report_to_jvalue(const FrameReport& report) {
  JValue spectrum = JValue::array();
  for (Eigen::Index i = 0; i < report.spectrum.size(); ++i) spectrum.push_back(report.spectrum[i]);
  JValue obj = JValue::object();
  obj.set("A", report.lower);
  obj.set("B", report.upper);
  obj.set("is_frame", report.is_frame);
  obj.set("condition", report.condition);
  obj.set("spectrum", std::move(spectrum));
  return obj;
}

std::string frame_report_to_json(const FrameReport& report, int indent) {
  return frame_report_to_jvalue(report).dump(indent);
}

JValue equivalence_report_to_jvalue(const EquivalenceReport& report) {
  JValue ratios = JValue::array();
  for (double r : report.ratios) ratios.push_back(r);
  JValue obj = JValue::object();
  obj.set("r_min", report.r_min);
  obj.set("r_max", report.r_max);
  obj.set("condition", report.condition);
  obj.set("ensemble", report.ensemble_descriptor);
  obj.set("ratios", std::move(ratios));
  return obj;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

}  // namespace tfl
