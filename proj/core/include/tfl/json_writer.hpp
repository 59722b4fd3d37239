#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace tfl {

// Minimal JSON value tree with insertion-ordered objects and fixed float
// formatting (%.17g), so serialized reports are byte-identical across runs.
// Non-finite doubles are emitted as the strings "inf", "-inf", "nan".
class JValue {
 public:
  JValue() : kind_(Kind::Null) {}
  JValue(bool b) : kind_(Kind::Bool), bool_(b) {}
  JValue(int v) : kind_(Kind::Int), int_(v) {}
  JValue(long long v) : kind_(Kind::Int), int_(v) {}
  JValue(std::uint64_t v) : kind_(Kind::Int), int_(static_cast<long long>(v)) {}
  JValue(double v) : kind_(Kind::Double), double_(v) {}
  JValue(const char* s) : kind_(Kind::String), string_(s) {}
  JValue(std::string s) : kind_(Kind::String), string_(std::move(s)) {}

  static JValue array();
  static JValue object();

  JValue& push_back(JValue v);               // arrays
  JValue& set(const std::string& key, JValue v);  // objects, insertion order

  std::string dump(int indent = 0) const;

 private:
  enum class Kind { Null, Bool, Int, Double, String, Array, Object };

  void write(std::string& out, int indent, int depth) const;

  Kind kind_;
  bool bool_ = false;
  long long int_ = 0;
  double double_ = 0.0;
  std::string string_;
  std::vector<JValue> items_;
  std::vector<std::pair<std::string, JValue>> fields_;
};

// %.17g rendering used for every double in serialized output.
std::string format_double(double v);

}  // namespace tfl
