#pragma once

#include <set>
#include <string>
#include <variant>

#include <json.hpp>

namespace semigraph {

/// A single cell value. The carriers used by the built-in algebras are
/// finite numbers, the distinguished extremes -inf/+inf (explicit domain
/// elements, never IEEE overflow artifacts), text, finite text sets, and
/// an absorbing bottom element.
class Value {
 public:
  enum class Kind { kNumber, kNegInf, kPosInf, kText, kTextSet, kBottom };

  Value() : rep_(0.0) {}

  static Value number(double x);  // rejects NaN and IEEE infinities
  static Value neg_inf() { return Value(NegInfT{}); }
  static Value pos_inf() { return Value(PosInfT{}); }
  static Value text(std::string s) { return Value(std::move(s)); }
  static Value text_set(std::set<std::string> s) { return Value(std::move(s)); }
  static Value bottom() { return Value(BottomT{}); }

  Kind kind() const { return static_cast<Kind>(rep_.index()); }
  bool is_number() const { return kind() == Kind::kNumber; }
  bool is_text() const { return kind() == Kind::kText; }
  bool is_text_set() const { return kind() == Kind::kTextSet; }

  double as_number() const;
  const std::string& as_text() const;
  const std::set<std::string>& as_text_set() const;

  bool operator==(const Value& o) const { return rep_ == o.rep_; }
  bool operator!=(const Value& o) const { return !(*this == o); }

  /// Exact equality except numbers, which compare within `tol`.
  static bool approx_equal(const Value& a, const Value& b, double tol);

  std::string display() const;

  /// JSON encoding: number; "-inf"/"+inf"; string; sorted array of
  /// strings; null for bottom.
  nlohmann::json to_json() const;
  static Value from_json(const nlohmann::json& j);

 private:
  struct NegInfT {
    bool operator==(const NegInfT&) const = default;
  };
  struct PosInfT {
    bool operator==(const PosInfT&) const = default;
  };
  struct BottomT {
    bool operator==(const BottomT&) const = default;
  };
  using Rep = std::variant<double, NegInfT, PosInfT, std::string,
                           std::set<std::string>, BottomT>;

  explicit Value(Rep rep) : rep_(std::move(rep)) {}

  Rep rep_;
};

/// "123" for integral magnitudes below 2^53, shortest-ish decimal otherwise.
std::string format_number(double x);

}  // namespace semigraph
