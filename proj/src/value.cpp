#include "semigraph/value.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "semigraph/error.hpp"

namespace semigraph {

Value Value::number(double x) {
  if (!std::isfinite(x)) {
    throw ParseError(
        "non-finite number; use the explicit -inf/+inf domain elements");
  }
  return Value(Rep(x));
}

double Value::as_number() const {
  if (!is_number()) throw Error("value is not a number: " + display());
  return std::get<double>(rep_);
}

const std::string& Value::as_text() const {
  if (!is_text()) throw Error("value is not text: " + display());
  return std::get<std::string>(rep_);
}

const std::set<std::string>& Value::as_text_set() const {
  if (!is_text_set()) throw Error("value is not a set: " + display());
  return std::get<std::set<std::string>>(rep_);
}

bool Value::approx_equal(const Value& a, const Value& b, double tol) {
  if (a.kind() == Kind::kNumber && b.kind() == Kind::kNumber) {
    return std::fabs(std::get<double>(a.rep_) - std::get<double>(b.rep_)) <=
           tol;
  }
  return a == b;
}

std::string format_number(double x) {
  if (x == std::floor(x) && std::fabs(x) < 9.0e15) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%lld", static_cast<long long>(x));
    return buf;
  }
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string Value::display() const {
  switch (kind()) {
    case Kind::kNumber:
      return format_number(std::get<double>(rep_));
    case Kind::kNegInf:
      return "-inf";
    case Kind::kPosInf:
      return "+inf";
    case Kind::kText:
      return std::get<std::string>(rep_);
    case Kind::kTextSet: {
      std::ostringstream out;
      out << '{';
      bool first = true;
      for (const auto& item : std::get<std::set<std::string>>(rep_)) {
        if (!first) out << ',';
        out << item;
        first = false;
      }
      out << '}';
      return out.str();
    }
    case Kind::kBottom:
      return "null";
  }
  return {};
}

nlohmann::json Value::to_json() const {
  switch (kind()) {
    case Kind::kNumber:
      return std::get<double>(rep_);
    case Kind::kNegInf:
      return "-inf";
    case Kind::kPosInf:
      return "+inf";
    case Kind::kText:
      return std::get<std::string>(rep_);
    case Kind::kTextSet: {
      auto arr = nlohmann::json::array();
      for (const auto& item : std::get<std::set<std::string>>(rep_)) {
        arr.push_back(item);
      }
      return arr;
    }
    case Kind::kBottom:
      return nullptr;
  }
  return nullptr;
}

Value Value::from_json(const nlohmann::json& j) {
  if (j.is_number()) return Value::number(j.get<double>());
  if (j.is_null()) return Value::bottom();
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    if (s == "-inf") return Value::neg_inf();
    if (s == "+inf") return Value::pos_inf();
    return Value::text(s);
  }
  if (j.is_array()) {
    std::set<std::string> items;
    for (const auto& item : j) {
      if (!item.is_string()) {
        throw ParseError("set values must contain strings: " + j.dump());
      }
      items.insert(item.get<std::string>());
    }
    return Value::text_set(std::move(items));
  }
  throw ParseError("unsupported value encoding: " + j.dump());
}

}  // namespace semigraph
