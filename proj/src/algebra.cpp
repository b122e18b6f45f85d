#include "semigraph/algebra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <random>
#include <sstream>

#include "semigraph/error.hpp"

namespace semigraph {

namespace {

using Kind = Value::Kind;

[[noreturn]] void bad_operand(const std::string& alg, const Value& v) {
  throw Error(alg + ": operand outside carrier: " + v.display());
}

// Order rank for extended reals: -inf < finite < +inf.
int extended_rank(const std::string& alg, const Value& v) {
  switch (v.kind()) {
    case Kind::kNegInf:
      return -1;
    case Kind::kNumber:
      return 0;
    case Kind::kPosInf:
      return 1;
    default:
      bad_operand(alg, v);
  }
}

Value ext_min(const std::string& alg, const Value& a, const Value& b) {
  const int ra = extended_rank(alg, a);
  const int rb = extended_rank(alg, b);
  if (ra != rb) return ra < rb ? a : b;
  if (ra != 0) return a;
  return a.as_number() <= b.as_number() ? a : b;
}

Value ext_max(const std::string& alg, const Value& a, const Value& b) {
  const int ra = extended_rank(alg, a);
  const int rb = extended_rank(alg, b);
  if (ra != rb) return ra > rb ? a : b;
  if (ra != 0) return a;
  return a.as_number() >= b.as_number() ? a : b;
}

// Arithmetic with one distinguished absorbing extreme; the other extreme is
// outside the carrier.
Value add_absorbing(const std::string& alg, Kind absorb, const Value& a,
                    const Value& b) {
  if (a.kind() == absorb) return a;
  if (b.kind() == absorb) return b;
  if (a.is_number() && b.is_number()) {
    return Value::number(a.as_number() + b.as_number());
  }
  bad_operand(alg, a.is_number() ? b : a);
}

Value mul_absorbing(const std::string& alg, Kind absorb, const Value& a,
                    const Value& b) {
  if (a.kind() == absorb) return a;
  if (b.kind() == absorb) return b;
  if (a.is_number() && b.is_number()) {
    return Value::number(a.as_number() * b.as_number());
  }
  bad_operand(alg, a.is_number() ? b : a);
}

Value plain_add(const std::string& alg, const Value& a, const Value& b) {
  if (!a.is_number()) bad_operand(alg, a);
  if (!b.is_number()) bad_operand(alg, b);
  return Value::number(a.as_number() + b.as_number());
}

Value plain_mul(const std::string& alg, const Value& a, const Value& b) {
  if (!a.is_number()) bad_operand(alg, a);
  if (!b.is_number()) bad_operand(alg, b);
  return Value::number(a.as_number() * b.as_number());
}

constexpr double kRealTolerance = 1e-12;

bool tol_equals(const Value& a, const Value& b) {
  return Value::approx_equal(a, b, kRealTolerance);
}

Value parse_numeric_value(const std::string& text) {
  if (text == "-inf") return Value::neg_inf();
  if (text == "+inf" || text == "inf") return Value::pos_inf();
  char* end = nullptr;
  const double x = std::strtod(text.c_str(), &end);
  if (end == text.c_str() || *end != '\0') {
    throw ParseError("not a number: '" + text + "'");
  }
  return Value::number(x);
}

Value parse_set_value(const std::string& text) {
  std::string body = text;
  if (body.size() >= 2 && body.front() == '{' && body.back() == '}') {
    body = body.substr(1, body.size() - 2);
  }
  std::set<std::string> items;
  std::string item;
  std::istringstream in(body);
  while (std::getline(in, item, ',')) {
    if (!item.empty()) items.insert(item);
  }
  return Value::text_set(std::move(items));
}

void push_unique(std::vector<Value>& out, const Value& v) {
  for (const auto& existing : out) {
    if (existing == v) return;
  }
  out.push_back(v);
}

// Seeded sample: fixed base elements first (0 and 1 among them), then
// generated values until `count` distinct elements are collected.
std::vector<Value> fill_sample(std::vector<Value> base, std::size_t count,
                               std::uint64_t seed,
                               const std::function<Value(std::mt19937_64&)>& gen) {
  std::vector<Value> out;
  for (const auto& v : base) push_unique(out, v);
  std::mt19937_64 rng(seed);
  std::size_t attempts = 0;
  while (out.size() < count && attempts < count * 20 + 64) {
    push_unique(out, gen(rng));
    ++attempts;
  }
  return out;
}

std::string random_alnum(std::mt19937_64& rng, int max_len) {
  static constexpr char kChars[] = "abcdefghijklmnopqrstuvwxyz0123456789";
  const int len = 1 + static_cast<int>(rng() % max_len);
  std::string s;
  s.reserve(len);
  for (int i = 0; i < len; ++i) {
    s.push_back(kChars[rng() % (sizeof(kChars) - 1)]);
  }
  return s;
}

Domain sampled_domain(
    std::vector<Value> base,
    std::function<Value(std::mt19937_64&)> gen) {
  Domain d;
  d.finite = false;
  d.sampler = [base = std::move(base), gen = std::move(gen)](
                  std::size_t count, std::uint64_t seed) {
    return fill_sample(base, count, seed, gen);
  };
  return d;
}

// --- built-in algebra factories -------------------------------------------

AlgebraPtr make_plus_times() {
  ValueAlgebra::Spec s;
  s.name = "plus.times";
  s.zero = Value::number(0);
  s.one = Value::number(1);
  s.domain = sampled_domain(
      {Value::number(0), Value::number(1), Value::number(0.5),
       Value::number(2), Value::number(3), Value::number(7.25)},
      [](std::mt19937_64& rng) {
        std::uniform_real_distribution<double> dist(0.1, 10.0);
        return Value::number(dist(rng));
      });
  s.plus = [n = s.name](const Value& a, const Value& b) {
    return plain_add(n, a, b);
  };
  s.times = [n = s.name](const Value& a, const Value& b) {
    return plain_mul(n, a, b);
  };
  s.equals = tol_equals;
  s.parse = parse_numeric_value;
  return ValueAlgebra::create(std::move(s));
}

AlgebraPtr make_max_times() {
  ValueAlgebra::Spec s;
  s.name = "max.times";
  s.zero = Value::number(0);
  s.one = Value::number(1);
  s.domain = sampled_domain(
      {Value::number(0), Value::number(1), Value::number(0.5),
       Value::number(2), Value::number(3)},
      [](std::mt19937_64& rng) {
        std::uniform_real_distribution<double> dist(0.1, 10.0);
        return Value::number(dist(rng));
      });
  s.plus = [n = s.name](const Value& a, const Value& b) {
    return ext_max(n, a, b);
  };
  s.times = [n = s.name](const Value& a, const Value& b) {
    return plain_mul(n, a, b);
  };
  s.equals = tol_equals;
  s.parse = parse_numeric_value;
  return ValueAlgebra::create(std::move(s));
}

AlgebraPtr make_min_times() {
  ValueAlgebra::Spec s;
  s.name = "min.times";
  s.zero = Value::pos_inf();
  s.one = Value::number(1);
  s.domain = sampled_domain(
      {Value::pos_inf(), Value::number(1), Value::number(0),
       Value::number(0.5), Value::number(2), Value::number(3)},
      [](std::mt19937_64& rng) {
        std::uniform_real_distribution<double> dist(0.1, 10.0);
        return Value::number(dist(rng));
      });
  s.plus = [n = s.name](const Value& a, const Value& b) {
    return ext_min(n, a, b);
  };
  s.times = [n = s.name](const Value& a, const Value& b) {
    return mul_absorbing(n, Kind::kPosInf, a, b);
  };
  s.equals = tol_equals;
  s.parse = parse_numeric_value;
  return ValueAlgebra::create(std::move(s));
}

AlgebraPtr make_max_plus() {
  ValueAlgebra::Spec s;
  s.name = "max.plus";
  s.zero = Value::neg_inf();
  s.one = Value::number(0);
  s.domain = sampled_domain(
      {Value::neg_inf(), Value::number(0), Value::number(1),
       Value::number(-1), Value::number(2.5), Value::number(-3.5)},
      [](std::mt19937_64& rng) {
        std::uniform_real_distribution<double> dist(-10.0, 10.0);
        return Value::number(dist(rng));
      });
  s.plus = [n = s.name](const Value& a, const Value& b) {
    return ext_max(n, a, b);
  };
  s.times = [n = s.name](const Value& a, const Value& b) {
    return add_absorbing(n, Kind::kNegInf, a, b);
  };
  s.equals = tol_equals;
  s.parse = parse_numeric_value;
  return ValueAlgebra::create(std::move(s));
}

AlgebraPtr make_min_plus() {
  ValueAlgebra::Spec s;
  s.name = "min.plus";
  s.zero = Value::pos_inf();
  s.one = Value::number(0);
  s.domain = sampled_domain(
      {Value::pos_inf(), Value::number(0), Value::number(1),
       Value::number(-1), Value::number(2.5), Value::number(-3.5)},
      [](std::mt19937_64& rng) {
        std::uniform_real_distribution<double> dist(-10.0, 10.0);
        return Value::number(dist(rng));
      });
  s.plus = [n = s.name](const Value& a, const Value& b) {
    return ext_min(n, a, b);
  };
  s.times = [n = s.name](const Value& a, const Value& b) {
    return add_absorbing(n, Kind::kPosInf, a, b);
  };
  s.equals = tol_equals;
  s.parse = parse_numeric_value;
  return ValueAlgebra::create(std::move(s));
}

Domain extended_reals_domain(Value zero, Value one) {
  return sampled_domain(
      {std::move(zero), std::move(one), Value::number(0), Value::number(1),
       Value::number(-1), Value::number(2.5)},
      [](std::mt19937_64& rng) {
        std::uniform_real_distribution<double> dist(-10.0, 10.0);
        return Value::number(dist(rng));
      });
}

AlgebraPtr make_max_min() {
  ValueAlgebra::Spec s;
  s.name = "max.min";
  s.zero = Value::neg_inf();
  s.one = Value::pos_inf();
  s.domain = extended_reals_domain(s.zero, s.one);
  s.plus = [n = s.name](const Value& a, const Value& b) {
    return ext_max(n, a, b);
  };
  s.times = [n = s.name](const Value& a, const Value& b) {
    return ext_min(n, a, b);
  };
  s.equals = tol_equals;
  s.parse = parse_numeric_value;
  return ValueAlgebra::create(std::move(s));
}

AlgebraPtr make_min_max() {
  ValueAlgebra::Spec s;
  s.name = "min.max";
  s.zero = Value::pos_inf();
  s.one = Value::neg_inf();
  s.domain = extended_reals_domain(s.zero, s.one);
  s.plus = [n = s.name](const Value& a, const Value& b) {
    return ext_min(n, a, b);
  };
  s.times = [n = s.name](const Value& a, const Value& b) {
    return ext_max(n, a, b);
  };
  s.equals = tol_equals;
  s.parse = parse_numeric_value;
  return ValueAlgebra::create(std::move(s));
}

// Lexicographic order with the bottom/top extremes below/above every string.
int lex_rank(const std::string& alg, const Value& v) {
  switch (v.kind()) {
    case Kind::kNegInf:
      return -1;
    case Kind::kText:
      return 0;
    case Kind::kPosInf:
      return 1;
    default:
      bad_operand(alg, v);
  }
}

Value lex_extreme(const std::string& alg, const Value& a, const Value& b,
                  bool want_max) {
  const int ra = lex_rank(alg, a);
  const int rb = lex_rank(alg, b);
  if (ra != rb) return (ra > rb) == want_max ? a : b;
  if (ra != 0) return a;
  const bool a_wins = want_max ? a.as_text() >= b.as_text()
                               : a.as_text() <= b.as_text();
  return a_wins ? a : b;
}

AlgebraPtr make_maxlex_minlex() {
  ValueAlgebra::Spec s;
  s.name = "maxlex.minlex";
  s.zero = Value::neg_inf();  // bottom element
  s.one = Value::pos_inf();   // top element
  s.domain = sampled_domain(
      {Value::neg_inf(), Value::pos_inf(), Value::text("a"), Value::text("b"),
       Value::text("z"), Value::text("0"), Value::text("ab")},
      [](std::mt19937_64& rng) { return Value::text(random_alnum(rng, 4)); });
  s.plus = [n = s.name](const Value& a, const Value& b) {
    return lex_extreme(n, a, b, /*want_max=*/true);
  };
  s.times = [n = s.name](const Value& a, const Value& b) {
    return lex_extreme(n, a, b, /*want_max=*/false);
  };
  s.parse = [](const std::string& text) {
    if (text == "-inf") return Value::neg_inf();
    if (text == "+inf") return Value::pos_inf();
    return Value::text(text);
  };
  return ValueAlgebra::create(std::move(s));
}

// Longer-of-two with ties broken lexicographically; bottom is minimal.
AlgebraPtr make_maxlen_concat() {
  ValueAlgebra::Spec s;
  s.name = "maxlen.concat";
  s.zero = Value::bottom();
  s.one = Value::text("");
  s.domain = sampled_domain(
      {Value::bottom(), Value::text(""), Value::text("a"), Value::text("b"),
       Value::text("ab"), Value::text("ba"), Value::text("ccc")},
      [](std::mt19937_64& rng) { return Value::text(random_alnum(rng, 3)); });
  s.plus = [n = s.name](const Value& a, const Value& b) {
    if (a.kind() == Kind::kBottom) {
      if (b.kind() == Kind::kBottom || b.is_text()) return b;
      bad_operand(n, b);
    }
    if (b.kind() == Kind::kBottom) {
      if (a.is_text()) return a;
      bad_operand(n, a);
    }
    if (!a.is_text()) bad_operand(n, a);
    if (!b.is_text()) bad_operand(n, b);
    const auto& sa = a.as_text();
    const auto& sb = b.as_text();
    if (sa.size() != sb.size()) return sa.size() > sb.size() ? a : b;
    return sa >= sb ? a : b;
  };
  s.times = [n = s.name](const Value& a, const Value& b) {
    if (a.kind() == Kind::kBottom) return a;
    if (b.kind() == Kind::kBottom) return b;
    if (!a.is_text()) bad_operand(n, a);
    if (!b.is_text()) bad_operand(n, b);
    return Value::text(a.as_text() + b.as_text());
  };
  s.parse = [](const std::string& text) {
    if (text == "null") return Value::bottom();
    return Value::text(text);
  };
  return ValueAlgebra::create(std::move(s));
}

Value set_union(const Value& a, const Value& b) {
  std::set<std::string> out = a.as_text_set();
  const auto& other = b.as_text_set();
  out.insert(other.begin(), other.end());
  return Value::text_set(std::move(out));
}

Value set_intersection(const Value& a, const Value& b) {
  const auto& sa = a.as_text_set();
  const auto& sb = b.as_text_set();
  std::set<std::string> out;
  for (const auto& item : sa) {
    if (sb.count(item)) out.insert(item);
  }
  return Value::text_set(std::move(out));
}

}  // namespace

AlgebraPtr union_intersect_algebra(std::vector<std::string> universe) {
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()),
                 universe.end());

  ValueAlgebra::Spec s;
  s.name = "union.intersect";
  s.zero = Value::text_set({});
  s.one = Value::text_set(
      std::set<std::string>(universe.begin(), universe.end()));

  const std::size_t n = universe.size();
  if (n <= 4) {
    // Small universes enumerate the whole powerset, in bitmask order.
    Domain d;
    d.finite = true;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::set<std::string> subset;
      for (std::size_t j = 0; j < n; ++j) {
        if (mask & (std::size_t{1} << j)) subset.insert(universe[j]);
      }
      d.elements.push_back(Value::text_set(std::move(subset)));
    }
    s.domain = std::move(d);
  } else {
    std::vector<Value> base{s.zero, s.one};
    for (const auto& item : universe) {
      base.push_back(Value::text_set({item}));
    }
    s.domain = sampled_domain(
        std::move(base), [universe](std::mt19937_64& rng) {
          std::set<std::string> subset;
          for (const auto& item : universe) {
            if (rng() & 1) subset.insert(item);
          }
          return Value::text_set(std::move(subset));
        });
  }

  s.plus = set_union;
  s.times = set_intersection;
  s.parse = parse_set_value;
  return ValueAlgebra::create(std::move(s));
}

AlgebraPtr integers_plus_times() {
  ValueAlgebra::Spec s;
  s.name = "int.plus.times";
  s.zero = Value::number(0);
  s.one = Value::number(1);
  // Signed pairs interleaved so the first zero-sum pair scanned is (1, -1).
  std::vector<Value> base{Value::number(0)};
  for (int k : {1, 2, 3, 5, 7}) {
    base.push_back(Value::number(k));
    base.push_back(Value::number(-k));
  }
  s.domain = sampled_domain(std::move(base), [](std::mt19937_64& rng) {
    std::uniform_int_distribution<int> dist(-50, 50);
    return Value::number(dist(rng));
  });
  s.plus = [n = s.name](const Value& a, const Value& b) {
    return plain_add(n, a, b);
  };
  s.times = [n = s.name](const Value& a, const Value& b) {
    return plain_mul(n, a, b);
  };
  s.parse = parse_numeric_value;
  return ValueAlgebra::create(std::move(s));
}

// --- ValueAlgebra ----------------------------------------------------------

ValueAlgebra::ValueAlgebra(Spec spec)
    : name_(std::move(spec.name)),
      domain_(std::move(spec.domain)),
      plus_(std::move(spec.plus)),
      times_(std::move(spec.times)),
      zero_(std::move(spec.zero)),
      one_(std::move(spec.one)),
      equals_(spec.equals ? std::move(spec.equals)
                          : [](const Value& a, const Value& b) { return a == b; }),
      parse_(std::move(spec.parse)) {}

AlgebraPtr ValueAlgebra::create(Spec spec) {
  auto alg = std::shared_ptr<ValueAlgebra>(new ValueAlgebra(std::move(spec)));

  const auto elems = alg->sample(kDefaultSampleBudget, 0);
  for (const auto& v : elems) {
    if (!alg->equals(alg->plus(v, alg->zero()), v) ||
        !alg->equals(alg->plus(alg->zero(), v), v)) {
      throw MalformedAlgebraError(alg->name() +
                                  ": plus identity law fails at element " +
                                  v.display());
    }
    if (!alg->equals(alg->times(v, alg->one()), v) ||
        !alg->equals(alg->times(alg->one(), v), v)) {
      throw MalformedAlgebraError(alg->name() +
                                  ": times identity law fails at element " +
                                  v.display());
    }
  }

  if (alg->domain().finite) {
    // Closure over the full finite carrier.
    const auto& all = alg->domain().elements;
    auto in_domain = [&](const Value& v) {
      return std::any_of(all.begin(), all.end(),
                         [&](const Value& e) { return alg->equals(e, v); });
    };
    for (const auto& v : all) {
      for (const auto& w : all) {
        if (!in_domain(alg->plus(v, w))) {
          throw MalformedAlgebraError(alg->name() + ": plus(" + v.display() +
                                      ", " + w.display() +
                                      ") leaves the carrier");
        }
        if (!in_domain(alg->times(v, w))) {
          throw MalformedAlgebraError(alg->name() + ": times(" + v.display() +
                                      ", " + w.display() +
                                      ") leaves the carrier");
        }
      }
    }
  }

  bool annihilates = true;
  for (const auto& v : elems) {
    if (!alg->is_zero(alg->times(v, alg->zero())) ||
        !alg->is_zero(alg->times(alg->zero(), v))) {
      annihilates = false;
      break;
    }
  }
  alg->annihilates_on_sample_ = annihilates;
  return alg;
}

std::vector<Value> ValueAlgebra::sample(std::size_t budget,
                                        std::uint64_t seed) const {
  std::vector<Value> out;
  if (domain_.finite) {
    if (domain_.elements.size() <= budget) {
      for (const auto& v : domain_.elements) push_unique(out, v);
      return out;
    }
    push_unique(out, zero_);
    push_unique(out, one_);
    std::vector<std::size_t> idx(domain_.elements.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::mt19937_64 rng(seed);
    std::shuffle(idx.begin(), idx.end(), rng);
    for (std::size_t i : idx) {
      if (out.size() >= budget) break;
      push_unique(out, domain_.elements[i]);
    }
    return out;
  }
  push_unique(out, zero_);
  push_unique(out, one_);
  for (const auto& v : domain_.sampler(budget, seed)) {
    if (out.size() >= budget) break;
    push_unique(out, v);
  }
  return out;
}

Value ValueAlgebra::parse_value(const std::string& text) const {
  if (parse_) return parse_(text);
  // Fall back to matching an element of a finite carrier by display form.
  if (domain_.finite) {
    for (const auto& v : domain_.elements) {
      if (v.display() == text) return v;
    }
  }
  throw ParseError(name_ + ": cannot parse value '" + text + "'");
}

// --- registry ---------------------------------------------------------------

const std::vector<std::string>& builtin_algebra_names() {
  static const std::vector<std::string> names{
      "plus.times", "max.times",       "min.times",     "max.plus",
      "min.plus",   "max.min",         "min.max",       "union.intersect",
      "maxlex.minlex", "maxlen.concat"};
  return names;
}

const std::vector<std::string>& numeric_semiring_names() {
  static const std::vector<std::string> names{
      "plus.times", "max.times", "min.times", "max.plus",
      "min.plus",   "max.min",   "min.max"};
  return names;
}

AlgebraPtr builtin_algebra(const std::string& name) {
  static std::mutex mu;
  static std::map<std::string, AlgebraPtr> cache;

  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(name);
  if (it != cache.end()) return it->second;

  AlgebraPtr alg;
  if (name == "plus.times") {
    alg = make_plus_times();
  } else if (name == "max.times") {
    alg = make_max_times();
  } else if (name == "min.times") {
    alg = make_min_times();
  } else if (name == "max.plus") {
    alg = make_max_plus();
  } else if (name == "min.plus") {
    alg = make_min_plus();
  } else if (name == "max.min") {
    alg = make_max_min();
  } else if (name == "min.max") {
    alg = make_min_max();
  } else if (name == "union.intersect") {
    alg = union_intersect_algebra({"1", "2"});
  } else if (name == "maxlex.minlex") {
    alg = make_maxlex_minlex();
  } else if (name == "maxlen.concat") {
    alg = make_maxlen_concat();
  } else {
    std::string known;
    for (const auto& n : builtin_algebra_names()) {
      known += known.empty() ? n : ", " + n;
    }
    throw UnknownAlgebraError("unknown algebra '" + name + "' (known: " +
                              known + ")");
  }
  cache.emplace(name, alg);
  return alg;
}

AlgebraPtr custom_algebra(Domain domain, ValueAlgebra::BinaryOp plus,
                          ValueAlgebra::BinaryOp times, Value zero, Value one,
                          ValueAlgebra::EqualsFn equals, std::string name) {
  ValueAlgebra::Spec s;
  s.name = std::move(name);
  s.domain = std::move(domain);
  s.plus = std::move(plus);
  s.times = std::move(times);
  s.zero = std::move(zero);
  s.one = std::move(one);
  s.equals = std::move(equals);
  return ValueAlgebra::create(std::move(s));
}

AlgebraPtr table_algebra(std::string name, std::vector<Value> elements,
                         std::vector<std::vector<Value>> plus_table,
                         std::vector<std::vector<Value>> times_table,
                         Value zero, Value one) {
  const std::size_t n = elements.size();
  if (n == 0) throw MalformedAlgebraError(name + ": empty carrier");
  auto check_table = [&](const std::vector<std::vector<Value>>& t,
                         const char* label) {
    if (t.size() != n) {
      throw MalformedAlgebraError(name + ": " + label + " table is not " +
                                  std::to_string(n) + "x" + std::to_string(n));
    }
    for (const auto& row : t) {
      if (row.size() != n) {
        throw MalformedAlgebraError(name + ": ragged " + std::string(label) +
                                    " table");
      }
    }
  };
  check_table(plus_table, "plus");
  check_table(times_table, "times");

  auto index_of = [name, elements](const Value& v) -> std::size_t {
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i] == v) return i;
    }
    throw Error(name + ": operand outside carrier: " + v.display());
  };

  Domain d;
  d.finite = true;
  d.elements = elements;

  ValueAlgebra::Spec s;
  s.name = std::move(name);
  s.domain = std::move(d);
  s.plus = [index_of, table = std::move(plus_table)](const Value& a,
                                                     const Value& b) {
    return table[index_of(a)][index_of(b)];
  };
  s.times = [index_of, table = std::move(times_table)](const Value& a,
                                                       const Value& b) {
    return table[index_of(a)][index_of(b)];
  };
  s.zero = std::move(zero);
  s.one = std::move(one);
  return ValueAlgebra::create(std::move(s));
}

AlgebraPtr load_algebra(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind")) {
    throw ParseError("algebra description needs a \"kind\" field");
  }
  const std::string kind = j.at("kind").get<std::string>();
  const std::string name = j.value("name", std::string("custom"));

  if (kind == "integers") {
    return integers_plus_times();
  }
  if (kind == "table") {
    std::vector<Value> elements;
    for (const auto& e : j.at("elements")) {
      elements.push_back(Value::from_json(e));
    }
    auto read_table = [&](const char* key) {
      std::vector<std::vector<Value>> table;
      for (const auto& row : j.at(key)) {
        std::vector<Value> cells;
        for (const auto& cell : row) cells.push_back(Value::from_json(cell));
        table.push_back(std::move(cells));
      }
      return table;
    };
    return table_algebra(name, std::move(elements), read_table("plus"),
                         read_table("times"), Value::from_json(j.at("zero")),
                         Value::from_json(j.at("one")));
  }
  throw ParseError("unknown algebra kind '" + kind + "'");
}

// --- condition checking -----------------------------------------------------

std::string to_string(Verdict v) {
  return v == Verdict::kHoldsOnSample ? "holds-on-sample" : "fails";
}

ConditionReport check_conditions(const ValueAlgebra& alg, std::size_t budget,
                                 std::uint64_t seed) {
  ConditionReport report;
  report.algebra = alg.name();

  std::vector<Value> elems;
  if (alg.domain().finite && alg.domain().elements.size() <= budget) {
    elems = alg.domain().elements;
    report.exhaustive = true;
  } else {
    elems = alg.sample(budget, seed);
    report.exhaustive = false;
  }
  report.sample_size = elems.size();

  // (a) zero-sum-free: v + w = 0 only for v = w = 0.
  for (const auto& v : elems) {
    for (const auto& w : elems) {
      if (alg.is_zero(alg.plus(v, w)) &&
          !(alg.is_zero(v) && alg.is_zero(w))) {
        report.zero_sum_free.verdict = Verdict::kFails;
        report.zero_sum_free.witness = {v, w};
        goto zero_sum_done;
      }
    }
  }
zero_sum_done:

  // (b) no zero divisors: v * w = 0 only when v = 0 or w = 0.
  for (const auto& v : elems) {
    if (alg.is_zero(v)) continue;
    for (const auto& w : elems) {
      if (alg.is_zero(w)) continue;
      if (alg.is_zero(alg.times(v, w))) {
        report.no_zero_divisors.verdict = Verdict::kFails;
        report.no_zero_divisors.witness = {v, w};
        goto zero_divisor_done;
      }
    }
  }
zero_divisor_done:

  // (c) 0 annihilates times. Nonzero witnesses are scanned first so that a
  // failure reported here can instantiate the two-self-loop construction.
  for (int pass = 0; pass < 2 && !report.annihilator.witness; ++pass) {
    for (const auto& v : elems) {
      if ((pass == 0) == alg.is_zero(v)) continue;
      if (!alg.is_zero(alg.times(v, alg.zero())) ||
          !alg.is_zero(alg.times(alg.zero(), v))) {
        report.annihilator.verdict = Verdict::kFails;
        report.annihilator.witness = v;
        break;
      }
    }
  }

  return report;
}

namespace {

nlohmann::json pair_check_json(const ConditionReport::PairCheck& c) {
  nlohmann::json j;
  j["verdict"] = to_string(c.verdict);
  if (c.witness) {
    j["witness"] = nlohmann::json::array(
        {c.witness->first.to_json(), c.witness->second.to_json()});
  }
  return j;
}

}  // namespace

nlohmann::json ConditionReport::to_json() const {
  nlohmann::json j;
  j["algebra"] = algebra;
  j["zero_sum_free"] = pair_check_json(zero_sum_free);
  j["no_zero_divisors"] = pair_check_json(no_zero_divisors);
  j["annihilator"]["verdict"] = to_string(annihilator.verdict);
  if (annihilator.witness) {
    j["annihilator"]["witness"] = annihilator.witness->to_json();
  }
  j["sample_size"] = sample_size;
  j["exhaustive"] = exhaustive;
  return j;
}

std::string ConditionReport::render_text() const {
  std::ostringstream out;
  out << "algebra: " << algebra << "\n";
  auto pair_line = [&](const char* label, const PairCheck& c) {
    out << label << to_string(c.verdict);
    if (c.witness) {
      out << "  witness: " << c.witness->first.display() << ", "
          << c.witness->second.display();
    }
    out << "\n";
  };
  pair_line("zero-sum-free:     ", zero_sum_free);
  pair_line("no-zero-divisors:  ", no_zero_divisors);
  out << "annihilator:       " << to_string(annihilator.verdict);
  if (annihilator.witness) {
    out << "  witness: " << annihilator.witness->display();
  }
  out << "\n";
  out << "sample: " << sample_size << " elements"
      << (exhaustive ? " (exhaustive)" : "") << "\n";
  return out.str();
}

}  // namespace semigraph
