#include <doctest.h>

#include "semigraph/algebra.hpp"
#include "semigraph/error.hpp"

using namespace semigraph;

namespace {

Value num(double x) { return Value::number(x); }

}  // namespace

TEST_CASE("the quoted operator identities") {
  auto min_plus = builtin_algebra("min.plus");
  CHECK(min_plus->times(num(2), num(1)) == num(3));  // 2 (x) 1 = 2 + 1 = 3
  CHECK(min_plus->times(num(3), num(1)) == num(4));

  auto max_min = builtin_algebra("max.min");
  CHECK(max_min->times(num(3), num(1)) == num(1));  // 3 (x) 1 = min(3,1) = 1
  CHECK(max_min->times(num(2), num(1)) == num(1));

  auto min_max = builtin_algebra("min.max");
  CHECK(min_max->times(num(2), num(1)) == num(2));
  CHECK(min_max->times(num(3), num(1)) == num(3));

  auto plus_times = builtin_algebra("plus.times");
  CHECK(plus_times->times(num(2), num(1)) == num(2));
  CHECK(plus_times->plus(num(5), plus_times->zero()) == num(5));
  CHECK(plus_times->times(num(1), num(1)) == num(1));
  CHECK(builtin_algebra("max.plus")->times(num(1), num(1)) == num(2));
}

TEST_CASE("unknown algebra name") {
  CHECK_THROWS_AS(builtin_algebra("plus.plus"), UnknownAlgebraError);
}

TEST_CASE("builtin lookups are cached singletons") {
  CHECK(builtin_algebra("min.plus").get() == builtin_algebra("min.plus").get());
}

TEST_CASE("identity laws hold on every sampled element of every builtin") {
  for (const auto& name : builtin_algebra_names()) {
    auto alg = builtin_algebra(name);
    for (const auto& v : alg->sample(32, 7)) {
      CAPTURE(name);
      CAPTURE(v.display());
      CHECK(alg->equals(alg->plus(v, alg->zero()), v));
      CHECK(alg->equals(alg->plus(alg->zero(), v), v));
      CHECK(alg->equals(alg->times(v, alg->one()), v));
      CHECK(alg->equals(alg->times(alg->one(), v), v));
    }
  }
}

TEST_CASE("samples are deterministic and contain the identities") {
  for (const auto& name : builtin_algebra_names()) {
    auto alg = builtin_algebra(name);
    const auto a = alg->sample(24, 3);
    const auto b = alg->sample(24, 3);
    CHECK(a == b);
    CHECK(std::find(a.begin(), a.end(), alg->zero()) != a.end());
    CHECK(std::find(a.begin(), a.end(), alg->one()) != a.end());
  }
}

TEST_CASE("extended elements follow the case analysis, not IEEE overflow") {
  auto min_plus = builtin_algebra("min.plus");
  CHECK(min_plus->times(Value::pos_inf(), num(5)) == Value::pos_inf());
  CHECK(min_plus->times(num(-7), Value::pos_inf()) == Value::pos_inf());
  auto max_plus = builtin_algebra("max.plus");
  CHECK(max_plus->times(num(5), Value::neg_inf()) == Value::neg_inf());
  auto min_times = builtin_algebra("min.times");
  CHECK(min_times->times(num(0), Value::pos_inf()) == Value::pos_inf());
  auto max_min = builtin_algebra("max.min");
  CHECK(max_min->times(num(42), Value::neg_inf()) == Value::neg_inf());
  CHECK(max_min->plus(num(42), Value::pos_inf()) == Value::pos_inf());
}

TEST_CASE("conditions hold on sample for every multiplied builtin") {
  for (const auto& name : numeric_semiring_names()) {
    CAPTURE(name);
    CHECK(check_conditions(*builtin_algebra(name)).all_hold());
  }
  CHECK(check_conditions(*builtin_algebra("maxlex.minlex")).all_hold());
  CHECK(check_conditions(*builtin_algebra("maxlen.concat")).all_hold());
}

TEST_CASE("union.intersect has zero divisors with the disjoint-set witness") {
  auto report = check_conditions(*builtin_algebra("union.intersect"));
  CHECK(report.zero_sum_free.verdict == Verdict::kHoldsOnSample);
  CHECK(report.annihilator.verdict == Verdict::kHoldsOnSample);
  REQUIRE(report.no_zero_divisors.verdict == Verdict::kFails);
  REQUIRE(report.no_zero_divisors.witness.has_value());
  CHECK(report.no_zero_divisors.witness->first == Value::text_set({"1"}));
  CHECK(report.no_zero_divisors.witness->second == Value::text_set({"2"}));
  CHECK(report.exhaustive);
  CHECK(report.sample_size == 4);
}

TEST_CASE("the integers fail zero-sum-freeness with witness (1, -1)") {
  auto report = check_conditions(*integers_plus_times());
  REQUIRE(report.zero_sum_free.verdict == Verdict::kFails);
  REQUIRE(report.zero_sum_free.witness.has_value());
  CHECK(report.zero_sum_free.witness->first == num(1));
  CHECK(report.zero_sum_free.witness->second == num(-1));
  CHECK(report.no_zero_divisors.verdict == Verdict::kHoldsOnSample);
  CHECK(report.annihilator.verdict == Verdict::kHoldsOnSample);
}

TEST_CASE("failing witnesses replay the violation through the operations") {
  const auto replayable = {integers_plus_times(),
                           builtin_algebra("union.intersect")};
  for (const auto& alg : replayable) {
    const auto report = check_conditions(*alg);
    if (report.zero_sum_free.verdict == Verdict::kFails) {
      const auto& [v, w] = *report.zero_sum_free.witness;
      CHECK(alg->is_zero(alg->plus(v, w)));
      CHECK(!(alg->is_zero(v) && alg->is_zero(w)));
    }
    if (report.no_zero_divisors.verdict == Verdict::kFails) {
      const auto& [v, w] = *report.no_zero_divisors.witness;
      CHECK(alg->is_zero(alg->times(v, w)));
      CHECK_FALSE(alg->is_zero(v));
      CHECK_FALSE(alg->is_zero(w));
    }
  }
}

TEST_CASE("maxlen.concat satisfies the conditions with a non-commutative times") {
  auto alg = builtin_algebra("maxlen.concat");
  CHECK(check_conditions(*alg).all_hold());
  const Value ab_c = alg->times(Value::text("ab"), Value::text("c"));
  const Value c_ab = alg->times(Value::text("c"), Value::text("ab"));
  CHECK(ab_c == Value::text("abc"));
  CHECK(c_ab == Value::text("cab"));
  CHECK(ab_c != c_ab);
  // Length-then-lex tie break makes plus total and deterministic.
  CHECK(alg->plus(Value::text("ba"), Value::text("ab")) == Value::text("ba"));
  CHECK(alg->plus(Value::text("a"), Value::text("bb")) == Value::text("bb"));
}

TEST_CASE("maxlex.minlex orders strings between bottom and top") {
  auto alg = builtin_algebra("maxlex.minlex");
  CHECK(alg->plus(Value::text("a"), Value::text("b")) == Value::text("b"));
  CHECK(alg->times(Value::text("a"), Value::text("b")) == Value::text("a"));
  CHECK(alg->plus(Value::text("z"), alg->zero()) == Value::text("z"));
  CHECK(alg->times(Value::text("z"), alg->one()) == Value::text("z"));
  CHECK(alg->is_zero(alg->times(Value::text("z"), alg->zero())));
}

TEST_CASE("custom boolean algebra is accepted") {
  Domain d;
  d.finite = true;
  d.elements = {num(0), num(1)};
  auto both = [](const Value& a, const Value& b, bool conj) {
    const bool x = a.as_number() != 0;
    const bool y = b.as_number() != 0;
    return Value::number((conj ? (x && y) : (x || y)) ? 1 : 0);
  };
  auto alg = custom_algebra(
      d, [&](const Value& a, const Value& b) { return both(a, b, false); },
      [&](const Value& a, const Value& b) { return both(a, b, true); },
      num(0), num(1), {}, "bool.or.and");
  CHECK(check_conditions(*alg).all_hold());
  CHECK(alg->annihilates_on_sample());
}

TEST_CASE("a wrong identity element is a malformed algebra") {
  Domain d;
  d.finite = true;
  d.elements = {num(0), num(1)};
  auto lor = [](const Value& a, const Value& b) {
    return Value::number((a.as_number() != 0 || b.as_number() != 0) ? 1 : 0);
  };
  auto land = [](const Value& a, const Value& b) {
    return Value::number((a.as_number() != 0 && b.as_number() != 0) ? 1 : 0);
  };
  // zero = 1 breaks plus(v, zero) = v at v = 0.
  CHECK_THROWS_AS(custom_algebra(d, lor, land, num(1), num(1)),
                  MalformedAlgebraError);
}

TEST_CASE("operation tables are validated cell by cell") {
  const Value z = Value::text("0"), o = Value::text("1"), x = Value::text("x");
  const std::vector<Value> carrier{z, o, x};
  CHECK_NOTHROW(table_algebra(
      "ok", carrier, {{z, o, x}, {o, o, x}, {x, x, x}},
      {{z, z, z}, {z, o, x}, {z, x, x}}, z, o));
  // plus(1, 0) = x violates the identity row.
  CHECK_THROWS_AS(table_algebra("bad", carrier,
                                {{z, o, x}, {x, o, x}, {x, x, x}},
                                {{z, z, z}, {z, o, x}, {z, x, x}}, z, o),
                  MalformedAlgebraError);
  // A cell outside the carrier breaks closure.
  CHECK_THROWS_AS(
      table_algebra("escape", carrier,
                    {{z, o, x}, {o, o, Value::text("y")}, {x, x, x}},
                    {{z, z, z}, {z, o, x}, {z, x, x}}, z, o),
      MalformedAlgebraError);
}

TEST_CASE("algebra descriptions load from json") {
  const auto table = nlohmann::json::parse(R"({
    "name": "bool.or.and", "kind": "table",
    "elements": [0, 1], "zero": 0, "one": 1,
    "plus":  [[0, 1], [1, 1]],
    "times": [[0, 0], [0, 1]]})");
  auto alg = load_algebra(table);
  CHECK(alg->name() == "bool.or.and");
  CHECK(check_conditions(*alg).all_hold());

  auto ints = load_algebra(nlohmann::json::parse(R"({"kind": "integers"})"));
  CHECK_FALSE(check_conditions(*ints).all_hold());

  CHECK_THROWS_AS(load_algebra(nlohmann::json::parse(R"({"kind": "nope"})")),
                  ParseError);
}

TEST_CASE("condition report serialization carries the witnesses") {
  const auto j = check_conditions(*builtin_algebra("union.intersect")).to_json();
  CHECK(j["no_zero_divisors"]["verdict"] == "fails");
  CHECK(j["no_zero_divisors"]["witness"][0] == nlohmann::json::array({"1"}));
  CHECK(j["zero_sum_free"]["verdict"] == "holds-on-sample");
  CHECK(j["exhaustive"] == true);
}
