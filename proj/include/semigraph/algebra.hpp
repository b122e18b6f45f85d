#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "semigraph/value.hpp"

namespace semigraph {

class ValueAlgebra;
using AlgebraPtr = std::shared_ptr<const ValueAlgebra>;

/// Value domain descriptor: either a finite element list in canonical order,
/// or a seeded generator of representative elements for infinite carriers.
/// Samples always contain the algebra's 0 and 1.
struct Domain {
  bool finite = false;
  std::vector<Value> elements;
  std::function<std::vector<Value>(std::size_t count, std::uint64_t seed)>
      sampler;
};

/// A value domain with binary operations plus and times and their identity
/// elements 0 and 1. Nothing else is assumed: the operations need not be
/// associative, commutative or distributive, and 0 need not annihilate
/// times. Identity laws (and, for finite domains, closure) are verified on
/// a domain sample at construction time.
///
/// Algebras are immutable after construction; all operations are pure and
/// instances are safe to share across threads.
class ValueAlgebra {
 public:
  using BinaryOp = std::function<Value(const Value&, const Value&)>;
  using EqualsFn = std::function<bool(const Value&, const Value&)>;
  using ParseFn = std::function<Value(const std::string&)>;

  struct Spec {
    std::string name;
    Domain domain;
    BinaryOp plus;
    BinaryOp times;
    Value zero;
    Value one;
    EqualsFn equals;  // defaults to exact structural equality
    ParseFn parse;    // text -> Value, for TSV weights and CLI flags
  };

  /// Validates the identity laws v+0 = 0+v = v and v*1 = 1*v = v over the
  /// default domain sample (and closure for finite domains); throws
  /// MalformedAlgebraError naming the failing element otherwise.
  static AlgebraPtr create(Spec spec);

  const std::string& name() const { return name_; }
  const Domain& domain() const { return domain_; }
  const Value& zero() const { return zero_; }
  const Value& one() const { return one_; }

  Value plus(const Value& a, const Value& b) const { return plus_(a, b); }
  Value times(const Value& a, const Value& b) const { return times_(a, b); }
  bool equals(const Value& a, const Value& b) const { return equals_(a, b); }
  bool is_zero(const Value& v) const { return equals_(v, zero_); }

  /// Deterministic domain sample containing 0 and 1, deduplicated,
  /// generation order preserved. Finite domains return all elements when
  /// they fit in `budget`, otherwise a seeded subset (still with 0 and 1).
  std::vector<Value> sample(std::size_t budget, std::uint64_t seed) const;

  /// Annihilator verdict (v*0 = 0*v = 0) over the default sample, fixed at
  /// construction. Gates sparse-mode multiplication.
  bool annihilates_on_sample() const { return annihilates_on_sample_; }

  Value parse_value(const std::string& text) const;

  static constexpr std::size_t kDefaultSampleBudget = 32;

 private:
  explicit ValueAlgebra(Spec spec);

  std::string name_;
  Domain domain_;
  BinaryOp plus_;
  BinaryOp times_;
  Value zero_;
  Value one_;
  EqualsFn equals_;
  ParseFn parse_;
  bool annihilates_on_sample_ = false;
};

/// Built-in algebras, by the names accepted by the CLI `--semiring` flag:
///
///   plus.times       non-negative reals            0 = 0     1 = 1
///   max.times        non-negative reals            0 = 0     1 = 1
///   min.times        non-negative reals + {+inf}   0 = +inf  1 = 1
///   max.plus         reals + {-inf}                0 = -inf  1 = 0
///   min.plus         reals + {+inf}                0 = +inf  1 = 0
///   max.min          extended reals                0 = -inf  1 = +inf
///   min.max          extended reals                0 = +inf  1 = -inf
///   union.intersect  subsets of a finite universe  0 = {}    1 = U
///   maxlex.minlex    strings + bottom/top          0 = -inf  1 = +inf
///   maxlen.concat    strings + absorbing bottom    0 = null  1 = ""
///
/// Instances are cached: repeated lookups return the same object.
AlgebraPtr builtin_algebra(const std::string& name);
const std::vector<std::string>& builtin_algebra_names();

/// The seven numeric operator pairs swept by the `demo` subcommand, in
/// canonical order.
const std::vector<std::string>& numeric_semiring_names();

/// User-supplied algebra; verifies the identity laws on the domain sample.
AlgebraPtr custom_algebra(Domain domain, ValueAlgebra::BinaryOp plus,
                          ValueAlgebra::BinaryOp times, Value zero, Value one,
                          ValueAlgebra::EqualsFn equals = {},
                          std::string name = "custom");

/// Finite algebra from explicit operation tables. `plus_table[i][j]` is the
/// value of elements[i] + elements[j]; likewise for `times_table`.
AlgebraPtr table_algebra(std::string name, std::vector<Value> elements,
                         std::vector<std::vector<Value>> plus_table,
                         std::vector<std::vector<Value>> times_table,
                         Value zero, Value one);

/// The integers with ordinary + and x: the textbook ring that is not
/// zero-sum-free (1 + -1 = 0). Sampled domain, exact equality.
AlgebraPtr integers_plus_times();

/// union.intersect over subsets of an explicit universe. The builtin of the
/// same name uses the default universe {"1","2"}.
AlgebraPtr union_intersect_algebra(std::vector<std::string> universe);

/// Loads a custom algebra description:
///   {"name": ..., "kind": "table", "elements": [...],
///    "zero": v, "one": v, "plus": [[...]], "times": [[...]]}
///   {"name": ..., "kind": "integers", "min": -8, "max": 8}
AlgebraPtr load_algebra(const nlohmann::json& j);

enum class Verdict { kHoldsOnSample, kFails };

std::string to_string(Verdict v);

/// Verdicts and witnesses for the three adjacency-construction conditions:
/// (a) zero-sum-free, (b) no zero divisors, (c) 0 annihilates times.
/// A failing verdict always carries a witness that replays the violation
/// through the algebra's own operations. For finite domains that fit the
/// budget, `exhaustive` is true and a passing verdict covers every pair.
struct ConditionReport {
  struct PairCheck {
    Verdict verdict = Verdict::kHoldsOnSample;
    std::optional<std::pair<Value, Value>> witness;
  };
  struct UnaryCheck {
    Verdict verdict = Verdict::kHoldsOnSample;
    std::optional<Value> witness;
  };

  std::string algebra;
  PairCheck zero_sum_free;
  PairCheck no_zero_divisors;
  UnaryCheck annihilator;
  std::size_t sample_size = 0;
  bool exhaustive = false;

  bool all_hold() const {
    return zero_sum_free.verdict == Verdict::kHoldsOnSample &&
           no_zero_divisors.verdict == Verdict::kHoldsOnSample &&
           annihilator.verdict == Verdict::kHoldsOnSample;
  }

  nlohmann::json to_json() const;
  std::string render_text() const;
};

/// Checks conditions (a), (b), (c) over the domain. Finite domains of at
/// most `budget` elements are checked exhaustively; otherwise a
/// deterministic seeded sample (always containing 0 and 1) is scanned in
/// generation order, so reported witnesses are reproducible. A pass is
/// always labeled holds-on-sample, never "holds".
ConditionReport check_conditions(const ValueAlgebra& alg,
                                 std::size_t budget = 64,
                                 std::uint64_t seed = 0);

}  // namespace semigraph
