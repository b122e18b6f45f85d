#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "semigraph/array.hpp"
#include "semigraph/error.hpp"

using namespace semigraph;
using namespace semigraph::testutil;

namespace {

Value num(double x) { return Value::number(x); }

AssociativeArray small(const AlgebraPtr& alg) {
  return AssociativeArray::from_triples(KeySet::of({"a", "r"}),
                                        KeySet::of({"b", "c"}), alg,
                                        {{"a", "b", num(5)}});
}

}  // namespace

TEST_CASE("get returns stored values and the algebra zero otherwise") {
  auto arr = small(builtin_algebra("plus.times"));
  CHECK(arr.get("a", "b") == num(5));
  CHECK(arr.get("r", "c") == num(0));
  auto tropical = small(builtin_algebra("min.plus"));
  CHECK(tropical.get("r", "c") == Value::pos_inf());
  CHECK_THROWS_AS(arr.get("nope", "b"), KeyDomainError);
  CHECK_THROWS_AS(arr.get("a", "nope"), KeyDomainError);
}

TEST_CASE("set round-trips, removes zeros, and respects key domains") {
  auto arr = small(builtin_algebra("plus.times"));
  auto with7 = arr.set("r", "c", num(7));
  CHECK(with7.get("r", "c") == num(7));
  auto erased = with7.set("a", "b", num(0));
  CHECK(erased.get("a", "b") == num(0));
  CHECK(erased.nnz() == 1);
  CHECK(no_stored_zero(erased));
  CHECK_THROWS_AS(arr.set("zzz", "b", num(1)), KeyDomainError);
}

TEST_CASE("transpose swaps keys and entries") {
  auto alg = builtin_algebra("plus.times");
  auto arr = AssociativeArray::from_triples(
      KeySet::of({"r"}), KeySet::of({"c1", "c2"}), alg,
      {{"r", "c1", num(2)}, {"r", "c2", num(3)}});
  auto t = arr.transpose();
  CHECK(t.rows() == KeySet::of({"c1", "c2"}));
  CHECK(t.cols() == KeySet::of({"r"}));
  CHECK(t.get("c1", "r") == num(2));
  CHECK(t.get("c2", "r") == num(3));

  AssociativeArray empty(KeySet::of({"x"}), KeySet::of({"y"}), alg);
  CHECK(empty.transpose().rows() == KeySet::of({"y"}));
  CHECK(empty.transpose().nnz() == 0);
}

TEST_CASE("transpose is an involution on seeded random arrays") {
  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 25; ++i) {
    auto arr = random_array(keys("r", 6), keys("c", 5), 0.4,
                            builtin_algebra("plus.times"), rng);
    CHECK(same_entries(arr.transpose().transpose(), arr));
  }
}

TEST_CASE("single-inner-key product under min.plus") {
  auto alg = builtin_algebra("min.plus");
  auto a = AssociativeArray::from_triples(KeySet::of({"g"}), KeySet::of({"k"}),
                                          alg, {{"g", "k", num(2)}});
  auto b = AssociativeArray::from_triples(KeySet::of({"k"}), KeySet::of({"w"}),
                                          alg, {{"k", "w", num(1)}});
  for (Mode mode : {Mode::kSparse, Mode::kDense}) {
    auto c = multiply(a, b, mode);
    CHECK(c.get("g", "w") == num(3));  // 2 (x) 1 = 2 + 1 = 3
    CHECK(c.nnz() == 1);
  }
}

TEST_CASE("multiplying by an empty array gives an empty array") {
  auto alg = builtin_algebra("plus.times");
  std::mt19937_64 rng(42);
  auto a = random_array(keys("r", 4), keys("k", 3), 0.6, alg, rng);
  AssociativeArray empty(keys("k", 3), keys("c", 5), alg);
  auto c = multiply(a, empty, Mode::kDense);
  CHECK(c.nnz() == 0);
  CHECK(c.rows() == a.rows());
  CHECK(c.cols() == empty.cols());
}

TEST_CASE("multiply matches the brute-force oracle in both modes") {
  auto alg = builtin_algebra("plus.times");
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    auto a = random_array(keys("r", 4), keys("k", 3), 0.5, alg, rng);
    auto b = random_array(keys("k", 3), keys("c", 5), 0.5, alg, rng);
    const auto expected = oracle_multiply(a, b);
    auto dense = multiply(a, b, Mode::kDense);
    auto sparse = multiply(a, b, Mode::kSparse);
    CHECK(matches_oracle(expected, dense));
    CHECK(matches_oracle(expected, sparse));
    CHECK(no_stored_zero(dense));
    CHECK(no_stored_zero(sparse));
  }
}

TEST_CASE("sparse and dense agree whenever 0 annihilates on sample") {
  std::vector<std::string> names(numeric_semiring_names());
  names.push_back("union.intersect");
  names.push_back("maxlex.minlex");
  names.push_back("maxlen.concat");
  std::mt19937_64 rng(11);
  for (const auto& name : names) {
    auto alg = builtin_algebra(name);
    REQUIRE(alg->annihilates_on_sample());
    for (int i = 0; i < 10; ++i) {
      auto a = random_array(keys("r", 5), keys("k", 4), 0.45, alg, rng);
      auto b = random_array(keys("k", 4), keys("c", 5), 0.45, alg, rng);
      CAPTURE(name);
      CHECK(same_entries(multiply(a, b, Mode::kSparse),
                         multiply(a, b, Mode::kDense)));
    }
  }
}

TEST_CASE("sparse mode is rejected when 0 does not annihilate") {
  // times(x, 0) = x: 0 sticks to anything it touches from the right.
  const Value z = Value::text("0"), o = Value::text("1"), x = Value::text("x");
  auto sticky = table_algebra(
      "sticky.zero", {z, o, x}, {{z, o, x}, {o, o, x}, {x, x, x}},
      {{z, z, z}, {z, o, x}, {x, x, x}}, z, o);
  REQUIRE_FALSE(sticky->annihilates_on_sample());
  auto a = AssociativeArray::from_triples(KeySet::of({"r"}), KeySet::of({"k"}),
                                          sticky, {{"r", "k", x}});
  CHECK_THROWS_AS(multiply(a, a.transpose().transpose(), Mode::kSparse),
                  ShapeError);  // shape checked first: k != r
  auto b = AssociativeArray::from_triples(KeySet::of({"k"}), KeySet::of({"c"}),
                                          sticky, {{"k", "c", x}});
  CHECK_THROWS_AS(multiply(a, b, Mode::kSparse), ModeError);
  CHECK_NOTHROW(multiply(a, b, Mode::kDense));
}

TEST_CASE("multiply validates shapes and algebras") {
  auto alg = builtin_algebra("plus.times");
  std::mt19937_64 rng(3);
  auto a = random_array(keys("r", 3), keys("k", 3), 0.5, alg, rng);
  auto mismatched = random_array(keys("j", 3), keys("c", 2), 0.5, alg, rng);
  CHECK_THROWS_AS(multiply(a, mismatched, Mode::kDense), ShapeError);
  auto other = random_array(keys("k", 3), keys("c", 2), 0.5,
                            builtin_algebra("max.times"), rng);
  CHECK_THROWS_AS(multiply(a, other, Mode::kDense), AlgebraMismatchError);
}

TEST_CASE("the inner fold runs in ascending key order") {
  auto alg = builtin_algebra("maxlen.concat");
  // Row with two inner keys; plus picks the longer string, so the fold
  // yields concatenations whose order is observable.
  auto a = AssociativeArray::from_triples(
      KeySet::of({"r"}), KeySet::of({"k1", "k2"}), alg,
      {{"r", "k1", Value::text("ab")}, {"r", "k2", Value::text("c")}});
  auto b = AssociativeArray::from_triples(
      KeySet::of({"k1", "k2"}), KeySet::of({"c"}), alg,
      {{"k1", "c", Value::text("x")}, {"k2", "c", Value::text("yz")}});
  for (Mode mode : {Mode::kSparse, Mode::kDense}) {
    auto c = multiply(a, b, mode);
    // terms in order: "ab"+"x" = "abx", then "c"+"yz" = "cyz"; equal length
    // ties break lexicographically, so the fold returns "cyz".
    CHECK(c.get("r", "c") == Value::text("cyz"));
    CHECK(same_entries(c, multiply(a, b, mode)));
  }
}

TEST_CASE("transpose of a product differs from the reversed product when "
          "times is non-commutative") {
  auto alg = builtin_algebra("maxlen.concat");
  auto e_out = AssociativeArray::from_triples(
      KeySet::of({"k"}), KeySet::of({"a"}), alg, {{"k", "a", Value::text("a")}});
  auto e_in = AssociativeArray::from_triples(
      KeySet::of({"k"}), KeySet::of({"b"}), alg, {{"k", "b", Value::text("b")}});
  auto forward = multiply(e_out.transpose(), e_in, Mode::kDense).transpose();
  auto reverse = multiply(e_in.transpose(), e_out, Mode::kDense);
  CHECK(forward.get("b", "a") == Value::text("ab"));
  CHECK(reverse.get("b", "a") == Value::text("ba"));
  CHECK(forward.get("b", "a") != reverse.get("b", "a"));
}

TEST_CASE("subarray selection") {
  auto alg = builtin_algebra("plus.times");
  auto arr = AssociativeArray::from_triples(
      KeySet::of({"r1", "r2"}),
      KeySet::of({"Genre|Pop", "Genre|Rock", "Writer|Adams"}), alg,
      {{"r1", "Genre|Pop", num(1)},
       {"r2", "Genre|Rock", num(1)},
       {"r2", "Writer|Adams", num(1)}});

  auto genres = arr.subarray(Selector::all(),
                             Selector::range("Genre|A", "Genre|zz"));
  CHECK(genres.cols() == KeySet::of({"Genre|Pop", "Genre|Rock"}));
  CHECK(genres.nnz() == 2);
  CHECK(no_stored_zero(genres));

  auto same = arr.subarray(Selector::all(), Selector::all());
  CHECK(same_entries(same, arr));
  CHECK(same.rows() == arr.rows());

  auto none = arr.subarray(Selector::all(), Selector::range("Year|", "Year|~"));
  CHECK(none.cols().empty());
  CHECK(none.nnz() == 0);
  CHECK(none.algebra() == arr.algebra());

  CHECK_THROWS_AS(arr.subarray(Selector::all(), Selector::range("b", "a")),
                  SelectorError);

  auto listed = arr.subarray(Selector::list({"r2", "missing"}),
                             Selector::list({"Writer|Adams"}));
  CHECK(listed.rows() == KeySet::of({"r2"}));
  CHECK(listed.get("r2", "Writer|Adams") == num(1));
}

TEST_CASE("element-wise add folds over the union of patterns") {
  auto alg = builtin_algebra("plus.times");
  auto rows = KeySet::of({"r"});
  auto cols = KeySet::of({"c1", "c2", "c3"});
  auto a = AssociativeArray::from_triples(rows, cols, alg,
                                          {{"r", "c1", num(2)},
                                           {"r", "c2", num(4)}});
  auto b = AssociativeArray::from_triples(rows, cols, alg,
                                          {{"r", "c1", num(3)},
                                           {"r", "c3", num(9)}});
  auto sum = elementwise_add(a, b);
  CHECK(sum.get("r", "c1") == num(5));
  CHECK(sum.get("r", "c2") == num(4));
  CHECK(sum.get("r", "c3") == num(9));
  CHECK(no_stored_zero(sum));

  AssociativeArray empty(rows, cols, alg);
  CHECK(same_entries(elementwise_add(a, empty), a));

  auto other_shape = AssociativeArray(rows, KeySet::of({"c1"}), alg);
  CHECK_THROWS_AS(elementwise_add(a, other_shape), ShapeError);

  // Additive inverses can cancel a cell; the zero must not be stored.
  auto ints = integers_plus_times();
  auto pos = AssociativeArray::from_triples(rows, cols, ints,
                                            {{"r", "c1", num(1)}});
  auto neg = AssociativeArray::from_triples(rows, cols, ints,
                                            {{"r", "c1", num(-1)}});
  auto cancelled = elementwise_add(pos, neg);
  CHECK(cancelled.nnz() == 0);
  CHECK(no_stored_zero(cancelled));
}

TEST_CASE("element-wise multiply intersects set values") {
  auto alg = union_intersect_algebra({"a", "b", "c"});
  auto rows = KeySet::of({"r"});
  auto cols = KeySet::of({"c"});
  auto lhs = AssociativeArray::from_triples(
      rows, cols, alg, {{"r", "c", Value::text_set({"a", "b"})}});
  auto rhs = AssociativeArray::from_triples(
      rows, cols, alg, {{"r", "c", Value::text_set({"b", "c"})}});
  auto prod = elementwise_multiply(lhs, rhs, Mode::kSparse);
  CHECK(prod.get("r", "c") == Value::text_set({"b"}));
  CHECK(same_entries(prod, elementwise_multiply(lhs, rhs, Mode::kDense)));
}

TEST_CASE("json round trip keeps entries row-major and loses nothing") {
  std::mt19937_64 rng(99);
  for (const auto& name : {"plus.times", "max.min", "union.intersect",
                           "maxlex.minlex", "maxlen.concat"}) {
    auto alg = builtin_algebra(name);
    auto arr = random_array(keys("row", 4), keys("col", 4), 0.5, alg, rng);
    const auto j = arr.to_json();
    // entries are sorted row-major
    for (std::size_t i = 1; i < j["entries"].size(); ++i) {
      const auto prev = std::make_pair(j["entries"][i - 1][0].get<std::string>(),
                                       j["entries"][i - 1][1].get<std::string>());
      const auto curr = std::make_pair(j["entries"][i][0].get<std::string>(),
                                       j["entries"][i][1].get<std::string>());
      CHECK(prev < curr);
    }
    auto back = AssociativeArray::from_json(j, alg);
    CAPTURE(name);
    CHECK(same_entries(back, arr));
    CHECK(back.rows() == arr.rows());
    CHECK(back.cols() == arr.cols());
    // Resolution through the algebra name alone also works.
    CHECK(same_entries(AssociativeArray::from_json(j), arr));
  }
}

TEST_CASE("json loading rejects malformed documents") {
  auto j = nlohmann::json::parse(
      R"({"rows":["r"],"cols":["c"],"algebra":"plus.times","entries":[["r","c",0]]})");
  CHECK_THROWS_AS(AssociativeArray::from_json(j), ParseError);
  j["entries"] = nlohmann::json::array({nlohmann::json::array({"bad", "c", 1})});
  CHECK_THROWS_AS(AssociativeArray::from_json(j), KeyDomainError);
}
