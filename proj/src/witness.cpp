#include "semigraph/witness.hpp"

#include <random>

#include "semigraph/error.hpp"

namespace semigraph {

nlohmann::json Counterexample::to_json() const {
  nlohmann::json j;
  j["lemma"] = lemma;
  j["graph"] = graph.to_json();
  j["e_out"] = pair.e_out.to_json();
  j["e_in"] = pair.e_in.to_json();
  j["product"] = product.to_json();
  j["violation"] = violation.to_json();
  return j;
}

nlohmann::json TheoremVerdict::to_json() const {
  nlohmann::json j;
  j["algebra"] = conditions.algebra;
  j["conditions"] = conditions.to_json();
  j["seed"] = seed;
  j["trials_requested"] = trials_requested;
  j["forward_trials"] = forward_trials;
  j["counterexample"] =
      counterexample ? counterexample->to_json() : nlohmann::json(nullptr);
  return j;
}

std::pair<Graph, IncidencePair> lemma1_instance(const Value& v, const Value& w,
                                                AlgebraPtr alg) {
  if (alg->is_zero(v) || alg->is_zero(w)) {
    throw InvalidWitnessError(alg->name() +
                              ": zero-sum witness values must be nonzero");
  }
  if (!alg->is_zero(alg->plus(v, w))) {
    throw InvalidWitnessError(alg->name() + ": plus(" + v.display() + ", " +
                              w.display() + ") is not zero");
  }
  Graph g = Graph::create({{"k1", "a", "b"}, {"k2", "a", "b"}});
  Weighting weighting{{"k1", {v, alg->one()}}, {"k2", {w, alg->one()}}};
  return {g, incidence_from_graph(g, alg, weighting)};
}

std::pair<Graph, IncidencePair> lemma2_instance(const Value& v, const Value& w,
                                                AlgebraPtr alg) {
  if (alg->is_zero(v) || alg->is_zero(w)) {
    throw InvalidWitnessError(alg->name() +
                              ": zero-divisor witness values must be nonzero");
  }
  if (!alg->is_zero(alg->times(v, w))) {
    throw InvalidWitnessError(alg->name() + ": times(" + v.display() + ", " +
                              w.display() + ") is not zero");
  }
  Graph g = Graph::create({{"k", "a", "a"}});
  Weighting weighting{{"k", {v, w}}};
  return {g, incidence_from_graph(g, alg, weighting)};
}

std::pair<Graph, IncidencePair> lemma3_instance(const Value& v,
                                                AlgebraPtr alg) {
  if (alg->is_zero(v)) {
    throw InvalidWitnessError(alg->name() +
                              ": annihilator witness must be nonzero");
  }
  if (alg->is_zero(alg->times(v, alg->zero())) &&
      alg->is_zero(alg->times(alg->zero(), v))) {
    throw InvalidWitnessError(alg->name() + ": 0 annihilates " + v.display() +
                              " on both sides");
  }
  Graph g = Graph::create({{"k1", "a", "a"}, {"k2", "b", "b"}});
  Weighting weighting{{"k1", {v, v}}, {"k2", {v, v}}};
  return {g, incidence_from_graph(g, alg, weighting)};
}

namespace {

Counterexample replay(int lemma, Graph g, IncidencePair pair) {
  AssociativeArray product = adjacency(pair, Mode::kDense);
  ValidationVerdict violation = validate_adjacency(product, g);
  if (violation.valid) {
    throw Error("lemma " + std::to_string(lemma) +
                " construction failed to violate adjacency; this is a "
                "program error");
  }
  return Counterexample{lemma, std::move(g), std::move(pair),
                        std::move(product), std::move(violation)};
}

// The annihilator failure constructible only at v = 0 (times(0,0) != 0)
// cannot use the two-self-loop shape, whose incidence weights must be
// nonzero. A single self-loop plus an isolated vertex exposes the same
// 0*0 term at the non-edge cell (b, b).
Counterexample zero_zero_counterexample(AlgebraPtr alg) {
  KeySet both = KeySet::of({"a", "b"});
  Graph g = Graph::create({{"k1", "a", "a"}}, both, both);
  return replay(3, g, incidence_from_graph(g, alg));
}

Counterexample counterexample_from_conditions(const ConditionReport& report,
                                              AlgebraPtr alg) {
  if (report.zero_sum_free.verdict == Verdict::kFails) {
    const auto& [v, w] = *report.zero_sum_free.witness;
    auto [g, pair] = lemma1_instance(v, w, alg);
    return replay(1, std::move(g), std::move(pair));
  }
  if (report.no_zero_divisors.verdict == Verdict::kFails) {
    const auto& [v, w] = *report.no_zero_divisors.witness;
    auto [g, pair] = lemma2_instance(v, w, alg);
    return replay(2, std::move(g), std::move(pair));
  }
  const Value& v = *report.annihilator.witness;
  if (alg->is_zero(v)) return zero_zero_counterexample(alg);
  auto [g, pair] = lemma3_instance(v, alg);
  return replay(3, std::move(g), std::move(pair));
}

}  // namespace

TheoremVerdict test_theorem(AlgebraPtr alg, std::size_t trials,
                            std::uint64_t seed) {
  TheoremVerdict verdict;
  verdict.conditions = check_conditions(*alg, /*budget=*/64, seed);
  verdict.seed = seed;
  verdict.trials_requested = trials;

  if (!verdict.conditions.all_hold()) {
    verdict.counterexample =
        counterexample_from_conditions(verdict.conditions, alg);
    return verdict;
  }

  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Graph g = random_graph(RandomGraphParams{}, rng);
    Weighting weighting = random_weighting(g, *alg, rng);
    IncidencePair pair = incidence_from_graph(g, alg, weighting);
    AssociativeArray product = adjacency(pair, Mode::kDense);
    ValidationVerdict check = validate_adjacency(product, g);
    if (!check.valid) {
      // The conditions held on sample yet a random instance violated the
      // adjacency property; record it as a replayable counterexample.
      verdict.counterexample =
          Counterexample{0, std::move(g), std::move(pair), std::move(product),
                         std::move(check)};
      return verdict;
    }
    ++verdict.forward_trials;
  }
  return verdict;
}

std::vector<AlgebraPtr> enumerate_three_element_algebras() {
  const Value zero = Value::text("0");
  const Value one = Value::text("1");
  const Value x = Value::text("x");
  const std::vector<Value> elements{zero, one, x};

  // Identity assignments pin the 0-row/column of plus and the 1-row/column
  // of times; the four remaining cells of each table range over the carrier.
  auto plus_table = [&](int c11, int c1x, int cx1, int cxx) {
    return std::vector<std::vector<Value>>{
        {zero, one, x},
        {one, elements[c11], elements[c1x]},
        {x, elements[cx1], elements[cxx]}};
  };
  auto times_table = [&](int c00, int c0x, int cx0, int cxx) {
    return std::vector<std::vector<Value>>{
        {elements[c00], zero, elements[c0x]},
        {zero, one, x},
        {elements[cx0], x, elements[cxx]}};
  };

  std::vector<AlgebraPtr> out;
  out.reserve(81 * 81);
  for (int p = 0; p < 81; ++p) {
    const int p0 = p % 3, p1 = (p / 3) % 3, p2 = (p / 9) % 3, p3 = (p / 27) % 3;
    for (int t = 0; t < 81; ++t) {
      const int t0 = t % 3, t1 = (t / 3) % 3, t2 = (t / 9) % 3,
                t3 = (t / 27) % 3;
      out.push_back(table_algebra(
          "table3:p" + std::to_string(p) + ":t" + std::to_string(t), elements,
          plus_table(p0, p1, p2, p3), times_table(t0, t1, t2, t3), zero, one));
    }
  }
  return out;
}

}  // namespace semigraph
