#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include <json.hpp>

#include "semigraph/graph.hpp"

namespace semigraph {

/// A replayable demonstration that transpose(e_out) . e_in fails to be an
/// adjacency array for the recorded graph: recomputing the dense product
/// and validating it reproduces `violation` exactly.
struct Counterexample {
  int lemma = 0;  // 1 = zero-sum, 2 = zero-divisor, 3 = annihilator failure
  Graph graph;
  IncidencePair pair;
  AssociativeArray product;
  ValidationVerdict violation;

  nlohmann::json to_json() const;
};

/// Outcome of empirically testing both directions of the equivalence
/// between the algebra conditions and adjacency-array construction.
/// A counterexample is present exactly when some condition fails.
struct TheoremVerdict {
  ConditionReport conditions;
  std::uint64_t seed = 0;
  std::size_t trials_requested = 0;
  std::size_t forward_trials = 0;  // random instances validated clean
  std::optional<Counterexample> counterexample;

  nlohmann::json to_json() const;
};

/// Two parallel edges a -> b with e_out weights (v, w) and unit e_in
/// weights. When plus(v, w) = 0 with v, w nonzero, the dense product is
/// zero at (a, b) despite the edges: a missing-nonzero violation.
/// Inputs that are not such a zero-sum witness raise InvalidWitnessError.
std::pair<Graph, IncidencePair> lemma1_instance(const Value& v, const Value& w,
                                                AlgebraPtr alg);

/// One self-loop at a with e_out weight v and e_in weight w. When
/// times(v, w) = 0 with v, w nonzero, the dense product is zero at (a, a):
/// a missing-nonzero violation.
std::pair<Graph, IncidencePair> lemma2_instance(const Value& v, const Value& w,
                                                AlgebraPtr alg);

/// Self-loops at a and b, every incidence weight v. The non-edge cell
/// (a, b) evaluates to (v*0) + (0*v), nonzero when 0 fails to annihilate v:
/// a spurious-nonzero violation. Requires v nonzero.
std::pair<Graph, IncidencePair> lemma3_instance(const Value& v,
                                                AlgebraPtr alg);

/// Runs check_conditions; if every condition holds on sample, validates
/// `trials` seeded random (graph, weighting) instances in dense mode.
/// Otherwise builds the counterexample matching the first failing
/// condition in order (a), (b), (c) from its reported witness.
TheoremVerdict test_theorem(AlgebraPtr alg, std::size_t trials,
                            std::uint64_t seed);

/// Every (plus, times) operation-table pair on the carrier {"0","1","x"}
/// that respects the identity assignments (0 is the plus identity, 1 the
/// times identity). The remaining four free cells per table each range
/// over the carrier: 81 x 81 = 6561 algebras.
std::vector<AlgebraPtr> enumerate_three_element_algebras();

}  // namespace semigraph
