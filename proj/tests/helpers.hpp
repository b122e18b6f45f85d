#pragma once

// Shared test utilities: seeded random arrays, the independent dense
// triple-loop multiplication oracle, and sparsity-invariant checks.

#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "semigraph/array.hpp"

namespace semigraph::testutil {

inline std::vector<Value> nonzero_pool(const ValueAlgebra& alg,
                                       std::uint64_t seed) {
  std::vector<Value> pool;
  for (const auto& v : alg.sample(16, seed)) {
    if (!alg.is_zero(v)) pool.push_back(v);
  }
  return pool;
}

inline AssociativeArray random_array(const KeySet& rows, const KeySet& cols,
                                     double density, AlgebraPtr alg,
                                     std::mt19937_64& rng) {
  const auto pool = nonzero_pool(*alg, rng());
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::vector<std::tuple<std::string, std::string, Value>> triples;
  for (const auto& r : rows) {
    for (const auto& c : cols) {
      if (coin(rng) < density) {
        triples.emplace_back(r, c, pool[rng() % pool.size()]);
      }
    }
  }
  return AssociativeArray::from_triples(rows, cols, std::move(alg), triples);
}

inline KeySet keys(const std::string& prefix, std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(prefix + std::to_string(i + 1));
  }
  return KeySet::of(std::move(out));
}

/// Independent oracle: the definition taken literally. Every output cell is
/// the left-to-right fold, in ascending inner-key order, of
/// times(a(k1,k3), b(k3,k2)) over all k3, zeros included; an empty fold is
/// the algebra's zero.
inline std::map<std::pair<std::string, std::string>, Value> oracle_multiply(
    const AssociativeArray& a, const AssociativeArray& b) {
  const ValueAlgebra& alg = *a.algebra();
  std::map<std::pair<std::string, std::string>, Value> out;
  for (const auto& k1 : a.rows()) {
    for (const auto& k2 : b.cols()) {
      std::vector<Value> terms;
      for (const auto& k3 : a.cols()) {
        terms.push_back(alg.times(a.get(k1, k3), b.get(k3, k2)));
      }
      Value cell = alg.zero();
      if (!terms.empty()) {
        cell = terms[0];
        for (std::size_t i = 1; i < terms.size(); ++i) {
          cell = alg.plus(cell, terms[i]);
        }
      }
      out[{k1, k2}] = cell;
    }
  }
  return out;
}

/// Entrywise agreement between the oracle grid and an array, using the
/// algebra's own equality (tolerance-aware for real carriers).
inline bool matches_oracle(
    const std::map<std::pair<std::string, std::string>, Value>& oracle,
    const AssociativeArray& actual) {
  const ValueAlgebra& alg = *actual.algebra();
  for (const auto& [key, expected] : oracle) {
    if (!alg.equals(expected, actual.get(key.first, key.second))) {
      return false;
    }
  }
  return true;
}

inline bool no_stored_zero(const AssociativeArray& arr) {
  for (const auto& [key, v] : arr.entries()) {
    if (arr.algebra()->is_zero(v)) return false;
  }
  return true;
}

inline bool same_entries(const AssociativeArray& a, const AssociativeArray& b) {
  if (a.pattern() != b.pattern()) return false;
  const ValueAlgebra& alg = *a.algebra();
  for (const auto& [key, v] : a.entries()) {
    if (!alg.equals(v, b.entries().at(key))) return false;
  }
  return true;
}

}  // namespace semigraph::testutil
