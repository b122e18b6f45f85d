#pragma once

#include <map>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "semigraph/algebra.hpp"
#include "semigraph/keyset.hpp"
#include "semigraph/value.hpp"

namespace semigraph {

/// Multiplication / element-wise multiplication mode.
///
/// Dense folds over every inner key, materializing zeros: faithful to the
/// definition even when 0 does not annihilate times. Sparse skips zero
/// operands and is only legal when the algebra's 0 annihilates on sample;
/// selecting it otherwise raises ModeError.
enum class Mode { kSparse, kDense };

/// Row or column selection: everything, an explicit key list (restricted to
/// keys actually present), or an inclusive range [lo, hi] under the key
/// order. A range with lo > hi raises SelectorError.
class Selector {
 public:
  static Selector all() { return Selector(AllT{}); }
  static Selector list(std::vector<std::string> keys) {
    return Selector(std::move(keys));
  }
  static Selector range(std::string lo, std::string hi) {
    return Selector(RangeT{std::move(lo), std::move(hi)});
  }

  std::vector<std::string> apply(const KeySet& ks) const;

 private:
  struct AllT {};
  struct RangeT {
    std::string lo, hi;
  };
  using Rep = std::variant<AllT, std::vector<std::string>, RangeT>;
  explicit Selector(Rep rep) : rep_(std::move(rep)) {}
  Rep rep_;
};

/// Sparse map (row key, col key) -> V over totally ordered key sets, with an
/// implicit default of the algebra's 0. Stored entries are never equal to 0
/// and always lie inside the declared key sets. Arrays are immutable values:
/// every operation returns a new array.
class AssociativeArray {
 public:
  using EntryMap = std::map<std::pair<std::string, std::string>, Value>;

  AssociativeArray(KeySet rows, KeySet cols, AlgebraPtr algebra);

  /// Applies the triples in order with set() semantics (zero removes,
  /// later triples overwrite earlier ones).
  static AssociativeArray from_triples(
      KeySet rows, KeySet cols, AlgebraPtr algebra,
      const std::vector<std::tuple<std::string, std::string, Value>>& triples);

  const KeySet& rows() const { return rows_; }
  const KeySet& cols() const { return cols_; }
  const AlgebraPtr& algebra() const { return algebra_; }

  /// Row-major ordered nonzero entries.
  const EntryMap& entries() const { return entries_; }
  std::size_t nnz() const { return entries_.size(); }

  /// Stored value, or the algebra's 0 for an absent pair. Keys outside the
  /// declared key sets raise KeyDomainError.
  const Value& get(const std::string& k1, const std::string& k2) const;

  /// Returns a copy with (k1, k2) set to v; v equal to 0 removes the entry.
  AssociativeArray set(const std::string& k1, const std::string& k2,
                       Value v) const;

  AssociativeArray transpose() const;
  AssociativeArray subarray(const Selector& row_sel,
                            const Selector& col_sel) const;

  /// Nonzero (row, col) pairs in row-major order.
  std::vector<std::pair<std::string, std::string>> pattern() const;

  /// {"rows": [...], "cols": [...], "algebra": name,
  ///  "entries": [[row, col, value], ...]} with entries sorted row-major.
  nlohmann::json to_json() const;

  /// Resolves "algebra" through the builtin registry; union.intersect
  /// arrays take their universe from the set values observed in the
  /// entries.
  static AssociativeArray from_json(const nlohmann::json& j);
  static AssociativeArray from_json(const nlohmann::json& j,
                                    AlgebraPtr algebra);

 private:
  void check_keys(const std::string& k1, const std::string& k2) const;

  KeySet rows_;
  KeySet cols_;
  AlgebraPtr algebra_;
  EntryMap entries_;
};

/// plus.times-style array product C(k1,k2) = fold over k3 of
/// A(k1,k3) * B(k3,k2), folded left-to-right in ascending k3 order (the
/// fold order is part of the contract: plus need not be associative or
/// commutative). Requires a.cols() == b.rows() element-wise and the same
/// algebra instance.
AssociativeArray multiply(const AssociativeArray& a, const AssociativeArray& b,
                          Mode mode);

/// Cellwise plus over the union of stored patterns (absent = 0).
AssociativeArray elementwise_add(const AssociativeArray& a,
                                 const AssociativeArray& b);

/// Cellwise times: dense over the full key grid, sparse over the pattern
/// intersection (subject to the sparse-mode annihilator gate).
AssociativeArray elementwise_multiply(const AssociativeArray& a,
                                      const AssociativeArray& b, Mode mode);

}  // namespace semigraph
