#include "semigraph/array.hpp"

#include <algorithm>
#include <optional>

#include "semigraph/error.hpp"

namespace semigraph {

namespace {

void require_same_algebra(const AssociativeArray& a,
                          const AssociativeArray& b) {
  if (a.algebra() != b.algebra()) {
    throw AlgebraMismatchError("operands use different algebras: " +
                               a.algebra()->name() + " vs " +
                               b.algebra()->name());
  }
}

void require_sparse_legal(const ValueAlgebra& alg) {
  if (!alg.annihilates_on_sample()) {
    throw ModeError("sparse mode rejected: 0 does not annihilate times in " +
                    alg.name() +
                    "; use dense mode, which materializes zero operands");
  }
}

}  // namespace

std::vector<std::string> Selector::apply(const KeySet& ks) const {
  if (std::holds_alternative<AllT>(rep_)) return ks.keys();
  if (const auto* keys = std::get_if<std::vector<std::string>>(&rep_)) {
    // Explicit lists keep only keys actually present, in key-set order.
    std::vector<std::string> out;
    for (const auto& k : ks) {
      if (std::find(keys->begin(), keys->end(), k) != keys->end()) {
        out.push_back(k);
      }
    }
    return out;
  }
  const auto& range = std::get<RangeT>(rep_);
  if (range.lo > range.hi) {
    throw SelectorError("malformed range: '" + range.lo + "' > '" + range.hi +
                        "'");
  }
  std::vector<std::string> out;
  for (const auto& k : ks) {
    if (k >= range.lo && k <= range.hi) out.push_back(k);
  }
  return out;
}

AssociativeArray::AssociativeArray(KeySet rows, KeySet cols, AlgebraPtr algebra)
    : rows_(std::move(rows)), cols_(std::move(cols)),
      algebra_(std::move(algebra)) {
  if (!algebra_) throw Error("array requires an algebra");
}

AssociativeArray AssociativeArray::from_triples(
    KeySet rows, KeySet cols, AlgebraPtr algebra,
    const std::vector<std::tuple<std::string, std::string, Value>>& triples) {
  AssociativeArray arr(std::move(rows), std::move(cols), std::move(algebra));
  for (const auto& [k1, k2, v] : triples) {
    arr.check_keys(k1, k2);
    if (arr.algebra_->is_zero(v)) {
      arr.entries_.erase({k1, k2});
    } else {
      arr.entries_[{k1, k2}] = v;
    }
  }
  return arr;
}

void AssociativeArray::check_keys(const std::string& k1,
                                  const std::string& k2) const {
  if (!rows_.contains(k1)) {
    throw KeyDomainError("row key '" + k1 + "' not in the row key set");
  }
  if (!cols_.contains(k2)) {
    throw KeyDomainError("column key '" + k2 + "' not in the column key set");
  }
}

const Value& AssociativeArray::get(const std::string& k1,
                                   const std::string& k2) const {
  check_keys(k1, k2);
  auto it = entries_.find({k1, k2});
  return it == entries_.end() ? algebra_->zero() : it->second;
}

AssociativeArray AssociativeArray::set(const std::string& k1,
                                       const std::string& k2, Value v) const {
  check_keys(k1, k2);
  AssociativeArray out = *this;
  if (algebra_->is_zero(v)) {
    out.entries_.erase({k1, k2});
  } else {
    out.entries_[{k1, k2}] = std::move(v);
  }
  return out;
}

AssociativeArray AssociativeArray::transpose() const {
  AssociativeArray out(cols_, rows_, algebra_);
  for (const auto& [key, v] : entries_) {
    out.entries_[{key.second, key.first}] = v;
  }
  return out;
}

AssociativeArray AssociativeArray::subarray(const Selector& row_sel,
                                            const Selector& col_sel) const {
  KeySet rows = KeySet::of(row_sel.apply(rows_));
  KeySet cols = KeySet::of(col_sel.apply(cols_));
  AssociativeArray out(rows, cols, algebra_);
  for (const auto& [key, v] : entries_) {
    if (rows.contains(key.first) && cols.contains(key.second)) {
      out.entries_[key] = v;
    }
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> AssociativeArray::pattern()
    const {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(entries_.size());
  for (const auto& [key, v] : entries_) out.push_back(key);
  return out;
}

nlohmann::json AssociativeArray::to_json() const {
  nlohmann::json j;
  j["rows"] = rows_.keys();
  j["cols"] = cols_.keys();
  j["algebra"] = algebra_->name();
  auto entries = nlohmann::json::array();
  for (const auto& [key, v] : entries_) {
    entries.push_back(
        nlohmann::json::array({key.first, key.second, v.to_json()}));
  }
  j["entries"] = std::move(entries);
  return j;
}

AssociativeArray AssociativeArray::from_json(const nlohmann::json& j) {
  const std::string name = j.at("algebra").get<std::string>();
  if (name == "union.intersect") {
    // The universe defaults to the set of all values observed in the input.
    std::vector<std::string> universe;
    for (const auto& entry : j.at("entries")) {
      const Value v = Value::from_json(entry.at(2));
      if (v.is_text_set()) {
        for (const auto& item : v.as_text_set()) universe.push_back(item);
      }
    }
    return from_json(j, union_intersect_algebra(std::move(universe)));
  }
  return from_json(j, builtin_algebra(name));
}

AssociativeArray AssociativeArray::from_json(const nlohmann::json& j,
                                             AlgebraPtr algebra) {
  std::vector<std::string> rows, cols;
  for (const auto& r : j.at("rows")) rows.push_back(r.get<std::string>());
  for (const auto& c : j.at("cols")) cols.push_back(c.get<std::string>());
  AssociativeArray out(KeySet::of(std::move(rows)), KeySet::of(std::move(cols)),
                       std::move(algebra));
  for (const auto& entry : j.at("entries")) {
    if (!entry.is_array() || entry.size() != 3) {
      throw ParseError("array entry must be [row, col, value]: " +
                       entry.dump());
    }
    const std::string k1 = entry.at(0).get<std::string>();
    const std::string k2 = entry.at(1).get<std::string>();
    Value v = Value::from_json(entry.at(2));
    out.check_keys(k1, k2);
    if (out.algebra_->is_zero(v)) {
      throw ParseError("stored zero entry at (" + k1 + ", " + k2 + ")");
    }
    out.entries_[{k1, k2}] = std::move(v);
  }
  return out;
}

AssociativeArray multiply(const AssociativeArray& a, const AssociativeArray& b,
                          Mode mode) {
  if (a.cols() != b.rows()) {
    throw ShapeError("inner key sets differ: multiply needs a.cols == b.rows");
  }
  require_same_algebra(a, b);
  const ValueAlgebra& alg = *a.algebra();

  AssociativeArray out(a.rows(), b.cols(), a.algebra());
  std::vector<std::tuple<std::string, std::string, Value>> triples;

  if (mode == Mode::kDense) {
    // Materialize both operands as pointer grids once, then fold over every
    // inner key including zeros.
    const auto& row_keys = a.rows().keys();
    const auto& inner_keys = a.cols().keys();
    const auto& col_keys = b.cols().keys();
    const Value* zero = &alg.zero();
    std::vector<std::vector<const Value*>> grid_a(
        row_keys.size(),
        std::vector<const Value*>(inner_keys.size(), zero));
    for (const auto& [key, v] : a.entries()) {
      grid_a[*a.rows().rank(key.first)][*a.cols().rank(key.second)] = &v;
    }
    std::vector<std::vector<const Value*>> grid_b(
        inner_keys.size(),
        std::vector<const Value*>(col_keys.size(), zero));
    for (const auto& [key, v] : b.entries()) {
      grid_b[*b.rows().rank(key.first)][*b.cols().rank(key.second)] = &v;
    }
    for (std::size_t i = 0; i < row_keys.size(); ++i) {
      for (std::size_t j = 0; j < col_keys.size(); ++j) {
        std::optional<Value> acc;
        for (std::size_t k = 0; k < inner_keys.size(); ++k) {
          Value term = alg.times(*grid_a[i][k], *grid_b[k][j]);
          acc = acc ? alg.plus(*acc, std::move(term)) : std::move(term);
        }
        if (acc && !alg.is_zero(*acc)) {
          triples.emplace_back(row_keys[i], col_keys[j], std::move(*acc));
        }
      }
    }
  } else {
    require_sparse_legal(alg);
    // Row-major entries of A grouped by row; entries of B bucketed by
    // column. Both buckets are ascending in the inner key.
    std::map<std::string, std::vector<std::pair<std::string, const Value*>>>
        a_rows;
    for (const auto& [key, v] : a.entries()) {
      a_rows[key.first].emplace_back(key.second, &v);
    }
    std::map<std::string, std::vector<std::pair<std::string, const Value*>>>
        b_cols;
    for (const auto& [key, v] : b.entries()) {
      b_cols[key.second].emplace_back(key.first, &v);
    }
    for (const auto& [k1, row] : a_rows) {
      for (const auto& [k2, col] : b_cols) {
        std::optional<Value> acc;
        std::size_t i = 0, j = 0;
        while (i < row.size() && j < col.size()) {
          if (row[i].first < col[j].first) {
            ++i;
          } else if (col[j].first < row[i].first) {
            ++j;
          } else {
            Value term = alg.times(*row[i].second, *col[j].second);
            acc = acc ? alg.plus(*acc, std::move(term)) : std::move(term);
            ++i;
            ++j;
          }
        }
        if (acc && !alg.is_zero(*acc)) {
          triples.emplace_back(k1, k2, std::move(*acc));
        }
      }
    }
  }
  return AssociativeArray::from_triples(a.rows(), b.cols(), a.algebra(),
                                        triples);
}

AssociativeArray elementwise_add(const AssociativeArray& a,
                                 const AssociativeArray& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError("element-wise add needs identical row and column keys");
  }
  require_same_algebra(a, b);
  const ValueAlgebra& alg = *a.algebra();

  std::vector<std::tuple<std::string, std::string, Value>> triples;
  auto ia = a.entries().begin();
  auto ib = b.entries().begin();
  while (ia != a.entries().end() || ib != b.entries().end()) {
    if (ib == b.entries().end() ||
        (ia != a.entries().end() && ia->first < ib->first)) {
      triples.emplace_back(ia->first.first, ia->first.second,
                           alg.plus(ia->second, alg.zero()));
      ++ia;
    } else if (ia == a.entries().end() || ib->first < ia->first) {
      triples.emplace_back(ib->first.first, ib->first.second,
                           alg.plus(alg.zero(), ib->second));
      ++ib;
    } else {
      triples.emplace_back(ia->first.first, ia->first.second,
                           alg.plus(ia->second, ib->second));
      ++ia;
      ++ib;
    }
  }
  return AssociativeArray::from_triples(a.rows(), a.cols(), a.algebra(),
                                        triples);
}

AssociativeArray elementwise_multiply(const AssociativeArray& a,
                                      const AssociativeArray& b, Mode mode) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeError(
        "element-wise multiply needs identical row and column keys");
  }
  require_same_algebra(a, b);
  const ValueAlgebra& alg = *a.algebra();

  std::vector<std::tuple<std::string, std::string, Value>> triples;
  if (mode == Mode::kDense) {
    for (const auto& k1 : a.rows()) {
      for (const auto& k2 : a.cols()) {
        triples.emplace_back(k1, k2, alg.times(a.get(k1, k2), b.get(k1, k2)));
      }
    }
  } else {
    require_sparse_legal(alg);
    for (const auto& [key, va] : a.entries()) {
      auto it = b.entries().find(key);
      if (it != b.entries().end()) {
        triples.emplace_back(key.first, key.second, alg.times(va, it->second));
      }
    }
  }
  return AssociativeArray::from_triples(a.rows(), a.cols(), a.algebra(),
                                        triples);
}

}  // namespace semigraph
