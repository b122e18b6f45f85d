#pragma once

#include <map>
#include <string>
#include <vector>

#include "semigraph/graph.hpp"

namespace semigraph {

/// In-memory view of a tabular source: unique record keys, unique field
/// names, and per-record field -> value-list cells (a field may hold
/// several values for one record).
struct TabularSource {
  std::string key_field;
  std::vector<std::string> row_keys;  // input order
  std::vector<std::string> fields;    // input order, key column excluded
  std::map<std::string, std::map<std::string, std::vector<std::string>>> cells;

  /// UTF-8 TSV with a header row; the first column holds the record key.
  /// Repeated values within a cell are separated by ';'.
  static TabularSource from_tsv(const std::string& text);
};

/// D4M-style explosion: rows are the record keys, columns the sorted
/// distinct `field<sep>value` strings, and each present (record, field,
/// value) triple stores an existence mark (the number 1 for numeric
/// algebras, the algebra's 1 otherwise). Duplicate triples collapse to a
/// single entry. A separator occurring inside a field name raises
/// AmbiguousKeyError.
AssociativeArray explode(const TabularSource& src, char separator,
                         AlgebraPtr alg);

struct ColumnIncidence {
  IncidencePair pair;
  std::vector<std::string> skipped_rows;  // rows empty in either group
};

/// Selects the `out_field<sep>*` columns as e_out and the `in_field<sep>*`
/// columns as e_in. Rows (edges) are those nonzero in both groups; a row
/// with two or more nonzeros in a group raises HyperedgeError naming it.
ColumnIncidence incidence_pair_from_columns(const AssociativeArray& exploded,
                                            const std::string& out_field,
                                            const std::string& in_field,
                                            char separator);

/// Replaces every nonzero cell of a mapped column with the mapped value;
/// the nonzero pattern is unchanged. Zero replacements raise
/// InvalidWeightError.
AssociativeArray reweight(const AssociativeArray& arr,
                          const std::map<std::string, Value>& column_values);

struct CorrelateResult {
  AssociativeArray adjacency;
  std::vector<std::string> skipped_rows;
};

/// The full pipeline behind the `correlate` subcommand: explode, select the
/// two column groups, reweight e_out, and multiply transpose(e_out) . e_in.
CorrelateResult correlate_table(
    const TabularSource& src, const std::string& out_field,
    const std::string& in_field, char separator, AlgebraPtr alg, Mode mode,
    const std::map<std::string, Value>& reweight_columns = {});

/// The bundled music-metadata table used by the `demo` subcommand.
const std::string& demo_dataset_tsv();

}  // namespace semigraph
