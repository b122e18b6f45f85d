#include "semigraph/ingest.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "semigraph/error.hpp"

namespace semigraph {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) out.push_back(field);
  if (!line.empty() && line.back() == sep) out.push_back("");
  return out;
}

}  // namespace

TabularSource TabularSource::from_tsv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty table: no header row");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  const auto header = split(line, '\t');
  if (header.empty() || header[0].empty()) {
    throw ParseError("header row must start with the record key column");
  }

  TabularSource src;
  src.key_field = header[0];
  std::set<std::string> seen_fields;
  for (std::size_t i = 1; i < header.size(); ++i) {
    if (header[i].empty()) {
      throw ParseError("empty field name in header column " +
                       std::to_string(i + 1));
    }
    if (!seen_fields.insert(header[i]).second) {
      throw ParseError("duplicate field name '" + header[i] + "'");
    }
    src.fields.push_back(header[i]);
  }

  std::set<std::string> seen_rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto cells = split(line, '\t');
    if (cells.size() > header.size()) {
      throw ParseError("line " + std::to_string(line_no) + ": " +
                       std::to_string(cells.size()) + " cells for " +
                       std::to_string(header.size()) + " columns");
    }
    const std::string& row_key = cells[0];
    if (row_key.empty()) {
      throw ParseError("line " + std::to_string(line_no) +
                       ": empty record key");
    }
    if (!seen_rows.insert(row_key).second) {
      throw ParseError("duplicate record key '" + row_key + "'");
    }
    src.row_keys.push_back(row_key);
    auto& row = src.cells[row_key];
    for (std::size_t i = 1; i < cells.size(); ++i) {
      for (const auto& value : split(cells[i], ';')) {
        if (!value.empty()) row[src.fields[i - 1]].push_back(value);
      }
    }
  }
  return src;
}

AssociativeArray explode(const TabularSource& src, char separator,
                         AlgebraPtr alg) {
  for (const auto& field : src.fields) {
    if (field.find(separator) != std::string::npos) {
      throw AmbiguousKeyError("field name '" + field +
                              "' contains the separator '" +
                              std::string(1, separator) + "'");
    }
  }

  // The existence mark is the algebra's reading of "1" (the literal number
  // 1 for numeric carriers, which is what the demo sweep multiplies under
  // every operator pair), falling back to the times identity.
  Value mark;
  try {
    mark = alg->parse_value("1");
    if (alg->is_zero(mark)) mark = alg->one();
  } catch (const Error&) {
    mark = alg->one();
  }

  std::vector<std::string> cols;
  std::vector<std::tuple<std::string, std::string, Value>> triples;
  for (const auto& row_key : src.row_keys) {
    auto row_it = src.cells.find(row_key);
    if (row_it == src.cells.end()) continue;
    for (const auto& [field, values] : row_it->second) {
      for (const auto& value : values) {
        std::string col = field + separator + value;
        cols.push_back(col);
        triples.emplace_back(row_key, std::move(col), mark);
      }
    }
  }

  return AssociativeArray::from_triples(
      KeySet::of(src.row_keys), KeySet::of(std::move(cols)), std::move(alg),
      triples);
}

ColumnIncidence incidence_pair_from_columns(const AssociativeArray& exploded,
                                            const std::string& out_field,
                                            const std::string& in_field,
                                            char separator) {
  const std::string out_prefix = out_field + separator;
  const std::string in_prefix = in_field + separator;

  auto group_cols = [&](const std::string& prefix, const std::string& field) {
    std::vector<std::string> cols;
    for (const auto& c : exploded.cols()) {
      if (c.rfind(prefix, 0) == 0) cols.push_back(c);
    }
    if (cols.empty()) {
      throw SelectorError("no exploded columns for field '" + field + "'");
    }
    return cols;
  };
  const auto out_cols = group_cols(out_prefix, out_field);
  const auto in_cols = group_cols(in_prefix, in_field);

  // Count per-row nonzeros in each group; every kept row must have exactly
  // one in both (each edge has one source and one target).
  std::map<std::string, std::size_t> out_count, in_count;
  for (const auto& [key, v] : exploded.entries()) {
    if (key.second.rfind(out_prefix, 0) == 0) ++out_count[key.first];
    if (key.second.rfind(in_prefix, 0) == 0) ++in_count[key.first];
  }

  std::vector<std::string> kept, skipped;
  for (const auto& row : exploded.rows()) {
    const std::size_t n_out = out_count.count(row) ? out_count[row] : 0;
    const std::size_t n_in = in_count.count(row) ? in_count[row] : 0;
    if (n_out > 1) {
      throw HyperedgeError("row '" + row + "' has " + std::to_string(n_out) +
                           " nonzeros in field '" + out_field + "'");
    }
    if (n_in > 1) {
      throw HyperedgeError("row '" + row + "' has " + std::to_string(n_in) +
                           " nonzeros in field '" + in_field + "'");
    }
    if (n_out == 1 && n_in == 1) {
      kept.push_back(row);
    } else {
      skipped.push_back(row);
    }
  }

  const Selector row_sel = Selector::list(kept);
  AssociativeArray e_out =
      exploded.subarray(row_sel, Selector::list(out_cols));
  AssociativeArray e_in = exploded.subarray(row_sel, Selector::list(in_cols));
  return ColumnIncidence{
      IncidencePair::create(std::move(e_out), std::move(e_in)),
      std::move(skipped)};
}

AssociativeArray reweight(const AssociativeArray& arr,
                          const std::map<std::string, Value>& column_values) {
  const auto& alg = *arr.algebra();
  for (const auto& [col, v] : column_values) {
    if (alg.is_zero(v)) {
      throw InvalidWeightError("replacement for column '" + col +
                               "' is the algebra's zero");
    }
  }
  std::vector<std::tuple<std::string, std::string, Value>> triples;
  for (const auto& [key, v] : arr.entries()) {
    auto it = column_values.find(key.second);
    triples.emplace_back(key.first, key.second,
                         it == column_values.end() ? v : it->second);
  }
  return AssociativeArray::from_triples(arr.rows(), arr.cols(), arr.algebra(),
                                        triples);
}

CorrelateResult correlate_table(
    const TabularSource& src, const std::string& out_field,
    const std::string& in_field, char separator, AlgebraPtr alg, Mode mode,
    const std::map<std::string, Value>& reweight_columns) {
  AssociativeArray exploded = explode(src, separator, alg);
  ColumnIncidence incidence =
      incidence_pair_from_columns(exploded, out_field, in_field, separator);
  AssociativeArray e_out = reweight_columns.empty()
                               ? incidence.pair.e_out
                               : reweight(incidence.pair.e_out,
                                          reweight_columns);
  IncidencePair pair =
      IncidencePair::create(std::move(e_out), incidence.pair.e_in);
  return CorrelateResult{adjacency(pair, mode),
                         std::move(incidence.skipped_rows)};
}

const std::string& demo_dataset_tsv() {
  static const std::string table =
      "Track\tArtist\tGenre\tWriter\tYear\n"
      "t01\tAria North\tPop\tAdams\t1984\n"
      "t02\tAria North\tPop\tAdams\t1985\n"
      "t03\tThe Blue Keys\tPop\tBrown\t1984\n"
      "t04\tThe Blue Keys\tRock\tBrown\t1986\n"
      "t05\tCastor\tRock\tChen\t1987\n"
      "t06\tCastor\tRock\tChen\t1988\n"
      "t07\tDelta Ray\tJazz\tDavis\t1982\n"
      "t08\tDelta Ray\tJazz\tDavis\t1983\n"
      "t09\tDelta Ray;Castor\tJazz\tDavis\t1989\n"
      "t10\tAria North\tPop\tDavis\t1990\n";
  return table;
}

}  // namespace semigraph
