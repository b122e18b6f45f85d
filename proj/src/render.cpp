#include "semigraph/render.hpp"

#include <sstream>
#include <vector>

namespace semigraph {

std::string render_text_table(const AssociativeArray& arr) {
  const auto& rows = arr.rows().keys();
  const auto& cols = arr.cols().keys();
  const auto& alg = *arr.algebra();

  std::vector<std::vector<std::string>> cells(rows.size());
  std::vector<std::vector<bool>> numeric(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    cells[i].resize(cols.size());
    numeric[i].resize(cols.size(), false);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const Value& v = arr.get(rows[i], cols[j]);
      if (!alg.is_zero(v)) {
        cells[i][j] = v.display();
        numeric[i][j] = v.is_number();
      }
    }
  }

  std::size_t row_width = 0;
  for (const auto& r : rows) row_width = std::max(row_width, r.size());
  std::vector<std::size_t> col_width(cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    col_width[j] = cols[j].size();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      col_width[j] = std::max(col_width[j], cells[i][j].size());
    }
  }

  std::ostringstream out;
  auto pad = [&](const std::string& s, std::size_t width, bool right) {
    const std::string fill(width - s.size(), ' ');
    out << (right ? fill + s : s + fill);
  };

  pad("", row_width, false);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    out << "  ";
    pad(cols[j], col_width[j], false);
  }
  out << '\n';
  for (std::size_t i = 0; i < rows.size(); ++i) {
    pad(rows[i], row_width, false);
    for (std::size_t j = 0; j < cols.size(); ++j) {
      out << "  ";
      pad(cells[i][j], col_width[j], numeric[i][j]);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace semigraph
