#include "dihedrant/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "dihedrant/errors.hpp"

namespace dih {

namespace {

std::string cell_ref(std::size_t row, std::size_t col) {
  return "row " + std::to_string(row) + ", column " + std::to_string(col);
}

Scalar parse_cell(std::string_view text, std::size_t row, std::size_t col) {
  try {
    return parse_scalar(text);
  } catch (const std::invalid_argument& e) {
    throw ParseError(cell_ref(row, col) + ": " + e.what(), row, col);
  }
}

ExactMatrix build_square(std::vector<std::vector<Scalar>> rows) {
  if (rows.empty()) throw ParseError("matrix has no rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw ParseError("matrix is not square: row " + std::to_string(i + 1) + " has " +
                           std::to_string(rows[i].size()) + " entries, expected " +
                           std::to_string(rows.size()),
                       i + 1);
    }
  }
  return ExactMatrix(rows);
}

}  // namespace

ExactMatrix parse_matrix_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ParseError("expected a JSON array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    const auto& r = doc[i];
    if (!r.is_array()) throw ParseError("row " + std::to_string(i + 1) + " is not an array", i + 1);
    std::vector<Scalar> row;
    for (std::size_t j = 0; j < r.size(); ++j) {
      const auto& cell = r[j];
      if (cell.is_number_integer()) {
        row.push_back(parse_cell(cell.dump(), i + 1, j + 1));
      } else if (cell.is_string()) {
        row.push_back(parse_cell(cell.get<std::string>(), i + 1, j + 1));
      } else {
        throw ParseError(cell_ref(i + 1, j + 1) + ": expected integer or \"p/q\" string, got " +
                             cell.dump(),
                         i + 1, j + 1);
      }
    }
    rows.push_back(std::move(row));
  }
  return build_square(std::move(rows));
}

ExactMatrix parse_matrix_csv(std::string_view text) {
  std::vector<std::vector<Scalar>> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    const std::size_t row_no = rows.size() + 1;
    std::vector<Scalar> row;
    std::size_t start = 0;
    for (std::size_t col = 1;; ++col) {
      const std::size_t comma = line.find(',', start);
      row.push_back(parse_cell(std::string_view(line).substr(start, comma - start), row_no, col));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    rows.push_back(std::move(row));
  }
  return build_square(std::move(rows));
}

ExactMatrix parse_matrix(std::string_view text, MatrixFormat format) {
  return format == MatrixFormat::Csv ? parse_matrix_csv(text) : parse_matrix_json(text);
}

MatrixFormat format_for_path(const std::filesystem::path& path) {
  return path.extension() == ".csv" ? MatrixFormat::Csv : MatrixFormat::Json;
}

ExactMatrix read_matrix_file(const std::filesystem::path& path, MatrixFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_matrix(buf.str(), format);
}

std::string matrix_to_json(const ExactMatrix& a) {
  nlohmann::json doc = nlohmann::json::array();
  for (int i = 1; i <= a.order(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 1; j <= a.order(); ++j) {
      const Scalar& x = a(i, j);
      if (x.get_den() == 1 && x.get_num().fits_slong_p()) {
        row.push_back(x.get_num().get_si());
      } else {
        row.push_back(scalar_to_string(x));
      }
    }
    doc.push_back(std::move(row));
  }
  return doc.dump();
}

std::string matrix_to_csv(const ExactMatrix& a) {
  std::string out;
  for (int i = 1; i <= a.order(); ++i) {
    for (int j = 1; j <= a.order(); ++j) {
      if (j > 1) out += ',';
      out += scalar_to_string(a(i, j));
    }
    out += '\n';
  }
  return out;
}

}  // namespace dih
