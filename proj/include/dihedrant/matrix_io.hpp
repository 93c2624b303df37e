#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "dihedrant/exact_matrix.hpp"

namespace dih {

enum class MatrixFormat { Json, Csv };

/// JSON: array of arrays; entries are integers or strings "p" / "p/q".
/// Throws ParseError naming the offending row/column (1-based).
ExactMatrix parse_matrix_json(std::string_view text);

/// CSV: one row per line, integer or p/q cells. Blank lines are ignored.
ExactMatrix parse_matrix_csv(std::string_view text);

ExactMatrix parse_matrix(std::string_view text, MatrixFormat format);

/// By extension: ".csv" is CSV, anything else JSON.
MatrixFormat format_for_path(const std::filesystem::path& path);

ExactMatrix read_matrix_file(const std::filesystem::path& path, MatrixFormat format);

/// Compact JSON: integers as numbers, non-integers as "p/q" strings.
std::string matrix_to_json(const ExactMatrix& a);

std::string matrix_to_csv(const ExactMatrix& a);

}  // namespace dih
