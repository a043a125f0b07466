#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mutunc/matrix.hpp"

namespace mutunc {

// On-disk matrix: {"dims": [d1, ...], "re": [[...], ...], "im": [[...], ...]}.
// "im" may be omitted for real matrices; "dims" may be omitted and then
// defaults to a single subsystem. Ragged rows are rejected.
struct MatrixFile {
  std::vector<std::size_t> dims;
  ComplexMatrix matrix;
};

MatrixFile parse_matrix_json(std::string_view text);
MatrixFile read_matrix_file(const std::filesystem::path& path);
std::string to_matrix_json(const ComplexMatrix& m, const std::vector<std::size_t>& dims);

}  // namespace mutunc
