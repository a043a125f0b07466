#include "mutunc/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace mutunc {

namespace {

using json = nlohmann::json;

std::vector<std::vector<double>> read_rows(const json& j, const char* key) {
  if (!j.is_array()) throw ValidationError(std::string("matrix file: \"") + key + "\" must be an array of rows");
  std::vector<std::vector<double>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ValidationError(std::string("matrix file: \"") + key + "\" rows must be arrays");
    std::vector<double> r;
    for (const auto& v : row) {
      if (!v.is_number()) throw ValidationError(std::string("matrix file: non-numeric entry in \"") + key + "\"");
      r.push_back(v.get<double>());
    }
    rows.push_back(std::move(r));
  }
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) {
      throw ValidationError(std::string("matrix file: ragged rows in \"") + key + "\"");
    }
  }
  return rows;
}

}  // namespace

MatrixFile parse_matrix_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("matrix file: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("re")) throw ValidationError("matrix file: expected an object with \"re\"");

  const auto re = read_rows(doc["re"], "re");
  const std::size_t rows = re.size();
  const std::size_t cols = rows == 0 ? 0 : re.front().size();
  std::vector<std::vector<double>> im;
  if (doc.contains("im")) {
    im = read_rows(doc["im"], "im");
    if (im.size() != rows || (rows > 0 && im.front().size() != cols)) {
      throw ValidationError("matrix file: \"re\" and \"im\" shapes differ");
    }
  }

  std::vector<cplx> entries;
  entries.reserve(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) entries.emplace_back(re[r][c], im.empty() ? 0.0 : im[r][c]);

  MatrixFile out{{}, ComplexMatrix(rows, cols, std::move(entries))};
  if (doc.contains("dims")) {
    const auto& dims = doc["dims"];
    if (!dims.is_array()) throw ValidationError("matrix file: \"dims\" must be an array");
    for (const auto& d : dims) {
      if (!d.is_number_unsigned() || d.get<std::size_t>() == 0) {
        throw ValidationError("matrix file: \"dims\" entries must be positive integers");
      }
      out.dims.push_back(d.get<std::size_t>());
    }
  } else {
    out.dims = {rows};
  }
  return out;
}

MatrixFile read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open matrix file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_matrix_json(buf.str());
}

std::string to_matrix_json(const ComplexMatrix& m, const std::vector<std::size_t>& dims) {
  json re = json::array(), im = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json rr = json::array(), ir = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      rr.push_back(m(r, c).real());
      ir.push_back(m(r, c).imag());
    }
    re.push_back(std::move(rr));
    im.push_back(std::move(ir));
  }
  return json{{"dims", dims}, {"re", re}, {"im", im}}.dump();
}

}  // namespace mutunc
