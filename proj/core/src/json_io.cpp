#include "qdrazin/json_io.hpp"

#include <string>
#include <vector>

#include "qdrazin/errors.hpp"

namespace qdrazin {
namespace {

std::size_t positive_dimension(const Json& j, const char* key) {
  if (!j.contains(key)) throw ParseError(std::string("matrix is missing \"") + key + "\"");
  const Json& v = j.at(key);
  if (!v.is_number_integer() || v.get<std::int64_t>() <= 0) {
    throw ParseError(std::string("\"") + key + "\" must be a positive integer");
  }
  return v.get<std::size_t>();
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      const auto u = j.get<std::uint64_t>();
      return Rational::parse(std::to_string(u));
    }
    return Rational(j.get<std::int64_t>());
  }
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_float()) throw ParseError("floating-point component " + j.dump() + " is not exact");
  throw ParseError("expected an integer or \"p/q\" string, got " + j.dump());
}

Json rational_to_json(const Rational& r) {
  if (r.fits_int64()) return r.to_int64();
  return r.to_string();
}

Quaternion quaternion_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) {
    throw ParseError("quaternion must be a 4-array, got " + j.dump());
  }
  return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]),
          rational_from_json(j[3])};
}

Json quaternion_to_json(const Quaternion& q) {
  Json out = Json::array();
  for (std::size_t c = 0; c < 4; ++c) out.push_back(rational_to_json(q[c]));
  return out;
}

QMatrix matrix_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("matrix must be a JSON object");
  const std::size_t rows = positive_dimension(j, "rows");
  const std::size_t cols = positive_dimension(j, "cols");
  if (!j.contains("data") || !j.at("data").is_array()) {
    throw ParseError("matrix is missing the \"data\" array");
  }
  const Json& data = j.at("data");
  if (data.size() != rows) {
    throw ParseError("\"data\" has " + std::to_string(data.size()) + " rows, expected " +
                     std::to_string(rows));
  }
  std::vector<Quaternion> entries;
  entries.reserve(rows * cols);
  for (const Json& row : data) {
    if (!row.is_array() || row.size() != cols) {
      throw ParseError("every row of \"data\" must hold " + std::to_string(cols) + " entries");
    }
    for (const Json& q : row) entries.push_back(quaternion_from_json(q));
  }
  return {rows, cols, std::move(entries)};
}

Json matrix_to_json(const QMatrix& m) {
  Json data = Json::array();
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 1; j <= m.cols(); ++j) row.push_back(quaternion_to_json(m(i, j)));
    data.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

Json matrix_to_pretty_json(const QMatrix& m) {
  Json data = Json::array();
  for (std::size_t i = 1; i <= m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 1; j <= m.cols(); ++j) row.push_back(m(i, j).to_string());
    data.push_back(std::move(row));
  }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

}  // namespace qdrazin
