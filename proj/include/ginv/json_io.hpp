#pragma once

#include <json.hpp>

#include <string>
#include <variant>
#include <vector>

#include "ginv/inverses.hpp"

namespace ginv {

using json = nlohmann::ordered_json;

/// A matrix document decoded without knowing its ring in advance.
using AnyMatrix = std::variant<GMatrix, DMatrix>;

template <StarRing S>
json entries_to_json(const Matrix<S>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

/// {"ring": ..., "rows": n, "cols": m, "entries": [[scalar text, ...], ...]}
template <StarRing S>
json matrix_to_json(const Matrix<S>& m) {
  json doc;
  doc["ring"] = std::string(ring_traits<S>::name);
  doc["rows"] = m.rows();
  doc["cols"] = m.cols();
  doc["entries"] = entries_to_json(m);
  return doc;
}

template <StarRing S>
Matrix<S> matrix_from_json(const json& doc) {
  try {
    if (!doc.is_object()) throw ParseError("matrix document must be an object");
    if (doc.at("ring").get<std::string>() != ring_traits<S>::name)
      throw ParseError("expected ring " + std::string(ring_traits<S>::name) + ", got " + doc.at("ring").get<std::string>());
    const auto rows = doc.at("rows").get<std::size_t>();
    const auto cols = doc.at("cols").get<std::size_t>();
    const json& entries = doc.at("entries");
    if (!entries.is_array() || entries.size() != rows) throw ParseError("entries must have one array per row");
    std::vector<S> data;
    data.reserve(rows * cols);
    for (const auto& row : entries) {
      if (!row.is_array() || row.size() != cols) throw ParseError("every row must have " + std::to_string(cols) + " entries");
      for (const auto& x : row) {
        if (!x.is_string()) throw ParseError("scalars are written as strings");
        data.push_back(S::parse(x.get<std::string>()));
      }
    }
    return Matrix<S>(rows, cols, std::move(data));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad matrix document: ") + e.what());
  }
}

inline AnyMatrix any_matrix_from_json(const json& doc) {
  std::string ring;
  try {
    ring = doc.at("ring").get<std::string>();
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad matrix document: ") + e.what());
  }
  if (ring == ring_traits<GaussianRational>::name) return matrix_from_json<GaussianRational>(doc);
  if (ring == ring_traits<DualGaussian>::name) return matrix_from_json<DualGaussian>(doc);
  throw ParseError("unknown ring '" + ring + "'");
}

inline AnyMatrix parse_matrix_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return any_matrix_from_json(doc);
}

inline json checks_to_json(const std::vector<EquationCheck>& checks) {
  json out = json::array();
  for (const auto& c : checks) out.push_back(json{{"id", c.id}, {"holds", c.holds}});
  return out;
}

/// {"kind": ..., "valid": ..., "equations": [{"id": ..., "holds": ...}, ...]}
template <StarRing S>
json certificate_to_json(const Certificate<S>& cert) {
  json doc;
  doc["kind"] = std::string(to_string(cert.kind));
  doc["valid"] = cert.valid;
  doc["equations"] = checks_to_json(cert.equations);
  return doc;
}

}  // namespace ginv
