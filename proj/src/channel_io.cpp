#include "qcoh/channel_io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace qcoh {

namespace {

using nlohmann::json;

Complex parse_entry(const json& cell) {
  if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number()) {
    throw document_error("channel document: complex entries must be [re, im] number pairs");
  }
  return Complex(cell[0].get<double>(), cell[1].get<double>());
}

Matrix parse_matrix(const json& rows, Eigen::Index dim) {
  if (!rows.is_array() || static_cast<Eigen::Index>(rows.size()) != dim) {
    throw document_error("channel document: each Kraus operator must have dim rows");
  }
  Matrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const json& row = rows[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != dim) {
      throw document_error("channel document: each Kraus row must have dim entries");
    }
    for (Eigen::Index j = 0; j < dim; ++j) {
      m(i, j) = parse_entry(row[static_cast<std::size_t>(j)]);
    }
  }
  return m;
}

}  // namespace

ChannelDocument parse_channel_document(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::exception& e) {
    throw document_error(std::string("channel document: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw document_error("channel document: top level must be an object");
  if (!doc.contains("dim") || !doc["dim"].is_number_integer() || doc["dim"].get<long>() < 1) {
    throw document_error("channel document: \"dim\" must be a positive integer");
  }
  ChannelDocument out;
  out.dim = doc["dim"].get<Eigen::Index>();
  if (!doc.contains("kraus") || !doc["kraus"].is_array() || doc["kraus"].empty()) {
    throw document_error("channel document: \"kraus\" must be a nonempty array of matrices");
  }
  for (const json& op : doc["kraus"]) out.kraus.push_back(parse_matrix(op, out.dim));
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw document_error("channel document: \"name\" must be a string");
    out.name = doc["name"].get<std::string>();
  }
  if (doc.contains("tolerance")) {
    if (!doc["tolerance"].is_number() || doc["tolerance"].get<double>() <= 0.0) {
      throw document_error("channel document: \"tolerance\" must be a positive number");
    }
    out.tolerance = doc["tolerance"].get<double>();
  }
  return out;
}

ChannelDocument load_channel_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw document_error("channel document: cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_channel_document(buffer.str());
}

KrausChannel channel_from_document(const ChannelDocument& doc,
                                   std::optional<double> tol_override) {
  const double tol = tol_override.value_or(doc.tolerance.value_or(kDefaultTol));
  return KrausChannel::validated(doc.kraus, tol);
}

}  // namespace qcoh
