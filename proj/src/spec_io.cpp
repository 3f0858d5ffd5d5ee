#include "monorel/spec_io.hpp"

#include <algorithm>
#include <json.hpp>

#include "monorel/gallery.hpp"

namespace monorel {

namespace {

using nlohmann::json;

std::size_t line_of(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + byte, '\n'));
}

Rows read_rows(const json& doc, const char* field) {
  const auto it = doc.find(field);
  if (it == doc.end()) throw ParseError(std::string("missing field '") + field + "'", 0, field);
  if (!it->is_array()) throw ParseError(std::string("field '") + field + "' must be an array", 0, field);
  Rows rows;
  for (std::size_t i = 0; i < it->size(); ++i) {
    const json& row = (*it)[i];
    const std::string where = std::string(field) + "[" + std::to_string(i) + "]";
    if (!row.is_array()) throw ParseError("'" + where + "' must be an array of numbers", 0, where);
    std::vector<double> values;
    values.reserve(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) {
      if (!row[j].is_number()) {
        const std::string cell = where + "[" + std::to_string(j) + "]";
        throw ParseError("'" + cell + "' must be a number", 0, cell);
      }
      values.push_back(row[j].get<double>());
    }
    rows.push_back(std::move(values));
  }
  return rows;
}

Index read_dim(const json& doc, const char* field) {
  const auto& v = doc.at(field);
  if (!v.is_number_integer()) throw ParseError(std::string("field '") + field + "' must be an integer", 0, field);
  const auto n = v.get<long long>();
  if (n < 1) throw ValidationError(std::string("field '") + field + "' must be positive");
  return static_cast<Index>(n);
}

void require_width(const Rows& rows, std::size_t width, const char* field) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != width) {
      throw ValidationError(std::string(field) + "[" + std::to_string(i) + "] has " +
                            std::to_string(rows[i].size()) + " entries, expected " +
                            std::to_string(width));
    }
  }
}

Matrix to_matrix(const Rows& rows, Index cols) {
  Matrix m(static_cast<Index>(rows.size()), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (Index j = 0; j < cols; ++j) m(static_cast<Index>(i), j) = rows[i][static_cast<std::size_t>(j)];
  return m;
}

json rows_json(const Rows& rows) {
  json out = json::array();
  for (const auto& r : rows) out.push_back(r);
  return out;
}

void validate(RelationSpec& spec) {
  switch (spec.kind) {
    case SpecKind::kMatrix: {
      const std::size_t rows = spec.payload.size();
      if (rows == 0) throw ValidationError("matrix payload is empty");
      if (spec.n == 0) spec.n = static_cast<Index>(rows);
      if (rows != static_cast<std::size_t>(spec.n)) {
        throw ValidationError("matrix payload has " + std::to_string(rows) + " rows, n = " +
                              std::to_string(spec.n));
      }
      require_width(spec.payload, rows, "payload");
      break;
    }
    case SpecKind::kGraph: {
      for (std::size_t i = 0; i < spec.payload.size(); ++i) {
        if (spec.payload[i].size() % 2 != 0) {
          throw ValidationError("payload[" + std::to_string(i) + "] has odd length " +
                                std::to_string(spec.payload[i].size()));
        }
      }
      if (spec.n == 0) {
        if (spec.payload.empty()) throw ValidationError("graph spec without rows needs 'n'");
        spec.n = static_cast<Index>(spec.payload.front().size() / 2);
      }
      if (spec.n == 0) throw ValidationError("graph vectors must be non-empty");
      require_width(spec.payload, static_cast<std::size_t>(2 * spec.n), "payload");
      break;
    }
    case SpecKind::kOperatorOnSubspace: {
      const std::size_t rows = spec.matrix.size();
      if (rows == 0) throw ValidationError("operator_on_subspace matrix is empty");
      if (spec.n == 0) spec.n = static_cast<Index>(rows);
      if (rows != static_cast<std::size_t>(spec.n)) {
        throw ValidationError("matrix has " + std::to_string(rows) + " rows, n = " +
                              std::to_string(spec.n));
      }
      require_width(spec.matrix, rows, "matrix");
      require_width(spec.domain, rows, "domain");
      break;
    }
    case SpecKind::kGallery: {
      if (spec.name != "volterra" && spec.name != "derivative" && spec.name != "shift_skew") {
        throw ValidationError("unknown gallery name '" + spec.name +
                              "' (expected volterra, derivative or shift_skew)");
      }
      if (spec.name == "shift_skew" && spec.n < 2) {
        throw ValidationError("shift_skew needs n >= 2");
      }
      break;
    }
  }
  if (spec.tol && !(*spec.tol >= 0.0)) throw ValidationError("'tol' must be nonnegative");
}

}  // namespace

const char* to_string(SpecKind kind) {
  switch (kind) {
    case SpecKind::kMatrix:
      return "matrix";
    case SpecKind::kGraph:
      return "graph";
    case SpecKind::kOperatorOnSubspace:
      return "operator_on_subspace";
    case SpecKind::kGallery:
      return "gallery";
  }
  return "?";
}

RelationSpec parse_spec(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON at line ") +
                         std::to_string(line_of(text, e.byte == 0 ? 0 : e.byte - 1)) + ": " + e.what(),
                     line_of(text, e.byte == 0 ? 0 : e.byte - 1), "");
  }
  if (!doc.is_object()) throw ParseError("spec must be a JSON object", 1, "");

  RelationSpec spec;
  try {
    if (!doc.contains("kind") || !doc["kind"].is_string()) {
      throw ParseError("missing or non-string field 'kind'", 0, "kind");
    }
    const std::string kind = doc["kind"].get<std::string>();
    if (doc.contains("n")) spec.n = read_dim(doc, "n");
    if (doc.contains("tol")) {
      if (!doc["tol"].is_number()) throw ParseError("field 'tol' must be a number", 0, "tol");
      spec.tol = doc["tol"].get<double>();
    }
    if (kind == "matrix") {
      spec.kind = SpecKind::kMatrix;
      spec.payload = read_rows(doc, "payload");
    } else if (kind == "graph") {
      spec.kind = SpecKind::kGraph;
      spec.payload = read_rows(doc, "payload");
    } else if (kind == "operator_on_subspace") {
      spec.kind = SpecKind::kOperatorOnSubspace;
      spec.domain = read_rows(doc, "domain");
      spec.matrix = read_rows(doc, "matrix");
    } else if (kind == "gallery") {
      spec.kind = SpecKind::kGallery;
      if (!doc.contains("name") || !doc["name"].is_string()) {
        throw ParseError("gallery spec needs a string field 'name'", 0, "name");
      }
      spec.name = doc["name"].get<std::string>();
      if (!doc.contains("n")) throw ParseError("gallery spec needs field 'n'", 0, "n");
    } else {
      throw ValidationError("unknown kind '" + kind + "'");
    }
  } catch (const json::exception& e) {
    throw ParseError(e.what(), 0, "");
  }
  validate(spec);
  return spec;
}

std::string serialize_spec(const RelationSpec& spec) {
  json doc;
  doc["kind"] = to_string(spec.kind);
  if (spec.n > 0) doc["n"] = spec.n;
  switch (spec.kind) {
    case SpecKind::kMatrix:
    case SpecKind::kGraph:
      doc["payload"] = rows_json(spec.payload);
      break;
    case SpecKind::kOperatorOnSubspace:
      doc["domain"] = rows_json(spec.domain);
      doc["matrix"] = rows_json(spec.matrix);
      break;
    case SpecKind::kGallery:
      doc["name"] = spec.name;
      break;
  }
  if (spec.tol) doc["tol"] = *spec.tol;
  return doc.dump();
}

LinearRelation build_relation(const RelationSpec& spec, std::optional<double> tol) {
  const double rank_tol = tol.value_or(spec.tol.value_or(kRankTol));
  const Index n = spec.n;
  switch (spec.kind) {
    case SpecKind::kMatrix: {
      const Matrix m = to_matrix(spec.payload, n);
      Matrix g(2 * n, n);
      g << Matrix::Identity(n, n), m;
      return LinearRelation(n, Subspace::span(g, rank_tol));
    }
    case SpecKind::kGraph: {
      const Matrix rows = to_matrix(spec.payload, 2 * n);
      return LinearRelation(n, Subspace::span(Matrix(rows.transpose()), rank_tol));
    }
    case SpecKind::kOperatorOnSubspace: {
      const Matrix d = to_matrix(spec.domain, n);
      return make_maximal(Subspace::span(Matrix(d.transpose()), rank_tol), to_matrix(spec.matrix, n));
    }
    case SpecKind::kGallery:
      if (spec.name == "volterra") return gallery::volterra(n);
      if (spec.name == "derivative") return gallery::derivative_relation(n);
      return gallery::shift_skew(n);
  }
  throw ValidationError("unsupported spec kind");
}

RelationSpec graph_spec(const LinearRelation& a) {
  RelationSpec spec;
  spec.kind = SpecKind::kGraph;
  spec.n = a.n();
  const Matrix& g = a.graph().basis();
  for (Index j = 0; j < g.cols(); ++j) {
    spec.payload.emplace_back(g.col(j).data(), g.col(j).data() + g.rows());
  }
  return spec;
}

}  // namespace monorel
