#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "monorel/error.hpp"
#include "monorel/relation.hpp"

namespace monorel {

/// Malformed JSON or a field of the wrong type. `line` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::string field)
      : Error(what), line_(line), field_(std::move(field)) {}
  std::size_t line() const { return line_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::string field_;
};

/// Well-formed document whose dimensions or names are inconsistent.
class ValidationError : public Error {
 public:
  using Error::Error;
};

enum class SpecKind { kMatrix, kGraph, kOperatorOnSubspace, kGallery };

const char* to_string(SpecKind kind);

using Rows = std::vector<std::vector<double>>;

/**
 * On-disk description of a relation (UTF-8 JSON).
 *
 *   {"n":2,"kind":"matrix","payload":[[0,-1],[1,0]]}
 *   {"n":2,"kind":"graph","payload":[[u1,u2,v1,v2], ...]}
 *   {"kind":"operator_on_subspace","domain":[[...], ...],"matrix":[[...], ...]}
 *   {"kind":"gallery","name":"volterra","n":100}
 *
 * An optional "tol" sets the rank tolerance; a "meta" object is ignored.
 */
struct RelationSpec {
  Index n = 0;
  SpecKind kind = SpecKind::kMatrix;
  Rows payload;  // matrix rows or graph vectors
  Rows domain;   // operator_on_subspace: spanning vectors of D
  Rows matrix;   // operator_on_subspace: the n x n operator
  std::string name;  // gallery
  std::optional<double> tol;

  bool operator==(const RelationSpec&) const = default;
};

RelationSpec parse_spec(std::string_view text);
/// Exact inverse of parse_spec: every double round-trips bit for bit.
std::string serialize_spec(const RelationSpec& spec);

/// Builds the relation; `tol` overrides spec.tol when given.
LinearRelation build_relation(const RelationSpec& spec, std::optional<double> tol = std::nullopt);

/// Graph-kind spec of an existing relation (one row per orthonormal graph basis vector).
RelationSpec graph_spec(const LinearRelation& a);

}  // namespace monorel
