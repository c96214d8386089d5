#pragma once

// JSON encoding of scalars, vectors and operators shared by the CLI.

#include <cstddef>
#include <string>

#include <nlohmann/json.hpp>

#include "biframe/cli.hpp"
#include "biframe/linalg.hpp"

namespace biframe::cli::detail {

using Json = nlohmann::ordered_json;

/// Parses JSON text; syntax errors become ParseError with line and column.
Json parse_json(const std::string& text, const std::string& what);

/// 1-based line of a byte offset.
std::size_t line_of(const std::string& text, std::size_t offset);

/// A number, or a string holding a decimal or hex-float literal.
double read_number(const Json& v, const std::string& where);
Scalar read_scalar(const Json& v, Field field, const std::string& where);
Vector read_vector(const Json& v, Field field, const std::string& where);
/// Square matrix as a list of rows.
Operator read_operator(const Json& v, Field field, const std::string& where);

Json encode_number(double x, bool hex);
Json encode(const Vector& v, bool hex = false);
Json encode(const Operator& m, bool hex = false);

}  // namespace biframe::cli::detail
