#pragma once

#include <iosfwd>
#include <string>

#include "gdpm/types.hpp"

namespace gdpm {

/// Reads a real matrix in Matrix Market coordinate or array format
/// (general or symmetric qualifier).  Throws std::runtime_error on malformed
/// input.
Matrix read_matrix_market(std::istream& in);
Matrix read_matrix_market_file(const std::string& path);

/// Writes a symmetric matrix in Matrix Market array format (lower triangle,
/// symmetric qualifier), with shortest round-trip decimals.
void write_matrix_market(std::ostream& out, const Matrix& a);
void write_matrix_market_file(const std::string& path, const Matrix& a);

/// Vectors are plain text, one value per line; blank lines and '%' or '#'
/// comment lines are ignored on input.
Vector read_vector_text(std::istream& in);
Vector read_vector_text_file(const std::string& path);
void write_vector_text(std::ostream& out, const Vector& v);
void write_vector_text_file(const std::string& path, const Vector& v);

}  // namespace gdpm
