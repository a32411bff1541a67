#pragma once

#include <iosfwd>
#include <string>

#include "srll/field.hpp"

namespace srll {

class GradedTensor;
struct GradedSpace;

/// Parse the fixture expression grammar: integers, registered variables,
/// + - * / ^ with integer exponents (negatives allowed), parentheses.
/// Unicode minus U+2212 is accepted as '-'; output always uses ASCII.
RatFunc parse_expr(const std::string& text);

/// Canonical text form; parse_expr(print_expr(x)) reproduces x exactly.
std::string print_expr(const RatFunc& x);

/// Matrix fixture format:
///   matrix <rows> <cols> m=<m> n=<n>
///   <i> <j> : <expr>
/// Omitted entries are zero; indices are 1-based row-major over V (x) V.
GradedTensor parse_matrix(std::istream& in);
GradedTensor parse_matrix_file(const std::string& path);
std::string print_matrix(const GradedTensor& t);

}  // namespace srll
