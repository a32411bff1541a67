#pragma once

#include <stdexcept>
#include <string>

namespace srll {

struct DivisionByZero : std::domain_error {
  explicit DivisionByZero(const std::string& what = "division by zero")
      : std::domain_error(what) {}
};

struct UnsupportedSubstitution : std::domain_error {
  explicit UnsupportedSubstitution(const std::string& what)
      : std::domain_error(what) {}
};

struct ShapeError : std::invalid_argument {
  explicit ShapeError(const std::string& what) : std::invalid_argument(what) {}
};

struct NotApplicable : std::invalid_argument {
  explicit NotApplicable(const std::string& what) : std::invalid_argument(what) {}
};

struct NotOrientable : std::invalid_argument {
  explicit NotOrientable(const std::string& what) : std::invalid_argument(what) {}
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct DerivationMismatch : std::runtime_error {
  explicit DerivationMismatch(const std::string& what, std::string residual_text = {})
      : std::runtime_error(what), residual(std::move(residual_text)) {}
  std::string residual;
};

struct ParseError : std::runtime_error {
  ParseError(const std::string& what, int line_, int col_)
      : std::runtime_error(what + " at line " + std::to_string(line_) + ", column " +
                           std::to_string(col_)),
        line(line_), col(col_) {}
  int line;
  int col;
};

}  // namespace srll
