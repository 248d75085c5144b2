#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sfdga/error.hpp"
#include "sfdga/presentation.hpp"
#include "sfdga/tensor.hpp"

namespace sfdga {

class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, int line, int column, std::vector<std::string> expected,
             const std::string& message);

  int line() const { return line_; }
  int column() const { return column_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  int line_;
  int column_;
  std::vector<std::string> expected_;
};

// Polynomial syntax: integer or fraction coefficients, `*`, `^k` (k >= 1),
// `+`, `-`, parentheses. Generator names are resolved against `sig`.
NcPoly parse_poly(std::string_view text, const SignaturePtr& sig);

using Presentation = std::variant<GroupPresentation, AlgebraPresentation>;

//   group <name> = < g1, g2 | g1*g2^-1*g1^3, ... >
//   algebra <name> = < x1, x2 | 2*x1*x2 - 1, x1^2 >
// `ring` is only used for algebra presentations.
Presentation parse_presentation(std::string_view text, RingSpec ring);

}  // namespace sfdga
