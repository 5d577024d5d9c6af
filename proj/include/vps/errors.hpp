#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vps {

/// Base of every error raised by the library. `kind()` is the stable name
/// surfaced by the CLI and the Python bindings.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  [[nodiscard]] virtual std::string_view kind() const noexcept { return "Error"; }
};

#define VPS_DEFINE_ERROR(Name, Base)                                              \
  class Name : public Base {                                                      \
   public:                                                                        \
    using Base::Base;                                                             \
    [[nodiscard]] std::string_view kind() const noexcept override { return #Name; } \
  }

VPS_DEFINE_ERROR(DomainError, Error);
VPS_DEFINE_ERROR(NotLinearlyNormal, DomainError);
VPS_DEFINE_ERROR(SingularQuadric, Error);
VPS_DEFINE_ERROR(UnsupportedQuadric, Error);
VPS_DEFINE_ERROR(DegenerateParameters, Error);
VPS_DEFINE_ERROR(BadReduction, Error);
VPS_DEFINE_ERROR(Infeasible, Error);
VPS_DEFINE_ERROR(Unstable, Error);
VPS_DEFINE_ERROR(NotPolynomialMap, Error);
VPS_DEFINE_ERROR(InternalError, Error);

#undef VPS_DEFINE_ERROR

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " + std::to_string(column) + ")"),
        line_(line),
        column_(column) {}
  [[nodiscard]] std::string_view kind() const noexcept override { return "ParseError"; }
  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace vps
