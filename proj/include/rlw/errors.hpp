#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rlw {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t pos, const std::string& msg)
      : Error("SyntaxError", "at offset " + std::to_string(pos) + ": " + msg), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

#define RLW_SIMPLE_ERROR(Name)                                  \
  class Name : public Error {                                   \
   public:                                                      \
    explicit Name(const std::string& msg) : Error(#Name, msg) {} \
  };

RLW_SIMPLE_ERROR(UnboundScalarLiteral)
RLW_SIMPLE_ERROR(NoFractions)
RLW_SIMPLE_ERROR(MarginalMismatch)
RLW_SIMPLE_ERROR(CapExceeded)
RLW_SIMPLE_ERROR(NotPure)
RLW_SIMPLE_ERROR(NotNormal)
RLW_SIMPLE_ERROR(SuiteUnknown)
RLW_SIMPLE_ERROR(UsageError)

#undef RLW_SIMPLE_ERROR

}  // namespace rlw
