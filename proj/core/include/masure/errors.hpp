#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace masure {

class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& what)
      : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

#define MASURE_ERROR(Name)                                              \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& what) : Error(#Name, what) {}      \
  };

MASURE_ERROR(NotExpandable)
MASURE_ERROR(NotLambdaPath)
MASURE_ERROR(StrategyInapplicable)
MASURE_ERROR(ProblematicCase)
MASURE_ERROR(ZeroEntry)
MASURE_ERROR(SingularPivot)
MASURE_ERROR(NotInN)
MASURE_ERROR(SignMismatch)
MASURE_ERROR(AmbiguousGerm)
MASURE_ERROR(NotDefined)
MASURE_ERROR(DecorationMismatch)
MASURE_ERROR(NotCentrifugal)
MASURE_ERROR(TooLarge)
MASURE_ERROR(ParseError)
MASURE_ERROR(FieldMismatch)
MASURE_ERROR(Overflow)

#undef MASURE_ERROR

// carries the smallest window that would have been enough
class BoundExceeded : public Error {
 public:
  BoundExceeded(const std::string& what, std::int64_t needed)
      : Error("BoundExceeded", what), needed_(needed) {}
  std::int64_t needed() const { return needed_; }

 private:
  std::int64_t needed_;
};

}  // namespace masure
