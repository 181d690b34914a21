#pragma once

#include <stdexcept>
#include <string>

namespace repvar {

// Base of everything the library throws on bad input or a failed precondition.
// The CLI maps these to exit code 2.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
  virtual const char* kind() const noexcept { return "Error"; }
};

#define REPVAR_ERROR(Name)                                              \
  class Name : public Error {                                           \
   public:                                                              \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {} \
    const char* kind() const noexcept override { return #Name; }        \
  }

REPVAR_ERROR(DivisionByZero);
REPVAR_ERROR(EvalAtZero);
REPVAR_ERROR(FieldMismatch);
REPVAR_ERROR(UnrepresentableInput);
REPVAR_ERROR(InvalidAbelianization);
REPVAR_ERROR(MissingAbelianization);
REPVAR_ERROR(DimensionMismatch);
REPVAR_ERROR(DeterminantMismatch);
REPVAR_ERROR(PresentationMismatch);
REPVAR_ERROR(RankNotTwo);
REPVAR_ERROR(RootMismatch);
REPVAR_ERROR(ModuleActionUndefined);
REPVAR_ERROR(NonzeroTrace);
REPVAR_ERROR(InvalidTruncation);
REPVAR_ERROR(NoDeletableColumn);
REPVAR_ERROR(NotIrreducible);
REPVAR_ERROR(UnknownEntry);

#undef REPVAR_ERROR

// Parse failures carry the byte offset into the input.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& msg, std::size_t pos)
      : Error("SyntaxError at " + std::to_string(pos) + ": " + msg), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }
  const char* kind() const noexcept override { return "SyntaxError"; }

 private:
  std::size_t pos_;
};

}  // namespace repvar
