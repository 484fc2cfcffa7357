#pragma once

#include <stdexcept>
#include <string>

namespace picmod {

// Domain error with a stable machine-readable name (used for CLI exit
// diagnostics and for the python bindings).
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

#define PICMOD_DEFINE_ERROR(Name)                      \
  class Name : public Error {                          \
   public:                                             \
    explicit Name(const std::string& what)             \
        : Error(#Name, what) {}                        \
  };

PICMOD_DEFINE_ERROR(UnsupportedRank)
PICMOD_DEFINE_ERROR(NotDominant)
PICMOD_DEFINE_ERROR(DimensionCapExceeded)
PICMOD_DEFINE_ERROR(NonIntegralIndex)
PICMOD_DEFINE_ERROR(NotIsotypic)
PICMOD_DEFINE_ERROR(NotADivisor)
PICMOD_DEFINE_ERROR(GroupMismatch)
PICMOD_DEFINE_ERROR(NotAnnihilated)
PICMOD_DEFINE_ERROR(OddR)
PICMOD_DEFINE_ERROR(PreconditionViolated)
PICMOD_DEFINE_ERROR(GroupTooLarge)
PICMOD_DEFINE_ERROR(InvalidSpec)
PICMOD_DEFINE_ERROR(InvalidDegree)
PICMOD_DEFINE_ERROR(NotAdjointFamily)
PICMOD_DEFINE_ERROR(NoFormKnown)
PICMOD_DEFINE_ERROR(NotQuadraticRefinement)
PICMOD_DEFINE_ERROR(NotHomomorphism)

#undef PICMOD_DEFINE_ERROR

// Rep-expression syntax error; reports the byte offset of the offending
// token.  Treated as a usage error (exit code 2) by the CLI.
class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : Error("ParseError", what), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace picmod
