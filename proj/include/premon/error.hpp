#pragma once

#include <stdexcept>
#include <string>

namespace premon {

  // Bad caller input: out-of-range legs, wrong sizes, inadmissible signatures.
  class InvalidArgument : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // A Cayley table (or other user data) failed structural validation.
  class ValidationError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // The character-table eigensolver could not separate characters.
  class NumericDegeneracy : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Missing irrep data needed for the requested construction.
  class UnsupportedGroup : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Two independent routes to the same quantity disagree.
  class InternalConsistency : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

}  // namespace premon
