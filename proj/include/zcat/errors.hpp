#pragma once

#include <stdexcept>
#include <string>

namespace zcat {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownId : public Error {
 public:
  explicit UnknownId(const std::string& what) : Error("unknown identifier: " + what) {}
};

class MalformedInput : public Error {
 public:
  using Error::Error;
};

class NotComposable : public Error {
 public:
  using Error::Error;
};

// An enumeration was asked to run on a category above the configured size bound.
class GuardrailExceeded : public Error {
 public:
  using Error::Error;
};

// A table lookup hit an entry that a truncated (partial) category leaves undefined.
class PartialTable : public Error {
 public:
  using Error::Error;
};

// The monoidal structure, or a braiding, is required but absent.
class MissingStructure : public Error {
 public:
  using Error::Error;
};

// A construction refused to run because a hypothesis it relies on does not hold.
class PreconditionRefused : public Error {
 public:
  using Error::Error;
};

// A stored colimit turned out not to be universal (no or several mediators).
class ColimitInconsistency : public Error {
 public:
  using Error::Error;
};

// A property the theory guarantees failed on a concrete instance.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace zcat
