#pragma once

#include <stdexcept>
#include <string>

namespace orthoentropy {

/// Matrix or block dimensions do not match what the operation requires.
struct ShapeMismatch : std::invalid_argument {
  explicit ShapeMismatch(const std::string& what) : std::invalid_argument(what) {}
};

/// Input failed a Hermiticity precondition.
struct NotHermitian : std::invalid_argument {
  explicit NotHermitian(const std::string& what) : std::invalid_argument(what) {}
};

/// Input failed a unitarity precondition.
struct NotUnitary : std::invalid_argument {
  explicit NotUnitary(const std::string& what) : std::invalid_argument(what) {}
};

/// An eigenvalue was more negative than the declared zero tolerance.
struct NegativeEigenvalue : std::domain_error {
  explicit NegativeEigenvalue(const std::string& what) : std::domain_error(what) {}
};

/// A family of elements does not sum to the identity as required.
struct PartitionDefect : std::invalid_argument {
  explicit PartitionDefect(const std::string& what) : std::invalid_argument(what) {}
};

/// The algebra shape is outside what the operation supports.
struct UnsupportedAlgebra : std::invalid_argument {
  explicit UnsupportedAlgebra(const std::string& what) : std::invalid_argument(what) {}
};

/// A problem file could not be parsed or failed its load-time invariants.
struct ProblemFileError : std::runtime_error {
  explicit ProblemFileError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace orthoentropy
