#pragma once

#include <stdexcept>
#include <string>

namespace ttilt {

/// Malformed input text (algebra, module, pair or complex files).
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Well-formed input that is mathematically invalid for the request,
/// e.g. a relation between non-parallel paths or a pair that is not τ-rigid.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// An internal consistency check failed. Seeing one of these means a bug or a
/// counterexample to something the engine relies on.
struct InvariantViolation : std::logic_error {
  using std::logic_error::logic_error;
};

/// The endomorphism ring splitting did not produce a decomposition.
struct DecompositionFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ttilt
