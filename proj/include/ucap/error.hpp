#pragma once

#include <stdexcept>
#include <string>

namespace ucap {

// Instance or solution data violates a model invariant.
struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed input file; message carries "<source>:<line>: ...".
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A solution references a section or faculty the instance does not define.
struct IntegrityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// No hard-feasible assignment could be produced within the retry budget,
// or a generator spec admits no feasible instance.
struct InfeasibleError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ucap
