#pragma once

#include <stdexcept>
#include <string>

namespace mdcut {

/// Malformed or out-of-range input to a library call.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rotation system that does not describe a planar embedding of its graph.
class EmbeddingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An algorithm precondition (4-connectivity, planarity, ...) turned out to be
/// false while the algorithm was running.
class ContractViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace mdcut
