#pragma once

#include <stdexcept>
#include <string>

namespace recipair {

/// A configured enumeration or closure cap would be exceeded.
class BoundExceeded : public std::runtime_error {
 public:
  explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// A group was paired with a graph it does not act on by automorphisms.
/// Signals an invalid pair, not a computation failure.
class NotAutomorphismGroup : public std::runtime_error {
 public:
  explicit NotAutomorphismGroup(const std::string& what)
      : std::runtime_error(what) {}
};

/// A wreath extension was requested with a top group containing odd
/// permutations.
class OddPermutationInH : public std::runtime_error {
 public:
  explicit OddPermutationInH(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace recipair
