#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace recipair {

/// A permutation of {0..n-1} stored as its image array.
class Permutation {
 public:
  Permutation() = default;  // degree 0
  /// images[i] is the image of point i; must be a bijection.
  explicit Permutation(std::vector<std::uint8_t> images);

  static Permutation identity(std::size_t degree);
  /// Builds from 0-indexed cycles; points not mentioned are fixed.
  static Permutation from_cycles(
      std::size_t degree, const std::vector<std::vector<std::uint8_t>>& cycles);

  std::size_t degree() const { return images_.size(); }
  std::uint8_t apply(std::uint8_t point) const { return images_[point]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Function composition: (a * b) maps x to a(b(x)).
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  /// Lexicographic order on image arrays (shorter degree first).
  auto operator<=>(const Permutation&) const = default;

  /// Orbits of the generated cyclic group, fixed points included. Each orbit
  /// is listed starting at its minimum point; orbits are ordered by minimum.
  std::vector<std::vector<std::uint8_t>> cycles() const;
  std::size_t cycle_count() const;
  bool is_even() const;
  std::vector<std::uint8_t> moved_points() const;

 private:
  std::vector<std::uint8_t> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept;
};

/// Disjoint-cycle text form with 1-indexed points; the identity is "()".
std::string to_cycle_string(const Permutation& p);

/// Parses the form produced by to_cycle_string. Whitespace is ignored; points
/// must lie in 1..degree and appear at most once.
Permutation permutation_from_cycle_string(std::size_t degree,
                                          const std::string& text);

}  // namespace recipair
