#include "recipair/perm.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace recipair {

namespace {

constexpr std::size_t kMaxDegree = 255;  // points are stored as uint8_t

}  // namespace

Permutation::Permutation(std::vector<std::uint8_t> images)
    : images_(std::move(images)) {
  if (images_.size() > kMaxDegree)
    throw std::invalid_argument("permutation degree exceeds 255");
  std::vector<bool> seen(images_.size(), false);
  for (std::uint8_t img : images_) {
    if (img >= images_.size() || seen[img])
      throw std::invalid_argument("image array is not a bijection");
    seen[img] = true;
  }
}

Permutation Permutation::identity(std::size_t degree) {
  if (degree > kMaxDegree)
    throw std::invalid_argument("permutation degree exceeds 255");
  std::vector<std::uint8_t> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(
    std::size_t degree, const std::vector<std::vector<std::uint8_t>>& cycles) {
  Permutation p = identity(degree);
  std::vector<bool> used(degree, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      std::uint8_t from = cycle[i];
      std::uint8_t to = cycle[(i + 1) % cycle.size()];
      if (from >= degree)
        throw std::invalid_argument("cycle point out of range");
      if (used[from]) throw std::invalid_argument("point repeated in cycles");
      used[from] = true;
      p.images_[from] = to;
    }
  }
  return Permutation(std::move(p.images_));  // revalidates
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<std::uint8_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv[images_[i]] = static_cast<std::uint8_t>(i);
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("composing permutations of unequal degree");
  std::vector<std::uint8_t> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = a.images_[b.images_[i]];
  return Permutation(std::move(out));
}

std::vector<std::vector<std::uint8_t>> Permutation::cycles() const {
  std::vector<std::vector<std::uint8_t>> result;
  std::vector<bool> visited(images_.size(), false);
  // Scanning points in ascending order makes every orbit start at its
  // minimum and orders orbits by minimum.
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (visited[start]) continue;
    std::vector<std::uint8_t> orbit;
    std::uint8_t p = static_cast<std::uint8_t>(start);
    do {
      visited[p] = true;
      orbit.push_back(p);
      p = images_[p];
    } while (p != start);
    result.push_back(std::move(orbit));
  }
  return result;
}

std::size_t Permutation::cycle_count() const {
  std::size_t count = 0;
  std::vector<bool> visited(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (visited[start]) continue;
    ++count;
    std::uint8_t p = static_cast<std::uint8_t>(start);
    do {
      visited[p] = true;
      p = images_[p];
    } while (p != start);
  }
  return count;
}

bool Permutation::is_even() const {
  return (degree() - cycle_count()) % 2 == 0;
}

std::vector<std::uint8_t> Permutation::moved_points() const {
  std::vector<std::uint8_t> moved;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) moved.push_back(static_cast<std::uint8_t>(i));
  return moved;
}

std::size_t PermutationHash::operator()(const Permutation& p) const noexcept {
  // FNV-1a over the image bytes.
  std::size_t h = 1469598103934665603ull;
  for (std::uint8_t b : p.images()) {
    h ^= b;
    h *= 1099511628211ull;
  }
  return h;
}

std::string to_cycle_string(const Permutation& p) {
  std::ostringstream out;
  bool any = false;
  for (const auto& orbit : p.cycles()) {
    if (orbit.size() < 2) continue;
    any = true;
    out << '(';
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      if (i) out << ',';
      out << static_cast<int>(orbit[i]) + 1;
    }
    out << ')';
  }
  return any ? out.str() : "()";
}

Permutation permutation_from_cycle_string(std::size_t degree,
                                          const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty permutation text");
  std::vector<std::vector<std::uint8_t>> cycles;
  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != '(')
      throw std::invalid_argument("expected '(' in permutation text");
    std::size_t close = s.find(')', pos);
    if (close == std::string::npos)
      throw std::invalid_argument("unbalanced '(' in permutation text");
    std::string body = s.substr(pos + 1, close - pos - 1);
    pos = close + 1;
    if (body.empty()) continue;  // "()" denotes the identity
    std::vector<std::uint8_t> cycle;
    std::istringstream in(body);
    std::string item;
    while (std::getline(in, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed point in permutation text");
      unsigned long value = std::stoul(item);
      if (value < 1 || value > degree)
        throw std::invalid_argument("point out of range in permutation text");
      cycle.push_back(static_cast<std::uint8_t>(value - 1));
    }
    if (!body.empty() && body.back() == ',')
      throw std::invalid_argument("trailing comma in permutation text");
    cycles.push_back(std::move(cycle));
  }
  return Permutation::from_cycles(degree, cycles);
}

}  // namespace recipair
