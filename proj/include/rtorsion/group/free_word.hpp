#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace rtorsion::group {

/// One letter x_g^{±1} of a free-group word.
struct Letter {
  std::uint32_t generator = 0;
  int exponent = 1;  // +1 or -1

  Letter inverse() const { return {generator, -exponent}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// Freely reduced word in a free group. The empty word is the identity.
class FreeWord {
 public:
  FreeWord() = default;
  /// Reduces the raw letter sequence. Exponents other than ±1 are rejected.
  explicit FreeWord(std::span<const Letter> letters);

  static FreeWord generator(std::uint32_t g, int exponent = 1);

  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  FreeWord inverse() const;
  FreeWord prefix(std::size_t n) const;
  /// Cyclic rotation moving the first `n` letters to the end, then reduced.
  FreeWord rotated(std::size_t n) const;

  /// Sum of exponents of letters of generator g.
  long exponent_sum(std::uint32_t g) const;

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  FreeWord& operator*=(const FreeWord& b) { return *this = *this * b; }

  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;
  friend bool operator==(const FreeWord&, const FreeWord&) = default;

 private:
  void push(Letter l);
  std::vector<Letter> letters_;
};

/// Free reduction of a raw letter sequence.
FreeWord word_reduce(std::span<const Letter> letters);

}  // namespace rtorsion::group
