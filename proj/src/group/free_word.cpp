#include "rtorsion/group/free_word.hpp"

#include "rtorsion/errors.hpp"

namespace rtorsion::group {

FreeWord::FreeWord(std::span<const Letter> letters) {
  letters_.reserve(letters.size());
  for (const Letter& l : letters) push(l);
}

void FreeWord::push(Letter l) {
  if (l.exponent != 1 && l.exponent != -1) throw InputError("letter exponent must be +1 or -1");
  if (!letters_.empty() && letters_.back() == l.inverse())
    letters_.pop_back();
  else
    letters_.push_back(l);
}

FreeWord FreeWord::generator(std::uint32_t g, int exponent) {
  FreeWord w;
  w.push({g, exponent});
  return w;
}

FreeWord FreeWord::inverse() const {
  FreeWord w;
  w.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) w.letters_.push_back(it->inverse());
  return w;
}

FreeWord FreeWord::prefix(std::size_t n) const {
  FreeWord w;
  w.letters_.assign(letters_.begin(), letters_.begin() + static_cast<long>(std::min(n, letters_.size())));
  return w;
}

FreeWord FreeWord::rotated(std::size_t n) const {
  if (letters_.empty()) return *this;
  n %= letters_.size();
  std::vector<Letter> raw(letters_.begin() + static_cast<long>(n), letters_.end());
  raw.insert(raw.end(), letters_.begin(), letters_.begin() + static_cast<long>(n));
  return FreeWord(raw);
}

long FreeWord::exponent_sum(std::uint32_t g) const {
  long s = 0;
  for (const Letter& l : letters_)
    if (l.generator == g) s += l.exponent;
  return s;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  FreeWord w = a;
  w.letters_.reserve(a.size() + b.size());
  for (const Letter& l : b.letters_) w.push(l);
  return w;
}

FreeWord word_reduce(std::span<const Letter> letters) { return FreeWord(letters); }

}  // namespace rtorsion::group
