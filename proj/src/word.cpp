#include "edalg/word.hpp"

#include <stdexcept>

namespace edalg {

char to_char(Letter l) { return "abc"[static_cast<int>(l)]; }

Letter letter_from_char(char ch) {
  switch (ch) {
    case 'a': return Letter::a;
    case 'b': return Letter::b;
    case 'c': return Letter::c;
    default: throw std::invalid_argument(std::string("not a letter: '") + ch + "'");
  }
}

std::string Alphabet::to_string() const {
  std::string s = "{";
  for (Letter l : {Letter::a, Letter::b, Letter::c}) {
    if (!contains(l)) continue;
    if (s.size() > 1) s += ',';
    s += to_char(l);
  }
  return s + "}";
}

Word Word::parse(std::string_view text) {
  if (text.size() > kMaxLength)
    throw std::length_error("word longer than " + std::to_string(kMaxLength) + " letters");
  std::uint64_t letters = 0;
  for (char ch : text) letters = (letters << 2) | static_cast<std::uint64_t>(letter_from_char(ch));
  return Word((static_cast<std::uint64_t>(text.size()) << kLengthShift) | letters, 0);
}

Word Word::power(Letter l, std::size_t n) {
  if (n > kMaxLength) throw std::length_error("word longer than " + std::to_string(kMaxLength) + " letters");
  std::uint64_t letters = 0;
  for (std::size_t i = 0; i < n; ++i) letters = (letters << 2) | static_cast<std::uint64_t>(l);
  return Word((static_cast<std::uint64_t>(n) << kLengthShift) | letters, 0);
}

Word Word::sub(std::size_t pos, std::size_t len) const {
  const std::size_t n = size();
  if (pos > n || len > n - pos) throw std::out_of_range("Word::sub");
  if (len == 0) return Word();
  std::uint64_t bits = letters() >> (2 * (n - pos - len));
  if (len < 32) bits &= (std::uint64_t{1} << (2 * len)) - 1;
  return Word((static_cast<std::uint64_t>(len) << kLengthShift) | bits, 0);
}

std::size_t Word::count(Letter l) const {
  // Each letter occupies two bits: a=00, b=01, c=10.
  const std::uint64_t lo_mask = 0x5555555555555555ULL & kLetterMask;
  const std::uint64_t bits = letters();
  const std::uint64_t lo = bits & lo_mask;
  const std::uint64_t hi = (bits >> 1) & lo_mask;
  switch (l) {
    case Letter::b: return static_cast<std::size_t>(__builtin_popcountll(lo));
    case Letter::c: return static_cast<std::size_t>(__builtin_popcountll(hi));
    case Letter::a: return size() - static_cast<std::size_t>(__builtin_popcountll(lo | hi));
  }
  return 0;
}

Alphabet Word::alphabet() const {
  Alphabet out;
  for (Letter l : {Letter::a, Letter::b, Letter::c})
    if (count(l) > 0) out = out.with(l);
  return out;
}

std::string Word::to_string() const {
  std::string s;
  s.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) s += to_char((*this)[i]);
  return s;
}

Word operator+(Word u, Word v) {
  const std::size_t n = u.size() + v.size();
  if (n > Word::kMaxLength)
    throw std::length_error("word longer than " + std::to_string(Word::kMaxLength) + " letters");
  const std::uint64_t bits = (u.letters() << (2 * v.size())) | v.letters();
  return Word((static_cast<std::uint64_t>(n) << Word::kLengthShift) | bits, 0);
}

}  // namespace edalg
