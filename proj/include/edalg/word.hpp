#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace edalg {

/// Generators of the free algebras. The order a < b < c is global.
enum class Letter : std::uint8_t { a = 0, b = 1, c = 2 };

char to_char(Letter l);
Letter letter_from_char(char ch);  // throws std::invalid_argument

/// Weight of a generator: a and b have weight 1, c stands for [a,b] and has weight 2.
constexpr std::size_t letter_weight(Letter l) { return l == Letter::c ? 2 : 1; }

/// Set of letters an object lives over.
class Alphabet {
 public:
  constexpr Alphabet() = default;
  constexpr explicit Alphabet(std::uint8_t mask) : mask_(mask) {}

  static constexpr Alphabet ab() { return Alphabet(0b011); }
  static constexpr Alphabet ac() { return Alphabet(0b101); }
  static constexpr Alphabet abc() { return Alphabet(0b111); }

  constexpr bool contains(Letter l) const { return (mask_ >> static_cast<int>(l)) & 1U; }
  constexpr bool includes(Alphabet other) const { return (other.mask_ & ~mask_) == 0; }
  constexpr Alphabet with(Letter l) const {
    return Alphabet(static_cast<std::uint8_t>(mask_ | (1U << static_cast<int>(l))));
  }
  constexpr std::uint8_t mask() const { return mask_; }
  std::string to_string() const;

  friend constexpr bool operator==(Alphabet, Alphabet) = default;

 private:
  std::uint8_t mask_ = 0;
};

/// A monomial over {a,b,c}, packed into one 64-bit key.
///
/// Layout: the top 6 bits hold the length, the low 2*length bits hold the
/// letters with the first letter most significant. Comparing keys therefore
/// orders words degree-lexicographically (shorter first, then a < b < c).
class Word {
 public:
  static constexpr std::size_t kMaxLength = 29;

  constexpr Word() = default;
  explicit Word(Letter l) : key_((std::uint64_t{1} << kLengthShift) | static_cast<std::uint64_t>(l)) {}

  /// Parses a string over "abc" ("" is the empty word).
  static Word parse(std::string_view text);
  static Word from_key(std::uint64_t key) { return Word(key, 0); }
  /// a^n
  static Word power(Letter l, std::size_t n);

  std::size_t size() const { return static_cast<std::size_t>(key_ >> kLengthShift); }
  bool empty() const { return key_ == 0; }
  Letter operator[](std::size_t i) const {
    return static_cast<Letter>((key_ >> (2 * (size() - 1 - i))) & 3U);
  }
  Letter front() const { return (*this)[0]; }
  Letter back() const { return static_cast<Letter>(key_ & 3U); }

  /// Subword of `len` letters starting at `pos`.
  Word sub(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return sub(0, len); }
  Word suffix(std::size_t pos) const { return sub(pos, size() - pos); }

  std::size_t count(Letter l) const;
  /// a, b weigh 1; c weighs 2.
  std::size_t weight() const { return size() + count(Letter::c); }
  Alphabet alphabet() const;

  std::uint64_t key() const { return key_; }
  std::string to_string() const;

  friend Word operator+(Word u, Word v);
  friend constexpr auto operator<=>(Word, Word) = default;

 private:
  static constexpr int kLengthShift = 58;
  static constexpr std::uint64_t kLetterMask = (std::uint64_t{1} << kLengthShift) - 1;
  constexpr Word(std::uint64_t key, int) : key_(key) {}
  std::uint64_t letters() const { return key_ & kLetterMask; }

  std::uint64_t key_ = 0;
};

}  // namespace edalg

template <>
struct std::hash<edalg::Word> {
  std::size_t operator()(edalg::Word w) const noexcept {
    std::uint64_t x = w.key();
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdULL;
    x ^= x >> 33;
    return static_cast<std::size_t>(x);
  }
};
