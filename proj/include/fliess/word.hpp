#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

namespace fliess {

enum class Letter : unsigned { X0 = 0, X1 = 1 };

// A word over the two-letter alphabet {x0, x1}, bit-packed: bit i holds letter
// i counted from the front (0 = x0, 1 = x1). operator<=> is the canonical
// length-lexicographic order with x0 < x1, so ordered containers keyed by Word
// iterate in canonical order.
class Word {
public:
  static constexpr int max_length = 62;

  constexpr Word() = default;
  Word(std::initializer_list<Letter> letters);

  static Word single(Letter l);
  static Word power(Letter l, int k);  // l repeated k times

  int length() const { return static_cast<int>(len_); }
  bool empty() const { return len_ == 0; }
  Letter at(int i) const { return static_cast<Letter>((bits_ >> i) & 1u); }
  Letter front() const { return at(0); }
  int count(Letter l) const;
  int leading(Letter l) const;  // number of leading copies of l

  Word prepended(Letter l) const;
  Word appended(Letter l) const;
  Word tail() const;                 // drop the front letter
  Word dropped_front(int k) const;   // drop k front letters
  Word concat(const Word& rhs) const;

  friend bool operator==(const Word&, const Word&) = default;
  std::strong_ordering operator<=>(const Word& o) const;

  std::string str() const;              // "e" for the empty word, else e.g. "x0x1x1"
  static Word parse(std::string_view);  // inverse of str()

private:
  std::uint64_t bits_ = 0;
  std::uint32_t len_ = 0;
};

}  // namespace fliess
