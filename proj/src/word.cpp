#include "fliess/word.hpp"

#include <bit>
#include <cassert>

#include "fliess/errors.hpp"

namespace fliess {

Word::Word(std::initializer_list<Letter> letters) {
  for (Letter l : letters) *this = appended(l);
}

Word Word::single(Letter l) { return Word{}.appended(l); }

Word Word::power(Letter l, int k) {
  Word w;
  for (int i = 0; i < k; ++i) w = w.appended(l);
  return w;
}

int Word::count(Letter l) const {
  int ones = std::popcount(bits_);
  return l == Letter::X1 ? ones : length() - ones;
}

int Word::leading(Letter l) const {
  std::uint64_t probe = l == Letter::X0 ? bits_ : ~bits_;
  int run = probe == 0 ? 64 : std::countr_zero(probe);
  return run < length() ? run : length();
}

Word Word::prepended(Letter l) const {
  assert(length() < max_length);
  Word w;
  w.bits_ = (bits_ << 1) | static_cast<std::uint64_t>(l);
  w.len_ = len_ + 1;
  return w;
}

Word Word::appended(Letter l) const {
  assert(length() < max_length);
  Word w;
  w.bits_ = bits_ | (static_cast<std::uint64_t>(l) << len_);
  w.len_ = len_ + 1;
  return w;
}

Word Word::tail() const {
  assert(!empty());
  return dropped_front(1);
}

Word Word::dropped_front(int k) const {
  assert(k <= length());
  Word w;
  w.bits_ = bits_ >> k;
  w.len_ = len_ - static_cast<std::uint32_t>(k);
  return w;
}

Word Word::concat(const Word& rhs) const {
  assert(length() + rhs.length() <= max_length);
  Word w;
  w.bits_ = bits_ | (rhs.bits_ << len_);
  w.len_ = len_ + rhs.len_;
  return w;
}

std::strong_ordering Word::operator<=>(const Word& o) const {
  if (len_ != o.len_) return len_ <=> o.len_;
  std::uint64_t diff = bits_ ^ o.bits_;
  if (diff == 0) return std::strong_ordering::equal;
  // The lowest differing bit is the first differing letter; x0 < x1.
  int pos = std::countr_zero(diff);
  return ((bits_ >> pos) & 1u) <=> ((o.bits_ >> pos) & 1u);
}

std::string Word::str() const {
  if (empty()) return "e";
  std::string out;
  out.reserve(static_cast<std::size_t>(length()) * 2);
  for (int i = 0; i < length(); ++i) out += at(i) == Letter::X0 ? "x0" : "x1";
  return out;
}

Word Word::parse(std::string_view text) {
  if (text == "e") return Word{};
  Word w;
  for (std::size_t i = 0; i < text.size(); i += 2) {
    if (i + 1 >= text.size() || text[i] != 'x' || (text[i + 1] != '0' && text[i + 1] != '1'))
      throw_parse("invalid word '" + std::string(text) + "'");
    if (w.length() >= max_length) throw_parse("word too long: '" + std::string(text) + "'");
    w = w.appended(text[i + 1] == '0' ? Letter::X0 : Letter::X1);
  }
  return w;
}

}  // namespace fliess
