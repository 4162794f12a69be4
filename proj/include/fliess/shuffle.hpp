#pragma once

#include <cstdint>
#include <map>
#include <utility>

#include "fliess/series.hpp"

namespace fliess {

// Commutative shuffle product, bilinear over the word recursion
// (x_i η) ⧢ (x_j ξ) = x_i(η ⧢ x_j ξ) + x_j(x_i η ⧢ ξ); output words beyond the
// shared truncation degree are discarded.
Series shuffle(const Series& p, const Series& q);
Series shuffle(const Series& p, const Word& w);

// p^{⧢k}, k ≥ 0 (k = 0 gives the unit series).
Series shuffle_power(const Series& p, int k);

// Inverse in the shuffle group of non-proper series:
// (c,∅)^{-1} Σ_{k≤N} (1 − c/(c,∅))^{⧢k}; satisfies c ⧢ result = 1 up to N.
// Proper input (zero constant term) is a precondition error.
Series shuffle_inverse(const Series& c);

// Integer combination of word pairs; the unshuffle coproduct lands here.
class WordTensorSum {
public:
  using TermMap = std::map<std::pair<Word, Word>, std::int64_t>;

  WordTensorSum() = default;
  void add(const Word& l, const Word& r, std::int64_t mult);
  const TermMap& terms() const& { return terms_; }
  TermMap terms() && { return std::move(terms_); }
  std::int64_t multiplicity(const Word& l, const Word& r) const;

  friend bool operator==(const WordTensorSum&, const WordTensorSum&) = default;

private:
  TermMap terms_;
};

// Dual of the shuffle product on the word basis: the multiplicity of (ξ, ν)
// equals the coefficient of w in ξ ⧢ ν.
WordTensorSum unshuffle(const Word& w);

}  // namespace fliess
