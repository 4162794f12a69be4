#include "fliess/shuffle.hpp"

#include <vector>

#include "fliess/errors.hpp"

namespace fliess {

namespace {

using WordCounts = std::map<Word, std::int64_t>;

// All interleavings of a and b with multiplicities, by suffix DP:
// dp[i][j] interleaves a.dropped_front(i) with b.dropped_front(j).
WordCounts shuffle_words_uncached(const Word& a, const Word& b) {
  const int m = a.length(), n = b.length();
  std::vector<std::vector<WordCounts>> dp(m + 1, std::vector<WordCounts>(n + 1));
  dp[m][n][Word{}] = 1;
  for (int i = m; i >= 0; --i) {
    for (int j = n; j >= 0; --j) {
      if (i == m && j == n) continue;
      WordCounts& cell = dp[i][j];
      if (i < m)
        for (const auto& [w, k] : dp[i + 1][j]) cell[w.prepended(a.at(i))] += k;
      if (j < n)
        for (const auto& [w, k] : dp[i][j + 1]) cell[w.prepended(b.at(j))] += k;
    }
  }
  return dp[0][0];
}

// Word-pair shuffles recur constantly inside the composition products; cache
// them per thread (shuffle is commutative, so the key is the sorted pair).
const WordCounts& shuffle_words(const Word& a, const Word& b) {
  thread_local std::map<std::pair<Word, Word>, WordCounts> cache;
  std::pair<Word, Word> key = a <= b ? std::pair{a, b} : std::pair{b, a};
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, shuffle_words_uncached(key.first, key.second)).first;
  return it->second;
}

}  // namespace

Series shuffle(const Series& p, const Series& q) {
  require_same_trunc(p, q);
  Series out(p.trunc());
  for (const auto& [a, ca] : p.terms()) {
    for (const auto& [b, cb] : q.terms()) {
      if (a.length() + b.length() > p.trunc()) continue;
      Rational c = ca * cb;
      for (const auto& [w, k] : shuffle_words(a, b)) out.add_term(w, c * k);
    }
  }
  return out;
}

Series shuffle(const Series& p, const Word& w) {
  return shuffle(p, Series::monomial(w, Rational(1), p.trunc()));
}

Series shuffle_power(const Series& p, int k) {
  Series out = Series::one(p.trunc());
  for (int i = 0; i < k; ++i) out = shuffle(out, p);
  return out;
}

Series shuffle_inverse(const Series& c) {
  const Rational& c0 = c.constant_term();
  if (c0 == 0) throw_precondition("proper series has no shuffle inverse");
  // c' = 1 - c/(c,∅) is proper, so powers beyond the truncation vanish.
  Series cprime = Series::one(c.trunc()) - Rational(1) / c0 * c;
  Series star = Series::one(c.trunc());
  Series power = Series::one(c.trunc());
  for (int k = 1; k <= c.trunc(); ++k) {
    power = shuffle(power, cprime);
    if (power.is_zero()) break;
    star += power;
  }
  return Rational(1) / c0 * star;
}

void WordTensorSum::add(const Word& l, const Word& r, std::int64_t mult) {
  if (mult == 0) return;
  auto key = std::pair{l, r};
  auto [it, inserted] = terms_.emplace(key, mult);
  if (!inserted) {
    it->second += mult;
    if (it->second == 0) terms_.erase(it);
  }
}

std::int64_t WordTensorSum::multiplicity(const Word& l, const Word& r) const {
  auto it = terms_.find({l, r});
  return it == terms_.end() ? 0 : it->second;
}

WordTensorSum unshuffle(const Word& w) {
  // sh*(x_i η) = (x_i ⊗ 1 + 1 ⊗ x_i) sh*(η): peel letters from the back so
  // each step prepends the current letter to one leg.
  WordTensorSum sum;
  sum.add(Word{}, Word{}, 1);
  for (int i = w.length() - 1; i >= 0; --i) {
    WordTensorSum next;
    for (const auto& [pair, m] : sum.terms()) {
      next.add(pair.first.prepended(w.at(i)), pair.second, m);
      next.add(pair.first, pair.second.prepended(w.at(i)), m);
    }
    sum = std::move(next);
  }
  return sum;
}

}  // namespace fliess
