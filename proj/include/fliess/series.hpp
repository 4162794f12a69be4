#pragma once

#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "fliess/rational.hpp"
#include "fliess/word.hpp"

namespace fliess {

// Order exponent of the zero series; distances compare as plain integers with
// this as +∞ (larger exponent = smaller ultrametric distance).
inline constexpr int infinite_order = std::numeric_limits<int>::max();

// Noncommutative formal power series over {x0, x1} with exact rational
// coefficients, truncated at word length trunc(). Sparse, canonically ordered,
// no stored zero coefficients. Immutable in spirit: operations return new
// values; the only mutators are the canonicalizing term setters used by
// builders.
class Series {
public:
  using TermMap = std::map<Word, Rational>;

  explicit Series(int trunc);
  static Series zero(int trunc) { return Series(trunc); }
  static Series one(int trunc);
  static Series constant(const Rational& k, int trunc);
  static Series monomial(const Word& w, const Rational& coeff, int trunc);

  int trunc() const { return trunc_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;  // support ⊆ {∅}
  // Rvalues hand the map over so that iterating f(...).terms() stays valid.
  const TermMap& terms() const& { return terms_; }
  TermMap terms() && { return std::move(terms_); }
  const Rational& coeff(const Word& w) const;  // zero when absent
  const Rational& constant_term() const { return coeff(Word{}); }

  // Adds q·w; words longer than trunc() are discarded, exact zeros cancel.
  Series& add_term(const Word& w, const Rational& q);
  // Replaces the coefficient of w; rejects words longer than trunc().
  Series& set_coeff(const Word& w, const Rational& q);

  Series truncated(int new_trunc) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Rational& k);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Rational& k, Series s) { return s *= k; }
  friend Series operator-(const Series& a);

  friend bool operator==(const Series&, const Series&) = default;

private:
  int trunc_;
  TermMap terms_;
};

// Length of the shortest supported word; infinite_order for the zero series.
int order(const Series& c);

// ord(c − d); the ultrametric distance is σ^result for any fixed 0 < σ < 1.
int distance_exponent(const Series& c, const Series& d);

Series linear_combine(const std::vector<std::pair<Rational, Series>>& terms);

// Left catenation x_i·c (resp. w·c); words overflowing the truncation drop out.
Series prepend(Letter l, const Series& c);
Series prepend(const Word& w, const Series& c);

// c = natural + forced with natural supported on {x0^k}.
struct NaturalForced {
  Series natural;
  Series forced;
};
NaturalForced natural_forced_split(const Series& c);

void require_same_trunc(const Series& a, const Series& b);

}  // namespace fliess
