#pragma once

#include "fliess/series.hpp"
#include "fliess/shuffle.hpp"

namespace fliess {

// Group element c_δ = (c_L, c_R), the generating pair of the affine operator
// u ↦ u·F_{c_L}[u] + F_{c_R}[u]. Group membership requires a non-proper left
// component; the Hopf layer additionally requires (c_L, ∅) = 1.
struct SeriesPair {
  Series left;
  Series right;

  SeriesPair(Series l, Series r);
  static SeriesPair identity(int trunc);  // (1, 0)

  int trunc() const { return left.trunc(); }
  bool in_group() const { return constant_term_left() != 0; }
  bool hopf_normalized() const { return constant_term_left() == 1; }
  const Rational& constant_term_left() const { return left.constant_term(); }

  friend bool operator==(const SeriesPair&, const SeriesPair&) = default;
};

void require_same_trunc(const Series& c, const SeriesPair& d);
void require_same_trunc(const SeriesPair& c, const SeriesPair& d);

// c ∘̃ d_δ = Σ_η (c,η) φ_d(η)(1) with φ_d(x0)(e) = x0 e and
// φ_d(x1)(e) = x1(d_L ⧢ e) + x0(d_R ⧢ e); left-linear in c, exact up to the
// shared truncation degree.
Series mixed_compose(const Series& c, const SeriesPair& d);

// The d_L = 1 special case (output feedback subgroup).
Series modified_compose(const Series& c, const Series& d);

// Cascade product F_c ∘ F_d = F_{c∘d}, realized as the d_L = 0 special case of
// the φ recursion (x1 ↦ x0(d ⧢ ·)).
Series series_compose(const Series& c, const Series& d);

// c_δ ∘ d_δ = ((c_L ∘̃ d_δ) ⧢ d_L, (c_L ∘̃ d_δ) ⧢ d_R + c_R ∘̃ d_δ).
SeriesPair group_compose(const SeriesPair& c, const SeriesPair& d);

// Two-sided group inverse via the contraction
// S_R(e) = ((c_L ∘̃ e)^{⧢-1}, -e_L ⧢ (c_R ∘̃ e)), iterated from (1,0) until the
// truncated iterate is a fixed point (at most trunc+2 iterations), then
// verified by composing on both sides.
SeriesPair group_inverse_fixed_point(const SeriesPair& c);

// Closed-loop generating series c@d = c ∘ (δ − d∘c)^{-1}.
Series feedback_product(const Series& c, const Series& d);

// Rescales to the Hopf-normalized representative (c_L/(c_L,∅), c_R); the
// caller owns the corresponding output rescaling.
SeriesPair hopf_normalized(const SeriesPair& c);

}  // namespace fliess
