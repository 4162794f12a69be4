#pragma once

#include <optional>

#include "fliess/feedback.hpp"

namespace fliess {

enum class RelDegDiagnostic {
  Defined,
  MissingLinearWord,  // largest r exists but x0^{r-1}x1 ∉ supp(c)
  ZeroForcedPart,     // c_F = 0 within the truncation: every r would qualify
};

struct RelativeDegreeResult {
  std::optional<int> r;
  RelDegDiagnostic diagnostic = RelDegDiagnostic::Defined;
};

// Largest r ≥ 1 with supp(c_F) ⊆ x0^{r-1}X*, accepted only when the linear
// word x0^{r-1}x1 is supported. Computed on the truncated series, so the
// answer is the relative degree of the truncation (always r ≤ trunc when
// defined).
RelativeDegreeResult relative_degree(const Series& c);

// c = natural + K·x0^{r-1}x1 + x0^{r-1}·e with K ≠ 0, e proper, x1 ∉ supp(e).
struct RelDegreeDecomposition {
  int r;
  Rational K;
  Series natural;
  Series e;
};

RelDegreeDecomposition decompose(const Series& c);

// natural + x0^{r-1}x1: the orbit representative of c under the group action.
Series normal_form(const RelDegreeDecomposition& d);

// Reassembles natural + K·x0^{r-1}x1 + x0^{r-1}·e.
Series reassemble(const RelDegreeDecomposition& d, int trunc);

// Splits e = x0·e0 + x1·e1 and returns e_δ = (K + e1, e0), which satisfies
// normal_form ∘̃ e_δ = c and hence c ∘̃ e_δ^{-1} = normal_form exactly up to
// the truncation degree.
SeriesPair linearizing_element(const Series& c);

// True iff c ∘̃ e^{-1} equals c's own normal form c_N + x0^{r-1}x1; false when
// c has no defined relative degree.
bool orbit_check(const Series& c, const SeriesPair& e);

}  // namespace fliess
