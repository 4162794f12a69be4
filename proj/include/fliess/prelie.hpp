#pragma once

#include "fliess/series.hpp"

namespace fliess {

// Tangent vector v_δ = δ·v_L + v_R at the group identity (no properness
// constraint on either component).
struct TangentVector {
  Series left;
  Series right;

  TangentVector(Series l, Series r);
  static TangentVector zero(int trunc);
  int trunc() const { return left.trunc(); }

  friend bool operator==(const TangentVector&, const TangentVector&) = default;
};

// The word recursion: ∅•v = 0, (x0 ξ)•v = x0(ξ•v),
// (x1 ξ)•v = x1(v_L ⧢ ξ + ξ•v) + x0(v_R ⧢ ξ).
Series bullet_word(const Word& xi, const TangentVector& v);
Series bullet_series(const Series& c, const TangentVector& v);  // linear extension

// Right pre-Lie product on tangent vectors; the δ-word rule
// (δξ)•v = δ(v_L ⧢ ξ + ξ•v) + v_R ⧢ ξ handles the u_L component.
TangentVector bullet(const TangentVector& u, const TangentVector& v);

// [v1, v2] = v2 • v1 − v1 • v2.
TangentVector lie_bracket(const TangentVector& v1, const TangentVector& v2);

// (v1•v2)•v3 − v1•(v2•v3) == (v1•v3)•v2 − v1•(v3•v2) up to truncation.
bool prelie_check(const TangentVector& v1, const TangentVector& v2, const TangentVector& v3);

}  // namespace fliess
