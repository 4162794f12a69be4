#include "fliess/prelie.hpp"

#include "fliess/shuffle.hpp"

namespace fliess {

TangentVector::TangentVector(Series l, Series r) : left(std::move(l)), right(std::move(r)) {
  require_same_trunc(left, right);
}

TangentVector TangentVector::zero(int trunc) {
  return TangentVector(Series::zero(trunc), Series::zero(trunc));
}

Series bullet_word(const Word& xi, const TangentVector& v) {
  const int n = v.trunc();
  // Peel letters from the back, carrying the current suffix and its bullet.
  Series suffix_bullet = Series::zero(n);
  Word suffix;
  for (int i = xi.length() - 1; i >= 0; --i) {
    if (xi.at(i) == Letter::X0) {
      suffix_bullet = prepend(Letter::X0, suffix_bullet);
    } else {
      Series suffix_series = Series::monomial(suffix, Rational(1), n);
      suffix_bullet = prepend(Letter::X1, shuffle(v.left, suffix_series) + suffix_bullet) +
                      prepend(Letter::X0, shuffle(v.right, suffix_series));
    }
    suffix = suffix.prepended(xi.at(i));
  }
  return suffix_bullet;
}

Series bullet_series(const Series& c, const TangentVector& v) {
  require_same_trunc(c, v.left);
  Series out(c.trunc());
  for (const auto& [w, q] : c.terms()) out += q * bullet_word(w, v);
  return out;
}

TangentVector bullet(const TangentVector& u, const TangentVector& v) {
  require_same_trunc(u.left, v.left);
  return TangentVector(shuffle(v.left, u.left) + bullet_series(u.left, v),
                       shuffle(v.right, u.left) + bullet_series(u.right, v));
}

TangentVector lie_bracket(const TangentVector& v1, const TangentVector& v2) {
  require_same_trunc(v1.left, v2.left);
  TangentVector a = bullet(v2, v1);
  TangentVector b = bullet(v1, v2);
  return TangentVector(a.left - b.left, a.right - b.right);
}

bool prelie_check(const TangentVector& v1, const TangentVector& v2, const TangentVector& v3) {
  require_same_trunc(v1.left, v2.left);
  require_same_trunc(v1.left, v3.left);
  auto associator = [](const TangentVector& x, const TangentVector& y, const TangentVector& z) {
    TangentVector xy_z = bullet(bullet(x, y), z);
    TangentVector x_yz = bullet(x, bullet(y, z));
    return TangentVector(xy_z.left - x_yz.left, xy_z.right - x_yz.right);
  };
  return associator(v1, v2, v3) == associator(v1, v3, v2);
}

}  // namespace fliess
