#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fliess/prelie.hpp"
#include "fliess/shuffle.hpp"
#include "fliess/text_io.hpp"
#include "test_util.hpp"

using namespace fliess;
using fliess::testing::Rng;

namespace {

const int N = 4;

Series s(const char* text, int trunc = N) { return parse_series(text, trunc); }

// δ·l + r
TangentVector tv(const char* l, const char* r, int trunc = N) {
  return TangentVector(s(l, trunc), s(r, trunc));
}

TangentVector add(const TangentVector& x, const TangentVector& y) {
  return TangentVector(x.left + y.left, x.right + y.right);
}

}  // namespace

TEST_CASE("bullet word base cases") {
  TangentVector v = tv("1 + x0", "x1");
  CHECK(bullet_word(Word{}, v).is_zero());
  // x1 • v = x1·v_L + x0·v_R.
  CHECK(bullet_word(Word{Letter::X1}, v) == s("x1 + x1x0 + x0x1"));
  // x1 • δx0 = x1x0.
  CHECK(bullet_word(Word{Letter::X1}, tv("x0", "0")) == s("x1x0"));
  // The x0 rule only prepends.
  CHECK(bullet_word(Word::parse("x0x1"), tv("x0", "0")) == s("x0x1x0"));
}

TEST_CASE("bullet on tangent vectors reproduces the worked values") {
  CHECK(bullet(tv("x1", "0"), tv("0", "x1")) == tv("x0x1", "2*x1x1"));
  CHECK(bullet(tv("x1", "0"), tv("x0", "0")) == tv("2*x1x0 + x0x1", "0"));
  CHECK(bullet(tv("x0", "0"), tv("0", "x1")) == tv("0", "x0x1 + x1x0"));
  CHECK(bullet(tv("0", "x1"), tv("x0", "0")) == tv("0", "x1x0"));
}

TEST_CASE("lie bracket is antisymmetric and matches hand expansion") {
  Rng rng(51);
  for (int i = 0; i < 30; ++i) {
    TangentVector v1 = fliess::testing::random_tangent(rng, N);
    TangentVector v2 = fliess::testing::random_tangent(rng, N);
    CHECK(lie_bracket(v1, v1) == TangentVector::zero(N));
    TangentVector lhs = lie_bracket(v1, v2);
    TangentVector rhs = lie_bracket(v2, v1);
    CHECK(lhs == TangentVector(-rhs.left, -rhs.right));
  }
  // [δx1, x1] = x1•δx1 − δx1•x1 = (0, x1x1) − (x0x1, 2x1x1).
  CHECK(lie_bracket(tv("x1", "0"), tv("0", "x1")) == tv("-x0x1", "-x1x1"));
}

TEST_CASE("pre-Lie identity on the worked triple") {
  TangentVector v1 = tv("x1", "0");
  TangentVector v2 = tv("0", "x1");
  TangentVector v3 = tv("x0", "0");

  auto assoc = [](const TangentVector& x, const TangentVector& y, const TangentVector& z) {
    TangentVector a = bullet(bullet(x, y), z);
    TangentVector b = bullet(x, bullet(y, z));
    return TangentVector(a.left - b.left, a.right - b.right);
  };
  TangentVector expected = tv("2*x0x0x1 + x0x1x0", "2*x1x1x0 + x1x0x1");
  CHECK(assoc(v1, v2, v3) == expected);
  CHECK(assoc(v1, v3, v2) == expected);
  CHECK(prelie_check(v1, v2, v3));
}

TEST_CASE("pre-Lie identity holds on random triples") {
  Rng rng(52);
  for (int i = 0; i < 60; ++i) {
    TangentVector v1 = fliess::testing::random_tangent(rng, 5);
    TangentVector v2 = fliess::testing::random_tangent(rng, 5);
    TangentVector v3 = fliess::testing::random_tangent(rng, 5);
    CHECK(prelie_check(v1, v2, v3));
    CHECK(prelie_check(v1, v2, v2));  // symmetric slots are trivially equal
  }
}

TEST_CASE("bullet distributes over the shuffle product") {
  Rng rng(53);
  for (int i = 0; i < 80; ++i) {
    Word eta = fliess::testing::random_word(rng, 3);
    Word xi = fliess::testing::random_word(rng, 5 - eta.length());
    TangentVector v = fliess::testing::random_tangent(rng, 5);
    Series eta_s = Series::monomial(eta, Rational(1), 5);
    Series xi_s = Series::monomial(xi, Rational(1), 5);
    CHECK(bullet_series(shuffle(eta_s, xi_s), v) ==
          shuffle(bullet_word(eta, v), xi_s) + shuffle(eta_s, bullet_word(xi, v)));
  }
}

TEST_CASE("jacobi identity for the induced bracket") {
  Rng rng(54);
  for (int i = 0; i < 40; ++i) {
    TangentVector a = fliess::testing::random_tangent(rng, N);
    TangentVector b = fliess::testing::random_tangent(rng, N);
    TangentVector c = fliess::testing::random_tangent(rng, N);
    TangentVector sum = add(add(lie_bracket(lie_bracket(a, b), c),
                                lie_bracket(lie_bracket(b, c), a)),
                            lie_bracket(lie_bracket(c, a), b));
    CHECK(sum == TangentVector::zero(N));
  }
}

TEST_CASE("vanishing left components reduce to the output-feedback product") {
  Rng rng(55);
  for (int i = 0; i < 30; ++i) {
    TangentVector u(Series::zero(N), fliess::testing::random_series(rng, N, 3));
    TangentVector v(Series::zero(N), fliess::testing::random_series(rng, N, 3));
    TangentVector uv = bullet(u, v);
    CHECK(uv.left.is_zero());
    CHECK(uv.right == bullet_series(u.right, v));
  }
}

TEST_CASE("bullet word needs inputs only below the truncation degree") {
  Rng rng(56);
  for (int i = 0; i < 30; ++i) {
    TangentVector v = fliess::testing::random_tangent(rng, 5);
    TangentVector bumped(v.left + Series::monomial(Word::parse("x0x0x1x0x1"), Rational(7), 5),
                         v.right + Series::monomial(Word::parse("x1x1x0x1x1"), Rational(5), 5));
    Word xi = fliess::testing::random_word(rng, 5, 1);
    CHECK(bullet_word(xi, v) == bullet_word(xi, bumped));
    // And the output is exact against a wider recomputation.
    TangentVector wide(v.left.truncated(7), v.right.truncated(7));
    CHECK(bullet_word(xi, wide).truncated(5) == bullet_word(xi, v));
  }
}
