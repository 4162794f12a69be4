#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <tuple>

#include "fliess/errors.hpp"
#include "fliess/hopf.hpp"
#include "fliess/text_io.hpp"
#include "test_util.hpp"

using namespace fliess;
using fliess::testing::Rng;

namespace {

CoordinateMap coord(const char* text) { return parse_coordinate(text); }

std::vector<CoordinateMap> generators_up_to_length(int max_len) {
  std::vector<CoordinateMap> out;
  for (int len = 0; len <= max_len; ++len)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      Word w;
      for (int i = 0; i < len; ++i)
        w = w.appended(((bits >> i) & 1u) != 0 ? Letter::X1 : Letter::X0);
      if (len > 0) out.push_back({CoordKind::B, w});  // b_∅ is the unit
      out.push_back({CoordKind::A, w});
    }
  return out;
}

Rational eps(const HopfMonomial& m) { return Rational(m.is_unit() ? 1 : 0); }

// Independent antipode oracle: the right form S a = −a − Σ a′₍₁₎ S(a′₍₂₎),
// memoized locally, never calling the left-form production recursion.
HopfElement right_antipode(const CoordinateMap& h);

HopfElement right_antipode(const HopfMonomial& m) {
  HopfElement out = HopfElement::unit();
  for (const auto& [g, exp] : m.factors())
    for (int i = 0; i < exp; ++i) out = out * right_antipode(g);
  return out;
}

HopfElement right_antipode(const CoordinateMap& h) {
  static std::map<CoordinateMap, HopfElement> memo;
  if (h.is_unit()) return HopfElement::unit();
  if (auto it = memo.find(h); it != memo.end()) return it->second;
  HopfElement s = -HopfElement::generator(h);
  for (const auto& [lr, q] : reduced_coproduct(h).terms()) {
    HopfElement right = right_antipode(lr.second);  // strictly lower degree
    for (const auto& [m, p] : right.terms()) s.add_term(lr.first.times(m), -q * p);
  }
  return memo.emplace(h, std::move(s)).first->second;
}

using Tensor3 = std::map<std::tuple<HopfMonomial, HopfMonomial, HopfMonomial>, Rational>;

void add3(Tensor3& t, const HopfMonomial& a, const HopfMonomial& b, const HopfMonomial& c,
          const Rational& q) {
  if (q == 0) return;
  auto [it, inserted] = t.emplace(std::tuple{a, b, c}, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) t.erase(it);
  }
}

}  // namespace

TEST_CASE("coordinate map degrees and the unit identification") {
  CHECK(coord("b:x1").degree() == 1);
  CHECK(coord("b:x0").degree() == 2);
  CHECK(coord("a:e").degree() == 1);
  CHECK(coord("a:x0x0").degree() == 5);
  CHECK(coord("b:e").is_unit());
  CHECK(HopfMonomial::generator(coord("b:e")).is_unit());
  CHECK(antipode(coord("b:e")) == HopfElement::unit());
}

TEST_CASE("shuffle coproduct lifts the unshuffle") {
  CHECK(shuffle_coproduct(coord("b:e"), CoordKind::B) == parse_tensor("1 (x) 1"));
  CHECK(shuffle_coproduct(coord("b:e"), CoordKind::A) == parse_tensor("1 (x) a[e]"));
  CHECK(shuffle_coproduct(coord("b:x1"), CoordKind::A) ==
        parse_tensor("b[x1] (x) a[e] + 1 (x) a[x1]"));
  CHECK(shuffle_coproduct(coord("b:x1x1"), CoordKind::B) ==
        parse_tensor("b[x1x1] (x) 1 + 2*b[x1] (x) b[x1] + 1 (x) b[x1x1]"));
}

TEST_CASE("tilde coproduct base cases and table spot checks") {
  CHECK(tilde_coproduct(coord("b:e")) == parse_tensor("1 (x) 1"));
  CHECK(tilde_coproduct(coord("a:e")) == parse_tensor("a[e] (x) 1"));
  CHECK(tilde_coproduct(coord("b:x0")) == parse_tensor("b[x0] (x) 1 + b[x1] (x) a[e]"));
  CHECK(tilde_coproduct(coord("a:x0")) == parse_tensor("a[x0] (x) 1 + a[x1] (x) a[e]"));
  CHECK(tilde_coproduct(coord("b:x1x1x1")) ==
        parse_tensor("b[x1x1x1] (x) 1 + 3*b[x1x1] (x) b[x1] + b[x1] (x) b[x1x1]"));
  CHECK(tilde_coproduct(coord("a:x1x1x1")) ==
        parse_tensor("a[x1x1x1] (x) 1 + 3*a[x1x1] (x) b[x1] + a[x1] (x) b[x1x1]"));
}

TEST_CASE("reduced coproduct table spot checks") {
  CHECK(reduced_coproduct(coord("b:x1")).is_zero());
  CHECK(reduced_coproduct(coord("a:e")).is_zero());
  CHECK(reduced_coproduct(coord("b:x0")) == parse_tensor("b[x1] (x) a[e]"));
  CHECK(reduced_coproduct(coord("b:x1x1")) == parse_tensor("3*b[x1] (x) b[x1]"));
  CHECK(reduced_coproduct(coord("a:x1")) == parse_tensor("b[x1] (x) a[e]"));
  CHECK(reduced_coproduct(coord("a:x0")) ==
        parse_tensor("b[x0] (x) a[e] + a[x1] (x) a[e] + b[x1] (x) a[e]^2"));
}

TEST_CASE("coproduct extends multiplicatively") {
  CHECK(coproduct_on_element(HopfElement::unit()) == TensorSum::unit_unit());

  HopfElement a0 = HopfElement::generator(coord("a:e"));
  CHECK(coproduct_on_element(a0 * a0) ==
        parse_tensor("a[e]^2 (x) 1 + 2*a[e] (x) a[e] + 1 (x) a[e]^2"));

  HopfElement prod = HopfElement::generator(coord("b:x1")) * a0;
  TensorSum expected = full_coproduct(coord("b:x1")) * full_coproduct(coord("a:e"));
  CHECK(coproduct_on_element(prod) == expected);
}

TEST_CASE("antipode table spot checks") {
  CHECK(antipode(coord("b:x1")) == parse_hopf("-b[x1]"));
  CHECK(antipode(coord("a:x0")) ==
        parse_hopf("-a[x0] + b[x0]*a[e] - b[x1]*a[e]^2 + a[e]*a[x1]"));
  CHECK(antipode(coord("b:x1x1x1")) ==
        parse_hopf("-b[x1x1x1] + 10*b[x1]*b[x1x1] - 15*b[x1]^3"));
}

TEST_CASE("left and right antipode recursions agree") {
  for (const auto& g : generators_up_to_length(3)) CHECK(antipode(g) == right_antipode(g));
  CHECK(antipode(coord("b:x0x0x1x1")) == right_antipode(coord("b:x0x0x1x1")));
  CHECK(antipode(coord("a:x1x0x0x1")) == right_antipode(coord("a:x1x0x0x1")));
}

TEST_CASE("coproduct grading") {
  for (const auto& g : generators_up_to_length(4)) {
    for (const auto& [lr, q] : tilde_coproduct(g).terms()) {
      CHECK(lr.first.degree() + lr.second.degree() == g.degree());
      CHECK((lr.first.is_unit() || lr.first.as_generator().has_value()));
    }
    for (const auto& [lr, q] : full_coproduct(g).terms())
      CHECK(lr.first.degree() + lr.second.degree() == g.degree());
    for (const auto& [lr, q] : reduced_coproduct(g).terms()) {
      CHECK(lr.first.degree() > 0);
      CHECK(lr.second.degree() > 0);
    }
  }
}

TEST_CASE("coassociativity on generators") {
  for (const auto& g : generators_up_to_length(3)) {
    Tensor3 left, right;
    for (const auto& [lr, q] : full_coproduct(g).terms()) {
      for (const auto& [lr2, p] : coproduct_on_element(HopfElement::monomial(lr.first)).terms())
        add3(left, lr2.first, lr2.second, lr.second, q * p);
      for (const auto& [lr2, p] : coproduct_on_element(HopfElement::monomial(lr.second)).terms())
        add3(right, lr.first, lr2.first, lr2.second, q * p);
    }
    CHECK(left == right);
  }
}

TEST_CASE("counit axioms") {
  for (const auto& g : generators_up_to_length(3)) {
    HopfElement from_left, from_right;
    for (const auto& [lr, q] : full_coproduct(g).terms()) {
      from_left.add_term(lr.second, q * eps(lr.first));
      from_right.add_term(lr.first, q * eps(lr.second));
    }
    CHECK(from_left == HopfElement::generator(g));
    CHECK(from_right == HopfElement::generator(g));
  }
}

TEST_CASE("antipode convolution axiom") {
  for (const auto& g : generators_up_to_length(3)) {
    HopfElement conv;
    for (const auto& [lr, q] : full_coproduct(g).terms())
      conv += q * (antipode(lr.first) * HopfElement::monomial(lr.second));
    if (g.is_unit())
      CHECK(conv == HopfElement::unit());
    else
      CHECK(conv.is_zero());
  }
}

TEST_CASE("characters evaluate coefficients multiplicatively") {
  const int n = 4;
  SeriesPair c(parse_series("1 + 2*x1 + x0x1", n), parse_series("3 + x1", n));
  CHECK(eval_character(HopfElement::unit(), c) == 1);
  CHECK(eval_character(HopfElement::generator(coord("b:x1")), c) == 2);
  HopfElement m = HopfElement::generator(coord("b:x1")) * HopfElement::generator(coord("a:e"));
  CHECK(eval_character(m, c) == 6);

  SeriesPair bad(parse_series("2", n), Series::zero(n));
  CHECK_THROWS_AS(eval_character(HopfElement::unit(), bad), Error);
  SeriesPair small(Series::one(2), Series::zero(2));
  CHECK_THROWS_AS(eval_character(HopfElement::generator(coord("b:x0x1x1")), small), Error);
}

TEST_CASE("character convolution realizes the group product") {
  Rng rng(41);
  for (int i = 0; i < 15; ++i) {
    SeriesPair c = fliess::testing::random_pair(rng, 6, true);
    SeriesPair d = fliess::testing::random_pair(rng, 6, true);
    SeriesPair cd = group_compose(c, d);
    REQUIRE(cd.hopf_normalized());
    for (const auto& g : generators_up_to_length(3)) {
      Rational convolved(0);
      for (const auto& [lr, q] : full_coproduct(g).terms())
        convolved += q * eval_character(lr.first, c) * eval_character(lr.second, d);
      CHECK(convolved == eval_character(HopfElement::generator(g), cd));
    }
  }
}

TEST_CASE("tilde coproduct is the coaction of the mixed composition") {
  Rng rng(42);
  for (int i = 0; i < 15; ++i) {
    SeriesPair c = fliess::testing::random_pair(rng, 6, true);
    SeriesPair d = fliess::testing::random_pair(rng, 6, true);
    Series composed_left = mixed_compose(c.left, d);
    Series composed_right = mixed_compose(c.right, d);
    for (const auto& g : generators_up_to_length(3)) {
      Rational sweedler(0);
      for (const auto& [lr, q] : tilde_coproduct(g).terms())
        sweedler += q * eval_character(lr.first, c) * eval_character(lr.second, d);
      const Series& target = g.kind == CoordKind::B ? composed_left : composed_right;
      CHECK(sweedler == target.coeff(g.word));
    }
  }
}

TEST_CASE("antipode route reproduces the group inverse") {
  CHECK(inverse_via_antipode(SeriesPair::identity(4)) == SeriesPair::identity(4));

  SeriesPair c(parse_series("1 + x1", 4), Series::zero(4));
  SeriesPair inv = inverse_via_antipode(c);
  CHECK(inv.left == parse_series("1 - x1 + 3*x1x1 - 15*x1x1x1 + 105*x1x1x1x1", 4));
  CHECK(inv.right.is_zero());

  Rng rng(43);
  for (int i = 0; i < 20; ++i) {
    SeriesPair p = fliess::testing::random_pair(rng, 4, true);
    CHECK(inverse_via_antipode(p) == group_inverse_fixed_point(p));
  }
  CHECK_THROWS_AS(inverse_via_antipode(SeriesPair(parse_series("2", 4), Series::zero(4))),
                  Error);
}

TEST_CASE("hilbert dimensions match the generating functions") {
  auto rows = hilbert_dimensions(9);
  const std::int64_t pa[] = {0, 1, 1, 2, 3, 5, 8, 13, 21, 34};
  const std::int64_t pb[] = {0, 1, 2, 3, 5, 8, 13, 21, 34, 55};
  const std::int64_t ha[] = {1, 1, 2, 4, 8, 15, 30, 56, 108, 203};
  const std::int64_t hb[] = {1, 1, 3, 6, 14, 28, 61, 122, 253, 505};
  const std::int64_t h[] = {1, 2, 6, 15, 38, 89, 210, 474, 1065, 2339};
  for (int k = 0; k <= 9; ++k) {
    CHECK(rows[k].p_a == pa[k]);
    CHECK(rows[k].p_b == pb[k]);
    CHECK(rows[k].p_a == rows[k].p_a_closed);
    CHECK(rows[k].p_b == rows[k].p_b_closed);
    CHECK(rows[k].dim_h_a == ha[k]);
    CHECK(rows[k].dim_h_b == hb[k]);
    CHECK(rows[k].dim_h == h[k]);
  }
}
