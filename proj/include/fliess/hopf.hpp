#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "fliess/feedback.hpp"

namespace fliess {

// b_η reads (c_L, η), a_η reads (c_R, η). b precedes a in the canonical order.
enum class CoordKind : unsigned { B = 0, A = 1 };

struct CoordinateMap {
  CoordKind kind;
  Word word;

  // deg(b_η) = 2|η|_{x0} + |η|_{x1}, deg(a_η) = deg(b_η) + 1.
  int degree() const {
    return 2 * word.count(Letter::X0) + word.count(Letter::X1) + (kind == CoordKind::A ? 1 : 0);
  }
  bool is_unit() const { return kind == CoordKind::B && word.empty(); }  // b_∅ ~ 1

  friend bool operator==(const CoordinateMap&, const CoordinateMap&) = default;
  std::strong_ordering operator<=>(const CoordinateMap& o) const {
    if (kind != o.kind) return kind <=> o.kind;
    return word <=> o.word;
  }
};

// Commutative monomial in coordinate maps, kept sorted with positive
// exponents. The empty product is the algebra unit; (B, ∅) collapses to it and
// never appears as a factor.
class HopfMonomial {
public:
  using Factor = std::pair<CoordinateMap, int>;

  HopfMonomial() = default;
  static HopfMonomial generator(const CoordinateMap& g);

  bool is_unit() const { return factors_.empty(); }
  int degree() const;
  int factor_count() const;  // with multiplicity
  const std::vector<Factor>& factors() const { return factors_; }
  // Exactly one factor with exponent one?
  std::optional<CoordinateMap> as_generator() const;

  HopfMonomial times(const CoordinateMap& g) const;
  HopfMonomial times(const HopfMonomial& o) const;

  friend bool operator==(const HopfMonomial&, const HopfMonomial&) = default;
  // Canonical: by degree, then by the flattened factor sequence.
  std::strong_ordering operator<=>(const HopfMonomial& o) const;

private:
  std::vector<Factor> factors_;
};

// Rational linear combination of monomials: an element of H.
class HopfElement {
public:
  using TermMap = std::map<HopfMonomial, Rational>;

  HopfElement() = default;
  static HopfElement unit();
  static HopfElement generator(const CoordinateMap& g);
  static HopfElement monomial(const HopfMonomial& m, const Rational& q = Rational(1));

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const& { return terms_; }
  TermMap terms() && { return std::move(terms_); }
  HopfElement& add_term(const HopfMonomial& m, const Rational& q);

  HopfElement& operator+=(const HopfElement& o);
  HopfElement& operator-=(const HopfElement& o);
  HopfElement& operator*=(const Rational& k);
  friend HopfElement operator+(HopfElement a, const HopfElement& b) { return a += b; }
  friend HopfElement operator-(HopfElement a, const HopfElement& b) { return a -= b; }
  friend HopfElement operator*(const Rational& k, HopfElement e) { return e *= k; }
  friend HopfElement operator*(const HopfElement& a, const HopfElement& b);
  friend HopfElement operator-(const HopfElement& a);

  friend bool operator==(const HopfElement&, const HopfElement&) = default;

private:
  TermMap terms_;
};

// Σ qᵢ · leftᵢ ⊗ rightᵢ over monomial pairs, canonically combined.
class TensorSum {
public:
  using TermMap = std::map<std::pair<HopfMonomial, HopfMonomial>, Rational>;

  TensorSum() = default;
  static TensorSum unit_unit();  // 1 ⊗ 1

  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  TensorSum& add_term(const HopfMonomial& l, const HopfMonomial& r, const Rational& q);

  TensorSum& operator+=(const TensorSum& o);
  TensorSum& operator-=(const TensorSum& o);
  friend TensorSum operator+(TensorSum a, const TensorSum& b) { return a += b; }
  friend TensorSum operator-(TensorSum a, const TensorSum& b) { return a -= b; }
  friend TensorSum operator*(const TensorSum& a, const TensorSum& b);  // leg-wise

  friend bool operator==(const TensorSum&, const TensorSum&) = default;

private:
  TermMap terms_;
};

// Δ_⧢^h̃ lifted from the unshuffle of h's word: left legs keep h's kind, right
// legs take right_kind; (B, ∅) legs collapse to the unit.
TensorSum shuffle_coproduct(const CoordinateMap& h, CoordKind right_kind);

// Δ̃, the coaction dual to the mixed composition product, by the θ-recursions:
//   Δ̃ h_∅ = h_∅ ⊗ 1
//   Δ̃ ∘ θ₁ = (θ₁ ⊗ μ) ∘ (Δ̃ ⊗ id) ∘ Δ_⧢^b
//   Δ̃ ∘ θ₀ = (θ₀ ⊗ id) ∘ Δ̃ + (θ₁ ⊗ μ) ∘ (Δ̃ ⊗ id) ∘ Δ_⧢^a
TensorSum tilde_coproduct(const CoordinateMap& h);

// The group coproduct: Δ b_η = (id⊗μ)(Δ̃⊗id) Δ_⧢^b b_η and
// Δ a_η = (id⊗μ)(Δ̃⊗id) Δ_⧢^a b_η + Δ̃ a_η.
TensorSum full_coproduct(const CoordinateMap& h);

// Δ′h = Δh − h⊗1 − 1⊗h, landing in H₊ ⊗ H₊.
TensorSum reduced_coproduct(const CoordinateMap& h);

// Multiplicative/linear extension of the group coproduct, Δ(1) = 1 ⊗ 1.
TensorSum coproduct_on_element(const HopfElement& e);

// Coefficient of the unit monomial (ε vanishes on H₊).
Rational counit(const HopfElement& e);

// Antipode by the degree recursion S h = −h − Σ S(h′₍₁₎) h′₍₂₎, memoized per
// coordinate map; extended to monomials factor-wise and linearly to elements.
HopfElement antipode(const CoordinateMap& h);
HopfElement antipode(const HopfMonomial& m);
HopfElement antipode(const HopfElement& e);

// Character Φ_c: b_η ↦ (c_L, η), a_η ↦ (c_R, η), multiplicative and linear.
// Requires a Hopf-normalized pair and all words within the truncation degree.
Rational eval_character(const HopfElement& e, const SeriesPair& c);
Rational eval_character(const HopfMonomial& m, const SeriesPair& c);

// Group inverse coefficient-by-coefficient: (c⁻¹_L, η) = Φ_c(S b_η) and
// (c⁻¹_R, η) = Φ_c(S a_η) for all |η| ≤ trunc.
SeriesPair inverse_via_antipode(const SeriesPair& c);

struct HilbertRow {
  int degree;                            // k
  std::int64_t p_a, p_b;                 // generator counts by word enumeration
  std::int64_t p_a_closed, p_b_closed;   // coefficients of X/(1−X−X²), (X+X²)/(1−X−X²)
  std::int64_t dim_h_a, dim_h_b, dim_h;  // graded dimensions via the multiset product
};

// Rows k = 0..max_degree (row 0 carries p = 0, dim 1).
std::vector<HilbertRow> hilbert_dimensions(int max_degree);

}  // namespace fliess
