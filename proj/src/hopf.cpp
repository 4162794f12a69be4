#include "fliess/hopf.hpp"

#include <algorithm>
#include <mutex>

#include "fliess/errors.hpp"

namespace fliess {

// ---------------------------------------------------------------------------
// HopfMonomial

HopfMonomial HopfMonomial::generator(const CoordinateMap& g) {
  HopfMonomial m;
  if (!g.is_unit()) m.factors_.push_back({g, 1});
  return m;
}

int HopfMonomial::degree() const {
  int d = 0;
  for (const auto& [g, e] : factors_) d += g.degree() * e;
  return d;
}

int HopfMonomial::factor_count() const {
  int n = 0;
  for (const auto& [g, e] : factors_) n += e;
  return n;
}

std::optional<CoordinateMap> HopfMonomial::as_generator() const {
  if (factors_.size() == 1 && factors_.front().second == 1) return factors_.front().first;
  return std::nullopt;
}

HopfMonomial HopfMonomial::times(const CoordinateMap& g) const {
  if (g.is_unit()) return *this;
  HopfMonomial out = *this;
  auto it = std::lower_bound(out.factors_.begin(), out.factors_.end(), g,
                             [](const Factor& f, const CoordinateMap& k) { return f.first < k; });
  if (it != out.factors_.end() && it->first == g)
    ++it->second;
  else
    out.factors_.insert(it, {g, 1});
  return out;
}

HopfMonomial HopfMonomial::times(const HopfMonomial& o) const {
  HopfMonomial out = *this;
  for (const auto& [g, e] : o.factors_) {
    auto it = std::lower_bound(out.factors_.begin(), out.factors_.end(), g,
                               [](const Factor& f, const CoordinateMap& k) { return f.first < k; });
    if (it != out.factors_.end() && it->first == g)
      it->second += e;
    else
      out.factors_.insert(it, {g, e});
  }
  return out;
}

std::strong_ordering HopfMonomial::operator<=>(const HopfMonomial& o) const {
  if (int d = degree(), od = o.degree(); d != od) return d <=> od;
  auto a = factors_.begin(), b = o.factors_.begin();
  for (; a != factors_.end() && b != o.factors_.end(); ++a, ++b) {
    if (auto c = a->first <=> b->first; c != 0) return c;
    // Equal factor, different exponent: more copies of the shared (smaller)
    // factor sorts first.
    if (a->second != b->second) return b->second <=> a->second;
  }
  return (a != factors_.end()) <=> (b != o.factors_.end());
}

// ---------------------------------------------------------------------------
// HopfElement

HopfElement HopfElement::unit() { return monomial(HopfMonomial{}); }

HopfElement HopfElement::generator(const CoordinateMap& g) {
  return monomial(HopfMonomial::generator(g));
}

HopfElement HopfElement::monomial(const HopfMonomial& m, const Rational& q) {
  HopfElement e;
  e.add_term(m, q);
  return e;
}

HopfElement& HopfElement::add_term(const HopfMonomial& m, const Rational& q) {
  if (q == 0) return *this;
  auto [it, inserted] = terms_.emplace(m, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

HopfElement& HopfElement::operator+=(const HopfElement& o) {
  for (const auto& [m, q] : o.terms_) add_term(m, q);
  return *this;
}

HopfElement& HopfElement::operator-=(const HopfElement& o) {
  for (const auto& [m, q] : o.terms_) add_term(m, -q);
  return *this;
}

HopfElement& HopfElement::operator*=(const Rational& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, q] : terms_) q *= k;
  return *this;
}

HopfElement operator*(const HopfElement& a, const HopfElement& b) {
  HopfElement out;
  for (const auto& [ma, qa] : a.terms())
    for (const auto& [mb, qb] : b.terms()) out.add_term(ma.times(mb), qa * qb);
  return out;
}

HopfElement operator-(const HopfElement& a) {
  HopfElement out;
  for (const auto& [m, q] : a.terms()) out.add_term(m, -q);
  return out;
}

// ---------------------------------------------------------------------------
// TensorSum

TensorSum TensorSum::unit_unit() {
  TensorSum t;
  t.add_term(HopfMonomial{}, HopfMonomial{}, Rational(1));
  return t;
}

TensorSum& TensorSum::add_term(const HopfMonomial& l, const HopfMonomial& r, const Rational& q) {
  if (q == 0) return *this;
  auto [it, inserted] = terms_.emplace(std::pair{l, r}, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

TensorSum& TensorSum::operator+=(const TensorSum& o) {
  for (const auto& [lr, q] : o.terms_) add_term(lr.first, lr.second, q);
  return *this;
}

TensorSum& TensorSum::operator-=(const TensorSum& o) {
  for (const auto& [lr, q] : o.terms_) add_term(lr.first, lr.second, -q);
  return *this;
}

TensorSum operator*(const TensorSum& a, const TensorSum& b) {
  TensorSum out;
  for (const auto& [la, qa] : a.terms())
    for (const auto& [lb, qb] : b.terms())
      out.add_term(la.first.times(lb.first), la.second.times(lb.second), qa * qb);
  return out;
}

// ---------------------------------------------------------------------------
// Coproducts

namespace {

// Internal tensor form for the Δ̃ recursion: the left leg stays a bare
// coordinate map (the θ endomorphisms prepend letters to it, so (B,∅) must
// not collapse until the public conversion).
using GenTensor = std::map<std::pair<CoordinateMap, HopfMonomial>, Rational>;

void gen_add(GenTensor& t, const CoordinateMap& l, const HopfMonomial& r, const Rational& q) {
  if (q == 0) return;
  auto [it, inserted] = t.emplace(std::pair{l, r}, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) t.erase(it);
  }
}

const GenTensor& tilde_internal(const CoordinateMap& h);

GenTensor tilde_compute(const CoordinateMap& h) {
  GenTensor out;
  if (h.word.empty()) {
    gen_add(out, h, HopfMonomial{}, Rational(1));
    return out;
  }
  const Letter first = h.word.front();
  const Word rest = h.word.tail();
  if (first == Letter::X0) {
    // (θ₀ ⊗ id) ∘ Δ̃ part.
    for (const auto& [leg, q] : tilde_internal({h.kind, rest})) {
      const auto& [g, m] = leg;
      gen_add(out, {h.kind, g.word.prepended(Letter::X0)}, m, q);
    }
  }
  // (θ₁ ⊗ μ) ∘ (Δ̃ ⊗ id) ∘ Δ_⧢ part; the right-leg kind of the shuffle
  // coproduct is b for θ₁ and a for θ₀.
  const CoordKind right_kind = first == Letter::X1 ? CoordKind::B : CoordKind::A;
  for (const auto& [split, mult] : unshuffle(rest).terms()) {
    const CoordinateMap right_gen{right_kind, split.second};
    for (const auto& [leg, q] : tilde_internal({h.kind, split.first})) {
      const auto& [g, m] = leg;
      gen_add(out, {h.kind, g.word.prepended(Letter::X1)}, m.times(right_gen), Rational(mult) * q);
    }
  }
  return out;
}

const GenTensor& tilde_internal(const CoordinateMap& h) {
  static std::map<CoordinateMap, GenTensor> cache;
  static std::mutex mutex;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(h); it != cache.end()) return it->second;
  }
  GenTensor value = tilde_compute(h);  // recursion happens unlocked
  std::lock_guard lock(mutex);
  return cache.emplace(h, std::move(value)).first->second;  // idempotent insert
}

TensorSum to_public(const GenTensor& t) {
  TensorSum out;
  for (const auto& [leg, q] : t) out.add_term(HopfMonomial::generator(leg.first), leg.second, q);
  return out;
}

}  // namespace

TensorSum shuffle_coproduct(const CoordinateMap& h, CoordKind right_kind) {
  TensorSum out;
  for (const auto& [split, mult] : unshuffle(h.word).terms())
    out.add_term(HopfMonomial::generator({h.kind, split.first}),
                 HopfMonomial::generator({right_kind, split.second}), Rational(mult));
  return out;
}

TensorSum tilde_coproduct(const CoordinateMap& h) { return to_public(tilde_internal(h)); }

TensorSum full_coproduct(const CoordinateMap& h) {
  if (h.is_unit()) return TensorSum::unit_unit();
  TensorSum out;
  // The (id⊗μ)(Δ̃⊗id)Δ_⧢ part acts on b_η for both kinds; the right-leg
  // catenation factor matches the kind of h.
  for (const auto& [split, mult] : unshuffle(h.word).terms()) {
    const CoordinateMap right_gen{h.kind, split.second};
    for (const auto& [leg, q] : tilde_internal({CoordKind::B, split.first})) {
      const auto& [g, m] = leg;
      out.add_term(HopfMonomial::generator(g), m.times(right_gen), Rational(mult) * q);
    }
  }
  if (h.kind == CoordKind::A) out += tilde_coproduct(h);
  return out;
}

TensorSum reduced_coproduct(const CoordinateMap& h) {
  if (h.is_unit()) return TensorSum{};
  TensorSum out = full_coproduct(h);
  const HopfMonomial unit;
  const HopfMonomial self = HopfMonomial::generator(h);
  out.add_term(self, unit, Rational(-1));
  out.add_term(unit, self, Rational(-1));
  return out;
}

TensorSum coproduct_on_element(const HopfElement& e) {
  TensorSum out;
  for (const auto& [m, q] : e.terms()) {
    TensorSum prod = TensorSum::unit_unit();
    for (const auto& [g, exp] : m.factors()) {
      TensorSum dg = full_coproduct(g);
      for (int i = 0; i < exp; ++i) prod = prod * dg;
    }
    for (const auto& [lr, p] : prod.terms()) out.add_term(lr.first, lr.second, q * p);
  }
  return out;
}

Rational counit(const HopfElement& e) {
  auto it = e.terms().find(HopfMonomial{});
  return it == e.terms().end() ? Rational(0) : it->second;
}

// ---------------------------------------------------------------------------
// Antipode

namespace {

HopfElement antipode_compute(const CoordinateMap& h) {
  HopfElement s = -HopfElement::generator(h);
  for (const auto& [lr, q] : reduced_coproduct(h).terms()) {
    // Left legs of the reduced coproduct of a generator are single lower-
    // degree generators, so the recursion terminates by degree.
    HopfElement left = antipode(lr.first);
    for (const auto& [m, p] : left.terms()) s.add_term(m.times(lr.second), -q * p);
  }
  return s;
}

}  // namespace

HopfElement antipode(const CoordinateMap& h) {
  if (h.is_unit()) return HopfElement::unit();
  static std::map<CoordinateMap, HopfElement> cache;
  static std::mutex mutex;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(h); it != cache.end()) return it->second;
  }
  HopfElement value = antipode_compute(h);
  std::lock_guard lock(mutex);
  return cache.emplace(h, std::move(value)).first->second;
}

HopfElement antipode(const HopfMonomial& m) {
  HopfElement out = HopfElement::unit();
  for (const auto& [g, exp] : m.factors()) {
    HopfElement sg = antipode(g);
    for (int i = 0; i < exp; ++i) out = out * sg;
  }
  return out;
}

HopfElement antipode(const HopfElement& e) {
  HopfElement out;
  for (const auto& [m, q] : e.terms()) out += q * antipode(m);
  return out;
}

// ---------------------------------------------------------------------------
// Characters and the antipode route to the group inverse

namespace {

Rational eval_factor(const CoordinateMap& g, const SeriesPair& c) {
  if (g.word.length() > c.trunc())
    throw_precondition("insufficient truncation: coordinate word '" + g.word.str() +
                       "' exceeds degree " + std::to_string(c.trunc()));
  return g.kind == CoordKind::B ? c.left.coeff(g.word) : c.right.coeff(g.word);
}

Rational eval_monomial(const HopfMonomial& m, const SeriesPair& c) {
  Rational out(1);
  for (const auto& [g, exp] : m.factors()) {
    Rational base = eval_factor(g, c);
    if (base == 0) return Rational(0);
    for (int i = 0; i < exp; ++i) out *= base;
  }
  return out;
}

void require_normalized(const SeriesPair& c) {
  if (!c.hopf_normalized())
    throw_precondition("character evaluation needs a Hopf-normalized pair ((c_L,∅) = 1)");
}

}  // namespace

Rational eval_character(const HopfMonomial& m, const SeriesPair& c) {
  require_normalized(c);
  return eval_monomial(m, c);
}

Rational eval_character(const HopfElement& e, const SeriesPair& c) {
  require_normalized(c);
  Rational out(0);
  for (const auto& [m, q] : e.terms()) out += q * eval_monomial(m, c);
  return out;
}

SeriesPair inverse_via_antipode(const SeriesPair& c) {
  require_normalized(c);
  const int n = c.trunc();
  Series left(n), right(n);
  for (int len = 0; len <= n; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      Word w;
      for (int i = 0; i < len; ++i)
        w = w.appended(((bits >> i) & 1u) != 0 ? Letter::X1 : Letter::X0);
      left.add_term(w, eval_character(antipode(CoordinateMap{CoordKind::B, w}), c));
      right.add_term(w, eval_character(antipode(CoordinateMap{CoordKind::A, w}), c));
    }
  }
  return SeriesPair(std::move(left), std::move(right));
}

// ---------------------------------------------------------------------------
// Graded dimensions

std::vector<HilbertRow> hilbert_dimensions(int max_degree) {
  if (max_degree < 0 || max_degree > 22)
    throw_precondition("hilbert max degree must be in [0, 22]");
  const int K = max_degree;
  std::vector<HilbertRow> rows(K + 1);
  for (int k = 0; k <= K; ++k) rows[k] = HilbertRow{k, 0, 0, 0, 0, 0, 0, 0};

  // Generator counts by direct word enumeration: every word of length L has
  // b-degree ≥ L, so length ≤ K exhausts all contributions.
  for (int len = 0; len <= K; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      const int ones = std::popcount(bits);
      const int deg_b = 2 * (len - ones) + ones;
      if (deg_b <= K && !(len == 0)) ++rows[deg_b].p_b;  // b_∅ is the unit, not a generator
      if (deg_b + 1 <= K) ++rows[deg_b + 1].p_a;
    }
  }

  // Closed forms by power-series division: X/(1−X−X²) and (X+X²)/(1−X−X²).
  for (int k = 1; k <= K; ++k) {
    auto prev = [&](std::int64_t HilbertRow::* field, int i) {
      return i >= 0 ? rows[i].*field : 0;
    };
    rows[k].p_a_closed = prev(&HilbertRow::p_a_closed, k - 1) +
                         prev(&HilbertRow::p_a_closed, k - 2) + (k == 1 ? 1 : 0);
    rows[k].p_b_closed = prev(&HilbertRow::p_b_closed, k - 1) +
                         prev(&HilbertRow::p_b_closed, k - 2) + (k == 1 ? 1 : 0) +
                         (k == 2 ? 1 : 0);
  }

  // dim H_k by multiset counting: one geometric factor 1/(1−X^j) per
  // generator of degree j, independent of the closed forms above.
  auto multiset_dims = [K](auto count_of_degree) {
    std::vector<std::int64_t> dim(K + 1, 0);
    dim[0] = 1;
    for (int j = 1; j <= K; ++j)
      for (std::int64_t g = 0; g < count_of_degree(j); ++g)
        for (int k = j; k <= K; ++k) dim[k] += dim[k - j];
    return dim;
  };
  auto ha = multiset_dims([&](int j) { return rows[j].p_a; });
  auto hb = multiset_dims([&](int j) { return rows[j].p_b; });
  auto h = multiset_dims([&](int j) { return rows[j].p_a + rows[j].p_b; });
  for (int k = 0; k <= K; ++k) {
    rows[k].dim_h_a = ha[k];
    rows[k].dim_h_b = hb[k];
    rows[k].dim_h = h[k];
  }
  return rows;
}

}  // namespace fliess
