#include "fliess/linearize.hpp"

#include "fliess/errors.hpp"

namespace fliess {

RelativeDegreeResult relative_degree(const Series& c) {
  Series forced = natural_forced_split(c).forced;
  if (forced.is_zero()) return {std::nullopt, RelDegDiagnostic::ZeroForcedPart};
  int min_leading = infinite_order;
  for (const auto& [w, q] : forced.terms())
    min_leading = std::min(min_leading, w.leading(Letter::X0));
  const int r = min_leading + 1;
  const Word linear = Word::power(Letter::X0, r - 1).appended(Letter::X1);
  if (c.coeff(linear) == 0) return {std::nullopt, RelDegDiagnostic::MissingLinearWord};
  return {r, RelDegDiagnostic::Defined};
}

RelDegreeDecomposition decompose(const Series& c) {
  auto rd = relative_degree(c);
  if (!rd.r) throw_precondition("series has no well-defined relative degree");
  const int r = *rd.r;
  const Word linear = Word::power(Letter::X0, r - 1).appended(Letter::X1);
  auto parts = natural_forced_split(c);
  RelDegreeDecomposition out{r, c.coeff(linear), parts.natural, Series(c.trunc())};
  for (const auto& [w, q] : parts.forced.terms()) {
    if (w == linear) continue;
    out.e.add_term(w.dropped_front(r - 1), q);
  }
  return out;
}

Series normal_form(const RelDegreeDecomposition& d) {
  Series out = d.natural;
  out.add_term(Word::power(Letter::X0, d.r - 1).appended(Letter::X1), Rational(1));
  return out;
}

Series reassemble(const RelDegreeDecomposition& d, int trunc) {
  const Word prefix = Word::power(Letter::X0, d.r - 1);
  Series out = d.natural.truncated(trunc);
  out.add_term(prefix.appended(Letter::X1), d.K);
  for (const auto& [w, q] : d.e.terms()) out.add_term(prefix.concat(w), q);
  return out;
}

SeriesPair linearizing_element(const Series& c) {
  RelDegreeDecomposition d = decompose(c);
  // e is proper, so splitting off the first letter is total.
  Series e0(c.trunc()), e1(c.trunc());
  for (const auto& [w, q] : d.e.terms())
    (w.front() == Letter::X0 ? e0 : e1).add_term(w.tail(), q);
  return SeriesPair(Series::constant(d.K, c.trunc()) + e1, e0);
}

bool orbit_check(const Series& c, const SeriesPair& e) {
  if (!e.in_group()) throw_precondition("orbit check needs a group element");
  auto rd = relative_degree(c);
  if (!rd.r) return false;
  return mixed_compose(c, group_inverse_fixed_point(e)) == normal_form(decompose(c));
}

}  // namespace fliess
