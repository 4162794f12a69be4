#include "fliess/series.hpp"

#include "fliess/errors.hpp"

namespace fliess {

namespace {
const Rational kZero{0};
}

Series::Series(int trunc) : trunc_(trunc) {
  if (trunc < 0 || trunc > Word::max_length)
    throw_precondition("truncation degree out of range");
}

Series Series::one(int trunc) { return constant(Rational(1), trunc); }

Series Series::constant(const Rational& k, int trunc) {
  Series s(trunc);
  s.add_term(Word{}, k);
  return s;
}

Series Series::monomial(const Word& w, const Rational& coeff, int trunc) {
  Series s(trunc);
  s.set_coeff(w, coeff);
  return s;
}

bool Series::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

const Rational& Series::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? kZero : it->second;
}

Series& Series::add_term(const Word& w, const Rational& q) {
  if (w.length() > trunc_ || q == 0) return *this;
  auto [it, inserted] = terms_.emplace(w, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Series& Series::set_coeff(const Word& w, const Rational& q) {
  if (w.length() > trunc_)
    throw_precondition("word '" + w.str() + "' exceeds truncation degree " +
                       std::to_string(trunc_));
  if (q == 0)
    terms_.erase(w);
  else
    terms_.insert_or_assign(w, q);
  return *this;
}

Series Series::truncated(int new_trunc) const {
  Series out(new_trunc);
  for (const auto& [w, q] : terms_) out.add_term(w, q);
  return out;
}

Series& Series::operator+=(const Series& o) {
  require_same_trunc(*this, o);
  for (const auto& [w, q] : o.terms_) add_term(w, q);
  return *this;
}

Series& Series::operator-=(const Series& o) {
  require_same_trunc(*this, o);
  for (const auto& [w, q] : o.terms_) add_term(w, -q);
  return *this;
}

Series& Series::operator*=(const Rational& k) {
  if (k == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, q] : terms_) q *= k;
  return *this;
}

Series operator-(const Series& a) {
  Series out(a.trunc());
  for (const auto& [w, q] : a.terms()) out.add_term(w, -q);
  return out;
}

int order(const Series& c) {
  if (c.is_zero()) return infinite_order;
  // Canonical order is length-lexicographic, so the first term is shortest.
  return c.terms().begin()->first.length();
}

int distance_exponent(const Series& c, const Series& d) {
  require_same_trunc(c, d);
  return order(c - d);
}

Series linear_combine(const std::vector<std::pair<Rational, Series>>& terms) {
  if (terms.empty()) throw_precondition("linear_combine needs at least one term");
  Series out(terms.front().second.trunc());
  for (const auto& [k, s] : terms) {
    require_same_trunc(out, s);
    for (const auto& [w, q] : s.terms()) out.add_term(w, k * q);
  }
  return out;
}

Series prepend(Letter l, const Series& c) {
  Series out(c.trunc());
  for (const auto& [w, q] : c.terms())
    if (w.length() < c.trunc()) out.add_term(w.prepended(l), q);
  return out;
}

Series prepend(const Word& w, const Series& c) {
  Series out(c.trunc());
  for (const auto& [v, q] : c.terms())
    if (w.length() + v.length() <= c.trunc()) out.add_term(w.concat(v), q);
  return out;
}

NaturalForced natural_forced_split(const Series& c) {
  NaturalForced parts{Series(c.trunc()), Series(c.trunc())};
  for (const auto& [w, q] : c.terms())
    (w.count(Letter::X1) == 0 ? parts.natural : parts.forced).add_term(w, q);
  return parts;
}

void require_same_trunc(const Series& a, const Series& b) {
  if (a.trunc() != b.trunc())
    throw_precondition("mismatched truncation degrees (" + std::to_string(a.trunc()) + " vs " +
                       std::to_string(b.trunc()) + ")");
}

}  // namespace fliess
