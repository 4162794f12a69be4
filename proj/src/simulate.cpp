#include "fliess/simulate.hpp"

#include <algorithm>

#include "fliess/errors.hpp"

namespace fliess {

PiecewiseConstantSignal::PiecewiseConstantSignal(std::vector<Rational> breakpoints,
                                                 std::vector<Rational> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (values_.empty() || breakpoints_.size() != values_.size() + 1)
    throw_precondition("signal needs M >= 1 segments and M+1 breakpoints");
  for (std::size_t i = 0; i + 1 < breakpoints_.size(); ++i)
    if (!(breakpoints_[i] < breakpoints_[i + 1]))
      throw_precondition("signal breakpoints must be strictly increasing");
}

PiecewiseConstantSignal PiecewiseConstantSignal::constant(const Rational& v, const Rational& t0,
                                                          const Rational& t1) {
  return PiecewiseConstantSignal({t0, t1}, {v});
}

bool PiecewiseConstantSignal::contains(const Rational& t) const {
  return start_time() <= t && t <= end_time();
}

const Rational& PiecewiseConstantSignal::value_at(const Rational& t) const {
  if (!contains(t)) throw_precondition("time outside the signal's domain");
  // Right-open intervals; the end time takes the last segment's value.
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  std::size_t idx = static_cast<std::size_t>(it - breakpoints_.begin());
  if (idx == 0) idx = 1;
  if (idx > values_.size()) idx = values_.size();
  return values_[idx - 1];
}

IteratedIntegrals::IteratedIntegrals(int depth, PiecewiseConstantSignal u)
    : depth_(depth), u_(std::move(u)), t_(u_.start_time()) {
  if (depth < 0 || depth > Word::max_length) throw_precondition("depth out of range");
  state_[Word{}] = Rational(1);
  for (int len = 1; len <= depth; ++len)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      Word w;
      for (int i = 0; i < len; ++i)
        w = w.appended(((bits >> i) & 1u) != 0 ? Letter::X1 : Letter::X0);
      state_[w] = Rational(0);
    }
}

void IteratedIntegrals::advance_within_segment(const Rational& to, const Rational& input) {
  const Rational h = to - t_;
  if (h == 0) return;
  // Polynomials in the elapsed time s ∈ [0, h]; words iterate in canonical
  // (length-first) order, so each tail polynomial is already available.
  std::map<Word, std::vector<Rational>> poly;
  for (auto& [w, start] : state_) {
    if (w.empty()) {
      poly[w] = {Rational(1)};
      continue;
    }
    const std::vector<Rational>& inner = poly[w.tail()];
    std::vector<Rational> p(inner.size() + 1);
    p[0] = start;
    const Rational factor = w.front() == Letter::X0 ? Rational(1) : input;
    for (std::size_t k = 0; k < inner.size(); ++k) p[k + 1] = factor * inner[k] / Rational(k + 1);
    poly[w] = std::move(p);
  }
  for (auto& [w, value] : state_) {
    const std::vector<Rational>& p = poly[w];
    Rational acc(0);
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * h + p[k];
    value = acc;
  }
  t_ = to;
}

void IteratedIntegrals::advance_to(const Rational& t) {
  if (t < t_) throw_precondition("iterated-integral cursor cannot move backwards");
  if (!u_.contains(t)) throw_precondition("time outside the signal's domain");
  const auto& bp = u_.breakpoints();
  while (segment_ + 1 < u_.values().size() && bp[segment_ + 1] < t) {
    advance_within_segment(bp[segment_ + 1], u_.values()[segment_]);
    ++segment_;
  }
  advance_within_segment(t, u_.values()[segment_]);
}

const Rational& IteratedIntegrals::value(const Word& w) const {
  auto it = state_.find(w);
  if (it == state_.end()) throw_precondition("word deeper than the prepared depth");
  return it->second;
}

namespace {

int max_word_length(const Series& c) {
  int len = 0;
  for (const auto& [w, q] : c.terms()) len = std::max(len, w.length());
  return len;
}

Rational sum_terms(const Series& c, const IteratedIntegrals& ii) {
  Rational out(0);
  for (const auto& [w, q] : c.terms()) out += q * ii.value(w);
  return out;
}

}  // namespace

Rational eval_word(const Word& eta, const PiecewiseConstantSignal& u, const Rational& t) {
  IteratedIntegrals ii(eta.length(), u);
  ii.advance_to(t);
  return ii.value(eta);
}

Rational eval_series(const Series& c, const PiecewiseConstantSignal& u, const Rational& t) {
  IteratedIntegrals ii(max_word_length(c), u);
  ii.advance_to(t);
  return sum_terms(c, ii);
}

Rational eval_pair(const SeriesPair& c, const PiecewiseConstantSignal& u, const Rational& t) {
  IteratedIntegrals ii(std::max(max_word_length(c.left), max_word_length(c.right)), u);
  ii.advance_to(t);
  return u.value_at(t) * sum_terms(c.left, ii) + sum_terms(c.right, ii);
}

std::vector<Rational> sample_series(const Series& c, const PiecewiseConstantSignal& u,
                                    const std::vector<Rational>& times) {
  IteratedIntegrals ii(max_word_length(c), u);
  std::vector<Rational> out;
  out.reserve(times.size());
  for (const Rational& t : times) {
    ii.advance_to(t);
    out.push_back(sum_terms(c, ii));
  }
  return out;
}

std::vector<Rational> sample_pair(const SeriesPair& c, const PiecewiseConstantSignal& u,
                                  const std::vector<Rational>& times) {
  IteratedIntegrals ii(std::max(max_word_length(c.left), max_word_length(c.right)), u);
  std::vector<Rational> out;
  out.reserve(times.size());
  for (const Rational& t : times) {
    ii.advance_to(t);
    out.push_back(u.value_at(t) * sum_terms(c.left, ii) + sum_terms(c.right, ii));
  }
  return out;
}

namespace {

// Uniform refinement of [t0, t] joined with u's interior breakpoints, so a
// piecewise-constant inner signal is sampled without error.
std::vector<Rational> sample_grid(const PiecewiseConstantSignal& u, const Rational& t,
                                  int refinement) {
  const Rational& t0 = u.start_time();
  std::vector<Rational> grid;
  grid.reserve(static_cast<std::size_t>(refinement) + 1);
  for (int j = 0; j <= refinement; ++j)
    grid.push_back(t0 + Rational(j) * (t - t0) / Rational(refinement));
  for (const Rational& b : u.breakpoints())
    if (t0 < b && b < t) grid.push_back(b);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  return grid;
}

PiecewiseConstantSignal staircase(std::vector<Rational> grid, std::vector<Rational> left_values) {
  left_values.pop_back();  // last grid point closes the final interval
  return PiecewiseConstantSignal(std::move(grid), std::move(left_values));
}

Rational abs_value(Rational q) {
  if (q < 0) q = -q;
  return q;
}

}  // namespace

Rational oracle_mixed_compose(const Series& c, const SeriesPair& d,
                              const PiecewiseConstantSignal& u, const Rational& t,
                              int refinement) {
  require_same_trunc(c, d);
  if (refinement < 1) throw_precondition("refinement must be positive");
  if (!u.contains(t)) throw_precondition("time outside the signal's domain");

  std::vector<Rational> grid = sample_grid(u, t, refinement);
  PiecewiseConstantSignal inner = staircase(grid, sample_pair(d, u, grid));
  Rational lhs = eval_series(c, inner, t);
  Rational rhs = eval_series(mixed_compose(c, d), u, t);
  return abs_value(lhs - rhs);
}

Rational closed_loop_residual(const Series& c, const Series& d, const PiecewiseConstantSignal& u,
                              const Rational& t, int refinement, int iterations) {
  require_same_trunc(c, d);
  if (!u.contains(t)) throw_precondition("time outside the signal's domain");

  std::vector<Rational> grid = sample_grid(u, t, refinement);
  std::vector<Rational> u_vals;
  u_vals.reserve(grid.size());
  for (const Rational& g : grid) u_vals.push_back(u.value_at(g));

  // v ← u + F_d[F_c[v]] on the grid; contraction on short horizons.
  PiecewiseConstantSignal v = staircase(grid, u_vals);
  for (int it = 0; it < iterations; ++it) {
    PiecewiseConstantSignal y = staircase(grid, sample_series(c, v, grid));
    std::vector<Rational> fb = sample_series(d, y, grid);
    for (std::size_t j = 0; j < grid.size(); ++j) fb[j] += u_vals[j];
    v = staircase(grid, std::move(fb));
  }
  Rational lhs = eval_series(c, v, t);
  Rational rhs = eval_series(feedback_product(c, d), u, t);
  return abs_value(lhs - rhs);
}

}  // namespace fliess
