#pragma once

#include <vector>

#include "fliess/feedback.hpp"

namespace fliess {

// Piecewise-constant input on [t_0, t_M]: values[i] on [breakpoints[i],
// breakpoints[i+1]), with the final breakpoint folded into the last interval.
class PiecewiseConstantSignal {
public:
  PiecewiseConstantSignal(std::vector<Rational> breakpoints, std::vector<Rational> values);
  static PiecewiseConstantSignal constant(const Rational& v, const Rational& t0,
                                          const Rational& t1);

  const std::vector<Rational>& breakpoints() const { return breakpoints_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& start_time() const { return breakpoints_.front(); }
  const Rational& end_time() const { return breakpoints_.back(); }
  bool contains(const Rational& t) const;
  const Rational& value_at(const Rational& t) const;  // right-open convention

private:
  std::vector<Rational> breakpoints_;
  std::vector<Rational> values_;
};

// Exact values of every E_η, |η| ≤ depth, carried from t_0 to a movable time
// cursor. On each constant segment E_η is a polynomial in the elapsed time
// whose coefficients follow the integral recursion in closed form, so there is
// no quadrature error anywhere.
class IteratedIntegrals {
public:
  IteratedIntegrals(int depth, PiecewiseConstantSignal u);

  const PiecewiseConstantSignal& signal() const { return u_; }
  const Rational& time() const { return t_; }
  int depth() const { return depth_; }
  void advance_to(const Rational& t);  // monotone, within the signal's domain
  const Rational& value(const Word& w) const;

private:
  void advance_within_segment(const Rational& to, const Rational& input);

  int depth_;
  PiecewiseConstantSignal u_;
  Rational t_;
  std::size_t segment_ = 0;  // index of the interval containing the cursor
  std::map<Word, Rational> state_;
};

// E_η[u](t, t_0), exact.
Rational eval_word(const Word& eta, const PiecewiseConstantSignal& u, const Rational& t);

// F_c[u](t) truncated at c's degree: Σ_{|η|≤N} (c,η) E_η[u](t,t_0).
Rational eval_series(const Series& c, const PiecewiseConstantSignal& u, const Rational& t);

// F_{c_δ}[u](t) = u(t)·F_{c_L}[u](t) + F_{c_R}[u](t).
Rational eval_pair(const SeriesPair& c, const PiecewiseConstantSignal& u, const Rational& t);

// One-pass batch of eval_series at increasing times.
std::vector<Rational> sample_series(const Series& c, const PiecewiseConstantSignal& u,
                                    const std::vector<Rational>& times);
std::vector<Rational> sample_pair(const SeriesPair& c, const PiecewiseConstantSignal& u,
                                  const std::vector<Rational>& times);

// |F_c[F_{d_δ}[u]](t) − F_{c ∘̃ d_δ}[u](t)| where the inner signal is sampled
// into a piecewise-constant approximation on `refinement` uniform subintervals
// of [t_0, t] (left-endpoint values, grid extended by u's own breakpoints so a
// piecewise-constant inner signal is reproduced exactly). Exact rational.
Rational oracle_mixed_compose(const Series& c, const SeriesPair& d,
                              const PiecewiseConstantSignal& u, const Rational& t,
                              int refinement);

// Residual of the closed loop: iterates v ← u + F_d[F_c[v]] on the sampled
// grid and compares F_c[v] with F_{c@d}[u](t).
Rational closed_loop_residual(const Series& c, const Series& d, const PiecewiseConstantSignal& u,
                              const Rational& t, int refinement, int iterations);

}  // namespace fliess
