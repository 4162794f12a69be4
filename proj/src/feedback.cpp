#include "fliess/feedback.hpp"

#include <map>

#include "fliess/errors.hpp"

namespace fliess {

SeriesPair::SeriesPair(Series l, Series r) : left(std::move(l)), right(std::move(r)) {
  fliess::require_same_trunc(left, right);
}

SeriesPair SeriesPair::identity(int trunc) {
  return SeriesPair(Series::one(trunc), Series::zero(trunc));
}

void require_same_trunc(const Series& c, const SeriesPair& d) { require_same_trunc(c, d.left); }

void require_same_trunc(const SeriesPair& c, const SeriesPair& d) {
  require_same_trunc(c.left, d.left);
}

namespace {

// φ_d(η)(1), memoized on the suffix η (the recursion consumes front letters,
// so all intermediates are suffix values).
class PhiEvaluator {
public:
  explicit PhiEvaluator(const SeriesPair& d) : d_(d) {}

  const Series& operator()(const Word& w) {
    auto it = memo_.find(w);
    if (it != memo_.end()) return it->second;
    Series value = w.empty() ? Series::one(d_.trunc()) : step(w.front(), (*this)(w.tail()));
    return memo_.emplace(w, std::move(value)).first->second;
  }

private:
  Series step(Letter l, const Series& e) const {
    if (l == Letter::X0) return prepend(Letter::X0, e);
    return prepend(Letter::X1, shuffle(d_.left, e)) + prepend(Letter::X0, shuffle(d_.right, e));
  }

  const SeriesPair& d_;
  std::map<Word, Series> memo_;
};

}  // namespace

Series mixed_compose(const Series& c, const SeriesPair& d) {
  require_same_trunc(c, d);
  PhiEvaluator phi(d);
  Series out(c.trunc());
  for (const auto& [w, q] : c.terms()) {
    // φ raises degree by at least the word length, so long words cannot
    // contribute below the truncation; skipping them is exact.
    if (w.length() > c.trunc()) continue;
    for (const auto& [v, p] : phi(w).terms()) out.add_term(v, q * p);
  }
  return out;
}

Series modified_compose(const Series& c, const Series& d) {
  require_same_trunc(c, d);
  return mixed_compose(c, SeriesPair(Series::one(d.trunc()), d));
}

Series series_compose(const Series& c, const Series& d) {
  require_same_trunc(c, d);
  return mixed_compose(c, SeriesPair(Series::zero(d.trunc()), d));
}

SeriesPair group_compose(const SeriesPair& c, const SeriesPair& d) {
  require_same_trunc(c, d);
  Series base = mixed_compose(c.left, d);
  return SeriesPair(shuffle(base, d.left), shuffle(base, d.right) + mixed_compose(c.right, d));
}

SeriesPair group_inverse_fixed_point(const SeriesPair& c) {
  if (!c.in_group()) throw_precondition("pair with proper left component is not in the group");
  const int n = c.trunc();
  const SeriesPair id = SeriesPair::identity(n);
  SeriesPair e = id;
  // Each application of S_R contracts the ultrametric, pinning one more
  // degree; n+1 applications fix every coefficient up to degree n.
  for (int it = 0; it < n + 2; ++it) {
    SeriesPair next(shuffle_inverse(mixed_compose(c.left, e)),
                    -shuffle(e.left, mixed_compose(c.right, e)));
    if (next == e) break;
    e = std::move(next);
  }
  if (group_compose(c, e) != id || group_compose(e, c) != id)
    throw Error(ErrorCode::PropertyFailure, "fixed point failed the two-sided inverse check");
  return e;
}

Series feedback_product(const Series& c, const Series& d) {
  require_same_trunc(c, d);
  Series w = series_compose(d, c);
  SeriesPair loop = group_inverse_fixed_point(SeriesPair(Series::one(c.trunc()), -w));
  return mixed_compose(c, loop);
}

SeriesPair hopf_normalized(const SeriesPair& c) {
  if (!c.in_group()) throw_precondition("pair with proper left component cannot be normalized");
  return SeriesPair(Rational(1) / c.constant_term_left() * c.left, c.right);
}

}  // namespace fliess
