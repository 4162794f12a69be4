#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "fliess/hopf.hpp"
#include "fliess/simulate.hpp"

namespace fliess {

// Text grammar: sum of terms `[+|-] [q '*'] word` with q a rational literal
// (`p` or `p/q`) and word either `e` (the empty word) or a juxtaposition of
// x0/x1, e.g. `1 - x1 + 3*x1x1`. Words longer than trunc are rejected.
Series parse_series(std::string_view text, int trunc);
std::string format_series(const Series& c);

std::string format_pair(const SeriesPair& p);  // "(<series>, <series>)"

// Monomials as `b[x0x1]*a[e]^2`, the unit as `1`, elements as signed sums in
// canonical term order (bit-stable), e.g. `-a[x0] + b[x0]*a[e]`.
std::string format_hopf(const HopfElement& e);
HopfElement parse_hopf(std::string_view text);

// Tensor terms as `[q*]<monomial> (x) <monomial>`.
std::string format_tensor(const TensorSum& t);
TensorSum parse_tensor(std::string_view text);

// Word pair terms as `[m*](<word>, <word>)`.
std::string format_word_tensor(const WordTensorSum& t);

// CLI coordinate syntax `a:<word>` / `b:<word>`, e.g. "a:x0", "b:e".
CoordinateMap parse_coordinate(std::string_view text);
std::string format_coordinate(const CoordinateMap& g);

// JSON forms. Series: {"trunc": N, "terms": [{"word": "x0x1", "coeff":
// "3/1"}, ...]} in canonical word order; pairs: {"left": ..., "right": ...};
// signals: {"breakpoints": ["0", "1/2", ...], "values": ["1", ...]}.
nlohmann::json series_to_json(const Series& c);
Series series_from_json(const nlohmann::json& j);
nlohmann::json pair_to_json(const SeriesPair& p);
SeriesPair pair_from_json(const nlohmann::json& j);
nlohmann::json signal_to_json(const PiecewiseConstantSignal& u);
PiecewiseConstantSignal signal_from_json(const nlohmann::json& j);

}  // namespace fliess
