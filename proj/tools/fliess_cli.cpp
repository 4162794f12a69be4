#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fliess/acceptance.hpp"
#include "fliess/errors.hpp"
#include "fliess/hopf.hpp"
#include "fliess/linearize.hpp"
#include "fliess/prelie.hpp"
#include "fliess/simulate.hpp"
#include "fliess/text_io.hpp"

namespace {

using nlohmann::json;
using namespace fliess;

struct Emitter {
  bool as_json = false;
  int exit_code = 0;

  void emit(const json& result, const std::string& text, bool ok = true) {
    if (as_json) {
      json out = {{"ok", ok}, {"result", result}, {"diagnostics", json::array()}};
      std::cout << out.dump() << "\n";
    } else {
      std::cout << text << "\n";
    }
    if (!ok) exit_code = 4;
  }
};

std::string load_inline_or_file(const std::string& value) {
  if (!value.empty() && value.front() == '@') {
    std::ifstream in(value.substr(1));
    if (!in) throw_parse("cannot open file '" + value.substr(1) + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  return value;
}

PiecewiseConstantSignal parse_signal_arg(const std::string& value) {
  json j;
  try {
    j = json::parse(load_inline_or_file(value));
  } catch (const json::exception& ex) {
    throw_parse(std::string("signal JSON: ") + ex.what());
  }
  return signal_from_json(j);
}

json series_result(const Series& s) { return series_to_json(s); }

json pair_result(const SeriesPair& p) { return pair_to_json(p); }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computer algebra for the affine SISO feedback transformation group on "
               "truncated Chen-Fliess series"};
  app.require_subcommand(1);

  int trunc = 6;
  Emitter out;
  app.add_option("--trunc", trunc, "truncation degree for parsed operands")
      ->capture_default_str();
  app.add_flag("--json", out.as_json, "emit results as JSON");

  std::string a1, a2, a3, a4, a5, a6;
  std::string coord = "b:e", which = "full", right_kind = "b", method = "both";
  std::string signal_text, at_text, threshold_text;
  int max_degree = 9, refinement = 256;

  auto* sc_shuffle = app.add_subcommand("shuffle", "shuffle product of two series");
  sc_shuffle->add_option("p", a1)->required();
  sc_shuffle->add_option("q", a2)->required();
  sc_shuffle->callback([&] {
    Series r = shuffle(parse_series(a1, trunc), parse_series(a2, trunc));
    out.emit(series_result(r), format_series(r));
  });

  auto* sc_shinv = app.add_subcommand("shuffle-inv", "inverse in the shuffle group");
  sc_shinv->add_option("c", a1)->required();
  sc_shinv->callback([&] {
    Series r = shuffle_inverse(parse_series(a1, trunc));
    out.emit(series_result(r), format_series(r));
  });

  auto* sc_unsh = app.add_subcommand("unshuffle", "unshuffle coproduct of a word");
  sc_unsh->add_option("word", a1)->required();
  sc_unsh->callback([&] {
    WordTensorSum t = unshuffle(Word::parse(a1));
    json terms = json::array();
    for (const auto& [lr, m] : t.terms())
      terms.push_back({{"left", lr.first.str()}, {"right", lr.second.str()}, {"mult", m}});
    out.emit(terms, format_word_tensor(t));
  });

  auto* sc_mixed = app.add_subcommand("mixed-compose", "c ∘̃ (dL, dR)");
  sc_mixed->add_option("c", a1)->required();
  sc_mixed->add_option("dL", a2)->required();
  sc_mixed->add_option("dR", a3)->required();
  sc_mixed->callback([&] {
    Series r = mixed_compose(parse_series(a1, trunc),
                             SeriesPair(parse_series(a2, trunc), parse_series(a3, trunc)));
    out.emit(series_result(r), format_series(r));
  });

  auto* sc_compose = app.add_subcommand("compose", "cascade composition c ∘ d");
  sc_compose->add_option("c", a1)->required();
  sc_compose->add_option("d", a2)->required();
  sc_compose->callback([&] {
    Series r = series_compose(parse_series(a1, trunc), parse_series(a2, trunc));
    out.emit(series_result(r), format_series(r));
  });

  auto* sc_group = app.add_subcommand("group-compose", "(cL,cR) ∘ (dL,dR)");
  sc_group->add_option("cL", a1)->required();
  sc_group->add_option("cR", a2)->required();
  sc_group->add_option("dL", a3)->required();
  sc_group->add_option("dR", a4)->required();
  sc_group->callback([&] {
    SeriesPair r = group_compose(SeriesPair(parse_series(a1, trunc), parse_series(a2, trunc)),
                                 SeriesPair(parse_series(a3, trunc), parse_series(a4, trunc)));
    out.emit(pair_result(r), format_pair(r));
  });

  auto* sc_invert = app.add_subcommand("invert", "group inverse of (cL, cR)");
  sc_invert->add_option("cL", a1)->required();
  sc_invert->add_option("cR", a2)->required();
  sc_invert->add_option("--method", method, "fixed-point | antipode | both")
      ->capture_default_str();
  sc_invert->callback([&] {
    SeriesPair c(parse_series(a1, trunc), parse_series(a2, trunc));
    if (method == "fixed-point") {
      SeriesPair r = group_inverse_fixed_point(c);
      out.emit(pair_result(r), format_pair(r));
    } else if (method == "antipode") {
      SeriesPair r = inverse_via_antipode(c);
      out.emit(pair_result(r), format_pair(r));
    } else if (method == "both") {
      SeriesPair fp = group_inverse_fixed_point(c);
      SeriesPair ap = inverse_via_antipode(c);
      const bool match = fp == ap;
      json result = {{"fixed_point", pair_result(fp)},
                     {"antipode", pair_result(ap)},
                     {"match", match}};
      std::string text = "fixed-point: " + format_pair(fp) + "\nantipode:    " + format_pair(ap) +
                         (match ? "\nMATCH" : "\nMISMATCH");
      out.emit(result, text, match);
    } else {
      throw_parse("unknown --method '" + method + "'");
    }
  });

  auto* sc_feedback = app.add_subcommand("feedback", "closed-loop feedback product c @ d");
  sc_feedback->add_option("c", a1)->required();
  sc_feedback->add_option("d", a2)->required();
  sc_feedback->callback([&] {
    Series r = feedback_product(parse_series(a1, trunc), parse_series(a2, trunc));
    out.emit(series_result(r), format_series(r));
  });

  auto* sc_antipode = app.add_subcommand("antipode", "antipode of a coordinate map");
  sc_antipode->add_option("--coord", coord, "a:<word> or b:<word>")->required();
  sc_antipode->callback([&] {
    HopfElement s = antipode(parse_coordinate(coord));
    out.emit(format_hopf(s), format_hopf(s));
  });

  auto* sc_coproduct = app.add_subcommand("coproduct", "coproducts of a coordinate map");
  sc_coproduct->add_option("--coord", coord, "a:<word> or b:<word>")->required();
  sc_coproduct->add_option("--which", which, "shuffle | tilde | full | reduced")
      ->capture_default_str();
  sc_coproduct->add_option("--right", right_kind, "right-leg kind for --which=shuffle")
      ->capture_default_str();
  sc_coproduct->callback([&] {
    CoordinateMap h = parse_coordinate(coord);
    TensorSum t;
    if (which == "shuffle") {
      if (right_kind != "a" && right_kind != "b") throw_parse("--right must be 'a' or 'b'");
      t = shuffle_coproduct(h, right_kind == "b" ? CoordKind::B : CoordKind::A);
    } else if (which == "tilde") {
      t = tilde_coproduct(h);
    } else if (which == "full") {
      t = full_coproduct(h);
    } else if (which == "reduced") {
      t = reduced_coproduct(h);
    } else {
      throw_parse("unknown --which '" + which + "'");
    }
    out.emit(format_tensor(t), format_tensor(t));
  });

  auto* sc_hilbert = app.add_subcommand("hilbert", "graded dimensions of V and H");
  sc_hilbert->add_option("--max-degree", max_degree)->capture_default_str();
  sc_hilbert->callback([&] {
    auto rows = hilbert_dimensions(max_degree);
    json jrows = json::array();
    std::string text = "k\tp_a\tp_b\tp_k\tdim H_a\tdim H_b\tdim H";
    for (const auto& r : rows) {
      jrows.push_back({{"k", r.degree},
                       {"p_a", r.p_a},
                       {"p_b", r.p_b},
                       {"p_a_closed", r.p_a_closed},
                       {"p_b_closed", r.p_b_closed},
                       {"dim_h_a", r.dim_h_a},
                       {"dim_h_b", r.dim_h_b},
                       {"dim_h", r.dim_h}});
      text += "\n" + std::to_string(r.degree) + "\t" + std::to_string(r.p_a) + "\t" +
              std::to_string(r.p_b) + "\t" + std::to_string(r.p_a + r.p_b) + "\t" +
              std::to_string(r.dim_h_a) + "\t" + std::to_string(r.dim_h_b) + "\t" +
              std::to_string(r.dim_h);
    }
    out.emit(jrows, text);
  });

  auto* sc_reldeg = app.add_subcommand("reldeg", "relative degree of a series");
  sc_reldeg->add_option("c", a1)->required();
  sc_reldeg->callback([&] {
    auto rd = relative_degree(parse_series(a1, trunc));
    if (rd.r) {
      out.emit({{"defined", true}, {"r", *rd.r}}, "r = " + std::to_string(*rd.r));
    } else {
      const char* why = rd.diagnostic == RelDegDiagnostic::ZeroForcedPart
                            ? "forced part is zero (every r qualifies)"
                            : "linear word missing from the support";
      out.emit({{"defined", false}, {"diagnostic", why}}, std::string("undefined: ") + why);
    }
  });

  auto* sc_linearize = app.add_subcommand("linearize", "coordinate-free feedback linearization");
  sc_linearize->add_option("c", a1)->required();
  sc_linearize->callback([&] {
    Series c = parse_series(a1, trunc);
    SeriesPair e = linearizing_element(c);
    SeriesPair inv = group_inverse_fixed_point(e);
    Series nf = normal_form(decompose(c));
    json result = {{"e_delta", pair_result(e)},
                   {"inverse", pair_result(inv)},
                   {"normal_form", series_result(nf)}};
    out.emit(result, "e_delta: " + format_pair(e) + "\ninverse: " + format_pair(inv) +
                         "\nnormal-form: " + format_series(nf));
  });

  auto* sc_bracket = app.add_subcommand("bracket", "Lie bracket of two tangent vectors");
  sc_bracket->add_option("v1L", a1)->required();
  sc_bracket->add_option("v1R", a2)->required();
  sc_bracket->add_option("v2L", a3)->required();
  sc_bracket->add_option("v2R", a4)->required();
  sc_bracket->callback([&] {
    TangentVector r = lie_bracket(TangentVector(parse_series(a1, trunc), parse_series(a2, trunc)),
                                  TangentVector(parse_series(a3, trunc), parse_series(a4, trunc)));
    json result = {{"left", series_result(r.left)}, {"right", series_result(r.right)}};
    out.emit(result, "(" + format_series(r.left) + ", " + format_series(r.right) + ")");
  });

  auto* sc_prelie = app.add_subcommand("prelie-check", "right pre-Lie identity on a triple");
  sc_prelie->add_option("v1L", a1)->required();
  sc_prelie->add_option("v1R", a2)->required();
  sc_prelie->add_option("v2L", a3)->required();
  sc_prelie->add_option("v2R", a4)->required();
  sc_prelie->add_option("v3L", a5)->required();
  sc_prelie->add_option("v3R", a6)->required();
  sc_prelie->callback([&] {
    bool holds = prelie_check(TangentVector(parse_series(a1, trunc), parse_series(a2, trunc)),
                              TangentVector(parse_series(a3, trunc), parse_series(a4, trunc)),
                              TangentVector(parse_series(a5, trunc), parse_series(a6, trunc)));
    out.emit(holds, holds ? "true" : "false", holds);
  });

  auto* sc_simulate = app.add_subcommand("simulate", "evaluate a Fliess operator on a signal");
  sc_simulate->add_option("left", a1, "series (or left component with right given)")->required();
  sc_simulate->add_option("right", a2, "right component, making the operand a pair");
  sc_simulate->add_option("--signal", signal_text, "signal JSON (inline or @file)")->required();
  sc_simulate->add_option("--at", at_text, "evaluation time (rational)")->required();
  sc_simulate->callback([&] {
    PiecewiseConstantSignal u = parse_signal_arg(signal_text);
    Rational t = parse_rational(at_text);
    Rational value = a2.empty()
                         ? eval_series(parse_series(a1, trunc), u, t)
                         : eval_pair(SeriesPair(parse_series(a1, trunc), parse_series(a2, trunc)),
                                     u, t);
    out.emit(format_rational(value), format_rational(value));
  });

  auto* sc_oracle = app.add_subcommand("oracle-check", "sampled-composition residual");
  sc_oracle->add_option("c", a1)->required();
  sc_oracle->add_option("dL", a2)->required();
  sc_oracle->add_option("dR", a3)->required();
  sc_oracle->add_option("--signal", signal_text, "signal JSON (inline or @file)")->required();
  sc_oracle->add_option("--at", at_text, "evaluation time (rational)")->required();
  sc_oracle->add_option("--refinement", refinement)->capture_default_str();
  sc_oracle->add_option("--threshold", threshold_text, "fail (exit 4) above this residual");
  sc_oracle->callback([&] {
    Rational residual = oracle_mixed_compose(
        parse_series(a1, trunc),
        SeriesPair(parse_series(a2, trunc), parse_series(a3, trunc)),
        parse_signal_arg(signal_text), parse_rational(at_text), refinement);
    bool ok = threshold_text.empty() || residual <= parse_rational(threshold_text);
    json result = {{"residual", format_rational_frac(residual)}, {"within_threshold", ok}};
    out.emit(result, format_rational(residual), ok);
  });

  auto* sc_check = app.add_subcommand("check", "run the acceptance suite");
  sc_check->callback([&] {
    auto results = run_acceptance_suite();
    json jres = json::array();
    std::string text;
    for (const auto& r : results) {
      jres.push_back({{"index", r.index},
                      {"name", r.name},
                      {"passed", r.passed},
                      {"detail", r.detail},
                      {"seconds", r.seconds}});
      if (!text.empty()) text += "\n";
      text += format_criterion_line(r);
    }
    const bool ok = all_passed(results);
    text += ok ? "\nALL CRITERIA PASSED" : "\nCRITERIA FAILED";
    out.emit(jres, text, ok);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const Error& e) {
    if (out.as_json) {
      json j = {{"ok", false},
                {"result", nullptr},
                {"diagnostics",
                 json::array({{{"code", e.code() == ErrorCode::ParseError        ? "parse_error"
                                        : e.code() == ErrorCode::Precondition   ? "precondition"
                                                                                : "property_failure"},
                               {"message", e.what()}}})}};
      std::cout << j.dump() << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    switch (e.code()) {
      case ErrorCode::ParseError: return 2;
      case ErrorCode::Precondition: return 3;
      case ErrorCode::PropertyFailure: return 4;
    }
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return out.exit_code;
}
