#pragma once

#include <cstddef>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "plotkin/invariants.hpp"
#include "plotkin/plotkin.hpp"
#include "plotkin/word.hpp"

namespace plotkin {

namespace detail {

inline nlohmann::json optional_json(const std::optional<std::size_t>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

inline nlohmann::json words_json(const std::vector<Word>& words) {
  auto arr = nlohmann::json::array();
  for (const auto& w : words) arr.push_back(w.to_string());
  return arr;
}

inline std::string optional_text(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "-"; }

}  // namespace detail

inline nlohmann::json to_json(const CodeSummary& s) {
  return {{"n", s.n},
          {"M", s.M},
          {"d", detail::optional_json(s.d)},
          {"rank", s.rank},
          {"ker_dim", s.ker_dim},
          {"is_linear", s.is_linear},
          {"contains_zero", s.contains_zero}};
}

inline nlohmann::json to_json(const PlotkinParams& p) {
  return {{"length", p.length},
          {"cardinality", p.cardinality},
          {"distance", detail::optional_json(p.distance)},
          {"rank", p.rank},
          {"ker_dim", p.ker_dim},
          {"linear", p.linear}};
}

inline nlohmann::json to_json(const PlotkinReport& r) {
  return {{"n_in", r.n_in},
          {"predicted", to_json(r.predicted)},
          {"observed", to_json(r.observed)},
          {"theorem_i_holds", r.theorem_i_holds},
          {"theorem_ii_holds", r.theorem_ii_holds},
          {"corollary_i_holds", r.corollary_i_holds},
          {"corollary_ii_holds", r.corollary_ii_holds},
          {"params_hold", r.params_hold},
          {"hypothesis_ok", r.hypothesis_ok},
          {"oracle_agrees", r.oracle_agrees ? nlohmann::json(*r.oracle_agrees) : nlohmann::json(nullptr)},
          {"kernel", detail::words_json(r.kernel)},
          {"span_basis", detail::words_json(r.span_basis)}};
}

/// "[n, k, d] rank=.. ker=.. linear" or "(n, M, d) rank=.. ker=.. nonlinear".
inline std::string summary_line(const CodeSummary& s) {
  std::ostringstream os;
  const std::string d = detail::optional_text(s.d);
  if (s.is_linear)
    os << '[' << s.n << ", " << s.rank << ", " << d << ']';
  else
    os << '(' << s.n << ", " << s.M << ", " << d << ')';
  os << " rank=" << s.rank << " ker=" << s.ker_dim << (s.is_linear ? " linear" : " nonlinear");
  return os.str();
}

inline std::string format_summary(const CodeSummary& s) {
  std::ostringstream os;
  auto row = [&](const char* key, const std::string& value) { os << std::left << std::setw(15) << key << value << '\n'; };
  row("n", std::to_string(s.n));
  row("M", std::to_string(s.M));
  row("d", detail::optional_text(s.d));
  row("rank", std::to_string(s.rank));
  row("ker_dim", std::to_string(s.ker_dim));
  row("linear", s.is_linear ? "yes" : "no");
  row("contains_zero", s.contains_zero ? "yes" : "no (kernel is not a subcode)");
  os << summary_line(s) << '\n';
  return os.str();
}

inline std::string format_report(const PlotkinReport& r) {
  std::ostringstream os;
  auto row3 = [&](const char* key, const std::string& predicted, const std::string& observed) {
    os << std::left << std::setw(16) << key << std::setw(12) << predicted << observed << '\n';
  };
  auto yes_no = [](bool b) { return std::string(b ? "yes" : "no"); };
  os << "n_in            " << r.n_in << '\n';
  row3("", "predicted", "observed");
  row3("length", std::to_string(r.predicted.length), std::to_string(r.observed.length));
  row3("cardinality", std::to_string(r.predicted.cardinality), std::to_string(r.observed.cardinality));
  row3("distance", detail::optional_text(r.predicted.distance), detail::optional_text(r.observed.distance));
  row3("rank", std::to_string(r.predicted.rank), std::to_string(r.observed.rank));
  row3("ker_dim", std::to_string(r.predicted.ker_dim), std::to_string(r.observed.ker_dim));
  row3("linear", yes_no(r.predicted.linear), yes_no(r.observed.linear));

  os << "kernel          {";
  constexpr std::size_t shown = 16;
  for (std::size_t i = 0; i < r.kernel.size() && i < shown; ++i) os << (i ? ", " : "") << r.kernel[i].to_string();
  if (r.kernel.size() > shown) os << ", ... (" << r.kernel.size() << " words)";
  os << "}\n";

  auto flag = [&](const char* key, bool holds) {
    os << std::left << std::setw(16) << key << (holds ? "holds" : "FAILS") << '\n';
  };
  flag("theorem (i)", r.theorem_i_holds);
  flag("theorem (ii)", r.theorem_ii_holds);
  flag("corollary (i)", r.corollary_i_holds);
  flag("corollary (ii)", r.corollary_ii_holds);
  flag("parameters", r.params_hold);
  if (r.oracle_agrees) os << "oracle          " << (*r.oracle_agrees ? "agrees" : "DISAGREES") << '\n';
  os << "hypothesis      "
     << (r.hypothesis_ok ? "zero word in both inputs" : "zero word missing from an input; flags are informational")
     << '\n';
  os << "result          " << (r.passed() ? "PASS" : "FAIL") << '\n';
  return os.str();
}

}  // namespace plotkin
