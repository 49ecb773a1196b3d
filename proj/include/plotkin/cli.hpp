#pragma once

// Command-line front end. Exit codes: 0 success, 1 a verification clause
// failed under its hypothesis (or the oracle disagreed), 2 usage or input
// errors.

#include <cstdint>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "plotkin/code.hpp"
#include "plotkin/corpus.hpp"
#include "plotkin/families.hpp"
#include "plotkin/gf2.hpp"
#include "plotkin/invariants.hpp"
#include "plotkin/io.hpp"
#include "plotkin/plotkin.hpp"
#include "plotkin/report.hpp"

namespace plotkin::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_violation = 1;
inline constexpr int exit_usage = 2;

inline int exit_code_for(const PlotkinReport& report) { return report.passed() ? exit_ok : exit_violation; }

/// Writes <stem>.C1.code, <stem>.C2.code and <stem>.report.json under `dir`.
inline std::filesystem::path write_counterexample_bundle(const std::filesystem::path& dir, const std::string& stem,
                                                         const Code& first, const Code& second,
                                                         const PlotkinReport& report) {
  std::filesystem::create_directories(dir);
  write_text_file(dir / (stem + ".C1.code"), write_code_file(first));
  write_text_file(dir / (stem + ".C2.code"), write_code_file(second));
  auto doc = to_json(report);
  doc["first_failure"] = report.first_failure().value_or("");
  write_text_file(dir / (stem + ".report.json"), doc.dump(2) + "\n");
  return dir;
}

namespace detail {

inline Code load(const std::string& path, std::ostream& err) {
  ParsedCode parsed = load_code(path);
  for (const auto& w : parsed.warnings) err << "warning: " << path << ": " << w << '\n';
  return std::move(parsed.code);
}

inline void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty() || path == "-")
    out << text;
  else
    write_text_file(path, text);
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Plotkin (u|u+v) construction: build codes, measure rank, kernel and distance, verify additivity"};
  app.name("uuv");
  app.require_subcommand(1);

  std::string file_a, file_b, output, basis_output, bundle_dir = "counterexample", kind, gen_file;
  bool as_json = false, oracle = false, include_zero = false, exclude_zero = false;
  std::vector<std::uint64_t> params;
  std::size_t rn = 0;
  std::uint64_t rm = 0, seed = 1;
  CorpusOptions corpus_opt;

  auto* info = app.add_subcommand("info", "Print n, M, d, rank, kernel dimension and linearity");
  info->add_option("file", file_a, "Code file (.gen for a generator matrix)")->required();
  info->add_flag("--json", as_json, "Emit one JSON object");

  auto* construct = app.add_subcommand("plotkin", "Write {(u|u+v) : u in A, v in B}");
  construct->add_option("fileA", file_a)->required();
  construct->add_option("fileB", file_b)->required();
  construct->add_option("-o,--output", output, "Output code file (default stdout)");

  auto* kern = app.add_subcommand("kernel", "Write the kernel {x : C + x = C}");
  kern->add_option("file", file_a)->required();
  kern->add_option("-o,--output", output, "Output code file (default stdout)");

  auto* span = app.add_subcommand("span", "Write the RREF basis of the span and, within the cap, its words");
  span->add_option("file", file_a)->required();
  span->add_option("-o,--output", output, "Output code file for the enumerated span");
  span->add_option("--basis", basis_output, "Output generator file for the basis (default stdout)");

  auto* verify = app.add_subcommand("verify", "Check kernel/span factorization and parameter formulas for a pair");
  verify->add_option("fileA", file_a)->required();
  verify->add_option("fileB", file_b)->required();
  verify->add_flag("--oracle", oracle, "Cross-check with brute-force kernel and span");
  verify->add_flag("--json", as_json, "Emit the report as one JSON object");
  verify->add_option("--bundle-dir", bundle_dir, "Directory for counterexample files")->capture_default_str();

  auto* family = app.add_subcommand("family", "Emit a known code: repetition n | universe n | parity n | reed_muller r m | "
                                              "from_generator --gen F | random n M seed");
  family->add_option("kind", kind)->required();
  family->add_option("params", params);
  family->add_option("--gen", gen_file, "Generator file for from_generator");
  family->add_flag("--no-zero", exclude_zero, "random: exclude the zero word");
  family->add_option("-o,--output", output, "Output code file (default stdout)");

  auto* random = app.add_subcommand("random", "Emit a seeded random code");
  random->add_option("-n", rn, "Length")->required();
  random->add_option("-M", rm, "Number of codewords")->required();
  random->add_option("--seed", seed, "Seed")->required();
  random->add_flag("--zero", include_zero, "Include the zero word");
  random->add_option("-o,--output", output, "Output code file (default stdout)");

  auto* corpus = app.add_subcommand("corpus", "Verify seeded random pairs with the zero word in both codes");
  corpus->add_option("--pairs", corpus_opt.pairs, "Number of pairs")->required();
  corpus->add_option("--seed", corpus_opt.seed, "Seed")->required();
  corpus->add_option("--max-n", corpus_opt.max_n, "Largest input length")->required();
  corpus->add_option("--max-size", corpus_opt.max_size, "Largest input cardinality")->capture_default_str();
  corpus->add_flag("--oracle", oracle, "Cross-check every pair with the brute-force routines");
  corpus->add_flag("--json", as_json, "One JSON report per line instead of the table");
  corpus->add_option("--bundle-dir", bundle_dir, "Directory for counterexample files")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return exit_usage;
  }

  try {
    if (info->parsed()) {
      const Code code = detail::load(file_a, err);
      const CodeSummary s = summarize(code);
      if (as_json)
        out << to_json(s).dump() << '\n';
      else
        out << format_summary(s);
      return exit_ok;
    }

    if (construct->parsed()) {
      const Code a = detail::load(file_a, err);
      const Code b = detail::load(file_b, err);
      detail::emit(write_code_file(plotkin_construct(a, b)), output, out);
      return exit_ok;
    }

    if (kern->parsed()) {
      const Code code = detail::load(file_a, err);
      detail::emit(write_code_file(kernel(code).words), output, out);
      return exit_ok;
    }

    if (span->parsed()) {
      const Code code = detail::load(file_a, err);
      const Gf2Basis basis = rref(code);
      detail::emit(write_gen_file(basis), basis_output, out);
      if (!output.empty()) {
        if (basis.dim() <= enumeration_cap())
          detail::emit(write_code_file(span_enumerate(basis)), output, out);
        else
          err << "note: span has dimension " << basis.dim() << ", over the enumeration cap; words not written\n";
      }
      return exit_ok;
    }

    if (verify->parsed()) {
      const Code a = detail::load(file_a, err);
      const Code b = detail::load(file_b, err);
      const PlotkinReport report = verify_plotkin(a, b, VerifyOptions{oracle});
      if (as_json)
        out << to_json(report).dump() << '\n';
      else
        out << format_report(report);
      const int code = exit_code_for(report);
      if (code != exit_ok) {
        err << "first failing clause: " << report.first_failure().value_or("unknown") << '\n';
        write_counterexample_bundle(bundle_dir, "verify", a, b, report);
        err << "counterexample written to " << bundle_dir << '\n';
      }
      return code;
    }

    if (family->parsed()) {
      const auto parsed_kind = parse_family_kind(kind);
      if (!parsed_kind) {
        err << "unknown family '" << kind << "'\n" << family->help();
        return exit_usage;
      }
      FamilySpec spec{*parsed_kind, params, {}, !exclude_zero};
      if (spec.kind == FamilyKind::from_generator) {
        if (gen_file.empty()) {
          err << "from_generator needs --gen <file>\n";
          return exit_usage;
        }
        spec.generator_rows = parse_word_lines(read_text_file(gen_file));
      }
      detail::emit(write_code_file(make_family(spec)), output, out);
      return exit_ok;
    }

    if (random->parsed()) {
      detail::emit(write_code_file(random_code(rn, rm, seed, include_zero)), output, out);
      return exit_ok;
    }

    if (corpus->parsed()) {
      const auto pairs = random_corpus(corpus_opt);
      std::size_t passed = 0, failed = 0;
      if (!as_json)
        out << std::right << std::setw(5) << "pair" << std::setw(4) << "n" << std::setw(6) << "|C1|" << std::setw(6)
            << "|C2|" << std::setw(7) << "|C|" << std::setw(6) << "rank" << std::setw(5) << "ker" << std::setw(4) << "d"
            << "  result\n";
      for (const auto& pair : pairs) {
        const PlotkinReport r = verify_plotkin(pair.first, pair.second, VerifyOptions{oracle});
        if (r.passed())
          ++passed;
        else {
          ++failed;
          write_counterexample_bundle(bundle_dir, "pair-" + std::to_string(pair.index), pair.first, pair.second, r);
        }
        if (as_json) {
          auto doc = to_json(r);
          doc["pair"] = pair.index;
          doc["seeds"] = {pair.first_seed, pair.second_seed};
          out << doc.dump() << '\n';
        } else {
          out << std::right << std::setw(5) << pair.index << std::setw(4) << pair.first.length() << std::setw(6)
              << pair.first.size() << std::setw(6) << pair.second.size() << std::setw(7) << r.observed.cardinality
              << std::setw(6) << r.observed.rank << std::setw(5) << r.observed.ker_dim << std::setw(4)
              << (r.observed.distance ? std::to_string(*r.observed.distance) : "-") << "  "
              << (r.passed() ? "pass" : "FAIL: " + r.first_failure().value_or("")) << '\n';
        }
      }
      if (!as_json) out << "pairs=" << pairs.size() << " passed=" << passed << " failed=" << failed << '\n';
      if (failed != 0) err << failed << " counterexample(s) written to " << bundle_dir << '\n';
      return failed == 0 ? exit_ok : exit_violation;
    }
  } catch (const code_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace plotkin::cli
