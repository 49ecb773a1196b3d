#pragma once

// Text formats. A code file holds one codeword per line as a string over
// {0, 1}, leftmost character = coordinate 0. Lines starting with '#' are
// comments and blank lines are ignored. A generator file has the same
// layout, but its lines are generator rows and the code is their row space.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "plotkin/code.hpp"
#include "plotkin/error.hpp"
#include "plotkin/gf2.hpp"
#include "plotkin/word.hpp"

namespace plotkin {

class parse_error : public code_error {
 public:
  parse_error(std::size_t line, const std::string& what)
      : code_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

struct ParsedCode {
  Code code;
  std::vector<std::string> warnings;
};

/// The non-comment lines of a code or generator file, as words.
inline std::vector<Word> parse_word_lines(std::string_view text) {
  std::vector<Word> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (line.empty() || line.front() == '#') continue;
    try {
      Word w = Word::from_string(line);
      if (!rows.empty() && w.length() != rows.front().length())
        throw parse_error(line_no, "length " + std::to_string(w.length()) + " differs from the first codeword's " +
                                       std::to_string(rows.front().length()));
      rows.push_back(std::move(w));
    } catch (const parse_error&) {
      throw;
    } catch (const code_error& e) {
      throw parse_error(line_no, e.what());
    }
    if (rows.back().length() > default_max_length)
      throw parse_error(line_no, "word length exceeds the limit of " + std::to_string(default_max_length));
  }
  if (rows.empty()) throw parse_error(line_no, "no codewords");
  return rows;
}

inline ParsedCode parse_code_file(std::string_view text) {
  std::vector<Word> rows = parse_word_lines(text);
  const std::size_t listed = rows.size();
  Code code = Code::from_words(std::move(rows));
  std::vector<std::string> warnings;
  if (code.size() != listed)
    warnings.push_back(std::to_string(listed - code.size()) + " duplicate codeword line(s) ignored");
  return ParsedCode{std::move(code), std::move(warnings)};
}

inline ParsedCode parse_gen_file(std::string_view text) {
  std::vector<Word> rows = parse_word_lines(text);
  const Gf2Basis basis = rref(rows);
  std::vector<std::string> warnings;
  if (basis.dim() != rows.size())
    warnings.push_back("generator rows are linearly dependent: " + std::to_string(rows.size()) + " rows span dimension " +
                       std::to_string(basis.dim()));
  return ParsedCode{span_enumerate(basis), std::move(warnings)};
}

/// Canonical form: a one-line header, then the words in lexicographic order.
inline std::string write_code_file(const Code& code) {
  std::string out = "# n=" + std::to_string(code.length()) + " M=" + std::to_string(code.size()) + "\n";
  out.reserve(out.size() + code.size() * (code.length() + 1));
  for (const auto& w : code) {
    out += w.to_string();
    out += '\n';
  }
  return out;
}

/// Basis rows in RREF order. An empty basis has no rows to write, so the
/// zero word stands in for it; it spans the same (zero) space.
inline std::string write_gen_file(const Gf2Basis& basis) {
  std::string out = "# n=" + std::to_string(basis.length()) + " dim=" + std::to_string(basis.dim()) + "\n";
  if (basis.dim() == 0) return out + Word(basis.length()).to_string() + "\n";
  for (const auto& row : basis.rows()) {
    out += row.to_string();
    out += '\n';
  }
  return out;
}

inline std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw code_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw code_error("cannot write " + path.string());
  out << text;
  if (!out) throw code_error("write failed: " + path.string());
}

/// Files ending in ".gen" are generator files; anything else is a code file.
inline ParsedCode load_code(const std::filesystem::path& path) {
  const std::string text = read_text_file(path);
  try {
    return path.extension() == ".gen" ? parse_gen_file(text) : parse_code_file(text);
  } catch (const code_error& e) {
    throw code_error(path.string() + ": " + e.what());
  }
}

}  // namespace plotkin
