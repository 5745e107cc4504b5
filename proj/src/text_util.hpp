// Copyright 2026 The qlr developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Line-oriented parsing helpers shared by the text formats. All formats
// treat '#' as a comment introducer and ignore blank lines; parse errors
// carry 1-based line numbers.

#ifndef QLR_SRC_TEXT_UTIL_HPP
#define QLR_SRC_TEXT_UTIL_HPP

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qlr/pauli.hpp"

namespace qlr::detail {

// Strips a trailing '#' comment and surrounding whitespace.
inline std::string_view significant_part(std::string_view line) {
  const std::size_t hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front())))
    line.remove_prefix(1);
  while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back())))
    line.remove_suffix(1);
  return line;
}

inline std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] inline void fail_line(std::size_t line_no, const std::string& what) {
  throw ParseError("line " + std::to_string(line_no) + ": " + what);
}

inline double parse_double_token(const std::string& tok, std::size_t line_no) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  const double value = std::strtod(begin, &end);
  if (end != begin + tok.size() || tok.empty())
    fail_line(line_no, "bad coefficient '" + tok + "'");
  if (!std::isfinite(value))
    fail_line(line_no, "coefficient '" + tok + "' is not finite");
  return value;
}

inline long parse_long_token(const std::string& tok, std::size_t line_no,
                             const std::string& what) {
  const char* begin = tok.c_str();
  char* end = nullptr;
  const long value = std::strtol(begin, &end, 10);
  if (tok.empty() || *end != '\0')
    fail_line(line_no, "bad " + what + " '" + tok + "'");
  return value;
}

// Walks the lines of a text blob in order, exposing both raw and
// comment-stripped views with 1-based numbering.
class LineScanner {
 public:
  explicit LineScanner(std::string_view text) : text_(text) {}

  // Advances to the next line (blank or not). Returns false at end.
  bool next_raw() {
    if (pos_ > text_.size()) return false;
    const std::size_t eol = text_.find('\n', pos_);
    raw_ = text_.substr(pos_, eol == std::string_view::npos ? text_.size() - pos_
                                                            : eol - pos_);
    pos_ = eol == std::string_view::npos ? text_.size() + 1 : eol + 1;
    ++line_no_;
    line_ = significant_part(raw_);
    return true;
  }

  // Advances to the next line that carries content. Returns false at end.
  bool next() {
    while (next_raw()) {
      if (!line_.empty()) return true;
    }
    return false;
  }

  std::string_view raw() const { return raw_; }
  std::string_view line() const { return line_; }
  std::size_t line_no() const { return line_no_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::string_view raw_;
  std::string_view line_;
  std::size_t line_no_ = 0;
};

}  // namespace qlr::detail

#endif  // QLR_SRC_TEXT_UTIL_HPP
