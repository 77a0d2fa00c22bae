#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "lpg/lpres.hpp"

namespace lpg {

class LpParseError : public std::runtime_error {
 public:
  LpParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_, column_;
};

/// Parses the .lp text format:
///   gens: a, b;  Q: w, ...;  phi name: g -> w, ...;  R: w, ...;  flags: invariant;
/// Words use *, ^n, ^x or ^(v) for conjugation, [u,v], parentheses and 1; # starts a comment.
LPresentation parse_lp(std::string_view text);
/// Parses a single word over an alphabet.
FreeWord parse_word(std::string_view text, const Alphabet& alphabet);
/// Comma separated list of words.
std::vector<FreeWord> parse_word_list(std::string_view text, const Alphabet& alphabet);

std::string print_lp(const LPresentation& L);

}  // namespace lpg
