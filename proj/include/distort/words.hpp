#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "distort/bigint.hpp"

namespace distort::words {

// One parsed token of a generator word: lowercase base letter plus a signed
// exponent (uppercase input letters are folded into the exponent sign).
struct Letter {
  char base;
  Int exponent;
};

inline bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// Grammar: whitespace-separated tokens `g` or `g^k`, g a letter of
// `alphabet` (uppercase means inverse), k a signed decimal integer.
inline std::vector<Letter> parse(std::string_view text, std::string_view alphabet) {
  std::vector<Letter> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    std::string_view tok = text.substr(pos, end - pos);
    pos = end;

    char head = tok[0];
    char base = static_cast<char>(std::tolower(static_cast<unsigned char>(head)));
    bool inverted = std::isupper(static_cast<unsigned char>(head));
    if (alphabet.find(base) == std::string_view::npos)
      throw std::invalid_argument("unknown generator in token '" + std::string(tok) + "'");

    Int exp = 1;
    if (tok.size() > 1) {
      if (tok[1] != '^' || tok.size() == 2 || !is_integer_literal(tok.substr(2)))
        throw std::invalid_argument("malformed token '" + std::string(tok) +
                                    "' (expected g or g^k)");
      exp = Int(std::string(tok.substr(2)));
    }
    if (inverted) exp = -exp;
    if (exp != 0) out.push_back({base, exp});
  }
  return out;
}

}  // namespace distort::words
