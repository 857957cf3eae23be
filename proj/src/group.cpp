#include "tc/group.hpp"

#include <cctype>
#include <cstdlib>

namespace tc {

Dihedral iso_to_dihedral(const FreeWord& w) {
  Dihedral out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    int l = w.letter(i);
    if (l == letter_a)
      out = out * Dihedral::x();
    else if (l == letter_b)
      out = out * Dihedral::yx();
    else
      throw std::invalid_argument("iso_to_dihedral: word not over {a, b}");
  }
  return out;
}

FreeWord project_last_generator(const FreeWord& w, int g) {
  if (g < 1 || g > FreeWord::max_alphabet)
    throw std::invalid_argument("project_last_generator: bad alphabet size");
  std::string kept;
  for (std::size_t i = 0; i < w.length(); ++i) {
    int l = w.letter(i);
    if (l >= g)
      throw std::invalid_argument("project_last_generator: letter outside alphabet");
    if (l != g - 1) kept.push_back(static_cast<char>(l));
  }
  return FreeWord::reduced(kept);
}

FreeWord project_to_y(const Dihedral& d) {
  return (d.k % 2) ? FreeWord::generator(letter_y) : FreeWord();
}

FreeWord project_to_z(const Dihedral& d) {
  return ((d.k + d.e) % 2) ? FreeWord::generator(letter_z) : FreeWord();
}

Dihedral reduce_mod(const Dihedral& d, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("reduce_mod: modulus must be >= 1");
  std::int64_t k = d.k % m;
  if (k < 0) k += m;
  return {k, d.e};
}

std::string to_string(const FreeWord& w) {
  if (w.is_identity()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i)
    out.push_back(static_cast<char>('a' + w.letter(i)));
  return out;
}

std::string to_string(const Dihedral& d) {
  if (d.is_identity()) return "1";
  std::string out;
  if (d.k == 1)
    out = "y";
  else if (d.k != 0)
    out = "y^" + std::to_string(d.k);
  if (d.e) out += "x";
  return out;
}

namespace {

// Shared lexer: letters with optional ^<int> exponents, optional
// whitespace, "1" as the identity.  Calls emit(letter, exponent).
template <class Emit>
void lex_word(std::string_view text, Emit&& emit) {
  std::size_t i = 0;
  auto fail = [&](const char* msg) {
    throw std::invalid_argument(std::string("parse word: ") + msg + " at position " +
                                std::to_string(i) + " in \"" + std::string(text) + "\"");
  };
  bool any = false;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c == '1') {
      ++i;
      any = true;
      continue;
    }
    if (c < 'a' || c > 'z') fail("unexpected character");
    int letter = c - 'a';
    ++i;
    std::int64_t exp = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      bool neg = false;
      if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
      }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        fail("missing exponent digits");
      std::int64_t v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        if (v > (std::int64_t{1} << 40)) fail("exponent too large");
        ++i;
      }
      exp = neg ? -v : v;
    }
    emit(letter, exp);
    any = true;
  }
  if (!any) fail("empty word");
}

}  // namespace

FreeWord parse_free_word(std::string_view text, int alphabet) {
  std::string letters;
  lex_word(text, [&](int letter, std::int64_t exp) {
    if (letter >= alphabet)
      throw std::invalid_argument("parse_free_word: letter outside alphabet in \"" +
                                  std::string(text) + "\"");
    if (exp % 2) letters.push_back(static_cast<char>(letter));  // involutions
  });
  return FreeWord::reduced(letters);
}

Dihedral parse_dihedral(std::string_view text) {
  Dihedral out;
  lex_word(text, [&](int letter, std::int64_t exp) {
    if (letter == 'x' - 'a')
      out = out * Dihedral{0, static_cast<std::int32_t>(((exp % 2) + 2) % 2)};
    else if (letter == letter_y)
      out = out * Dihedral{exp, 0};
    else
      throw std::invalid_argument("parse_dihedral: word not over {x, y} in \"" +
                                  std::string(text) + "\"");
  });
  return out;
}

}  // namespace tc
