#include "tc/bar.hpp"

#include <cctype>

namespace tc {

BarChain<Dihedral> alpha_cycle(int i) { return power_cycle(Dihedral::x(), i); }
BarChain<Dihedral> beta_cycle(int i) { return power_cycle(Dihedral::yx(), i); }

BarChain<Dihedral> gamma_cycle(int i) {
  // In degree 0 the two classes coincide and the sum would vanish.
  if (i < 1) throw std::invalid_argument("gamma_cycle: degree must be >= 1");
  return alpha_cycle(i) + beta_cycle(i);
}

BarChain<FreeWord> alpha_cycle_free(int i) {
  return power_cycle(FreeWord::generator(letter_a), i);
}

BarChain<FreeWord> beta_cycle_free(int i) {
  return power_cycle(FreeWord::generator(letter_b), i);
}

namespace {

// Splits "[e|e|e] + [e|e|e]" into tuple texts, then entries.
template <class G, class ParseEntry>
BarChain<G> parse_chain(std::string_view text, int degree, ParseEntry&& entry) {
  BarChain<G> out(degree);
  std::size_t i = 0;
  auto fail = [&](const char* msg) {
    throw std::invalid_argument(std::string("parse chain: ") + msg + " in \"" +
                                std::string(text) + "\"");
  };
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (i < text.size() && text[i] == '0' && i + 1 == text.size()) return out;
  bool first = true;
  while (true) {
    skip_space();
    if (i >= text.size()) {
      if (first) fail("empty input");
      break;
    }
    if (!first) {
      if (text[i] != '+') fail("expected '+'");
      ++i;
      skip_space();
    }
    first = false;
    if (i >= text.size() || text[i] != '[') fail("expected '['");
    std::size_t close = text.find(']', i);
    if (close == std::string_view::npos) fail("missing ']'");
    std::string_view body = text.substr(i + 1, close - i - 1);
    i = close + 1;
    std::vector<G> tuple;
    std::size_t start = 0;
    for (std::size_t j = 0; j <= body.size(); ++j) {
      if (j == body.size() || body[j] == '|') {
        tuple.push_back(entry(body.substr(start, j - start)));
        start = j + 1;
      }
    }
    if (static_cast<int>(tuple.size()) != degree) fail("tuple length != degree");
    out.toggle(tuple);
  }
  return out;
}

std::string_view trim(std::string_view s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string_view::npos) return {};
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

BarChain<Dihedral> parse_chain_dihedral(std::string_view text, int degree) {
  return parse_chain<Dihedral>(text, degree,
                               [](std::string_view e) { return parse_dihedral(trim(e)); });
}

BarChain<Pair<Dihedral>> parse_chain_dihedral_pairs(std::string_view text, int degree) {
  return parse_chain<Pair<Dihedral>>(text, degree, [&](std::string_view e) {
    e = trim(e);
    if (e.size() < 2 || e.front() != '(' || e.back() != ')')
      throw std::invalid_argument("parse chain: expected \"(w,w)\" entry in \"" +
                                  std::string(text) + "\"");
    e = e.substr(1, e.size() - 2);
    std::size_t comma = e.find(',');
    if (comma == std::string_view::npos)
      throw std::invalid_argument("parse chain: missing ',' in pair entry");
    return Pair<Dihedral>{parse_dihedral(trim(e.substr(0, comma))),
                          parse_dihedral(trim(e.substr(comma + 1)))};
  });
}

}  // namespace tc
