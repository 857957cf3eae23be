#include "tc/group_ring.hpp"

namespace tc {

Ring<Dihedral> parse_ring_dihedral(std::string_view text) {
  Ring<Dihedral> out;
  std::size_t start = 0;
  bool any = false;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == '+') {
      std::string_view term = text.substr(start, i - start);
      std::size_t a = term.find_first_not_of(" \t");
      if (a == std::string_view::npos)
        throw std::invalid_argument("parse_ring_dihedral: empty term in \"" +
                                    std::string(text) + "\"");
      std::size_t b = term.find_last_not_of(" \t");
      out.toggle(parse_dihedral(term.substr(a, b - a + 1)));
      any = true;
      start = i + 1;
    }
  }
  if (!any) throw std::invalid_argument("parse_ring_dihedral: empty input");
  return out;
}

}  // namespace tc
