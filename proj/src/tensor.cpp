#include "tc/tensor.hpp"

namespace tc {

Tensor<Dihedral> finite_quotient(std::int64_t m, const Tensor<Dihedral>& t) {
  if (m < 1) throw std::invalid_argument("finite_quotient: modulus must be >= 1");
  return map_factors_uniform(t, [m](const Dihedral& d) { return reduce_mod(d, m); });
}

Wedge wedge_project(const Tensor<Dihedral>& t) {
  if (t.arity() != 4) throw std::invalid_argument("wedge_project: arity 4 required");
  Wedge out;
  for (const auto& tuple : t.terms())
    out.toggle(tuple[0], {tuple[1], tuple[2], tuple[3]});
  return out;
}

WedgeCube wedge_head_to_y(const Wedge& w) {
  WedgeCube out;
  for (const auto& term : w.terms())
    if (!project_to_y(term.head).is_identity()) out.toggle(term.legs);
  return out;
}

WedgeCube s_element() {
  // (x-1) ^ (yx-1) ^ (y - y^{-1}) = (x-1)^(yx-1)^(y-1) + (x-1)^(yx-1)^(y^{-1}-1).
  WedgeCube out;
  out.toggle({Dihedral::x(), Dihedral::yx(), Dihedral::y()});
  out.toggle({Dihedral::x(), Dihedral::yx(), Dihedral::y().inverse()});
  return out;
}

std::string to_string(const Wedge& w) {
  if (w.zero()) return "0";
  std::string out;
  for (const auto& t : w.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(t.head) + " * (" + to_string(t.legs[0]) + " ^ " +
           to_string(t.legs[1]) + " ^ " + to_string(t.legs[2]) + ")";
  }
  return out;
}

std::string to_string(const WedgeCube& w) {
  if (w.zero()) return "0";
  std::string out;
  for (const auto& legs : w.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(legs[0]) + " ^ " + to_string(legs[1]) + " ^ " + to_string(legs[2]);
  }
  return out;
}

}  // namespace tc
