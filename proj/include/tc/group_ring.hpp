#pragma once
// The mod-2 group ring F2[G] as a sparse support set, the augmentation,
// the two-sided action of pi x pi, and functoriality along homomorphisms.

#include <initializer_list>
#include <set>
#include <string>
#include <type_traits>
#include <utility>

#include "tc/group.hpp"

namespace tc {

// F2[G]: finite set of group elements, each carried with coefficient 1.
// Addition is symmetric difference of supports.
template <class G>
class Ring {
 public:
  Ring() = default;
  Ring(std::initializer_list<G> gs) {
    for (const auto& g : gs) toggle(g);
  }

  static Ring one() { return Ring{G{}}; }

  void toggle(const G& g) {
    auto [it, inserted] = support_.insert(g);
    if (!inserted) support_.erase(it);
  }

  bool zero() const { return support_.empty(); }
  std::size_t size() const { return support_.size(); }
  const std::set<G>& support() const { return support_; }
  bool contains(const G& g) const { return support_.count(g) != 0; }

  Ring operator+(const Ring& r) const {
    Ring out = *this;
    for (const auto& g : r.support_) out.toggle(g);
    return out;
  }

  Ring operator*(const Ring& r) const {
    Ring out;
    for (const auto& g : support_)
      for (const auto& h : r.support_) out.toggle(g * h);
    return out;
  }

  friend bool operator==(const Ring&, const Ring&) = default;

 private:
  std::set<G> support_;
};

// Sum of the coefficients mod 2.
template <class G>
int augmentation(const Ring<G>& r) {
  return static_cast<int>(r.size() & 1);
}

// g - 1, i.e. g + 1 over F2: the basis element of I(G;Z2) attached to g.
// Zero when g is the identity.
template <class G>
Ring<G> minus_one(const G& g) {
  Ring<G> out;
  if (!g.is_identity()) {
    out.toggle(g);
    out.toggle(G{});
  }
  return out;
}

// (a, b) . sum n_i g_i = sum n_i (a g_i b^{-1}).  Preserves augmentation.
template <class G>
Ring<G> biaction(const G& a, const Ring<G>& r, const G& b) {
  Ring<G> out;
  const G binv = b.inverse();
  for (const auto& g : r.support()) out.toggle(a * g * binv);
  return out;
}

// Coefficientwise image under a group homomorphism h; collisions collect
// mod 2, so the augmentation is preserved.
template <class G, class F>
auto ring_map(F&& h, const Ring<G>& r) {
  using H = std::decay_t<decltype(h(std::declval<const G&>()))>;
  Ring<H> out;
  for (const auto& g : r.support()) out.toggle(h(g));
  return out;
}

template <class G>
std::string to_string(const Ring<G>& r) {
  if (r.zero()) return "0";
  std::string out;
  for (const auto& g : r.support()) {
    if (!out.empty()) out += " + ";
    out += to_string(g);
  }
  return out;
}

// Ring grammar: words joined by '+'; duplicate terms collect mod 2.
// Example: "x + yx + 1".
Ring<Dihedral> parse_ring_dihedral(std::string_view text);

}  // namespace tc
