#pragma once
// Tensor powers of augmentation ideals in the (g - 1) basis, factorwise
// functoriality, the diagonal pi x pi action, the wedge-cube projection of
// the 4-block, and coinvariant reduction over finite dihedral quotients.

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "tc/group.hpp"
#include "tc/group_ring.hpp"

namespace tc {

// Element of I(G;Z2)^{(x) m}: a set of m-tuples of nontrivial group
// elements, (g_1,..,g_m) standing for (g_1 - 1) (x) ... (x) (g_m - 1).
template <class G>
class Tensor {
 public:
  explicit Tensor(int arity = 0) : arity_(arity) {
    if (arity < 0) throw std::invalid_argument("Tensor: negative arity");
  }

  int arity() const { return arity_; }
  bool zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::set<std::vector<G>>& terms() const { return terms_; }

  void toggle(const std::vector<G>& t) {
    if (static_cast<int>(t.size()) != arity_)
      throw std::invalid_argument("Tensor: tuple length != arity");
    for (const auto& g : t)
      if (g.is_identity()) return;  // (1 - 1) = 0
    auto [it, inserted] = terms_.insert(t);
    if (!inserted) terms_.erase(it);
  }

  Tensor operator+(const Tensor& o) const {
    if (arity_ != o.arity_) throw std::invalid_argument("Tensor: arity mismatch");
    Tensor out = *this;
    for (const auto& t : o.terms_) {
      auto [it, inserted] = out.terms_.insert(t);
      if (!inserted) out.terms_.erase(it);
    }
    return out;
  }

  friend bool operator==(const Tensor&, const Tensor&) = default;

 private:
  int arity_;
  std::set<std::vector<G>> terms_;
};

// Distributes a pure tensor of augmentation-zero ring elements over the
// (g - 1) basis: sum n_i g_i with even support equals sum n_i (g_i - 1),
// and identity entries drop out.
template <class G>
Tensor<G> expand(const std::vector<Ring<G>>& factors) {
  Tensor<G> out(static_cast<int>(factors.size()));
  std::vector<std::vector<G>> entries;
  entries.reserve(factors.size());
  for (const auto& f : factors) {
    if (augmentation(f) != 0)
      throw std::invalid_argument("expand: factor has nonzero augmentation");
    std::vector<G> es;
    for (const auto& g : f.support())
      if (!g.is_identity()) es.push_back(g);
    if (es.empty()) return out;  // zero factor kills the product
    entries.push_back(std::move(es));
  }
  std::vector<std::size_t> idx(entries.size(), 0);
  std::vector<G> tuple(entries.size());
  while (true) {
    for (std::size_t i = 0; i < entries.size(); ++i) tuple[i] = entries[i][idx[i]];
    out.toggle(tuple);
    std::size_t i = entries.size();
    while (i > 0) {
      --i;
      if (++idx[i] < entries[i].size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (entries.empty()) return out;  // arity 0: single empty tuple toggled once
  }
}

template <class G>
Tensor<G> expand(std::initializer_list<Ring<G>> factors) {
  return expand(std::vector<Ring<G>>(factors));
}

// Factor i maps through the homomorphism hs[i]: (g - 1) -> (h(g) - 1);
// factors landing in the identity kill the term.
template <class G, class H>
Tensor<H> map_factors(const Tensor<G>& t,
                      const std::vector<std::function<H(const G&)>>& hs) {
  if (static_cast<int>(hs.size()) != t.arity())
    throw std::invalid_argument("map_factors: one homomorphism per factor required");
  Tensor<H> out(t.arity());
  std::vector<H> img(t.arity());
  for (const auto& tuple : t.terms()) {
    bool dead = false;
    for (int i = 0; i < t.arity() && !dead; ++i) {
      img[i] = hs[i](tuple[i]);
      dead = img[i].is_identity();
    }
    if (!dead) out.toggle(img);
  }
  return out;
}

// One homomorphism applied to every factor.
template <class G, class F>
auto map_factors_uniform(const Tensor<G>& t, F&& h) {
  using H = std::decay_t<decltype(h(std::declval<const G&>()))>;
  std::vector<std::function<H(const G&)>> hs(t.arity(), std::function<H(const G&)>(h));
  return map_factors(t, hs);
}

// Diagonal action of (a, b): every factor (g-1) -> a (g-1) b^{-1}
// = (a g b^{-1}) - (a b^{-1}), re-expanded into the basis.
template <class G>
Tensor<G> diagonal_action(const Pair<G>& p, const Tensor<G>& t) {
  Tensor<G> out(t.arity());
  const G binv = p.right.inverse();
  const G ab = p.left * binv;
  std::vector<std::vector<G>> entries(t.arity());
  std::vector<std::size_t> idx(t.arity());
  std::vector<G> tuple(t.arity());
  for (const auto& base : t.terms()) {
    for (int i = 0; i < t.arity(); ++i) {
      entries[i].clear();
      const G m = p.left * base[i] * binv;  // m != ab since base[i] != 1
      if (!m.is_identity()) entries[i].push_back(m);
      if (!ab.is_identity()) entries[i].push_back(ab);
    }
    std::fill(idx.begin(), idx.end(), 0);
    while (true) {
      for (int i = 0; i < t.arity(); ++i) tuple[i] = entries[i][idx[i]];
      out.toggle(tuple);
      int i = t.arity();
      bool done = false;
      while (i > 0) {
        --i;
        if (++idx[i] < entries[i].size()) break;
        idx[i] = 0;
        if (i == 0) done = true;
      }
      if (done || t.arity() == 0) break;
    }
  }
  return out;
}

// Entrywise reduction to D_m = D / <y^m>; entries that become the identity
// kill their basis vector.  Functorial: a nonzero image certifies a nonzero
// source class.
Tensor<Dihedral> finite_quotient(std::int64_t m, const Tensor<Dihedral>& t);

// Basis element of I(D;Z2) (x) Lambda^3 I(D;Z2): a head factor and three
// strictly increasing legs in the fixed (k, e) order.
struct WedgeTerm {
  Dihedral head;
  std::array<Dihedral, 3> legs;

  friend bool operator==(const WedgeTerm&, const WedgeTerm&) = default;
  friend auto operator<=>(const WedgeTerm&, const WedgeTerm&) = default;
};

class Wedge {
 public:
  // Sorts the legs; a repeated leg kills the term (v ^ v = 0).
  void toggle(const Dihedral& head, std::array<Dihedral, 3> legs) {
    std::sort(legs.begin(), legs.end());
    if (legs[0] == legs[1] || legs[1] == legs[2]) return;
    WedgeTerm t{head, legs};
    auto [it, inserted] = terms_.insert(t);
    if (!inserted) terms_.erase(it);
  }

  bool zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::set<WedgeTerm>& terms() const { return terms_; }

  Wedge operator+(const Wedge& o) const {
    Wedge out = *this;
    for (const auto& t : o.terms_) {
      auto [it, inserted] = out.terms_.insert(t);
      if (!inserted) out.terms_.erase(it);
    }
    return out;
  }

  friend bool operator==(const Wedge&, const Wedge&) = default;

 private:
  std::set<WedgeTerm> terms_;
};

// Element of Lambda^3 I(D;Z2) alone (the head already projected away).
class WedgeCube {
 public:
  void toggle(std::array<Dihedral, 3> legs) {
    std::sort(legs.begin(), legs.end());
    if (legs[0] == legs[1] || legs[1] == legs[2]) return;
    auto [it, inserted] = terms_.insert(legs);
    if (!inserted) terms_.erase(it);
  }

  bool zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::set<std::array<Dihedral, 3>>& terms() const { return terms_; }

  friend bool operator==(const WedgeCube&, const WedgeCube&) = default;

 private:
  std::set<std::array<Dihedral, 3>> terms_;
};

// I^{(x)4} -> I (x) Lambda^3 I: keep the first factor, antisymmetrize the
// last three.
Wedge wedge_project(const Tensor<Dihedral>& t);

// Projects the head factor through D -> Y (x -> 1); heads with even k die.
WedgeCube wedge_head_to_y(const Wedge& w);

// (x-1) ^ (yx-1) ^ (y - y^{-1}), expanded: exactly two basis cubes.
WedgeCube s_element();

std::string to_string(const Wedge& w);
std::string to_string(const WedgeCube& w);

template <class G>
std::string to_string(const Tensor<G>& t) {
  if (t.zero()) return "0";
  std::string out;
  for (const auto& tuple : t.terms()) {
    if (!out.empty()) out += " + ";
    out += "(";
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      if (i) out += ",";
      out += to_string(tuple[i]);
    }
    out += ")";
  }
  return out;
}

// Coinvariants of I(D_m;Z2)^{(x) arity} under the diagonal D_m x D_m
// action, presented by the relations b + p.b for p running over the action
// generators, and reduced by F2 Gaussian elimination with pivots in the
// fixed lexicographic order on tuples of (k mod m, e).  A nonzero canonical
// residue certifies a nonzero coinvariant class over D_m, hence over D.
class CoinvariantSpace {
 public:
  static std::vector<Pair<Dihedral>> default_action_generators();  // (x,1),(y,1),(1,x),(1,y)

  CoinvariantSpace(std::int64_t m, int arity,
                   std::vector<Pair<Dihedral>> action_generators = default_action_generators(),
                   std::size_t dimension_cap = 1'000'000);

  std::int64_t m() const { return m_; }
  int arity() const { return arity_; }
  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rank_; }
  std::size_t quotient_dim() const { return dim_ - rank_; }

  // Canonical residue of a tensor with entries already reduced into D_m;
  // supported on non-pivot coordinates, so it is a class invariant.
  std::vector<std::uint64_t> residue(const Tensor<Dihedral>& t) const;

  static bool nonzero(const std::vector<std::uint64_t>& bits);
  static std::size_t weight(const std::vector<std::uint64_t>& bits);

 private:
  std::size_t tuple_index(const std::vector<Dihedral>& t) const;
  void reduce_row(std::vector<std::uint64_t>& row) const;  // ascending pivot scan

  std::int64_t m_;
  int arity_;
  std::size_t n_elements_;  // 2m - 1
  std::size_t dim_;
  std::size_t words_;
  std::size_t rank_ = 0;
  std::vector<std::vector<std::uint64_t>> pivot_rows_;  // indexed by pivot, empty = none
};

}  // namespace tc
