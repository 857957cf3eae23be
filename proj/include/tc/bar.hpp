#pragma once
// Normalized bar complex of a discrete group with trivial Z2 coefficients,
// the Eilenberg-Zilber shuffle map, and the Alexander-Whitney diagonal with
// its Kunneth bidegree projection.

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tc/group.hpp"

namespace tc {

// F2 chain in bar degree m: a set of m-tuples of nontrivial group elements
// (normalization: a tuple containing the identity is zero).
template <class G>
class BarChain {
 public:
  explicit BarChain(int degree = 0) : degree_(degree) {
    if (degree < 0) throw std::invalid_argument("BarChain: negative degree");
  }

  int degree() const { return degree_; }
  bool zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::set<std::vector<G>>& terms() const { return terms_; }

  void toggle(const std::vector<G>& t) {
    if (static_cast<int>(t.size()) != degree_)
      throw std::invalid_argument("BarChain: tuple length != degree");
    for (const auto& g : t)
      if (g.is_identity()) return;
    auto [it, inserted] = terms_.insert(t);
    if (!inserted) terms_.erase(it);
  }

  BarChain operator+(const BarChain& o) const {
    if (degree_ != o.degree_) throw std::invalid_argument("BarChain: degree mismatch");
    BarChain out = *this;
    for (const auto& t : o.terms_) {
      auto [it, inserted] = out.terms_.insert(t);
      if (!inserted) out.terms_.erase(it);
    }
    return out;
  }

  friend bool operator==(const BarChain&, const BarChain&) = default;

 private:
  int degree_;
  std::set<std::vector<G>> terms_;
};

// Boundary with trivial coefficients: the first face drops the group action
// (coinvariants), signs vanish mod 2, and faces producing an identity entry
// vanish by normalization.
template <class G>
BarChain<G> boundary(const BarChain<G>& c) {
  if (c.degree() == 0) throw std::invalid_argument("boundary: degree 0 chain");
  const int n = c.degree();
  BarChain<G> out(n - 1);
  std::vector<G> face;
  face.reserve(n - 1);
  for (const auto& t : c.terms()) {
    face.assign(t.begin() + 1, t.end());  // drop first
    out.toggle(face);
    for (int i = 0; i + 1 < n; ++i) {     // merge i, i+1
      face.clear();
      for (int j = 0; j < n; ++j) {
        if (j == i)
          face.push_back(t[i] * t[i + 1]);
        else if (j != i + 1)
          face.push_back(t[j]);
      }
      out.toggle(face);
    }
    face.assign(t.begin(), t.end() - 1);  // drop last
    out.toggle(face);
  }
  return out;
}

// [g | g | ... | g]; a cycle whenever g is an involution (inner faces merge
// to the identity, outer faces cancel mod 2).
template <class G>
BarChain<G> power_cycle(const G& g, int degree) {
  BarChain<G> out(degree);
  out.toggle(std::vector<G>(degree, g));
  return out;
}

BarChain<Dihedral> alpha_cycle(int i);   // [x|...|x]
BarChain<Dihedral> beta_cycle(int i);    // [yx|...|yx]
BarChain<Dihedral> gamma_cycle(int i);   // alpha + beta; requires i >= 1
BarChain<FreeWord> alpha_cycle_free(int i);  // [a|...|a]
BarChain<FreeWord> beta_cycle_free(int i);   // [b|...|b]

// Entrywise image under a group homomorphism; tuples that acquire an
// identity entry vanish by normalization.
template <class G, class F>
auto barchain_map(F&& h, const BarChain<G>& c) {
  using H = std::decay_t<decltype(h(std::declval<const G&>()))>;
  BarChain<H> out(c.degree());
  std::vector<H> img;
  for (const auto& t : c.terms()) {
    img.clear();
    for (const auto& g : t) img.push_back(h(g));
    out.toggle(img);
  }
  return out;
}

// Eilenberg-Zilber shuffle map B(pi) (x) B(pi) -> B(pi x pi): a (p, q)
// shuffle is the choice of the p positions carrying left letters; left
// letters enter as (g, 1), right letters as (1, h).  Signs vanish mod 2.
template <class G>
BarChain<Pair<G>> ez(const BarChain<G>& left, const BarChain<G>& right) {
  const int p = left.degree(), q = right.degree();
  BarChain<Pair<G>> out(p + q);
  std::vector<char> mask(p + q);
  std::vector<Pair<G>> tuple(p + q);
  for (const auto& u : left.terms()) {
    for (const auto& v : right.terms()) {
      std::fill(mask.begin(), mask.begin() + p, 0);
      std::fill(mask.begin() + p, mask.end(), 1);
      do {
        std::size_t iu = 0, iv = 0;
        for (int pos = 0; pos < p + q; ++pos) {
          if (mask[pos] == 0)
            tuple[pos] = Pair<G>{u[iu++], G{}};
          else
            tuple[pos] = Pair<G>{G{}, v[iv++]};
        }
        out.toggle(tuple);
      } while (std::next_permutation(mask.begin(), mask.end()));
    }
  }
  return out;
}

// Homogeneous bidegree component of an element of B(G) (x) B(G).
template <class G>
struct BiChain {
  int left_degree = 0;
  int right_degree = 0;
  std::set<std::pair<std::vector<G>, std::vector<G>>> terms;

  void toggle(const std::vector<G>& l, const std::vector<G>& r) {
    for (const auto& g : l)
      if (g.is_identity()) return;
    for (const auto& g : r)
      if (g.is_identity()) return;
    auto [it, inserted] = terms.insert({l, r});
    if (!inserted) terms.erase(it);
  }

  bool zero() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }

  friend bool operator==(const BiChain&, const BiChain&) = default;
};

// Alexander-Whitney diagonal: [g_1|..|g_m] -> sum of front (x) back splits.
// Component i of the result collects the splits with left degree i.
template <class G>
std::vector<BiChain<G>> aw(const BarChain<G>& c) {
  const int m = c.degree();
  std::vector<BiChain<G>> out(m + 1);
  for (int i = 0; i <= m; ++i) {
    out[i].left_degree = i;
    out[i].right_degree = m - i;
  }
  for (const auto& t : c.terms())
    for (int i = 0; i <= m; ++i)
      out[i].toggle(std::vector<G>(t.begin(), t.begin() + i),
                    std::vector<G>(t.begin() + i, t.end()));
  return out;
}

// Kunneth bidegree projection; out-of-range bidegrees give zero.
template <class G>
BiChain<G> kunneth_project(const std::vector<BiChain<G>>& components, int i, int j) {
  if (i >= 0 && j >= 0 && i < static_cast<int>(components.size()) &&
      components[i].right_degree == j)
    return components[i];
  BiChain<G> zero;
  zero.left_degree = i;
  zero.right_degree = j;
  return zero;
}

template <class G>
std::string to_string(const BarChain<G>& c) {
  if (c.zero()) return "0";
  std::string out;
  for (const auto& t : c.terms()) {
    if (!out.empty()) out += " + ";
    out += "[";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) out += "|";
      out += to_string(t[i]);
    }
    out += "]";
  }
  return out;
}

// Chain grammar: bracketed tuples joined by '+', entries separated by '|';
// pair entries written "(w,w)".  Examples: "[x|x] + [yx|x]",
// "[(x,1)|(1,yx)]".  Duplicate tuples collect mod 2.
BarChain<Dihedral> parse_chain_dihedral(std::string_view text, int degree);
BarChain<Pair<Dihedral>> parse_chain_dihedral_pairs(std::string_view text, int degree);

}  // namespace tc
