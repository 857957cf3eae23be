#pragma once
// The canonical degree-1 cocycle nu([(g,h)]) = g h^{-1} - 1 representing the
// Costa-Farber class of pi, and the closed form of its n-th power.

#include <vector>

#include "tc/bar.hpp"
#include "tc/group_ring.hpp"
#include "tc/parallel.hpp"
#include "tc/tensor.hpp"

namespace tc {

// g h^{-1} - 1 in F2[pi]; zero exactly when g = h.
template <class G>
Ring<G> nu(const Pair<G>& p) {
  return minus_one(p.left * p.right.inverse());
}

// nu^n on a degree-n chain over pi x pi, expanded in I(pi;Z2)^{(x) n}.
// On [(g_1,h_1)|...|(g_n,h_n)] the i-th tensor factor is
//   (g_1...g_{i-1}) (g_i h_i^{-1} - 1) (h_{i-1}^{-1} ... h_1^{-1});
// the global sign vanishes mod 2.  Tuples with g_i = h_i contribute zero.
template <class G>
Tensor<G> nu_power(int n, const BarChain<Pair<G>>& c) {
  if (c.degree() != n) throw std::invalid_argument("nu_power: degree != n");
  std::vector<const std::vector<Pair<G>>*> tuples;
  tuples.reserve(c.size());
  for (const auto& t : c.terms()) tuples.push_back(&t);

  auto eval = [&](std::size_t lo, std::size_t hi) {
    Tensor<G> acc(n);
    std::vector<std::vector<G>> entries(n);
    std::vector<std::size_t> idx(n);
    std::vector<G> out(n);
    for (std::size_t ti = lo; ti != hi; ++ti) {
      const auto& t = *tuples[ti];
      G prefix{};   // g_1 ... g_{i-1}
      G suffix{};   // h_{i-1}^{-1} ... h_1^{-1}
      bool dead = false;
      for (int i = 0; i < n && !dead; ++i) {
        const G u = t[i].left * t[i].right.inverse();
        if (u.is_identity()) {
          dead = true;
          break;
        }
        const G with = prefix * u * suffix;
        const G without = prefix * suffix;
        entries[i].clear();
        if (!with.is_identity()) entries[i].push_back(with);
        if (!without.is_identity()) entries[i].push_back(without);
        // with == without would force u = 1, excluded above
        prefix = prefix * t[i].left;
        suffix = t[i].right.inverse() * suffix;
      }
      if (dead) continue;
      std::fill(idx.begin(), idx.end(), 0);
      while (true) {
        for (int i = 0; i < n; ++i) out[i] = entries[i][idx[i]];
        acc.toggle(out);
        int i = n;
        bool done = n == 0;
        while (i > 0) {
          --i;
          if (++idx[i] < entries[i].size()) break;
          idx[i] = 0;
          if (i == 0) done = true;
        }
        if (done) break;
      }
    }
    return acc;
  };
  return partitioned_accumulate<Tensor<G>>(
      tuples.size(), Tensor<G>(n), eval,
      [](Tensor<G>& acc, const Tensor<G>& part) { acc = acc + part; });
}

}  // namespace tc
