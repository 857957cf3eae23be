#pragma once
// Independent reference implementations the tests check the library against:
// a string-rewriting model of the infinite dihedral group, a quadratic
// free-reduction routine, a dense F2 row-space oracle, and seeded random
// generators for groups, chains, and tensors.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "tc/bar.hpp"
#include "tc/group.hpp"
#include "tc/tensor.hpp"

namespace oracle {

// ---------------------------------------------------------------------
// Infinite dihedral arithmetic by word rewriting over the letters x, y and
// Y = y^{-1}.  The rules (from x^2 = 1, y y^{-1} = 1 and yxy = x, i.e.
// x y = y^{-1} x):
//   xx -> "",  yY -> "",  Yy -> "",  xy -> Yx,  xY -> yx
// move every x to the right and terminate in the normal form y^k x^e.

inline std::string dihedral_normalize(std::string w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      const char a = w[i], b = w[i + 1];
      if ((a == 'x' && b == 'x') || (a == 'y' && b == 'Y') || (a == 'Y' && b == 'y')) {
        w.erase(i, 2);
        changed = true;
        break;
      }
      if (a == 'x' && b == 'y') {
        w[i] = 'Y';
        w[i + 1] = 'x';
        changed = true;
        break;
      }
      if (a == 'x' && b == 'Y') {
        w[i] = 'y';
        w[i + 1] = 'x';
        changed = true;
        break;
      }
    }
  }
  return w;
}

inline std::string dihedral_word(const tc::Dihedral& d) {
  std::string w;
  const std::int64_t n = d.k < 0 ? -d.k : d.k;
  for (std::int64_t i = 0; i < n; ++i) w.push_back(d.k < 0 ? 'Y' : 'y');
  if (d.e) w.push_back('x');
  return w;
}

// Reads a normal-form word back; requires all y's (or all Y's) first, then
// at most one x.
inline tc::Dihedral dihedral_of_normal_word(const std::string& w) {
  tc::Dihedral d;
  std::size_t i = 0;
  while (i < w.size() && (w[i] == 'y' || w[i] == 'Y')) {
    if (i && w[i] != w[0]) throw std::logic_error("oracle: not a normal form");
    d.k += w[i] == 'y' ? 1 : -1;
    ++i;
  }
  if (i < w.size()) {
    if (w[i] != 'x' || i + 1 != w.size()) throw std::logic_error("oracle: not a normal form");
    d.e = 1;
  }
  return d;
}

inline tc::Dihedral dihedral_mul(const tc::Dihedral& u, const tc::Dihedral& v) {
  return dihedral_of_normal_word(dihedral_normalize(dihedral_word(u) + dihedral_word(v)));
}

inline tc::Dihedral dihedral_inverse(const tc::Dihedral& u) {
  std::string w = dihedral_word(u);
  std::string rev;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    rev.push_back(*it == 'y' ? 'Y' : *it == 'Y' ? 'y' : 'x');
  return dihedral_of_normal_word(dihedral_normalize(rev));
}

// ---------------------------------------------------------------------
// Quadratic free reduction in a free product of involutions: delete one
// adjacent equal pair, restart from the beginning.

inline std::string free_reduce(std::string w) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == w[i + 1]) {
        w.erase(i, 2);
        changed = true;
        break;
      }
    }
  }
  return w;
}

// ---------------------------------------------------------------------
// Dense F2 row space over a fixed coordinate count: incremental echelon
// basis with membership testing.  Deliberately simple, used as the oracle
// for the sparse elimination in the library.

struct DenseSpan {
  std::size_t dim = 0;
  std::size_t words = 0;
  // parallel arrays: leading bit and reduced row
  std::vector<std::size_t> leads;
  std::vector<std::vector<std::uint64_t>> rows;

  explicit DenseSpan(std::size_t d) : dim(d), words((d + 63) / 64) {}

  static std::size_t lead_of(const std::vector<std::uint64_t>& r) {
    for (std::size_t w = 0; w < r.size(); ++w)
      if (r[w])
        for (int b = 0; b < 64; ++b)
          if (r[w] >> b & 1) return w * 64 + b;
    return std::size_t(-1);
  }

  void reduce(std::vector<std::uint64_t>& r) const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::size_t l = leads[i];
      if (r[l / 64] >> (l % 64) & 1)
        for (std::size_t w = 0; w < words; ++w) r[w] ^= rows[i][w];
    }
  }

  void add(std::vector<std::uint64_t> r) {
    reduce(r);
    const std::size_t l = lead_of(r);
    if (l == std::size_t(-1)) return;
    leads.push_back(l);
    rows.push_back(std::move(r));
  }

  bool member(std::vector<std::uint64_t> r) const {
    reduce(r);
    return lead_of(r) == std::size_t(-1);
  }

  std::size_t rank() const { return rows.size(); }
};

// Index of a D_m basis tuple in the library's coordinate order (the
// element y^k x^e has id 2k + e - 1, tuples in mixed-radix order).
inline std::size_t quotient_tuple_index(const std::vector<tc::Dihedral>& t, std::int64_t m) {
  const std::size_t n_elements = static_cast<std::size_t>(2 * m - 1);
  std::size_t index = 0;
  for (const auto& d : t)
    index = index * n_elements + static_cast<std::size_t>(2 * d.k + d.e - 1);
  return index;
}

inline std::vector<std::uint64_t> quotient_row(const tc::Tensor<tc::Dihedral>& t,
                                               std::int64_t m) {
  const std::size_t n_elements = static_cast<std::size_t>(2 * m - 1);
  std::size_t dim = 1;
  for (int i = 0; i < t.arity(); ++i) dim *= n_elements;
  std::vector<std::uint64_t> row((dim + 63) / 64, 0);
  for (const auto& tuple : t.terms()) {
    const std::size_t i = quotient_tuple_index(tuple, m);
    row[i / 64] ^= std::uint64_t{1} << (i % 64);
  }
  return row;
}

// Every nontrivial element of D_m, in id order.
inline std::vector<tc::Dihedral> quotient_elements(std::int64_t m) {
  std::vector<tc::Dihedral> out;
  for (std::int64_t k = 0; k < m; ++k)
    for (std::int32_t e = 0; e <= 1; ++e)
      if (k || e) out.push_back(tc::Dihedral{k, e});
  return out;
}

// Every basis tuple of I(D_m;Z2)^{(x) arity}, in index order.
inline std::vector<std::vector<tc::Dihedral>> quotient_tuples(std::int64_t m, int arity) {
  const auto elems = quotient_elements(m);
  std::vector<std::vector<tc::Dihedral>> out;
  std::vector<std::size_t> idx(arity, 0);
  while (true) {
    std::vector<tc::Dihedral> t;
    for (int i = 0; i < arity; ++i) t.push_back(elems[idx[i]]);
    out.push_back(std::move(t));
    int i = arity;
    while (i > 0) {
      --i;
      if (++idx[i] < elems.size()) break;
      idx[i] = 0;
      if (i == 0) return out;
    }
    if (arity == 0) return out;
  }
}

// The span of b + p.b over the given pairs p (action computed through the
// library's diagonal_action plus entrywise reduction, which the tests
// validate separately against hand examples).
inline DenseSpan relation_span(std::int64_t m, int arity,
                               const std::vector<tc::Pair<tc::Dihedral>>& pairs) {
  const auto tuples = quotient_tuples(m, arity);
  DenseSpan span(tuples.empty() ? 1 : tuples.size());
  for (const auto& b : tuples) {
    tc::Tensor<tc::Dihedral> basis(arity);
    basis.toggle(b);
    for (const auto& p : pairs) {
      const auto acted = finite_quotient(m, diagonal_action(p, basis));
      auto row = quotient_row(basis + acted, m);
      span.add(std::move(row));
    }
  }
  return span;
}

// ---------------------------------------------------------------------
// Seeded random data.

struct Rng {
  std::mt19937 gen;
  explicit Rng(std::uint32_t seed) : gen(seed) {}

  int uniform(int lo, int hi) {  // inclusive
    return std::uniform_int_distribution<int>(lo, hi)(gen);
  }

  tc::Dihedral dihedral(int kmax) {
    return tc::Dihedral{uniform(-kmax, kmax), static_cast<std::int32_t>(uniform(0, 1))};
  }

  tc::Dihedral nontrivial_dihedral(int kmax) {
    while (true) {
      const auto d = dihedral(kmax);
      if (!d.is_identity()) return d;
    }
  }

  // Canonical representative of a nontrivial element of D_m.
  tc::Dihedral quotient_element(std::int64_t m) {
    while (true) {
      tc::Dihedral d{uniform(0, static_cast<int>(m) - 1),
                     static_cast<std::int32_t>(uniform(0, 1))};
      if (!d.is_identity()) return d;
    }
  }

  tc::Pair<tc::Dihedral> dihedral_pair(int kmax) {
    return {dihedral(kmax), dihedral(kmax)};
  }

  tc::FreeWord word(int g, int maxlen) {
    std::string raw;
    const int len = uniform(0, maxlen);
    for (int i = 0; i < len; ++i) raw.push_back(static_cast<char>(uniform(0, g - 1)));
    return tc::FreeWord::reduced(raw);
  }

  tc::BarChain<tc::Dihedral> chain(int degree, int max_terms, int kmax) {
    tc::BarChain<tc::Dihedral> c(degree);
    const int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) {
      std::vector<tc::Dihedral> tuple;
      for (int i = 0; i < degree; ++i) tuple.push_back(nontrivial_dihedral(kmax));
      c.toggle(tuple);
    }
    return c;
  }

  tc::BarChain<tc::Pair<tc::Dihedral>> pair_chain(int degree, int max_terms, int kmax) {
    tc::BarChain<tc::Pair<tc::Dihedral>> c(degree);
    const int terms = uniform(1, max_terms);
    for (int t = 0; t < terms; ++t) {
      std::vector<tc::Pair<tc::Dihedral>> tuple;
      for (int i = 0; i < degree; ++i) {
        while (true) {
          const auto p = dihedral_pair(kmax);
          if (!p.is_identity()) {
            tuple.push_back(p);
            break;
          }
        }
      }
      c.toggle(tuple);
    }
    return c;
  }

  tc::Tensor<tc::Dihedral> tensor(int arity, int max_terms, int kmax) {
    tc::Tensor<tc::Dihedral> t(arity);
    const int terms = uniform(1, max_terms);
    for (int k = 0; k < terms; ++k) {
      std::vector<tc::Dihedral> tuple;
      for (int i = 0; i < arity; ++i) tuple.push_back(nontrivial_dihedral(kmax));
      t.toggle(tuple);
    }
    return t;
  }

  // Tensor with entries already canonical in D_m.
  tc::Tensor<tc::Dihedral> quotient_tensor(std::int64_t m, int arity, int max_terms) {
    tc::Tensor<tc::Dihedral> t(arity);
    const int terms = uniform(1, max_terms);
    for (int k = 0; k < terms; ++k) {
      std::vector<tc::Dihedral> tuple;
      for (int i = 0; i < arity; ++i) tuple.push_back(quotient_element(m));
      t.toggle(tuple);
    }
    return t;
  }
};

}  // namespace oracle
