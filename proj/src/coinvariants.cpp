#include <bit>

#include "tc/parallel.hpp"
#include "tc/tensor.hpp"

namespace tc {

namespace {

// Nontrivial elements of D_m in the pivot order (0,1) < (1,0) < (1,1) < ...;
// the element y^k x^e has id 2k + e - 1.
std::size_t element_id(const Dihedral& d) {
  return static_cast<std::size_t>(2 * d.k + d.e - 1);
}

Dihedral element_of_id(std::size_t id) {
  return Dihedral{static_cast<std::int64_t>((id + 1) / 2),
                  static_cast<std::int32_t>((id + 1) % 2)};
}

void xor_into(std::vector<std::uint64_t>& row, const std::vector<std::uint64_t>& other) {
  for (std::size_t i = 0; i < row.size(); ++i) row[i] ^= other[i];
}

}  // namespace

std::vector<Pair<Dihedral>> CoinvariantSpace::default_action_generators() {
  return {{Dihedral::x(), Dihedral::identity()},
          {Dihedral::y(), Dihedral::identity()},
          {Dihedral::identity(), Dihedral::x()},
          {Dihedral::identity(), Dihedral::y()}};
}

CoinvariantSpace::CoinvariantSpace(std::int64_t m, int arity,
                                   std::vector<Pair<Dihedral>> action_generators,
                                   std::size_t dimension_cap)
    : m_(m), arity_(arity) {
  if (m < 1) throw std::invalid_argument("CoinvariantSpace: modulus must be >= 1");
  if (arity < 0) throw std::invalid_argument("CoinvariantSpace: negative arity");
  n_elements_ = static_cast<std::size_t>(2 * m - 1);
  dim_ = 1;
  for (int i = 0; i < arity; ++i) {
    if (dim_ > dimension_cap / n_elements_ + 1)
      throw std::domain_error("CoinvariantSpace: (2m-1)^arity exceeds dimension cap");
    dim_ *= n_elements_;
  }
  if (dim_ > dimension_cap)
    throw std::domain_error("CoinvariantSpace: (2m-1)^arity exceeds dimension cap");
  words_ = (dim_ + 63) / 64;
  pivot_rows_.resize(dim_);

  // Relation rows b + p.b, assembled by basis block (parallelizable),
  // eliminated serially in a fixed order.
  const std::size_t block = 8192;
  std::vector<Dihedral> base(arity_), tuple(arity_);
  std::vector<std::vector<Dihedral>> entries(arity_);
  std::vector<std::size_t> odo(arity_);
  for (std::size_t lo = 0; lo < dim_; lo += block) {
    const std::size_t hi = std::min(dim_, lo + block);
    using Rows = std::vector<std::vector<std::uint64_t>>;
    Rows rows = partitioned_accumulate<Rows>(
        hi - lo, Rows{},
        [&](std::size_t rb, std::size_t re) {
          Rows part;
          std::vector<Dihedral> b(arity_), tup(arity_);
          std::vector<std::vector<Dihedral>> ent(arity_);
          std::vector<std::size_t> od(arity_);
          for (std::size_t r = rb; r != re; ++r) {
            const std::size_t index = lo + r;
            std::size_t rest = index;
            for (int i = arity_ - 1; i >= 0; --i) {
              b[i] = element_of_id(rest % n_elements_);
              rest /= n_elements_;
            }
            for (const auto& p : action_generators) {
              std::vector<std::uint64_t> row(words_, 0);
              row[index / 64] ^= std::uint64_t{1} << (index % 64);
              const Dihedral binv = p.right.inverse();
              const Dihedral ab = reduce_mod(p.left * binv, m_);
              bool dead = false;
              for (int i = 0; i < arity_ && !dead; ++i) {
                ent[i].clear();
                const Dihedral im = reduce_mod(p.left * b[i] * binv, m_);
                if (!im.is_identity()) ent[i].push_back(im);
                if (!ab.is_identity() && im != ab) ent[i].push_back(ab);
                dead = ent[i].empty();
              }
              if (!dead) {
                std::fill(od.begin(), od.end(), 0);
                while (true) {
                  for (int i = 0; i < arity_; ++i) tup[i] = ent[i][od[i]];
                  std::size_t ti = 0;
                  for (int i = 0; i < arity_; ++i)
                    ti = ti * n_elements_ + element_id(tup[i]);
                  row[ti / 64] ^= std::uint64_t{1} << (ti % 64);
                  int i = arity_;
                  bool done = arity_ == 0;
                  while (i > 0) {
                    --i;
                    if (++od[i] < ent[i].size()) break;
                    od[i] = 0;
                    if (i == 0) done = true;
                  }
                  if (done) break;
                }
              }
              part.push_back(std::move(row));
            }
          }
          return part;
        },
        [](Rows& acc, Rows part) {
          for (auto& r : part) acc.push_back(std::move(r));
        });
    for (auto& row : rows) {
      reduce_row(row);
      for (std::size_t wi = 0; wi < words_; ++wi) {
        if (row[wi]) {
          const std::size_t p = wi * 64 + std::countr_zero(row[wi]);
          pivot_rows_[p] = std::move(row);
          ++rank_;
          break;
        }
      }
    }
  }
}

// Ascending pivot scan: after position p is processed the row is zero
// there, and pivot rows only touch positions >= their pivot, so the result
// is the canonical representative supported on non-pivot coordinates.
void CoinvariantSpace::reduce_row(std::vector<std::uint64_t>& row) const {
  for (std::size_t wi = 0; wi < words_; ++wi) {
    std::uint64_t pending = row[wi];
    while (pending) {
      const int b = std::countr_zero(pending);
      const std::size_t p = wi * 64 + b;
      const auto& piv = pivot_rows_[p];
      if (!piv.empty()) {
        xor_into(row, piv);
        pending = (b == 63) ? 0 : (row[wi] & ~((std::uint64_t{2} << b) - 1));
      } else {
        pending &= pending - 1;
      }
    }
  }
}

std::size_t CoinvariantSpace::tuple_index(const std::vector<Dihedral>& t) const {
  std::size_t index = 0;
  for (const auto& d : t) {
    if (d.k < 0 || d.k >= m_ || d.is_identity())
      throw std::invalid_argument("CoinvariantSpace: entry not reduced into D_m");
    index = index * n_elements_ + element_id(d);
  }
  return index;
}

std::vector<std::uint64_t> CoinvariantSpace::residue(const Tensor<Dihedral>& t) const {
  if (t.arity() != arity_)
    throw std::invalid_argument("CoinvariantSpace: arity mismatch");
  std::vector<std::uint64_t> row(words_, 0);
  for (const auto& tuple : t.terms()) {
    const std::size_t ti = tuple_index(tuple);
    row[ti / 64] ^= std::uint64_t{1} << (ti % 64);
  }
  reduce_row(row);
  return row;
}

bool CoinvariantSpace::nonzero(const std::vector<std::uint64_t>& bits) {
  for (auto w : bits)
    if (w) return true;
  return false;
}

std::size_t CoinvariantSpace::weight(const std::vector<std::uint64_t>& bits) {
  std::size_t n = 0;
  for (auto w : bits) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

}  // namespace tc
