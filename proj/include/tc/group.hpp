#pragma once
// Exact arithmetic in free products of Z/2 factors, in the infinite dihedral
// group D = <x, y | yxy = x, x^2 = 1>, and the homomorphisms between them.
// Default-constructed group elements are the identity throughout.

#include <cassert>
#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace tc {

// Reduced word in Z2 * ... * Z2.  Letters are generator ids (displayed
// 'a'..), stored as a byte string; a word is reduced iff no two adjacent
// letters coincide, every generator being an involution.  Empty = identity.
class FreeWord {
 public:
  static constexpr int max_alphabet = 26;

  FreeWord() = default;

  static FreeWord generator(int id) {
    if (id < 0 || id >= max_alphabet)
      throw std::invalid_argument("FreeWord: generator id out of range");
    FreeWord w;
    w.letters_.push_back(static_cast<char>(id));
    return w;
  }

  // Free reduction of an arbitrary letter sequence; equal adjacent letters
  // cancel and the cancellation cascades.
  static FreeWord reduced(std::string_view raw) {
    FreeWord w;
    for (char c : raw) w.push_reduce(c);
    return w;
  }

  bool is_identity() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }
  int letter(std::size_t i) const {
    return static_cast<unsigned char>(letters_[i]);
  }
  const std::string& letters() const { return letters_; }

  FreeWord operator*(const FreeWord& rhs) const {
    FreeWord out = *this;
    for (char c : rhs.letters_) out.push_reduce(c);
    return out;
  }

  // Letters are involutions, so inversion just reverses the word.
  FreeWord inverse() const {
    FreeWord out;
    out.letters_.assign(letters_.rbegin(), letters_.rend());
    return out;
  }

  friend bool operator==(const FreeWord&, const FreeWord&) = default;
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  void push_reduce(char c) {
    if (!letters_.empty() && letters_.back() == c)
      letters_.pop_back();
    else
      letters_.push_back(c);
  }

  std::string letters_;
};

// Normal form y^k x^e of an element of D.  From yxy = x one derives
// x y^m = y^{-m} x, hence the closed form
//   (y^k x^e) (y^m x^f) = y^{k + (-1)^e m} x^{e xor f},
// and uniqueness of the normal form.  The defaulted comparison is the fixed
// global total order (lexicographic on (k, e)) used for canonical sorting.
struct Dihedral {
  std::int64_t k = 0;
  std::int32_t e = 0;  // 0 or 1

  static Dihedral identity() { return {}; }
  static Dihedral x() { return {0, 1}; }
  static Dihedral y() { return {1, 0}; }
  static Dihedral yx() { return {1, 1}; }

  bool is_identity() const { return k == 0 && e == 0; }

  Dihedral operator*(const Dihedral& r) const {
    return {e ? k - r.k : k + r.k, e ^ r.e};
  }

  Dihedral inverse() const { return {e ? k : -k, e}; }

  friend bool operator==(const Dihedral&, const Dihedral&) = default;
  friend auto operator<=>(const Dihedral&, const Dihedral&) = default;
};

// Element of a product group pi x pi', componentwise operations; the
// identity test is on the pair, not on single components.
template <class G>
struct Pair {
  G left{};
  G right{};

  bool is_identity() const { return left.is_identity() && right.is_identity(); }
  Pair operator*(const Pair& r) const { return {left * r.left, right * r.right}; }
  Pair inverse() const { return {left.inverse(), right.inverse()}; }

  friend bool operator==(const Pair&, const Pair&) = default;
  friend auto operator<=>(const Pair&, const Pair&) = default;
};

inline constexpr int letter_a = 0;
inline constexpr int letter_b = 1;
inline constexpr int letter_y = 'y' - 'a';
inline constexpr int letter_z = 'z' - 'a';

// a -> x, b -> yx: the standard isomorphism Z2 * Z2 -> D.
// Throws if the word uses letters other than a, b.
Dihedral iso_to_dihedral(const FreeWord& w);

// Kills every occurrence of the last generator (id g-1) and re-reduces:
// the retraction pi_g -> pi_{g-1}.
FreeWord project_last_generator(const FreeWord& w, int g);

// D -> Y = <y | y^2 = 1>, x -> 1, y -> y.  (yxy = x forces y^2 = 1 in the
// quotient.)  Image of y^k x^e is y^(k mod 2).
FreeWord project_to_y(const Dihedral& d);

// D -> Z = <z | z^2 = 1>, x -> z, y -> z.  Image of y^k x^e is
// z^((k+e) mod 2); note yx -> 1.
FreeWord project_to_z(const Dihedral& d);

// Canonical representative of the image in D_m = D / <y^m>, the dihedral
// group of order 2m; k is reduced into [0, m).  Reduction after every
// D-multiplication realises the group law of D_m.
Dihedral reduce_mod(const Dihedral& d, std::int64_t m);

std::string to_string(const FreeWord& w);
std::string to_string(const Dihedral& d);

template <class G>
std::string to_string(const Pair<G>& p) {
  return "(" + to_string(p.left) + "," + to_string(p.right) + ")";
}

// Word grammar: juxtaposed or whitespace-separated generator letters, each
// optionally carrying ^<int>; "1" is the identity.  Examples: "a b a",
// "aba", "y^-3 x", "yx", "1".
FreeWord parse_free_word(std::string_view text, int alphabet = FreeWord::max_alphabet);
Dihedral parse_dihedral(std::string_view text);

}  // namespace tc
