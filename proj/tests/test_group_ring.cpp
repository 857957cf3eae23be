#include <doctest.h>

#include "oracles.hpp"
#include "tc/group_ring.hpp"

using namespace tc;

namespace {

Ring<Dihedral> random_ring(oracle::Rng& rng, int max_support, int kmax) {
  Ring<Dihedral> r;
  const int n = rng.uniform(0, max_support);
  for (int i = 0; i < n; ++i) r.toggle(rng.dihedral(kmax));
  return r;
}

}  // namespace

TEST_CASE("ring arithmetic: characteristic two") {
  const Ring<Dihedral> xp1 = minus_one(Dihedral::x());  // x + 1
  CHECK((xp1 * xp1).zero());
  CHECK((xp1 + xp1).zero());
  CHECK(Ring<Dihedral>::one() * xp1 == xp1);
  CHECK(xp1 * Ring<Dihedral>::one() == xp1);
  CHECK(minus_one(Dihedral::identity()).zero());
}

TEST_CASE("ring arithmetic: laws on random elements") {
  oracle::Rng rng(201);
  for (int it = 0; it < 1000; ++it) {
    const auto r = random_ring(rng, 4, 3);
    const auto s = random_ring(rng, 4, 3);
    const auto t = random_ring(rng, 4, 3);
    CHECK((r * s) * t == r * (s * t));
    CHECK(r * (s + t) == r * s + r * t);
    CHECK((r + s) * t == r * t + s * t);
    CHECK((r + r).zero());
    CHECK(Ring<Dihedral>::one() * r == r);
  }
}

TEST_CASE("augmentation") {
  Ring<Dihedral> xy;
  xy.toggle(Dihedral::x());
  xy.toggle(Dihedral::y());
  CHECK(augmentation(xy) == 0);
  CHECK(augmentation(Ring<Dihedral>::one()) == 1);
  CHECK(augmentation(minus_one(Dihedral::x())) == 0);

  oracle::Rng rng(202);
  for (int it = 0; it < 1000; ++it) {
    const auto r = random_ring(rng, 4, 3);
    const auto s = random_ring(rng, 4, 3);
    CHECK(augmentation(r * s) == augmentation(r) * augmentation(s));
    CHECK(augmentation(r + s) == (augmentation(r) ^ augmentation(s)));
  }
}

TEST_CASE("biaction examples") {
  // In Y = <y | y^2 = 1>: (y, y) fixes y - 1, so Y acts trivially on I(Y).
  const FreeWord y = FreeWord::generator(letter_y);
  CHECK(biaction(y, minus_one(y), y) == minus_one(y));

  const auto r = minus_one(Dihedral::x());
  CHECK(biaction(Dihedral::identity(), r, Dihedral::identity()) == r);
  CHECK(biaction(Dihedral::x(), r, Dihedral::identity()) == r);  // x(x-1) = 1-x
}

TEST_CASE("biaction is a two-sided action and preserves augmentation") {
  oracle::Rng rng(203);
  for (int it = 0; it < 1000; ++it) {
    const auto r = random_ring(rng, 4, 3);
    const Dihedral a1 = rng.dihedral(3), a2 = rng.dihedral(3);
    const Dihedral b1 = rng.dihedral(3), b2 = rng.dihedral(3);
    CHECK(biaction(a1 * a2, r, b1 * b2) == biaction(a1, biaction(a2, r, b2), b1));
    CHECK(augmentation(biaction(a1, r, b1)) == augmentation(r));
  }
}

TEST_CASE("ring_map examples") {
  CHECK(ring_map(project_to_y, minus_one(Dihedral::x())).zero());
  CHECK(ring_map(project_to_y, minus_one(Dihedral::yx())) ==
        minus_one(FreeWord::generator(letter_y)));
  CHECK(ring_map(project_to_z, minus_one(Dihedral::yx())).zero());
}

TEST_CASE("ring_map is a ring homomorphism compatible with the biaction") {
  oracle::Rng rng(204);
  for (int it = 0; it < 1000; ++it) {
    const auto r = random_ring(rng, 4, 3);
    const auto s = random_ring(rng, 4, 3);
    CHECK(ring_map(project_to_y, r * s) ==
          ring_map(project_to_y, r) * ring_map(project_to_y, s));
    CHECK(ring_map(project_to_z, r + s) ==
          ring_map(project_to_z, r) + ring_map(project_to_z, s));
    CHECK(augmentation(ring_map(project_to_y, r)) == augmentation(r));

    const Dihedral a = rng.dihedral(3), b = rng.dihedral(3);
    CHECK(ring_map(project_to_y, biaction(a, r, b)) ==
          biaction(project_to_y(a), ring_map(project_to_y, r), project_to_y(b)));
    // reduce_mod lands in canonical D_3 representatives, but operator* works in
    // the infinite group, so the product has to be reduced again.
    const auto quotient = [](const Dihedral& d) { return reduce_mod(d, 3); };
    CHECK(ring_map(quotient, r * s) ==
          ring_map(quotient, ring_map(quotient, r) * ring_map(quotient, s)));
  }
}

TEST_CASE("ring parsing and printing") {
  const auto r = parse_ring_dihedral("x + yx + 1");
  CHECK(r.size() == 3);
  CHECK(r.contains(Dihedral::x()));
  CHECK(r.contains(Dihedral::yx()));
  CHECK(r.contains(Dihedral::identity()));
  CHECK(parse_ring_dihedral("x + x").zero());
  CHECK(parse_ring_dihedral("y^-1 + x") == parse_ring_dihedral("x + y^-1"));
  CHECK_THROWS_AS(parse_ring_dihedral(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_ring_dihedral("x + "), std::invalid_argument);
  CHECK(to_string(Ring<Dihedral>()) == "0");

  oracle::Rng rng(205);
  for (int it = 0; it < 1000; ++it) {
    const auto s = random_ring(rng, 5, 4);
    if (s.zero()) continue;  // "0" is print-only, not part of the grammar
    CHECK(parse_ring_dihedral(to_string(s)) == s);
  }
}
