#include <doctest.h>

#include "m3k/basis.hpp"
#include "m3k/connectivity.hpp"
#include "m3k/constructions.hpp"
#include "m3k/elasticity.hpp"

using namespace m3k;

TEST_CASE("bases enumeration") {
  CHECK(bases(uniform(2, 4)).size() == 6);
  CHECK(bases(fano()).size() == 28);  // 35 triples minus 7 lines
  const auto b = bases(uniform(0, 1));
  REQUIRE(b.size() == 1);
  CHECK(b[0] == 0);
}

TEST_CASE("removable elements") {
  const Matroid u = uniform(2, 4);
  for (Mask b : bases(u)) CHECK(removable_elements(u, b) == u.ground());

  // elastic elements are removable with respect to every basis
  for (const Matroid& m : {l8(), fano(), uniform(2, 5)}) {
    const Mask el = elastic_elements(m);
    for (Mask b : bases(m)) CHECK((el & ~removable_elements(m, b)) == 0);
  }

  CHECK_THROWS(removable_elements(uniform(2, 4), bit(0)));
}

TEST_CASE("a 5-element fan admits a basis with no removable elements") {
  // found by search: the all-spokes basis of wheel(4) leaves the fan run
  // (s1, r1, s2, r2, s3) without removable elements
  const Matroid m = wheel(4);
  const Mask spokes = bit(0) | bit(1) | bit(2) | bit(3);
  const Mask window = bit(0) | bit(4) | bit(1) | bit(5) | bit(2);
  // cross-check against the direct definition
  Mask rem = 0;
  for (int e = 0; e < m.size(); ++e) {
    const SiCoPair p = sico(m, e);
    if (has_bit(spokes, e) ? p.si_3connected : p.co_3connected) rem |= bit(e);
  }
  CHECK(rem == removable_elements(m, spokes));
  CHECK((rem & window) == 0);
}

TEST_CASE("robust and strong elements") {
  const Matroid u = uniform(2, 5);
  const Matroid n = uniform(2, 3);
  for (Mask b : bases(u)) {
    const Mask strong = nb_strong(u, n, b);
    // all elements outside the basis are strong: co(M\e) = U_{2,4}
    CHECK((u.ground() & ~b & ~strong) == 0);
    CHECK((strong & ~nb_robust(u, n, b)) == 0);
  }

  // every N-elastic element is strong for every basis
  const Matroid m = l8();
  const Matroid n24 = uniform(2, 4);
  const Mask ne = n_elastic_elements(m, n24);
  for (Mask b : bases(m)) {
    CHECK((ne & ~nb_strong(m, n24, b)) == 0);
    CHECK((nb_strong(m, n24, b) & ~nb_robust(m, n24, b)) == 0);
  }
}
