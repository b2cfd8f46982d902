#include <doctest.h>

#include <numeric>
#include <random>

#include "m3k/constructions.hpp"
#include "m3k/iso.hpp"
#include "m3k/matroid.hpp"

using namespace m3k;

TEST_CASE("canonical form is permutation invariant") {
  std::mt19937 rng(11);
  for (const Matroid& m : {uniform(2, 4), fano(), wheel(3), theta(3).first, l8(),
                           theta_minus(4).first}) {
    const std::string canon = canonical_form(m);
    std::vector<int> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    for (int trial = 0; trial < 50; ++trial) {
      std::shuffle(perm.begin(), perm.end(), rng);
      CHECK(canonical_form(relabel(m, perm)) == canon);
    }
  }
}

TEST_CASE("canonical form separates non-isomorphic matroids") {
  CHECK(canonical_form(fano()) != canonical_form(relax(fano(), closure(fano(), bit(0) | bit(1)))));
  CHECK(canonical_form(wheel(3)) != canonical_form(whirl(3)));
  CHECK(canonical_form(uniform(0, 0)) == "1");
}

TEST_CASE("is_isomorphic goldens") {
  CHECK(is_isomorphic(theta(3).first, mk4()));
  // theta_n minus different segment elements
  const auto [t4, lab] = theta(4);
  const Matroid d1 = minor(t4, 0, bit(lab.w[0])).first;
  const Matroid d2 = minor(t4, 0, bit(lab.w[1])).first;
  CHECK(is_isomorphic(d1, d2));

  // U_{2,4} is not a restriction of the (binary) Fano plane
  const Matroid f = fano();
  for (Mask d : k_subsets_lex(7, 3))
    CHECK_FALSE(is_isomorphic(uniform(2, 4), minor(f, 0, d).first));
}

TEST_CASE("is_isomorphic agrees with canonical forms") {
  const std::vector<Matroid> pool = {uniform(2, 4), uniform(2, 5),  wheel(3),
                                     whirl(3),      theta(3).first, dual(fano()),
                                     fano(),        l8(),           theta_minus(3).first};
  for (const Matroid& a : pool)
    for (const Matroid& b : pool) {
      if (a.size() != b.size()) continue;
      CHECK(is_isomorphic(a, b) ==
            (a.rank() == b.rank() && canonical_form(a) == canonical_form(b)));
    }
}

TEST_CASE("find_isomorphism returns a valid bijection") {
  std::mt19937 rng(23);
  const Matroid m = l8();
  std::vector<int> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  const Matroid shuffled = relabel(m, perm);
  const auto phi = find_isomorphism(m, shuffled);
  REQUIRE(phi.has_value());
  for (Mask x = 0; x <= m.ground(); ++x) {
    Mask img = 0;
    for (int e : elements_of(x)) img |= bit((*phi)[e]);
    CHECK(m.rank(x) == shuffled.rank(img));
  }
}

TEST_CASE("fingerprint equality is implied by isomorphism") {
  std::mt19937 rng(5);
  for (const Matroid& m : {fano(), wheel(4), l8()}) {
    std::vector<int> perm(m.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(iso_fingerprint(m) == iso_fingerprint(relabel(m, perm)));
  }
  CHECK(iso_fingerprint(wheel(3)) != iso_fingerprint(whirl(3)));
}
