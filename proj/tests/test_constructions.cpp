#include <doctest.h>

#include "m3k/connectivity.hpp"
#include "m3k/constructions.hpp"
#include "m3k/elasticity.hpp"
#include "m3k/iso.hpp"
#include "m3k/structures.hpp"
#include "oracle.hpp"

using namespace m3k;

TEST_CASE("uniform family") {
  CHECK(dual(uniform(2, 4)) == uniform(2, 4));
  for (Mask t : k_subsets_lex(4, 3)) CHECK(is_circuit(uniform(2, 4), t));
  CHECK(uniform(0, 1).rank() == 0);
  // brute-force separation check
  const Matroid u25 = uniform(2, 5);
  CHECK(oracle::n_connected([&](Mask x) { return u25.rank(x); }, 5, 3));
  CHECK(u25.corank() == 3);
  CHECK_THROWS(uniform(3, 2));
}

TEST_CASE("graphic matroids") {
  const Matroid k4 = graphic_from_edges(
      4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(k4.rank() == 3);
  // count 3-cycles and minimal vertex cuts with the independent circuit oracle
  int tri = 0, tds = 0;
  const auto circ = oracle::circuits_from_rank([&](Mask x) { return k4.rank(x); }, 6);
  for (Mask c : circ)
    if (oracle::popcount(c) == 3) ++tri;
  const Matroid k4d = dual(k4);
  for (Mask c : oracle::circuits_from_rank([&](Mask x) { return k4d.rank(x); }, 6))
    if (oracle::popcount(c) == 3) ++tds;
  CHECK(tri == 4);
  CHECK(tds == 4);  // one star per vertex
  CHECK(static_cast<int>(triangles(k4).size()) == tri);
  CHECK(static_cast<int>(triads(k4).size()) == tds);

  CHECK(graphic_from_edges(3, {{0, 1}, {1, 2}, {2, 0}}) == uniform(2, 3));
  CHECK(graphic_from_edges(4, {{0, 1}, {1, 2}, {2, 3}}) == uniform(3, 3));
}

TEST_CASE("wheels and whirls") {
  CHECK(is_isomorphic(wheel(3), mk4()));
  CHECK(is_isomorphic(whirl(2), uniform(2, 4)));
  CHECK_THROWS(wheel(1));
  CHECK_THROWS(whirl(1));

  const Matroid w4 = wheel(4);
  CHECK(w4.size() == 8);
  CHECK(w4.rank() == 4);
  const auto fans = maximal_fans(w4);
  REQUIRE(!fans.empty());
  bool full = false;
  for (const auto& f : fans)
    if (f.length() == 8) full = true;
  CHECK(full);

  for (int r = 3; r <= 6; ++r) {
    const Matroid wr = wheel(r);
    const Matroid hr = whirl(r);
    CHECK(oracle::n_connected([&](Mask x) { return wr.rank(x); }, 2 * r, 3));
    CHECK(oracle::n_connected([&](Mask x) { return hr.rank(x); }, 2 * r, 3));
  }
}

TEST_CASE("relax") {
  const Matroid f = fano();
  const Mask line = closure(f, bit(0) | bit(1));
  const Matroid fm = relax(f, line);
  CHECK(fm.rank() == 3);
  CHECK(fm.size() == 7);
  CHECK_FALSE(is_isomorphic(f, fm));

  CHECK(is_isomorphic(relax(wheel(2), wheel_rim(2)), uniform(2, 4)));
  CHECK_THROWS(relax(f, bit(0) | bit(1)));  // not a circuit-hyperplane
}

TEST_CASE("theta family") {
  CHECK(is_isomorphic(theta(2).first, direct_sum(uniform(1, 2), uniform(1, 2))));
  CHECK(is_isomorphic(theta(3).first, mk4()));
  CHECK_THROWS(theta(1));

  for (int n = 2; n <= 6; ++n) CHECK_NOTHROW(theta(n));  // from_circuits accepts

  // deleting different segment elements gives the same matroid
  for (int n = 3; n <= 5; ++n) {
    const auto [t, lab] = theta(n);
    const Matroid ref = minor(t, 0, bit(lab.w[0])).first;
    for (int i = 1; i < n; ++i)
      CHECK(is_isomorphic(ref, minor(t, 0, bit(lab.w[i])).first));
    CHECK(is_isomorphic(ref, theta_minus(n).first));
  }

  // W is a segment, Z attains corank 2
  for (int n = 3; n <= 5; ++n) {
    const auto [t, lab] = theta(n);
    Mask w = 0, z = 0;
    for (int i : lab.w) w |= bit(i);
    for (int i : lab.z) z |= bit(i);
    CHECK(t.rank(w) == 2);
    CHECK(t.corank(z) == 2);
    bool found = false;
    for (Mask seg : segments(t))
      if (seg == w) found = true;
    CHECK(found);
  }

  // theta_minus(3) is the 5-element fan: unique maximal fan of length 5
  const auto fans = maximal_fans(theta_minus(3).first);
  REQUIRE(fans.size() == 1);
  CHECK(fans[0].length() == 5);
}

TEST_CASE("l8 goldens") {
  const Matroid m = l8();
  CHECK(m.size() == 8);
  CHECK(m.rank() == 3);
  CHECK(is_n_connected(m, 3));

  // (X, {e}, Y) with X = {x1..x4}, Y = {y1,y2,y3} is a cyclic 3-separation
  const Mask x = bit(0) | bit(1) | bit(2) | bit(3);
  const Mask y = bit(5) | bit(6) | bit(7);
  CHECK(is_vertical_sep3(m, {x, 4, y, SepKind::cyclic}));
  bool listed = false;
  for (const auto& s : cyclic_3_separations(m))
    if (s.e == 4 && (s.x == x || s.y == x)) listed = true;
  CHECK(listed);

  // l8 \ e has a U_{2,4}-minor whose ground set contains Y
  auto [del_e, g] = minor(m, 0, bit(4));
  const Mask y_down = g.map_down(y);
  bool witness_found = false;
  for (const MinorWitness& w : minor_witnesses(del_e, uniform(2, 4)))
    if ((y_down & w.retained) == y_down) witness_found = true;
  CHECK(witness_found);
}

TEST_CASE("fano goldens") {
  const Matroid f = fano();
  CHECK(static_cast<int>(triangles(f).size()) == 7);
  for (int e = 0; e < 7; ++e)
    CHECK(is_isomorphic(simplify(minor(f, bit(e), 0).first).first, uniform(2, 3)));
  CHECK(oracle::n_connected([&](Mask x) { return f.rank(x); }, 7, 3));
}
