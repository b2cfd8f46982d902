#include <doctest.h>

#include <algorithm>
#include <random>

#include "m3k/constructions.hpp"
#include "m3k/iso.hpp"
#include "m3k/matroid.hpp"
#include "oracle.hpp"

using namespace m3k;

namespace {
Matroid u24() { return uniform(2, 4); }
}

TEST_CASE("from_bases uniform and loops") {
  const Matroid m = from_bases(4, k_subsets_lex(4, 2));
  CHECK(m.rank() == 2);
  CHECK(m.size() == 4);
  for (Mask x = 0; x <= m.ground(); ++x) CHECK(m.rank(x) == std::min(count(x), 2));

  const Matroid loop = from_bases(1, {0});
  CHECK(loop.rank() == 0);
  CHECK(loops(loop) == bit(0));
}

TEST_CASE("from_bases accepts a two-basis family and gets the circuit right") {
  const std::vector<Mask> bs = {bit(0) | bit(1), bit(0) | bit(2)};
  const Matroid m = from_bases(3, bs);
  for (Mask x = 0; x <= m.ground(); ++x)
    CHECK(m.rank(x) == oracle::rank_from_bases({bs.begin(), bs.end()}, x));
  CHECK(oracle::rank_from_bases({bs.begin(), bs.end()}, bit(1) | bit(2)) == 1);
  CHECK(is_circuit(m, bit(1) | bit(2)));
}

TEST_CASE("from_bases rejects bad families") {
  CHECK_THROWS(from_bases(3, {}));
  CHECK_THROWS(from_bases(3, {bit(0), bit(0) | bit(1)}));  // unequal cardinality
  CHECK_THROWS(from_bases(4, {bit(0) | bit(1), bit(2) | bit(3)}));  // exchange fails
}

TEST_CASE("from_circuits basics") {
  // theta_2 relabelled w1,w2,z1,z2 -> 0,1,2,3: circuits {{0,3},{1,2}}
  const Matroid t2 = from_circuits(4, {bit(0) | bit(3), bit(1) | bit(2)});
  CHECK(is_isomorphic(t2, direct_sum(uniform(1, 2), uniform(1, 2))));

  const Matroid triangle = from_circuits(3, {bit(0) | bit(1) | bit(2)});
  CHECK(triangle == uniform(2, 3));

  CHECK_THROWS(from_circuits(3, {bit(0), bit(0) | bit(1)}));  // containment
  CHECK_THROWS(from_circuits(3, {Mask{0}}));                  // empty circuit
  // independence system whose maximal sets disagree: not a matroid
  CHECK_THROWS(from_circuits(4, {bit(0) | bit(1), bit(0) | bit(2) | bit(3)}));
}

TEST_CASE("from_linear_rep over small fields") {
  const Matroid f = fano();
  CHECK(f.size() == 7);
  CHECK(f.rank() == 3);

  CHECK(from_linear_rep(2, {{1, 0}, {0, 1}}) == uniform(2, 2));

  // GF(3) matrix whose 2-subsets of columns are all independent
  const std::vector<std::vector<int>> rows = {{1, 0, 1, 1}, {0, 1, 1, 2}};
  for (Mask pair : k_subsets_lex(4, 2)) {
    std::vector<std::vector<int>> cols;
    for (int j : elements_of(pair)) cols.push_back({rows[0][j], rows[1][j]});
    CHECK(oracle::gf_rank(3, cols) == 2);
  }
  CHECK(from_linear_rep(3, rows) == uniform(2, 4));

  CHECK_THROWS(from_linear_rep(4, {{1}}));
}

TEST_CASE("rank, corank, closure, coclosure") {
  const Matroid m = u24();
  CHECK(m.rank(bit(0) | bit(1) | bit(2)) == 2);
  CHECK(m.rank(0) == 0);
  CHECK(m.corank(bit(0) | bit(1) | bit(2)) == 2);  // 3 + 1 - 2

  CHECK(closure(m, bit(0) | bit(1)) == m.ground());
  const Matroid with_loop = from_bases(3, {bit(0), bit(1)});
  CHECK(closure(with_loop, 0) == bit(2));  // closure of the empty set = loops

  const Matroid d = dual(m);
  CHECK(coclosure(m, bit(0) | bit(1)) == closure(d, bit(0) | bit(1)));
  CHECK(coclosure(m, bit(0) | bit(1)) == m.ground());
}

TEST_CASE("dual is an involution and matches goldens") {
  CHECK(dual(u24()) == u24());
  CHECK(dual(uniform(0, 1)) == uniform(1, 1));
  CHECK(dual(fano()).rank() == 4);
  for (const Matroid& m : {u24(), fano(), wheel(3), theta(3).first, l8()})
    CHECK(dual(dual(m)) == m);
}

TEST_CASE("minor") {
  auto [m1, g1] = minor(u24(), bit(0), 0);
  CHECK(m1 == uniform(1, 3));
  CHECK(g1.map_elem(1) == 0);
  CHECK(g1.map_up(bit(0)) == bit(1));

  auto [m2, g2] = minor(u24(), 0, 0);
  CHECK(m2 == u24());
  CHECK(g2.is_identity());

  // delete one Fano point: 6 elements, rank 3, exactly four triangles
  auto [m3, g3] = minor(fano(), 0, bit(6));
  CHECK(m3.size() == 6);
  CHECK(m3.rank() == 3);
  int tri = 0;
  for (Mask t : oracle::circuits_from_rank([&](Mask x) { return m3.rank(x); }, 6))
    if (count(t) == 3) ++tri;
  CHECK(tri == 4);
  (void)g3;

  CHECK_THROWS(minor(u24(), bit(0), bit(0)));
}

TEST_CASE("circuits, cocircuits, triangles, triads") {
  const auto c = circuits(u24());
  CHECK(c.size() == 4);
  for (Mask x : c) CHECK(count(x) == 3);
  CHECK(triads(u24()) == c);  // cocircuits are complements of rank-1 flats

  const auto [t2, lab] = theta(2);
  const auto tc = circuits(t2);
  REQUIRE(tc.size() == 2);
  CHECK(std::find(tc.begin(), tc.end(), bit(lab.w[0]) | bit(lab.z[1])) != tc.end());
  CHECK(std::find(tc.begin(), tc.end(), bit(lab.w[1]) | bit(lab.z[0])) != tc.end());
}

TEST_CASE("simplify keeps the smallest representative") {
  auto [s1, g1] = simplify(uniform(1, 3));
  CHECK(s1 == uniform(1, 1));
  CHECK(g1.kept == bit(0));

  auto [s2, g2] = simplify(fano());
  CHECK(s2 == fano());
  CHECK(g2.is_identity());
}

TEST_CASE("cosimplify collapses series classes and commutes with dual") {
  // a 4-cycle is one series class: contracting it down leaves a single loop
  const Matroid c4 = graphic_from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  auto [co, g] = cosimplify(c4);
  CHECK(is_isomorphic(co, uniform(0, 1)));
  CHECK(g.kept == bit(0));

  // a genuine single subdivision inside a 3-connected host folds back:
  // subdivide one edge of K_4 and cosimplify
  const Matroid k4sub = graphic_from_edges(
      5, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 4}, {4, 3}});
  auto [co2, g2] = cosimplify(k4sub);
  CHECK(is_isomorphic(co2, wheel(3)));
  CHECK(count(g2.kept) == 6);

  for (const Matroid& m : {c4, fano(), u24(), l8(), wheel(3), uniform(1, 4)})
    CHECK(cosimplify(dual(m)).first == dual(simplify(m).first));
}

TEST_CASE("direct_sum") {
  CHECK(is_isomorphic(direct_sum(uniform(1, 2), uniform(1, 2)), theta(2).first));
  CHECK(direct_sum(u24(), Matroid{}) == u24());
  const Matroid mix = direct_sum(uniform(1, 1), uniform(0, 1));
  CHECK_FALSE(oracle::n_connected([&](Mask x) { return mix.rank(x); }, 2, 2));
}

TEST_CASE("rank table axioms hold for the constructions") {
  for (const Matroid& m : {u24(), fano(), dual(fano()), wheel(4), whirl(3), l8(),
                           theta(3).first, theta(4).first, theta_minus(4).first}) {
    std::string why;
    CHECK_MESSAGE(m.validate(&why), why);
  }
}

TEST_CASE("lambda self-duality on random subsets") {
  std::mt19937 rng(7);
  for (const Matroid& m : {fano(), wheel(4), theta(4).first, l8()}) {
    const Matroid d = dual(m);
    for (int trial = 0; trial < 200; ++trial) {
      const Mask x = static_cast<Mask>(rng()) & m.ground();
      const int lm = m.rank(x) + m.rank(m.ground() & ~x) - m.rank();
      const int ld = d.rank(x) + d.rank(d.ground() & ~x) - d.rank();
      CHECK(lm == ld);
    }
  }
}

TEST_CASE("from_circuits round-trips rank tables") {
  for (const Matroid& m : {u24(), fano(), wheel(3), theta(3).first, l8()})
    CHECK(from_circuits(m.size(), circuits(m)) == m);
}

TEST_CASE("subset enumeration orders") {
  const auto lex = k_subsets_lex(4, 2);
  const std::vector<Mask> lex_want = {bit(0) | bit(1), bit(0) | bit(2), bit(0) | bit(3),
                                      bit(1) | bit(2), bit(1) | bit(3), bit(2) | bit(3)};
  CHECK(lex == lex_want);
  const auto colex = k_subsets_colex(4, 2);
  const std::vector<Mask> colex_want = {bit(0) | bit(1), bit(0) | bit(2), bit(1) | bit(2),
                                        bit(0) | bit(3), bit(1) | bit(3), bit(2) | bit(3)};
  CHECK(colex == colex_want);
}
