#include <doctest.h>

#include <set>
#include <stdexcept>

#include "cellmod/center.hpp"
#include "cellmod/fourier.hpp"

using namespace cellmod;

namespace {

std::set<std::pair<int, int>> nonspecial_pairs(const DihedralPairSet& ps) {
  std::set<std::pair<int, int>> out;
  for (const auto& t : ps.pairs)
    if (t.special == 0) out.insert({t.i, t.j});
  return out;
}

}  // namespace

TEST_CASE("dihedral pair generation") {
  DihedralPairSet p5 = dihedral_pairs(5);
  CHECK(nonspecial_pairs(p5) == std::set<std::pair<int, int>>{{1, 2}, {1, 3}, {0, 1}, {0, 2}});
  CHECK(p5.special_count() == 0);

  DihedralPairSet p4 = dihedral_pairs(4);
  CHECK(nonspecial_pairs(p4) == std::set<std::pair<int, int>>{{1, 2}, {0, 1}});
  CHECK(p4.special_count() == 2);
  CHECK(p4.pairs.size() == 4);

  DihedralPairSet p7 = dihedral_pairs(7);
  CHECK(p7.pairs.size() == 9);
  CHECK(p7.special_count() == 0);

  CHECK_THROWS_AS(dihedral_pairs(2), std::invalid_argument);
}

TEST_CASE("pair counts match the center inventories") {
  for (int p = 3; p <= 13; ++p) {
    DihedralPairSet ps = dihedral_pairs(p);
    CenterData cd = center_adjoint(p - 1);
    CHECK(ps.pairs.size() == cd.simples.size());
    if (p % 2 == 0) {
      int m = p / 2 - 1;
      CHECK(ps.pairs.size() == static_cast<size_t>(m * m + m + 2));
    } else {
      int m = (p - 1) / 2;
      CHECK(ps.pairs.size() == static_cast<size_t>(m * m));
    }
  }
}

TEST_CASE("pairing values") {
  // <(0,1),(0,1)> = -(q - q^{-1})^2 / p with q^2 = xi
  for (int p : {4, 5, 7, 8}) {
    QuantumSpec spec(2 * static_cast<unsigned>(p), 1);
    Cyclotomic q = spec.q_power(1);
    Cyclotomic diff = q - q.inverse();
    Cyclotomic expected = -(diff * diff) / Cyclotomic::from_integer(p);
    CHECK(dihedral_pairing(p, {0, 1, 0}, {0, 1, 0}) == expected);
  }
  CHECK_THROWS_AS(dihedral_pairing(4, {0, 2, +1}, {0, 1, 0}), std::invalid_argument);
}

TEST_CASE("pairing symmetry and integrality after scaling") {
  for (int p = 3; p <= 12; ++p) {
    DihedralPairSet ps = dihedral_pairs(p);
    Cyclotomic scale = Cyclotomic::from_integer(p);
    for (const auto& t1 : ps.pairs) {
      if (t1.special != 0) continue;
      for (const auto& t2 : ps.pairs) {
        if (t2.special != 0) continue;
        Cyclotomic v = dihedral_pairing(p, t1, t2);
        CHECK(v == dihedral_pairing(p, t2, t1));
        // p * v is a sum of roots of unity: integral coordinates
        Cyclotomic scaled = scale * v;
        CHECK(scaled.denominator() == 1);
      }
    }
  }
}

TEST_CASE("pair to object dictionary") {
  CHECK(pair_to_object(5, {0, 1, 0}).grid == std::array<int, 2>{0, 0});
  CHECK(pair_to_object(5, {1, 3, 0}).grid == std::array<int, 2>{1, 3});
  PairObject sp = pair_to_object(4, {0, 2, +1});
  CHECK(sp.split == 1);
  CHECK(sp.grid == std::array<int, 2>{1, 1});
}

TEST_CASE("flat involution") {
  CHECK(flat_involution(5, {1, 2, 0}) == DihedralPair{1, 3, 0});
  CHECK(flat_involution(5, {0, 1, 0}) == DihedralPair{0, 1, 0});
  CHECK(flat_involution(4, {0, 2, +1}) == DihedralPair{0, 2, +1});
  for (int p = 3; p <= 12; ++p)
    for (const auto& t : dihedral_pairs(p).pairs)
      CHECK(flat_involution(p, flat_involution(p, t)) == t);
}

TEST_CASE("dictionary is a bijection onto the center simples") {
  for (int p = 3; p <= 13; ++p) {
    FourierData fd = fourier_dihedral(p);
    std::set<size_t> targets(fd.dictionary.begin(), fd.dictionary.end());
    CHECK(targets.size() == fd.center.simples.size());
  }
}

TEST_CASE("fourier matrix for p=4 is the displayed sign matrix") {
  FourierData fd = fourier_dihedral(4);
  Cyclotomic half = Cyclotomic::from_rational(Rational(1, 2));
  CycMatrix expected = scalar_times(
      half, int_matrix({{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}}));
  // order pairs as (0,1),(1,2),(0,2)+,(0,2)-
  REQUIRE(fd.pairs.pairs.size() == 4);
  CHECK(fd.pairs.pairs[0].label() == "(0,1)");
  CHECK(fd.pairs.pairs[1].label() == "(1,2)");
  CHECK(matrices_equal(fd.matrix, expected));
}

TEST_CASE("fibonacci pairing entry equals the center entry") {
  // <(1,2),(1,2)> at p = 5 equals the normalized (X2,X2)-copy entry
  FourierData fd = fourier_dihedral(5);
  CycMatrix norm = normalize_center(fd.center);
  size_t idx = 0;
  while (fd.pairs.pairs[idx].label() != "(1,2)") ++idx;
  Cyclotomic v = dihedral_pairing(5, fd.pairs.pairs[idx], fd.pairs.pairs[idx]);
  CHECK(v == norm[fd.dictionary[idx]][fd.dictionary[idx]]);
  // exact value: (phi - 3)/5
  Cyclotomic phi =
      Cyclotomic::one() + Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 4);
  CHECK(v == (phi - Cyclotomic::from_integer(3)) / Cyclotomic::from_integer(5));
}

TEST_CASE("expected matrices for the catalog cases") {
  HCaseMatrices a = expected_matrix('A');
  CHECK(a.options.size() == 1);
  CHECK(matrices_equal(a.options[0], int_matrix({{1}})));

  HCaseMatrices b = expected_matrix('B');
  REQUIRE(b.options.size() == 1);
  CHECK(is_symmetric(b.options[0]));
  CHECK(is_unitary_scaled(b.options[0], Cyclotomic::one()));

  HCaseMatrices c = expected_matrix('C');
  REQUIRE(c.options.size() == 2);
  CHECK(c.selected == 1);
  Cyclotomic half = Cyclotomic::from_rational(Rational(1, 2));
  CHECK(matrices_equal(
      c.options[1],
      scalar_times(half, int_matrix(
                             {{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, -1, 1}, {1, -1, 1, -1}}))));

  HCaseMatrices d = expected_matrix('D');
  REQUIRE(d.options.size() == 2);
  CHECK(d.selected == 0);
  CHECK(matrices_equal(d.options[0], b.options[0]));
  CHECK_FALSE(matrices_equal(d.options[1], d.options[0]));
  // the alternative replaces the golden ratio by its Galois conjugate but
  // stays unitary
  CHECK(is_unitary_scaled(d.options[1], Cyclotomic::one()));

  CHECK_THROWS_AS(expected_matrix('E'), std::domain_error);
  CHECK_THROWS_AS(expected_matrix('X'), std::invalid_argument);
}
