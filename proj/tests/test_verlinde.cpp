#include <doctest.h>

#include <stdexcept>

#include <random>

#include "cellmod/basedring.hpp"
#include "cellmod/verlinde.hpp"

using namespace cellmod;

namespace {

Cyclotomic golden_ratio() {
  return Cyclotomic::one() + Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 4);
}

Cyclotomic sqrt2() {
  return Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, -1);
}

}  // namespace

TEST_CASE("admissibility") {
  CHECK(admissible(3, 0, 0, 0));
  CHECK(admissible(3, 1, 2, 1));
  CHECK_FALSE(admissible(3, 1, 2, 2));   // parity
  CHECK_FALSE(admissible(3, 2, 2, 2));   // truncation: a+b+c > 2k-2
  CHECK(admissible(4, 2, 2, 2));
  CHECK_THROWS_AS(admissible(3, 1, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(admissible(3, -1, 0, 0), std::invalid_argument);
}

TEST_CASE("theta values") {
  QuantumSpec f = QuantumSpec::for_rank(4, 1);
  CHECK(theta(0, 0, 0, f) == Cyclotomic::one());
  // theta(2,2,2) = -[4]! [1]!^3 / [2]!^3 = -1/phi
  Cyclotomic phi = golden_ratio();
  CHECK(theta(2, 2, 2, f) == -(phi - Cyclotomic::one()));
  CHECK_THROWS_AS(theta(1, 1, 1, f), std::invalid_argument);  // parity
  // symmetry in the three arguments on random admissible triples
  std::mt19937_64 rng(11);
  QuantumSpec s6 = QuantumSpec::for_rank(6, 1);
  int checked = 0;
  while (checked < 25) {
    int a = static_cast<int>(rng() % 6), b = static_cast<int>(rng() % 6),
        c = static_cast<int>(rng() % 6);
    if (!admissible(6, a, b, c)) continue;
    ++checked;
    CHECK(theta(a, b, c, s6) == theta(b, a, c, s6));
    CHECK(theta(a, b, c, s6) == theta(c, b, a, s6));
  }
}

TEST_CASE("sixj base cases") {
  QuantumSpec f = QuantumSpec::for_rank(4, 1);
  CHECK(sixj(f, 0, 0, 0, 0, 0, 0) == Cyclotomic::one());
  CHECK_THROWS_AS(sixj(f, 1, 0, 0, 0, 0, 0), std::invalid_argument);
}

TEST_CASE("sixj regression: the I2(3) associator scalar") {
  QuantumSpec spec = QuantumSpec::for_rank(2, 1);
  CHECK(sixj(spec, 1, 1, 1, 1, 0, 0) == Cyclotomic::from_integer(-1));
}

TEST_CASE("fibonacci associator matrix") {
  QuantumSpec f = QuantumSpec::for_rank(4, 1);
  AssociatorBlock blk = associator_matrix(f, 2, 2, 2, 2);
  REQUIRE(blk.f_labels == std::vector<int>{0, 2});
  REQUIRE(blk.e_labels == std::vector<int>{0, 2});
  Cyclotomic phi = golden_ratio();
  Cyclotomic one = Cyclotomic::one();
  Cyclotomic phi_inv = phi - one;
  CHECK(blk.entries[0][0] == phi_inv);
  CHECK(blk.entries[0][1] == -(one + phi));
  CHECK(blk.entries[1][0] == -phi_inv.pow(3));
  CHECK(blk.entries[1][1] == -phi_inv);
}

TEST_CASE("pentagon identity for small ranks") {
  // the full k <= 6 sweep runs in the acceptance suite
  for (unsigned k : {2u, 3u, 4u}) {
    QuantumSpec spec = QuantumSpec::for_rank(k, 1);
    CHECK(check_pentagon(spec) > 0);
  }
}

TEST_CASE("verlinde smatrix k=3") {
  QuantumSpec spec = QuantumSpec::for_rank(3, 1);
  CycMatrix s = verlinde_smatrix(spec);
  Cyclotomic r2 = sqrt2();
  CHECK(s[0][0] == Cyclotomic::one());
  CHECK(s[0][1] == -r2);
  CHECK(s[0][2] == Cyclotomic::one());
  CHECK(s[1][1].is_zero());
  CHECK(s[1][2] == r2);
  CHECK(s[2][2] == Cyclotomic::one());
  CHECK(is_symmetric(s));
}

TEST_CASE("smatrix first row and symmetry") {
  for (unsigned k : {2u, 4u, 5u, 7u}) {
    QuantumSpec spec = QuantumSpec::for_rank(k, 1);
    CycMatrix s = verlinde_smatrix(spec);
    CHECK(is_symmetric(s));
    for (unsigned j = 0; j < k; ++j) {
      Cyclotomic expected = quantum_number(j + 1, spec);
      if (j % 2 != 0) expected = -expected;
      CHECK(s[0][j] == expected);
    }
  }
}

TEST_CASE("adjoint restriction") {
  QuantumSpec f = QuantumSpec::for_rank(4, 1);
  AdjointData ad = adjoint(f);
  CHECK(ad.labels == std::vector<int>{0, 2});
  CHECK(ad.invertible);
  Cyclotomic phi = golden_ratio();
  CHECK(ad.smatrix[0][1] == phi);
  CHECK(ad.smatrix[1][1] == Cyclotomic::from_integer(-1));

  QuantumSpec s3 = QuantumSpec::for_rank(3, 1);
  AdjointData ad3 = adjoint(s3);
  CHECK_FALSE(ad3.invertible);
  CHECK(ad3.smatrix == CycMatrix{{Cyclotomic::one(), Cyclotomic::one()},
                                 {Cyclotomic::one(), Cyclotomic::one()}});
  // parity: even x even never fuses to odd
  for (int a : {0, 2})
    for (int b : {0, 2}) CHECK_FALSE(admissible(4, a, b, 1));
  // invertibility alternates with the parity of k
  for (unsigned k = 2; k <= 9; ++k) CHECK(adjoint(QuantumSpec::for_rank(k, 1)).invertible == (k % 2 == 0));
}

TEST_CASE("verlinde formula recovers the fusion rules for even k") {
  for (unsigned k : {2u, 4u, 6u}) {
    QuantumSpec spec = QuantumSpec::for_rank(k, 1);
    CycMatrix s = verlinde_smatrix(spec);
    Cyclotomic dim;
    for (unsigned i = 0; i < k; ++i) {
      Cyclotomic q = quantum_number(i + 1, spec);
      dim += q * q;
    }
    // N_ab^c = (1/dim) sum_m S_am S_bm conj(S_cm) / S_0m, exactly
    BasedRing truth = verlinde_grothendieck(static_cast<int>(k));
    for (unsigned a = 0; a < k; ++a)
      for (unsigned b = 0; b < k; ++b)
        for (unsigned c = 0; c < k; ++c) {
          Cyclotomic acc;
          for (unsigned m = 0; m < k; ++m)
            acc += s[a][m] * s[b][m] * s[c][m].conj() / s[0][m];
          acc /= dim;
          CHECK(acc == Cyclotomic::from_integer(truth.coeff(static_cast<int>(a),
                                                            static_cast<int>(b),
                                                            static_cast<int>(c))));
        }
  }
}

TEST_CASE("fusion tensor equals the grothendieck ring") {
  for (int k : {1, 2, 3, 4, 5, 6}) {
    FusionData fd = fusion_data(QuantumSpec::for_rank(static_cast<unsigned>(k), 1));
    BasedRing ring = verlinde_grothendieck(k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b)
        for (int c = 0; c < k; ++c)
          CHECK(static_cast<long long>(fd.fused(a, b, c)) == ring.coeff(a, b, c));
  }
}

TEST_CASE("sixj table covers exactly the admissible tuples") {
  QuantumSpec spec = QuantumSpec::for_rank(3, 1);
  auto table = sixj_table(spec);
  for (const auto& [key, value] : table) {
    auto [a, b, c, d, e, f] = std::tuple{key[0], key[1], key[2], key[3], key[4], key[5]};
    CHECK(admissible(3, a, b, f));
    CHECK(admissible(3, c, d, f));
    CHECK(admissible(3, a, d, e));
    CHECK(admissible(3, b, c, e));
  }
  CHECK(table.count({0, 0, 0, 0, 0, 0}) == 1);
}

TEST_CASE("alternate exponent l") {
  // l = 3 is coprime to 5 at k = 4; the S-matrix stays symmetric and the
  // pentagon still holds
  QuantumSpec spec = QuantumSpec::for_rank(4, 3);
  CHECK(is_symmetric(verlinde_smatrix(spec)));
  CHECK(check_pentagon(spec) > 0);
}
