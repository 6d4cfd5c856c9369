#include "cellmod/center.hpp"

#include <stdexcept>

#include "cellmod/verlinde.hpp"

namespace cellmod {

namespace {

std::string pair_label(int i, int j, const char* suffix = "") {
  return "(X" + std::to_string(i) + ",X" + std::to_string(j) + ")" + suffix;
}

std::vector<std::string> underlying_of(int k, int i, int j) {
  std::vector<std::string> u;
  for (int c = 0; c < k; ++c)
    if (admissible(k, i, j, c)) u.push_back("X" + std::to_string(c));
  return u;
}

Cyclotomic category_dim(const QuantumSpec& spec, bool even_only) {
  Cyclotomic d;
  for (int i = 0; i < static_cast<int>(spec.rank()); i += even_only ? 2 : 1) {
    Cyclotomic q = quantum_number(i + 1, spec);
    d += q * q;
  }
  return d;
}

void finalize(CenterData& cd) {
  Cyclotomic sum;
  for (const auto& v : cd.smatrix[0]) sum += v * v;
  if (sum != cd.global_dim)
    throw std::logic_error("center: unit row does not reproduce the global dimension");
  if (cd.dim_sqrt * cd.dim_sqrt != cd.global_dim)
    throw std::logic_error("center: dim_sqrt mismatch");
  if (!is_symmetric(cd.smatrix)) throw std::logic_error("center: S-matrix not symmetric");
}

}  // namespace

CenterData center_modular(const QuantumSpec& spec) {
  const int k = static_cast<int>(spec.rank());
  CycMatrix s = verlinde_smatrix(spec);
  if (!is_invertible(s)) throw std::invalid_argument("center_modular: S-matrix is singular");
  CenterData cd;
  cd.kind = "modular";
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      cd.simples.push_back({pair_label(i, j), {i, j}, underlying_of(k, i, j), 0});
  cd.smatrix = kronecker(s, s);
  cd.dim_sqrt = category_dim(spec, false);
  cd.global_dim = cd.dim_sqrt * cd.dim_sqrt;
  finalize(cd);
  return cd;
}

CenterData center_adjoint_even(int k, unsigned l) {
  if (k < 2 || k % 2 != 0)
    throw std::invalid_argument("center_adjoint_even: k must be even and at least 2");
  QuantumSpec spec = QuantumSpec::for_rank(static_cast<unsigned>(k), l);
  AdjointData ad = adjoint(spec);
  if (!ad.invertible)
    throw std::logic_error("center_adjoint_even: restricted S-matrix unexpectedly singular");
  CenterData cd;
  cd.kind = "adjoint_even";
  for (int a : ad.labels)
    for (int b : ad.labels)
      cd.simples.push_back({pair_label(a, b), {a, b}, underlying_of(k, a, b), 0});
  cd.smatrix = kronecker(ad.smatrix, ad.smatrix);
  cd.dim_sqrt = category_dim(spec, true);
  cd.global_dim = cd.dim_sqrt * cd.dim_sqrt;
  finalize(cd);
  return cd;
}

CenterData center_adjoint_odd(int k, unsigned l) {
  if (k < 3 || k % 2 == 0)
    throw std::invalid_argument("center_adjoint_odd: k must be odd and at least 3");
  QuantumSpec spec = QuantumSpec::for_rank(static_cast<unsigned>(k), l);
  CycMatrix s = verlinde_smatrix(spec);
  const int mid = (k - 1) / 2;

  // centralizer of the rep(Z/2) subcategory: grid points of equal parity;
  // de-equivariantization identifies (i,j) with (k-1-i, k-1-j)
  std::vector<std::array<int, 2>> reps;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      if ((i + j) % 2 != 0) continue;
      if (i == mid && j == mid) continue;
      std::array<int, 2> mirror{k - 1 - i, k - 1 - j};
      if (std::array<int, 2>{i, j} > mirror) continue;  // keep the row-major smaller rep
      reps.push_back({i, j});
    }

  auto entry = [&](const std::array<int, 2>& x, const std::array<int, 2>& y) {
    return s[x[0]][y[0]] * s[x[1]][y[1]];
  };
  const std::array<int, 2> fixed{mid, mid};
  const size_t ns = reps.size();
  const size_t total = ns + 2;

  CenterData cd;
  cd.kind = "adjoint_odd";
  for (const auto& r : reps) cd.simples.push_back({pair_label(r[0], r[1]), r, underlying_of(k, r[0], r[1]), 0});
  cd.simples.push_back({pair_label(mid, mid, "+"), fixed, underlying_of(k, mid, mid), +1});
  cd.simples.push_back({pair_label(mid, mid, "-"), fixed, underlying_of(k, mid, mid), -1});

  Cyclotomic d = category_dim(spec, true);
  cd.dim_sqrt = d;
  cd.global_dim = d * d;

  cd.smatrix.assign(total, std::vector<Cyclotomic>(total));
  for (size_t i = 0; i < ns; ++i)
    for (size_t j = 0; j < ns; ++j) cd.smatrix[i][j] = entry(reps[i], reps[j]);
  Cyclotomic half = Cyclotomic::from_rational(Rational(1, 2));
  for (size_t i = 0; i < ns; ++i) {
    Cyclotomic v = entry(reps[i], fixed) * half;
    cd.smatrix[i][ns] = cd.smatrix[i][ns + 1] = v;
    cd.smatrix[ns][i] = cd.smatrix[ns + 1][i] = v;
  }

  // split block: with a the fixed-point self-entry and c the squared mass of
  // the fixed row on non-split columns, unitarity and the row-sum constraint
  // force 2P^2 - aP - c = 0 with discriminant a^2 + 8c = (2 dim)^2; of the two
  // exact roots the positive-branch one reproduces the known small cases
  Cyclotomic a = entry(fixed, fixed);
  Cyclotomic c;
  for (size_t i = 0; i < ns; ++i) {
    Cyclotomic v = entry(reps[i], fixed);
    c += v * v;
  }
  c *= Cyclotomic::from_rational(Rational(1, 4));
  Cyclotomic two_d = Cyclotomic::from_integer(2) * d;
  if (a * a + Cyclotomic::from_integer(8) * c != two_d * two_d)
    throw std::logic_error(
        "center_adjoint_odd: split-block constraint system is inconsistent "
        "(discriminant is not the squared dimension)");
  Cyclotomic quarter = Cyclotomic::from_rational(Rational(1, 4));
  Cyclotomic p = (a + two_d) * quarter;
  Cyclotomic q = (a - two_d) * quarter;
  cd.smatrix[ns][ns] = cd.smatrix[ns + 1][ns + 1] = p;
  cd.smatrix[ns][ns + 1] = cd.smatrix[ns + 1][ns] = q;

  // the split rows must sum to the restricted parent row
  if (p + q + q + p != a)
    throw std::logic_error("center_adjoint_odd: split rows do not sum to the parent row");
  finalize(cd);
  return cd;
}

CenterData center_adjoint(int k, unsigned l) {
  return k % 2 == 0 ? center_adjoint_even(k, l) : center_adjoint_odd(k, l);
}

CycMatrix normalize_center(const CenterData& cd) {
  if (cd.dim_sqrt * cd.dim_sqrt != cd.global_dim)
    throw std::domain_error("normalize_center: no exact square root of the global dimension");
  Cyclotomic inv = cd.dim_sqrt.inverse();
  return scalar_times(inv, cd.smatrix);
}

}  // namespace cellmod
