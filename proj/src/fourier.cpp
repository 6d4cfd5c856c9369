#include "cellmod/fourier.hpp"

#include <stdexcept>

#include "cellmod/grouprep.hpp"

namespace cellmod {

std::string DihedralPair::label() const {
  std::string s = "(" + std::to_string(i) + "," + std::to_string(j) + ")";
  if (special > 0) s += "+";
  if (special < 0) s += "-";
  return s;
}

DihedralPairSet dihedral_pairs(int p) {
  if (p < 3) throw std::invalid_argument("dihedral_pairs: p must be at least 3");
  DihedralPairSet out;
  out.p = p;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) {
      if (i == 0) {
        if (2 * j < p) out.pairs.push_back({0, j, 0});
      } else if (i + j < p) {
        out.pairs.push_back({i, j, 0});
      }
    }
  if (p % 2 == 0) {
    out.pairs.push_back({0, p / 2, +1});
    out.pairs.push_back({0, p / 2, -1});
  }
  return out;
}

Cyclotomic dihedral_pairing(int p, const DihedralPair& t1, const DihedralPair& t2, unsigned l) {
  if (t1.special != 0 || t2.special != 0)
    throw std::invalid_argument("dihedral_pairing: special tuples have no pairing formula");
  auto xi = [&](long long e) {
    return Cyclotomic::root_of_unity(static_cast<unsigned>(p), e * static_cast<long long>(l));
  };
  long long a = static_cast<long long>(t1.i) * t2.j + static_cast<long long>(t1.j) * t2.i;
  long long b = static_cast<long long>(t1.i) * t2.i + static_cast<long long>(t1.j) * t2.j;
  Cyclotomic num = xi(a) + xi(-a) - xi(b) - xi(-b);
  return num / Cyclotomic::from_integer(Integer(p));
}

PairObject pair_to_object(int p, const DihedralPair& t) {
  PairObject o;
  if (t.special != 0) {
    int m = p / 2 - 1;  // (k-1)/2 for k = p-1
    o.grid = {m, m};
    o.split = t.special;
    return o;
  }
  o.grid = {t.j - t.i - 1, t.j + t.i - 1};
  return o;
}

DihedralPair flat_involution(int p, const DihedralPair& t) {
  if (t.special != 0 || t.i == 0) return t;
  return {t.i, p - t.j, 0};
}

namespace {

size_t locate_simple(const CenterData& cd, int k, PairObject o) {
  std::array<int, 2> grid = o.grid;
  if (o.split == 0) {
    if (k % 2 == 0) {
      // the adjoint-even center lives on even-even grid points
      if (grid[0] % 2 != 0) grid = {k - 1 - grid[0], k - 1 - grid[1]};
    } else {
      std::array<int, 2> mirror{k - 1 - grid[0], k - 1 - grid[1]};
      if (mirror < grid) grid = mirror;
    }
  }
  for (size_t s = 0; s < cd.simples.size(); ++s)
    if (cd.simples[s].grid == grid && cd.simples[s].split == o.split) return s;
  throw std::logic_error("pair dictionary: no center simple at the computed grid point");
}

Cyclotomic galois_twist(const Cyclotomic& c, unsigned a) {
  Cyclotomic acc;
  const unsigned n = c.conductor();
  for (size_t i = 0; i < c.numerators().size(); ++i) {
    if (c.numerators()[i] == 0) continue;
    acc += Cyclotomic::from_integer(c.numerators()[i]) *
           Cyclotomic::root_of_unity(n, static_cast<long long>(a * i));
  }
  return acc / Cyclotomic::from_integer(c.denominator());
}

}  // namespace

FourierData fourier_dihedral(int p, unsigned l) {
  FourierData fd;
  fd.pairs = dihedral_pairs(p);
  const int k = p - 1;
  fd.center = center_adjoint(k, l);
  CycMatrix norm = normalize_center(fd.center);
  const size_t n = fd.pairs.pairs.size();
  if (n != fd.center.simples.size())
    throw std::logic_error("fourier_dihedral: pair count does not match the center");
  fd.dictionary.resize(n);
  for (size_t a = 0; a < n; ++a) {
    DihedralPair t = flat_involution(p, fd.pairs.pairs[a]);
    fd.dictionary[a] = locate_simple(fd.center, k, pair_to_object(p, t));
  }
  fd.matrix.assign(n, std::vector<Cyclotomic>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      if (fd.pairs.pairs[a].special == 0 && fd.pairs.pairs[b].special == 0)
        fd.matrix[a][b] = dihedral_pairing(p, fd.pairs.pairs[a], fd.pairs.pairs[b], l);
      else
        // special rows carry no pairing formula; transport the center values
        fd.matrix[a][b] = norm[fd.dictionary[a]][fd.dictionary[b]];
    }
  return fd;
}

HCaseMatrices expected_matrix(char case_tag) {
  HCaseMatrices out;
  out.case_tag = case_tag;
  switch (case_tag) {
    case 'A': {
      out.options = {int_matrix({{1}})};
      out.selected = 0;
      out.note = "singleton H-cell: the trivial category";
      return out;
    }
    case 'B': {
      // (1/sqrt5) [[x,f,1,1],[f,x,-1,-1],[1,-1,-x,f],[1,-1,f,-x]] with
      // f the golden ratio and x its inverse, basis (X0, X0+X2, X2, X2)
      Cyclotomic f = Cyclotomic::one() + Cyclotomic::root_of_unity(5, 1) +
                     Cyclotomic::root_of_unity(5, 4);
      Cyclotomic x = f - Cyclotomic::one();  // 1/f
      Cyclotomic one = Cyclotomic::one();
      CycMatrix m = {{x, f, one, one},
                     {f, x, -one, -one},
                     {one, -one, -x, f},
                     {one, -one, f, -x}};
      Cyclotomic sqrt5 = f + f - one;
      out.options = {scalar_times(sqrt5.inverse(), m)};
      out.selected = 0;
      out.note = "Fibonacci H-cell: normalized Kronecker square of the rank-2 S-matrix";
      return out;
    }
    case 'C': {
      Cyclotomic half = Cyclotomic::from_rational(Rational(1, 2));
      CycMatrix plain = scalar_times(
          half, center_vec_smatrix(FiniteGroup::cyclic(2), GroupTwist::kTrivial).smatrix);
      CycMatrix twisted = scalar_times(
          half, center_vec_smatrix(FiniteGroup::cyclic(2), GroupTwist::kNontrivialZ2).smatrix);
      out.options = {plain, twisted};
      out.selected = 1;  // the Fourier matrix is the twisted option
      out.note = "Z/2 H-cell: plain and twisted graded vector spaces; the Fourier "
                 "matrix picks the twisted one";
      return out;
    }
    case 'D': {
      HCaseMatrices b = expected_matrix('B');
      CycMatrix alt = b.options[0];
      for (auto& row : alt)
        for (auto& v : row) v = galois_twist(v.embedded(5), 2);
      out.options = {b.options[0], alt};
      out.selected = 0;  // the Fourier matrix stays the Fibonacci one
      out.note = "two categorifications differing by the Galois twist of the golden "
                 "ratio; the Fourier matrix is the untwisted option";
      return out;
    }
    case 'E':
      throw std::domain_error(
          "case E (the a-value-6 cell with 74 center simples) is out of scope");
    default:
      throw std::invalid_argument("expected_matrix: case must be one of A,B,C,D");
  }
}

}  // namespace cellmod
