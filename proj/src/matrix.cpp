#include "cellmod/matrix.hpp"

#include <numeric>
#include <stdexcept>

namespace cellmod {

CycMatrix identity_matrix(size_t n) {
  CycMatrix m(n, std::vector<Cyclotomic>(n));
  for (size_t i = 0; i < n; ++i) m[i][i] = Cyclotomic::one();
  return m;
}

CycMatrix scalar_times(const Cyclotomic& c, const CycMatrix& m) {
  CycMatrix r = m;
  for (auto& row : r)
    for (auto& x : row) x *= c;
  return r;
}

CycMatrix matmul(const CycMatrix& a, const CycMatrix& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  CycMatrix r(n, std::vector<Cyclotomic>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) {
      Cyclotomic acc;
      for (size_t t = 0; t < k; ++t) acc += a[i][t] * b[t][j];
      r[i][j] = std::move(acc);
    }
  return r;
}

CycMatrix conj_transpose(const CycMatrix& m) {
  const size_t n = m.size(), c = m.empty() ? 0 : m[0].size();
  CycMatrix r(c, std::vector<Cyclotomic>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < c; ++j) r[j][i] = m[i][j].conj();
  return r;
}

CycMatrix kronecker(const CycMatrix& a, const CycMatrix& b) {
  const size_t na = a.size(), nb = b.size();
  CycMatrix r(na * nb, std::vector<Cyclotomic>(na * nb));
  for (size_t i = 0; i < na; ++i)
    for (size_t j = 0; j < na; ++j)
      for (size_t u = 0; u < nb; ++u)
        for (size_t v = 0; v < nb; ++v) r[i * nb + u][j * nb + v] = a[i][j] * b[u][v];
  return r;
}

bool is_symmetric(const CycMatrix& m) {
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = i + 1; j < m.size(); ++j)
      if (m[i][j] != m[j][i]) return false;
  return true;
}

bool is_unitary_scaled(const CycMatrix& m, const Cyclotomic& scale) {
  CycMatrix a = m;
  align_conductors(a);
  const size_t n = a.size();
  std::vector<std::vector<Cyclotomic>> conj(n, std::vector<Cyclotomic>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) conj[i][j] = a[i][j].conj();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Cyclotomic acc;
      for (size_t t = 0; t < n; ++t) acc += a[i][t] * conj[j][t];
      if (i == j ? acc != scale : !acc.is_zero()) return false;
    }
  return true;
}

bool matrices_equal(const CycMatrix& a, const CycMatrix& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  }
  return true;
}

bool is_invertible(CycMatrix m) {
  const size_t n = m.size();
  align_conductors(m);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col].is_zero()) ++pivot;
    if (pivot == n) return false;
    std::swap(m[pivot], m[col]);
    Cyclotomic inv = m[col][col].inverse();
    for (size_t r = col + 1; r < n; ++r) {
      if (m[r][col].is_zero()) continue;
      Cyclotomic f = m[r][col] * inv;
      for (size_t c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return true;
}

void align_conductors(CycMatrix& m) {
  unsigned l = 1;
  for (const auto& row : m)
    for (const auto& x : row) l = std::lcm(l, x.conductor());
  for (auto& row : m)
    for (auto& x : row) x = x.embedded(l);
}

std::optional<std::vector<std::vector<std::vector<Integer>>>> verlinde_fusion(
    const CycMatrix& s) {
  return verlinde_fusion(s, Cyclotomic::one());
}

std::optional<std::vector<std::vector<std::vector<Integer>>>> verlinde_fusion(
    const CycMatrix& s, const Cyclotomic& scale) {
  const size_t n = s.size();
  CycMatrix a = s;
  align_conductors(a);
  Cyclotomic scale_inv = scale.inverse();
  std::vector<Cyclotomic> unit_inv(n);
  for (size_t m = 0; m < n; ++m) {
    if (a[0][m].is_zero()) return std::nullopt;
    unit_inv[m] = a[0][m].inverse() * scale_inv;
  }
  CycMatrix conj(n, std::vector<Cyclotomic>(n));
  for (size_t k = 0; k < n; ++k)
    for (size_t m = 0; m < n; ++m) conj[k][m] = a[k][m].conj() * unit_inv[m];
  std::vector<std::vector<std::vector<Integer>>> fusion(
      n, std::vector<std::vector<Integer>>(n, std::vector<Integer>(n)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      std::vector<Cyclotomic> prod(n);
      for (size_t m = 0; m < n; ++m) prod[m] = a[i][m] * a[j][m];
      for (size_t k = 0; k < n; ++k) {
        Cyclotomic acc;
        for (size_t m = 0; m < n; ++m) acc += prod[m] * conj[k][m];
        if (!acc.is_rational()) return std::nullopt;
        Rational v = acc.rational_value();
        if (boost::multiprecision::denominator(v) != 1) return std::nullopt;
        Integer c = boost::multiprecision::numerator(v);
        if (c < 0) return std::nullopt;
        fusion[i][j][k] = c;
        fusion[j][i][k] = c;
      }
    }
  return fusion;
}

CycMatrix int_matrix(const std::vector<std::vector<long long>>& rows) {
  CycMatrix m;
  m.reserve(rows.size());
  for (const auto& r : rows) {
    std::vector<Cyclotomic> row;
    row.reserve(r.size());
    for (long long v : r) row.push_back(Cyclotomic::from_integer(Integer(v)));
    m.push_back(std::move(row));
  }
  return m;
}

}  // namespace cellmod
