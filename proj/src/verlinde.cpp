#include "cellmod/verlinde.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace cellmod {

namespace {

void check_label(int k, int a) {
  if (a < 0 || a >= k)
    throw std::invalid_argument("fusion label out of range 0.." + std::to_string(k - 1) + ": " +
                                std::to_string(a));
}

// quantum factorial that must not vanish where it is inverted
Cyclotomic qfact_checked(long long m, const QuantumSpec& spec) {
  if (m < 0) throw std::logic_error("negative quantum factorial argument");
  Cyclotomic f = quantum_factorial(m, spec);
  if (f.is_zero()) throw std::logic_error("vanishing quantum factorial inside admissible range");
  return f;
}

}  // namespace

bool admissible(int k, int a, int b, int c) {
  if (k < 1) throw std::invalid_argument("admissible: k must be at least 1");
  check_label(k, a);
  check_label(k, b);
  check_label(k, c);
  if ((a + b + c) % 2 != 0) return false;
  if (c < std::abs(a - b) || c > a + b) return false;
  return a + b + c <= 2 * k - 2;
}

bool FusionData::fused(int a, int b, int c) const { return admissible(k, a, b, c); }

FusionData fusion_data(const QuantumSpec& spec) {
  FusionData d;
  d.k = static_cast<int>(spec.rank());
  d.spec = spec;
  return d;
}

Cyclotomic theta(int a, int b, int c, const QuantumSpec& spec) {
  const int k = static_cast<int>(spec.rank());
  if (!admissible(k, a, b, c)) throw std::invalid_argument("theta: triple not admissible");
  const int m = (a + b - c) / 2, n = (a + c - b) / 2, p = (b + c - a) / 2;
  Cyclotomic num = quantum_factorial(m + n + p + 1, spec) * quantum_factorial(m, spec) *
                   quantum_factorial(n, spec) * quantum_factorial(p, spec);
  if ((m + n + p) % 2 != 0) num = -num;
  Cyclotomic den = qfact_checked(m + n, spec) * qfact_checked(m + p, spec) *
                   qfact_checked(n + p, spec);
  return num / den;
}

Cyclotomic tet(const QuantumSpec& spec, int a, int b, int c, int d, int e, int f) {
  const std::array<int, 4> ai = {(a + d + e) / 2, (b + c + e) / 2, (a + b + f) / 2,
                                 (c + d + f) / 2};
  const std::array<int, 3> bj = {(b + d + e + f) / 2, (a + c + e + f) / 2, (a + b + c + d) / 2};
  const int lo = *std::max_element(ai.begin(), ai.end());
  const int hi = *std::min_element(bj.begin(), bj.end());
  Cyclotomic ifact = Cyclotomic::one();
  for (int x : ai)
    for (int y : bj) ifact *= quantum_factorial(y - x, spec);
  Cyclotomic efact = quantum_factorial(a, spec) * quantum_factorial(b, spec) *
                     quantum_factorial(c, spec) * quantum_factorial(d, spec) *
                     quantum_factorial(e, spec) * quantum_factorial(f, spec);
  if (efact.is_zero()) throw std::logic_error("tet: vanishing edge factorial");
  Cyclotomic sum;
  for (int s = lo; s <= hi; ++s) {
    Cyclotomic term = quantum_factorial(s + 1, spec);
    for (int x : ai) term /= qfact_checked(s - x, spec);
    for (int y : bj) term /= qfact_checked(y - s, spec);
    if (s % 2 != 0) term = -term;
    sum += term;
  }
  return ifact / efact * sum;
}

Cyclotomic sixj(const QuantumSpec& spec, int a, int b, int c, int d, int e, int f) {
  const int k = static_cast<int>(spec.rank());
  if (!(admissible(k, a, b, f) && admissible(k, c, d, f) && admissible(k, a, d, e) &&
        admissible(k, b, c, e)))
    throw std::invalid_argument("sixj: admissibility constraints violated");
  Cyclotomic loop = quantum_number(e + 1, spec);
  if (e % 2 != 0) loop = -loop;
  return tet(spec, a, b, c, d, e, f) * loop /
         (theta(a, d, e, spec) * theta(b, c, e, spec));
}

AssociatorBlock associator_matrix(const QuantumSpec& spec, int a, int b, int c, int d) {
  const int k = static_cast<int>(spec.rank());
  AssociatorBlock blk;
  for (int f = 0; f < k; ++f)
    if (admissible(k, a, b, f) && admissible(k, c, d, f)) blk.f_labels.push_back(f);
  for (int e = 0; e < k; ++e)
    if (admissible(k, a, d, e) && admissible(k, b, c, e)) blk.e_labels.push_back(e);
  blk.entries.assign(blk.f_labels.size(), std::vector<Cyclotomic>(blk.e_labels.size()));
  for (size_t i = 0; i < blk.f_labels.size(); ++i)
    for (size_t j = 0; j < blk.e_labels.size(); ++j)
      blk.entries[i][j] = sixj(spec, a, b, c, d, blk.e_labels[j], blk.f_labels[i]);
  return blk;
}

std::map<std::array<int, 6>, Cyclotomic> sixj_table(const QuantumSpec& spec) {
  const int k = static_cast<int>(spec.rank());
  std::map<std::array<int, 6>, Cyclotomic> table;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d)
          for (int e = 0; e < k; ++e) {
            if (!(admissible(k, a, d, e) && admissible(k, b, c, e))) continue;
            for (int f = 0; f < k; ++f) {
              if (!(admissible(k, a, b, f) && admissible(k, c, d, f))) continue;
              table[{a, b, c, d, e, f}] = sixj(spec, a, b, c, d, e, f);
            }
          }
  return table;
}

CycMatrix verlinde_smatrix(const QuantumSpec& spec) {
  const int k = static_cast<int>(spec.rank());
  CycMatrix s(k, std::vector<Cyclotomic>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Cyclotomic v = quantum_number(static_cast<long long>(i + 1) * (j + 1), spec);
      if ((i + j) % 2 != 0) v = -v;
      s[i][j] = std::move(v);
    }
  return s;
}

bool AdjointData::fused(int a, int b, int c) const {
  return admissible(static_cast<int>(spec.rank()), a, b, c);
}

AdjointData adjoint(const QuantumSpec& spec) {
  const int k = static_cast<int>(spec.rank());
  AdjointData d;
  d.spec = spec;
  for (int i = 0; i < k; i += 2) d.labels.push_back(i);
  CycMatrix full = verlinde_smatrix(spec);
  const size_t m = d.labels.size();
  d.smatrix.assign(m, std::vector<Cyclotomic>(m));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j) d.smatrix[i][j] = full[d.labels[i]][d.labels[j]];
  d.invertible = is_invertible(d.smatrix);
  return d;
}

long long check_pentagon(const QuantumSpec& spec) {
  const int k = static_cast<int>(spec.rank());
  auto table = sixj_table(spec);
  auto get = [&](int a, int b, int c, int d, int e, int f) -> const Cyclotomic& {
    return table.at({a, b, c, d, e, f});
  };
  auto adm = [&](int x, int y, int z) { return admissible(k, x, y, z); };
  long long instances = 0;
  // F[x,y,z;w]_{f,e} relates ((xy)_f z)_w to (x (yz)_e)_w; the two recoupling
  // paths from (((ab)_f c)_g d)_w to (a (b (cd)_h)_k)_w must agree:
  //   F[f,c,d;w]_{g,h} F[a,b,h;w]_{f,k}
  //     = sum_e F[a,b,c;g]_{f,e} F[a,e,d;w]_{g,k} F[b,c,d;k]_{e,h}
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d)
          for (int f = 0; f < k; ++f) {
            if (!adm(a, b, f)) continue;
            for (int g = 0; g < k; ++g) {
              if (!adm(f, c, g)) continue;
              for (int w = 0; w < k; ++w) {
                if (!adm(g, d, w)) continue;
                for (int h = 0; h < k; ++h) {
                  if (!(adm(c, d, h) && adm(f, h, w))) continue;
                  for (int kk = 0; kk < k; ++kk) {
                    if (!(adm(b, h, kk) && adm(a, kk, w))) continue;
                    Cyclotomic lhs = get(f, c, d, w, h, g) * get(a, b, h, w, kk, f);
                    Cyclotomic rhs;
                    for (int e = 0; e < k; ++e) {
                      if (!(adm(b, c, e) && adm(a, e, g) && adm(e, d, kk))) continue;
                      rhs += get(a, b, c, g, e, f) * get(a, e, d, w, kk, g) *
                             get(b, c, d, kk, h, e);
                    }
                    if (lhs != rhs) throw std::logic_error("pentagon identity fails");
                    ++instances;
                  }
                }
              }
            }
          }
  return instances;
}

}  // namespace cellmod
