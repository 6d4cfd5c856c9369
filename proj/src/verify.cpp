#include "cellmod/verify.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <sstream>
#include <stdexcept>

#include "cellmod/center.hpp"
#include "cellmod/fourier.hpp"
#include "cellmod/grouprep.hpp"

namespace cellmod {

namespace {

constexpr size_t kMatchSizeCap = 64;

std::string entry_string(const Cyclotomic& c) { return c.to_string(); }

bool match_search(const CycMatrix& a, const CycMatrix& b,
                  const std::vector<std::vector<int>>& cand, std::vector<int>& pi,
                  std::vector<bool>& used, size_t i) {
  const size_t n = b.size();
  if (i == n) return true;
  for (int j : cand[i]) {
    if (used[j]) continue;
    bool ok = a[j][j] == b[i][i];
    for (size_t t = 0; ok && t < i; ++t)
      ok = a[pi[t]][j] == b[t][i] && a[j][pi[t]] == b[i][t];
    if (!ok) continue;
    pi[i] = j;
    used[j] = true;
    if (match_search(a, b, cand, pi, used, i + 1)) return true;
    used[j] = false;
    pi[i] = -1;
  }
  return false;
}

}  // namespace

MatchReport match_up_to_permutation(const CycMatrix& a_in, const CycMatrix& b_in) {
  if (a_in.size() != b_in.size()) throw std::invalid_argument("match: dimension mismatch");
  for (size_t i = 0; i < a_in.size(); ++i)
    if (a_in[i].size() != a_in.size() || b_in[i].size() != b_in.size())
      throw std::invalid_argument("match: matrices must be square");
  if (a_in.size() > kMatchSizeCap)
    throw std::invalid_argument("match: size exceeds the search budget");
  MatchReport rep;
  const size_t n = a_in.size();
  // bring every entry of both sides to one conductor so that equal values
  // get equal canonical keys
  unsigned joint = 1;
  for (const auto* m : {&a_in, &b_in})
    for (const auto& row : *m)
      for (const auto& v : row) joint = std::lcm(joint, v.conductor());
  CycMatrix a = a_in, b = b_in;
  for (auto* m : {&a, &b})
    for (auto& row : *m)
      for (auto& v : row) v = v.embedded(joint);
  // prune candidates by sorted row multisets
  auto row_key = [](const CycMatrix& m, size_t r) {
    std::vector<Cyclotomic> row = m[r];
    std::sort(row.begin(), row.end(),
              [](const Cyclotomic& x, const Cyclotomic& y) { return Cyclotomic::compare(x, y) < 0; });
    std::string key;
    for (const auto& c : row) key += c.to_string() + "|";
    return key;
  };
  std::map<std::string, std::vector<int>> a_rows;
  for (size_t r = 0; r < n; ++r) a_rows[row_key(a, r)].push_back(static_cast<int>(r));
  std::vector<std::vector<int>> cand(n);
  for (size_t r = 0; r < n; ++r) {
    auto it = a_rows.find(row_key(b, r));
    if (it == a_rows.end()) {
      rep.matched = false;
      rep.diagnostics = "row " + std::to_string(r) + " of the target has no counterpart";
      return rep;
    }
    cand[r] = it->second;
  }
  std::vector<int> pi(n, -1);
  std::vector<bool> used(n, false);
  if (!match_search(a, b, cand, pi, used, 0)) {
    rep.matched = false;
    for (size_t i = 0; i < n && rep.diagnostics.empty(); ++i)
      for (size_t j = 0; j < n && rep.diagnostics.empty(); ++j)
        if (a[i][j] != b[i][j])
          rep.diagnostics = "no permutation; first identity-order discrepancy at (" +
                            std::to_string(i) + "," + std::to_string(j) + "): " +
                            entry_string(a[i][j]) + " vs " + entry_string(b[i][j]);
    if (rep.diagnostics.empty()) rep.diagnostics = "no permutation found";
    return rep;
  }
  // soundness re-check of the reported bijection
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (a[pi[i]][pi[j]] != b[i][j]) throw std::logic_error("match: unsound bijection");
  rep.matched = true;
  rep.bijection = pi;
  return rep;
}

MatchReport verify_dihedral(int n, unsigned l) {
  if (n < 3) throw std::invalid_argument("verify_dihedral: n must be at least 3");
  FourierData fd = fourier_dihedral(n, l);
  CycMatrix norm = normalize_center(fd.center);
  MatchReport rep;
  rep.normalization = fd.center.dim_sqrt;
  // the dictionary must be a bijection
  std::vector<bool> hit(norm.size(), false);
  for (size_t t : fd.dictionary) {
    if (hit[t]) {
      rep.diagnostics = "pair dictionary is not injective";
      return rep;
    }
    hit[t] = true;
  }
  const size_t sz = fd.matrix.size();
  for (size_t i = 0; i < sz; ++i)
    for (size_t j = 0; j < sz; ++j)
      if (fd.matrix[i][j] != norm[fd.dictionary[i]][fd.dictionary[j]]) {
        rep.matched = false;
        rep.diagnostics = "Fourier entry " + fd.pairs.pairs[i].label() + " x " +
                          fd.pairs.pairs[j].label() + " = " + entry_string(fd.matrix[i][j]) +
                          " differs from center entry " +
                          entry_string(norm[fd.dictionary[i]][fd.dictionary[j]]);
        return rep;
      }
  rep.matched = true;
  std::vector<int> bij(fd.dictionary.begin(), fd.dictionary.end());
  rep.bijection = bij;
  return rep;
}

namespace {

const CycMatrix& z2_center_matrix() {
  static const CycMatrix m =
      int_matrix({{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}});
  return m;
}

// S(Z(Vec(S3))); rows/cols ordered ((1,r),(1,eps),(1,1),(g2,1),(g2,eps),
// (g3,1),(g3,om2),(g3,om)).  A +2 sometimes printed in the (1,8) corner
// breaks symmetry and unitarity; the S-matrix axioms force -2 there.
const CycMatrix& s3_center_matrix() {
  static const CycMatrix m = int_matrix({{4, 2, 2, 0, 0, -2, -2, -2},
                                         {2, 1, 1, -3, -3, 2, 2, 2},
                                         {2, 1, 1, 3, 3, 2, 2, 2},
                                         {0, -3, 3, 3, -3, 0, 0, 0},
                                         {0, -3, 3, -3, 3, 0, 0, 0},
                                         {-2, 2, 2, 0, 0, 4, -2, -2},
                                         {-2, 2, 2, 0, 0, -2, -2, 4},
                                         {-2, 2, 2, 0, 0, -2, 4, -2}});
  return m;
}

int parse_bits(const std::string& label, size_t skip) {
  int v = 0;
  for (size_t i = skip; i < label.size(); ++i) v = 2 * v + (label[i] == '1' ? 1 : 0);
  return v;
}

// S(Z(Vec(Z2^k))) is the k-fold Kronecker power of the Z2 matrix under the
// index map built from the class/irrep bit labels; checked entry by entry
MatchReport verify_elementary(int k) {
  MatchReport rep;
  FiniteGroup g = FiniteGroup::elementary_two(k);
  CenterData cd = center_vec_smatrix(g);
  CharacterTable table = character_table(g);
  MSet ms = m_set(g);
  const size_t n = cd.smatrix.size();
  std::vector<size_t> kron_index(n);
  for (size_t e = 0; e < n; ++e) {
    int cls = ms.entries[e].class_index, irr = ms.entries[e].irrep_index;
    int b = parse_bits(table.class_labels[cls], 1);                       // "v...."
    int w = parse_bits(ms.cent_tables[cls].irrep_names[irr], 3);          // "chi..."
    size_t idx = 0;
    for (int t = k - 1; t >= 0; --t) {
      int bt = (b >> t) & 1, wt = (w >> t) & 1;
      idx = idx * 4 + static_cast<size_t>(2 * bt + wt);
    }
    kron_index[e] = idx;
  }
  CycMatrix power = z2_center_matrix();
  for (int t = 1; t < k; ++t) power = kronecker(power, z2_center_matrix());
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (cd.smatrix[i][j] != power[kron_index[i]][kron_index[j]]) {
        rep.diagnostics = "Kronecker power mismatch at (" + std::to_string(i) + "," +
                          std::to_string(j) + ")";
        return rep;
      }
  rep.matched = true;
  std::vector<int> bij(kron_index.begin(), kron_index.end());
  rep.bijection = bij;
  return rep;
}

}  // namespace

MatchReport verify_weyl_case(const std::string& token) {
  if (token == "trivial") {
    CenterData cd = center_vec_smatrix(FiniteGroup::symmetric(1));
    return match_up_to_permutation(cd.smatrix, int_matrix({{1}}));
  }
  if (token.rfind("Z2^", 0) == 0) {
    int k = std::stoi(token.substr(3));
    if (k < 1 || k > 4) throw std::invalid_argument("verify_weyl_case: Z2^k needs 1 <= k <= 4");
    if (k == 1)
      return match_up_to_permutation(center_vec_smatrix(FiniteGroup::cyclic(2)).smatrix,
                                     z2_center_matrix());
    return verify_elementary(k);
  }
  if (token == "S3")
    return match_up_to_permutation(center_vec_smatrix(FiniteGroup::symmetric(3)).smatrix,
                                   s3_center_matrix());
  if (token == "S4" || token == "S5") {
    size_t expected = token == "S4" ? 21 : 39;
    CenterData cd = center_vec_smatrix(FiniteGroup::from_token(token));
    MatchReport rep;
    if (cd.simples.size() != expected) {
      rep.diagnostics = "expected " + std::to_string(expected) + " simples, got " +
                        std::to_string(cd.simples.size());
      return rep;
    }
    if (!is_symmetric(cd.smatrix)) {
      rep.diagnostics = "S-matrix is not symmetric";
      return rep;
    }
    if (!is_unitary_scaled(cd.smatrix, cd.global_dim)) {
      rep.diagnostics = "S-matrix is not unitary at scale |G|^2";
      return rep;
    }
    rep.matched = true;
    rep.diagnostics = "simple-object count and modularity checks";
    return rep;
  }
  if (token == "E7E8-exceptional") {
    CenterData cd =
        center_vec_smatrix(FiniteGroup::cyclic(2), GroupTwist::kNontrivialZ2);
    CycMatrix expected = int_matrix({{1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, -1, 1}, {1, -1, 1, -1}});
    return match_up_to_permutation(cd.smatrix, expected);
  }
  throw std::invalid_argument("verify_weyl_case: unsupported case " + token);
}

MatchReport verify_h_case(char case_tag) {
  HCaseMatrices exp = expected_matrix(case_tag);
  switch (case_tag) {
    case 'A':
      return match_up_to_permutation(
          exp.options[0], center_vec_smatrix(FiniteGroup::symmetric(1)).smatrix);
    case 'B':
      return match_up_to_permutation(exp.options[0],
                                     normalize_center(center_adjoint_even(4)));
    case 'C': {
      Cyclotomic half = Cyclotomic::from_rational(Rational(1, 2));
      MatchReport first = match_up_to_permutation(
          exp.options[0],
          scalar_times(half, center_vec_smatrix(FiniteGroup::cyclic(2)).smatrix));
      MatchReport second = match_up_to_permutation(
          exp.options[exp.selected],
          scalar_times(half, center_vec_smatrix(FiniteGroup::cyclic(2),
                                                GroupTwist::kNontrivialZ2)
                                 .smatrix));
      MatchReport rep;
      rep.matched = first.matched && second.matched;
      rep.diagnostics = rep.matched
                            ? "both options reproduced; the selected option is the twisted one"
                            : "option recomputation failed";
      if (second.bijection) rep.bijection = second.bijection;
      return rep;
    }
    case 'D': {
      MatchReport base = match_up_to_permutation(exp.options[0],
                                                 normalize_center(center_adjoint_even(4)));
      MatchReport cross = match_up_to_permutation(exp.options[0], exp.options[1]);
      MatchReport rep;
      rep.matched = base.matched && !cross.matched &&
                    is_unitary_scaled(exp.options[1], Cyclotomic::one());
      rep.diagnostics = rep.matched
                            ? "selected option matches the Fibonacci center; the Galois "
                              "alternative is unitary but distinct"
                            : "case D consistency failed";
      if (base.bijection) rep.bijection = base.bijection;
      return rep;
    }
    default:
      throw std::invalid_argument("verify_h_case: case must be one of A,B,C,D");
  }
}

}  // namespace cellmod
