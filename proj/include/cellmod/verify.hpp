#pragma once

// Exact matrix matching up to a simultaneous row/column permutation, and the
// end-to-end verification pipelines: dihedral Fourier vs center, the Weyl
// catalog cases, and the H3/H4 cases.

#include <optional>
#include <string>
#include <vector>

#include "cellmod/cyclo.hpp"
#include "cellmod/matrix.hpp"

namespace cellmod {

struct MatchReport {
  bool matched = false;
  // bijection[i] = row of the first matrix matched to row i of the second
  std::optional<std::vector<int>> bijection;
  Cyclotomic normalization = Cyclotomic::one();
  std::string diagnostics;
};

// finds a permutation pi with A[pi(i)][pi(j)] == B[i][j]; the result is
// re-verified entry by entry before it is reported
MatchReport match_up_to_permutation(const CycMatrix& a, const CycMatrix& b);

// normalized center of Ad(C_{n-1}) against Lusztig's Fourier matrix for p=n,
// compared exactly through the pair dictionary
MatchReport verify_dihedral(int n, unsigned l = 1);

// cases: trivial, Z2^1..Z2^4, S3, S4, S5, E7E8-exceptional
MatchReport verify_weyl_case(const std::string& token);

// cases 'A'..'D'; 'E' raises the out-of-scope signal
MatchReport verify_h_case(char case_tag);

}  // namespace cellmod
