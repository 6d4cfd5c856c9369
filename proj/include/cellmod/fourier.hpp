#pragma once

// Lusztig's dihedral Fourier data: the pair set, the pairing, the dictionary
// from pairs to center simples, the flat involution, and the catalog of
// expected matrices for the small H-cell cases (A)-(D).

#include <optional>
#include <string>
#include <vector>

#include "cellmod/center.hpp"
#include "cellmod/cyclo.hpp"
#include "cellmod/matrix.hpp"

namespace cellmod {

struct DihedralPair {
  int i = 0;
  int j = 0;
  int special = 0;  // +1 / -1 for the two special tuples (0, p/2), else 0
  std::string label() const;
  friend bool operator==(const DihedralPair& a, const DihedralPair& b) {
    return a.i == b.i && a.j == b.j && a.special == b.special;
  }
};

struct DihedralPairSet {
  int p = 0;
  std::vector<DihedralPair> pairs;  // non-specials first, then the specials
  size_t special_count() const { return p % 2 == 0 ? 2 : 0; }
};

DihedralPairSet dihedral_pairs(int p);

// <(i,j),(k,l)> = (xi^{il+jk} + xi^{-il-jk} - xi^{ik+jl} - xi^{-ik-jl})/p
// with xi the image of q^2; rejects special tuples
Cyclotomic dihedral_pairing(int p, const DihedralPair& t1, const DihedralPair& t2,
                            unsigned l = 1);

// (i,j) -> grid label (j-i-1, j+i-1); specials -> the split simples
struct PairObject {
  std::array<int, 2> grid{0, 0};
  int split = 0;
};
PairObject pair_to_object(int p, const DihedralPair& t);

// (i,j) -> (i, p-j) for i >= 1; i = 0 pairs and specials are fixed
DihedralPair flat_involution(int p, const DihedralPair& t);

// Fourier matrix for I2(p) aligned with the normalized center matrix; rows
// and columns indexed by pairs.  Non-special entries come from the pairing,
// special rows are transported from the center's split rows through the
// dictionary (the pairing formula does not cover them).
struct FourierData {
  DihedralPairSet pairs;
  CycMatrix matrix;              // the Fourier matrix
  CenterData center;             // the center it is compared against
  std::vector<size_t> dictionary;  // pair index -> center simple index
};
FourierData fourier_dihedral(int p, unsigned l = 1);

// expected matrices for the H3/H4 H-cell cases
struct HCaseMatrices {
  char case_tag = 'A';
  std::vector<CycMatrix> options;
  size_t selected = 0;  // index of the option equal to the Fourier matrix
  std::string note;
};
HCaseMatrices expected_matrix(char case_tag);  // 'A'..'D'; 'E' rejected

}  // namespace cellmod
