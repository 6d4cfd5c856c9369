#pragma once

// Type A_k fusion data at a root of unity: admissibility, theta nets,
// Kauffman-Lins 6j symbols (which are the associator entries), the S-matrix
// and the even (adjoint) subcategory.

#include <array>
#include <map>
#include <vector>

#include "cellmod/basedring.hpp"
#include "cellmod/cyclo.hpp"
#include "cellmod/matrix.hpp"

namespace cellmod {

struct FusionData {
  int k = 0;
  QuantumSpec spec;
  // fusion(a,b,c) in {0,1}
  bool fused(int a, int b, int c) const;
};

FusionData fusion_data(const QuantumSpec& spec);

// throws on labels outside 0..k-1
bool admissible(int k, int a, int b, int c);

// theta net of an admissible triple
Cyclotomic theta(int a, int b, int c, const QuantumSpec& spec);

// tetrahedral net evaluation (the sum with the I!/E! prefactor)
Cyclotomic tet(const QuantumSpec& spec, int a, int b, int c, int d, int e, int f);

// Kauffman-Lins normalized 6j symbol {a b e; c d f}:
//   tet * (-1)^e [e+1] / (theta(a,d,e) theta(b,c,e)).
// This is the gauge in which the symbol is the associator matrix entry.
Cyclotomic sixj(const QuantumSpec& spec, int a, int b, int c, int d, int e, int f);

// associator of (X_a x X_b) x X_c -> X_a x (X_b x X_c) at total object X_d;
// rows indexed by the admissible f (summands of a x b), columns by e
struct AssociatorBlock {
  std::vector<int> f_labels;
  std::vector<int> e_labels;
  CycMatrix entries;
};
AssociatorBlock associator_matrix(const QuantumSpec& spec, int a, int b, int c, int d);

// full 6j table keyed by (a,b,c,d,e,f)
std::map<std::array<int, 6>, Cyclotomic> sixj_table(const QuantumSpec& spec);

// S_{i,j} = (-1)^{i+j} [(i+1)(j+1)], 0 <= i,j < k
CycMatrix verlinde_smatrix(const QuantumSpec& spec);

struct AdjointData {
  std::vector<int> labels;  // the even labels
  CycMatrix smatrix;        // restriction of the full S-matrix
  bool invertible = false;
  QuantumSpec spec;
  bool fused(int a, int b, int c) const;  // arguments are even labels
};
AdjointData adjoint(const QuantumSpec& spec);

// counts pentagon instances and throws std::logic_error on the first exact
// failure; returns the number of instances checked
long long check_pentagon(const QuantumSpec& spec);

}  // namespace cellmod
