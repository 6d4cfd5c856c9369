#pragma once

// Drinfeld-center data: simple-object inventories and exact S-matrices for
// the modular (Kronecker) case, the even adjoint case, and the odd adjoint
// case obtained by de-equivariantization with a split fixed point.

#include <array>
#include <string>
#include <vector>

#include "cellmod/cyclo.hpp"
#include "cellmod/matrix.hpp"

namespace cellmod {

struct CenterSimple {
  std::string label;
  std::array<int, 2> grid{-1, -1};     // pair of base labels when meaningful
  std::vector<std::string> underlying; // decomposition of the underlying object
  int split = 0;                       // +1 / -1 for the two halves of a split object
};

struct CenterData {
  std::string kind;  // "modular", "adjoint_even", "adjoint_odd", "group", ...
  std::vector<CenterSimple> simples;
  CycMatrix smatrix;
  Cyclotomic global_dim;
  Cyclotomic dim_sqrt;  // positive square root of global_dim
};

// center of the modular C_k: k^2 simples, S (x) S
CenterData center_modular(const QuantumSpec& spec);

// k even: pairs of even labels, Kronecker square of the restricted S
CenterData center_adjoint_even(int k, unsigned l = 1);

// k odd: centralizer of the rep(Z/2) subcategory and de-equivariantization;
// the fixed grid point splits into two simples whose S-block is solved
// exactly from the row-sum, unitarity and half-entry constraints
CenterData center_adjoint_odd(int k, unsigned l = 1);

// parity dispatch
CenterData center_adjoint(int k, unsigned l = 1);

// S divided by the positive square root of the global dimension; verifies
// dim_sqrt^2 == global_dim exactly
CycMatrix normalize_center(const CenterData& cd);

}  // namespace cellmod
