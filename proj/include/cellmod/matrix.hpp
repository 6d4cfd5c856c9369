#pragma once

// Dense matrices over the cyclotomic field plus the handful of exact checks
// used throughout: symmetry, scaled unitarity, Kronecker products and the
// Verlinde formula.

#include <optional>
#include <string>
#include <vector>

#include "cellmod/cyclo.hpp"

namespace cellmod {

using CycMatrix = std::vector<std::vector<Cyclotomic>>;

CycMatrix identity_matrix(size_t n);
CycMatrix scalar_times(const Cyclotomic& c, const CycMatrix& m);
CycMatrix matmul(const CycMatrix& a, const CycMatrix& b);
CycMatrix conj_transpose(const CycMatrix& m);
CycMatrix kronecker(const CycMatrix& a, const CycMatrix& b);

bool is_symmetric(const CycMatrix& m);
// m * conj(m)^T == scale * Id, exactly
bool is_unitary_scaled(const CycMatrix& m, const Cyclotomic& scale);
bool matrices_equal(const CycMatrix& a, const CycMatrix& b);

// exact nonsingularity test (Gaussian elimination over the field)
bool is_invertible(CycMatrix m);

// Re-embeds every entry into the lcm of all conductors; speeds up entry loops.
void align_conductors(CycMatrix& m);

// Verlinde formula on a normalized modular S-matrix s (unit object at index
// 0): N_{ij}^k = sum_m s_im s_jm conj(s_km) / s_0m.  Returns the fusion
// tensor if every coefficient is a nonnegative integer, std::nullopt
// otherwise.  The second form takes an unnormalized matrix together with its
// scale (S conj(S)^T = scale * Id) and divides the sums by it, which avoids
// square roots that may not exist in the field.
std::optional<std::vector<std::vector<std::vector<Integer>>>> verlinde_fusion(
    const CycMatrix& s);
std::optional<std::vector<std::vector<std::vector<Integer>>>> verlinde_fusion(
    const CycMatrix& s, const Cyclotomic& scale);

// convenience for building small matrices from integers
CycMatrix int_matrix(const std::vector<std::vector<long long>>& rows);

}  // namespace cellmod
