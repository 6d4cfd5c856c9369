#pragma once

// Based / multifusion rings with nonnegative integer structure constants,
// their validation, dihedral J-rings (with an independent Hecke-algebra
// oracle), H-cell restriction, tensor products, isomorphism testing and the
// Grothendieck rings of type A fusion categories.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace cellmod {

class BasedRing {
 public:
  // structure[{i,j}] maps k -> c_{i,j}^k (> 0 entries only)
  using Sparse = std::map<std::pair<int, int>, std::map<int, long long>>;

  // Validates all based-ring axioms: nonnegativity, associativity, the unit
  // condition for unit_support, and the tau condition against involution.
  // Throws std::invalid_argument on violation.
  BasedRing(std::vector<std::string> basis, Sparse structure, std::vector<int> unit_support,
            std::vector<int> involution);

  int rank() const { return static_cast<int>(basis_.size()); }
  const std::vector<std::string>& basis() const { return basis_; }
  const std::vector<int>& unit_support() const { return unit_support_; }
  const std::vector<int>& involution() const { return involution_; }
  bool is_fusion() const { return unit_support_.size() == 1; }

  long long coeff(int i, int j, int k) const;
  const std::map<int, long long>& product(int i, int j) const;
  int index_of(const std::string& label) const;  // -1 when absent

  friend bool operator==(const BasedRing& a, const BasedRing& b);

 private:
  void validate() const;

  std::vector<std::string> basis_;
  Sparse structure_;
  std::vector<int> unit_support_;
  std::vector<int> involution_;
  static const std::map<int, long long> kEmpty;
};

// J-ring of the middle cell of I2(n); basis words "s","st","sts",...,"t",...
BasedRing dihedral_jring(int n);

// Same ring recomputed from scratch: Kazhdan-Lusztig basis products in the
// dihedral Hecke algebra with the v^{-1} coefficients extracted.
BasedRing dihedral_gamma_oracle(int n);

// Restriction to the fusion component of a basis element of the unit support.
BasedRing hcell_restrict(const BasedRing& ring, const std::string& duflo_label);

BasedRing tensor_product(const BasedRing& r1, const BasedRing& r2);

// A bijection preserving structure constants, unit support and involution,
// or std::nullopt.  result[i] = index in r2 of the image of basis i of r1.
std::optional<std::vector<int>> is_isomorphic(const BasedRing& r1, const BasedRing& r2);

// Grothendieck ring of the rank-k type A fusion category (truncated
// Clebsch-Gordan products), labels "X0".."X{k-1}".
BasedRing verlinde_grothendieck(int k);
// Restriction to the even labels.
BasedRing adjoint_grothendieck(int k);

}  // namespace cellmod
